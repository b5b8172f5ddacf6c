#pragma once

#include "oalg/coeff.hpp"

#include <string>

namespace oalg {

/// Gaussian integer a + b*i with exact integer parts.
struct GaussianInt {
    Int re{0};
    Int im{0};

    GaussianInt() = default;
    GaussianInt(Int r) : re(std::move(r)) {}
    GaussianInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}
    GaussianInt(long long r) : re(r) {}
    GaussianInt(long long r, long long i) : re(r), im(i) {}

    [[nodiscard]] bool is_zero() const { return re == 0 && im == 0; }

    friend GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianInt operator-(const GaussianInt& a) { return {-a.re, -a.im}; }
    friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussianInt& operator+=(const GaussianInt& o) { return *this = *this + o; }
    GaussianInt& operator-=(const GaussianInt& o) { return *this = *this - o; }
    GaussianInt& operator*=(const GaussianInt& o) { return *this = *this * o; }
    friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
        return a.re == b.re && a.im == b.im;
    }

    [[nodiscard]] GaussianInt conj() const { return {re, -im}; }

    /// i^e for any integer e.
    static GaussianInt i_pow(long long e) {
        switch (((e % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
        }
    }

    /// (-i)^e for any integer e.
    static GaussianInt minus_i_pow(long long e) { return i_pow(-e); }

    /// Rendered as "a+bi" / "a-bi" / "a" / "bi" with no spaces.
    [[nodiscard]] std::string str() const {
        if (im == 0) return re.str();
        std::string s;
        if (re != 0) s += re.str();
        if (im == 1) s += re != 0 ? "+i" : "i";
        else if (im == -1) s += "-i";
        else {
            if (re != 0 && im > 0) s += "+";
            s += im.str() + "i";
        }
        return s;
    }
};

} // namespace oalg

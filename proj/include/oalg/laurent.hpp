#pragma once

#include "oalg/coeff.hpp"
#include "oalg/gaussian.hpp"

#include <map>
#include <optional>
#include <string>

namespace oalg {

/// Laurent polynomial in q with exact integer coefficients.
/// Invariant: no zero coefficients are stored.
class LaurentInt {
public:
    LaurentInt() = default;
    LaurentInt(long long c) {
        if (c != 0) terms_[0] = c;
    }
    LaurentInt(Int c) {
        if (c != 0) terms_[0] = std::move(c);
    }

    static LaurentInt monomial(Int coeff, int exp) {
        LaurentInt r;
        if (coeff != 0) r.terms_[exp] = std::move(coeff);
        return r;
    }
    static LaurentInt q_pow(int exp) { return monomial(1, exp); }

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] const std::map<int, Int>& terms() const { return terms_; }
    [[nodiscard]] Int coeff(int exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? Int(0) : it->second;
    }
    [[nodiscard]] int min_exp() const { return terms_.begin()->first; }
    [[nodiscard]] int max_exp() const { return terms_.rbegin()->first; }

    void add_term(int exp, const Int& c) {
        if (c == 0) return;
        auto it = terms_.find(exp);
        if (it == terms_.end()) {
            terms_[exp] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend LaurentInt operator+(const LaurentInt& a, const LaurentInt& b) {
        LaurentInt r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend LaurentInt operator-(const LaurentInt& a, const LaurentInt& b) {
        LaurentInt r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    friend LaurentInt operator-(const LaurentInt& a) { return LaurentInt() - a; }
    friend LaurentInt operator*(const LaurentInt& a, const LaurentInt& b) {
        LaurentInt r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentInt& operator+=(const LaurentInt& o) { return *this = *this + o; }
    LaurentInt& operator-=(const LaurentInt& o) { return *this = *this - o; }
    LaurentInt& operator*=(const LaurentInt& o) { return *this = *this * o; }
    friend bool operator==(const LaurentInt& a, const LaurentInt& b) {
        return a.terms_ == b.terms_;
    }

    /// q ↦ q^k substitution (exponent dilation).
    [[nodiscard]] LaurentInt dilate(int k) const {
        LaurentInt r;
        for (const auto& [e, c] : terms_) r.add_term(e * k, c);
        return r;
    }

    /// Exact division; returns nullopt when the remainder is nonzero.
    /// An exact quotient has exponents in [min_exp - d.min_exp, max_exp - d.max_exp];
    /// a shift below that window proves inexactness and bounds the loop.
    [[nodiscard]] std::optional<LaurentInt> divide_exact(const LaurentInt& divisor) const {
        if (divisor.is_zero()) return std::nullopt;
        if (is_zero()) return LaurentInt();
        LaurentInt rem = *this, quot;
        const int dlead = divisor.max_exp();
        const int min_shift = min_exp() - divisor.min_exp();
        const Int& dc = divisor.terms_.rbegin()->second;
        while (!rem.is_zero()) {
            int rlead = rem.max_exp();
            Int rc = rem.terms_.rbegin()->second;
            if (rc % dc != 0) return std::nullopt;
            Int f = rc / dc;
            int shift = rlead - dlead;
            if (shift < min_shift) return std::nullopt;
            for (const auto& [e, c] : divisor.terms_) rem.add_term(e + shift, -f * c);
            quot.add_term(shift, f);
            if (!rem.is_zero() && rem.max_exp() >= rlead) return std::nullopt;
        }
        return quot;
    }

    /// Evaluation at q = sqrt(-1), i.e. reduction mod q^2 + 1.
    [[nodiscard]] GaussianInt eval_i() const {
        GaussianInt r;
        for (const auto& [e, c] : terms_) r += GaussianInt::i_pow(e) * GaussianInt(c);
        return r;
    }

    [[nodiscard]] Int eval_one() const {
        Int r = 0;
        for (const auto& [e, c] : terms_) r += c;
        return r;
    }

    /// Monomial sum with exponents descending, e.g. "q^4 + q^2 + 2 + q^-2 + q^-4".
    [[nodiscard]] std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            Int c = it->second;
            if (s.empty()) {
                if (c < 0) s += "-", c = -c;
            } else {
                s += c < 0 ? " - " : " + ";
                if (c < 0) c = -c;
            }
            const int e = it->first;
            if (e == 0) {
                s += c.str();
            } else {
                if (c != 1) s += c.str() + "*";
                s += e == 1 ? "q" : "q^" + std::to_string(e);
            }
        }
        return s;
    }

private:
    std::map<int, Int> terms_;
};

/// Balanced quantum integer [n] = (q^n - q^-n)/(q - q^-1) = q^(n-1) + q^(n-3) + ... + q^(1-n).
inline LaurentInt qint(int n) {
    LaurentInt r;
    if (n < 0) return -qint(-n);
    for (int e = n - 1; e >= 1 - n; e -= 2) r.add_term(e, 1);
    return r;
}

/// [n]! = [n][n-1]...[1].
inline LaurentInt qfact(int n) {
    LaurentInt r(1);
    for (int k = 2; k <= n; ++k) r *= qint(k);
    return r;
}

/// Balanced Gaussian binomial [m choose k] as an exact Laurent polynomial.
/// Computed by exact division of factorials; the remainder must vanish.
inline LaurentInt qbinom(int m, int k) {
    if (k < 0 || m < 0 || k > m) return LaurentInt();
    auto q = qfact(m).divide_exact(qfact(k) * qfact(m - k));
    return q.value();
}

/// Unbalanced quantum integer {k}_q = 1 + q + ... + q^(k-1).
inline LaurentInt brace_q(int k) {
    LaurentInt r;
    for (int e = 0; e < k; ++e) r.add_term(e, 1);
    return r;
}

} // namespace oalg

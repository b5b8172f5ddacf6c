#pragma once

#include "oalg/gaussian.hpp"
#include "oalg/laurent.hpp"

#include <map>
#include <string>
#include <tuple>
#include <utility>

namespace oalg {

/// Element of U+ (positive half of big quantum sl2 at a fourth root of unity):
/// finite Gaussian-integer combination of the divided powers E^(n).
class UPlusElement {
public:
    UPlusElement() = default;
    static UPlusElement divided_power(int n, GaussianInt c = GaussianInt(1)) {
        UPlusElement r;
        r.add(n, c);
        return r;
    }
    static UPlusElement one() { return divided_power(0); }

    void add(int n, const GaussianInt& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(n);
        if (it == terms_.end()) {
            terms_[n] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    [[nodiscard]] const std::map<int, GaussianInt>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    friend bool operator==(const UPlusElement& a, const UPlusElement& b) {
        return a.terms_ == b.terms_;
    }
    friend UPlusElement operator+(const UPlusElement& a, const UPlusElement& b) {
        UPlusElement r = a;
        for (const auto& [n, c] : b.terms_) r.add(n, c);
        return r;
    }
    friend UPlusElement operator-(const UPlusElement& a, const UPlusElement& b) {
        UPlusElement r = a;
        for (const auto& [n, c] : b.terms_) r.add(n, -c);
        return r;
    }

private:
    std::map<int, GaussianInt> terms_;
};

/// E^(a) E^(b) = [a+b choose a]|_{q=i} E^(a+b), extended bilinearly.
inline UPlusElement uplus_mul(const UPlusElement& x, const UPlusElement& y) {
    UPlusElement r;
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms())
            r.add(a + b, ca * cb * qbinom(a + b, a).eval_i());
    return r;
}

/// Tensor square of U+, with the sign-twisted multiplication
/// (b1 (x) b2)(b1' (x) b2') = (-1)^{|b2||b1'|} (b1 b1') (x) (b2 b2').
class UPlusTensor {
public:
    UPlusTensor() = default;

    void add(int m, int n, const GaussianInt& c) {
        if (c.is_zero()) return;
        auto key = std::pair{m, n};
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_[key] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    [[nodiscard]] const std::map<std::pair<int, int>, GaussianInt>& terms() const {
        return terms_;
    }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    friend bool operator==(const UPlusTensor& a, const UPlusTensor& b) {
        return a.terms_ == b.terms_;
    }
    friend UPlusTensor operator+(const UPlusTensor& a, const UPlusTensor& b) {
        UPlusTensor r = a;
        for (const auto& [k, c] : b.terms_) r.add(k.first, k.second, c);
        return r;
    }

private:
    std::map<std::pair<int, int>, GaussianInt> terms_;
};

inline UPlusTensor twisted_mul(const UPlusTensor& s, const UPlusTensor& t) {
    UPlusTensor r;
    for (const auto& [ab, c1] : s.terms())
        for (const auto& [cd, c2] : t.terms()) {
            const auto [a, b] = ab;
            const auto [c, d] = cd;
            GaussianInt coeff = c1 * c2 * GaussianInt(neg_one_pow(static_cast<long long>(b) * c));
            coeff *= qbinom(a + c, a).eval_i() * qbinom(b + d, b).eval_i();
            r.add(a + c, b + d, coeff);
        }
    return r;
}

/// r(E^(a)) = sum_{c=0}^{a} (-i)^{c(a-c)} E^(c) (x) E^(a-c).
inline UPlusTensor uplus_comul(int a) {
    UPlusTensor r;
    for (int c = 0; c <= a; ++c)
        r.add(c, a - c, GaussianInt::minus_i_pow(static_cast<long long>(c) * (a - c)));
    return r;
}

inline UPlusTensor uplus_comul(const UPlusElement& x) {
    UPlusTensor r;
    for (const auto& [n, c] : x.terms()) {
        UPlusTensor piece = uplus_comul(n);
        for (const auto& [k, pc] : piece.terms()) r.add(k.first, k.second, c * pc);
    }
    return r;
}

/// r(E^(a) E^(b)) == r(E^(a)) r(E^(b)) for all a+b <= maxdeg, with the twisted product.
inline bool bialgebra_check(int maxdeg) {
    for (int a = 0; a <= maxdeg; ++a)
        for (int b = 0; a + b <= maxdeg; ++b) {
            UPlusTensor lhs = uplus_comul(uplus_mul(UPlusElement::divided_power(a),
                                                    UPlusElement::divided_power(b)));
            UPlusTensor rhs = twisted_mul(uplus_comul(a), uplus_comul(b));
            if (!(lhs == rhs)) return false;
        }
    return true;
}

/// Coassociativity (r (x) id) r = (id (x) r) r on E^(a), computed in the triple tensor.
inline bool coassociativity_check(int maxdeg) {
    for (int a = 0; a <= maxdeg; ++a) {
        std::map<std::tuple<int, int, int>, GaussianInt> lhs, rhs;
        const UPlusTensor outer = uplus_comul(a);
        for (const auto& [k, c] : outer.terms()) {
            const UPlusTensor left = uplus_comul(k.first);
            for (const auto& [k2, c2] : left.terms()) {
                auto key = std::tuple{k2.first, k2.second, k.second};
                lhs[key] += c * c2;
                if (lhs[key].is_zero()) lhs.erase(key);
            }
            const UPlusTensor right = uplus_comul(k.second);
            for (const auto& [k2, c2] : right.terms()) {
                auto key = std::tuple{k.first, k2.first, k2.second};
                rhs[key] += c * c2;
                if (rhs[key].is_zero()) rhs.erase(key);
            }
        }
        if (lhs != rhs) return false;
    }
    return true;
}

} // namespace oalg

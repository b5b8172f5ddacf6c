#pragma once

#include "oalg/coeff.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace oalg {

/// Element of the skew polynomial ring on n odd variables:
/// x_i x_j = -x_j x_i for i != j, with monomials stored in the normal form
/// x_1^{a_1} ... x_n^{a_n}. For n = 0 this is the ring of integers.
///
/// Gradings: q-degree 2 per variable power, parity = total exponent mod 2.
class SkewPoly {
public:
    SkewPoly() = default;
    explicit SkewPoly(int n) : n_(n) {}

    static SkewPoly constant(int n, Int c);
    static SkewPoly one(int n) { return constant(n, 1); }
    static SkewPoly variable(int n, int i);
    static SkewPoly monomial(int n, std::vector<int> exp, Int c = 1);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] const std::map<std::vector<int>, Int>& terms() const { return terms_; }
    [[nodiscard]] Int coeff(const std::vector<int>& exp) const;

    void add_term(const std::vector<int>& exp, const Int& c);

    /// Parity (0 or 1) when parity homogeneous, nullopt otherwise (0 for the zero element).
    [[nodiscard]] std::optional<int> parity() const;
    /// q-degree (2 * total exponent) when homogeneous, nullopt otherwise.
    [[nodiscard]] std::optional<int> qdegree() const;
    /// Terms of total exponent degree exactly m.
    [[nodiscard]] SkewPoly exponent_degree_part(int m) const;
    [[nodiscard]] int max_exponent_degree() const;

    friend SkewPoly operator+(const SkewPoly& a, const SkewPoly& b);
    friend SkewPoly operator-(const SkewPoly& a, const SkewPoly& b);
    friend SkewPoly operator-(const SkewPoly& a);
    friend SkewPoly operator*(const SkewPoly& a, const SkewPoly& b);
    friend SkewPoly operator*(const Int& c, const SkewPoly& a);
    SkewPoly& operator+=(const SkewPoly& o) { return *this = *this + o; }
    SkewPoly& operator-=(const SkewPoly& o) { return *this = *this - o; }
    SkewPoly& operator*=(const SkewPoly& o) { return *this = *this * o; }
    friend bool operator==(const SkewPoly& a, const SkewPoly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    /// d(x_i) = x_i^2 extended by the signed Leibniz rule; d^2 = 0.
    [[nodiscard]] SkewPoly differential() const;

    /// theta: x_i -> (-1)^(i-1) x_i.
    [[nodiscard]] SkewPoly theta() const;
    /// Parity involution: f -> (-1)^p(f) f on parity-homogeneous pieces.
    [[nodiscard]] SkewPoly parity_involution() const;
    /// Index-permuting action of the simple transposition s_i.
    [[nodiscard]] SkewPoly apply_transposition(int i) const;
    /// Index-permuting action of w given in one-line form (x_j -> x_{w(j)}).
    [[nodiscard]] SkewPoly apply_permutation(const std::vector<uint8_t>& oneline) const;
    /// Action of the longest permutation, x_j -> x_{n+1-j}.
    [[nodiscard]] SkewPoly apply_w0() const;

    /// Odd partial derivative: linear map with d/dx_i(x_j) = delta_ij and
    /// d/dx_i(fg) = d/dx_i(f) g + (-1)^p(f) f d/dx_i(g).
    [[nodiscard]] SkewPoly partial_derivative(int i) const;

    /// True when every odd divided difference kills f (twisted odd symmetric).
    [[nodiscard]] bool is_twisted_symmetric() const;

    /// "3*x1^2*x2 - x3", factors ascending, zero is "0".
    [[nodiscard]] std::string str() const;
    static SkewPoly parse(int n, const std::string& text);

private:
    int n_{0};
    std::map<std::vector<int>, Int> terms_;
};

/// Odd directional derivative h_beta = sum_i beta_i d/dx_i.
SkewPoly directional_derivative(const std::vector<int>& beta, const SkewPoly& f);

/// Differential of the rank-one module OPol_n(alpha) on coordinates:
/// d_alpha(f 1) = (d(f) + (-1)^p(f) f sum_i alpha_i x_i) 1.
/// Requires every alpha entry in {0,1}; other values do not square to zero.
SkewPoly module_differential(const std::vector<int>& alpha, const SkewPoly& f);

/// Odd divided difference: partial_i(x_j) = 1 for j = i, i+1 and 0 otherwise,
/// partial_i(fg) = partial_i(f) g + (-1)^p(f) s_i(f) partial_i(g).
SkewPoly divided_difference(int i, const SkewPoly& f);

/// Composite along a word (leftmost outermost): word (i_1, ..., i_k) applies
/// partial_{i_k} first.
SkewPoly divided_difference_word(const std::vector<int>& word, const SkewPoly& f);

/// k-th untwisted odd elementary symmetric polynomial in OPol_n.
SkewPoly odd_elementary(int n, int k);
/// Twisted variant, theta(e_k).
SkewPoly odd_elementary_twisted(int n, int k);

/// Ring embedding of OPol_{f.n()} into OPol_{big_n} sending x_i to
/// x_{first + i - 1} (first is 1-based).
SkewPoly embed_shift(const SkewPoly& f, int first, int big_n);

/// e_k in the variable block x_first .. x_{first+len-1} of OPol_n.
SkewPoly odd_elementary_block(int n, int first, int len, int k);
/// Twisted e_k of the block, with theta taken locally to the block.
SkewPoly odd_elementary_twisted_block(int n, int first, int len, int k);

} // namespace oalg

#pragma once

#include "oalg/coeff.hpp"
#include "oalg/permutation.hpp"
#include "oalg/skew_poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace oalg {

/// Element of the odd nilHecke algebra ONH_n in the PBW basis x^a d_w
/// (polynomial part left of the divided-difference word). Permutations are
/// stored as indices into SymmetricGroupTable::get(n); the basis word of w is
/// its canonical reduced word.
class ONHElement {
public:
    ONHElement() = default;
    explicit ONHElement(int n) : n_(n) {}

    static ONHElement one(int n);
    static ONHElement from_poly(const SkewPoly& f);
    /// The generator d_i, 1 <= i <= n-1.
    static ONHElement generator(int n, int i);
    /// d along an arbitrary word of generator letters; zero when the word is
    /// not reduced, otherwise +-1 times a basis word.
    static ONHElement from_word(int n, const std::vector<int>& word);
    static ONHElement pbw_term(int n, std::vector<int> exp, int w, Int c = 1);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    /// Keys are (exponent, permutation index).
    [[nodiscard]] const std::map<std::pair<std::vector<int>, int>, Int>& terms() const {
        return terms_;
    }
    [[nodiscard]] Int coeff(const std::vector<int>& exp, int w) const;
    void add_term(const std::vector<int>& exp, int w, const Int& c);

    /// Parity of x^a d_w is |a| + l(w) mod 2; nullopt when mixed.
    [[nodiscard]] std::optional<int> parity() const;
    /// q-degree of x^a d_w is 2|a| - 2 l(w); nullopt when mixed.
    [[nodiscard]] std::optional<int> qdegree() const;

    friend ONHElement operator+(const ONHElement& a, const ONHElement& b);
    friend ONHElement operator-(const ONHElement& a, const ONHElement& b);
    friend ONHElement operator-(const ONHElement& a);
    friend ONHElement operator*(const Int& c, const ONHElement& a);
    ONHElement& operator+=(const ONHElement& o) { return *this = *this + o; }
    ONHElement& operator-=(const ONHElement& o) { return *this = *this - o; }
    friend bool operator==(const ONHElement& a, const ONHElement& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    /// "2*x1*d[2,1,3] - d[1,2,3]": polynomial factors as in SkewPoly followed
    /// by the permutation in one-line form; every term ends in a d[...].
    [[nodiscard]] std::string str() const;
    static ONHElement parse(int n, const std::string& text);

private:
    int n_{0};
    std::map<std::pair<std::vector<int>, int>, Int> terms_;
};

/// Product in PBW form: divided differences push through polynomials by
/// d_i f = d_i(f) + s_i(parity(f)) d_i, and concatenated words normalize
/// through the reduced-word sign table.
ONHElement pbw_mul(const ONHElement& a, const ONHElement& b);
inline ONHElement operator*(const ONHElement& a, const ONHElement& b) { return pbw_mul(a, b); }

/// Polynomial representation: x_i acts by left multiplication, d_i by the
/// odd divided difference.
SkewPoly act(const ONHElement& xi, const SkewPoly& f);

/// Algebra differential with d(x_i) = x_i^2, d(d_i) = 1, extended by the
/// signed Leibniz rule (both kinds of generators are odd).
ONHElement onh_differential(const ONHElement& xi);

/// The longest divided difference d_{w_0} (identity for n <= 1).
ONHElement longest_operator(int n);

/// The rank-one idempotent e_n = (-1)^C(n,3) d_{w_0} x^delta.
ONHElement idempotent(int n);

/// Image of xi under the inclusion that skips `offset` strands on the left,
/// into the algebra on big_n strands.
ONHElement embed_strands(const ONHElement& xi, int offset, int big_n);

/// Side-by-side juxtaposition: left acts on the first block of strands,
/// right on the remaining ones.
ONHElement juxtapose(const ONHElement& left, const ONHElement& right);

enum class SplitterDir { up, down };

/// Thick splitters inside ONH_{a+b}:
///   up   = (e_a x e_b) e_{a+b}
///   down = e_{a+b} d_{w_{a,b}} (e_a x e_b).
ONHElement splitter(SplitterDir dir, int a, int b);

/// Differential of an idempotented element, re-projected onto the idempotent
/// bordering its top: top d(xi).
ONHElement thick_differential(const ONHElement& xi, const ONHElement& top);

/// d_1 for n >= 2 (a primitive of 1, making the algebra acyclic); none when
/// n <= 1, where no element has differential 1.
std::optional<ONHElement> acyclicity_witness(int n);

} // namespace oalg

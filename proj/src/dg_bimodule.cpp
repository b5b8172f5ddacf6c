#include "oalg/dg_bimodule.hpp"

#include "oalg/coeff.hpp"
#include "oalg/linalg.hpp"
#include "oalg/permutation.hpp"
#include "oalg/quantum_sl2.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace oalg {

namespace {

void check_composition(const std::vector<int>& comp, int n) {
    if (comp.empty()) throw std::invalid_argument("composition is empty");
    int sum = 0;
    for (int a : comp) {
        if (a < 1) throw std::invalid_argument("composition parts must be positive");
        sum += a;
    }
    if (sum != n) throw std::invalid_argument("composition does not sum to the variable count");
}

// payload must be killed by every divided difference internal to a block
void check_block_span(const std::vector<int>& comp, const SkewPoly& payload) {
    int first = 1;
    for (int len : comp) {
        for (int i = first; i < first + len - 1; ++i)
            if (!divided_difference(i, payload).is_zero())
                throw std::invalid_argument("payload not in the twisted block span");
        first += len;
    }
}

std::pair<SkewPoly, SkewPoly> parity_split(const SkewPoly& f) {
    SkewPoly even(f.n()), odd(f.n());
    for (const auto& [exp, c] : f.terms()) {
        int deg = std::accumulate(exp.begin(), exp.end(), 0);
        (deg % 2 == 0 ? even : odd).add_term(exp, c);
    }
    return {even, odd};
}

// sum over later blocks of {prefix} e~_1(block), the coefficient of z in d(z)
SkewPoly generator_weight(const std::vector<int>& comp, int n) {
    SkewPoly w(n);
    int prefix = comp[0];
    for (size_t i = 1; i < comp.size(); ++i) {
        if (brace(prefix)) w += odd_elementary_twisted_block(n, prefix + 1, comp[i], 1);
        prefix += comp[i];
    }
    return w;
}

SkewPoly conjugated_differential(const SkewPoly& f, const std::vector<int>& comp) {
    return block_theta(block_theta(f, comp).differential(), comp);
}

std::string monomial_label(const std::vector<int>& exp) {
    std::string s;
    for (size_t i = 0; i < exp.size(); ++i) {
        if (exp[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i + 1);
        if (exp[i] > 1) s += "^" + std::to_string(exp[i]);
    }
    return s.empty() ? "1" : s;
}

SkewPoly restrict_to_first(const SkewPoly& f, int a) {
    SkewPoly r(a);
    for (const auto& [exp, c] : f.terms()) {
        for (size_t i = static_cast<size_t>(a); i < exp.size(); ++i)
            if (exp[i] != 0)
                throw std::logic_error("polynomial has support outside the first block");
        r.add_term(std::vector<int>(exp.begin(), exp.begin() + a), c);
    }
    return r;
}

SkewPoly pair_schur(int a, int b, const Partition& lambda, const Partition& mu,
                    SchurVariant vx, SchurVariant vy) {
    int n = a + b;
    return embed_shift(odd_schur(a, lambda, vx), 1, n) *
           embed_shift(odd_schur(b, mu, vy), a + 1, n);
}

}  // namespace

SkewPoly block_theta(const SkewPoly& f, const std::vector<int>& composition) {
    check_composition(composition, f.n());
    std::vector<int> offset(f.n());
    int first = 0;
    for (int len : composition) {
        for (int i = 0; i < len; ++i) offset[first + i] = i;
        first += len;
    }
    SkewPoly r(f.n());
    for (const auto& [exp, c] : f.terms()) {
        long long s = 0;
        for (size_t i = 0; i < exp.size(); ++i) s += static_cast<long long>(offset[i]) * exp[i];
        r.add_term(exp, Int(neg_one_pow(s)) * c);
    }
    return r;
}

ZElement::ZElement(std::vector<int> composition, SkewPoly payload)
    : composition_(std::move(composition)), payload_(std::move(payload)) {
    check_composition(composition_, payload_.n());
    check_block_span(composition_, payload_);
}

ZElement operator+(const ZElement& a, const ZElement& b) {
    if (a.composition_ != b.composition_)
        throw std::invalid_argument("composition mismatch");
    return {a.composition_, a.payload_ + b.payload_};
}

ZElement operator-(const ZElement& a, const ZElement& b) {
    if (a.composition_ != b.composition_)
        throw std::invalid_argument("composition mismatch");
    return {a.composition_, a.payload_ - b.payload_};
}

ZElement operator*(const Int& c, const ZElement& a) { return {a.composition_, c * a.payload_}; }

ZElement z_generator(const std::vector<int>& composition) {
    int n = std::accumulate(composition.begin(), composition.end(), 0);
    return {composition, SkewPoly::one(n)};
}

ZElement z_differential(const ZElement& elt) {
    const auto& comp = elt.composition();
    SkewPoly w = generator_weight(comp, elt.n());
    auto [even, odd] = parity_split(elt.payload());
    SkewPoly out = conjugated_differential(elt.payload(), comp) + even * w - odd * w;
    return {comp, out};
}

ZElement z_left_action(const SkewPoly& g, const ZElement& elt) {
    return {elt.composition(), g * elt.payload()};
}

ZElement z_right_action(const ZElement& elt, const SkewPoly& f) {
    if (!is_odd_symmetric(f)) throw std::invalid_argument("right action requires odd symmetric f");
    return {elt.composition(), elt.payload() * f.apply_w0().theta()};
}

SkewPoly z_trace(const ZElement& elt) {
    const auto& comp = elt.composition();
    std::vector<int> word;
    int prefix = comp[0];
    for (size_t k = 1; k < comp.size(); ++k) {
        // earlier stages act first, so they sit rightmost in the word
        std::vector<int> stage = block_transposition_word(prefix, comp[k]);
        word.insert(word.begin(), stage.begin(), stage.end());
        prefix += comp[k];
    }
    return divided_difference_word(word, elt.payload()).theta();
}

Int trace_pairing(int a, int b, const Partition& lambda, const Partition& mu) {
    if (!lambda.fits_in_box(a, b)) throw std::invalid_argument("lambda outside the a x b box");
    if (!mu.fits_in_box(b, a)) throw std::invalid_argument("mu outside the b x a box");
    SkewPoly payload =
        pair_schur(a, b, lambda, mu, SchurVariant::hat_twisted, SchurVariant::twisted);
    SkewPoly t = z_trace(ZElement({a, b}, payload));
    if (t.is_zero()) return 0;
    std::vector<int> zero(static_cast<size_t>(a + b), 0);
    if (t.terms().size() != 1 || t.terms().begin()->first != zero)
        throw std::logic_error("trace pairing is not scalar");
    return t.terms().begin()->second;
}

DualZElement::DualZElement(std::vector<int> composition, SkewPoly payload)
    : composition_(std::move(composition)), payload_(std::move(payload)) {
    check_composition(composition_, payload_.n());
    check_block_span(composition_, payload_);
}

DualZElement operator+(const DualZElement& a, const DualZElement& b) {
    if (a.composition_ != b.composition_)
        throw std::invalid_argument("composition mismatch");
    return {a.composition_, a.payload_ + b.payload_};
}

DualZElement operator-(const DualZElement& a, const DualZElement& b) {
    if (a.composition_ != b.composition_)
        throw std::invalid_argument("composition mismatch");
    return {a.composition_, a.payload_ - b.payload_};
}

DualZElement operator*(const Int& c, const DualZElement& a) {
    return {a.composition_, c * a.payload_};
}

DualZElement dual_z_generator(const std::vector<int>& composition) {
    int n = std::accumulate(composition.begin(), composition.end(), 0);
    return {composition, SkewPoly::one(n)};
}

DualZElement dual_differential(const DualZElement& elt) {
    const auto& comp = elt.composition();
    if (comp.size() != 2) throw std::invalid_argument("dual differential needs two blocks");
    int a = comp[0], b = comp[1], n = elt.n();
    SkewPoly out = conjugated_differential(elt.payload(), comp);
    if (a * b % 2) out = -out;
    if (brace(b)) {
        SkewPoly e1x = odd_elementary_twisted_block(n, 1, a, 1);
        out += Int(neg_one_pow(a * b - 1)) * (e1x * elt.payload());
    }
    return {comp, out};
}

SkewPoly dual_evaluate(const DualZElement& dual, const ZElement& elt) {
    if (dual.composition() != elt.composition())
        throw std::invalid_argument("composition mismatch");
    return z_trace(ZElement(elt.composition(), dual.payload() * elt.payload()));
}

PartitionSum basis_differential_zab(int a, int b, const Partition& lambda) {
    if (!lambda.fits_in_box(b, a)) throw std::invalid_argument("lambda outside the b x a box");
    PartitionSum out;
    for (int i : lambda.addable_rows()) {
        Partition mu = lambda.add_box(i);
        if (!mu.fits_in_box(b, a)) continue;
        int coeff = brace(a + lambda.added_box_content(i));
        if (!coeff) continue;
        out.add(mu, neg_one_pow(lambda.sum_above(i) + i - 1));
    }
    return out;
}

BasedComplexHandle un_complex(int n) {
    BasedComplexHandle h;
    std::vector<std::vector<int>> cells;
    std::vector<int> c(static_cast<size_t>(n), 0);
    while (true) {
        cells.push_back(c);
        int i = 0;
        while (i < n && c[i] == i) c[i++] = 0;
        if (i == n) break;
        ++c[i];
    }
    for (const auto& e : cells) {
        int deg = std::accumulate(e.begin(), e.end(), 0);
        h.complex.add_label(monomial_label(e), 2 * deg, deg % 2);
    }
    for (const auto& e : cells) {
        long long prefix = 0;
        for (int i = 1; i <= n; ++i) {
            if (brace(e[i - 1] + i - 1)) {
                std::vector<int> e2 = e;
                ++e2[i - 1];
                h.complex.add_arrow(monomial_label(e), monomial_label(e2), neg_one_pow(prefix));
            }
            prefix += e[i - 1];
        }
    }
    return h;
}

BasedComplexHandle vab_complex(int a, int b) {
    BasedComplexHandle h;
    std::vector<Partition> cells = partitions_in_box(b, a);
    for (const auto& p : cells) h.complex.add_label(p.str(), 2 * p.size(), p.size() % 2);
    for (const auto& p : cells) {
        PartitionSum d = basis_differential_zab(a, b, p);
        for (const auto& [mu, c] : d.terms()) h.complex.add_arrow(p.str(), mu.str(), c);
    }
    return h;
}

BasedComplexHandle dual_zab_complex(int a, int b) {
    BasedComplexHandle h;
    int n = a + b;
    std::vector<Partition> cells = partitions_in_box(a, b);
    for (const auto& p : cells)
        h.complex.add_label(p.str(), 2 * p.size() - a * b, (p.size() + a * b) % 2);
    for (const auto& p : cells) {
        DualZElement elt({a, b}, embed_shift(odd_schur(a, p, SchurVariant::hat_twisted), 1, n));
        PartitionSum d =
            expand_in_schur(restrict_to_first(dual_differential(elt).payload(), a),
                            SchurVariant::hat_twisted);
        for (const auto& [mu, c] : d.terms()) {
            if (!mu.fits_in_box(a, b)) throw std::logic_error("dual basis escapes the box");
            h.complex.add_arrow(p.str(), mu.str(), c);
        }
    }
    return h;
}

ONHElement natural_generator_differential(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("blocks must be positive");
    int n = a + b;
    std::vector<int> exp(static_cast<size_t>(n), 0);
    for (int i = a; i < n; ++i) exp[i] = a;
    SkewPoly u = SkewPoly::monomial(n, exp);
    ONHElement gen = pbw_mul(ONHElement::from_poly(u), longest_operator(n));

    ONHElement leibniz =
        pbw_mul(ONHElement::from_poly(Int(brace(a)) * (odd_elementary_block(n, a + 1, b, 1) * u)),
                longest_operator(n)) +
        Int(neg_one_pow(a * b)) *
            pbw_mul(ONHElement::from_poly(u), onh_differential(longest_operator(n)));

    ONHElement three_term(n);
    for (int i = 1; i <= a; ++i)
        if (brace(i - 1))
            three_term += pbw_mul(ONHElement::from_poly(SkewPoly::variable(n, i)), gen);
    for (int j = 1; j <= b; ++j)
        if (brace(j - 1))
            three_term += pbw_mul(ONHElement::from_poly(SkewPoly::variable(n, a + j)), gen);
    Int third = neg_one_pow(static_cast<long long>(a) * b + 1 + choose2(n));
    for (int k = 1; k <= n; ++k)
        if (brace(n - k))
            three_term += third * pbw_mul(gen, ONHElement::from_poly(SkewPoly::variable(n, k)));

    if (!(leibniz == three_term))
        throw std::logic_error("generator differential routes disagree");
    return leibniz;
}

CellFiltration finite_cell_filtration(const BasedComplexHandle& handle) {
    CellFiltration f;
    std::vector<std::pair<int, std::string>> order;
    for (const auto& l : handle.complex.labels()) order.emplace_back(-l.qdeg, l.id);
    std::sort(order.begin(), order.end());
    for (const auto& [negdeg, id] : order) f.order.push_back(id);
    f.graded_rank = handle.complex.graded_rank();
    return f;
}

namespace {

// dense coordinates of polynomials on the union of their supports
std::vector<std::vector<Int>> coordinate_rows(const std::vector<SkewPoly>& polys,
                                              std::map<std::vector<int>, int>& index) {
    index.clear();
    for (const auto& p : polys)
        for (const auto& [exp, c] : p.terms())
            index.emplace(exp, 0);
    int col = 0;
    for (auto& [exp, i] : index) i = col++;
    std::vector<std::vector<Int>> rows;
    rows.reserve(polys.size());
    for (const auto& p : polys) {
        std::vector<Int> v(index.size(), Int(0));
        for (const auto& [exp, c] : p.terms()) v[index.at(exp)] = c;
        rows.push_back(std::move(v));
    }
    return rows;
}

struct PairBasis {
    std::vector<std::string> labels;
    std::vector<SkewPoly> polys;
};

// untwisted pair Schur basis of the block ring in exponent degree m
PairBasis oh_pairs(int a, int b, int m) {
    PairBasis out;
    for (int s = 0; s <= m; ++s)
        for (const auto& lambda : partitions_of(s)) {
            if (lambda.length() > a) continue;
            for (const auto& mu : partitions_of(m - s)) {
                if (mu.length() > b) continue;
                out.labels.push_back(lambda.str() + "x" + mu.str());
                out.polys.push_back(pair_schur(a, b, lambda, mu, SchurVariant::untwisted,
                                               SchurVariant::untwisted));
            }
        }
    return out;
}

// generators of the positive-degree global symmetric submodule in degree m
std::vector<SkewPoly> oh_submodule_rows(int a, int b, int m) {
    int n = a + b;
    std::vector<SkewPoly> rows;
    for (int k = 1; k <= std::min(m, n); ++k) {
        SkewPoly ek = odd_elementary(n, k);
        PairBasis heads = oh_pairs(a, b, m - k);
        for (const auto& p : heads.polys) rows.push_back(p * ek);
    }
    return rows;
}

}  // namespace

OHQuotient oh_quotient(int a, int b, int maxdeg) {
    if (maxdeg < 2 * a * b) throw std::invalid_argument("degree bound too small to decide");
    OHQuotient out;
    for (int d = 0; d <= maxdeg; d += 2) {
        int m = d / 2;
        PairBasis pairs = oh_pairs(a, b, m);
        std::vector<SkewPoly> sub = oh_submodule_rows(a, b, m);

        std::map<std::vector<int>, int> index;
        std::vector<SkewPoly> all = sub;
        all.insert(all.end(), pairs.polys.begin(), pairs.polys.end());
        std::vector<std::vector<Int>> rows = coordinate_rows(all, index);

        RatRowReducer red;
        int rank = 0;
        for (size_t i = 0; i < sub.size(); ++i)
            if (red.absorb(rows[i])) ++rank;
        out.dims[d] = static_cast<int>(pairs.polys.size()) - rank;
        std::vector<std::string> basis;
        for (size_t i = 0; i < pairs.polys.size(); ++i)
            if (red.absorb(rows[sub.size() + i])) basis.push_back(pairs.labels[i]);
        out.basis[d] = std::move(basis);

        if (sub.empty()) continue;
        // integrality: expand the submodule generators in the pair lattice and
        // demand unit elementary divisors
        IntMatrix pmat(static_cast<int>(index.size()), static_cast<int>(pairs.polys.size()));
        for (size_t j = 0; j < pairs.polys.size(); ++j)
            for (size_t r = 0; r < index.size(); ++r)
                pmat.at(static_cast<int>(r), static_cast<int>(j)) = rows[sub.size() + j][r];
        IntMatrix coords(static_cast<int>(sub.size()), static_cast<int>(pairs.polys.size()));
        for (size_t i = 0; i < sub.size(); ++i) {
            auto sol = solve_integral(pmat, rows[i]);
            if (!sol) throw std::logic_error("submodule generator outside the pair lattice");
            for (size_t j = 0; j < sol->size(); ++j)
                coords.at(static_cast<int>(i), static_cast<int>(j)) = (*sol)[j];
        }
        for (const Int& e : smith_diagonal(coords))
            if (e != 0 && e != 1) throw std::logic_error("quotient lattice is not free");
    }
    return out;
}

SkewPoly oh_gamma_e(int a, int b, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    int n = a + b;
    if (k > a) return SkewPoly(n);
    return Int(neg_one_pow(choose2(k))) * embed_shift(odd_elementary(a, k), 1, n);
}

SkewPoly oh_gamma_h(int a, int b, int k) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    int n = a + b;
    std::vector<SkewPoly> h{SkewPoly::one(n)};
    for (int m = 1; m <= k; ++m) {
        SkewPoly s(n);
        for (int i = 1; i <= std::min(m, a); ++i)
            s += Int(neg_one_pow(i + choose2(i))) * (oh_gamma_e(a, b, i) * h[m - i]);
        h.push_back(-s);
    }
    return h[k];
}

bool oh_membership(int a, int b, const SkewPoly& f) {
    if (f.is_zero()) return true;
    for (int m = 0; m <= f.max_exponent_degree(); ++m) {
        SkewPoly part = f.exponent_degree_part(m);
        if (part.is_zero()) continue;
        std::vector<SkewPoly> sub = oh_submodule_rows(a, b, m);
        sub.push_back(part);
        std::map<std::vector<int>, int> index;
        std::vector<std::vector<Int>> rows = coordinate_rows(sub, index);
        RatRowReducer red;
        for (size_t i = 0; i + 1 < rows.size(); ++i) red.absorb(rows[i]);
        if (red.absorb(rows.back())) return false;
    }
    return true;
}

bool K0Report::all_pass() const {
    for (const auto& item : items)
        if (!item.pass) return false;
    return true;
}

K0Report k0_symbols(int max_ab, int max_n) {
    K0Report rep;
    for (int a = 1; a < max_ab; ++a)
        for (int b = 1; a + b <= max_ab; ++b) {
            LaurentInt rank = dual_zab_complex(a, b).complex.graded_rank();
            LaurentInt qb = qbinom(a + b, a);
            GaussianInt ev = rank.eval_i();
            UPlusElement prod =
                uplus_mul(UPlusElement::divided_power(a), UPlusElement::divided_power(b));
            GaussianInt structure;
            auto it = prod.terms().find(a + b);
            if (it != prod.terms().end()) structure = it->second;
            K0Item item;
            item.name = "restriction-symbol(" + std::to_string(a) + "," + std::to_string(b) + ")";
            item.pass = rank == qb && ev == structure;
            item.detail = rank.str() + " vs " + qb.str() + "; at i: " + ev.str() + " vs " +
                          structure.str();
            rep.items.push_back(std::move(item));
        }
    for (int n = 0; n <= max_n; ++n) {
        GaussianInt euler = un_complex(n).complex.graded_rank().eval_i();
        GaussianInt expected(n <= 1 ? 1 : 0);
        K0Item item;
        item.name = "euler-staircase(" + std::to_string(n) + ")";
        item.pass = euler == expected;
        item.detail = euler.str() + " vs " + expected.str();
        rep.items.push_back(std::move(item));
    }
    return rep;
}

}  // namespace oalg

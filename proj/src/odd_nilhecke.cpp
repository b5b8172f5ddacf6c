#include "oalg/odd_nilhecke.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace oalg {

namespace {

int exp_degree(const std::vector<int>& a) {
    return std::accumulate(a.begin(), a.end(), 0);
}

/// Product (d-word) * f as a map from the residual permutation to its left
/// polynomial coefficient: word letters push through f right to left via
/// d_i f = d_i(f) + s_i(iota(f)) d_i.
std::map<int, SkewPoly> word_times_poly(const SymmetricGroupTable& table,
                                        const std::vector<int>& word, const SkewPoly& f) {
    std::map<int, SkewPoly> state;
    state.emplace(table.identity(), f);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const int i = *it;
        std::map<int, SkewPoly> next;
        for (const auto& [w, g] : state) {
            SkewPoly acted = divided_difference(i, g);
            if (!acted.is_zero()) {
                auto [jt, inserted] = next.emplace(w, acted);
                if (!inserted) jt->second += acted;
            }
            std::vector<int> prepended;
            prepended.reserve(table.canonical_word(w).size() + 1);
            prepended.push_back(i);
            const auto& tail = table.canonical_word(w);
            prepended.insert(prepended.end(), tail.begin(), tail.end());
            auto [w2, sign] = table.normalize_word(prepended);
            if (sign == 0) continue;
            SkewPoly passed = g.parity_involution().apply_transposition(i);
            if (sign < 0) passed = -passed;
            if (passed.is_zero()) continue;
            auto [jt, inserted] = next.emplace(w2, passed);
            if (!inserted) jt->second += passed;
        }
        state = std::move(next);
    }
    return state;
}

} // namespace

ONHElement ONHElement::one(int n) { return from_poly(SkewPoly::one(n)); }

ONHElement ONHElement::from_poly(const SkewPoly& f) {
    ONHElement r(f.n());
    const auto& table = SymmetricGroupTable::get(f.n());
    for (const auto& [a, c] : f.terms()) r.add_term(a, table.identity(), c);
    return r;
}

ONHElement ONHElement::generator(int n, int i) {
    if (i < 1 || i >= n) throw std::invalid_argument("generator index out of range");
    return from_word(n, {i});
}

ONHElement ONHElement::from_word(int n, const std::vector<int>& word) {
    const auto& table = SymmetricGroupTable::get(n);
    for (int i : word)
        if (i < 1 || i >= n) throw std::invalid_argument("word letter out of range");
    auto [w, sign] = table.normalize_word(word);
    ONHElement r(n);
    if (sign != 0) r.add_term(std::vector<int>(n, 0), w, sign);
    return r;
}

ONHElement ONHElement::pbw_term(int n, std::vector<int> exp, int w, Int c) {
    if (static_cast<int>(exp.size()) != n) throw std::invalid_argument("exponent length");
    ONHElement r(n);
    r.add_term(exp, w, c);
    return r;
}

Int ONHElement::coeff(const std::vector<int>& exp, int w) const {
    auto it = terms_.find({exp, w});
    return it == terms_.end() ? Int(0) : it->second;
}

void ONHElement::add_term(const std::vector<int>& exp, int w, const Int& c) {
    if (c == 0) return;
    auto key = std::make_pair(exp, w);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::optional<int> ONHElement::parity() const {
    if (terms_.empty()) return 0;
    const auto& table = SymmetricGroupTable::get(n_);
    std::optional<int> p;
    for (const auto& [key, c] : terms_) {
        int tp = (exp_degree(key.first) + table.length(key.second)) & 1;
        if (p && *p != tp) return std::nullopt;
        p = tp;
    }
    return p;
}

std::optional<int> ONHElement::qdegree() const {
    if (terms_.empty()) return 0;
    const auto& table = SymmetricGroupTable::get(n_);
    std::optional<int> q;
    for (const auto& [key, c] : terms_) {
        int tq = 2 * exp_degree(key.first) - 2 * table.length(key.second);
        if (q && *q != tq) return std::nullopt;
        q = tq;
    }
    return q;
}

ONHElement operator+(const ONHElement& a, const ONHElement& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("mismatched strand counts");
    ONHElement r = a;
    for (const auto& [key, c] : b.terms_) r.add_term(key.first, key.second, c);
    return r;
}

ONHElement operator-(const ONHElement& a, const ONHElement& b) { return a + (-b); }

ONHElement operator-(const ONHElement& a) {
    ONHElement r(a.n_);
    for (const auto& [key, c] : a.terms_) r.terms_.emplace(key, -c);
    return r;
}

ONHElement operator*(const Int& c, const ONHElement& a) {
    ONHElement r(a.n_);
    if (c == 0) return r;
    for (const auto& [key, v] : a.terms_) r.terms_.emplace(key, c * v);
    return r;
}

ONHElement pbw_mul(const ONHElement& a, const ONHElement& b) {
    if (a.n() != b.n()) throw std::invalid_argument("mismatched strand counts");
    const int n = a.n();
    const auto& table = SymmetricGroupTable::get(n);
    std::map<int, SkewPoly> left_by_word;
    for (const auto& [akey, ac] : a.terms())
        left_by_word.emplace(akey.second, SkewPoly(n)).first->second.add_term(akey.first, ac);
    ONHElement r(n);
    for (const auto& [bkey, bc] : b.terms()) {
        const auto& [bexp, u] = bkey;
        const auto& uword = table.canonical_word(u);
        for (const auto& [v, fleft] : left_by_word) {
            SkewPoly right = SkewPoly::monomial(n, bexp, bc);
            auto pushed = word_times_poly(table, table.canonical_word(v), right);
            for (const auto& [w_mid, g] : pushed) {
                std::vector<int> joined = table.canonical_word(w_mid);
                joined.insert(joined.end(), uword.begin(), uword.end());
                auto [w_fin, sign] = table.normalize_word(joined);
                if (sign == 0) continue;
                SkewPoly prod = fleft * g;
                if (sign < 0) prod = -prod;
                for (const auto& [e, c] : prod.terms()) r.add_term(e, w_fin, c);
            }
        }
    }
    return r;
}

SkewPoly act(const ONHElement& xi, const SkewPoly& f) {
    if (xi.n() != f.n()) throw std::invalid_argument("mismatched strand counts");
    const auto& table = SymmetricGroupTable::get(xi.n());
    SkewPoly r(xi.n());
    for (const auto& [key, c] : xi.terms()) {
        const auto& [exp, w] = key;
        SkewPoly g = divided_difference_word(table.canonical_word(w), f);
        if (g.is_zero()) continue;
        r += SkewPoly::monomial(xi.n(), exp, c) * g;
    }
    return r;
}

ONHElement onh_differential(const ONHElement& xi) {
    const int n = xi.n();
    const auto& table = SymmetricGroupTable::get(n);
    ONHElement r(n);
    for (const auto& [key, c] : xi.terms()) {
        const auto& [exp, w] = key;
        SkewPoly dx = SkewPoly::monomial(n, exp, c).differential();
        for (const auto& [e, v] : dx.terms()) r.add_term(e, w, v);
        const auto& word = table.canonical_word(w);
        const Int signed_c = (exp_degree(exp) & 1) ? -c : c;
        for (size_t t = 0; t < word.size(); ++t) {
            std::vector<int> cut;
            cut.reserve(word.size() - 1);
            cut.insert(cut.end(), word.begin(), word.begin() + t);
            cut.insert(cut.end(), word.begin() + t + 1, word.end());
            auto [w2, sign] = table.normalize_word(cut);
            if (sign == 0) continue;
            if (t & 1) sign = -sign;
            r.add_term(exp, w2, Int(sign) * signed_c);
        }
    }
    return r;
}

ONHElement longest_operator(int n) { return ONHElement::from_word(n, longest_word(n)); }

ONHElement idempotent(int n) {
    if (n < 1) throw std::invalid_argument("idempotent needs n >= 1");
    std::vector<int> delta(n);
    for (int i = 0; i < n; ++i) delta[i] = n - 1 - i;
    ONHElement r = pbw_mul(longest_operator(n),
                           ONHElement::from_poly(SkewPoly::monomial(n, delta)));
    return Int(neg_one_pow(choose3(n))) * r;
}

ONHElement embed_strands(const ONHElement& xi, int offset, int big_n) {
    if (offset < 0 || offset + xi.n() > big_n) throw std::invalid_argument("block out of range");
    const auto& small = SymmetricGroupTable::get(xi.n());
    const auto& big = SymmetricGroupTable::get(big_n);
    ONHElement r(big_n);
    for (const auto& [key, c] : xi.terms()) {
        const auto& [exp, w] = key;
        std::vector<int> e(big_n, 0);
        std::copy(exp.begin(), exp.end(), e.begin() + offset);
        std::vector<int> word = small.canonical_word(w);
        for (int& letter : word) letter += offset;
        auto [w2, sign] = big.normalize_word(word);
        r.add_term(e, w2, Int(sign) * c);
    }
    return r;
}

ONHElement juxtapose(const ONHElement& left, const ONHElement& right) {
    const int n = left.n() + right.n();
    return pbw_mul(embed_strands(left, 0, n), embed_strands(right, left.n(), n));
}

ONHElement splitter(SplitterDir dir, int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("splitter thickness must be positive");
    ONHElement pair = juxtapose(idempotent(a), idempotent(b));
    if (dir == SplitterDir::up) return pbw_mul(pair, idempotent(a + b));
    ONHElement cross = ONHElement::from_word(a + b, block_transposition_word(a, b));
    return pbw_mul(idempotent(a + b), pbw_mul(cross, pair));
}

ONHElement thick_differential(const ONHElement& xi, const ONHElement& top) {
    return pbw_mul(top, onh_differential(xi));
}

std::optional<ONHElement> acyclicity_witness(int n) {
    if (n < 2) return std::nullopt;
    ONHElement d1 = ONHElement::generator(n, 1);
    if (!(onh_differential(d1) == ONHElement::one(n)))
        throw std::logic_error("witness differential is not the unit");
    return d1;
}

std::string ONHElement::str() const {
    if (terms_.empty()) return "0";
    const auto& table = SymmetricGroupTable::get(n_);
    std::vector<const std::map<std::pair<std::vector<int>, int>, Int>::value_type*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    // Polynomial parts in descending degree then descending exponent, as for
    // SkewPoly; permutations tie-break by length then one-line form.
    std::sort(order.begin(), order.end(), [&](const auto* x, const auto* y) {
        int dx = exp_degree(x->first.first), dy = exp_degree(y->first.first);
        if (dx != dy) return dx > dy;
        if (x->first.first != y->first.first) return x->first.first > y->first.first;
        int lx = table.length(x->first.second), ly = table.length(y->first.second);
        if (lx != ly) return lx < ly;
        return table.oneline(x->first.second) < table.oneline(y->first.second);
    });
    std::string s;
    for (const auto* term : order) {
        const auto& [key, c] = *term;
        const auto& [a, w] = key;
        Int v = c;
        if (s.empty()) {
            if (v < 0) {
                s += "-";
                v = -v;
            }
        } else {
            s += v < 0 ? " - " : " + ";
            if (v < 0) v = -v;
        }
        std::string mon;
        for (int i = 0; i < n_; ++i) {
            if (a[i] == 0) continue;
            if (!mon.empty()) mon += "*";
            mon += "x" + std::to_string(i + 1);
            if (a[i] > 1) mon += "^" + std::to_string(a[i]);
        }
        if (!mon.empty()) mon += "*";
        mon += "d[";
        const auto& oneline = table.oneline(w);
        for (int i = 0; i < n_; ++i) {
            if (i) mon += ",";
            mon += std::to_string(oneline[i]);
        }
        mon += "]";
        if (v != 1) s += v.str() + "*";
        s += mon;
    }
    return s;
}

ONHElement ONHElement::parse(int n, const std::string& text) {
    const auto& table = SymmetricGroupTable::get(n);
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto parse_int = [&]() -> Int {
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("expected integer");
        return Int(text.substr(start, pos - start));
    };
    // factor := integer | x<idx>[^<exp>] | d[<one-line permutation>]
    auto parse_factor = [&]() -> ONHElement {
        skip_ws();
        if (pos < text.size() && text[pos] == 'x') {
            ++pos;
            Int idx = parse_int();
            if (idx < 1 || idx > n) throw std::invalid_argument("variable index out of range");
            int exp = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                Int e = parse_int();
                if (e < 0 || e > 1000000) throw std::invalid_argument("exponent out of range");
                exp = static_cast<int>(e);
            }
            std::vector<int> ev(n, 0);
            ev[static_cast<int>(idx) - 1] = exp;
            return from_poly(SkewPoly::monomial(n, std::move(ev)));
        }
        if (pos < text.size() && text[pos] == 'd') {
            ++pos;
            skip_ws();
            if (pos >= text.size() || text[pos] != '[') throw std::invalid_argument("expected '['");
            ++pos;
            std::vector<uint8_t> oneline;
            skip_ws();
            if (pos < text.size() && text[pos] == ']') {
                ++pos;
            } else {
                while (true) {
                    skip_ws();
                    Int v = parse_int();
                    if (v < 1 || v > n) throw std::invalid_argument("permutation entry out of range");
                    oneline.push_back(static_cast<uint8_t>(v));
                    skip_ws();
                    if (pos < text.size() && text[pos] == ',') {
                        ++pos;
                        continue;
                    }
                    if (pos < text.size() && text[pos] == ']') {
                        ++pos;
                        break;
                    }
                    throw std::invalid_argument("expected ',' or ']'");
                }
            }
            if (static_cast<int>(oneline.size()) != n)
                throw std::invalid_argument("permutation length");
            std::vector<bool> seen(n, false);
            for (uint8_t v : oneline) {
                if (seen[v - 1]) throw std::invalid_argument("not a permutation");
                seen[v - 1] = true;
            }
            return pbw_term(n, std::vector<int>(n, 0), table.index(oneline));
        }
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            return Int(parse_int()) * one(n);
        throw std::invalid_argument("expected factor");
    };
    auto parse_term = [&]() -> ONHElement {
        ONHElement t = parse_factor();
        while (true) {
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                t = pbw_mul(t, parse_factor());
            } else {
                break;
            }
        }
        return t;
    };
    ONHElement r(n);
    skip_ws();
    bool negate = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negate = text[pos] == '-';
        ++pos;
    }
    while (true) {
        ONHElement t = parse_term();
        r += negate ? -t : t;
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] == '+') negate = false;
        else if (text[pos] == '-') negate = true;
        else throw std::invalid_argument("expected '+' or '-'");
        ++pos;
    }
    return r;
}

} // namespace oalg

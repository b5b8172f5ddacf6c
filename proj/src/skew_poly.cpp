#include "oalg/skew_poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace oalg {

namespace {

int exp_degree(const std::vector<int>& a) {
    return std::accumulate(a.begin(), a.end(), 0);
}

/// Sign exponent for merging normal forms: x^a * x^b picks up
/// (-1)^(sum over i > j of a_i b_j) when the b-variables move into place.
long long merge_sign_exp(const std::vector<int>& a, const std::vector<int>& b) {
    long long e = 0;
    long long a_above = 0;
    // a_above accumulates sum_{i > j} a_i as j descends.
    for (int j = static_cast<int>(b.size()) - 1; j >= 0; --j) {
        e += a_above * b[j];
        a_above += a[j];
    }
    return e;
}

} // namespace

SkewPoly SkewPoly::constant(int n, Int c) {
    SkewPoly r(n);
    r.add_term(std::vector<int>(n, 0), c);
    return r;
}

SkewPoly SkewPoly::variable(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("variable index out of range");
    std::vector<int> e(n, 0);
    e[i - 1] = 1;
    return monomial(n, std::move(e));
}

SkewPoly SkewPoly::monomial(int n, std::vector<int> exp, Int c) {
    if (static_cast<int>(exp.size()) != n) throw std::invalid_argument("exponent length");
    for (int a : exp)
        if (a < 0) throw std::invalid_argument("negative exponent");
    SkewPoly r(n);
    r.add_term(exp, c);
    return r;
}

Int SkewPoly::coeff(const std::vector<int>& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

void SkewPoly::add_term(const std::vector<int>& exp, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_[exp] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::optional<int> SkewPoly::parity() const {
    if (terms_.empty()) return 0;
    int p = exp_degree(terms_.begin()->first) & 1;
    for (const auto& [e, c] : terms_)
        if ((exp_degree(e) & 1) != p) return std::nullopt;
    return p;
}

std::optional<int> SkewPoly::qdegree() const {
    if (terms_.empty()) return 0;
    int d = exp_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (exp_degree(e) != d) return std::nullopt;
    return 2 * d;
}

SkewPoly SkewPoly::exponent_degree_part(int m) const {
    SkewPoly r(n_);
    for (const auto& [e, c] : terms_)
        if (exp_degree(e) == m) r.add_term(e, c);
    return r;
}

int SkewPoly::max_exponent_degree() const {
    int m = 0;
    for (const auto& [e, c] : terms_) m = std::max(m, exp_degree(e));
    return m;
}

SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("mixed variable counts");
    SkewPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("mixed variable counts");
    SkewPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

SkewPoly operator-(const SkewPoly& a) {
    SkewPoly r(a.n_);
    for (const auto& [e, c] : a.terms_) r.add_term(e, -c);
    return r;
}

SkewPoly operator*(const SkewPoly& a, const SkewPoly& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("mixed variable counts");
    SkewPoly r(a.n_);
    std::vector<int> e(a.n_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
            Int c = ca * cb;
            if (merge_sign_exp(ea, eb) & 1) c = -c;
            r.add_term(e, c);
        }
    return r;
}

SkewPoly operator*(const Int& c, const SkewPoly& a) {
    SkewPoly r(a.n_);
    for (const auto& [e, ac] : a.terms_) r.add_term(e, c * ac);
    return r;
}

SkewPoly SkewPoly::differential() const {
    SkewPoly r(n_);
    for (const auto& [a, c] : terms_) {
        int prefix = 0;
        for (int i = 0; i < n_; ++i) {
            if ((a[i] & 1) != 0) {
                std::vector<int> e = a;
                e[i] += 1;
                r.add_term(e, (prefix & 1) ? -c : c);
            }
            prefix += a[i];
        }
    }
    return r;
}

SkewPoly SkewPoly::theta() const {
    SkewPoly r(n_);
    for (const auto& [a, c] : terms_) {
        long long s = 0;
        for (int i = 0; i < n_; ++i) s += static_cast<long long>(i) * a[i];
        r.add_term(a, (s & 1) ? -c : c);
    }
    return r;
}

SkewPoly SkewPoly::parity_involution() const {
    SkewPoly r(n_);
    for (const auto& [a, c] : terms_) r.add_term(a, (exp_degree(a) & 1) ? -c : c);
    return r;
}

SkewPoly SkewPoly::apply_transposition(int i) const {
    if (i < 1 || i >= n_) throw std::invalid_argument("transposition index out of range");
    SkewPoly r(n_);
    for (const auto& [a, c] : terms_) {
        std::vector<int> e = a;
        std::swap(e[i - 1], e[i]);
        long long cross = static_cast<long long>(a[i - 1]) * a[i];
        r.add_term(e, (cross & 1) ? -c : c);
    }
    return r;
}

SkewPoly SkewPoly::apply_permutation(const std::vector<uint8_t>& oneline) const {
    if (static_cast<int>(oneline.size()) != n_) throw std::invalid_argument("permutation size");
    SkewPoly r(n_);
    for (const auto& [a, c] : terms_) {
        std::vector<int> e(n_, 0);
        long long sgn = 0;
        for (int i = 0; i < n_; ++i) {
            e[oneline[i] - 1] = a[i];
            for (int j = i + 1; j < n_; ++j)
                if (oneline[i] > oneline[j]) sgn += static_cast<long long>(a[i]) * a[j];
        }
        r.add_term(e, (sgn & 1) ? -c : c);
    }
    return r;
}

SkewPoly SkewPoly::apply_w0() const {
    SkewPoly r(n_);
    for (const auto& [a, c] : terms_) {
        std::vector<int> e(a.rbegin(), a.rend());
        long long sgn = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) sgn += static_cast<long long>(a[i]) * a[j];
        r.add_term(e, (sgn & 1) ? -c : c);
    }
    return r;
}

SkewPoly SkewPoly::partial_derivative(int i) const {
    if (i < 1 || i > n_) throw std::invalid_argument("variable index out of range");
    SkewPoly r(n_);
    for (const auto& [a, c] : terms_) {
        if (a[i - 1] == 0 || (a[i - 1] & 1) == 0) continue;
        int prefix = 0;
        for (int j = 0; j < i - 1; ++j) prefix += a[j];
        std::vector<int> e = a;
        e[i - 1] -= 1;
        r.add_term(e, (prefix & 1) ? -c : c);
    }
    return r;
}

SkewPoly directional_derivative(const std::vector<int>& beta, const SkewPoly& f) {
    if (static_cast<int>(beta.size()) != f.n()) throw std::invalid_argument("beta length");
    SkewPoly r(f.n());
    for (int i = 1; i <= f.n(); ++i)
        if (beta[i - 1] != 0) r += Int(beta[i - 1]) * f.partial_derivative(i);
    return r;
}

SkewPoly module_differential(const std::vector<int>& alpha, const SkewPoly& f) {
    const int n = f.n();
    if (static_cast<int>(alpha.size()) != n) throw std::invalid_argument("alpha length");
    for (int a : alpha)
        if (a != 0 && a != 1) throw std::invalid_argument("alpha entry outside {0,1}");
    SkewPoly weight(n);
    for (int i = 1; i <= n; ++i)
        if (alpha[i - 1] == 1) weight += SkewPoly::variable(n, i);
    SkewPoly r = f.differential();
    for (const auto& [a, c] : f.terms()) {
        const int p = exp_degree(a) & 1;
        SkewPoly m = SkewPoly::monomial(n, a, p ? -c : c);
        r += m * weight;
    }
    return r;
}

SkewPoly divided_difference(int i, const SkewPoly& f) {
    const int n = f.n();
    if (i < 1 || i >= n) throw std::invalid_argument("divided difference index out of range");
    SkewPoly r(n);
    // partial_i(x_j m) = [j = i or i+1] m - x_{s_i(j)} partial_i(m), from the
    // Leibniz rule with the index-permuting s_i action.
    for (const auto& [a, c] : f.terms()) {
        // Only the (i, i+1) block matters: partial_i(P M Q) = +-P partial_i(M) Q
        // with P the prefix in x_1..x_{i-1}, which s_i fixes and partial_i kills.
        int prefix = 0;
        for (int j = 0; j < i - 1; ++j) prefix += a[j];
        const int p = a[i - 1], q = a[i];
        // Letter recursion on x^p y^q with x = x_i, y = x_{i+1}:
        //   partial(x m) = m - y partial(m),   partial(y m) = m - x partial(m),
        // where left multiplication by y crosses x^s with sign (-1)^s.
        using TwoVar = std::map<std::pair<int, int>, Int>;
        auto add2 = [](TwoVar& m, std::pair<int, int> k, const Int& v) {
            if (v == 0) return;
            auto it = m.find(k);
            if (it == m.end()) m[k] = v;
            else {
                it->second += v;
                if (it->second == 0) m.erase(it);
            }
        };
        TwoVar acc;
        for (int t = 1; t <= q; ++t) {
            TwoVar next;
            add2(next, {0, t - 1}, 1);
            for (const auto& [k, v] : acc) add2(next, {k.first + 1, k.second}, -v);
            acc = std::move(next);
        }
        for (int s = 1; s <= p; ++s) {
            TwoVar next;
            add2(next, {s - 1, q}, 1);
            for (const auto& [k, v] : acc)
                add2(next, {k.first, k.second + 1}, (k.first & 1) ? v : -v);
            acc = std::move(next);
        }
        for (const auto& [pq, coeff] : acc) {
            std::vector<int> e = a;
            e[i - 1] = pq.first;
            e[i] = pq.second;
            Int v = c * coeff;
            r.add_term(e, (prefix & 1) ? -v : v);
        }
    }
    return r;
}

SkewPoly divided_difference_word(const std::vector<int>& word, const SkewPoly& f) {
    SkewPoly r = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = divided_difference(*it, r);
    return r;
}

bool SkewPoly::is_twisted_symmetric() const {
    for (int i = 1; i < n_; ++i)
        if (!divided_difference(i, *this).is_zero()) return false;
    return true;
}

SkewPoly odd_elementary(int n, int k) {
    if (k < 0) return SkewPoly(n);
    if (k == 0) return SkewPoly::one(n);
    if (k > n) return SkewPoly(n);
    SkewPoly r(n);
    // Iterate over k-subsets of {1..n}.
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        std::vector<int> e(n, 0);
        for (int j : idx) e[j] = 1;
        r.add_term(e, 1);
        int t = k - 1;
        while (t >= 0 && idx[t] == n - k + t) --t;
        if (t < 0) break;
        ++idx[t];
        for (int j = t + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return r;
}

SkewPoly odd_elementary_twisted(int n, int k) { return odd_elementary(n, k).theta(); }

SkewPoly embed_shift(const SkewPoly& f, int first, int big_n) {
    if (first < 1 || first - 1 + f.n() > big_n) throw std::invalid_argument("block out of range");
    SkewPoly r(big_n);
    for (const auto& [a, c] : f.terms()) {
        std::vector<int> e(big_n, 0);
        std::copy(a.begin(), a.end(), e.begin() + (first - 1));
        r.add_term(e, c);
    }
    return r;
}

SkewPoly odd_elementary_block(int n, int first, int len, int k) {
    return embed_shift(odd_elementary(len, k), first, n);
}

SkewPoly odd_elementary_twisted_block(int n, int first, int len, int k) {
    return embed_shift(odd_elementary_twisted(len, k), first, n);
}

std::string SkewPoly::str() const {
    if (terms_.empty()) return "0";
    // Terms print in descending total degree, ties by descending exponent vector.
    std::vector<const std::map<std::vector<int>, Int>::value_type*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](const auto* x, const auto* y) {
        int dx = exp_degree(x->first), dy = exp_degree(y->first);
        if (dx != dy) return dx > dy;
        return x->first > y->first;
    });
    std::string s;
    for (const auto* term : order) {
        const auto& [a, c] = *term;
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
        if (mon.empty()) {
            s += v.str();
        } else {
            if (v != 1) s += v.str() + "*";
            s += mon;
        }
    }
    return s;
}

SkewPoly SkewPoly::parse(int n, const std::string& text) {
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
    // factor := integer | x<idx>[^<exp>]
    auto parse_factor = [&]() -> SkewPoly {
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
            return monomial(n, std::move(ev));
        }
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            return constant(n, parse_int());
        throw std::invalid_argument("expected factor");
    };
    // term := factor (* factor)*
    auto parse_term = [&]() -> SkewPoly {
        SkewPoly t = parse_factor();
        while (true) {
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                t *= parse_factor();
            } else {
                break;
            }
        }
        return t;
    };
    SkewPoly r(n);
    skip_ws();
    bool negate = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negate = text[pos] == '-';
        ++pos;
    }
    while (true) {
        SkewPoly t = parse_term();
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

#include "oalg/odd_symmetric.hpp"

#include "oalg/linalg.hpp"
#include "oalg/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace oalg {

void PartitionSum::add(const Partition& p, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        terms_[p] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Int PartitionSum::coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Int(0) : it->second;
}

PartitionSum operator+(const PartitionSum& a, const PartitionSum& b) {
    PartitionSum r = a;
    for (const auto& [p, c] : b.terms_) r.add(p, c);
    return r;
}

PartitionSum operator-(const PartitionSum& a, const PartitionSum& b) {
    PartitionSum r = a;
    for (const auto& [p, c] : b.terms_) r.add(p, -c);
    return r;
}

std::string PartitionSum::str() const {
    if (terms_.empty()) return "0";
    std::vector<const std::map<Partition, Int>::value_type*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](const auto* x, const auto* y) {
        if (x->first.size() != y->first.size()) return x->first.size() < y->first.size();
        return y->first < x->first;
    });
    std::string s;
    for (const auto* t : order) {
        if (!s.empty()) s += " ";
        const Int& c = t->second;
        s += c < 0 ? "-" : "+";
        s += (c < 0 ? -c : c).str() + "*" + t->first.str();
    }
    return s;
}

PartitionSum PartitionSum::parse(const std::string& text) {
    PartitionSum r;
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos < text.size() && text[pos] == '0') {
        size_t rest = pos + 1;
        while (rest < text.size() && std::isspace(static_cast<unsigned char>(text[rest]))) ++rest;
        if (rest == text.size()) return r;
    }
    while (pos < text.size()) {
        skip_ws();
        if (pos >= text.size()) break;
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip_ws();
        }
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        Int c = pos > start ? Int(text.substr(start, pos - start)) : Int(1);
        skip_ws();
        if (pos < text.size() && text[pos] == '*') {
            ++pos;
            skip_ws();
        }
        if (pos >= text.size() || text[pos] != '[')
            throw std::invalid_argument("expected partition");
        size_t close = text.find(']', pos);
        if (close == std::string::npos) throw std::invalid_argument("unterminated partition");
        r.add(Partition::parse(text.substr(pos, close - pos + 1)), sign * c);
        pos = close + 1;
    }
    return r;
}

SkewPoly odd_complete(int n, int k) {
    if (k < 0) return SkewPoly(n);
    SkewPoly h = SkewPoly::one(n);
    std::vector<SkewPoly> hs{h};
    for (int m = 1; m <= k; ++m) {
        SkewPoly acc(n);
        for (int i = 1; i <= m; ++i)
            acc += Int(neg_one_pow(i + choose2(i))) * (odd_elementary(n, i) * hs[m - i]);
        hs.push_back(-acc);
    }
    return hs[k];
}

namespace {

std::vector<int> staircase(int n) {
    std::vector<int> d(n);
    for (int i = 0; i < n; ++i) d[i] = n - 1 - i;
    return d;
}

std::vector<int> padded(const Partition& p, int n) {
    std::vector<int> e(n, 0);
    for (int i = 0; i < p.length(); ++i) e[i] = p.parts[i];
    return e;
}

SkewPoly compute_schur(int n, const Partition& lambda, SchurVariant v) {
    const auto w0word = longest_word(n);
    switch (v) {
    case SchurVariant::untwisted: {
        SkewPoly m = SkewPoly::monomial(n, staircase(n)) * SkewPoly::monomial(n, padded(lambda, n));
        return divided_difference_word(w0word, m.theta()).theta().apply_w0();
    }
    case SchurVariant::twisted:
        return compute_schur(n, lambda, SchurVariant::untwisted).theta();
    case SchurVariant::hat: {
        std::vector<int> e(n);
        for (int i = 0; i < n; ++i) e[i] = lambda.part(n - i) + i;
        long long eta = 0;
        for (int j = 1; j <= lambda.length(); ++j)
            eta += static_cast<long long>(lambda.part(j)) * choose2(n - j);
        SkewPoly r = divided_difference_word(w0word, SkewPoly::monomial(n, e)).apply_w0().theta();
        return Int(neg_one_pow(choose3(n - 1) + eta)) * r;
    }
    case SchurVariant::hat_twisted:
        return compute_schur(n, lambda, SchurVariant::hat).theta();
    }
    throw std::logic_error("unreachable");
}

} // namespace

SkewPoly odd_schur(int n, const Partition& lambda, SchurVariant v) {
    if (lambda.length() > n) throw std::invalid_argument("partition longer than variable count");
    static std::mutex mu;
    static std::map<std::tuple<int, std::vector<int>, int>, SkewPoly> cache;
    std::tuple<int, std::vector<int>, int> key{n, lambda.parts, static_cast<int>(v)};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    SkewPoly r = compute_schur(n, lambda, v);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::move(key), r);
    return r;
}

bool is_odd_symmetric(const SkewPoly& f) { return f.theta().is_twisted_symmetric(); }

PartitionSum expand_in_schur(const SkewPoly& f, SchurVariant v) {
    const int n = f.n();
    const bool twisted = v == SchurVariant::twisted || v == SchurVariant::hat_twisted;
    if (twisted ? !f.is_twisted_symmetric() : !is_odd_symmetric(f))
        throw std::invalid_argument("polynomial is not odd symmetric");
    PartitionSum result;
    for (int m = 0; m <= f.max_exponent_degree(); ++m) {
        SkewPoly part = f.exponent_degree_part(m);
        if (part.is_zero()) continue;
        std::vector<Partition> basis = partitions_of_in_box(m, n, m);
        std::vector<SkewPoly> polys;
        polys.reserve(basis.size());
        std::map<std::vector<int>, int> row_of_monomial;
        for (const Partition& p : basis) {
            polys.push_back(odd_schur(n, p, v));
            for (const auto& [e, c] : polys.back().terms())
                row_of_monomial.emplace(e, static_cast<int>(row_of_monomial.size()));
        }
        for (const auto& [e, c] : part.terms())
            row_of_monomial.emplace(e, static_cast<int>(row_of_monomial.size()));
        IntMatrix A(static_cast<int>(row_of_monomial.size()), static_cast<int>(basis.size()));
        std::vector<Int> b(row_of_monomial.size(), Int(0));
        for (size_t j = 0; j < polys.size(); ++j)
            for (const auto& [e, c] : polys[j].terms())
                A.at(row_of_monomial.at(e), static_cast<int>(j)) = c;
        for (const auto& [e, c] : part.terms()) b[row_of_monomial.at(e)] = c;
        auto sol = solve_integral(A, b);
        if (!sol) throw std::invalid_argument("no unique integral Schur expansion");
        for (size_t j = 0; j < basis.size(); ++j) result.add(basis[j], (*sol)[j]);
    }
    return result;
}

PartitionSum schur_differential(const Partition& lambda, int max_rows) {
    PartitionSum r;
    for (int i : lambda.addable_rows()) {
        if (max_rows >= 0 && i > max_rows) continue;
        int ct = lambda.added_box_content(i);
        if (brace(ct) == 0) continue;
        r.add(lambda.add_box(i), neg_one_pow(lambda.sum_above(i) + i - 1));
    }
    return r;
}

PartitionSum schur_hat_differential(int n, const Partition& lambda) {
    PartitionSum r;
    for (int i : lambda.addable_rows()) {
        if (i > n) continue;
        int ct = lambda.added_box_content(i);
        if (brace(ct) == 0) continue;
        r.add(lambda.add_box(i),
              neg_one_pow(choose2(n - 1) + lambda.sum_below(i) + i - 1));
    }
    return r;
}

PartitionSum pieri_e1(const Partition& lambda, int max_rows) {
    PartitionSum r;
    for (int i : lambda.addable_rows()) {
        if (max_rows >= 0 && i > max_rows) continue;
        r.add(lambda.add_box(i), neg_one_pow(lambda.sum_below(i)));
    }
    return r;
}

PartitionSum pieri_hat_e1(int n, const Partition& lambda) {
    PartitionSum r;
    for (int i : lambda.addable_rows()) {
        if (i > n) continue;
        r.add(lambda.add_box(i), neg_one_pow(choose2(n - 1) + lambda.sum_below(i) + i - 1));
    }
    return r;
}

} // namespace oalg

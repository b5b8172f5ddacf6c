#include "oalg/permutation.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace oalg {

namespace {

int count_inversions(const std::vector<uint8_t>& p) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv;
}

} // namespace

SymmetricGroupTable::SymmetricGroupTable(int n) : n_(n) {
    std::vector<uint8_t> p(n);
    std::iota(p.begin(), p.end(), 1);
    do {
        index_[p] = static_cast<int>(oneline_.size());
        oneline_.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    const int sz = size();
    length_.resize(sz);
    mul_right_.assign(sz, std::vector<int>(std::max(0, n - 1)));
    for (int w = 0; w < sz; ++w) {
        length_[w] = count_inversions(oneline_[w]);
        for (int i = 1; i < n; ++i) {
            auto q = oneline_[w];
            std::swap(q[i - 1], q[i]);
            mul_right_[w][i - 1] = index_.at(q);
        }
    }

    std::iota(p.begin(), p.end(), 1);
    id_ = index_.at(p);
    std::reverse(p.begin(), p.end());
    longest_ = index_.at(p);

    // Greedy smallest-left-descent stripping yields the lex-smallest reduced word.
    words_.resize(sz);
    for (int w = 0; w < sz; ++w) {
        std::vector<uint8_t> v = oneline_[w];
        std::vector<int> word;
        std::vector<int> pos(n + 2, 0);
        while (true) {
            for (int j = 0; j < n_; ++j) pos[v[j]] = j;
            int i = 0;
            for (int k = 1; k < n_; ++k)
                if (pos[k] > pos[k + 1]) {
                    i = k;
                    break;
                }
            if (i == 0) break;
            word.push_back(i);
            std::swap(v[pos[i]], v[pos[i + 1]]);
        }
        words_[w] = std::move(word);
        assert(static_cast<int>(words_[w].size()) == length_[w]);
    }

    word_signs_.resize(sz);
    append_sign_.assign(sz, std::vector<int>(std::max(0, n - 1), 0));
    for (int w = 0; w < sz; ++w)
        for (int i = 1; i < n; ++i) {
            if (right_descent(w, i)) continue;
            std::vector<int> word = words_[w];
            word.push_back(i);
            append_sign_[w][i - 1] = reduced_word_sign(mul_right(w, i), word);
        }
}

int SymmetricGroupTable::index(const std::vector<uint8_t>& oneline) const {
    return index_.at(oneline);
}

int SymmetricGroupTable::reduced_word_sign(int w, const std::vector<int>& word) const {
    auto& signs = word_signs_[w];
    if (signs.empty()) {
        // BFS over the Matsumoto graph of reduced words of w, from the canonical word.
        signs[words_[w]] = 1;
        std::deque<std::vector<int>> queue{words_[w]};
        while (!queue.empty()) {
            std::vector<int> cur = queue.front();
            queue.pop_front();
            const int s = signs.at(cur);
            const int k = static_cast<int>(cur.size());
            auto visit = [&](std::vector<int>&& next, int edge_sign) {
                auto it = signs.find(next);
                if (it == signs.end()) {
                    signs[next] = s * edge_sign;
                    queue.push_back(std::move(next));
                } else if (it->second != s * edge_sign) {
                    // Sign path-independence is what makes ± ∂_w well defined.
                    throw std::logic_error("reduced-word sign is path dependent");
                }
            };
            for (int t = 0; t + 1 < k; ++t) {
                if (std::abs(cur[t] - cur[t + 1]) >= 2) {
                    auto next = cur;
                    std::swap(next[t], next[t + 1]);
                    visit(std::move(next), -1);
                }
            }
            for (int t = 0; t + 2 < k; ++t) {
                if (cur[t] == cur[t + 2] && std::abs(cur[t] - cur[t + 1]) == 1) {
                    // (i, j, i) -> (j, i, j)
                    auto next = cur;
                    next[t] = cur[t + 1];
                    next[t + 1] = cur[t];
                    next[t + 2] = cur[t + 1];
                    visit(std::move(next), 1);
                }
            }
        }
    }
    auto it = signs.find(word);
    if (it == signs.end()) throw std::invalid_argument("not a reduced word of w");
    return it->second;
}

std::pair<int, int> SymmetricGroupTable::normalize_word(const std::vector<int>& word) const {
    int w = id_, sign = 1;
    for (int letter : word) {
        if (right_descent(w, letter)) return {id_, 0};
        sign *= append_sign(w, letter);
        w = mul_right(w, letter);
    }
    return {w, sign};
}

const SymmetricGroupTable& SymmetricGroupTable::get(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<SymmetricGroupTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, std::unique_ptr<SymmetricGroupTable>(new SymmetricGroupTable(n)))
                 .first;
    return *it->second;
}

std::vector<int> longest_word(int n) {
    std::vector<int> word;
    for (int k = 1; k < n; ++k)
        for (int i = k; i >= 1; --i) word.push_back(i);
    return word;
}

std::vector<int> block_transposition_word(int a, int b) {
    std::vector<int> word;
    for (int j = 1; j <= a; ++j)
        for (int i = b + j - 1; i >= j; --i) word.push_back(i);
    return word;
}

std::vector<uint8_t> block_transposition_oneline(int a, int b) {
    std::vector<uint8_t> p;
    for (int i = 1; i <= a; ++i) p.push_back(static_cast<uint8_t>(b + i));
    for (int i = 1; i <= b; ++i) p.push_back(static_cast<uint8_t>(i));
    return p;
}

} // namespace oalg

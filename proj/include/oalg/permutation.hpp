#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace oalg {

/// Precomputed data for one symmetric group S_n: indexing of all n! elements,
/// lengths, lex-smallest reduced words, and the signs relating reduced words of
/// the odd divided-difference generators under braid / far-commutation moves.
///
/// Word convention: a word is a sequence of letters i in [1, n-1], standing for
/// the product s_{i_1} ∘ ... ∘ s_{i_k} (function composition, leftmost outermost).
/// Appending a letter on the right swaps the entries at positions i, i+1 of the
/// one-line form.
class SymmetricGroupTable {
public:
    static const SymmetricGroupTable& get(int n);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int size() const { return static_cast<int>(oneline_.size()); }
    [[nodiscard]] int identity() const { return id_; }
    [[nodiscard]] int longest() const { return longest_; }

    [[nodiscard]] int index(const std::vector<uint8_t>& oneline) const;
    [[nodiscard]] const std::vector<uint8_t>& oneline(int w) const { return oneline_[w]; }
    [[nodiscard]] int length(int w) const { return length_[w]; }

    /// Index of w ∘ s_i (swap positions i, i+1 in one-line form), i in [1, n-1].
    [[nodiscard]] int mul_right(int w, int i) const { return mul_right_[w][i - 1]; }
    [[nodiscard]] bool right_descent(int w, int i) const {
        return oneline_[w][i - 1] > oneline_[w][i];
    }

    /// Lex-smallest reduced word of w (letters 1..n-1), built by greedy
    /// smallest-left-descent stripping.
    [[nodiscard]] const std::vector<int>& canonical_word(int w) const { return words_[w]; }

    /// Sign σ with ∂_{canonical(w)} ∂_i = σ ∂_{canonical(w s_i)}.
    /// Precondition: i is not a right descent of w.
    [[nodiscard]] int append_sign(int w, int i) const { return append_sign_[w][i - 1]; }

    /// Normalize an arbitrary word of ∂-letters to ± a canonical basis label.
    /// Returns {w, sign}; sign 0 means the product is zero in the algebra.
    [[nodiscard]] std::pair<int, int> normalize_word(const std::vector<int>& word) const;

    /// Sign of a reduced word of w relative to the canonical word, via the
    /// Matsumoto graph (braid moves keep the sign, far commutations flip it).
    /// Asserts path-independence of the sign on every revisited node.
    [[nodiscard]] int reduced_word_sign(int w, const std::vector<int>& word) const;

private:
    explicit SymmetricGroupTable(int n);

    int n_;
    int id_{0};
    int longest_{0};
    std::vector<std::vector<uint8_t>> oneline_;
    std::map<std::vector<uint8_t>, int> index_;
    std::vector<int> length_;
    std::vector<std::vector<int>> mul_right_;
    std::vector<std::vector<int>> words_;
    std::vector<std::vector<int>> append_sign_;
    mutable std::vector<std::map<std::vector<int>, int>> word_signs_;
};

/// Lex-smallest reduced word of the longest element of S_n:
/// (1, 2,1, 3,2,1, ..., n-1,...,1). Usable without building the n! table.
std::vector<int> longest_word(int n);

/// Canonical reduced word of the block transposition w_{a,b} in S_{a+b}
/// (one-line b+1,...,b+a,1,...,b): the concatenation over j = 1..a of the
/// descending runs (b+j-1, b+j-2, ..., j). Length ab.
std::vector<int> block_transposition_word(int a, int b);

/// One-line form of w_{a,b}.
std::vector<uint8_t> block_transposition_oneline(int a, int b);

} // namespace oalg

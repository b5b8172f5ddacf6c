#pragma once

#include "oalg/coeff.hpp"

#include <optional>
#include <vector>

namespace oalg {

/// Dense integer matrix in row-major order.
struct IntMatrix {
    int rows{0};
    int cols{0};
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Int(0)) {}
    Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

/// Solves A x = b exactly over the rationals and returns x when it exists and
/// is integral; nullopt when the system is inconsistent or the solution is
/// non-integral or non-unique in a way that admits no integral representative.
std::optional<std::vector<Int>> solve_integral(const IntMatrix& A, const std::vector<Int>& b);

/// Smith normal form diagonal of A (nonzero entries d_1 | d_2 | ..., then zeros).
std::vector<Int> smith_diagonal(IntMatrix A);

/// Rank of A over the rationals.
int rank(IntMatrix A);

/// Integer vectors spanning the rational null space {x : A x = 0}.
std::vector<std::vector<Int>> kernel_basis(const IntMatrix& A);

/// Rank of A over F_p.
int rank_mod_p(const IntMatrix& A, int p);

/// Vectors with entries in [0, p) spanning the null space of A over F_p.
std::vector<std::vector<int>> kernel_basis_mod_p(const IntMatrix& A, int p);

/// Incremental fraction-free row reduction over the rationals. absorb()
/// reduces the vector against the rows seen so far and reports whether it
/// enlarged the span.
class RatRowReducer {
public:
    bool absorb(std::vector<Int> v);
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    std::vector<std::vector<Int>> rows_; // echelon rows, sorted by pivot column
    std::vector<int> pivots_;
};

/// Incremental row reduction over F_p.
class FpRowReducer {
public:
    explicit FpRowReducer(int p) : p_(p) {}
    bool absorb(std::vector<int> v);
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    int p_;
    std::vector<std::vector<int>> rows_;
    std::vector<int> pivots_;
};

} // namespace oalg

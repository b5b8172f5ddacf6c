#include "oalg/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <stdexcept>

namespace oalg {

namespace {

using Rat = boost::multiprecision::cpp_rational;

} // namespace

std::optional<std::vector<Int>> solve_integral(const IntMatrix& A, const std::vector<Int>& b) {
    if (static_cast<int>(b.size()) != A.rows) throw std::invalid_argument("rhs size mismatch");
    const int r = A.rows, c = A.cols;
    std::vector<std::vector<Rat>> m(r, std::vector<Rat>(c + 1));
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < c; ++j) m[i][j] = Rat(A.at(i, j));
        m[i][c] = Rat(b[i]);
    }
    std::vector<int> pivot_col_of_row(r, -1);
    int row = 0;
    for (int col = 0; col < c && row < r; ++col) {
        int sel = -1;
        for (int i = row; i < r; ++i)
            if (m[i][col] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[sel], m[row]);
        Rat inv = m[row][col];
        for (int j = col; j <= c; ++j) m[row][j] /= inv;
        for (int i = 0; i < r; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (int j = col; j <= c; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_col_of_row[row] = col;
        ++row;
    }
    // Inconsistent if a zero row has nonzero rhs.
    for (int i = row; i < r; ++i)
        if (m[i][c] != 0) return std::nullopt;
    // Underdetermined columns make the expansion non-unique.
    if (row < c) return std::nullopt;
    std::vector<Int> x(c, Int(0));
    for (int i = 0; i < row; ++i) {
        const Rat& v = m[i][c];
        if (denominator(v) != 1) return std::nullopt;
        x[pivot_col_of_row[i]] = numerator(v);
    }
    return x;
}

std::vector<Int> smith_diagonal(IntMatrix A) {
    const int r = A.rows, c = A.cols;
    std::vector<Int> diag;
    int t = 0;
    auto nonzero_below = [&](int t0) {
        for (int i = t0; i < r; ++i)
            for (int j = t0; j < c; ++j)
                if (A.at(i, j) != 0) return std::pair{i, j};
        return std::pair{-1, -1};
    };
    while (t < r && t < c) {
        auto [pi, pj] = nonzero_below(t);
        if (pi < 0) break;
        // Move a nonzero entry to (t, t).
        if (pi != t)
            for (int j = 0; j < c; ++j) std::swap(A.at(pi, j), A.at(t, j));
        if (pj != t)
            for (int i = 0; i < r; ++i) std::swap(A.at(i, pj), A.at(i, t));
        while (true) {
            // Clear column t by Euclidean row steps.
            bool touched = false;
            for (int i = t + 1; i < r; ++i) {
                if (A.at(i, t) == 0) continue;
                if (A.at(i, t) % A.at(t, t) != 0) {
                    Int q = A.at(i, t) / A.at(t, t);
                    for (int j = t; j < c; ++j) A.at(i, j) -= q * A.at(t, j);
                    for (int j = t; j < c; ++j) std::swap(A.at(i, j), A.at(t, j));
                    touched = true;
                } else {
                    Int q = A.at(i, t) / A.at(t, t);
                    for (int j = t; j < c; ++j) A.at(i, j) -= q * A.at(t, j);
                }
            }
            for (int j = t + 1; j < c; ++j) {
                if (A.at(t, j) == 0) continue;
                if (A.at(t, j) % A.at(t, t) != 0) {
                    Int q = A.at(t, j) / A.at(t, t);
                    for (int i = t; i < r; ++i) A.at(i, j) -= q * A.at(i, t);
                    for (int i = t; i < r; ++i) std::swap(A.at(i, j), A.at(i, t));
                    touched = true;
                } else {
                    Int q = A.at(t, j) / A.at(t, t);
                    for (int i = t; i < r; ++i) A.at(i, j) -= q * A.at(i, t);
                }
            }
            if (touched) continue;
            // Row and column t are clear; enforce divisibility of the rest.
            bool fixed = true;
            for (int i = t + 1; i < r && fixed; ++i)
                for (int j = t + 1; j < c && fixed; ++j)
                    if (A.at(i, j) % A.at(t, t) != 0) {
                        for (int jj = t; jj < c; ++jj) A.at(t, jj) += A.at(i, jj);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (A.at(t, t) < 0)
            for (int j = t; j < c; ++j) A.at(t, j) = -A.at(t, j);
        diag.push_back(A.at(t, t));
        ++t;
    }
    return diag;
}

std::vector<std::vector<Int>> kernel_basis(const IntMatrix& A) {
    const int r = A.rows, c = A.cols;
    std::vector<std::vector<Rat>> m(r, std::vector<Rat>(c));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m[i][j] = Rat(A.at(i, j));
    std::vector<int> pivot_row_of_col(c, -1);
    int row = 0;
    for (int col = 0; col < c && row < r; ++col) {
        int sel = -1;
        for (int i = row; i < r; ++i)
            if (m[i][col] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[sel], m[row]);
        Rat inv = m[row][col];
        for (int j = col; j < c; ++j) m[row][j] /= inv;
        for (int i = 0; i < r; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (int j = col; j < c; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_row_of_col[col] = row;
        ++row;
    }
    std::vector<std::vector<Int>> basis;
    for (int col = 0; col < c; ++col) {
        if (pivot_row_of_col[col] >= 0) continue;
        // Free column: set it to 1, solve pivots, clear denominators.
        std::vector<Rat> v(c, Rat(0));
        v[col] = 1;
        for (int j = 0; j < c; ++j) {
            int pr = pivot_row_of_col[j];
            if (pr >= 0) v[j] = -m[pr][col];
        }
        Int scale(1);
        for (int j = 0; j < c; ++j) {
            Int den = denominator(v[j]);
            scale = scale / gcd(scale, den) * den;
        }
        std::vector<Int> w(c);
        for (int j = 0; j < c; ++j) {
            Rat scaled = v[j] * Rat(scale);
            w[j] = numerator(scaled);
        }
        basis.push_back(std::move(w));
    }
    return basis;
}

namespace {

int mod_p(const Int& x, int p) {
    Int r = x % p;
    if (r < 0) r += p;
    return static_cast<int>(r);
}

int inverse_mod_p(int a, int p) {
    // p is prime and a is nonzero mod p.
    int t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        int q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    return ((t % p) + p) % p;
}

} // namespace

int rank_mod_p(const IntMatrix& A, int p) {
    FpRowReducer red(p);
    for (int i = 0; i < A.rows; ++i) {
        std::vector<int> v(A.cols);
        for (int j = 0; j < A.cols; ++j) v[j] = mod_p(A.at(i, j), p);
        red.absorb(std::move(v));
    }
    return red.rank();
}

std::vector<std::vector<int>> kernel_basis_mod_p(const IntMatrix& A, int p) {
    const int r = A.rows, c = A.cols;
    std::vector<std::vector<int>> m(r, std::vector<int>(c));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m[i][j] = mod_p(A.at(i, j), p);
    std::vector<int> pivot_row_of_col(c, -1);
    int row = 0;
    for (int col = 0; col < c && row < r; ++col) {
        int sel = -1;
        for (int i = row; i < r; ++i)
            if (m[i][col] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[sel], m[row]);
        int inv = inverse_mod_p(m[row][col], p);
        for (int j = col; j < c; ++j) m[row][j] = m[row][j] * inv % p;
        for (int i = 0; i < r; ++i) {
            if (i == row || m[i][col] == 0) continue;
            int f = m[i][col];
            for (int j = col; j < c; ++j) m[i][j] = ((m[i][j] - f * m[row][j]) % p + p) % p;
        }
        pivot_row_of_col[col] = row;
        ++row;
    }
    std::vector<std::vector<int>> basis;
    for (int col = 0; col < c; ++col) {
        if (pivot_row_of_col[col] >= 0) continue;
        std::vector<int> v(c, 0);
        v[col] = 1;
        for (int j = 0; j < c; ++j) {
            int pr = pivot_row_of_col[j];
            if (pr >= 0) v[j] = (p - m[pr][col]) % p;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool RatRowReducer::absorb(std::vector<Int> v) {
    // Rows are kept in reduced echelon form: every pivot column is zero in
    // all other rows, so one forward pass fully reduces v.
    auto divide_content = [](std::vector<Int>& w) {
        Int g(0);
        for (const Int& x : w) g = gcd(g, x);
        if (g > 1)
            for (Int& x : w) x /= g;
    };
    for (size_t k = 0; k < rows_.size(); ++k) {
        int c = pivots_[k];
        if (v[c] == 0) continue;
        const Int piv = rows_[k][c];
        const Int f = v[c];
        for (size_t j = 0; j < v.size(); ++j) v[j] = piv * v[j] - f * rows_[k][j];
        divide_content(v);
    }
    int c = -1;
    for (size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0) {
            c = static_cast<int>(j);
            break;
        }
    if (c < 0) return false;
    if (v[c] < 0)
        for (Int& x : v) x = -x;
    for (size_t k = 0; k < rows_.size(); ++k) {
        if (rows_[k][c] == 0) continue;
        const Int piv = v[c];
        const Int f = rows_[k][c];
        for (size_t j = 0; j < v.size(); ++j) rows_[k][j] = piv * rows_[k][j] - f * v[j];
        divide_content(rows_[k]);
    }
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < c) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, c);
    return true;
}

bool FpRowReducer::absorb(std::vector<int> v) {
    // Same invariant as RatRowReducer: stored rows are fully reduced with
    // unit pivots.
    for (int& x : v) x = ((x % p_) + p_) % p_;
    for (size_t k = 0; k < rows_.size(); ++k) {
        int c = pivots_[k];
        if (v[c] == 0) continue;
        int f = v[c];
        for (size_t j = 0; j < v.size(); ++j) v[j] = ((v[j] - f * rows_[k][j]) % p_ + p_) % p_;
    }
    int c = -1;
    for (size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0) {
            c = static_cast<int>(j);
            break;
        }
    if (c < 0) return false;
    int inv = inverse_mod_p(v[c], p_);
    for (int& x : v) x = x * inv % p_;
    for (size_t k = 0; k < rows_.size(); ++k) {
        if (rows_[k][c] == 0) continue;
        int f = rows_[k][c];
        for (size_t j = 0; j < v.size(); ++j)
            rows_[k][j] = ((rows_[k][j] - f * v[j]) % p_ + p_) % p_;
    }
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < c) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, c);
    return true;
}

int rank(IntMatrix A) {
    const int r = A.rows, c = A.cols;
    int rk = 0;
    std::vector<std::vector<Rat>> m(r, std::vector<Rat>(c));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m[i][j] = Rat(A.at(i, j));
    int row = 0;
    for (int col = 0; col < c && row < r; ++col) {
        int sel = -1;
        for (int i = row; i < r; ++i)
            if (m[i][col] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[sel], m[row]);
        for (int i = row + 1; i < r; ++i) {
            if (m[i][col] == 0) continue;
            Rat f = m[i][col] / m[row][col];
            for (int j = col; j < c; ++j) m[i][j] -= f * m[row][j];
        }
        ++row;
        ++rk;
    }
    return rk;
}

} // namespace oalg

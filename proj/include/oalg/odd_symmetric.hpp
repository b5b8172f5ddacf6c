#pragma once

#include "oalg/coeff.hpp"
#include "oalg/partition.hpp"
#include "oalg/skew_poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace oalg {

/// Formal integer combination of partitions, e.g. a Schur-basis expansion.
class PartitionSum {
public:
    PartitionSum() = default;

    void add(const Partition& p, const Int& c);
    [[nodiscard]] const std::map<Partition, Int>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] Int coeff(const Partition& p) const;
    friend bool operator==(const PartitionSum& a, const PartitionSum& b) {
        return a.terms_ == b.terms_;
    }
    friend PartitionSum operator+(const PartitionSum& a, const PartitionSum& b);
    friend PartitionSum operator-(const PartitionSum& a, const PartitionSum& b);

    /// "+1*[2] +1*[1,1]"; size ascending, then parts descending lex; zero is "0".
    [[nodiscard]] std::string str() const;
    static PartitionSum parse(const std::string& text);

private:
    std::map<Partition, Int> terms_;
};

enum class SchurVariant { untwisted, twisted, hat, hat_twisted };

/// k-th odd complete symmetric polynomial, from the recursion
/// sum_{i=0}^k (-1)^(i + C(i,2)) e_i h_{k-i} = 0 with h_0 = 1.
SkewPoly odd_complete(int n, int k);

/// Odd Schur polynomial in OPol_n; requires length(lambda) <= n.
///   untwisted    s      = w0 theta d_{w0} (theta(x^delta x^lambda))
///   twisted      s~     = theta(s)
///   hat          s^     = (-1)^(C(n-1,3)+eta) theta w0 d_{w0} (x^(rev lambda + (0..n-1)))
///                         with eta = sum_j lambda_j C(n-j,2); equivalently
///                         s~^ = (-1)^(sum_{i<j} lambda_i lambda_j) d_{w0}(x^lambda x^delta).
///   hat-twisted  s~^    = theta(s^)
SkewPoly odd_schur(int n, const Partition& lambda, SchurVariant v = SchurVariant::untwisted);

/// True iff f lies in the untwisted odd symmetric subring OLambda_n
/// (theta(f) is killed by every odd divided difference).
bool is_odd_symmetric(const SkewPoly& f);

/// Expansion of f in the chosen Schur family, solved degreewise as an exact
/// integer linear system. Throws when f is not (twisted) symmetric for the
/// family or the system has no unique integral solution.
PartitionSum expand_in_schur(const SkewPoly& f, SchurVariant v = SchurVariant::untwisted);

/// d(s_lambda) in the Schur basis: sum over mu = lambda + box in row i <= max_rows
/// of (-1)^(|lambda/i| + i - 1) {ct(box)} s_mu. Pass max_rows large (or
/// no cap via max_rows < 0) for the stable limit.
PartitionSum schur_differential(const Partition& lambda, int max_rows = -1);

/// d(s^_lambda) for the hat family in OPol_n:
/// (-1)^C(n-1,2) sum (-1)^(|i/lambda| + i - 1) {ct(box)} s^_mu.
PartitionSum schur_hat_differential(int n, const Partition& lambda);

/// Right Pieri rule s~_lambda e~_1 = sum (-1)^|i/lambda| s~_mu (rows <= max_rows).
PartitionSum pieri_e1(const Partition& lambda, int max_rows = -1);

/// Left hat Pieri rule e~_1 s~^_lambda = sum (-1)^(C(n-1,2) + |i/lambda| + i - 1) s~^_mu.
PartitionSum pieri_hat_e1(int n, const Partition& lambda);

} // namespace oalg

#pragma once

#include "oalg/coeff.hpp"
#include "oalg/laurent.hpp"
#include "oalg/partition.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace oalg {

/// One basis label of a free dg module: a name, a quantum degree, and a
/// parity. Differentials raise qdeg by 2 and flip parity.
struct ComplexLabel {
    std::string id;
    int qdeg{0};
    int parity{0};
};

/// A finitely generated free complex with integer structure constants.
/// Labels are addressed by unique string ids; the differential is the sparse
/// matrix of arrows between them.
class FreeComplex {
public:
    /// Adds a label and returns its index. Throws on duplicate ids.
    int add_label(const std::string& id, int qdeg, int parity);

    /// Accumulates coeff onto the arrow from -> to. Throws unless the target
    /// sits in qdeg + 2 with opposite parity.
    void add_arrow(int from, int to, const Int& coeff);
    void add_arrow(const std::string& from, const std::string& to, const Int& coeff);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<ComplexLabel>& labels() const { return labels_; }
    const ComplexLabel& label(int i) const { return labels_[static_cast<size_t>(i)]; }
    /// Index of the label with the given id, -1 when absent.
    int index_of(const std::string& id) const;
    const std::map<std::pair<int, int>, Int>& arrows() const { return arrows_; }
    Int coeff(int from, int to) const;

    bool differential_squares_to_zero() const;

    /// Same labels and arrows with every qdeg shifted and parity flipped.
    FreeComplex shifted(int qdeg_shift, int parity_shift) const;

    /// Sum of q^{qdeg} over all labels.
    LaurentInt graded_rank() const;

    /// Serializes as {"labels":[{"id","qdeg","parity"}...],
    /// "differential":[{"from","to","coeff"}...]} with labels ordered by
    /// (qdeg, id) and arrows by (from, to) in that label order.
    std::string to_json() const;
    static FreeComplex from_json(const std::string& text);

private:
    std::vector<ComplexLabel> labels_;
    std::map<std::string, int> index_;
    std::map<std::pair<int, int>, Int> arrows_;
};

/// Cohomology in one quantum degree. dim is the rank over the coefficient
/// domain (the free rank in the integral case); torsion lists the invariant
/// factors > 1 (integral case only); representatives hold one cocycle per
/// free generator.
struct CohomologyGroup {
    int qdeg{0};
    int dim{0};
    std::vector<Int> torsion;
    std::vector<std::string> representatives;
};

struct Cohomology {
    std::vector<CohomologyGroup> groups; // ascending qdeg, one per degree present
    int total_dim() const;
    const CohomologyGroup* group(int qdeg) const;
};

Cohomology cohomology_rational(const FreeComplex& c);
Cohomology cohomology_integral(const FreeComplex& c);
Cohomology cohomology_mod_p(const FreeComplex& c, int p);

/// CSV table "degree,dimension,torsion,representatives", one row per degree.
std::string cohomology_csv(const Cohomology& h);

struct HypercubeComponent {
    std::vector<std::string> labels; // members sorted by (qdeg, id)
    bool is_cube{false};
    int dimension{-1};
    std::string initial;
    std::string failure; // reason when certification fails
};

struct HypercubeDecomposition {
    std::vector<HypercubeComponent> components;
    bool all_cubes() const;
};

/// Splits the label set into connected components of the arrow graph and
/// certifies each one as a hypercube complex (unique initial vertex, levels
/// given by reachability from the initial vertex's out-neighbours, cover
/// relations as the only arrows). Requires every coefficient to be a unit;
/// throws otherwise. Certification failures are reported, not thrown.
HypercubeDecomposition hypercube_decompose(const FreeComplex& c);

/// The k-dimensional hypercube complex: labels are bitstrings of length k,
/// arrows toggle a 0 to a 1 with sign (-1)^{number of earlier 1s}.
FreeComplex hypercube_complex(int k);

/// Tensor product with the sign rule d(a ox b) = da ox b + (-1)^{p(a)} a ox db.
/// Ids concatenate, so hypercube_complex(a+b) equals
/// tensor_complex(hypercube_complex(a), hypercube_complex(b)) on the nose.
FreeComplex tensor_complex(const FreeComplex& a, const FreeComplex& b);

/// The odd symmetric algebra as a complex on Schur labels of size <= max_size
/// (at most max_rows rows when max_rows >= 0). Arrows leaving the top size
/// are dropped, so callers should build one size beyond what they inspect.
FreeComplex olambda_complex(int max_size, int max_rows = -1);

/// A free p-complex: labels with a quantum degree and a differential over
/// F_p satisfying d^p = 0. Arrows raise qdeg by 2.
class PComplex {
public:
    explicit PComplex(int p);

    int p() const { return p_; }
    int add_label(const std::string& id, int qdeg);
    void add_arrow(int from, int to, const Int& coeff);
    void add_arrow(const std::string& from, const std::string& to, const Int& coeff);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<ComplexLabel>& labels() const { return labels_; }
    const ComplexLabel& label(int i) const { return labels_[static_cast<size_t>(i)]; }
    int index_of(const std::string& id) const;
    /// Arrow coefficients reduced to [0, p).
    const std::map<std::pair<int, int>, int>& arrows() const { return arrows_; }

    bool dth_power_vanishes() const;

    /// Graded dimensions of the k-th slash cohomology
    /// Ker(d^{k+1}) / (Im(d^{p-1-k}) + Ker(d^k)), for 0 <= k <= p-1.
    /// Degrees within distance 2(p-1) of the top label degree see a truncated
    /// differential, so callers should build beyond the degrees they inspect.
    std::map<int, int> slash_dims(int k) const;

private:
    int p_;
    std::vector<ComplexLabel> labels_;
    std::map<std::string, int> index_;
    std::map<std::pair<int, int>, int> arrows_;
};

/// The indecomposable p-complex with basis v0, ..., vi (qdeg 0, 2, ..., 2i)
/// and d(vj) = v{j+1}. Requires 0 <= i <= p-1.
PComplex cyclic_pcomplex(int p, int i);

/// All partitions of size <= max_size tileable by p x p squares (every part
/// and every multiplicity a multiple of p), ordered by size then parts.
std::vector<Partition> lima_enumerate(int max_size, int p = 2);

/// Even symmetric functions in Schur coordinates as a p-complex:
/// d(s_lambda) = sum over addable boxes B of content(B) s_{lambda+B} mod p,
/// restricted to at most max_rows rows (unbounded when max_rows < 0) and
/// size <= max_size.
PComplex pdg_symfun_complex(int max_rows, int p, int max_size);

/// Slash cohomology tables of the even symmetric functions: k -> (qdeg ->
/// dim), built internally to size max_size + p - 1 and reported for
/// qdeg <= 2 max_size only.
std::map<int, std::map<int, int>> pdg_symfun_slash(int max_rows, int p, int max_size);

} // namespace oalg

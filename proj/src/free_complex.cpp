#include "oalg/free_complex.hpp"

#include "oalg/linalg.hpp"
#include "oalg/odd_symmetric.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace oalg {

namespace {

using ordered_json = nlohmann::ordered_json;

long long to_small(const Int& x) {
    static const Int bound = Int(1) << 62;
    if (x >= bound || x <= -bound) throw std::overflow_error("coefficient too large to serialize");
    return x.convert_to<long long>();
}

/// Indices of labels grouped by qdeg, in insertion order within each group.
template <typename Labelled>
std::map<int, std::vector<int>> degree_blocks(const Labelled& c) {
    std::map<int, std::vector<int>> blocks;
    for (int i = 0; i < c.size(); ++i) blocks[c.label(i).qdeg].push_back(i);
    return blocks;
}

} // namespace

int FreeComplex::add_label(const std::string& id, int qdeg, int parity) {
    if (index_.count(id)) throw std::invalid_argument("duplicate label id: " + id);
    int idx = static_cast<int>(labels_.size());
    labels_.push_back({id, qdeg, ((parity % 2) + 2) % 2});
    index_[id] = idx;
    return idx;
}

void FreeComplex::add_arrow(int from, int to, const Int& coeff) {
    if (from < 0 || from >= size() || to < 0 || to >= size())
        throw std::invalid_argument("arrow endpoint out of range");
    const ComplexLabel& f = labels_[static_cast<size_t>(from)];
    const ComplexLabel& t = labels_[static_cast<size_t>(to)];
    if (t.qdeg != f.qdeg + 2 || t.parity == f.parity)
        throw std::invalid_argument("arrow " + f.id + " -> " + t.id +
                                    " does not raise qdeg by 2 with a parity flip");
    auto key = std::pair{from, to};
    Int& slot = arrows_[key];
    slot += coeff;
    if (slot == 0) arrows_.erase(key);
}

void FreeComplex::add_arrow(const std::string& from, const std::string& to, const Int& coeff) {
    int f = index_of(from), t = index_of(to);
    if (f < 0) throw std::invalid_argument("unknown label id: " + from);
    if (t < 0) throw std::invalid_argument("unknown label id: " + to);
    add_arrow(f, t, coeff);
}

int FreeComplex::index_of(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
}

Int FreeComplex::coeff(int from, int to) const {
    auto it = arrows_.find({from, to});
    return it == arrows_.end() ? Int(0) : it->second;
}

bool FreeComplex::differential_squares_to_zero() const {
    std::map<int, std::vector<std::pair<int, Int>>> out;
    for (const auto& [key, c] : arrows_) out[key.first].push_back({key.second, c});
    std::map<std::pair<int, int>, Int> square;
    for (const auto& [key, c] : arrows_) {
        auto it = out.find(key.second);
        if (it == out.end()) continue;
        for (const auto& [to2, c2] : it->second) square[{key.first, to2}] += c * c2;
    }
    for (const auto& [key, c] : square)
        if (c != 0) return false;
    return true;
}

FreeComplex FreeComplex::shifted(int qdeg_shift, int parity_shift) const {
    FreeComplex out;
    for (const ComplexLabel& l : labels_)
        out.add_label(l.id, l.qdeg + qdeg_shift, l.parity + parity_shift);
    for (const auto& [key, c] : arrows_) out.add_arrow(key.first, key.second, c);
    return out;
}

LaurentInt FreeComplex::graded_rank() const {
    LaurentInt r;
    for (const ComplexLabel& l : labels_) r.add_term(l.qdeg, Int(1));
    return r;
}

std::string FreeComplex::to_json() const {
    std::vector<int> order(labels_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const ComplexLabel& la = labels_[static_cast<size_t>(a)];
        const ComplexLabel& lb = labels_[static_cast<size_t>(b)];
        return std::tie(la.qdeg, la.id) < std::tie(lb.qdeg, lb.id);
    });
    std::vector<int> pos(labels_.size());
    for (size_t i = 0; i < order.size(); ++i) pos[static_cast<size_t>(order[i])] = static_cast<int>(i);

    ordered_json j;
    j["labels"] = ordered_json::array();
    for (int i : order) {
        const ComplexLabel& l = labels_[static_cast<size_t>(i)];
        j["labels"].push_back({{"id", l.id}, {"qdeg", l.qdeg}, {"parity", l.parity}});
    }
    std::vector<std::pair<std::pair<int, int>, Int>> sorted_arrows(arrows_.begin(), arrows_.end());
    std::sort(sorted_arrows.begin(), sorted_arrows.end(), [&](const auto& a, const auto& b) {
        return std::pair{pos[static_cast<size_t>(a.first.first)], pos[static_cast<size_t>(a.first.second)]} <
               std::pair{pos[static_cast<size_t>(b.first.first)], pos[static_cast<size_t>(b.first.second)]};
    });
    j["differential"] = ordered_json::array();
    for (const auto& [key, c] : sorted_arrows)
        j["differential"].push_back({{"from", labels_[static_cast<size_t>(key.first)].id},
                                     {"to", labels_[static_cast<size_t>(key.second)].id},
                                     {"coeff", to_small(c)}});
    return j.dump(2);
}

FreeComplex FreeComplex::from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("malformed complex JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("labels") || !j["labels"].is_array() ||
        !j.contains("differential") || !j["differential"].is_array())
        throw std::invalid_argument("complex JSON must have 'labels' and 'differential' arrays");
    FreeComplex out;
    for (const auto& l : j["labels"]) {
        if (!l.is_object() || !l.contains("id") || !l["id"].is_string() || !l.contains("qdeg") ||
            !l["qdeg"].is_number_integer() || !l.contains("parity") || !l["parity"].is_number_integer())
            throw std::invalid_argument("label entries need string 'id' and integer 'qdeg', 'parity'");
        out.add_label(l["id"].get<std::string>(), l["qdeg"].get<int>(), l["parity"].get<int>());
    }
    for (const auto& a : j["differential"]) {
        if (!a.is_object() || !a.contains("from") || !a["from"].is_string() || !a.contains("to") ||
            !a["to"].is_string() || !a.contains("coeff") || !a["coeff"].is_number_integer())
            throw std::invalid_argument(
                "differential entries need string 'from', 'to' and integer 'coeff'");
        out.add_arrow(a["from"].get<std::string>(), a["to"].get<std::string>(),
                      Int(a["coeff"].get<long long>()));
    }
    return out;
}

int Cohomology::total_dim() const {
    int t = 0;
    for (const CohomologyGroup& g : groups) t += g.dim;
    return t;
}

const CohomologyGroup* Cohomology::group(int qdeg) const {
    for (const CohomologyGroup& g : groups)
        if (g.qdeg == qdeg) return &g;
    return nullptr;
}

namespace {

enum class Domain { rational, integral, mod_p };

std::string format_rep(const FreeComplex& c, const std::vector<int>& block,
                       const std::vector<Int>& v) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < block.size(); ++i) {
        if (v[i] == 0) continue;
        if (!first) os << ' ';
        os << (v[i] > 0 ? '+' : '-') << abs(v[i]) << '*'
           << c.label(block[i]).id;
        first = false;
    }
    if (first) os << '0';
    return os.str();
}

IntMatrix block_matrix(const FreeComplex& c, const std::vector<int>& src,
                       const std::vector<int>& dst) {
    IntMatrix m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (size_t t = 0; t < dst.size(); ++t)
        for (size_t s = 0; s < src.size(); ++s) m.at(static_cast<int>(t), static_cast<int>(s)) = c.coeff(src[s], dst[t]);
    return m;
}

Cohomology cohomology_impl(const FreeComplex& c, Domain dom, int p) {
    auto blocks = degree_blocks(c);
    const std::vector<int> empty;
    auto block_at = [&](int q) -> const std::vector<int>& {
        auto it = blocks.find(q);
        return it == blocks.end() ? empty : it->second;
    };
    Cohomology result;
    for (const auto& [q, block] : blocks) {
        const std::vector<int>& below = block_at(q - 2);
        const std::vector<int>& above = block_at(q + 2);
        IntMatrix d_out = block_matrix(c, block, above);
        IntMatrix d_in = block_matrix(c, below, block);
        CohomologyGroup g;
        g.qdeg = q;
        if (dom == Domain::mod_p) {
            std::vector<std::vector<int>> ker = kernel_basis_mod_p(d_out, p);
            FpRowReducer red(p);
            for (size_t s = 0; s < below.size(); ++s) {
                std::vector<int> col(block.size());
                for (size_t t = 0; t < block.size(); ++t) {
                    Int r = d_in.at(static_cast<int>(t), static_cast<int>(s)) % p;
                    if (r < 0) r += p;
                    col[t] = r.convert_to<int>();
                }
                red.absorb(std::move(col));
            }
            for (const auto& v : ker) {
                if (!red.absorb(v)) continue;
                std::vector<Int> w(v.size());
                for (size_t i = 0; i < v.size(); ++i) w[i] = v[i];
                g.representatives.push_back(format_rep(c, block, w));
                ++g.dim;
            }
        } else {
            std::vector<std::vector<Int>> ker = kernel_basis(d_out);
            RatRowReducer red;
            for (size_t s = 0; s < below.size(); ++s) {
                std::vector<Int> col(block.size());
                for (size_t t = 0; t < block.size(); ++t)
                    col[t] = d_in.at(static_cast<int>(t), static_cast<int>(s));
                red.absorb(std::move(col));
            }
            for (const auto& v : ker) {
                if (!red.absorb(v)) continue;
                g.representatives.push_back(format_rep(c, block, v));
                ++g.dim;
            }
            if (dom == Domain::integral) {
                for (const Int& d : smith_diagonal(d_in))
                    if (d > 1) g.torsion.push_back(d);
            }
        }
        result.groups.push_back(std::move(g));
    }
    return result;
}

} // namespace

Cohomology cohomology_rational(const FreeComplex& c) {
    return cohomology_impl(c, Domain::rational, 0);
}

Cohomology cohomology_integral(const FreeComplex& c) {
    return cohomology_impl(c, Domain::integral, 0);
}

Cohomology cohomology_mod_p(const FreeComplex& c, int p) {
    if (p < 2) throw std::invalid_argument("modulus must be a prime >= 2");
    return cohomology_impl(c, Domain::mod_p, p);
}

std::string cohomology_csv(const Cohomology& h) {
    std::ostringstream os;
    os << "degree,dimension,torsion,representatives\n";
    for (const CohomologyGroup& g : h.groups) {
        os << g.qdeg << ',' << g.dim << ",\"";
        for (size_t i = 0; i < g.torsion.size(); ++i) {
            if (i) os << ';';
            os << g.torsion[i];
        }
        os << "\",\"";
        for (size_t i = 0; i < g.representatives.size(); ++i) {
            if (i) os << ';';
            os << g.representatives[i];
        }
        os << "\"\n";
    }
    return os.str();
}

bool HypercubeDecomposition::all_cubes() const {
    for (const HypercubeComponent& c : components)
        if (!c.is_cube) return false;
    return true;
}

namespace {

int uf_find(std::vector<int>& parent, int x) {
    while (parent[static_cast<size_t>(x)] != x) {
        parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        x = parent[static_cast<size_t>(x)];
    }
    return x;
}

} // namespace

HypercubeDecomposition hypercube_decompose(const FreeComplex& c) {
    for (const auto& [key, coeff] : c.arrows())
        if (coeff != 1 && coeff != -1)
            throw std::invalid_argument("hypercube decomposition requires coefficients in {-1, 0, 1}");
    std::vector<int> parent(static_cast<size_t>(c.size()));
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& [key, coeff] : c.arrows()) {
        int a = uf_find(parent, key.first), b = uf_find(parent, key.second);
        if (a != b) parent[static_cast<size_t>(a)] = b;
    }
    std::map<int, std::vector<int>> members;
    for (int i = 0; i < c.size(); ++i) members[uf_find(parent, i)].push_back(i);

    auto label_key = [&](int i) {
        return std::pair{c.label(i).qdeg, c.label(i).id};
    };

    HypercubeDecomposition result;
    for (auto& [root, mem] : members) {
        std::sort(mem.begin(), mem.end(),
                  [&](int a, int b) { return label_key(a) < label_key(b); });
        HypercubeComponent comp;
        for (int i : mem) comp.labels.push_back(c.label(i).id);

        std::map<int, std::vector<int>> out;
        std::map<int, int> indeg;
        for (int i : mem) {
            out[i];
            indeg[i];
        }
        int arrow_count = 0;
        for (const auto& [key, coeff] : c.arrows()) {
            if (!out.count(key.first)) continue;
            out[key.first].push_back(key.second);
            ++indeg[key.second];
            ++arrow_count;
        }

        std::vector<int> sources;
        for (int i : mem)
            if (indeg[i] == 0) sources.push_back(i);
        if (sources.size() != 1) {
            comp.failure = sources.empty() ? "no source vertex" : "multiple source vertices";
            result.components.push_back(std::move(comp));
            continue;
        }
        int v0 = sources[0];
        std::vector<int> urns = out[v0];
        std::sort(urns.begin(), urns.end(),
                  [&](int a, int b) { return c.label(a).id < c.label(b).id; });
        int k = static_cast<int>(urns.size());
        if (k >= 30 || static_cast<size_t>(1) << k != mem.size()) {
            comp.failure = "component size is not 2^(out-degree of the source)";
            result.components.push_back(std::move(comp));
            continue;
        }

        std::map<int, unsigned> mask;
        for (int i : mem) mask[i] = 0;
        for (int j = 0; j < k; ++j) {
            std::vector<int> stack{urns[static_cast<size_t>(j)]};
            std::map<int, bool> seen;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                if (seen[x]) continue;
                seen[x] = true;
                mask[x] |= 1u << j;
                for (int y : out[x]) stack.push_back(y);
            }
        }

        std::map<unsigned, int> by_mask;
        bool distinct = true;
        for (int i : mem) {
            if (by_mask.count(mask[i])) distinct = false;
            by_mask[mask[i]] = i;
        }
        if (!distinct || mask[v0] != 0) {
            comp.failure = "reachability sets do not separate the vertices";
            result.components.push_back(std::move(comp));
            continue;
        }

        bool graded = true;
        for (int i : mem)
            if (c.label(i).qdeg !=
                c.label(v0).qdeg + 2 * std::popcount(mask[i]))
                graded = false;
        if (!graded) {
            comp.failure = "degrees do not match the level structure";
            result.components.push_back(std::move(comp));
            continue;
        }

        bool covers_only = true;
        for (const auto& [key, coeff] : c.arrows()) {
            if (!out.count(key.first)) continue;
            unsigned mf = mask[key.first], mt = mask[key.second];
            if ((mf & mt) != mf || std::popcount(mt) != std::popcount(mf) + 1) covers_only = false;
        }
        if (!covers_only || arrow_count != k * (k > 0 ? (1 << (k - 1)) : 0)) {
            comp.failure = "arrows are not exactly the cover relations";
            result.components.push_back(std::move(comp));
            continue;
        }

        comp.is_cube = true;
        comp.dimension = k;
        comp.initial = c.label(v0).id;
        result.components.push_back(std::move(comp));
    }
    std::sort(result.components.begin(), result.components.end(),
              [](const HypercubeComponent& a, const HypercubeComponent& b) {
                  return std::tie(a.labels.front(), a.labels) <
                         std::tie(b.labels.front(), b.labels);
              });
    return result;
}

FreeComplex hypercube_complex(int k) {
    if (k < 0 || k >= 30) throw std::invalid_argument("hypercube dimension out of range");
    FreeComplex c;
    auto id_of = [&](unsigned mask) {
        std::string s(static_cast<size_t>(k), '0');
        for (int j = 0; j < k; ++j)
            if (mask & (1u << j)) s[static_cast<size_t>(j)] = '1';
        return s;
    };
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        int ones = std::popcount(mask);
        c.add_label(id_of(mask), 2 * ones, ones);
    }
    for (unsigned mask = 0; mask < (1u << k); ++mask)
        for (int j = 0; j < k; ++j) {
            if (mask & (1u << j)) continue;
            int earlier = std::popcount(mask & ((1u << j) - 1));
            c.add_arrow(id_of(mask), id_of(mask | (1u << j)), Int(neg_one_pow(earlier)));
        }
    return c;
}

FreeComplex tensor_complex(const FreeComplex& a, const FreeComplex& b) {
    FreeComplex c;
    auto joint = [&](int i, int j) { return a.label(i).id + b.label(j).id; };
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < b.size(); ++j)
            c.add_label(joint(i, j), a.label(i).qdeg + b.label(j).qdeg,
                        a.label(i).parity + b.label(j).parity);
    for (const auto& [key, coeff] : a.arrows())
        for (int j = 0; j < b.size(); ++j)
            c.add_arrow(joint(key.first, j), joint(key.second, j), coeff);
    for (int i = 0; i < a.size(); ++i)
        for (const auto& [key, coeff] : b.arrows())
            c.add_arrow(joint(i, key.first), joint(i, key.second),
                        Int(neg_one_pow(a.label(i).parity)) * coeff);
    return c;
}

FreeComplex olambda_complex(int max_size, int max_rows) {
    if (max_size < 0) throw std::invalid_argument("size bound must be nonnegative");
    FreeComplex c;
    std::vector<Partition> all;
    for (int s = 0; s <= max_size; ++s)
        for (const Partition& l : partitions_of(s)) {
            if (max_rows >= 0 && l.length() > max_rows) continue;
            c.add_label(l.str(), 2 * s, s % 2);
            all.push_back(l);
        }
    for (const Partition& l : all) {
        PartitionSum d = schur_differential(l, max_rows);
        for (const auto& [m, coeff] : d.terms()) {
            if (m.size() > max_size) continue;
            c.add_arrow(l.str(), m.str(), coeff);
        }
    }
    return c;
}

PComplex::PComplex(int p) : p_(p) {
    if (p < 2) throw std::invalid_argument("p must be a prime >= 2");
}

int PComplex::add_label(const std::string& id, int qdeg) {
    if (index_.count(id)) throw std::invalid_argument("duplicate label id: " + id);
    int idx = static_cast<int>(labels_.size());
    labels_.push_back({id, qdeg, 0});
    index_[id] = idx;
    return idx;
}

void PComplex::add_arrow(int from, int to, const Int& coeff) {
    if (from < 0 || from >= size() || to < 0 || to >= size())
        throw std::invalid_argument("arrow endpoint out of range");
    if (labels_[static_cast<size_t>(to)].qdeg != labels_[static_cast<size_t>(from)].qdeg + 2)
        throw std::invalid_argument("arrow does not raise qdeg by 2");
    Int r = coeff % p_;
    if (r < 0) r += p_;
    auto key = std::pair{from, to};
    int& slot = arrows_[key];
    slot = (slot + r.convert_to<int>()) % p_;
    if (slot == 0) arrows_.erase(key);
}

void PComplex::add_arrow(const std::string& from, const std::string& to, const Int& coeff) {
    int f = index_of(from), t = index_of(to);
    if (f < 0) throw std::invalid_argument("unknown label id: " + from);
    if (t < 0) throw std::invalid_argument("unknown label id: " + to);
    add_arrow(f, t, coeff);
}

int PComplex::index_of(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
}

namespace {

/// Dense F_p block of the differential from src to dst label indices.
IntMatrix pblock(const PComplex& c, const std::vector<int>& src, const std::vector<int>& dst) {
    IntMatrix m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (size_t t = 0; t < dst.size(); ++t)
        for (size_t s = 0; s < src.size(); ++s) {
            auto it = c.arrows().find({src[s], dst[t]});
            if (it != c.arrows().end()) m.at(static_cast<int>(t), static_cast<int>(s)) = it->second;
        }
    return m;
}

IntMatrix mul_mod_p(const IntMatrix& a, const IntMatrix& b, int p) {
    IntMatrix m(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            if (a.at(i, k) == 0) continue;
            for (int j = 0; j < b.cols; ++j)
                m.at(i, j) = (m.at(i, j) + a.at(i, k) * b.at(k, j)) % p;
        }
    return m;
}

IntMatrix identity_matrix(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

/// d^m as a matrix out of the qdeg-q block.
IntMatrix power_matrix(const PComplex& c, const std::map<int, std::vector<int>>& blocks, int q,
                       int m) {
    static const std::vector<int> empty;
    auto block_at = [&](int deg) -> const std::vector<int>& {
        auto it = blocks.find(deg);
        return it == blocks.end() ? empty : it->second;
    };
    IntMatrix acc = identity_matrix(static_cast<int>(block_at(q).size()));
    for (int step = 0; step < m; ++step) {
        const std::vector<int>& src = block_at(q + 2 * step);
        const std::vector<int>& dst = block_at(q + 2 * (step + 1));
        acc = mul_mod_p(pblock(c, src, dst), acc, c.p());
    }
    return acc;
}

} // namespace

bool PComplex::dth_power_vanishes() const {
    auto blocks = degree_blocks(*this);
    for (const auto& [q, block] : blocks) {
        IntMatrix m = power_matrix(*this, blocks, q, p_);
        for (const Int& x : m.a)
            if (x != 0) return false;
    }
    return true;
}

std::map<int, int> PComplex::slash_dims(int k) const {
    if (k < 0 || k >= p_) throw std::invalid_argument("slash index must lie in [0, p)");
    auto blocks = degree_blocks(*this);
    static const std::vector<int> empty;
    auto block_at = [&](int q) -> const std::vector<int>& {
        auto it = blocks.find(q);
        return it == blocks.end() ? empty : it->second;
    };
    std::map<int, int> dims;
    for (const auto& [q, block] : blocks) {
        const int n = static_cast<int>(block.size());
        IntMatrix dk1 = power_matrix(*this, blocks, q, k + 1);
        int ker_k1 = n - rank_mod_p(dk1, p_);

        FpRowReducer red(p_);
        const int m_im = p_ - 1 - k;
        const std::vector<int>& src = block_at(q - 2 * m_im);
        IntMatrix im = power_matrix(*this, blocks, q - 2 * m_im, m_im);
        for (size_t s = 0; s < src.size(); ++s) {
            std::vector<int> col(static_cast<size_t>(n));
            for (int t = 0; t < n; ++t) col[static_cast<size_t>(t)] = im.at(t, static_cast<int>(s)).convert_to<int>();
            red.absorb(std::move(col));
        }
        IntMatrix dk = power_matrix(*this, blocks, q, k);
        for (const auto& v : kernel_basis_mod_p(dk, p_)) red.absorb(v);

        dims[q] = ker_k1 - red.rank();
    }
    return dims;
}

PComplex cyclic_pcomplex(int p, int i) {
    if (i < 0 || i >= p) throw std::invalid_argument("cyclic p-complex needs 0 <= i <= p-1");
    PComplex c(p);
    for (int j = 0; j <= i; ++j) c.add_label("v" + std::to_string(j), 2 * j);
    for (int j = 0; j < i; ++j)
        c.add_arrow("v" + std::to_string(j), "v" + std::to_string(j + 1), Int(1));
    return c;
}

std::vector<Partition> lima_enumerate(int max_size, int p) {
    if (p < 2) throw std::invalid_argument("p must be >= 2");
    std::vector<Partition> out;
    for (int s = 0; s <= max_size; ++s)
        for (const Partition& l : partitions_of(s))
            if (l.is_p_lima(p)) out.push_back(l);
    return out;
}

PComplex pdg_symfun_complex(int max_rows, int p, int max_size) {
    if (max_size < 0) throw std::invalid_argument("size bound must be nonnegative");
    PComplex c(p);
    std::vector<Partition> all;
    for (int s = 0; s <= max_size; ++s)
        for (const Partition& l : partitions_of(s)) {
            if (max_rows >= 0 && l.length() > max_rows) continue;
            c.add_label(l.str(), 2 * s);
            all.push_back(l);
        }
    for (const Partition& l : all)
        for (int row : l.addable_rows()) {
            Partition m = l.add_box(row);
            if (m.size() > max_size) continue;
            if (max_rows >= 0 && m.length() > max_rows) continue;
            c.add_arrow(l.str(), m.str(), Int(l.added_box_content(row)));
        }
    return c;
}

std::map<int, std::map<int, int>> pdg_symfun_slash(int max_rows, int p, int max_size) {
    PComplex c = pdg_symfun_complex(max_rows, p, max_size + p - 1);
    std::map<int, std::map<int, int>> out;
    for (int k = 0; k < p; ++k) {
        std::map<int, int> dims = c.slash_dims(k);
        std::map<int, int>& trimmed = out[k];
        for (const auto& [q, d] : dims)
            if (q <= 2 * max_size) trimmed[q] = d;
    }
    return out;
}

} // namespace oalg

#pragma once

#include "grk/fflinalg.hpp"
#include "grk/poset.hpp"

#include <optional>
#include <string>
#include <vector>

namespace grk {

// A representation of a finite poset: a vector space per element and a matrix per cover edge.
// Grid modules are read as Z^2-modules extended by zero outside their window.
class PModule {
public:
    PModule() = default;
    // edge_maps are aligned with P->cover_edges(); map (a, b) has shape dims[b] x dims[a].
    PModule(PosetPtr P, std::vector<int> dims, std::vector<Matrix> edge_maps, std::uint32_t p = kDefaultPrime,
            bool check = true);

    static PModule zero(PosetPtr P, std::uint32_t p = kDefaultPrime);

    const FinitePoset& poset() const { return *poset_; }
    const PosetPtr& poset_ptr() const { return poset_; }
    std::uint32_t field() const { return p_; }

    int dim(int e) const { return dims_[e]; }
    const std::vector<int>& dims() const { return dims_; }
    int total_dim() const;
    const std::vector<Matrix>& edge_maps() const { return maps_; }
    const Matrix& edge_map(int a, int b) const;

    // Structure map for a <= b.
    Matrix hom(int a, int b) const;

    // Extension by zero on ambient Z^2.
    int dim_at(Point q) const;
    Matrix hom_at(Point a, Point b) const;

    // Description of the first failure of functoriality, or nullopt.
    std::optional<std::string> functoriality_defect() const;

    bool operator==(const PModule& o) const;

private:
    PosetPtr poset_;
    std::vector<int> dims_;
    std::vector<Matrix> maps_;
    std::uint32_t p_ = kDefaultPrime;
};

PModule interval_module(PosetPtr P, const std::vector<int>& members, std::uint32_t p = kDefaultPrime);
PModule direct_sum(const PModule& m, const PModule& n);
// Pull N back along an order-preserving map pi from P to N's poset.
PModule pullback(const PModule& n, PosetPtr P, const std::vector<int>& pi);
// Module over the induced subposet on the given members (element i of the result is members[i]).
PModule restrict_to(const PModule& m, const std::vector<int>& members);

// A finite diagram of vector spaces; used for limits and colimits.
struct DiagramEdge {
    int src = 0;
    int dst = 0;
    Matrix map;  // dims[dst] x dims[src]
};

struct Diagram {
    std::vector<int> dims;
    std::vector<DiagramEdge> edges;
    std::uint32_t p = kDefaultPrime;
};

Diagram induced_diagram(const PModule& m, const std::vector<int>& members);

struct SectionSpace {
    std::vector<int> offsets;  // coordinate offset of each node in a stacked vector
    Matrix basis;              // columns are sections
    int dim() const { return basis.cols(); }
};

struct ColimitSpace {
    std::vector<int> offsets;
    int dim = 0;
    Matrix projection;  // from the stacked direct sum onto the colimit
};

SectionSpace limit(const Diagram& d);
ColimitSpace colimit(const Diagram& d);
SectionSpace limit(const PModule& m);
ColimitSpace colimit(const PModule& m);

// Rank of the canonical map from lim d to colim d (d connected).
int diagram_rank(const Diagram& d);
// Rank of lim(low) -> colim(high) given by v -> [f(v_low_anchor)] placed at high_anchor.
int limit_colimit_rank(const Diagram& low, int low_anchor, const Diagram& high, int high_anchor, const Matrix& f);

// Path diagrams: edge i joins nodes i and i+1, in either direction. Both run in one sweep of small eliminations.
// Columns span the values at node 0 of all sections (possibly with repeats).
Matrix path_limit_at_start(const Diagram& path);
// The structure map from node 0 into the colimit.
Matrix path_colimit_from_start(const Diagram& path);

// Rank over a connected subset of elements.
int generalized_rank(const PModule& m, const std::vector<int>& members);
// Rank over a connected set of ambient points; zero when any point lies outside the window.
int generalized_rank(const PModule& m, const PointSet& pts);
// Same value for intervals of Z^2, computed through the lower and upper fences only.
int generalized_rank_fast(const PModule& m, const PointSet& interval);

}  // namespace grk

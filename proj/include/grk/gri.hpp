#pragma once

#include "grk/mobius.hpp"
#include "grk/pmodule.hpp"
#include "grk/poset.hpp"

#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace grk {

// Named collections: "int", "int:m,n" (at most m minima, n maxima), "seg", "con".
std::vector<Subposet> make_collection(const FinitePoset& P, const std::string& name, const EnumerationConfig& cfg = {});

// Memoized ranks of one module; safe for concurrent use.
class RankCache {
public:
    explicit RankCache(const PModule& m) : m_(m) {}
    int rank(const Subposet& s);
    std::size_t size() const;

private:
    const PModule& m_;
    mutable std::mutex mutex_;
    std::unordered_map<std::vector<int>, int, MembersHash> memo_;
};

// Rank over one subposet; grid intervals go through the fence computation.
int subposet_rank(const PModule& m, const Subposet& s);

struct GriTable {
    PosetPtr poset;
    std::vector<Subposet> collection;  // canonical order
    std::vector<long long> ranks;
    std::string module_ref;

    std::optional<long long> at(const std::vector<int>& members) const;
    bool same_values(const GriTable& o) const { return collection == o.collection && ranks == o.ranks; }
};

// A pair (i, j) with collection[i] inside collection[j] but ranks[i] < ranks[j], if any.
std::optional<std::pair<std::size_t, std::size_t>> monotonicity_violation(const GriTable& t);

GriTable gri(const PModule& m, std::vector<Subposet> collection, int threads = 1, std::string module_ref = {});
GriTable gri(RankCache& cache, const PModule& m, std::vector<Subposet> collection, int threads = 1,
             std::string module_ref = {});

inline constexpr std::size_t kMaxInversionSize = 20'000;

struct SignedDiagram {
    PosetPtr poset;
    std::vector<Subposet> support;  // canonical order, nonzero entries only
    std::vector<long long> mult;

    long long at(const std::vector<int>& members) const;
    std::vector<std::pair<Subposet, long long>> positive() const;
    std::vector<std::pair<Subposet, long long>> negative() const;  // absolute values
    bool operator==(const SignedDiagram& o) const { return support == o.support && mult == o.mult; }
};

// Möbius inversion of a function over a collection ordered by reverse inclusion.
PosetFunction invert_over(const ContainmentPoset& cp, const PosetFunction& values);
SignedDiagram gpd(const GriTable& table);
// Sum of diagram entries over supersets of each collection member.
std::vector<long long> rank_from_diagram(const SignedDiagram& d, const std::vector<Subposet>& collection);

struct InvertibilityReport {
    bool invertible = false;
    SignedDiagram dgm;  // inverse computed over the candidate support
    std::optional<Subposet> witness;
    long long expected = 0;
    long long obtained = 0;
};
InvertibilityReport verify_invertibility(const GriTable& table, std::vector<Subposet> candidate);

struct RankDecomposition {
    std::vector<std::pair<Subposet, long long>> R;
    std::vector<std::pair<Subposet, long long>> S;
};
RankDecomposition minimal_rank_decomposition(const SignedDiagram& dgm);

// Direct sum of interval modules with the given multiplicities.
PModule realize(PosetPtr P, const std::vector<std::pair<Subposet, long long>>& parts, std::uint32_t p = kDefaultPrime);

struct ModulePair {
    PModule first;
    PModule second;
};
// N from the positive part of the diagram of M over the collection; N' is M plus the negative part.
ModulePair tightness_pair(const PModule& m, const std::vector<Subposet>& collection);
// Realizations of the positive and negative parts of 1_{I0} * mu over the big collection.
ModulePair minimal_nonisomorphic_pair(PosetPtr P, const std::vector<Subposet>& small, const std::vector<Subposet>& big,
                                      const Subposet& i0, std::uint32_t p = kDefaultPrime);

struct KernelCheck {
    bool equal_on_small = false;
    bool in_span = false;
    std::vector<std::pair<Subposet, std::string>> coefficients;  // rational coefficients as text
};
// Whether the difference of the big-collection diagrams lies in the span of 1_I * mu for I outside the small one.
KernelCheck gri_difference_kernel_check(const PModule& m, const PModule& n, const std::vector<Subposet>& small,
                                        const std::vector<Subposet>& big);

}  // namespace grk

#pragma once

#include "grk/pmodule.hpp"
#include "grk/poset.hpp"

#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

namespace grk {

// Memoized ranks of a grid module over ambient point sets (zero outside the window).
class AmbientRanks {
public:
    explicit AmbientRanks(const PModule& m);
    int rank(const PointSet& interval);
    // rank(epsilon_thicken(interval, eps)), skipping the thickening when it leaves the window.
    int rank_thickened(const PointSet& interval, int eps);
    const PModule& module() const { return m_; }

private:
    const PModule& m_;
    Point lo_, hi_;
    std::mutex mutex_;
    std::unordered_map<PointSet, int, PointSetHash> memo_;
};

// Intervals of the box with at most m minima and n maxima, as ambient point sets.
std::vector<PointSet> grid_intervals_mn(const GridInfo& box, int m, int n, const EnumerationConfig& cfg = {});
GridInfo bounding_box(const GridInfo& a, const GridInfo& b);
std::vector<PointSet> erosion_collection(const PModule& a, const PModule& b, int m, int n,
                                         const EnumerationConfig& cfg = {});

struct ErosionCheck {
    bool ok = true;
    std::optional<PointSet> witness;  // first failing interval in collection order
    bool first_side = true;           // true when rk_a(I^eps) > rk_b(I)
};

ErosionCheck verify_erosion(AmbientRanks& a, AmbientRanks& b, const std::vector<PointSet>& collection, int eps,
                            int threads = 1);
ErosionCheck verify_erosion(const PModule& a, const PModule& b, const std::vector<PointSet>& collection, int eps,
                            int threads = 1);

struct ErosionProbe {
    int eps = 0;
    bool ok = false;
};

struct ErosionResult {
    std::optional<int> distance;  // nullopt stands for infinity
    std::vector<ErosionProbe> trace;
    std::optional<PointSet> witness;  // failing interval at distance - 1
    std::size_t collection_size = 0;
};

ErosionResult erosion_distance(AmbientRanks& a, AmbientRanks& b, const std::vector<PointSet>& collection,
                               int max_eps, int threads = 1);
ErosionResult erosion_distance(const PModule& a, const PModule& b, int m, int n, int threads = 1,
                               const EnumerationConfig& cfg = {});

struct TradeoffRow {
    int side = 0;
    int m = 0;
    int n = 0;
    std::size_t collection_size = 0;
    std::optional<int> distance;
    double seconds = 0;  // mean wall time of one erosion_distance call
    int repeats = 0;
};
// Times erosion between two seeded random modules on the side x side grid.
TradeoffRow tradeoff_timing(int side, int m, int n, std::uint64_t seed, double min_seconds = 0.05, int threads = 1);

// M^delta(x) = M(x + delta(1,1)): the same data on a window moved by -delta(1,1).
PModule shift_module(const PModule& m, int delta);

}  // namespace grk

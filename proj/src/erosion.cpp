#include "grk/erosion.hpp"

#include "grk/errors.hpp"
#include "grk/parallel.hpp"
#include "grk/random.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>

namespace grk {

namespace {

const GridInfo& grid_of(const PModule& m) {
    if (!m.poset().is_grid()) throw InputError("erosion needs modules over grid windows");
    return *m.poset().grid();
}

}  // namespace

AmbientRanks::AmbientRanks(const PModule& m) : m_(m) {
    const GridInfo& g = grid_of(m);
    lo_ = g.origin;
    hi_ = {g.origin.x + g.width - 1, g.origin.y + g.height - 1};
}

int AmbientRanks::rank(const PointSet& interval) {
    if (interval.empty()) throw InputError("rank over an empty set");
    for (Point q : interval)
        if (q.x < lo_.x || q.y < lo_.y || q.x > hi_.x || q.y > hi_.y) return 0;
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = memo_.find(interval);
        if (it != memo_.end()) return it->second;
    }
    int r = generalized_rank_fast(m_, interval);
    std::lock_guard<std::mutex> lock(mutex_);
    memo_.emplace(interval, r);
    return r;
}

int AmbientRanks::rank_thickened(const PointSet& interval, int eps) {
    if (interval.empty()) throw InputError("rank over an empty set");
    int ylo = interval.front().y, yhi = ylo;
    for (Point q : interval) {
        ylo = std::min(ylo, q.y);
        yhi = std::max(yhi, q.y);
    }
    if (interval.front().x - eps < lo_.x || interval.back().x + eps > hi_.x || ylo - eps < lo_.y || yhi + eps > hi_.y)
        return 0;
    return rank(epsilon_thicken(interval, eps));
}

std::vector<PointSet> grid_intervals_mn(const GridInfo& box, int m, int n, const EnumerationConfig& cfg) {
    FinitePoset P = grid_poset(box.width, box.height, box.origin);
    std::vector<PointSet> out;
    for (const auto& s : enumerate_intervals(P, m, n, cfg)) out.push_back(to_points(P, s.members));
    return out;
}

GridInfo bounding_box(const GridInfo& a, const GridInfo& b) {
    Point lo{std::min(a.origin.x, b.origin.x), std::min(a.origin.y, b.origin.y)};
    Point hi{std::max(a.origin.x + a.width, b.origin.x + b.width), std::max(a.origin.y + a.height, b.origin.y + b.height)};
    return {hi.x - lo.x, hi.y - lo.y, lo};
}

std::vector<PointSet> erosion_collection(const PModule& a, const PModule& b, int m, int n,
                                         const EnumerationConfig& cfg) {
    return grid_intervals_mn(bounding_box(grid_of(a), grid_of(b)), m, n, cfg);
}

ErosionCheck verify_erosion(AmbientRanks& a, AmbientRanks& b, const std::vector<PointSet>& collection, int eps,
                            int threads) {
    if (eps < 0) throw InputError("erosion radius must be nonnegative");
    std::atomic<std::size_t> first{collection.size()};
    std::vector<char> side(collection.size(), 0);
    parallel_for(collection.size(), threads, [&](std::size_t i) {
        if (i > first.load()) return;
        const PointSet& I = collection[i];
        int ta = a.rank_thickened(I, eps);
        bool bad_a = ta > 0 && ta > b.rank(I);
        int tb = bad_a ? 0 : b.rank_thickened(I, eps);
        bool bad_b = tb > 0 && tb > a.rank(I);
        if (bad_a || bad_b) {
            side[i] = bad_a ? 1 : 2;
            std::size_t cur = first.load();
            while (i < cur && !first.compare_exchange_weak(cur, i)) {
            }
        }
    });
    ErosionCheck out;
    std::size_t f = first.load();
    if (f < collection.size()) {
        out.ok = false;
        out.witness = collection[f];
        out.first_side = side[f] == 1;
    }
    return out;
}

ErosionCheck verify_erosion(const PModule& a, const PModule& b, const std::vector<PointSet>& collection, int eps,
                            int threads) {
    AmbientRanks ra(a), rb(b);
    return verify_erosion(ra, rb, collection, eps, threads);
}

ErosionResult erosion_distance(AmbientRanks& a, AmbientRanks& b, const std::vector<PointSet>& collection,
                               int max_eps, int threads) {
    ErosionResult res;
    res.collection_size = collection.size();
    auto probe = [&](int eps) {
        ErosionCheck c = verify_erosion(a, b, collection, eps, threads);
        res.trace.push_back({eps, c.ok});
        return c;
    };
    if (!probe(max_eps).ok) return res;
    int lo = -1, hi = max_eps;  // lo infeasible (or -1), hi feasible
    std::optional<PointSet> witness;
    while (hi - lo > 1) {
        int mid = lo + (hi - lo) / 2;
        ErosionCheck c = probe(mid);
        if (c.ok) {
            hi = mid;
        } else {
            lo = mid;
            witness = c.witness;
        }
    }
    res.distance = hi;
    if (hi > 0) res.witness = witness ? witness : verify_erosion(a, b, collection, hi - 1, threads).witness;
    return res;
}

ErosionResult erosion_distance(const PModule& a, const PModule& b, int m, int n, int threads,
                               const EnumerationConfig& cfg) {
    GridInfo box = bounding_box(grid_of(a), grid_of(b));
    auto collection = grid_intervals_mn(box, m, n, cfg);
    AmbientRanks ra(a), rb(b);
    return erosion_distance(ra, rb, collection, std::max(box.width, box.height), threads);
}

TradeoffRow tradeoff_timing(int side, int m, int n, std::uint64_t seed, double min_seconds, int threads) {
    Rng rng(seed);
    auto P = std::make_shared<const FinitePoset>(grid_poset(side, side));
    PModule a = random_fp_module(rng, P, side, side);
    PModule b = random_fp_module(rng, P, side, side);
    TradeoffRow row{side, m, n};
    double total = 0;
    using Clock = std::chrono::steady_clock;
    do {
        auto t0 = Clock::now();
        ErosionResult r = erosion_distance(a, b, m, n, threads);
        total += std::chrono::duration<double>(Clock::now() - t0).count();
        row.collection_size = r.collection_size;
        row.distance = r.distance;
        ++row.repeats;
    } while (total < min_seconds);
    row.seconds = total / row.repeats;
    return row;
}

PModule shift_module(const PModule& m, int delta) {
    if (delta < 0) throw InputError("shift must be nonnegative");
    const GridInfo& g = grid_of(m);
    if (delta == 0) return m;
    auto P = std::make_shared<const FinitePoset>(
        grid_poset(g.width, g.height, {g.origin.x - delta, g.origin.y - delta}));
    return PModule(P, m.dims(), m.edge_maps(), m.field(), false);
}

}  // namespace grk

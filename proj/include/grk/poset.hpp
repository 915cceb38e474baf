#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace grk {

struct Point {
    int x = 0;
    int y = 0;
    auto operator<=>(const Point&) const = default;
};

inline bool point_leq(Point a, Point b) { return a.x <= b.x && a.y <= b.y; }
inline bool comparable(Point a, Point b) { return point_leq(a, b) || point_leq(b, a); }
inline Point join(Point a, Point b) { return {a.x > b.x ? a.x : b.x, a.y > b.y ? a.y : b.y}; }
inline Point meet(Point a, Point b) { return {a.x < b.x ? a.x : b.x, a.y < b.y ? a.y : b.y}; }

// Sorted, duplicate-free set of lattice points.
using PointSet = std::vector<Point>;
PointSet make_point_set(std::vector<Point> pts);
bool contains(const PointSet& s, Point p);

struct PointSetHash {
    std::size_t operator()(const PointSet& s) const;
};

struct GridInfo {
    int width = 0;
    int height = 0;
    Point origin;
};

// Finite poset on elements 0..n-1 with its Hasse diagram.
class FinitePoset {
public:
    FinitePoset() = default;

    // Poset generated by the given relations a <= b (transitive closure); throws on cycles.
    static FinitePoset from_relations(int n, const std::vector<std::pair<int, int>>& rel);

    int size() const { return n_; }
    bool leq(int a, int b) const { return (leq_[static_cast<std::size_t>(a) * words_ + (b >> 6)] >> (b & 63)) & 1U; }
    bool lt(int a, int b) const { return a != b && leq(a, b); }
    bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

    const std::vector<int>& up_covers(int a) const { return up_[a]; }
    const std::vector<int>& down_covers(int a) const { return down_[a]; }
    // Cover edges (a, b) with a covered by b, sorted.
    const std::vector<std::pair<int, int>>& cover_edges() const { return edges_; }
    int edge_index(int a, int b) const;

    // Elements sorted so that a < b implies a comes first.
    const std::vector<int>& linear_extension() const { return linext_; }

    const std::optional<GridInfo>& grid() const { return grid_; }
    bool is_grid() const { return grid_.has_value(); }
    Point coord(int e) const;
    std::optional<int> id_of(Point p) const;

    bool operator==(const FinitePoset& o) const;

private:
    friend FinitePoset grid_poset(int, int, Point);
    void finish();

    int n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> leq_;
    std::vector<std::vector<int>> up_;
    std::vector<std::vector<int>> down_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> linext_;
    std::optional<GridInfo> grid_;
};

using PosetPtr = std::shared_ptr<const FinitePoset>;

// Product order on a width x height window of Z^2; element id = (x-ox)*height + (y-oy).
FinitePoset grid_poset(int width, int height, Point origin = {0, 0});
// The chain start < start+1 < ... as a one-row grid.
FinitePoset chain_poset(int n, int start = 1);

enum class SubKind { Interval, Connected, Segment, PathTrace, Generic };

struct Subposet {
    SubKind kind = SubKind::Generic;
    std::vector<int> members;  // sorted element ids

    bool operator==(const Subposet& o) const { return members == o.members; }
};

Subposet make_subposet(std::vector<int> members, SubKind kind = SubKind::Generic);

// Canonical order: by size, then lexicographically on sorted ids.
bool canonical_less(const std::vector<int>& a, const std::vector<int>& b);
bool canonical_less(const Subposet& a, const Subposet& b);
void canonical_sort(std::vector<Subposet>& v);

struct MembersHash {
    std::size_t operator()(const std::vector<int>& m) const;
};

bool is_connected(const FinitePoset& P, const std::vector<int>& s);
bool is_convex(const FinitePoset& P, const std::vector<int>& s);
bool is_interval(const FinitePoset& P, const std::vector<int>& s);

std::vector<int> minimal_points(const FinitePoset& P, const std::vector<int>& s);
std::vector<int> maximal_points(const FinitePoset& P, const std::vector<int>& s);
PointSet minimal_points(const PointSet& s);
PointSet maximal_points(const PointSet& s);

inline constexpr int kUnbounded = std::numeric_limits<int>::max();
inline constexpr std::uint64_t kDefaultIntervalCap = 5'000'000;
inline constexpr int kDefaultConnectedCap = 16;
inline constexpr int kBruteForceMaxElements = 24;

struct EnumerationConfig {
    std::uint64_t interval_cap = kDefaultIntervalCap;
    int connected_cap = kDefaultConnectedCap;
};

// Number of intervals of a width x height grid (no enumeration).
std::uint64_t count_grid_intervals(int width, int height);

// Intervals with at most max_min minimal and max_max maximal points, canonical order.
std::vector<Subposet> enumerate_intervals(const FinitePoset& P, int max_min = kUnbounded, int max_max = kUnbounded,
                                          const EnumerationConfig& cfg = {});
// Subset-filtering enumeration used for non-grid posets.
std::vector<Subposet> enumerate_intervals_brute(const FinitePoset& P, int max_min = kUnbounded,
                                                int max_max = kUnbounded, const EnumerationConfig& cfg = {});
std::vector<Subposet> enumerate_segments(const FinitePoset& P);
std::vector<Subposet> enumerate_connected(const FinitePoset& P, const EnumerationConfig& cfg = {});

struct ContainmentPoset {
    std::vector<Subposet> items;
    PosetPtr order;  // i <= j iff items[i] contains items[j]
};

ContainmentPoset containment_poset(std::vector<Subposet> items);

// Dilation by the sup-norm ball of radius eps in ambient Z^2.
PointSet epsilon_thicken(const PointSet& s, int eps);

PointSet to_points(const FinitePoset& P, const std::vector<int>& members);
// Element ids of the points, or nullopt when a point lies outside the grid window.
std::optional<std::vector<int>> to_members(const FinitePoset& P, const PointSet& pts);

}  // namespace grk

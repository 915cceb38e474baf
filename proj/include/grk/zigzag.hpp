#pragma once

#include "grk/pmodule.hpp"
#include "grk/poset.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace grk {

// A path in Z^2: consecutive points are comparable.
struct ZigzagPath {
    std::vector<Point> points;
    bool faithful = false;  // every step is a unit step
    bool simple = false;    // faithful and without repeated points
    bool monotone = false;  // the points form a chain in path order (either direction)
    bool negative = false;  // x never decreases and y never increases (or the reverse)
    bool tame = false;      // contains both fences of its interval hull as contiguous pieces
};

ZigzagPath make_path(std::vector<Point> pts);
bool is_faithful(const std::vector<Point>& pts);
bool is_tame(const std::vector<Point>& pts);
std::vector<Point> canonical_orientation(std::vector<Point> pts);

PointSet interval_hull(const std::vector<Point>& pts);

// Lower and upper fences of a finite interval of Z^2.
std::vector<Point> min_zz(const PointSet& interval);
std::vector<Point> max_zz(const PointSet& interval);
std::vector<Point> boundary_cap(const PointSet& interval);

// Negative path whose point set is the interval, if any.
std::optional<std::vector<Point>> thin_path(const PointSet& interval);
// Simple tame path with interval hull equal to the interval, if one can be threaded.
std::optional<std::vector<Point>> simple_tame_cover(const PointSet& interval);
bool is_thin(const PointSet& interval);
bool is_solid(const PointSet& interval);

// Zigzag module M restricted along the path (repeated points become separate nodes).
Diagram path_diagram(const PModule& m, const std::vector<Point>& pts);
int path_rank(const PModule& m, const std::vector<Point>& pts);

struct Bar {
    int start = 0;  // inclusive path indices
    int end = 0;
    long long multiplicity = 0;
    bool operator==(const Bar&) const = default;
};
using Barcode = std::vector<Bar>;  // sorted by (start, end), positive multiplicities

Barcode zigzag_barcode(const PModule& m, const ZigzagPath& path);
long long full_bar_multiplicity(const PModule& m, const std::vector<Point>& pts);

struct ZibEntry {
    ZigzagPath path;
    Barcode barcode;
};
std::vector<ZibEntry> zib(const PModule& m, const std::vector<ZigzagPath>& paths);

using RankProvider = std::function<long long(const PointSet&)>;
using PathRankProvider = std::function<long long(const std::vector<Point>&)>;

// m and l of every contiguous subpath of a path, derived from interval ranks.
class PathBoundsTable {
public:
    PathBoundsTable(std::vector<Point> path, const RankProvider& rank);
    long long m(int i, int j) const { return m_[idx(i, j)]; }
    long long l(int i, int j) const { return l_[idx(i, j)]; }
    bool tame(int i, int j) const { return tame_[idx(i, j)] != 0; }
    int length() const { return n_; }

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }
    int n_ = 0;
    std::vector<long long> m_, l_;
    std::vector<char> tame_;
};

struct RankBounds {
    long long lower = 0;  // rank over the interval hull
    long long upper = 0;  // least rank over tame subpaths
};
RankBounds rank_bounds_from_gri(const std::vector<Point>& path, const RankProvider& rank);

struct MultiplicityBounds {
    long long lower = 0;
    long long upper = 0;
};
// Bounds on the multiplicity of the bar [start, end] in the barcode along the path.
MultiplicityBounds multiplicity_bounds(const PathBoundsTable& table, int start, int end);
MultiplicityBounds multiplicity_bounds(const std::vector<Point>& path, int start, int end, const RankProvider& rank);

inline constexpr std::size_t kDefaultPathCap = 200'000;

// Simple faithful paths inside a region, one orientation each.
std::vector<std::vector<Point>> simple_paths(const PointSet& region, std::size_t cap = kDefaultPathCap);
std::vector<std::vector<Point>> maximal_simple_paths(const PointSet& region, std::size_t cap = kDefaultPathCap);

struct GriEstimate {
    long long lower = 0;
    long long upper = 0;
    bool exact = false;
    std::string method;  // "thin", "solid" or "bounds"
};

// Estimate the rank over an interval from full-bar multiplicities along simple paths.
// Solid supersets are searched inside the window grid.
GriEstimate gri_bounds_from_zib(const PointSet& interval, const PathRankProvider& full_bar, const FinitePoset& window,
                                std::size_t path_cap = kDefaultPathCap);

}  // namespace grk

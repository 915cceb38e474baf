#include "grk/zigzag.hpp"

#include "grk/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <map>

namespace grk {

namespace {

bool unit_step(Point a, Point b) { return std::abs(a.x - b.x) + std::abs(a.y - b.y) == 1; }

bool contains_run(const std::vector<Point>& path, const std::vector<Point>& run) {
    if (run.empty()) return true;
    if (run.size() > path.size()) return false;
    return std::search(path.begin(), path.end(), run.begin(), run.end()) != path.end();
}

bool contains_run_either_way(const std::vector<Point>& path, std::vector<Point> run) {
    if (contains_run(path, run)) return true;
    std::reverse(run.begin(), run.end());
    return contains_run(path, run);
}

void walk_to(std::vector<Point>& out, Point to) {
    Point cur = out.back();
    while (cur.x != to.x) {
        cur.x += cur.x < to.x ? 1 : -1;
        out.push_back(cur);
    }
    while (cur.y != to.y) {
        cur.y += cur.y < to.y ? 1 : -1;
        out.push_back(cur);
    }
}

const Point kSteps[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};

}  // namespace

bool is_faithful(const std::vector<Point>& pts) {
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        if (!unit_step(pts[i], pts[i + 1])) return false;
    return true;
}

PointSet interval_hull(const std::vector<Point>& pts) {
    if (pts.empty()) throw InputError("hull of an empty path");
    PointSet s = make_point_set(pts);
    PointSet lo = minimal_points(s), hi = maximal_points(s);
    int x0 = s.front().x, x1 = s.back().x, y0 = s.front().y, y1 = s.front().y;
    for (Point p : s) {
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
    std::vector<Point> out;
    for (int x = x0; x <= x1; ++x)
        for (int y = y0; y <= y1; ++y) {
            Point q{x, y};
            bool above = std::any_of(lo.begin(), lo.end(), [&](Point p) { return point_leq(p, q); });
            if (!above) continue;
            if (std::any_of(hi.begin(), hi.end(), [&](Point r) { return point_leq(q, r); })) out.push_back(q);
        }
    return out;
}

std::vector<Point> min_zz(const PointSet& interval) {
    PointSet lo = minimal_points(interval);
    if (lo.empty()) throw InputError("fence of an empty set");
    std::vector<Point> out{lo.front()};
    for (std::size_t i = 0; i + 1 < lo.size(); ++i) {
        walk_to(out, join(lo[i], lo[i + 1]));
        walk_to(out, lo[i + 1]);
    }
    return out;
}

std::vector<Point> max_zz(const PointSet& interval) {
    PointSet hi = maximal_points(interval);
    if (hi.empty()) throw InputError("fence of an empty set");
    std::vector<Point> out{hi.front()};
    for (std::size_t i = 0; i + 1 < hi.size(); ++i) {
        Point m = meet(hi[i], hi[i + 1]);
        // Down first, then right.
        Point cur = out.back();
        while (cur.y != m.y) {
            --cur.y;
            out.push_back(cur);
        }
        walk_to(out, hi[i + 1]);
    }
    return out;
}

std::vector<Point> boundary_cap(const PointSet& interval) {
    std::vector<Point> out = min_zz(interval);
    std::reverse(out.begin(), out.end());
    std::vector<Point> up = max_zz(interval);
    if (out.back() == up.front()) out.pop_back();
    out.insert(out.end(), up.begin(), up.end());
    return out;
}

bool is_tame(const std::vector<Point>& pts) {
    PointSet hull = interval_hull(pts);
    return contains_run_either_way(pts, min_zz(hull)) && contains_run_either_way(pts, max_zz(hull));
}

std::vector<Point> canonical_orientation(std::vector<Point> pts) {
    std::vector<Point> rev(pts.rbegin(), pts.rend());
    return rev < pts ? rev : pts;
}

ZigzagPath make_path(std::vector<Point> pts) {
    if (pts.empty()) throw InputError("empty path");
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        if (!comparable(pts[i], pts[i + 1]) || pts[i] == pts[i + 1])
            throw InputError("consecutive path points " + std::to_string(i) + " and " + std::to_string(i + 1) +
                             " are not strictly comparable");
    ZigzagPath z;
    z.points = std::move(pts);
    const auto& p = z.points;
    z.faithful = is_faithful(p);
    z.simple = z.faithful && make_point_set(p).size() == p.size();
    bool up = true, down = true, neg = true, pos = true;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        up = up && point_leq(p[i], p[i + 1]);
        down = down && point_leq(p[i + 1], p[i]);
        neg = neg && p[i + 1].x >= p[i].x && p[i + 1].y <= p[i].y;
        pos = pos && p[i + 1].x <= p[i].x && p[i + 1].y >= p[i].y;
    }
    z.monotone = up || down;
    z.negative = neg || pos;
    z.tame = is_tame(p);
    return z;
}

std::optional<std::vector<Point>> thin_path(const PointSet& interval) {
    if (interval.empty()) return std::nullopt;
    std::vector<Point> pts(interval.begin(), interval.end());
    std::sort(pts.begin(), pts.end(), [](Point a, Point b) { return a.x != b.x ? a.x < b.x : a.y > b.y; });
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        Point d{pts[i + 1].x - pts[i].x, pts[i + 1].y - pts[i].y};
        if (!((d.x == 1 && d.y == 0) || (d.x == 0 && d.y == -1))) return std::nullopt;
    }
    return pts;
}

bool is_thin(const PointSet& interval) { return thin_path(interval).has_value(); }

std::optional<std::vector<Point>> simple_tame_cover(const PointSet& interval) {
    if (interval.empty()) return std::nullopt;
    std::vector<Point> low = min_zz(interval), high = max_zz(interval);
    PointSet fence_lo = make_point_set(low), fence_hi = make_point_set(high);
    for (Point p : fence_lo)
        if (contains(fence_hi, p)) return std::nullopt;
    PointSet fences = make_point_set([&] {
        std::vector<Point> all = low;
        all.insert(all.end(), high.begin(), high.end());
        return all;
    }());
    const Point lo_ends[2] = {low.front(), low.back()};
    const Point hi_ends[2] = {high.front(), high.back()};
    for (Point a : lo_ends)
        for (Point b : hi_ends) {
            // Breadth-first connector from a to b through points off both fences.
            std::map<Point, Point> parent;
            std::deque<Point> queue{a};
            parent[a] = a;
            bool found = false;
            while (!queue.empty() && !found) {
                Point cur = queue.front();
                queue.pop_front();
                for (Point s : kSteps) {
                    Point nb{cur.x + s.x, cur.y + s.y};
                    if (!contains(interval, nb) || parent.count(nb)) continue;
                    if (nb == b) {
                        parent[nb] = cur;
                        found = true;
                        break;
                    }
                    if (contains(fences, nb)) continue;
                    parent[nb] = cur;
                    queue.push_back(nb);
                }
            }
            if (!found) continue;
            std::vector<Point> bridge;
            for (Point q = b; q != a; q = parent[q]) bridge.push_back(q);
            std::reverse(bridge.begin(), bridge.end());  // excludes a, ends at b
            std::vector<Point> path = low;
            if (path.back() != a) std::reverse(path.begin(), path.end());
            bridge.pop_back();
            path.insert(path.end(), bridge.begin(), bridge.end());
            std::vector<Point> up = high;
            if (up.front() != b) std::reverse(up.begin(), up.end());
            path.insert(path.end(), up.begin(), up.end());
            if (make_point_set(path).size() != path.size() || !is_faithful(path)) continue;
            if (interval_hull(path) != interval || !is_tame(path)) continue;
            return path;
        }
    return std::nullopt;
}

bool is_solid(const PointSet& interval) { return simple_tame_cover(interval).has_value(); }

Diagram path_diagram(const PModule& m, const std::vector<Point>& pts) {
    Diagram d;
    d.p = m.field();
    for (Point q : pts) d.dims.push_back(m.dim_at(q));
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        int a = static_cast<int>(i), b = a + 1;
        if (point_leq(pts[i], pts[i + 1]))
            d.edges.push_back({a, b, m.hom_at(pts[i], pts[i + 1])});
        else if (point_leq(pts[i + 1], pts[i]))
            d.edges.push_back({b, a, m.hom_at(pts[i + 1], pts[i])});
        else
            throw InputError("path steps between incomparable points");
    }
    return d;
}

int path_rank(const PModule& m, const std::vector<Point>& pts) {
    if (pts.empty()) throw InputError("rank over an empty path");
    for (Point q : pts)
        if (m.dim_at(q) == 0) return 0;
    Diagram d = path_diagram(m, pts);
    Matrix sections = path_limit_at_start(d);
    if (sections.cols() == 0) return 0;
    return rank(path_colimit_from_start(d) * sections);
}

Barcode zigzag_barcode(const PModule& m, const ZigzagPath& path) {
    if (!path.faithful) throw InputError("zigzag barcode needs a faithful path");
    const auto& pts = path.points;
    const int n = static_cast<int>(pts.size());
    std::vector<long long> rk(static_cast<std::size_t>(n) * n, 0);
    auto at = [&](int i, int j) -> long long& { return rk[static_cast<std::size_t>(i) * n + j]; };
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            bool zero = (j > i && at(i, j - 1) == 0);
            at(i, j) = zero ? 0 : path_rank(m, std::vector<Point>(pts.begin() + i, pts.begin() + j + 1));
        }
    Barcode out;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            long long v = at(i, j);
            if (j + 1 < n) v -= at(i, j + 1);
            if (i > 0) v -= at(i - 1, j);
            if (i > 0 && j + 1 < n) v += at(i - 1, j + 1);
            if (v < 0) throw InvariantViolation("negative zigzag bar multiplicity");
            if (v > 0) out.push_back({i, j, v});
        }
    return out;
}

long long full_bar_multiplicity(const PModule& m, const std::vector<Point>& pts) { return path_rank(m, pts); }

std::vector<ZibEntry> zib(const PModule& m, const std::vector<ZigzagPath>& paths) {
    std::vector<ZibEntry> out;
    out.reserve(paths.size());
    for (const auto& p : paths) out.push_back({p, zigzag_barcode(m, p)});
    return out;
}

PathBoundsTable::PathBoundsTable(std::vector<Point> path, const RankProvider& rank)
    : n_(static_cast<int>(path.size())) {
    if (path.empty()) throw InputError("bounds over an empty path");
    const std::size_t sz = static_cast<std::size_t>(n_) * n_;
    m_.assign(sz, 0);
    l_.assign(sz, 0);
    tame_.assign(sz, 0);
    const long long inf = std::numeric_limits<long long>::max();
    for (int len = 1; len <= n_; ++len)
        for (int i = 0; i + len - 1 < n_; ++i) {
            int j = i + len - 1;
            std::vector<Point> sub(path.begin() + i, path.begin() + j + 1);
            PointSet hull = interval_hull(sub);
            long long r = rank(hull);
            m_[idx(i, j)] = r;
            bool t = contains_run_either_way(sub, min_zz(hull)) && contains_run_either_way(sub, max_zz(hull));
            tame_[idx(i, j)] = t;
            long long best = t ? r : inf;
            if (len > 1) best = std::min({best, l_[idx(i + 1, j)], l_[idx(i, j - 1)]});
            l_[idx(i, j)] = best;
        }
}

RankBounds rank_bounds_from_gri(const std::vector<Point>& path, const RankProvider& rank) {
    PathBoundsTable t(path, rank);
    int n = t.length();
    return {t.m(0, n - 1), t.l(0, n - 1)};
}

MultiplicityBounds multiplicity_bounds(const PathBoundsTable& t, int start, int end) {
    const int n = t.length();
    if (start < 0 || end >= n || start > end) throw InputError("not a subpath");
    MultiplicityBounds b{t.m(start, end), t.l(start, end)};
    if (end + 1 < n) {
        b.lower -= t.l(start, end + 1);
        b.upper -= t.m(start, end + 1);
    }
    if (start > 0) {
        b.lower -= t.l(start - 1, end);
        b.upper -= t.m(start - 1, end);
    }
    if (start > 0 && end + 1 < n) {
        b.lower += t.m(start - 1, end + 1);
        b.upper += t.l(start - 1, end + 1);
    }
    return b;
}

MultiplicityBounds multiplicity_bounds(const std::vector<Point>& path, int start, int end, const RankProvider& rank) {
    return multiplicity_bounds(PathBoundsTable(path, rank), start, end);
}

std::vector<std::vector<Point>> simple_paths(const PointSet& region, std::size_t cap) {
    std::vector<std::vector<Point>> out;
    std::vector<Point> cur;
    PointSet used;
    std::vector<char> on(region.size(), 0);
    auto index = [&](Point p) {
        auto it = std::lower_bound(region.begin(), region.end(), p);
        return (it != region.end() && *it == p) ? static_cast<int>(it - region.begin()) : -1;
    };
    std::function<void(int)> dfs = [&](int v) {
        cur.push_back(region[v]);
        on[v] = 1;
        if (cur.size() == 1 || cur.front() < cur.back()) {
            if (out.size() >= cap) throw CapExceeded("simple path enumeration exceeds the cap");
            out.push_back(cur);
        }
        for (Point s : kSteps) {
            int w = index({region[v].x + s.x, region[v].y + s.y});
            if (w >= 0 && !on[w]) dfs(w);
        }
        on[v] = 0;
        cur.pop_back();
    };
    for (int v = 0; v < static_cast<int>(region.size()); ++v) dfs(v);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<Point>> maximal_simple_paths(const PointSet& region, std::size_t cap) {
    std::vector<std::vector<Point>> out;
    for (auto& p : simple_paths(region, cap)) {
        PointSet on = make_point_set(p);
        auto stuck = [&](Point e) {
            for (Point s : kSteps) {
                Point nb{e.x + s.x, e.y + s.y};
                if (contains(region, nb) && !contains(on, nb)) return false;
            }
            return true;
        };
        if (stuck(p.front()) && stuck(p.back())) out.push_back(std::move(p));
    }
    return out;
}

GriEstimate gri_bounds_from_zib(const PointSet& interval, const PathRankProvider& full_bar, const FinitePoset& window,
                                std::size_t path_cap) {
    if (interval.empty()) throw InputError("estimate over an empty interval");
    if (auto p = thin_path(interval)) {
        long long v = full_bar(*p);
        return {v, v, true, "thin"};
    }
    if (auto p = simple_tame_cover(interval)) {
        long long v = full_bar(*p);
        return {v, v, true, "solid"};
    }
    GriEstimate e;
    e.method = "bounds";
    if (!window.is_grid()) throw InputError("solid superset search needs a grid window");
    for (const auto& J : enumerate_intervals(window)) {
        PointSet pts = to_points(window, J.members);
        if (pts.size() <= interval.size() || !std::includes(pts.begin(), pts.end(), interval.begin(), interval.end()))
            continue;
        if (auto p = simple_tame_cover(pts)) e.lower = std::max(e.lower, full_bar(*p));
    }
    e.upper = std::numeric_limits<long long>::max();
    for (const auto& p : simple_paths(interval, path_cap)) e.upper = std::min(e.upper, full_bar(p));
    return e;
}

}  // namespace grk

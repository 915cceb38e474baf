#include "grk/poset.hpp"

#include "grk/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>

namespace grk {

PointSet make_point_set(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

bool contains(const PointSet& s, Point p) { return std::binary_search(s.begin(), s.end(), p); }

std::size_t PointSetHash::operator()(const PointSet& s) const {
    std::size_t h = s.size() * 0x9e3779b97f4a7c15ULL;
    for (const Point& p : s) {
        std::uint64_t v = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.x)) << 32) |
                          static_cast<std::uint32_t>(p.y);
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

std::size_t MembersHash::operator()(const std::vector<int>& m) const {
    std::size_t h = m.size() * 0x9e3779b97f4a7c15ULL;
    for (int v : m) h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

FinitePoset FinitePoset::from_relations(int n, const std::vector<std::pair<int, int>>& rel) {
    if (n < 0) throw InputError("negative poset size");
    FinitePoset P;
    P.n_ = n;
    P.words_ = (static_cast<std::size_t>(n) + 63) / 64;
    P.leq_.assign(static_cast<std::size_t>(n) * P.words_, 0);
    auto setbit = [&](int a, int b) { P.leq_[static_cast<std::size_t>(a) * P.words_ + (b >> 6)] |= 1ULL << (b & 63); };
    for (int a = 0; a < n; ++a) setbit(a, a);
    for (auto [a, b] : rel) {
        if (a < 0 || b < 0 || a >= n || b >= n) throw InputError("relation element out of range");
        setbit(a, b);
    }
    // Warshall closure on bit rows.
    for (int k = 0; k < n; ++k) {
        const std::uint64_t* rk = &P.leq_[static_cast<std::size_t>(k) * P.words_];
        for (int i = 0; i < n; ++i) {
            if (i == k || !P.leq(i, k)) continue;
            std::uint64_t* ri = &P.leq_[static_cast<std::size_t>(i) * P.words_];
            for (std::size_t w = 0; w < P.words_; ++w) ri[w] |= rk[w];
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (P.leq(a, b) && P.leq(b, a))
                throw InputError("relations contain a cycle through " + std::to_string(a) + " and " +
                                 std::to_string(b));
    P.finish();
    return P;
}

void FinitePoset::finish() {
    up_.assign(n_, {});
    down_.assign(n_, {});
    edges_.clear();
    // Strict down-sets as bit rows, to test for elements strictly between a and b.
    std::vector<std::uint64_t> down(static_cast<std::size_t>(n_) * words_, 0);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (a != b && leq(a, b)) down[static_cast<std::size_t>(b) * words_ + (a >> 6)] |= 1ULL << (a & 63);
    for (int a = 0; a < n_; ++a) {
        const std::uint64_t* ra = &leq_[static_cast<std::size_t>(a) * words_];
        for (int b = 0; b < n_; ++b) {
            if (a == b || !leq(a, b)) continue;
            const std::uint64_t* db = &down[static_cast<std::size_t>(b) * words_];
            bool between = false;
            for (std::size_t w = 0; w < words_ && !between; ++w) {
                std::uint64_t m = ra[w] & db[w];
                if (static_cast<int>(w) == (a >> 6)) m &= ~(1ULL << (a & 63));
                between = m != 0;
            }
            if (!between) {
                up_[a].push_back(b);
                down_[b].push_back(a);
                edges_.emplace_back(a, b);
            }
        }
    }
    std::sort(edges_.begin(), edges_.end());
    std::vector<int> below(n_, 0);
    for (int b = 0; b < n_; ++b)
        for (int a = 0; a < n_; ++a)
            if (leq(a, b)) ++below[b];
    linext_.resize(n_);
    for (int i = 0; i < n_; ++i) linext_[i] = i;
    std::stable_sort(linext_.begin(), linext_.end(), [&](int a, int b) { return below[a] < below[b]; });
}

int FinitePoset::edge_index(int a, int b) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(a, b));
    if (it == edges_.end() || *it != std::make_pair(a, b)) return -1;
    return static_cast<int>(it - edges_.begin());
}

Point FinitePoset::coord(int e) const {
    if (!grid_) throw InputError("poset has no grid coordinates");
    return {grid_->origin.x + e / grid_->height, grid_->origin.y + e % grid_->height};
}

std::optional<int> FinitePoset::id_of(Point p) const {
    if (!grid_) return std::nullopt;
    int dx = p.x - grid_->origin.x, dy = p.y - grid_->origin.y;
    if (dx < 0 || dy < 0 || dx >= grid_->width || dy >= grid_->height) return std::nullopt;
    return dx * grid_->height + dy;
}

bool FinitePoset::operator==(const FinitePoset& o) const {
    if (n_ != o.n_) return false;
    if (grid_.has_value() != o.grid_.has_value()) return false;
    if (grid_ && (grid_->width != o.grid_->width || grid_->height != o.grid_->height ||
                  grid_->origin != o.grid_->origin))
        return false;
    return leq_ == o.leq_;
}

FinitePoset grid_poset(int width, int height, Point origin) {
    if (width < 1 || height < 1) throw InputError("grid dimensions must be positive");
    std::vector<std::pair<int, int>> rel;
    auto id = [&](int dx, int dy) { return dx * height + dy; };
    for (int dx = 0; dx < width; ++dx)
        for (int dy = 0; dy < height; ++dy) {
            if (dx + 1 < width) rel.emplace_back(id(dx, dy), id(dx + 1, dy));
            if (dy + 1 < height) rel.emplace_back(id(dx, dy), id(dx, dy + 1));
        }
    FinitePoset P = FinitePoset::from_relations(width * height, rel);
    P.grid_ = GridInfo{width, height, origin};
    return P;
}

FinitePoset chain_poset(int n, int start) { return grid_poset(n, 1, {start, 0}); }

Subposet make_subposet(std::vector<int> members, SubKind kind) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return Subposet{kind, std::move(members)};
}

bool canonical_less(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

bool canonical_less(const Subposet& a, const Subposet& b) { return canonical_less(a.members, b.members); }

void canonical_sort(std::vector<Subposet>& v) {
    std::sort(v.begin(), v.end(), [](const Subposet& a, const Subposet& b) { return canonical_less(a, b); });
}

bool is_connected(const FinitePoset& P, const std::vector<int>& s) {
    if (s.empty()) return false;
    std::vector<char> seen(s.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < s.size(); ++j)
            if (!seen[j] && P.comparable(s[i], s[j])) {
                seen[j] = 1;
                ++count;
                stack.push_back(j);
            }
    }
    return count == s.size();
}

bool is_convex(const FinitePoset& P, const std::vector<int>& s) {
    std::vector<char> in(P.size(), 0);
    for (int e : s) in[e] = 1;
    for (int c = 0; c < P.size(); ++c) {
        if (in[c]) continue;
        bool above = false, below = false;
        for (int e : s) {
            above = above || P.leq(e, c);
            below = below || P.leq(c, e);
            if (above && below) return false;
        }
    }
    return true;
}

bool is_interval(const FinitePoset& P, const std::vector<int>& s) {
    return !s.empty() && is_convex(P, s) && is_connected(P, s);
}

std::vector<int> minimal_points(const FinitePoset& P, const std::vector<int>& s) {
    std::vector<int> out;
    for (int a : s)
        if (std::none_of(s.begin(), s.end(), [&](int b) { return P.lt(b, a); })) out.push_back(a);
    return out;
}

std::vector<int> maximal_points(const FinitePoset& P, const std::vector<int>& s) {
    std::vector<int> out;
    for (int a : s)
        if (std::none_of(s.begin(), s.end(), [&](int b) { return P.lt(a, b); })) out.push_back(a);
    return out;
}

PointSet minimal_points(const PointSet& s) {
    // s is sorted by (x, y): a point is minimal iff every earlier point lies strictly above it.
    PointSet out;
    int lowest = std::numeric_limits<int>::max();
    for (Point p : s) {
        if (p.y < lowest) out.push_back(p);
        lowest = std::min(lowest, p.y);
    }
    return out;
}

PointSet maximal_points(const PointSet& s) {
    PointSet out;
    int highest = std::numeric_limits<int>::min();
    for (auto it = s.rbegin(); it != s.rend(); ++it) {
        if (it->y > highest) out.push_back(*it);
        highest = std::max(highest, it->y);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::uint64_t count_grid_intervals(int width, int height) {
    // An interval of a grid is a run of consecutive columns whose vertical segments [l, h]
    // satisfy l' <= l, h' <= h and l <= h' from one column to the next.
    const int H = height;
    std::vector<std::uint64_t> cur(static_cast<std::size_t>(H) * H, 0), nxt(cur.size());
    std::uint64_t total = 0;
    for (int x = 0; x < width; ++x) {
        for (int l2 = 0; l2 < H; ++l2)
            for (int h2 = l2; h2 < H; ++h2) {
                std::uint64_t c = 1;
                if (x > 0)
                    for (int l = l2; l <= h2; ++l)
                        for (int h = std::max(h2, l); h < H; ++h) c += cur[static_cast<std::size_t>(l) * H + h];
                nxt[static_cast<std::size_t>(l2) * H + h2] = c;
                total += c;
            }
        std::swap(cur, nxt);
    }
    return total;
}

namespace {

void check_cap(std::uint64_t count, const EnumerationConfig& cfg) {
    if (count > cfg.interval_cap)
        throw CapExceeded("interval enumeration exceeds the cap of " + std::to_string(cfg.interval_cap));
}

std::vector<Subposet> grid_intervals(const FinitePoset& P, int max_min, int max_max, const EnumerationConfig& cfg) {
    const int W = P.grid()->width, H = P.grid()->height;
    std::vector<Subposet> out;
    std::vector<int> cur;
    std::function<void(int, int, int, int, int)> extend = [&](int x, int l, int h, int mins, int maxs) {
        // Emit the interval ending at column x; maxs counts strict drops of h so far.
        if (maxs + 1 <= max_max) {
            check_cap(out.size() + 1, cfg);
            out.push_back(make_subposet(cur, SubKind::Interval));
        }
        if (x + 1 >= W) return;
        for (int l2 = 0; l2 <= l; ++l2)
            for (int h2 = std::max(l, l2); h2 <= h; ++h2) {
                int m2 = mins + (l2 < l ? 1 : 0);
                int x2 = maxs + (h2 < h ? 1 : 0);
                if (m2 > max_min || x2 + 1 > max_max) continue;
                std::size_t before = cur.size();
                for (int y = l2; y <= h2; ++y) cur.push_back((x + 1) * H + y);
                extend(x + 1, l2, h2, m2, x2);
                cur.resize(before);
            }
    };
    for (int x = 0; x < W; ++x)
        for (int l = 0; l < H; ++l)
            for (int h = l; h < H; ++h) {
                cur.clear();
                for (int y = l; y <= h; ++y) cur.push_back(x * H + y);
                extend(x, l, h, 1, 0);
            }
    canonical_sort(out);
    return out;
}

}  // namespace

std::vector<Subposet> enumerate_intervals_brute(const FinitePoset& P, int max_min, int max_max,
                                                const EnumerationConfig& cfg) {
    const int n = P.size();
    if (n > kBruteForceMaxElements)
        throw CapExceeded("subset enumeration limited to " + std::to_string(kBruteForceMaxElements) + " elements");
    std::vector<Subposet> out;
    std::vector<int> s;
    for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
        s.clear();
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) s.push_back(i);
        if (!is_interval(P, s)) continue;
        if (max_min != kUnbounded && static_cast<int>(minimal_points(P, s).size()) > max_min) continue;
        if (max_max != kUnbounded && static_cast<int>(maximal_points(P, s).size()) > max_max) continue;
        check_cap(out.size() + 1, cfg);
        out.push_back(Subposet{SubKind::Interval, s});
    }
    canonical_sort(out);
    return out;
}

std::vector<Subposet> enumerate_intervals(const FinitePoset& P, int max_min, int max_max,
                                          const EnumerationConfig& cfg) {
    if (max_min < 1 || max_max < 1) throw InputError("interval filters must be at least 1");
    if (P.is_grid()) {
        if (max_min == kUnbounded && max_max == kUnbounded)
            check_cap(count_grid_intervals(P.grid()->width, P.grid()->height), cfg);
        return grid_intervals(P, max_min, max_max, cfg);
    }
    return enumerate_intervals_brute(P, max_min, max_max, cfg);
}

std::vector<Subposet> enumerate_segments(const FinitePoset& P) {
    std::vector<Subposet> out;
    for (int a = 0; a < P.size(); ++a)
        for (int b = 0; b < P.size(); ++b) {
            if (!P.leq(a, b)) continue;
            std::vector<int> m;
            for (int c = 0; c < P.size(); ++c)
                if (P.leq(a, c) && P.leq(c, b)) m.push_back(c);
            out.push_back(Subposet{SubKind::Segment, std::move(m)});
        }
    canonical_sort(out);
    return out;
}

std::vector<Subposet> enumerate_connected(const FinitePoset& P, const EnumerationConfig& cfg) {
    const int n = P.size();
    if (n > cfg.connected_cap)
        throw CapExceeded("connected-subset enumeration limited to " + std::to_string(cfg.connected_cap) +
                          " elements");
    // Grow connected sets one comparable element at a time; every connected set is reachable.
    std::vector<std::uint32_t> nbr(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && P.comparable(a, b)) nbr[a] |= 1U << b;
    std::vector<char> seen(std::size_t{1} << n, 0);
    std::vector<std::uint32_t> frontier;
    for (int a = 0; a < n; ++a) {
        seen[1U << a] = 1;
        frontier.push_back(1U << a);
    }
    std::vector<Subposet> out;
    while (!frontier.empty()) {
        std::uint32_t m = frontier.back();
        frontier.pop_back();
        Subposet s{SubKind::Connected, {}};
        std::uint32_t reach = 0;
        for (int i = 0; i < n; ++i)
            if (m >> i & 1) {
                s.members.push_back(i);
                reach |= nbr[i];
            }
        out.push_back(std::move(s));
        reach &= ~m;
        for (int i = 0; i < n; ++i)
            if (reach >> i & 1) {
                std::uint32_t m2 = m | (1U << i);
                if (!seen[m2]) {
                    seen[m2] = 1;
                    frontier.push_back(m2);
                }
            }
    }
    canonical_sort(out);
    return out;
}

ContainmentPoset containment_poset(std::vector<Subposet> items) {
    {
        std::vector<std::vector<int>> sorted;
        sorted.reserve(items.size());
        for (const auto& s : items) sorted.push_back(s.members);
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InputError("containment poset items must be distinct");
    }
    const int n = static_cast<int>(items.size());
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && items[j].members.size() <= items[i].members.size() &&
                std::includes(items[i].members.begin(), items[i].members.end(), items[j].members.begin(),
                              items[j].members.end()))
                rel.emplace_back(i, j);
    ContainmentPoset cp;
    cp.order = std::make_shared<const FinitePoset>(FinitePoset::from_relations(n, rel));
    cp.items = std::move(items);
    return cp;
}

PointSet epsilon_thicken(const PointSet& s, int eps) {
    if (eps < 0) throw InputError("thickening radius must be nonnegative");
    if (eps == 0 || s.empty()) return s;
    // Dilate each column into merged y-ranges, then spread the ranges over neighbouring columns.
    std::map<int, std::vector<std::pair<int, int>>> cols;
    for (std::size_t i = 0; i < s.size();) {
        int x = s[i].x;
        auto& ranges = cols[x];
        for (; i < s.size() && s[i].x == x; ++i) {
            int lo = s[i].y - eps, hi = s[i].y + eps;
            if (!ranges.empty() && lo <= ranges.back().second + 1)
                ranges.back().second = std::max(ranges.back().second, hi);
            else
                ranges.push_back({lo, hi});
        }
    }
    PointSet out;
    const int x0 = cols.begin()->first - eps, x1 = cols.rbegin()->first + eps;
    for (int x = x0; x <= x1; ++x) {
        std::vector<std::pair<int, int>> ranges;
        for (auto it = cols.lower_bound(x - eps); it != cols.end() && it->first <= x + eps; ++it)
            ranges.insert(ranges.end(), it->second.begin(), it->second.end());
        std::sort(ranges.begin(), ranges.end());
        int cur = std::numeric_limits<int>::min();
        for (auto [lo, hi] : ranges)
            for (int y = std::max(lo, cur); y <= hi; ++y) {
                out.push_back({x, y});
                cur = y + 1;
            }
    }
    return out;
}

PointSet to_points(const FinitePoset& P, const std::vector<int>& members) {
    std::vector<Point> pts;
    pts.reserve(members.size());
    for (int e : members) pts.push_back(P.coord(e));
    return make_point_set(std::move(pts));
}

std::optional<std::vector<int>> to_members(const FinitePoset& P, const PointSet& pts) {
    std::vector<int> out;
    out.reserve(pts.size());
    for (Point p : pts) {
        auto id = P.id_of(p);
        if (!id) return std::nullopt;
        out.push_back(*id);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace grk

#include "grk/errors.hpp"
#include "grk/poset.hpp"
#include "grk/random.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace grk;

namespace {

std::vector<FinitePoset> suite() {
    std::vector<FinitePoset> out;
    for (int w = 1; w <= 4; ++w)
        for (int h = 1; h <= 3 && w * h <= 12; ++h) out.push_back(grid_poset(w, h));
    out.push_back(chain_poset(8));
    Rng rng(3);
    for (int i = 0; i < 12; ++i) out.push_back(random_poset(rng, 5 + i % 6, 0.25 + 0.05 * (i % 4)));
    // antichain, V and diamond shapes
    out.push_back(FinitePoset::from_relations(4, {}));
    out.push_back(FinitePoset::from_relations(3, {{0, 1}, {0, 2}}));
    out.push_back(FinitePoset::from_relations(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
    return out;
}

}  // namespace

TEST_CASE("grid poset layout") {
    FinitePoset P = grid_poset(3, 2, {1, 5});
    CHECK(P.size() == 6);
    CHECK(P.coord(0) == Point{1, 5});
    CHECK(P.coord(1) == Point{1, 6});
    CHECK(P.coord(2) == Point{2, 5});
    CHECK(*P.id_of({3, 6}) == 5);
    CHECK_FALSE(P.id_of({0, 5}).has_value());
    CHECK(P.cover_edges().size() == 7);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) CHECK(P.leq(a, b) == point_leq(P.coord(a), P.coord(b)));
    FinitePoset C = chain_poset(4);
    CHECK(C.coord(0) == Point{1, 0});
    CHECK(C.leq(0, 3));
}

TEST_CASE("relations close transitively and cycles are rejected") {
    FinitePoset P = FinitePoset::from_relations(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(P.leq(0, 2));
    CHECK(P.cover_edges().size() == 3);
    CHECK_THROWS_AS(FinitePoset::from_relations(3, {{0, 1}, {1, 2}, {2, 0}}), InputError);
    CHECK_THROWS_AS(FinitePoset::from_relations(2, {{0, 5}}), InputError);
}

TEST_CASE("linear extensions respect the order") {
    for (const auto& P : suite()) {
        std::vector<int> pos(P.size());
        const auto& L = P.linear_extension();
        REQUIRE(static_cast<int>(L.size()) == P.size());
        for (int i = 0; i < P.size(); ++i) pos[L[i]] = i;
        for (int a = 0; a < P.size(); ++a)
            for (int b = 0; b < P.size(); ++b)
                if (P.lt(a, b)) CHECK(pos[a] < pos[b]);
    }
}

TEST_CASE("interval enumeration matches subset filtering") {
    for (const auto& P : suite()) {
        CHECK(oracle::sorted_members(enumerate_intervals(P)) == oracle::intervals(P));
        CHECK(oracle::sorted_members(enumerate_intervals_brute(P)) == oracle::intervals(P));
        for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
            CHECK(oracle::sorted_members(enumerate_intervals(P, m, n)) == oracle::intervals(P, m, n));
            CHECK(oracle::sorted_members(enumerate_intervals_brute(P, m, n)) == oracle::intervals(P, m, n));
        }
        auto conn = oracle::subsets_where(P, [&](const std::vector<int>& s) { return oracle::connected(P, s); });
        CHECK(oracle::sorted_members(enumerate_connected(P)) == conn);
    }
}

TEST_CASE("interval predicates agree with the filters") {
    for (const auto& P : suite()) {
        if (P.size() > 10) continue;
        for (std::uint32_t mask = 1; mask < (1U << P.size()); ++mask) {
            std::vector<int> s;
            for (int i = 0; i < P.size(); ++i)
                if (mask >> i & 1U) s.push_back(i);
            CHECK(is_connected(P, s) == oracle::connected(P, s));
            CHECK(is_convex(P, s) == oracle::convex(P, s));
            CHECK(is_interval(P, s) == (oracle::connected(P, s) && oracle::convex(P, s)));
        }
    }
}

TEST_CASE("grid interval counts") {
    CHECK(count_grid_intervals(1, 1) == 1);
    CHECK(count_grid_intervals(3, 3) == 83);
    CHECK(count_grid_intervals(10, 10) == 1497925315ULL);
    for (int w = 1; w <= 5; ++w)
        for (int h = 1; h <= 4; ++h)
            CHECK(count_grid_intervals(w, h) == enumerate_intervals(grid_poset(w, h)).size());
    // A chain [n] has n(n+1)/2 intervals.
    CHECK(count_grid_intervals(7, 1) == 28);
}

TEST_CASE("enumeration guards") {
    CHECK_THROWS_AS(enumerate_intervals(grid_poset(10, 10)), CapExceeded);
    EnumerationConfig tight{50, 16};
    CHECK_THROWS_AS(enumerate_intervals(grid_poset(4, 4), kUnbounded, kUnbounded, tight), CapExceeded);
    CHECK_THROWS_AS(enumerate_connected(grid_poset(5, 4)), CapExceeded);
    CHECK_THROWS_AS(enumerate_intervals(grid_poset(3, 3), 0, 1), InputError);
}

TEST_CASE("segments are the comparable pairs") {
    FinitePoset P = grid_poset(3, 2);
    auto seg = enumerate_segments(P);
    std::size_t pairs = 0;
    for (int a = 0; a < P.size(); ++a)
        for (int b = 0; b < P.size(); ++b) pairs += P.leq(a, b);
    CHECK(seg.size() == pairs);
    for (const auto& s : seg) {
        CHECK(is_interval(P, s.members));
        CHECK(minimal_points(P, s.members).size() == 1);
        CHECK(maximal_points(P, s.members).size() == 1);
    }
}

TEST_CASE("canonical order") {
    std::vector<Subposet> v{make_subposet({0, 1}), make_subposet({2}), make_subposet({0}), make_subposet({1, 2, 3})};
    canonical_sort(v);
    CHECK(v[0].members == std::vector<int>{0});
    CHECK(v[1].members == std::vector<int>{2});
    CHECK(v[2].members == std::vector<int>{0, 1});
    CHECK(v[3].members == std::vector<int>{1, 2, 3});
}

TEST_CASE("containment order is reverse inclusion") {
    FinitePoset P = grid_poset(2, 2);
    ContainmentPoset cp = containment_poset(enumerate_intervals(P));
    for (std::size_t i = 0; i < cp.items.size(); ++i)
        for (std::size_t j = 0; j < cp.items.size(); ++j) {
            const auto& a = cp.items[i].members;
            const auto& b = cp.items[j].members;
            bool sup = std::includes(a.begin(), a.end(), b.begin(), b.end());
            CHECK(cp.order->leq(static_cast<int>(i), static_cast<int>(j)) == sup);
        }
    CHECK_THROWS_AS(containment_poset({make_subposet({0}), make_subposet({0})}), InputError);
}

TEST_CASE("thickening matches the sup-norm ball") {
    Rng rng(8);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Point> pts;
        for (int k = 0; k < 1 + trial % 5; ++k) pts.push_back({c(rng), c(rng)});
        PointSet s = make_point_set(pts);
        for (int eps = 0; eps <= 2; ++eps) {
            std::vector<Point> ball;
            for (Point q : s)
                for (int dx = -eps; dx <= eps; ++dx)
                    for (int dy = -eps; dy <= eps; ++dy) ball.push_back({q.x + dx, q.y + dy});
            CHECK(epsilon_thicken(s, eps) == make_point_set(ball));
        }
    }
    CHECK_THROWS_AS(epsilon_thicken({{0, 0}}, -1), InputError);
}

TEST_CASE("minimal and maximal points of point sets") {
    PointSet s = make_point_set({{0, 1}, {1, 0}, {1, 1}, {2, 2}, {0, 2}});
    CHECK(minimal_points(s) == PointSet{{0, 1}, {1, 0}});
    CHECK(maximal_points(s) == PointSet{{2, 2}});
    FinitePoset P = grid_poset(3, 3);
    auto mem = to_members(P, s);
    REQUIRE(mem.has_value());
    CHECK(to_points(P, *mem) == s);
    CHECK_FALSE(to_members(P, {{5, 5}}).has_value());
}

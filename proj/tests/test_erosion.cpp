#include "grk/erosion.hpp"
#include "grk/errors.hpp"
#include "grk/random.hpp"

#include <doctest.h>

using namespace grk;

namespace {

PosetPtr share(FinitePoset P) { return std::make_shared<const FinitePoset>(std::move(P)); }

bool naive_ok(const PModule& a, const PModule& b, const std::vector<PointSet>& coll, int eps) {
    for (const auto& I : coll) {
        PointSet T = epsilon_thicken(I, eps);
        if (generalized_rank(a, T) > generalized_rank(b, I)) return false;
        if (generalized_rank(b, T) > generalized_rank(a, I)) return false;
    }
    return true;
}

std::optional<int> naive_distance(const PModule& a, const PModule& b, int m, int n) {
    GridInfo box = bounding_box(*a.poset().grid(), *b.poset().grid());
    auto coll = grid_intervals_mn(box, m, n);
    for (int eps = 0; eps <= std::max(box.width, box.height); ++eps)
        if (naive_ok(a, b, coll, eps)) return eps;
    return std::nullopt;
}

}  // namespace

TEST_CASE("binary search agrees with a linear scan") {
    Rng rng(61);
    auto G = share(grid_poset(4, 4));
    for (int trial = 0; trial < 12; ++trial) {
        PModule a = random_fp_module(rng, G, 3, 3, 2);
        PModule b = trial % 3 == 0 ? shift_module(a, 1 + trial % 2) : random_fp_module(rng, G, 3, 3, 2);
        for (auto [m, n] : {std::pair{1, 1}, {2, 2}}) {
            ErosionResult r = erosion_distance(a, b, m, n);
            CHECK(r.distance == naive_distance(a, b, m, n));
            if (r.distance && *r.distance > 0) {
                REQUIRE(r.witness.has_value());
                auto coll = std::vector<PointSet>{*r.witness};
                CHECK_FALSE(naive_ok(a, b, coll, *r.distance - 1));
            }
        }
    }
}

TEST_CASE("feasibility is monotone in the radius") {
    Rng rng(62);
    auto G = share(grid_poset(4, 4));
    PModule a = random_fp_module(rng, G, 4, 3, 2), b = random_fp_module(rng, G, 4, 3, 2);
    auto coll = erosion_collection(a, b, 2, 2);
    bool seen_ok = false;
    for (int eps = 0; eps <= 5; ++eps) {
        bool ok = verify_erosion(a, b, coll, eps).ok;
        if (seen_ok) CHECK(ok);
        seen_ok = seen_ok || ok;
        CHECK(ok == naive_ok(a, b, coll, eps));
    }
    CHECK_THROWS_AS(verify_erosion(a, b, coll, -1), InputError);
}

TEST_CASE("witness is the first failing interval") {
    Rng rng(63);
    auto G = share(grid_poset(4, 4));
    PModule a = random_fp_module(rng, G, 4, 2, 2);
    PModule z = PModule::zero(G, 2);
    auto coll = erosion_collection(a, z, 1, 1);
    for (int threads : {1, 3}) {
        ErosionCheck c = verify_erosion(a, z, coll, 0, threads);
        REQUIRE_FALSE(c.ok);
        std::size_t first = 0;
        while (naive_ok(a, z, {coll[first]}, 0)) ++first;
        CHECK(*c.witness == coll[first]);
        CHECK(c.first_side);
    }
}

TEST_CASE("shifts, symmetry and the triangle inequality") {
    Rng rng(64);
    auto G = share(grid_poset(4, 4));
    for (int trial = 0; trial < 8; ++trial) {
        PModule a = random_fp_module(rng, G, 3, 3, 2), b = random_fp_module(rng, G, 3, 3, 2),
                c = random_fp_module(rng, G, 3, 3, 2);
        CHECK(erosion_distance(a, a, 2, 2).distance == 0);
        for (int delta : {0, 1, 2}) {
            auto d = erosion_distance(a, shift_module(a, delta), 2, 2).distance;
            REQUIRE(d.has_value());
            CHECK(*d <= delta);
        }
        auto dab = erosion_distance(a, b, 2, 1).distance, dba = erosion_distance(b, a, 2, 1).distance;
        CHECK(dab == dba);
        auto dbc = erosion_distance(b, c, 2, 1).distance, dac = erosion_distance(a, c, 2, 1).distance;
        if (dab && dbc) {
            REQUIRE(dac.has_value());
            CHECK(*dac <= *dab + *dbc);
        }
    }
}

TEST_CASE("ambient ranks vanish outside the window") {
    auto G = share(grid_poset(2, 2, {1, 1}));
    PModule k = interval_module(G, {0, 1, 2, 3}, 2);
    AmbientRanks r(k);
    CHECK(r.rank({{1, 1}}) == 1);
    CHECK(r.rank({{0, 1}}) == 0);
    CHECK(r.rank_thickened({{1, 1}}, 1) == 0);
    CHECK(r.rank_thickened({{1, 1}, {2, 2}}, 0) == 1);
    PModule s = shift_module(k, 3);
    CHECK(s.poset().grid()->origin == Point{-2, -2});
    CHECK(s.dim_at({-2, -2}) == 1);
    CHECK_THROWS_AS(shift_module(k, -1), InputError);
}

TEST_CASE("collection sizes and timing rows") {
    GridInfo box{6, 6, {0, 0}};
    CHECK(grid_intervals_mn(box, 1, 1).size() == 441);
    CHECK(grid_intervals_mn(box, 2, 1).size() == 1666);
    CHECK(grid_intervals_mn(box, 2, 2).size() == 9016);
    TradeoffRow row = tradeoff_timing(4, 2, 1, 7, 0.0);
    CHECK(row.collection_size == 200);
    CHECK(row.repeats >= 1);
    CHECK(row.seconds >= 0);
}

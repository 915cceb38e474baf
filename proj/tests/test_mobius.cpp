#include "grk/errors.hpp"
#include "grk/mobius.hpp"
#include "grk/random.hpp"

#include <doctest.h>

using namespace grk;

namespace {

PosetPtr share(FinitePoset P) { return std::make_shared<const FinitePoset>(std::move(P)); }

// mu from its defining recursion over all elements between p and q.
long long naive_mu(const FinitePoset& P, int p, int q) {
    if (!P.leq(p, q)) return 0;
    if (p == q) return 1;
    long long s = 0;
    for (int r = 0; r < P.size(); ++r)
        if (r != q && P.leq(p, r) && P.leq(r, q)) s += naive_mu(P, p, r);
    return -s;
}

}  // namespace

TEST_CASE("zeta times mu is delta") {
    Rng rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        auto P = share(random_poset(rng, 1 + trial % 12, 0.3));
        IncidenceElement mu = mobius_function(P);
        CHECK(multiply(zeta(P), mu) == delta(P));
        CHECK(multiply(mu, zeta(P)) == delta(P));
    }
}

TEST_CASE("mu agrees with the defining recursion") {
    Rng rng(32);
    for (int trial = 0; trial < 20; ++trial) {
        auto P = share(random_poset(rng, 7, 0.35));
        IncidenceElement mu = mobius_function(P);
        for (int p = 0; p < P->size(); ++p)
            for (int q = 0; q < P->size(); ++q) CHECK(mu(p, q) == naive_mu(*P, p, q));
    }
}

TEST_CASE("classical Möbius functions") {
    // chain: 1 on the diagonal, -1 on covers, 0 otherwise
    auto C = share(chain_poset(5));
    IncidenceElement mc = mobius_function(C);
    for (int p = 0; p < 5; ++p)
        for (int q = p; q < 5; ++q) CHECK(mc(p, q) == (q == p ? 1 : q == p + 1 ? -1 : 0));

    // Boolean lattice on 4 atoms: (-1)^{|B \ A|}
    std::vector<std::pair<int, int>> rel;
    for (int a = 0; a < 16; ++a)
        for (int b = 0; b < 16; ++b)
            if (a != b && (a & b) == a) rel.emplace_back(a, b);
    auto B = share(FinitePoset::from_relations(16, rel));
    IncidenceElement mb = mobius_function(B);
    for (int a = 0; a < 16; ++a)
        for (int b = 0; b < 16; ++b)
            if ((a & b) == a) CHECK(mb(a, b) == (__builtin_popcount(b & ~a) % 2 ? -1 : 1));

    // grid: product of chain values
    auto G = share(grid_poset(3, 3));
    IncidenceElement mg = mobius_function(G);
    for (int p = 0; p < 9; ++p)
        for (int q = 0; q < 9; ++q) {
            Point a = G->coord(p), b = G->coord(q);
            auto chain_mu = [](int s, int t) { return t == s ? 1 : t == s + 1 ? -1 : 0; };
            long long expect = (a.x <= b.x && a.y <= b.y) ? chain_mu(a.x, b.x) * chain_mu(a.y, b.y) : 0;
            CHECK(mg(p, q) == expect);
        }
}

TEST_CASE("inversion recovers f from g = f * zeta") {
    Rng rng(33);
    std::uniform_int_distribution<int> val(-5, 5);
    for (int trial = 0; trial < 40; ++trial) {
        auto P = share(random_poset(rng, 1 + trial % 10, 0.4));
        PosetFunction f(P->size());
        for (auto& v : f) v = val(rng);
        PosetFunction g = convolve(f, zeta(P));
        CHECK(mobius_invert(*P, g) == f);
        CHECK(convolve(g, mobius_function(P)) == f);
        CHECK(is_convolvable(*P, f));
    }
    auto P = share(chain_poset(3));
    CHECK_THROWS_AS(mobius_invert(*P, {1, 2}), InputError);
}

TEST_CASE("incidence elements reject incomparable pairs") {
    auto P = share(FinitePoset::from_relations(3, {{0, 1}}));
    IncidenceElement e(P);
    CHECK_NOTHROW(e.set(0, 1, 4));
    CHECK(e(0, 1) == 4);
    CHECK(e(1, 2) == 0);
    CHECK_THROWS_AS(e.set(1, 2, 1), InputError);
    CHECK_THROWS_AS(e.set(1, 0, 1), InputError);
}

#pragma once

#include "grk/pmodule.hpp"
#include "grk/poset.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace grk {

// Grid module from coordinates. Missing maps are the identity between one-dimensional spaces, zero otherwise.
PModule grid_module(PosetPtr grid, const std::map<Point, int>& dims, const std::map<std::pair<Point, Point>, Matrix>& maps,
                    std::uint32_t p = kDefaultPrime);
Subposet subposet_of(const FinitePoset& grid, const PointSet& pts);
// Interval [lo, hi] of a chain built with chain_poset(n, 1).
Subposet chain_interval(int lo, int hi);

struct ChainPairFixture {
    PosetPtr poset;
    std::vector<Subposet> small;  // [2,3], [1,3], [2,4]
    std::vector<Subposet> big;    // small plus [1,4]
    Subposet extra;               // [1,4]
    PModule plus;                 // k[1,4] + k[2,3]
    PModule minus;                // k[1,3] + k[2,4]
};
ChainPairFixture chain4_pair(std::uint32_t p = kDefaultPrime);

struct SquareIndicatorFixture {
    PosetPtr poset;  // 2 x 2 grid
    Subposet I, J1, J2, J3;
    PModule M;  // k_I + k_J3
    PModule N;  // k_J1 + k_J2
};
SquareIndicatorFixture square_indicator(std::uint32_t p = kDefaultPrime);

struct Grid3PairFixture {
    PosetPtr poset;  // 3 x 3 grid with origin (1, 1)
    PModule M, N;
    std::vector<Point> path;
};
Grid3PairFixture grid3_pair(std::uint32_t p = kDefaultPrime);

struct HookPairFixture {
    PosetPtr poset;  // 4 x 2 grid
    PointSet I;      // six points: (0,1) (1,1) (2,1) (1,0) (2,0) (3,0)
    PModule M, N, M2;
};
HookPairFixture zib_vs_int(std::uint32_t p = kDefaultPrime);

struct BettiPairFixture {
    PosetPtr poset;  // 4 x 4 grid
    PModule M, N;
    std::vector<Point> path;  // (0,2) (1,2) (2,2) (2,1) (2,0)
};
BettiPairFixture betti_pair(std::uint32_t p = kDefaultPrime);

struct TameCounterexample {
    int window = 0;        // grid [-n, n]^2
    PosetPtr poset;        // the window
    PosetPtr quotient;     // six-point poset
    std::vector<int> pi;   // window element -> quotient element
    PModule N;             // module over the quotient
    PModule M;             // pullback to the window
    int min_shift = 0, max_shift = 0;
    PointSet I(int a) const;  // I_a clipped to the window
};
TameCounterexample tame_counterexample(int window, std::uint32_t p = kDefaultPrime);

struct FixtureInfo {
    std::string name;
    std::string description;
    bool takes_window = false;
};
const std::vector<FixtureInfo>& fixture_list();
std::vector<std::pair<std::string, PModule>> fixture_modules(const std::string& name, int window = 4,
                                                             std::uint32_t p = kDefaultPrime);
// Evaluates the checks attached to a fixture; "ok" is true when they all hold.
nlohmann::json run_fixture(const std::string& name, int window = 4, std::uint32_t p = kDefaultPrime, int threads = 1,
                           int samples = 50);

}  // namespace grk

#pragma once

#include "grk/pmodule.hpp"
#include "grk/poset.hpp"

#include <random>
#include <utility>
#include <vector>

namespace grk {

using Rng = std::mt19937_64;

// Random partial order on n elements: each pair i < j is related with probability density.
FinitePoset random_poset(Rng& rng, int n, double density);

// Cokernel of random relations between free modules generated at random elements.
PModule random_fp_module(Rng& rng, PosetPtr P, int generators, int relations, std::uint32_t p = kDefaultPrime);

struct DecomposableModule {
    PModule module;
    std::vector<std::vector<int>> summands;  // sorted list of interval supports, with repeats
};
// Direct sum of random intervals, hidden under random changes of basis at every element.
DecomposableModule random_interval_decomposable(Rng& rng, PosetPtr P, int max_summands,
                                                std::uint32_t p = kDefaultPrime);

// Conjugate every space by a random invertible matrix.
PModule disguise(Rng& rng, const PModule& m);

// Module over a chain with random dims and random edge matrices.
PModule random_chain_module(Rng& rng, PosetPtr chain, int max_dim, std::uint32_t p = kDefaultPrime);

// Faithful walk with the given number of points, staying inside the grid window; may revisit points.
std::vector<Point> random_walk(Rng& rng, const GridInfo& window, int points);

Matrix random_matrix(Rng& rng, int rows, int cols, std::uint32_t p);
Matrix random_invertible(Rng& rng, int n, std::uint32_t p);

}  // namespace grk

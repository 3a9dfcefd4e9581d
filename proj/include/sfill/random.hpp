#pragma once

#include <random>

#include "sfill/chain.hpp"

namespace sfill {

using Rng = std::mt19937_64;

// `terms` draws of random dim-simplices of K_n (repeats merge). Q
// coefficients are p/q with |p| <= 5, 1 <= q <= 4.
Chain random_chain(Field field, int n, int dim, int terms, Rng& rng);

// Boundary of a random d-chain on {1..n}; never zero.
Chain random_cycle(Field field, int n, int d, Rng& rng);

}  // namespace sfill

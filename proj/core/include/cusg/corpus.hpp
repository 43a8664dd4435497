#pragma once

#include "cusg/completion.hpp"
#include "cusg/finpom.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace cusg {

// Submonoid of a product of 1-3 components from {E_0..E_4, max-chains C_2..C_4},
// generated by 1-3 random elements, optionally collapsed to a Rees quotient. The order
// is the induced one, the algebraic one, or the algebraic one enlarged by random
// comparisons. Sizes never exceed max_size.
FinPom random_pom(std::mt19937_64& rng, int max_size = 6);
std::vector<FinPom> pom_corpus(std::uint64_t seed, int count, int max_size = 6);

// Random FinW over a random_pom base satisfying the auxiliary-relation conditions and
// W1, W3, W4. The relation is the order, an order factored through a submonoid, or a
// random relation closed under a ≤ b ≺ c ≤ d ⇒ a ≺ d.
FinW random_finw(std::mt19937_64& rng, int max_size = 6);
std::vector<FinW> finw_corpus(std::uint64_t seed, int count, int max_size = 6);

}  // namespace cusg

#pragma once

#include <cstdint>
#include <random>

#include "skein/diagram.hpp"
#include "skein/oq.hpp"

namespace skein {

using Rng = std::mt19937_64;

// uniform in [0, k); avoids the implementation-defined std distributions
inline int pick(Rng& rng, int k) { return static_cast<int>(rng() % static_cast<std::uint64_t>(k)); }

struct WebGenOptions {
  int max_width = 5;
  int max_columns = 6;
  bool vertices = true;
  bool mixed = true;  // allow - strands
};

SlicedWeb random_web(int n, Rng& rng, const WebGenOptions& opt = {});
// Fully stated; with probability 3/4 the left states are drawn from the
// nonzero entries of the chosen right column.
StatedWeb random_stated_web(int n, Rng& rng, const WebGenOptions& opt = {});
States random_states(int n, std::size_t len, Rng& rng);

// degree <= 2, coefficients +-v^k with |k| <= 3
NCPoly random_element(int n, Rng& rng, int max_terms = 3);
Monomial random_monomial(int n, Rng& rng, int max_degree);

}  // namespace skein

#pragma once

#include <vector>

#include "qrmult/character.hpp"
#include "qrmult/lattice.hpp"

namespace qrmult {

/// Linear torus action on the homogeneous coordinates of projective n-space.
/// Sections of O(m) are the degree-m monomials; z^a has weight Σ a_i·w_i.
struct ProjectiveActionSpec {
  std::vector<WeightVector> coord_weights;  // n+1 entries
  std::int64_t degree = 1;                  // m
};

/// Brute-force character: enumerates every exponent tuple with Σ a_i = m.
CharacterTable monomial_character(const ProjectiveActionSpec& spec);

/// binomial(m + n, n)
Integer total_dimension(const ProjectiveActionSpec& spec);

/// Parses "1;-1;0" or "1,0;0,1;0,0" (weights separated by ';').
std::vector<WeightVector> parse_weight_list(std::string_view text);

}  // namespace qrmult

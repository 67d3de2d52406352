#pragma once

// Seeded randomized property suites. Each run draws `count` instances from
// SplitMix64(seed) and checks one identity exactly.

#include <cstdint>
#include <string>

#include "veronormal/gradedmap.hpp"
#include "veronormal/splitmix.hpp"

namespace veronormal {

struct PropertyResult {
  std::string name;
  int instances = 0;
  int failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0 && instances > 0; }
};

HomPoly random_poly(SplitMix64& rng, int num_vars, int degree, int max_terms = 5);

// Twists of the source/target in [-2, 2]; entries with negative degree are
// zero, the rest random with roughly a quarter zero.
GradedMap random_graded_map(SplitMix64& rng, int num_vars, const std::vector<int>& source,
                            const std::vector<int>& target);

// A presentation on P^1 with locally free cokernel, drawn from the normal,
// tangent and dual-delta presentations pulled back along random lines and
// rational normal curves. `label` describes the draw.
GradedMap random_bundle_presentation(SplitMix64& rng, std::string& label);

// sum_i Z_i dp/dZ_i = deg(p) p
PropertyResult check_euler_identity(int count, std::uint64_t seed);
// substitute(p q) = substitute(p) substitute(q)
PropertyResult check_substitution_homomorphism(int count, std::uint64_t seed);
// stratum(g o f, m) = stratum(g, m) stratum(f, m)
PropertyResult check_stratum_functoriality(int count, std::uint64_t seed);
// pullback(g o f, c) = pullback(g, c) o pullback(f, c)
PropertyResult check_pullback_compose(int count, std::uint64_t seed);
// h0 from the splitting type equals dim coker of the section map wherever
// H^1 of the source twist vanishes, over [-max b - 2, max b + 2].
PropertyResult check_h0_oracle(int count, std::uint64_t seed);
// sum of splitting degrees = sum target twists - sum source twists
PropertyResult check_degree_conservation(int count, std::uint64_t seed);

}  // namespace veronormal

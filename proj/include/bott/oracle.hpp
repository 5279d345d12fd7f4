#pragma once

// Brute-force cross-checks. Everything here goes through generic exact linear
// algebra or enumeration and shares no code path with the fast routines it
// checks (other than ray_vector, which is the definition of the fan).

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bott/classify.hpp"

namespace bott::oracle {

/// Wall relation by a generic rational solve of u_b in the basis {u_a} + wall.
CurveClass wall_relation_generic(const BottMatrix& m, const Wall& wall);

/// h_j^i by eliminating the D_{rho^-} from the principal divisors div(chi^{e_k^*})
/// with a generic rational solve.
IntMatrix h_table_by_elimination(const BottMatrix& m);

/// Toric Kleiman test: D . V(tau) > 0 (strict) or >= 0 on every wall.
bool positive_on_all_walls(const BottMatrix& m, const ToricDivisor& d, bool strict);

/// Random generalized Cartan matrix: each off-diagonal pair is zero with
/// probability 1/2, otherwise both entries are drawn from [min_entry, -1].
GeneralizedCartanMatrix random_gcm(std::mt19937_64& rng, int rank, Int min_entry = -4);
Word random_word(std::mt19937_64& rng, const GeneralizedCartanMatrix& gcm, int min_length, int max_length);
ToricDivisor random_divisor(std::mt19937_64& rng, int length, Int bound);

struct CheckTally {
  std::string name;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::string first_failure;
};

/// Seeded fuzz run over random words of length <= max_length; exhaustive
/// wall checks only for length <= wall_limit.
std::vector<CheckTally> self_test(std::uint64_t seed, int cases, int max_length = 10, int wall_limit = 7);

}  // namespace bott::oracle

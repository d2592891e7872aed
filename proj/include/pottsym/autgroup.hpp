#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

#include "pottsym/model.hpp"
#include "pottsym/perm.hpp"

namespace pottsym {

inline constexpr long kElementLimit = 100000;

// Permutations commuting with the coupling matrix: J'_{s(i)s(j)} = J'_{ij}.
bool commutes_with_coupling(const PottsModel& model, const Permutation& sigma);

struct AutGroup {
  int n = 0;
  std::vector<Permutation> generators;  // discovery order
  mpz_class order = 1;
  std::vector<mpz_class> orbitSizes;    // per base point 0..n-1
  // Sorted full element list, present when order <= kElementLimit.
  std::optional<std::vector<Permutation>> elements;

  bool contains(const Permutation& p) const;  // requires elements
};

// Partition-refinement backtracking over a stabilizer chain with base
// 0, 1, ..., n-1; deterministic generator output.
AutGroup automorphisms(const PottsModel& model);

// Exhaustive filter over all n! permutations; n <= 8.
AutGroup brute_force_automorphisms(const PottsModel& model);

// Closure of a generator list; empty optional when it exceeds limit.
std::optional<std::vector<Permutation>> group_closure(int n,
                                                      const std::vector<Permutation>& gens,
                                                      long limit = kElementLimit);

struct DisjointPairResult {
  enum class Status { Found, None, Incomplete };
  Status status = Status::None;
  std::optional<std::pair<Permutation, Permutation>> witnesses;
  bool bothInvolutions = false;
  std::string note;
};

// Looks for two nontrivial group elements with disjoint supports, preferring
// pairs of involutions (the shape the certificate builder consumes).
DisjointPairResult disjoint_pair_search(const AutGroup& group);

}  // namespace pottsym

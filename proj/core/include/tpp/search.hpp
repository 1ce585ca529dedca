#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tpp/certificate.hpp"

namespace tpp {

/// All subgroups of g, each as a sorted SubsetSpec.  Incremental closure:
/// cyclic subgroups first, then one-element extensions of known subgroups
/// until a fixpoint.  Deterministic output order (size, then element
/// order).  Requires order <= 2000.
std::vector<SubsetSpec> enumerate_subgroups(const Group& g);

struct SearchConfig {
  enum class Mode { kSubgroups, kSubsets } mode = Mode::kSubgroups;
  /// Work cap, counted in enumerated triples plus verification pair
  /// operations.  Exceeding it returns the best so far, flagged
  /// non-exhaustive.
  uint64_t budget = 2'000'000'000ull;
  /// Restrict subset mode to subgroup subsets (Q(S) = S); agreement with
  /// subgroup mode on small groups is a cross-check.
  bool subsets_subgroups_only = false;
  /// Disable the size pruning (testing only; never changes results).
  bool disable_pruning = false;
};

struct SearchResult {
  std::optional<RealizationCertificate> best;
  bool exhaustive = false;
  uint64_t triples_examined = 0;
  uint64_t work_units = 0;
};

/// Maximizes nmp over unordered triples of subgroups (one ordering suffices
/// by permutation invariance), pruned by the size bounds |G| >= n_i n_j.
/// The reported optimum is the deterministic maximum under
/// (nmp, canonical subset order).  Requires order <= 2000.
SearchResult search_subgroup_triples(const Group& g, const SearchConfig& cfg);

/// Exhaustive maximum of nmp over unordered triples of nonempty subsets,
/// with bitmask quotient sets and a precomputed index product table.
/// Requires order <= 16.
SearchResult search_subset_triples(const Group& g, const SearchConfig& cfg);

}  // namespace tpp

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tpp/group.hpp"

namespace tpp {

/// Sorted multiset of character degrees {d_i} of a group of the stated
/// order.  Valid instances satisfy sum d_i^2 = |G|, contain at least one 1,
/// and (for |G| > 1) have d_max^2 <= |G| - 1.
struct CharacterDegrees {
  std::vector<uint32_t> degrees;  // ascending
  uint64_t order = 1;
  enum class Source { kFormula, kNumeric } source = Source::kFormula;

  uint32_t d_max() const { return degrees.empty() ? 1 : degrees.back(); }
};

/// Validates the invariants above; used by both producers.
void validate_degrees(const CharacterDegrees& d);

/// Closed forms for the families with known tables.
CharacterDegrees degrees_abelian(uint64_t order);
/// The SL2(F_q) table: q+1, q, q-1, (q+-1)/2 (odd q) and 1 with the
/// standard multiplicities, split by the parity of q.
CharacterDegrees degrees_sl2(uint32_t q);
/// Dihedral group of order 2m with m = 2n even: four 1s and (n-1) 2s.
CharacterDegrees degrees_dihedral(uint32_t m);

/// Partial data for C_{2n} wr S_n: only the largest degree n! is tabulated,
/// which is what the gamma parameter needs.
struct MaxDegreeOnly {
  double log_order;  // natural log of |G| = n! (2n)^n
  double log_dmax;   // natural log of n!
};
MaxDegreeOnly wreath_max_degree(uint32_t n);

/// Spectral method for arbitrary groups of order <= 2000: a random central
/// element acts on the regular representation with one eigenvalue of
/// multiplicity d_i^2 per irreducible; clustering the spectrum recovers the
/// degrees.  Validation failures retry with fresh coefficients (up to 5
/// attempts) and are reported, never silently accepted.  Deterministic
/// given (g, seed).
CharacterDegrees degrees_numeric(const Group& g, uint64_t seed);

/// log|G| / log d_max; infinity when d_max = 1 (abelian).
double gamma_of(const CharacterDegrees& d);
double gamma_of(const MaxDegreeOnly& d);

/// sum_i d_i^k in extended precision.
long double power_sum(const CharacterDegrees& d, double k);

}  // namespace tpp

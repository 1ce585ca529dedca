#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tpp/group.hpp"

namespace tpp {

/// A duplicate-free list of group elements, kept sorted in canonical
/// (lexicographic slot) order.
struct SubsetSpec {
  std::vector<Elem> elems;
  /// Caller's assertion that the subset is a subgroup.  Only consulted when
  /// the closure test is too large to run (|S|^2 > 10^6).
  bool subgroup_hint = false;

  size_t size() const { return elems.size(); }
};

/// Validates against g (membership, no duplicates) and sorts.
SubsetSpec make_subset(const Group& g, std::vector<Elem> elems,
                       bool subgroup_hint = false);

/// The right quotient set Q(S) = {s1 s2^-1}.  When S is detected (or
/// asserted) to be a subgroup, Q(S) is S itself and is not re-materialized.
class QuotientSet {
 public:
  QuotientSet() = default;
  const std::vector<Elem>& elems() const { return elems_; }
  bool contains(const Elem& e) const;
  bool subset_is_subgroup() const { return is_subgroup_; }
  size_t size() const { return elems_.size(); }

 private:
  friend QuotientSet quotient_set(const Group&, const SubsetSpec&);
  std::vector<Elem> elems_;  // sorted
  bool is_subgroup_ = false;
};

QuotientSet quotient_set(const Group& g, const SubsetSpec& s);

struct Shape {
  uint64_t n = 1, m = 1, p = 1;
  uint64_t nmp() const { return n * m * p; }
  friend bool operator==(const Shape& a, const Shape& b) {
    return a.n == b.n && a.m == b.m && a.p == b.p;
  }
};

/// A verified realization: group, three subsets with the triple product
/// property, the shape they realize, and the pseudo-exponent upper bound
/// 3 log|G| / log(nmp) it yields.
struct RealizationCertificate {
  std::string group_descriptor;
  uint64_t group_order = 1;
  std::array<SubsetSpec, 3> subsets;
  Shape shape;
  bool verified = false;
  double alpha_upper = 3.0;
  std::array<bool, 3> subgroup_flags{false, false, false};
  /// Free-form provenance note shown in reports.
  std::string note;

  Group group() const { return Group::parse(group_descriptor); }
};

/// A triple (q1, q2, q3) with product 1 but not all 1.
struct Witness {
  Elem q1, q2, q3;
};

struct VerifyOptions {
  /// Hard cap on |Q(S1)|*|Q(S2)| pair operations.
  uint64_t pair_cap = 10'000'000'000ull;
  /// 0 = decide from hardware; chunked deterministically, so the thread
  /// count never changes the outcome (lexicographically smallest witness
  /// wins).
  unsigned threads = 1;
};

struct TppResult {
  std::optional<RealizationCertificate> certificate;  // set iff verified
  std::optional<Witness> witness;                     // set iff failed
  uint64_t pairs_checked = 0;

  bool verified() const { return certificate.has_value(); }
};

/// Decides the triple product property for (S1, S2, S3) in g: every
/// q1 q2 q3 = 1 with qi in Q(Si) forces q1 = q2 = q3 = 1.  On success the
/// certificate carries the shape <|S1|,|S2|,|S3|> and alpha_upper; on
/// failure the lexicographically smallest witness is returned.
TppResult verify_tpp(const Group& g, const SubsetSpec& s1,
                     const SubsetSpec& s2, const SubsetSpec& s3,
                     const VerifyOptions& opt = {}, std::string note = "");

/// Re-runs verify_tpp on all 6 orderings of the subsets; returns true iff
/// all orderings agree (they must, by the permutation-invariance lemma).
/// A test oracle, not a shortcut.
struct OrderingCheck {
  bool all_agree = false;
  bool verified = false;  // the common verdict when all_agree
};
OrderingCheck check_tpp_permutation_invariance(const Group& g,
                                               const SubsetSpec& s1,
                                               const SubsetSpec& s2,
                                               const SubsetSpec& s3,
                                               const VerifyOptions& opt = {});

/// Componentwise product of two verified certificates inside G1 x G2; the
/// shape multiplies componentwise and the result is re-verified.
TppResult lift_direct_product(const Group& g1,
                              const RealizationCertificate& a, const Group& g2,
                              const RealizationCertificate& b,
                              const VerifyOptions& opt = {});

/// 3 log|G| / log(nmp). An upper bound on the pseudo-exponent of the
/// certificate's group; the true value needs exhaustive search.  Rejects
/// nmp = 1.
double alpha_upper_bound(const RealizationCertificate& cert);
double alpha_upper_bound(uint64_t order, uint64_t nmp);

/// Rebuilds the group from the descriptor and re-checks the certificate
/// (shape, alpha, TPP).  Used by report generation and the CLI.
TppResult reverify(const RealizationCertificate& cert,
                   const VerifyOptions& opt = {});

}  // namespace tpp

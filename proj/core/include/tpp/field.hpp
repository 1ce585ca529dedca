#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tpp {

/// Thrown for domain errors anywhere in the library (bad parameters,
/// mismatched contexts, exceeded work caps, ...).
class Error : public std::exception {
 public:
  explicit Error(std::string msg) : msg_(std::move(msg)) {}
  const char* what() const noexcept override { return msg_.c_str(); }

 private:
  std::string msg_;
};

/// Element of F_{p^k} in the polynomial basis, packed little-endian as
/// code = c0 + c1*p + ... + c_{k-1}*p^{k-1}.  Comparison of codes is
/// field equality; codes are always fully reduced.
struct FieldElem {
  uint32_t code = 0;
  friend bool operator==(FieldElem a, FieldElem b) { return a.code == b.code; }
  friend bool operator!=(FieldElem a, FieldElem b) { return a.code != b.code; }
  friend bool operator<(FieldElem a, FieldElem b) { return a.code < b.code; }
};

/// Exact arithmetic context for F_{p^k}, q = p^k <= 2^16.
///
/// The modulus polynomial comes from a fixed table (one documented choice
/// per supported (p,k), e.g. t^4+t+1 for F_16); irreducibility is
/// re-verified at construction by trial division.  Contexts are immutable
/// and safe to share across threads; all operations are pure.
class FieldCtx {
 public:
  FieldCtx(uint32_t p, uint32_t k);

  uint32_t characteristic() const { return p_; }
  uint32_t degree() const { return k_; }
  uint32_t order() const { return q_; }
  /// Monic modulus, little-endian coefficients, size k+1.
  const std::vector<uint32_t>& modulus() const { return mod_; }

  FieldElem zero() const { return {0}; }
  FieldElem one() const { return {1}; }
  /// Validated constructor from a packed code.
  FieldElem element(uint32_t code) const;
  FieldElem from_coeffs(const std::vector<uint32_t>& c) const;
  std::vector<uint32_t> coeffs(FieldElem a) const;

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const;
  FieldElem neg(FieldElem a) const;
  FieldElem mul(FieldElem a, FieldElem b) const;
  FieldElem pow(FieldElem a, uint64_t e) const;
  /// Multiplicative inverse; rejects zero.
  FieldElem inv(FieldElem a) const;

  /// a^(p^(k/2)): the involutive automorphism fixing the index-2 subfield.
  /// Requires even extension degree.
  FieldElem frobenius(FieldElem a) const;
  bool has_index2_subfield() const { return k_ % 2 == 0 && k_ > 0; }
  /// Order of the fixed field of frobenius(), p^(k/2).
  uint32_t subfield_order() const;

  /// Trace a + a^p + ... + a^(p^(k-1)) down to F_p, returned as a residue.
  uint32_t trace_to_prime(FieldElem a) const;

  /// True iff a = b^2 for some b (decided from a precomputed square table).
  bool is_square(FieldElem a) const { return squares_[a.code]; }
  /// Smallest non-square by code order; rejects fields where every element
  /// is a square (q even).
  FieldElem smallest_nonsquare() const;

  /// "c0,c1,...,c_{k-1}" textual form used in certificate files.
  std::string encode(FieldElem a) const;
  FieldElem decode(std::string_view text) const;

  friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
    return a.p_ == b.p_ && a.k_ == b.k_;
  }

 private:
  uint32_t p_, k_, q_;
  std::vector<uint32_t> mod_;
  std::vector<bool> squares_;

  std::vector<uint32_t> to_poly(uint32_t code) const;
  uint32_t from_poly(const std::vector<uint32_t>& c) const;
};

/// Context factory matching the documented modulus table.  Supported:
/// any prime p with k = 1 (p <= 65521), and the tabulated extensions
/// F_4, F_8, F_9, F_16, F_25, F_49.
FieldCtx field_make(uint32_t p, uint32_t k);

/// Convenience: context for a prime power q (looked up as p^k).
FieldCtx field_for_order(uint32_t q);

}  // namespace tpp

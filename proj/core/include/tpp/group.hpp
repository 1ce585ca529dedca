#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "tpp/field.hpp"

namespace tpp {

/// Canonical element form: a flat vector of slots.  The per-family layout
/// is fixed and documented (see README):
///   cyclic:n        [r]                      residue mod n
///   dihedral:m      [b, e]                   y^b x^e, b in {0,1}, e mod m
///   sym:n           [s(0), ..., s(n-1)]      image tuple, 0-based
///   sl2:q           [a..,b..,c..,d..]        matrix entries, each as the
///                                            k field coefficients (det = 1)
///   bilinear:q:n    [x.., y.., alpha..]      2n+1 field elements
///   additive field  [c0..c_{k-1}]            coefficients
///   prod(...)       concatenation of component layouts
///   semidirect H,A  H slots then A slots
/// An element is valid iff every slot satisfies its family constraint;
/// equal slot vectors mean equal elements.
using Elem = std::vector<uint32_t>;

struct ElemHash {
  size_t operator()(const Elem& e) const {
    size_t h = 1469598103934665603ull;
    for (uint32_t v : e) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Elements are iterable (element_at / index_of) only up to this order.
inline constexpr uint64_t kEnumCap = 10'000'000;
/// Dense index tables (DenseTable, conjugacy classes) up to this order.
inline constexpr uint64_t kTableCap = 4096;

namespace detail {
class GroupImpl;
}

/// An exact finite group: family parameters, a canonical element codec and
/// a rule-based multiplication.  Immutable after construction and safely
/// shareable across threads; all operations are pure.
class Group {
 public:
  /// Right action by automorphisms of an abelian group A: act(h, a).
  /// The semidirect multiplication is (h1,a1)(h2,a2) = (h1h2, act(h2,a1)+a2).
  using Action = std::function<Elem(const Elem& h, const Elem& a)>;

  static Group cyclic(uint64_t n);
  static Group dihedral(uint64_t m);  // order 2m
  static Group symmetric(uint32_t n);
  static Group sl2(const FieldCtx& f);
  /// The additive group (F_q, +).
  static Group field_additive(const FieldCtx& f);
  /// The subgroup of F_q^x of order d (elements found by enumeration).
  static Group unit_subgroup(const FieldCtx& f, uint32_t d);
  static Group direct_product(std::vector<Group> parts);
  static Group power(const Group& base, uint32_t k);
  /// Generic semidirect product H ⋉ A.  The action must be a right action
  /// by automorphisms; this is spot-checked with randomized associativity
  /// triples at construction and rejected if it fails.
  static Group semidirect(Group h, Group a, Action act, std::string descriptor,
                          bool abelian_hint = false);
  /// Wreath product C_m ≀ S_n: S_n ⋉ (C_m)^n with coordinate permutation
  /// (sigma u)_i = u_{sigma(i)} and composition (st)(i) = s(t(i)).
  static Group wreath(uint64_t m, uint32_t n);
  /// Group on F_q^n x F_q^n x F_q with
  /// (x,y,a)(u,v,b) = (x+u, y+v, a+b+2<u,y>), for a symmetric bilinear
  /// form given as an n*n matrix of field codes (row-major).
  static Group bilinear(const FieldCtx& f, uint32_t n,
                        std::vector<uint32_t> form_codes);
  /// The diag(1,-w) form on F_q^2 with w the smallest non-square (q odd).
  static Group bilinear_default(uint32_t q);
  /// C_5 ⋉ F_16 with C_5 < F_16^x acting by field multiplication.
  static Group frobenius80();

  /// Parses the descriptor grammar:
  ///   cyclic:n | dihedral:m | sym:n | sl2:q | wreath:m:n | frob80 |
  ///   bilinear:q:2 | prod(d1,d2,...) | power(d,k)
  static Group parse(const std::string& descriptor);

  const std::string& descriptor() const;
  uint64_t order() const;
  uint32_t slots() const;
  bool abelian() const;
  bool enumerable() const { return order() <= kEnumCap; }

  Elem identity() const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  /// Validity of the canonical form (slot count and family constraints).
  bool contains(const Elem& a) const;

  /// Codec bijection with 0..order()-1.  Available for every family; full
  /// iteration should additionally respect enumerable().
  uint64_t index_of(const Elem& a) const;
  Elem element_at(uint64_t i) const;
  /// Every element exactly once, in codec order.  Requires enumerable().
  void for_each(const std::function<void(const Elem&)>& fn) const;

  std::string encode(const Elem& a) const;
  Elem decode(const std::string& text) const;

  /// Access to the field context of field-based families (sl2, bilinear,
  /// additive, unit subgroup); rejects others.
  const FieldCtx& field() const;

 private:
  explicit Group(std::shared_ptr<const detail::GroupImpl> impl);
  std::shared_ptr<const detail::GroupImpl> impl_;
  friend class DenseTable;
};

/// Dense multiplication/inverse tables over element indices, built eagerly
/// at construction (never lazily during reads).  Requires order <= kTableCap.
/// The table agrees with the rule-based multiplication on all pairs.
class DenseTable {
 public:
  explicit DenseTable(const Group& g);
  uint32_t size() const { return n_; }
  uint16_t mul(uint16_t i, uint16_t j) const { return mul_[size_t(i) * n_ + j]; }
  uint16_t inv(uint16_t i) const { return inv_[i]; }
  uint16_t identity() const { return id_; }
  const Group& group() const { return g_; }
  const Elem& element(uint16_t i) const { return elems_[i]; }

 private:
  Group g_;
  uint32_t n_;
  uint16_t id_;
  std::vector<Elem> elems_;
  std::vector<uint16_t> mul_;
  std::vector<uint16_t> inv_;
};

/// Orbits under conjugation, as element indices in codec order; classes are
/// sorted by smallest member.  Requires order <= kTableCap.
std::vector<std::vector<uint32_t>> conjugacy_classes(const Group& g);

}  // namespace tpp

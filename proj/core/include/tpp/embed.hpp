#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tpp/certificate.hpp"
#include "tpp/group.hpp"

namespace tpp {

/// Exact coefficient type.  Arbitrary precision keeps the read-off identity
/// an exact statement for any integer inputs.
using Coeff = boost::multiprecision::cpp_int;

/// Sparse element of the integral group ring: canonical element -> nonzero
/// coefficient.  Terms are kept in sorted element order so accumulation and
/// iteration are deterministic.
struct GroupAlgebraElement {
  std::string group_descriptor;
  std::map<Elem, Coeff> terms;

  size_t support_size() const { return terms.size(); }
  bool is_zero() const { return terms.empty(); }
  Coeff coefficient(const Elem& e) const {
    auto it = terms.find(e);
    return it == terms.end() ? Coeff(0) : it->second;
  }
};

GroupAlgebraElement ga_make(const Group& g,
                            std::vector<std::pair<Elem, Coeff>> terms);

/// Exact convolution: (sum a_g g)(sum b_h h) = sum_f (sum_{gh=f} a_g b_h) f.
/// Work is |support(a)|*|support(b)| and is capped.
GroupAlgebraElement ga_multiply(const Group& g, const GroupAlgebraElement& a,
                                const GroupAlgebraElement& b,
                                uint64_t work_cap = 100'000'000ull);

/// Dense exact matrix with optional row/column labels (group element
/// encodings when produced by the embedding).
struct ExactMatrix {
  size_t rows = 0, cols = 0;
  std::vector<Coeff> data;  // row-major
  std::vector<std::string> row_labels, col_labels;

  ExactMatrix() = default;
  ExactMatrix(size_t r, size_t c) : rows(r), cols(c), data(r * c) {}
  Coeff& at(size_t r, size_t c) { return data[r * cols + c]; }
  const Coeff& at(size_t r, size_t c) const { return data[r * cols + c]; }
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
  }
};

/// Textbook triple loop in exact arithmetic; the oracle everything else is
/// checked against.
ExactMatrix naive_matmul(const ExactMatrix& a, const ExactMatrix& b);

/// A-bar = sum A_st (s^-1 t), B-bar = sum B_tu (t^-1 u) for the
/// certificate's subsets (S,T,U).  The |S||T| products s^-1 t must be
/// pairwise distinct (guaranteed by the triple product property); a
/// collision is detected and rejected.
std::pair<GroupAlgebraElement, GroupAlgebraElement> embed_matrices(
    const Group& g, const RealizationCertificate& cert, const ExactMatrix& a,
    const ExactMatrix& b);

/// Reads the product off the convolution: (AB)_su is the coefficient of
/// s^-1 u in A-bar * B-bar.  Refuses unverified certificates.
ExactMatrix matmul_via_group(const Group& g, const RealizationCertificate& cert,
                             const ExactMatrix& a, const ExactMatrix& b);

}  // namespace tpp

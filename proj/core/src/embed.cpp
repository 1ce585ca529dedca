#include "tpp/embed.hpp"

namespace tpp {

GroupAlgebraElement ga_make(const Group& g,
                            std::vector<std::pair<Elem, Coeff>> terms) {
  GroupAlgebraElement out;
  out.group_descriptor = g.descriptor();
  for (auto& [e, c] : terms) {
    if (!g.contains(e))
      throw Error("algebra: term element not in " + g.descriptor());
    if (c != 0) out.terms[e] += c;
  }
  for (auto it = out.terms.begin(); it != out.terms.end();) {
    if (it->second == 0)
      it = out.terms.erase(it);
    else
      ++it;
  }
  return out;
}

GroupAlgebraElement ga_multiply(const Group& g, const GroupAlgebraElement& a,
                                const GroupAlgebraElement& b,
                                uint64_t work_cap) {
  if (a.group_descriptor != g.descriptor() ||
      b.group_descriptor != g.descriptor())
    throw Error("algebra: group mismatch in convolution");
  if (uint64_t(a.terms.size()) * b.terms.size() > work_cap)
    throw Error("algebra: convolution support exceeds work cap");
  GroupAlgebraElement out;
  out.group_descriptor = g.descriptor();
  // std::map accumulation keeps summation order fixed by sorted encoding.
  for (const auto& [ea, ca] : a.terms) {
    for (const auto& [eb, cb] : b.terms) {
      out.terms[g.mul(ea, eb)] += ca * cb;
    }
  }
  for (auto it = out.terms.begin(); it != out.terms.end();) {
    if (it->second == 0)
      it = out.terms.erase(it);
    else
      ++it;
  }
  return out;
}

ExactMatrix naive_matmul(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols != b.rows) throw Error("matmul: inner dimensions disagree");
  ExactMatrix c(a.rows, b.cols);
  for (size_t i = 0; i < a.rows; ++i)
    for (size_t k = 0; k < a.cols; ++k) {
      const Coeff& aik = a.at(i, k);
      if (aik == 0) continue;
      for (size_t j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  c.row_labels = a.row_labels;
  c.col_labels = b.col_labels;
  return c;
}

namespace {

// sum_{s,t} M_st (s^-1 t); fails if two (s,t) pairs map to the same group
// element, which cannot happen under the triple product property.
GroupAlgebraElement embed_one(const Group& g, const SubsetSpec& rows,
                              const SubsetSpec& cols, const ExactMatrix& m,
                              const char* which) {
  GroupAlgebraElement out;
  out.group_descriptor = g.descriptor();
  size_t keys = 0;
  for (size_t i = 0; i < rows.size(); ++i) {
    Elem si = g.inv(rows.elems[i]);
    for (size_t j = 0; j < cols.size(); ++j) {
      Elem key = g.mul(si, cols.elems[j]);
      auto [it, inserted] = out.terms.emplace(std::move(key), Coeff(0));
      keys += inserted ? 1 : 0;
      it->second += m.at(i, j);
    }
  }
  if (keys != rows.size() * cols.size())
    throw Error(std::string("embed: coefficient collision in ") + which +
                " (certificate not TPP-verified?)");
  for (auto it = out.terms.begin(); it != out.terms.end();) {
    if (it->second == 0)
      it = out.terms.erase(it);
    else
      ++it;
  }
  return out;
}

}  // namespace

std::pair<GroupAlgebraElement, GroupAlgebraElement> embed_matrices(
    const Group& g, const RealizationCertificate& cert, const ExactMatrix& a,
    const ExactMatrix& b) {
  if (g.descriptor() != cert.group_descriptor)
    throw Error("embed: group does not match the certificate");
  if (a.rows != cert.shape.n || a.cols != cert.shape.m)
    throw Error("embed: A must be n x m for the certificate shape");
  if (b.rows != cert.shape.m || b.cols != cert.shape.p)
    throw Error("embed: B must be m x p for the certificate shape");
  GroupAlgebraElement abar =
      embed_one(g, cert.subsets[0], cert.subsets[1], a, "A");
  GroupAlgebraElement bbar =
      embed_one(g, cert.subsets[1], cert.subsets[2], b, "B");
  return {std::move(abar), std::move(bbar)};
}

ExactMatrix matmul_via_group(const Group& g, const RealizationCertificate& cert,
                             const ExactMatrix& a, const ExactMatrix& b) {
  if (!cert.verified)
    throw Error("matmul: refusing an unverified certificate");
  auto [abar, bbar] = embed_matrices(g, cert, a, b);
  GroupAlgebraElement prod = ga_multiply(g, abar, bbar);
  ExactMatrix c(cert.shape.n, cert.shape.p);
  for (size_t i = 0; i < cert.shape.n; ++i) {
    Elem si = g.inv(cert.subsets[0].elems[i]);
    for (size_t j = 0; j < cert.shape.p; ++j) {
      c.at(i, j) = prod.coefficient(g.mul(si, cert.subsets[2].elems[j]));
    }
  }
  c.row_labels.reserve(cert.shape.n);
  for (const Elem& e : cert.subsets[0].elems) c.row_labels.push_back(g.encode(e));
  c.col_labels.reserve(cert.shape.p);
  for (const Elem& e : cert.subsets[2].elems) c.col_labels.push_back(g.encode(e));
  return c;
}

}  // namespace tpp

#include "tpp/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

namespace tpp {

namespace {

constexpr uint64_t kClosureTestCap = 1'000'000;  // |S|^2 above which we trust hints

bool sorted_contains(const std::vector<Elem>& v, const Elem& e) {
  return std::binary_search(v.begin(), v.end(), e);
}

}  // namespace

SubsetSpec make_subset(const Group& g, std::vector<Elem> elems,
                       bool subgroup_hint) {
  if (elems.empty()) throw Error("subset: must be nonempty");
  for (const Elem& e : elems)
    if (!g.contains(e))
      throw Error("subset: element not in " + g.descriptor());
  std::sort(elems.begin(), elems.end());
  if (std::adjacent_find(elems.begin(), elems.end()) != elems.end())
    throw Error("subset: duplicate elements");
  return SubsetSpec{std::move(elems), subgroup_hint};
}

bool QuotientSet::contains(const Elem& e) const {
  return sorted_contains(elems_, e);
}

QuotientSet quotient_set(const Group& g, const SubsetSpec& s) {
  if (s.elems.empty()) throw Error("quotient: subset must be nonempty");
  QuotientSet q;
  const uint64_t pairs = uint64_t(s.size()) * s.size();
  if (pairs <= kClosureTestCap) {
    // Closure under s1 s2^-1 is exactly the subgroup property, and then
    // Q(S) = S.
    bool closed = true;
    for (const Elem& a : s.elems) {
      for (const Elem& b : s.elems) {
        if (!sorted_contains(s.elems, g.mul(a, g.inv(b)))) {
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
    if (closed) {
      q.elems_ = s.elems;
      q.is_subgroup_ = true;
      return q;
    }
    std::vector<Elem> out;
    out.reserve(pairs);
    for (const Elem& a : s.elems) {
      for (const Elem& b : s.elems) out.push_back(g.mul(a, g.inv(b)));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    q.elems_ = std::move(out);
    return q;
  }
  if (!s.subgroup_hint)
    throw Error(
        "quotient: subset too large for the closure test and not asserted to "
        "be a subgroup");
  q.elems_ = s.elems;
  q.is_subgroup_ = true;
  return q;
}

double alpha_upper_bound(uint64_t order, uint64_t nmp) {
  if (nmp <= 1) throw Error("alpha: nmp must exceed 1");
  return 3.0 * std::log(double(order)) / std::log(double(nmp));
}

double alpha_upper_bound(const RealizationCertificate& cert) {
  if (!cert.verified) throw Error("alpha: certificate is not verified");
  return alpha_upper_bound(cert.group_order, cert.shape.nmp());
}

namespace {

// Scans q1 in Q1[lo..hi) x Q2 in order; returns the first witness found.
std::optional<Witness> scan_range(const Group& g, const QuotientSet& q1,
                                  const QuotientSet& q2, const QuotientSet& q3,
                                  const Elem& id, size_t lo, size_t hi,
                                  uint64_t* pairs) {
  uint64_t local = 0;
  for (size_t i = lo; i < hi; ++i) {
    const Elem& a = q1.elems()[i];
    const bool a_is_id = (a == id);
    for (const Elem& b : q2.elems()) {
      ++local;
      if (a_is_id && b == id) continue;
      Elem t = g.inv(g.mul(a, b));
      if (q3.contains(t)) {
        *pairs += local;
        return Witness{a, b, std::move(t)};
      }
    }
  }
  *pairs += local;
  return std::nullopt;
}

}  // namespace

TppResult verify_tpp(const Group& g, const SubsetSpec& s1,
                     const SubsetSpec& s2, const SubsetSpec& s3,
                     const VerifyOptions& opt, std::string note) {
  QuotientSet q1 = quotient_set(g, s1);
  QuotientSet q2 = quotient_set(g, s2);
  QuotientSet q3 = quotient_set(g, s3);

  const uint64_t total = uint64_t(q1.size()) * q2.size();
  if (total > opt.pair_cap)
    throw Error("verify: |Q1|*|Q2| exceeds the pair work cap");

  const Elem id = g.identity();
  TppResult res;

  unsigned threads = opt.threads;
  if (threads == 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  // Chunking only pays off on big scans.
  if (total < 200'000) threads = 1;

  std::optional<Witness> witness;
  if (threads <= 1) {
    witness = scan_range(g, q1, q2, q3, id, 0, q1.size(), &res.pairs_checked);
  } else {
    // Deterministic reduction: chunks are contiguous ranges of the sorted
    // Q1, and the earliest chunk holding a witness wins, which is exactly
    // the lexicographically smallest witness overall.
    const size_t nchunks = std::min<size_t>(threads * 4, q1.size());
    std::vector<std::future<std::optional<Witness>>> futs;
    std::vector<uint64_t> counts(nchunks, 0);
    for (size_t c = 0; c < nchunks; ++c) {
      size_t lo = q1.size() * c / nchunks;
      size_t hi = q1.size() * (c + 1) / nchunks;
      futs.push_back(std::async(std::launch::async, [&, lo, hi, c] {
        return scan_range(g, q1, q2, q3, id, lo, hi, &counts[c]);
      }));
    }
    for (size_t c = 0; c < nchunks; ++c) {
      auto w = futs[c].get();
      if (w && !witness) witness = std::move(w);
    }
    for (uint64_t c : counts) res.pairs_checked += c;
  }

  if (witness) {
    res.witness = std::move(witness);
    return res;
  }

  RealizationCertificate cert;
  cert.group_descriptor = g.descriptor();
  cert.group_order = g.order();
  cert.subsets = {s1, s2, s3};
  cert.shape = {s1.size(), s2.size(), s3.size()};
  cert.verified = true;
  cert.subgroup_flags = {q1.subset_is_subgroup(), q2.subset_is_subgroup(),
                         q3.subset_is_subgroup()};
  cert.note = std::move(note);
  cert.alpha_upper =
      cert.shape.nmp() > 1 ? alpha_upper_bound(cert.group_order, cert.shape.nmp())
                           : 3.0;

  // Size bounds that every realization satisfies; a violation would mean
  // the verifier itself is broken.
  const uint64_t n = cert.shape.n, m = cert.shape.m, p = cert.shape.p;
  const uint64_t ord = cert.group_order;
  if (n * m > ord || m * p > ord || n * p > ord)
    throw Error("verify: certificate violates |G| >= n_i n_j (bug)");
  if ((n * m == ord && p > 1) || (m * p == ord && n > 1) ||
      (n * p == ord && m > 1))
    throw Error("verify: certificate violates strict size bound (bug)");
  if (cert.alpha_upper <= 2.0)
    throw Error("verify: alpha bound at or below 2 (bug)");

  res.certificate = std::move(cert);
  return res;
}

OrderingCheck check_tpp_permutation_invariance(const Group& g,
                                               const SubsetSpec& s1,
                                               const SubsetSpec& s2,
                                               const SubsetSpec& s3,
                                               const VerifyOptions& opt) {
  const SubsetSpec* s[3] = {&s1, &s2, &s3};
  static constexpr int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                       {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  OrderingCheck out;
  bool first = true;
  for (const auto& perm : kPerms) {
    TppResult r =
        verify_tpp(g, *s[perm[0]], *s[perm[1]], *s[perm[2]], opt);
    if (first) {
      out.verified = r.verified();
      out.all_agree = true;
      first = false;
    } else if (r.verified() != out.verified) {
      out.all_agree = false;
    }
  }
  return out;
}

TppResult lift_direct_product(const Group& g1,
                              const RealizationCertificate& a, const Group& g2,
                              const RealizationCertificate& b,
                              const VerifyOptions& opt) {
  if (!a.verified || !b.verified)
    throw Error("lift: both certificates must be verified");
  if (g1.descriptor() != a.group_descriptor ||
      g2.descriptor() != b.group_descriptor)
    throw Error("lift: group/certificate mismatch");
  Group prod = Group::direct_product({g1, g2});
  std::array<SubsetSpec, 3> subsets;
  for (int i = 0; i < 3; ++i) {
    std::vector<Elem> elems;
    elems.reserve(a.subsets[i].size() * b.subsets[i].size());
    for (const Elem& x : a.subsets[i].elems) {
      for (const Elem& y : b.subsets[i].elems) {
        Elem e = x;
        e.insert(e.end(), y.begin(), y.end());
        elems.push_back(std::move(e));
      }
    }
    subsets[i] = make_subset(prod, std::move(elems),
                             a.subgroup_flags[i] && b.subgroup_flags[i]);
  }
  return verify_tpp(prod, subsets[0], subsets[1], subsets[2], opt,
                    "direct-product lift");
}

TppResult reverify(const RealizationCertificate& cert,
                   const VerifyOptions& opt) {
  Group g = cert.group();
  if (g.order() != cert.group_order)
    throw Error("reverify: stored order disagrees with the group");
  std::array<SubsetSpec, 3> ss;
  for (int i = 0; i < 3; ++i)
    ss[i] = make_subset(g, cert.subsets[i].elems,
                        cert.subsets[i].subgroup_hint);
  TppResult r = verify_tpp(g, ss[0], ss[1], ss[2], opt, cert.note);
  if (r.verified()) {
    const RealizationCertificate& c = *r.certificate;
    if (!(c.shape == cert.shape))
      throw Error("reverify: stored shape disagrees with subset sizes");
    if (std::abs(c.alpha_upper - cert.alpha_upper) > 1e-9)
      throw Error("reverify: stored alpha disagrees with 3log|G|/log(nmp)");
  }
  return r;
}

}  // namespace tpp

#include "tpp/search.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace tpp {

namespace {

constexpr uint64_t kSubgroupGroupCap = 2000;
constexpr uint64_t kSubgroupCountCap = 100000;
constexpr uint64_t kSubsetGroupCap = 16;

// Closure of a generating set under multiplication, over table indices.
std::vector<uint16_t> close_indices(const DenseTable& t,
                                    std::vector<uint16_t> gens) {
  std::vector<char> in(t.size(), 0);
  std::vector<uint16_t> members;
  auto push = [&](uint16_t x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  };
  push(t.identity());
  for (uint16_t gen : gens) push(gen);
  // Process pairs once; finite order makes inverse closure automatic.
  for (size_t i = 0; i < members.size(); ++i) {
    for (size_t j = 0; j <= i; ++j) {
      push(t.mul(members[i], members[j]));
      push(t.mul(members[j], members[i]));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

std::vector<SubsetSpec> enumerate_subgroups(const Group& g) {
  if (g.order() > kSubgroupGroupCap)
    throw Error("subgroups: order exceeds the enumeration cap (2000)");
  DenseTable t(g);
  const uint32_t n = t.size();

  std::map<std::vector<uint16_t>, size_t> seen;
  std::vector<std::vector<uint16_t>> subs;
  auto add = [&](std::vector<uint16_t> s) {
    if (seen.emplace(s, subs.size()).second) {
      subs.push_back(std::move(s));
      if (subs.size() > kSubgroupCountCap)
        throw Error("subgroups: count cap exceeded");
    }
  };

  add(close_indices(t, {}));
  for (uint16_t x = 0; x < n; ++x) add(close_indices(t, {x}));

  // Adjoin one element to each known subgroup until nothing new appears.
  for (size_t i = 0; i < subs.size(); ++i) {
    const std::vector<uint16_t> base = subs[i];
    if (base.size() == n) continue;
    for (uint16_t x = 0; x < n; ++x) {
      if (std::binary_search(base.begin(), base.end(), x)) continue;
      std::vector<uint16_t> gens = base;
      gens.push_back(x);
      add(close_indices(t, std::move(gens)));
    }
  }

  std::sort(subs.begin(), subs.end(),
            [](const std::vector<uint16_t>& a, const std::vector<uint16_t>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });

  std::vector<SubsetSpec> out;
  out.reserve(subs.size());
  for (const auto& s : subs) {
    std::vector<Elem> elems;
    elems.reserve(s.size());
    for (uint16_t idx : s) elems.push_back(t.element(idx));
    out.push_back(make_subset(g, std::move(elems), true));
  }
  return out;
}

namespace {

// Size-triple admissibility under the realization bounds |G| >= n_i n_j,
// with equality forcing the remaining size to 1.
bool sizes_admissible(uint64_t a, uint64_t b, uint64_t c, uint64_t ord) {
  if (a * b > ord || a * c > ord || b * c > ord) return false;
  if ((a * b == ord && c > 1) || (a * c == ord && b > 1) ||
      (b * c == ord && a > 1))
    return false;
  return true;
}

}  // namespace

SearchResult search_subgroup_triples(const Group& g, const SearchConfig& cfg) {
  SearchResult res;
  const auto subs = enumerate_subgroups(g);
  const uint64_t ord = g.order();
  uint64_t best_nmp = 0;

  for (size_t i = 0; i < subs.size(); ++i) {
    for (size_t j = i; j < subs.size(); ++j) {
      for (size_t k = j; k < subs.size(); ++k) {
        const uint64_t a = subs[i].size(), b = subs[j].size(),
                       c = subs[k].size();
        if (!cfg.disable_pruning && !sizes_admissible(a, b, c, ord)) continue;
        const uint64_t nmp = a * b * c;
        if (nmp <= best_nmp) continue;
        ++res.triples_examined;
        ++res.work_units;
        if (res.work_units > cfg.budget) {
          res.exhaustive = false;
          return res;
        }
        TppResult r = verify_tpp(g, subs[i], subs[j], subs[k]);
        res.work_units += r.pairs_checked;
        if (r.verified() && nmp > best_nmp) {
          best_nmp = nmp;
          r.certificate->note = "subgroup search optimum";
          res.best = std::move(r.certificate);
        }
      }
    }
  }
  res.exhaustive = true;
  return res;
}

SearchResult search_subset_triples(const Group& g, const SearchConfig& cfg) {
  SearchResult res;
  if (g.order() > kSubsetGroupCap)
    throw Error("subsets: exhaustive search capped at order 16");
  DenseTable t(g);
  const uint32_t n = t.size();
  const uint32_t nmask = 1u << n;
  const uint32_t idbit = 1u << t.identity();

  // inv(i * j) for the membership test q3 = (q1 q2)^-1.
  std::vector<uint8_t> prodinv(size_t(n) * n);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j)
      prodinv[i * n + j] = uint8_t(t.inv(t.mul(uint16_t(i), uint16_t(j))));

  // Quotient masks for every nonempty subset mask.
  std::vector<uint32_t> qmask(nmask, 0);
  for (uint32_t mask = 1; mask < nmask; ++mask) {
    uint32_t q = 0;
    for (uint32_t i = mask; i; i &= i - 1) {
      const uint32_t bi = uint32_t(std::countr_zero(i));
      for (uint32_t j = mask; j; j &= j - 1) {
        const uint32_t bj = uint32_t(std::countr_zero(j));
        q |= 1u << t.mul(uint16_t(bi), t.inv(uint16_t(bj)));
      }
    }
    qmask[mask] = q;
  }

  std::vector<std::vector<uint32_t>> by_size(n + 1);
  for (uint32_t mask = 1; mask < nmask; ++mask) {
    if (cfg.subsets_subgroups_only && qmask[mask] != mask) continue;
    by_size[uint32_t(std::popcount(mask))].push_back(mask);
  }

  // Size classes in descending-product order; once the best reaches a
  // class's product, the class cannot improve on it.
  struct Class {
    uint32_t a, b, c;
    uint64_t nmp;
  };
  std::vector<Class> classes;
  for (uint32_t a = 1; a <= n; ++a)
    for (uint32_t b = a; b <= n; ++b)
      for (uint32_t c = b; c <= n; ++c)
        classes.push_back({a, b, c, uint64_t(a) * b * c});
  std::sort(classes.begin(), classes.end(), [](const Class& x, const Class& y) {
    if (x.nmp != y.nmp) return x.nmp > y.nmp;
    return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
  });

  uint64_t best_nmp = 0;
  auto tpp_masks = [&](uint32_t m1, uint32_t m2, uint32_t m3,
                       uint64_t* work) -> bool {
    const uint32_t q1 = qmask[m1], q2 = qmask[m2], q3 = qmask[m3];
    uint64_t local = 0;
    for (uint32_t i = q1; i; i &= i - 1) {
      const uint32_t bi = uint32_t(std::countr_zero(i));
      const bool i_is_id = (1u << bi) == idbit;
      const uint8_t* row = &prodinv[bi * n];
      for (uint32_t j = q2; j; j &= j - 1) {
        const uint32_t bj = uint32_t(std::countr_zero(j));
        ++local;
        if (i_is_id && (1u << bj) == idbit) continue;
        if (q3 & (1u << row[bj])) {
          *work += local;
          return false;
        }
      }
    }
    *work += local;
    return true;
  };

  auto emit = [&](uint32_t m1, uint32_t m2, uint32_t m3, uint64_t nmp) {
    // Re-verify through the main path before reporting.
    auto subset_of = [&](uint32_t mask) {
      std::vector<Elem> elems;
      for (uint32_t i = mask; i; i &= i - 1)
        elems.push_back(t.element(uint16_t(std::countr_zero(i))));
      return make_subset(g, std::move(elems));
    };
    TppResult r = verify_tpp(g, subset_of(m1), subset_of(m2), subset_of(m3));
    if (!r.verified())
      throw Error("subsets: mask check and verifier disagree (bug)");
    best_nmp = nmp;
    r.certificate->note = "subset search optimum";
    res.best = std::move(r.certificate);
  };

  for (const Class& cl : classes) {
    if (!cfg.disable_pruning) {
      if (!sizes_admissible(cl.a, cl.b, cl.c, n)) continue;
      if (cl.nmp <= best_nmp) continue;
    }
    const auto& la = by_size[cl.a];
    const auto& lb = by_size[cl.b];
    const auto& lc = by_size[cl.c];
    for (size_t x = 0; x < la.size(); ++x) {
      const size_t ystart = (cl.a == cl.b) ? x : 0;
      for (size_t y = ystart; y < lb.size(); ++y) {
        const size_t zstart = (cl.b == cl.c) ? y : 0;
        for (size_t z = zstart; z < lc.size(); ++z) {
          ++res.triples_examined;
          res.work_units += 1;
          if (res.work_units > cfg.budget) {
            res.exhaustive = false;
            return res;
          }
          if (tpp_masks(la[x], lb[y], lc[z], &res.work_units) &&
              cl.nmp > best_nmp)
            emit(la[x], lb[y], lc[z], cl.nmp);
        }
      }
    }
  }
  res.exhaustive = true;
  return res;
}

}  // namespace tpp

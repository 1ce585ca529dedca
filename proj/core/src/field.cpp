#include "tpp/field.hpp"

#include <algorithm>
#include <sstream>

namespace tpp {

namespace {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Fixed modulus table, little-endian coefficients.  One reproducible
// choice per (p,k); F_16 is t^4+t+1.
const std::vector<uint32_t>* modulus_table(uint32_t p, uint32_t k) {
  static const struct {
    uint32_t p, k;
    std::vector<uint32_t> mod;
  } kTable[] = {
      {2, 2, {1, 1, 1}},        // t^2+t+1
      {2, 3, {1, 1, 0, 1}},     // t^3+t+1
      {2, 4, {1, 1, 0, 0, 1}},  // t^4+t+1
      {3, 2, {1, 0, 1}},        // t^2+1
      {5, 2, {2, 0, 1}},        // t^2+2
      {7, 2, {1, 0, 1}},        // t^2+1
  };
  for (const auto& e : kTable)
    if (e.p == p && e.k == k) return &e.mod;
  return nullptr;
}

// Polynomial helpers over F_p, little-endian coefficient vectors.
std::vector<uint32_t> poly_mul(const std::vector<uint32_t>& a,
                               const std::vector<uint32_t>& b, uint32_t p) {
  std::vector<uint32_t> out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + uint64_t(a[i]) * b[j]) % p;
  return out;
}

void poly_trim(std::vector<uint32_t>& a) {
  while (a.size() > 1 && a.back() == 0) a.pop_back();
}

// Remainder of a by monic m.
std::vector<uint32_t> poly_mod(std::vector<uint32_t> a,
                               const std::vector<uint32_t>& m, uint32_t p) {
  const size_t dm = m.size() - 1;
  while (a.size() > dm) {
    uint32_t lead = a.back();
    size_t shift = a.size() - 1 - dm;
    if (lead != 0) {
      for (size_t i = 0; i <= dm; ++i) {
        uint64_t sub = uint64_t(lead) * m[i] % p;
        a[shift + i] = (a[shift + i] + p - sub) % p;
      }
    }
    a.pop_back();
  }
  poly_trim(a);
  return a;
}

bool poly_is_zero(const std::vector<uint32_t>& a) {
  return std::all_of(a.begin(), a.end(), [](uint32_t c) { return c == 0; });
}

// Irreducibility by trial division with every monic polynomial of degree
// 1..deg/2.  Fine at the table sizes in scope.
bool poly_irreducible(const std::vector<uint32_t>& m, uint32_t p) {
  const size_t deg = m.size() - 1;
  if (deg == 1) return true;
  for (size_t d = 1; 2 * d <= deg; ++d) {
    uint64_t count = 1;
    for (size_t i = 0; i < d; ++i) count *= p;
    for (uint64_t code = 0; code < count; ++code) {
      std::vector<uint32_t> div(d + 1, 0);
      uint64_t c = code;
      for (size_t i = 0; i < d; ++i) {
        div[i] = uint32_t(c % p);
        c /= p;
      }
      div[d] = 1;  // monic
      if (poly_is_zero(poly_mod(m, div, p))) return false;
    }
  }
  return true;
}

}  // namespace

FieldCtx::FieldCtx(uint32_t p, uint32_t k) : p_(p), k_(k) {
  if (!is_prime(p)) throw Error("field: characteristic must be prime");
  if (k == 0) throw Error("field: extension degree must be positive");
  uint64_t q = 1;
  for (uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > (1u << 16)) throw Error("field: order exceeds 2^16 cap");
  }
  q_ = uint32_t(q);

  if (k == 1) {
    mod_ = {0, 1};  // t
  } else {
    const auto* m = modulus_table(p, k);
    if (!m) throw Error("field: no tabulated modulus for this (p,k)");
    mod_ = *m;
  }
  if (!poly_irreducible(mod_, p_))
    throw Error("field: tabulated modulus is reducible");

  squares_.assign(q_, false);
  for (uint32_t x = 0; x < q_; ++x) squares_[mul({x}, {x}).code] = true;
}

std::vector<uint32_t> FieldCtx::to_poly(uint32_t code) const {
  std::vector<uint32_t> c(k_, 0);
  for (uint32_t i = 0; i < k_; ++i) {
    c[i] = code % p_;
    code /= p_;
  }
  return c;
}

uint32_t FieldCtx::from_poly(const std::vector<uint32_t>& c) const {
  uint32_t code = 0;
  for (size_t i = std::min<size_t>(c.size(), k_); i-- > 0;)
    code = code * p_ + c[i];
  return code;
}

FieldElem FieldCtx::element(uint32_t code) const {
  if (code >= q_) throw Error("field: element code out of range");
  return {code};
}

FieldElem FieldCtx::from_coeffs(const std::vector<uint32_t>& c) const {
  if (c.size() != k_) throw Error("field: coefficient count mismatch");
  for (uint32_t ci : c)
    if (ci >= p_) throw Error("field: coefficient not reduced mod p");
  return {from_poly(c)};
}

std::vector<uint32_t> FieldCtx::coeffs(FieldElem a) const {
  return to_poly(a.code);
}

FieldElem FieldCtx::add(FieldElem a, FieldElem b) const {
  auto ca = to_poly(a.code), cb = to_poly(b.code);
  for (uint32_t i = 0; i < k_; ++i) ca[i] = (ca[i] + cb[i]) % p_;
  return {from_poly(ca)};
}

FieldElem FieldCtx::sub(FieldElem a, FieldElem b) const {
  return add(a, neg(b));
}

FieldElem FieldCtx::neg(FieldElem a) const {
  auto c = to_poly(a.code);
  for (uint32_t i = 0; i < k_; ++i) c[i] = (p_ - c[i]) % p_;
  return {from_poly(c)};
}

FieldElem FieldCtx::mul(FieldElem a, FieldElem b) const {
  auto prod = poly_mul(to_poly(a.code), to_poly(b.code), p_);
  return {from_poly(poly_mod(std::move(prod), mod_, p_))};
}

FieldElem FieldCtx::pow(FieldElem a, uint64_t e) const {
  FieldElem r = one(), base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

FieldElem FieldCtx::inv(FieldElem a) const {
  if (a.code == 0) throw Error("field: inversion of zero");
  return pow(a, q_ - 2);
}

uint32_t FieldCtx::subfield_order() const {
  if (!has_index2_subfield())
    throw Error("field: no designated index-2 subfield");
  uint32_t s = 1;
  for (uint32_t i = 0; i < k_ / 2; ++i) s *= p_;
  return s;
}

FieldElem FieldCtx::frobenius(FieldElem a) const {
  return pow(a, subfield_order());
}

uint32_t FieldCtx::trace_to_prime(FieldElem a) const {
  FieldElem acc = zero(), t = a;
  for (uint32_t i = 0; i < k_; ++i) {
    acc = add(acc, t);
    t = pow(t, p_);
  }
  // The trace lands in the prime field: only the constant coefficient
  // survives.
  auto c = to_poly(acc.code);
  for (uint32_t i = 1; i < k_; ++i)
    if (c[i] != 0) throw Error("field: trace left the prime field (bug)");
  return c[0];
}

FieldElem FieldCtx::smallest_nonsquare() const {
  for (uint32_t x = 0; x < q_; ++x)
    if (!squares_[x]) return {x};
  throw Error("field: every element is a square");
}

std::string FieldCtx::encode(FieldElem a) const {
  auto c = to_poly(a.code);
  std::string s;
  for (uint32_t i = 0; i < k_; ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s;
}

FieldElem FieldCtx::decode(std::string_view text) const {
  std::vector<uint32_t> c;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t next = text.find(',', pos);
    std::string tok(text.substr(pos, next == std::string_view::npos
                                          ? std::string_view::npos
                                          : next - pos));
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw Error("field: malformed element encoding '" + std::string(text) +
                  "'");
    c.push_back(uint32_t(std::stoul(tok)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return from_coeffs(c);
}

FieldCtx field_make(uint32_t p, uint32_t k) { return FieldCtx(p, k); }

FieldCtx field_for_order(uint32_t q) {
  for (uint32_t p = 2; p <= q; ++p) {
    if (!is_prime(p)) continue;
    uint32_t k = 0;
    uint64_t v = 1;
    while (v < q) {
      v *= p;
      ++k;
    }
    if (v == q) return field_make(p, k);
  }
  throw Error("field: order is not a prime power");
}

}  // namespace tpp

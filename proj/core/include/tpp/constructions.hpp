#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tpp/certificate.hpp"

namespace tpp {

/// Every constructor returns a certificate that has been re-checked by
/// verify_tpp; the stated shapes are asserted.  Construction failure (a
/// shape mismatch or a failed verification) throws: these are theorems, so
/// a failure means a bug or bad parameters.

/// Axis subgroups of C_n x C_m x C_p realizing <n,m,p>.
RealizationCertificate construct_cyclic_axes(uint64_t n, uint64_t m,
                                             uint64_t p,
                                             const VerifyOptions& opt = {});

/// The triangle construction in S_{n(n+1)/2}: points are the triples
/// (a,b,c) >= 0 with a+b+c = n-1 and H_i permutes each level set of
/// coordinate i.  Shape <f,f,f> with f = 1!2!...n!.  2 <= n <= 5.
RealizationCertificate construct_triangle(uint32_t n,
                                          const VerifyOptions& opt = {});

/// Unipotent upper/lower subgroups and the third parabolic
/// {(1+z, z; -z, 1-z)} of SL2(F_q), realizing <q,q,q>.
RealizationCertificate construct_sl2_parabolic(uint32_t q,
                                               const VerifyOptions& opt = {});

/// Unipotents of SL2(F_{q^2}) with SU2(F_q) = {(a,b;-b~,a~) : aa~+bb~=1},
/// realizing <q^2, q^2, q^3-q>.  q in {2,3}.
RealizationCertificate construct_sl2_unitary(uint32_t q,
                                             const VerifyOptions& opt = {});

/// The (x,y,alpha) group over F_q^2 with form x1 y1 - w x2 y2, w a
/// non-square (default: smallest), realizing <q^2,q^2,q^2>; alpha bound
/// 2.5 exactly.  Rejects isotropic forms with a witness vector in the
/// error message.
RealizationCertificate construct_bilinear(uint32_t q,
                                          std::optional<uint32_t> w = {},
                                          const VerifyOptions& opt = {});

/// C_5 ⋉ F_16 realizing <5,5,8> through {(a,0)}, {(a,a-1)} and the
/// trace-zero coset {(1,x) : Tr x = 0}.
RealizationCertificate construct_frobenius80(const VerifyOptions& opt = {});

/// Cocycle construction in H ⋉ A: subsets H x {0}, {(g, theta(g))} and
/// {1} x B realize <|H|, |H|, |B|> provided theta is a 1-cocycle for the
/// action and theta(g) in B forces g = 1.  Both hypotheses are verified
/// exhaustively over H before the TPP check.
RealizationCertificate construct_cocycle(
    const Group& h, const Group& a, const Group::Action& act,
    const std::function<Elem(const Elem&)>& theta, const std::vector<Elem>& b,
    const std::string& group_descriptor, const VerifyOptions& opt = {});

/// C_{2n} wr S_n through {(pi,0)}, {(pi, pi u - u)}, {(pi, pi v - v)} with
/// u = (1..n), v = (n..1); shape <n!, n!, n!>.  Verified for 2 <= n <= 6.
RealizationCertificate construct_wreath(uint32_t n,
                                        const VerifyOptions& opt = {});
/// The alpha value log(n!(2n)^n)/log(n!) of the wreath family, for any n.
double wreath_alpha_formula(uint32_t n);

/// D_m through <y>, <y x^2> and {x^{3k}, y x^{3k+1}}, realizing
/// <2, 2, 2 floor(m/3)>; the third subset is a subgroup iff 3 | m.
RealizationCertificate construct_dihedral(uint32_t m,
                                          const VerifyOptions& opt = {});

/// D_5 through {1,y}, {1,yx}, {1,x^2,yx^4}, realizing <2,2,3>.
RealizationCertificate construct_dihedral5(const VerifyOptions& opt = {});

/// Balanced vectors in (Z/mZ)^k with exactly k/(m-1) occurrences of each of
/// 0..m-2; no two distinct vectors differ by a {0,1}-vector (checked
/// exhaustively, capped at 10^7 pairs).  |S| = k! / ((k/(m-1))!)^(m-1).
std::vector<std::vector<uint32_t>> sperner_set(uint32_t m, uint32_t k);

/// D_m^k through <y>^k, <yx>^k and the balanced set embedded in <x>^k,
/// realizing <2^k, 2^k, |S|>.
RealizationCertificate construct_sperner_power(uint32_t m, uint32_t k,
                                               const VerifyOptions& opt = {});

/// One entry of the construction battery in the order reports use.
struct CatalogEntry {
  std::string family;
  std::string params;
  std::function<RealizationCertificate(const VerifyOptions&)> build;
};

/// The full battery of in-scope constructions.
std::vector<CatalogEntry> construction_catalog();

}  // namespace tpp

#pragma once

#include <map>
#include <utility>

#include "macq/combinat.hpp"
#include "macq/qfield.hpp"
#include "macq/sympoly.hpp"

namespace macq {

/// D^r with x_i -> shift * x_i and tau = thalf; D^r(q^2, t^2) corresponds to {q^2, t}.
struct MacParams {
    UnitMono shift = UnitMono::q(2);
    UnitMono thalf = UnitMono::t();
};

/// tau^{r(r-n)} sum_{|I|=r} prod_{i in I, j not in I} (tau^2 x_i - x_j)/(x_i - x_j) T_{shift,I} f.
SymLaurent mac_apply(const SymLaurent& f, int r, const MacParams& params);
/// sum_r (-1)^{n-r} u^{n-r} D^r f.
SymLaurent mac_generator_apply(const SymLaurent& f, const CoeffRat& u, const MacParams& params);
/// e_r(shift^{lam_i} tau^{n+1-2i}), the D^r eigenvalue on P_lam.
CoeffRat mac_eigenvalue(const Signature& lam, int r, const MacParams& params);

/// Kostka numbers K_{nu,mu} for dominant mu, from Gelfand-Tsetlin pattern weights.
const std::map<Signature, long>& kostka_row(const Signature& nu);

/// P_lam(x; shift, thalf^2) by triangular solve of the D^1 eigen-equation.
SymLaurent macdonald_eigen(const Signature& lam, int n, const MacParams& params = {});
/// psi_{lam/mu}(q, t) as a finite product of Pochhammer ratios.
CoeffRat psi_branch(const Signature& lam, const Signature& mu);
/// P_lam(x; shift, thalf^2) by the recursive branching rule.
SymLaurent macdonald_branch(const Signature& lam, int n, const MacParams& params = {});
/// P_lam(x; shift, thalf^2) by summation over Gelfand-Tsetlin patterns.
SymLaurent macdonald_gt(const Signature& lam, int n, const MacParams& params = {});

/// Applies q -> q_image, t -> t_image to every coefficient.
SymLaurent specialize(const SymLaurent& f, const UnitMono& q_image, const UnitMono& t_image);
/// P_lam(x; q^2, q^{2k}) as a polynomial over Q(q).
SymLaurent macdonald_at_k(const Signature& lam, int k);

/// Both sides of the Macdonald symmetry identity at (q^2, q^{2k}).
std::pair<CoeffRat, CoeffRat> symmetry_check(const Signature& lam, const Signature& mu, int k);

}  // namespace macq

#pragma once

#include "macq/combinat.hpp"
#include "macq/npoly.hpp"
#include "macq/qfield.hpp"
#include "macq/sympoly.hpp"

namespace macq {

/// prod_{i<j} [mu-bar_i - mu-bar_j + k-1]_{k-1}, with mu-bar_i = mu_i - k(i-1).
CoeffRat delta1(const Signature& mu, int k);
/// prod_{i<j} [mu-bar_i - mu-bar_j - 1]_{k-1}.
CoeffRat delta2(const Signature& mu, int k);
/// prod_{i<=j} [lam-bar_i - mu-bar_j + k-1]_{k-1} prod_{i<j} [mu-bar_i - lam-bar_j - 1]_{k-1}.
CoeffRat delta_cross(const Signature& mu, const Signature& lam, int k);

/// S(a,b)^2 = prod_{i<=j} [a_i - b_j + j - i]! / prod_{i<j} [b_i - a_j + j - i - 1]!, with 1/[-m]! = 0;
/// throws std::domain_error on a negative argument in the numerator.
CoeffRat s_factor_sq(const Signature& a, const Signature& b);

/// psi_{lam/mu}(q^2, q^{2k}) = delta_cross / ([k-1]!^{n-1} delta1(mu) delta2(lam)).
CoeffRat psi_qnum(const Signature& lam, const Signature& mu, int k);
/// sum_{mu < lam} x_n^{|lam|-|mu|} P_mu(x_1..x_{n-1}; q^2, q^{2k}) psi_qnum(lam, mu, k).
SymLaurent branch_at_k(const Signature& lam, int k);

/// lam_{i+1} - (k-1) <= mu_i <= lam_i for all i; c(mu, lam) vanishes outside this window.
bool in_window(const Signature& mu, const Signature& lam, int k);
/// All mu in the window, dominant or not, lexicographically increasing.
std::vector<Signature> window_enumerate(const Signature& lam, int k);
/// c(mu, lam) through the index-side difference operators applied to the delta_cross kernel.
CoeffRat mat_elt(const Signature& mu, const Signature& lam, int k);
/// c(mu, lam) as the explicit finite sum over nu' in [mu' - (k-1), mu'].
CoeffRat diag_coeff_sum(const Signature& mu, const Signature& lam, int k);

/// Square of the reduced Clebsch-Gordan coefficient of L_{tau'} -> L_tau (x) Sym^p with rows (eta, r, eta').
CoeffRat cg_reduced_squared(const Signature& tau, int p, const Signature& tau_p, const Signature& eta, int r,
                            const Signature& eta_p);
/// Reduced coefficient squared on the slice tau' = lam~, tau = lam~ - (k-1), eta' = mu~, eta = mu~ - (k-1).
CoeffRat cg_slice_squared(const Signature& mu, const Signature& lam, int k);
/// q^{-3(n-1)k(k-1)} prod_{i<n} [lam-bar_i - lam-bar_n - 1]_{k-1} / [lam-bar_i - lam-bar_n + k-1]_{k-1};
/// equals q^{-2(n-1)k(k-1)} cg_slice_squared(lam truncated, lam, k).
CoeffRat cg_slice_diagonal_closed_squared(const Signature& lam, int k);
/// Squared diagonal coefficient of the highest weight vector, as the product of slice coefficients down the chain.
CoeffRat cg_highest_squared(const Signature& lam, int k);
/// Closed form q^{-3n(n-1)k(k-1)/2} prod_{i<j} [lam-bar_i - lam-bar_j - 1]_{k-1} / [lam-bar_i - lam-bar_j + k-1]_{k-1};
/// equals q^{-n(n-1)k(k-1)} cg_highest_squared(lam, k).
CoeffRat cg_highest_closed_squared(const Signature& lam, int k);
/// c(mu, lam)^2 = cg_slice_squared(mu, lam) cg_highest_squared(mu) / cg_highest_squared(lam).
CoeffRat c_squared_chain(const Signature& mu, const Signature& lam, int k);

/// (x_1...x_n)^{-(k-1)(n-1)} prod_{s=1}^{k-1} prod_{i<j} (x_i - q^{2s} x_j).
NPoly ek_denominator(int n, int k);
/// sum over dominant shifted chains of prod c(mu^{i-1}, mu^i) prod x_i^{|mu~^i| - |mu~^{i-1}|}.
NPoly trace_reconstruct(const Signature& lam, int k);

}  // namespace macq

#pragma once

#include <cstdint>
#include <vector>

#include "macq/macops.hpp"
#include "macq/npoly.hpp"
#include "macq/report.hpp"

namespace macq {

/// Square roots of the DAHA parameters; the represented algebra has q = qhalf^2, t = thalf^2.
struct DahaParams {
    UnitMono qhalf = UnitMono::q();
    UnitMono thalf = UnitMono::t();
};

/// s_i: swaps X_i and X_{i+1} (1-based).
NPoly act_s(int i, const NPoly& f);
/// T_i = thalf s_i + (thalf - thalf^{-1}) X_{i+1} (s_i f - f)/(X_i - X_{i+1}), 1 <= i <= n-1.
NPoly act_T(int i, const NPoly& f, const DahaParams& p);
/// T_i^{-1} = T_i - thalf + thalf^{-1}.
NPoly act_T_inv(int i, const NPoly& f, const DahaParams& p);
/// Multiplication by X_i^e.
NPoly act_X(int i, const NPoly& f, int e = 1);
/// X_i -> q^e X_i.
NPoly act_q_shift(int i, const NPoly& f, const DahaParams& p, int e = 1);
/// Y_i = T_i...T_{n-1} s_{n-1}...s_1 T_{q,X_1} T_1^{-1}...T_{i-1}^{-1}, 1 <= i <= n.
NPoly act_Y(int i, const NPoly& f, const DahaParams& p);
/// Y_i^{-1} = T_{i-1}...T_1 T_{q,X_1}^{-1} s_1...s_{n-1} T_{n-1}^{-1}...T_i^{-1}.
NPoly act_Y_inv(int i, const NPoly& f, const DahaParams& p);

/// (1-t)^n / prod_{m=1}^n (1-t^m) * sum_sigma thalf^{l(sigma)} T_sigma f.
NPoly symmetrize(const NPoly& f, const DahaParams& p);

/// Relation check on seeded random samples (sample s uses seed + s).
Report verify_relations(int n, const DahaParams& p, std::uint64_t seed, int samples);

/// e_r(Y_1, ..., Y_n) applied to a symmetric f through the polynomial representation.
SymLaurent e_r_Y_apply(const SymLaurent& f, int r, const DahaParams& p);
/// The difference operator thalf^{-(n-1)} sum_i prod_{j != i} (t x_j - x_i)/(x_j - x_i) f(.., q^{-1} x_i, ..).
SymLaurent p1_Yinv_apply(const SymLaurent& f, const DahaParams& p);
/// The same operator computed as sum_i Y_i^{-1} in the polynomial representation.
SymLaurent p1_Yinv_apply_via_Y(const SymLaurent& f, const DahaParams& p);

/// Substitutes variable i*l + a (the a-th member of ladder i) by q^{1-l+2a} X_i.
SymLaurent res_map(const SymLaurent& f, int n, int l);
/// True when the point splits into n ladders z, z t, ..., z t^{l-1}.
bool is_multiwheel(const std::vector<UnitMono>& point, int n, int l, const UnitMono& t);

/// prod_i x_i^{half/2} * f, tracked through the half-exponent offset.
struct HalfShifted {
    int half = 0;
    SymLaurent f;
    friend bool operator==(const HalfShifted& a, const HalfShifted& b) { return a.half == b.half && a.f == b.f; }
};
/// Generator sum_r (-u)^{n-r} D^r on a half-shifted input; needs shift^{half/2} to be a unit monomial.
HalfShifted mac_generator_apply(const HalfShifted& g, const CoeffRat& u, const MacParams& params);
/// res_map extended to half-shifted inputs: (q^{1-l+2a} X_i)^{1/2} = q^{(1-l+2a)/2} X_i^{1/2}.
HalfShifted res_map(const HalfShifted& g, int n, int l);

/// Res-intertwining checks for D^1, the p_1(Y^{-1}) operator and multiplication by e_1.
Report verify_res_intertwine(int n, int l, std::uint64_t seed, int samples);
/// Res(D_{nl}(q^{l+1}; q^{-2l}, q^2) f) = prod_{a=1}^l D_n(q^{2a}; q^{-2}, q^{2l}) Res f, with half-shifted inputs.
Report verify_res_diff(int n, int l, std::uint64_t seed, int samples);

/// Seeded random Laurent polynomial with exponents in [-deg, deg] and small integer or t-linear coefficients.
NPoly random_npoly(int n, std::uint64_t seed, int terms = 3, int deg = 2);
/// Seeded random symmetric polynomial with dominant exponents in [lo, hi].
SymLaurent random_sym(int n, std::uint64_t seed, int terms, int lo, int hi);

}  // namespace macq

#pragma once

#include <gmpxx.h>

#include <vector>

// Dense polynomial helpers backing the gcd of LaurentQT.
// UPoly: integer coefficients indexed by q-degree.
// BPoly: UPoly coefficients indexed by t-degree.
namespace macq::detail {

using UPoly = std::vector<mpz_class>;
using BPoly = std::vector<UPoly>;

inline int deg(const UPoly& a) { return static_cast<int>(a.size()) - 1; }
inline int deg(const BPoly& a) { return static_cast<int>(a.size()) - 1; }

void trim(UPoly& a);
void trim(BPoly& a);

UPoly u_mul(const UPoly& a, const UPoly& b);
mpz_class u_content(const UPoly& a);
bool u_divexact(const UPoly& a, const UPoly& b, UPoly& quot);
UPoly u_gcd(UPoly a, UPoly b);

BPoly b_gcd(BPoly a, BPoly b);
bool b_divexact(BPoly a, const BPoly& b, BPoly& quot);

}  // namespace macq::detail

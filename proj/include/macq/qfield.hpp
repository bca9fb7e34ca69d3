#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace macq {

using BigInt = mpz_class;

/// Signed unit monomial sign * q^a * t^b.
struct UnitMono {
    int sign = 1;
    int a = 0;
    int b = 0;

    static UnitMono q(int e = 1) { return {1, e, 0}; }
    static UnitMono t(int e = 1) { return {1, 0, e}; }

    UnitMono inv() const { return {sign, -a, -b}; }
    UnitMono pow(int e) const;
    friend UnitMono operator*(const UnitMono& x, const UnitMono& y) {
        return {x.sign * y.sign, x.a + y.a, x.b + y.b};
    }
    friend bool operator==(const UnitMono&, const UnitMono&) = default;
    std::string str() const;
};

/// Laurent polynomial in q and t with integer coefficients.
/// Terms are kept sorted in descending graded-lex order (total degree, then q-degree).
class LaurentQT {
public:
    struct Term {
        int qe;
        int te;
        BigInt c;
    };

    LaurentQT() = default;
    LaurentQT(long c);
    LaurentQT(const BigInt& c);
    LaurentQT(const UnitMono& m);
    static LaurentQT monomial(const BigInt& c, int qe, int te);
    static LaurentQT from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const;
    bool t_free() const;
    int min_q() const;
    int min_t() const;
    int max_q() const;
    int max_t() const;
    const Term& lead() const { return terms_.front(); }

    LaurentQT shifted(int dq, int dt) const;
    LaurentQT operator-() const;
    LaurentQT& operator+=(const LaurentQT& o);
    LaurentQT& operator-=(const LaurentQT& o);
    LaurentQT& operator*=(const LaurentQT& o);
    LaurentQT& operator*=(const UnitMono& m);
    friend LaurentQT operator+(LaurentQT x, const LaurentQT& y) { return x += y; }
    friend LaurentQT operator-(LaurentQT x, const LaurentQT& y) { return x -= y; }
    friend LaurentQT operator*(const LaurentQT& x, const LaurentQT& y);
    friend LaurentQT operator*(LaurentQT x, const UnitMono& m) { return x *= m; }
    friend bool operator==(const LaurentQT& x, const LaurentQT& y);

    BigInt content() const;
    LaurentQT div_integer(const BigInt& d) const;
    LaurentQT subst(const UnitMono& qi, const UnitMono& ti) const;
    std::string str() const;

private:
    void canonicalize();
    std::vector<Term> terms_;
};

/// Exact element of Q(q,t) in reduced canonical form.
class CoeffRat {
public:
    CoeffRat() : num_(), den_(1) {}
    CoeffRat(long c) : num_(c), den_(1) {}
    CoeffRat(const BigInt& c) : num_(c), den_(1) {}
    CoeffRat(const LaurentQT& p) : num_(p), den_(1) {}
    CoeffRat(const UnitMono& m) : num_(m), den_(1) {}
    CoeffRat(const LaurentQT& num, const LaurentQT& den);

    const LaurentQT& num() const { return num_; }
    const LaurentQT& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }

    CoeffRat operator-() const;
    CoeffRat inv() const;
    CoeffRat& operator+=(const CoeffRat& o);
    CoeffRat& operator-=(const CoeffRat& o);
    CoeffRat& operator*=(const CoeffRat& o);
    CoeffRat& operator/=(const CoeffRat& o);
    CoeffRat& operator*=(const UnitMono& m);
    friend CoeffRat operator+(CoeffRat x, const CoeffRat& y) { return x += y; }
    friend CoeffRat operator-(CoeffRat x, const CoeffRat& y) { return x -= y; }
    friend CoeffRat operator*(CoeffRat x, const CoeffRat& y) { return x *= y; }
    friend CoeffRat operator/(CoeffRat x, const CoeffRat& y) { return x /= y; }
    friend CoeffRat operator*(CoeffRat x, const UnitMono& m) { return x *= m; }
    friend bool operator==(const CoeffRat& x, const CoeffRat& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }

    CoeffRat pow(int e) const;
    CoeffRat subst(const UnitMono& qi, const UnitMono& ti) const;
    std::string str() const;

private:
    struct Raw {};
    CoeffRat(LaurentQT num, LaurentQT den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
    static CoeffRat reduce(LaurentQT num, LaurentQT den);

    LaurentQT num_;
    LaurentQT den_;
};

/// [a] = (q^a - q^-a)/(q - q^-1).
CoeffRat qnum(int a);
/// [a]_m = [a][a-1]...[a-m+1].
CoeffRat qfall(int a, int m);
/// [a]! for a >= 0; throws std::domain_error for a < 0.
CoeffRat qfact(int a);
/// prod_{m=a}^{a+d-1} (1 - q^m t^tpow).
CoeffRat poch_ratio(int a, int d, int tpow);
/// Ring homomorphism q -> q_image, t -> t_image; throws std::domain_error if the denominator vanishes.
CoeffRat subst(const CoeffRat& x, const UnitMono& q_image, const UnitMono& t_image);

class Rng;
/// Seeded random Laurent polynomial with `terms` terms, q-exponents in [-span, span], t-exponents in [0, span].
LaurentQT random_laurent(Rng& rng, int terms, int span);
/// Seeded random nonzero-denominator element of Q(q,t).
CoeffRat random_rat(Rng& rng);

/// Greatest common divisor of two polynomials in Z[q,t] (non-negative exponents).
LaurentQT poly_gcd(const LaurentQT& a, const LaurentQT& b);
/// Exact quotient a / b in Z[q^{±1},t^{±1}]; throws std::domain_error when b does not divide a.
LaurentQT poly_divexact(const LaurentQT& a, const LaurentQT& b);

}  // namespace macq

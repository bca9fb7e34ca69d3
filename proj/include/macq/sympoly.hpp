#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "macq/combinat.hpp"
#include "macq/qfield.hpp"

namespace macq {

/// Symmetric Laurent polynomial sum_lam c_lam m_lam in the orbit-monomial basis.
/// Keys are dominant signatures of length n, stored in lex-descending order.
class SymLaurent {
public:
    using Terms = std::map<Signature, CoeffRat, std::greater<Signature>>;

    explicit SymLaurent(int n = 0) : n_(n) {}
    static SymLaurent constant(int n, const CoeffRat& c);

    int n() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    CoeffRat coeff(const Signature& lam) const;
    /// Adds c * m_lam; lam must be dominant of length n.
    void add_term(const Signature& lam, const CoeffRat& c);

    SymLaurent& operator+=(const SymLaurent& o);
    SymLaurent& operator-=(const SymLaurent& o);
    SymLaurent& operator*=(const CoeffRat& c);
    friend SymLaurent operator+(SymLaurent f, const SymLaurent& g) { return f += g; }
    friend SymLaurent operator-(SymLaurent f, const SymLaurent& g) { return f -= g; }
    friend SymLaurent operator*(SymLaurent f, const CoeffRat& c) { return f *= c; }
    friend SymLaurent operator*(const CoeffRat& c, SymLaurent f) { return f *= c; }
    friend bool operator==(const SymLaurent& f, const SymLaurent& g) {
        return f.n_ == g.n_ && f.terms_ == g.terms_;
    }

    /// Applies a coefficient map (e.g. a substitution) termwise.
    SymLaurent map_coeffs(const std::function<CoeffRat(const CoeffRat&)>& fn) const;

private:
    int n_;
    Terms terms_;
};

using EvalPoint = std::vector<UnitMono>;

SymLaurent m_sym(const Signature& lam, int n);
SymLaurent e_sym(int r, int n);
SymLaurent add(const SymLaurent& f, const SymLaurent& g);
SymLaurent scalar_mul(const SymLaurent& f, const CoeffRat& c);
SymLaurent mul(const SymLaurent& f, const SymLaurent& g);
CoeffRat eval(const SymLaurent& f, const EvalPoint& p);
/// Multiplies by (x_1...x_n)^c.
SymLaurent mono_shift(const SymLaurent& f, int c);

}  // namespace macq

#pragma once

#include <map>
#include <vector>

#include "macq/qfield.hpp"
#include "macq/sympoly.hpp"

namespace macq {

/// Laurent polynomial in X_1..X_n (not necessarily symmetric) over CoeffRat.
class NPoly {
public:
    using Exponent = std::vector<int>;
    using Terms = std::map<Exponent, CoeffRat, std::greater<Exponent>>;

    explicit NPoly(int n = 0) : n_(n) {}
    static NPoly monomial(const Exponent& e, const CoeffRat& c = CoeffRat(1));
    static NPoly constant(int n, const CoeffRat& c);
    static NPoly from_sym(const SymLaurent& f);

    int n() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    CoeffRat coeff(const Exponent& e) const;
    void add_term(const Exponent& e, const CoeffRat& c);

    NPoly& operator+=(const NPoly& o);
    NPoly& operator-=(const NPoly& o);
    NPoly& operator*=(const CoeffRat& c);
    friend NPoly operator+(NPoly f, const NPoly& g) { return f += g; }
    friend NPoly operator-(NPoly f, const NPoly& g) { return f -= g; }
    friend NPoly operator*(NPoly f, const CoeffRat& c) { return f *= c; }
    friend NPoly operator*(const CoeffRat& c, NPoly f) { return f *= c; }
    friend NPoly operator*(const NPoly& f, const NPoly& g);
    friend bool operator==(const NPoly& f, const NPoly& g) { return f.n_ == g.n_ && f.terms_ == g.terms_; }

    /// Multiplies by X^e.
    NPoly times_monomial(const Exponent& e) const;
    bool is_symmetric() const;
    /// Folds a symmetric polynomial into the orbit basis; throws std::logic_error otherwise.
    SymLaurent to_sym() const;

private:
    int n_;
    Terms terms_;
};

}  // namespace macq

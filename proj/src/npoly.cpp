#include "macq/npoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace macq {

NPoly NPoly::monomial(const Exponent& e, const CoeffRat& c) {
    NPoly f(static_cast<int>(e.size()));
    f.add_term(e, c);
    return f;
}

NPoly NPoly::constant(int n, const CoeffRat& c) { return monomial(Exponent(n, 0), c); }

NPoly NPoly::from_sym(const SymLaurent& f) {
    NPoly r(f.n());
    for (const auto& [lam, c] : f.terms())
        for (const auto& alpha : orbit(lam)) r.add_term(alpha, c);
    return r;
}

CoeffRat NPoly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? CoeffRat() : it->second;
}

void NPoly::add_term(const Exponent& e, const CoeffRat& c) {
    if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("NPoly exponent length mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NPoly& NPoly::operator+=(const NPoly& o) {
    if (o.n_ != n_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

NPoly& NPoly::operator-=(const NPoly& o) {
    if (o.n_ != n_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

NPoly& NPoly::operator*=(const CoeffRat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

NPoly operator*(const NPoly& f, const NPoly& g) {
    if (f.n_ != g.n_) throw std::invalid_argument("variable count mismatch");
    NPoly r(f.n_);
    NPoly::Exponent s(f.n_);
    for (const auto& [a, c] : f.terms_)
        for (const auto& [b, d] : g.terms_) {
            for (int i = 0; i < f.n_; ++i) s[i] = a[i] + b[i];
            r.add_term(s, c * d);
        }
    return r;
}

NPoly NPoly::times_monomial(const Exponent& e) const {
    NPoly r(n_);
    Exponent s(n_);
    for (const auto& [a, c] : terms_) {
        for (int i = 0; i < n_; ++i) s[i] = a[i] + e[i];
        r.terms_.emplace(s, c);
    }
    return r;
}

bool NPoly::is_symmetric() const {
    for (const auto& [e, c] : terms_) {
        Exponent s = e;
        std::sort(s.begin(), s.end(), std::greater<int>());
        if (!(coeff(s) == c)) return false;
    }
    return true;
}

SymLaurent NPoly::to_sym() const {
    if (!is_symmetric()) throw std::logic_error("polynomial is not symmetric");
    SymLaurent r(n_);
    for (const auto& [e, c] : terms_)
        if (is_dominant(e)) r.add_term(e, c);
    return r;
}

}  // namespace macq

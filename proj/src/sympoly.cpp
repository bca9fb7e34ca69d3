#include "macq/sympoly.hpp"

#include <stdexcept>

namespace macq {

SymLaurent SymLaurent::constant(int n, const CoeffRat& c) {
    SymLaurent f(n);
    f.add_term(Signature(n, 0), c);
    return f;
}

CoeffRat SymLaurent::coeff(const Signature& lam) const {
    auto it = terms_.find(lam);
    return it == terms_.end() ? CoeffRat() : it->second;
}

void SymLaurent::add_term(const Signature& lam, const CoeffRat& c) {
    if (static_cast<int>(lam.size()) != n_ || !is_dominant(lam))
        throw std::invalid_argument("SymLaurent key must be a dominant signature of length n");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(lam, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymLaurent& SymLaurent::operator+=(const SymLaurent& o) {
    if (o.n_ != n_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [lam, c] : o.terms_) add_term(lam, c);
    return *this;
}

SymLaurent& SymLaurent::operator-=(const SymLaurent& o) {
    if (o.n_ != n_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [lam, c] : o.terms_) add_term(lam, -c);
    return *this;
}

SymLaurent& SymLaurent::operator*=(const CoeffRat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [lam, v] : terms_) v *= c;
    return *this;
}

SymLaurent SymLaurent::map_coeffs(const std::function<CoeffRat(const CoeffRat&)>& fn) const {
    SymLaurent r(n_);
    for (const auto& [lam, c] : terms_) r.add_term(lam, fn(c));
    return r;
}

SymLaurent m_sym(const Signature& lam, int n) {
    if (static_cast<int>(lam.size()) != n) throw std::invalid_argument("m_sym: length mismatch");
    SymLaurent f(n);
    f.add_term(lam, CoeffRat(1));
    return f;
}

SymLaurent e_sym(int r, int n) {
    if (r < 0 || r > n) throw std::invalid_argument("e_sym: r out of range");
    Signature lam(n, 0);
    for (int i = 0; i < r; ++i) lam[i] = 1;
    return m_sym(lam, n);
}

SymLaurent add(const SymLaurent& f, const SymLaurent& g) { return f + g; }

SymLaurent scalar_mul(const SymLaurent& f, const CoeffRat& c) { return f * c; }

SymLaurent mul(const SymLaurent& f, const SymLaurent& g) {
    if (f.n() != g.n()) throw std::invalid_argument("variable count mismatch");
    int n = f.n();
    SymLaurent r(n);
    for (const auto& [lam, c] : f.terms()) {
        std::vector<Signature> olam = orbit(lam);
        for (const auto& [mu, d] : g.terms()) {
            std::map<Signature, long> counts;
            for (const auto& beta : orbit(mu)) {
                Signature s(n);
                for (const auto& alpha : olam) {
                    for (int i = 0; i < n; ++i) s[i] = alpha[i] + beta[i];
                    if (is_dominant(s)) ++counts[s];
                }
            }
            CoeffRat cd = c * d;
            for (const auto& [nu, m] : counts) r.add_term(nu, cd * CoeffRat(m));
        }
    }
    return r;
}

CoeffRat eval(const SymLaurent& f, const EvalPoint& p) {
    if (static_cast<int>(p.size()) != f.n()) throw std::invalid_argument("eval: dimension mismatch");
    CoeffRat total;
    for (const auto& [lam, c] : f.terms()) {
        LaurentQT m;
        for (const auto& alpha : orbit(lam)) {
            UnitMono v;
            for (size_t i = 0; i < alpha.size(); ++i) v = v * p[i].pow(alpha[i]);
            m += LaurentQT(v);
        }
        total += c * CoeffRat(m);
    }
    return total;
}

SymLaurent mono_shift(const SymLaurent& f, int c) {
    SymLaurent r(f.n());
    for (const auto& [lam, v] : f.terms()) {
        Signature s = lam;
        for (auto& x : s) x += c;
        r.add_term(s, v);
    }
    return r;
}

}  // namespace macq

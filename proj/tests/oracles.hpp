#pragma once

// Independent reference computations used only by the test suite.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "macq/combinat.hpp"
#include "macq/npoly.hpp"
#include "macq/qfield.hpp"
#include "macq/sympoly.hpp"

namespace oracle {

using namespace macq;

inline long weyl_dimension(const Signature& lam) {
    // product over i<j of (lam_i-lam_j+j-i)/(j-i), accumulated as a fraction
    long num = 1, den = 1;
    for (size_t i = 0; i < lam.size(); ++i)
        for (size_t j = i + 1; j < lam.size(); ++j) {
            num *= lam[i] - lam[j] + static_cast<long>(j - i);
            den *= static_cast<long>(j - i);
        }
    return num / den;
}

inline int perm_sign(const std::vector<int>& p) {
    int s = 1;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) s = -s;
    return s;
}

/// det(x_i^{e_j}) expanded over permutations.
inline NPoly alternant(const std::vector<int>& e) {
    int n = static_cast<int>(e.size());
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    NPoly out(n);
    do {
        std::vector<int> ex(n);
        for (int i = 0; i < n; ++i) ex[i] = e[p[i]];
        out.add_term(ex, CoeffRat(perm_sign(p)));
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

/// Bialternant check: f is the Schur polynomial s_lam iff f * a_delta = a_{lam+delta}.
inline bool is_schur(const SymLaurent& f, const Signature& lam) {
    int n = static_cast<int>(lam.size());
    std::vector<int> delta(n), ld(n);
    for (int i = 0; i < n; ++i) {
        delta[i] = n - 1 - i;
        ld[i] = lam[i] + delta[i];
    }
    return NPoly::from_sym(f) * alternant(delta) == alternant(ld);
}

inline std::vector<Signature> partitions(int m) {
    std::vector<Signature> out;
    for (int len = 1; len <= std::max(m, 1); ++len)
        for (auto s : dominant_with_sum(len, m, m == 0 ? 0 : 1, m))
            out.push_back(s);
    if (m == 0) out = {Signature{}};
    return out;
}

inline Signature pad(const Signature& s, int n) {
    Signature r = s;
    r.resize(n, 0);
    return r;
}

/// Solves A x = b over CoeffRat by Gaussian elimination.
inline std::vector<CoeffRat> solve(std::vector<std::vector<CoeffRat>> a, std::vector<CoeffRat> b) {
    size_t n = b.size();
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (a[piv][c].is_zero()) ++piv;
        std::swap(a[piv], a[c]);
        std::swap(b[piv], b[c]);
        CoeffRat inv = a[c][c].inv();
        for (size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c].is_zero()) continue;
            CoeffRat f = a[r][c] * inv;
            for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    for (size_t c = 0; c < n; ++c) b[c] /= a[c][c];
    return b;
}

/// P_lam(x; q, t) as a symmetric function (|lam| variables) by Gram-Schmidt of monomial
/// symmetric functions under <p_a, p_b> = delta_ab z_a prod (1-q^{a_i})/(1-t^{a_i}).
inline SymLaurent gram_schmidt_macdonald(const Signature& lam_in) {
    Signature lam;
    for (int x : lam_in)
        if (x > 0) lam.push_back(x);
    int m = size(lam);
    int N = std::max(m, 1);
    std::vector<Signature> parts = partitions(m);  // lex-descending within each length
    std::sort(parts.begin(), parts.end(), [&](const Signature& a, const Signature& b) {
        return pad(a, N) > pad(b, N);
    });
    size_t P = parts.size();
    // power sums p_mu in the monomial basis: column j holds p_{parts[j]}
    std::vector<std::vector<CoeffRat>> pm(P, std::vector<CoeffRat>(P));
    for (size_t j = 0; j < P; ++j) {
        SymLaurent f = SymLaurent::constant(N, CoeffRat(1));
        for (int r : parts[j]) {
            Signature s(N, 0);
            s[0] = r;
            f = mul(f, m_sym(s, N));
        }
        for (size_t i = 0; i < P; ++i) pm[i][j] = f.coeff(pad(parts[i], N));
    }
    // m_a = sum_j M[j][a] p_j: solve pm * col = e_a
    std::vector<std::vector<CoeffRat>> m_in_p(P);
    for (size_t a = 0; a < P; ++a) {
        std::vector<CoeffRat> e(P);
        e[a] = CoeffRat(1);
        m_in_p[a] = solve(pm, e);
    }
    const CoeffRat q(UnitMono::q()), t(UnitMono::t());
    std::vector<CoeffRat> pnorm(P);
    for (size_t j = 0; j < P; ++j) {
        CoeffRat z(1);
        std::map<int, int> mult;
        for (int r : parts[j]) ++mult[r];
        for (auto [r, c] : mult) {
            for (int i = 1; i <= c; ++i) z *= CoeffRat(static_cast<long>(r) * i);
        }
        for (int r : parts[j]) z *= (1 - q.pow(r)) / (1 - t.pow(r));
        pnorm[j] = z;
    }
    auto inner = [&](const std::vector<CoeffRat>& u, const std::vector<CoeffRat>& v) {
        CoeffRat s;
        for (size_t j = 0; j < P; ++j)
            if (!u[j].is_zero() && !v[j].is_zero()) s += u[j] * v[j] * pnorm[j];
        return s;
    };
    // Gram-Schmidt from the bottom of dominance (reverse lex) upward
    std::vector<std::vector<CoeffRat>> basis;  // in p-coordinates
    std::vector<std::vector<CoeffRat>> basis_m; // in m-coordinates
    std::vector<Signature> order(parts.rbegin(), parts.rend());
    for (const auto& mu : order) {
        size_t a = std::find(parts.begin(), parts.end(), mu) - parts.begin();
        std::vector<CoeffRat> v = m_in_p[a];
        std::vector<CoeffRat> vm(P);
        vm[a] = CoeffRat(1);
        for (size_t b = 0; b < basis.size(); ++b) {
            CoeffRat c = inner(v, basis[b]) / inner(basis[b], basis[b]);
            if (c.is_zero()) continue;
            for (size_t j = 0; j < P; ++j) {
                v[j] -= c * basis[b][j];
                vm[j] -= c * basis_m[b][j];
            }
        }
        if (mu == lam) {
            SymLaurent out(N);
            for (size_t j = 0; j < P; ++j) out.add_term(pad(parts[j], N), vm[j]);
            return out;
        }
        basis.push_back(v);
        basis_m.push_back(vm);
    }
    return SymLaurent(N);
}

/// Restricts a symmetric function in N variables to n variables (drops keys with too many parts).
inline SymLaurent restrict_vars(const SymLaurent& f, int n) {
    SymLaurent out(n);
    for (const auto& [lam, c] : f.terms()) {
        bool ok = true;
        for (size_t i = n; i < lam.size(); ++i)
            if (lam[i] != 0) ok = false;
        if (!ok) continue;
        out.add_term(pad(Signature(lam.begin(), lam.begin() + std::min<size_t>(n, lam.size())), n), c);
    }
    return out;
}

}  // namespace oracle

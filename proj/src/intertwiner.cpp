#include "macq/intertwiner.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "macq/indexops.hpp"
#include "macq/macops.hpp"

namespace macq {

namespace {

void check_k(int k) {
    if (k < 1) throw std::invalid_argument("k must be a positive integer");
}

void check_lengths(const Signature& mu, const Signature& lam) {
    if (lam.empty() || mu.size() + 1 != lam.size())
        throw std::invalid_argument("expected len(mu) = len(lam) - 1");
}

Signature bar(const Signature& v, int k) { return shift(v, k, ShiftVariant::bar); }

Signature minus_const(Signature v, int c) {
    for (auto& x : v) x -= c;
    return v;
}

Signature truncated(const Signature& v) { return Signature(v.begin(), v.end() - 1); }

CoeffRat sign_pow(long e) { return CoeffRat(e % 2 == 0 ? 1 : -1); }

CoeffRat q_pow(int e) { return CoeffRat(UnitMono::q(e)); }

}  // namespace

CoeffRat delta1(const Signature& mu, int k) {
    check_k(k);
    Signature b = bar(mu, k);
    CoeffRat r(1);
    for (size_t i = 0; i < b.size(); ++i)
        for (size_t j = i + 1; j < b.size(); ++j) r *= qfall(b[i] - b[j] + k - 1, k - 1);
    return r;
}

CoeffRat delta2(const Signature& mu, int k) {
    check_k(k);
    Signature b = bar(mu, k);
    CoeffRat r(1);
    for (size_t i = 0; i < b.size(); ++i)
        for (size_t j = i + 1; j < b.size(); ++j) r *= qfall(b[i] - b[j] - 1, k - 1);
    return r;
}

CoeffRat delta_cross(const Signature& mu, const Signature& lam, int k) {
    check_k(k);
    Signature lb = bar(lam, k), mb = bar(mu, k);
    CoeffRat r(1);
    for (size_t j = 0; j < mb.size(); ++j)
        for (size_t i = 0; i <= j && i < lb.size(); ++i) r *= qfall(lb[i] - mb[j] + k - 1, k - 1);
    for (size_t i = 0; i < mb.size(); ++i)
        for (size_t j = i + 1; j < lb.size(); ++j) r *= qfall(mb[i] - lb[j] - 1, k - 1);
    return r;
}

CoeffRat s_factor_sq(const Signature& a, const Signature& b) {
    CoeffRat num(1), den(1);
    auto fact = [](int x) {
        if (x < 0) throw std::domain_error("S-factor: negative factorial argument in the numerator");
        return qfact(x);
    };
    int la = static_cast<int>(a.size()), lb = static_cast<int>(b.size());
    for (int i = 0; i < la; ++i)
        for (int j = i; j < lb; ++j) num *= fact(a[i] - b[j] + j - i);
    for (int i = 0; i < lb; ++i)
        for (int j = i + 1; j < la; ++j) {
            int x = b[i] - a[j] + j - i - 1;
            if (x < 0) return CoeffRat();
            den *= qfact(x);
        }
    return num / den;
}

CoeffRat psi_qnum(const Signature& lam, const Signature& mu, int k) {
    check_k(k);
    check_lengths(mu, lam);
    if (!interlaces(mu, lam)) throw std::invalid_argument("psi_qnum: mu does not interlace lam");
    int n = static_cast<int>(lam.size());
    return delta_cross(mu, lam, k) / (qfact(k - 1).pow(n - 1) * delta1(mu, k) * delta2(lam, k));
}

SymLaurent branch_at_k(const Signature& lam, int k) {
    check_k(k);
    int n = static_cast<int>(lam.size());
    if (n <= 1) return macdonald_at_k(lam, k);
    std::vector<int> lo, hi;
    for (int j = 0; j + 1 < n; ++j) {
        lo.push_back(lam[j + 1]);
        hi.push_back(lam[j]);
    }
    NPoly total(n);
    Signature mu(n - 1);
    auto rec = [&](auto&& self, int j) -> void {
        if (j == n - 1) {
            CoeffRat psi = psi_qnum(lam, mu, k);
            NPoly pmu = NPoly::from_sym(macdonald_at_k(mu, k));
            for (const auto& [e, c] : pmu.terms()) {
                NPoly::Exponent ex = e;
                ex.push_back(size(lam) - size(mu));
                total.add_term(ex, c * psi);
            }
            return;
        }
        for (int v = lo[j]; v <= hi[j]; ++v) {
            mu[j] = v;
            self(self, j + 1);
        }
    };
    rec(rec, 0);
    return total.to_sym();
}

bool in_window(const Signature& mu, const Signature& lam, int k) {
    check_k(k);
    check_lengths(mu, lam);
    for (size_t i = 0; i < mu.size(); ++i)
        if (mu[i] > lam[i] || mu[i] < lam[i + 1] - (k - 1)) return false;
    return true;
}

std::vector<Signature> window_enumerate(const Signature& lam, int k) {
    check_k(k);
    if (lam.empty()) throw std::invalid_argument("expected a non-empty signature");
    int m = static_cast<int>(lam.size()) - 1;
    LatticePoint lo(m), hi(m);
    for (int i = 0; i < m; ++i) {
        lo[i] = lam[i + 1] - (k - 1);
        hi[i] = lam[i];
    }
    std::vector<Signature> out;
    for_each_point(lo, hi, [&](const LatticePoint& mu) { out.push_back(mu); });
    return out;
}

CoeffRat mat_elt(const Signature& mu, const Signature& lam, int k) {
    if (!in_window(mu, lam, k)) return CoeffRat();
    int m = static_cast<int>(mu.size());
    IndexFn g = [lam, k](const LatticePoint& nu) { return delta_cross(nu, lam, k); };
    for (int a = 1; a <= k - 1; ++a) g = index_generator(g, m, q_pow(2 * a), k, k - 1, -1);
    Signature mup = minus_const(mu, -(k - 1));
    CoeffRat num = g(mup);
    if (num.is_zero()) return num;
    Signature mb = bar(mup, k);
    CoeffRat den = delta2(lam, k);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) den *= qfall(mb[i] - mb[j] + k - 1, k - 1);
    return num / den;
}

CoeffRat diag_coeff_sum(const Signature& mu, const Signature& lam, int k) {
    if (!in_window(mu, lam, k)) return CoeffRat();
    int n = static_cast<int>(lam.size()), m = n - 1;
    Signature mb = bar(minus_const(mu, -(k - 1)), k), lb = bar(lam, k);
    CoeffRat pref = sign_pow(static_cast<long>(m) * (k - 1)) * q_pow(m * k * (k - 1)) / (delta2(lam, k) * delta1(mu, k));
    CoeffRat total;
    std::vector<int> off(m, 0);
    while (true) {
        Signature nb(m);
        for (int i = 0; i < m; ++i) nb[i] = mb[i] - off[i];
        int d = 0;
        for (int i = 0; i < m; ++i) d += nb[i] - mb[i];
        CoeffRat num = sign_pow(d) * q_pow(k * d), den(1);
        for (int i = 0; i < m; ++i) den *= qfact(nb[i] - mb[i] + k - 1) * qfact(mb[i] - nb[i]);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                num *= qfall(mb[i] - mb[j] + k - 1, 2 * k - 1) * qnum(nb[i] - nb[j]);
                den *= qfall(nb[i] - mb[j] + k - 1, k) * qfall(mb[i] - nb[j], k);
            }
        for (int j = 0; j < m; ++j)
            for (int i = 0; i <= j; ++i) num *= qfall(lb[i] - nb[j] + k - 1, k - 1);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < n; ++j) num *= qfall(nb[i] - lb[j] - 1, k - 1);
        if (!num.is_zero()) {
            if (den.is_zero()) throw std::domain_error("diag_coeff_sum: vanishing denominator");
            total += num / den;
        }
        int i = m - 1;
        while (i >= 0 && off[i] == k - 1) off[i--] = 0;
        if (i < 0) break;
        ++off[i];
    }
    return pref * total;
}

CoeffRat cg_reduced_squared(const Signature& tau, int p, const Signature& tau_p, const Signature& eta, int r,
                            const Signature& eta_p) {
    int n = static_cast<int>(tau.size());
    if (tau_p.size() != tau.size() || eta.size() + 1 != tau.size() || eta_p.size() != eta.size())
        throw std::invalid_argument("cg_reduced_squared: inconsistent row lengths");
    if (p < r) throw std::invalid_argument("cg_reduced_squared: p < r");
    // b with 1-based index i, so (eta_i - i + 1) becomes eta[i] - i here
    long b = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) b += static_cast<long>(tau_p[i] - tau[i]) * (tau_p[j] - tau[j]);
    for (int i = 0; i < n - 1; ++i)
        for (int j = i + 1; j < n - 1; ++j) b -= static_cast<long>(eta_p[i] - eta[i]) * (eta_p[j] - eta[j]);
    for (int i = 0; i < n - 1; ++i) b += static_cast<long>(eta_p[i] - eta[i]) * (eta[i] - i);
    for (int i = 0; i < n; ++i) b -= static_cast<long>(tau_p[i] - tau[i]) * (tau[i] - i);
    b += static_cast<long>(p - r) * (size(tau) - size(eta));

    std::vector<int> lo(n - 1), hi(n - 1);
    for (int i = 0; i < n - 1; ++i) {
        lo[i] = std::max(eta[i], tau_p[i + 1]);
        hi[i] = std::min(eta_p[i], tau[i]);
        if (lo[i] > hi[i]) return CoeffRat();
    }
    CoeffRat sum;
    Signature sigma = lo;
    while (true) {
        int d = size(sigma) - size(eta);
        CoeffRat term = sign_pow(d) * q_pow((p - r + 1) * d) * s_factor_sq(sigma, sigma) * s_factor_sq(tau_p, sigma) /
                        (s_factor_sq(sigma, eta) * s_factor_sq(eta_p, sigma) * s_factor_sq(tau, sigma));
        sum += term;
        int i = n - 2;
        while (i >= 0 && sigma[i] == hi[i]) {
            sigma[i] = lo[i];
            --i;
        }
        if (i < 0) break;
        ++sigma[i];
    }
    CoeffRat pref = s_factor_sq(eta_p, eta) * s_factor_sq(tau, eta) * s_factor_sq(tau_p, tau_p) *
                    s_factor_sq(eta, eta) / (s_factor_sq(tau_p, tau) * s_factor_sq(tau_p, eta_p));
    return q_pow(static_cast<int>(-b)) * qfact(p - r) * pref * sum * sum;
}

CoeffRat cg_slice_squared(const Signature& mu, const Signature& lam, int k) {
    check_k(k);
    check_lengths(mu, lam);
    int n = static_cast<int>(lam.size());
    Signature lt = shift(lam, k, ShiftVariant::tilde), mt = shift(mu, k, ShiftVariant::tilde);
    return cg_reduced_squared(minus_const(lt, k - 1), n * (k - 1), lt, minus_const(mt, k - 1), (n - 1) * (k - 1), mt);
}

CoeffRat cg_slice_diagonal_closed_squared(const Signature& lam, int k) {
    check_k(k);
    int n = static_cast<int>(lam.size());
    Signature lb = bar(lam, k);
    CoeffRat r = q_pow(-3 * (n - 1) * k * (k - 1));
    for (int i = 0; i < n - 1; ++i)
        r *= qfall(lb[i] - lb[n - 1] - 1, k - 1) / qfall(lb[i] - lb[n - 1] + k - 1, k - 1);
    return r;
}

CoeffRat cg_highest_squared(const Signature& lam, int k) {
    check_k(k);
    CoeffRat r(1);
    for (Signature top = lam; top.size() >= 2; top = truncated(top)) r *= cg_slice_squared(truncated(top), top, k);
    return r;
}

CoeffRat cg_highest_closed_squared(const Signature& lam, int k) {
    check_k(k);
    int n = static_cast<int>(lam.size());
    CoeffRat r = q_pow(-3 * n * (n - 1) * k * (k - 1) / 2);
    return r * delta2(lam, k) / delta1(lam, k);
}

CoeffRat c_squared_chain(const Signature& mu, const Signature& lam, int k) {
    if (!in_window(mu, lam, k)) return CoeffRat();
    return cg_slice_squared(mu, lam, k) * cg_highest_squared(mu, k) / cg_highest_squared(lam, k);
}

NPoly ek_denominator(int n, int k) {
    check_k(k);
    NPoly r = NPoly::monomial(NPoly::Exponent(n, -(k - 1) * (n - 1)));
    for (int s = 1; s <= k - 1; ++s)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                NPoly::Exponent ei(n, 0), ej(n, 0);
                ei[i] = 1;
                ej[j] = 1;
                r = r * (NPoly::monomial(ei) - NPoly::monomial(ej, q_pow(2 * s)));
            }
    return r;
}

NPoly trace_reconstruct(const Signature& lam, int k) {
    check_k(k);
    if (!is_dominant(lam)) throw std::invalid_argument("trace_reconstruct: lam must be dominant");
    int n = static_cast<int>(lam.size());
    std::map<std::pair<Signature, Signature>, CoeffRat> memo;
    auto c = [&](const Signature& mu, const Signature& top) {
        auto key = std::make_pair(mu, top);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        CoeffRat v = diag_coeff_sum(mu, top, k);
        memo.emplace(key, v);
        return v;
    };
    NPoly total(n);
    for (const auto& chain : shifted_chain_enumerate(lam, k, true)) {
        CoeffRat w(1);
        for (int i = 1; i < n && !w.is_zero(); ++i) w *= c(chain[i - 1], chain[i]);
        if (w.is_zero()) continue;
        NPoly::Exponent e(n);
        int prev = 0;
        for (int i = 0; i < n; ++i) {
            int s = size(shift(chain[i], k, ShiftVariant::tilde));
            e[i] = s - prev;
            prev = s;
        }
        total.add_term(e, w);
    }
    return total;
}

}  // namespace macq

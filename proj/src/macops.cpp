#include "macq/macops.hpp"

#include <bit>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "macq/npoly.hpp"

namespace macq {

namespace {

using Exponent = std::vector<int>;
using OrbitImage = std::map<Signature, LaurentQT, std::greater<Signature>>;
using ImageKey = std::tuple<Signature, int, int, int, int, int, int, int>;

ImageKey image_key(const Signature& lam, int r, const MacParams& p) {
    return {lam, r, p.shift.sign, p.shift.a, p.shift.b, p.thalf.sign, p.thalf.a, p.thalf.b};
}

std::mutex cache_mutex;
std::map<ImageKey, std::shared_ptr<const OrbitImage>> image_cache;
std::map<Signature, std::map<Signature, long>> kostka_cache;
std::map<ImageKey, std::shared_ptr<const SymLaurent>> eigen_cache;

// sign_I * prod_{i in I, j not in I} (tau^2 x_i - x_j) * prod_{i<j unseparated} (x_i - x_j).
std::map<Exponent, LaurentQT> subset_numerator(int n, unsigned mask, const UnitMono& thalf) {
    std::map<Exponent, LaurentQT> w{{Exponent(n, 0), LaurentQT(1)}};
    LaurentQT tau2(thalf.pow(2));
    int sign = 1;
    auto times = [&](int i, const LaurentQT& ci, int j, const LaurentQT& cj) {
        std::map<Exponent, LaurentQT> out;
        for (const auto& [e, c] : w) {
            Exponent a = e, b = e;
            ++a[i];
            ++b[j];
            out[a] += c * ci;
            out[b] += c * cj;
        }
        w.clear();
        for (auto& [e, c] : out)
            if (!c.is_zero()) w.emplace(e, std::move(c));
    };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            bool ii = mask >> i & 1u, jj = mask >> j & 1u;
            if (ii && !jj) {
                times(i, tau2, j, LaurentQT(-1));
                if (i > j) sign = -sign;
            } else if (ii == jj && i < j) {
                times(i, LaurentQT(1), j, LaurentQT(-1));
            }
        }
    }
    if (sign < 0)
        for (auto& [e, c] : w) c = -c;
    return w;
}

std::shared_ptr<const OrbitImage> orbit_image(const Signature& lam, int r, const MacParams& p) {
    ImageKey key = image_key(lam, r, p);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = image_cache.find(key);
        if (it != image_cache.end()) return it->second;
    }
    int n = static_cast<int>(lam.size());
    std::map<Exponent, LaurentQT> alt;
    std::vector<Signature> olam = orbit(lam);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != r) continue;
        auto w = subset_numerator(n, mask, p.thalf);
        for (const auto& alpha : olam) {
            int s = 0;
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1u) s += alpha[i];
            UnitMono sh = p.shift.pow(s);
            Exponent e(n);
            for (const auto& [we, c] : w) {
                for (int i = 0; i < n; ++i) e[i] = alpha[i] + we[i];
                if (!is_dominant(e)) continue;
                alt[e] += c * sh;
            }
        }
    }
    UnitMono pref = p.thalf.pow(r * (r - n));
    auto image = std::make_shared<OrbitImage>();
    for (auto& [e, c] : alt) {
        if (c.is_zero()) continue;
        bool strict = true;
        for (int i = 0; i + 1 < n; ++i)
            if (e[i] == e[i + 1]) strict = false;
        if (!strict) throw std::logic_error("mac_apply: numerator is not antisymmetric");
        Signature nu(n);
        for (int i = 0; i < n; ++i) nu[i] = e[i] - (n - 1 - i);
        LaurentQT a = c * pref;
        for (const auto& [mu, k] : kostka_row(nu)) {
            LaurentQT& dst = (*image)[mu];
            dst += a * LaurentQT(k);
        }
    }
    for (auto it = image->begin(); it != image->end();) {
        if (it->second.is_zero()) {
            it = image->erase(it);
        } else {
            ++it;
        }
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    return image_cache.emplace(key, std::move(image)).first->second;
}

LaurentQT eigenvalue_laurent(const Signature& lam, int r, const MacParams& p) {
    int n = static_cast<int>(lam.size());
    LaurentQT total;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != r) continue;
        UnitMono v;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1u) v = v * p.shift.pow(lam[i]) * p.thalf.pow(n - 1 - 2 * i);
        total += LaurentQT(v);
    }
    return total;
}

void require_dominant(const Signature& lam, int n) {
    if (static_cast<int>(lam.size()) != n) throw std::invalid_argument("signature length must equal n");
    if (!is_dominant(lam)) throw std::invalid_argument("signature must be weakly decreasing");
}

SymLaurent eigen_partition(const Signature& lam, const MacParams& p) {
    int n = static_cast<int>(lam.size());
    ImageKey key = image_key(lam, -1, p);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = eigen_cache.find(key);
        if (it != eigen_cache.end()) return *it->second;
    }
    std::vector<Signature> below;
    for (const auto& mu : dominant_with_sum(n, size(lam), 0, n ? lam[0] : 0))
        if (dominates(lam, mu)) below.push_back(mu);
    LaurentQT top = eigenvalue_laurent(lam, 1, p);
    std::vector<CoeffRat> coeff(below.size());
    SymLaurent result(n);
    for (size_t a = 0; a < below.size(); ++a) {
        if (a == 0) {
            coeff[0] = CoeffRat(1);
        } else {
            CoeffRat s;
            for (size_t b = 0; b < a; ++b) {
                if (coeff[b].is_zero()) continue;
                const auto& img = *orbit_image(below[b], 1, p);
                auto it = img.find(below[a]);
                if (it != img.end()) s += coeff[b] * CoeffRat(it->second);
            }
            LaurentQT gap = top - eigenvalue_laurent(below[a], 1, p);
            if (gap.is_zero()) throw std::logic_error("macdonald_eigen: eigenvalue collision");
            coeff[a] = s / CoeffRat(gap);
        }
        result.add_term(below[a], coeff[a]);
    }
    auto stored = std::make_shared<const SymLaurent>(result);
    std::lock_guard<std::mutex> lock(cache_mutex);
    eigen_cache.emplace(key, stored);
    return result;
}

CoeffRat psi_specialized(const Signature& lam, const Signature& mu, const MacParams& p) {
    return subst(psi_branch(lam, mu), p.shift, p.thalf.pow(2));
}

std::vector<Signature> interlacing_below(const Signature& lam) {
    std::vector<Signature> out;
    if (lam.empty()) return out;
    std::vector<Signature> acc{Signature{}};
    for (size_t j = 0; j + 1 < lam.size(); ++j) {
        std::vector<Signature> next;
        for (const auto& s : acc)
            for (int v = lam[j + 1]; v <= lam[j]; ++v) {
                Signature t = s;
                t.push_back(v);
                next.push_back(std::move(t));
            }
        acc = std::move(next);
    }
    return acc;
}

}  // namespace

const std::map<Signature, long>& kostka_row(const Signature& nu) {
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = kostka_cache.find(nu);
        if (it != kostka_cache.end()) return it->second;
    }
    std::map<Signature, long> row;
    for (const auto& pat : gt_enumerate(nu)) {
        auto w = gt_weight(pat);
        if (is_dominant(w)) ++row[w];
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    return kostka_cache.emplace(nu, std::move(row)).first->second;
}

SymLaurent mac_apply(const SymLaurent& f, int r, const MacParams& params) {
    int n = f.n();
    if (r < 0 || r > n) throw std::invalid_argument("mac_apply: r out of range");
    SymLaurent out(n);
    for (const auto& [lam, c] : f.terms())
        for (const auto& [mu, a] : *orbit_image(lam, r, params)) out.add_term(mu, c * CoeffRat(a));
    return out;
}

SymLaurent mac_generator_apply(const SymLaurent& f, const CoeffRat& u, const MacParams& params) {
    int n = f.n();
    SymLaurent out(n);
    CoeffRat w(1);
    for (int r = n; r >= 0; --r) {
        if (!w.is_zero()) out += mac_apply(f, r, params) * w;
        w *= -u;
    }
    return out;
}

CoeffRat mac_eigenvalue(const Signature& lam, int r, const MacParams& params) {
    return CoeffRat(eigenvalue_laurent(lam, r, params));
}

SymLaurent macdonald_eigen(const Signature& lam, int n, const MacParams& params) {
    require_dominant(lam, n);
    if (n == 0) return SymLaurent::constant(0, CoeffRat(1));
    int c = lam.back();
    Signature base = lam;
    for (auto& x : base) x -= c;
    return mono_shift(eigen_partition(base, params), c);
}

CoeffRat psi_branch(const Signature& lam, const Signature& mu) {
    if (!interlaces(mu, lam)) throw std::invalid_argument("psi_branch: mu does not interlace lam");
    int m = static_cast<int>(mu.size());
    LaurentQT num(1), den(1);
    auto poch = [](int a, int d, int tp) {
        LaurentQT r(1);
        for (int e = a; e < a + d; ++e) r *= LaurentQT(1) - LaurentQT::monomial(1, e, tp);
        return r;
    };
    for (int i = 0; i < m; ++i) {
        int len = lam[i] - mu[i];
        if (len == 0) continue;
        for (int j = i; j < m; ++j) {
            int d = j - i;
            num *= poch(mu[i] - mu[j], len, d + 1);
            den *= poch(mu[i] - lam[j + 1], len, d + 1);
            den *= poch(mu[i] - mu[j] + 1, len, d);
            num *= poch(mu[i] - lam[j + 1] + 1, len, d);
        }
    }
    return CoeffRat(num, den);
}

SymLaurent macdonald_branch(const Signature& lam, int n, const MacParams& params) {
    require_dominant(lam, n);
    if (n <= 1) {
        SymLaurent f(n);
        f.add_term(lam, CoeffRat(1));
        return f;
    }
    SymLaurent out(n);
    int total = size(lam);
    for (const auto& mu : interlacing_below(lam)) {
        CoeffRat psi = psi_specialized(lam, mu, params);
        SymLaurent sub = macdonald_branch(mu, n - 1, params);
        int last = total - size(mu);
        for (const auto& [kappa, c] : sub.terms()) {
            if (kappa.back() < last) continue;
            Signature nu = kappa;
            nu.push_back(last);
            out.add_term(nu, psi * c);
        }
    }
    return out;
}

SymLaurent macdonald_gt(const Signature& lam, int n, const MacParams& params) {
    require_dominant(lam, n);
    std::map<std::pair<Signature, Signature>, CoeffRat> psi_memo;
    NPoly acc(n);
    for (const auto& pat : gt_enumerate(lam)) {
        CoeffRat w(1);
        for (size_t l = 1; l < pat.rows.size(); ++l) {
            auto key = std::make_pair(pat.rows[l], pat.rows[l - 1]);
            auto it = psi_memo.find(key);
            if (it == psi_memo.end())
                it = psi_memo.emplace(key, psi_specialized(pat.rows[l], pat.rows[l - 1], params)).first;
            w *= it->second;
        }
        acc.add_term(gt_weight(pat), w);
    }
    return acc.to_sym();
}

SymLaurent specialize(const SymLaurent& f, const UnitMono& q_image, const UnitMono& t_image) {
    return f.map_coeffs([&](const CoeffRat& c) { return subst(c, q_image, t_image); });
}

SymLaurent macdonald_at_k(const Signature& lam, int k) {
    return specialize(macdonald_eigen(lam, static_cast<int>(lam.size())), UnitMono::q(), UnitMono::q(k));
}

std::pair<CoeffRat, CoeffRat> symmetry_check(const Signature& lam, const Signature& mu, int k) {
    int n = static_cast<int>(lam.size());
    require_dominant(lam, n);
    require_dominant(mu, n);
    if (k < 1) throw std::invalid_argument("k must be positive");
    auto point = [&](const Signature& s) {
        EvalPoint p(n);
        for (int i = 0; i < n; ++i) p[i] = UnitMono::q(2 * s[i] + k * (n - 1 - 2 * i));
        return p;
    };
    CoeffRat lhs = eval(macdonald_at_k(lam, k), point(mu));
    CoeffRat ratio(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            ratio *= qfall(lam[i] - lam[j] + k * (j - i) + k - 1, k);
            ratio /= qfall(mu[i] - mu[j] + k * (j - i) + k - 1, k);
        }
    CoeffRat rhs = ratio * eval(macdonald_at_k(mu, k), point(lam));
    return {lhs, rhs};
}

}  // namespace macq

#include "macq/indexops.hpp"

#include "macq/rng.hpp"

#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace macq {

namespace {

struct Coefficient {
    CoeffRat num{1};
    CoeffRat den{1};
};

Coefficient subset_coefficient(const IndexOpParams& p, const LatticePoint& mu, unsigned mask) {
    int m = static_cast<int>(mu.size());
    int k = p.k;
    auto bar = [&](int i) { return mu[i] - k * i; };
    Coefficient c;
    for (int i = 0; i < m; ++i) {
        if (!(mask >> i & 1u)) continue;
        for (int j = 0; j < m; ++j) {
            if (mask >> j & 1u) continue;
            int d = bar(i) - bar(j);
            switch (p.variant) {
                case IndexVariant::plain: {
                    int kappa = p.kappa.value_or(k);
                    c.num *= qnum(d + kappa);
                    c.den *= qnum(d);
                    break;
                }
                case IndexVariant::tilde:
                    if (i < j) break;
                    c.num *= qnum(d + k) * qnum(d - k + 1);
                    c.den *= qnum(d) * qnum(d + 1);
                    break;
                case IndexVariant::dagger:
                    if (i < j) break;
                    c.num *= qnum(d + k - 1) * qnum(d - k);
                    c.den *= qnum(d - 1) * qnum(d);
                    break;
            }
        }
    }
    return c;
}

int variant_step(const IndexOpParams& p) {
    switch (p.variant) {
        case IndexVariant::tilde:
            return 1;
        case IndexVariant::dagger:
            return -1;
        default:
            return p.step;
    }
}

IndexFn memoized(IndexFn f) {
    struct Cache {
        std::mutex mu;
        std::map<LatticePoint, CoeffRat> values;
    };
    auto cache = std::make_shared<Cache>();
    return [f = std::move(f), cache](const LatticePoint& mu) {
        {
            std::lock_guard lock(cache->mu);
            auto it = cache->values.find(mu);
            if (it != cache->values.end()) return it->second;
        }
        CoeffRat v = f(mu);
        std::lock_guard lock(cache->mu);
        cache->values.emplace(mu, v);
        return v;
    };
}

}  // namespace

CoeffRat index_apply(const IndexFn& f, const IndexOpParams& p, const LatticePoint& mu) {
    int m = static_cast<int>(mu.size());
    if (p.r < 0 || p.r > m) throw std::invalid_argument("index_apply: r out of range");
    int step = variant_step(p);
    CoeffRat total;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        if (std::popcount(mask) != p.r) continue;
        Coefficient c = subset_coefficient(p, mu, mask);
        if (c.num.is_zero()) continue;
        LatticePoint nu = mu;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1u) nu[i] += step;
        CoeffRat v = f(nu);
        if (v.is_zero()) continue;
        if (c.den.is_zero()) throw std::domain_error("index operator coefficient has a vanishing q-number");
        total += c.num / c.den * v;
    }
    return total;
}

IndexFn index_op(IndexFn f, IndexOpParams p) {
    return [f = std::move(f), p](const LatticePoint& mu) { return index_apply(f, p, mu); };
}

IndexFn index_generator(IndexFn f, int m, const CoeffRat& u, int k, int kappa, int step) {
    return [f = std::move(f), m, u, k, kappa, step](const LatticePoint& mu) {
        CoeffRat total;
        CoeffRat w(1);
        for (int r = m; r >= 0; --r) {
            IndexOpParams p{k, IndexVariant::plain, r, kappa, step};
            total += w * index_apply(f, p, mu);
            w *= -u;
        }
        return total;
    };
}

void for_each_point(const LatticePoint& lower, const LatticePoint& upper,
                    const std::function<void(const LatticePoint&)>& fn) {
    size_t m = lower.size();
    for (size_t i = 0; i < m; ++i)
        if (upper[i] < lower[i]) return;
    LatticePoint mu = lower;
    while (true) {
        fn(mu);
        size_t i = m;
        while (i > 0) {
            --i;
            if (mu[i] < upper[i]) {
                ++mu[i];
                for (size_t j = i + 1; j < m; ++j) mu[j] = lower[j];
                break;
            }
            if (i == 0) return;
        }
        if (m == 0) return;
    }
}

CoeffRat jackson_inner(const IndexFn& f, const IndexFn& g, const Box& box) {
    if (box.lower.size() != box.upper.size()) throw std::invalid_argument("box dimension mismatch");
    CoeffRat total;
    for_each_point(box.lower, box.upper, [&](const LatticePoint& mu) {
        CoeffRat a = f(mu);
        if (a.is_zero()) return;
        total += a * g(mu);
    });
    return total;
}

bool is_adapted(const IndexFn& f, const Box& box, int l) {
    if (l <= 0) return true;
    LatticePoint lo = box.lower, hi = box.upper;
    for (auto& x : lo) x -= l;
    for (auto& x : hi) x += l;
    bool ok = true;
    for_each_point(lo, hi, [&](const LatticePoint& mu) {
        if (!ok) return;
        bool shell = false;
        for (size_t i = 0; i < mu.size(); ++i)
            if (mu[i] < box.lower[i] || mu[i] > box.upper[i]) shell = true;
        if (shell && !f(mu).is_zero()) ok = false;
    });
    return ok;
}

bool verify_adjoint(const IndexFn& f, const IndexFn& g, const Box& box, const std::vector<int>& rseq, int k) {
    int l = static_cast<int>(rseq.size());
    if (!is_adapted(f, box, l)) throw std::invalid_argument("verify_adjoint: f is not adapted to the box");
    auto params = [k](IndexVariant v, int r) {
        IndexOpParams p;
        p.k = k;
        p.variant = v;
        p.r = r;
        return p;
    };
    IndexFn lhs_f = memoized(f);
    for (int i = 0; i < l; ++i) lhs_f = memoized(index_op(lhs_f, params(IndexVariant::dagger, rseq[i])));
    IndexFn rhs_g = memoized(g);
    for (int i = l - 1; i >= 0; --i) rhs_g = memoized(index_op(rhs_g, params(IndexVariant::tilde, rseq[i])));
    Box big = box;
    for (auto& x : big.upper) x += l;
    return jackson_inner(lhs_f, g, big) == jackson_inner(f, rhs_g, box);
}

IndexFn adapted_sample(Rng& rng, const Box& box, int l) {
    std::vector<std::pair<std::vector<int>, long>> terms;
    int nterms = rng.uniform(1, 3);
    for (int s = 0; s < nterms; ++s) {
        std::vector<int> e(box.lower.size());
        for (auto& x : e) x = rng.uniform(-2, 2);
        terms.emplace_back(e, rng.uniform(1, 4) * (rng.uniform(0, 1) ? 1 : -1));
    }
    int shift = rng.uniform(-1, 1);
    return [terms, box, l, shift](const LatticePoint& mu) {
        CoeffRat kernel(1);
        for (size_t i = 0; i < mu.size(); ++i)
            for (int m = 1; m <= l; ++m)
                kernel *= qnum(box.upper[i] + m - mu[i]) * qnum(mu[i] - box.lower[i] + m);
        if (kernel.is_zero()) return kernel;
        CoeffRat poly;
        for (const auto& [e, c] : terms) {
            int deg = 0;
            for (size_t i = 0; i < mu.size(); ++i) deg += e[i] * mu[i];
            poly += CoeffRat(c) * CoeffRat(UnitMono::q(deg + shift));
        }
        return kernel * poly;
    };
}

IndexFn laurent_sample(Rng& rng, int dim) {
    std::vector<std::pair<std::vector<int>, long>> terms;
    for (int s = 0; s < 3; ++s) {
        std::vector<int> e(dim);
        for (auto& x : e) x = rng.uniform(-2, 2);
        terms.emplace_back(e, rng.uniform(-3, 3));
    }
    return [terms](const LatticePoint& mu) {
        CoeffRat v;
        for (const auto& [e, c] : terms) {
            int deg = 0;
            for (size_t i = 0; i < mu.size(); ++i) deg += e[i] * mu[i];
            v += CoeffRat(c) * CoeffRat(UnitMono::q(deg));
        }
        return v;
    };
}

}  // namespace macq

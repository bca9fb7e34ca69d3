#include "macq/daha.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>

#include "macq/rng.hpp"

namespace macq {

namespace {

void check_index(int i, int lo, int hi, const char* what) {
    if (i < lo || i > hi) throw std::invalid_argument(std::string(what) + ": index out of range");
}

CoeffRat unit(const UnitMono& m) { return CoeffRat(m); }

}  // namespace

NPoly act_s(int i, const NPoly& f) {
    check_index(i, 1, f.n() - 1, "act_s");
    NPoly r(f.n());
    for (const auto& [e, c] : f.terms()) {
        NPoly::Exponent s = e;
        std::swap(s[i - 1], s[i]);
        r.add_term(s, c);
    }
    return r;
}

NPoly act_T(int i, const NPoly& f, const DahaParams& p) {
    check_index(i, 1, f.n() - 1, "act_T");
    const CoeffRat th = unit(p.thalf);
    const CoeffRat gap = th - unit(p.thalf.inv());
    const int u = i - 1, v = i;
    NPoly r(f.n());
    for (const auto& [e, c] : f.terms()) {
        NPoly::Exponent s = e;
        std::swap(s[u], s[v]);
        r.add_term(s, c * th);
        int a = e[u], b = e[v];
        if (a == b) continue;
        // X_{i+1} (s_i - 1) X^e / (X_i - X_{i+1}) expanded as a geometric sum
        int lo = std::min(a, b), d = std::abs(a - b);
        CoeffRat w = a > b ? -(c * gap) : c * gap;
        for (int m = 0; m < d; ++m) {
            s = e;
            s[u] = lo + d - 1 - m;
            s[v] = lo + m + 1;
            r.add_term(s, w);
        }
    }
    return r;
}

NPoly act_T_inv(int i, const NPoly& f, const DahaParams& p) {
    return act_T(i, f, p) + f * (unit(p.thalf.inv()) - unit(p.thalf));
}

NPoly act_X(int i, const NPoly& f, int e) {
    check_index(i, 1, f.n(), "act_X");
    NPoly::Exponent ex(f.n(), 0);
    ex[i - 1] = e;
    return f.times_monomial(ex);
}

NPoly act_q_shift(int i, const NPoly& f, const DahaParams& p, int e) {
    check_index(i, 1, f.n(), "act_q_shift");
    const UnitMono q = p.qhalf.pow(2 * e);
    NPoly r(f.n());
    for (const auto& [ex, c] : f.terms()) r.add_term(ex, c * unit(q.pow(ex[i - 1])));
    return r;
}

NPoly act_Y(int i, const NPoly& f, const DahaParams& p) {
    int n = f.n();
    check_index(i, 1, n, "act_Y");
    NPoly g = f;
    for (int j = i - 1; j >= 1; --j) g = act_T_inv(j, g, p);
    g = act_q_shift(1, g, p);
    for (int j = 1; j <= n - 1; ++j) g = act_s(j, g);
    for (int j = n - 1; j >= i; --j) g = act_T(j, g, p);
    return g;
}

NPoly act_Y_inv(int i, const NPoly& f, const DahaParams& p) {
    int n = f.n();
    check_index(i, 1, n, "act_Y_inv");
    NPoly g = f;
    for (int j = i; j <= n - 1; ++j) g = act_T_inv(j, g, p);
    for (int j = n - 1; j >= 1; --j) g = act_s(j, g);
    g = act_q_shift(1, g, p, -1);
    for (int j = 1; j <= i - 1; ++j) g = act_T(j, g, p);
    return g;
}

NPoly symmetrize(const NPoly& f, const DahaParams& p) {
    int n = f.n();
    const CoeffRat th = unit(p.thalf);
    const CoeffRat t = th * th;
    std::map<std::vector<int>, NPoly> layer;
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    layer.emplace(id, f);
    NPoly total = f;
    CoeffRat weight(1);
    while (!layer.empty()) {
        weight *= th;
        std::map<std::vector<int>, NPoly> next;
        for (const auto& [w, tw] : layer) {
            std::vector<int> pos(n);
            for (int a = 0; a < n; ++a) pos[w[a]] = a;
            for (int i = 1; i <= n - 1; ++i) {
                // s_i w is longer than w exactly when value i-1 precedes value i in w
                if (pos[i - 1] > pos[i]) continue;
                std::vector<int> sw = w;
                std::swap(sw[pos[i - 1]], sw[pos[i]]);
                if (next.count(sw)) continue;
                NPoly img = act_T(i, tw, p);
                total += img * weight;
                next.emplace(std::move(sw), std::move(img));
            }
        }
        layer = std::move(next);
    }
    CoeffRat norm(1);
    for (int m = 1; m <= n; ++m) norm *= (1 - t) / (1 - t.pow(m));
    return total * norm;
}

NPoly random_npoly(int n, std::uint64_t seed, int terms, int deg) {
    Rng rng(seed);
    const CoeffRat t(UnitMono::t());
    NPoly f(n);
    for (int s = 0; s < terms; ++s) {
        NPoly::Exponent e(n);
        for (auto& x : e) x = rng.uniform(-deg, deg);
        CoeffRat c = CoeffRat(rng.uniform(1, 3)) * (rng.uniform(0, 1) ? 1 : -1);
        if (rng.uniform(0, 2) == 0) c += CoeffRat(rng.uniform(-2, 2)) * t;
        f.add_term(e, c);
    }
    if (f.is_zero()) f.add_term(NPoly::Exponent(n, 0), CoeffRat(1));
    return f;
}

SymLaurent random_sym(int n, std::uint64_t seed, int terms, int lo, int hi) {
    Rng rng(seed);
    const CoeffRat t(UnitMono::t());
    SymLaurent f(n);
    for (int s = 0; s < terms; ++s) {
        Signature lam(n);
        for (auto& x : lam) x = rng.uniform(lo, hi);
        std::sort(lam.begin(), lam.end(), std::greater<int>());
        CoeffRat c = CoeffRat(rng.uniform(1, 3)) * (rng.uniform(0, 1) ? 1 : -1);
        if (rng.uniform(0, 2) == 0) c += CoeffRat(rng.uniform(-2, 2)) * t;
        f.add_term(lam, c);
    }
    if (f.is_zero()) f.add_term(Signature(n, 0), CoeffRat(1));
    return f;
}

Report verify_relations(int n, const DahaParams& p, std::uint64_t seed, int samples) {
    Report rep;
    rep.suite = "daha-relations";
    rep.params["n"] = n;
    rep.params["qhalf"] = p.qhalf.str();
    rep.params["thalf"] = p.thalf.str();
    rep.params["seed"] = seed;
    rep.params["samples"] = samples;
    const CoeffRat th = unit(p.thalf);
    const CoeffRat gap = th - unit(p.thalf.inv());
    const CoeffRat q = unit(p.qhalf.pow(2));
    for (int s = 0; s < samples; ++s) {
        NPoly f = random_npoly(n, seed + s);
        std::string tag = "sample " + std::to_string(s);
        for (int i = 1; i <= n - 1; ++i) {
            NPoly tf = act_T(i, f, p);
            rep.record("hecke", act_T(i, tf, p) == tf * gap + f, tag);
            rep.record("inverse", act_T_inv(i, tf, p) == f, tag);
            rep.record("TXT", act_T(i, act_X(i, act_T(i, f, p)), p) == act_X(i + 1, f), tag);
            rep.record("TYT", act_T_inv(i, act_Y(i, act_T_inv(i, f, p), p), p) == act_Y(i + 1, f, p), tag);
            for (int j = 1; j <= n; ++j) {
                if (j == i || j == i + 1) continue;
                rep.record("locality", act_T(i, act_X(j, f), p) == act_X(j, tf), tag);
                rep.record("locality", act_T(i, act_Y(j, f, p), p) == act_Y(j, tf, p), tag);
            }
            for (int j = i + 2; j <= n - 1; ++j)
                rep.record("locality", act_T(i, act_T(j, f, p), p) == act_T(j, tf, p), tag);
        }
        for (int i = 1; i + 2 <= n; ++i)
            rep.record("braid",
                       act_T(i, act_T(i + 1, act_T(i, f, p), p), p) == act_T(i + 1, act_T(i, act_T(i + 1, f, p), p), p),
                       tag);
        for (int i = 1; i <= n; ++i) {
            rep.record("Y-inverse", act_Y(i, act_Y_inv(i, f, p), p) == f, tag);
            for (int j = i + 1; j <= n; ++j) {
                rep.record("XX", act_X(i, act_X(j, f)) == act_X(j, act_X(i, f)), tag);
                rep.record("YY", act_Y(i, act_Y(j, f, p), p) == act_Y(j, act_Y(i, f, p), p), tag);
            }
        }
        NPoly::Exponent ones(n, 1);
        rep.record("Y1X", act_Y(1, f.times_monomial(ones), p) == act_Y(1, f, p).times_monomial(ones) * q, tag);
        if (n >= 2) {
            NPoly lhs = act_X(1, act_Y(2, f, p), -1);
            NPoly rhs = act_Y(2, act_X(1, act_T_inv(1, act_T_inv(1, f, p), p), -1), p);
            rep.record("X1invY2", lhs == rhs, tag);
        }
    }
    return rep;
}

SymLaurent e_r_Y_apply(const SymLaurent& f, int r, const DahaParams& p) {
    int n = f.n();
    if (r < 0 || r > n) throw std::invalid_argument("e_r_Y_apply: r out of range");
    NPoly F = NPoly::from_sym(f);
    NPoly total(n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != r) continue;
        NPoly g = F;
        for (int i = 1; i <= n; ++i)
            if (mask >> (i - 1) & 1u) g = act_Y(i, g, p);
        total += g;
    }
    return total.to_sym();
}

SymLaurent p1_Yinv_apply(const SymLaurent& f, const DahaParams& p) {
    return mac_apply(f, 1, MacParams{p.qhalf.pow(-2), p.thalf.inv()});
}

SymLaurent p1_Yinv_apply_via_Y(const SymLaurent& f, const DahaParams& p) {
    NPoly F = NPoly::from_sym(f);
    NPoly total(f.n());
    for (int i = 1; i <= f.n(); ++i) total += act_Y_inv(i, F, p);
    return total.to_sym();
}

SymLaurent res_map(const SymLaurent& f, int n, int l) {
    if (n < 0 || l < 1 || f.n() != n * l) throw std::invalid_argument("res_map: expected n*l variables");
    NPoly out(n);
    for (const auto& [lam, c] : f.terms()) {
        for (const auto& w : orbit(lam)) {
            NPoly::Exponent e(n, 0);
            int qe = 0;
            for (int i = 0; i < n; ++i)
                for (int a = 0; a < l; ++a) {
                    e[i] += w[i * l + a];
                    qe += (1 - l + 2 * a) * w[i * l + a];
                }
            out.add_term(e, c * CoeffRat(UnitMono::q(qe)));
        }
    }
    return out.to_sym();
}

bool is_multiwheel(const std::vector<UnitMono>& point, int n, int l, const UnitMono& t) {
    if (static_cast<int>(point.size()) != n * l) throw std::invalid_argument("is_multiwheel: expected n*l entries");
    std::vector<bool> used(point.size(), false);
    auto solve = [&](auto&& self) -> bool {
        auto first = std::find(used.begin(), used.end(), false);
        if (first == used.end()) return true;
        size_t j = first - used.begin();
        for (int a = 0; a < l; ++a) {
            UnitMono start = point[j] * t.inv().pow(a);
            std::vector<size_t> taken{j};
            used[j] = true;
            bool ok = true;
            for (int b = 0; b < l && ok; ++b) {
                if (b == a) continue;
                UnitMono want = start * t.pow(b);
                ok = false;
                for (size_t m = 0; m < point.size(); ++m)
                    if (!used[m] && point[m] == want) {
                        used[m] = true;
                        taken.push_back(m);
                        ok = true;
                        break;
                    }
            }
            if (ok && self(self)) return true;
            for (size_t m : taken) used[m] = false;
        }
        return false;
    };
    return solve(solve);
}

HalfShifted mac_generator_apply(const HalfShifted& g, const CoeffRat& u, const MacParams& params) {
    int n = g.f.n();
    const UnitMono& s = params.shift;
    if ((s.a * g.half) % 2 != 0 || (s.b * g.half) % 2 != 0 || (s.sign < 0 && g.half % 2 != 0))
        throw std::invalid_argument("half-shifted generator: shift has no square root in the field");
    const UnitMono root{1, s.a * g.half / 2, s.b * g.half / 2};
    HalfShifted out{g.half, SymLaurent(n)};
    CoeffRat w(1);
    for (int r = n; r >= 0; --r) {
        out.f += mac_apply(g.f, r, params) * (w * CoeffRat(root.pow(r)));
        w *= -u;
    }
    return out;
}

HalfShifted res_map(const HalfShifted& g, int n, int l) {
    // prod_{i,a} (q^{1-l+2a} X_i)^{half/2}; the q-exponents sum to zero over each ladder
    int twice = 0;
    for (int a = 0; a < l; ++a) twice += n * g.half * (1 - l + 2 * a);
    if (twice % 2 != 0) throw std::logic_error("res_map: odd half-exponent total");
    return HalfShifted{g.half * l, res_map(g.f, n, l) * CoeffRat(UnitMono::q(twice / 2))};
}

Report verify_res_intertwine(int n, int l, std::uint64_t seed, int samples) {
    Report rep;
    rep.suite = "res-intertwine";
    rep.params["n"] = n;
    rep.params["l"] = l;
    rep.params["seed"] = seed;
    rep.params["samples"] = samples;
    const MacParams src_D{UnitMono::q(-2 * l), UnitMono::q()};
    const MacParams dst_D{UnitMono::q(-2), UnitMono::q(l)};
    const DahaParams src{UnitMono::q(-l), UnitMono::q()};
    const DahaParams dst{UnitMono::q(-1), UnitMono::q(l)};
    const CoeffRat ql = qnum(l);
    for (int s = 0; s < samples; ++s) {
        SymLaurent f = random_sym(n * l, seed + s, 3, -1, 2);
        SymLaurent rf = res_map(f, n, l);
        std::string tag = "sample " + std::to_string(s);
        rep.record("D1", res_map(mac_apply(f, 1, src_D), n, l) == mac_apply(rf, 1, dst_D) * ql, tag);
        rep.record("p1-Yinv", res_map(p1_Yinv_apply(f, src), n, l) == p1_Yinv_apply(rf, dst) * ql, tag);
        rep.record("e1", res_map(mul(e_sym(1, n * l), f), n, l) == mul(e_sym(1, n), rf) * ql, tag);
        if (l == 1) rep.record("identity", rf == f, tag);
    }
    return rep;
}

Report verify_res_diff(int n, int l, std::uint64_t seed, int samples) {
    Report rep;
    rep.suite = "res-diff";
    rep.params["n"] = n;
    rep.params["l"] = l;
    rep.params["seed"] = seed;
    rep.params["samples"] = samples;
    const MacParams src{UnitMono::q(-2 * l), UnitMono::q()};
    const MacParams dst{UnitMono::q(-2), UnitMono::q(l)};
    const CoeffRat u_src(UnitMono::q(l + 1));
    for (int s = 0; s < samples; ++s) {
        std::string tag = "sample " + std::to_string(s);
        for (int half : {0, 1}) {
            HalfShifted f{half, random_sym(n * l, seed + s, 3, -1, 2)};
            HalfShifted lhs = res_map(mac_generator_apply(f, u_src, src), n, l);
            HalfShifted rhs = res_map(f, n, l);
            for (int a = 1; a <= l; ++a) rhs = mac_generator_apply(rhs, CoeffRat(UnitMono::q(2 * a)), dst);
            rep.record(half ? "half-shift" : "generator", lhs == rhs, tag);
        }
    }
    return rep;
}

}  // namespace macq

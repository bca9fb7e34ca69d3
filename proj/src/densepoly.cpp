#include "densepoly.hpp"

#include <algorithm>
#include <utility>

namespace macq::detail {

void trim(UPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

void trim(BPoly& a) {
    while (!a.empty() && a.back().empty()) a.pop_back();
}

UPoly u_mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

static void u_submul_shift(UPoly& a, const mpz_class& c, const UPoly& b, int s) {
    if (a.size() < b.size() + s) a.resize(b.size() + s);
    for (size_t j = 0; j < b.size(); ++j) a[j + s] -= c * b[j];
    trim(a);
}

mpz_class u_content(const UPoly& a) {
    mpz_class g = 0;
    for (const auto& c : a) {
        if (c == 0) continue;
        g = gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

static UPoly u_divint(UPoly a, const mpz_class& d) {
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    return a;
}

static UPoly u_pp(UPoly a) {
    if (a.empty()) return a;
    mpz_class c = u_content(a);
    if (a.back() < 0) c = -c;
    if (c == 1) return a;
    return u_divint(std::move(a), c);
}

bool u_divexact(const UPoly& a, const UPoly& b, UPoly& quot) {
    quot.clear();
    if (a.empty()) return true;
    if (deg(a) < deg(b)) return false;
    UPoly r = a;
    quot.assign(a.size() - b.size() + 1, 0);
    const mpz_class& lb = b.back();
    while (!r.empty()) {
        int s = deg(r) - deg(b);
        if (s < 0) return false;
        if (!mpz_divisible_p(r.back().get_mpz_t(), lb.get_mpz_t())) return false;
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), r.back().get_mpz_t(), lb.get_mpz_t());
        quot[s] = c;
        u_submul_shift(r, c, b, s);
    }
    trim(quot);
    return true;
}

static UPoly u_prem(UPoly a, const UPoly& b) {
    const mpz_class& lb = b.back();
    while (!a.empty() && deg(a) >= deg(b)) {
        mpz_class la = a.back();
        int s = deg(a) - deg(b);
        for (auto& c : a) c *= lb;
        u_submul_shift(a, la, b, s);
    }
    return a;
}

UPoly u_gcd(UPoly a, UPoly b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    mpz_class c = gcd(u_content(a), u_content(b));
    a = u_pp(std::move(a));
    b = u_pp(std::move(b));
    if (deg(a) < deg(b)) std::swap(a, b);
    while (deg(b) > 0) {
        UPoly r = u_prem(a, b);
        if (r.empty()) break;
        a = std::move(b);
        b = u_pp(std::move(r));
    }
    if (deg(b) == 0) b = {1};
    for (auto& x : b) x *= c;
    return b;
}

static UPoly b_content(const BPoly& a) {
    UPoly g;
    for (const auto& c : a) {
        if (c.empty()) continue;
        g = g.empty() ? c : u_gcd(std::move(g), c);
        if (g.size() == 1 && (g[0] == 1 || g[0] == -1)) break;
    }
    return g;
}

static BPoly b_divcoef(BPoly a, const UPoly& c) {
    for (auto& x : a) {
        if (x.empty()) continue;
        UPoly qq;
        u_divexact(x, c, qq);
        x = std::move(qq);
    }
    return a;
}

static BPoly b_prem(BPoly a, const BPoly& b) {
    const UPoly& lb = b.back();
    while (!a.empty() && deg(a) >= deg(b)) {
        UPoly la = a.back();
        int s = deg(a) - deg(b);
        for (auto& c : a) c = u_mul(c, lb);
        for (size_t j = 0; j < b.size(); ++j) {
            UPoly prod = u_mul(la, b[j]);
            UPoly& dst = a[j + s];
            if (dst.size() < prod.size()) dst.resize(prod.size());
            for (size_t m = 0; m < prod.size(); ++m) dst[m] -= prod[m];
            trim(dst);
        }
        trim(a);
    }
    return a;
}

BPoly b_gcd(BPoly a, BPoly b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    UPoly ca = b_content(a);
    UPoly cb = b_content(b);
    UPoly c = u_gcd(ca, cb);
    if (deg(a) == 0 || deg(b) == 0) return {c};
    a = b_divcoef(std::move(a), ca);
    b = b_divcoef(std::move(b), cb);
    if (deg(a) < deg(b)) std::swap(a, b);
    while (deg(b) > 0) {
        BPoly r = b_prem(a, b);
        if (r.empty()) break;
        a = std::move(b);
        if (deg(r) == 0) {
            b = {UPoly{1}};
            break;
        }
        b = b_divcoef(r, b_content(r));
    }
    if (deg(b) == 0) return {c};
    b = b_divcoef(b, b_content(b));
    for (auto& x : b) x = u_mul(x, c);
    return b;
}

bool b_divexact(BPoly a, const BPoly& b, BPoly& quot) {
    quot.clear();
    if (a.empty()) return true;
    if (deg(a) < deg(b)) return false;
    quot.assign(a.size() - b.size() + 1, {});
    const UPoly& lb = b.back();
    while (!a.empty()) {
        int s = deg(a) - deg(b);
        if (s < 0) return false;
        UPoly c;
        if (!u_divexact(a.back(), lb, c)) return false;
        for (size_t j = 0; j < b.size(); ++j) {
            UPoly prod = u_mul(c, b[j]);
            UPoly& dst = a[j + s];
            if (dst.size() < prod.size()) dst.resize(prod.size());
            for (size_t m = 0; m < prod.size(); ++m) dst[m] -= prod[m];
            trim(dst);
        }
        quot[s] = std::move(c);
        trim(a);
    }
    trim(quot);
    return true;
}

}  // namespace macq::detail

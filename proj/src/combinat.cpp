#include "macq/combinat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace macq {

namespace {

std::vector<int> concat(const std::vector<Signature>& rows) {
    std::vector<int> out;
    for (const auto& r : rows) out.insert(out.end(), r.begin(), r.end());
    return out;
}

// All mu of length n-1 with lo_j <= mu_j <= hi_j.
void box_product(const std::vector<int>& lo, const std::vector<int>& hi, Signature& cur,
                 std::vector<Signature>& out) {
    size_t j = cur.size();
    if (j == lo.size()) {
        out.push_back(cur);
        return;
    }
    for (int v = lo[j]; v <= hi[j]; ++v) {
        cur.push_back(v);
        box_product(lo, hi, cur, out);
        cur.pop_back();
    }
}

void gt_rec(const Signature& top, std::vector<Signature>& rows_rev, std::vector<GTPattern>& out) {
    if (top.size() <= 1) {
        GTPattern p;
        p.rows.assign(rows_rev.rbegin(), rows_rev.rend());
        out.push_back(std::move(p));
        return;
    }
    std::vector<int> lo, hi;
    for (size_t j = 0; j + 1 < top.size(); ++j) {
        lo.push_back(top[j + 1]);
        hi.push_back(top[j]);
    }
    std::vector<Signature> mus;
    Signature cur;
    box_product(lo, hi, cur, mus);
    for (const auto& mu : mus) {
        rows_rev.push_back(mu);
        gt_rec(mu, rows_rev, out);
        rows_rev.pop_back();
    }
}

void chain_rec(const Signature& top, int k, bool dominant_only, std::vector<Signature>& rows_rev,
               std::vector<std::vector<Signature>>& out) {
    if (top.size() <= 1) {
        out.emplace_back(rows_rev.rbegin(), rows_rev.rend());
        return;
    }
    std::vector<int> lo, hi;
    for (size_t j = 0; j + 1 < top.size(); ++j) {
        lo.push_back(top[j + 1] - (k - 1));
        hi.push_back(top[j]);
    }
    std::vector<Signature> mus;
    Signature cur;
    box_product(lo, hi, cur, mus);
    for (const auto& mu : mus) {
        if (dominant_only && !is_dominant(mu)) continue;
        rows_rev.push_back(mu);
        chain_rec(mu, k, dominant_only, rows_rev, out);
        rows_rev.pop_back();
    }
}

void dominant_rec(int n, int total, int lo, int hi, Signature& cur, std::vector<Signature>& out) {
    if (static_cast<int>(cur.size()) == n) {
        if (total == 0) out.push_back(cur);
        return;
    }
    int rem = n - static_cast<int>(cur.size());
    int top = cur.empty() ? hi : std::min(hi, cur.back());
    for (int v = top; v >= lo; --v) {
        // remaining entries lie in [lo, v]
        if (static_cast<long>(v) * rem < total || static_cast<long>(lo) * rem > total) continue;
        cur.push_back(v);
        dominant_rec(n, total - v, lo, hi, cur, out);
        cur.pop_back();
    }
}

}  // namespace

bool is_dominant(const Signature& s) {
    for (size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] < s[i + 1]) return false;
    return true;
}

int size(const Signature& s) { return std::accumulate(s.begin(), s.end(), 0); }

Signature parse_signature(const std::string& text) {
    Signature s;
    if (text.empty()) return s;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed signature '" + text + "'");
        }
        if (pos != item.size()) throw std::invalid_argument("malformed signature '" + text + "'");
        s.push_back(v);
    }
    if (!text.empty() && text.back() == ',') throw std::invalid_argument("malformed signature '" + text + "'");
    return s;
}

std::string format_signature(const Signature& s) {
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out;
}

bool interlaces(const Signature& mu, const Signature& lam) {
    if (mu.size() + 1 != lam.size()) throw std::invalid_argument("interlaces: length mismatch");
    for (size_t i = 0; i < mu.size(); ++i)
        if (lam[i] < mu[i] || mu[i] < lam[i + 1]) return false;
    return true;
}

std::vector<GTPattern> gt_enumerate(const Signature& lam) {
    std::vector<GTPattern> out;
    if (lam.empty()) {
        out.push_back({});
        return out;
    }
    std::vector<Signature> rows_rev{lam};
    gt_rec(lam, rows_rev, out);
    std::sort(out.begin(), out.end(),
              [](const GTPattern& a, const GTPattern& b) { return concat(a.rows) < concat(b.rows); });
    return out;
}

std::vector<int> gt_weight(const GTPattern& p) {
    size_t n = p.rows.size();
    std::vector<int> w(n);
    for (size_t i = 0; i < n; ++i) {
        int above = size(p.rows[n - 1 - i]);
        int below = n - 1 - i == 0 ? 0 : size(p.rows[n - 2 - i]);
        w[i] = above - below;
    }
    return w;
}

std::vector<int> rho_doubled(int n) {
    std::vector<int> r(n);
    for (int i = 0; i < n; ++i) r[i] = n - 1 - 2 * i;
    return r;
}

std::vector<int> rho_tilde(int n) {
    std::vector<int> r(n);
    for (int i = 0; i < n; ++i) r[i] = -i;
    return r;
}

std::vector<int> shift(const Signature& lam, int k, ShiftVariant variant) {
    int step = variant == ShiftVariant::tilde ? k - 1 : k;
    std::vector<int> r(lam.size());
    for (size_t i = 0; i < lam.size(); ++i) r[i] = lam[i] - step * static_cast<int>(i);
    return r;
}

std::vector<std::vector<Signature>> shifted_chain_enumerate(const Signature& lam, int k, bool dominant_only) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    std::vector<std::vector<Signature>> out;
    if (lam.empty()) {
        out.push_back({});
        return out;
    }
    std::vector<Signature> rows_rev{lam};
    chain_rec(lam, k, dominant_only, rows_rev, out);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return concat(a) < concat(b); });
    return out;
}

std::vector<Signature> dominant_with_sum(int n, int total, int lo, int hi) {
    std::vector<Signature> out;
    Signature cur;
    dominant_rec(n, total, lo, hi, cur, out);
    return out;
}

bool dominates(const Signature& lam, const Signature& mu) {
    long a = 0, b = 0;
    for (size_t i = 0; i < lam.size(); ++i) {
        a += lam[i];
        b += mu[i];
        if (a < b) return false;
    }
    return a == b;
}

std::vector<Signature> orbit(const Signature& s) {
    Signature cur = s;
    std::sort(cur.begin(), cur.end());
    std::vector<Signature> out;
    do {
        out.push_back(cur);
    } while (std::next_permutation(cur.begin(), cur.end()));
    return out;
}

}  // namespace macq

#pragma once

#include <string>
#include <vector>

namespace macq {

/// Integer vector; as a Signature it is expected to be weakly decreasing.
using Signature = std::vector<int>;

bool is_dominant(const Signature& s);
int size(const Signature& s);
/// Parses "2,1,0" (negative entries allowed, empty string = empty signature).
Signature parse_signature(const std::string& text);
std::string format_signature(const Signature& s);

/// Interlacing mu < lam: lam_1 >= mu_1 >= lam_2 >= ... >= mu_{n-1} >= lam_n.
bool interlaces(const Signature& mu, const Signature& lam);

/// rows[l] has length l+1; rows.back() is the top signature.
struct GTPattern {
    std::vector<Signature> rows;
    friend bool operator==(const GTPattern&, const GTPattern&) = default;
};

/// All patterns subordinate to lam, ordered lexicographically on rows concatenated bottom-up.
std::vector<GTPattern> gt_enumerate(const Signature& lam);
/// (|mu^n|-|mu^{n-1}|, ..., |mu^2|-|mu^1|, |mu^1|).
std::vector<int> gt_weight(const GTPattern& p);

/// Twice rho: entries n+1-2i (rho itself is half-integral).
std::vector<int> rho_doubled(int n);
std::vector<int> rho_tilde(int n);

enum class ShiftVariant { tilde, bar };
/// tilde_i = lam_i - (k-1)(i-1), bar_i = lam_i - k(i-1).
std::vector<int> shift(const Signature& lam, int k, ShiftVariant variant);

/// Chains mu^1, ..., mu^n = lam with mu^{i+1}_j >= mu^i_j >= mu^{i+1}_{j+1} - (k-1).
/// With dominant_only, every mu^i must itself be weakly decreasing.
std::vector<std::vector<Signature>> shifted_chain_enumerate(const Signature& lam, int k, bool dominant_only = false);

/// Dominant signatures of length n whose entries lie in [lo, hi] and sum to total, lex-descending.
std::vector<Signature> dominant_with_sum(int n, int total, int lo, int hi);
/// Dominance order on signatures of equal length and size.
bool dominates(const Signature& lam, const Signature& mu);
/// Distinct permutations of s.
std::vector<Signature> orbit(const Signature& s);

}  // namespace macq

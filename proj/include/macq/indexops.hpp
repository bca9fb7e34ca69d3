#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "macq/qfield.hpp"

namespace macq {

using LatticePoint = std::vector<int>;
/// Closed-form function on the integer lattice, mu -> f(q^{2 mu}).
using IndexFn = std::function<CoeffRat(const LatticePoint&)>;

struct Box {
    LatticePoint lower;
    LatticePoint upper;
};

enum class IndexVariant { plain, tilde, dagger };

/// Difference operator on indices with mu-bar_i = mu_i - k(i-1).
/// plain: sum_I prod_{i in I, j not in I} [d+kappa]/[d] f(mu + step 1_I), d = mu-bar_i - mu-bar_j;
///        kappa defaults to k and step to +1, i.e. D^r(q^2, q^{2k}) acting on q^{2 mu-bar}.
/// tilde: sum_I prod_{i in I, j not in I, i>j} [d+k][d-k+1]/([d][d+1]) f(mu + 1_I).
/// dagger: sum_I prod_{i in I, j not in I, i>j} [d+k-1][d-k]/([d-1][d]) f(mu - 1_I).
struct IndexOpParams {
    int k = 1;
    IndexVariant variant = IndexVariant::plain;
    int r = 0;
    std::optional<int> kappa;
    int step = 1;
};

/// Value of the operator applied to f at mu; throws std::domain_error on a vanishing denominator.
CoeffRat index_apply(const IndexFn& f, const IndexOpParams& p, const LatticePoint& mu);
/// The operator applied to f as a new lattice function.
IndexFn index_op(IndexFn f, IndexOpParams p);
/// Plain generator sum_r (-1)^{m-r} u^{m-r} D^r on an m-dimensional lattice.
IndexFn index_generator(IndexFn f, int m, const CoeffRat& u, int k, int kappa, int step);

/// sum_{mu in box} f(mu) g(mu).
CoeffRat jackson_inner(const IndexFn& f, const IndexFn& g, const Box& box);
/// f vanishes on the width-l border shell of box (other coordinates restricted to the enlarged box).
bool is_adapted(const IndexFn& f, const Box& box, int l);
/// Summation-by-parts identity for the tilde operators; throws std::invalid_argument when f is not adapted.
bool verify_adjoint(const IndexFn& f, const IndexFn& g, const Box& box, const std::vector<int>& rseq, int k);

class Rng;
/// Seeded random Laurent polynomial in q^{mu_i} times a kernel vanishing on the width-l shell of box.
IndexFn adapted_sample(Rng& rng, const Box& box, int l);
/// Seeded random Laurent polynomial in q^{mu_1}, ..., q^{mu_dim}.
IndexFn laurent_sample(Rng& rng, int dim);

/// Calls fn on every lattice point with lower <= mu <= upper (lexicographic order).
void for_each_point(const LatticePoint& lower, const LatticePoint& upper,
                    const std::function<void(const LatticePoint&)>& fn);

}  // namespace macq

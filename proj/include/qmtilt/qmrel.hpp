#pragma once

#include <utility>
#include <vector>

#include "qmtilt/laumon.hpp"
#include "qmtilt/weyl.hpp"

namespace qmtilt {

// Fixed points of the distinguished component of the relative quasimap
// space: bubble chains whose covering degrees are forced by the weight
// parameter lambda, degree offsets between evaluations, node-smoothing
// weights, and the graded dimension of the associated module by direct
// enumeration and by the path-count formula.

// Regular integral weight parameter lambda_1 > ... > lambda_n. The formal
// scalar eps_0 of the specialization is never used numerically; every result
// is expressed in units of eps, so it is not stored.
struct WeightParameter {
    std::vector<int> lambda;

    explicit WeightParameter(std::vector<int> l);
    int n() const { return static_cast<int>(lambda.size()); }
    int operator[](int i) const { return lambda[static_cast<size_t>(i - 1)]; } // 1-based
};

// Chain of bubbles between the infinity-end evaluation (start) and the
// first-node evaluation (end). Edge j covers the invariant curve of its
// transposition (a_j, b_j) with multiplicity m_j = lambda_{a_j} - lambda_{b_j},
// the unique covering degree whose weight specializes to eps.
struct BubbleChain {
    Permutation start;
    std::vector<BruhatEdge> edges;
    std::vector<int> multiplicities;

    Permutation end() const { return edges.empty() ? start : edges.back().target; }
    bool empty() const { return edges.empty(); }
    // Total degree swept by the bubbles (sum of per-edge degree vectors).
    DegreeVector degree() const;
    void validate(const WeightParameter& lam) const;

    auto operator<=>(const BubbleChain&) const = default;
};

// Isolated fixed point of the distinguished component: a bubble chain plus a
// Laumon fixed point over the chain's end evaluation.
struct RelFixedPoint {
    BubbleChain chain;
    LaumonPoint parametrized;

    DegreeVector total_degree() const { return chain.degree() + parametrized.degree(); }

    auto operator<=>(const RelFixedPoint&) const = default;
};

struct EdgeData {
    int multiplicity;
    DegreeVector degree;
};

// Covering multiplicity and degree vector of the bubble over the invariant
// curve through x(x_0) in the direction of the root e_a - e_b: multiplicity
// m = lambda_a - lambda_b, degree m on positions x^{-1}(a) .. x^{-1}(b)-1.
// Throws std::invalid_argument if the edge does not increase length.
EdgeData edge_data(const Permutation& x, std::pair<int, int> t, const WeightParameter& lam);

// Coefficients of w(lambda) - u(lambda) in the simple-root basis, where
// (x . lambda)_i = lambda_{x(i)}. Non-negative whenever u >= w in Bruhat
// order; entries may be negative for other pairs.
DegreeVector degree_offset(const Permutation& u, const Permutation& w, const WeightParameter& lam);

// All directed chains from w to u with forced multiplicities; the single
// empty chain iff u == w. List length equals path_count(w, u, mode).
std::vector<BubbleChain> enumerate_chains(const Permutation& w, const Permutation& u,
                                          const WeightParameter& lam, EdgeMode mode);

// All fixed points (chain from w to some u, Laumon point over u) of total
// degree d, ordered by end evaluation, then chain, then Laumon point.
std::vector<RelFixedPoint> enumerate_rel_fixed_points(const Permutation& w,
                                                      const WeightParameter& lam,
                                                      const DegreeVector& d, EdgeMode mode);

// Graded dimension at degree d: by direct enumeration, and by the formula
// sum_u b_{w,u} * v_{d - offset(u,w)}. The two must agree; keeping both
// routes separate is the point.
long long graded_dim_direct(const Permutation& w, const WeightParameter& lam,
                            const DegreeVector& d, EdgeMode mode);
long long graded_dim_formula(const Permutation& w, const WeightParameter& lam,
                             const DegreeVector& d, EdgeMode mode);

// Smoothing weight of each node of the chain. Node 1 touches the
// parametrized component: -eps + (a_{a_1} - a_{b_1})/m_1; node j >= 2:
// -(a_{a_{j-1}} - a_{b_{j-1}})/m_{j-1} + (a_{a_j} - a_{b_j})/m_j. All vanish
// under a_i -> lambda_i * eps; that is what cuts out the component.
std::vector<Weight> node_weights(const BubbleChain& chain);

// Tautological bundle weight at a relative fixed point: sum_{i<=k} a_{u(i)}
// - d_k * eps with u the chain's end and d_k from the parametrized part.
Weight rel_f_weight(const RelFixedPoint& p, int k);

} // namespace qmtilt

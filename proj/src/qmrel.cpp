#include "qmtilt/qmrel.hpp"

#include <algorithm>
#include <stdexcept>

#include "qmtilt/checked.hpp"

namespace qmtilt {

WeightParameter::WeightParameter(std::vector<int> l) : lambda(std::move(l)) {
    if (lambda.empty()) throw std::invalid_argument("empty weight parameter");
    for (size_t i = 1; i < lambda.size(); ++i)
        if (lambda[i - 1] <= lambda[i])
            throw std::invalid_argument("weight parameter must be strictly decreasing");
}

DegreeVector BubbleChain::degree() const {
    DegreeVector d = DegreeVector::zeros(start.n() - 1);
    for (size_t j = 0; j < edges.size(); ++j) {
        const auto& e = edges[j];
        const int lo = e.source.position_of(e.transposition.first);
        const int hi = e.source.position_of(e.transposition.second);
        for (int k = lo; k < hi; ++k) d[k - 1] += multiplicities[j];
    }
    return d;
}

void BubbleChain::validate(const WeightParameter& lam) const {
    if (edges.size() != multiplicities.size())
        throw std::invalid_argument("chain: edge/multiplicity length mismatch");
    Permutation cur = start;
    for (size_t j = 0; j < edges.size(); ++j) {
        const auto& e = edges[j];
        if (e.source != cur) throw std::invalid_argument("chain: edges do not compose");
        const auto [a, b] = e.transposition;
        if (e.target != e.source.swap_values(a, b) || e.target.length() <= e.source.length())
            throw std::invalid_argument("chain: not a length-increasing edge");
        if (multiplicities[j] != lam[a] - lam[b] || multiplicities[j] <= 0)
            throw std::invalid_argument("chain: multiplicity not forced by lambda");
        cur = e.target;
    }
}

EdgeData edge_data(const Permutation& x, std::pair<int, int> t, const WeightParameter& lam) {
    const auto [a, b] = t;
    if (x.n() != lam.n()) throw std::invalid_argument("rank mismatch in edge_data");
    if (a < 1 || b > x.n() || a >= b) throw std::invalid_argument("bad transposition");
    const int lo = x.position_of(a);
    const int hi = x.position_of(b);
    if (lo >= hi) throw std::invalid_argument("edge does not increase length");
    const int m = lam[a] - lam[b];
    DegreeVector d = DegreeVector::zeros(x.n() - 1);
    for (int k = lo; k < hi; ++k) d[k - 1] = m;
    return EdgeData{m, std::move(d)};
}

DegreeVector degree_offset(const Permutation& u, const Permutation& w, const WeightParameter& lam) {
    const int n = u.n();
    if (w.n() != n || lam.n() != n) throw std::invalid_argument("rank mismatch in degree_offset");
    // c_k = sum_{i<=k} (lambda_{w(i)} - lambda_{u(i)})
    DegreeVector out = DegreeVector::zeros(n - 1);
    int prefix = 0;
    for (int k = 1; k <= n - 1; ++k) {
        prefix += lam[w(k)] - lam[u(k)];
        out[k - 1] = prefix;
    }
    return out;
}

std::vector<BubbleChain> enumerate_chains(const Permutation& w, const Permutation& u,
                                          const WeightParameter& lam, EdgeMode mode) {
    if (w.n() != u.n() || w.n() != lam.n())
        throw std::invalid_argument("rank mismatch in enumerate_chains");
    std::vector<BubbleChain> out;
    BubbleChain cur{w, {}, {}};
    const int target_len = u.length();

    auto dfs = [&](auto&& self, const Permutation& x) -> void {
        if (x == u) {
            out.push_back(cur);
            return; // lengths strictly increase; no path returns to u
        }
        if (x.length() >= target_len) return;
        for (const auto& e : bruhat_edges(x, mode)) {
            cur.edges.push_back(e);
            cur.multiplicities.push_back(lam[e.transposition.first] - lam[e.transposition.second]);
            self(self, e.target);
            cur.edges.pop_back();
            cur.multiplicities.pop_back();
        }
    };
    dfs(dfs, w);
    return out;
}

std::vector<RelFixedPoint> enumerate_rel_fixed_points(const Permutation& w,
                                                      const WeightParameter& lam,
                                                      const DegreeVector& d, EdgeMode mode) {
    const int n = w.n();
    if (d.size() != n - 1) throw std::invalid_argument("degree size must be n-1");
    std::vector<RelFixedPoint> out;
    if (!d.all_nonneg()) return out;
    for (const auto& u : all_permutations(n)) {
        if (!bruhat_leq(w, u)) continue;
        const DegreeVector rem = d - degree_offset(u, w, lam);
        if (!rem.all_nonneg()) continue;
        const auto chains = enumerate_chains(w, u, lam, mode);
        if (chains.empty()) continue;
        const auto points = enumerate_fixed_points(n, u, rem);
        for (const auto& chain : chains)
            for (const auto& p : points)
                out.push_back(RelFixedPoint{chain, p});
    }
    return out;
}

long long graded_dim_direct(const Permutation& w, const WeightParameter& lam,
                            const DegreeVector& d, EdgeMode mode) {
    // same walk as enumerate_rel_fixed_points, counting instead of building
    const int n = w.n();
    if (d.size() != n - 1) throw std::invalid_argument("degree size must be n-1");
    if (!d.all_nonneg()) return 0;
    long long total = 0;
    for (const auto& u : all_permutations(n)) {
        if (!bruhat_leq(w, u)) continue;
        const DegreeVector rem = d - degree_offset(u, w, lam);
        if (!rem.all_nonneg()) continue;
        const auto chains = enumerate_chains(w, u, lam, mode);
        if (chains.empty()) continue;
        // count_v runs the same recursion that enumerate_fixed_points
        // materializes, so this is the cardinality of the enumeration; the
        // chains themselves are enumerated, not path-counted
        total = checked_add(total, checked_mul(static_cast<long long>(chains.size()),
                                               count_v(n, rem)));
    }
    return total;
}

long long graded_dim_formula(const Permutation& w, const WeightParameter& lam,
                             const DegreeVector& d, EdgeMode mode) {
    const int n = w.n();
    if (d.size() != n - 1) throw std::invalid_argument("degree size must be n-1");
    long long total = 0;
    for (const auto& u : all_permutations(n)) {
        if (!bruhat_leq(w, u)) continue;
        const long long b = path_count(w, u, mode);
        if (b == 0) continue;
        total = checked_add(total, checked_mul(b, count_v(n, d - degree_offset(u, w, lam))));
    }
    return total;
}

std::vector<Weight> node_weights(const BubbleChain& chain) {
    const int n = chain.start.n();
    std::vector<Weight> out;
    auto root_over_m = [n](const BruhatEdge& e, int m) {
        const auto [a, b] = e.transposition;
        return Weight::axis(n, a, Rat(1, m)) - Weight::axis(n, b, Rat(1, m));
    };
    for (size_t j = 0; j < chain.edges.size(); ++j) {
        const Weight right = root_over_m(chain.edges[j], chain.multiplicities[j]);
        const Weight left = j == 0 ? Weight::eps_unit(n, Rat(1))
                                   : root_over_m(chain.edges[j - 1], chain.multiplicities[j - 1]);
        out.push_back(right - left);
    }
    return out;
}

Weight rel_f_weight(const RelFixedPoint& p, int k) {
    return f_weight(p.parametrized, k);
}

} // namespace qmtilt

#include "qmtilt/kl.hpp"

#include <memory>
#include <stdexcept>

#include "qmtilt/checked.hpp"

namespace qmtilt {

namespace {

// Smallest j such that left multiplication by s_j shortens w, i.e. the value
// j appears to the right of j+1 in the one-line word. Exists whenever w != e.
int left_descent(const Permutation& w) {
    for (int j = 1; j < w.n(); ++j)
        if (w.position_of(j) > w.position_of(j + 1)) return j;
    throw std::logic_error("identity has no descent");
}

} // namespace

KLTable::KLTable(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("rank must be positive");
}

const IntPolynomial& KLTable::polynomial(const Permutation& u, const Permutation& w) {
    if (u.n() != n_ || w.n() != n_)
        throw std::invalid_argument("rank mismatch in kl_polynomial");
    std::lock_guard<std::mutex> guard(lock_);
    return compute(u, w);
}

long long KLTable::p_value(const Permutation& u, const Permutation& w) {
    return polynomial(u, w).eval_at_one();
}

long long KLTable::mu(const Permutation& u, const Permutation& w) {
    if (u.n() != n_ || w.n() != n_)
        throw std::invalid_argument("rank mismatch in mu");
    std::lock_guard<std::mutex> guard(lock_);
    return mu_unlocked(u, w);
}

long long KLTable::mu_unlocked(const Permutation& u, const Permutation& w) {
    const int diff = w.length() - u.length();
    if (diff <= 0 || diff % 2 == 0) return 0;
    return compute(u, w).coeff((diff - 1) / 2);
}

const IntPolynomial& KLTable::compute(const Permutation& u, const Permutation& w) {
    auto key = std::make_pair(u, w);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    IntPolynomial result;
    if (u == w) {
        result = IntPolynomial::one();
    } else if (!bruhat_leq(u, w)) {
        result = IntPolynomial::zero();
    } else {
        // P_{u,w} = q^{1-c} P_{su,v} + q^c P_{u,v}
        //           - sum_{sz < z} mu(z,v) q^{(l(w)-l(z))/2} P_{u,z},   v = sw,
        // with c = 1 iff su < u, for any s with sw < w.
        const int j = left_descent(w);
        const Permutation v = w.swap_values(j, j + 1);
        const Permutation su = u.swap_values(j, j + 1);
        const int c = su.length() < u.length() ? 1 : 0;

        result = compute(su, v).shifted(1 - c) + compute(u, v).shifted(c);
        for (const auto& z : all_permutations(n_)) {
            if (z.swap_values(j, j + 1).length() >= z.length()) continue;
            const long long m = mu_unlocked(z, v);
            if (m == 0) continue;
            const IntPolynomial& puz = compute(u, z);
            if (puz.is_zero()) continue;
            IntPolynomial term = puz * IntPolynomial::monomial(m, (w.length() - z.length()) / 2);
            result = result - term;
        }
    }
    return memo_.emplace(std::move(key), std::move(result)).first->second;
}

namespace {

KLTable& shared_table(int n) {
    static std::mutex lock;
    static std::map<int, std::unique_ptr<KLTable>> tables;
    std::lock_guard<std::mutex> guard(lock);
    auto& slot = tables[n];
    if (!slot) slot = std::make_unique<KLTable>(n);
    return *slot;
}

} // namespace

IntPolynomial kl_polynomial(const Permutation& u, const Permutation& w) {
    if (u.n() != w.n()) throw std::invalid_argument("rank mismatch in kl_polynomial");
    return shared_table(u.n()).polynomial(u, w);
}

long long p_value(const Permutation& u, const Permutation& w) {
    return kl_polynomial(u, w).eval_at_one();
}

bool verify_inverse_kl(int n) {
    if (n < 1 || n > kMaxKlRank)
        throw std::invalid_argument("verify_inverse_kl: rank out of configured bounds");
    KLTable table(n);
    const auto perms = all_permutations(n);
    const Permutation w0 = longest_element(n);

    for (const auto& u : perms) {
        for (const auto& w : perms) {
            if (!bruhat_leq(u, w)) continue;
            IntPolynomial sum;
            for (const auto& z : perms) {
                if (!bruhat_leq(u, z) || !bruhat_leq(z, w)) continue;
                IntPolynomial term = table.polynomial(u, z) *
                                     table.polynomial(w.compose(w0), z.compose(w0));
                if ((z.length() - u.length()) % 2 != 0) term = term.negated();
                sum = sum + term;
            }
            const IntPolynomial expected = (u == w) ? IntPolynomial::one() : IntPolynomial::zero();
            if (sum != expected) return false;
        }
    }
    return true;
}

} // namespace qmtilt

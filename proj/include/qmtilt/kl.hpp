#pragma once

#include <map>
#include <mutex>
#include <utility>

#include "qmtilt/poly.hpp"
#include "qmtilt/weyl.hpp"

namespace qmtilt {

// Kazhdan-Lusztig polynomials P_{u,w} for S_n, computed by the classical
// mu-coefficient recursion: pick a simple reflection s with sw < w and expand
// C'_s C'_{sw}. Results are memoized per (u,w); the table is safe to share
// between threads and yields identical values regardless of interleaving.
class KLTable {
public:
    explicit KLTable(int n);

    int n() const { return n_; }

    const IntPolynomial& polynomial(const Permutation& u, const Permutation& w);
    long long p_value(const Permutation& u, const Permutation& w);
    // Coefficient of q^{(l(w)-l(u)-1)/2} in P_{u,w}; zero when l(w)-l(u) is even.
    long long mu(const Permutation& u, const Permutation& w);

private:
    const IntPolynomial& compute(const Permutation& u, const Permutation& w); // lock held
    long long mu_unlocked(const Permutation& u, const Permutation& w);

    int n_;
    std::mutex lock_;
    std::map<std::pair<Permutation, Permutation>, IntPolynomial> memo_;
};

// Convenience entry points backed by shared per-rank tables.
IntPolynomial kl_polynomial(const Permutation& u, const Permutation& w);
long long p_value(const Permutation& u, const Permutation& w);

// Exhaustively checks the inversion identity
//   sum_{u <= z <= w} (-1)^{l(z)-l(u)} P_{u,z}(q) P_{w w0, z w0}(q) = delta_{u,w}
// over all pairs u <= w in S_n. A false return signals an implementation bug.
bool verify_inverse_kl(int n);

// Largest rank accepted by verify_inverse_kl and the kl CLI command.
inline constexpr int kMaxKlRank = 5;

} // namespace qmtilt

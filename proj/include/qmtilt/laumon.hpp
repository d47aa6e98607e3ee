#pragma once

#include <map>
#include <vector>

#include "qmtilt/rational.hpp"
#include "qmtilt/weyl.hpp"

namespace qmtilt {

// Torus fixed points of the space of quasimaps P^1 -> Flag(C^n) that are
// nonsingular at infinity (Laumon spaces), their counts v_d, the Kostant
// partition oracle, and equivariant weight data: tangent characters from the
// End/Hom obstruction sequence and tautological bundle weights.
//
// Conventions: the coordinate z at 0 in P^1 has weight -eps, so the tangent
// line at 0 has weight +eps; the evaluation constraint at infinity is imposed
// by twisting every Hom/End block by vanishing at infinity.

// Quasimap degree d = (d_1, ..., d_{n-1}). Entries may be negative in
// intermediate arithmetic (degree offsets); a valid quasimap degree is
// non-negative.
struct DegreeVector {
    std::vector<int> entries;

    DegreeVector() = default;
    explicit DegreeVector(std::vector<int> e) : entries(std::move(e)) {}
    static DegreeVector zeros(int k) { return DegreeVector(std::vector<int>(static_cast<size_t>(k), 0)); }

    int size() const { return static_cast<int>(entries.size()); }
    int operator[](int i) const { return entries[static_cast<size_t>(i)]; } // 0-based
    int& operator[](int i) { return entries[static_cast<size_t>(i)]; }
    long long total() const;
    bool all_nonneg() const;

    DegreeVector operator+(const DegreeVector& o) const;
    DegreeVector operator-(const DegreeVector& o) const;
    auto operator<=>(const DegreeVector&) const = default;

    std::string str() const; // "2,1"
};

// Equivariant weight c_1 a_1 + ... + c_n a_n + c_eps * eps with exact
// rational coefficients. Rational a-coefficients are needed for the
// smoothing weights of multiple covers, where (a_i - a_j)/m appears.
struct Weight {
    std::vector<Rat> a;
    Rat eps;

    Weight() = default;
    Weight(std::vector<Rat> a_coeffs, Rat eps_coeff) : a(std::move(a_coeffs)), eps(eps_coeff) {}
    static Weight zero(int n) { return Weight(std::vector<Rat>(static_cast<size_t>(n)), Rat(0)); }
    static Weight axis(int n, int i, Rat c = Rat(1)); // c * a_i, 1-based i
    static Weight eps_unit(int n, Rat c = Rat(1));    // c * eps

    int n() const { return static_cast<int>(a.size()); }
    bool is_zero() const;

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;
    auto operator<=>(const Weight&) const = default;

    // a_i -> lambda_i * eps; returns the resulting coefficient of eps.
    Rat specialize(const std::vector<int>& lambda) const;

    std::string str() const; // e.g. "a_2-a_1+eps"
};

// Signed multiset of weights; canonical form drops zero multiplicities.
class TangentCharacter {
public:
    void add(const Weight& w, long long mult);
    TangentCharacter& operator+=(const TangentCharacter& o);
    TangentCharacter& subtract(const TangentCharacter& o);

    const std::map<Weight, long long>& terms() const { return terms_; }
    long long signed_size() const;
    bool all_positive() const;
    bool empty() const { return terms_.empty(); }
    long long multiplicity(const Weight& w) const;

    bool operator==(const TangentCharacter&) const = default;

private:
    std::map<Weight, long long> terms_;
};

// Fixed point of the degree-d Laumon space with evaluation flag w(x_0):
// a triangular array rows[k-1] = (d_{k,1}, ..., d_{k,k}) for k = 1..n-1 with
// non-negative entries, column monotonicity d_{k,i} >= d_{k+1,i}, and row
// sums giving the degree. Cell (k,i) carries the torus weight a_{w(i)}.
struct LaumonPoint {
    Permutation w;
    std::vector<std::vector<int>> rows;

    int n() const { return w.n(); }
    int cell(int k, int i) const { return rows[static_cast<size_t>(k - 1)][static_cast<size_t>(i - 1)]; }
    DegreeVector degree() const;
    void validate() const; // throws std::invalid_argument on a malformed array

    auto operator<=>(const LaumonPoint&) const = default;
};

// All fixed points of the given degree, in lexicographic order of the
// flattened array. The permutation w only labels weights; the count is
// independent of it. Any negative degree entry yields the empty list.
std::vector<LaumonPoint> enumerate_fixed_points(int n, const Permutation& w, const DegreeVector& d);

// Number of fixed points; 0 when some entry of d is negative.
long long count_v(int n, const DegreeVector& d);

// Number of multisets of positive roots of type A_{n-1} summing to
// sum d_i alpha_i. Independent oracle for count_v (Verma weight-space
// dimension); 0 when some entry of d is negative.
long long kostant_partition(int n, const DegreeVector& d);

// Equivariant Euler characteristic H^0 - H^1 of the sheaf Hom between line
// summands (mu, O(-c)) -> (nu, O(-d)) on P^1. With e = c - d:
//   untwisted: e >= 0 gives {nu-mu+k*eps : 0 <= k <= e} with multiplicity +1;
//              e = -1 gives nothing; e <= -2 gives {e+1 <= k <= -1} with -1.
//   twisted (sections vanishing at infinity): e >= 0 gives {1 <= k <= e};
//              e <= -1 gives {e+1 <= k <= 0} with multiplicity -1.
TangentCharacter chi_hom(const Weight& mu, int c, const Weight& nu, int d, bool twist_at_infinity);

// Tangent character at a fixed point, assembled from the obstruction
// sequence: sum over adjacent-row Hom blocks minus same-row End blocks, all
// twisted at infinity; row n is the trivial flag. Throws if any multiplicity
// is negative after cancellation (that would signal a convention bug).
TangentCharacter tangent_character(const LaumonPoint& p);

// Weight of the tautological bundle F_k at the fixed point:
// sum_{i<=k} a_{w(i)} - d_k * eps with d_k the k-th row sum.
Weight f_weight(const LaumonPoint& p, int k);

} // namespace qmtilt

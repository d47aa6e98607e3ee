#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qmtilt {

// Symmetric group combinatorics: one-line permutations, lengths, Bruhat
// order, and the Bruhat graph (edges w -> t.w for transpositions t acting on
// values, pointing to longer elements). Path counts b_{w,u} in this graph
// feed the Verma-filtration and tilting-multiplicity computations.

class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images); // validates a permutation of 1..n

    static Permutation identity(int n);
    static Permutation parse(const std::string& one_line); // "3,1,2"

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<size_t>(i - 1)]; } // 1-based
    int position_of(int value) const;                                        // w^{-1}(value)
    const std::vector<int>& images() const { return img_; }

    Permutation inverse() const;
    Permutation compose(const Permutation& rhs) const; // (this o rhs)(i) = this(rhs(i))
    // Swap the VALUES a and b in the one-line notation, i.e. left-compose
    // with the transposition (a b).
    Permutation swap_values(int a, int b) const;

    int length() const; // number of inversions
    bool is_identity() const;
    std::string str() const; // "3,1,2"

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> img_;
};

inline int length(const Permutation& w) { return w.length(); }

// All of S_n in lexicographic one-line order (the canonical enumeration
// order used throughout).
std::vector<Permutation> all_permutations(int n);

// The longest element i -> n+1-i.
Permutation longest_element(int n);

enum class EdgeMode {
    AllReflections, // every transposition edge (Bruhat graph); the default
    SimpleOnly,     // only transpositions (a, a+1)
};

struct BruhatEdge {
    Permutation source;
    std::pair<int, int> transposition; // (a, b) with a < b, swap of values
    Permutation target;                // = transposition applied to source

    auto operator<=>(const BruhatEdge&) const = default;
};

// u <= w in Bruhat order, decided by the tableau criterion: for every k the
// sorted initial segments satisfy sort(u[1..k]) <= sort(w[1..k]) entrywise.
bool bruhat_leq(const Permutation& u, const Permutation& w);

// All length-increasing edges out of w. An edge for (a,b) exists exactly
// when w^{-1}(a) < w^{-1}(b). Edges are listed by root height b-a, then by a,
// so the output is deterministic.
std::vector<BruhatEdge> bruhat_edges(const Permutation& w, EdgeMode mode);

// Number of directed paths from w to u; 1 when u == w (the empty path),
// 0 when u is unreachable. Lengths strictly increase along edges, so the
// graph is acyclic and the count is finite.
long long path_count(const Permutation& w, const Permutation& u, EdgeMode mode);

// Path counts from w to every element of S_n at once (one forward sweep of
// the DAG); equals path_count(w, u, mode) entry by entry.
std::map<Permutation, long long> path_counts_from(const Permutation& w, EdgeMode mode);

} // namespace qmtilt

#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "qmtilt/qmrel.hpp"

namespace qmtilt {

// Characters of Verma, H_{lambda,w} and tilting modules in the quasimap
// degree grading, plus the tilting multiplicity solver n_{w,y} and the
// Cartan weight bookkeeping.
//
// All characters are truncated to an explicit box; the box is part of every
// equality statement. A box (b_1, ..., b_{n-1}) covers degrees with
// 0 <= d_i < b_i.

// Raised when two independent computation routes disagree or a positivity
// requirement fails. Never silently clamped.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Character {
    DegreeVector box;
    std::map<DegreeVector, long long> values; // defined exactly on the box

    bool operator==(const Character&) const = default;
};

// All degrees inside the box, lexicographically.
std::vector<DegreeVector> degrees_in_box(const DegreeVector& box);

// Graded dimensions of a Verma module: values[d] = v_d.
Character verma_character(int n, const DegreeVector& box);

// Graded dimensions of H_{lambda,w} by the path-count formula, cross-checked
// degree by degree against direct fixed-point enumeration. A mismatch throws
// VerificationError.
Character h_module_character(const Permutation& w, const WeightParameter& lam,
                             const DegreeVector& box, EdgeMode mode);

// Character of the indecomposable tilting module with lowest weight
// y(lambda)-rho, written in the grading based at w_base(lambda)-rho:
// sum_u p(u w0, y w0) * (Verma character shifted by offset(u, w_base)).
Character tilting_character(const Permutation& y, const Permutation& w_base,
                            const WeightParameter& lam, const DegreeVector& box);

struct MultiplicityRow {
    Permutation w;
    std::map<Permutation, long long> entries; // y -> n_{w,y}
};

// Tilting multiplicities n_{w,y}, computed two ways and compared:
// (i) unitriangular solve of sum_y n_{w,y} p(u w0, y w0) = b_{w,u^{-1}},
// (ii) the signed closed form n_{w,y} = sum_u b_{w,u^{-1}} p(u,y) (-1)^{l(u)-l(y)}.
// Disagreement or a negative entry throws VerificationError.
MultiplicityRow tilting_multiplicities(const Permutation& w, const WeightParameter& lam,
                                       EdgeMode mode);

// Multiplicity of the Verma with lowest weight u(lambda)-rho in the
// filtration: u -> b_{w,u^{-1}}.
std::map<Permutation, long long> verma_filtration_multiplicities(const Permutation& w, EdgeMode mode);
// Same multiset read off the dual filtration (self-duality at character level).
std::map<Permutation, long long> dual_verma_filtration_multiplicities(const Permutation& w, EdgeMode mode);

// Cartan weight at degree d, in units of eps:
// H_i = lambda_{w(i)} + d_{i-1} - d_i + i, with d_0 = d_n = 0.
Rat h_i_weight(int i, const Permutation& w, const WeightParameter& lam, const DegreeVector& d);

// Weight bookkeeping forced on a raising operator of degree delta_i: for all
// d in the box, h_j(d + delta_i) - h_j(d) is -1 for j = i, +1 for j = i+1,
// and 0 otherwise.
bool check_cartan_commutators(int n, const DegreeVector& box);

// Character identity on the box:
// h_module_character(w) == sum_y n_{w,y} * tilting_character(y, w).
// (The tilting characters are already written in the w-based grading, so no
// further shift is applied.)
bool check_decomposition(const Permutation& w, const WeightParameter& lam,
                         const DegreeVector& box, EdgeMode mode);

} // namespace qmtilt

#pragma once

#include <json.hpp>

#include "qmtilt/poly.hpp"
#include "qmtilt/repn.hpp"

namespace qmtilt {

// JSON forms of the public types. All numeric output is exact: integers stay
// integers, non-integral rationals become reduced "p/q" strings.

nlohmann::json rat_json(const Rat& r); // integer or "p/q" string

nlohmann::json poly_json(const IntPolynomial& p);           // [[exponent, coefficient], ...]
nlohmann::json weight_json(const Weight& w);                // {a: [...], eps: ...}
nlohmann::json tangent_character_json(const TangentCharacter& chi); // [{a, eps, mult}, ...]
nlohmann::json laumon_point_json(const LaumonPoint& p);     // {w: "..", rows: [[..], ..]}
nlohmann::json bubble_chain_json(const BubbleChain& c);     // [{transposition, mult}, ...]
nlohmann::json rel_fixed_point_json(const RelFixedPoint& p);// {chain, laumon}
nlohmann::json character_json(const Character& c);          // {box, values: [{d, dim}]}
nlohmann::json multiplicity_row_json(const MultiplicityRow& row); // {w, entries: [{y, n}]}

LaumonPoint laumon_point_from_json(const nlohmann::json& j);
Character character_from_json(const nlohmann::json& j);

} // namespace qmtilt

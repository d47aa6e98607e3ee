#include "qmtilt/serialize.hpp"

namespace qmtilt {

using nlohmann::json;

json rat_json(const Rat& r) {
    if (r.is_integer()) return r.num();
    return r.str();
}

json poly_json(const IntPolynomial& p) {
    json out = json::array();
    for (int k = 0; k <= p.degree(); ++k)
        if (p.coeff(k) != 0) out.push_back({k, p.coeff(k)});
    return out;
}

json weight_json(const Weight& w) {
    json a = json::array();
    for (const auto& c : w.a) a.push_back(rat_json(c));
    return {{"a", a}, {"eps", w.eps.str()}};
}

json tangent_character_json(const TangentCharacter& chi) {
    json out = json::array();
    for (const auto& [w, m] : chi.terms()) {
        json rec = weight_json(w);
        rec["mult"] = m;
        out.push_back(rec);
    }
    return out;
}

json laumon_point_json(const LaumonPoint& p) {
    return {{"w", p.w.str()}, {"rows", p.rows}};
}

json bubble_chain_json(const BubbleChain& c) {
    json out = json::array();
    for (size_t j = 0; j < c.edges.size(); ++j) {
        const auto& e = c.edges[j];
        out.push_back({{"transposition", {e.transposition.first, e.transposition.second}},
                       {"mult", c.multiplicities[j]}});
    }
    return out;
}

json rel_fixed_point_json(const RelFixedPoint& p) {
    return {{"chain", bubble_chain_json(p.chain)}, {"laumon", laumon_point_json(p.parametrized)}};
}

json character_json(const Character& c) {
    json values = json::array();
    for (const auto& [d, dim] : c.values)
        values.push_back({{"d", d.entries}, {"dim", dim}});
    return {{"box", c.box.entries}, {"values", values}};
}

json multiplicity_row_json(const MultiplicityRow& row) {
    // entries ordered by length, then lexicographically
    std::vector<std::pair<Permutation, long long>> sorted(row.entries.begin(), row.entries.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        return a.first.length() < b.first.length();
    });
    json entries = json::array();
    for (const auto& [y, m] : sorted) entries.push_back({{"y", y.str()}, {"n", m}});
    return {{"w", row.w.str()}, {"entries", entries}};
}

LaumonPoint laumon_point_from_json(const json& j) {
    LaumonPoint p{Permutation::parse(j.at("w").get<std::string>()),
                  j.at("rows").get<std::vector<std::vector<int>>>()};
    p.validate();
    return p;
}

Character character_from_json(const json& j) {
    Character c{DegreeVector(j.at("box").get<std::vector<int>>()), {}};
    for (const auto& rec : j.at("values"))
        c.values[DegreeVector(rec.at("d").get<std::vector<int>>())] = rec.at("dim").get<long long>();
    return c;
}

} // namespace qmtilt

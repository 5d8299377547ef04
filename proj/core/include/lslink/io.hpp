#pragma once

#include <optional>
#include <string>

#include "lslink/h_function.hpp"
#include "lslink/invariants.hpp"
#include "lslink/rational.hpp"

namespace lslink {

// A parsed problem input: either a knot or a two-component linking-number-zero
// link. Knot inputs remember whether they came from a built-in family of
// L-space knots (that provenance gates the Casson invariant).
struct ParsedInput {
    enum class Kind { Knot, Link2 };
    Kind kind = Kind::Knot;
    std::optional<KnotHFunction> knot;
    std::optional<LinkHFunction2> link;
    std::optional<LaurentPoly1> knot_alexander;
    bool lspace_knot_family = false;
    std::string name;
};

// Named families: "unknot", "torus P Q", "whitehead", "unlink2".
ParsedInput expand_family(const std::string& family);

// JSON schema:
//   {"type":"knot",  "alexander": <poly> | "h_window": {"radius":R,"values":[...]},
//    "lspace_knot": bool}
//   {"type":"link2", "alexander": <poly> | "alexander_tilde": <poly> |
//    "h_table": {"radius":R, "values":[[...],...]},
//    "components": {"1": <knot spec>, "2": <knot spec>}}
// A <poly> is either a grammar string ("t - 1 + t^-1") or a list of
// [coeff, e_doubled] / [coeff, e1_doubled, e2_doubled] triples. h_table rows
// run top-down (s2 = +R first), columns left-right (s1 = -R first); component
// specs are "unknot", a family string, or a knot object.
ParsedInput parse_input_json(const std::string& json_text);

// Human-readable tables, s1 rightward and s2 upward.
std::string table_text(const LinkHFunction2& l);
std::string table_text(const KnotHFunction& k);

// JSON renderings; values are identical to the human-readable output.
std::string hfun_json(const LinkHFunction2& l);
std::string hfun_json(const KnotHFunction& k);
std::string dinv_rows_json(int p1, int p2,
                           const std::vector<std::pair<SpincLabel2, Rational>>& rows);
std::string casson_json(std::int64_t pp, std::int64_t pm, std::int64_t mp, std::int64_t mm);
std::string casson_knot_json(std::int64_t plus, std::int64_t minus);
std::string beta_json(std::int64_t beta);
std::string region_json(const LSpaceRegion& r);
std::string genus_json(const GenusBoundReport& rep);
std::string nuplus_json(int nu);

}  // namespace lslink

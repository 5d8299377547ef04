#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lslink/h_function.hpp"
#include "lslink/rational.hpp"
#include "lslink/surgery.hpp"

namespace lslink {

// Sato-Levine invariant beta = -sum h'. When the link carries its tilde
// Alexander polynomial, the result is cross-checked against the Torres
// factorization evaluated at (1,1).
std::int64_t sato_levine(const LinkHFunction2& l);

// Second Conway coefficient a2 = sum_s h(s) of a knot.
std::int64_t conway_a2(const KnotHFunction& k);

// Casson invariant of (e1,e2)-surgery, e_i = +-1:
// e1*e2*sum h' + e1*sum h1 + e2*sum h2.
std::int64_t casson_link_pm1(const LinkHFunction2& l, int e1, int e2);

// Casson invariant of (+-1)-surgery along an L-space knot: e * sum_s h(s).
// The torsion correction for general knots is not computable here, so the
// caller must assert L-space provenance explicitly.
std::int64_t casson_knot_pm1(const KnotHFunction& k, int e, bool lspace_knot);

// sum_s chi of the torsion of the blow-down knot's sublevel complexes,
// equal to -sum_{s1 != 0} h(s1,s2); requires component 1 unknotted.
std::int64_t torsion_euler_blowdown(const LinkHFunction2& l);

struct LSpaceRegion {
    bool exact = false;          // exact iff both components are unknots
    int threshold1 = 0;          // exact: L-space iff p1 > threshold1 and p2 > threshold2
    int threshold2 = 0;
    std::vector<std::string> conditions;  // necessary conditions otherwise
    std::string str() const;
};

LSpaceRegion lspace_region(const LinkHFunction2& l);

// Exact membership test for the exact region.
bool lspace_region_contains(const LSpaceRegion& r, int p1, int p2);

struct GenusBoundReport {
    int cap = 0;
    std::vector<std::pair<int, int>> excluded;  // (g1,g2) pairs ruled out, g_i <= cap
    std::int64_t min_total = 0;                 // min g1+g2 over surviving pairs
};

// Excludes genus pairs (g1,g2) violating h(s1,s2) <= f_{g1}(t1) + f_{g2}(t2)
// for some framing 0 < p_k <= 2R+2 and some lattice point s in class t.
GenusBoundReport genus_lower_bound(const LinkHFunction2& l, int cap);

// Checks the d-invariant genus inequalities for n-component input:
//   d(S^3_{-p}(L), t)  <= sum_i d(L(-p_i,1), t_i) + 2 f_{g_i}(t_i)
//  -d(S^3_{+p}(L), t)  <= sum_i d(L(-p_i,1), t_i) + 2 f_{g_i}(t_i)
// d-values are supplied per canonical label (one map per available side);
// framings must be positive. Throws LabelMismatch on a missing label.
using DValueMap = std::map<std::vector<int>, Rational>;
bool d_genus_check(const std::optional<DValueMap>& d_negative,
                   const std::optional<DValueMap>& d_positive, const std::vector<int>& genera,
                   const std::vector<int>& framings);

// Skein inequality for (+1,...,+1)-surgeries on crossing-change-related
// diagrams: d_minus - 2 <= d_plus <= d_minus.
bool skein_check(const Rational& d_plus, const Rational& d_minus);

}  // namespace lslink

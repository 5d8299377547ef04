#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lslink/laurent.hpp"

namespace lslink {

// H-functions of knots and of two-component links with linking number zero.
//
// A knot H-function is stored as a finite window H(-R..R); outside the window
// the canonical extension H(s)=0 for s>=R, H(s)=-s for s<=-R applies. A link
// H-function is stored as a core box [-R,R]^2 together with the two component
// knot H-functions; outside the core H(s1,s2) = H1(s1) + H2(s2).

struct HViolation {
    enum class Axiom { Nonnegative, Growth, Symmetry, Stabilization, ReducedNonnegative };
    Axiom axiom;
    int s1 = 0;
    int s2 = 0;
    std::string detail;
};

struct HValidationReport {
    std::vector<HViolation> violations;
    bool ok() const { return violations.empty(); }
    std::string str() const;
};

class KnotHFunction {
  public:
    KnotHFunction() = default;  // the unknot

    static KnotHFunction unknot() { return {}; }
    // Raw, unchecked constructor: values[i] = H(i - radius), i = 0..2*radius.
    static KnotHFunction from_window(std::vector<std::int64_t> values, int radius);

    int radius() const { return radius_; }
    std::int64_t at(int s) const;             // H(s), canonically extended
    std::int64_t h(int s) const;              // H(s) - max(0,-s)
    bool is_unknot() const;                   // h vanishes identically
    std::int64_t sum_h() const;               // finite sum of h over Z

    bool is_valid() const;                    // cached validation verdict
    void require_valid() const;               // throws NotLSpaceConsistent

    friend bool operator==(const KnotHFunction& a, const KnotHFunction& b);

  private:
    std::vector<std::int64_t> window_{1, 0, 0};  // H(-R..R)
    int radius_ = 1;
    mutable std::optional<bool> valid_;

    friend HValidationReport validate(const KnotHFunction&);
};

class LinkHFunction2 {
  public:
    using Table = std::map<std::pair<int, int>, std::int64_t>;

    // Raw, unchecked constructor: core[(s2+R)*(2R+1) + (s1+R)] = H(s1,s2).
    LinkHFunction2(std::vector<std::int64_t> core, KnotHFunction comp1, KnotHFunction comp2,
                   int radius);

    static LinkHFunction2 unlink();

    int radius() const { return radius_; }
    std::int64_t at(int s1, int s2) const;      // H(s1,s2), canonically extended
    std::int64_t h(int s1, int s2) const;       // H - H_O
    std::int64_t hprime(int s1, int s2) const;  // H - H1 - H2
    const KnotHFunction& component(int which) const;

    std::int64_t sum_hprime() const;  // finite sum over Z^2

    // The signed tilde Alexander polynomial this table was built from, when known.
    const std::optional<LaurentPoly2>& tilde_alexander() const { return tilde_; }

    bool is_valid() const;
    void require_valid() const;

    friend bool operator==(const LinkHFunction2& a, const LinkHFunction2& b);

  private:
    std::int64_t core_at(int s1, int s2) const {
        return core_[(s2 + radius_) * (2 * radius_ + 1) + (s1 + radius_)];
    }

    std::vector<std::int64_t> core_;
    KnotHFunction comp1_, comp2_;
    int radius_ = 0;
    std::optional<LaurentPoly2> tilde_;
    mutable std::optional<bool> valid_;

    friend LinkHFunction2 h_from_alexander_link(const LaurentPoly2&, const KnotHFunction&,
                                                const KnotHFunction&);
    friend HValidationReport validate(const LinkHFunction2&);
};

// H(s) = coefficient of t^s in t^-1 Delta(t)/(1-t^-1)^2; the sign of Delta is
// chosen so that H takes nonnegative values.
KnotHFunction h_from_alexander_knot(const LaurentPoly1& delta);

// H(s1,s2) = H1(s1) + H2(s2) - sum_{s' > s} a_{s'} with a the coefficients of
// the validating sign of tilde_delta.
LinkHFunction2 h_from_alexander_link(const LaurentPoly2& tilde_delta, const KnotHFunction& h1,
                                     const KnotHFunction& h2);

// Explicit-table input mode; throws NotLSpaceConsistent unless the table
// passes all axioms including stabilization against the given components.
LinkHFunction2 link_from_table(std::vector<std::int64_t> core, KnotHFunction comp1,
                               KnotHFunction comp2, int radius);
KnotHFunction knot_from_window(std::vector<std::int64_t> values, int radius);

HValidationReport validate(const KnotHFunction& k);
HValidationReport validate(const LinkHFunction2& l);

// Finitely supported table h - h1 - h2.
LinkHFunction2::Table h_prime(const LinkHFunction2& l);

// b1 = max{s1 : h(s1,0) > 0}, b2 = max{s2 : h(0,s2) > 0}; throws TrivialLink
// when h(0,0) = 0.
std::pair<int, int> b_invariants(const LinkHFunction2& l);

// H-function of the knot obtained by blowing down the other (unknotted)
// component: s -> H(0,s) for which=2, s -> H(s,0) for which=1.
KnotHFunction blowdown_h(const LinkHFunction2& l, int which);

// min{s >= 0 : H(s) = 0}.
int nu_plus(const KnotHFunction& k);

}  // namespace lslink

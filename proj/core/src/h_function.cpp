#include "lslink/h_function.hpp"

#include <algorithm>
#include <sstream>

#include "lslink/errors.hpp"

namespace lslink {

namespace {

std::int64_t h_unknot(int s) { return s < 0 ? -s : 0; }

const char* axiom_name(HViolation::Axiom a) {
    switch (a) {
        case HViolation::Axiom::Nonnegative: return "nonnegative";
        case HViolation::Axiom::Growth: return "growth";
        case HViolation::Axiom::Symmetry: return "symmetry";
        case HViolation::Axiom::Stabilization: return "stabilization";
        case HViolation::Axiom::ReducedNonnegative: return "h>=0";
    }
    return "?";
}

}  // namespace

std::string HValidationReport::str() const {
    if (ok()) return "valid";
    std::ostringstream os;
    for (const auto& v : violations)
        os << axiom_name(v.axiom) << " violated at (" << v.s1 << "," << v.s2 << "): " << v.detail
           << "\n";
    return os.str();
}

// --- KnotHFunction ----------------------------------------------------------

KnotHFunction KnotHFunction::from_window(std::vector<std::int64_t> values, int radius) {
    KnotHFunction k;
    if (radius < 1 || values.size() != static_cast<size_t>(2 * radius + 1))
        throw std::invalid_argument("knot H window must have 2*radius+1 values, radius >= 1");
    k.window_ = std::move(values);
    k.radius_ = radius;
    return k;
}

std::int64_t KnotHFunction::at(int s) const {
    if (s > radius_) return 0;
    if (s < -radius_) return -s;
    return window_[s + radius_];
}

std::int64_t KnotHFunction::h(int s) const { return at(s) - h_unknot(s); }

bool KnotHFunction::is_unknot() const {
    for (int s = -radius_; s <= radius_; ++s)
        if (h(s) != 0) return false;
    return true;
}

std::int64_t KnotHFunction::sum_h() const {
    std::int64_t acc = 0;
    for (int s = -radius_; s <= radius_; ++s) acc += h(s);
    return acc;
}

bool KnotHFunction::is_valid() const {
    if (!valid_) valid_ = validate(*this).ok();
    return *valid_;
}

void KnotHFunction::require_valid() const {
    if (!is_valid())
        throw NotLSpaceConsistent("knot H-function fails validation:\n" + validate(*this).str());
}

bool operator==(const KnotHFunction& a, const KnotHFunction& b) {
    int r = std::max(a.radius_, b.radius_);
    for (int s = -r; s <= r; ++s)
        if (a.at(s) != b.at(s)) return false;
    return true;
}

HValidationReport validate(const KnotHFunction& k) {
    HValidationReport rep;
    int r = k.radius();
    auto add = [&rep](HViolation::Axiom a, int s, std::string d) {
        rep.violations.push_back({a, s, 0, std::move(d)});
    };
    for (int s = -r - 1; s <= r + 1; ++s) {
        std::int64_t v = k.at(s);
        if (v < 0) add(HViolation::Axiom::Nonnegative, s, "H=" + std::to_string(v));
        std::int64_t step = k.at(s - 1) - v;
        if (s > -r - 1 && step != 0 && step != 1)
            add(HViolation::Axiom::Growth, s, "H(s-1)-H(s)=" + std::to_string(step));
        if (k.at(-s) != v + s)
            add(HViolation::Axiom::Symmetry, s,
                "H(-s)=" + std::to_string(k.at(-s)) + " vs H(s)+s=" + std::to_string(v + s));
        if (v - h_unknot(s) < 0)
            add(HViolation::Axiom::ReducedNonnegative, s, "h=" + std::to_string(v - h_unknot(s)));
    }
    if (k.at(r) != 0)
        add(HViolation::Axiom::Stabilization, r, "H(R) must vanish");
    if (k.at(-r) != r)
        add(HViolation::Axiom::Stabilization, -r, "H(-R) must equal R");
    return rep;
}

// --- LinkHFunction2 ---------------------------------------------------------

LinkHFunction2::LinkHFunction2(std::vector<std::int64_t> core, KnotHFunction comp1,
                               KnotHFunction comp2, int radius)
    : core_(std::move(core)), comp1_(std::move(comp1)), comp2_(std::move(comp2)), radius_(radius) {
    if (radius < 1 ||
        core_.size() != static_cast<size_t>(2 * radius + 1) * static_cast<size_t>(2 * radius + 1))
        throw std::invalid_argument("link H core must be a (2R+1)x(2R+1) table, R >= 1");
}

LinkHFunction2 LinkHFunction2::unlink() {
    int r = 2;
    std::vector<std::int64_t> core;
    for (int s2 = -r; s2 <= r; ++s2)
        for (int s1 = -r; s1 <= r; ++s1) core.push_back(h_unknot(s1) + h_unknot(s2));
    LinkHFunction2 l(std::move(core), KnotHFunction::unknot(), KnotHFunction::unknot(), r);
    l.tilde_ = LaurentPoly2{};
    return l;
}

std::int64_t LinkHFunction2::at(int s1, int s2) const {
    if (s1 >= -radius_ && s1 <= radius_ && s2 >= -radius_ && s2 <= radius_)
        return core_at(s1, s2);
    return comp1_.at(s1) + comp2_.at(s2);
}

std::int64_t LinkHFunction2::h(int s1, int s2) const {
    return at(s1, s2) - h_unknot(s1) - h_unknot(s2);
}

std::int64_t LinkHFunction2::hprime(int s1, int s2) const {
    return at(s1, s2) - comp1_.at(s1) - comp2_.at(s2);
}

const KnotHFunction& LinkHFunction2::component(int which) const {
    if (which == 1) return comp1_;
    if (which == 2) return comp2_;
    throw std::invalid_argument("component index must be 1 or 2");
}

std::int64_t LinkHFunction2::sum_hprime() const {
    std::int64_t acc = 0;
    for (int s2 = -radius_; s2 <= radius_; ++s2)
        for (int s1 = -radius_; s1 <= radius_; ++s1) acc += hprime(s1, s2);
    return acc;
}

bool LinkHFunction2::is_valid() const {
    if (!valid_) valid_ = validate(*this).ok();
    return *valid_;
}

void LinkHFunction2::require_valid() const {
    if (!is_valid())
        throw NotLSpaceConsistent("link H-function fails validation:\n" + validate(*this).str());
}

bool operator==(const LinkHFunction2& a, const LinkHFunction2& b) {
    int r = std::max(a.radius_, b.radius_) + 1;
    for (int s2 = -r; s2 <= r; ++s2)
        for (int s1 = -r; s1 <= r; ++s1)
            if (a.at(s1, s2) != b.at(s1, s2)) return false;
    return true;
}

HValidationReport validate(const LinkHFunction2& l) {
    HValidationReport rep;
    for (int which = 1; which <= 2; ++which) {
        HValidationReport comp = validate(l.component(which));
        for (auto v : comp.violations) {
            v.detail = "component " + std::to_string(which) + ": " + v.detail;
            rep.violations.push_back(v);
        }
    }
    int r = l.radius();
    auto add = [&rep](HViolation::Axiom a, int s1, int s2, std::string d) {
        rep.violations.push_back({a, s1, s2, std::move(d)});
    };
    for (int s2 = -r - 1; s2 <= r + 1; ++s2) {
        for (int s1 = -r - 1; s1 <= r + 1; ++s1) {
            std::int64_t v = l.at(s1, s2);
            if (v < 0) add(HViolation::Axiom::Nonnegative, s1, s2, "H=" + std::to_string(v));
            if (s1 > -r - 1) {
                std::int64_t step = l.at(s1 - 1, s2) - v;
                if (step != 0 && step != 1)
                    add(HViolation::Axiom::Growth, s1, s2,
                        "H(s-e1)-H(s)=" + std::to_string(step));
            }
            if (s2 > -r - 1) {
                std::int64_t step = l.at(s1, s2 - 1) - v;
                if (step != 0 && step != 1)
                    add(HViolation::Axiom::Growth, s1, s2,
                        "H(s-e2)-H(s)=" + std::to_string(step));
            }
            if (l.at(-s1, -s2) != v + s1 + s2)
                add(HViolation::Axiom::Symmetry, s1, s2,
                    "H(-s)=" + std::to_string(l.at(-s1, -s2)) +
                        " vs H(s)+s1+s2=" + std::to_string(v + s1 + s2));
            if (l.h(s1, s2) < 0)
                add(HViolation::Axiom::ReducedNonnegative, s1, s2,
                    "h=" + std::to_string(l.h(s1, s2)));
        }
    }
    // Core boundary must already agree with the stabilized values H1+H2.
    const KnotHFunction& h1 = l.component(1);
    const KnotHFunction& h2 = l.component(2);
    for (int s = -r; s <= r; ++s) {
        for (int edge : {-r, r}) {
            if (l.at(s, edge) != h1.at(s) + h2.at(edge))
                add(HViolation::Axiom::Stabilization, s, edge,
                    "H=" + std::to_string(l.at(s, edge)) + " vs H1+H2=" +
                        std::to_string(h1.at(s) + h2.at(edge)));
            if (l.at(edge, s) != h1.at(edge) + h2.at(s))
                add(HViolation::Axiom::Stabilization, edge, s,
                    "H=" + std::to_string(l.at(edge, s)) + " vs H1+H2=" +
                        std::to_string(h1.at(edge) + h2.at(s)));
        }
    }
    return rep;
}

// --- construction from Alexander polynomials ---------------------------------

KnotHFunction h_from_alexander_knot(const LaurentPoly1& delta) {
    if (!delta.is_symmetric(1) && !delta.is_symmetric(-1))
        throw NotLSpaceConsistent("knot Alexander polynomial is not (anti)symmetric");

    auto candidate = [](const LaurentPoly1& d) -> std::optional<KnotHFunction> {
        NegPowerSeries series =
            divide_by_geometric_squared(NegPowerSeries::from_poly(d.shifted(-2)));
        if (series.is_zero()) return std::nullopt;
        if (series.tail_slope() != 1) return std::nullopt;
        if (series.coeff(series.window_lo()) != -series.window_lo()) return std::nullopt;
        int hi_nz = series.window_hi();
        while (hi_nz > series.window_lo() && series.coeff(hi_nz) == 0) --hi_nz;
        if (series.coeff(hi_nz) == 0) return std::nullopt;  // identically zero window
        // Smallest radius from which the linear H(s) = -s tail has already begun.
        int r_lin = -series.window_lo();
        while (r_lin > 1 && series.coeff(-(r_lin - 1)) == r_lin - 1) --r_lin;
        int radius = std::max({1, hi_nz + 1, r_lin});
        std::vector<std::int64_t> window;
        for (int s = -radius; s <= radius; ++s) window.push_back(series.coeff(s));
        KnotHFunction k = KnotHFunction::from_window(std::move(window), radius);
        if (!k.is_valid()) return std::nullopt;
        return k;
    };

    std::optional<KnotHFunction> plus = candidate(delta);
    std::optional<KnotHFunction> minus = candidate(-delta);
    if (plus && minus) {
        if (*plus == *minus) return *plus;
        throw AmbiguousSign("both signs of the Alexander polynomial produce valid H-functions");
    }
    if (plus) return *plus;
    if (minus) return *minus;
    throw NotLSpaceConsistent("no sign of the Alexander polynomial yields a valid H-function");
}

LinkHFunction2 h_from_alexander_link(const LaurentPoly2& tilde_delta, const KnotHFunction& h1,
                                     const KnotHFunction& h2) {
    if (!tilde_delta.integral_exponents())
        throw NonZeroLinking("tilde Alexander polynomial has half-integer exponents");
    h1.require_valid();
    h2.require_valid();

    int span = 0, lo1 = 0, hi1 = 0, lo2 = 0, hi2 = 0;
    if (!tilde_delta.is_zero()) {
        lo1 = hi1 = tilde_delta.terms().begin()->first.first / 2;
        lo2 = hi2 = tilde_delta.terms().begin()->first.second / 2;
        for (const auto& [k, c] : tilde_delta.terms()) {
            lo1 = std::min(lo1, k.first / 2);
            hi1 = std::max(hi1, k.first / 2);
            lo2 = std::min(lo2, k.second / 2);
            hi2 = std::max(hi2, k.second / 2);
        }
        span = std::max(hi1 - lo1, hi2 - lo2);
    }
    int radius = std::max({span + 2, h1.radius(), h2.radius(), 2});

    // suffix[(s1,s2)] = sum of coefficients over s1' > s1, s2' > s2
    auto suffix_sum = [&](int s1, int s2, int sign) {
        std::int64_t acc = 0;
        for (const auto& [k, c] : tilde_delta.terms())
            if (k.first / 2 > s1 && k.second / 2 > s2) acc += c;
        return sign * acc;
    };

    auto candidate = [&](int sign) -> std::optional<LinkHFunction2> {
        std::vector<std::int64_t> core;
        core.reserve((2 * radius + 1) * (2 * radius + 1));
        for (int s2 = -radius; s2 <= radius; ++s2)
            for (int s1 = -radius; s1 <= radius; ++s1)
                core.push_back(h1.at(s1) + h2.at(s2) - suffix_sum(s1, s2, sign));
        LinkHFunction2 l(std::move(core), h1, h2, radius);
        if (!l.is_valid()) return std::nullopt;
        LaurentPoly2 signed_tilde = sign == 1 ? tilde_delta : -tilde_delta;
        l.tilde_ = std::move(signed_tilde);
        return l;
    };

    std::optional<LinkHFunction2> plus = candidate(1);
    std::optional<LinkHFunction2> minus = candidate(-1);
    if (plus && minus) {
        if (*plus == *minus) return *plus;
        throw AmbiguousSign("both signs of the tilde Alexander polynomial validate");
    }
    if (plus) return *plus;
    if (minus) return *minus;
    throw NotLSpaceConsistent("no sign of the tilde Alexander polynomial yields a valid H-function");
}

LinkHFunction2 link_from_table(std::vector<std::int64_t> core, KnotHFunction comp1,
                               KnotHFunction comp2, int radius) {
    LinkHFunction2 l(std::move(core), std::move(comp1), std::move(comp2), radius);
    l.require_valid();
    return l;
}

KnotHFunction knot_from_window(std::vector<std::int64_t> values, int radius) {
    KnotHFunction k = KnotHFunction::from_window(std::move(values), radius);
    k.require_valid();
    return k;
}

// --- derived quantities -------------------------------------------------------

LinkHFunction2::Table h_prime(const LinkHFunction2& l) {
    LinkHFunction2::Table t;
    int r = l.radius();
    for (int s2 = -r; s2 <= r; ++s2)
        for (int s1 = -r; s1 <= r; ++s1)
            if (std::int64_t v = l.hprime(s1, s2); v != 0) t[{s1, s2}] = v;
    return t;
}

std::pair<int, int> b_invariants(const LinkHFunction2& l) {
    l.require_valid();
    if (l.h(0, 0) == 0) throw TrivialLink("h(0,0)=0: the link is the unlink");
    int b1 = 0, b2 = 0;
    for (int s = l.radius(); s >= 0; --s) {
        if (l.h(s, 0) > 0) { b1 = s; break; }
    }
    for (int s = l.radius(); s >= 0; --s) {
        if (l.h(0, s) > 0) { b2 = s; break; }
    }
    return {b1, b2};
}

KnotHFunction blowdown_h(const LinkHFunction2& l, int which) {
    l.require_valid();
    if (which != 1 && which != 2) throw std::invalid_argument("blow-down component must be 1 or 2");
    int other = 3 - which;
    if (!l.component(other).is_unknot())
        throw ComponentNotUnknot("component " + std::to_string(other) + " is not an unknot");
    int r = l.radius();
    std::vector<std::int64_t> window;
    for (int s = -r; s <= r; ++s) window.push_back(which == 2 ? l.at(0, s) : l.at(s, 0));
    KnotHFunction k = KnotHFunction::from_window(std::move(window), r);
    k.require_valid();
    return k;
}

int nu_plus(const KnotHFunction& k) {
    k.require_valid();
    int s = 0;
    while (k.at(s) != 0) ++s;
    return s;
}

}  // namespace lslink

#include "lslink/invariants.hpp"

#include <algorithm>
#include <sstream>

#include "lslink/errors.hpp"

namespace lslink {

namespace {

// Exact division of a two-variable integer-exponent polynomial by (t_var - 1).
// Row sums of a finite-difference polynomial vanish, so the division is exact;
// a nonzero remainder means the input was not a chi-polynomial.
LaurentPoly2 divide_by_t_minus_1(const LaurentPoly2& p, int var) {
    LaurentPoly2::Terms out;
    std::map<int, std::map<int, std::int64_t>> rows;  // other exponent -> this exponent -> coeff
    for (const auto& [k, c] : p.terms()) {
        int e = (var == 1 ? k.first : k.second) / 2;
        int o = (var == 1 ? k.second : k.first) / 2;
        rows[o][e] = c;
    }
    for (const auto& [o, row] : rows) {
        std::int64_t acc = 0;
        for (const auto& [e, c] : row) acc += c;
        if (acc != 0) throw Error("polynomial is not divisible by (t-1)");
        // q_e = -sum_{e' <= e} c_{e'}
        acc = 0;
        int prev = row.begin()->first;
        for (const auto& [e, c] : row) {
            // exponents between prev and e carry the running value
            for (int g = prev; g < e && acc != 0; ++g) {
                if (var == 1) out[{2 * g, 2 * o}] = -acc;
                else out[{2 * o, 2 * g}] = -acc;
            }
            acc += c;
            if (acc != 0) {
                if (var == 1) out[{2 * e, 2 * o}] = -acc;
                else out[{2 * o, 2 * e}] = -acc;
            }
            prev = e + 1;
        }
    }
    return LaurentPoly2(std::move(out));
}

}  // namespace

std::int64_t sato_levine(const LinkHFunction2& l) {
    l.require_valid();
    std::int64_t beta = -l.sum_hprime();
    if (l.tilde_alexander()) {
        // Torres factorization: tilde = (t1-1)(t2-1)*q, beta = q(1,1).
        LaurentPoly2 q = divide_by_t_minus_1(divide_by_t_minus_1(*l.tilde_alexander(), 1), 2);
        std::int64_t via_poly = 0;
        for (const auto& [k, c] : q.terms()) via_poly += c;
        if (via_poly != beta)
            throw Error("Sato-Levine cross-check failed: -sum h' = " + std::to_string(beta) +
                        " but Alexander route gives " + std::to_string(via_poly));
    }
    return beta;
}

std::int64_t conway_a2(const KnotHFunction& k) {
    k.require_valid();
    return k.sum_h();
}

std::int64_t casson_link_pm1(const LinkHFunction2& l, int e1, int e2) {
    if ((e1 != 1 && e1 != -1) || (e2 != 1 && e2 != -1))
        throw std::invalid_argument("surgery signs must be +-1");
    l.require_valid();
    return e1 * e2 * l.sum_hprime() + e1 * l.component(1).sum_h() + e2 * l.component(2).sum_h();
}

std::int64_t casson_knot_pm1(const KnotHFunction& k, int e, bool lspace_knot) {
    if (e != 1 && e != -1) throw std::invalid_argument("surgery sign must be +-1");
    if (!lspace_knot)
        throw TorsionUnknown(
            "Casson invariant needs the torsion Euler characteristic unless the knot is "
            "asserted to be an L-space knot");
    k.require_valid();
    return e * k.sum_h();
}

std::int64_t torsion_euler_blowdown(const LinkHFunction2& l) {
    l.require_valid();
    if (!l.component(1).is_unknot())
        throw ComponentNotUnknot("blow-down torsion formula needs component 1 unknotted");
    std::int64_t acc = 0;
    int r = l.radius();
    for (int s2 = -r; s2 <= r; ++s2)
        for (int s1 = -r; s1 <= r; ++s1)
            if (s1 != 0) acc += l.hprime(s1, s2);
    return -acc;
}

std::string LSpaceRegion::str() const {
    if (exact) {
        std::ostringstream os;
        os << "p1>" << threshold1 << " and p2>" << threshold2 << " (exact)";
        return os.str();
    }
    std::string out = "necessary conditions:";
    for (const auto& c : conditions) out += " [" + c + "]";
    return out;
}

LSpaceRegion lspace_region(const LinkHFunction2& l) {
    l.require_valid();
    if (l.h(0, 0) == 0) throw TrivialLink("h(0,0)=0: the link is the unlink");
    LSpaceRegion region;
    if (l.component(1).is_unknot() && l.component(2).is_unknot()) {
        auto [b1, b2] = b_invariants(l);
        region.exact = true;
        region.threshold1 = 2 * b1;
        region.threshold2 = 2 * b2;
        return region;
    }
    region.exact = false;
    region.conditions.push_back("p1>0 or p2>0");
    // At least one component surgery must be an L-space; for an L-space knot
    // that means p >= 2*nu+ - 1.
    std::ostringstream os;
    os << "p1>=" << 2 * nu_plus(l.component(1)) - 1 << " or p2>="
       << 2 * nu_plus(l.component(2)) - 1;
    region.conditions.push_back(os.str());
    return region;
}

bool lspace_region_contains(const LSpaceRegion& r, int p1, int p2) {
    if (!r.exact)
        throw std::invalid_argument("membership is only decidable for exact regions");
    return p1 > r.threshold1 && p2 > r.threshold2;
}

GenusBoundReport genus_lower_bound(const LinkHFunction2& l, int cap) {
    l.require_valid();
    const int r = l.radius();
    const int p_cap = 2 * r + 2;
    const int box = 3 * r + 2;  // covers every residue pattern of the stabilized rows too

    // Strongest constraint per reduced label pair: need h <= f_g1(t1)+f_g2(t2).
    std::map<std::pair<int, int>, std::int64_t> constraint;  // (|t1|, |t2|) -> max h
    for (int s2 = -box; s2 <= box; ++s2)
        for (int s1 = -box; s1 <= box; ++s1) {
            std::int64_t hv = l.h(s1, s2);
            if (hv <= 0) continue;
            for (int p1 = 1; p1 <= p_cap; ++p1)
                for (int p2 = 1; p2 <= p_cap; ++p2) {
                    SpincLabel2 t = reduce_spinc(p1, p2, s1, s2);
                    auto key = std::make_pair(std::abs(t.i1), std::abs(t.i2));
                    auto [it, inserted] = constraint.emplace(key, hv);
                    if (!inserted) it->second = std::max(it->second, hv);
                }
        }

    auto excluded = [&](int g1, int g2) {
        for (const auto& [key, hv] : constraint)
            if (hv > f_g(g1, key.first) + f_g(g2, key.second)) return true;
        return false;
    };

    GenusBoundReport rep;
    rep.cap = cap;
    for (int g1 = 0; g1 <= cap; ++g1)
        for (int g2 = 0; g2 <= cap; ++g2)
            if (excluded(g1, g2)) rep.excluded.push_back({g1, g2});
    for (int total = 0;; ++total) {
        bool found = false;
        for (int g1 = 0; g1 <= total && !found; ++g1) found = !excluded(g1, total - g1);
        if (found) {
            rep.min_total = total;
            break;
        }
    }
    return rep;
}

bool d_genus_check(const std::optional<DValueMap>& d_negative,
                   const std::optional<DValueMap>& d_positive, const std::vector<int>& genera,
                   const std::vector<int>& framings) {
    const size_t n = framings.size();
    if (genera.size() != n || n == 0)
        throw std::invalid_argument("genera and framings must have the same positive length");
    for (int p : framings)
        if (p <= 0) throw std::invalid_argument("framings must be positive");
    if (!d_negative && !d_positive)
        throw std::invalid_argument("at least one side of d-values is required");

    // Enumerate canonical labels componentwise.
    std::vector<std::vector<int>> labels{{}};
    for (size_t i = 0; i < n; ++i) {
        std::vector<std::vector<int>> next;
        for (const auto& base : labels)
            for (int t = -(framings[i] - 1) / 2; t <= framings[i] / 2; ++t) {
                auto ext = base;
                ext.push_back(t);
                next.push_back(std::move(ext));
            }
        labels = std::move(next);
    }

    auto rhs = [&](const std::vector<int>& t) {
        Rational acc(0);
        for (size_t i = 0; i < n; ++i)
            acc = acc + (-phi(framings[i], t[i])) + Rational(2 * f_g(genera[i], t[i]));
        return acc;
    };
    auto lookup = [&](const DValueMap& m, const std::vector<int>& t) {
        auto it = m.find(t);
        if (it == m.end()) {
            std::string key;
            for (int v : t) key += std::to_string(v) + " ";
            throw LabelMismatch("missing d-value for label " + key);
        }
        return it->second;
    };

    for (const auto& t : labels) {
        Rational bound = rhs(t);
        if (d_negative && !(lookup(*d_negative, t) <= bound)) return false;
        if (d_positive && !(-lookup(*d_positive, t) <= bound)) return false;
    }
    return true;
}

bool skein_check(const Rational& d_plus, const Rational& d_minus) {
    return d_minus - Rational(2) <= d_plus && d_plus <= d_minus;
}

}  // namespace lslink

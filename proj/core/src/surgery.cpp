#include "lslink/surgery.hpp"

#include <algorithm>
#include <cstdlib>

#include "lslink/errors.hpp"

namespace lslink {

namespace {

void check_label(int p, int i) {
    if (p == 0) throw ZeroFraming("surgery coefficients must be nonzero");
    if (2 * std::abs(i) > std::abs(p))
        throw InvalidSpinc("label " + std::to_string(i) + " out of range for framing " +
                           std::to_string(p));
}

int reduce_one(int p, int s) {
    int q = std::abs(p);
    int r = ((s % q) + q) % q;       // smallest nonnegative representative
    if (2 * r > q) r -= q;           // fold into (-q/2, q/2], ties stay positive
    return r;
}

}  // namespace

Rational phi(int p, int i) {
    check_label(p, i);
    if (p < 0) return -phi(-p, i);
    // Minimize |p + 2s| over s = i (mod p); the two candidate residues are the
    // nonnegative representative and its downward neighbour.
    int r = ((i % p) + p) % p;
    std::int64_t best = std::min(std::abs(p + 2 * (r - p)), std::abs(p + 2 * r));
    return {best * best - p, 4LL * p};
}

SpincLabel2 reduce_spinc(int p1, int p2, int s1, int s2) {
    if (p1 == 0 || p2 == 0) throw ZeroFraming("surgery coefficients must be nonzero");
    return {reduce_one(p1, s1), reduce_one(p2, s2)};
}

std::vector<SpincLabel2> all_spinc_labels(int p1, int p2) {
    if (p1 == 0 || p2 == 0) throw ZeroFraming("surgery coefficients must be nonzero");
    std::vector<SpincLabel2> out;
    int q1 = std::abs(p1), q2 = std::abs(p2);
    for (int i1 = -(q1 - 1) / 2; i1 <= q1 / 2; ++i1)
        for (int i2 = -(q2 - 1) / 2; i2 <= q2 / 2; ++i2) out.push_back({i1, i2});
    std::sort(out.begin(), out.end());
    return out;
}

QuadrantPoints quadrant_points(int p1, int p2, const SpincLabel2& label) {
    if (p1 <= 0 || p2 <= 0)
        throw std::invalid_argument("quadrant points are defined for positive framings");
    check_label(p1, label.i1);
    check_label(p2, label.i2);
    auto one = [](int p, int i) {
        int sp = ((i % p) + p) % p;
        int sm = sp > 0 ? sp - p : 0;
        return std::pair<int, int>{sp, sm};
    };
    auto [sp1, sm1] = one(p1, label.i1);
    auto [sp2, sm2] = one(p2, label.i2);
    return {sp1, sm1, sp2, sm2};
}

Rational d_knot_surgery(const KnotHFunction& k, int p, int i) {
    if (p <= 0) throw std::invalid_argument("knot surgery formula needs positive framing");
    check_label(p, i);
    k.require_valid();
    int sp = ((i % p) + p) % p;
    int sm = sp > 0 ? sp - p : 0;
    return phi(p, i) - Rational(2 * std::max(k.h(sp), k.h(sm)));
}

Rational d_link_surgery(const LinkHFunction2& l, int p1, int p2, const SpincLabel2& label) {
    check_label(p1, label.i1);
    check_label(p2, label.i2);
    l.require_valid();
    if (p1 < 0 && p2 < 0) return phi(p1, label.i1) + phi(p2, label.i2);
    if (p1 > 0 && p2 > 0) {
        QuadrantPoints q = quadrant_points(p1, p2, label);
        std::int64_t m = 0;
        for (auto [s1, s2] : {q.pp(), q.pm(), q.mp(), q.mm()}) m = std::max(m, l.h(s1, s2));
        return phi(p1, label.i1) + phi(p2, label.i2) - Rational(2 * m);
    }
    if (p1 > 0)  // p2 < 0
        return d_knot_surgery(l.component(1), p1, label.i1) + phi(p2, label.i2);
    // p1 < 0, p2 > 0: the symmetric statement with the component roles swapped.
    return phi(p1, label.i1) + d_knot_surgery(l.component(2), p2, label.i2);
}

std::int64_t f_g(std::int64_t g, std::int64_t t) {
    std::int64_t a = t < 0 ? -t : t;
    if (a > g) return 0;
    return (g - a + 1) / 2;
}

CircleBundleD d_circle_bundle(int p, int g, int i) {
    if (p <= 0) throw std::invalid_argument("circle bundle Euler number parameter must be positive");
    if (g < 0) throw std::invalid_argument("genus must be nonnegative");
    check_label(p, i);
    Rational ph = phi(p, i);
    Rational corr(2 * f_g(g, i));
    CircleBundleD d;
    d.bot_plus = ph - Rational(g);
    d.top_minus = -d.bot_plus;
    d.bot_minus = -ph + corr - Rational(g);
    d.top_plus = -d.bot_minus;
    return d;
}

}  // namespace lslink

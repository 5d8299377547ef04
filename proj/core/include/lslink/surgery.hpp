#pragma once

#include <utility>
#include <vector>

#include "lslink/h_function.hpp"
#include "lslink/rational.hpp"

namespace lslink {

// Spin^c structures on (p1,p2)-surgery are labelled by residue pairs (i1,i2);
// the canonical representative has i_k in (-|p_k|/2, |p_k|/2], ties at even
// framing resolved to the positive value.
struct SpincLabel2 {
    int i1 = 0;
    int i2 = 0;
    friend bool operator==(const SpincLabel2& a, const SpincLabel2& b) {
        return a.i1 == b.i1 && a.i2 == b.i2;
    }
    friend bool operator<(const SpincLabel2& a, const SpincLabel2& b) {
        return a.i1 != b.i1 ? a.i1 < b.i1 : a.i2 < b.i2;
    }
};

// The four lattice points of a Spin^c class closest to the origin, one per
// quadrant: s_plus[k] is the smallest nonnegative representative of i_k
// modulo p_k, and s_minus[k] = s_plus[k] - p_k when s_plus[k] > 0, else 0.
struct QuadrantPoints {
    int s_plus1, s_minus1;
    int s_plus2, s_minus2;

    std::pair<int, int> pp() const { return {s_plus1, s_plus2}; }
    std::pair<int, int> pm() const { return {s_plus1, s_minus2}; }
    std::pair<int, int> mp() const { return {s_minus1, s_plus2}; }
    std::pair<int, int> mm() const { return {s_minus1, s_minus2}; }
};

// d-invariant of the lens space L(p,1) in Spin^c label i; phi(-p,i) = -phi(p,i).
Rational phi(int p, int i);

SpincLabel2 reduce_spinc(int p1, int p2, int s1, int s2);

// Canonical labels in lexicographic order; there are |p1*p2| of them.
std::vector<SpincLabel2> all_spinc_labels(int p1, int p2);

QuadrantPoints quadrant_points(int p1, int p2, const SpincLabel2& label);

// d-invariant of positive p-surgery along a knot (Ni-Wu form):
// phi(p,i) - 2 max(h(s_plus), h(s_minus)).
Rational d_knot_surgery(const KnotHFunction& k, int p, int i);

// d-invariant of (p1,p2)-surgery along a 2-component L-space link with
// linking number zero, in the given Spin^c structure.
Rational d_link_surgery(const LinkHFunction2& l, int p1, int p2, const SpincLabel2& label);

// ceil((g - |t|)/2) for |t| <= g, else 0.
std::int64_t f_g(std::int64_t g, std::int64_t t);

// Bottom/top correction terms of the circle bundles B_p, B_{-p} (Euler numbers
// +-p, p > 0) over a genus g surface, in torsion Spin^c label i.
struct CircleBundleD {
    Rational bot_plus;   // d_bot(B_p, i)  = phi(p,i) - g
    Rational top_plus;   // d_top(B_p, i)  = phi(p,i) - 2 f_g(i) + g
    Rational bot_minus;  // d_bot(B_-p, i) = -phi(p,i) + 2 f_g(i) - g
    Rational top_minus;  // d_top(B_-p, i) = g - phi(p,i)
};

CircleBundleD d_circle_bundle(int p, int g, int i);

}  // namespace lslink

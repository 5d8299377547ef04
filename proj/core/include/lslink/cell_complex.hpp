#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lslink/h_function.hpp"
#include "lslink/surgery.hpp"

namespace lslink {

// Perturbed truncated surgery complex of a two-component linking-number-zero
// link, realized as a rectangular CW complex on the sublattice of points in a
// fixed Spin^c class. 0-cells are grid vertices, 1-cells grid edges, 2-cells
// grid squares; each cell carries an internal degree relative to the base
// 0-cell nearest the origin in the (+,+) quadrant, which is pinned to 0.
// Depending on the framing signs, boundary cells are erased:
//   case a (p1,p2 < 0): nothing erased,
//   case b (p1,p2 > 0): all boundary 0- and 1-cells erased,
//   case c (mixed)    : 0-/1-cells on the two sides transverse to the
//                       positive-framing axis erased.
enum class TruncationCase { AllNegative, AllPositive, Mixed };

struct TruncatedComplex {
    int p1 = 0, p2 = 0;
    SpincLabel2 label;
    int b = 0;  // truncation radius
    TruncationCase tag = TruncationCase::AllNegative;

    std::vector<int> xs, ys;  // vertex lattice coordinates, ascending

    int nx() const { return static_cast<int>(xs.size()); }
    int ny() const { return static_cast<int>(ys.size()); }

    // Relative internal degrees, row-major by [iy][ix].
    // verts: ny*nx, hedges: ny*(nx-1), vedges: (ny-1)*nx, faces: (ny-1)*(nx-1).
    std::vector<std::int64_t> deg_vert, deg_hedge, deg_vedge, deg_face;
    std::vector<std::uint8_t> erased_vert, erased_hedge, erased_vedge;

    // H-function data at cell anchors, kept so the differential can be checked
    // without going back to the link: H at the face anchor s and at -s, and the
    // component H-functions along the vertex coordinates and their negatives.
    std::vector<std::int64_t> h_face, h_face_neg;      // (ny-1)*(nx-1)
    std::vector<std::int64_t> h1_x, h1_x_neg;          // nx
    std::vector<std::int64_t> h2_y, h2_y_neg;          // ny

    std::int64_t& vert(int ix, int iy) { return deg_vert[iy * nx() + ix]; }
    std::int64_t vert(int ix, int iy) const { return deg_vert[iy * nx() + ix]; }
    std::int64_t& hedge(int ix, int iy) { return deg_hedge[iy * (nx() - 1) + ix]; }
    std::int64_t hedge(int ix, int iy) const { return deg_hedge[iy * (nx() - 1) + ix]; }
    std::int64_t& vedge(int ix, int iy) { return deg_vedge[iy * nx() + ix]; }
    std::int64_t vedge(int ix, int iy) const { return deg_vedge[iy * nx() + ix]; }
    std::int64_t& face(int ix, int iy) { return deg_face[iy * (nx() - 1) + ix]; }
    std::int64_t face(int ix, int iy) const { return deg_face[iy * (nx() - 1) + ix]; }

    bool vert_erased(int ix, int iy) const { return erased_vert[iy * nx() + ix] != 0; }
    bool hedge_erased(int ix, int iy) const { return erased_hedge[iy * (nx() - 1) + ix] != 0; }
    bool vedge_erased(int ix, int iy) const { return erased_vedge[iy * nx() + ix] != 0; }
};

// Default truncation radius max(|p1|, |p2|, R) + 1.
int default_truncation(const LinkHFunction2& l, int p1, int p2);

// Builds the complex; requires b > max(|p1|, |p2|, R) and a valid link table.
TruncatedComplex build_complex(const LinkHFunction2& l, int p1, int p2, const SpincLabel2& label,
                               int b);

// Internal degree of the generator of the free part, relative to the base
// 0-cell, including the cube-degree offset (0-, 1- or 2-cells for cases a/c/b).
std::int64_t relative_d(const TruncatedComplex& cx);

enum class PathSides { LeftRight, TopBottom };

// Maximum over simple 4-connected cell paths joining the two designated
// opposite sides of the minimum weight along the path.
std::int64_t maximin_bottleneck(const std::vector<std::vector<std::int64_t>>& grid,
                                PathSides sides);

// True iff all U-exponents of the differential are nonnegative, consistent
// with the degree tables, and the composite boundary of every 2-cell cancels
// over F_2.
bool verify_differential(const TruncatedComplex& cx);

struct OracleCheckReport {
    long long cases = 0;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

// For every framing 0 < |p1|,|p2| <= p_max and every canonical Spin^c label,
// compares the cell-complex answer against the closed surgery formula:
//   relative_d(L) - relative_d(unlink) == d_link_surgery(L) - (phi + phi),
// rebuilding at b+2 to confirm truncation stability, and checking the
// differential of every complex built along the way.
OracleCheckReport check_against_formula(const LinkHFunction2& l, int p_max);

// TSV dump of all cells: dim, s1, s2, rel_deg, erased.
std::string dump_tsv(const TruncatedComplex& cx);

}  // namespace lslink

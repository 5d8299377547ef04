#include "lslink/cell_complex.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <sstream>

#include "lslink/errors.hpp"

namespace lslink {

namespace {

// Index of lattice coordinate v in the ascending coordinate list.
int idx_of(const std::vector<int>& coords, int v) {
    auto it = std::lower_bound(coords.begin(), coords.end(), v);
    if (it == coords.end() || *it != v) throw std::logic_error("lattice point not in grid");
    return static_cast<int>(it - coords.begin());
}

// Solves deg(x + p) = deg(x) + 2x along the ascending coordinate list
// (consecutive entries differ by |p|), normalized to vanish at anchor.
std::vector<std::int64_t> degree_profile(const std::vector<int>& coords, int p, int anchor) {
    std::vector<std::int64_t> f(coords.size(), 0);
    for (size_t k = 0; k + 1 < coords.size(); ++k) {
        if (p > 0)
            f[k + 1] = f[k] + 2LL * coords[k];
        else
            f[k + 1] = f[k] - 2LL * coords[k + 1];
    }
    std::int64_t base = f[idx_of(coords, anchor)];
    for (auto& v : f) v -= base;
    return f;
}

std::vector<int> class_points(int i, int p, int b) {
    int q = std::abs(p);
    int r = ((i % q) + q) % q;
    std::vector<int> out;
    int first = r - ((r + b) / q) * q;  // smallest class point >= -b
    for (int x = first; x <= b; x += q) out.push_back(x);
    return out;
}

}  // namespace

int default_truncation(const LinkHFunction2& l, int p1, int p2) {
    return std::max({std::abs(p1), std::abs(p2), l.radius()}) + 1;
}

TruncatedComplex build_complex(const LinkHFunction2& l, int p1, int p2, const SpincLabel2& label,
                               int b) {
    if (p1 == 0 || p2 == 0) throw ZeroFraming("surgery coefficients must be nonzero");
    if (b <= std::max({std::abs(p1), std::abs(p2), l.radius()}))
        throw TruncationTooSmall("need b > max(|p1|, |p2|, core radius)");
    l.require_valid();

    TruncatedComplex cx;
    cx.p1 = p1;
    cx.p2 = p2;
    cx.label = label;
    cx.b = b;
    cx.tag = (p1 > 0) == (p2 > 0)
                 ? (p1 > 0 ? TruncationCase::AllPositive : TruncationCase::AllNegative)
                 : TruncationCase::Mixed;

    // 2-cell anchor positions |s| <= b, plus the one extra vertex line the
    // squares reach past the anchors.
    std::vector<int> ax = class_points(label.i1, p1, b);
    std::vector<int> ay = class_points(label.i2, p2, b);
    cx.xs = ax;
    cx.ys = ay;
    if (p1 > 0) cx.xs.push_back(ax.back() + p1);
    else cx.xs.insert(cx.xs.begin(), ax.front() + p1);
    if (p2 > 0) cx.ys.push_back(ay.back() + p2);
    else cx.ys.insert(cx.ys.begin(), ay.front() + p2);

    const int nx = cx.nx(), ny = cx.ny();
    const int q1 = std::abs(p1), q2 = std::abs(p2);
    int anchor1 = ((label.i1 % q1) + q1) % q1;  // base point s_{++}
    int anchor2 = ((label.i2 % q2) + q2) % q2;
    std::vector<std::int64_t> f1 = degree_profile(cx.xs, p1, anchor1);
    std::vector<std::int64_t> f2 = degree_profile(cx.ys, p2, anchor2);

    const KnotHFunction& k1 = l.component(1);
    const KnotHFunction& k2 = l.component(2);
    cx.h1_x.resize(nx);
    cx.h1_x_neg.resize(nx);
    for (int i = 0; i < nx; ++i) {
        cx.h1_x[i] = k1.at(cx.xs[i]);
        cx.h1_x_neg[i] = k1.at(-cx.xs[i]);
    }
    cx.h2_y.resize(ny);
    cx.h2_y_neg.resize(ny);
    for (int i = 0; i < ny; ++i) {
        cx.h2_y[i] = k2.at(cx.ys[i]);
        cx.h2_y_neg[i] = k2.at(-cx.ys[i]);
    }

    cx.deg_vert.resize(static_cast<size_t>(nx) * ny);
    for (int iy = 0; iy < ny; ++iy)
        for (int ix = 0; ix < nx; ++ix) cx.vert(ix, iy) = f1[ix] + f2[iy];

    // Anchor index of a face/edge along one axis: the lattice point the
    // corresponding generator sits at.
    auto ax1 = [&](int ix) { return p1 > 0 ? ix : ix + 1; };
    auto ay2 = [&](int iy) { return p2 > 0 ? iy : iy + 1; };

    cx.deg_hedge.resize(static_cast<size_t>(nx - 1) * ny);
    for (int iy = 0; iy < ny; ++iy)
        for (int ix = 0; ix < nx - 1; ++ix)
            cx.hedge(ix, iy) = f1[ax1(ix)] + f2[iy] - 2 * cx.h1_x[ax1(ix)];

    cx.deg_vedge.resize(static_cast<size_t>(nx) * (ny - 1));
    for (int iy = 0; iy < ny - 1; ++iy)
        for (int ix = 0; ix < nx; ++ix)
            cx.vedge(ix, iy) = f1[ix] + f2[ay2(iy)] - 2 * cx.h2_y[ay2(iy)];

    cx.deg_face.resize(static_cast<size_t>(nx - 1) * (ny - 1));
    cx.h_face.resize(cx.deg_face.size());
    cx.h_face_neg.resize(cx.deg_face.size());
    for (int iy = 0; iy < ny - 1; ++iy)
        for (int ix = 0; ix < nx - 1; ++ix) {
            int s1 = cx.xs[ax1(ix)], s2 = cx.ys[ay2(iy)];
            size_t id = static_cast<size_t>(iy) * (nx - 1) + ix;
            cx.h_face[id] = l.at(s1, s2);
            cx.h_face_neg[id] = l.at(-s1, -s2);
            cx.face(ix, iy) = f1[ax1(ix)] + f2[ay2(iy)] - 2 * cx.h_face[id];
        }

    cx.erased_vert.assign(static_cast<size_t>(nx) * ny, 0);
    cx.erased_hedge.assign(static_cast<size_t>(nx - 1) * ny, 0);
    cx.erased_vedge.assign(static_cast<size_t>(nx) * (ny - 1), 0);
    bool erase_lr = p1 > 0;  // sides transverse to axis 1
    bool erase_tb = p2 > 0;
    for (int iy = 0; iy < ny; ++iy)
        for (int ix = 0; ix < nx; ++ix) {
            bool on_lr = ix == 0 || ix == nx - 1;
            bool on_tb = iy == 0 || iy == ny - 1;
            if ((erase_lr && on_lr) || (erase_tb && on_tb))
                cx.erased_vert[iy * nx + ix] = 1;
        }
    if (erase_tb)
        for (int iy : {0, ny - 1})
            for (int ix = 0; ix < nx - 1; ++ix) cx.erased_hedge[iy * (nx - 1) + ix] = 1;
    if (erase_lr)
        for (int iy = 0; iy < ny - 1; ++iy)
            for (int ix : {0, nx - 1}) cx.erased_vedge[iy * nx + ix] = 1;

    return cx;
}

std::int64_t maximin_bottleneck(const std::vector<std::vector<std::int64_t>>& grid,
                                PathSides sides) {
    if (grid.empty() || grid[0].empty()) throw std::invalid_argument("empty grid");
    const int rows = static_cast<int>(grid.size());
    const int cols = static_cast<int>(grid[0].size());
    std::vector<std::int64_t> weights;
    for (const auto& row : grid) {
        if (static_cast<int>(row.size()) != cols) throw std::invalid_argument("ragged grid");
        weights.insert(weights.end(), row.begin(), row.end());
    }
    std::sort(weights.begin(), weights.end());
    weights.erase(std::unique(weights.begin(), weights.end()), weights.end());

    auto connects = [&](std::int64_t tau) {
        std::vector<std::uint8_t> seen(static_cast<size_t>(rows) * cols, 0);
        std::deque<std::pair<int, int>> queue;
        auto push = [&](int r, int c) {
            if (r < 0 || r >= rows || c < 0 || c >= cols) return;
            if (seen[r * cols + c] || grid[r][c] < tau) return;
            seen[r * cols + c] = 1;
            queue.emplace_back(r, c);
        };
        if (sides == PathSides::LeftRight)
            for (int r = 0; r < rows; ++r) push(r, 0);
        else
            for (int c = 0; c < cols; ++c) push(0, c);
        while (!queue.empty()) {
            auto [r, c] = queue.front();
            queue.pop_front();
            if (sides == PathSides::LeftRight ? c == cols - 1 : r == rows - 1) return true;
            push(r - 1, c);
            push(r + 1, c);
            push(r, c - 1);
            push(r, c + 1);
        }
        return false;
    };

    // Binary search for the largest threshold that still connects the sides.
    int lo = 0, hi = static_cast<int>(weights.size()) - 1, best = 0;
    while (lo <= hi) {
        int mid = (lo + hi) / 2;
        if (connects(weights[mid])) {
            best = mid;
            lo = mid + 1;
        } else {
            hi = mid - 1;
        }
    }
    return weights[best];
}

std::int64_t relative_d(const TruncatedComplex& cx) {
    const int nx = cx.nx(), ny = cx.ny();
    switch (cx.tag) {
        case TruncationCase::AllNegative: {
            std::int64_t best = cx.vert(0, 0);
            for (int iy = 0; iy < ny; ++iy)
                for (int ix = 0; ix < nx; ++ix) best = std::max(best, cx.vert(ix, iy));
            return best;
        }
        case TruncationCase::AllPositive: {
            std::int64_t best = cx.face(0, 0);
            for (int iy = 0; iy < ny - 1; ++iy)
                for (int ix = 0; ix < nx - 1; ++ix) best = std::min(best, cx.face(ix, iy));
            return best + 2;
        }
        case TruncationCase::Mixed: {
            std::vector<std::vector<std::int64_t>> grid;
            if (cx.p1 > 0) {  // erased left/right sides, horizontal paths
                for (int iy = 0; iy < ny; ++iy) {
                    std::vector<std::int64_t> row(nx - 1);
                    for (int ix = 0; ix < nx - 1; ++ix) row[ix] = cx.hedge(ix, iy);
                    grid.push_back(std::move(row));
                }
                return maximin_bottleneck(grid, PathSides::LeftRight) + 1;
            }
            for (int iy = 0; iy < ny - 1; ++iy) {  // erased top/bottom, vertical paths
                std::vector<std::int64_t> row(nx);
                for (int ix = 0; ix < nx; ++ix) row[ix] = cx.vedge(ix, iy);
                grid.push_back(std::move(row));
            }
            return maximin_bottleneck(grid, PathSides::TopBottom) + 1;
        }
    }
    throw std::logic_error("unreachable");
}

bool verify_differential(const TruncatedComplex& cx) {
    const int nx = cx.nx(), ny = cx.ny();
    auto ax1 = [&](int ix) { return cx.p1 > 0 ? ix : ix + 1; };
    auto ay2 = [&](int iy) { return cx.p2 > 0 ? iy : iy + 1; };

    // Edge differentials: exponent must match the degree difference, be
    // nonnegative, and land on in-grid vertices.
    for (int iy = 0; iy < ny; ++iy)
        for (int ix = 0; ix < nx - 1; ++ix) {
            if (cx.hedge_erased(ix, iy)) continue;
            int a = ax1(ix);
            std::int64_t e_near = cx.h1_x[a];
            std::int64_t e_far = cx.h1_x_neg[a];
            int far_ix = cx.p1 > 0 ? ix + 1 : ix;  // vertex at s1 + p1
            int near_ix = cx.p1 > 0 ? ix : ix + 1;
            if (e_near < 0 || e_far < 0) return false;
            if (!cx.vert_erased(near_ix, iy) &&
                cx.vert(near_ix, iy) - cx.hedge(ix, iy) != 2 * e_near)
                return false;
            if (!cx.vert_erased(far_ix, iy) && cx.vert(far_ix, iy) - cx.hedge(ix, iy) != 2 * e_far)
                return false;
        }
    for (int iy = 0; iy < ny - 1; ++iy)
        for (int ix = 0; ix < nx; ++ix) {
            if (cx.vedge_erased(ix, iy)) continue;
            int a = ay2(iy);
            std::int64_t e_near = cx.h2_y[a];
            std::int64_t e_far = cx.h2_y_neg[a];
            int far_iy = cx.p2 > 0 ? iy + 1 : iy;
            int near_iy = cx.p2 > 0 ? iy : iy + 1;
            if (e_near < 0 || e_far < 0) return false;
            if (!cx.vert_erased(ix, near_iy) &&
                cx.vert(ix, near_iy) - cx.vedge(ix, iy) != 2 * e_near)
                return false;
            if (!cx.vert_erased(ix, far_iy) && cx.vert(ix, far_iy) - cx.vedge(ix, iy) != 2 * e_far)
                return false;
        }

    // Face differentials and F_2 cancellation of the composite boundary.
    for (int iy = 0; iy < ny - 1; ++iy)
        for (int ix = 0; ix < nx - 1; ++ix) {
            size_t id = static_cast<size_t>(iy) * (nx - 1) + ix;
            std::int64_t H = cx.h_face[id], Hn = cx.h_face_neg[id];
            int a1 = ax1(ix), a2 = ay2(iy);
            // The four boundary components of z_empty(s):
            //   near horizontal z2(s), far horizontal z2(s+L2),
            //   near vertical z1(s), far vertical z1(s+L1).
            struct Route {
                bool is_hedge;
                int eix, eiy;          // edge grid position
                std::int64_t exp;      // face -> edge exponent
            };
            // z2(s) sits at the vertex row of s2 = ys[a2], z2(s+L2) at the
            // other hedge row of the face.
            int near_hy = cx.p2 > 0 ? iy : iy + 1;
            int far_hy = cx.p2 > 0 ? iy + 1 : iy;
            int near_vx = cx.p1 > 0 ? ix : ix + 1;
            int far_vx = cx.p1 > 0 ? ix + 1 : ix;
            Route routes[4] = {
                {true, ix, near_hy, H - cx.h1_x[a1]},        // z2(s)
                {true, ix, far_hy, Hn - cx.h1_x_neg[a1]},    // z2(s1, s2+p2)
                {false, near_vx, iy, H - cx.h2_y[a2]},       // z1(s)
                {false, far_vx, iy, Hn - cx.h2_y_neg[a2]},   // z1(s1+p1, s2)
            };
            for (const Route& r : routes) {
                bool erased = r.is_hedge ? cx.hedge_erased(r.eix, r.eiy)
                                         : cx.vedge_erased(r.eix, r.eiy);
                if (erased) continue;
                if (r.exp < 0) return false;
                std::int64_t edge_deg =
                    r.is_hedge ? cx.hedge(r.eix, r.eiy) : cx.vedge(r.eix, r.eiy);
                if (edge_deg - cx.face(ix, iy) != 2 * r.exp) return false;
            }
            // Corners: (dx, dy) in grid steps; each corner is reached through
            // one horizontal and one vertical route, whose total exponents
            // must agree so the pair cancels over F_2.
            struct Corner {
                int vx, vy;
                std::int64_t via_h, via_v;
            };
            Corner corners[4] = {
                {near_vx, near_hy, routes[0].exp + cx.h1_x[a1], routes[2].exp + cx.h2_y[a2]},
                {far_vx, near_hy, routes[0].exp + cx.h1_x_neg[a1], routes[3].exp + cx.h2_y[a2]},
                {near_vx, far_hy, routes[1].exp + cx.h1_x[a1], routes[2].exp + cx.h2_y_neg[a2]},
                {far_vx, far_hy, routes[1].exp + cx.h1_x_neg[a1], routes[3].exp + cx.h2_y_neg[a2]},
            };
            for (const Corner& c : corners) {
                if (cx.vert_erased(c.vx, c.vy)) continue;
                // Both routes must survive; an uncancelled single route means
                // the composite boundary does not vanish.
                bool h_alive = !(c.vy == near_hy ? cx.hedge_erased(ix, near_hy)
                                                 : cx.hedge_erased(ix, far_hy));
                bool v_alive = !(c.vx == near_vx ? cx.vedge_erased(near_vx, iy)
                                                 : cx.vedge_erased(far_vx, iy));
                if (!h_alive || !v_alive) return false;
                if (c.via_h != c.via_v) return false;
            }
        }
    return true;
}

OracleCheckReport check_against_formula(const LinkHFunction2& l, int p_max) {
    l.require_valid();
    LinkHFunction2 unlink = LinkHFunction2::unlink();
    OracleCheckReport rep;
    for (int p1 = -p_max; p1 <= p_max; ++p1) {
        if (p1 == 0) continue;
        for (int p2 = -p_max; p2 <= p_max; ++p2) {
            if (p2 == 0) continue;
            for (const SpincLabel2& label : all_spinc_labels(p1, p2)) {
                ++rep.cases;
                int b = std::max(default_truncation(l, p1, p2),
                                 default_truncation(unlink, p1, p2));
                auto run = [&](int bb) {
                    TruncatedComplex cl = build_complex(l, p1, p2, label, bb);
                    TruncatedComplex co = build_complex(unlink, p1, p2, label, bb);
                    bool dok = verify_differential(cl) && verify_differential(co);
                    return std::tuple<std::int64_t, std::int64_t, bool>(
                        relative_d(cl), relative_d(co), dok);
                };
                auto [dl, dl_o, dok] = run(b);
                auto rel = dl - dl_o;
                auto [dl2, do2, dok2] = run(b + 2);
                Rational formula = d_link_surgery(l, p1, p2, label) -
                                   (phi(p1, label.i1) + phi(p2, label.i2));
                std::ostringstream tag;
                tag << "p=(" << p1 << "," << p2 << ") i=(" << label.i1 << "," << label.i2 << ")";
                if (!dok || !dok2)
                    rep.mismatches.push_back(tag.str() + ": differential check failed");
                else if (dl2 - do2 != rel)
                    rep.mismatches.push_back(tag.str() + ": not stable under larger truncation");
                else if (formula != Rational(rel))
                    rep.mismatches.push_back(tag.str() + ": cell complex gives " +
                                             std::to_string(rel) + ", formula gives " +
                                             formula.str());
            }
        }
    }
    return rep;
}

std::string dump_tsv(const TruncatedComplex& cx) {
    std::ostringstream os;
    os << "dim\ts1\ts2\trel_deg\terased\n";
    const int nx = cx.nx(), ny = cx.ny();
    auto ax1 = [&](int ix) { return cx.p1 > 0 ? ix : ix + 1; };
    auto ay2 = [&](int iy) { return cx.p2 > 0 ? iy : iy + 1; };
    for (int iy = 0; iy < ny; ++iy)
        for (int ix = 0; ix < nx; ++ix)
            os << 0 << '\t' << cx.xs[ix] << '\t' << cx.ys[iy] << '\t' << cx.vert(ix, iy) << '\t'
               << (cx.vert_erased(ix, iy) ? 1 : 0) << '\n';
    for (int iy = 0; iy < ny; ++iy)
        for (int ix = 0; ix < nx - 1; ++ix)
            os << 1 << '\t' << cx.xs[ax1(ix)] << '\t' << cx.ys[iy] << '\t' << cx.hedge(ix, iy)
               << '\t' << (cx.hedge_erased(ix, iy) ? 1 : 0) << '\n';
    for (int iy = 0; iy < ny - 1; ++iy)
        for (int ix = 0; ix < nx; ++ix)
            os << 1 << '\t' << cx.xs[ix] << '\t' << cx.ys[ay2(iy)] << '\t' << cx.vedge(ix, iy)
               << '\t' << (cx.vedge_erased(ix, iy) ? 1 : 0) << '\n';
    for (int iy = 0; iy < ny - 1; ++iy)
        for (int ix = 0; ix < nx - 1; ++ix)
            os << 2 << '\t' << cx.xs[ax1(ix)] << '\t' << cx.ys[ay2(iy)] << '\t' << cx.face(ix, iy)
               << "\t0\n";
    return os.str();
}

}  // namespace lslink

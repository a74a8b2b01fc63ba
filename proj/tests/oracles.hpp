#pragma once

// Test-only oracles: independent brute-force routes for the checks that the
// library computes in closed form, plus deterministic random generators.

#include "netpres/netpres.hpp"

#include <array>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace oracles {

using namespace netpres;

inline std::string read_data_file(const std::string& name) {
    std::string path = std::string(NETPRES_DATA_DIR) + "/" + name;
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("missing data file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// --- independent Smith reduction -----------------------------------------
// Row/column gcd elimination without transform bookkeeping; returns the
// divisors in the (m, n) convention with n | m.

inline Divisors smith_divisors_by_reduction(IntMat2 w) {
    auto nonzero_offdiag = [&] { return w.col1.y != 0 || w.col2.x != 0; };
    for (;;) {
        while (nonzero_offdiag()) {
            if (abs(w.col1.y) != 0 && (w.a() == 0 || abs(w.col1.y) < abs(w.a()))) {
                std::swap(w.col1.x, w.col1.y);
                std::swap(w.col2.x, w.col2.y);
            }
            if (w.col1.y != 0) {
                Int q = w.col1.y / w.a();
                w.col1.y -= q * w.a();
                w.col2.y -= q * w.b();
            }
            if (abs(w.col2.x) != 0 && (w.a() == 0 || abs(w.col2.x) < abs(w.a()))) {
                std::swap(w.col1.x, w.col2.x);
                std::swap(w.col1.y, w.col2.y);
            }
            if (w.col2.x != 0) {
                Int q = w.col2.x / w.a();
                w.col2.x -= q * w.a();
                w.col2.y -= q * w.col1.y;
            }
        }
        if (w.a() != 0 && w.d() % w.a() == 0) break;
        w.col1 = w.col1 + w.col2;  // pull the second column in and retry
    }
    return {abs(w.d()), abs(w.a())};
}

// --- exact convex overlap (for the neighbor-isometry oracle) -------------

inline Int cross3(const IntVec2& o, const IntVec2& a, const IntVec2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline bool point_in_ccw_quad(const std::array<IntVec2, 4>& q, const IntVec2& p) {
    for (int k = 0; k < 4; ++k)
        if (cross3(q[k], q[(k + 1) % 4], p) < 0) return false;
    return true;
}

inline bool segments_cross(const IntVec2& a, const IntVec2& b, const IntVec2& c,
                           const IntVec2& d) {
    auto sgn = [](const Int& v) { return v > 0 ? 1 : v < 0 ? -1 : 0; };
    int o1 = sgn(cross3(a, b, c)), o2 = sgn(cross3(a, b, d));
    int o3 = sgn(cross3(c, d, a)), o4 = sgn(cross3(c, d, b));
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    auto between = [](const IntVec2& p, const IntVec2& q, const IntVec2& r) {
        return std::min(p.x, r.x) <= q.x && q.x <= std::max(p.x, r.x) &&
               std::min(p.y, r.y) <= q.y && q.y <= std::max(p.y, r.y);
    };
    if (o1 == 0 && between(a, c, b)) return true;
    if (o2 == 0 && between(a, d, b)) return true;
    if (o3 == 0 && between(c, a, d)) return true;
    if (o4 == 0 && between(c, b, d)) return true;
    return false;
}

inline bool quads_overlap(const std::array<IntVec2, 4>& p, const std::array<IntVec2, 4>& q) {
    for (const IntVec2& v : p)
        if (point_in_ccw_quad(q, v)) return true;
    for (const IntVec2& v : q)
        if (point_in_ccw_quad(p, v)) return true;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (segments_cross(p[i], p[(i + 1) % 4], q[j], q[(j + 1) % 4])) return true;
    return false;
}

// F1 as a CCW quad for det(basis) > 0.
inline std::array<IntVec2, 4> fundamental_quad(const IntMat2& basis) {
    IntVec2 zero{Int(0), Int(0)};
    return {zero, Int(2) * basis.col1, Int(2) * basis.col1 + basis.col2, basis.col2};
}

// All gamma in Gamma_1 with coefficient range |a|,|b| <= span whose image of
// F1 overlaps F1, found by exhaustive search with the overlap test above.
inline std::vector<PlaneIsometry> neighbor_isometries_bruteforce(const IntMat2& basis, int span) {
    std::array<IntVec2, 4> f1 = fundamental_quad(basis);
    std::vector<PlaneIsometry> out;
    for (int a = -span; a <= span; ++a) {
        for (int b = -span; b <= span; ++b) {
            IntVec2 mu = Int(a) * basis.col1 + Int(b) * basis.col2;
            for (int sgn : {1, -1}) {
                PlaneIsometry gamma{sgn, Int(2) * mu};
                if (gamma.is_identity() && !(a == 0 && b == 0)) continue;
                std::array<IntVec2, 4> image;
                for (int k = 0; k < 4; ++k) image[k] = gamma(f1[k]);
                if (sgn < 0) std::swap(image[1], image[3]);  // keep CCW order
                if (quads_overlap(f1, image)) out.push_back(gamma);
            }
        }
    }
    return out;
}

// --- brute-force critical value classes -----------------------------------
// Enumerate mu in [-span, span]^2 \ A Z^2 and collect the parities of
// mu + c, with lattice membership decided by Cramer's rule.

inline bool in_lattice_cramer(const IntMat2& a, const IntVec2& v) {
    Int d = det(a);
    Int i_num = v.x * a.d() - a.b() * v.y;
    Int j_num = a.a() * v.y - a.c() * v.x;
    return i_num % d == 0 && j_num % d == 0;
}

inline std::vector<Parity> cv_classes_bruteforce(const IntMat2& a, const Parity& selector,
                                                 int span) {
    std::set<std::pair<int, int>> seen;
    for (int x = -span; x <= span; ++x) {
        for (int y = -span; y <= span; ++y) {
            IntVec2 mu{Int(x), Int(y)};
            if (in_lattice_cramer(a, mu)) continue;
            Parity label = parity_of(mu) + selector;
            seen.insert({label.c1, label.c2});
        }
    }
    std::vector<Parity> out;
    for (const auto& [c1, c2] : seen) out.push_back({c1, c2});
    return out;
}

// --- deterministic generators ---------------------------------------------

using Rng = std::mt19937_64;

inline Int rand_int(Rng& rng, int lo, int hi) {
    return Int(std::uniform_int_distribution<int>(lo, hi)(rng));
}

inline IntMat2 random_basis(Rng& rng, int entry_bound = 4, int min_det = 2) {
    for (;;) {
        IntMat2 m{{rand_int(rng, -entry_bound, entry_bound), rand_int(rng, -entry_bound, entry_bound)},
                  {rand_int(rng, -entry_bound, entry_bound), rand_int(rng, -entry_bound, entry_bound)}};
        if (det(m) >= min_det) return m;
    }
}

inline IntMat2 random_matrix_with_det_in(Rng& rng, int lo, int hi, int entry_bound = 12) {
    for (;;) {
        IntMat2 m{{rand_int(rng, -entry_bound, entry_bound), rand_int(rng, -entry_bound, entry_bound)},
                  {rand_int(rng, -entry_bound, entry_bound), rand_int(rng, -entry_bound, entry_bound)}};
        Int d = det(m);
        if (d >= lo && d <= hi) return m;
    }
}

// Product of random shears, so det = 1; optionally conjugated by a sign flip.
inline IntMat2 random_unimodular(Rng& rng, int shears = 4) {
    IntMat2 m = IntMat2::identity();
    for (int k = 0; k < shears; ++k) {
        Int t = rand_int(rng, -3, 3);
        IntMat2 shear = (k % 2 == 0) ? IntMat2::from_rows(Int(1), t, Int(0), Int(1))
                                     : IntMat2::from_rows(Int(1), Int(0), t, Int(1));
        m = m * shear;
    }
    return m;
}

inline IntMat2 random_det_pm1(Rng& rng) {
    IntMat2 m = random_unimodular(rng);
    if (std::uniform_int_distribution<int>(0, 1)(rng))
        m = m * IntMat2::from_rows(Int(0), Int(1), Int(1), Int(0));
    return m;
}

inline Parity random_selector(Rng& rng) {
    return {std::uniform_int_distribution<int>(0, 1)(rng),
            std::uniform_int_distribution<int>(0, 1)(rng)};
}

// Always-valid diagram: one degenerate push per parity class.
inline PresentationDiagram degenerate_diagram(const IntMat2& basis, const Parity& selector) {
    PresentationDiagram d;
    d.basis = basis;
    d.selector = selector;
    constexpr DotIndex dots[4] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    for (int k = 0; k < 4; ++k) d.pushes[k] = {dots[k], dots[k].coords(basis)};
    return d;
}

// Lattice points of the closed fundamental domain, in scan order.
inline std::vector<IntVec2> domain_lattice_points(const IntMat2& basis) {
    std::array<IntVec2, 4> q = fundamental_quad(basis);
    Int xmin = q[0].x, xmax = q[0].x, ymin = q[0].y, ymax = q[0].y;
    for (const IntVec2& c : q) {
        xmin = std::min(xmin, c.x);
        xmax = std::max(xmax, c.x);
        ymin = std::min(ymin, c.y);
        ymax = std::max(ymax, c.y);
    }
    std::vector<IntVec2> out;
    for (Int x = xmin; x <= xmax; ++x)
        for (Int y = ymin; y <= ymax; ++y)
            if (in_fundamental_domain(basis, {x, y})) out.push_back({x, y});
    return out;
}

// Structurally well-formed diagram with random dots and terminals; not
// necessarily valid. Good enough for parser round-trips.
inline PresentationDiagram random_structural_diagram(Rng& rng) {
    PresentationDiagram d;
    d.basis = random_basis(rng);
    d.selector = random_selector(rng);
    std::vector<IntVec2> points = domain_lattice_points(d.basis);
    std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
    constexpr DotIndex options[4][2] = {{{0, 0}, {2, 0}}, {{1, 0}, {1, 0}},
                                        {{0, 1}, {2, 1}}, {{1, 1}, {1, 1}}};
    for (int k = 0; k < 4; ++k) {
        DotIndex dot = options[k][std::uniform_int_distribution<int>(0, 1)(rng)];
        d.pushes[k] = {dot, points[pick(rng)]};
    }
    return d;
}

// Valid diagram with varied pushes: either all-degenerate or built by the
// segment selection procedure from random classes.
inline PresentationDiagram random_valid_diagram(Rng& rng);

// Four pairwise distinct sphere points over the given basis.
inline std::array<SpherePoint, 4> random_distinct_classes(Rng& rng, const IntMat2& basis) {
    std::array<SpherePoint, 4> out;
    int have = 0;
    while (have < 4) {
        IntVec2 mu{rand_int(rng, -8, 8), rand_int(rng, -8, 8)};
        SpherePoint p = sphere_reduce(mu, basis);
        bool fresh = true;
        for (int k = 0; k < have; ++k)
            if (out[k] == p) fresh = false;
        if (fresh) out[have++] = p;
    }
    return out;
}

inline PresentationDiagram random_valid_diagram(Rng& rng) {
    for (;;) {
        IntMat2 basis = random_basis(rng);
        Parity selector = random_selector(rng);
        if (std::uniform_int_distribution<int>(0, 2)(rng) == 0)
            return degenerate_diagram(basis, selector);
        PresentationDiagram d{basis, selector,
                              choose_segments(basis, selector, random_distinct_classes(rng, basis))};
        if (validate(d).valid()) return d;
    }
}

}  // namespace oracles

#pragma once

#include "netpres/euclid.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace netpres {

// v in A * Z^2, decided exactly via adj(A) v = det(A) A^{-1} v.
inline bool in_column_lattice(const IntMat2& a, const IntVec2& v) {
    Int d = det(a);
    IntVec2 w = adjugate(a) * v;
    return w.x % d == 0 && w.y % d == 0;
}

// Sphere points of the four push terminals, in stored push order.
inline std::array<SpherePoint, 4> terminal_points(const PresentationDiagram& diagram) {
    std::array<SpherePoint, 4> out;
    for (std::size_t k = 0; k < 4; ++k)
        out[k] = sphere_reduce(diagram.pushes[k].terminal, diagram.basis);
    return out;
}

// Labels of the critical values of the Euclidean part, as classes of
// Lambda_1 mod 2 in lambda-coordinates: {(mu + c) mod 2 : mu in Z^2 \ A Z^2}.
// A parity rho is excluded exactly when the whole coset (rho - c) + 2 Z^2
// sits inside A Z^2, i.e. its {0,1}^2 representative and both 2*e1, 2*e2 do.
inline std::vector<Parity> critical_value_classes(const PresentationDiagram& diagram) {
    const IntMat2& a = diagram.basis;
    bool twice_e1 = in_column_lattice(a, {Int(2), Int(0)});
    bool twice_e2 = in_column_lattice(a, {Int(0), Int(2)});
    std::vector<Parity> out;
    for (int c1 = 0; c1 < 2; ++c1) {
        for (int c2 = 0; c2 < 2; ++c2) {
            Parity rho{c1, c2};
            Parity rep = rho + diagram.selector;  // (rho - c) mod 2
            bool excluded = twice_e1 && twice_e2 &&
                            in_column_lattice(a, {Int(rep.c1), Int(rep.c2)});
            if (!excluded) out.push_back(rho);
        }
    }
    return out;
}

// The dynamics of f = h o g on the four candidate postcritical points.
// points are sorted; edges[i] indexes f(points[i]); cv_image[i] marks the
// pushed critical values; postcritical holds their forward orbit closure.
struct Portrait {
    std::array<SpherePoint, 4> points;
    std::array<int, 4> edges;
    std::vector<Parity> cv_classes;
    std::array<bool, 4> cv_image;
    std::array<bool, 4> postcritical;

    int postcritical_count() const {
        return static_cast<int>(std::count(postcritical.begin(), postcritical.end(), true));
    }
    bool is_net() const { return postcritical_count() == 4; }
};

namespace detail {

// g sends the class of a lattice point t to the P1 point whose
// lambda-coordinate parity is (t + c) mod 2: A^{-1}(A t + b) = t + c, read
// with t in standard coordinates and c the selector.
inline Parity euclidean_image_label(const IntVec2& t, const Parity& selector) {
    return parity_of(t) + selector;
}

}  // namespace detail

inline Portrait portrait(const PresentationDiagram& diagram) {
    Portrait out;
    out.points = terminal_points(diagram);
    std::sort(out.points.begin(), out.points.end());

    // terminal sphere point of the push starting in a given parity class
    auto push_target = [&](const Parity& label) -> SpherePoint {
        for (const GreenSegment& seg : diagram.pushes)
            if (seg.initial.parity() == label)
                return sphere_reduce(seg.terminal, diagram.basis);
        throw std::logic_error("no push for parity class; diagram not validated");
    };
    auto index_of = [&](const SpherePoint& p) {
        for (int k = 0; k < 4; ++k)
            if (out.points[k] == p) return k;
        throw std::logic_error("map image escaped P; diagram not validated");
    };

    for (int k = 0; k < 4; ++k) {
        Parity label = detail::euclidean_image_label(out.points[k].rep, diagram.selector);
        out.edges[k] = index_of(push_target(label));
    }

    out.cv_classes = critical_value_classes(diagram);
    out.cv_image.fill(false);
    for (const Parity& cls : out.cv_classes) out.cv_image[index_of(push_target(cls))] = true;

    out.postcritical = out.cv_image;
    for (int step = 0; step < 4; ++step)
        for (int k = 0; k < 4; ++k)
            if (out.postcritical[k]) out.postcritical[out.edges[k]] = true;
    return out;
}

// The map on P as (point, image) pairs, sorted by source point.
inline std::array<std::pair<SpherePoint, SpherePoint>, 4> map_on_candidates(
    const PresentationDiagram& diagram) {
    Portrait p = portrait(diagram);
    std::array<std::pair<SpherePoint, SpherePoint>, 4> out;
    for (int k = 0; k < 4; ++k) out[k] = {p.points[k], p.points[p.edges[k]]};
    return out;
}

inline bool is_net(const PresentationDiagram& diagram) { return portrait(diagram).is_net(); }

// Isomorphism of portraits as labeled digraphs: a bijection of vertices
// commuting with the edge maps and preserving the pushed-critical-value
// marks, with matching critical value class counts.
inline bool portrait_isomorphic(const Portrait& lhs, const Portrait& rhs) {
    if (lhs.cv_classes.size() != rhs.cv_classes.size()) return false;
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
        bool ok = true;
        for (int k = 0; k < 4 && ok; ++k) {
            if (perm[lhs.edges[k]] != rhs.edges[perm[k]]) ok = false;
            if (lhs.cv_image[k] != rhs.cv_image[perm[k]]) ok = false;
            if (lhs.postcritical[k] != rhs.postcritical[perm[k]]) ok = false;
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// JSON view of the invariants, schema-stable and newline-terminated:
// degree, m, n, is_net, postcritical_count, cv_classes, edges.
inline std::string portrait_json(const PresentationDiagram& diagram) {
    Portrait p = portrait(diagram);
    Divisors div = elementary_divisors(diagram.basis);
    std::string out = "{";
    out += "\"degree\": " + degree(diagram).str();
    out += ", \"m\": " + div.m.str();
    out += ", \"n\": " + div.n.str();
    out += ", \"is_net\": " + std::string(p.is_net() ? "true" : "false");
    out += ", \"postcritical_count\": " + std::to_string(p.postcritical_count());
    out += ", \"cv_classes\": [";
    for (std::size_t k = 0; k < p.cv_classes.size(); ++k) {
        if (k) out += ", ";
        out += "[" + std::to_string(p.cv_classes[k].c1) + ", " +
               std::to_string(p.cv_classes[k].c2) + "]";
    }
    out += "], \"edges\": [";
    for (int k = 0; k < 4; ++k) {
        if (k) out += ", ";
        const IntVec2& from = p.points[k].rep;
        const IntVec2& to = p.points[p.edges[k]].rep;
        out += "{\"from\": [" + from.x.str() + ", " + from.y.str() + "], \"to\": [" +
               to.x.str() + ", " + to.y.str() + "]}";
    }
    out += "]}\n";
    return out;
}

}  // namespace netpres

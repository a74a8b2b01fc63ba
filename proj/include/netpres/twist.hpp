#pragma once

#include "netpres/diagram_io.hpp"
#include "netpres/portrait.hpp"

#include <optional>
#include <variant>

namespace netpres {

struct DuplicateTerminalClass final : std::invalid_argument {
    DuplicateTerminalClass() : std::invalid_argument("terminal classes are not pairwise distinct") {}
};

// Left action of the monoid of positive-determinant integer matrices:
// transform the whole picture by m. The selector is untouched since
// m*b = c1*lambda1' + c2*lambda2'.
inline PresentationDiagram matrix_twist(const PresentationDiagram& diagram, const IntMat2& m) {
    if (det(m) <= 0) throw NonPositiveDeterminant{};
    PresentationDiagram out = diagram;
    out.basis = m * diagram.basis;
    for (GreenSegment& seg : out.pushes) seg.terminal = m * seg.terminal;
    return out;
}

// Twist by the translation x -> x + v: the selector shifts by v mod 2,
// with v reduced in standard coordinates and the selector living in
// lambda-coordinates, exactly as the two reduction homomorphisms prescribe.
inline PresentationDiagram translation_twist(const PresentationDiagram& diagram,
                                             const IntVec2& v) {
    PresentationDiagram out = diagram;
    out.selector = out.selector + parity_of(v);
    return out;
}

inline PresentationDiagram negate(const PresentationDiagram& diagram) {
    return matrix_twist(diagram, -IntMat2::identity());
}

// Canonical pick between D and -D: the one with the smaller serialization.
inline PresentationDiagram projective_canonical(const PresentationDiagram& diagram) {
    PresentationDiagram neg = negate(diagram);
    return serialize(diagram) <= serialize(neg) ? diagram : neg;
}

inline bool projective_equal(const PresentationDiagram& lhs, const PresentationDiagram& rhs) {
    return serialize(projective_canonical(lhs)) == serialize(projective_canonical(rhs));
}

namespace detail {

// Move a segment with initial point v (a point of the column lattice of
// basis) onto one of the six dots by an element of Gamma_1, keeping the
// terminal inside the closed fundamental domain. Candidates exist exactly
// for dots matching v's parity in lambda-coordinates: a translation and a
// half turn per dot. Deterministic order: identity first, then dots in
// index order, translation before rotation.
inline std::optional<GreenSegment> relocate_segment(const IntMat2& basis, const IntVec2& v,
                                                    const IntVec2& terminal) {
    for (const DotIndex& dot : kAllDots) {
        if (dot.coords(basis) == v && in_fundamental_domain(basis, terminal))
            return GreenSegment{dot, terminal};
    }
    IntMat2 twice{Int(2) * basis.col1, Int(2) * basis.col2};
    for (const DotIndex& dot : kAllDots) {
        IntVec2 mu = dot.coords(basis);
        if (!in_column_lattice(twice, mu - v)) continue;  // parity mismatch
        if (in_fundamental_domain(basis, terminal + (mu - v)))
            return GreenSegment{dot, terminal + (mu - v)};
        if (in_fundamental_domain(basis, mu + v - terminal))
            return GreenSegment{dot, mu + v - terminal};
    }
    return std::nullopt;
}

}  // namespace detail

// Conjugate the affine data by the unimodular q: basis' = q*basis*q^{-1},
// selector' = q*c mod 2, segments mapped by q and then returned to the new
// fundamental domain by elements of the new Gamma_1 (which do not change
// the quotient arcs). Empty when some segment has no such translate.
inline std::optional<PresentationDiagram> conjugate_diagram(const PresentationDiagram& diagram,
                                                            const IntMat2& q) {
    PresentationDiagram out;
    out.basis = q * diagram.basis * unimodular_inverse(q);
    IntVec2 c = q * IntVec2{Int(diagram.selector.c1), Int(diagram.selector.c2)};
    out.selector = parity_of(c);
    for (std::size_t k = 0; k < 4; ++k) {
        const GreenSegment& seg = diagram.pushes[k];
        IntVec2 v = q * seg.initial.coords(diagram.basis);
        auto moved = detail::relocate_segment(out.basis, v, q * seg.terminal);
        if (!moved) return std::nullopt;
        out.pushes[k] = *moved;
    }
    return out;
}

inline bool satisfies_divisor_conditions(const IntMat2& a) {
    Divisors div = elementary_divisors(a);
    return a.col1.x % div.m == 0 && a.col1.y % div.m == 0 && a.col2.x % div.n == 0 &&
           a.col2.y % div.n == 0;
}

// Rebase so the elementary divisors show in the columns: with
// A = P diag(m, n) Q, conjugating by Q gives A' = QP diag(m, n), whose
// first column m divides and second column n divides. A diagram already in
// that shape is returned unchanged. Partial: fails when a transported
// segment has no Gamma_1'-translate inside the new domain.
inline std::optional<PresentationDiagram> normalize_divisors(const PresentationDiagram& diagram) {
    if (satisfies_divisor_conditions(diagram.basis)) return diagram;
    return conjugate_diagram(diagram, smith_decomposition(diagram.basis).second);
}

// --- Segment selection ------------------------------------------------

namespace detail {

// Representative of a sphere point in the interior of the fundamental
// domain united with the left half of its boundary, in lambda-coordinates:
// x2 in (0, 1) with x1 in [0, 2), or x2 in {0, 1} with x1 in [0, 1].
struct RegionPoint {
    IntVec2 point;  // lattice representative
    RatVec2 lam;    // its lambda-coordinates inside the region
};

inline RegionPoint region_representative(const IntMat2& basis, const IntVec2& mu) {
    RatVec2 t = solve(basis, mu);
    t.y -= 2 * Rat(rat_floor(t.y / 2));
    if (t.y > 1) t = {-t.x, 2 - t.y};
    t.x -= 2 * Rat(rat_floor(t.x / 2));
    if ((t.y == 0 || t.y == 1) && t.x > 1) t.x = 2 - t.x;
    RatVec2 back{Rat(basis.a()) * t.x + Rat(basis.b()) * t.y,
                 Rat(basis.c()) * t.x + Rat(basis.d()) * t.y};
    return {{numerator(back.x), numerator(back.y)}, t};
}

}  // namespace detail

// Build four disjoint push segments from the corner dots 0, lambda1,
// lambda2, lambda1+lambda2 to representatives of the given classes,
// following the selection rules: classes sitting exactly on a corner dot
// become degenerate pushes; bottom-edge points attach to 0 (nearest first)
// then lambda1; top-edge points to lambda2 then lambda1+lambda2; leftovers
// go to 0/lambda1 by minimal and to lambda2/lambda1+lambda2 by maximal
// lambda2-coordinate. If the two segments of a leftover pair cross, their
// terminals are exchanged (the opposite sides of the spanned quadrilateral
// keeping the dots as endpoints).
inline std::array<GreenSegment, 4> choose_segments(const IntMat2& basis, const Parity& /*selector*/,
                                                   const std::array<SpherePoint, 4>& classes) {
    if (det(basis) <= 0) throw NonPositiveDeterminant{};

    std::array<detail::RegionPoint, 4> reps;
    for (int k = 0; k < 4; ++k) reps[k] = detail::region_representative(basis, classes[k].rep);
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            if (reps[a].point == reps[b].point) throw DuplicateTerminalClass{};

    constexpr DotIndex corner_dots[4] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    std::array<std::optional<GreenSegment>, 4> chosen;  // indexed like corner_dots
    std::array<bool, 4> used{};

    auto assign = [&](int dot, int rep) {
        chosen[dot] = GreenSegment{corner_dots[dot], reps[rep].point};
        used[rep] = true;
    };

    // Classes lying exactly on a corner dot: degenerate pushes.
    for (int dot = 0; dot < 4; ++dot) {
        RatVec2 corner{Rat(corner_dots[dot].i), Rat(corner_dots[dot].j)};
        for (int k = 0; k < 4; ++k)
            if (!used[k] && reps[k].lam == corner) assign(dot, k);
    }

    // Edge rule: dots (first, second) take the nearest / farthest-from-first
    // remaining point on the row x2 = level.
    auto edge_pass = [&](const Rat& level, int first, int second) {
        auto pick = [&](bool nearest) {
            int best = -1;
            for (int k = 0; k < 4; ++k) {
                if (used[k] || reps[k].lam.y != level) continue;
                if (best < 0 || (nearest ? reps[k].lam.x < reps[best].lam.x
                                         : reps[k].lam.x > reps[best].lam.x))
                    best = k;
            }
            return best;
        };
        if (!chosen[first])
            if (int k = pick(true); k >= 0) assign(first, k);
        if (!chosen[second])
            if (int k = pick(false); k >= 0) assign(second, k);
    };
    edge_pass(Rat(0), 0, 1);
    edge_pass(Rat(1), 2, 3);

    // Leftover rule for a dot pair; returns which reps the pair received.
    auto leftover_pass = [&](int first, int second, bool maximal) {
        auto pick = [&]() {
            int best = -1;
            for (int k = 0; k < 4; ++k) {
                if (used[k]) continue;
                if (best < 0) {
                    best = k;
                    continue;
                }
                auto key = [&](int idx) { return std::pair(reps[idx].lam.y, reps[idx].lam.x); };
                if (maximal ? key(k) > key(best) : key(k) < key(best)) best = k;
            }
            return best;
        };
        std::array<int, 2> got{-1, -1};
        if (!chosen[first])
            if (int k = pick(); k >= 0) {
                assign(first, k);
                got[0] = k;
            }
        if (!chosen[second])
            if (int k = pick(); k >= 0) {
                assign(second, k);
                got[1] = k;
            }
        // Crossing diagonals: exchange for opposite quadrilateral sides.
        if (got[0] >= 0 && got[1] >= 0) {
            IntVec2 a0 = corner_dots[first].coords(basis), a1 = chosen[first]->terminal;
            IntVec2 b0 = corner_dots[second].coords(basis), b1 = chosen[second]->terminal;
            if (segments_touch(a0, a1, b0, b1)) {
                chosen[first]->terminal = b1;
                chosen[second]->terminal = a1;
            }
        }
    };
    leftover_pass(0, 1, false);
    leftover_pass(2, 3, true);

    std::array<GreenSegment, 4> out;
    for (int dot = 0; dot < 4; ++dot) {
        if (!chosen[dot]) throw std::logic_error("segment selection left a dot unassigned");
        out[dot] = *chosen[dot];
    }
    return out;
}

// --- Euclidean data equivalence ----------------------------------------

struct Equivalent {
    IntMat2 conjugator;     // det 1
    IntVec2 translation;
    int sgn;                // conj * A * conj^{-1} = sgn * A'
};

struct Distinct {
    std::string reason;  // which invariant differs
};

struct SearchExhausted {
    Int bound;
};

using EquivalenceVerdict = std::variant<Equivalent, Distinct, SearchExhausted>;

namespace detail {

// Balanced scan order 0, 1, -1, 2, -2, ...: small witnesses first, positive
// before negative, so the identity beats -identity.
inline std::vector<Int> balanced_range(const Int& bound) {
    std::vector<Int> out{Int(0)};
    for (Int v = 1; v <= bound; ++v) {
        out.push_back(v);
        out.push_back(-v);
    }
    return out;
}

}  // namespace detail

// Bounded search for the affine conjugacy Psi(x) = Cx + d with
// C A C^{-1} = +-A' and C b + (I -+ A') d = +-b' modulo 2 Lambda_1'. Quick
// invariant screen first; SearchExhausted when no witness appears with
// |entries of C| <= bound.
inline EquivalenceVerdict euclidean_equivalence(const PresentationDiagram& lhs,
                                                const PresentationDiagram& rhs, const Int& bound) {
    const IntMat2& a1 = lhs.basis;
    const IntMat2& a2 = rhs.basis;
    if (det(a1) != det(a2)) return Distinct{"determinant"};
    if (!(elementary_divisors(a1) == elementary_divisors(a2)))
        return Distinct{"elementary_divisors"};
    if (abs(a1.a() + a1.d()) != abs(a2.a() + a2.d())) return Distinct{"trace"};

    IntVec2 b1 = selector_point(lhs);
    IntVec2 b2 = selector_point(rhs);
    Int dd = abs(det(a2));
    IntMat2 twice{Int(2) * a2.col1, Int(2) * a2.col2};

    auto with_conjugator = [&](const IntMat2& conj) -> std::optional<Equivalent> {
        for (int sgn : {1, -1}) {
            IntMat2 rhs_prod = sgn > 0 ? a2 * conj : -(a2 * conj);
            if (!(conj * a1 == rhs_prod)) continue;
            // C b + (I - sgn A') t = sgn b' (mod 2 Lambda_1'); solutions
            // depend only on t modulo 2*det(A'), so this scan is complete.
            IntMat2 signed_a2 = sgn > 0 ? a2 : -a2;
            IntVec2 rhs_vec = (sgn > 0 ? b2 : -b2) - conj * b1;
            for (Int tx = 0; tx < 2 * dd; ++tx)
                for (Int ty = 0; ty < 2 * dd; ++ty) {
                    IntVec2 t{tx, ty};
                    if (in_column_lattice(twice, (t - signed_a2 * t) - rhs_vec))
                        return Equivalent{conj, t, sgn};
                }
        }
        return std::nullopt;
    };

    if (auto hit = with_conjugator(IntMat2::identity())) return *hit;
    std::vector<Int> range = detail::balanced_range(bound);
    for (const Int& a : range)
        for (const Int& b : range)
            for (const Int& c : range)
                for (const Int& d : range) {
                    IntMat2 conj = IntMat2::from_rows(a, b, c, d);
                    if (det(conj) != 1 || conj == IntMat2::identity()) continue;
                    if (auto hit = with_conjugator(conj)) return *hit;
                }
    return SearchExhausted{bound};
}

}  // namespace netpres

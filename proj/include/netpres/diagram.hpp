#pragma once

#include "netpres/geometry.hpp"
#include "netpres/lattice.hpp"

#include <array>
#include <string>
#include <vector>

namespace netpres {

// An element of Z_2 x Z_2. Doubles as the translation selector (b = c1*lambda1
// + c2*lambda2) and as a label for the four quotient classes of Lambda_1.
struct Parity {
    int c1 = 0;
    int c2 = 0;

    friend bool operator==(const Parity&, const Parity&) = default;
    friend auto operator<=>(const Parity&, const Parity&) = default;
    friend Parity operator+(const Parity& a, const Parity& b) {
        return {(a.c1 + b.c1) & 1, (a.c2 + b.c2) & 1};
    }
};

inline Parity parity_of(const IntVec2& v) { return {parity_of(v.x), parity_of(v.y)}; }

// One of the six marked lattice points i*lambda1 + j*lambda2 in the closed
// fundamental domain, i in {0,1,2}, j in {0,1}.
struct DotIndex {
    int i = 0;
    int j = 0;

    IntVec2 coords(const IntMat2& basis) const {
        return Int(i) * basis.col1 + Int(j) * basis.col2;
    }
    Parity parity() const { return {i & 1, j}; }
    int order() const { return 3 * j + i; }

    friend bool operator==(const DotIndex&, const DotIndex&) = default;
};

inline constexpr std::array<DotIndex, 6> kAllDots = {
    DotIndex{0, 0}, DotIndex{1, 0}, DotIndex{2, 0},
    DotIndex{0, 1}, DotIndex{1, 1}, DotIndex{2, 1}};

// One push arc, stored as the single lift in F1 from its initial dot to a
// point of the integer lattice. Mirror lifts are reconstructed on demand
// through neighbor_isometries.
struct GreenSegment {
    DotIndex initial;
    IntVec2 terminal;

    bool degenerate(const IntMat2& basis) const { return terminal == initial.coords(basis); }

    friend bool operator==(const GreenSegment&, const GreenSegment&) = default;
};

struct PresentationDiagram {
    IntMat2 basis;     // columns lambda1, lambda2
    Parity selector;   // circled point b = c1*lambda1 + c2*lambda2
    std::array<GreenSegment, 4> pushes;

    friend bool operator==(const PresentationDiagram&, const PresentationDiagram&) = default;
};

// A plane isometry x -> sign*x + shift with sign in {+1, -1}. sign = -1 is
// the half turn about shift/2.
struct PlaneIsometry {
    int sgn = 1;
    IntVec2 shift{};

    IntVec2 operator()(const IntVec2& x) const { return sgn >= 0 ? x + shift : shift - x; }
    bool is_identity() const { return sgn >= 0 && shift.is_zero(); }
    PlaneIsometry inverse() const { return sgn >= 0 ? PlaneIsometry{1, -shift} : *this; }
    // Defined only for sgn = -1; shift = 2*mu with mu the rotation center.
    IntVec2 rotation_center() const { return {shift.x / 2, shift.y / 2}; }

    friend bool operator==(const PlaneIsometry&, const PlaneIsometry&) = default;
};

// The nine elements gamma of Gamma_1 = {x -> +-x + 2*Lambda_1} with
// gamma(F1) meeting F1: the identity, the translations by +-2*lambda1, and
// the half turns about the six dots. In (2*lambda1, lambda2)-coordinates
// F1 is the unit square and gamma meets it iff 2*mu lies in F1 -+ F1, which
// pins down exactly this list.
inline std::vector<PlaneIsometry> neighbor_isometries(const IntMat2& basis) {
    if (det(basis) <= 0) throw NonPositiveDeterminant{};
    std::vector<PlaneIsometry> out;
    out.reserve(9);
    out.push_back({1, {Int(0), Int(0)}});
    out.push_back({1, Int(2) * basis.col1});
    out.push_back({1, Int(-2) * basis.col1});
    for (const DotIndex& dot : kAllDots) out.push_back({-1, Int(2) * dot.coords(basis)});
    return out;
}

struct Violation {
    std::string code;
    std::string message;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool valid() const { return violations.empty(); }
};

namespace detail {

inline std::string push_name(const GreenSegment& seg) {
    return "push[" + std::to_string(seg.initial.i) + "," + std::to_string(seg.initial.j) + "]";
}

}  // namespace detail

// Validation, in order: (a) det >= 2; (b) terminals inside the closed
// fundamental domain; (c) the four initial dots cover the four parity
// classes once each; (d) distinct arcs are disjoint in the quotient;
// (e) an arc meets its own gamma-images only at gamma-fixed endpoints.
// All geometry is exact integer/rational arithmetic.
inline ValidationReport validate(const PresentationDiagram& diagram) {
    ValidationReport report;
    Int d = det(diagram.basis);
    if (d <= 0) {
        report.violations.push_back(
            {"nonpositive_determinant", "det(basis) = " + d.str() + " must be positive"});
        return report;  // no fundamental domain to test against
    }
    if (d < 2) {
        report.violations.push_back(
            {"degree_below_two", "det(basis) = " + d.str() + " but the degree must be >= 2"});
    }

    for (const GreenSegment& seg : diagram.pushes) {
        if (!in_fundamental_domain(diagram.basis, seg.terminal)) {
            report.violations.push_back(
                {"terminal_outside_domain",
                 detail::push_name(seg) + " terminal " + to_string(seg.terminal) +
                     " lies outside the closed fundamental domain"});
        }
    }

    std::array<int, 4> class_count{};
    for (const GreenSegment& seg : diagram.pushes) {
        Parity p = seg.initial.parity();
        ++class_count[2 * p.c1 + p.c2];
    }
    for (int c1 = 0; c1 < 2; ++c1) {
        for (int c2 = 0; c2 < 2; ++c2) {
            int count = class_count[2 * c1 + c2];
            if (count != 1) {
                report.violations.push_back(
                    {"parity_class_coverage",
                     "parity class (" + std::to_string(c1) + "," + std::to_string(c2) + ") has " +
                         std::to_string(count) + " pushes, expected exactly 1"});
            }
        }
    }

    auto endpoints = [&](const GreenSegment& seg) {
        return std::pair<IntVec2, IntVec2>{seg.initial.coords(diagram.basis), seg.terminal};
    };
    std::vector<PlaneIsometry> gammas = neighbor_isometries(diagram.basis);

    for (std::size_t i = 0; i < diagram.pushes.size(); ++i) {
        for (std::size_t j = i + 1; j < diagram.pushes.size(); ++j) {
            auto [a0, a1] = endpoints(diagram.pushes[i]);
            auto [b0, b1] = endpoints(diagram.pushes[j]);
            for (std::size_t g = 0; g < gammas.size(); ++g) {
                if (segments_touch(a0, a1, gammas[g](b0), gammas[g](b1))) {
                    report.violations.push_back(
                        {"arc_pair_intersection",
                         detail::push_name(diagram.pushes[i]) + " meets image " +
                             std::to_string(g) + " of " + detail::push_name(diagram.pushes[j]) +
                             " in the quotient"});
                    break;  // one report per pair
                }
            }
        }
    }

    for (const GreenSegment& seg : diagram.pushes) {
        auto [a0, a1] = endpoints(seg);
        for (std::size_t g = 1; g < gammas.size(); ++g) {
            const PlaneIsometry& gamma = gammas[g];
            SegmentMeet meet = segment_intersection(a0, a1, gamma(a0), gamma(a1));
            if (meet.kind == SegmentMeet::Kind::empty) continue;
            bool allowed = false;
            if (meet.kind == SegmentMeet::Kind::point && gamma.sgn < 0) {
                RatVec2 center = to_rat(gamma.rotation_center());
                allowed = meet.point == center &&
                          (meet.point == to_rat(a0) || meet.point == to_rat(a1));
            }
            if (!allowed) {
                report.violations.push_back(
                    {"arc_self_intersection",
                     detail::push_name(seg) + " meets its own image " + std::to_string(g) +
                         " away from a fixed endpoint"});
                break;
            }
        }
    }

    return report;
}

}  // namespace netpres

#pragma once

#include "netpres/vec.hpp"

#include <algorithm>

namespace netpres {

// Sign of the signed area of (a, b, c): +1 left turn, -1 right, 0 collinear.
inline int orient(const IntVec2& a, const IntVec2& b, const IntVec2& c) {
    return sign(cross(b - a, c - a));
}

inline bool collinear(const IntVec2& a, const IntVec2& b, const IntVec2& c) {
    return orient(a, b, c) == 0;
}

// p on the closed segment [a, b] (segment may be degenerate).
inline bool on_segment(const IntVec2& p, const IntVec2& a, const IntVec2& b) {
    if (!collinear(a, b, p)) return false;
    return dot(p - a, p - b) <= 0;
}

// Exact intersection of two closed segments with integer endpoints. The
// intersection of such segments is empty, a single rational point, or a
// nondegenerate subsegment; callers only ever need the point in the single
// case.
struct SegmentMeet {
    enum class Kind { empty, point, overlap };
    Kind kind = Kind::empty;
    RatVec2 point{};  // set iff kind == point
};

inline SegmentMeet segment_intersection(const IntVec2& p, const IntVec2& q,
                                        const IntVec2& r, const IntVec2& s) {
    using Kind = SegmentMeet::Kind;
    IntVec2 dpq = q - p;
    IntVec2 drs = s - r;

    if (dpq.is_zero() && drs.is_zero()) {
        if (p == r) return {Kind::point, to_rat(p)};
        return {};
    }
    if (dpq.is_zero()) {
        if (on_segment(p, r, s)) return {Kind::point, to_rat(p)};
        return {};
    }
    if (drs.is_zero()) {
        if (on_segment(r, p, q)) return {Kind::point, to_rat(r)};
        return {};
    }

    Int denom = cross(dpq, drs);
    if (denom != 0) {
        // Lines meet in one point; check it lies on both parameter ranges.
        Int tn = cross(r - p, drs);
        Int un = cross(r - p, dpq);
        auto in_range = [&](const Int& num) {
            if (denom > 0) return num >= 0 && num <= denom;
            return num <= 0 && num >= denom;
        };
        if (!in_range(tn) || !in_range(un)) return {};
        Rat t = make_rat(tn, denom);
        return {Kind::point, {Rat(p.x) + t * Rat(dpq.x), Rat(p.y) + t * Rat(dpq.y)}};
    }

    if (cross(dpq, r - p) != 0) return {};  // parallel, distinct lines

    // Collinear: compare scalar positions along dpq.
    Int len = dot(dpq, dpq);
    Int a0 = 0, a1 = len;
    Int b0 = dot(r - p, dpq), b1 = dot(s - p, dpq);
    if (b0 > b1) std::swap(b0, b1);
    Int lo = std::max(a0, b0), hi = std::min(a1, b1);
    if (lo > hi) return {};
    if (lo == hi) {
        Rat t = make_rat(lo, len);
        return {Kind::point, {Rat(p.x) + t * Rat(dpq.x), Rat(p.y) + t * Rat(dpq.y)}};
    }
    return {Kind::overlap, {}};
}

inline bool segments_touch(const IntVec2& p, const IntVec2& q, const IntVec2& r,
                           const IntVec2& s) {
    return segment_intersection(p, q, r, s).kind != SegmentMeet::Kind::empty;
}

// Coordinates (s, t) of p in the frame (2*lambda1, lambda2), so the closed
// fundamental domain F1 is exactly 0 <= s <= 1, 0 <= t <= 1.
inline RatVec2 domain_coords(const IntMat2& basis, const IntVec2& p) {
    IntMat2 frame{Int(2) * basis.col1, basis.col2};
    return solve(frame, p);
}

inline bool in_fundamental_domain(const IntMat2& basis, const IntVec2& p) {
    RatVec2 st = domain_coords(basis, p);
    return st.x >= 0 && st.x <= 1 && st.y >= 0 && st.y <= 1;
}

}  // namespace netpres

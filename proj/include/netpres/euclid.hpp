#pragma once

#include "netpres/diagram.hpp"

#include <string>

namespace netpres {

struct SingularInput final : std::domain_error {
    SingularInput() : std::domain_error("slope data matrix is singular") {}
};

struct NonIntegralResult final : std::domain_error {
    NonIntegralResult() : std::domain_error("slope data is inconsistent: inverse is not integral") {}
};

// A reduced fraction p/q in Q union {infinity}, measured in the
// (lambda1, lambda2) basis: slope p/q names the direction q*lambda1 +
// p*lambda2. Normal form: gcd(p, q) = 1, q >= 0, infinity = (1, 0).
struct ExtendedSlope {
    Int p;
    Int q;

    static ExtendedSlope make(Int p, Int q) {
        if (p == 0 && q == 0) throw ZeroVector{};
        if (q == 0) return {Int(1), Int(0)};
        Int g = gcd(abs(p), abs(q));
        p /= g;
        q /= g;
        if (q < 0) return {-p, -q};
        return {p, q};
    }
    static ExtendedSlope infinity() { return {Int(1), Int(0)}; }
    static ExtendedSlope zero() { return {Int(0), Int(1)}; }

    bool is_infinity() const { return q == 0; }

    friend bool operator==(const ExtendedSlope&, const ExtendedSlope&) = default;
};

inline std::string to_string(const ExtendedSlope& s) {
    if (s.is_infinity()) return "inf";
    if (s.q == 1) return s.p.str();
    return s.p.str() + "/" + s.q.str();
}

// The affine map x -> Ax + b determined by a diagram; linear iff the
// selector is (0, 0).
struct Affine {
    IntMat2 a;
    IntVec2 b;

    friend bool operator==(const Affine&, const Affine&) = default;
};

inline IntVec2 selector_point(const PresentationDiagram& diagram) {
    return Int(diagram.selector.c1) * diagram.basis.col1 +
           Int(diagram.selector.c2) * diagram.basis.col2;
}

inline Affine affine_of(const PresentationDiagram& diagram) {
    return {diagram.basis, selector_point(diagram)};
}

inline Int degree(const PresentationDiagram& diagram) { return det(diagram.basis); }

struct SlopePullback {
    ExtendedSlope slope;
    Int local_degree;

    friend bool operator==(const SlopePullback&, const SlopePullback&) = default;
};

// Pullback of the slope-s curve under the Euclidean map with matrix a: the
// preimage components share one slope s' and one covering degree d. With
// u = (q, p), the primitive part of a^{-1} u is (q', p') and d is the
// scaling factor, which always divides det(a).
inline SlopePullback preimage_slope(const IntMat2& a, const ExtendedSlope& s) {
    RatVec2 w = solve(a, IntVec2{s.q, s.p});
    PrimitivePart prim = primitive_part(w);
    Int d = numerator(prim.k) / denominator(prim.k);
    return {ExtendedSlope::make(prim.v.y, prim.v.x), d};
}

// Reconstruction of the presentation matrix from the pullbacks of slopes 0
// and infinity: invert [[q/d, s/e], [p/d, r/e]] after fixing its determinant
// sign. The result is pinned to a canonical global sign: positive top-left
// entry, falling back to a positive first nonzero entry of column one.
inline IntMat2 matrix_from_pullback_data(const ExtendedSlope& pullback_of_zero, const Int& d,
                                         const ExtendedSlope& pullback_of_infinity, const Int& e) {
    RatMat2 m{{make_rat(pullback_of_zero.q, d), make_rat(pullback_of_zero.p, d)},
              {make_rat(pullback_of_infinity.q, e), make_rat(pullback_of_infinity.p, e)}};
    Rat dm = det(m);
    if (dm == 0) throw SingularInput{};
    if (dm < 0) {
        m.col2 = -m.col2;
        dm = -dm;
    }
    RatMat2 inv = adjugate(m);
    IntMat2 out;
    auto entry = [&](const Rat& num) {
        Rat value = num / dm;
        if (!is_integer(value)) throw NonIntegralResult{};
        return numerator(value);
    };
    out = {{entry(inv.col1.x), entry(inv.col1.y)}, {entry(inv.col2.x), entry(inv.col2.y)}};
    int lead = sign(out.a()) != 0 ? sign(out.a()) : sign(out.c());
    if (lead < 0) out = -out;
    return out;
}

}  // namespace netpres

#pragma once

#include "netpres/vec.hpp"

#include <utility>

namespace netpres {

struct ZeroVector final : std::domain_error {
    ZeroVector() : std::domain_error("zero vector has no primitive part") {}
};

// Elementary divisors (m, n) of an integer matrix, under the convention
// n | m with m * n = |det|. This is the reverse of the usual Smith ordering;
// fundamental domains drawn with the long divisor first come out wider than
// tall.
struct Divisors {
    Int m;
    Int n;

    friend bool operator==(const Divisors&, const Divisors&) = default;
};

inline Divisors elementary_divisors(const IntMat2& mat) {
    Int d = det(mat);
    if (d == 0) throw SingularMatrix{};
    Int n = gcd(gcd(abs(mat.a()), abs(mat.b())), gcd(abs(mat.c()), abs(mat.d())));
    return {abs(d) / n, n};
}

namespace detail {

// Accumulates row operations on w and its transform u (left factor), or
// column operations via the transposed call pattern below.
struct SmithState {
    IntMat2 w;
    IntMat2 u = IntMat2::identity();  // row ops: u * m = w
    IntMat2 v = IntMat2::identity();  // col ops: m * v = w

    // rows: (row_i, row_j) <- (p*row_i + q*row_j, r*row_i + s*row_j)
    void row_op(const Int& p, const Int& q, const Int& r, const Int& s) {
        auto apply = [&](IntMat2& m) {
            Int a = p * m.col1.x + q * m.col1.y, c = r * m.col1.x + s * m.col1.y;
            Int b = p * m.col2.x + q * m.col2.y, d = r * m.col2.x + s * m.col2.y;
            m = IntMat2::from_rows(a, b, c, d);
        };
        apply(w);
        apply(u);
    }

    void col_op(const Int& p, const Int& q, const Int& r, const Int& s) {
        auto apply = [&](IntMat2& m) {
            IntVec2 c1 = p * m.col1 + q * m.col2;
            IntVec2 c2 = r * m.col1 + s * m.col2;
            m = {c1, c2};
        };
        apply(w);
        apply(v);
    }
};

// Extended gcd: returns (g, x, y) with x*a + y*b = g >= 0.
inline std::tuple<Int, Int, Int> ext_gcd(Int a, Int b) {
    Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        Int q = a / b;
        a -= q * b;
        std::swap(a, b);
        Int t = x0 - q * x1;
        x0 = x1;
        x1 = t;
        t = y0 - q * y1;
        y0 = y1;
        y1 = t;
    }
    if (a < 0) return {-a, -x0, -y0};
    return {a, x0, y0};
}

}  // namespace detail

// Smith decomposition M = P * diag(m, n) * Q with det(P) = det(Q) = 1 and
// (m, n) the elementary divisors above. Requires det(M) > 0. The sign
// surplus of the plain reduction is absorbed by negating one column of P
// together with the matching row of Q.
inline std::pair<IntMat2, IntMat2> smith_decomposition(const IntMat2& mat) {
    if (det(mat) <= 0) throw NonPositiveDeterminant{};

    detail::SmithState st{mat};
    for (;;) {
        // Clear below and right of the pivot. A plain elimination never
        // touches the opposite off-diagonal entry; the gcd step strictly
        // shrinks the pivot, so the sweep terminates.
        while (st.w.col1.y != 0 || st.w.col2.x != 0) {
            if (st.w.col1.y != 0) {
                if (st.w.a() != 0 && st.w.c() % st.w.a() == 0) {
                    st.row_op(Int(1), Int(0), -(st.w.c() / st.w.a()), Int(1));
                } else {
                    auto [g, x, y] = detail::ext_gcd(st.w.a(), st.w.c());
                    st.row_op(x, y, -(st.w.c() / g), st.w.a() / g);
                }
            }
            if (st.w.col2.x != 0) {
                if (st.w.a() != 0 && st.w.b() % st.w.a() == 0) {
                    st.col_op(Int(1), Int(0), -(st.w.b() / st.w.a()), Int(1));
                } else {
                    auto [g, x, y] = detail::ext_gcd(st.w.a(), st.w.b());
                    st.col_op(x, y, -(st.w.b() / g), st.w.a() / g);
                }
            }
        }
        bool small_first = st.w.a() != 0 && st.w.d() % st.w.a() == 0;
        bool big_first = st.w.d() != 0 && st.w.a() % st.w.d() == 0;
        if (small_first || big_first) break;
        // Pull the second divisor into the first column and rerun the sweep;
        // the next gcd step strictly shrinks the pivot.
        st.col_op(Int(1), Int(1), Int(0), Int(1));
    }
    if (st.w.a() < 0) st.row_op(Int(-1), Int(0), Int(0), Int(1));
    if (st.w.d() < 0) st.row_op(Int(1), Int(0), Int(0), Int(-1));

    // u * M * v is diagonal; rewrite as M = P * diag(m, n) * Q, inserting a
    // swap when the small divisor came out on top.
    IntMat2 p = unimodular_inverse(st.u);
    IntMat2 q = unimodular_inverse(st.v);
    if (st.w.d() % st.w.a() == 0 && st.w.a() != st.w.d()) {
        IntMat2 swap = IntMat2::from_rows(Int(0), Int(1), Int(1), Int(0));
        p = p * swap;
        q = swap * q;
    }
    if (det(p) < 0) {
        IntMat2 flip = IntMat2::diagonal(Int(1), Int(-1));
        p = p * flip;
        q = flip * q;
    }
    return {p, q};
}

// Shortest integer vector on the ray through w: v primitive with k*w = +-v,
// k > 0 rational. The sign of v is normalized so its first nonzero
// coordinate is positive.
struct PrimitivePart {
    IntVec2 v;
    Rat k;
};

inline PrimitivePart primitive_part(const RatVec2& w) {
    if (w.x == 0 && w.y == 0) throw ZeroVector{};
    Int common = lcm(denominator(w.x), denominator(w.y));
    IntVec2 u{numerator(w.x) * (common / denominator(w.x)),
              numerator(w.y) * (common / denominator(w.y))};
    Int g = gcd(abs(u.x), abs(u.y));
    IntVec2 v{u.x / g, u.y / g};
    if (v.x < 0 || (v.x == 0 && v.y < 0)) v = -v;
    return {v, make_rat(common, g)};
}

// A point of the quotient sphere R^2 / {x -> +-x + 2*Lambda_1}, held as the
// canonical class representative produced by sphere_reduce.
struct SpherePoint {
    IntVec2 rep;
    IntMat2 basis;

    friend bool operator==(const SpherePoint&, const SpherePoint&) = default;
    friend bool operator<(const SpherePoint& a, const SpherePoint& b) { return a.rep < b.rep; }
};

namespace detail {

// Translate mu by 2*Lambda_1 so its basis coordinates land in [0, 2)^2.
inline IntVec2 fold_translations(const IntVec2& mu, const IntMat2& basis) {
    RatVec2 t = solve(basis, mu);
    IntVec2 f{rat_floor(t.x / 2), rat_floor(t.y / 2)};
    return mu - Int(2) * (basis * f);
}

}  // namespace detail

// Canonical representative of mu under x -> +-x + 2*Lambda_1, Lambda_1 the
// column lattice of basis: fold both mu and -mu into the half-open cell and
// keep the lexicographically smaller result.
inline SpherePoint sphere_reduce(const IntVec2& mu, const IntMat2& basis) {
    if (det(basis) <= 0) throw NonPositiveDeterminant{};
    IntVec2 a = detail::fold_translations(mu, basis);
    IntVec2 b = detail::fold_translations(-mu, basis);
    return {a <= b ? a : b, basis};
}

}  // namespace netpres

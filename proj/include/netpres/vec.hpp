#pragma once

#include "netpres/numeric.hpp"

#include <compare>
#include <string>

namespace netpres {

template <typename T>
struct Vec2 {
    T x{};
    T y{};

    friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
    friend Vec2 operator*(const T& k, const Vec2& a) { return {k * a.x, k * a.y}; }
    friend bool operator==(const Vec2&, const Vec2&) = default;
    // Lexicographic by (x, y); used wherever a deterministic pick is needed.
    friend bool operator<(const Vec2& a, const Vec2& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }
    friend bool operator<=(const Vec2& a, const Vec2& b) { return !(b < a); }

    bool is_zero() const { return x == 0 && y == 0; }
};

using IntVec2 = Vec2<Int>;
using RatVec2 = Vec2<Rat>;

template <typename T>
T cross(const Vec2<T>& a, const Vec2<T>& b) {
    return a.x * b.y - a.y * b.x;
}

template <typename T>
T dot(const Vec2<T>& a, const Vec2<T>& b) {
    return a.x * b.x + a.y * b.y;
}

inline RatVec2 to_rat(const IntVec2& v) { return {Rat(v.x), Rat(v.y)}; }

// A 2x2 integer matrix stored as columns. Used as a presentation matrix
// A = [lambda1, lambda2], with col1 = lambda1 and col2 = lambda2.
template <typename T>
struct Mat2 {
    Vec2<T> col1{};
    Vec2<T> col2{};

    static Mat2 identity() { return {{T(1), T(0)}, {T(0), T(1)}}; }
    static Mat2 from_rows(T a, T b, T c, T d) { return {{a, c}, {b, d}}; }
    static Mat2 diagonal(T a, T d) { return {{a, T(0)}, {T(0), d}}; }

    // Row-major entry accessors: [[a, b], [c, d]].
    const T& a() const { return col1.x; }
    const T& b() const { return col2.x; }
    const T& c() const { return col1.y; }
    const T& d() const { return col2.y; }

    friend Vec2<T> operator*(const Mat2& m, const Vec2<T>& v) {
        return v.x * m.col1 + v.y * m.col2;
    }
    friend Mat2 operator*(const Mat2& m, const Mat2& n) {
        return {m * n.col1, m * n.col2};
    }
    friend Mat2 operator-(const Mat2& m) { return {-m.col1, -m.col2}; }
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

using IntMat2 = Mat2<Int>;
using RatMat2 = Mat2<Rat>;

template <typename T>
T det(const Mat2<T>& m) {
    return cross(m.col1, m.col2);
}

// adj(M) * M = det(M) * I.
template <typename T>
Mat2<T> adjugate(const Mat2<T>& m) {
    return Mat2<T>::from_rows(m.d(), -m.b(), -m.c(), m.a());
}

inline RatMat2 to_rat(const IntMat2& m) { return {to_rat(m.col1), to_rat(m.col2)}; }

struct SingularMatrix final : std::domain_error {
    SingularMatrix() : std::domain_error("matrix is singular") {}
};

struct NonPositiveDeterminant final : std::domain_error {
    NonPositiveDeterminant() : std::domain_error("determinant is not positive") {}
};

// Exact solution of M x = v.
inline RatVec2 solve(const IntMat2& m, const IntVec2& v) {
    Int d = det(m);
    if (d == 0) throw SingularMatrix{};
    IntVec2 w = adjugate(m) * v;
    return {make_rat(w.x, d), make_rat(w.y, d)};
}

// Inverse of a matrix with det = +-1, which stays integral.
inline IntMat2 unimodular_inverse(const IntMat2& m) {
    Int d = det(m);
    IntMat2 adj = adjugate(m);
    if (d == 1) return adj;
    if (d == -1) return -adj;
    throw SingularMatrix{};
}

inline std::string to_string(const IntVec2& v) {
    return "(" + v.x.str() + ", " + v.y.str() + ")";
}

inline std::string to_string(const IntMat2& m) {
    return "[[" + m.a().str() + ", " + m.b().str() + "], [" + m.c().str() + ", " +
           m.d().str() + "]]";
}

}  // namespace netpres

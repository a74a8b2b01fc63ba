#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace netpres {

// Arbitrary-precision integers and rationals. Twisting a diagram can grow
// matrix entries without bound, so fixed-width arithmetic is off the table.
// Expression templates are disabled so the types behave like plain values.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;
using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

inline int sign(const Int& v) { return v.sign(); }
inline int sign(const Rat& v) { return v.sign(); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// The two-argument rational constructor insists on a positive denominator.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    if (den < 0) return Rat(-num, -den);
    return Rat(num, den);
}

// floor(a / b) for b > 0.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && a.sign() < 0) --q;
    return q;
}

// cpp_rational keeps denominators positive, so this is plain floor.
inline Int rat_floor(const Rat& r) { return floor_div(numerator(r), denominator(r)); }

// Euclidean remainder in {0, 1} of an integer mod 2.
inline int parity_of(const Int& v) { return static_cast<int>(abs(v % 2)); }

inline std::string to_string(const Int& v) { return v.str(); }

inline std::string to_string(const Rat& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace netpres

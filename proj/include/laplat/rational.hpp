/**
 * Exact number types and small helpers shared across the library.
 *
 * Lattice point coordinates are plain 64-bit integers: every guarded
 * operation keeps coordinates far below the overflow range. Determinants
 * and Hermite normal forms go through arbitrary-precision integers, and
 * all geometry is done with exact rationals.
 */

#ifndef LAPLAT_RATIONAL_HPP
#define LAPLAT_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>
#include <boost/multiprecision/cpp_int.hpp>

namespace laplat {

using Int = long long;
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IVec = std::vector<Int>;
using IMat = std::vector<IVec>;
using RVec = std::vector<Rat>;
using RMat = std::vector<RVec>;

inline BigInt rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

/// Formats a rational as "num/den" ("num" when the denominator is 1).
std::string rat_to_string(const Rat& r);

/// Parses "num/den" or a plain integer string.
Rat rat_from_string(const std::string& s);

/// True if r is an integer.
inline bool rat_is_integer(const Rat& r) { return rat_den(r) == 1; }

/// Floor of a rational as a big integer.
BigInt rat_floor(const Rat& r);

inline Int to_int_checked(const BigInt& v) {
    if (v > BigInt(INT64_MAX) || v < BigInt(INT64_MIN))
        throw std::overflow_error("integer out of 64-bit range");
    return static_cast<Int>(v);
}

inline RVec to_rvec(const IVec& v) {
    RVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i];
    return r;
}

inline Rat vec_sum(const RVec& v) {
    Rat s = 0;
    for (const Rat& x : v) s += x;
    return s;
}

inline Int vec_sum(const IVec& v) {
    Int s = 0;
    for (Int x : v) s += x;
    return s;
}

}  // namespace laplat

#endif  // LAPLAT_RATIONAL_HPP

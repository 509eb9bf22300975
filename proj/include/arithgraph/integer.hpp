#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace arithgraph {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& v) { return v.get_str(); }

// Throws std::invalid_argument on malformed input.
Integer parse_integer(const std::string& text);

inline bool fits_int64(const Integer& v) {
    static const Integer lo(std::to_string(INT64_MIN));
    static const Integer hi(std::to_string(INT64_MAX));
    return v >= lo && v <= hi;
}

std::optional<std::int64_t> to_int64(const Integer& v);

inline Integer make_integer(std::int64_t v) {
    Integer r;
    if (v >= INT32_MIN && v <= INT32_MAX) {
        r = static_cast<long>(v);
    } else {
        r = Integer(std::to_string(v));
    }
    return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer abs_value(const Integer& a) { return a < 0 ? Integer(-a) : a; }

Integer gcd_of(const std::vector<Integer>& values);

std::vector<Integer> to_integers(const std::vector<std::int64_t>& values);

}  // namespace arithgraph

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace spanhyper {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt big_binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;  // exact: result is always an integer binomial prefix
    }
    return result;
}

inline std::uint64_t binomial_u64(std::int64_t n, std::int64_t k) {
    BigInt b = big_binomial(n, k);
    if (b > BigInt(UINT64_MAX)) throw std::overflow_error("binomial exceeds 64 bits");
    return b.convert_to<std::uint64_t>();
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline std::string to_string(const Rational& q) { return q.str(); }

inline std::string to_string(const BigInt& b) { return b.str(); }

// Accepts "a/b", plain integers, and decimal literals like "0.05" (read exactly).
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            BigInt num(s.substr(0, slash));
            BigInt den(s.substr(slash + 1));
            if (den == 0) throw std::invalid_argument("zero denominator");
            return Rational(num, den);
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) return Rational(BigInt(s));
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac_len = s.size() - dot - 1;
        BigInt den = 1;
        for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
        return Rational(BigInt(digits), den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

}  // namespace spanhyper

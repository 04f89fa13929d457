#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace wban {

using BigInt = boost::multiprecision::cpp_int;

/// C(n, k); zero when k < 0 or k > n.
BigInt binomial(long n, long k);

/// C(n, k) in 64 bits; throws std::overflow_error if it does not fit.
std::uint64_t binomial_u64(int n, int k);

/// Ceiling of a / b for b > 0.
BigInt ceil_div(const BigInt& a, const BigInt& b);

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace wban

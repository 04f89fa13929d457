#include "wban/exact.hpp"

#include <limits>
#include <stdexcept>

namespace wban {

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt acc = 1;
  for (long i = 1; i <= k; ++i) {
    acc *= n - k + i;
    acc /= i;
  }
  return acc;
}

std::uint64_t binomial_u64(int n, int k) {
  const BigInt v = binomial(n, k);
  if (v > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("binomial exceeds 64 bits");
  return static_cast<std::uint64_t>(v);
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  if (b <= 0) throw std::domain_error("ceil_div needs a positive divisor");
  BigInt q = a / b;
  if (q * b < a) ++q;
  return q;
}

}  // namespace wban

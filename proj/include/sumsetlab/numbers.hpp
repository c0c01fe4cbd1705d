#pragma once
// Integer helpers shared across the library: overflow-checked 64-bit
// arithmetic (overflow is always a hard error, never wraparound) and the
// trial-division factoring used to classify multipliers.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace sumsetlab {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("64-bit overflow: " + std::to_string(a) + " + " +
                              std::to_string(b));
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("64-bit overflow: " + std::to_string(a) + " * " +
                              std::to_string(b));
  return r;
}

inline std::int64_t checked_neg(std::int64_t a) {
  if (a == INT64_MIN) throw std::overflow_error("64-bit overflow: -INT64_MIN");
  return -a;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("64-bit overflow: " + std::to_string(a) + " - " +
                              std::to_string(b));
  return r;
}

// mathematical mod: result in [0, k) for any sign of x
inline std::int64_t mod_floor(std::int64_t x, std::int64_t k) {
  std::int64_t r = x % k;
  return r < 0 ? r + k : r;
}

struct PrimeFactor {
  std::int64_t prime;
  int exponent;
};

// trial division; fine for the multiplier ranges this library works at
inline std::vector<PrimeFactor> factorize(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("factorize: n must be >= 2");
  std::vector<PrimeFactor> out;
  for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  auto f = factorize(n);
  return f.size() == 1 && f[0].exponent == 1;
}

// n = p^alpha with alpha >= 1; reports p and alpha on request
inline bool is_prime_power(std::int64_t n, std::int64_t* p = nullptr,
                           int* alpha = nullptr) {
  if (n < 2) return false;
  auto f = factorize(n);
  if (f.size() != 1) return false;
  if (p) *p = f[0].prime;
  if (alpha) *alpha = f[0].exponent;
  return true;
}

// n = p1 * p2 with p1 < p2 distinct primes
inline bool is_semiprime(std::int64_t n, std::int64_t* p1 = nullptr,
                         std::int64_t* p2 = nullptr) {
  if (n < 2) return false;
  auto f = factorize(n);
  if (f.size() != 2 || f[0].exponent != 1 || f[1].exponent != 1) return false;
  if (p1) *p1 = f[0].prime;
  if (p2) *p2 = f[1].prime;
  return true;
}

}  // namespace sumsetlab

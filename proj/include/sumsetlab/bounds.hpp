#pragma once
// Closed-form lower bounds for |A + k*A|, the multiplier classification
// that selects which bound applies, and the extremal families attaining
// the strongest bound.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sumsetlab/int_set.hpp"
#include "sumsetlab/numbers.hpp"

namespace sumsetlab {

// (k+1)|A| - ceil(k(k+2)/4)
inline std::int64_t chs_bound(std::int64_t k, std::int64_t size) {
  if (k < 1) throw std::invalid_argument("chs_bound: k must be >= 1");
  if (size < 1) throw std::invalid_argument("chs_bound: size must be >= 1");
  const std::int64_t corr = (checked_mul(k, k + 2) + 3) / 4;
  return checked_sub(checked_mul(k + 1, size), corr);
}

// (k+1)|A| - k!, useful below the threshold where it beats nothing but
// holds unconditionally; k! kept exact in 64 bits for k <= 20
inline std::int64_t factorial_bound(std::int64_t k, std::int64_t size) {
  if (k < 2 || k > 20)
    throw std::invalid_argument("factorial_bound: need 2 <= k <= 20");
  if (size < 1)
    throw std::invalid_argument("factorial_bound: size must be >= 1");
  std::int64_t fact = 1;
  for (std::int64_t i = 2; i <= k; ++i) fact = checked_mul(fact, i);
  return checked_sub(checked_mul(k + 1, size), fact);
}

// |A| + j(|B| - 1): j residue classes each contribute |B| - 1 new elements
inline std::int64_t elementary_bound(std::int64_t size_a, std::int64_t j,
                                     std::int64_t size_b) {
  if (size_a < 1 || j < 1 || size_b < 1)
    throw std::invalid_argument("elementary_bound: arguments must be >= 1");
  return checked_add(size_a, checked_mul(j, size_b - 1));
}

// (k-1)^2 * k!: above this size the factorial bound argument bootstraps
inline std::int64_t threshold(std::int64_t k) {
  if (k < 2 || k > 20)
    throw std::invalid_argument("threshold: need 2 <= k <= 20");
  std::int64_t fact = 1;
  for (std::int64_t i = 2; i <= k; ++i) fact = checked_mul(fact, i);
  return checked_mul(checked_mul(k - 1, k - 1), fact);
}

enum class KClass { prime, prime_power, semiprime, other };

inline KClass classify_k(std::int64_t k) {
  if (k < 2) throw std::invalid_argument("classify_k: k must be >= 2");
  const std::vector<PrimeFactor> f = factorize(k);
  if (f.size() == 1) return f[0].exponent == 1 ? KClass::prime
                                               : KClass::prime_power;
  if (f.size() == 2 && f[0].exponent == 1 && f[1].exponent == 1)
    return KClass::semiprime;
  return KClass::other;
}

inline const char* to_string(KClass c) {
  switch (c) {
    case KClass::prime: return "prime";
    case KClass::prime_power: return "prime_power";
    case KClass::semiprime: return "semiprime";
    case KClass::other: return "other";
  }
  return "?";
}

// block lengths h for which k*{0..n} + {0..h-1} meets the strongest bound
// with equality: k/2 and (k+2)/2 for even k, (k+1)/2 for odd k
inline std::vector<std::int64_t> extremal_h_options(std::int64_t k) {
  if (k < 2) throw std::invalid_argument("extremal_h_options: k must be >= 2");
  if (k % 2 == 0) return {k / 2, (k + 2) / 2};
  return {(k + 1) / 2};
}

struct ExtremalFamily {
  std::int64_t k = 0;
  std::int64_t n = 0;
  std::int64_t h = 0;
  IntSet set;  // k*{0..n} + {0..h-1}
};

inline ExtremalFamily build_extremal(std::int64_t k, std::int64_t n,
                                     std::int64_t h) {
  if (k < 2) throw std::invalid_argument("build_extremal: k must be >= 2");
  if (h < 1 || h > k)
    throw std::invalid_argument("build_extremal: need 1 <= h <= k");
  if (n < 0) throw std::invalid_argument("build_extremal: n must be >= 0");
  ExtremalFamily fam{k, n, h, {}};
  std::vector<std::int64_t> v;
  v.reserve(static_cast<std::size_t>((n + 1) * h));
  for (std::int64_t q = 0; q <= n; ++q)
    for (std::int64_t r = 0; r < h; ++r)
      v.push_back(checked_add(checked_mul(k, q), r));
  fam.set = IntSet::from_sorted_unique(std::move(v));
  return fam;
}

struct ExtremalEquality {
  std::int64_t lhs = 0;  // |S + k*S| computed from the family
  std::int64_t rhs = 0;
  bool equal = false;
  bool rhs_is_chs = false;  // whether rhs came from the strongest bound
};

// in the regime n >= k - h the family attains exactly (k+1)|S| - h(k+1-h);
// for the h in extremal_h_options the correction h(k+1-h) equals the
// strongest bound's ceil(k(k+2)/4), so those families are tight for it
inline ExtremalEquality check_extremal_equality(const ExtremalFamily& fam) {
  if (fam.n < fam.k - fam.h)
    throw std::invalid_argument(
        "check_extremal_equality: need n >= k - h for the closed form");
  ExtremalEquality eq;
  eq.lhs = static_cast<std::int64_t>(
      add_dilated_size(fam.set, fam.k, fam.set));
  const std::int64_t size = static_cast<std::int64_t>(fam.set.size());
  for (std::int64_t opt : extremal_h_options(fam.k))
    if (opt == fam.h) eq.rhs_is_chs = true;
  eq.rhs = eq.rhs_is_chs
               ? chs_bound(fam.k, size)
               : checked_sub(checked_mul(fam.k + 1, size),
                             fam.h * (fam.k + 1 - fam.h));
  eq.equal = eq.lhs == eq.rhs;
  return eq;
}

struct BoundReport {
  std::int64_t k = 0;
  std::int64_t size = 0;
  std::int64_t chs = 0;
  bool factorial_defined = false;  // k <= 20 keeps k! in 64 bits
  std::int64_t factorial = 0;
  bool threshold_defined = false;
  std::int64_t threshold_value = 0;
  KClass k_class = KClass::other;
};

inline BoundReport make_bound_report(std::int64_t k, std::int64_t size) {
  if (k < 2) throw std::invalid_argument("make_bound_report: k must be >= 2");
  if (size < 1)
    throw std::invalid_argument("make_bound_report: size must be >= 1");
  BoundReport r;
  r.k = k;
  r.size = size;
  r.chs = chs_bound(k, size);
  if (k <= 20) {
    r.factorial_defined = true;
    r.factorial = factorial_bound(k, size);
    r.threshold_defined = true;
    r.threshold_value = threshold(k);
  }
  r.k_class = classify_k(k);
  return r;
}

}  // namespace sumsetlab

#pragma once
// Residue-class decomposition of a set A relative to a multiplier k:
// A splits into classes A_i = k*X_i + u_i (offsets u_i distinct mod k),
// ordered by decreasing class size with ties broken by ascending offset.
// On top of the decomposition sit the per-class difference sets
// D_rs = (A_r + k*A) \ (A_r + k*A_s) and the checkable class-wise lower
// bounds for prime-power, semiprime and k=4 multipliers.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sumsetlab/int_set.hpp"
#include "sumsetlab/numbers.hpp"
#include "sumsetlab/residue_set.hpp"

namespace sumsetlab {

struct ResidueClass {
  std::int64_t offset = 0;  // u_i in [0, k)
  IntSet quotient;          // X_i, so the class elements are k*X_i + u_i
};

struct Decomposition {
  std::int64_t k = 0;
  IntSet base;                        // the decomposed set
  std::vector<ResidueClass> classes;  // size desc, offset asc
  std::vector<std::size_t> proper;    // E: 1-based i with |proj(X_i)| < k
  std::vector<std::size_t> full;      // F: 1-based i with |proj(X_i)| = k

  std::size_t j() const { return classes.size(); }

  IntSet class_elements(std::size_t i) const {  // 1-based
    const ResidueClass& c = classes.at(i - 1);
    return translate(dilate(k, c.quotient), c.offset);
  }
};

inline Decomposition decompose(const IntSet& a, std::int64_t k) {
  if (k < 2) throw std::invalid_argument("decompose: k must be >= 2");
  if (a.empty()) throw std::invalid_argument("decompose: set is empty");
  std::map<std::int64_t, std::vector<std::int64_t>> by_offset;
  for (std::int64_t x : a) {
    const std::int64_t u = mod_floor(x, k);
    by_offset[u].push_back((x - u) / k);  // exact floor quotient
  }
  Decomposition d;
  d.k = k;
  d.base = a;
  for (auto& [u, q] : by_offset)
    d.classes.push_back({u, IntSet::from_sorted_unique(std::move(q))});
  std::stable_sort(d.classes.begin(), d.classes.end(),
                   [](const ResidueClass& l, const ResidueClass& r) {
                     if (l.quotient.size() != r.quotient.size())
                       return l.quotient.size() > r.quotient.size();
                     return l.offset < r.offset;
                   });
  for (std::size_t i = 1; i <= d.classes.size(); ++i) {
    const std::size_t ps = project(d.classes[i - 1].quotient, k).size();
    (ps == static_cast<std::size_t>(k) ? d.full : d.proper).push_back(i);
  }
  return d;
}

// D_rs = (A_r + k*A) \ (A_r + k*A_s), 1-based class indices
inline IntSet delta(const Decomposition& d, std::size_t r, std::size_t s) {
  if (r < 1 || r > d.j() || s < 1 || s > d.j())
    throw std::invalid_argument("delta: class index out of range");
  const IntSet ar = d.class_elements(r);
  return set_difference(add_dilated(ar, d.k, d.base),
                        add_dilated(ar, d.k, d.class_elements(s)));
}

// ---------------------------------------------------------------------------
// normalization: divide out the gcd, collapse a single class to its
// quotient, translate the minimum to zero; repeat to a fixed point.
// Every step preserves |A + k*A|.

struct NormalizeStep {
  enum class Kind { divide_gcd, replace_by_quotient, translate };
  Kind kind;
  std::int64_t amount;  // gcd divided / offset folded / shift applied
  IntSet after;
  const char* why;
};

struct NormalizeResult {
  IntSet set;
  std::vector<NormalizeStep> steps;
};

inline NormalizeResult normalize(const IntSet& a, std::int64_t k) {
  if (k < 2) throw std::invalid_argument("normalize: k must be >= 2");
  if (a.size() < 2)
    throw std::invalid_argument("normalize: need at least 2 elements");
  NormalizeResult res;
  res.set = a;
  for (;;) {
    if (std::int64_t g = set_gcd(res.set); g > 1) {
      res.set = gcd_normalize(res.set).first;
      res.steps.push_back({NormalizeStep::Kind::divide_gcd, g, res.set,
                           "dilation by 1/g preserves |A+kA|"});
      continue;
    }
    if (Decomposition d = decompose(res.set, k); d.j() == 1) {
      const std::int64_t u = d.classes[0].offset;
      res.set = d.classes[0].quotient;
      res.steps.push_back({NormalizeStep::Kind::replace_by_quotient, u,
                           res.set,
                           "single class: |A+kA| = |X1+kX1| exactly"});
      continue;
    }
    if (res.set.min() != 0) {
      const std::int64_t t = checked_neg(res.set.min());
      res.set = translate(res.set, t);
      res.steps.push_back({NormalizeStep::Kind::translate, t, res.set,
                           "translation preserves |A+kA|"});
      continue;
    }
    return res;
  }
}

// ---------------------------------------------------------------------------
// sumset component identity |A + k*B| = sum_i |X_i + B| and the elementary
// lower bound |A| + j(|B| - 1); when the bound is tight the summands must
// have one of three rigid shapes.

enum class TightShape {
  not_tight,
  singleton_b,         // |B| = 1
  singleton_classes,   // every |X_i| = 1
  common_difference,   // B and all multi-element X_i are APs, same step
  unexplained,         // tight but no shape found: identity violated
};

struct ComponentIdentityReport {
  std::int64_t lhs = 0;  // |a + k*b|
  std::int64_t rhs = 0;  // sum of |X_i + b|
  bool identity_holds = false;
  std::size_t j = 0;
  std::int64_t elementary_rhs = 0;  // |a| + j(|b|-1)
  bool elementary_holds = false;
  TightShape shape = TightShape::not_tight;
};

namespace detail {
// size < 2 counts as an AP with unconstrained step
inline bool is_arithmetic(const IntSet& s, std::int64_t& step) {
  if (s.size() < 2) return true;
  const auto& v = s.values();
  const std::int64_t d = v[1] - v[0];
  for (std::size_t i = 2; i < v.size(); ++i)
    if (v[i] - v[i - 1] != d) return false;
  step = d;
  return true;
}
}  // namespace detail

inline ComponentIdentityReport component_identity_check(const IntSet& a,
                                                        const IntSet& b,
                                                        std::int64_t k) {
  if (a.empty() || b.empty())
    throw std::invalid_argument(
        "component_identity_check: sets must be nonempty");
  const Decomposition d = decompose(a, k);
  ComponentIdentityReport rep;
  rep.j = d.j();
  rep.lhs = static_cast<std::int64_t>(add_dilated_size(a, k, b));
  for (const ResidueClass& c : d.classes)
    rep.rhs = checked_add(rep.rhs,
                          static_cast<std::int64_t>(sumset(c.quotient, b).size()));
  rep.identity_holds = rep.lhs == rep.rhs;
  rep.elementary_rhs =
      checked_add(static_cast<std::int64_t>(a.size()),
                  checked_mul(static_cast<std::int64_t>(d.j()),
                              static_cast<std::int64_t>(b.size()) - 1));
  rep.elementary_holds = rep.lhs >= rep.elementary_rhs;

  if (rep.lhs != rep.elementary_rhs) {
    rep.shape = TightShape::not_tight;
    return rep;
  }
  if (b.size() == 1) {
    rep.shape = TightShape::singleton_b;
    return rep;
  }
  bool all_single = true;
  for (const ResidueClass& c : d.classes)
    if (c.quotient.size() > 1) all_single = false;
  if (all_single) {
    rep.shape = TightShape::singleton_classes;
    return rep;
  }
  std::int64_t step = 0;
  bool ap = detail::is_arithmetic(b, step);
  for (const ResidueClass& c : d.classes) {
    if (!ap) break;
    if (c.quotient.size() < 2) continue;
    std::int64_t s2 = 0;
    if (!detail::is_arithmetic(c.quotient, s2) || s2 != step) ap = false;
  }
  rep.shape = ap ? TightShape::common_difference : TightShape::unexplained;
  return rep;
}

inline const char* to_string(TightShape s) {
  switch (s) {
    case TightShape::not_tight: return "not_tight";
    case TightShape::singleton_b: return "singleton_b";
    case TightShape::singleton_classes: return "singleton_classes";
    case TightShape::common_difference: return "common_difference";
    case TightShape::unexplained: return "unexplained";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// diagonal difference sums: sum over i in I of |D_ii| >= |I| (|I|-1)

struct DeltaSumReport {
  std::int64_t sum = 0;
  std::int64_t bound = 0;
  bool holds = false;
};

inline DeltaSumReport delta_sum_check(const Decomposition& d,
                                      const std::vector<std::size_t>& index_set) {
  DeltaSumReport rep;
  for (std::size_t i : index_set)
    rep.sum += static_cast<std::int64_t>(delta(d, i, i).size());
  const std::int64_t m = static_cast<std::int64_t>(index_set.size());
  rep.bound = m * (m - 1);
  rep.holds = rep.sum >= rep.bound;
  return rep;
}

// least 1-based index whose offset p does not divide; exists whenever the
// base set has gcd 1 (otherwise every offset would be divisible by p)
inline std::size_t special_index(const Decomposition& d, std::int64_t p) {
  for (std::size_t i = 1; i <= d.j(); ++i)
    if (d.classes[i - 1].offset % p != 0) return i;
  throw std::invalid_argument(
      "special_index: every class offset divisible by " + std::to_string(p) +
      " (set not normalized?)");
}

// ---------------------------------------------------------------------------
// class-wise lower-bound checkers.  The bound statements index classes with
// the largest class first *and* its offset equal to zero; when the size
// ordering puts a nonzero offset first the checker first translates the set
// so u_1 = 0 (all quantities involved are translation invariant).

struct BoundCheck {
  std::string label;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;  // for disjunctive bounds: the weakest branch
  bool holds = false;
};

struct ClassBoundReport {
  bool applicable = false;
  std::string skip_reason;       // set when !applicable
  std::int64_t alignment = 0;    // translation applied before checking
  std::vector<BoundCheck> checks;

  bool all_hold() const {
    for (const BoundCheck& c : checks)
      if (!c.holds) return false;
    return true;
  }
};

namespace detail {

// re-decompose after translating so the first (largest) class has offset 0
inline Decomposition align_first_offset(const IntSet& a, std::int64_t k,
                                        std::int64_t& shift) {
  Decomposition d = decompose(a, k);
  shift = 0;
  if (!d.classes.empty() && d.classes[0].offset != 0) {
    shift = checked_neg(d.classes[0].offset);
    d = decompose(translate(a, shift), k);
  }
  return d;
}

inline void push_check(ClassBoundReport& rep, std::string label,
                       std::int64_t lhs, std::int64_t rhs) {
  rep.checks.push_back({std::move(label), lhs, rhs, lhs >= rhs});
}

inline std::int64_t class_size(const Decomposition& d, std::size_t i) {
  return static_cast<std::int64_t>(d.classes[i - 1].quotient.size());
}

inline std::int64_t proj_size(const Decomposition& d, std::size_t i) {
  return static_cast<std::int64_t>(
      project(d.classes[i - 1].quotient, d.k).size());
}

inline bool in_proper(const Decomposition& d, std::size_t i) {
  return std::find(d.proper.begin(), d.proper.end(), i) != d.proper.end();
}

}  // namespace detail

// prime-power multiplier k = p^a: diagonal difference sets of the proper
// classes are at least as large as the special class, and the special class
// obeys a two-regime bound selected by |proj(X_m)| + m - 1 <= k
inline ClassBoundReport prime_power_class_check(const IntSet& a,
                                                std::int64_t k) {
  std::int64_t p = 0;
  if (!is_prime_power(k, &p))
    throw std::invalid_argument(
        "prime_power_class_check: k must be a prime power");
  ClassBoundReport rep;
  Decomposition d = detail::align_first_offset(a, k, rep.alignment);
  if (d.j() < 2) {
    rep.skip_reason = "single residue class";
    return rep;
  }
  if (set_gcd(d.base) != 1) {
    rep.skip_reason = "gcd > 1 (set not normalized)";
    return rep;
  }
  rep.applicable = true;

  const std::size_t m = special_index(d, p);
  const std::int64_t am = detail::class_size(d, m);
  for (std::size_t i : d.proper) {
    if (i == m) continue;
    detail::push_check(rep, "|D" + std::to_string(i) + std::to_string(i) +
                                "| >= |A_m|",
                       static_cast<std::int64_t>(delta(d, i, i).size()), am);
  }
  if (detail::proj_size(d, m) + static_cast<std::int64_t>(m) - 1 <= k) {
    std::int64_t prefix = 0;
    for (std::size_t i = 1; i < m; ++i) prefix += detail::class_size(d, i);
    detail::push_check(rep, "|D_mm| >= |A_1|+...+|A_{m-1}|",
                       static_cast<std::int64_t>(delta(d, m, m).size()),
                       prefix);
  } else {
    const std::int64_t a1 = detail::class_size(d, 1);
    detail::push_check(
        rep, "|X_m+A| >= (k+1)|A_m| + m(|A_1|-|A_m|) - k",
        static_cast<std::int64_t>(
            sumset(d.classes[m - 1].quotient, d.base).size()),
        (k + 1) * am + static_cast<std::int64_t>(m) * (a1 - am) - k);
  }
  return rep;
}

// semiprime multiplier k = p1*p2: case split on gcd(u_2, k)
inline ClassBoundReport semiprime_class_check(const IntSet& a,
                                              std::int64_t k) {
  std::int64_t p1 = 0, p2 = 0;
  if (!is_semiprime(k, &p1, &p2))
    throw std::invalid_argument(
        "semiprime_class_check: k must be a product of two distinct primes");
  ClassBoundReport rep;
  Decomposition d = detail::align_first_offset(a, k, rep.alignment);
  if (d.j() < 2) {
    rep.skip_reason = "single residue class";
    return rep;
  }
  std::int64_t offset_gcd = 0;
  for (const ResidueClass& c : d.classes)
    offset_gcd = std::gcd(offset_gcd, c.offset);
  if (offset_gcd != 1) {
    rep.skip_reason = "offset gcd != 1";
    return rep;
  }
  rep.applicable = true;

  const std::int64_t u2 = d.classes[1].offset;
  if (std::gcd(u2, k) == 1) {
    if (detail::in_proper(d, 2))
      detail::push_check(rep, "|D22| >= |A_1|",
                         static_cast<std::int64_t>(delta(d, 2, 2).size()),
                         detail::class_size(d, 1));
    for (std::size_t i : d.proper) {
      if (i == 2) continue;
      detail::push_check(rep, "|D" + std::to_string(i) + std::to_string(i) +
                                  "| >= |A_2|",
                         static_cast<std::int64_t>(delta(d, i, i).size()),
                         detail::class_size(d, 2));
    }
    return rep;
  }

  // relabel so p1 = gcd(u_2, k); the other prime becomes p2
  if (std::gcd(u2, k) != p1) std::swap(p1, p2);
  const std::size_t n = special_index(d, p1);
  const std::int64_t an = detail::class_size(d, n);
  const std::int64_t a1 = detail::class_size(d, 1);
  const std::int64_t a2 = detail::class_size(d, 2);

  if (detail::in_proper(d, 1))
    detail::push_check(rep, "|D11| >= min(|A_2|, p2*|A_n|)",
                       static_cast<std::int64_t>(delta(d, 1, 1).size()),
                       std::min(a2, p2 * an));
  for (std::size_t i : d.proper) {
    if (i >= 2 && i < n)
      detail::push_check(rep,
                         "|D" + std::to_string(i) + std::to_string(i) +
                             "| >= min(|A_1|, p2*|A_n|)",
                         static_cast<std::int64_t>(delta(d, i, i).size()),
                         std::min(a1, p2 * an));
    else if (i > n)
      detail::push_check(rep, "|D" + std::to_string(i) + std::to_string(i) +
                                  "| >= |A_n|",
                         static_cast<std::int64_t>(delta(d, i, i).size()), an);
  }
  if (detail::in_proper(d, n)) {
    detail::push_check(rep, "|D_nn| >= |A_2|",
                       static_cast<std::int64_t>(delta(d, n, n).size()), a2);
    const std::int64_t xn = detail::proj_size(d, n);
    const std::int64_t xnsum = static_cast<std::int64_t>(
        sumset(d.classes[n - 1].quotient, d.base).size());
    if (xn >= p1 && p1 > p2) {
      detail::push_check(rep, "|X_n+A| >= |A_n| + p1|A_1| - k", xnsum,
                         an + p1 * a1 - k);
    } else if (xn >= p2 && p2 > p1) {
      detail::push_check(rep, "|X_n+A| >= |A_n| + p2|A_1| - k", xnsum,
                         an + p2 * a1 - k);
    } else if (p1 <= xn && xn < p2) {
      const std::int64_t l =
          std::min<std::int64_t>(static_cast<std::int64_t>(n) - 1,
                                 p2 + 1 - xn);
      std::int64_t mid = 0;  // |A_2| + ... + |A_l|
      for (std::int64_t i = 2; i <= l; ++i)
        mid += detail::class_size(d, static_cast<std::size_t>(i));
      detail::push_check(rep,
                         "|X_n+A| >= |A_n| + |proj(X_n)||A_1| + |A_2|+...+|A_l| - k",
                         xnsum, an + xn * a1 + mid - k);
    } else {  // xn < p1
      std::int64_t prefix = 0;
      for (std::size_t i = 1; i < n; ++i) prefix += detail::class_size(d, i);
      detail::push_check(rep, "|D_nn| >= |A_1|+...+|A_{n-1}|",
                         static_cast<std::int64_t>(delta(d, n, n).size()),
                         prefix);
    }
  }
  return rep;
}

// k = 4, three classes: |X_i+A| >= |A| + 2|A_i| - 2 for every class of size
// at most 4
inline ClassBoundReport three_class_check(const IntSet& a) {
  constexpr std::int64_t k = 4;
  if (a.size() < 5)
    throw std::invalid_argument("three_class_check: need |A| >= 5");
  ClassBoundReport rep;
  Decomposition d = detail::align_first_offset(a, k, rep.alignment);
  if (d.j() != 3)
    throw std::invalid_argument("three_class_check: need exactly 3 classes");
  rep.applicable = true;
  for (std::size_t i = 1; i <= 3; ++i) {
    const std::int64_t ai = detail::class_size(d, i);
    if (ai > 4) continue;
    detail::push_check(
        rep, "|X_" + std::to_string(i) + "+A| >= |A| + 2|A_i| - 2",
        static_cast<std::int64_t>(
            sumset(d.classes[i - 1].quotient, d.base).size()),
        static_cast<std::int64_t>(a.size()) + 2 * ai - 2);
  }
  return rep;
}

// k = 4, two classes with odd second offset: |X_i+A| >= |A| + 3|A_i| - 3
inline ClassBoundReport two_class_check(const IntSet& a) {
  constexpr std::int64_t k = 4;
  if (a.size() < 5)
    throw std::invalid_argument("two_class_check: need |A| >= 5");
  ClassBoundReport rep;
  Decomposition d = detail::align_first_offset(a, k, rep.alignment);
  if (d.j() != 2)
    throw std::invalid_argument("two_class_check: need exactly 2 classes");
  if (d.classes[1].offset % 2 == 0)
    throw std::invalid_argument("two_class_check: second offset must be odd");
  rep.applicable = true;
  for (std::size_t i = 1; i <= 2; ++i) {
    const std::int64_t ai = detail::class_size(d, i);
    if (ai > 4) continue;
    detail::push_check(
        rep, "|X_" + std::to_string(i) + "+A| >= |A| + 3|A_i| - 3",
        static_cast<std::int64_t>(
            sumset(d.classes[i - 1].quotient, d.base).size()),
        static_cast<std::int64_t>(a.size()) + 3 * ai - 3);
  }
  return rep;
}

}  // namespace sumsetlab

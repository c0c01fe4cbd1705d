#pragma once
// Finite sets of 64-bit integers with the sumset algebra built on top.
// Representation is a sorted, duplicate-free vector; the heavy operation
// (A + k*B) runs on a dense bit vector over [min, max] when the span is
// reasonable and falls back to sort/unique for very sparse sets.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sumsetlab/bitvec.hpp"
#include "sumsetlab/numbers.hpp"

namespace sumsetlab {

class IntSet {
 public:
  IntSet() = default;

  // trusted constructor: input must already be sorted strictly increasing
  static IntSet from_sorted_unique(std::vector<std::int64_t> v) {
    assert(std::is_sorted(v.begin(), v.end()) &&
           std::adjacent_find(v.begin(), v.end()) == v.end());
    IntSet s;
    s.v_ = std::move(v);
    return s;
  }

  bool empty() const { return v_.empty(); }
  std::size_t size() const { return v_.size(); }

  std::int64_t min() const {
    require_nonempty("min");
    return v_.front();
  }
  std::int64_t max() const {
    require_nonempty("max");
    return v_.back();
  }

  bool contains(std::int64_t x) const {
    return std::binary_search(v_.begin(), v_.end(), x);
  }

  const std::vector<std::int64_t>& values() const { return v_; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  friend bool operator==(const IntSet&, const IntSet&) = default;

  // lexicographic on the element sequence; used for canonical tie-breaks
  friend bool operator<(const IntSet& a, const IntSet& b) {
    return std::lexicographical_compare(a.v_.begin(), a.v_.end(),
                                        b.v_.begin(), b.v_.end());
  }

 private:
  void require_nonempty(const char* who) const {
    if (v_.empty())
      throw std::invalid_argument(std::string(who) + ": set is empty");
  }
  std::vector<std::int64_t> v_;
};

inline IntSet make_set(std::vector<std::int64_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return IntSet::from_sorted_unique(std::move(v));
}

inline IntSet make_set(std::initializer_list<std::int64_t> xs) {
  return make_set(std::vector<std::int64_t>(xs));
}

inline std::int64_t diameter(const IntSet& a) {
  if (a.empty()) throw std::invalid_argument("diameter: set is empty");
  return checked_sub(a.max(), a.min());
}

inline IntSet translate(const IntSet& a, std::int64_t t) {
  std::vector<std::int64_t> v;
  v.reserve(a.size());
  for (std::int64_t x : a) v.push_back(checked_add(x, t));
  return IntSet::from_sorted_unique(std::move(v));
}

inline IntSet dilate(std::int64_t k, const IntSet& a) {
  if (k < 1) throw std::invalid_argument("dilate: k must be >= 1");
  std::vector<std::int64_t> v;
  v.reserve(a.size());
  for (std::int64_t x : a) v.push_back(checked_mul(k, x));
  return IntSet::from_sorted_unique(std::move(v));
}

// {-x : x in a}
inline IntSet reflect_negate(const IntSet& a) {
  std::vector<std::int64_t> v;
  v.reserve(a.size());
  for (auto it = a.values().rbegin(); it != a.values().rend(); ++it)
    v.push_back(checked_neg(*it));
  return IntSet::from_sorted_unique(std::move(v));
}

namespace detail {

// span cap for the dense kernel: 1 Gi bits = 128 MiB worst case
inline constexpr std::uint64_t kKernelMaxBits = std::uint64_t{1} << 30;

inline IntSet add_dilated_naive(const IntSet& a, std::int64_t k,
                                const IntSet& b) {
  std::vector<std::int64_t> v;
  v.reserve(a.size() * b.size());
  for (std::int64_t y : b) {
    const std::int64_t ky = checked_mul(k, y);
    for (std::int64_t x : a) v.push_back(checked_add(x, ky));
  }
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return IntSet::from_sorted_unique(std::move(v));
}

// kernel: result = union over x in a of (k*b + x), as bits over [lo, hi]
inline bool add_dilated_bits(const IntSet& a, std::int64_t k, const IntSet& b,
                             Bitvec& out, std::int64_t& lo) {
  const std::int64_t kb_lo = checked_mul(k, b.min());
  const std::int64_t kb_hi = checked_mul(k, b.max());
  lo = checked_add(a.min(), kb_lo);
  const std::int64_t hi = checked_add(a.max(), kb_hi);
  const std::uint64_t kb_width =
      static_cast<std::uint64_t>(kb_hi - kb_lo) + 1;
  const std::uint64_t width = static_cast<std::uint64_t>(hi - lo) + 1;
  if (width > kKernelMaxBits) return false;
  Bitvec kb(kb_width);
  for (std::int64_t y : b)
    kb.set(static_cast<std::size_t>(k * y - kb_lo));
  out = Bitvec(width);
  const std::int64_t amin = a.min();
  for (std::int64_t x : a)
    out.or_shifted(kb, static_cast<std::size_t>(x - amin));
  return true;
}

}  // namespace detail

// A + k*B = {x + k*y : x in A, y in B}
inline IntSet add_dilated(const IntSet& a, std::int64_t k, const IntSet& b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("add_dilated: operands must be nonempty");
  if (k < 1) throw std::invalid_argument("add_dilated: k must be >= 1");
  Bitvec bits;
  std::int64_t lo = 0;
  if (!detail::add_dilated_bits(a, k, b, bits, lo))
    return detail::add_dilated_naive(a, k, b);
  std::vector<std::int64_t> v;
  v.reserve(bits.popcount());
  bits.for_each_set([&](std::size_t i) {
    v.push_back(lo + static_cast<std::int64_t>(i));
  });
  return IntSet::from_sorted_unique(std::move(v));
}

inline std::size_t add_dilated_size(const IntSet& a, std::int64_t k,
                                    const IntSet& b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("add_dilated_size: operands must be nonempty");
  if (k < 1) throw std::invalid_argument("add_dilated_size: k must be >= 1");
  Bitvec bits;
  std::int64_t lo = 0;
  if (!detail::add_dilated_bits(a, k, b, bits, lo))
    return detail::add_dilated_naive(a, k, b).size();
  return bits.popcount();
}

inline IntSet sumset(const IntSet& a, const IntSet& b) {
  return add_dilated(a, 1, b);
}

inline IntSet set_union(const IntSet& a, const IntSet& b) {
  std::vector<std::int64_t> v;
  v.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(v));
  return IntSet::from_sorted_unique(std::move(v));
}

inline IntSet set_intersection(const IntSet& a, const IntSet& b) {
  std::vector<std::int64_t> v;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(v));
  return IntSet::from_sorted_unique(std::move(v));
}

inline IntSet set_difference(const IntSet& a, const IntSet& b) {
  std::vector<std::int64_t> v;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(v));
  return IntSet::from_sorted_unique(std::move(v));
}

// gcd over |elements|; 0 for {0}
inline std::int64_t set_gcd(const IntSet& a) {
  std::int64_t g = 0;
  for (std::int64_t x : a) g = std::gcd(g, x < 0 ? checked_neg(x) : x);
  return g;
}

// divide out the gcd; no translation happens here
inline std::pair<IntSet, std::int64_t> gcd_normalize(const IntSet& a) {
  if (a.empty()) throw std::invalid_argument("gcd_normalize: set is empty");
  const std::int64_t g = set_gcd(a);
  if (g == 0)
    throw std::invalid_argument("gcd_normalize: {0} has no gcd to divide");
  if (g == 1) return {a, 1};
  std::vector<std::int64_t> v;
  v.reserve(a.size());
  for (std::int64_t x : a) v.push_back(x / g);
  return {IntSet::from_sorted_unique(std::move(v)), g};
}

// canonical representative under translation, dilation-inverse and
// reflection: min 0, gcd 1, lexicographically no larger than its mirror
inline IntSet canonicalize(const IntSet& a) {
  if (a.size() < 2)
    throw std::invalid_argument("canonicalize: need at least 2 elements");
  IntSet s = translate(a, checked_neg(a.min()));
  s = gcd_normalize(s).first;
  IntSet r = translate(reflect_negate(s), s.max());
  return r < s ? r : s;
}

inline std::string to_string(const IntSet& a) {
  std::string s = "{";
  bool first = true;
  for (std::int64_t x : a) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + "}";
}

}  // namespace sumsetlab

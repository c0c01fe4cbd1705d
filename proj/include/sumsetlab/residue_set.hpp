#pragma once
// Subsets of Z/kZ as a fixed-width bit vector.  Moduli stay small in every
// exhaustive driver (<= 16 by default), but the type supports any modulus up
// to the sanity cap so projections of arbitrary decompositions work.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sumsetlab/int_set.hpp"
#include "sumsetlab/numbers.hpp"

namespace sumsetlab {

class ResidueSet {
 public:
  static constexpr std::int64_t kMaxModulus = std::int64_t{1} << 20;

  explicit ResidueSet(std::int64_t modulus) : m_(modulus) {
    if (modulus < 1 || modulus > kMaxModulus)
      throw std::invalid_argument("ResidueSet: modulus out of range");
    w_.assign((static_cast<std::size_t>(m_) + 63) / 64, 0);
  }

  std::int64_t modulus() const { return m_; }

  void insert(std::int64_t r) {
    r = mod_floor(r, m_);
    w_[static_cast<std::size_t>(r) >> 6] |= std::uint64_t{1} << (r & 63);
  }

  bool contains(std::int64_t r) const {
    r = mod_floor(r, m_);
    return (w_[static_cast<std::size_t>(r) >> 6] >> (r & 63)) & 1;
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (std::uint64_t v : w_) n += std::popcount(v);
    return n;
  }

  bool empty() const { return size() == 0; }

  std::vector<std::int64_t> members() const {
    std::vector<std::int64_t> out;
    out.reserve(size());
    for (std::int64_t r = 0; r < m_; ++r)
      if (contains(r)) out.push_back(r);
    return out;
  }

  friend bool operator==(const ResidueSet& a, const ResidueSet& b) {
    return a.m_ == b.m_ && a.w_ == b.w_;
  }

 private:
  std::int64_t m_;
  std::vector<std::uint64_t> w_;
};

inline ResidueSet project(const IntSet& a, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("project: modulus must be >= 1");
  ResidueSet out(k);
  for (std::int64_t x : a) out.insert(mod_floor(x, k));
  return out;
}

// cyclic sumset {x + y mod k}
inline ResidueSet residue_sumset(const ResidueSet& a, const ResidueSet& b) {
  if (a.modulus() != b.modulus())
    throw std::invalid_argument("residue_sumset: mismatched moduli");
  ResidueSet out(a.modulus());
  for (std::int64_t x : a.members())
    for (std::int64_t y : b.members()) out.insert(x + y);
  return out;
}

// translate by e (cyclically)
inline ResidueSet translate(const ResidueSet& a, std::int64_t e) {
  ResidueSet out(a.modulus());
  for (std::int64_t x : a.members()) out.insert(x + e);
  return out;
}

inline ResidueSet set_union(const ResidueSet& a, const ResidueSet& b) {
  if (a.modulus() != b.modulus())
    throw std::invalid_argument("set_union: mismatched moduli");
  ResidueSet out(a.modulus());
  for (std::int64_t x : a.members()) out.insert(x);
  for (std::int64_t x : b.members()) out.insert(x);
  return out;
}

inline ResidueSet set_intersection(const ResidueSet& a, const ResidueSet& b) {
  if (a.modulus() != b.modulus())
    throw std::invalid_argument("set_intersection: mismatched moduli");
  ResidueSet out(a.modulus());
  for (std::int64_t x : a.members())
    if (b.contains(x)) out.insert(x);
  return out;
}

inline std::string to_string(const ResidueSet& a) {
  std::string s = "{";
  bool first = true;
  for (std::int64_t x : a.members()) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + "} mod " + std::to_string(a.modulus());
}

}  // namespace sumsetlab

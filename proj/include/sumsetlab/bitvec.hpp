#pragma once
// Dense bit vector with the one operation the sumset kernel lives on:
// word-parallel OR of a shifted source.  Bits index an integer interval
// [base, base+width) chosen by the caller.

#include <bit>
#include <cassert>
#include <cstdint>
#include <cstring>
#include <vector>

namespace sumsetlab {

class Bitvec {
 public:
  Bitvec() = default;
  explicit Bitvec(std::size_t nbits)
      : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  std::size_t bit_capacity() const { return nbits_; }

  void clear() {
    if (!w_.empty()) std::memset(w_.data(), 0, w_.size() * sizeof(w_[0]));
  }

  void set(std::size_t i) {
    assert(i < nbits_);
    w_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }

  bool test(std::size_t i) const {
    assert(i < nbits_);
    return (w_[i >> 6] >> (i & 63)) & 1;
  }

  // this |= (src << shift); caller guarantees src's top bit + shift fits
  void or_shifted(const Bitvec& src, std::size_t shift) {
    assert(src.nbits_ + shift <= nbits_);
    const std::size_t wordoff = shift >> 6;
    const unsigned bitoff = shift & 63;
    const std::size_t n = src.w_.size();
    if (bitoff == 0) {
      for (std::size_t i = 0; i < n; ++i) w_[i + wordoff] |= src.w_[i];
      return;
    }
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t v = src.w_[i];
      w_[i + wordoff] |= (v << bitoff) | carry;
      carry = v >> (64 - bitoff);
    }
    if (carry) w_[n + wordoff] |= carry;
  }

  std::size_t popcount() const {
    std::size_t n = 0;
    for (std::uint64_t v : w_) n += std::popcount(v);
    return n;
  }

  template <typename Fn>
  void for_each_set(Fn&& fn) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t v = w_[wi];
      while (v) {
        unsigned b = std::countr_zero(v);
        fn(wi * 64 + b);
        v &= v - 1;
      }
    }
  }

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace sumsetlab

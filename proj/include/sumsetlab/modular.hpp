#pragma once
// Checkable predicates for the classical cyclic-group lemmas: the Chowla
// lower bound, its strengthening for composite moduli, the stabilizer
// structure theorem, and the e-transform (which also works over Z).

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sumsetlab/numbers.hpp"
#include "sumsetlab/residue_set.hpp"

namespace sumsetlab {

struct ChowlaReport {
  bool applicable = false;  // 0 in b and every nonzero element of b a unit
  std::int64_t lhs = 0;     // |a+b|
  std::int64_t rhs = 0;     // min(n, |a|+|b|-1)
  bool holds = false;       // lhs >= rhs (meaningful when applicable)
};

// |A+B| >= min(n, |A|+|B|-1) when 0 in B and B's nonzero elements generate
inline ChowlaReport chowla_check(const ResidueSet& a, const ResidueSet& b) {
  if (a.modulus() != b.modulus())
    throw std::invalid_argument("chowla_check: mismatched moduli");
  if (a.empty() || b.empty())
    throw std::invalid_argument("chowla_check: sets must be nonempty");
  const std::int64_t n = a.modulus();
  ChowlaReport rep;
  rep.applicable = b.contains(0);
  if (rep.applicable)
    for (std::int64_t x : b.members())
      if (x != 0 && std::gcd(x, n) != 1) rep.applicable = false;
  rep.lhs = static_cast<std::int64_t>(residue_sumset(a, b).size());
  rep.rhs = std::min<std::int64_t>(
      n, static_cast<std::int64_t>(a.size() + b.size()) - 1);
  rep.holds = rep.lhs >= rep.rhs;
  return rep;
}

struct StabilizerStructure {
  std::int64_t d = 0;                  // gcd(k, alpha)
  std::vector<std::int64_t> coset_reps;  // I: residues mod d hit by a
  bool reconstruction_ok = false;      // a is exactly the union of those cosets
  bool divisibility_ok = false;        // (k/d) divides |a|
};

struct StabilizerReport {
  bool fixed = false;          // a + alpha == a
  bool coset_form = false;     // a is a union of full gcd(k,alpha)-cosets
  std::optional<StabilizerStructure> structure;  // present when fixed
};

// a + alpha = a  iff  a is a union of cosets of the subgroup generated by
// gcd(k, alpha); in that case (k/d) | |a|
inline StabilizerReport stabilizer_check(const ResidueSet& a,
                                         std::int64_t alpha) {
  if (a.empty())
    throw std::invalid_argument("stabilizer_check: set must be nonempty");
  const std::int64_t k = a.modulus();
  alpha = mod_floor(alpha, k);
  StabilizerReport rep;
  rep.fixed = translate(a, alpha) == a;

  const std::int64_t d = std::gcd(k, alpha);  // d = k when alpha = 0
  // a class beta mod d is "full" when every k-residue congruent to beta
  // belongs to a; the coset form requires each class full or untouched
  bool form = true;
  std::vector<std::int64_t> reps;
  for (std::int64_t beta = 0; beta < d; ++beta) {
    std::size_t hit = 0, total = 0;
    for (std::int64_t r = beta; r < k; r += d) {
      ++total;
      if (a.contains(r)) ++hit;
    }
    if (hit == total)
      reps.push_back(beta);
    else if (hit != 0)
      form = false;
  }
  rep.coset_form = form;

  if (rep.fixed) {
    StabilizerStructure st;
    st.d = d;
    st.coset_reps = reps;
    st.reconstruction_ok = form;
    st.divisibility_ok = (a.size() % static_cast<std::size_t>(k / d)) == 0;
    rep.structure = std::move(st);
  }
  return rep;
}

struct ImprovedChowlaReport {
  bool applicable = false;
  std::int64_t lhs = 0;  // |a+b|
  std::int64_t rhs = 0;  // min(k, |a|+|b|-1)
  bool holds = false;
};

// composite-modulus strengthening: b may additionally contain one fixed
// non-unit q provided a+{0,q} already grows a
inline ImprovedChowlaReport improved_chowla_check(const ResidueSet& a,
                                                  const ResidueSet& b,
                                                  std::int64_t q) {
  if (a.modulus() != b.modulus())
    throw std::invalid_argument("improved_chowla_check: mismatched moduli");
  if (a.empty() || b.empty())
    throw std::invalid_argument("improved_chowla_check: sets must be nonempty");
  const std::int64_t k = a.modulus();
  if (k <= 2 || is_prime(k))
    throw std::invalid_argument(
        "improved_chowla_check: modulus must be composite and > 2");
  q = mod_floor(q, k);

  ImprovedChowlaReport rep;
  bool ok = std::gcd(q, k) != 1 && b.contains(0);
  if (ok)
    for (std::int64_t x : b.members())
      if (x != 0 && x != q && std::gcd(x, k) != 1) ok = false;
  if (ok) {
    ResidueSet zq(k);
    zq.insert(0);
    zq.insert(q);
    ok = residue_sumset(a, zq).size() >= a.size() + 1;
  }
  rep.applicable = ok;
  rep.lhs = static_cast<std::int64_t>(residue_sumset(a, b).size());
  rep.rhs = std::min<std::int64_t>(
      k, static_cast<std::int64_t>(a.size() + b.size()) - 1);
  rep.holds = rep.lhs >= rep.rhs;
  return rep;
}

// e-transform over either carrier (IntSet with integer e, ResidueSet with a
// residue e): a grows by b+e, b shrinks to b and (a-e); the pair keeps its
// combined size and its sumset never grows
template <typename SetT>
std::pair<SetT, SetT> e_transform(const SetT& a, const SetT& b,
                                  std::int64_t e) {
  SetT a_e = set_union(a, translate(b, e));
  SetT b_e = set_intersection(b, translate(a, checked_neg(e)));
  return {std::move(a_e), std::move(b_e)};
}

}  // namespace sumsetlab

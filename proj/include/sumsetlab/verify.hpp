#pragma once
// Registry of checkable statements and their verification drivers.  Each
// driver enumerates an exhaustive slice of the statement's hypothesis
// space when that fits the budget, optionally extends with seeded-random
// sampling, and reports counts plus up to 8 concrete failures.  The
// statements are theorems: any failure is an implementation bug, and the
// drivers exist to catch exactly that.

#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sumsetlab/bounds.hpp"
#include "sumsetlab/decomposition.hpp"
#include "sumsetlab/int_set.hpp"
#include "sumsetlab/modular.hpp"
#include "sumsetlab/numbers.hpp"
#include "sumsetlab/residue_set.hpp"
#include "sumsetlab/search.hpp"

namespace sumsetlab {

struct LemmaParams {
  std::int64_t k = 0;         // multiplier or modulus; 0 = driver default
  std::int64_t diameter = 0;  // 0 = driver default
  std::int64_t min_size = 0;
  std::int64_t max_size = 0;
  std::uint64_t samples = 0;  // random cases; 0 = driver default
  std::uint64_t seed = 0;
  std::uint64_t budget = 100'000'000;  // exhaustive-mode case cap
};

struct LemmaReport {
  std::string lemma;
  std::uint64_t cases_checked = 0;
  std::uint64_t applicable_cases = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> failure_examples;  // capped at 8
  bool sampled = false;  // true when any random cases were generated
  std::vector<std::pair<std::string, std::string>> params;  // echoed settings
};

inline const std::vector<std::string>& lemma_registry() {
  static const std::vector<std::string> names = {
      "chowla",     "delta_sum", "wo",        "factorial",
      "stabilizer", "etransform", "improved_chowla",
      "changsui",   "x3",        "x2",        "lemma51"};
  return names;
}

namespace detail {

inline void note_failure(LemmaReport& rep, std::string what) {
  ++rep.failures;
  if (rep.failure_examples.size() < 8)
    rep.failure_examples.push_back(std::move(what));
}

inline void echo_param(LemmaReport& rep, const char* key, std::int64_t v) {
  rep.params.emplace_back(key, std::to_string(v));
}

inline ResidueSet residues_from_mask(std::uint64_t mask, std::int64_t k) {
  ResidueSet s(k);
  for (std::int64_t r = 0; r < k; ++r)
    if (mask & (std::uint64_t{1} << r)) s.insert(r);
  return s;
}

inline IntSet random_set(std::mt19937_64& rng, std::int64_t size,
                         std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);
  std::set<std::int64_t> s;
  while (static_cast<std::int64_t>(s.size()) < size) s.insert(dist(rng));
  return IntSet::from_sorted_unique(
      std::vector<std::int64_t>(s.begin(), s.end()));
}

// 0 plus size-1 distinct values from 1..diameter
inline IntSet random_zero_set(std::mt19937_64& rng, std::int64_t size,
                              std::int64_t diameter) {
  std::uniform_int_distribution<std::int64_t> dist(1, diameter);
  std::set<std::int64_t> s{0};
  while (static_cast<std::int64_t>(s.size()) < size) s.insert(dist(rng));
  return IntSet::from_sorted_unique(
      std::vector<std::int64_t>(s.begin(), s.end()));
}

// all sets with 0 = min, max <= diameter, size in [lo, hi]
template <typename Fn>
void for_each_zero_set(std::int64_t lo, std::int64_t hi, std::int64_t diameter,
                       Fn&& fn) {
  for (std::int64_t size = lo; size <= hi; ++size) {
    if (size - 1 > diameter) break;
    SearchSpec spec;
    spec.k = 2;  // irrelevant to enumeration
    spec.size = size;
    spec.diameter = diameter;
    spec.gcd_one = false;
    spec.use_reflection = false;
    enumerate_canonical(spec, [&](const std::vector<std::int64_t>& a) {
      fn(IntSet::from_sorted_unique(std::vector<std::int64_t>(a.begin(),
                                                              a.end())));
    });
  }
}

}  // namespace detail

// --------------------------------------------------------------------------
// per-statement drivers

inline LemmaReport verify_chowla(const LemmaParams& p) {
  const std::int64_t n = p.k ? p.k : 8;
  if (n < 2 || n > 30)
    throw std::invalid_argument("verify chowla: modulus must be in [2, 30]");
  LemmaReport rep;
  rep.lemma = "chowla";
  detail::echo_param(rep, "modulus", n);

  auto run_pair = [&](const ResidueSet& a, const ResidueSet& b) {
    ++rep.cases_checked;
    const ChowlaReport r = chowla_check(a, b);
    if (!r.applicable) return;
    ++rep.applicable_cases;
    if (!r.holds)
      detail::note_failure(rep, "n=" + std::to_string(n) + " a=" +
                                    to_string(a) + " b=" + to_string(b) +
                                    ": " + std::to_string(r.lhs) + " < " +
                                    std::to_string(r.rhs));
  };

  const std::uint64_t space =
      ((std::uint64_t{1} << n) - 1) * (std::uint64_t{1} << (n - 1));
  if (space <= p.budget) {
    for (std::uint64_t am = 1; am < (std::uint64_t{1} << n); ++am)
      for (std::uint64_t bm = 1; bm < (std::uint64_t{1} << n); bm += 2)
        run_pair(detail::residues_from_mask(am, n),
                 detail::residues_from_mask(bm, n));
  } else {
    rep.sampled = true;
    std::mt19937_64 rng(p.seed);
    std::uniform_int_distribution<std::uint64_t> dist(
        1, (std::uint64_t{1} << n) - 1);
    const std::uint64_t samples = p.samples ? p.samples : 100'000;
    for (std::uint64_t i = 0; i < samples; ++i)
      run_pair(detail::residues_from_mask(dist(rng), n),
               detail::residues_from_mask(dist(rng) | 1, n));
  }
  return rep;
}

inline LemmaReport verify_delta_sum(const LemmaParams& p) {
  LemmaReport rep;
  rep.lemma = "delta_sum";
  const std::int64_t diameter = p.diameter ? p.diameter : 8;
  const std::int64_t lo = std::max<std::int64_t>(p.min_size, 2);
  const std::int64_t hi = p.max_size ? p.max_size : 6;
  detail::echo_param(rep, "diameter", diameter);

  std::vector<std::int64_t> ks =
      p.k ? std::vector<std::int64_t>{p.k}
          : std::vector<std::int64_t>{2, 3, 4, 6};
  auto run_set = [&](const IntSet& s, std::int64_t k) {
    const Decomposition d = decompose(s, k);
    const std::size_t j = d.j();
    std::vector<std::int64_t> dsz(j);
    for (std::size_t i = 1; i <= j; ++i)
      dsz[i - 1] = static_cast<std::int64_t>(delta(d, i, i).size());
    // full index set exercises the checker itself; the remaining subsets
    // reuse the same per-class sizes
    std::vector<std::size_t> all(j);
    for (std::size_t i = 0; i < j; ++i) all[i] = i + 1;
    const DeltaSumReport full = delta_sum_check(d, all);
    std::int64_t full_sum = 0;
    for (std::int64_t v : dsz) full_sum += v;
    if (full.sum != full_sum)
      detail::note_failure(rep, "k=" + std::to_string(k) + " A=" +
                                    to_string(s) + ": checker sum " +
                                    std::to_string(full.sum) +
                                    " != " + std::to_string(full_sum));
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << j); ++mask) {
      ++rep.cases_checked;
      ++rep.applicable_cases;
      std::int64_t sum = 0, m = 0;
      for (std::size_t i = 0; i < j; ++i)
        if (mask & (std::uint64_t{1} << i)) {
          sum += dsz[i];
          ++m;
        }
      if (sum < m * (m - 1))
        detail::note_failure(
            rep, "k=" + std::to_string(k) + " A=" + to_string(s) + " mask=" +
                     std::to_string(mask) + ": " + std::to_string(sum) +
                     " < " + std::to_string(m * (m - 1)));
    }
  };

  for (std::int64_t k : ks)
    detail::for_each_zero_set(lo, hi, diameter,
                              [&](const IntSet& s) { run_set(s, k); });

  const std::uint64_t samples = p.samples ? p.samples : 10'000;
  if (samples > 0) {
    rep.sampled = true;
    std::mt19937_64 rng(p.seed);
    std::uniform_int_distribution<std::int64_t> kd(2, 10), sd(2, 10),
        dd(10, 40);
    for (std::uint64_t i = 0; i < samples; ++i) {
      const std::int64_t k = p.k ? p.k : kd(rng);
      const std::int64_t size = sd(rng);
      run_set(detail::random_zero_set(rng, size, dd(rng)), k);
    }
  }
  return rep;
}

inline LemmaReport verify_wo(const LemmaParams& p) {
  const std::int64_t k = p.k ? p.k : 4;
  std::int64_t prime = 0;
  if (!is_prime_power(k, &prime))
    throw std::invalid_argument("verify wo: k must be a prime power");
  LemmaReport rep;
  rep.lemma = "wo";
  const std::int64_t diameter = p.diameter ? p.diameter : 12;
  const std::int64_t lo = std::max<std::int64_t>(p.min_size, 2);
  const std::int64_t hi = p.max_size ? p.max_size : 6;
  detail::echo_param(rep, "k", k);
  detail::echo_param(rep, "diameter", diameter);

  auto run_set = [&](const IntSet& raw) {
    ++rep.cases_checked;
    const IntSet s = normalize(raw, k).set;
    const ClassBoundReport r = prime_power_class_check(s, k);
    if (!r.applicable) return;
    ++rep.applicable_cases;
    if (!r.all_hold())
      for (const BoundCheck& c : r.checks)
        if (!c.holds)
          detail::note_failure(rep, "k=" + std::to_string(k) + " A=" +
                                        to_string(s) + ": " + c.label + " (" +
                                        std::to_string(c.lhs) + " < " +
                                        std::to_string(c.rhs) + ")");
  };

  detail::for_each_zero_set(lo, hi, diameter, run_set);
  const std::uint64_t samples = p.samples ? p.samples : 10'000;
  if (samples > 0) {
    rep.sampled = true;
    std::mt19937_64 rng(p.seed);
    std::uniform_int_distribution<std::int64_t> sd(7, 12), dd(20, 50);
    for (std::uint64_t i = 0; i < samples; ++i)
      run_set(detail::random_zero_set(rng, sd(rng), dd(rng)));
  }
  return rep;
}

inline LemmaReport verify_changsui(const LemmaParams& p) {
  const std::int64_t k = p.k ? p.k : 6;
  if (!is_semiprime(k))
    throw std::invalid_argument(
        "verify changsui: k must be a product of two distinct primes");
  LemmaReport rep;
  rep.lemma = "changsui";
  const std::int64_t diameter = p.diameter ? p.diameter : 12;
  const std::int64_t lo = std::max<std::int64_t>(p.min_size, 2);
  const std::int64_t hi = p.max_size ? p.max_size : 6;
  detail::echo_param(rep, "k", k);
  detail::echo_param(rep, "diameter", diameter);

  auto run_set = [&](const IntSet& raw) {
    ++rep.cases_checked;
    const IntSet s = normalize(raw, k).set;
    const ClassBoundReport r = semiprime_class_check(s, k);
    if (!r.applicable) return;
    ++rep.applicable_cases;
    if (!r.all_hold())
      for (const BoundCheck& c : r.checks)
        if (!c.holds)
          detail::note_failure(rep, "k=" + std::to_string(k) + " A=" +
                                        to_string(s) + ": " + c.label + " (" +
                                        std::to_string(c.lhs) + " < " +
                                        std::to_string(c.rhs) + ")");
  };

  detail::for_each_zero_set(lo, hi, diameter, run_set);
  const std::uint64_t samples = p.samples ? p.samples : 10'000;
  if (samples > 0) {
    rep.sampled = true;
    std::mt19937_64 rng(p.seed);
    std::uniform_int_distribution<std::int64_t> sd(7, 12), dd(20, 50);
    for (std::uint64_t i = 0; i < samples; ++i)
      run_set(detail::random_zero_set(rng, sd(rng), dd(rng)));
  }
  return rep;
}

inline LemmaReport verify_factorial(const LemmaParams& p) {
  const std::int64_t k = p.k ? p.k : 2;
  if (k < 2 || k > 20)
    throw std::invalid_argument("verify factorial: need 2 <= k <= 20");
  LemmaReport rep;
  rep.lemma = "factorial";
  std::int64_t diameter = p.diameter, hi = p.max_size;
  if (!diameter) diameter = k == 2 ? 16 : k == 3 ? 14 : 12;
  if (!hi) hi = k == 2 ? 8 : 6;
  const std::int64_t lo = std::max<std::int64_t>(p.min_size, 1);
  detail::echo_param(rep, "k", k);
  detail::echo_param(rep, "diameter", diameter);
  detail::echo_param(rep, "max_size", hi);

  auto run_set = [&](const IntSet& s) {
    ++rep.cases_checked;
    ++rep.applicable_cases;
    const std::int64_t lhs =
        static_cast<std::int64_t>(add_dilated_size(s, k, s));
    const std::int64_t rhs =
        factorial_bound(k, static_cast<std::int64_t>(s.size()));
    if (lhs < rhs)
      detail::note_failure(rep, "k=" + std::to_string(k) + " A=" +
                                    to_string(s) + ": " + std::to_string(lhs) +
                                    " < " + std::to_string(rhs));
  };

  detail::for_each_zero_set(lo, hi, diameter, run_set);
  const std::uint64_t samples = p.samples ? p.samples : 10'000;
  if (samples > 0) {
    rep.sampled = true;
    std::mt19937_64 rng(p.seed);
    std::uniform_int_distribution<std::int64_t> sd(hi + 1, hi + 6),
        dd(20, 50);
    for (std::uint64_t i = 0; i < samples; ++i) {
      const std::int64_t size = sd(rng);
      run_set(detail::random_zero_set(rng, size,
                                      std::max(dd(rng), size + 2)));
    }
  }
  return rep;
}

inline LemmaReport verify_stabilizer(const LemmaParams& p) {
  const std::int64_t k = p.k ? p.k : 6;
  if (k < 2 || k > 24)
    throw std::invalid_argument("verify stabilizer: modulus must be in [2, 24]");
  LemmaReport rep;
  rep.lemma = "stabilizer";
  detail::echo_param(rep, "modulus", k);

  auto run_case = [&](const ResidueSet& a, std::int64_t alpha) {
    ++rep.cases_checked;
    ++rep.applicable_cases;
    const StabilizerReport r = stabilizer_check(a, alpha);
    std::string why;
    if (r.fixed != r.coset_form)
      why = "fixed/coset-form disagree";
    else if (r.fixed && !r.structure)
      why = "fixed but no structure computed";
    else if (r.fixed && !r.structure->reconstruction_ok)
      why = "coset reconstruction mismatch";
    else if (r.fixed && !r.structure->divisibility_ok)
      why = "k/d does not divide |a|";
    if (!why.empty())
      detail::note_failure(rep, "k=" + std::to_string(k) + " a=" +
                                    to_string(a) + " alpha=" +
                                    std::to_string(alpha) + ": " + why);
  };

  const std::uint64_t space =
      ((std::uint64_t{1} << k) - 1) * static_cast<std::uint64_t>(k - 1);
  if (space <= p.budget) {
    for (std::uint64_t am = 1; am < (std::uint64_t{1} << k); ++am)
      for (std::int64_t alpha = 1; alpha < k; ++alpha)
        run_case(detail::residues_from_mask(am, k), alpha);
  } else {
    rep.sampled = true;
    std::mt19937_64 rng(p.seed);
    std::uniform_int_distribution<std::uint64_t> dist(
        1, (std::uint64_t{1} << k) - 1);
    std::uniform_int_distribution<std::int64_t> ad(1, k - 1);
    const std::uint64_t samples = p.samples ? p.samples : 100'000;
    for (std::uint64_t i = 0; i < samples; ++i)
      run_case(detail::residues_from_mask(dist(rng), k), ad(rng));
  }
  return rep;
}

inline LemmaReport verify_etransform(const LemmaParams& p) {
  LemmaReport rep;
  rep.lemma = "etransform";
  rep.sampled = true;
  const std::uint64_t samples = p.samples ? p.samples : 100'000;
  const std::int64_t k = p.k ? p.k : 12;
  if (k < 2)
    throw std::invalid_argument("verify etransform: modulus must be >= 2");
  detail::echo_param(rep, "modulus", k);
  std::mt19937_64 rng(p.seed);

  auto check_z = [&]() {
    std::uniform_int_distribution<std::int64_t> sd(1, 8), vd(-20, 20),
        ed(-12, 12);
    const IntSet a = detail::random_set(rng, sd(rng), -20, 20);
    const IntSet b = detail::random_set(rng, sd(rng), -20, 20);
    const std::int64_t e = ed(rng);
    ++rep.cases_checked;
    ++rep.applicable_cases;
    const auto [ae, be] = e_transform(a, b, e);
    std::string why;
    if (ae.size() + be.size() != a.size() + b.size())
      why = "size conservation failed";
    else if (!be.empty() && !set_difference(sumset(ae, be), sumset(a, b)).empty())
      why = "transformed sumset escapes the original";
    else if (a.contains(e) && b.contains(0) &&
             (!ae.contains(e) || !be.contains(0)))
      why = "pivot elements lost";
    if (!why.empty())
      detail::note_failure(rep, "Z a=" + to_string(a) + " b=" + to_string(b) +
                                    " e=" + std::to_string(e) + ": " + why);
  };

  auto check_mod = [&]() {
    std::uniform_int_distribution<std::uint64_t> md(
        1, (std::uint64_t{1} << k) - 1);
    std::uniform_int_distribution<std::int64_t> ed(0, k - 1);
    const ResidueSet a = detail::residues_from_mask(md(rng), k);
    const ResidueSet b = detail::residues_from_mask(md(rng), k);
    const std::int64_t e = ed(rng);
    ++rep.cases_checked;
    ++rep.applicable_cases;
    const auto [ae, be] = e_transform(a, b, e);
    std::string why;
    if (ae.size() + be.size() != a.size() + b.size())
      why = "size conservation failed";
    else if (be.size() > 0) {
      const ResidueSet lhs = residue_sumset(ae, be);
      const ResidueSet rhs = residue_sumset(a, b);
      for (std::int64_t x : lhs.members())
        if (!rhs.contains(x)) {
          why = "transformed sumset escapes the original";
          break;
        }
    }
    if (why.empty() && a.contains(e) && b.contains(0) &&
        (!ae.contains(e) || !be.contains(0)))
      why = "pivot elements lost";
    if (!why.empty())
      detail::note_failure(rep, "mod " + std::to_string(k) + " a=" +
                                    to_string(a) + " b=" + to_string(b) +
                                    " e=" + std::to_string(e) + ": " + why);
  };

  for (std::uint64_t i = 0; i < samples; ++i) check_z();
  for (std::uint64_t i = 0; i < samples; ++i) check_mod();
  return rep;
}

inline LemmaReport verify_improved_chowla(const LemmaParams& p) {
  const std::int64_t k = p.k ? p.k : 6;
  if (k > 24)
    throw std::invalid_argument("verify improved_chowla: modulus must be <= 24");
  if (k <= 2 || is_prime(k))
    throw std::invalid_argument(
        "verify improved_chowla: modulus must be composite and > 2");
  LemmaReport rep;
  rep.lemma = "improved_chowla";
  detail::echo_param(rep, "modulus", k);

  std::vector<std::int64_t> qs;
  for (std::int64_t q = 0; q < k; ++q)
    if (std::gcd(q, k) != 1) qs.push_back(q);
  std::vector<std::int64_t> units;
  for (std::int64_t x = 1; x < k; ++x)
    if (std::gcd(x, k) == 1) units.push_back(x);

  auto run_case = [&](const ResidueSet& a, const ResidueSet& b,
                      std::int64_t q) {
    ++rep.cases_checked;
    const ImprovedChowlaReport r = improved_chowla_check(a, b, q);
    if (!r.applicable) return;
    ++rep.applicable_cases;
    if (!r.holds)
      detail::note_failure(rep, "k=" + std::to_string(k) + " a=" +
                                    to_string(a) + " b=" + to_string(b) +
                                    " q=" + std::to_string(q) + ": " +
                                    std::to_string(r.lhs) + " < " +
                                    std::to_string(r.rhs));
  };

  // b ranges over subsets of {0, q} + units that contain 0
  const std::size_t nb = units.size() + 1;  // q plus each unit, 0 forced in
  const std::uint64_t space = ((std::uint64_t{1} << k) - 1) *
                              static_cast<std::uint64_t>(qs.size()) *
                              (std::uint64_t{1} << nb);
  if (space <= p.budget) {
    for (std::uint64_t am = 1; am < (std::uint64_t{1} << k); ++am) {
      const ResidueSet a = detail::residues_from_mask(am, k);
      for (std::int64_t q : qs)
        for (std::uint64_t bm = 0; bm < (std::uint64_t{1} << nb); ++bm) {
          ResidueSet b(k);
          b.insert(0);
          if (bm & 1) b.insert(q);
          for (std::size_t i = 0; i < units.size(); ++i)
            if (bm & (std::uint64_t{1} << (i + 1))) b.insert(units[i]);
          run_case(a, b, q);
        }
    }
  } else {
    rep.sampled = true;
    std::mt19937_64 rng(p.seed);
    std::uniform_int_distribution<std::uint64_t> amd(
        1, (std::uint64_t{1} << k) - 1);
    std::uniform_int_distribution<std::uint64_t> bmd(
        0, (std::uint64_t{1} << nb) - 1);
    std::uniform_int_distribution<std::size_t> qd(0, qs.size() - 1);
    const std::uint64_t samples = p.samples ? p.samples : 100'000;
    for (std::uint64_t i = 0; i < samples; ++i) {
      const std::int64_t q = qs[qd(rng)];
      const std::uint64_t bm = bmd(rng);
      ResidueSet b(k);
      b.insert(0);
      if (bm & 1) b.insert(q);
      for (std::size_t u = 0; u < units.size(); ++u)
        if (bm & (std::uint64_t{1} << (u + 1))) b.insert(units[u]);
      run_case(detail::residues_from_mask(amd(rng), k), b, q);
    }
  }
  return rep;
}

inline LemmaReport verify_x3(const LemmaParams& p) {
  if (p.k && p.k != 4)
    throw std::invalid_argument("verify x3: statement is specific to k=4");
  LemmaReport rep;
  rep.lemma = "x3";
  const std::int64_t diameter = p.diameter ? p.diameter : 12;
  const std::int64_t lo = std::max<std::int64_t>(p.min_size, 5);
  const std::int64_t hi = p.max_size ? p.max_size : 6;
  detail::echo_param(rep, "diameter", diameter);

  auto run_set = [&](const IntSet& s) {
    ++rep.cases_checked;
    if (decompose(s, 4).j() != 3) return;
    const ClassBoundReport r = three_class_check(s);
    ++rep.applicable_cases;
    if (!r.all_hold())
      for (const BoundCheck& c : r.checks)
        if (!c.holds)
          detail::note_failure(rep, "A=" + to_string(s) + ": " + c.label +
                                        " (" + std::to_string(c.lhs) + " < " +
                                        std::to_string(c.rhs) + ")");
  };

  detail::for_each_zero_set(lo, hi, diameter, run_set);
  const std::uint64_t samples = p.samples ? p.samples : 10'000;
  if (samples > 0) {
    rep.sampled = true;
    std::mt19937_64 rng(p.seed);
    std::uniform_int_distribution<std::int64_t> sd(5, 10), dd(15, 40);
    for (std::uint64_t i = 0; i < samples; ++i)
      run_set(detail::random_zero_set(rng, sd(rng), dd(rng)));
  }
  return rep;
}

inline LemmaReport verify_x2(const LemmaParams& p) {
  if (p.k && p.k != 4)
    throw std::invalid_argument("verify x2: statement is specific to k=4");
  LemmaReport rep;
  rep.lemma = "x2";
  const std::int64_t diameter = p.diameter ? p.diameter : 12;
  const std::int64_t lo = std::max<std::int64_t>(p.min_size, 5);
  const std::int64_t hi = p.max_size ? p.max_size : 6;
  detail::echo_param(rep, "diameter", diameter);

  auto run_set = [&](const IntSet& s) {
    ++rep.cases_checked;
    const Decomposition d = decompose(s, 4);
    if (d.j() != 2) return;
    const std::int64_t u2 =
        mod_floor(d.classes[1].offset - d.classes[0].offset, 4);
    if (u2 % 2 == 0) return;
    const ClassBoundReport r = two_class_check(s);
    ++rep.applicable_cases;
    if (!r.all_hold())
      for (const BoundCheck& c : r.checks)
        if (!c.holds)
          detail::note_failure(rep, "A=" + to_string(s) + ": " + c.label +
                                        " (" + std::to_string(c.lhs) + " < " +
                                        std::to_string(c.rhs) + ")");
  };

  detail::for_each_zero_set(lo, hi, diameter, run_set);
  const std::uint64_t samples = p.samples ? p.samples : 10'000;
  if (samples > 0) {
    rep.sampled = true;
    std::mt19937_64 rng(p.seed);
    std::uniform_int_distribution<std::int64_t> sd(5, 10), dd(15, 40);
    for (std::uint64_t i = 0; i < samples; ++i)
      run_set(detail::random_zero_set(rng, sd(rng), dd(rng)));
  }
  return rep;
}

inline LemmaReport verify_lemma51(const LemmaParams& p) {
  if (p.k && p.k != 4)
    throw std::invalid_argument("verify lemma51: statement is specific to k=4");
  LemmaReport rep;
  rep.lemma = "lemma51";
  const std::int64_t diameter = p.diameter ? p.diameter : 20;
  detail::echo_param(rep, "diameter", diameter);

  // |A| = 2: the dilated sumset has exactly 4 elements, always
  detail::for_each_zero_set(2, 2, diameter, [&](const IntSet& s) {
    ++rep.cases_checked;
    ++rep.applicable_cases;
    const std::size_t n = add_dilated_size(s, 4, s);
    if (n != 4)
      detail::note_failure(rep, "A=" + to_string(s) + ": size " +
                                    std::to_string(n) + " != 4");
  });

  // |A| = 3 and 4: minima over the canonical space must be 8 and 12
  const std::int64_t expected[] = {8, 12};
  for (std::int64_t size = 3; size <= 4; ++size) {
    SearchSpec spec;
    spec.k = 4;
    spec.size = size;
    spec.diameter = diameter;
    spec.gcd_one = false;
    spec.use_reflection = true;
    const SearchResult r = min_sumset_size(spec);
    rep.cases_checked += r.candidates;
    rep.applicable_cases += r.candidates;
    if (r.min_size != expected[size - 3])
      detail::note_failure(
          rep, "size " + std::to_string(size) + ": min " +
                   std::to_string(r.min_size) + " != " +
                   std::to_string(expected[size - 3]) + " (diameter " +
                   std::to_string(diameter) + ")");
  }
  return rep;
}

inline LemmaReport verify_lemma(const std::string& name,
                                const LemmaParams& params) {
  if (name == "chowla") return verify_chowla(params);
  if (name == "delta_sum") return verify_delta_sum(params);
  if (name == "wo") return verify_wo(params);
  if (name == "factorial") return verify_factorial(params);
  if (name == "stabilizer") return verify_stabilizer(params);
  if (name == "etransform") return verify_etransform(params);
  if (name == "improved_chowla") return verify_improved_chowla(params);
  if (name == "changsui") return verify_changsui(params);
  if (name == "x3") return verify_x3(params);
  if (name == "x2") return verify_x2(params);
  if (name == "lemma51") return verify_lemma51(params);
  throw std::invalid_argument("verify: unknown lemma '" + name + "'");
}

}  // namespace sumsetlab

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracle.hpp"
#include "sumsetlab/decomposition.hpp"

using namespace sumsetlab;

namespace {

IntSet from_oracle(const oracle::Set& s) {
  return IntSet::from_sorted_unique(oracle::to_vec(s));
}

IntSet random_zero_set(std::mt19937_64& rng, int extra, std::int64_t hi) {
  std::vector<std::int64_t> v{0};
  std::uniform_int_distribution<std::int64_t> dist(1, hi);
  for (int i = 0; i < extra; ++i) v.push_back(dist(rng));
  return make_set(std::move(v));
}

}  // namespace

TEST_CASE("residue-class decomposition", "[decomposition]") {
  SECTION("three equal classes") {
    const Decomposition d = decompose(make_set({0, 1, 2, 4, 5, 6}), 4);
    REQUIRE(d.j() == 3);
    REQUIRE(d.classes[0].offset == 0);
    REQUIRE(d.classes[1].offset == 1);
    REQUIRE(d.classes[2].offset == 2);
    for (const ResidueClass& c : d.classes)
      REQUIRE(c.quotient == make_set({0, 1}));
    REQUIRE(d.proper == std::vector<std::size_t>{1, 2, 3});
    REQUIRE(d.full.empty());
    REQUIRE(d.class_elements(2) == make_set({1, 5}));
  }
  SECTION("full class sorts first") {
    const Decomposition d = decompose(make_set({0, 4, 8, 12, 1}), 4);
    REQUIRE(d.j() == 2);
    REQUIRE(d.classes[0].offset == 0);
    REQUIRE(d.classes[0].quotient == make_set({0, 1, 2, 3}));
    REQUIRE(d.classes[1].quotient == make_set({0}));
    REQUIRE(d.full == std::vector<std::size_t>{1});
    REQUIRE(d.proper == std::vector<std::size_t>{2});
  }
  SECTION("ties broken by offset, sizes descending") {
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 300; ++iter) {
      const std::int64_t k = 2 + static_cast<std::int64_t>(rng() % 7);
      const IntSet a = random_zero_set(rng, 1 + static_cast<int>(rng() % 7), 40);
      const Decomposition d = decompose(a, k);
      const auto ref = oracle::decompose(oracle::to_set(a.values()), k);
      REQUIRE(d.j() == ref.size());
      std::size_t total = 0;
      for (std::size_t i = 0; i < d.j(); ++i) {
        REQUIRE(d.classes[i].offset == ref[i].offset);
        REQUIRE(d.classes[i].quotient == from_oracle(ref[i].quotients));
        if (i + 1 < d.j()) {
          const bool bigger =
              d.classes[i].quotient.size() > d.classes[i + 1].quotient.size();
          const bool tie =
              d.classes[i].quotient.size() == d.classes[i + 1].quotient.size() &&
              d.classes[i].offset < d.classes[i + 1].offset;
          REQUIRE((bigger || tie));
        }
        total += d.classes[i].quotient.size();
      }
      REQUIRE(total == a.size());
    }
  }
  SECTION("bad arguments") {
    REQUIRE_THROWS_AS(decompose(make_set({0, 1}), 1), std::invalid_argument);
    REQUIRE_THROWS_AS(decompose(IntSet{}, 4), std::invalid_argument);
  }
}

TEST_CASE("diagonal difference sets", "[decomposition][delta]") {
  SECTION("hand-checked values") {
    const Decomposition d = decompose(make_set({0, 1, 2, 4, 5, 6}), 4);
    REQUIRE(delta(d, 1, 1) == make_set({8, 12, 24, 28}));
    REQUIRE(delta(d, 2, 2) == make_set({1, 13, 17, 29}));
    REQUIRE(delta(d, 3, 3) == make_set({2, 6, 18, 22}));

    const Decomposition e = decompose(make_set({0, 1, 4}), 4);
    REQUIRE(delta(e, 1, 1) == make_set({8}));
    REQUIRE(delta(e, 2, 2) == make_set({1, 17}));
  }
  SECTION("agrees with the reference on random sets") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 200; ++iter) {
      const std::int64_t k = 2 + static_cast<std::int64_t>(rng() % 5);
      const IntSet a = random_zero_set(rng, 2 + static_cast<int>(rng() % 5), 30);
      const Decomposition d = decompose(a, k);
      const auto ref = oracle::decompose(oracle::to_set(a.values()), k);
      for (std::size_t r = 1; r <= d.j(); ++r)
        for (std::size_t s = 1; s <= d.j(); ++s)
          REQUIRE(delta(d, r, s) ==
                  from_oracle(oracle::delta(oracle::to_set(a.values()), k, ref,
                                            r, s)));
    }
  }
  SECTION("index range is checked") {
    const Decomposition d = decompose(make_set({0, 1}), 4);
    REQUIRE_THROWS_AS(delta(d, 0, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(delta(d, 1, 3), std::invalid_argument);
  }
}

TEST_CASE("normalization fixpoint", "[decomposition][normalize]") {
  SECTION("divide then translate") {
    const NormalizeResult r = normalize(make_set({4, 8, 20}), 4);
    REQUIRE(r.set == make_set({0, 1, 4}));
    REQUIRE(r.steps.size() == 2);
    REQUIRE(r.steps[0].kind == NormalizeStep::Kind::divide_gcd);
    REQUIRE(r.steps[0].amount == 4);
    REQUIRE(r.steps[0].after == make_set({1, 2, 5}));
    REQUIRE(r.steps[1].kind == NormalizeStep::Kind::translate);
    REQUIRE(r.steps[1].amount == -1);
  }
  SECTION("single division") {
    const NormalizeResult r = normalize(make_set({0, 16, 32, 48}), 4);
    REQUIRE(r.set == make_set({0, 1, 2, 3}));
    REQUIRE(r.steps.size() == 1);
    REQUIRE(r.steps[0].amount == 16);
  }
  SECTION("already normalized") {
    const NormalizeResult r = normalize(make_set({0, 1}), 4);
    REQUIRE(r.set == make_set({0, 1}));
    REQUIRE(r.steps.empty());
  }
  SECTION("single class folds to its quotient set") {
    const NormalizeResult r = normalize(make_set({1, 5, 9}), 4);
    REQUIRE(r.set == make_set({0, 1, 2}));
    REQUIRE(r.steps.size() == 1);
    REQUIRE(r.steps[0].kind == NormalizeStep::Kind::replace_by_quotient);
  }
  SECTION("folding can cascade") {
    const NormalizeResult r = normalize(make_set({5, 21, 37}), 4);
    REQUIRE(r.set == make_set({0, 1, 2}));
    REQUIRE(r.steps.size() == 2);
    REQUIRE(r.steps[0].kind == NormalizeStep::Kind::replace_by_quotient);
    REQUIRE(r.steps[0].after == make_set({1, 5, 9}));
    REQUIRE(r.steps[1].kind == NormalizeStep::Kind::replace_by_quotient);
  }
  SECTION("single-class fold beats translation") {
    // {1,4,7} sits in one class mod 3, so it folds straight to its quotients
    const NormalizeResult r = normalize(make_set({1, 4, 7}), 3);
    REQUIRE(r.set == make_set({0, 1, 2}));
    REQUIRE(r.steps.size() == 1);
    REQUIRE(r.steps[0].kind == NormalizeStep::Kind::replace_by_quotient);
  }
  SECTION("translate can expose a gcd") {
    // {1,3,5} spans two classes mod 4; shifting to {0,2,4} reveals factor 2
    const NormalizeResult r = normalize(make_set({1, 3, 5}), 4);
    REQUIRE(r.set == make_set({0, 1, 2}));
    REQUIRE(r.steps.size() == 2);
    REQUIRE(r.steps[0].kind == NormalizeStep::Kind::translate);
    REQUIRE(r.steps[0].after == make_set({0, 2, 4}));
    REQUIRE(r.steps[1].kind == NormalizeStep::Kind::divide_gcd);
    REQUIRE(r.steps[1].amount == 2);
  }
  SECTION("postconditions and step invariants hold on random input") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::int64_t> valdist(-100, 100);
    for (int iter = 0; iter < 1000; ++iter) {
      const std::int64_t k = 2 + static_cast<std::int64_t>(rng() % 7);
      std::vector<std::int64_t> v;
      for (int i = 0; i < 2 + static_cast<int>(rng() % 6); ++i)
        v.push_back(valdist(rng));
      const IntSet a = make_set(std::move(v));
      if (a.size() < 2) continue;
      const NormalizeResult r = normalize(a, k);
      for (const NormalizeStep& s : r.steps)
        REQUIRE(s.after.size() == a.size());  // every move is a bijection
      REQUIRE(r.set.min() == 0);
      REQUIRE(set_gcd(r.set) == 1);
      REQUIRE(decompose(r.set, k).j() >= 2);
    }
  }
  SECTION("degenerate input is rejected") {
    REQUIRE_THROWS_AS(normalize(make_set({7}), 4), std::invalid_argument);
    REQUIRE_THROWS_AS(normalize(make_set({0, 1}), 1), std::invalid_argument);
  }
}

TEST_CASE("componentwise sumset identity", "[decomposition][identity]") {
  SECTION("tight two-class example") {
    const ComponentIdentityReport rep =
        component_identity_check(make_set({0, 1, 4, 5}), make_set({0, 1}), 4);
    REQUIRE(rep.lhs == 6);
    REQUIRE(rep.rhs == 6);
    REQUIRE(rep.identity_holds);
    REQUIRE(rep.j == 2);
    REQUIRE(rep.elementary_rhs == 6);
    REQUIRE(rep.elementary_holds);
    REQUIRE(rep.shape == TightShape::common_difference);
  }
  SECTION("singleton b is always tight") {
    const ComponentIdentityReport rep =
        component_identity_check(make_set({0, 1, 7}), make_set({3}), 4);
    REQUIRE(rep.identity_holds);
    REQUIRE(rep.shape == TightShape::singleton_b);
  }
  SECTION("slack case") {
    const ComponentIdentityReport rep =
        component_identity_check(make_set({0, 1, 4, 5}), make_set({0, 1, 7}), 4);
    REQUIRE(rep.identity_holds);
    REQUIRE(rep.lhs > rep.elementary_rhs);
    REQUIRE(rep.shape == TightShape::not_tight);
  }
  SECTION("identity and elementary bound hold on random input") {
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 2000; ++iter) {
      const std::int64_t k = 2 + static_cast<std::int64_t>(rng() % 9);
      const IntSet a = random_zero_set(rng, 1 + static_cast<int>(rng() % 6), 30);
      const IntSet b = random_zero_set(rng, static_cast<int>(rng() % 6), 30);
      const ComponentIdentityReport rep = component_identity_check(a, b, k);
      REQUIRE(rep.identity_holds);
      REQUIRE(rep.elementary_holds);
    }
  }
}

TEST_CASE("diagonal difference sums", "[decomposition][delta_sum]") {
  const Decomposition d = decompose(make_set({0, 1, 2, 3}), 4);
  REQUIRE(d.j() == 4);
  const DeltaSumReport rep = delta_sum_check(d, {1, 2, 3, 4});
  REQUIRE(rep.sum == 12);
  REQUIRE(rep.bound == 12);  // m(m-1) with m = 4: met with equality
  REQUIRE(rep.holds);

  SECTION("every index subset obeys the bound on random sets") {
    std::mt19937_64 rng(29);
    for (int iter = 0; iter < 200; ++iter) {
      const std::int64_t k = 2 + static_cast<std::int64_t>(rng() % 5);
      IntSet a = random_zero_set(rng, 2 + static_cast<int>(rng() % 5), 24);
      a = normalize(a, k).set;
      const Decomposition dd = decompose(a, k);
      const std::size_t j = dd.j();
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << j); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < j; ++i)
          if ((mask >> i) & 1) idx.push_back(i + 1);
        REQUIRE(delta_sum_check(dd, idx).holds);
      }
    }
  }
}

TEST_CASE("special class index", "[decomposition]") {
  const Decomposition d = decompose(make_set({0, 1, 2, 4, 5, 6}), 4);
  REQUIRE(special_index(d, 2) == 2);

  const Decomposition e = decompose(make_set({0, 4, 8, 12, 1}), 4);
  REQUIRE(special_index(e, 2) == 2);

  // every offset even: the index is undefined
  const Decomposition f = decompose(make_set({0, 2, 4}), 4);
  REQUIRE_THROWS_AS(special_index(f, 2), std::invalid_argument);
}

TEST_CASE("prime-power class bounds", "[decomposition][class_bounds]") {
  SECTION("worked example, k = 4") {
    const ClassBoundReport rep =
        prime_power_class_check(make_set({0, 1, 2, 4, 5, 6}), 4);
    REQUIRE(rep.applicable);
    REQUIRE(rep.alignment == 0);
    REQUIRE(rep.checks.size() == 3);  // two sibling deltas + the special class
    REQUIRE(rep.all_hold());
  }
  SECTION("single class is skipped") {
    const ClassBoundReport rep = prime_power_class_check(make_set({0, 4, 8}), 4);
    REQUIRE_FALSE(rep.applicable);
    REQUIRE(rep.skip_reason == "single residue class");
  }
  SECTION("composite k is rejected") {
    REQUIRE_THROWS_AS(prime_power_class_check(make_set({0, 1}), 6),
                      std::invalid_argument);
  }
  SECTION("alignment keeps the bounds valid under translation") {
    std::mt19937_64 rng(41);
    for (int iter = 0; iter < 300; ++iter) {
      IntSet a = random_zero_set(rng, 4 + static_cast<int>(rng() % 4), 30);
      a = normalize(a, 4).set;
      const ClassBoundReport base = prime_power_class_check(a, 4);
      const ClassBoundReport shifted =
          prime_power_class_check(translate(a, 7), 4);
      // offset ties may reorder classes after a shift, so the individual
      // checks can differ; applicability and validity may not
      REQUIRE(base.applicable == shifted.applicable);
      if (!base.applicable) continue;
      REQUIRE(base.all_hold());
      REQUIRE(shifted.all_hold());
    }
  }
}

TEST_CASE("semiprime class bounds", "[decomposition][class_bounds]") {
  SECTION("coprime second offset, k = 6") {
    const ClassBoundReport rep =
        semiprime_class_check(make_set({0, 1, 6, 7}), 6);
    REQUIRE(rep.applicable);
    REQUIRE(rep.checks.size() == 2);
    REQUIRE(rep.checks[0].label == "|D22| >= |A_1|");
    REQUIRE(rep.checks[0].lhs == 2);  // {1,37}
    REQUIRE(rep.checks[1].label == "|D11| >= |A_2|");
    REQUIRE(rep.checks[1].lhs == 2);  // {12,48}
    REQUIRE(rep.all_hold());
  }
  SECTION("shared factor in the second offset, k = 6") {
    const ClassBoundReport rep = semiprime_class_check(make_set({0, 2, 3}), 6);
    REQUIRE(rep.applicable);
    REQUIRE(rep.all_hold());
  }
  SECTION("offset gcd > 1 is skipped") {
    const ClassBoundReport rep = semiprime_class_check(make_set({0, 2, 4}), 6);
    REQUIRE_FALSE(rep.applicable);
    REQUIRE(rep.skip_reason == "offset gcd != 1");
  }
  SECTION("prime-power k is rejected") {
    REQUIRE_THROWS_AS(semiprime_class_check(make_set({0, 1}), 4),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(semiprime_class_check(make_set({0, 1}), 12),
                      std::invalid_argument);
  }
  SECTION("all bounds hold on normalized random sets") {
    std::mt19937_64 rng(43);
    for (std::int64_t k : {6, 10, 15}) {
      for (int iter = 0; iter < 200; ++iter) {
        IntSet a = random_zero_set(rng, 4 + static_cast<int>(rng() % 5), 50);
        a = normalize(a, k).set;
        const ClassBoundReport rep = semiprime_class_check(a, k);
        if (rep.applicable) REQUIRE(rep.all_hold());
      }
    }
  }
}

TEST_CASE("four-dilation three-class bound", "[decomposition][class_bounds]") {
  SECTION("worked example") {
    const ClassBoundReport rep = three_class_check(make_set({0, 1, 2, 4, 5, 6}));
    REQUIRE(rep.applicable);
    REQUIRE(rep.checks.size() == 3);
    for (const BoundCheck& c : rep.checks) {
      REQUIRE(c.lhs == 8);
      REQUIRE(c.rhs == 8);
      REQUIRE(c.holds);
    }
  }
  SECTION("preconditions") {
    REQUIRE_THROWS_AS(three_class_check(make_set({0, 1, 2, 3})),
                      std::invalid_argument);  // too small
    REQUIRE_THROWS_AS(three_class_check(make_set({0, 1, 4, 5, 8})),
                      std::invalid_argument);  // two classes
  }
  SECTION("holds across an exhaustive small slice") {
    for (std::int64_t hi = 5; hi <= 12; ++hi)
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (hi - 1)); ++mask) {
        std::vector<std::int64_t> v{0, hi};
        for (std::int64_t b = 1; b < hi; ++b)
          if ((mask >> (b - 1)) & 1) v.push_back(b);
        if (v.size() < 5) continue;
        const IntSet a = make_set(std::move(v));
        if (set_gcd(a) != 1) continue;
        if (decompose(a, 4).j() != 3) continue;
        bool small_classes = true;
        for (const ResidueClass& c : decompose(a, 4).classes)
          if (c.quotient.size() > 4) small_classes = false;
        if (!small_classes) continue;
        REQUIRE(three_class_check(a).all_hold());
      }
  }
}

TEST_CASE("four-dilation two-class bound", "[decomposition][class_bounds]") {
  SECTION("worked example") {
    const ClassBoundReport rep = two_class_check(make_set({0, 1, 4, 5, 8}));
    REQUIRE(rep.applicable);
    REQUIRE(rep.checks.size() == 2);
    REQUIRE(rep.checks[0].lhs == 11);
    REQUIRE(rep.checks[0].rhs == 11);
    REQUIRE(rep.checks[1].lhs == 8);
    REQUIRE(rep.checks[1].rhs == 8);
    REQUIRE(rep.all_hold());
  }
  SECTION("preconditions") {
    REQUIRE_THROWS_AS(two_class_check(make_set({0, 1, 2, 4, 5, 6})),
                      std::invalid_argument);  // three classes
    REQUIRE_THROWS_AS(two_class_check(make_set({0, 2, 4, 6, 10})),
                      std::invalid_argument);  // even second offset
  }
}

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "sumsetlab/search.hpp"

using namespace sumsetlab;

namespace {

std::vector<std::vector<std::int64_t>> collect(const SearchSpec& s) {
  std::vector<std::vector<std::int64_t>> out;
  enumerate_canonical(s, [&](const std::vector<std::int64_t>& a) {
    out.push_back(a);
  });
  return out;
}

SearchSpec spec(std::int64_t k, std::int64_t size, std::int64_t diameter) {
  SearchSpec s;
  s.k = k;
  s.size = size;
  s.diameter = diameter;
  return s;
}

// filter-by-filter reimplementation used to confirm completeness
std::set<std::vector<std::int64_t>> brute_force(const SearchSpec& s) {
  std::set<std::vector<std::int64_t>> out;
  const std::int64_t d = s.diameter;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    std::vector<std::int64_t> a{0};
    for (std::int64_t b = 1; b <= d; ++b)
      if ((mask >> (b - 1)) & 1) a.push_back(b);
    if (static_cast<std::int64_t>(a.size()) != s.size) continue;
    if (s.gcd_one && a.size() > 1) {
      std::int64_t g = 0;
      for (std::int64_t x : a) g = std::gcd(g, x);
      if (g != 1) continue;
    }
    if (s.use_reflection) {
      std::vector<std::int64_t> r;
      for (auto it = a.rbegin(); it != a.rend(); ++it) r.push_back(a.back() - *it);
      if (r < a) continue;
    }
    out.insert(a);
  }
  return out;
}

}  // namespace

TEST_CASE("canonical enumeration", "[search][enumerate]") {
  SECTION("diameter 3, size 2") {
    auto all = collect(spec(4, 2, 3));
    REQUIRE(all == std::vector<std::vector<std::int64_t>>{{0, 1}});

    SearchSpec s = spec(4, 2, 3);
    s.gcd_one = false;
    all = collect(s);
    REQUIRE(all ==
            std::vector<std::vector<std::int64_t>>{{0, 1}, {0, 2}, {0, 3}});
  }
  SECTION("diameter 3, size 3") {
    auto all = collect(spec(4, 3, 3));
    REQUIRE(all ==
            std::vector<std::vector<std::int64_t>>{{0, 1, 2}, {0, 1, 3}});
  }
  SECTION("size 1 is just the origin") {
    auto all = collect(spec(4, 1, 5));
    REQUIRE(all == std::vector<std::vector<std::int64_t>>{{0}});
  }
  SECTION("complete against brute force") {
    for (std::int64_t size = 2; size <= 5; ++size)
      for (std::int64_t d = size - 1; d <= 9; ++d)
        for (int gcd_on = 0; gcd_on <= 1; ++gcd_on)
          for (int refl_on = 0; refl_on <= 1; ++refl_on) {
            SearchSpec s = spec(4, size, d);
            s.gcd_one = gcd_on != 0;
            s.use_reflection = refl_on != 0;
            const auto got = collect(s);
            const std::set<std::vector<std::int64_t>> want = brute_force(s);
            INFO("size=" << size << " d=" << d << " gcd=" << gcd_on
                         << " refl=" << refl_on);
            REQUIRE(got.size() == want.size());
            for (const auto& a : got) REQUIRE(want.count(a) == 1);
          }
  }
  SECTION("work items partition the space") {
    const SearchSpec s = spec(4, 3, 9);
    std::set<std::vector<std::int64_t>> merged;
    std::size_t total = 0;
    for (std::size_t item = 0; item < item_count(s); ++item)
      enumerate_item(s, item, [&](const std::vector<std::int64_t>& a) {
        merged.insert(a);
        ++total;
      });
    REQUIRE(merged.size() == total);  // no duplicates across items
    REQUIRE(merged.size() == collect(s).size());
  }
}

TEST_CASE("dilated-size kernel", "[search]") {
  DilatedSizeKernel kernel(4, 20);
  REQUIRE(kernel.size_of_sum({0, 1, 4, 5}) == 12);
  REQUIRE(kernel.size_of_sum({0, 1}) == 4);
  REQUIRE(kernel.size_of_sum({0}) == 1);
  REQUIRE(kernel.size_of_sum({0, 1, 2, 4, 5, 6}) == 24);
}

TEST_CASE("spec validation and bound resolution", "[search]") {
  REQUIRE_THROWS_AS(validate(spec(1, 2, 5)), std::invalid_argument);
  REQUIRE_THROWS_AS(validate(spec(4, 0, 5)), std::invalid_argument);
  REQUIRE_THROWS_AS(validate(spec(4, 5, 3)), std::invalid_argument);
  SearchSpec s = spec(4, 3, 10);
  s.workers = 0;
  REQUIRE_THROWS_AS(validate(s), std::invalid_argument);

  s = spec(4, 5, 10);
  REQUIRE(resolve_bound(s) == 19);
  s.bound_kind = SearchSpec::BoundKind::factorial;
  REQUIRE(resolve_bound(s) == 1);
  s.bound_kind = SearchSpec::BoundKind::custom;
  s.custom_bound = 17;
  REQUIRE(resolve_bound(s) == 17);
}

TEST_CASE("minimum dilated-sumset sizes, k = 4", "[search][minimum]") {
  SECTION("size 2") {
    const SearchResult r = min_sumset_size(spec(4, 2, 20));
    REQUIRE(r.min_size == 4);
    REQUIRE(r.witnesses.front() == make_set({0, 1}));
  }
  SECTION("size 3") {
    const SearchResult r = min_sumset_size(spec(4, 3, 20));
    REQUIRE(r.min_size == 8);
    REQUIRE(r.witness_count == 2);
    REQUIRE(r.witnesses[0] == make_set({0, 1, 4}));
    REQUIRE(r.witnesses[1] == make_set({0, 1, 5}));
  }
  SECTION("size 3 without reflection pruning") {
    SearchSpec s = spec(4, 3, 20);
    s.use_reflection = false;
    const SearchResult r = min_sumset_size(s);
    REQUIRE(r.min_size == 8);
    REQUIRE(r.witness_count == 4);  // adds the two mirror images
    REQUIRE(r.witnesses[2] == make_set({0, 3, 4}));
    REQUIRE(r.witnesses[3] == make_set({0, 4, 5}));
  }
  SECTION("size 4") {
    const SearchResult r = min_sumset_size(spec(4, 4, 16));
    REQUIRE(r.min_size == 12);
    REQUIRE(r.witness_count == 1);
    REQUIRE(r.witnesses.front() == make_set({0, 1, 4, 5}));
  }
  SECTION("size 6 attains the strongest bound") {
    const SearchResult r = min_sumset_size(spec(4, 6, 24));
    REQUIRE(r.min_size == 24);
    REQUIRE(r.min_size == chs_bound(4, 6));
    REQUIRE(r.witnesses.front() == make_set({0, 1, 2, 4, 5, 6}));
  }
  SECTION("witness cap limits the list but not the count") {
    SearchSpec s = spec(4, 3, 20);
    s.use_reflection = false;
    s.witness_cap = 1;
    const SearchResult r = min_sumset_size(s);
    REQUIRE(r.witnesses.size() == 1);
    REQUIRE(r.witness_count == 4);
  }
}

TEST_CASE("bound-violation sweeps, k = 4", "[search][violations]") {
  SECTION("size 4 dips below the strongest bound") {
    const SearchResult r = find_violations(spec(4, 4, 12));
    REQUIRE(r.bound == 14);
    REQUIRE(r.violation_count == 1);
    REQUIRE(r.violations.front().set == make_set({0, 1, 4, 5}));
    REQUIRE(r.violations.front().value == 12);
  }
  SECTION("size 5 onward is clean") {
    REQUIRE(find_violations(spec(4, 5, 16)).violation_count == 0);
    REQUIRE(find_violations(spec(4, 6, 16)).violation_count == 0);
  }
  SECTION("k = 2 has no violations at all") {
    REQUIRE(find_violations(spec(2, 5, 12)).violation_count == 0);
  }
  SECTION("custom bound flushes out everything below it") {
    SearchSpec s = spec(4, 2, 8);
    s.bound_kind = SearchSpec::BoundKind::custom;
    s.custom_bound = 5;  // every size-2 set has |A+4A| = 4
    const SearchResult r = find_violations(s);
    REQUIRE(r.violation_count == r.candidates);
    for (const Violation& v : r.violations) REQUIRE(v.value == 4);
  }
}

TEST_CASE("results are worker-count invariant", "[search][determinism]") {
  auto run = [](SearchSpec s, unsigned workers, SearchSpec::Mode mode) {
    s.workers = workers;
    s.mode = mode;
    return run_search(s);
  };
  const SearchSpec base = spec(4, 5, 16);

  const SearchResult one = run(base, 1, SearchSpec::Mode::minimum);
  for (unsigned w : {4u, 16u}) {
    const SearchResult many = run(base, w, SearchSpec::Mode::minimum);
    // thread count is clamped to the number of work items
    REQUIRE(many.workers_used ==
            std::min<unsigned>(w, static_cast<unsigned>(item_count(base))));
    REQUIRE(many.min_size == one.min_size);
    REQUIRE(many.candidates == one.candidates);
    REQUIRE(many.witness_count == one.witness_count);
    REQUIRE(many.witnesses == one.witnesses);
  }

  SearchSpec vb = spec(4, 4, 14);
  const SearchResult vone = run(vb, 1, SearchSpec::Mode::violations);
  for (unsigned w : {3u, 8u}) {
    const SearchResult vmany = run(vb, w, SearchSpec::Mode::violations);
    REQUIRE(vmany.candidates == vone.candidates);
    REQUIRE(vmany.violation_count == vone.violation_count);
    REQUIRE(vmany.violations.size() == vone.violations.size());
    for (std::size_t i = 0; i < vone.violations.size(); ++i) {
      REQUIRE(vmany.violations[i].set == vone.violations[i].set);
      REQUIRE(vmany.violations[i].value == vone.violations[i].value);
    }
  }
}

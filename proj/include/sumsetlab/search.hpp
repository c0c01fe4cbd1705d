#pragma once
// Exhaustive search over canonical sets: fixed size, minimum element 0,
// maximum element at most the diameter cap, optionally restricted to
// gcd 1 and to reflection-canonical representatives.  Finds the minimum
// of |A + k*A| or all sets falling below a chosen bound.  Work is split
// by the second-smallest element and merged in item order, so results
// are identical for any worker count.

#include <atomic>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "sumsetlab/bitvec.hpp"
#include "sumsetlab/bounds.hpp"
#include "sumsetlab/int_set.hpp"
#include "sumsetlab/numbers.hpp"

namespace sumsetlab {

struct SearchSpec {
  enum class Mode { minimum, violations };
  enum class BoundKind { chs, factorial, custom };

  std::int64_t k = 2;
  std::int64_t size = 1;
  std::int64_t diameter = 0;  // inclusive cap on max(A) with min(A) = 0
  bool gcd_one = true;        // skip sets with gcd > 1 ({0} exempt)
  bool use_reflection = true;  // keep A only if A <=lex (max - A)
  Mode mode = Mode::minimum;
  BoundKind bound_kind = BoundKind::chs;  // violations mode only
  std::int64_t custom_bound = 0;
  unsigned workers = 1;
  std::size_t witness_cap = 16;
  std::size_t violation_cap = 1000;
};

inline void validate(const SearchSpec& s) {
  if (s.k < 2) throw std::invalid_argument("search: k must be >= 2");
  if (s.size < 1) throw std::invalid_argument("search: size must be >= 1");
  if (s.diameter < s.size - 1)
    throw std::invalid_argument("search: diameter must be >= size - 1");
  checked_mul(checked_add(s.k, 1), s.diameter);  // kernel width must fit
  if (s.workers < 1) throw std::invalid_argument("search: workers must be >= 1");
}

inline std::int64_t resolve_bound(const SearchSpec& s) {
  switch (s.bound_kind) {
    case SearchSpec::BoundKind::chs: return chs_bound(s.k, s.size);
    case SearchSpec::BoundKind::factorial: return factorial_bound(s.k, s.size);
    case SearchSpec::BoundKind::custom: return s.custom_bound;
  }
  throw std::invalid_argument("search: unknown bound kind");
}

// reusable |A + k*A| evaluator over nonnegative candidates bounded by the
// diameter; buffers are allocated once per worker
class DilatedSizeKernel {
 public:
  DilatedSizeKernel(std::int64_t k, std::int64_t diameter)
      : k_(k),
        kb_(static_cast<std::size_t>(k * diameter) + 1),
        res_(static_cast<std::size_t>((k + 1) * diameter) + 1) {}

  std::size_t size_of_sum(const std::vector<std::int64_t>& a) {
    kb_.clear();
    for (std::int64_t x : a) kb_.set(static_cast<std::size_t>(k_ * x));
    res_.clear();
    for (std::int64_t x : a)
      res_.or_shifted(kb_, static_cast<std::size_t>(x));
    return res_.popcount();
  }

 private:
  std::int64_t k_;
  Bitvec kb_;
  Bitvec res_;
};

namespace detail {

// lexicographic comparison of A against its reflection max(A) - A;
// both start at 0, so walk from both ends
inline bool reflection_canonical(const std::vector<std::int64_t>& a) {
  const std::int64_t m = a.back();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::int64_t lhs = a[i];
    const std::int64_t rhs = m - a[a.size() - 1 - i];
    if (lhs != rhs) return lhs < rhs;
  }
  return true;  // palindromic
}

// enumerate completions of prefix (ascending, starting {0, second})
// up to max element <= diameter, |A| = size, invoking fn on each
template <typename Fn>
void extend(std::vector<std::int64_t>& prefix, std::int64_t size,
            std::int64_t diameter, Fn&& fn) {
  if (static_cast<std::int64_t>(prefix.size()) == size) {
    const std::vector<std::int64_t>& done = prefix;
    fn(done);
    return;
  }
  const std::int64_t remaining = size - static_cast<std::int64_t>(prefix.size());
  for (std::int64_t x = prefix.back() + 1; x <= diameter - (remaining - 1);
       ++x) {
    prefix.push_back(x);
    extend(prefix, size, diameter, fn);
    prefix.pop_back();
  }
}

}  // namespace detail

// visit every canonical candidate belonging to work item `item` (0-based);
// items partition the space by the second-smallest element
template <typename Fn>
void enumerate_item(const SearchSpec& s, std::size_t item, Fn&& fn) {
  if (s.size == 1) {
    if (item == 0) {
      // {0} is the only size-1 canonical set; gcd filter exempts it
      const std::vector<std::int64_t> a{0};
      fn(a);
    }
    return;
  }
  const std::int64_t second = 1 + static_cast<std::int64_t>(item);
  std::vector<std::int64_t> prefix{0, second};
  prefix.reserve(static_cast<std::size_t>(s.size));
  detail::extend(prefix, s.size, s.diameter,
                 [&](const std::vector<std::int64_t>& a) {
                   if (s.gcd_one) {
                     std::int64_t g = 0;
                     for (std::int64_t x : a) g = std::gcd(g, x);
                     if (g != 1) return;
                   }
                   if (s.use_reflection && !detail::reflection_canonical(a))
                     return;
                   fn(a);
                 });
}

inline std::size_t item_count(const SearchSpec& s) {
  if (s.size == 1) return 1;
  // second element ranges over 1 .. diameter - (size - 2)
  return static_cast<std::size_t>(s.diameter - s.size + 2);
}

template <typename Fn>
void enumerate_canonical(const SearchSpec& s, Fn&& fn) {
  for (std::size_t i = 0; i < item_count(s); ++i) enumerate_item(s, i, fn);
}

struct Violation {
  IntSet set;
  std::int64_t value = 0;  // |set + k*set|, strictly below the bound
};

struct SearchResult {
  SearchSpec spec;
  std::int64_t bound = 0;           // violations mode: the resolved bound
  std::uint64_t candidates = 0;     // canonical sets examined
  std::int64_t min_size = 0;        // minimum mode
  std::vector<IntSet> witnesses;    // lex-least attainers, capped
  std::uint64_t witness_count = 0;  // total attainers
  std::vector<Violation> violations;  // lex-least violators, capped
  std::uint64_t violation_count = 0;
  unsigned workers_used = 1;
};

namespace detail {

struct ItemResult {
  std::uint64_t candidates = 0;
  std::int64_t min_size = std::numeric_limits<std::int64_t>::max();
  std::vector<IntSet> witnesses;
  std::uint64_t witness_count = 0;
  std::vector<Violation> violations;
  std::uint64_t violation_count = 0;
};

// every spot_check_stride-th candidate within an item is recomputed
// naively; a mismatch means the kernel is broken and aborts the search
constexpr std::uint64_t kSpotCheckStride = 4099;

inline void run_item(const SearchSpec& s, std::size_t item,
                     DilatedSizeKernel& kernel, std::int64_t bound,
                     ItemResult& out) {
  enumerate_item(s, item, [&](const std::vector<std::int64_t>& a) {
    const std::size_t n = kernel.size_of_sum(a);
    if (out.candidates % kSpotCheckStride == 0) {
      const IntSet probe = IntSet::from_sorted_unique(
          std::vector<std::int64_t>(a.begin(), a.end()));
      const std::size_t naive = add_dilated_naive(probe, s.k, probe).size();
      if (naive != n)
        throw std::logic_error(
            "search kernel mismatch on " + to_string(probe) + ": kernel " +
            std::to_string(n) + ", reference " + std::to_string(naive));
    }
    ++out.candidates;
    const std::int64_t sz = static_cast<std::int64_t>(n);
    if (s.mode == SearchSpec::Mode::minimum) {
      if (sz < out.min_size) {
        out.min_size = sz;
        out.witnesses.clear();
        out.witness_count = 0;
      }
      if (sz == out.min_size) {
        ++out.witness_count;
        if (out.witnesses.size() < s.witness_cap)
          out.witnesses.push_back(IntSet::from_sorted_unique(
              std::vector<std::int64_t>(a.begin(), a.end())));
      }
    } else if (sz < bound) {
      ++out.violation_count;
      if (out.violations.size() < s.violation_cap)
        out.violations.push_back(
            {IntSet::from_sorted_unique(
                 std::vector<std::int64_t>(a.begin(), a.end())),
             sz});
    }
  });
}

}  // namespace detail

inline SearchResult run_search(const SearchSpec& s) {
  validate(s);
  const std::int64_t bound =
      s.mode == SearchSpec::Mode::violations ? resolve_bound(s) : 0;
  const std::size_t items = item_count(s);
  std::vector<detail::ItemResult> per_item(items);

  const unsigned workers = static_cast<unsigned>(
      std::min<std::size_t>(s.workers, std::max<std::size_t>(items, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mu;

  auto body = [&]() {
    DilatedSizeKernel kernel(s.k, s.diameter);
    for (;;) {
      const std::size_t item = next.fetch_add(1);
      if (item >= items) return;
      try {
        detail::run_item(s, item, kernel, bound, per_item[item]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!first_error) first_error = std::current_exception();
        next.store(items);
        return;
      }
    }
  };

  if (workers <= 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(body);
    for (std::thread& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  SearchResult res;
  res.spec = s;
  res.bound = bound;
  res.workers_used = workers;
  if (s.mode == SearchSpec::Mode::minimum)
    res.min_size = std::numeric_limits<std::int64_t>::max();
  for (const detail::ItemResult& ir : per_item) {
    res.candidates += ir.candidates;
    if (s.mode == SearchSpec::Mode::minimum) {
      if (ir.candidates == 0) continue;
      if (ir.min_size < res.min_size) {
        res.min_size = ir.min_size;
        res.witnesses.clear();
        res.witness_count = 0;
      }
      if (ir.min_size == res.min_size) {
        res.witness_count += ir.witness_count;
        for (const IntSet& w : ir.witnesses)
          if (res.witnesses.size() < s.witness_cap) res.witnesses.push_back(w);
      }
    } else {
      res.violation_count += ir.violation_count;
      for (const Violation& v : ir.violations)
        if (res.violations.size() < s.violation_cap) res.violations.push_back(v);
    }
  }
  if (s.mode == SearchSpec::Mode::minimum && res.candidates == 0)
    throw std::invalid_argument(
        "search: no canonical sets match the constraints");
  return res;
}

inline SearchResult min_sumset_size(SearchSpec s) {
  s.mode = SearchSpec::Mode::minimum;
  return run_search(s);
}

inline SearchResult find_violations(SearchSpec s) {
  s.mode = SearchSpec::Mode::violations;
  return run_search(s);
}

}  // namespace sumsetlab

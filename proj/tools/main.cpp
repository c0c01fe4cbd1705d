// sumsetlab CLI: compute dilated sumsets, evaluate bounds, decompose sets
// into residue classes, run exhaustive searches, verify the statement
// registry, and build extremal families.  Human output by default, --json
// for machine-readable output, --report FILE to append one JSONL record
// per run.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sumsetlab/sumsetlab.hpp"

using json = nlohmann::ordered_json;
namespace ssl = sumsetlab;

namespace {

unsigned default_workers() {
  if (const char* env = std::getenv("SUMSETLAB_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= 1024)
      return static_cast<unsigned>(v);
    std::cerr << "warning: ignoring invalid SUMSETLAB_WORKERS='" << env
              << "'\n";
  }
  return 1;
}

constexpr std::size_t kElideAt = 200;

std::string format_elements(const ssl::IntSet& s) {
  std::string out;
  std::size_t shown = 0;
  for (std::int64_t x : s) {
    if (shown == kElideAt) {
      out += "... (+" + std::to_string(s.size() - kElideAt) + " more)";
      return out;
    }
    if (shown) out += ' ';
    out += std::to_string(x);
    ++shown;
  }
  return out;
}

json set_to_json(const ssl::IntSet& s) { return json(s.values()); }

json bound_report_json(const ssl::BoundReport& br) {
  json j;
  j["chs"] = br.chs;
  j["factorial"] = br.factorial_defined ? json(br.factorial) : json(nullptr);
  j["threshold"] =
      br.threshold_defined ? json(br.threshold_value) : json(nullptr);
  j["k_class"] = ssl::to_string(br.k_class);
  return j;
}

void print_bound_line(const ssl::BoundReport& br) {
  std::cout << "bounds: chs " << br.chs;
  if (br.factorial_defined)
    std::cout << ", factorial " << br.factorial << ", threshold "
              << br.threshold_value;
  else
    std::cout << ", factorial n/a (k > 20)";
  std::cout << ", class " << ssl::to_string(br.k_class) << "\n";
}

void warn_unproved_class(ssl::KClass c, std::int64_t k) {
  if (c == ssl::KClass::other)
    std::cerr << "warning: k=" << k
              << " is neither a prime power nor a semiprime; no bound is "
                 "proved for it (conjecture probing)\n";
}

struct ReportSink {
  std::string path;  // empty = disabled
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();

  void write(const std::string& command, const json& params,
             const json& result) const {
    if (path.empty()) return;
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    json rec;
    rec["timestamp"] = ssl::rfc3339_utc_now();
    rec["command"] = command;
    rec["params"] = params;
    rec["result"] = result;
    rec["elapsed_ms"] = elapsed.count();
    ssl::append_jsonl_line(path, rec.dump());
  }
};

void emit(const std::string& command, const json& params, const json& result,
          bool as_json) {
  if (as_json) {
    json out;
    out["command"] = command;
    out["params"] = params;
    out["result"] = result;
    std::cout << out.dump(2) << "\n";
  }
}

// ---------------------------------------------------------------------------

struct ComputeOpts {
  std::int64_t k = 0;
  std::string set_literal;
  std::string set_file;
  bool as_json = false;
  std::string report;
};

int run_compute(const ComputeOpts& o) {
  ReportSink sink{o.report};
  if (o.k < 2) throw std::invalid_argument("compute: k must be >= 2");
  if (o.set_literal.empty() == o.set_file.empty())
    throw std::invalid_argument(
        "compute: exactly one of --set and --set-file is required");
  const ssl::IntSet a = o.set_literal.empty()
                            ? ssl::parse_set_file(o.set_file)
                            : ssl::parse_set_literal(o.set_literal);
  const ssl::IntSet sum = ssl::add_dilated(a, o.k, a);
  const ssl::BoundReport br =
      ssl::make_bound_report(o.k, static_cast<std::int64_t>(a.size()));

  json params;
  params["k"] = o.k;
  params["set"] = set_to_json(a);
  json result;
  result["size_a"] = a.size();
  result["sum_size"] = sum.size();
  result["elements"] = set_to_json(sum);
  result["bounds"] = bound_report_json(br);

  if (o.as_json) {
    emit("compute", params, result, true);
  } else {
    std::cout << "|A| = " << a.size() << ", k = " << o.k << "\n";
    std::cout << "|A + " << o.k << "*A| = " << sum.size() << "\n";
    std::cout << "elements: " << format_elements(sum) << "\n";
    print_bound_line(br);
  }
  warn_unproved_class(br.k_class, o.k);
  sink.write("compute", params, result);
  return 0;
}

// ---------------------------------------------------------------------------

struct BoundOpts {
  std::int64_t k = 0;
  std::int64_t size = 0;
  std::int64_t j = 0;  // 0 = not given
  std::int64_t b = 0;  // 0 = not given
  bool as_json = false;
  std::string report;
};

int run_bound(const BoundOpts& o) {
  ReportSink sink{o.report};
  const ssl::BoundReport br = ssl::make_bound_report(o.k, o.size);
  const bool with_elementary = o.j > 0 && o.b > 0;
  const std::int64_t elementary =
      with_elementary ? ssl::elementary_bound(o.size, o.j, o.b) : 0;

  json params;
  params["k"] = o.k;
  params["size"] = o.size;
  if (with_elementary) {
    params["j"] = o.j;
    params["b"] = o.b;
  }
  json result = bound_report_json(br);
  result["elementary"] = with_elementary ? json(elementary) : json(nullptr);

  if (o.as_json) {
    emit("bound", params, result, true);
  } else {
    std::cout << "k = " << o.k << ", |A| = " << o.size << "\n";
    print_bound_line(br);
    if (with_elementary)
      std::cout << "elementary (j=" << o.j << ", |B|=" << o.b
                << "): " << elementary << "\n";
  }
  warn_unproved_class(br.k_class, o.k);
  sink.write("bound", params, result);
  return 0;
}

// ---------------------------------------------------------------------------

struct DecomposeOpts {
  std::int64_t k = 0;
  std::string set_literal;
  std::string set_file;
  bool as_json = false;
  std::string report;
};

const char* step_kind_name(ssl::NormalizeStep::Kind k) {
  switch (k) {
    case ssl::NormalizeStep::Kind::divide_gcd: return "divide_gcd";
    case ssl::NormalizeStep::Kind::replace_by_quotient:
      return "replace_by_quotient";
    case ssl::NormalizeStep::Kind::translate: return "translate";
  }
  return "?";
}

int run_decompose(const DecomposeOpts& o) {
  ReportSink sink{o.report};
  if (o.k < 2) throw std::invalid_argument("decompose: k must be >= 2");
  if (o.set_literal.empty() == o.set_file.empty())
    throw std::invalid_argument(
        "decompose: exactly one of --set and --set-file is required");
  const ssl::IntSet input = o.set_literal.empty()
                                ? ssl::parse_set_file(o.set_file)
                                : ssl::parse_set_literal(o.set_literal);
  const ssl::NormalizeResult norm = ssl::normalize(input, o.k);
  std::int64_t shift = 0;
  const ssl::Decomposition d =
      ssl::detail::align_first_offset(norm.set, o.k, shift);

  json params;
  params["k"] = o.k;
  params["set"] = set_to_json(input);

  json steps = json::array();
  for (const ssl::NormalizeStep& st : norm.steps) {
    json sj;
    sj["kind"] = step_kind_name(st.kind);
    sj["amount"] = st.amount;
    sj["after"] = set_to_json(st.after);
    steps.push_back(sj);
  }

  json classes = json::array();
  for (std::size_t i = 1; i <= d.j(); ++i) {
    const ssl::ResidueClass& c = d.classes[i - 1];
    json cj;
    cj["i"] = i;
    cj["offset"] = c.offset;
    cj["quotient"] = set_to_json(c.quotient);
    cj["proj_size"] = ssl::project(c.quotient, o.k).size();
    classes.push_back(cj);
  }

  json special(nullptr);
  std::int64_t p = 0, p1 = 0, p2 = 0;
  if (ssl::is_prime_power(o.k, &p)) {
    json sj;
    sj["kind"] = "prime_power";
    sj["p"] = p;
    try {
      sj["m"] = ssl::special_index(d, p);
    } catch (const std::invalid_argument&) {
      sj["m"] = nullptr;
    }
    special = sj;
  } else if (ssl::is_semiprime(o.k, &p1, &p2)) {
    json sj;
    sj["kind"] = "semiprime";
    const std::int64_t u2 = d.j() >= 2 ? d.classes[1].offset : 0;
    const std::int64_t g = std::gcd(u2, o.k);
    if (d.j() < 2 || g == 1) {
      sj["case"] = "coprime";
    } else {
      if (g != p1) std::swap(p1, p2);
      sj["case"] = "shared";
      sj["p1"] = p1;
      sj["p2"] = p2;
      try {
        sj["n"] = ssl::special_index(d, p1);
      } catch (const std::invalid_argument&) {
        sj["n"] = nullptr;
      }
    }
    special = sj;
  }

  std::vector<std::size_t> delta_sizes;
  for (std::size_t i = 1; i <= d.j(); ++i)
    delta_sizes.push_back(ssl::delta(d, i, i).size());

  json result;
  result["normalize_steps"] = steps;
  result["normalized"] = set_to_json(norm.set);
  result["alignment"] = shift;
  result["aligned"] = set_to_json(d.base);
  result["j"] = d.j();
  result["classes"] = classes;
  result["proper"] = d.proper;
  result["full"] = d.full;
  result["special"] = special;
  result["delta_diagonal_sizes"] = delta_sizes;

  if (o.as_json) {
    emit("decompose", params, result, true);
  } else {
    std::cout << "input: " << format_elements(input) << "\n";
    for (const ssl::NormalizeStep& st : norm.steps)
      std::cout << "normalize: " << step_kind_name(st.kind) << " "
                << st.amount << " -> " << ssl::to_string(st.after) << "\n";
    std::cout << "normalized: " << ssl::to_string(norm.set) << "\n";
    if (shift != 0)
      std::cout << "aligned (shift " << shift
                << "): " << ssl::to_string(d.base) << "\n";
    std::cout << "j = " << d.j() << " classes (mod " << o.k << ")\n";
    for (std::size_t i = 1; i <= d.j(); ++i) {
      const ssl::ResidueClass& c = d.classes[i - 1];
      const std::size_t ps = ssl::project(c.quotient, o.k).size();
      std::cout << "  i=" << i << ": u=" << c.offset
                << " X=" << ssl::to_string(c.quotient) << " |X^|=" << ps
                << (ps == static_cast<std::size_t>(o.k) ? " full" : " proper")
                << "\n";
    }
    auto print_idx = [](const char* name, const std::vector<std::size_t>& v) {
      std::cout << name << " = {";
      for (std::size_t i = 0; i < v.size(); ++i)
        std::cout << (i ? "," : "") << v[i];
      std::cout << "}";
    };
    print_idx("E", d.proper);
    std::cout << "  ";
    print_idx("F", d.full);
    std::cout << "\n";
    if (!special.is_null()) {
      if (special["kind"] == "prime_power")
        std::cout << "special index m = " << special["m"]
                  << " (p = " << special["p"] << ")\n";
      else if (special["case"] == "shared")
        std::cout << "special index n = " << special["n"]
                  << " (p1 = " << special["p1"] << ", p2 = " << special["p2"]
                  << ")\n";
      else
        std::cout << "case (u2,k)=1: second offset coprime to k\n";
    }
    std::cout << "|D_ii| sizes:";
    for (std::size_t i = 0; i < delta_sizes.size(); ++i)
      std::cout << " i=" << (i + 1) << ":" << delta_sizes[i];
    std::cout << "\n";
  }
  sink.write("decompose", params, result);
  return 0;
}

// ---------------------------------------------------------------------------

struct SearchOpts {
  std::int64_t k = 0;
  std::int64_t size = 0;
  std::int64_t diameter = 0;
  std::string mode = "min";
  std::string bound = "chs";
  bool gcd_one = true;
  bool reflection = true;
  unsigned workers = 1;
  std::size_t witness_cap = 16;
  std::size_t violation_cap = 1000;
  bool as_json = false;
  std::string report;
};

int run_search(const SearchOpts& o) {
  ReportSink sink{o.report};
  ssl::SearchSpec spec;
  spec.k = o.k;
  spec.size = o.size;
  spec.diameter = o.diameter;
  spec.gcd_one = o.gcd_one;
  spec.use_reflection = o.reflection;
  spec.workers = o.workers;
  spec.witness_cap = o.witness_cap;
  spec.violation_cap = o.violation_cap;

  if (o.mode == "min" || o.mode == "minimum") {
    spec.mode = ssl::SearchSpec::Mode::minimum;
  } else if (o.mode == "violations") {
    spec.mode = ssl::SearchSpec::Mode::violations;
  } else {
    throw std::invalid_argument("search: --mode must be min or violations");
  }
  if (o.bound == "chs") {
    spec.bound_kind = ssl::SearchSpec::BoundKind::chs;
  } else if (o.bound == "factorial") {
    spec.bound_kind = ssl::SearchSpec::BoundKind::factorial;
  } else {
    spec.bound_kind = ssl::SearchSpec::BoundKind::custom;
    try {
      std::size_t used = 0;
      spec.custom_bound = std::stoll(o.bound, &used);
      if (used != o.bound.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument(
          "search: --bound must be chs, factorial, or an integer");
    }
  }

  warn_unproved_class(ssl::classify_k(o.k), o.k);
  const ssl::SearchResult res = ssl::run_search(spec);

  // NOTE: params/result deliberately omit workers and timing so the
  // structured output is byte-identical for any worker count
  json params;
  params["k"] = o.k;
  params["size"] = o.size;
  params["diameter"] = o.diameter;
  params["mode"] = o.mode == "minimum" ? "min" : o.mode;
  params["bound"] = o.bound;
  params["gcd_one"] = o.gcd_one;
  params["reflection"] = o.reflection;

  json result;
  result["candidates"] = res.candidates;
  int exit_code = 0;
  if (spec.mode == ssl::SearchSpec::Mode::minimum) {
    result["min"] = res.min_size;
    json wits = json::array();
    for (const ssl::IntSet& w : res.witnesses) wits.push_back(set_to_json(w));
    result["witnesses"] = wits;
    result["witness_count"] = res.witness_count;
  } else {
    result["bound"] = res.bound;
    json viols = json::array();
    for (const ssl::Violation& v : res.violations) {
      json vj;
      vj["set"] = set_to_json(v.set);
      vj["value"] = v.value;
      vj["bound"] = res.bound;
      viols.push_back(vj);
    }
    result["violations"] = viols;
    result["violation_count"] = res.violation_count;
    if (res.violation_count > 0) exit_code = 1;
  }

  if (o.as_json) {
    emit("search", params, result, true);
  } else {
    std::cout << "search k=" << o.k << " size=" << o.size << " diameter<="
              << o.diameter << " mode="
              << (spec.mode == ssl::SearchSpec::Mode::minimum ? "min"
                                                              : "violations")
              << " gcd_one=" << (o.gcd_one ? "on" : "off")
              << " reflection=" << (o.reflection ? "on" : "off") << "\n";
    std::cout << "candidates: " << res.candidates << "\n";
    if (spec.mode == ssl::SearchSpec::Mode::minimum) {
      std::cout << "minimum |A+" << o.k << "*A| = " << res.min_size << "\n";
      std::cout << "witnesses (" << res.witnesses.size() << " of "
                << res.witness_count << "):\n";
      for (const ssl::IntSet& w : res.witnesses)
        std::cout << "  " << ssl::to_string(w) << "\n";
    } else {
      std::cout << "bound: " << res.bound << " (" << o.bound << ")\n";
      std::cout << "violations: " << res.violation_count << "\n";
      for (const ssl::Violation& v : res.violations)
        std::cout << "  " << ssl::to_string(v.set) << " -> " << v.value
                  << " < " << res.bound << "\n";
    }
  }

  json report_params = params;
  report_params["workers"] = o.workers;
  sink.write("search", report_params, result);
  return exit_code;
}

// ---------------------------------------------------------------------------

struct VerifyOpts {
  std::string lemma;
  std::int64_t k = 0;
  std::int64_t modulus = 0;
  std::int64_t diameter = 0;
  std::int64_t min_size = 0;
  std::int64_t max_size = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t budget = 100'000'000;
  bool as_json = false;
  std::string report;
};

int run_verify(const VerifyOpts& o) {
  ReportSink sink{o.report};
  ssl::LemmaParams lp;
  lp.k = o.modulus ? o.modulus : o.k;
  lp.diameter = o.diameter;
  lp.min_size = o.min_size;
  lp.max_size = o.max_size;
  lp.samples = o.samples;
  lp.seed = o.seed;
  lp.budget = o.budget;
  const ssl::LemmaReport rep = ssl::verify_lemma(o.lemma, lp);

  json params;
  params["lemma"] = o.lemma;
  if (lp.k) params["k"] = lp.k;
  if (lp.diameter) params["diameter"] = lp.diameter;
  if (lp.min_size) params["min_size"] = lp.min_size;
  if (lp.max_size) params["max_size"] = lp.max_size;
  if (lp.samples) params["samples"] = lp.samples;
  params["seed"] = lp.seed;

  json result;
  result["lemma"] = rep.lemma;
  result["cases_checked"] = rep.cases_checked;
  result["applicable_cases"] = rep.applicable_cases;
  result["failures"] = rep.failures;
  result["failure_examples"] = rep.failure_examples;
  result["sampled"] = rep.sampled;
  json settings;
  for (const auto& [key, value] : rep.params) settings[key] = value;
  result["settings"] = settings;

  if (o.as_json) {
    emit("verify", params, result, true);
  } else {
    std::cout << "lemma " << rep.lemma << ": cases " << rep.cases_checked
              << ", applicable " << rep.applicable_cases << ", failures "
              << rep.failures
              << (rep.sampled ? " (includes sampled cases)" : " (exhaustive)")
              << "\n";
    for (const std::string& ex : rep.failure_examples)
      std::cout << "  FAIL " << ex << "\n";
  }
  sink.write("verify", params, result);
  return rep.failures == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------

struct ExtremalOpts {
  std::int64_t k = 0;
  std::int64_t n = 0;
  std::int64_t h = 0;
  bool check = false;
  bool as_json = false;
  std::string report;
};

int run_extremal(const ExtremalOpts& o) {
  ReportSink sink{o.report};
  const ssl::ExtremalFamily fam = ssl::build_extremal(o.k, o.n, o.h);
  const std::int64_t sum_size =
      static_cast<std::int64_t>(ssl::add_dilated_size(fam.set, o.k, fam.set));
  const std::int64_t chs =
      ssl::chs_bound(o.k, static_cast<std::int64_t>(fam.set.size()));
  const bool in_regime = o.n >= o.k - o.h;

  json params;
  params["k"] = o.k;
  params["n"] = o.n;
  params["h"] = o.h;
  params["check"] = o.check;

  json result;
  result["set"] = set_to_json(fam.set);
  result["size"] = fam.set.size();
  result["sum_size"] = sum_size;
  result["chs"] = chs;
  result["in_regime"] = in_regime;

  int exit_code = 0;
  bool checked = false;
  ssl::ExtremalEquality eq;
  if (o.check && in_regime) {
    eq = ssl::check_extremal_equality(fam);
    checked = true;
    result["rhs"] = eq.rhs;
    result["rhs_is_chs"] = eq.rhs_is_chs;
    result["equal"] = eq.equal;
    if (!eq.equal) exit_code = 1;
  } else {
    result["rhs"] = nullptr;
    result["rhs_is_chs"] = nullptr;
    result["equal"] = nullptr;
  }

  if (o.as_json) {
    emit("extremal", params, result, true);
  } else {
    std::cout << "family k=" << o.k << " n=" << o.n << " h=" << o.h << ": "
              << format_elements(fam.set) << "\n";
    std::cout << "|A| = " << fam.set.size() << ", |A+" << o.k
              << "*A| = " << sum_size << ", chs bound " << chs << "\n";
    if (checked)
      std::cout << "equality vs "
                << (eq.rhs_is_chs ? "chs bound" : "closed form") << ": "
                << eq.lhs << (eq.equal ? " = " : " != ") << eq.rhs << "\n";
  }
  if (!in_regime) {
    std::cerr << "warning: n=" << o.n << " < k-h=" << (o.k - o.h)
              << "; the closed form needs n >= k-h, no equality asserted\n";
  }
  sink.write("extremal", params, result);
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "sumsetlab: dilated sumsets A + k*A, residue-class decompositions, "
      "bounds, exhaustive verification"};
  app.require_subcommand(1);

  ComputeOpts co;
  auto* compute = app.add_subcommand("compute", "compute A + k*A for a set");
  compute->add_option("--k", co.k, "multiplier k >= 2")->required();
  auto* cset = compute->add_option("--set", co.set_literal,
                                   "set literal, e.g. \"0,1,5\"");
  compute->add_option("--set-file", co.set_file,
                      "file with one integer per line")
      ->excludes(cset);
  compute->add_flag("--json", co.as_json, "machine-readable output");
  compute->add_option("--report", co.report, "append a JSONL run record");

  BoundOpts bo;
  auto* bound =
      app.add_subcommand("bound", "evaluate lower-bound formulas for (k, |A|)");
  bound->add_option("--k", bo.k, "multiplier k >= 2")->required();
  bound->add_option("--size", bo.size, "|A| >= 1")->required();
  bound->add_option("--j", bo.j, "class count for the elementary bound");
  bound->add_option("--b", bo.b, "|B| for the elementary bound");
  bound->add_flag("--json", bo.as_json, "machine-readable output");
  bound->add_option("--report", bo.report, "append a JSONL run record");

  DecomposeOpts dopt;
  auto* decompose = app.add_subcommand(
      "decompose", "normalize and split a set into residue classes");
  decompose->add_option("--k", dopt.k, "modulus k >= 2")->required();
  auto* dset = decompose->add_option("--set", dopt.set_literal, "set literal");
  decompose
      ->add_option("--set-file", dopt.set_file,
                   "file with one integer per line")
      ->excludes(dset);
  decompose->add_flag("--json", dopt.as_json, "machine-readable output");
  decompose->add_option("--report", dopt.report, "append a JSONL run record");

  SearchOpts so;
  so.workers = default_workers();
  auto* search = app.add_subcommand(
      "search", "exhaustive search over canonical sets of a fixed size");
  search->add_option("--k", so.k, "multiplier k >= 2")->required();
  search->add_option("--size", so.size, "|A|")->required();
  search->add_option("--diameter", so.diameter, "max element (min is 0)")
      ->required();
  search->add_option("--mode", so.mode, "min | violations (default min)");
  search->add_option("--bound", so.bound,
                     "chs | factorial | integer (violations mode)");
  search->add_flag("--gcd-one,!--no-gcd-one", so.gcd_one,
                   "restrict to gcd-1 sets (default on)");
  search->add_flag("--reflection,!--no-reflection", so.reflection,
                   "halve the space by reflection canonicity (default on)");
  search->add_option("--workers", so.workers,
                     "worker threads (default SUMSETLAB_WORKERS or 1)");
  search->add_option("--witness-cap", so.witness_cap,
                     "max witnesses kept (default 16)");
  search->add_option("--violation-cap", so.violation_cap,
                     "max violations kept (default 1000)");
  search->add_flag("--json", so.as_json, "machine-readable output");
  search->add_option("--report", so.report, "append a JSONL run record");

  VerifyOpts vo;
  auto* verify = app.add_subcommand(
      "verify", "run a statement's exhaustive/sampled verification driver");
  std::string registry_help = "one of:";
  for (const std::string& name : ssl::lemma_registry())
    registry_help += " " + name;
  verify->add_option("--lemma", vo.lemma, registry_help)->required();
  verify->add_option("--k", vo.k, "multiplier/modulus parameter");
  verify->add_option("--modulus", vo.modulus,
                     "modulus (alias for --k, takes precedence)");
  verify->add_option("--diameter", vo.diameter, "slice diameter");
  verify->add_option("--min-size", vo.min_size, "slice minimum |A|");
  verify->add_option("--max-size", vo.max_size, "slice maximum |A|");
  verify->add_option("--samples", vo.samples, "random cases to add");
  verify->add_option("--seed", vo.seed, "PRNG seed (default 0)");
  verify->add_option("--budget", vo.budget,
                     "exhaustive-mode case cap (default 1e8)");
  verify->add_flag("--json", vo.as_json, "machine-readable output");
  verify->add_option("--report", vo.report, "append a JSONL run record");

  ExtremalOpts eo;
  auto* extremal = app.add_subcommand(
      "extremal", "build the family k*{0..n} + {0..h-1} and test equality");
  extremal->set_help_flag("--help", "print this help message and exit");
  extremal->add_option("--k", eo.k, "multiplier k >= 2")->required();
  extremal->add_option("--n", eo.n, "progression length parameter n >= 0")
      ->required();
  extremal->add_option("--h", eo.h, "block length h in [1, k]")->required();
  extremal->add_flag("--check", eo.check, "verify the equality closed form");
  extremal->add_flag("--json", eo.as_json, "machine-readable output");
  extremal->add_option("--report", eo.report, "append a JSONL run record");

  try {
    app.parse(argc, argv);
    if (*compute) return run_compute(co);
    if (*bound) return run_bound(bo);
    if (*decompose) return run_decompose(dopt);
    if (*search) return run_search(so);
    if (*verify) return run_verify(vo);
    if (*extremal) return run_extremal(eo);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: overflow: " << e.what() << "\n";
    return 3;
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "fermat/curve.hpp"
#include "fermat/gf.hpp"
#include "fermat/json_io.hpp"
#include "fermat/surface.hpp"
#include "fermat/verify.hpp"

namespace {

using fermat::Elem;
using fermat::PrimePower;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kDefaultBudget = u64{1} << 25;

u64 default_budget() {
  if (const char* env = std::getenv("FERMAT_BUDGET")) {
    char* end = nullptr;
    u64 v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw std::invalid_argument("FERMAT_BUDGET must be a positive integer");
  }
  return kDefaultBudget;
}

struct Options {
  u64 q = 0;
  unsigned ext = 0;
  bool ext_given = false;
  std::string object = "curve";
  std::string method = "parametric";
  u64 q_max = 9;
  u64 q_large = 0;
  u64 budget = 0;
  unsigned workers = 1;
  std::string output;
};

class OutputSink {
 public:
  explicit OutputSink(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw std::invalid_argument("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

unsigned resolve_ext(Options& opt) {
  if (opt.object == "surface") {
    if (!opt.ext_given) return 2;
    if (opt.ext != 2) throw std::invalid_argument("the surface is only defined over the quadratic extension: use --ext 2");
    return 2;
  }
  unsigned ext = opt.ext_given ? opt.ext : 1;
  if (ext < 1 || ext > 3) {
    throw std::invalid_argument("curve enumeration supports --ext 1, 2 or 3 (degree 4 is reachable only through verify)");
  }
  return ext;
}

void refuse_brute(u128 reps, u64 budget) {
  throw std::invalid_argument("brute-force scan needs " + fermat::dec_string(reps) +
                              " projective representatives, which exceeds the budget of " +
                              std::to_string(budget) +
                              " (raise --budget or FERMAT_BUDGET to override)");
}

void refuse_parametric(u64 points, u64 budget) {
  throw std::invalid_argument("parametric enumeration would emit " + std::to_string(points) +
                              " points, which exceeds the budget of " + std::to_string(budget));
}

int run_enumerate(Options& opt) {
  OutputSink sink(opt.output);
  PrimePower pp = fermat::prime_power_from_q(opt.q);
  unsigned ext = resolve_ext(opt);
  auto& os = sink.stream();

  if (opt.object == "curve") {
    if (opt.method == "brute") {
      u128 reps = fermat::curve_brute_representatives(pp, ext);
      if (reps > opt.budget) refuse_brute(reps, opt.budget);
    } else {
      auto formula = fermat::curve_count_formula(pp, ext);
      if (formula.total > opt.budget) refuse_parametric(formula.total, opt.budget);
    }
    auto t = fermat::TowerCtx::build(pp, ext);
    auto pts = opt.method == "brute" ? fermat::enumerate_curve_brute(*t, opt.workers)
                                     : fermat::enumerate_curve(*t);
    for (const auto& pt : pts) os << fermat::point_json(t->top(), pt).dump() << "\n";
  } else {
    if (opt.method == "brute") {
      u128 reps = fermat::surface_brute_representatives(pp);
      if (reps > opt.budget) refuse_brute(reps, opt.budget);
    } else {
      auto formula = fermat::surface_count_formula(pp);
      if (formula.total > opt.budget) refuse_parametric(formula.total, opt.budget);
    }
    auto t = fermat::TowerCtx::build(pp, 2);
    auto pts = opt.method == "brute" ? fermat::enumerate_surface_brute(*t, opt.workers).points
                                     : fermat::enumerate_surface(*t);
    for (const auto& pt : pts) os << fermat::point_json(t->top(), pt).dump() << "\n";
  }
  return 0;
}

int run_count(Options& opt) {
  OutputSink sink(opt.output);
  PrimePower pp = fermat::prime_power_from_q(opt.q);
  unsigned ext = resolve_ext(opt);
  auto& os = sink.stream();
  nlohmann::json report;

  if (opt.object == "curve") {
    auto formula = fermat::curve_count_formula(pp, ext);
    if (formula.total > opt.budget) refuse_parametric(formula.total, opt.budget);
    auto t = fermat::TowerCtx::build(pp, ext);
    auto pts = fermat::enumerate_curve(*t);
    std::unique_ptr<std::vector<fermat::ProjPoint2>> brute;
    if (opt.method == "brute") {
      u128 reps = fermat::curve_brute_representatives(pp, ext);
      if (reps > opt.budget) refuse_brute(reps, opt.budget);
      brute = std::make_unique<std::vector<fermat::ProjPoint2>>(fermat::enumerate_curve_brute(*t, opt.workers));
    }
    report = fermat::curve_count_report(pp, ext, t->top(), formula, &pts, brute.get());
  } else {
    auto formula = fermat::surface_count_formula(pp);
    if (formula.total > opt.budget) refuse_parametric(formula.total, opt.budget);
    auto t = fermat::TowerCtx::build(pp, 2);
    auto pts = fermat::enumerate_surface(*t);
    std::unique_ptr<fermat::SurfaceBruteResult> brute;
    if (opt.method == "brute") {
      u128 reps = fermat::surface_brute_representatives(pp);
      if (reps > opt.budget) refuse_brute(reps, opt.budget);
      brute = std::make_unique<fermat::SurfaceBruteResult>(fermat::enumerate_surface_brute(*t, opt.workers));
    }
    report = fermat::surface_count_report(pp, t->top(), formula, &pts, brute.get());
  }
  os << report.dump() << "\n";
  return fermat::count_report_passes(report) ? 0 : 1;
}

int run_verify(Options& opt) {
  OutputSink sink(opt.output);
  auto reports = fermat::full_report(opt.q_max, opt.budget, opt.workers);
  auto& os = sink.stream();
  for (const auto& r : reports) os << fermat::verify_report_json(r).dump() << "\n";
  return fermat::all_pass(reports) ? 0 : 1;
}

int run_bench(Options& opt) {
  OutputSink sink(opt.output);
  const bool curve = opt.object == "curve";
  unsigned ext = (curve && !opt.ext_given) ? 3 : resolve_ext(opt);
  if (opt.q_large == 0) opt.q_large = curve ? 101 : 27;

  u64 q_full = 0;
  for (u64 q = 2; q < (u64{1} << 20); ++q) {
    PrimePower pp;
    try {
      pp = fermat::prime_power_from_q(q);
    } catch (const std::exception&) {
      continue;
    }
    u128 reps = curve ? fermat::curve_brute_representatives(pp, ext)
                      : fermat::surface_brute_representatives(pp);
    if (reps > opt.budget) break;
    q_full = q;
  }
  if (q_full == 0) throw std::invalid_argument("budget admits no brute-force scan at all");

  using clock = std::chrono::steady_clock;
  auto ms_since = [](clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count();
  };

  nlohmann::json out{{"object", opt.object}, {"ext", ext}, {"budget", opt.budget}, {"workers", opt.workers}};
  {
    PrimePower pp = fermat::prime_power_from_q(q_full);
    auto t = fermat::TowerCtx::build(pp, ext);
    auto t0 = clock::now();
    std::size_t n_param = curve ? fermat::enumerate_curve(*t).size() : fermat::enumerate_surface(*t).size();
    auto param_ms = ms_since(t0);
    t0 = clock::now();
    std::size_t n_brute = curve ? fermat::enumerate_curve_brute(*t, opt.workers).size()
                                : fermat::enumerate_surface_brute(*t, opt.workers).points.size();
    auto brute_ms = ms_since(t0);
    out["full_scan"] = nlohmann::json{{"q", q_full},
                                      {"parametric_ms", param_ms},
                                      {"brute_ms", brute_ms},
                                      {"parametric_points", n_param},
                                      {"brute_points", n_brute}};
  }
  {
    PrimePower pp = fermat::prime_power_from_q(opt.q_large);
    u64 total = curve ? fermat::curve_count_formula(pp, ext).total
                      : fermat::surface_count_formula(pp).total;
    if (total > opt.budget) refuse_parametric(total, opt.budget);
    auto t = fermat::TowerCtx::build(pp, ext);
    auto t0 = clock::now();
    std::size_t n_param = curve ? fermat::enumerate_curve(*t).size() : fermat::enumerate_surface(*t).size();
    auto param_ms = ms_since(t0);
    u128 reps = curve ? fermat::curve_brute_representatives(pp, ext)
                      : fermat::surface_brute_representatives(pp);
    out["large_parametric"] = nlohmann::json{{"q", opt.q_large},
                                             {"parametric_ms", param_ms},
                                             {"parametric_points", n_param},
                                             {"formula_points", total},
                                             {"brute_representatives", fermat::dec_string(reps)},
                                             {"brute_within_budget", reps <= opt.budget}};
  }
  sink.stream() << out.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational points on degree-(q-1) Fermat curves and surfaces over finite fields"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool with_q) {
    if (with_q) sub->add_option("--q", opt.q, "Prime power q = p^r")->required();
    sub->add_option("--budget", opt.budget, "Maximum projective representatives for brute scans")
        ->check(CLI::PositiveNumber);
    sub->add_option("--workers", opt.workers, "Worker threads for brute scans")->check(CLI::Range(1u, 256u));
    sub->add_option("--output", opt.output, "Output path (default: standard output)");
  };

  auto* cmd_enum = app.add_subcommand("enumerate", "Emit the point set as JSON lines, canonically sorted");
  add_common(cmd_enum, true);
  cmd_enum->add_option("--ext", opt.ext, "Extension degree i of F_{q^i}")->each([&](const std::string&) { opt.ext_given = true; });
  cmd_enum->add_option("--object", opt.object, "curve or surface")->check(CLI::IsMember({"curve", "surface"}));
  cmd_enum->add_option("--method", opt.method, "parametric or brute")->check(CLI::IsMember({"parametric", "brute"}));

  auto* cmd_count = app.add_subcommand("count", "Compare the closed-form count against enumeration");
  add_common(cmd_count, true);
  cmd_count->add_option("--ext", opt.ext, "Extension degree i of F_{q^i}")->each([&](const std::string&) { opt.ext_given = true; });
  cmd_count->add_option("--object", opt.object, "curve or surface")->check(CLI::IsMember({"curve", "surface"}));
  cmd_count->add_option("--method", opt.method, "parametric, or brute to add the oracle comparison")
      ->check(CLI::IsMember({"parametric", "brute"}));

  auto* cmd_verify = app.add_subcommand("verify", "Run every check for all prime powers up to --q-max");
  add_common(cmd_verify, false);
  cmd_verify->add_option("--q-max", opt.q_max, "Largest prime power to certify")->required();

  auto* cmd_bench = app.add_subcommand("bench", "Time parametric vs brute enumeration");
  add_common(cmd_bench, false);
  cmd_bench->add_option("--ext", opt.ext, "Extension degree i of F_{q^i}")->each([&](const std::string&) { opt.ext_given = true; });
  cmd_bench->add_option("--object", opt.object, "curve or surface")->check(CLI::IsMember({"curve", "surface"}));
  cmd_bench->add_option("--q-large", opt.q_large, "Large q for the parametric-only timing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (opt.budget == 0) opt.budget = default_budget();
    if (cmd_enum->parsed()) return run_enumerate(opt);
    if (cmd_count->parsed()) return run_count(opt);
    if (cmd_verify->parsed()) return run_verify(opt);
    if (cmd_bench->parsed()) return run_bench(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

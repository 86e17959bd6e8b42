// flatsum: command-line front end.
//
//   flatsum construct consecutive --n 10 --output set.txt
//   flatsum eval --input set.txt --tol 1e-6
//   flatsum perturb --input set.txt --case sine --eps-output eps.txt
//   flatsum density --set set.txt --m 20,40 --format csv
//   flatsum density --growth --n 100 --m1 auto
//   flatsum scan --constructions consecutive,random --n 100,1000 --seed 42
//
// Exit codes: 0 success, 2 usage or domain error, 3 budget/resource error.
// Results go to --output ("-" is stdout); diagnostics go to stderr.

#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "flatsum/density.hpp"
#include "flatsum/experiment.hpp"
#include "flatsum/io.hpp"
#include "flatsum/perturb.hpp"
#include "flatsum/trigsum.hpp"

namespace {

using flatsum::DomainError;
using flatsum::ResourceError;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

void emit(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    std::cout.flush();
  } else {
    flatsum::write_text_file(path, text);
  }
}

struct Common {
  std::string output = "-";
  double tol = 1e-6;
  std::uint64_t budget = std::uint64_t{1} << 28;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--output", c.output, "Output path, '-' for stdout")->capture_default_str();
  cmd->add_option("--tol", c.tol, "Tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--budget", c.budget, "Evaluation budget for certified extrema")
      ->capture_default_str();
}

int run_construct(const flatsum::ConstructionParams& params, const Common& common) {
  const flatsum::FrequencySet set = flatsum::build_construction(params);
  const json meta = flatsum::provenance(params, set);
  emit(common.output, flatsum::format_frequency_set(set, meta.dump()));
  if (common.output != "-") {
    flatsum::write_text_file(common.output + ".meta.json", meta.dump(2) + "\n");
  }
  std::cerr << "constructed " << params.name << ": N=" << set.size()
            << " lambda_N=" << set.max() << "\n";
  return kExitOk;
}

int run_eval(const std::string& input, const std::string& which, const Common& common) {
  const flatsum::FrequencySet set = flatsum::read_frequency_file(input);
  flatsum::ExtremumOptions opts;
  opts.budget = common.budget;
  json out{{"n", set.size()},
           {"lambda_max", set.max()},
           {"parseval_floor", flatsum::parseval_floor(static_cast<std::int64_t>(set.size()))}};
  int code = kExitOk;
  auto run = [&](const char* key, auto&& fn) {
    try {
      out[key] = fn();
    } catch (const flatsum::ExtremumBudgetError& e) {
      json partial = e.best_so_far();
      partial["partial"] = true;
      partial["error"] = e.what();
      out[key] = partial;
      code = kExitResource;
    }
  };
  if (which == "m1" || which == "both") {
    run("m1", [&] { return flatsum::m1(set, common.tol, opts); });
  }
  if (which == "m2" || which == "both") {
    run("m2", [&] { return flatsum::m2(set, common.tol, opts); });
  }
  emit(common.output, out.dump(2));
  return code;
}

int run_perturb(const std::string& input, const std::string& which_case,
                const std::string& signs_path, const std::string& eps_output,
                std::uint64_t x0_budget, const Common& common) {
  const flatsum::FrequencySet set = flatsum::read_frequency_file(input);
  flatsum::TheoremOptions opts;
  opts.x0_budget = x0_budget;
  opts.extremum.budget = common.budget;
  if (!signs_path.empty()) opts.forced_signs = flatsum::read_sign_file(signs_path);
  const auto c = which_case == "sine" ? flatsum::PerturbationCase::Sine
                                      : flatsum::PerturbationCase::Cosine;
  const flatsum::PerturbationReport report = flatsum::run_theorem(set, c, common.tol, opts);
  for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
  emit(common.output, json(report).dump(2));
  if (!eps_output.empty()) emit(eps_output, flatsum::format_sign_column(report.eps));
  return kExitOk;
}

struct DensityArgs {
  std::string set_path;
  std::vector<std::int64_t> m;
  bool growth = false;
  std::int64_t n = 0;
  std::string m1 = "auto";
  std::string format = "json";
};

int run_density(const DensityArgs& args, const Common& common) {
  const double quad_tol = std::min(common.tol, 1e-9);
  std::optional<flatsum::FrequencySet> set;
  if (!args.set_path.empty()) set = flatsum::read_frequency_file(args.set_path);
  if (args.m.empty() && !args.growth) {
    throw DomainError("density: give --m and/or --growth");
  }

  std::optional<double> m1_value;
  if (args.m1 != "auto") {
    try {
      m1_value = std::stod(args.m1);
    } catch (const std::exception&) {
      throw DomainError("density: --m1 must be 'auto' or a number");
    }
  }

  json out = json::object();
  std::string csv;
  if (!args.m.empty()) {
    std::optional<double> m1_for_rows = m1_value;
    if (set && !m1_for_rows) {
      m1_for_rows = flatsum::m1(*set, common.tol).certified_bound;
      std::cerr << "m1 certified bound of input set: " << *m1_for_rows << "\n";
    }
    json rows = json::array();
    csv = "m,l1_norm,count_exact,count_bound\n";
    for (std::int64_t m : args.m) {
      const auto r = flatsum::density_report(set ? &*set : nullptr, flatsum::KernelOrder(m),
                                             m1_for_rows, quad_tol);
      rows.push_back(r);
      char buf[160];
      std::snprintf(buf, sizeof buf, "%lld,%.17g,", static_cast<long long>(r.m), r.l1_norm);
      csv += buf;
      if (r.count_exact) csv += std::to_string(*r.count_exact);
      csv += ",";
      if (r.count_bound) {
        std::snprintf(buf, sizeof buf, "%.17g", *r.count_bound);
        csv += buf;
      }
      csv += "\n";
    }
    out["rows"] = rows;
  }
  if (args.growth) {
    if (args.n < 1) throw DomainError("density --growth needs --n >= 1");
    const double m1_growth =
        m1_value ? *m1_value : std::pow(static_cast<double>(args.n), 2.0 / 3.0);
    const auto r = flatsum::min_cutoff_for_count(args.n, m1_growth, quad_tol);
    if (r.exceeded) {
      std::cerr << "min cutoff exceeds representable range (2^52); reporting the last bound\n";
    }
    json g = r;
    g["n"] = args.n;
    g["m1_value"] = m1_growth;
    out["growth"] = g;
    char buf[256];
    std::snprintf(buf, sizeof buf, "n,m1_value,min_cutoff,exceeded,bound\n%lld,%.17g,%lld,%d,%.17g\n",
                  static_cast<long long>(args.n), m1_growth,
                  static_cast<long long>(r.cutoff), r.exceeded ? 1 : 0, r.bound);
    csv += buf;
  }
  emit(common.output, args.format == "csv" ? csv : out.dump(2));
  return kExitOk;
}

struct ScanArgs {
  std::vector<std::string> constructions;
  std::vector<std::int64_t> n;
  std::vector<std::int64_t> p;
  std::int64_t lambda_min = 11;
  std::int64_t lambda_max = 1'000'000;
  std::uint64_t seed = 0;
};

int run_scan(const ScanArgs& args, const Common& common) {
  flatsum::ExtremumOptions opts;
  opts.budget = common.budget;
  std::string csv = flatsum::scan_csv_header() + "\n";
  std::size_t rows = 0, failed = 0;
  for (const auto& name : args.constructions) {
    const auto& grid = name == "sidon-diff" ? args.p : args.n;
    if (grid.empty()) {
      throw DomainError("scan: construction '" + name + "' needs " +
                        (name == "sidon-diff" ? "--p" : "--n") + " values");
    }
    for (std::int64_t v : grid) {
      flatsum::ConstructionParams params;
      params.name = name;
      (name == "sidon-diff" ? params.p : params.n) = v;
      params.lambda_min = args.lambda_min;
      params.lambda_max = args.lambda_max;
      params.seed = args.seed;
      const auto row = flatsum::run_scan_row(params, common.tol, opts);
      ++rows;
      if (!row.error.empty()) {
        ++failed;
        std::cerr << "row " << name << " " << v << " failed: " << row.error << "\n";
      }
      csv += flatsum::to_csv(row) + "\n";
    }
  }
  emit(common.output, csv);
  return rows > 0 && failed == rows ? kExitUsage : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flat sine/cosine sums: certified extrema, sign perturbation, density bounds"};
  app.require_subcommand(1);

  Common common;

  flatsum::ConstructionParams cparams;
  auto* construct = app.add_subcommand("construct", "Generate a frequency set file");
  construct->add_option("name", cparams.name, "consecutive | random | sidon-diff | rounded-exp")
      ->required()
      ->check(CLI::IsMember(flatsum::construction_names()));
  construct->add_option("--n", cparams.n, "Number of frequencies");
  construct->add_option("--p", cparams.p, "Prime for sidon-diff");
  construct->add_option("--min", cparams.lambda_min, "Smallest frequency (random)")
      ->capture_default_str();
  construct->add_option("--max", cparams.lambda_max, "Largest frequency (random)")
      ->capture_default_str();
  construct->add_option("--seed", cparams.seed, "RNG seed (random)")->capture_default_str();
  add_common(construct, common);

  std::string input;
  std::string which = "both";
  auto* eval = app.add_subcommand("eval", "Certified M1 / M2 of a frequency set");
  eval->add_option("--input", input, "Frequency set file")->required();
  eval->add_option("--which", which, "m1 | m2 | both")
      ->check(CLI::IsMember({"m1", "m2", "both"}))
      ->capture_default_str();
  add_common(eval, common);

  std::string pcase = "sine";
  std::string signs_path;
  std::string eps_output;
  std::uint64_t x0_budget = std::uint64_t{1} << 14;
  auto* perturb = app.add_subcommand("perturb", "Run the +-1 perturbation procedure");
  perturb->add_option("--input", input, "Frequency set file")->required();
  perturb->add_option("--case", pcase, "sine | cosine")
      ->check(CLI::IsMember({"sine", "cosine"}))
      ->capture_default_str();
  perturb->add_option("--signs", signs_path, "Force this +-1 column instead of the sign rule");
  perturb->add_option("--eps-output", eps_output, "Write the sign column here");
  perturb->add_option("--x0-budget", x0_budget, "Samples for the x0 search (>= 1024)")
      ->capture_default_str();
  add_common(perturb, common);

  DensityArgs dargs;
  auto* density = app.add_subcommand("density", "Conjugate Dirichlet kernel norms and counts");
  density->add_option("--set", dargs.set_path, "Frequency set file");
  density->add_option("--m", dargs.m, "Kernel orders (comma separated)")->delimiter(',');
  density->add_flag("--growth", dargs.growth, "Report the minimal cutoff for --n frequencies");
  density->add_option("--n", dargs.n, "Frequency count for --growth");
  density->add_option("--m1", dargs.m1, "M1 value or 'auto'")->capture_default_str();
  density->add_option("--format", dargs.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  add_common(density, common);

  ScanArgs sargs;
  std::string format = "csv";
  auto* scan = app.add_subcommand("scan", "M1/M2 across constructions and sizes (CSV)");
  scan->add_option("--constructions", sargs.constructions, "Comma separated construction names")
      ->delimiter(',')
      ->required()
      ->check(CLI::IsMember(flatsum::construction_names()));
  scan->add_option("--n", sargs.n, "N grid (comma separated)")->delimiter(',');
  scan->add_option("--p", sargs.p, "Prime grid for sidon-diff")->delimiter(',');
  scan->add_option("--min", sargs.lambda_min, "Smallest frequency (random)")->capture_default_str();
  scan->add_option("--max", sargs.lambda_max, "Largest frequency (random)")->capture_default_str();
  scan->add_option("--seed", sargs.seed, "RNG seed (random)")->capture_default_str();
  scan->add_option("--format", format, "csv")->check(CLI::IsMember({"csv"}));
  add_common(scan, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*construct) return run_construct(cparams, common);
    if (*eval) return run_eval(input, which, common);
    if (*perturb) return run_perturb(input, pcase, signs_path, eps_output, x0_budget, common);
    if (*density) return run_density(dargs, common);
    if (*scan) return run_scan(sargs, common);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitResource;
  }
  return kExitUsage;
}

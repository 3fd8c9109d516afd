// abelian-verify: evaluate library functions and check identities.
//
//   abelian-verify eval <fn> <args...>
//   abelian-verify verify [ids... | all] [flags]
//   abelian-verify grid <id> --region re0,re1,im0,im1 --steps N [flags]
//
// Exit codes: 0 all pass, 1 verification failure, 2 usage or config error,
// 3 domain or accuracy error during eval.

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "abelian/hypergeometric.hpp"
#include "abelian/modular.hpp"
#include "abelian/uniformization.hpp"
#include "abelian/verify.hpp"
#include "abelian/weierstrass.hpp"

namespace {

using abelian::Complex;
using abelian::TauPoint;
namespace av = abelian::verify;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitEval = 3;

using Args = std::vector<Complex>;

struct Function {
  std::size_t arity;
  std::function<Complex(const Args&)> fn;
  int digits = 15;
  std::string signature;
};

int as_int(Complex v, const char* what) {
  if (v.imag() != 0.0 || v.real() != std::round(v.real())) {
    throw av::ConfigError(std::string(what) + " must be an integer");
  }
  return static_cast<int>(v.real());
}

abelian::IntegralBase as_base(Complex v) {
  switch (as_int(v, "base")) {
    case 0: return abelian::IntegralBase::from_zero;
    case 1: return abelian::IntegralBase::from_infinity;
    default: throw av::ConfigError("base must be 0 (from zero) or 1 (from infinity)");
  }
}

const std::map<std::string, Function>& functions() {
  using namespace abelian;
  static const std::map<std::string, Function> table = {
      {"principal_power", {2, [](const Args& a) { return principal_power(a[0], a[1]); }, 15, "z a"}},
      {"theta2", {1, [](const Args& a) { return theta2(TauPoint(a[0])); }, 15, "tau"}},
      {"theta3", {1, [](const Args& a) { return theta3(TauPoint(a[0])); }, 15, "tau"}},
      {"theta4", {1, [](const Args& a) { return theta4(TauPoint(a[0])); }, 15, "tau"}},
      {"dedekind_eta", {1, [](const Args& a) { return dedekind_eta(TauPoint(a[0])); }, 15, "tau"}},
      {"hauptmodul_lemniscatic", {1, [](const Args& a) { return hauptmodul_lemniscatic(TauPoint(a[0])); }, 15, "tau"}},
      {"hauptmodul_equianharmonic",
       {1, [](const Args& a) { return hauptmodul_equianharmonic(TauPoint(a[0])); }, 15, "tau"}},
      {"hauptmodul_hyperelliptic",
       {1, [](const Args& a) { return hauptmodul_hyperelliptic(TauPoint(a[0])); }, 15, "tau"}},
      {"sqrt_theta_ratio", {1, [](const Args& a) { return sqrt_theta_ratio(TauPoint(a[0])); }, 15, "tau"}},
      {"gauss_2f1",
       {4, [](const Args& a) { return gauss_2f1(HypergeometricParams(a[0], a[1], a[2]), a[3]); }, 15, "a b c z"}},
      {"incomplete_integral_2f1",
       {5,
        [](const Args& a) {
          return incomplete_integral_2f1({a[0], a[1], as_int(a[2], "n"), a[3], as_base(a[4])});
        },
        15, "alpha beta n z base(0|1)"}},
      {"oracle_incomplete_integral",
       {5,
        [](const Args& a) {
          return oracle_incomplete_integral({a[0], a[1], as_int(a[2], "n"), a[3], as_base(a[4])});
        },
        15, "alpha beta n z base(0|1)"}},
      {"gamma_fn", {1, [](const Args& a) { return gamma_fn(a[0]); }, 15, "z"}},
      {"euler_beta", {2, [](const Args& a) { return euler_beta(a[0], a[1]); }, 15, "a b"}},
      {"elliptic_K", {1, [](const Args& a) { return elliptic_K(a[0]); }, 15, "k"}},
      {"elliptic_F", {2, [](const Args& a) { return elliptic_F(a[0], a[1]); }, 15, "x k"}},
      {"wp", {3, [](const Args& a) { return wp(a[0], {a[1], a[2]}); }, 15, "u g2 g3"}},
      {"wp_prime", {3, [](const Args& a) { return wp_prime(a[0], {a[1], a[2]}); }, 15, "u g2 g3"}},
      {"weier_zeta", {3, [](const Args& a) { return weier_zeta(a[0], {a[1], a[2]}); }, 15, "u g2 g3"}},
      {"weier_sigma", {3, [](const Args& a) { return weier_sigma(a[0], {a[1], a[2]}); }, 15, "u g2 g3"}},
      {"wp_inverse_lemniscatic", {1, [](const Args& a) { return wp_inverse_lemniscatic(a[0]); }, 15, "x"}},
      {"wp_inverse_equianharmonic", {1, [](const Args& a) { return wp_inverse_equianharmonic(a[0]); }, 15, "z"}},
      {"u0_constant", {0, [](const Args&) { return u0_constant(); }, 13, ""}},
      {"integral_second_kind",
       {3, [](const Args& a) { return integral_second_kind(a[0], {a[1], a[2]}); }, 15, "z g2 g3"}},
      {"integral_third_kind",
       {4, [](const Args& a) { return integral_third_kind(a[0], {a[1]}, {a[2], a[3]}); }, 15, "z alpha g2 g3"}},
      {"u_lemniscatic", {1, [](const Args& a) { return u_lemniscatic(TauPoint(a[0])); }, 15, "tau"}},
      {"u_equianharmonic_root", {1, [](const Args& a) { return u_equianharmonic_root(TauPoint(a[0])); }, 15, "tau"}},
      {"u_equianharmonic_rootfree",
       {1, [](const Args& a) { return u_equianharmonic_rootfree(TauPoint(a[0])); }, 15, "tau"}},
      {"u_hyperelliptic",
       {2, [](const Args& a) { return u_hyperelliptic(as_int(a[0], "m"), TauPoint(a[1])); }, 15, "m tau"}},
  };
  return table;
}

std::string function_list() {
  std::string out;
  for (const auto& [name, f] : functions()) out += "  " + name + " " + f.signature + "\n";
  return out;
}

int cmd_eval(const std::string& name, const std::vector<std::string>& raw) {
  const auto it = functions().find(name);
  if (it == functions().end()) {
    std::cerr << "error: unknown function '" << name << "'\nfunctions:\n" << function_list();
    return kExitUsage;
  }
  const Function& f = it->second;
  if (raw.size() != f.arity) {
    std::cerr << "error: " << name << " takes " << f.arity << " argument(s): " << name << " "
              << f.signature << "\n";
    return kExitUsage;
  }
  Args args;
  try {
    for (const auto& s : raw) args.push_back(av::parse_complex(s));
  } catch (const av::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    std::cout << av::format_complex(f.fn(args), f.digits) << "\n";
  } catch (const av::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const abelian::Error& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
    return kExitEval;
  }
  return 0;
}

struct CommonFlags {
  std::optional<double> tol;
  std::optional<double> stencil_radius;
  std::optional<int> stencil_nodes;
  std::optional<int> max_terms;
  std::optional<int> m;
  std::optional<unsigned> threads;
  std::string output;
  std::string report;
  std::string config;
  std::vector<std::string> params;
};

void add_common(CLI::App* sub, CommonFlags& f) {
  sub->add_option("--tol", f.tol, "Tolerance for every selected identity");
  sub->add_option("--stencil-radius", f.stencil_radius, "Cauchy stencil radius");
  sub->add_option("--stencil-nodes", f.stencil_nodes, "Cauchy stencil nodes (power of 2, >= 16)");
  sub->add_option("--max-terms", f.max_terms, "Series truncation limit");
  sub->add_option("--m", f.m, "Restrict hyperelliptic identities to this m (0..3)");
  sub->add_option("--threads", f.threads, "Worker threads (0 = all cores)");
  sub->add_option("--output", f.output, "human or json")->check(CLI::IsMember({"human", "json"}));
  sub->add_option("--report", f.report, "Also write json-lines to this file");
  sub->add_option("--config", f.config, "key = value config file");
  sub->add_option("--param", f.params, "Config override key=value (repeatable)");
}

av::RunConfig build_config(const CommonFlags& f, const std::vector<const av::IdentityInfo*>& ids,
                           av::OutputFormat default_output) {
  av::RunConfig config;
  config.output = default_output;
  if (!f.config.empty()) av::apply_config_file(config, f.config);
  for (const auto& p : f.params) av::apply_config_text(config, p);
  if (f.tol) {
    for (const auto* info : ids) config.tolerance[info->id] = *f.tol;
  }
  if (f.stencil_radius) config.stencil_radius = *f.stencil_radius;
  if (f.stencil_nodes) config.stencil_nodes = *f.stencil_nodes;
  if (f.max_terms) config.truncation.max_terms = *f.max_terms;
  if (f.m) config.m = *f.m;
  if (f.threads) config.threads = *f.threads;
  if (f.output == "json") config.output = av::OutputFormat::json;
  if (f.output == "human") config.output = av::OutputFormat::human;
  config.validate();
  return config;
}

int emit(const std::vector<std::pair<const av::IdentityInfo*, std::vector<av::Sample>>>& plan,
         const av::RunConfig& config, const std::string& report_path) {
  std::ofstream report;
  if (!report_path.empty()) {
    report.open(report_path);
    if (!report) {
      std::cerr << "error: cannot write report '" << report_path << "'\n";
      return kExitUsage;
    }
  }
  av::Summary summary;
  for (const auto& [info, samples] : plan) {
    for (const auto& r : av::run(*info, samples, config)) {
      summary.add(r);
      if (config.output == av::OutputFormat::json) {
        std::cout << av::to_json_line(r) << "\n";
      } else {
        std::cout << av::to_human_line(r) << "\n";
      }
      if (report) report << av::to_json_line(r) << "\n";
    }
  }
  (config.output == av::OutputFormat::json ? std::cerr : std::cout) << av::summary_line(summary) << "\n";
  return summary.ok() ? 0 : kExitFailure;
}

std::vector<const av::IdentityInfo*> resolve(const std::vector<std::string>& names) {
  std::vector<const av::IdentityInfo*> out;
  if (names.empty() || (names.size() == 1 && names[0] == "all")) {
    for (const auto& info : av::registry()) out.push_back(&info);
    return out;
  }
  for (const auto& n : names) {
    const auto* info = av::find_identity(n);
    if (!info) throw av::ConfigError("unknown identity '" + n + "'");
    out.push_back(info);
  }
  return out;
}

std::vector<double> parse_region(const std::string& text) {
  std::vector<double> v;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    const Complex c = av::parse_complex(part);
    if (c.imag() != 0.0) throw av::ConfigError("--region takes four real numbers");
    v.push_back(c.real());
  }
  if (v.size() != 4) throw av::ConfigError("--region takes re0,re1,im0,im1");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evaluate special functions and verify uniformization identities"};
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "Evaluate a function at complex arguments");
  std::string fn_name;
  std::vector<std::string> fn_args;
  eval->add_option("function", fn_name, "Function name")->required();
  eval->add_option("args", fn_args, "Complex arguments (a+bi, a-bi, bi, i, a)");
  eval->footer("functions:\n" + function_list());
  eval->allow_extras(false);
  eval->prefix_command(false);

  auto* verify = app.add_subcommand("verify", "Run identities on their shipped samples");
  std::vector<std::string> ids;
  CommonFlags verify_flags;
  verify->add_option("ids", ids, "Identity ids or 'all'");
  add_common(verify, verify_flags);

  auto* grid = app.add_subcommand("grid", "Run one identity over a steps x steps lattice");
  std::string grid_id;
  std::string region;
  int steps = 0;
  CommonFlags grid_flags;
  grid->add_option("id", grid_id, "Identity id")->required();
  grid->add_option("--region", region, "re0,re1,im0,im1")->required();
  grid->add_option("--steps", steps, "Points per axis")->required();
  add_common(grid, grid_flags);

  auto* list = app.add_subcommand("list", "List identities and functions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(fn_name, fn_args);
    if (list->parsed()) {
      for (const auto& info : av::registry()) {
        std::cout << info.id << (info.informational ? " [report-only]" : "") << "  " << info.summary << "\n";
      }
      std::cout << "\nfunctions:\n" << function_list();
      return 0;
    }
    if (verify->parsed()) {
      const auto infos = resolve(ids);
      const auto config = build_config(verify_flags, infos, av::OutputFormat::human);
      std::vector<std::pair<const av::IdentityInfo*, std::vector<av::Sample>>> plan;
      for (const auto* info : infos) plan.emplace_back(info, av::samples_for(*info, config));
      return emit(plan, config, verify_flags.report);
    }
    if (grid->parsed()) {
      const auto infos = resolve({grid_id});
      const auto config = build_config(grid_flags, infos, av::OutputFormat::json);
      const auto r = parse_region(region);
      const auto points = av::grid_points(r[0], r[1], r[2], r[3], steps);
      return emit({{infos[0], av::expand(*infos[0], points, config)}}, config, grid_flags.report);
    }
  } catch (const av::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const abelian::Error& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
    return kExitEval;
  }
  return kExitUsage;
}

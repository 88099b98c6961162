#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <omp.h>

#include "fockpw/cutoff.hpp"
#include "fockpw/errors.hpp"
#include "fockpw/kernels.hpp"
#include "fockpw/paleywiener.hpp"
#include "fockpw/projection.hpp"
#include "fockpw/series_io.hpp"
#include "fockpw/special.hpp"
#include "fockpw/theorems.hpp"
#include "fockpw/weights.hpp"

using nlohmann::json;
using namespace fockpw;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

struct Common {
  std::string cutoff = "indicator:1";
  int threads = 0;
  double abs_tol = 1e-13, rel_tol = 1e-12;
  std::string out;
};

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

int resolve_threads(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("FOCKPW_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || n < 1) throw DomainError("FOCKPW_THREADS must be an integer >= 1");
    return static_cast<int>(n);
  }
  return omp_get_max_threads();
}

QuadratureSpec quad(const Common& c) {
  QuadratureSpec q;
  q.abs_tol = c.abs_tol;
  q.rel_tol = c.rel_tol;
  return q;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw DomainError("cannot write " + path);
  f << text;
}

json environment(int threads) {
  return {{"threads", threads}, {"compiler", __VERSION__}, {"cxx", static_cast<long>(__cplusplus)}};
}

json report_json(const TheoremReport& r, int threads) {
  json imps = json::array();
  for (const auto& i : r.implications) {
    json j = {{"name", i.name},
              {"pass", i.pass},
              {"witnessed_constant", number(i.witnessed_constant)},
              {"residual", number(i.residual)}};
    if (!i.note.empty()) j["note"] = i.note;
    imps.push_back(j);
  }
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = number(v);
  return {{"theorem", to_string(r.theorem)}, {"params", params}, {"implications", imps},
          {"environment", environment(threads)}};
}

json growth_json(const GrowthSpec& g) {
  json radius = json::array();
  for (std::size_t j = 0; j < g.radius.dim(); ++j) radius.push_back(g.radius[j]);
  json out = {{"class", to_string(g.cls)}, {"radius", radius}, {"residual", number(g.residual)},
              {"side", to_string(g.side)}};
  switch (g.cls) {
    case GrowthClass::Flat:
      out["sigma"] = g.sigma;
      out["tau"] = g.tau;
      out["dual"] = g.dual;
      break;
    case GrowthClass::LogPower:
      out["s"] = g.s;
      break;
    case GrowthClass::Polynomial:
      out["degree"] = g.degree;
      break;
    case GrowthClass::Geometric:
      break;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bargmann transform, Fock-space projections and Paley-Wiener checks"};
  app.require_subcommand(1);
  Common com;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--cutoff", com.cutoff, "indicator:t | trapezoid:t1,t2 [*amplitude]");
    sub->add_option("--threads", com.threads, "worker count (default FOCKPW_THREADS or all cores)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--abs-tol", com.abs_tol)->check(CLI::PositiveNumber);
    sub->add_option("--rel-tol", com.rel_tol)->check(CLI::PositiveNumber);
    sub->add_option("-o,--out", com.out, "output path (default stdout)");
  };

  auto* verify = app.add_subcommand("verify", "run a theorem verifier and write a JSON report");
  std::string theorem;
  std::optional<double> sigma, s, r0;
  int d = 1, N = 40;
  verify->add_option("--theorem", theorem)->required();
  verify->add_option("--sigma", sigma);
  verify->add_option("--s", s);
  verify->add_option("--r0", r0);
  verify->add_option("--d", d)->check(CLI::PositiveNumber);
  verify->add_option("--N", N)->check(CLI::NonNegativeNumber);
  add_common(verify);

  std::string input;
  auto* project_cmd = app.add_subcommand("project", "c(F) from a series file of F_0");
  project_cmd->add_option("--in", input)->required();
  add_common(project_cmd);
  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "c(F_0) from a series file of F");
  reconstruct_cmd->add_option("--in", input)->required();
  add_common(reconstruct_cmd);
  auto* classify_cmd = app.add_subcommand("classify", "growth class of a series file");
  classify_cmd->add_option("--in", input)->required();
  add_common(classify_cmd);

  auto* table = app.add_subcommand("table", "CSV sweep over alpha of varsigma, vartheta and the Stirling ratio");
  double tau = 1.0, r = 1.0;
  table->add_option("--N", N)->check(CLI::NonNegativeNumber);
  table->add_option("--tau", tau, "Stirling ratio parameter");
  table->add_option("--r", r, "vartheta radius")->check(CLI::PositiveNumber);
  table->add_option("--sigma", sigma, "flat order for vartheta");
  table->add_option("--s", s, "real order for vartheta (default 1)");
  add_common(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  int threads = 1;
  try {
    threads = resolve_threads(com.threads);
    set_worker_count(threads);
    const Exec exec = threads > 1 ? Exec::parallel : Exec::serial;
    const QuadratureSpec spec = quad(com);

    if (*verify) {
      const TheoremId id = parse_theorem(theorem);
      const RadialCutoff chi = RadialCutoff::parse(com.cutoff, static_cast<std::size_t>(d));
      const TheoremParams params{sigma, s, r0};
      validate_params(id, params, N);
      const TheoremReport rep = verify_theorem(id, params, chi, N, spec, exec);
      emit(com.out, report_json(rep, threads).dump(2) + "\n");
      for (const auto& i : rep.implications)
        if (!i.pass) std::cerr << to_string(rep.theorem) << " " << i.name << " failed" << (i.note.empty() ? "" : ": ") << i.note << "\n";
      return rep.all_pass() ? kPass : kFail;
    }
    if (*project_cmd || *reconstruct_cmd || *classify_cmd) {
      const CoefficientSeries F = read_series_file(input);
      if (*classify_cmd) {
        emit(com.out, growth_json(classify(F)).dump(2) + "\n");
        return kPass;
      }
      const RadialCutoff chi = RadialCutoff::parse(com.cutoff, F.dim());
      const VarsigmaTable tab(chi, F.truncation(), spec, exec);
      const CoefficientSeries G = *project_cmd ? project(F, tab) : reconstruct(F, tab);
      if (com.out.empty() || com.out == "-")
        write_series(std::cout, G);
      else
        write_series_file(com.out, G);
      return kPass;
    }
    if (*table) {
      const RadialCutoff chi = RadialCutoff::parse(com.cutoff, 1);
      const OrderParam order = sigma ? OrderParam::flat(*sigma) : OrderParam::real(s.value_or(1.0));
      const VarsigmaTable tab(chi, N, spec, exec);
      const RadiusVector rv{r};
      std::string csv = "alpha,log_varsigma,log_vartheta,stirling_ratio\n";
      char line[160];
      for (int a = 0; a <= N; ++a) {
        const MultiIndex alpha{a};
        std::snprintf(line, sizeof line, "%d,%.17g,%.17g,%.17g\n", a, tab(alpha).log_mag(),
                      vartheta(order, rv, alpha).log_mag(), stirling_ratio(tau, a));
        csv += line;
      }
      emit(com.out, csv);
      return kPass;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DegenerateCutoff& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}

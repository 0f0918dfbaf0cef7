// ptcs: evaluate states and kernels on grids and run the verification suites.
//
// Exit status: 0 success, 1 a check or suite row failed, 2 invalid
// configuration, 3 numerical non-convergence, 4 any other error. Failures
// write one JSON record to stderr.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptcs/ptcs.hpp"

namespace {

using cplx = std::complex<double>;
using ptcs::report::Table;

constexpr int kExitCheckFailed = 1;
constexpr int kExitConfig = 2;
constexpr int kExitConvergence = 3;
constexpr int kExitOther = 4;

struct Common {
  std::string format = "csv";
  std::string out;
};

/// Worker count from PTCS_THREADS (default 1). Each grid index is computed
/// independently and stored in place, so the count never changes the output.
unsigned thread_count() {
  const char* env = std::getenv("PTCS_THREADS");
  if (!env || !*env) return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) return 1;
  return static_cast<unsigned>(std::min<long>(v, 256));
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const unsigned workers = std::min<std::size_t>(thread_count(), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

Table grid_table(const std::string& title, const std::vector<double>& xs, const std::vector<cplx>& values) {
  Table t;
  t.title = title;
  t.columns = {"x", "re", "im"};
  for (std::size_t i = 0; i < xs.size(); ++i) t.add({xs[i], values[i].real(), values[i].imag()});
  return t;
}

void emit(const Table& t, const Common& c) {
  std::ofstream file;
  if (!c.out.empty()) {
    file.open(c.out, std::ios::binary);
    if (!file) throw ptcs::DomainError("cannot open output file '" + c.out + "'");
  }
  std::ostream& os = c.out.empty() ? std::cout : file;
  if (c.format == "json") {
    t.write_json(os);
  } else {
    t.write_csv(os);
  }
}

int error_record(const std::string& kind, const std::string& message, int code,
                 const nlohmann::ordered_json& extra = nlohmann::ordered_json::object()) {
  nlohmann::ordered_json rec{{"error", kind}, {"message", message}, {"exit_code", code}};
  for (auto it = extra.begin(); it != extra.end(); ++it) rec[it.key()] = it.value();
  std::cerr << rec.dump() << '\n';
  return code;
}

bool table_passes(const Table& t) { return ptcs::verify::all_pass(t); }

// Test functions accepted by identity-check: eigen:M, parabola, bump.
ptcs::identity::Function parse_phi(const std::string& spec, double nu) {
  if (spec == "parabola") return [](double x) { return cplx(x * (std::numbers::pi - x)); };
  if (spec == "bump") {
    return [](double x) {
      const double t = x - std::numbers::pi / 2;
      return cplx(std::fabs(t) < 1.0 ? std::exp(-1.0 / (1.0 - t * t)) : 0.0);
    };
  }
  if (spec.rfind("eigen:", 0) == 0) {
    const std::string digits = spec.substr(6);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 6) {
      throw ptcs::DomainError("phi: expected eigen:M with a nonnegative integer M");
    }
    const unsigned m = static_cast<unsigned>(std::stoul(digits));
    return [nu, m](double x) { return cplx(ptcs::spt::eigenstate({nu}, m, x)); };
  }
  throw ptcs::DomainError("phi: expected eigen:M, parabola or bump");
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output encoding")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", c.out, "Output path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Epsilon coherent states of the symmetric Poschl-Teller oscillator"};
  app.require_subcommand(1);
  Common common;

  double nu = 0.0, eps = 0.1, r = 0.0, theta = 0.0, r2 = 0.0, theta2 = 0.0, x = 1.0;
  std::optional<double> gamma;
  std::optional<double> tol;
  unsigned n = 0, nmax = 12;
  std::size_t coefficients = 0;
  std::string grid_text = "0:pi:101";
  std::string check_grid = "0:pi:9";
  std::string method = "closed";
  std::string phi_text = "parabola";
  std::string suite = "all";

  auto* eig = app.add_subcommand("eigenstate", "Eigenstate phi_n on a grid (x,re,im)");
  eig->add_option("--nu", nu, "Potential strength nu >= 0");
  eig->add_option("--n", n, "Level")->required();
  eig->add_option("--grid", grid_text, "start:stop:count, bounds may use pi");
  add_common(eig, common);

  auto* cse = app.add_subcommand("cs-eval", "Normalized coherent state on a grid (x,re,im)");
  cse->add_option("--nu", nu, "Potential strength nu >= 0");
  cse->add_option("--r", r, "Modulus of z")->required();
  cse->add_option("--theta", theta, "Argument of z");
  cse->add_option("--eps", eps, "eps > 0")->required();
  cse->add_option("--grid", grid_text, "start:stop:count, bounds may use pi");
  cse->add_option("--method", method, "closed or series")->check(CLI::IsMember({"closed", "series"}));
  add_common(cse, common);

  auto* csn = app.add_subcommand("cs-norm", "Normalization N(z) (name,value) or mode weights (n,value)");
  csn->add_option("--gamma", gamma, "gamma > 0 (default 2(nu+1))");
  csn->add_option("--nu", nu, "Potential strength, used for the default gamma");
  csn->add_option("--r", r, "Modulus of z")->required();
  csn->add_option("--theta", theta, "Argument of z");
  csn->add_option("--eps", eps, "eps > 0")->required();
  csn->add_option("--coefficients", coefficients, "Dump |c_n|^2 / N for n < K instead");
  add_common(csn, common);

  auto* ovl = app.add_subcommand("overlap", "<z|w> by the kernel integral and by the series (name,re,im)");
  ovl->add_option("--gamma", gamma, "gamma > 0 (default 2(nu+1))");
  ovl->add_option("--nu", nu, "Potential strength, used for the default gamma");
  ovl->add_option("--eps", eps, "eps > 0")->required();
  ovl->add_option("--r", r, "Modulus of z")->required();
  ovl->add_option("--theta", theta, "Argument of z");
  ovl->add_option("--r2", r2, "Modulus of w")->required();
  ovl->add_option("--theta2", theta2, "Argument of w");
  add_common(ovl, common);

  auto* idc = app.add_subcommand("identity-check", "Spectral vs kernel smoothing on a grid (verify table)");
  idc->add_option("--nu", nu, "Potential strength nu >= 0");
  idc->add_option("--eps", eps, "eps > 0")->required();
  idc->add_option("--phi", phi_text, "eigen:M, parabola or bump");
  idc->add_option("--grid", check_grid, "start:stop:count, bounds may use pi");
  idc->add_option("--tol", tol, "Agreement tolerance (default 1e-7)");
  add_common(idc, common);

  auto* hkc = app.add_subcommand("hankel-check", "Hankel representation vs direct Laguerre function (verify table)");
  hkc->add_option("--nu", nu, "nu > 0")->required();
  hkc->add_option("--x", x, "x >= 0")->required();
  hkc->add_option("--nmax", nmax, "Largest n (default 12)");
  hkc->add_option("--tol", tol, "Tolerance, scaled by max(1, |value|) (default 1e-7)");
  add_common(hkc, common);

  auto* ver = app.add_subcommand("verify", "Run a verification suite (name,measured,expected,tol,pass)");
  std::vector<std::string> suite_names{"all"};
  for (const auto& s : ptcs::verify::kSuites) suite_names.emplace_back(s.name);
  ver->add_option("--suite", suite, "Suite name or all")->check(CLI::IsMember(suite_names));
  ver->add_option("--tol", tol, "Replace each suite's base tolerance");
  add_common(ver, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return error_record("config", e.what(), kExitConfig);
  }

  try {
    if (tol) ptcs::detail::require(std::isfinite(*tol) && *tol > 0.0, "tolerance must be positive");

    if (*eig) {
      const ptcs::spt::SPTConfig cfg{nu};
      ptcs::detail::require(nu >= 0.0, "eigenstate: nu must be nonnegative");
      const auto xs = ptcs::GridSpec::parse(grid_text).points();
      std::vector<cplx> v(xs.size());
      parallel_for(xs.size(), [&](std::size_t i) { v[i] = ptcs::spt::eigenstate(cfg, n, xs[i]); });
      Table t = grid_table("eigenstate", xs, v);
      t.meta = {{"nu", nu}, {"n", static_cast<long long>(n)}, {"grid", grid_text}};
      emit(t, common);
      return 0;
    }

    if (*cse) {
      const auto xs = ptcs::GridSpec::parse(grid_text).points();
      const ptcs::epscs::CoherentState state(nu, ptcs::epscs::PhasePoint(r, theta), eps);
      std::vector<cplx> v(xs.size());
      const bool series = method == "series";
      parallel_for(xs.size(), [&](std::size_t i) { v[i] = series ? state.series(xs[i]) : state(xs[i]); });
      Table t = grid_table("cs-eval", xs, v);
      t.meta = {{"nu", nu}, {"r", r}, {"theta", theta}, {"eps", eps}, {"norm", state.norm()}, {"method", method},
                {"grid", grid_text}};
      emit(t, common);
      return 0;
    }

    if (*csn) {
      const ptcs::epscs::Params p{gamma.value_or(2.0 * (nu + 1.0)), nu, eps};
      p.validate();
      const ptcs::epscs::PhasePoint z(r, theta);
      const auto series = ptcs::epscs::normalization_series(p, z);
      Table t;
      t.meta = {{"gamma", p.gamma}, {"eps", eps}, {"r", r}, {"theta", theta}};
      if (coefficients > 0) {
        t.title = "cs-norm coefficients";
        t.columns = {"n", "value"};
        const auto cs = ptcs::epscs::cs_coefficients(p, z, coefficients);
        for (const auto& c : cs) t.add({static_cast<long long>(c.n), std::norm(c.value) / series.value});
      } else {
        t.title = "cs-norm";
        t.columns = {"name", "value"};
        t.add({std::string("series"), series.value});
        t.add({std::string("series_terms"), static_cast<long long>(series.terms_used)});
        t.add({std::string("series_tail"), series.tail_estimate});
        if (r > 0.0) {
          const auto q = ptcs::epscs::normalization_integral(p, z);
          t.add({std::string("integral"), q.value});
          t.add({std::string("integral_abs_error"), q.abs_error});
        }
        if (p.gamma > 1.0) t.add({std::string("eps_to_zero_limit"), ptcs::epscs::normalization_limit(p.gamma, z)});
      }
      emit(t, common);
      return 0;
    }

    if (*ovl) {
      const ptcs::epscs::Params p{gamma.value_or(2.0 * (nu + 1.0)), nu, eps};
      const ptcs::epscs::PhasePoint z(r, theta), w(r2, theta2);
      const cplx k = ptcs::epscs::overlap(p, z, w);
      const cplx s = ptcs::epscs::overlap_series(p, z, w).value;
      Table t;
      t.title = "overlap";
      t.columns = {"name", "re", "im"};
      t.meta = {{"gamma", p.gamma}, {"eps", eps}, {"r", r}, {"theta", theta}, {"r2", r2}, {"theta2", theta2}};
      t.add({std::string("kernel"), k.real(), k.imag()});
      t.add({std::string("series"), s.real(), s.imag()});
      emit(t, common);
      return 0;
    }

    if (*idc) {
      const auto xs = ptcs::GridSpec::parse(check_grid).points();
      ptcs::detail::require(xs.front() >= 0.0 && xs.back() <= std::numbers::pi, "identity-check: grid must lie in [0, pi]");
      const auto phi = parse_phi(phi_text, nu);
      const ptcs::identity::SpectralSmoothing spectral(nu, eps, phi);
      std::vector<cplx> a(xs.size()), b(xs.size());
      for (std::size_t i = 0; i < xs.size(); ++i) a[i] = spectral(xs[i]);
      parallel_for(xs.size(), [&](std::size_t i) { b[i] = ptcs::identity::smoothing_by_kernel(nu, eps, phi, xs[i]); });
      const double t0 = tol.value_or(1e-7);
      Table t;
      t.title = "identity-check";
      t.columns = {"name", "measured", "expected", "tol", "pass"};
      t.meta = {{"nu", nu}, {"eps", eps}, {"phi", phi_text}, {"grid", check_grid}, {"spectral_terms", static_cast<long long>(spectral.terms())}};
      for (std::size_t i = 0; i < xs.size(); ++i) {
        const double d = std::abs(a[i] - b[i]);
        t.add({"x=" + ptcs::report::format_double(xs[i]), d, 0.0, t0, std::isfinite(d) && d <= t0});
      }
      emit(t, common);
      return table_passes(t) ? 0 : kExitCheckFailed;
    }

    if (*hkc) {
      const double t0 = tol.value_or(1e-7);
      Table t;
      t.title = "hankel-check";
      t.columns = {"name", "measured", "expected", "tol", "pass"};
      t.meta = {{"nu", nu}, {"x", x}};
      for (unsigned k = 0; k <= nmax; ++k) {
        const ptcs::laghankel::LaguerreFunctionSpec s{k, nu, x};
        const double direct = ptcs::laghankel::laguerre_function(s);
        const double q = ptcs::laghankel::hankel_representation(s).value;
        const double tk = t0 * std::max(1.0, std::fabs(direct));
        t.add({"n=" + std::to_string(k), q, direct, tk, std::fabs(q - direct) <= tk});
      }
      emit(t, common);
      return table_passes(t) ? 0 : kExitCheckFailed;
    }

    if (*ver) {
      ptcs::verify::Options opt;
      opt.tol = tol;
      const Table t = ptcs::verify::run_suite(suite, opt);
      emit(t, common);
      return table_passes(t) ? 0 : kExitCheckFailed;
    }
  } catch (const ptcs::ConvergenceError& e) {
    return error_record("convergence", e.what(), kExitConvergence,
                        {{"best_estimate_re", e.best_estimate.real()},
                         {"best_estimate_im", e.best_estimate.imag()},
                         {"error_estimate", e.error_estimate}});
  } catch (const ptcs::OverflowError& e) {
    return error_record("overflow", e.what(), kExitConvergence, {{"index", e.index}, {"log_value", e.log_value}});
  } catch (const ptcs::BranchError& e) {
    return error_record("branch", e.what(), kExitConvergence, {{"mismatch", e.mismatch}});
  } catch (const ptcs::DomainError& e) {
    return error_record("config", e.what(), kExitConfig);
  } catch (const std::exception& e) {
    return error_record("internal", e.what(), kExitOther);
  }
  return kExitOther;
}

// SPDX-License-Identifier: Apache-2.0

// Command-line front end: alpha sweeps of the nonclassicality witnesses,
// single-state amplitude dumps, phase-distribution and Q-function grids, and
// an oracle self-check.  All numeric output uses explicit scientific
// notation with 12 significant digits, rows are emitted in a fixed order,
// and parallel evaluation writes into preassigned slots so the bytes never
// depend on the thread count.

#include <atomic>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "pasdfs/engineering.hpp"
#include "pasdfs/errors.hpp"
#include "pasdfs/fock.hpp"
#include "pasdfs/husimi.hpp"
#include "pasdfs/moments.hpp"
#include "pasdfs/phase.hpp"
#include "pasdfs/types.hpp"
#include "pasdfs/witnesses.hpp"

namespace {

using pasdfs::Complex;
using pasdfs::kPi;
namespace eng = pasdfs::engineering;
namespace fk = pasdfs::fock;
namespace mo = pasdfs::moments;
namespace wt = pasdfs::witnesses;
namespace ph = pasdfs::phase;
namespace hu = pasdfs::husimi;

constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitSelfCheck = 3;

// ---------------------------------------------------------------------------
// Formatting

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return buf;
}

std::string fmt_json(double v) {
  if (std::isnan(v)) return "null";
  return fmt(v);
}

const char* fmt_bool_csv(bool b) { return b ? "1" : "0"; }
const char* fmt_bool_json(bool b) { return b ? "true" : "false"; }

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::fwrite(content.data(), 1, content.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

// ---------------------------------------------------------------------------
// Shared state construction

fk::FockAmplitudes build_state(int k, int q, int n, Complex alpha, double eps) {
  eng::StateSpec s;
  s.added = k;
  s.subtracted = q;
  s.fock = n;
  s.displacement = alpha;
  return eng::pasdfs_amplitudes(s, eps);
}

// Largest componentwise amplitude gap over the union of supports.
double amplitude_gap(const fk::FockAmplitudes& a, const fk::FockAmplitudes& b) {
  const int lo = std::min(a.offset, b.offset);
  const int hi = std::max(a.offset + static_cast<int>(a.amps.size()),
                          b.offset + static_cast<int>(b.amps.size()));
  double worst = 0.0;
  for (int w = lo; w < hi; ++w)
    worst = std::max(worst, std::abs(a.at_photon(w) - b.at_photon(w)));
  return worst;
}

// Brute-force construction through the dense displacement and ladder
// matrices, used by --oracle-check and the selfcheck subcommand.
fk::FockAmplitudes oracle_state(int k, int q, int n, Complex alpha) {
  const auto dfs = fk::displace_oracle(alpha, fk::fock_state(n));
  return fk::apply_add_subtract_oracle(dfs, k, q);
}

// ---------------------------------------------------------------------------
// Minimal fixed-slot parallel map

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body) {
  int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (workers == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

// ---------------------------------------------------------------------------
// Sweep

struct CriterionRequest {
  wt::Criterion criterion;
  // Reported argument: the antibunching/sub-Poissonian order (degree - 1),
  // the squeezing degree, or the photon-number anchor; 0 for the
  // determinant witnesses, which take no order.
  int order = 0;
};

struct SweepPlan {
  std::vector<int> ks, qs, ns;
  std::vector<double> radii;
  double theta = 0.0;
  std::vector<CriterionRequest> requests;
  double eps = eng::kDefaultTruncationEps;
  bool oracle_check = false;
};

struct SweepJob {
  int k, q, n;
  double radius;
};

// One output row, already formatted field by field.
struct Row {
  int k, q, n;
  double alpha_abs, alpha_phase;
  std::string criterion;
  int order;
  double value = std::numeric_limits<double>::quiet_NaN();
  bool nonclassical = false;
  bool denominator_small = false;
  bool truncation_warning = false;
  std::string error;
};

std::string row_csv(const Row& r) {
  std::string s;
  s += std::to_string(r.k) + ',' + std::to_string(r.q) + ',' + std::to_string(r.n) + ',';
  s += fmt(r.alpha_abs) + ',' + fmt(r.alpha_phase) + ',';
  s += r.criterion + ',' + std::to_string(r.order) + ',';
  s += fmt(r.value);
  s += ',';
  s += fmt_bool_csv(r.nonclassical);
  s += ',';
  s += fmt_bool_csv(r.denominator_small);
  s += ',';
  s += fmt_bool_csv(r.truncation_warning);
  s += ',';
  s += r.error;
  s += '\n';
  return s;
}

std::string row_json(const Row& r) {
  std::string s = "    {";
  s += "\"k\":" + std::to_string(r.k) + ",\"q\":" + std::to_string(r.q) +
       ",\"n\":" + std::to_string(r.n);
  s += ",\"alpha_abs\":" + fmt_json(r.alpha_abs);
  s += ",\"alpha_phase\":" + fmt_json(r.alpha_phase);
  s += ",\"criterion\":\"" + r.criterion + "\"";
  s += ",\"order\":" + std::to_string(r.order);
  s += ",\"value\":" + fmt_json(r.value);
  s += ",\"nonclassical\":";
  s += fmt_bool_json(r.nonclassical);
  s += ",\"denominator_small\":";
  s += fmt_bool_json(r.denominator_small);
  s += ",\"truncation_warning\":";
  s += fmt_bool_json(r.truncation_warning);
  s += ",\"error\":";
  s += r.error.empty() ? "null" : ('"' + r.error + '"');
  s += "}";
  return s;
}

wt::WitnessReport evaluate(const mo::StateMoments& m, const CriterionRequest& req) {
  switch (req.criterion) {
    case wt::Criterion::antibunching: return wt::antibunching(m, req.order + 1);
    case wt::Criterion::hosps: return wt::hosps(m, req.order + 1);
    case wt::Criterion::hong_mandel: return wt::hong_mandel(m, req.order);
    case wt::Criterion::klyshko: return wt::klyshko(m, req.order);
    case wt::Criterion::agarwal_tara: return wt::agarwal_tara(m);
    case wt::Criterion::vogel: return wt::vogel(m);
  }
  throw std::logic_error("unreachable criterion");
}

// Expands --criterion x --order lists into per-row requests, validating the
// order ranges up front so a bad combination fails before any computation.
std::vector<CriterionRequest> expand_requests(const std::vector<std::string>& names,
                                              const std::vector<int>& orders) {
  std::vector<CriterionRequest> out;
  for (const auto& text : names) {
    const auto parsed = wt::parse_criterion(text);
    if (!parsed)
      throw CLI::ValidationError("--criterion", "unknown criterion '" + text + "'");
    switch (*parsed) {
      case wt::Criterion::agarwal_tara:
      case wt::Criterion::vogel:
        out.push_back({*parsed, 0});
        break;
      case wt::Criterion::antibunching:
      case wt::Criterion::hosps:
        for (int o : orders) {
          if (o < 1 || o + 1 > wt::kMaxWitnessOrder)
            throw CLI::ValidationError(
                "--order", "order " + std::to_string(o) + " outside [1, " +
                               std::to_string(wt::kMaxWitnessOrder - 1) + "] for " + text);
          out.push_back({*parsed, o});
        }
        break;
      case wt::Criterion::hong_mandel:
        for (int o : orders) {
          if (o < 2 || o > wt::kMaxWitnessOrder || o % 2 != 0)
            throw CLI::ValidationError("--order", "order " + std::to_string(o) +
                                                      " must be even in [2, 10] for " + text);
          out.push_back({*parsed, o});
        }
        break;
      case wt::Criterion::klyshko:
        for (int o : orders) {
          if (o < 0)
            throw CLI::ValidationError("--order",
                                       "photon number " + std::to_string(o) + " must be >= 0");
          out.push_back({*parsed, o});
        }
        break;
    }
  }
  return out;
}

struct SweepResult {
  std::string body;          // formatted rows for this job, in order
  double oracle_gap = 0.0;   // worst amplitude gap when --oracle-check is on
};

int run_sweep(const SweepPlan& plan, int threads, const std::string& format,
              const std::string& out_path) {
  std::vector<SweepJob> jobs;
  for (int k : plan.ks)
    for (int q : plan.qs)
      for (int n : plan.ns)
        for (double r : plan.radii) jobs.push_back({k, q, n, r});

  const bool csv = format == "csv";
  std::vector<SweepResult> results(jobs.size());

  parallel_for(jobs.size(), threads, [&](std::size_t i) {
    const SweepJob& job = jobs[i];
    const Complex alpha = std::polar(std::fabs(job.radius), plan.theta);
    SweepResult& res = results[i];

    Row base;
    base.k = job.k;
    base.q = job.q;
    base.n = job.n;
    base.alpha_abs = std::abs(alpha);
    base.alpha_phase = std::arg(alpha);

    std::optional<mo::StateMoments> m;
    std::string error;
    try {
      auto psi = build_state(job.k, job.q, job.n, alpha, plan.eps);
      if (plan.oracle_check)
        res.oracle_gap = amplitude_gap(psi, oracle_state(job.k, job.q, job.n, alpha));
      m.emplace(std::move(psi));
    } catch (const pasdfs::AnnihilationError&) {
      error = "annihilated";
    } catch (const pasdfs::TruncationError&) {
      error = "truncated";
    }

    std::string body;
    for (const auto& req : plan.requests) {
      Row row = base;
      row.criterion = std::string(wt::name(req.criterion));
      row.order = req.order;
      if (m) {
        const auto rep = evaluate(*m, req);
        row.order = rep.argument;
        row.value = rep.value;
        row.nonclassical = rep.nonclassical;
        row.denominator_small = rep.denominator_small;
        row.truncation_warning = rep.truncation_warning;
      } else {
        row.error = error;
      }
      body += csv ? row_csv(row) : (row_json(row) + ",\n");
    }
    res.body = std::move(body);
  });

  std::string content;
  if (csv) {
    content += "# pasdfs.sweep.v1\n";
    content +=
        "k,q,n,alpha_abs,alpha_phase,criterion,order,value,nonclassical,"
        "denominator_small,truncation_warning,error\n";
    for (const auto& r : results) content += r.body;
  } else {
    content += "{\n  \"schema\": \"pasdfs.sweep.v1\",\n  \"rows\": [\n";
    std::string rows;
    for (const auto& r : results) rows += r.body;
    if (!rows.empty()) {
      rows.pop_back();  // trailing newline
      rows.pop_back();  // trailing comma
      rows += '\n';
    }
    content += rows;
    content += "  ]\n}\n";
  }
  write_output(out_path, content);

  if (plan.oracle_check) {
    double worst = 0.0;
    for (const auto& r : results) worst = std::max(worst, r.oracle_gap);
    std::fprintf(stderr, "oracle check: worst amplitude gap %.3e\n", worst);
    if (worst > 1e-9) return kExitSelfCheck;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// state / phase / qfunc

int run_state(int k, int q, int n, double alpha_abs, double theta, double eps,
              const std::string& format, const std::string& out_path) {
  const auto psi = build_state(k, q, n, std::polar(alpha_abs, theta), eps);
  const double residual = std::fabs(1.0 - psi.norm_sq());
  const int size = static_cast<int>(psi.amps.size());

  std::string content;
  if (format == "csv") {
    content += "# pasdfs.state.v1\n";
    content += "# offset " + std::to_string(psi.offset) + "\n";
    content += "# size " + std::to_string(size) + "\n";
    content += "# truncation_eps " + fmt(psi.truncation_eps) + "\n";
    content += "# norm_residual " + fmt(residual) + "\n";
    content += "photon,re,im,probability\n";
    for (int u = 0; u < size; ++u) {
      const Complex c = psi.amps[static_cast<std::size_t>(u)];
      content += std::to_string(psi.offset + u) + ',' + fmt(c.real()) + ',' +
                 fmt(c.imag()) + ',' + fmt(std::norm(c)) + '\n';
    }
  } else {
    content += "{\n  \"schema\": \"pasdfs.state.v1\",\n";
    content += "  \"offset\": " + std::to_string(psi.offset) + ",\n";
    content += "  \"size\": " + std::to_string(size) + ",\n";
    content += "  \"truncation_eps\": " + fmt_json(psi.truncation_eps) + ",\n";
    content += "  \"norm_residual\": " + fmt_json(residual) + ",\n";
    content += "  \"rows\": [\n";
    for (int u = 0; u < size; ++u) {
      const Complex c = psi.amps[static_cast<std::size_t>(u)];
      content += "    {\"photon\":" + std::to_string(psi.offset + u) +
                 ",\"re\":" + fmt_json(c.real()) + ",\"im\":" + fmt_json(c.imag()) +
                 ",\"probability\":" + fmt_json(std::norm(c)) + "}";
      content += (u + 1 < size) ? ",\n" : "\n";
    }
    content += "  ]\n}\n";
  }
  write_output(out_path, content);
  return 0;
}

int run_phase(int k, int q, int n, double alpha_abs, double theta, int points,
              double eps, const std::string& format, const std::string& out_path) {
  const auto psi = build_state(k, q, n, std::polar(alpha_abs, theta), eps);
  const auto pd = ph::phase_distribution(psi, points);

  std::string content;
  if (format == "csv") {
    content += "# pasdfs.phase.v1\n";
    content += "# points " + std::to_string(points) + "\n";
    content += "# integral " + fmt(pd.integral()) + "\n";
    content += "theta,p\n";
    for (std::size_t i = 0; i < pd.values.size(); ++i)
      content += fmt(pd.thetas[i]) + ',' + fmt(pd.values[i]) + '\n';
  } else {
    content += "{\n  \"schema\": \"pasdfs.phase.v1\",\n";
    content += "  \"points\": " + std::to_string(points) + ",\n";
    content += "  \"integral\": " + fmt_json(pd.integral()) + ",\n";
    content += "  \"rows\": [\n";
    for (std::size_t i = 0; i < pd.values.size(); ++i) {
      content += "    {\"theta\":" + fmt_json(pd.thetas[i]) +
                 ",\"p\":" + fmt_json(pd.values[i]) + "}";
      content += (i + 1 < pd.values.size()) ? ",\n" : "\n";
    }
    content += "  ]\n}\n";
  }
  write_output(out_path, content);
  return 0;
}

int run_qfunc(int k, int q, int n, double alpha_abs, double theta, int nx, int ny,
              const std::optional<hu::Window>& window, double eps,
              const std::string& format, const std::string& out_path) {
  const auto psi = build_state(k, q, n, std::polar(alpha_abs, theta), eps);
  const hu::QGrid grid = window ? hu::q_grid(psi, *window, nx, ny)
                                : hu::q_grid(psi, nx, ny);

  std::string content;
  if (format == "csv") {
    content += "# pasdfs.qfunc.v1\n";
    content += "# window " + fmt(grid.window.re_min) + ' ' + fmt(grid.window.re_max) +
               ' ' + fmt(grid.window.im_min) + ' ' + fmt(grid.window.im_max) + "\n";
    content += "# nx " + std::to_string(grid.nx) + "\n";
    content += "# ny " + std::to_string(grid.ny) + "\n";
    content += "# mass " + fmt(grid.mass) + "\n";
    content += "# peak " + fmt(grid.peak) + "\n";
    content += std::string("# mass_warning ") + fmt_bool_csv(grid.mass_warning) + "\n";
    content += std::string("# widened ") + fmt_bool_csv(grid.widened) + "\n";
    content += "re,im,q\n";
    for (int iy = 0; iy < grid.ny; ++iy)
      for (int ix = 0; ix < grid.nx; ++ix)
        content += fmt(grid.xs[static_cast<std::size_t>(ix)]) + ',' +
                   fmt(grid.ys[static_cast<std::size_t>(iy)]) + ',' +
                   fmt(grid.value_at(ix, iy)) + '\n';
  } else {
    content += "{\n  \"schema\": \"pasdfs.qfunc.v1\",\n";
    content += "  \"window\": {\"re_min\":" + fmt_json(grid.window.re_min) +
               ",\"re_max\":" + fmt_json(grid.window.re_max) +
               ",\"im_min\":" + fmt_json(grid.window.im_min) +
               ",\"im_max\":" + fmt_json(grid.window.im_max) + "},\n";
    content += "  \"nx\": " + std::to_string(grid.nx) + ",\n";
    content += "  \"ny\": " + std::to_string(grid.ny) + ",\n";
    content += "  \"mass\": " + fmt_json(grid.mass) + ",\n";
    content += "  \"peak\": " + fmt_json(grid.peak) + ",\n";
    content += std::string("  \"mass_warning\": ") + fmt_bool_json(grid.mass_warning) + ",\n";
    content += std::string("  \"widened\": ") + fmt_bool_json(grid.widened) + ",\n";
    content += "  \"rows\": [\n";
    for (int iy = 0; iy < grid.ny; ++iy)
      for (int ix = 0; ix < grid.nx; ++ix) {
        content += "    {\"re\":" + fmt_json(grid.xs[static_cast<std::size_t>(ix)]) +
                   ",\"im\":" + fmt_json(grid.ys[static_cast<std::size_t>(iy)]) +
                   ",\"q\":" + fmt_json(grid.value_at(ix, iy)) + "}";
        const bool last = iy + 1 == grid.ny && ix + 1 == grid.nx;
        content += last ? "\n" : ",\n";
      }
    content += "  ]\n}\n";
  }
  write_output(out_path, content);
  return 0;
}

// ---------------------------------------------------------------------------
// selfcheck

int run_selfcheck() {
  const std::vector<Complex> alphas = {Complex{0.0, 0.0},
                                       std::polar(0.5, kPi / 4.0),
                                       Complex{1.0, 0.0}};
  double worst_amp = 0.0, worst_mom = 0.0, worst_quad = 0.0;
  int states = 0;
  for (int k = 0; k <= 2; ++k)
    for (int q = 0; q <= 2; ++q)
      for (int n = 0; n <= 2; ++n)
        for (const Complex& alpha : alphas) {
          fk::FockAmplitudes psi;
          try {
            psi = build_state(k, q, n, alpha, eng::kDefaultTruncationEps);
          } catch (const pasdfs::AnnihilationError&) {
            continue;  // empty support at alpha = 0; nothing to compare
          }
          ++states;
          worst_amp = std::max(worst_amp,
                               amplitude_gap(psi, oracle_state(k, q, n, alpha)));
          mo::StateMoments m(psi);
          for (int t = 0; t <= 4; ++t)
            for (int j = 0; j <= 4; ++j)
              worst_mom = std::max(
                  worst_mom, std::abs(m.moment(t, j) -
                                      fk::expectation_oracle(psi, t, j)));
          for (int l : {2, 4, 6})
            worst_quad = std::max(
                worst_quad, std::fabs(wt::quadrature_central_moment(m, l) -
                                      wt::quadrature_central_moment_expansion(m, l)));
        }

  const bool ok = worst_amp <= 1e-9 && worst_mom <= 1e-9 && worst_quad <= 1e-9;
  std::printf("states checked: %d\n", states);
  std::printf("amplitudes vs dense pipeline: worst %.3e  [%s]\n", worst_amp,
              worst_amp <= 1e-9 ? "ok" : "MISMATCH");
  std::printf("moments vs dense operators:   worst %.3e  [%s]\n", worst_mom,
              worst_mom <= 1e-9 ? "ok" : "MISMATCH");
  std::printf("quadrature moment two paths:  worst %.3e  [%s]\n", worst_quad,
              worst_quad <= 1e-9 ? "ok" : "MISMATCH");
  return ok ? 0 : kExitSelfCheck;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Engineered displaced-Fock-state toolkit: nonclassicality witnesses, "
      "phase distributions, and the Husimi Q function"};
  app.require_subcommand(1);
  // The config option lives on the root app (subcommand-attached config files
  // are never read by CLI11's parse flow); keys go under a [subcommand]
  // section, and fallthrough() below lets the flag be written after the
  // subcommand name.  Command-line flags override config values.
  app.set_config("--config", "",
                 "INI config file with a [subcommand] section of key=value "
                 "lines; command-line flags override it");
  app.allow_config_extras(CLI::config_extras_mode::error);

  // --- sweep ---
  auto* sweep = app.add_subcommand(
      "sweep", "Evaluate witnesses over a grid of states and a modulus sweep");
  std::vector<int> ks{0}, qs{0}, ns{0};
  double astart = 0.0, astop = 2.0, theta = 0.0;
  int steps = 21, threads = 0;
  std::vector<std::string> criteria{"antibunching"};
  std::vector<int> orders{1};
  double eps = eng::kDefaultTruncationEps;
  std::string format = "csv", out_path;
  bool oracle_check = false;
  sweep->add_option("--k", ks, "photon-addition counts")->capture_default_str();
  sweep->add_option("--q", qs, "photon-subtraction counts")->capture_default_str();
  sweep->add_option("--n", ns, "seed Fock numbers")->capture_default_str();
  sweep->add_option("--alpha-start", astart, "first displacement modulus")
      ->capture_default_str();
  sweep->add_option("--alpha-stop", astop, "last displacement modulus")
      ->capture_default_str();
  sweep->add_option("--alpha-steps", steps, "sweep points (>= 2)")
      ->capture_default_str();
  sweep->add_option("--theta", theta, "displacement phase in radians")
      ->capture_default_str();
  sweep->add_option("--criterion", criteria,
                    "witnesses: antibunching, hosps, hong_mandel, klyshko, "
                    "agarwal_tara, vogel")
      ->capture_default_str();
  sweep->add_option("--order", orders,
                    "witness arguments: antibunching/hosps order (1-9), "
                    "hong_mandel even degree (2-10), klyshko photon number; "
                    "ignored by the determinant witnesses")
      ->capture_default_str();
  sweep->add_option("--eps", eps, "truncation tail bound")->capture_default_str();
  sweep->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sweep->add_option("--out", out_path, "output file (stdout when empty)");
  sweep->add_option("--threads", threads,
                    "worker threads (0 = hardware); output bytes do not "
                    "depend on this")
      ->capture_default_str();
  sweep->add_flag("--oracle-check", oracle_check,
                  "also rebuild every state through the dense-matrix pipeline "
                  "and fail (exit 3) beyond 1e-9 amplitude gap");
  sweep->fallthrough();

  // --- state ---
  auto* state = app.add_subcommand("state", "Print the amplitude table of one state");
  int sk = 0, sq = 0, sn = 0;
  double s_abs = 0.0, s_theta = 0.0, s_eps = eng::kDefaultTruncationEps;
  std::string s_format = "csv", s_out;
  state->add_option("--k", sk, "photon-addition count")->capture_default_str();
  state->add_option("--q", sq, "photon-subtraction count")->capture_default_str();
  state->add_option("--n", sn, "seed Fock number")->capture_default_str();
  state->add_option("--alpha-abs", s_abs, "displacement modulus")->capture_default_str();
  state->add_option("--theta", s_theta, "displacement phase in radians")
      ->capture_default_str();
  state->add_option("--eps", s_eps, "truncation tail bound")->capture_default_str();
  state->add_option("--format", s_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  state->add_option("--out", s_out, "output file (stdout when empty)");
  state->fallthrough();

  // --- phase ---
  auto* phase = app.add_subcommand("phase", "Sample the phase distribution");
  int pk = 0, pq = 0, pn = 0, p_points = ph::kDefaultGridPoints;
  double p_abs = 0.0, p_theta = 0.0, p_eps = eng::kDefaultTruncationEps;
  std::string p_format = "csv", p_out;
  phase->add_option("--k", pk, "photon-addition count")->capture_default_str();
  phase->add_option("--q", pq, "photon-subtraction count")->capture_default_str();
  phase->add_option("--n", pn, "seed Fock number")->capture_default_str();
  phase->add_option("--alpha-abs", p_abs, "displacement modulus")->capture_default_str();
  phase->add_option("--theta", p_theta, "displacement phase in radians")
      ->capture_default_str();
  phase->add_option("--points", p_points, "grid points (>= 256)")->capture_default_str();
  phase->add_option("--eps", p_eps, "truncation tail bound")->capture_default_str();
  phase->add_option("--format", p_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  phase->add_option("--out", p_out, "output file (stdout when empty)");
  phase->fallthrough();

  // --- qfunc ---
  auto* qfunc = app.add_subcommand("qfunc", "Sample the Husimi Q function on a grid");
  int qk = 0, qq = 0, qn = 0, q_nx = 201, q_ny = 201;
  double q_abs = 0.0, q_theta = 0.0, q_eps = eng::kDefaultTruncationEps;
  double re_min = 0.0, re_max = 0.0, im_min = 0.0, im_max = 0.0;
  std::string q_format = "csv", q_out;
  qfunc->add_option("--k", qk, "photon-addition count")->capture_default_str();
  qfunc->add_option("--q", qq, "photon-subtraction count")->capture_default_str();
  qfunc->add_option("--n", qn, "seed Fock number")->capture_default_str();
  qfunc->add_option("--alpha-abs", q_abs, "displacement modulus")->capture_default_str();
  qfunc->add_option("--theta", q_theta, "displacement phase in radians")
      ->capture_default_str();
  qfunc->add_option("--nx", q_nx, "grid columns (>= 64)")->capture_default_str();
  qfunc->add_option("--ny", q_ny, "grid rows (>= 64)")->capture_default_str();
  auto* o_remin = qfunc->add_option("--re-min", re_min, "window left edge");
  auto* o_remax = qfunc->add_option("--re-max", re_max, "window right edge");
  auto* o_immin = qfunc->add_option("--im-min", im_min, "window bottom edge");
  auto* o_immax = qfunc->add_option("--im-max", im_max, "window top edge");
  o_remin->needs(o_remax, o_immin, o_immax);
  o_remax->needs(o_remin);
  o_immin->needs(o_remin);
  o_immax->needs(o_remin);
  qfunc->add_option("--eps", q_eps, "truncation tail bound")->capture_default_str();
  qfunc->add_option("--format", q_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  qfunc->add_option("--out", q_out, "output file (stdout when empty)");
  qfunc->fallthrough();

  // --- selfcheck ---
  app.add_subcommand("selfcheck",
                     "Cross-check closed-form amplitudes, moments, and "
                     "quadrature moments against dense-matrix oracles");

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
    if (sweep->parsed()) {
      if (steps < 2) {
        std::fprintf(stderr, "--alpha-steps: need at least 2 points\n");
        return kExitUsage;
      }
      if (!(astop > astart)) {
        std::fprintf(stderr, "--alpha-stop: must exceed --alpha-start\n");
        return kExitUsage;
      }
      if (eps <= 0 || eps > eng::kMaxTruncationEps) {
        std::fprintf(stderr, "--eps: must lie in (0, %g]\n", eng::kMaxTruncationEps);
        return kExitUsage;
      }
      SweepPlan plan;
      try {
        plan.requests = expand_requests(criteria, orders);
      } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return kExitUsage;
      }
      plan.ks = ks;
      plan.qs = qs;
      plan.ns = ns;
      plan.theta = theta;
      plan.eps = eps;
      plan.oracle_check = oracle_check;
      plan.radii.reserve(static_cast<std::size_t>(steps));
      for (int i = 0; i < steps; ++i)
        plan.radii.push_back(astart + (astop - astart) * i / (steps - 1));
      return run_sweep(plan, threads, format, out_path);
    }
    if (state->parsed())
      return run_state(sk, sq, sn, s_abs, s_theta, s_eps, s_format, s_out);
    if (phase->parsed())
      return run_phase(pk, pq, pn, p_abs, p_theta, p_points, p_eps, p_format, p_out);
    if (qfunc->parsed()) {
      std::optional<hu::Window> window;
      if (*o_remin) {
        hu::Window w;
        w.re_min = re_min;
        w.re_max = re_max;
        w.im_min = im_min;
        w.im_max = im_max;
        window = w;
      }
      return run_qfunc(qk, qq, qn, q_abs, q_theta, q_nx, q_ny, window, q_eps,
                       q_format, q_out);
    }
    return run_selfcheck();
  } catch (const pasdfs::AnnihilationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumerical;
  } catch (const pasdfs::TruncationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumerical;
  } catch (const pasdfs::CapacityError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumerical;
  }
}

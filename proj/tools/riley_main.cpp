// Command-line front end: polynomial printing, root scanning, oracle
// cross-checks, and certification sweeps for C(2n+1, 2m, 2).
#include <CLI11.hpp>

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "riley/certifier.hpp"
#include "riley/closed_form.hpp"
#include "riley/oracle.hpp"
#include "riley/root_finder.hpp"

namespace {

using namespace riley;

struct CliConfig {
  int n = 1;
  int m = 1;
  int r = 3;
  IntRange n_range;
  IntRange m_range;
  IntRange r_range;
  std::string format = "text";
  ScanConfig scan;
  int samples = 100;
  unsigned long long seed = 0;
  unsigned threads = 0;
  int limit = kDefaultExpansionLimit;
  std::string out;         // empty = stdout
  std::string dump_curve;  // scan: write (y, R) samples as CSV
};

IntRange parse_range(const std::string& text) {
  IntRange range;
  const char* s = text.c_str();
  char* end = nullptr;
  range.lo = static_cast<int>(std::strtol(s, &end, 10));
  if (end == s || *end != ':') {
    throw std::invalid_argument("bad range '" + text + "', expected lo:hi or lo:hi:step");
  }
  s = end + 1;
  range.hi = static_cast<int>(std::strtol(s, &end, 10));
  if (end == s) {
    throw std::invalid_argument("bad range '" + text + "'");
  }
  if (*end == ':') {
    s = end + 1;
    range.step = static_cast<int>(std::strtol(s, &end, 10));
    if (end == s || range.step <= 0) {
      throw std::invalid_argument("bad range step in '" + text + "'");
    }
  }
  if (*end != '\0') {
    throw std::invalid_argument("trailing characters in range '" + text + "'");
  }
  return range;
}

void write_output(const CliConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw std::runtime_error("cannot open output file " + cfg.out);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int run_poly(const CliConfig& cfg) {
  const KnotParams p(cfg.n, cfg.m);
  const QYPoly poly = riley_poly(p, cfg.limit);
  if (cfg.format == "json") {
    write_output(cfg, poly.to_json_string());
  } else if (cfg.format == "text") {
    std::ostringstream os;
    os << "R_{" << cfg.n << ',' << cfg.m << "}(q, y), q = x^2, "
       << poly.term_count() << " terms, y-degree " << poly.y_degree() << "\n";
    os << poly.to_json_string() << "\n";
    write_output(cfg, os.str());
  } else {
    throw std::invalid_argument("poly supports --format json or text");
  }
  return 0;
}

std::string certs_to_csv(const std::vector<RootCertificate>& certs) {
  std::ostringstream os;
  os << "n,m,r,x0,y_star,lo,hi,residual,relation_residual\n";
  for (const auto& c : certs) {
    os << c.n << ',' << c.m << ',' << c.r << ',' << fmt17(c.x0) << ','
       << fmt17(c.y_star) << ',' << fmt17(c.lo) << ',' << fmt17(c.hi) << ','
       << fmt17(c.residual) << ',' << fmt17(c.relation_residual) << '\n';
  }
  return os.str();
}

int run_scan(const CliConfig& cfg) {
  const KnotParams p(cfg.n, cfg.m);
  const auto certs = scan_roots(p, cfg.r, cfg.scan);

  if (!cfg.dump_curve.empty()) {
    std::ofstream f(cfg.dump_curve);
    if (!f) throw std::runtime_error("cannot open " + cfg.dump_curve);
    const double x0 = 2.0 * std::cos(std::numbers::pi / cfg.r);
    const double upper = y_upper_bound(p, x0, cfg.scan);
    f << "y,R\n";
    for (long long i = 1;; ++i) {
      double y = 2.0 + static_cast<double>(i) * cfg.scan.grid_step;
      const bool last = y >= upper;
      if (last) y = upper;
      f << fmt17(y) << ',' << fmt17(riley_eval(p, x0, y)) << '\n';
      if (last) break;
    }
  }

  if (cfg.format == "json") {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < certs.size(); ++i) {
      if (i) os << ',';
      os << certs[i].to_json_string();
    }
    os << ']';
    write_output(cfg, os.str());
  } else if (cfg.format == "csv") {
    write_output(cfg, certs_to_csv(certs));
  } else {
    std::ostringstream os;
    os << certs.size() << " root(s) of R_{" << cfg.n << ',' << cfg.m
       << "}(2cos(pi/" << cfg.r << "), y) on y > 2\n";
    for (const auto& c : certs) {
      os << "  y* = " << fmt17(c.y_star) << "  bracket [" << fmt17(c.lo) << ", "
         << fmt17(c.hi) << "]  residual " << fmt17(c.residual)
         << "  relation " << fmt17(c.relation_residual) << "\n";
    }
    write_output(cfg, os.str());
  }
  return 0;
}

int run_oracle(const CliConfig& cfg) {
  const KnotParams p(cfg.n, cfg.m);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> dist(-0.7, 0.7);
  double worst = 0.0;
  for (int i = 0; i < cfg.samples; ++i) {
    const Cplx x(dist(rng), dist(rng));
    const Cplx y(dist(rng), dist(rng));
    const Cplx via_matrices = riley_from_matrices(p, x, y);
    const Cplx via_closed = riley_eval(p, x, y);
    worst = std::max(worst, std::abs(via_matrices - via_closed) /
                                (1.0 + std::abs(via_closed)));
  }
  std::ostringstream os;
  os << "max relative discrepancy over " << cfg.samples << " samples (seed "
     << cfg.seed << "): " << fmt17(worst) << "\n";
  write_output(cfg, os.str());
  return 0;
}

std::string verdicts_text(const std::vector<OrderabilityVerdict>& vs) {
  std::ostringstream os;
  for (const auto& v : vs) {
    os << "(n=" << v.n << ", m=" << v.m << ", r=" << v.r << ") "
       << to_string(v.status);
    if (v.r_min_claimed) os << "  [table bound r >= " << *v.r_min_claimed << ']';
    if (v.certificate) {
      os << "  y* = " << fmt17(v.certificate->y_star) << "  residual "
         << fmt17(v.certificate->residual);
    }
    if (v.roots_found && !v.certificate) os << "  roots_found " << v.roots_found;
    if (!v.error.empty()) os << "  error: " << v.error;
    os << '\n';
  }
  return os.str();
}

int emit_verdicts(const CliConfig& cfg,
                  const std::vector<OrderabilityVerdict>& vs,
                  bool with_summary) {
  if (cfg.format == "json") {
    write_output(cfg, verdicts_to_json(vs));
  } else if (cfg.format == "csv") {
    write_output(cfg, verdicts_to_csv(vs));
  } else {
    std::ostringstream os;
    os << verdicts_text(vs);
    if (with_summary) {
      const SweepSummary s = summarize(vs);
      os << s.total << " verdicts: " << s.certified << " certified, "
         << s.not_found << " not_found, " << s.below_threshold
         << " below_threshold, " << s.claim_mismatches
         << " mismatches against the table";
      if (s.errors) os << ", " << s.errors << " scan errors";
      os << '\n';
    }
    write_output(cfg, os.str());
  }
  return 0;
}

int run_certify(const CliConfig& cfg) {
  const auto v = certify(KnotParams(cfg.n, cfg.m), cfg.r, cfg.scan);
  return emit_verdicts(cfg, {v}, false);
}

int run_sweep(const CliConfig& cfg) {
  const auto vs =
      sweep(cfg.n_range, cfg.m_range, cfg.r_range, cfg.scan, cfg.threads);
  return emit_verdicts(cfg, vs, true);
}

int run(int argc, char** argv) {
  CliConfig cfg;
  std::string n_range_text, m_range_text, r_range_text;

  CLI::App app{"Riley polynomials and branched-cover orderability "
               "certificates for the rational knots C(2n+1, 2m, 2)"};
  app.require_subcommand(1);

  const auto non_zero = CLI::Validator(
      [](std::string& s) -> std::string {
        try {
          if (std::stoi(s) == 0) return "must be non-zero";
        } catch (...) {
          return "not an integer";
        }
        return {};
      },
      "NONZERO");

  auto add_nm = [&](CLI::App* cmd) {
    cmd->add_option("--n", cfg.n, "twist parameter n (non-zero)")
        ->required()
        ->check(non_zero);
    cmd->add_option("--m", cfg.m, "twist parameter m (non-zero)")
        ->required()
        ->check(non_zero);
  };
  auto add_scan_opts = [&](CLI::App* cmd) {
    cmd->add_option("--grid-step", cfg.scan.grid_step, "scan grid step");
    cmd->add_option("--y-max", cfg.scan.y_max_cap, "cap for the upper bound");
    cmd->add_option("--tol", cfg.scan.bisect_tol, "bisection tolerance");
  };
  auto add_io = [&](CLI::App* cmd, const char* formats) {
    cmd->add_option("--format", cfg.format, formats);
    cmd->add_option("--out", cfg.out, "output path (default stdout)");
  };

  CLI::App* poly = app.add_subcommand(
      "poly", "print the exact expansion of R_{n,m} in (q = x^2, y)");
  add_nm(poly);
  poly->add_option("--limit", cfg.limit, "expansion limit for |n|, |m|");
  add_io(poly, "json|text (default text)");

  CLI::App* scan = app.add_subcommand(
      "scan", "locate real roots y > 2 of R_{n,m}(2cos(pi/r), y)");
  add_nm(scan);
  scan->add_option("--r", cfg.r, "branched-cover order r >= 2")->required();
  add_scan_opts(scan);
  scan->add_option("--dump-curve", cfg.dump_curve,
                   "also write (y, R) grid samples to this CSV file");
  add_io(scan, "json|csv|text (default text)");

  CLI::App* oracle = app.add_subcommand(
      "oracle", "max discrepancy between matrix oracle and closed form");
  add_nm(oracle);
  oracle->add_option("--samples", cfg.samples, "number of random samples");
  oracle->add_option("--seed", cfg.seed, "RNG seed (default 0)");
  add_io(oracle, "text");

  CLI::App* certify_cmd = app.add_subcommand(
      "certify", "root-existence verdict for one (n, m, r)");
  add_nm(certify_cmd);
  certify_cmd->add_option("--r", cfg.r, "branched-cover order r >= 2")
      ->required();
  add_scan_opts(certify_cmd);
  add_io(certify_cmd, "json|csv|text (default text)");

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "verdict grid over (n, m, r) ranges");
  sweep_cmd->add_option("--n-range", n_range_text, "n range lo:hi[:step]")
      ->required();
  sweep_cmd->add_option("--m-range", m_range_text, "m range lo:hi[:step]")
      ->required();
  sweep_cmd->add_option("--r-range", r_range_text, "r range lo:hi[:step]")
      ->required();
  sweep_cmd->add_option("--threads", cfg.threads,
                        "worker threads (0 = hardware)");
  add_scan_opts(sweep_cmd);
  add_io(sweep_cmd, "json|csv|text (default text)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);  // usage/help text; exit 0 for --help, 1 otherwise
  }

  try {
    if (poly->parsed()) return run_poly(cfg);
    if (scan->parsed()) return run_scan(cfg);
    if (oracle->parsed()) return run_oracle(cfg);
    if (certify_cmd->parsed()) return run_certify(cfg);
    if (sweep_cmd->parsed()) {
      cfg.n_range = parse_range(n_range_text);
      cfg.m_range = parse_range(m_range_text);
      cfg.r_range = parse_range(r_range_text);
      return run_sweep(cfg);
    }
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }

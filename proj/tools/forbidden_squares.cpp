#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fsq/cache.hpp"
#include "fsq/constructive.hpp"
#include "fsq/kernels.hpp"
#include "fsq/serialize.hpp"
#include "fsq/tables.hpp"

// Exit statuses: 0 success / verification pass, 1 verification mismatch,
// 2 usage or input error, 3 internal-contradiction diagnostic.

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kUsage = 2;
constexpr int kDiagnostic = 3;

struct GlobalOpts {
  unsigned jobs = 1;
  std::string cache_dir;
  std::string kernel = "auto";
  fsq::SweepConfig config() const {
    fsq::SweepConfig c;
    c.jobs = jobs;
    return c;
  }
  std::string effective_cache_dir() const {
    if (!cache_dir.empty()) return cache_dir;
    const char* env = std::getenv("FORBIDDEN_SQUARES_CACHE");
    return env ? std::string(env) : std::string();
  }
};

fsq::SweepReport run_sweep(const GlobalOpts& g, uint64_t rho, uint64_t bound) {
  std::string dir = g.effective_cache_dir();
  if (!dir.empty())
    return fsq::cache_get_or_compute(fsq::ForbiddenValue(rho), bound, dir,
                                     g.config());
  return fsq::sweep(fsq::ForbiddenValue(rho), bound, g.config());
}

void maybe_export(const std::string& content, const std::string& path) {
  if (path.empty()) return;
  fsq::write_file(path, content);
  std::cout << "wrote " << path << "\n";
}

std::string render_certificate_line(const fsq::Certificate& cert) {
  std::string out = std::to_string(cert.n) + " =";
  for (size_t i = 0; i < cert.parts.size(); ++i) {
    out += (i ? " + " : " ") + std::to_string(cert.parts[i]) + "^2";
  }
  return out;
}

void print_sweep(const fsq::SweepReport& r) {
  std::cout << "sweep rho=" << r.rho << " bound=" << r.bound
            << " (kernel " << fsq::kernels::active_relax_name() << ")\n";
  if (!r.infinite.empty()) {
    std::cout << "  k = inf:";
    for (uint64_t n : r.infinite) std::cout << ' ' << n;
    std::cout << "\n";
  }
  for (auto it = r.exceptional.rbegin(); it != r.exceptional.rend(); ++it) {
    std::cout << "  k = " << it->first << ":";
    for (uint64_t n : it->second) std::cout << ' ' << n;
    std::cout << "\n";
  }
  std::cout << "  k <= 4 for every other n; max finite k = " << r.max_finite_k
            << "\n";
}

int print_diff(const fsq::DiffReport& d) {
  std::cout << fsq::diff_to_markdown(d);
  return d.pass ? kOk : kVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimum sums of squares avoiding one forbidden value"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--jobs", g.jobs, "sweep scan workers (default 1)");
  app.add_option("--cache-dir", g.cache_dir,
                 "sweep cache directory (or env FORBIDDEN_SQUARES_CACHE)");
  app.add_option("--kernel", g.kernel, "relax kernel: auto|scalar|avx2|neon");
  bool selftest_diag = false;
  app.add_flag("--selftest-diagnostic", selftest_diag,
               "self-test hook: raise an internal-contradiction diagnostic");

  uint64_t rho = 0, n = 0, bound = 0;
  std::string format = "json", out_path;

  auto* krho = app.add_subcommand("krho", "print k_rho(n)");
  krho->add_option("--rho", rho)->required();
  krho->add_option("--n", n)->required();

  auto* decompose = app.add_subcommand("decompose", "certificate for (rho, n)");
  decompose->add_option("--rho", rho)->required();
  decompose->add_option("--n", n)->required();
  decompose->add_option("--format", format, "json|csv|markdown");
  decompose->add_option("--out", out_path, "export certificate to file");

  auto* sweep_cmd = app.add_subcommand("sweep", "exact k_rho over [1, bound]");
  sweep_cmd->add_option("--rho", rho)->required();
  sweep_cmd->add_option("--bound", bound)->required();
  sweep_cmd->add_option("--format", format, "json|csv|markdown");
  sweep_cmd->add_option("--out", out_path, "export report to file");

  auto* mrho = app.add_subcommand("mrho", "exact M(rho) by sweeping to 550 rho^2");
  mrho->add_option("--rho", rho)->required();

  auto* verify = app.add_subcommand("verify", "check oracle against embedded tables");
  std::string target;
  uint64_t max_rho = 30, dubouis_k = 5;
  std::string corrupt;
  verify->add_option("target", target, "tables|N|dubouis|M")->required();
  verify->add_option("--rho", rho);
  verify->add_option("--bound", bound);
  verify->add_option("--k", dubouis_k, "Dubouis k (target dubouis)");
  verify->add_option("--max-rho", max_rho, "upper rho (target M)");
  verify->add_option("--inject-corruption", corrupt,
                     "self-test hook: corrupt one table entry, as n:k");
  verify->add_option("--format", format, "json|csv|markdown");
  verify->add_option("--out", out_path, "export diff report to file");

  auto* export_cmd = app.add_subcommand("export", "compute and write a report");
  std::string what;
  export_cmd->add_option("what", what, "sweep|certificate|verify")->required();
  export_cmd->add_option("--rho", rho)->required();
  export_cmd->add_option("--n", n);
  export_cmd->add_option("--bound", bound);
  export_cmd->add_option("--format", format, "json|csv|markdown");
  export_cmd->add_option("--path", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kUsage;
  }

  try {
    fsq::kernels::force_relax(g.kernel);
    if (selftest_diag)
      throw fsq::InternalContradiction("selftest diagnostic requested");
    fsq::SweepConfig config = g.config();

    if (*krho) {
      fsq::KValue k = fsq::min_squares_avoiding(fsq::ForbiddenValue(rho), n, config);
      std::cout << "k_" << rho << "(" << n << ") = " << k.to_string() << "\n";
      return kOk;
    }

    if (*decompose) {
      fsq::Certificate cert;
      try {
        cert = fsq::represent_avoiding(fsq::ForbiddenValue(rho), n, config);
      } catch (const fsq::InfiniteKError&) {
        std::cout << "k_" << rho << "(" << n
                  << ") = inf; no representation avoiding " << rho
                  << " exists\n";
        return kUsage;
      }
      if (cert.minimal)
        std::cout << "k_" << rho << "(" << n << ") = " << cert.parts.size()
                  << "\n";
      std::cout << render_certificate_line(cert) << "\n";
      std::cout << "method: " << fsq::method_tag(cert.method)
                << (cert.minimal ? " (minimal)" : "") << "\n";
      maybe_export(fsq::export_certificate(cert, fsq::parse_format(format)),
                   out_path);
      return kOk;
    }

    if (*sweep_cmd) {
      fsq::SweepReport report = run_sweep(g, rho, bound);
      print_sweep(report);
      maybe_export(fsq::export_sweep(report, fsq::parse_format(format)),
                   out_path);
      return kOk;
    }

    if (*mrho) {
      std::cout << "M(" << rho << ") = "
                << fsq::compute_M(fsq::ForbiddenValue(rho), config) << "\n";
      return kOk;
    }

    if (*verify) {
      if (target == "tables") {
        if (rho == 0) throw std::invalid_argument("verify tables needs --rho");
        fsq::ExpectedTable table = fsq::expected_table_for(rho);
        if (!corrupt.empty()) {
          auto colon = corrupt.find(':');
          if (colon == std::string::npos)
            throw std::invalid_argument("--inject-corruption wants n:k");
          uint64_t cn = std::stoull(corrupt.substr(0, colon));
          std::string ck = corrupt.substr(colon + 1);
          table.entries.insert_or_assign(
              cn, ck == "inf" ? fsq::KValue::infinity()
                              : fsq::KValue::finite(std::stoull(ck)));
          table.id += " (corrupted at n=" + std::to_string(cn) + ")";
        }
        uint64_t b = bound ? bound : std::max<uint64_t>(table.max_entry(), 1000);
        fsq::DiffReport d = fsq::verify_table(table, b, config);
        int rc = print_diff(d);
        maybe_export(fsq::export_diff(d, fsq::parse_format(format)),
                     out_path);
        return rc;
      }
      if (target == "N") {
        if (rho == 0) throw std::invalid_argument("verify N needs --rho");
        std::vector<uint64_t> expected = fsq::expected_N(rho);
        uint64_t b = bound ? bound : expected.back();
        fsq::DiffReport d = fsq::verify_table(rho, b, config);
        int rc = print_diff(d);
        maybe_export(fsq::export_diff(d, fsq::parse_format(format)),
                     out_path);
        return rc;
      }
      if (target == "dubouis") {
        uint64_t b = bound ? bound : 2000;
        auto dp = fsq::dubouis_exception_set(dubouis_k, b);
        auto closed = fsq::dubouis_closed_form(dubouis_k, b);
        fsq::DiffReport d;
        d.table_id = "E_" + std::to_string(dubouis_k) + " up to " + std::to_string(b);
        size_t i = 0, j = 0;
        while (i < dp.size() || j < closed.size()) {
          uint64_t a = i < dp.size() ? dp[i] : UINT64_MAX;
          uint64_t c = j < closed.size() ? closed[j] : UINT64_MAX;
          if (a == c) {
            ++i, ++j;
          } else if (a < c) {
            d.mismatches.push_back({a, "k-square representable", "not representable"});
            ++i;
          } else {
            d.mismatches.push_back({c, "not representable", "k-square representable"});
            ++j;
          }
        }
        d.pass = d.mismatches.empty();
        int rc = print_diff(d);
        maybe_export(fsq::export_diff(d, fsq::parse_format(format)),
                     out_path);
        return rc;
      }
      if (target == "M") {
        fsq::DiffReport d;
        d.table_id = "M(rho) closed form, rho <= " + std::to_string(max_rho);
        for (uint64_t r = 1; r <= max_rho; ++r) {
          uint64_t got = fsq::compute_M(fsq::ForbiddenValue(r), config);
          uint64_t want = fsq::predicted_M(fsq::ForbiddenValue(r));
          std::cout << "M(" << r << ") = " << got << " expected " << want << "\n";
          if (got != want)
            d.mismatches.push_back({r, std::to_string(want), std::to_string(got)});
        }
        d.pass = d.mismatches.empty();
        return print_diff(d);
      }
      throw std::invalid_argument("unknown verify target: " + target);
    }

    if (*export_cmd) {
      fsq::ExportFormat fmt = fsq::parse_format(format);
      if (what == "sweep") {
        if (bound == 0) throw std::invalid_argument("export sweep needs --bound");
        fsq::write_file(out_path, fsq::export_sweep(run_sweep(g, rho, bound), fmt));
      } else if (what == "certificate") {
        if (n == 0) throw std::invalid_argument("export certificate needs --n");
        fsq::write_file(out_path,
                        fsq::export_certificate(
                            fsq::represent_avoiding(fsq::ForbiddenValue(rho), n, config),
                            fmt));
      } else if (what == "verify") {
        uint64_t b = bound ? bound : std::max<uint64_t>(
                                         fsq::expected_table_for(rho).max_entry(), 1000);
        fsq::write_file(out_path,
                        fsq::export_diff(fsq::verify_table(rho, b, config), fmt));
      } else {
        throw std::invalid_argument("unknown export target: " + what);
      }
      std::cout << "wrote " << out_path << "\n";
      return kOk;
    }
  } catch (const fsq::InternalContradiction& e) {
    std::cerr << "internal contradiction: " << e.what() << "\n";
    return kDiagnostic;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

// clothoid: generate clothoid-helix curve data, print foci and delta_n
// tables, and run the verification suites.
//
// Exit status: 0 success, 1 verification failure, 2 invalid arguments.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "clothoid/curve.hpp"
#include "clothoid/errors.hpp"
#include "clothoid/io.hpp"
#include "clothoid/kernels.hpp"
#include "clothoid/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalid = 2;

enum class Command { generate, verify, foci, delta_seq };

struct RunConfig {
  int case_id = 1;
  double k = 1.0;
  double c = 1.0;
  double delta = 0.0;
  std::string s_min = "-sqrt(50)";
  std::string s_max = "sqrt(50)";
  std::size_t samples = 1000;
  std::string part = "both";
  std::string format = "csv";
  std::string output;  // empty: stdout
  bool rezero = false;
  bool closed_grid = false;
  std::string suite = "all";
  int n_max = 10;
};

// Accepts plain numbers and the forms sqrt(x) / -sqrt(x).
double parse_length(const std::string& text) {
  std::string body = text;
  double sign = 1.0;
  if (!body.empty() && body.front() == '-' && body.rfind("-sqrt(", 0) == 0) {
    sign = -1.0;
    body.erase(0, 1);
  }
  if (body.rfind("sqrt(", 0) == 0 && body.back() == ')') {
    const double inner = std::stod(body.substr(5, body.size() - 6));
    if (inner < 0.0) throw clothoid::DomainError("sqrt of a negative number: " + text);
    return sign * std::sqrt(inner);
  }
  std::size_t used = 0;
  const double v = std::stod(text, &used);
  if (used != text.size()) throw clothoid::DomainError("not a number: " + text);
  return v;
}

int run_generate(const RunConfig& cfg) {
  using namespace clothoid;
  const FCase which = fcase_from_int(cfg.case_id);
  const HelixParams params{cfg.k, cfg.c, cfg.delta};
  const double s_min = parse_length(cfg.s_min);
  const double s_max = parse_length(cfg.s_max);
  const io::Part part = io::part_from_string(cfg.part);
  if (cfg.format != "csv" && cfg.format != "json") throw DomainError("format must be csv or json");

  SampleOptions opts;
  opts.include_end = cfg.closed_grid;
  opts.origin = cfg.rezero ? Origin::zero_at_s0 : Origin::at_shift;
  const Curve curve = sample_curve(which, params, s_min, s_max, cfg.samples, opts);

  std::ofstream file;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) throw DomainError("cannot open output file " + cfg.output);
  }
  std::ostream& out = cfg.output.empty() ? std::cout : file;
  if (cfg.format == "csv") {
    io::write_csv(out, curve, part);
  } else {
    io::write_json(out, curve, io::JsonMeta{s_min, s_max, opts.origin});
  }
  return kExitOk;
}

int run_verify(const RunConfig& cfg) {
  using namespace clothoid;
  const verify::Suite suite = verify::suite_from_string(cfg.suite);
  std::printf("kernel isa: %s\n", std::string(kernels::isa_name(kernels::active_isa())).c_str());
  bool ok = true;
  for (const auto& report : verify::run(suite)) {
    for (const auto& check : report.checks) {
      const char* tag = !check.gating ? "INFO" : check.passed() ? "PASS" : "FAIL";
      std::printf("[%s] %-8s %-62s max=%.6e tol=%.1e\n", tag,
                  std::string(verify::to_string(report.suite)).c_str(), check.name.c_str(), check.observed,
                  check.tolerance);
    }
    ok = ok && report.passed();
  }
  std::printf("%s\n", ok ? "all checks passed" : "verification FAILED");
  return ok ? kExitOk : kExitVerifyFailed;
}

int run_foci(const RunConfig& cfg) {
  using namespace clothoid;
  const FCase which = fcase_from_int(cfg.case_id);
  const Foci f = foci(which, HelixParams{cfg.k, cfg.c, cfg.delta});
  std::printf("case %d  k=%s  c=%s  delta=%s\n", cfg.case_id, io::format_number(cfg.k).c_str(),
              io::format_number(cfg.c).c_str(), io::format_number(cfg.delta).c_str());
  std::printf("plus  (s -> +inf): x=%.17g y=%.17g\n", f.plus.x(), f.plus.y());
  std::printf("minus (s -> -inf): x=%.17g y=%.17g\n", f.minus.x(), f.minus.y());
  const char* label = f.bisectrix == Bisectrix::first    ? "first bisectrix"
                      : f.bisectrix == Bisectrix::second ? "second bisectrix"
                                                         : "no bisectrix";
  std::printf("%s\n", label);
  return kExitOk;
}

int run_delta_seq(const RunConfig& cfg) {
  const auto deltas = clothoid::delta_sequence(cfg.n_max, cfg.c);
  std::printf("n,delta_n\n");
  for (std::size_t n = 0; n < deltas.size(); ++n) std::printf("%zu,%.17g\n", n, deltas[n]);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clothoid helices from closed-form Riccati solutions"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::optional<Command> command;

  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--case", cfg.case_id, "f-set permutation case (1-4; foci: 1-2)")->capture_default_str();
    sub->add_option("--k", cfg.k, "curvature/torsion ratio")->capture_default_str();
    sub->add_option("--c", cfg.c, "dilation parameter (> 0)")->capture_default_str();
    sub->add_option("--delta", cfg.delta, "arclength shift (requires k = 1)")->capture_default_str();
  };

  auto* gen = app.add_subcommand("generate", "sample a curve and write CSV or JSON");
  add_params(gen);
  gen->add_option("--s-min", cfg.s_min, "start of the s range (number or sqrt(x))")->capture_default_str();
  gen->add_option("--s-max", cfg.s_max, "end of the s range (number or sqrt(x))")->capture_default_str();
  gen->add_option("--samples", cfg.samples, "number of samples (>= 2)")->capture_default_str();
  gen->add_option("--part", cfg.part, "real, imag or both (CSV columns)")->capture_default_str();
  gen->add_option("--format", cfg.format, "csv or json")->capture_default_str();
  gen->add_option("--output,-o", cfg.output, "output file (default stdout)");
  gen->add_flag("--rezero", cfg.rezero, "shift shifted curves so the position at s = 0 is the origin");
  gen->add_flag("--closed-grid", cfg.closed_grid, "include s-max (default grid is [s-min, s-max))");
  gen->callback([&] { command = Command::generate; });

  auto* ver = app.add_subcommand("verify", "run verification suites");
  ver->add_option("--suite", cfg.suite, "fresnel, riccati, tangent, curve, frenet or all")->capture_default_str();
  ver->callback([&] { command = Command::verify; });

  auto* foc = app.add_subcommand("foci", "print the foci of a case 1/2 curve");
  add_params(foc);
  foc->callback([&] { command = Command::foci; });

  auto* dseq = app.add_subcommand("delta-seq", "print the delta_n sequence");
  dseq->add_option("--n-max", cfg.n_max, "largest n")->capture_default_str();
  dseq->add_option("--c", cfg.c, "dilation parameter (> 0)")->capture_default_str();
  dseq->callback([&] { command = Command::delta_seq; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    switch (*command) {
      case Command::generate: return run_generate(cfg);
      case Command::verify: return run_verify(cfg);
      case Command::foci: return run_foci(cfg);
      case Command::delta_seq: return run_delta_seq(cfg);
    }
  } catch (const clothoid::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: invalid number (" << e.what() << ")\n";
    return kExitInvalid;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: number out of range (" << e.what() << ")\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "cliffrad/json_io.hpp"
#include "cliffrad/transforms.hpp"
#include "cliffrad/verify.hpp"

using namespace cliffrad;

namespace {

constexpr std::uint64_t kDefaultSeed = 42;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("CLIFFRAD_SEED")) {
    try {
      std::size_t pos = 0;
      const auto v = std::stoull(env, &pos);
      if (pos == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("CLIFFRAD_SEED is not an unsigned integer");
  }
  return kDefaultSeed;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + out);
  f << text;
}

struct Options {
  int m = 3;
  int kmax = 3;
  std::uint64_t samples = QuadratureSpec{}.samples;
  std::optional<std::uint64_t> seed;
  bool stderr_ = false;
  unsigned threads = 0;
  std::string frame, input, out;
  std::string which = "bargmann", form = "char", method = "fischer", mode = "derived";
};

QuadratureSpec quadrature(const Options& o) {
  if (o.samples < 2) throw UsageError("--samples must be at least 2");
  return QuadratureSpec{o.samples, o.seed ? *o.seed : default_seed(), true, o.threads};
}

MVPolynomial read_polynomial(const Options& o) {
  if (o.input.empty()) throw UsageError("--input is required");
  const MVPolynomial p = polynomial_from_json(load_json_argument(o.input));
  if (p.dim() < 3) throw UsageError("polynomials must have m >= 3");
  return p;
}

int cmd_verify(const Options& o) {
  VerifyConfig cfg{o.m, o.kmax, quadrature(o)};
  validate(cfg);
  const VerifyReport report = run_verify(cfg);
  emit(report.to_jsonl(), o.out);
  return report.failed() ? 1 : 0;
}

int cmd_transform(const Options& o) {
  const MVPolynomial f = read_polynomial(o);
  if (o.frame.empty()) throw UsageError("--frame is required");
  const NullFrame fr = frame_from_json(load_json_argument(o.frame));
  if (fr.dim() != f.dim()) throw UsageError("frame and polynomial dimensions differ");
  if (f.nvars() != f.dim()) throw UsageError("transform expects a single-block polynomial");
  MVPolynomial r;
  if (o.form == "char") r = radon_char(f, fr);
  else if (o.which == "bargmann") r = bargmann_radon_integral(f, fr);
  else r = szego_radon_integral(f, fr);
  json j = {{"result", to_json(r)},
            {"metadata", to_json(ResultMetadata{o.which + "/" + o.form, 0, 0, 0.0})}};
  emit(j.dump(2) + "\n", o.out);
  return 0;
}

int cmd_monopart(const Options& o) {
  const MVPolynomial h = read_polynomial(o);
  const MVPolynomial oracle = monogenic_projection(h);
  if (o.method == "fischer") {
    json j = {{"result", to_json(oracle)}, {"metadata", to_json(ResultMetadata{"fischer", 0, 0, 0.0})}};
    emit(j.dump(2) + "\n", o.out);
    return 0;
  }
  const QuadratureSpec spec = quadrature(o);
  const ThetaMode mode = theta_mode_from_string(o.mode);
  const MonogenicPart part = monogenic_part_integral(h, spec, mode);
  json j = {{"result", to_json(part.value)},
            {"metadata", to_json(ResultMetadata{std::string(to_string(mode)), spec.samples, spec.seed,
                                                part.stderr_.max_abs()})}};
  if (o.stderr_) j["stderr"] = to_json(part.stderr_);
  double worst = 0.0;
  const bool agree = within_stderr(part.value, part.stderr_, oracle, 5.0, 1e-10, &worst);
  j["cross-check"] = {{"method", "fischer"},
                      {"max-sigma", worst},
                      {"max-abs-diff", max_abs_diff(part.value, oracle)},
                      {"status", agree ? "pass" : "fail"}};
  if (!agree) j["cross-check"]["fischer"] = to_json(oracle);
  emit(j.dump(2) + "\n", o.out);
  if (!agree) std::cerr << "monopart: integral and Fischer results differ beyond 5 standard errors\n";
  return agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bargmann-Radon and Szego-Radon transforms in Clifford analysis"};
  app.require_subcommand(1);
  Options o;

  auto add_quadrature = [&o](CLI::App* c) {
    c->add_option("--samples", o.samples, "Stiefel Monte-Carlo sample count");
    c->add_option("--seed", o.seed, "random seed (default: CLIFFRAD_SEED or 42)");
    c->add_flag("--stderr", o.stderr_, "include the standard-error polynomial in the output");
    c->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  };

  auto* verify = app.add_subcommand("verify", "run the identity suite and print JSON lines");
  verify->add_option("--m", o.m, "dimension, 3..6");
  verify->add_option("--kmax", o.kmax, "largest degree checked, 0..6");
  add_quadrature(verify);
  verify->add_option("--out", o.out, "output file (default stdout)");

  auto* transform = app.add_subcommand("transform", "apply a Radon-type projection");
  transform->add_option("--input", o.input, "polynomial JSON or file")->required();
  transform->add_option("--frame", o.frame, "frame JSON {t, s} or file")->required();
  transform->add_option("--which", o.which)->check(CLI::IsMember({"bargmann", "szego"}));
  transform->add_option("--form", o.form)->check(CLI::IsMember({"char", "integral"}));
  transform->add_option("--out", o.out, "output file (default stdout)");

  auto* monopart = app.add_subcommand("monopart", "monogenic part of a polynomial");
  monopart->add_option("--input", o.input, "polynomial JSON or file")->required();
  monopart->add_option("--method", o.method)->check(CLI::IsMember({"fischer", "integral"}));
  monopart->add_option("--mode", o.mode)->check(CLI::IsMember({"printed", "derived"}));
  add_quadrature(monopart);
  monopart->add_option("--out", o.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*verify) return cmd_verify(o);
    if (*transform) return cmd_transform(o);
    return cmd_monopart(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

#include "splitq/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <ostream>

#include "splitq/born.hpp"
#include "splitq/errors.hpp"
#include "splitq/gspace.hpp"
#include "splitq/interference.hpp"
#include "splitq/json_io.hpp"
#include "splitq/kernels.hpp"
#include "splitq/witness.hpp"

namespace splitq::cli {

namespace {

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

int parse_sign(const std::string& s) {
  if (s == "+" || s == "+1" || s == "1") return 1;
  if (s == "-" || s == "-1") return -1;
  throw CLI::ValidationError("--sign", "expected + or -");
}

struct ClassifyArgs {
  double p1 = 0, p2 = 0, pprime = 0;
};

struct InterfereArgs {
  std::string law;
  double p1 = 0, p2 = 0, theta_min = 0, theta_max = 0;
  std::size_t steps = 0;
  std::string sign = "+";
  bool regime = false;
};

struct TransformArgs {
  std::string state_file, matrix_file;
};

struct VerifyArgs {
  std::string matrix_file;
};

struct WitnessArgs {
  std::uint64_t seed = 0;
  std::uint64_t max_iter = 0;
};

int cmd_classify(const ClassifyArgs& a, std::ostream& out) {
  emit(out, to_json(classify(a.pprime, a.p1, a.p2)));
  return kOk;
}

int cmd_interfere(const InterfereArgs& a, std::ostream& out, std::ostream& err) {
  const int sign = parse_sign(a.sign);
  std::vector<double> grid;
  try {
    grid = uniform_grid(a.theta_min, a.theta_max, a.steps);
  } catch (const InvalidArgument& e) {
    err << "interfere: " << e.what() << '\n';
    return kUsage;
  }
  if (!(a.p1 >= 0.0) || !(a.p2 >= 0.0)) {
    err << "interfere: --p1 and --p2 must be >= 0\n";
    return kPrecondition;
  }
  const Law law = a.law == "trig" ? Law::kTrig : Law::kHyp;
  const auto rows = sweep(law, a.p1, a.p2, sign, grid);
  std::string text = a.regime ? "theta,p_prime,regime\n" : "theta,p_prime\n";
  for (const SweepRow& r : rows) {
    text += format_number(r.theta);
    text += ',';
    text += format_number(r.p_prime);
    if (a.regime) {
      text += ',';
      text += regime_name(r.regime);
    }
    text += '\n';
  }
  out << text;
  return kOk;
}

int cmd_transform(const TransformArgs& a, std::ostream& out) {
  const GVec2 beta = gvec2_from_json(read_json_file(a.state_file));
  const GMat2 b = gmat2_from_json(read_json_file(a.matrix_file));
  const StateDecomposition d = pipeline_probabilities(beta, b, kEpsAlg);
  emit(out, to_json(d));
  return d.decomposable ? kOk : kNegative;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const GMat2 b = gmat2_from_json(read_json_file(a.matrix_file));
  const RealMat2 p = prob_matrix(b);
  double min_norm = p[0][0];
  for (const auto& r : p)
    for (double v : r) min_norm = std::min(min_norm, v);

  const bool unitary = is_orthonormal_rows(b, kEpsAlg);
  const bool g_plus = entries_in_g_plus(b, kEpsMem);
  const bool stochastic = is_doubly_stochastic(p, kEpsAlg);
  emit(out, json{{"unitary", unitary},
                 {"entries_in_g_plus", g_plus},
                 {"doubly_stochastic", stochastic},
                 {"orthonormality_residual", orthonormality_residual(b)},
                 {"min_entry_norm_sq", min_norm},
                 {"stochastic_residual", stochastic_residual(p)}});
  return unitary && g_plus && stochastic ? kOk : kNegative;
}

int cmd_witness(const WitnessArgs& a, std::ostream& out) {
  const auto w = search_non_transitivity(a.seed, a.max_iter);
  if (!w) {
    emit(out, json{{"found", false}, {"seed", a.seed}, {"max_iter", a.max_iter}});
    return kExhausted;
  }
  json j = to_json(*w);
  j["found"] = true;
  j["seed"] = a.seed;
  j["iteration"] = w->iteration;
  emit(out, j);
  return kOk;
}

}  // namespace

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Hyperbolic quantum formalism toolkit", "splitq"};
  app.require_subcommand(1);

  ClassifyArgs ca;
  auto* classify_cmd = app.add_subcommand(
      "classify", "Classify a (P', P1, P2) triple as trigonometric or hyperbolic");
  classify_cmd->add_option("--p1", ca.p1)->required();
  classify_cmd->add_option("--p2", ca.p2)->required();
  classify_cmd->add_option("--pprime", ca.pprime)->required();

  InterfereArgs ia;
  auto* interfere_cmd =
      app.add_subcommand("interfere", "Sweep an interference law over theta (CSV)");
  interfere_cmd->add_option("--law", ia.law)
      ->required()
      ->check(CLI::IsMember({"trig", "hyp"}));
  interfere_cmd->add_option("--p1", ia.p1)->required();
  interfere_cmd->add_option("--p2", ia.p2)->required();
  interfere_cmd->add_option("--theta-min", ia.theta_min)->required();
  interfere_cmd->add_option("--theta-max", ia.theta_max)->required();
  interfere_cmd->add_option("--steps", ia.steps)->required();
  interfere_cmd->add_option("--sign", ia.sign, "+ or - (hyperbolic law)");
  interfere_cmd->add_flag("--regime", ia.regime, "Append the classified regime column");

  TransformArgs ta;
  auto* transform_cmd = app.add_subcommand(
      "transform", "Change basis of a state and apply the Born rule");
  transform_cmd->add_option("--state", ta.state_file)->required();
  transform_cmd->add_option("--matrix", ta.matrix_file)->required();

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Check unitarity, G+ entries and double stochasticity of a matrix");
  verify_cmd->add_option("--matrix", va.matrix_file)->required();

  WitnessArgs wa;
  auto* witness_cmd = app.add_subcommand(
      "witness", "Search for a non-transitive decomposability witness");
  witness_cmd->add_option("--seed", wa.seed)->required();
  witness_cmd->add_option("--max-iter", wa.max_iter)
      ->required()
      ->check(CLI::PositiveNumber);

  // CLI11 consumes arguments from the back.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "splitq: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(ca, out);
    if (*interfere_cmd) return cmd_interfere(ia, out, err);
    if (*transform_cmd) return cmd_transform(ta, out);
    if (*verify_cmd) return cmd_verify(va, out);
    if (*witness_cmd) return cmd_witness(wa, out);
  } catch (const CLI::ValidationError& e) {
    err << "splitq: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "splitq: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "splitq: " << e.what() << '\n';
    return kPrecondition;
  }
  return kUsage;
}

}  // namespace splitq::cli

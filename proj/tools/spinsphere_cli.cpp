// Command-line front end: evaluate geometric quantities at points, run the
// full verification suite, and solve spin lifts.
//
// Exit codes: 0 success, 1 verification/membership failure, 2 I/O failure,
// 3 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>

#include "spinsphere/connection.hpp"
#include "spinsphere/curvature.hpp"
#include "spinsphere/frames.hpp"
#include "spinsphere/reference_tables.hpp"
#include "spinsphere/spin_bundles.hpp"
#include "spinsphere/spin_lift.hpp"
#include "spinsphere/verification.hpp"

namespace {

using namespace spinsphere;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitIo = 2;
constexpr int kExitUsage = 3;

std::vector<double> parse_reals(const std::string& text, std::size_t want, const char* what) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t pos = text.find(',', start);
    std::string tok = text.substr(start, pos == std::string::npos ? pos : pos - start);
    char* end = nullptr;
    double v = std::strtod(tok.c_str(), &end);
    if (tok.empty() || end != tok.c_str() + tok.size())
      throw UsageError(std::string(what) + ": bad number token '" + tok + "'");
    out.push_back(v);
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  if (out.size() != want)
    throw UsageError(std::string(what) + ": expected " + std::to_string(want) +
                     " comma-separated reals, got " + std::to_string(out.size()));
  return out;
}

ChartId parse_chart(const std::string& name) {
  if (name == "north") return ChartId::north_stereo;
  if (name == "south") return ChartId::south_stereo;
  if (name == "spherical") return ChartId::spherical;
  throw UsageError("unknown chart '" + name + "' (expected north|south|spherical)");
}

FrameId parse_frame(const std::string& name) {
  if (name == "x") return FrameId::X;
  if (name == "y") return FrameId::Y;
  if (name == "ytilde") return FrameId::Ytilde;
  if (name == "e") return FrameId::E;
  throw UsageError("unknown frame '" + name + "' (expected x|y|ytilde|e)");
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::ios_base::failure("cannot open output file '" + out_path + "'");
  f << text;
  if (!f) throw std::ios_base::failure("failed writing output file '" + out_path + "'");
}

struct EvalOptions {
  std::string quantity;
  std::string chart = "north";
  std::string frame_pair = "x";
  std::string point;
  std::string scale = "cosh:1";
  int points = 1;
  std::uint64_t seed = 42;
  std::string out;
  std::string format = "json";
};

ComponentArray eval_quantity(const EvalOptions& opt, const Point& p, const ScaleFactor& sf) {
  auto home = [&](FrameId f) { return p.chart == home_chart(f) ? p : transition(p, home_chart(f)); };
  const std::string& q = opt.quantity;
  if (q == "metric") return ComponentArray::from(holonomic_metric(p, sf));
  if (q == "transition") {
    std::size_t dash = opt.frame_pair.find('-');
    if (dash == std::string::npos)
      throw UsageError("quantity 'transition' needs --frame-pair of the form a-b, e.g. y-x");
    FrameId from = parse_frame(opt.frame_pair.substr(0, dash));
    FrameId to = parse_frame(opt.frame_pair.substr(dash + 1));
    return ComponentArray::from(frame_transition(from, to, p));
  }
  if (q == "G") return ComponentArray::from(basic_field(BasicFieldId::G));
  if (q == "dirac-gamma") return ComponentArray::from(basic_field(BasicFieldId::gamma));
  FrameId f = parse_frame(opt.frame_pair);
  if (q == "frames") return ComponentArray::from(frame_coefficients(f, home(f), sf));
  if (q == "commutators") return ComponentArray::from(commutators(f, home(f), sf).c);
  if (q == "gamma") return ComponentArray::from(gamma_special(f, home(f), sf));
  if (q == "A")
    return ComponentArray::from(spinor_connection(frame_pair_of(f), home(f), sf).a);
  if (q == "riemann") return ComponentArray::from(riemann(f, home(f), sf));
  if (q == "spinor-curvature")
    return ComponentArray::from(spinor_curvature(frame_pair_of(f), home(f), sf));
  if (q == "ricci") return ComponentArray::from(ricci_and_scalar(f, home(f), sf).ricci);
  if (q == "scalar") return ComponentArray::scalar(ricci_and_scalar(f, home(f), sf).scalar);
  throw UsageError("unknown quantity '" + q + "'");
}

int cmd_eval(const EvalOptions& opt) {
  if (opt.points < 1) throw UsageError("--points must be >= 1");
  ScaleFactor sf = ScaleFactor::parse(opt.scale);
  ChartId chart = parse_chart(opt.chart);
  std::vector<Point> pts;
  if (!opt.point.empty()) {
    auto c = parse_reals(opt.point, 4, "--point");
    pts.push_back({chart, {c[0], c[1], c[2], c[3]}});
  } else {
    pts = sample_points(chart, opt.points, opt.seed);
  }

  nlohmann::ordered_json j;
  j["config"] = {{"command", "eval"},     {"quantity", opt.quantity},
                 {"chart", opt.chart},    {"frame-pair", opt.frame_pair},
                 {"scale", opt.scale},    {"points", static_cast<int>(pts.size())},
                 {"seed", opt.seed},      {"format", opt.format}};
  j["entries"] = nlohmann::ordered_json::array();
  std::string csv = "quantity,point,indices,computed_re,computed_im\n";
  char buf[256];
  for (const Point& p : pts) {
    ComponentArray a = eval_quantity(opt, p, sf);
    for (std::size_t k = 0; k < a.size(); ++k) {
      auto idx = a.unflatten(k);
      nlohmann::ordered_json e;
      e["quantity"] = opt.quantity;
      e["point"] = p.coords;
      e["indices"] = idx;
      e["computed"] = {a.values[k].real(), a.values[k].imag()};
      j["entries"].push_back(std::move(e));
      if (opt.format == "csv") {
        std::string idxs, pstr;
        for (std::size_t t = 0; t < idx.size(); ++t)
          idxs += (t ? ":" : "") + std::to_string(idx[t]);
        for (int t = 0; t < 4; ++t) {
          std::snprintf(buf, sizeof(buf), "%s%.17g", t ? ":" : "", p.coords[t]);
          pstr += buf;
        }
        std::snprintf(buf, sizeof(buf), "%s,%s,%s,%.17g,%.17g\n", opt.quantity.c_str(),
                      pstr.c_str(), idxs.c_str(), a.values[k].real(), a.values[k].imag());
        csv += buf;
      }
    }
  }
  write_output(opt.format == "csv" ? csv : j.dump(2) + "\n", opt.out);
  return kExitOk;
}

int cmd_verify(const RunConfig& config, const std::string& out) {
  VerificationReport report = run_verification(config);
  write_output(config.format == "csv" ? serialize_csv(report) : serialize_json(report), out);
  std::cerr << "verify: " << report.matches << " matched, " << report.errata
            << " flagged errata, " << report.mismatches << " mismatched\n";
  return report.mismatches == 0 ? kExitOk : kExitFailure;
}

int cmd_lift(const std::string& matrix_text, const std::string& out, const std::string& format) {
  auto v = parse_reals(matrix_text, 16, "lift matrix");
  Mat4d l;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) l(i, j) = v[static_cast<std::size_t>(i) * 4 + j];
  Mat2c s = lift(l);  // MembershipError -> exit 1 in main()
  Mat4d back = phi(s);
  double residual = max_abs_diff(back, l);
  Complex det = determinant(s);

  nlohmann::ordered_json j;
  j["config"] = {{"command", "lift"}, {"format", format}};
  j["lift"] = nlohmann::ordered_json::array();
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      j["lift"].push_back({{"indices", {i, k}}, {"value", {s(i, k).real(), s(i, k).imag()}}});
  j["det"] = {det.real(), det.imag()};
  j["round_trip_residual"] = residual;
  std::string csv = "indices,value_re,value_im\n";
  char buf[128];
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) {
      std::snprintf(buf, sizeof(buf), "%d:%d,%.17g,%.17g\n", i, k, s(i, k).real(),
                    s(i, k).imag());
      csv += buf;
    }
  std::snprintf(buf, sizeof(buf), "# det=(%.17g,%.17g) round_trip_residual=%.17g\n", det.real(),
                det.imag(), residual);
  csv += buf;
  write_output(format == "csv" ? csv : j.dump(2) + "\n", out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical spin geometry on the closed universe R x S^3"};
  app.require_subcommand(1);

  EvalOptions eval_opt;
  CLI::App* eval = app.add_subcommand("eval", "evaluate one quantity at a point or sample");
  eval->add_option("--quantity", eval_opt.quantity,
                   "metric|frames|commutators|transition|gamma|A|riemann|spinor-curvature|"
                   "ricci|scalar|G|dirac-gamma")
      ->required();
  eval->add_option("--chart", eval_opt.chart, "north|south|spherical");
  eval->add_option("--frame-pair", eval_opt.frame_pair, "x|y|ytilde|e, or a-b for transitions");
  eval->add_option("--point", eval_opt.point, "c0,c1,c2,c3 in the chart's coordinates");
  eval->add_option("--scale", eval_opt.scale, "const:<R0>|linear:<a>,<b>|cosh:<a>|poly:<c0..c3>");
  eval->add_option("--points", eval_opt.points, "sample count when --point is absent");
  eval->add_option("--seed", eval_opt.seed, "sampling seed");
  eval->add_option("--out", eval_opt.out, "output path (default stdout)");
  eval->add_option("--format", eval_opt.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  RunConfig verify_cfg;
  std::string verify_out;
  CLI::App* verify = app.add_subcommand("verify", "run every reference table and invariant");
  verify->add_option("--scale", verify_cfg.scale, "scale factor spec");
  verify->add_option("--points", verify_cfg.points, "seeded sample count per chart");
  verify->add_option("--seed", verify_cfg.seed, "sampling seed");
  verify->add_option("--tol", verify_cfg.tol, "reference comparison tolerance");
  verify->add_option("--out", verify_out, "report path (default stdout)");
  verify->add_option("--format", verify_cfg.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  std::string lift_matrix, lift_out, lift_format = "json";
  CLI::App* lift_cmd = app.add_subcommand("lift", "solve the spin lift of a Lorentz matrix");
  lift_cmd->add_option("matrix", lift_matrix, "16 comma-separated reals, row-major")->required();
  lift_cmd->add_option("--out", lift_out, "output path (default stdout)");
  lift_cmd->add_option("--format", lift_format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*eval) return cmd_eval(eval_opt);
    if (*verify) {
      verify_cfg.command = "verify";
      return cmd_verify(verify_cfg, verify_out);
    }
    return cmd_lift(lift_matrix, lift_out, lift_format);
  } catch (const MembershipError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const ConditioningError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

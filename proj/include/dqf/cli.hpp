#pragma once

// Command-line front end. run_cli() does all the work so that the tool's
// main() is a one-liner and tests can drive commands in-process.
//
// Exit codes: 0 success, 1 usage or parse error, 2 mathematical infeasibility.

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dqf/dualfactor.hpp"
#include "dqf/error.hpp"
#include "dqf/expr.hpp"
#include "dqf/factorize.hpp"
#include "dqf/json.hpp"
#include "dqf/kinematics.hpp"
#include "dqf/poly.hpp"
#include "dqf/tolerance.hpp"

namespace dqf {

namespace cli {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline double to_double(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + text + "'");
  }
  if (used != text.size()) throw UsageError("not a number: '" + text + "'");
  return v;
}

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string piece;
  std::istringstream is(text);
  while (std::getline(is, piece, sep)) out.push_back(piece);
  return out;
}

inline std::vector<double> numbers(const std::string& text, std::size_t expected = 0) {
  std::vector<double> out;
  for (const auto& piece : split(text, ',')) out.push_back(to_double(piece));
  if (expected != 0 && out.size() != expected) {
    throw UsageError("expected " + std::to_string(expected) + " comma-separated numbers, got '" + text + "'");
  }
  return out;
}

inline Point3 point(const std::string& text) {
  auto v = numbers(text, 3);
  return {v[0], v[1], v[2]};
}

inline std::vector<std::size_t> ordering(const std::string& text) {
  std::vector<std::size_t> out;
  for (double v : numbers(text)) {
    if (v < 0 || v != static_cast<double>(static_cast<std::size_t>(v))) {
      throw UsageError("plan entries must be non-negative integers");
    }
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

/// "a0,a1;b0,b1;..." -> one linear polynomial a0 + a1 t per part.
inline std::vector<RealPoly> weight_parts(const std::string& text) {
  std::vector<RealPoly> out;
  for (const auto& part : split(text, ';')) {
    auto v = numbers(part);
    if (v.empty() || v.size() > 2) throw UsageError("weight parts are 'constant,linear' pairs");
    out.push_back(RealPoly{v[0], v.size() > 1 ? v[1] : 0.0});
  }
  return out;
}

/// Index of the first repeated irreducible quadratic norm factor.
inline std::size_t family_group(const DualFactorization& df) {
  for (std::size_t g = 0; g < df.groups.size(); ++g) {
    if (df.groups[g].primal.multiplicity > 1 && df.groups[g].primal.poly.degree() == 2) return g;
  }
  throw Error(Errc::InfeasiblePlan, "the norm polynomial has no repeated quadratic factor; there is no family to select from");
}

/// Which factorization to compute; mirrors the flags of `factor`.
struct Selection {
  std::optional<std::string> plan;
  std::optional<std::string> lambda;
  std::optional<std::string> weights;

  bool empty() const { return !plan && !lambda && !weights; }
};

inline LinearFactorization select(const DQPoly& m, const Selection& sel, const Tolerance& tol) {
  FactorabilityReport report = can_factor(m, tol);
  if (!report.factorable) throw Error(Errc::NotFactorizable, report.diagnosis);
  if (sel.empty() && report.translational) return factor_translational(m, tol);

  FactorPlan plan;
  if (sel.plan) plan.ordering = ordering(*sel.plan);
  if (sel.lambda && sel.weights) throw UsageError("--lambda and --weights are mutually exclusive");
  if (sel.lambda || sel.weights) {
    auto monic_m = normalize_monic(m, tol).second;
    DualFactorization df = factor_dual(norm(monic_m, tol), {}, tol);
    std::size_t g = family_group(df);
    const auto& group = df.groups[g];
    std::vector<RealPoly> parts;
    if (sel.lambda) {
      // N + eps(l/n - mu), N + eps(l/n + mu), N + eps l/n, ...
      auto v = numbers(*sel.lambda, 2);
      RealPoly mu{v[0], v[1]};
      parts = even_split(group.lambda, group.primal.multiplicity);
      parts[0] -= mu;
      parts[1] += mu;
    } else {
      parts = weight_parts(*sel.weights);
    }
    plan.splits.assign(df.groups.size(), {});
    plan.splits[g] = parts;
  }
  return rfactor(m, plan, tol);
}

inline bool is_motion_factor(const DQPoly& f, const Tolerance& tol) {
  for (double c : study_defect(f, tol).coeffs()) {
    if (std::abs(c) > tol.zero_eps) return false;
  }
  return true;
}

/// Leg selectors: default | motion | motion-first | motion-last | index:N |
/// lambda:L0,L1 | weights:A0,A1;B0,B1 | plan:I,J,...
/// The list is comma separated; a piece starting with a digit, sign or dot
/// continues the previous selector, so "motion,lambda:3,4" is two selectors.
inline std::vector<std::string> split_selectors(const std::string& text) {
  std::vector<std::string> out;
  for (const auto& piece : split(text, ',')) {
    bool continuation = !piece.empty() && (std::isdigit(static_cast<unsigned char>(piece[0])) ||
                                           piece[0] == '-' || piece[0] == '+' || piece[0] == '.');
    if (continuation && !out.empty()) out.back() += "," + piece;
    else if (!piece.empty()) out.push_back(piece);
  }
  return out;
}

inline LinearFactorization resolve_selector(const DQPoly& m, const std::string& selector, const Tolerance& tol) {
  auto colon = selector.find(':');
  std::string name = selector.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : selector.substr(colon + 1);
  if (name == "default") return select(m, {}, tol);
  if (name == "lambda") return select(m, {std::nullopt, arg, std::nullopt}, tol);
  if (name == "weights") return select(m, {std::nullopt, std::nullopt, arg}, tol);
  if (name == "plan") return select(m, {arg, std::nullopt, std::nullopt}, tol);

  FactorabilityReport report = can_factor(m, tol);
  if (!report.factorable) throw Error(Errc::NotFactorizable, report.diagnosis);
  auto all = enumerate_factorizations(m, 0, 0, tol);
  if (name == "index") {
    auto n = static_cast<std::size_t>(to_double(arg));
    if (n >= all.size()) {
      throw Error(Errc::InfeasiblePlan, "index " + arg + " out of range; " + std::to_string(all.size()) +
                                            " factorizations enumerated");
    }
    return all[n];
  }
  auto motion = [&](const DQPoly& f) { return is_motion_factor(f, tol); };
  for (const auto& lf : all) {
    const auto& fs = lf.factors;
    if (name == "motion" && std::all_of(fs.begin(), fs.end(), motion)) return lf;
    if (name == "motion-first" && !fs.empty() && motion(fs.front())) return lf;
    if (name == "motion-last" && !fs.empty() && motion(fs.back())) return lf;
  }
  if (name == "motion" || name == "motion-first" || name == "motion-last") {
    throw Error(Errc::InfeasiblePlan, "no enumerated factorization matches selector '" + name + "'");
  }
  throw UsageError("unknown leg selector '" + selector + "'");
}

inline void print_factorization(std::ostream& out, const LinearFactorization& lf, double floor) {
  if (!approx_equal(lf.leading, DualQuaternion(1.0), Tolerance{})) out << "leading: " << render(lf.leading, floor) << "\n";
  for (std::size_t n = 0; n < lf.factors.size(); ++n) {
    out << "F" << n + 1 << " = " << render(lf.factors[n], floor) << "\n";
    out << "  norm = " << render(lf.norms[n], floor) << "\n";
  }
}

inline void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

}  // namespace cli

/// args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace cli;
  constexpr double floor = kDisplayFloor;

  CLI::App app{"Factorization of dual quaternion polynomials and mechanism synthesis", "dqf"};
  app.require_subcommand(1);
  std::string expr;
  bool as_json = false;

  auto add_command = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("expr", expr, "polynomial, e.g. \"(t-i)*(t-k) + eps*(t-j)\"")->required();
    return sub;
  };

  CLI::App* norm_cmd = add_command("norm", "print the norm polynomial");
  norm_cmd->add_flag("--json", as_json, "JSON output");

  Selection sel;
  std::string plan_text, lambda_text, weights_text;
  CLI::App* factor_cmd = add_command("factor", "print one factorization into monic linear factors");
  factor_cmd->add_option("--plan", plan_text, "order of the quadratic norm factors, e.g. 1,0");
  factor_cmd->add_option("--lambda", lambda_text, "family member L0,L1 (use --lambda=-3,4 for negatives)");
  factor_cmd->add_option("--weights", weights_text, "explicit split of a repeated factor: A0,A1;B0,B1");
  factor_cmd->add_flag("--json", as_json, "JSON output");

  std::size_t max_count = 0, family_samples = 0;
  CLI::App* enum_cmd = add_command("enumerate", "list distinct factorizations");
  enum_cmd->add_option("--max", max_count, "stop after this many (0: all)");
  enum_cmd->add_option("--family-samples", family_samples, "random members per infinite family");
  enum_cmd->add_flag("--json", as_json, "JSON output");

  bool reduce = false;
  CLI::App* project_cmd = add_command("project", "fiber projection onto Study's quadric");
  project_cmd->add_flag("--reduce", reduce, "divide by the maximal real polynomial factor");
  project_cmd->add_flag("--json", as_json, "JSON output");

  std::vector<std::string> legs;
  CLI::App* mech_cmd = add_command("mechanism", "assemble a closed-loop mechanism from several factorizations");
  mech_cmd->add_option("--legs", legs, "leg selectors, e.g. motion,lambda:3,4")->required();

  std::string point_text = "0.31,-0.47,0.83";
  double t_min = -1.0, t_max = 1.0;
  std::size_t steps = 20;
  CLI::App* traj_cmd = add_command("trajectory", "sample the trajectory of a point as CSV");
  traj_cmd->add_option("--point", point_text, "x,y,z")->required();
  traj_cmd->add_option("--t-min", t_min);
  traj_cmd->add_option("--t-max", t_max);
  traj_cmd->add_option("--steps", steps, "number of intervals");

  CLI::App* circ_cmd = add_command("circularity", "multiplicities at the points at infinity of a trajectory");
  circ_cmd->add_option("--point", point_text, "x,y,z (default is a generic point)");
  circ_cmd->add_flag("--json", as_json, "JSON output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    Tolerance tol = Tolerance::from_env();
    DQPoly m = parse_poly(expr);

    if (norm_cmd->parsed()) {
      DualPoly n = norm(m, tol);
      if (as_json) print_json(out, {{"norm", to_json(n)}, {"text", render(n, floor)}});
      else out << render(n, floor) << "\n";
    } else if (factor_cmd->parsed()) {
      if (!plan_text.empty()) sel.plan = plan_text;
      if (!lambda_text.empty()) sel.lambda = lambda_text;
      if (!weights_text.empty()) sel.weights = weights_text;
      LinearFactorization lf = select(m, sel, tol);
      if (as_json) print_json(out, to_json(lf, floor));
      else print_factorization(out, lf, floor);
    } else if (enum_cmd->parsed()) {
      FactorabilityReport report = can_factor(m, tol);
      if (!report.factorable) throw Error(Errc::NotFactorizable, report.diagnosis);
      auto all = enumerate_factorizations(m, max_count, family_samples, tol);
      if (as_json) {
        Json arr = Json::array();
        for (const auto& lf : all) arr.push_back(to_json(lf, floor));
        print_json(out, arr);
      } else {
        for (std::size_t n = 0; n < all.size(); ++n) {
          out << "# factorization " << n + 1 << " of " << all.size() << "\n";
          print_factorization(out, all[n], floor);
        }
      }
    } else if (project_cmd->parsed()) {
      DQPoly p = fiber_project(m, tol);
      if (reduce) p = divide_real(p, mrpf(p, tol), tol);
      if (as_json) print_json(out, {{"coefficients", to_json(p)}, {"text", render(p, floor)}});
      else out << render(p, floor) << "\n";
    } else if (mech_cmd->parsed()) {
      std::vector<std::string> selectors;
      for (const auto& text : legs) {
        for (auto& s : split_selectors(text)) selectors.push_back(s);
      }
      if (selectors.size() < 2) throw UsageError("a mechanism needs at least two leg selectors");
      std::vector<LinearFactorization> chosen;
      for (const auto& s : selectors) chosen.push_back(resolve_selector(m, s, tol));
      print_json(out, to_json(build_mechanism(m, chosen, tol), floor));
    } else if (traj_cmd->parsed()) {
      if (steps == 0) throw UsageError("--steps must be positive");
      Trajectory tr = trajectory(m, point(point_text), tol);
      out << "t,x,y,z\n";
      for (std::size_t s = 0; s <= steps; ++s) {
        double t = t_min + (t_max - t_min) * static_cast<double>(s) / static_cast<double>(steps);
        if (std::abs(eval(tr.weight, t)) <= tol.zero_eps * (1.0 + tr.weight.scale())) {
          err << "skipping t=" << format_number(t) << ": trajectory is at infinity\n";
          continue;
        }
        Point3 x = tr.at(t);
        out << format_number(rounded(t)) << "," << format_number(rounded(x.x)) << ","
            << format_number(rounded(x.y)) << "," << format_number(rounded(x.z)) << "\n";
      }
    } else if (circ_cmd->parsed()) {
      CircularityReport report = circularity_check(m, point(point_text), tol);
      if (as_json) {
        print_json(out, to_json(report, floor));
      } else {
        for (const auto& e : report.entries) {
          out << render(e.factor, floor) << ": mu=" << e.mu << " nu=" << e.nu << "\n";
        }
        out << "property (mu > 1 implies nu >= mu): " << (report.property_holds ? "holds" : "fails") << "\n";
        out << "entirely circular: " << (report.entirely_circular ? "yes" : "no") << "\n";
      }
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    if (e.code() == Errc::SyntaxError || e.code() == Errc::NonPolynomial) {
      err << "parse error: " << e.what() << "\n";
      return 1;
    }
    if (e.code() == Errc::NotFactorizable) err << "not factorizable: " << e.what() << "\n";
    else err << "infeasible: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace dqf

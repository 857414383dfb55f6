#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fracpos/admissibility.hpp"
#include "fracpos/choi.hpp"
#include "fracpos/cones.hpp"
#include "fracpos/counterexamples.hpp"
#include "fracpos/errors.hpp"
#include "fracpos/format.hpp"
#include "fracpos/io.hpp"
#include "fracpos/thresholds.hpp"

namespace fracpos::cli {

namespace {

using io::json;

struct Options {
  int d = 0;
  int n = 0;
  int m = 0;
  int k = 0;
  double alpha = 0.0;
  double theta = 0.0;
  double t = 0.0;
  double fidelity = 0.0;
  double tol = kFeasibilityTol;
  std::string grid;
  bool check = false;
  std::string input;
  std::string config;
  std::string output;
  std::string format;
  int starts = OptimizerConfig{}.starts;
  int max_iters = OptimizerConfig{}.max_iters;
  std::uint64_t seed = OptimizerConfig{}.seed;
  double opt_tol = OptimizerConfig{}.tol;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return io::parse(buf.str());
}

void check_format(const std::string& format) {
  if (!format.empty() && format != "csv" && format != "json") {
    throw ParseError("unknown format '" + format + "' (expected csv or json)");
  }
}

std::string fmt(double x) { return format_double(x); }

void check_dims(const Options& o, int n, int m) {
  if ((o.n != 0 && o.n != n) || (o.m != 0 && o.m != m)) {
    throw ParseError("--n/--m do not match the input dimensions " + std::to_string(n) + "x" +
                     std::to_string(m));
  }
}

}  // namespace

std::vector<double> parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.size() != 3) throw ParseError("grid must be start:stop:count, got '" + text + "'");
  auto number = [&](const std::string& s) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &pos);
    } catch (const std::exception&) {
      throw ParseError("bad number '" + s + "' in grid");
    }
    if (pos != s.size() || !std::isfinite(v)) throw ParseError("bad number '" + s + "' in grid");
    return v;
  };
  const double start = number(parts[0]);
  const double stop = number(parts[1]);
  std::size_t pos = 0;
  int count = 0;
  try {
    count = std::stoi(parts[2], &pos);
  } catch (const std::exception&) {
    throw ParseError("bad count '" + parts[2] + "' in grid");
  }
  if (pos != parts[2].size() || count < 1) throw ParseError("grid count must be a positive integer");
  if (count == 1) return {start};
  std::vector<double> grid(count);
  for (int i = 0; i < count; ++i) grid[i] = start + (stop - start) * i / (count - 1);
  grid.back() = stop;
  return grid;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Fractional k-positivity toolkit", "fracpos"};
  app.require_subcommand(1);
  app.fallthrough(false);

  std::function<void(std::ostream&)> action;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output", o.output, "Write results to this file instead of stdout");
    sub->add_option("--format", o.format, "csv or json");
  };

  {
    auto* sub = app.add_subcommand("threshold", "t_star and f_d at a level");
    sub->add_option("--d", o.d, "Dimension")->required();
    sub->add_option("--alpha", o.alpha, "Level in [1,d]")->required();
    add_output(sub);
    sub->callback([&] {
      action = [&](std::ostream& os) {
        const auto level = FractionalLevel::make(o.alpha, o.d);
        if (o.format == "json") {
          os << json{{"alpha", level.alpha()}, {"t_star", t_star(level)}, {"f_d", f_d(level)}}.dump(2)
             << '\n';
        } else {
          os << "t_star=" << fmt(t_star(level)) << ",f_d=" << fmt(f_d(level)) << '\n';
        }
      };
    });
  }
  {
    auto* sub = app.add_subcommand("profile", "Tabulate alpha, t_star, f_d over a grid");
    sub->add_option("--d", o.d, "Dimension")->required();
    sub->add_option("--grid", o.grid, "start:stop:count")->required();
    sub->add_flag("--check", o.check, "Re-validate reciprocity and monotonicity");
    add_output(sub);
    sub->callback([&] {
      action = [&](std::ostream& os) {
        const auto profile = profile_sweep(o.d, parse_grid(o.grid));
        if (o.check) {
          if (auto problems = validate_profile(profile); !problems.empty()) {
            throw VerificationError(problems.front());
          }
        }
        if (o.format == "json") {
          json rows = json::array();
          for (const auto& s : profile.samples) {
            rows.push_back({{"alpha", s.alpha}, {"t_star", s.t_star}, {"f_d", s.f_d}});
          }
          os << json{{"d", profile.d}, {"samples", rows}}.dump(2) << '\n';
        } else {
          write_profile_csv(os, profile);
        }
      };
    });
  }
  {
    auto* sub = app.add_subcommand("fsn", "Fractional Schmidt index of an isotropic state");
    sub->add_option("--d", o.d, "Dimension")->required();
    sub->add_option("--F", o.fidelity, "Fidelity in [0,1]")->required();
    add_output(sub);
    sub->callback([&] {
      action = [&](std::ostream& os) {
        const double v = fsn_isotropic(o.fidelity, o.d);
        if (o.format == "json") {
          os << json{{"d", o.d}, {"F", o.fidelity}, {"fsn", v}}.dump(2) << '\n';
        } else {
          os << fmt(v) << '\n';
        }
      };
    });
  }
  {
    auto* sub = app.add_subcommand("tau", "Stability index of X -> Tr(X) I - t X");
    sub->add_option("--d", o.d, "Dimension")->required();
    sub->add_option("--t", o.t, "Depolarizing parameter <= 1")->required();
    add_output(sub);
    sub->callback([&] {
      action = [&](std::ostream& os) {
        const double v = tau_depolarizing(o.t, o.d);
        if (o.format == "json") {
          os << json{{"d", o.d}, {"t", o.t}, {"tau", v}}.dump(2) << '\n';
        } else {
          os << fmt(v) << '\n';
        }
      };
    });
  }
  {
    auto* sub = app.add_subcommand("test-vector", "Admissibility of a bipartite vector (JSON)");
    sub->add_option("--input", o.input, "Vector JSON file")->required();
    sub->add_option("--alpha", o.alpha, "Level")->required();
    sub->add_option("--n", o.n, "Expected first factor dimension");
    sub->add_option("--m", o.m, "Expected second factor dimension");
    sub->add_option("--tol", o.tol, "Feasibility tolerance");
    add_output(sub);
    sub->callback([&] {
      action = [&](std::ostream& os) {
        const auto psi = io::vector_from_json(read_json_file(o.input));
        check_dims(o, psi.dims().n, psi.dims().m);
        const auto level = FractionalLevel::make(o.alpha, psi.dims().d());
        const auto rep = is_admissible_vector(psi, level, o.tol);
        if (o.format == "csv") {
          os << "admissible,rank_ok,ratio_ok,observed_ratio\n"
             << rep.admissible << ',' << rep.rank_ok << ',' << rep.ratio_ok << ','
             << fmt(rep.observed_ratio) << '\n';
        } else {
          os << io::to_json(rep).dump(2) << '\n';
        }
      };
    });
  }
  {
    auto* sub = app.add_subcommand("test-matrix", "Admissibility of an m x n matrix (JSON)");
    sub->add_option("--input", o.input, "Matrix JSON file")->required();
    sub->add_option("--alpha", o.alpha, "Level")->required();
    sub->add_option("--n", o.n, "Expected column count");
    sub->add_option("--m", o.m, "Expected row count");
    sub->add_option("--tol", o.tol, "Feasibility tolerance");
    add_output(sub);
    sub->callback([&] {
      action = [&](std::ostream& os) {
        const auto a = io::matrix_from_json(read_json_file(o.input));
        check_dims(o, static_cast<int>(a.cols()), static_cast<int>(a.rows()));
        const int d = static_cast<int>(std::min(a.rows(), a.cols()));
        const auto level = FractionalLevel::make(o.alpha, d);
        const auto rep = is_admissible_matrix(a, level, o.tol);
        if (o.format == "csv") {
          os << "admissible,rank_ok,ratio_ok,observed_ratio\n"
             << rep.admissible << ',' << rep.rank_ok << ',' << rep.ratio_ok << ','
             << fmt(rep.observed_ratio) << '\n';
        } else {
          os << io::to_json(rep).dump(2) << '\n';
        }
      };
    });
  }
  {
    auto* sub = app.add_subcommand("witness", "Isotropic witness I - P_omega / f_d(alpha)");
    sub->add_option("--d", o.d, "Dimension")->required();
    sub->add_option("--alpha", o.alpha, "Level")->required();
    sub->add_option("--input", o.input, "Optional operator JSON X; prints Tr(W X)");
    add_output(sub);
    sub->callback([&] {
      action = [&](std::ostream& os) {
        const auto level = FractionalLevel::make(o.alpha, o.d);
        const auto w = witness_operator(o.d, level);
        if (!o.input.empty()) {
          const auto x = io::operator_from_json(read_json_file(o.input));
          if (!(x.dims == w.dims)) throw ShapeError("operator dimensions do not match the witness");
          const double pairing = (w.mat * x.mat).trace().real();
          if (o.format == "json") {
            os << json{{"level", io::to_json(level)}, {"pairing", pairing}}.dump(2) << '\n';
          } else {
            os << "pairing=" << fmt(pairing) << '\n';
          }
          return;
        }
        os << json{{"level", io::to_json(level)}, {"f_d", f_d(level)}, {"operator", io::to_json(w)}}
                  .dump(2)
           << '\n';
      };
    });
  }
  {
    auto* sub = app.add_subcommand("lambda", "Estimate min <x, W x> over admissible x");
    sub->add_option("--input", o.input, "Operator JSON file")->required();
    sub->add_option("--alpha", o.alpha, "Level")->required();
    sub->add_option("--config", o.config, "Optimizer config JSON");
    sub->add_option("--starts", o.starts, "Number of starts (default 64)");
    sub->add_option("--max-iters", o.max_iters, "Iterations per start (default 500)");
    sub->add_option("--seed", o.seed, "Base seed (default 0x5EED)");
    sub->add_option("--tol", o.opt_tol, "Convergence tolerance (default 1e-12)");
    add_output(sub);
    sub->callback([&] {
      action = [&](std::ostream& os) {
        const auto w = io::operator_from_json(read_json_file(o.input));
        OptimizerConfig cfg;
        if (!o.config.empty()) {
          cfg = io::optimizer_config_from_json(read_json_file(o.config));
        } else {
          cfg.starts = o.starts;
          cfg.max_iters = o.max_iters;
          cfg.seed = o.seed;
          cfg.tol = o.opt_tol;
        }
        const auto level = FractionalLevel::make(o.alpha, w.dims.d());
        const auto est = lambda_numeric(w, level, cfg);
        if (o.format == "json") {
          os << io::to_json(est).dump(2) << '\n';
        } else {
          const auto s = schmidt_spectrum(est.argmin);
          os << "value=" << fmt(est.value) << "\nspectrum=";
          for (int j = 0; j < s.size(); ++j) os << (j ? "," : "") << fmt(s[j]);
          os << "\nresidual=" << fmt(est.feasibility_residual) << '\n';
        }
      };
    });
  }
  {
    auto* sub = app.add_subcommand("kraus-verify", "Check every Kraus operator is admissible");
    sub->add_option("--input", o.input, "Kraus list JSON file")->required();
    sub->add_option("--alpha", o.alpha, "Level")->required();
    sub->add_option("--tol", o.tol, "Feasibility tolerance");
    add_output(sub);
    sub->callback([&] {
      action = [&](std::ostream& os) {
        const auto ks = io::kraus_from_json(read_json_file(o.input));
        const auto level = FractionalLevel::make(o.alpha, ks.dims().d());
        os << io::to_json(verify_fractional_kraus(ks, level, o.tol)).dump(2) << '\n';
      };
    });
  }
  {
    auto* sub = app.add_subcommand("demo-strict", "Vectors separating the nested admissible sets");
    sub->add_option("--k", o.k, "Integer part")->required();
    sub->add_option("--theta", o.theta, "Fractional part in (0,1)")->required();
    sub->add_option("--d", o.d, "Dimension")->required();
    add_output(sub);
    sub->callback([&] {
      action = [&](std::ostream& os) {
        os << io::to_json(demo_strict_inclusion(o.k, o.theta, BipartiteDims::square(o.d))).dump(2)
           << '\n';
      };
    });
  }
  {
    auto* sub = app.add_subcommand("demo-cp-failure",
                                   "Certificate that CP post-composition breaks alpha-positivity");
    sub->add_option("--d", o.d, "Dimension")->required();
    sub->add_option("--alpha", o.alpha, "Non-integer level")->required();
    sub->add_option("--t", o.t, "Depolarizing parameter in the window")->required();
    add_output(sub);
    sub->callback([&] {
      action = [&](std::ostream& os) {
        const auto level = FractionalLevel::make(o.alpha, o.d);
        os << io::to_json(demo_cp_failure(o.d, level, o.t)).dump(2) << '\n';
      };
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    check_format(o.format);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (o.output.empty()) {
      action(out);
    } else {
      std::ostringstream buf;
      action(buf);
      std::ofstream file(o.output);
      if (!file) throw ParseError("cannot open output file '" + o.output + "'");
      file << buf.str();
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kOk;
}

}  // namespace fracpos::cli

// Copyright 2026 The fockoptics Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <fstream>
#include <functional>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fockoptics/errors.hpp"
#include "fockoptics/json_io.hpp"
#include "fockoptics/lift.hpp"
#include "fockoptics/scissors.hpp"
#include "fockoptics/selfcheck.hpp"
#include "fockoptics/su2.hpp"
#include "fockoptics/su3.hpp"

namespace fockoptics::cli {

namespace {

using nlohmann::json;

// Usage problems that CLI11 cannot see (unreadable file, bad list length).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": not valid JSON (" + e.what() + ")");
  }
}

template <int R, int C>
json real_matrix_to_json(const Eigen::Matrix<double, R, C>& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

json label3_to_json(const MultipletLabel3& label) {
  return json{{"t3", label.t3.to_double()},
              {"y", to_double(label.y)},
              {"t3_exact", label.t3.to_string()},
              {"y_exact", to_string(label.y)},
              {"multiplet", {label.multiplet.first, label.multiplet.second}}};
}

std::array<Amplitude, 3> three_amplitudes(const std::string& text, const char* flag) {
  const auto v = parse_complex_list(text);
  if (v.size() != 3) throw UsageError(std::string(flag) + " expects three comma-separated amplitudes");
  return {v[0], v[1], v[2]};
}

json outcome_to_json(const OutcomeRecord& rec) {
  return json{{"detectors", {rec.detector_counts.first, rec.detector_counts.second}},
              {"probability", rec.probability},
              {"multiplet",
               {{"l", rec.multiplet.l.to_double()}, {"l3", rec.multiplet.l3.to_double()}}},
              {"conditional_state",
               rec.conditional_state.empty() ? json(nullptr) : state_to_json(rec.conditional_state)}};
}

// P(1,1) and its conditional fidelity against the input.
std::pair<double, double> teleport_once(const ScissorsInput& input, const BalancedConfiguration& c) {
  const PureState expected = build_input(input[0], input[1], input[2]).state;
  for (const auto& rec : run_scissors(input, c.epr, c.bs)) {
    if (rec.detector_counts == std::pair{1, 1}) {
      const double f = rec.probability > 0.0 ? fidelity(rec.conditional_state, expected) : 0.0;
      return {rec.probability, f};
    }
  }
  return {0.0, 0.0};
}

struct Options {
  std::string output;

  std::string state_file, matrix_file;
  std::size_t offset = 0;

  std::vector<int> occupation;
  int multiplet_n = 0;
  std::string angles;

  std::string input, epr, bs_file;
  double target = 1.0 / 3.0;
  std::string bs_output;
};

}  // namespace

CommandResult dispatch(const std::vector<std::string>& args) {
  CommandResult result;
  Options opt;
  std::function<json()> action;

  CLI::App app{"Exact few-photon simulation of beam splitters and tritters", "fockoptics"};
  app.require_subcommand(1);
  app.add_option("--output", opt.output, "Write the JSON result to this file instead of stdout")
      ->expected(1);

  auto* apply = app.add_subcommand("apply", "Apply a mode unitary to a state file");
  apply->add_option("--state", opt.state_file, "State JSON file")->required();
  apply->add_option("--matrix", opt.matrix_file, "Matrix JSON file")->required();
  apply->add_option("--offset", opt.offset, "First mode the matrix acts on");
  apply->callback([&] {
    action = [&] {
      const PureState state = state_from_json(read_json_file(opt.state_file));
      const ModeUnitary u = matrix_from_json(read_json_file(opt.matrix_file));
      return state_to_json(apply_mode_unitary(u, state, opt.offset));
    };
  });

  auto* su2 = app.add_subcommand("su2", "Two-mode su(2) tools");
  su2->require_subcommand(1);
  auto* su2_label = su2->add_subcommand("label", "(n, m) -> (l, l3)");
  su2_label->add_option("counts", opt.occupation, "Photon counts n m")->required()->expected(2);
  su2_label->callback([&] {
    action = [&] {
      const auto label = multiplet_label(Occupation(opt.occupation));
      return json{{"l", label.l.to_double()}, {"l3", label.l3.to_double()}};
    };
  });
  auto* su2_adj = su2->add_subcommand("adjoint", "2x2 matrix file -> 3x3 SO(3) matrix");
  su2_adj->add_option("matrix", opt.matrix_file, "Matrix JSON file")->required();
  su2_adj->callback([&] {
    action = [&] { return real_matrix_to_json(su2_adjoint(matrix_from_json(read_json_file(opt.matrix_file)))); };
  });

  auto* su3 = app.add_subcommand("su3", "Three-mode su(3) tools");
  su3->require_subcommand(1);
  auto* su3_label = su3->add_subcommand("label", "(n, l, m) -> (t3, y, multiplet)");
  su3_label->add_option("counts", opt.occupation, "Photon counts n l m")->required()->expected(3);
  su3_label->callback([&] {
    action = [&] { return label3_to_json(t3_y_label(Occupation(opt.occupation))); };
  });
  auto* su3_mult = su3->add_subcommand("multiplet", "Table of the (n, 0) multiplet");
  su3_mult->add_option("--n", opt.multiplet_n, "Total photon number")->required()->check(CLI::NonNegativeNumber);
  su3_mult->callback([&] {
    action = [&] {
      json states = json::array();
      for (const auto& [occ, label] : enumerate_multiplet(opt.multiplet_n)) {
        json row = label3_to_json(label);
        row["occ"] = std::vector<int>(occ.counts().begin(), occ.counts().end());
        states.push_back(std::move(row));
      }
      return json{{"multiplet", {opt.multiplet_n, 0}}, {"states", std::move(states)}};
    };
  });
  auto* su3_eul = su3->add_subcommand("euler", "Eight Euler angles -> SU(3) matrix file");
  su3_eul->add_option("--angles", opt.angles, "alpha,beta,gamma,theta,a,b,c,phi")->required();
  su3_eul->callback([&] {
    action = [&] {
      std::vector<double> v;
      for (const Amplitude& z : parse_complex_list(opt.angles)) {
        if (z.imag() != 0.0) throw UsageError("--angles must be real");
        v.push_back(z.real());
      }
      if (v.size() != 8) throw UsageError("--angles expects eight comma-separated values");
      return matrix_to_json(su3_euler({v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]}));
    };
  });
  auto* su3_adj = su3->add_subcommand("adjoint", "3x3 matrix file -> 8x8 adjoint matrix");
  su3_adj->add_option("matrix", opt.matrix_file, "Matrix JSON file")->required();
  su3_adj->callback([&] {
    action = [&] { return real_matrix_to_json(su3_adjoint(matrix_from_json(read_json_file(opt.matrix_file)))); };
  });

  auto* sc = app.add_subcommand("scissors", "Generalized quantum scissors");
  sc->require_subcommand(1);
  auto* sc_run = sc->add_subcommand("run", "Outcome table for one configuration");
  sc_run->add_option("--input", opt.input, "a0,a1,a2 (re+imj)")->required();
  sc_run->add_option("--epr", opt.epr, "c-1,c0,c1 (re+imj)")->required();
  sc_run->add_option("--bs", opt.bs_file, "2x2 matrix JSON file")->required();
  sc_run->callback([&] {
    action = [&] {
      const auto a = three_amplitudes(opt.input, "--input");
      const auto c = three_amplitudes(opt.epr, "--epr");
      const BuiltInput built = build_input(a[0], a[1], a[2]);
      const ScissorsInput input = ScissorsInput::normalizing(a[0], a[1], a[2]);
      const EprResource epr(c[0], c[1], c[2]);
      const ModeUnitary bs = matrix_from_json(read_json_file(opt.bs_file));
      json outcomes = json::array();
      double total = 0.0;
      for (const auto& rec : run_scissors(input, epr, bs)) {
        total += rec.probability;
        outcomes.push_back(outcome_to_json(rec));
      }
      return json{{"input", state_to_json(built.state)},
                  {"input_renormalized", built.renormalized},
                  {"outcomes", std::move(outcomes)},
                  {"total_probability", total}};
    };
  });
  auto* sc_solve = sc->add_subcommand("solve", "Find a balanced beam splitter and resource");
  sc_solve->add_option("--target", opt.target, "Common central coefficient (default 1/3)");
  sc_solve->add_option("--bs-output", opt.bs_output, "Also write the beam-splitter matrix file here");
  sc_solve->callback([&] {
    action = [&] {
      const BalancedConfiguration c = solve_balanced(opt.target);
      if (!opt.bs_output.empty()) {
        std::ofstream f(opt.bs_output);
        if (!f) throw UsageError("cannot write '" + opt.bs_output + "'");
        f << matrix_to_json(c.bs).dump(2) << '\n';
      }
      json basis = json::array();
      double min_fidelity = 1.0;
      double p11 = 0.0;
      for (int q = 0; q < 3; ++q) {
        std::array<Amplitude, 3> a{0.0, 0.0, 0.0};
        a[static_cast<std::size_t>(q)] = 1.0;
        const auto [p, f] = teleport_once(ScissorsInput(a[0], a[1], a[2]), c);
        basis.push_back(json{{"input", q}, {"p11", p}, {"fidelity", f}});
        min_fidelity = std::min(min_fidelity, f);
        p11 = std::max(p11, p);
      }
      const double third = 1.0 / std::sqrt(3.0);
      const auto [p_mixed, f_mixed] = teleport_once(ScissorsInput(third, third, third), c);
      min_fidelity = std::min(min_fidelity, f_mixed);
      const auto& cs = c.epr.coefficients();
      return json{
          {"target", opt.target},
          {"bs", matrix_to_json(c.bs)},
          {"transmission_angle", c.transmission_angle},
          {"epr", json::array({complex_to_json(cs[0]), complex_to_json(cs[1]), complex_to_json(cs[2])})},
          {"epr_arg", format_complex(cs[0]) + "," + format_complex(cs[1]) + "," + format_complex(cs[2])},
          {"achieved", c.achieved},
          {"residual", c.residual},
          {"evaluations", c.evaluations},
          {"verification",
           {{"p11", p_mixed}, {"min_fidelity", min_fidelity}, {"basis_inputs", std::move(basis)}}}};
    };
  });

  auto* self = app.add_subcommand("selfcheck", "Run the invariant suite");
  bool self_failed = false;
  self->callback([&] {
    action = [&] {
      json checks = json::array();
      bool all = true;
      for (const auto& r : run_selfcheck()) {
        all = all && r.passed;
        checks.push_back(json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      }
      self_failed = !all;
      return json{{"checks", std::move(checks)}, {"passed", all}};
    };
  });

  // --output is accepted before or after the subcommand path.
  for (CLI::App* sub : {apply, su2_label, su2_adj, su3_label, su3_mult, su3_eul, su3_adj, sc_run,
                        sc_solve, self}) {
    sub->add_option("--output", opt.output, "Write the JSON result to this file instead of stdout");
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("fockoptics");

  std::ostringstream out, err;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    result.exit_code = app.exit(e, err, err) == 0 ? kSuccess : kUsageError;
    if (result.exit_code != kSuccess) err << '\n' << app.help();
    result.err = err.str();
    return result;
  }

  try {
    const json payload = action();
    const std::string text = payload.dump(2) + "\n";
    if (opt.output.empty()) {
      result.out = text;
    } else {
      std::ofstream f(opt.output);
      if (!f) throw UsageError("cannot write '" + opt.output + "'");
      f << text;
    }
    if (self_failed) {
      result.exit_code = kValidationFailure;
      result.err = "selfcheck: at least one invariant failed\n";
    }
  } catch (const ValidationError& e) {
    result.exit_code = kValidationFailure;
    result.err = std::string("validation failure: ") + e.what() + "\n";
  } catch (const FormatError& e) {
    result.exit_code = kUsageError;
    result.err = std::string("malformed input: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    result.exit_code = kUsageError;
    result.err = std::string("error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace fockoptics::cli

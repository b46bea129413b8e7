// Copyright 2026 The bangle authors
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

// Command-line front end. Exit codes: 0 ok, 1 property failure, 2 usage or
// parse error, 3 domain precondition violation.
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bangle/angle.hpp"
#include "bangle/norm.hpp"
#include "bangle/oracle.hpp"
#include "bangle/profile.hpp"
#include "bangle/verify.hpp"

namespace {

using nlohmann::json;

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

enum class Format { Json, Csv, Human };

struct GlobalOptions {
  std::string norm_text = "l2";
  double tol = 1e-10;
  double tie_tol = 1e-9;
  std::string format_text = "human";
  std::uint64_t seed = 42;

  Format format() const {
    if (format_text == "json") return Format::Json;
    if (format_text == "csv") return Format::Csv;
    return Format::Human;
  }
};

json report_to_json(const bangle::AngleReport& r) {
  return json{{"class", bangle::to_string(r.cls)},
              {"gamma", r.gamma},
              {"gamma_star", r.gamma_star},
              {"k", r.k},
              {"gamma_hat", r.gamma_hat},
              {"method", bangle::to_string(r.method)},
              {"norm_x", r.norm_x},
              {"norm_y", r.norm_y}};
}

void print_report(const bangle::AngleReport& r, Format fmt) {
  switch (fmt) {
    case Format::Json:
      std::cout << report_to_json(r).dump() << "\n";
      break;
    case Format::Csv:
      std::cout << "class,gamma,gamma_star,k,gamma_hat,method,norm_x,norm_y\n"
                << bangle::to_string(r.cls) << ',' << fmt17(r.gamma) << ','
                << fmt17(r.gamma_star) << ',' << fmt17(r.k) << ',' << fmt17(r.gamma_hat) << ','
                << bangle::to_string(r.method) << ',' << fmt17(r.norm_x) << ','
                << fmt17(r.norm_y) << "\n";
      break;
    case Format::Human:
      std::cout << bangle::to_string(r.cls) << " gamma=" << fmt17(r.gamma)
                << " gamma_star=" << fmt17(r.gamma_star) << " k=" << fmt17(r.k)
                << " (gamma_hat=" << fmt17(r.gamma_hat)
                << ", method=" << bangle::to_string(r.method) << ")\n";
      break;
  }
}

void print_comparison(const bangle::Comparison& c, Format fmt) {
  switch (fmt) {
    case Format::Json:
      std::cout << json{{"verdict", bangle::to_string(c.verdict)},
                        {"gamma_hat_first", c.gamma_hat_first},
                        {"gamma_hat_second", c.gamma_hat_second},
                        {"class_first", bangle::to_string(c.class_first)},
                        {"class_second", bangle::to_string(c.class_second)},
                        {"mixed_classes", c.mixed_classes},
                        {"tie_tolerance", c.tie_tolerance}}
                       .dump()
                << "\n";
      break;
    case Format::Csv:
      std::cout << "verdict,gamma_hat_first,gamma_hat_second,class_first,class_second,"
                   "mixed_classes,tie_tolerance\n"
                << bangle::to_string(c.verdict) << ',' << fmt17(c.gamma_hat_first) << ','
                << fmt17(c.gamma_hat_second) << ',' << bangle::to_string(c.class_first) << ','
                << bangle::to_string(c.class_second) << ',' << (c.mixed_classes ? "true" : "false")
                << ',' << fmt17(c.tie_tolerance) << "\n";
      break;
    case Format::Human:
      std::cout << bangle::to_string(c.verdict) << " gamma_hat: " << fmt17(c.gamma_hat_first)
                << " vs " << fmt17(c.gamma_hat_second) << " (" << bangle::to_string(c.class_first)
                << " vs " << bangle::to_string(c.class_second)
                << (c.mixed_classes ? ", mixed classes" : "") << ")\n";
      break;
  }
}

void print_sweep(const std::vector<bangle::SweepRow>& rows, Format fmt) {
  switch (fmt) {
    case Format::Json: {
      json arr = json::array();
      for (const auto& r : rows) {
        arr.push_back(json{{"theta", r.theta},
                           {"k", r.k},
                           {"class", bangle::to_string(r.cls)},
                           {"gamma_hat", r.gamma_hat}});
      }
      std::cout << arr.dump() << "\n";
      break;
    }
    case Format::Csv:
    case Format::Human:
      std::cout << "theta,k,class,gamma_hat\n";
      for (const auto& r : rows) {
        std::cout << fmt17(r.theta) << ',' << fmt17(r.k) << ',' << bangle::to_string(r.cls) << ','
                  << fmt17(r.gamma_hat) << "\n";
      }
      break;
  }
}

int print_verify(const bangle::VerifySummary& summary, Format fmt) {
  switch (fmt) {
    case Format::Json: {
      json arr = json::array();
      for (const auto& p : summary.properties) {
        arr.push_back(json{{"property", p.name},
                           {"spec", p.spec_text},
                           {"trials", p.trials},
                           {"failures", p.failures},
                           {"first_failure", p.first_failure}});
      }
      std::cout << json{{"properties", arr}, {"all_passed", summary.all_passed()}}.dump() << "\n";
      break;
    }
    case Format::Csv:
      std::cout << "property,spec,trials,failures,status\n";
      for (const auto& p : summary.properties) {
        std::cout << p.name << ',' << p.spec_text << ',' << p.trials << ',' << p.failures << ','
                  << (p.passed() ? "PASS" : "FAIL") << "\n";
      }
      break;
    case Format::Human: {
      for (const auto& p : summary.properties) {
        std::printf("%-4s %-44s %-24s trials=%-6d failures=%d\n", p.passed() ? "ok" : "FAIL",
                    p.name.c_str(), p.spec_text.c_str(), p.trials, p.failures);
        if (!p.passed()) std::printf("     first failure: %s\n", p.first_failure.c_str());
      }
      std::printf("RESULT: %s (%zu properties, %d failures)\n",
                  summary.all_passed() ? "PASS" : "FAIL", summary.properties.size(),
                  summary.total_failures());
      break;
    }
  }
  return summary.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Birkhoff-angle calculator for finite-dimensional normed spaces"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  app.add_option("--norm", opts.norm_text, "Norm spec: l1 | l2 | linf | lp:<p> | "
                                           "wlp:<p>:[w1,...] | ip:[[...],[...]]")
      ->capture_default_str();
  app.add_option("--tol", opts.tol, "Solver tolerance")->capture_default_str();
  app.add_option("--tie-tol", opts.tie_tol, "Tie tolerance for angle comparison")
      ->capture_default_str();
  app.add_option("--format", opts.format_text, "Output format")
      ->check(CLI::IsMember({"json", "csv", "human"}))
      ->capture_default_str();
  app.add_option("--seed", opts.seed, "Seed for randomized verification")->capture_default_str();

  std::string x_text, y_text, y2_text;
  double theta_min = 0.0, theta_max = 0.0;
  std::size_t steps = 0;
  int trials = 500;
  std::size_t points = 10000;
  bool inject_bad_norm = false;

  CLI::App* classify_cmd = app.add_subcommand("classify", "Classify the B-angle from x to y");
  classify_cmd->add_option("x", x_text)->required();
  classify_cmd->add_option("y", y_text)->required();

  CLI::App* gamma_cmd = app.add_subcommand("gamma", "Width of the failure interval of the pair");
  gamma_cmd->add_option("x", x_text)->required();
  gamma_cmd->add_option("y", y_text)->required();

  CLI::App* cosine_cmd = app.add_subcommand("cosine", "Cosine analog k of the angle from x to y");
  cosine_cmd->add_option("x", x_text)->required();
  cosine_cmd->add_option("y", y_text)->required();

  CLI::App* angles_cmd =
      app.add_subcommand("angles", "Pythagorean and isosceles angles between x and y");
  angles_cmd->add_option("x", x_text)->required();
  angles_cmd->add_option("y", y_text)->required();

  CLI::App* cmp_base =
      app.add_subcommand("compare-base", "Compare the angles from x to y1 and from x to y2");
  cmp_base->add_option("x", x_text)->required();
  cmp_base->add_option("y1", y_text)->required();
  cmp_base->add_option("y2", y2_text)->required();

  CLI::App* cmp_target =
      app.add_subcommand("compare-target", "Compare the angles from x1 to y and from x2 to y");
  cmp_target->add_option("x1", x_text)->required();
  cmp_target->add_option("x2", y_text)->required();
  cmp_target->add_option("y", y2_text)->required();

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Tabulate k(x, (cos t, sin t)) over a theta grid");
  sweep_cmd->add_option("x", x_text)->required();
  sweep_cmd->add_option("theta_min", theta_min)->required();
  sweep_cmd->add_option("theta_max", theta_max)->required();
  sweep_cmd->add_option("steps", steps)->required()->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));

  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the randomized property suite");
  verify_cmd->add_option("--trials", trials, "Trials per property")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify_cmd->add_option("--points", points, "Grid points per profile scan")
      ->check(CLI::Range(std::size_t{16}, std::size_t{100000000}))
      ->capture_default_str();
  verify_cmd->add_flag("--inject-bad-norm", inject_bad_norm,
                       "Run the structure checks against a non-convex profile (negative control)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const Format fmt = opts.format();
  try {
    const bangle::NormSpec spec = bangle::parse_norm_spec(opts.norm_text);

    if (*classify_cmd) {
      const bangle::Vector x = bangle::parse_vector(x_text);
      const bangle::Vector y = bangle::parse_vector(y_text);
      print_report(bangle::angle_report(spec, x, y, opts.tol), fmt);
      return 0;
    }
    if (*gamma_cmd) {
      const bangle::Vector x = bangle::parse_vector(x_text);
      const bangle::Vector y = bangle::parse_vector(y_text);
      const double g = bangle::gamma(spec, x, y, opts.tol);
      const double gs = bangle::gamma_star(spec, x, y, opts.tol);
      if (fmt == Format::Json) {
        std::cout << json{{"gamma", g}, {"gamma_star", gs}}.dump() << "\n";
      } else if (fmt == Format::Csv) {
        std::cout << "gamma,gamma_star\n" << fmt17(g) << ',' << fmt17(gs) << "\n";
      } else {
        std::cout << "gamma=" << fmt17(g) << " gamma_star=" << fmt17(gs) << "\n";
      }
      return 0;
    }
    if (*cosine_cmd) {
      const bangle::Vector x = bangle::parse_vector(x_text);
      const bangle::Vector y = bangle::parse_vector(y_text);
      const double k = bangle::cosine_k(spec, x, y, opts.tol);
      if (fmt == Format::Json) {
        std::cout << json{{"k", k}}.dump() << "\n";
      } else if (fmt == Format::Csv) {
        std::cout << "k\n" << fmt17(k) << "\n";
      } else {
        std::cout << "k=" << fmt17(k) << "\n";
      }
      return 0;
    }
    if (*angles_cmd) {
      const bangle::Vector x = bangle::parse_vector(x_text);
      const bangle::Vector y = bangle::parse_vector(y_text);
      const double ap = bangle::pythagorean_angle(spec, x, y);
      const double ai = bangle::isosceles_angle(spec, x, y);
      if (fmt == Format::Json) {
        std::cout << json{{"pythagorean", ap}, {"isosceles", ai}}.dump() << "\n";
      } else if (fmt == Format::Csv) {
        std::cout << "pythagorean,isosceles\n" << fmt17(ap) << ',' << fmt17(ai) << "\n";
      } else {
        std::cout << "pythagorean=" << fmt17(ap) << " isosceles=" << fmt17(ai) << "\n";
      }
      return 0;
    }
    if (*cmp_base) {
      const bangle::Vector x = bangle::parse_vector(x_text);
      const bangle::Vector y1 = bangle::parse_vector(y_text);
      const bangle::Vector y2 = bangle::parse_vector(y2_text);
      print_comparison(bangle::compare_same_base(spec, x, y1, y2, opts.tie_tol, opts.tol), fmt);
      return 0;
    }
    if (*cmp_target) {
      const bangle::Vector x1 = bangle::parse_vector(x_text);
      const bangle::Vector x2 = bangle::parse_vector(y_text);
      const bangle::Vector y = bangle::parse_vector(y2_text);
      print_comparison(bangle::compare_same_target(spec, x1, x2, y, opts.tie_tol, opts.tol), fmt);
      return 0;
    }
    if (*sweep_cmd) {
      const bangle::Vector x = bangle::parse_vector(x_text);
      std::vector<double> thetas(steps);
      for (std::size_t j = 0; j < steps; ++j) {
        thetas[j] = theta_min + static_cast<double>(j) * (theta_max - theta_min) /
                                    static_cast<double>(steps - 1);
      }
      print_sweep(bangle::sweep_k(spec, x, thetas, opts.tol), fmt);
      return 0;
    }
    if (*verify_cmd) {
      bangle::VerifyOptions vopts;
      vopts.trials = trials;
      vopts.seed = opts.seed;
      vopts.scan_points = points;
      vopts.tol = opts.tol;
      const bangle::VerifySummary summary =
          inject_bad_norm ? bangle::run_negative_control(vopts)
                          : bangle::run_verify(bangle::default_verify_specs(), vopts);
      return print_verify(summary, fmt);
    }
  } catch (const bangle::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const bangle::DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const bangle::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const bangle::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

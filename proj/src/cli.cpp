// Copyright 2026 The Authors.
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

#include "gpmc/cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "gpmc/chromatic.hpp"
#include "gpmc/core.hpp"
#include "gpmc/error.hpp"
#include "gpmc/io.hpp"
#include "gpmc/kernel.hpp"
#include "gpmc/listcolor.hpp"
#include "gpmc/oracle.hpp"

namespace gpmc::cli {
namespace {

using io::Json;

void require(const std::string& value, const char* flag) {
  if (value.empty()) {
    throw Error(ErrorCode::kInvalidArgument, std::string(flag) + " is required");
  }
}

void emit(const RunConfig& config, const Json& j, std::ostream& out) {
  const std::string text = io::dump(j);
  if (config.output.empty()) {
    out << text;
  } else {
    io::write_text_file(config.output, text);
  }
}

MatroidPair load_instance(const RunConfig& config) {
  require(config.instance, "--instance");
  return io::instance_from_json(io::read_json_file(config.instance));
}

ElementSet parse_ground(const RunConfig& config, int n) {
  if (config.ground.empty()) {
    ElementSet all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    return all;
  }
  ElementSet ground;
  std::stringstream ss(config.ground);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      ground.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kMalformedInstance, "bad ground id \"" + item + "\"");
    }
  }
  check_element_set(n, ground);
  return to_element_set(ground);
}

// Orders from --labels, else from --coloring, else from the optimal coloring.
OrderedContext load_context(const RunConfig& config, const MatroidPair& p) {
  if (!config.labels.empty()) {
    return OrderedContext::from_labels(
        p, io::labels_from_json(io::read_json_file(config.labels)));
  }
  if (!config.coloring.empty()) {
    return canonical_orders(
        p, io::coloring_from_json(io::read_json_file(config.coloring)));
  }
  return canonical_orders(p, optimal_coloring(p));
}

int report(const RunConfig& config, const VerificationReport& r,
           std::ostream& out) {
  if (config.format == "json") {
    out << io::dump(Json{{"ok", r.ok()}, {"violations", r.violations}});
  } else {
    out << (r.ok() ? "OK" : "FAIL") << "\n";
    for (const auto& v : r.violations) out << "  " << v << "\n";
  }
  return r.ok() ? kExitOk : kExitFailed;
}

int cmd_chi(const RunConfig& config, std::ostream& out) {
  const MatroidPair p = load_instance(config);
  const Rational d1 = expansion_number(p.m1());
  const Rational d2 = expansion_number(p.m2());
  const int chi = chi_of_pair(p);
  if (config.format == "json") {
    out << io::dump(Json{{"chi", chi},
                         {"delta1", d1.to_string()},
                         {"delta2", d2.to_string()}});
  } else {
    out << "delta1=" << d1.to_string() << "\n"
        << "delta2=" << d2.to_string() << "\n"
        << "chi=" << chi << "\n";
  }
  return kExitOk;
}

int cmd_color(const RunConfig& config, std::ostream& out) {
  emit(config, io::coloring_to_json(optimal_coloring(load_instance(config))),
       out);
  return kExitOk;
}

int cmd_list_color(const RunConfig& config, std::ostream& out,
                   std::ostream& err) {
  const MatroidPair p = load_instance(config);
  require(config.lists, "--lists");
  const ListAssignment la = io::lists_from_json(io::read_json_file(config.lists));
  const std::vector<Element> short_ones = short_lists(p, la);
  if (!short_ones.empty()) {
    VerificationReport r;
    for (Element v : short_ones) {
      r.violations.push_back("element " + std::to_string(v) + ": list has " +
                             std::to_string(la.lists[v].size()) +
                             " tokens, needs " +
                             std::to_string(chi_of_pair(p)));
    }
    report(config, r, out);
    return kExitMalformed;
  }
  ListColorStats stats;
  const ListColoringOutput result = ListColorer(p).color(la, &stats);
  if (config.verbosity > 0) {
    err << "iterations=" << stats.iterations
        << " invariant_checks=" << stats.invariant_checks << "\n";
  }
  emit(config, io::assignment_to_json(result), out);
  return kExitOk;
}

int cmd_kernel(const RunConfig& config, std::ostream& out) {
  const MatroidPair p = load_instance(config);
  const OrderedContext ctx = load_context(config, p);
  const ElementSet ground = parse_ground(config, p.n_elements());
  emit(config, io::kernel_to_json(ground, find_kernel(ctx, ground)), out);
  return kExitOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  const MatroidPair p = load_instance(config);
  if (config.target == "coloring") {
    require(config.coloring, "--coloring");
    const Coloring c =
        io::coloring_from_json(io::read_json_file(config.coloring));
    VerificationReport r = verify_coloring(p, c);
    const int chi = chi_of_pair(p);
    if (static_cast<int>(c.classes.size()) != chi) {
      r.violations.push_back("uses " + std::to_string(c.classes.size()) +
                             " classes, optimum is " + std::to_string(chi));
    }
    return report(config, r, out);
  }
  if (config.target == "list") {
    require(config.lists, "--lists");
    require(config.assignment, "--assignment");
    const ListAssignment la =
        io::lists_from_json(io::read_json_file(config.lists));
    const ListColoringOutput a =
        io::assignment_from_json(io::read_json_file(config.assignment));
    return report(config, verify_list_coloring(p, la, a), out);
  }
  if (config.target == "kernel") {
    require(config.kernel, "--kernel");
    const io::KernelFile kf =
        io::kernel_from_json(io::read_json_file(config.kernel));
    const OrderedContext ctx = load_context(config, p);
    ElementSet ground = kf.ground ? to_element_set(*kf.ground)
                                  : parse_ground(config, p.n_elements());
    check_element_set(p.n_elements(), ground);
    VerificationReport r;
    std::vector<bool> in_ground(p.n_elements(), false);
    for (Element v : ground) in_ground[v] = true;
    check_element_set(p.n_elements(), kf.kernel);
    for (Element v : kf.kernel) {
      if (!in_ground[v]) {
        r.violations.push_back("element " + std::to_string(v) +
                               " is outside the ground set");
      }
    }
    if (!r.ok()) return report(config, r, out);
    if (!is_common_independent(p, kf.kernel)) {
      r.violations.push_back("kernel is not common independent");
    }
    for (Element v : ground) {
      if (!dominates(ctx, 1, kf.kernel, v, ground) &&
          !dominates(ctx, 2, kf.kernel, v, ground)) {
        r.violations.push_back("element " + std::to_string(v) +
                               " is dominated on neither side");
      }
    }
    return report(config, r, out);
  }
  throw Error(ErrorCode::kInvalidArgument,
              "verify target must be coloring, list or kernel");
}

int cmd_gen(const RunConfig& config, std::ostream& out) {
  if (config.bipartite) {
    BipartiteGeneratorParams gp;
    gp.n_edges = config.n_elements;
    gp.max_left = config.max_parts;
    gp.max_right = config.max_parts;
    gp.max_cap = config.max_cap;
    gp.seed = config.seed;
    emit(config, io::bipartite_to_json(random_bipartite(gp)), out);
    return kExitOk;
  }
  GeneratorParams gp;
  gp.n_elements = config.n_elements;
  gp.max_parts = config.max_parts;
  gp.max_cap = config.max_cap;
  gp.seed = config.seed;
  emit(config, io::instance_to_json(random_instance(gp)), out);
  return kExitOk;
}

int cmd_oracle(const RunConfig& config, std::ostream& out) {
  const MatroidPair p = load_instance(config);
  if (config.target == "chi") {
    const int chi = brute_chi(p);
    if (config.format == "json") {
      out << io::dump(Json{{"chi", chi}});
    } else {
      out << "chi=" << chi << "\n";
    }
    return kExitOk;
  }
  if (config.target == "list") {
    require(config.lists, "--lists");
    const ListAssignment la =
        io::lists_from_json(io::read_json_file(config.lists));
    const auto found = brute_list_color(p, la);
    if (!found) {
      VerificationReport r;
      r.violations.push_back("no valid assignment exists");
      report(config, r, out);
      return kExitFailed;
    }
    emit(config, io::assignment_to_json(*found), out);
    return kExitOk;
  }
  if (config.target == "kernel") {
    const OrderedContext ctx = load_context(config, p);
    const ElementSet ground = parse_ground(config, p.n_elements());
    emit(config, Json{{"ground", ground}, {"kernels", brute_kernel(ctx, ground)}},
         out);
    return kExitOk;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "oracle target must be chi, list or kernel");
}

struct Timing {
  double total_ms = 0;
  double max_ms = 0;
};

int cmd_bench(const RunConfig& config, std::ostream& out) {
  if (config.trials < 1) {
    throw Error(ErrorCode::kInvalidArgument, "--trials must be at least 1");
  }
  using Clock = std::chrono::steady_clock;
  auto elapsed_ms = [](Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since)
        .count();
  };
  Timing color_time;
  Timing list_time;
  int64_t elements = 0;
  for (int trial = 0; trial < config.trials; ++trial) {
    GeneratorParams gp;
    gp.n_elements = config.n_elements;
    gp.max_parts = config.max_parts;
    gp.max_cap = config.max_cap;
    gp.seed = config.seed + static_cast<uint64_t>(trial);
    const MatroidPair p = random_instance(gp);
    elements += p.n_elements();

    auto start = Clock::now();
    const Coloring c = optimal_coloring(p);
    double ms = elapsed_ms(start);
    color_time.total_ms += ms;
    color_time.max_ms = std::max(color_time.max_ms, ms);

    const int colors = static_cast<int>(c.classes.size());
    Rng rng(gp.seed ^ 0x9e3779b97f4a7c15ULL);
    ListAssignment la;
    for (int v = 0; v < p.n_elements(); ++v) {
      std::vector<std::string> palette;
      for (int t = 0; t < 2 * colors; ++t) palette.push_back("c" + std::to_string(t));
      rng.shuffle(palette);
      palette.resize(colors);
      la.lists.push_back(std::move(palette));
    }
    start = Clock::now();
    const ListColoringOutput a = list_color(p, la);
    ms = elapsed_ms(start);
    list_time.total_ms += ms;
    list_time.max_ms = std::max(list_time.max_ms, ms);
    if (!verify_list_coloring(p, la, a).ok()) {
      throw Error(ErrorCode::kInternalInvariantViolated,
                  "bench produced an invalid list coloring");
    }
  }
  const double trials = config.trials;
  if (config.format == "json") {
    auto row = [&](const Timing& t) {
      return Json{{"max_ms", t.max_ms},
                  {"mean_ms", t.total_ms / trials},
                  {"total_ms", t.total_ms}};
    };
    out << io::dump(Json{{"color", row(color_time)},
                         {"list-color", row(list_time)},
                         {"mean_elements", elements / trials},
                         {"trials", config.trials}});
    return kExitOk;
  }
  out << std::left << std::setw(12) << "command" << std::right << std::setw(8)
      << "trials" << std::setw(12) << "mean_ms" << std::setw(12) << "max_ms"
      << std::setw(12) << "total_ms" << "\n";
  out << std::fixed << std::setprecision(3);
  for (const auto& [name, t] :
       {std::pair{"color", color_time}, std::pair{"list-color", list_time}}) {
    out << std::left << std::setw(12) << name << std::right << std::setw(8)
        << config.trials << std::setw(12) << t.total_ms / trials
        << std::setw(12) << t.max_ms << std::setw(12) << t.total_ms << "\n";
  }
  return kExitOk;
}

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.format != "text" && config.format != "json") {
    throw Error(ErrorCode::kInvalidArgument, "--format must be text or json");
  }
  if (config.command == "chi") return cmd_chi(config, out);
  if (config.command == "color") return cmd_color(config, out);
  if (config.command == "list-color") return cmd_list_color(config, out, err);
  if (config.command == "kernel") return cmd_kernel(config, out);
  if (config.command == "verify") return cmd_verify(config, out);
  if (config.command == "gen") return cmd_gen(config, out);
  if (config.command == "oracle") return cmd_oracle(config, out);
  if (config.command == "bench") return cmd_bench(config, out);
  throw Error(ErrorCode::kInvalidArgument,
              "unknown command \"" + config.command + "\"");
}

}  // namespace

int exit_status(ErrorCode code) {
  return is_internal(code) ? kExitInternal : kExitMalformed;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(config, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_status(e.code());
  }
}

int main_with_args(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err) {
  RunConfig config;
  CLI::App app{"Optimal and list colorings of two generalized partition "
               "matroids"};
  app.require_subcommand(1);
  // Global flags may follow the subcommand.
  app.fallthrough();
  app.add_option("--format", config.format, "Report format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("-v,--verbose", config.verbosity, "More diagnostics on stderr");

  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("-i,--instance", config.instance, "Instance JSON")
        ->required();
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", config.output, "Write result here");
  };
  auto add_orders = [&](CLI::App* sub) {
    sub->add_option("--coloring", config.coloring,
                    "Coloring JSON defining the orders");
    sub->add_option("--labels", config.labels, "Label permutation JSON");
    sub->add_option("--ground", config.ground, "Comma-separated element ids");
  };
  auto add_generator = [&](CLI::App* sub) {
    sub->add_option("--seed", config.seed, "Random seed");
    sub->add_option("--n", config.n_elements, "Elements (edges if bipartite)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-parts", config.max_parts, "Parts per side")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-cap", config.max_cap, "Largest cap")
        ->check(CLI::PositiveNumber);
  };

  auto* chi = app.add_subcommand("chi", "Expansion numbers and chi");
  add_instance(chi);
  auto* color = app.add_subcommand("color", "Optimal coloring");
  add_instance(color);
  add_output(color);
  auto* list = app.add_subcommand("list-color", "List coloring");
  add_instance(list);
  add_output(list);
  list->add_option("--lists", config.lists, "Lists JSON")->required();
  auto* kernel = app.add_subcommand("kernel", "Kernel for given orders");
  add_instance(kernel);
  add_output(kernel);
  add_orders(kernel);

  auto* verify = app.add_subcommand("verify", "Check an artifact");
  verify->require_subcommand(1);
  for (const char* target : {"coloring", "list", "kernel"}) {
    auto* sub = verify->add_subcommand(target);
    add_instance(sub);
    sub->add_option("--lists", config.lists, "Lists JSON");
    sub->add_option("--assignment", config.assignment, "Assignment JSON");
    sub->add_option("--kernel", config.kernel, "Kernel JSON");
    if (std::string(target) == "coloring") {
      sub->add_option("--coloring", config.coloring, "Coloring JSON");
    } else {
      add_orders(sub);
    }
  }

  auto* gen = app.add_subcommand("gen", "Random instance");
  add_generator(gen);
  add_output(gen);
  gen->add_flag("--bipartite", config.bipartite, "Emit the bipartite form");

  auto* oracle = app.add_subcommand("oracle", "Brute-force ground truth");
  oracle->require_subcommand(1);
  for (const char* target : {"chi", "list", "kernel"}) {
    auto* sub = oracle->add_subcommand(target);
    add_instance(sub);
    add_output(sub);
    sub->add_option("--lists", config.lists, "Lists JSON");
    add_orders(sub);
  }

  auto* bench = app.add_subcommand("bench", "Time color and list-color");
  add_generator(bench);
  bench->add_option("--trials", config.trials, "Number of seeded trials")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream usage;
    const int code = app.exit(e, usage, usage);
    (code == 0 ? out : err) << usage.str();
    return code == 0 ? kExitOk : kExitMalformed;
  }

  for (CLI::App* sub : app.get_subcommands()) {
    config.command = sub->get_name();
    for (CLI::App* inner : sub->get_subcommands()) {
      config.target = inner->get_name();
    }
  }
  return run(config, out, err);
}

}  // namespace gpmc::cli

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "ifc/baire.hpp"
#include "ifc/classify.hpp"
#include "ifc/cnd.hpp"
#include "ifc/io.hpp"
#include "ifc/lattice.hpp"
#include "ifc/metric.hpp"
#include "ifc/oracle.hpp"

namespace ifc::cli {
namespace {

enum class Op { I, S, F, G };

std::vector<Op> expand(const std::string& token) {
  if (token == "I") return {Op::I};
  if (token == "S") return {Op::S};
  if (token == "F") return {Op::F};
  if (token == "G") return {Op::G};
  if (token == "FSI") return {Op::I, Op::S, Op::F};
  if (token == "FIS") return {Op::S, Op::I, Op::F};
  throw ValidationError("unknown pipeline token \"" + token + "\" (expected I, S, F, G, FSI or FIS)");
}

std::vector<Op> parse_pipeline(const std::string& spec) {
  std::vector<Op> ops;
  std::stringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char c) { return std::isspace(c); }),
                token.end());
    if (token.empty()) continue;
    for (Op op : expand(token)) ops.push_back(op);
  }
  return ops;
}

PiecewiseIntervalFn apply_op(Op op, const PiecewiseIntervalFn& f, const CofiniteDense& d) {
  switch (op) {
    case Op::I:
      return lower_baire(f, d);
    case Op::S:
      return upper_baire(f, d);
    case Op::F:
      return graph_completion(f, d);
    case Op::G:
      if (!d.is_full()) throw ValidationError("G takes no dense-subset exclusion");
      return normalize_G(f);
  }
  return f;
}

PiecewiseIntervalFn load_function(const std::string& path) { return io::function_from_json(io::read_file(path)); }

// A family file holds one function or an array of functions.
void load_family(const std::string& path, std::vector<PiecewiseIntervalFn>& out) {
  const auto j = io::read_file(path);
  if (j.is_array()) {
    for (const auto& e : j) out.push_back(io::function_from_json(e));
  } else {
    out.push_back(io::function_from_json(j));
  }
}

Window to_window(const std::vector<double>& w) {
  if (w.size() != 2) throw ValidationError("--window expects a,b");
  return {w[0], w[1]};
}

// Writes to `path`, or to `out` when path is empty.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw ValidationError("cannot write " + path);
  file << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact calculus for interval-valued functions of one variable", "ifc"};
  app.require_subcommand(1);
  std::function<void()> action;

  std::string output;
  auto add_output = [&output](CLI::App* sub) { sub->add_option("-o,--output", output, "Write the result here"); };

  // apply
  std::string ops_spec;
  std::vector<double> dense_exclude;
  std::string apply_file;
  auto* apply = app.add_subcommand("apply", "Run an operator pipeline (I, S, F, G, FSI, FIS) left to right");
  apply->add_option("--ops", ops_spec, "Comma-separated pipeline tokens")->required();
  apply->add_option("--dense-exclude", dense_exclude, "Points removed from the dense set of the first operator")
      ->delimiter(',');
  apply->add_option("file", apply_file, "Function JSON")->required();
  add_output(apply);
  apply->callback([&] {
    action = [&] {
      auto f = load_function(apply_file);
      const auto ops = parse_pipeline(ops_spec);
      if (!dense_exclude.empty() && ops.empty()) throw ValidationError("--dense-exclude needs a pipeline");
      for (std::size_t k = 0; k < ops.size(); ++k) {
        const auto d = k == 0 ? CofiniteDense(f.domain(), dense_exclude) : CofiniteDense::full(f.domain());
        f = apply_op(ops[k], f, d);
      }
      emit(io::dump(io::to_json(f.normalized())), output, out);
    };
  });

  // classify
  std::string classify_file;
  auto* classify = app.add_subcommand("classify", "Continuity and finiteness report as JSON");
  classify->add_option("file", classify_file, "Function JSON")->required();
  add_output(classify);
  classify->callback([&] {
    action = [&] {
      const auto f = load_function(classify_file);
      emit(io::dump(io::to_json(continuity_report(f), finiteness(f))), output, out);
    };
  });

  // sup / inf / join / meet
  std::vector<std::string> family_files;
  auto add_family = [&](const char* name, const char* help,
                        std::function<PiecewiseIntervalFn(std::span<const PiecewiseIntervalFn>)> op) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("files", family_files, "Function JSON files (each one function or an array)")->required();
    add_output(sub);
    sub->callback([&, op] {
      action = [&, op] {
        std::vector<PiecewiseIntervalFn> fs;
        for (const auto& p : family_files) load_family(p, fs);
        emit(io::dump(io::to_json(op(fs).normalized())), output, out);
      };
    });
  };
  add_family("sup", "Supremum of H-continuous functions", [](auto fs) { return sup_H(fs); });
  add_family("inf", "Infimum of H-continuous functions", [](auto fs) { return inf_H(fs); });
  add_family("join", "Inclusion join of D-continuous functions", [](auto fs) { return inclusion_join(fs); });
  add_family("meet", "Inclusion meet of D-continuous functions", [](auto fs) { return inclusion_meet(fs); });

  // hull
  std::string phi_file;
  std::string psi_file;
  auto* hull = app.add_subcommand("hull", "Interval hull [I(phi), S(psi)] of pointwise envelopes");
  hull->add_option("--phi", phi_file, "Pointwise infimum JSON")->required();
  hull->add_option("--psi", psi_file, "Pointwise supremum JSON")->required();
  add_output(hull);
  hull->callback([&] {
    action = [&] {
      emit(io::dump(io::to_json(interval_hull(load_function(phi_file), load_function(psi_file)))), output, out);
    };
  });

  // distance
  std::vector<std::string> distance_files;
  std::vector<double> window;
  double tol = 1e-6;
  auto* distance = app.add_subcommand("distance", "Hausdorff distance between completed graphs");
  distance->add_option("files", distance_files, "Two function JSON files")->required()->expected(2);
  distance->add_option("--window", window, "a,b")->required()->delimiter(',')->expected(2);
  distance->add_option("--tol", tol, "Absolute tolerance")->capture_default_str();
  distance->callback([&] {
    action = [&] {
      const double d = graph_distance(load_function(distance_files[0]), load_function(distance_files[1]),
                                      to_window(window), tol);
      io::Json j;
      j["distance"] = d;
      j["tol"] = tol;
      out << io::dump(j);
    };
  });

  // crosscheck
  std::string cross_file;
  double h = 1e-3;
  double margin = 1e-2;
  std::string csv_path;
  auto* cross = app.add_subcommand("crosscheck", "Compare the exact F(f) with the grid oracle");
  cross->add_option("file", cross_file, "Function JSON")->required();
  cross->add_option("--window", window, "a,b")->required()->delimiter(',')->expected(2);
  cross->add_option("--step", h, "Grid step h")->capture_default_str();
  cross->add_option("--margin", margin, "Distance kept from breakpoints")->capture_default_str();
  cross->add_option("--csv", csv_path, "Write node-wise deviations here");
  cross->callback([&] {
    action = [&] {
      const auto rep = crosscheck(load_function(cross_file), to_window(window), h, margin);
      if (!csv_path.empty()) {
        std::ostringstream csv;
        io::write_crosscheck_csv(csv, rep);
        emit(csv.str(), csv_path, out);
      }
      out << io::dump(io::to_json(rep));
    };
  });

  // plot
  std::string plot_file;
  std::size_t samples = 201;
  std::string breakpoints_path;
  auto* plot = app.add_subcommand("plot", "CSV samples x,lower,upper");
  plot->add_option("file", plot_file, "Function JSON")->required();
  plot->add_option("--window", window, "a,b (defaults to a finite domain)")->delimiter(',')->expected(2);
  plot->add_option("-n,--samples", samples, "Number of sample points")->capture_default_str();
  plot->add_option("--breakpoints", breakpoints_path, "Write the breakpoint table here");
  add_output(plot);
  plot->callback([&] {
    action = [&] {
      const auto f = load_function(plot_file);
      Window w{};
      if (!window.empty()) {
        w = to_window(window);
      } else {
        if (!f.domain().left.is_finite() || !f.domain().right.is_finite()) {
          throw ValidationError("plot: --window is required on an unbounded domain");
        }
        // Step just inside the open domain.
        const double a = f.domain().left.value();
        const double b = f.domain().right.value();
        w = {std::nextafter(a, b), std::nextafter(b, a)};
      }
      if (samples < 1) throw ValidationError("plot: need at least one sample");
      std::ostringstream csv;
      io::write_plot_csv(csv, f, w, samples);
      emit(csv.str(), output, out);
      if (!breakpoints_path.empty()) {
        std::ostringstream table;
        io::write_breakpoint_csv(table, f, w);
        emit(table.str(), breakpoints_path, out);
      }
    };
  });

  // f0
  std::string cnd_file;
  bool exceptions = false;
  auto* f0_cmd = app.add_subcommand("f0", "Graph completion of a function continuous off a finite set");
  f0_cmd->add_option("file", cnd_file, "CndFunction JSON")->required();
  f0_cmd->add_flag("--exceptions", exceptions, "Print the minimal exception set instead");
  add_output(f0_cmd);
  f0_cmd->callback([&] {
    action = [&] {
      const auto u = io::cnd_from_json(io::read_file(cnd_file));
      if (exceptions) {
        io::Json j = io::Json::array();
        for (double x : minimal_exception_set(u)) j.push_back(x);
        emit(io::dump(j), output, out);
      } else {
        emit(io::dump(io::to_json(f0(u))), output, out);
      }
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (action) action();
    return kExitOk;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace ifc::cli

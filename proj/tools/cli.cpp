#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "kings/constructions.hpp"
#include "kings/continuity.hpp"
#include "kings/error.hpp"
#include "kings/experiments.hpp"
#include "kings/io.hpp"
#include "kings/kings.hpp"
#include "kings/sampled_space.hpp"

namespace kings::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << content;
  if (!f) throw InputError("write to '" + path + "' failed");
}

// Either inline JSON (starts with '{') or a path to a JSON file.
std::string spec_text(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return arg;
  return read_file(arg);
}

struct GenArgs {
  std::string spec;
  std::string out;
};

struct KingsArgs {
  std::string in;
  std::string out;
  bool k_sets = false;
  bool witnesses = false;
};

struct VerifyArgs {
  std::size_t n_max = 6;
};

struct EscapeArgs {
  std::string mode = "gap";
  std::size_t levels = 4;
  std::uint64_t seed = 0;
  std::vector<std::size_t> block_sizes{2};
  bool include_endpoint = false;
  std::string format = "json";
  std::string out;
};

struct DotArgs {
  std::string in;
  std::string out;
};

struct ContinuityArgs {
  std::string space;
  std::string tournament;
  double delta = 0.0;
  double epsilon = 0.0;
  std::size_t max_witnesses = 256;
  std::string out;
};

struct SampleArgs {
  std::size_t grid = 16;
  bool exclude_endpoint = false;
  std::string curve = "axis";
  std::string out;
};

struct SineArgs {
  std::size_t points = 16;
  std::string out;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  const auto spec = io::spec_from_json(spec_text(a.spec));
  write_output(a.out, io::tournament_to_json(materialize(spec)), out);
  return kOk;
}

int cmd_kings(const KingsArgs& a, std::ostream& out) {
  const auto sel = io::tournament_from_json(read_file(a.in));
  const auto start = std::chrono::steady_clock::now();
  const auto report = king_report(sel);
  io::ReportOptions opts;
  opts.include_k_sets = a.k_sets;
  opts.include_witnesses = a.witnesses;
  opts.source = a.in;
  opts.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  write_output(a.out, io::report_to_json(sel, report, opts), out);
  return report.kings.empty() ? kNegative : kOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const auto report = exhaustive_verify(a.n_max);
  for (const auto& row : report.per_size) {
    out << "n=" << row.n << ": " << row.tournaments << " tournaments, " << row.failures << " failures\n";
  }
  for (const auto& d : report.failure_details) out << "  " << d << "\n";
  out << report.tournaments << " tournaments, " << report.failures << " failures\n";
  return report.failures == 0 ? kOk : kNegative;
}

int cmd_escape(const EscapeArgs& a, std::ostream& out) {
  const auto trace = a.mode == "gap" ? gap_escape_experiment(a.levels, a.include_endpoint)
                                     : graded_escape_experiment(a.block_sizes, a.levels, a.seed);
  write_output(a.out, a.format == "csv" ? io::trace_to_csv(trace) : io::trace_to_json(trace), out);
  return kOk;
}

int cmd_export_dot(const DotArgs& a, std::ostream& out) {
  const auto sel = io::tournament_from_json(read_file(a.in));
  write_output(a.out, io::tournament_to_dot(sel), out);
  return kOk;
}

int cmd_continuity(const ContinuityArgs& a, std::ostream& out) {
  const auto space = io::space_from_json(read_file(a.space));
  const auto sel = io::tournament_from_json(read_file(a.tournament));
  const auto cert = continuity_falsify(space, sel, a.delta, a.epsilon, {a.max_witnesses});
  write_output(a.out, io::certificate_to_json(cert), out);
  return cert.verdict == Verdict::pass ? kOk : kNegative;
}

int cmd_sample(const SampleArgs& a, std::ostream& out) {
  const auto grid = uniform_grid(a.grid, !a.exclude_endpoint);
  SampledSpace space;
  if (a.curve == "axis") {
    space = interval_space(grid);
  } else if (a.curve == "identity") {
    space = sample_graph([](double s) { return s; }, grid);
  } else {
    space = sample_graph(sine_curve_f, grid);
  }
  write_output(a.out, io::space_to_json(space), out);
  return kOk;
}

int cmd_sine(const SineArgs& a, std::ostream& out) {
  const auto report = sine_king_experiment(a.points);
  write_output(a.out, io::sine_report_to_json(report), out);
  const bool ok = report.min_king_is_right_end() && report.max_king_is_left_end() &&
                  report.min_certificate.verdict == Verdict::pass && report.max_certificate.verdict == Verdict::pass;
  return ok ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kings of finite tournaments and weak selections", "kingsel"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Materialize a selection spec into a tournament document");
  gen_cmd->add_option("--spec", gen.spec, "Spec JSON (inline, or a file path)")->required();
  gen_cmd->add_option("-o,--out", gen.out, "Output path (default: stdout)");

  KingsArgs kings;
  auto* kings_cmd = app.add_subcommand("kings", "Report the king set of a tournament document");
  kings_cmd->add_option("input", kings.in, "Tournament document")->required();
  kings_cmd->add_flag("--k-sets", kings.k_sets, "Include K-sets");
  kings_cmd->add_flag("--witnesses", kings.witnesses, "Include two-step witnesses");
  kings_cmd->add_option("-o,--out", kings.out, "Output path (default: stdout)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustively check every labeled tournament up to n-max players");
  verify_cmd->add_option("--n-max", verify.n_max, "Largest player count (1..6)")->check(CLI::Range(1, 6));

  EscapeArgs escape;
  auto* escape_cmd = app.add_subcommand("escape", "Trace king locations across refinement levels");
  escape_cmd->add_option("--mode", escape.mode, "gap or graded")->check(CLI::IsMember({"gap", "graded"}));
  escape_cmd->add_option("--levels", escape.levels, "Number of levels")->check(CLI::PositiveNumber);
  escape_cmd->add_option("--seed", escape.seed, "Master seed for inner selections (graded)");
  escape_cmd->add_option("--block-sizes", escape.block_sizes, "Block sizes, cycled (graded)")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  escape_cmd->add_flag("--include-endpoint", escape.include_endpoint, "Keep the right endpoint (compact control)");
  escape_cmd->add_option("--format", escape.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  escape_cmd->add_option("-o,--out", escape.out, "Output path (default: stdout)");

  DotArgs dot;
  auto* dot_cmd = app.add_subcommand("export-dot", "Write a tournament document as a Graphviz digraph");
  dot_cmd->add_option("input", dot.in, "Tournament document")->required();
  dot_cmd->add_option("-o,--out", dot.out, "Output path (default: stdout)");

  ContinuityArgs cont;
  auto* cont_cmd = app.add_subcommand("continuity", "Search a sampled selection for side flips");
  cont_cmd->add_option("--space", cont.space, "Sampled space document")->required();
  cont_cmd->add_option("--tournament", cont.tournament, "Tournament document over the same points")->required();
  cont_cmd->add_option("--delta", cont.delta, "Perturbation radius")->required();
  cont_cmd->add_option("--epsilon", cont.epsilon, "Pair separation")->required();
  cont_cmd->add_option("--max-witnesses", cont.max_witnesses, "Violations to record");
  cont_cmd->add_option("-o,--out", cont.out, "Output path (default: stdout)");

  SampleArgs sample;
  auto* sample_cmd = app.add_subcommand("sample", "Write a sampled space on a uniform grid");
  sample_cmd->add_option("--grid", sample.grid, "Grid resolution n (points k/n)")->check(CLI::PositiveNumber);
  sample_cmd->add_flag("--exclude-endpoint", sample.exclude_endpoint, "Drop the point 1");
  sample_cmd->add_option("--curve", sample.curve, "axis, identity or sine")
      ->check(CLI::IsMember({"axis", "identity", "sine"}));
  sample_cmd->add_option("-o,--out", sample.out, "Output path (default: stdout)");

  SineArgs sine;
  auto* sine_cmd = app.add_subcommand("sine", "Kings and continuity of sigma_min / sigma_max on the sine curve");
  sine_cmd->add_option("--points", sine.points, "Sample size (>= 2)")->check(CLI::Range(2, 1 << 20));
  sine_cmd->add_option("-o,--out", sine.out, "Output path (default: stdout)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "kingsel: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen(gen, out);
    if (kings_cmd->parsed()) return cmd_kings(kings, out);
    if (verify_cmd->parsed()) return cmd_verify(verify, out);
    if (escape_cmd->parsed()) return cmd_escape(escape, out);
    if (dot_cmd->parsed()) return cmd_export_dot(dot, out);
    if (cont_cmd->parsed()) return cmd_continuity(cont, out);
    if (sample_cmd->parsed()) return cmd_sample(sample, out);
    if (sine_cmd->parsed()) return cmd_sine(sine, out);
  } catch (const InputError& e) {
    err << "kingsel: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace kings::cli

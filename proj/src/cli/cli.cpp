#include "prodlab/cli.hpp"

#include "prodlab/adversary.hpp"
#include "prodlab/bounds.hpp"
#include "prodlab/certifier.hpp"
#include "prodlab/constructive.hpp"
#include "prodlab/errors.hpp"
#include "prodlab/serialization.hpp"
#include "prodlab/solver.hpp"
#include "prodlab/survey.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <condition_variable>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

namespace prodlab {

namespace {

struct Options {
  std::string graph;
  std::string lists;
  std::string labelling;
  std::string mode = "product";
  std::size_t k = 2;
  std::size_t sum_k = 3;
  std::string algorithm;
  std::string family;
  std::size_t n = 0;
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  std::string universe = "-3,-2,-1,1,2,3";
  std::string out;
  std::uint64_t cap = 0;
  unsigned threads = 1;
};

std::string with_file(const std::string& path, const std::string& what) { return path + ": " + what; }

template <class F>
auto parse_file(const std::string& path, F&& parse) {
  if (path.empty()) throw PreconditionError("missing input file option");
  const std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw ParseError(with_file(path, e.what()));
  }
}

Graph load_graph(const Options& o) {
  return parse_file(o.graph, [](const std::string& t) { return parse_edge_list(std::string_view(t)); });
}

ListAssignment load_lists(const Options& o, const Graph& g) {
  auto la = parse_file(o.lists, [](const std::string& t) { return lists_from_json(t); });
  for (const Edge& e : g.edges())
    if (!la.lists().count(e)) throw PreconditionError(with_file(o.lists, "no list for edge " + edge_key(e)));
  return la;
}

Labelling load_labelling(const Options& o) {
  return parse_file(o.labelling, [](const std::string& t) { return labelling_from_json(t); });
}

std::vector<Rational> parse_universe(const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    out.push_back(parse_rational(std::string_view(text).substr(start, comma - start)));
    start = comma + 1;
  }
  normalize_labels(out);
  return out;
}

void emit(const Options& o, std::ostream& out, const std::string& content) {
  if (o.out.empty()) out << content;
  else write_file(o.out, content);
}

// Totality, list membership and properness; the conflicts are returned.
std::vector<Edge> checked_conflicts(const Graph& g, const Labelling& lab, const ListAssignment* la, Mode mode) {
  for (const Edge& e : g.edges())
    if (!lab.contains(e)) throw PreconditionError("labelling has no label on edge " + edge_key(e));
  for (const auto& [e, x] : lab.labels())
    if (!g.has_edge(e.u, e.v)) throw PreconditionError("labelling names edge " + edge_key(e) + " not in the graph");
  if (la)
    if (auto bad = first_list_violation(g, lab, *la))
      throw PreconditionError("label " + format_rational(lab.at(*bad)) + " on edge " + edge_key(*bad) +
                              " is not in its list");
  return check_proper(g, lab, mode);
}

int cmd_solve(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o);
  const ListAssignment la = load_lists(o, g);
  const auto result = solve(g, la, parse_mode(o.mode), o.cap ? o.cap : kDefaultCap);
  if (!result.found()) {
    out << "NONE\n";
    return kExitNone;
  }
  emit(o, out, labelling_to_json(*result.labelling));
  if (!o.out.empty()) out << "FOUND\n";
  return kExitFound;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o);
  std::optional<ListAssignment> la;
  if (!o.lists.empty()) la = load_lists(o, g);
  const Labelling lab = load_labelling(o);
  const Mode mode = parse_mode(o.mode);
  const auto conflicts = checked_conflicts(g, lab, la ? &*la : nullptr, mode);
  if (conflicts.empty()) {
    out << "proper\n";
    return kExitFound;
  }
  for (const Edge& e : conflicts)
    out << "conflict " << edge_key(e) << ": " << format_rational(vertex_colour(g, lab, e.u, mode)) << " "
        << format_rational(vertex_colour(g, lab, e.v, mode)) << "\n";
  return kExitNone;
}

int cmd_construct(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o);
  const ListAssignment la = load_lists(o, g);
  const std::string& a = o.algorithm;
  Labelling lab;
  if (a == "path") lab = label_path(g, la);
  else if (a == "cycle") lab = label_cycle(g, la);
  else if (a == "tree") lab = label_tree(g, la);
  else if (a == "planar16") lab = label_planar_girth16(g, la);
  else if (a == "subcubic") lab = label_subcubic(g, la);
  else if (a == "from-sum") lab = product_from_sum(g, la, o.sum_k, exact_absolute_labeller());
  else throw PreconditionError("unknown algorithm \"" + a + "\"");
  if (!checked_conflicts(g, lab, &la, Mode::Product).empty())
    throw InvariantViolation("construct: " + a + " produced an improper labelling");
  emit(o, out, labelling_to_json(lab));
  if (!o.out.empty()) out << "FOUND\n";
  return kExitFound;
}

int cmd_certify(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o);
  const auto cert = certify(g, parse_mode(o.mode), o.k, o.cap ? o.cap : kDefaultTermCap);
  if (!cert) {
    out << "ABSENT\n";
    return kExitNone;
  }
  emit(o, out, certificate_to_json(*cert));
  if (!o.out.empty()) out << "CERTIFIED\n";
  return kExitFound;
}

int cmd_adversary(const Options& o, std::ostream& out) {
  const auto universe = parse_universe(o.universe);
  const auto label = [&](std::size_t i) {
    if (universe.size() <= i) throw PreconditionError("--universe needs at least " + std::to_string(i + 1) + " labels");
    return universe[i];
  };
  std::optional<AdversaryWitness> w;
  const std::string& f = o.family;
  if (f == "all-ones") w = all_ones(load_graph(o));
  else if (f == "plus-minus-one") w = plus_minus_one(load_graph(o));
  else if (f == "tree8") w = bad_tree8(label(0));
  else if (f == "path") w = bad_path(o.n, label(0), label(1));
  else if (f == "cycle") w = bad_odd_cycle(o.n, label(0), label(1));
  else throw PreconditionError("unknown adversary family \"" + f + "\"");
  if (!w) {
    out << "NO WITNESS\n";
    return kExitNone;
  }
  emit(o, out, witness_to_json(*w));
  if (!o.out.empty()) out << "WITNESS\n";
  return kExitFound;
}

std::map<std::size_t, SurveyRow> resumable_rows(const std::string& path, const std::string& header) {
  std::map<std::size_t, SurveyRow> rows;
  if (path.empty() || !std::filesystem::exists(path)) return rows;
  std::istringstream in(read_file(path));
  std::string line;
  if (!std::getline(in, line) || line != header) return rows;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    try {
      const SurveyRow row = parse_row(line);
      if (row.verdict != Verdict::Refused) rows[row.n] = row;
    } catch (const ParseError&) {
      break;
    }
  }
  return rows;
}

int cmd_survey(const Options& o, std::ostream& out) {
  SurveySpec spec;
  spec.family = parse_family(o.family);
  spec.mode = parse_mode(o.mode);
  spec.k = o.k;
  spec.universe = parse_universe(o.universe);
  spec.n_min = o.n_min;
  spec.n_max = o.n_max;
  if (o.cap) spec.cap = o.cap;
  if (spec.n_min > spec.n_max) throw PreconditionError("--n-min exceeds --n-max");
  family_graph(spec.family, spec.n_min);

  const std::string header = survey_header(spec);
  auto done = resumable_rows(o.out, header);
  const std::size_t count = spec.n_max - spec.n_min + 1;
  std::vector<std::optional<SurveyRow>> rows(count);
  std::vector<std::exception_ptr> failures(count);
  for (std::size_t i = 0; i < count; ++i)
    if (auto it = done.find(spec.n_min + i); it != done.end()) rows[i] = it->second;

  std::mutex mu;
  std::condition_variable ready;
  std::vector<char> finished(count, 0);
  for (std::size_t i = 0; i < count; ++i) finished[i] = rows[i].has_value();
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i; (i = next++) < count;) {
      if (finished[i]) continue;
      std::optional<SurveyRow> row;
      std::exception_ptr failure;
      try {
        row = survey_row(spec, spec.n_min + i);
      } catch (...) {
        failure = std::current_exception();
      }
      std::lock_guard lock(mu);
      rows[i] = std::move(row);
      failures[i] = failure;
      finished[i] = 1;
      ready.notify_all();
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < std::max(1u, o.threads); ++t) pool.emplace_back(worker);

  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out, std::ios::trunc);
    if (!file) throw IoError("cannot open " + o.out + " for writing");
    file << header << "\n" << std::flush;
  }
  out << header << "\n";
  bool refused = false;
  for (std::size_t i = 0; i < count; ++i) {
    {
      std::unique_lock lock(mu);
      ready.wait(lock, [&] { return finished[i] != 0; });
    }
    if (failures[i]) {
      next = count;
      pool.clear();
      std::rethrow_exception(failures[i]);
    }
    const std::string line = format_row(*rows[i]);
    out << line << "\n" << std::flush;
    if (file.is_open()) file << line << "\n" << std::flush;
    refused = refused || rows[i]->verdict == Verdict::Refused;
  }
  return refused ? kExitRefused : kExitFound;
}

int cmd_bounds(const Options&, std::ostream& out) {
  out << "class\tparameter\tbound\tsource\n";
  for (const auto& b : bound_registry())
    out << b.graph_class << '\t' << b.parameter << '\t' << b.bound << '\t' << b.source << '\n';
  return kExitFound;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"List product-irregular edge labellings: solver, constructions, certificates and surveys"};
  app.require_subcommand(1);
  Options o;

  const auto add_graph = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--graph", o.graph, "Edge-list file, one \"u v\" per line");
    if (required) opt->required();
  };
  const auto add_mode = [&](CLI::App* c) {
    c->add_option("--mode", o.mode, "sum or product")->check(CLI::IsMember({"sum", "product"}));
  };
  const auto add_out = [&](CLI::App* c) { c->add_option("--out", o.out, "Output file (default: stdout)"); };

  auto* solve_cmd = app.add_subcommand("solve", "Exact search for a proper labelling from the lists");
  add_graph(solve_cmd, true);
  solve_cmd->add_option("--lists", o.lists, "List assignment JSON")->required();
  add_mode(solve_cmd);
  add_out(solve_cmd);
  solve_cmd->add_option("--cap", o.cap, "Search node cap");

  auto* verify_cmd = app.add_subcommand("verify", "Check a labelling against the graph and lists");
  add_graph(verify_cmd, true);
  verify_cmd->add_option("--lists", o.lists, "List assignment JSON");
  verify_cmd->add_option("--labelling", o.labelling, "Labelling JSON")->required();
  add_mode(verify_cmd);

  auto* construct_cmd = app.add_subcommand("construct", "Run a constructive product labeller");
  add_graph(construct_cmd, true);
  construct_cmd->add_option("--lists", o.lists, "List assignment JSON")->required();
  construct_cmd->add_option("--algorithm", o.algorithm, "path, cycle, tree, planar16, subcubic or from-sum")
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "tree", "planar16", "subcubic", "from-sum"}));
  construct_cmd->add_option("--k", o.sum_k, "from-sum: absolute-value list size")->capture_default_str();
  add_out(construct_cmd);

  auto* certify_cmd = app.add_subcommand("certify", "Nullstellensatz certificate for k-lists");
  add_graph(certify_cmd, true);
  add_mode(certify_cmd);
  certify_cmd->add_option("--k", o.k, "List size")->required();
  certify_cmd->add_option("--cap", o.cap, "Polynomial term cap");
  add_out(certify_cmd);

  auto* adversary_cmd = app.add_subcommand("adversary", "Build a list assignment with no proper labelling");
  adversary_cmd->add_option("--family", o.family, "all-ones, plus-minus-one, tree8, path or cycle")
      ->required()
      ->check(CLI::IsMember({"all-ones", "plus-minus-one", "tree8", "path", "cycle"}));
  add_graph(adversary_cmd, false);
  adversary_cmd->add_option("--n", o.n, "Path or cycle length");
  adversary_cmd->add_option("--universe", o.universe, "Labels a,b,... used by the construction");
  add_out(adversary_cmd);

  auto* survey_cmd = app.add_subcommand("survey", "Per-n feasibility of k-lists over a label universe");
  survey_cmd->add_option("--family", o.family, "path or cycle")->required()->check(CLI::IsMember({"path", "cycle"}));
  survey_cmd->add_option("--n-min", o.n_min, "Smallest n")->required();
  survey_cmd->add_option("--n-max", o.n_max, "Largest n")->required();
  survey_cmd->add_option("--universe", o.universe, "Comma-separated labels")->capture_default_str();
  survey_cmd->add_option("--k", o.k, "List size")->capture_default_str();
  add_mode(survey_cmd);
  survey_cmd->add_option("--cap", o.cap, "Work cap per row");
  survey_cmd->add_option("--threads", o.threads, "Rows computed in parallel")->capture_default_str();
  add_out(survey_cmd);

  auto* bounds_cmd = app.add_subcommand("bounds", "Known list bounds by graph class");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitPrecondition;
  }

  try {
    if (*solve_cmd) return cmd_solve(o, out);
    if (*verify_cmd) return cmd_verify(o, out);
    if (*construct_cmd) return cmd_construct(o, out);
    if (*certify_cmd) return cmd_certify(o, out);
    if (*adversary_cmd) return cmd_adversary(o, out);
    if (*survey_cmd) return cmd_survey(o, out);
    if (*bounds_cmd) return cmd_bounds(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitIo;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const RefusalError& e) {
    err << "refused: " << e.what() << "\n";
    return kExitRefused;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace prodlab

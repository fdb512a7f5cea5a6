#include "stuckknot/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stuckknot/bracket.hpp"
#include "stuckknot/catalog.hpp"
#include "stuckknot/error.hpp"
#include "stuckknot/isotopy.hpp"
#include "stuckknot/skein.hpp"

namespace stuckknot::cli {

namespace {

constexpr std::string_view kCatalogPrefix = "catalog:";

StuckDiagram load(const std::string &source) {
  if (source.rfind(kCatalogPrefix, 0) == 0)
    return catalog_diagram(source.substr(kCatalogPrefix.size()));
  std::ifstream in(source);
  if (!in)
    throw Error(ErrorKind::SyntaxError, "cannot read '" + source + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str());
}

std::optional<std::size_t> env_budget() {
  const char *v = std::getenv("STUCKKNOT_BUDGET");
  if (!v || !*v)
    return std::nullopt;
  try {
    return static_cast<std::size_t>(std::stoull(v));
  } catch (const std::exception &) {
    throw Error(ErrorKind::SyntaxError, std::string("STUCKKNOT_BUDGET is not a number: ") + v);
  }
}

std::size_t budget_or(const std::optional<std::size_t> &flag, std::size_t fallback) {
  if (flag)
    return *flag;
  return env_budget().value_or(fallback);
}

std::string move_list(const std::vector<Move> &moves) {
  std::string s;
  for (const auto &m : moves)
    s += (s.empty() ? "" : " ") + m.to_string();
  return s;
}

std::string comment(const std::vector<Move> &moves) { return moves.empty() ? "#" : "# " + move_list(moves); }

std::string opt_int(const std::optional<int> &v) { return v ? std::to_string(*v) : "unknown"; }

struct Options {
  std::string file, file2;
  bool raw = false, normalized = false, json = false, moves = false;
  unsigned threads = 0;
  std::optional<std::size_t> budget;
  int max_crossings = -1;
  int length = 0;
  std::uint64_t seed = 0;
  std::string name;
};

int cmd_bracket(const Options &o, std::ostream &out) {
  BracketOptions bo;
  bo.threads = o.threads;
  const auto d = load(o.file);
  const auto p = o.raw ? stuck_bracket(d, bo) : normalized_bracket(d, bo);
  if (o.json)
    out << nlohmann::json{{"kind", o.raw ? "raw" : "normalized"}, {"text", p.to_string()}, {"terms", p.to_json()}}.dump()
        << '\n';
  else
    out << p.to_string() << '\n';
  return kOk;
}

int cmd_homflypt(const Options &o, std::ostream &out) {
  const auto d = load(o.file);
  const auto p = rigid_homflypt(d, budget_or(o.budget, 1'000'000));
  if (o.json)
    out << nlohmann::json{{"text", p.to_string()}, {"terms", p.to_json()}}.dump() << '\n';
  else
    out << p.to_string() << '\n';
  return kOk;
}

int cmd_distance(const Options &o, std::ostream &out) {
  SearchLimits limits;
  limits.max_crossings = o.max_crossings;
  limits.node_budget = budget_or(o.budget, limits.node_budget);
  const auto rep = unsticking_distance(load(o.file), load(o.file2), limits);
  if (o.json) {
    out << rep.to_json().dump() << '\n';
    return kOk;
  }
  out << "lower: " << rep.lower << '\n'
      << "upper: " << opt_int(rep.upper) << '\n'
      << "exact: " << opt_int(rep.exact) << '\n'
      << "exhausted: " << (rep.exhausted ? "true" : "false") << '\n';
  if (rep.exact)
    out << "certificate (from " << (rep.certificate_from_first ? "first" : "second") << "): " << move_list(rep.certificate)
        << '\n';
  out << "note: " << rep.note << '\n';
  return kOk;
}

int cmd_simplify(const Options &o, std::ostream &out) {
  const auto s = simplify(load(o.file));
  out << serialize(s.diagram) << '\n';
  if (o.moves)
    out << comment(s.moves) << '\n';
  return kOk;
}

int cmd_fuzz(const Options &o, std::ostream &out) {
  const auto d = load(o.file);
  const int cap = o.max_crossings >= 0 ? o.max_crossings : d.crossing_count() + 4;
  const auto r = fuzz_sequence(d, o.length, o.seed, cap);
  if (o.json) {
    nlohmann::json moves = nlohmann::json::array();
    for (const auto &m : r.moves)
      moves.push_back(m.to_json());
    out << nlohmann::json{{"diagram", serialize(r.diagram)}, {"moves", moves}}.dump() << '\n';
  } else {
    out << serialize(r.diagram) << '\n' << comment(r.moves) << '\n';
  }
  return kOk;
}

int cmd_validate(const Options &o, std::ostream &out) {
  const auto d = load(o.file);
  out << "ok: " << d.crossing_count() << " crossings, " << d.stuck_count() << " stuck, " << component_count(d)
      << " components\n";
  return kOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Invariants and unsticking distance for stuck knot diagrams", "stuckknot"};
  app.require_subcommand(1);
  Options o;

  auto *bracket = app.add_subcommand("bracket", "stuck bracket polynomial");
  bracket->add_option("file", o.file)->required();
  auto *raw = bracket->add_flag("--raw", o.raw, "unnormalized state sum");
  bracket->add_flag("--normalized", o.normalized, "writhe-normalized (default)")->excludes(raw);
  bracket->add_flag("--json", o.json);
  bracket->add_option("--threads", o.threads, "worker threads, 0 = all cores");

  auto *homflypt = app.add_subcommand("homflypt", "rigid HOMFLYPT polynomial");
  homflypt->add_option("file", o.file)->required();
  homflypt->add_flag("--json", o.json);
  homflypt->add_option("--budget", o.budget, "skein node budget");

  auto *distance = app.add_subcommand("distance", "unsticking distance bounds and search");
  distance->add_option("file1", o.file)->required();
  distance->add_option("file2", o.file2)->required();
  distance->add_option("--max-crossings", o.max_crossings, "crossing cap for intermediate diagrams");
  distance->add_option("--budget", o.budget, "search node budget");
  distance->add_flag("--json", o.json);

  auto *simpl = app.add_subcommand("simplify", "greedy crossing reduction under stuck isotopy");
  simpl->add_option("file", o.file)->required();
  simpl->add_flag("--moves", o.moves, "also print the applied moves");

  auto *fuzz = app.add_subcommand("fuzz", "seeded random stuck-isotopy walk");
  fuzz->add_option("file", o.file)->required();
  fuzz->add_option("--length", o.length)->required();
  fuzz->add_option("--seed", o.seed)->required();
  fuzz->add_option("--max-crossings", o.max_crossings, "default: input crossings + 4");
  fuzz->add_flag("--json", o.json);

  auto *cat = app.add_subcommand("catalog", "built-in diagrams");
  cat->require_subcommand(1);
  auto *cat_list = cat->add_subcommand("list", "list entries");
  auto *cat_show = cat->add_subcommand("show", "print an entry");
  cat_show->add_option("name", o.name)->required();

  auto *validate = app.add_subcommand("validate", "parse and check a diagram");
  validate->add_option("file", o.file)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*bracket)
      return cmd_bracket(o, out);
    if (*homflypt)
      return cmd_homflypt(o, out);
    if (*distance)
      return cmd_distance(o, out);
    if (*simpl)
      return cmd_simplify(o, out);
    if (*fuzz)
      return cmd_fuzz(o, out);
    if (*validate)
      return cmd_validate(o, out);
    if (*cat_list) {
      for (const auto &e : catalog())
        out << e.name << '\t' << e.provenance << '\n';
      return kOk;
    }
    if (*cat_show) {
      out << catalog_entry(o.name).text << '\n';
      return kOk;
    }
  } catch (const Error &e) {
    err << e.what() << '\n';
    return e.is_budget_error() ? kBudget : kInput;
  }
  return kUsage;
}

} // namespace stuckknot::cli

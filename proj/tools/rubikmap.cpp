// rubikmap: command line front end for map building, group orders,
// conjecture checks, scrambles and the play service.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "rubikmap/error.hpp"
#include "rubikmap/map_io.hpp"
#include "rubikmap/rubik.hpp"
#include "rubikmap/service.hpp"
#include "rubikmap/session.hpp"
#include "rubikmap/verifier.hpp"

using namespace rubikmap;

namespace {

struct Options {
  std::string map;
  std::string catalog = "standard";
  std::uint64_t seed = 1;
  bool seed_given = false;
  std::optional<double> budget_seconds;
  std::string out;
  std::string format = "table";
  std::size_t length = 25;
  std::string word;
  std::string state;
  std::string perm;
  unsigned threads = 0;
  bool exit_zero = false;
  std::string host = "127.0.0.1";
  int port = 8080;
};

Map selected_map(const Options &o)
{
  if (o.map.empty())
    throw Error(ErrorCode::MalformedInput, "no map given (use --map or a positional name)");
  return resolve_map(o.map);
}

// Writes to --out when given, else stdout.
void emit(const Options &o, const std::string &text)
{
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f)
    throw Error(ErrorCode::IoError, "cannot write " + o.out);
  f << text;
  if (!f)
    throw Error(ErrorCode::IoError, "write failed for " + o.out);
}

VerifyOptions verify_options(const Options &o)
{
  VerifyOptions v;
  if (o.seed_given)
    v.seed = o.seed;
  v.budget_seconds = o.budget_seconds;
  return v;
}

std::string render(const Options &o, const std::vector<ConjectureReport> &reports)
{
  std::ostringstream os;
  if (o.format == "csv")
    write_csv(os, reports);
  else if (o.format == "doc")
    os << reports_to_json(reports).dump(2) << '\n';
  else
    write_table(os, reports);
  return os.str();
}

std::vector<Map> catalog_maps(const std::string &catalog)
{
  if (catalog == "standard")
    return standard_suite();
  std::vector<Map> maps;
  std::stringstream ss(catalog);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty())
      maps.push_back(resolve_map(item));
  if (maps.empty())
    throw Error(ErrorCode::MalformedInput, "empty catalog");
  return maps;
}

int cmd_build(const Options &o)
{
  emit(o, map_to_json(selected_map(o)).dump(2) + "\n");
  return 0;
}

int cmd_info(const Options &o)
{
  Map m = selected_map(o);
  nlohmann::json doc{{"name", m.name()},
                     {"darts", m.num_darts()},
                     {"vertices", m.num_vertices()},
                     {"edges", m.num_edges()},
                     {"faces", m.num_faces()},
                     {"genus", m.genus()},
                     {"face_sizes", m.face_sizes()},
                     {"all_faces_odd", m.all_faces_odd()}};
  if (o.format == "doc") {
    emit(o, doc.dump(2) + "\n");
    return 0;
  }
  std::ostringstream os;
  os << "name        " << m.name() << '\n'
     << "V E F       " << m.num_vertices() << ' ' << m.num_edges() << ' ' << m.num_faces() << '\n'
     << "genus       " << m.genus() << '\n'
     << "face sizes ";
  for (auto s : m.face_sizes())
    os << ' ' << s;
  os << "\nall odd     " << (m.all_faces_odd() ? "yes" : "no") << '\n';
  emit(o, os.str());
  return 0;
}

BuildOptions build_options(const Options &o)
{
  BuildOptions b;
  if (o.seed_given)
    b.seed = o.seed;
  if (o.budget_seconds)
    b.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(*o.budget_seconds));
  return b;
}

int cmd_order(const Options &o)
{
  RubikPresentation p(selected_map(o));
  emit(o, p.group(build_options(o)).order().str() + "\n");
  return 0;
}

int cmd_verify(const Options &o)
{
  auto report = verify(selected_map(o), verify_options(o));
  emit(o, render(o, {report}));
  return report.pass ? 0 : 1;
}

int cmd_suite(const Options &o)
{
  auto reports = run_suite(catalog_maps(o.catalog), verify_options(o), o.threads);
  emit(o, render(o, reports));
  bool all = std::all_of(reports.begin(), reports.end(), [](const auto &r) { return r.pass; });
  return all || o.exit_zero ? 0 : 1;
}

int cmd_export_script(const Options &o)
{
  emit(o, script_text(RubikPresentation(selected_map(o))));
  return 0;
}

int cmd_scramble(const Options &o)
{
  PuzzleModel model(selected_map(o));
  Word w = scramble_word(model, o.seed, o.length);
  if (o.format == "doc")
    emit(o, nlohmann::json{{"map", o.map}, {"seed", o.seed}, {"history", w.to_string()}}.dump(2) +
                "\n");
  else
    emit(o, w.to_string() + "\n");
  return 0;
}

int cmd_solve(const Options &o)
{
  int given = !o.word.empty() + !o.state.empty() + !o.perm.empty();
  if (given > 1)
    throw Error(ErrorCode::MalformedInput, "give at most one of --word, --state, --perm");

  std::string map_spec = o.map;
  std::string history = o.word;
  if (!o.state.empty()) {
    std::ifstream f(o.state);
    if (!f)
      throw Error(ErrorCode::IoError, "cannot read " + o.state);
    auto doc = nlohmann::json::parse(f, nullptr, false);
    if (doc.is_discarded() || !doc.is_object() || !doc.contains("history") ||
        !doc["history"].is_string())
      throw Error(ErrorCode::MalformedInput, o.state + ": expected an object with a 'history' string");
    history = doc["history"].get<std::string>();
    if (map_spec.empty() && doc.contains("map") && doc["map"].is_string())
      map_spec = doc["map"].get<std::string>();
  }
  if (map_spec.empty())
    throw Error(ErrorCode::MalformedInput, "no map given");

  PuzzleModel model(resolve_map(map_spec));
  Word solution;
  if (!o.perm.empty()) {
    auto g = Permutation::parse(o.perm, model.presentation.degree());
    solution = model.group.factor(g).inverse();
  } else {
    PuzzleState state = solved_state(model, map_spec);
    apply(state, model, Word::parse(history));
    solution = solve_word(state, model);
  }
  emit(o, solution.to_string() + "\n");
  return 0;
}

int cmd_serve(const Options &o)
{
  SessionStore store;
  httplib::Server server;
  install_routes(server, store);
  std::cerr << "listening on http://" << o.host << ':' << o.port << '\n';
  if (!server.listen(o.host, o.port))
    throw Error(ErrorCode::IoError, "cannot listen on " + o.host + ":" + std::to_string(o.port));
  return 0;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Rubik groups of 3-valent maps"};
  app.require_subcommand(1);
  Options o;

  auto add_map = [&](CLI::App *sub) {
    sub->add_option("--map,map", o.map, "catalog name or map file");
  };
  auto add_common = [&](CLI::App *sub) {
    sub->add_option("--out", o.out, "output file");
    sub->add_option("--format", o.format)->check(CLI::IsMember({"table", "csv", "doc"}));
  };
  auto add_seed = [&](CLI::App *sub) {
    sub->add_option_function<std::uint64_t>(
        "--seed", [&](std::uint64_t s) { o.seed = s, o.seed_given = true; }, "random seed");
  };
  auto add_budget = [&](CLI::App *sub) {
    sub->add_option("--budget-seconds", o.budget_seconds, "wall-clock limit; 0 allows no time");
  };

  std::vector<std::pair<CLI::App *, int (*)(const Options &)>> commands;
  auto command = [&](const char *name, const char *help, int (*fn)(const Options &)) {
    CLI::App *sub = app.add_subcommand(name, help);
    add_common(sub);
    commands.emplace_back(sub, fn);
    return sub;
  };

  auto *build = command("build", "write the map document", cmd_build);
  add_map(build);
  auto *info = command("info", "map statistics", cmd_info);
  add_map(info);
  auto *order = command("order", "exact order of Rubik(M)", cmd_order);
  add_map(order);
  add_seed(order);
  add_budget(order);
  auto *ver = command("verify", "check the conjecture on one map", cmd_verify);
  add_map(ver);
  add_seed(ver);
  add_budget(ver);
  auto *suite = command("suite", "check the conjecture on a catalog", cmd_suite);
  suite->add_option("--catalog", o.catalog, "\"standard\" or comma separated names/files");
  suite->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  suite->add_flag("--exit-zero", o.exit_zero, "exit 0 even when a map fails");
  add_seed(suite);
  add_budget(suite);
  auto *exp = command("export-script", "GAP script of the generators", cmd_export_script);
  add_map(exp);
  auto *scr = command("scramble", "random move word", cmd_scramble);
  add_map(scr);
  add_seed(scr);
  scr->add_option("--length", o.length, "number of moves");
  auto *sol = command("solve", "word returning a state to solved", cmd_solve);
  add_map(sol);
  sol->add_option("--word", o.word, "moves applied to the solved puzzle");
  sol->add_option("--state", o.state, "state document written by 'scramble --format doc'");
  sol->add_option("--perm", o.perm, "group element in cycle notation");
  auto *serve = command("serve", "HTTP play service", cmd_serve);
  serve->add_option("--host", o.host);
  serve->add_option("--port", o.port);

  CLI11_PARSE(app, argc, argv);

  try {
    for (auto &[sub, fn] : commands)
      if (sub->parsed())
        return fn(o);
  } catch (const Error &e) {
    std::cerr << "error: " << error_code_name(e.code()) << ": " << e.what() << '\n';
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

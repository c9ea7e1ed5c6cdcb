#include "rubikmap/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <random>
#include <thread>

#include "rubikmap/builders.hpp"
#include "rubikmap/error.hpp"
#include "rubikmap/group.hpp"
#include "rubikmap/orientation.hpp"
#include "rubikmap/rubik.hpp"

namespace rubikmap {

namespace {

BigInt factorial(std::size_t n)
{
  BigInt r = 1;
  for (std::size_t k = 2; k <= n; ++k)
    r *= k;
  return r;
}

BigInt power(unsigned base, std::size_t exp)
{
  BigInt r = 1;
  for (std::size_t k = 0; k < exp; ++k)
    r *= base;
  return r;
}

std::string str(const BigInt &x) { return x.str(); }

void require_in_scope(const Map &m)
{
  for (std::size_t f = 0; f < m.num_faces(); ++f)
    if (m.faces()[f].size() < 3)
      throw Error(ErrorCode::OutOfConjectureScope,
                  m.name() + " has a face of size " + std::to_string(m.faces()[f].size()));
}

// Restrict `g` on [offset, offset + size) to a permutation of that block.
Permutation restrict_block(const Permutation &g, std::size_t offset, std::size_t size)
{
  std::vector<Point> images(size);
  for (std::size_t x = 0; x < size; ++x) {
    Point y = g[static_cast<Point>(offset + x)];
    if (y < offset || y >= offset + size)
      throw Error(ErrorCode::IllDefinedProjection, "block not preserved by a kernel generator");
    images[x] = static_cast<Point>(y - offset);
  }
  return Permutation(std::move(images));
}

BigInt product(const std::vector<std::size_t> &sizes, std::size_t from, std::size_t to)
{
  BigInt r = 1;
  for (std::size_t i = from; i < to; ++i)
    r *= sizes[i];
  return r;
}

bool commute_pairwise(const std::vector<Permutation> &gens)
{
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i])
        return false;
  return true;
}

bool all_power_trivial(const std::vector<Permutation> &gens, long long k)
{
  return std::all_of(gens.begin(), gens.end(), [&](const Permutation &g) { return g.pow(k).is_identity(); });
}

} // namespace

BigInt predicted_order(const Map &m)
{
  require_in_scope(m);
  const std::size_t v = m.num_vertices();
  const std::size_t e = m.num_edges();
  BigInt vertex = factorial(v);
  if (m.all_faces_odd())
    vertex /= 2;
  return power(2, e - 1) * (factorial(e) / 2) * power(3, v - 1) * vertex;
}

ConjectureReport verify(const Map &m, const VerifyOptions &options)
{
  const auto start = std::chrono::steady_clock::now();
  ConjectureReport report;
  report.name = m.name();
  report.vertices = m.num_vertices();
  report.edges = m.num_edges();
  report.faces = m.num_faces();
  report.genus = m.genus();
  report.face_sizes = m.face_sizes();
  report.all_odd = m.all_faces_odd();

  BuildOptions build;
  build.seed = options.seed;
  if (options.budget_seconds)
    build.deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                 std::chrono::duration<double>(*options.budget_seconds));
  if (build.deadline && std::chrono::steady_clock::now() >= *build.deadline)
    throw Error(ErrorCode::BudgetExceeded, "no time budget left for " + m.name());

  require_in_scope(m);
  report.predicted = predicted_order(m);

  const RubikPresentation pres(m);
  const std::size_t V = m.num_vertices();
  const std::size_t E = m.num_edges();
  const std::size_t C = pres.num_corners();
  const std::size_t S = pres.num_side_edges();

  // One chain on vertices ⊔ corners ⊔ edges ⊔ side edges, with every point
  // of the first three blocks forced into the base in that order. The
  // levels of each block then measure the vertex image, H3, H2 and H1.
  const std::size_t off_corner = V;
  const std::size_t off_edge = V + C;
  const std::size_t off_side = V + C + E;
  const std::size_t total = off_side + S;
  const Projection to_vertex = pres.to_vertex();
  const Projection to_edge = pres.to_edge();

  std::vector<Permutation> combined;
  for (const auto &g : pres.generators()) {
    Permutation gv = project(g, to_vertex);
    Permutation ge = project(g, to_edge);
    std::vector<Point> images(total);
    for (std::size_t x = 0; x < V; ++x)
      images[x] = gv[static_cast<Point>(x)];
    for (std::size_t x = 0; x < C; ++x)
      images[off_corner + x] = static_cast<Point>(off_corner + g[static_cast<Point>(x)]);
    for (std::size_t x = 0; x < E; ++x)
      images[off_edge + x] = static_cast<Point>(off_edge + ge[static_cast<Point>(x)]);
    for (std::size_t x = 0; x < S; ++x)
      images[off_side + x] = static_cast<Point>(off_side + g[static_cast<Point>(C + x)] - C);
    combined.emplace_back(std::move(images));
  }
  BuildOptions tower_opts = build;
  for (std::size_t x = 0; x < off_side; ++x)
    tower_opts.base_prefix.push_back(static_cast<Point>(x));
  const GroupHandle tower = GroupHandle::from_generators(combined, tower_opts);
  const auto sizes = tower.orbit_sizes();

  ChainOrders orders;
  orders.vertex_image = product(sizes, 0, off_corner);
  orders.h3 = product(sizes, off_corner, off_edge);
  orders.h2 = product(sizes, off_edge, off_side);
  orders.h1 = product(sizes, off_side, sizes.size());
  orders.corner = orders.vertex_image * orders.h3;
  orders.corner_edge = orders.corner * orders.h2;
  orders.rubik = orders.corner_edge * orders.h1;

  if (options.cross_check) {
    const GroupHandle rubik = pres.group(build);
    const GroupHandle ce = action_image(rubik, pres.to_corner_edge(), build);
    const GroupHandle co = action_image(rubik, pres.to_corner(), build);
    const GroupHandle ve = action_image(rubik, pres.to_vertex(), build);
    if (rubik.order() != orders.rubik || ce.order() != orders.corner_edge ||
        co.order() != orders.corner || ve.order() != orders.vertex_image)
      throw Error(ErrorCode::IllDefinedProjection,
                  "chain orders disagree with independently built images for " + m.name());
  }
  report.orders = orders;

  std::mt19937_64 rng(options.seed ^ 0xa5a5a5a5ull);

  // (i) H1 on side edges.
  {
    std::vector<Permutation> gens;
    for (const auto &h : tower.stabilizer_generators(off_side))
      gens.push_back(restrict_block(h, off_side, S));
    const BigInt bound = power(2, E - 1);
    const bool abelian = commute_pairwise(gens);
    const bool exp2 = all_power_trivial(gens, 2);
    auto &c = report.clause[0];
    c.bound_holds = bound % orders.h1 == 0 && abelian && exp2;
    c.holds = orders.h1 == bound && abelian && exp2;
    c.detail = "|H1| = " + str(orders.h1) + ", bound 2^" + std::to_string(E - 1) +
               (abelian ? ", abelian" : ", non-abelian") + (exp2 ? ", exponent | 2" : ", exponent !| 2");
  }
  // (ii) H2 on edges.
  {
    std::vector<Permutation> gens;
    for (const auto &h : tower.stabilizer_generators(off_edge))
      gens.push_back(restrict_block(h, off_edge, E));
    const BigInt bound = factorial(E) / 2;
    const bool even = std::all_of(gens.begin(), gens.end(), [](const Permutation &g) { return g.sign() == 1; });
    auto &c = report.clause[1];
    c.bound_holds = bound % orders.h2 == 0 && even;
    c.holds = orders.h2 == bound && even;
    c.detail = "|H2| = " + str(orders.h2) + ", bound " + std::to_string(E) + "!/2" +
               (even ? ", even on edges" : ", odd generator on edges");
  }
  // (iii) H3 on corners, twists summing to zero.
  {
    std::vector<Permutation> gens;
    for (const auto &h : tower.stabilizer_generators(off_corner))
      gens.push_back(restrict_block(h, off_corner, C));
    const BigInt bound = power(3, V - 1);
    const bool abelian = commute_pairwise(gens);
    const bool exp3 = all_power_trivial(gens, 3);
    bool shift_zero = true;
    if (!gens.empty()) {
      const GroupHandle h3 = GroupHandle::from_generators(gens, build);
      for (const auto &g : gens)
        shift_zero = shift_zero && sh(m, pres.corner_dart_action(g)).value() == 0;
      for (std::size_t k = 0; k < options.samples && shift_zero; ++k)
        shift_zero = sh(m, pres.corner_dart_action(h3.random_element(rng))).value() == 0;
    }
    auto &c = report.clause[2];
    c.bound_holds = bound % orders.h3 == 0 && abelian && exp3 && shift_zero;
    c.holds = orders.h3 == bound && abelian && exp3 && shift_zero;
    c.detail = "|H3| = " + str(orders.h3) + ", bound 3^" + std::to_string(V - 1) +
               (abelian ? ", abelian" : ", non-abelian") + (exp3 ? ", exponent | 3" : ", exponent !| 3") +
               (shift_zero ? ", shift 0" : ", nonzero shift");
  }
  // (iv) vertex image.
  {
    bool even = true;
    for (const auto &g : pres.generators())
      even = even && project(g, to_vertex).sign() == 1;
    const BigInt target = report.all_odd ? factorial(V) / 2 : factorial(V);
    auto &c = report.clause[3];
    c.bound_holds = report.all_odd ? even && target % orders.vertex_image == 0
                                   : factorial(V) % orders.vertex_image == 0;
    c.holds = orders.vertex_image == target && (!report.all_odd || even);
    c.detail = "|vertex image| = " + str(orders.vertex_image) + ", expected " +
               (report.all_odd ? "A_" : "S_") + std::to_string(V);
  }

  report.pass = std::all_of(std::begin(report.clause), std::end(report.clause),
                            [](const ClauseResult &c) { return c.holds; }) &&
                orders.rubik == *report.predicted;
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<ConjectureReport> run_suite(const std::vector<Map> &maps, const VerifyOptions &options,
                                        unsigned threads)
{
  std::vector<ConjectureReport> reports(maps.size());
  auto run_one = [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    try {
      reports[i] = verify(maps[i], options);
    } catch (const Error &e) {
      ConjectureReport r;
      r.name = maps[i].name();
      r.vertices = maps[i].num_vertices();
      r.edges = maps[i].num_edges();
      r.faces = maps[i].num_faces();
      r.genus = maps[i].genus();
      r.face_sizes = maps[i].face_sizes();
      r.all_odd = maps[i].all_faces_odd();
      r.error_code = std::string(error_code_name(e.code()));
      r.error_message = e.what();
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      reports[i] = std::move(r);
    }
  };

  if (threads == 0)
    threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, maps.size())));
  if (threads <= 1) {
    for (std::size_t i = 0; i < maps.size(); ++i)
      run_one(i);
    return reports;
  }
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t)
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < maps.size(); i = next++)
          run_one(i);
      });
  }
  return reports;
}

std::vector<Map> standard_suite()
{
  std::vector<Map> maps;
  for (std::size_t n = 3; n <= 10; ++n)
    maps.push_back(prism(n));
  maps.push_back(platonic("tetrahedron"));
  maps.push_back(platonic("cube"));
  maps.push_back(platonic("dodecahedron"));
  maps.push_back(truncate(platonic("tetrahedron")));
  maps.push_back(truncate(platonic("cube")));
  maps.push_back(hex_torus(2, 3));
  return maps;
}

// ---------------------------------------------------------------- output

namespace {

struct Row {
  std::vector<std::string> cells;
};

Row make_row(const ConjectureReport &r)
{
  auto opt = [&](auto pick) -> std::string { return r.orders ? str(pick(*r.orders)) : ""; };
  std::ostringstream secs;
  secs << std::fixed << std::setprecision(3) << r.seconds;
  return Row{{r.name, std::to_string(r.vertices), std::to_string(r.edges), std::to_string(r.faces),
              r.all_odd ? "true" : "false", opt([](const ChainOrders &o) { return o.rubik; }),
              opt([](const ChainOrders &o) { return o.h1; }), opt([](const ChainOrders &o) { return o.h2; }),
              opt([](const ChainOrders &o) { return o.h3; }),
              opt([](const ChainOrders &o) { return o.vertex_image; }),
              r.predicted ? str(*r.predicted) : "", r.pass ? "true" : "false", secs.str()}};
}

const std::vector<std::string> kColumns{"name", "V",  "E",  "F",            "all_odd",   "order", "h1",
                                        "h2",   "h3", "vertex_image", "predicted", "pass",  "seconds"};

} // namespace

void write_csv(std::ostream &os, const std::vector<ConjectureReport> &reports)
{
  for (std::size_t i = 0; i < kColumns.size(); ++i)
    os << (i ? "," : "") << kColumns[i];
  os << '\n';
  for (const auto &r : reports) {
    const Row row = make_row(r);
    for (std::size_t i = 0; i < row.cells.size(); ++i)
      os << (i ? "," : "") << row.cells[i];
    os << '\n';
  }
}

void write_table(std::ostream &os, const std::vector<ConjectureReport> &reports)
{
  std::vector<Row> rows{Row{kColumns}};
  for (const auto &r : reports)
    rows.push_back(make_row(r));
  std::vector<std::size_t> width(kColumns.size(), 0);
  for (const auto &row : rows)
    for (std::size_t i = 0; i < row.cells.size(); ++i)
      width[i] = std::max(width[i], row.cells[i].size());
  for (const auto &row : rows) {
    for (std::size_t i = 0; i + 1 < row.cells.size(); ++i)
      os << std::setw(static_cast<int>(width[i])) << std::left << row.cells[i] << "  ";
    os << row.cells.back() << '\n';
  }
  for (const auto &r : reports)
    if (r.error_code)
      os << r.name << ": " << *r.error_code << ": " << r.error_message << '\n';
}

nlohmann::json report_to_json(const ConjectureReport &r)
{
  nlohmann::json j;
  j["name"] = r.name;
  j["V"] = r.vertices;
  j["E"] = r.edges;
  j["F"] = r.faces;
  j["genus"] = r.genus;
  j["face_sizes"] = r.face_sizes;
  j["all_odd"] = r.all_odd;
  if (r.orders) {
    j["order"] = str(r.orders->rubik);
    j["h1"] = str(r.orders->h1);
    j["h2"] = str(r.orders->h2);
    j["h3"] = str(r.orders->h3);
    j["vertex_image"] = str(r.orders->vertex_image);
    j["corner_edge_image"] = str(r.orders->corner_edge);
    j["corner_image"] = str(r.orders->corner);
  } else {
    for (const char *k : {"order", "h1", "h2", "h3", "vertex_image"})
      j[k] = nullptr;
  }
  j["predicted"] = r.predicted ? nlohmann::json(str(*r.predicted)) : nlohmann::json(nullptr);
  nlohmann::json clauses = nlohmann::json::array();
  for (const auto &c : r.clause)
    clauses.push_back({{"holds", c.holds}, {"bound_holds", c.bound_holds}, {"detail", c.detail}});
  j["clauses"] = clauses;
  j["pass"] = r.pass;
  if (r.error_code)
    j["error"] = {{"code", *r.error_code}, {"message", r.error_message}};
  j["seconds"] = r.seconds;
  return j;
}

nlohmann::json reports_to_json(const std::vector<ConjectureReport> &reports)
{
  nlohmann::json all = nlohmann::json::array();
  for (const auto &r : reports)
    all.push_back(report_to_json(r));
  return all;
}

} // namespace rubikmap

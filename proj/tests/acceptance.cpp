// Acceptance run: one PASS/FAIL line per criterion, with wall time and
// limit. Exit status is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "rubikmap/builders.hpp"
#include "rubikmap/error.hpp"
#include "rubikmap/map_io.hpp"
#include "rubikmap/orientation.hpp"
#include "rubikmap/rubik.hpp"
#include "rubikmap/verifier.hpp"

using namespace rubikmap;

namespace {

BigInt factorial(unsigned n)
{
  BigInt r = 1;
  for (unsigned k = 2; k <= n; ++k)
    r *= k;
  return r;
}

BigInt power(unsigned base, unsigned exp)
{
  BigInt r = 1;
  for (unsigned k = 0; k < exp; ++k)
    r *= base;
  return r;
}

// Collects the first few failure notes of a criterion.
struct Notes {
  std::vector<std::string> lines;
  bool ok = true;
  void fail(const std::string &what)
  {
    ok = false;
    if (lines.size() < 5)
      lines.push_back(what);
  }
  void expect(bool cond, const std::string &what)
  {
    if (!cond)
      fail(what);
  }
};

int failures = 0;

void criterion(const std::string &name, double limit_seconds, const std::function<void(Notes &)> &body)
{
  Notes notes;
  auto start = std::chrono::steady_clock::now();
  try {
    body(notes);
  } catch (const Error &e) {
    notes.fail(std::string(error_code_name(e.code())) + ": " + e.what());
  } catch (const std::exception &e) {
    notes.fail(e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs >= limit_seconds)
    notes.fail("over the time limit");
  if (!notes.ok)
    ++failures;
  std::ostringstream line;
  line << (notes.ok ? "PASS " : "FAIL ") << std::left << std::setw(22) << name << std::fixed
       << std::setprecision(3) << secs << " s";
  if (limit_seconds > 0)
    line << " (limit " << std::defaultfloat << limit_seconds << " s)";
  std::cout << line.str() << '\n';
  for (const auto &n : notes.lines)
    std::cout << "     " << n << '\n';
  std::cout.flush();
}

std::multiset<std::vector<std::size_t>> cycle_types(const std::vector<Permutation> &gens)
{
  std::multiset<std::vector<std::size_t>> out;
  for (const auto &g : gens)
    out.insert(g.cycle_type());
  return out;
}

Permutation random_word(const std::vector<Permutation> &gens, std::size_t length, std::mt19937_64 &rng)
{
  Permutation g(gens.front().degree());
  for (std::size_t i = 0; i < length; ++i) {
    const auto &x = gens[rng() % gens.size()];
    g = g * (rng() % 2 ? x : x.inverse());
  }
  return g;
}

std::vector<Map> conjecture_maps()
{
  std::vector<Map> maps;
  for (std::size_t n = 3; n <= 10; ++n)
    maps.push_back(prism(n));
  maps.push_back(platonic("tetrahedron"));
  maps.push_back(platonic("cube"));
  maps.push_back(platonic("dodecahedron"));
  maps.push_back(truncate(platonic("tetrahedron")));
  maps.push_back(truncate(platonic("cube")));
  return maps;
}

// Generator listing of Rubik(Prism_3) as published, second generator
// corrected from (28,27,25) to (29,27,25).
const char *kPrism3Listing =
    "Group([(31,35,33)(36,34,32)(3,19,11)(5,21,13)(8,24,16),"
    "(29,27,25)(30,28,26)(6,14,22)(4,12,20)(1,9,17),"
    "(1,6,8,3)(4,7,5,2)(17,35,16,25)(19,31,14,27)(18,36,15,26),"
    "(19,17,22,24)(18,20,23,21)(7,28,10,34)(8,27,9,33)(6,29,11,35),"
    "(9,14,16,11)(12,15,13,10)(1,31,24,29)(2,32,23,30)(3,33,22,25)])";

} // namespace

int main()
{
  criterion("cube_order", 10, [](Notes &n) {
    const std::string expected = "43252003274489856000";
    Map cube = platonic("cube");
    auto order = RubikPresentation(cube).group().order();
    BigInt formula = power(2, 11) * (factorial(12) / 2) * power(3, 7) * factorial(8);
    n.expect(order.str() == expected, "order " + order.str());
    n.expect(predicted_order(cube) == order, "predicted " + predicted_order(cube).str());
    n.expect(formula.str() == expected, "formula " + formula.str());
  });

  criterion("prism3_cross_check", 5, [](Notes &n) {
    auto listed = parse_script_generators(kPrism3Listing, 36);
    RubikPresentation p(prism(3));
    auto a = GroupHandle::from_generators(listed).order();
    auto b = p.group().order();
    n.expect(a == b, "listed order " + a.str() + " vs constructed " + b.str());
    n.expect(cycle_types(listed) == cycle_types(p.generators()), "generator cycle types differ");
  });

  criterion("conjecture_suite", 600, [](Notes &n) {
    auto reports = run_suite(conjecture_maps());
    for (const auto &r : reports) {
      for (int c = 0; c < 4; ++c)
        n.expect(r.clause[c].holds && r.clause[c].bound_holds,
                 r.name + " clause " + std::to_string(c + 1) + ": " + r.clause[c].detail);
      n.expect(r.pass, r.name + " did not pass" + (r.error_code ? " (" + *r.error_code + ")" : ""));
      n.expect(r.orders && r.predicted && r.orders->rubik == *r.predicted,
               r.name + " order differs from prediction");
    }
    n.expect(reports.size() == 13, "expected 13 maps");
  });

  criterion("megaminx", 60, [](Notes &n) {
    auto order = RubikPresentation(platonic("dodecahedron")).group().order();
    BigInt expected = power(2, 29) * (factorial(30) / 2) * power(3, 19) * (factorial(20) / 2);
    n.expect(order == expected, "order " + order.str() + " expected " + expected.str());
  });

  criterion("lemma_suite", 60, [](Notes &n) {
    for (const auto &name : catalog_names()) {
      RubikPresentation p(catalog_map(name));
      for (std::size_t f = 0; f < p.generators().size(); ++f) {
        const auto &g = p.generators()[f];
        std::string where = name + " face " + std::to_string(f + 1);
        n.expect(project(g, p.to_side_edge()).sign() == 1, where + ": odd on side edges");
        n.expect(project(g, p.to_vertex()).sign() == project(g, p.to_edge()).sign(),
                 where + ": vertex and edge signatures differ");
      }
    }
  });

  criterion("shift_suite", 120, [](Notes &n) {
    std::mt19937_64 rng(0x5117);
    for (const auto &name : catalog_names()) {
      RubikPresentation p(catalog_map(name));
      const Map &m = p.map();
      const auto &gens = p.generators();
      for (std::size_t f = 0; f < gens.size(); ++f)
        n.expect(sh(m, p.corner_dart_action(gens[f])) == Shift(0),
                 name + ": generator " + std::to_string(f + 1) + " has nonzero shift");
      for (int i = 0; i < 100; ++i)
        n.expect(sh(m, p.corner_dart_action(random_word(gens, 40, rng))) == Shift(0),
                 name + ": random word with nonzero shift");
      for (std::size_t v = 0; v < m.num_vertices(); ++v)
        n.expect(sh(m, single_vertex_twist(m, v)) == Shift(1), name + ": twist shift is not 1");

      // random elements of OrMap(M): Rubik corner actions mixed with twists
      auto random_ormap = [&] {
        Permutation f = p.corner_dart_action(random_word(gens, 20, rng));
        auto twists = 1 + rng() % 4;
        for (std::uint64_t k = 0; k < twists; ++k)
          f = f * single_vertex_twist(m, rng() % m.num_vertices());
        return f * p.corner_dart_action(random_word(gens, 5, rng));
      };
      for (int i = 0; i < 20; ++i) {
        auto f = random_ormap(), g = random_ormap();
        n.expect(sh(m, f * g) == sh(m, f) + sh(m, g), name + ": shift not additive");
      }
      for (int i = 0; i < 20; ++i) {
        auto f = random_ormap();
        CornerSelection sel;
        for (const auto &t : m.vertices())
          sel.push_back(t[rng() % 3]);
        n.expect(sh(m, f, sel) == sh(m, f), name + ": shift depends on the corner selection");
      }
    }
  });

  criterion("oracle_equivalence", 120, [](Notes &n) {
    RubikPresentation th(theta());
    auto tg = th.group();
    auto bfs = enumerate_all(tg.generators(), 10'000'000);
    n.expect(BigInt(bfs) == tg.order(), "theta BFS " + std::to_string(bfs) + " vs " + tg.order().str());

    RubikPresentation p(prism(3));
    auto g = p.group();
    std::mt19937_64 rng(1000);
    for (int i = 0; i < 1000; ++i) {
      auto x = i % 2 ? g.random_element(rng) : random_word(g.generators(), 60, rng);
      if (!g.contains(x)) {
        n.fail("member rejected");
        continue;
      }
      n.expect(g.factor(x).evaluate(g.generators(), g.degree()) == x, "factor round trip failed");
    }
  });

  criterion("determinism", 0, [](Notes &n) {
    VerifyOptions a, b;
    a.seed = 1;
    b.seed = 0x123456789abcdefull;
    auto maps = standard_suite();
    auto ra = run_suite(maps, a), rb = run_suite(maps, b);
    for (auto *rs : {&ra, &rb})
      for (auto &r : *rs)
        r.seconds = 0;
    n.expect(reports_to_json(ra) == reports_to_json(rb), "reports differ between seeds");
  });

  std::cout << (failures ? "FAILED " : "ALL PASSED ") << "(" << failures << " failing)\n";
  return failures;
}

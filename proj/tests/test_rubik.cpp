#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "rubikmap/builders.hpp"
#include "rubikmap/error.hpp"
#include "rubikmap/map_io.hpp"
#include "rubikmap/orientation.hpp"
#include "rubikmap/rubik.hpp"

using namespace rubikmap;
using Sizes = std::vector<std::size_t>;

namespace {

// Generator listing for Rubik(Prism_3) as printed in the literature, with
// the second generator read as (29,27,25) instead of (28,27,25).
const char *kPrism3Listing =
    "RubikPrism3:=Group([(31,35,33)(36,34,32)(3,19,11)(5,21,13)(8,24,16),"
    "(29,27,25)(30,28,26)(6,14,22)(4,12,20)(1,9,17),"
    "(1,6,8,3)(4,7,5,2)(17,35,16,25)(19,31,14,27)(18,36,15,26),"
    "(19,17,22,24)(18,20,23,21)(7,28,10,34)(8,27,9,33)(6,29,11,35),"
    "(9,14,16,11)(12,15,13,10)(1,31,24,29)(2,32,23,30)(3,33,22,25)]);";

std::multiset<Sizes> cycle_types(const std::vector<Permutation> &gens)
{
  std::multiset<Sizes> out;
  for (const auto &g : gens)
    out.insert(g.cycle_type());
  return out;
}

} // namespace

TEST_CASE("prism3 presentation")
{
  RubikPresentation p(prism(3));
  CHECK(p.generators().size() == 5);
  CHECK(p.degree() == 36);
  CHECK(p.num_corners() == 18);
  CHECK(p.num_side_edges() == 18);

  const Map &m = p.map();
  for (std::size_t f = 0; f < m.num_faces(); ++f) {
    std::size_t size = m.faces()[f].size();
    CHECK(p.generators()[f].cycle_type() == Sizes(5, size));
    CHECK(p.generators()[f].moved_points() == 5 * size);
  }
}

TEST_CASE("cube and theta presentations")
{
  RubikPresentation cube(platonic("cube"));
  CHECK(cube.generators().size() == 6);
  CHECK(cube.degree() == 48);

  RubikPresentation th(theta());
  CHECK(th.generators().size() == 3);
  CHECK(th.degree() == 12);
  for (const auto &g : th.generators())
    CHECK(g.order() == 2);
}

TEST_CASE("point numbering is a bijection with darts")
{
  RubikPresentation p(prism(5));
  std::vector<bool> seen(p.degree(), false);
  for (Dart d = 0; d < p.map().num_darts(); ++d) {
    CHECK(p.corner_dart(p.corner_point(d)) == d);
    CHECK(p.side_edge_dart(p.side_edge_point(d)) == d);
    CHECK(p.corner_point(d) < p.num_corners());
    CHECK(p.side_edge_point(d) >= p.num_corners());
    seen[p.corner_point(d)] = seen[p.side_edge_point(d)] = true;
  }
  CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
  // face-major: the first face's boundary opens the corner block
  const auto &f0 = p.map().faces()[0];
  for (std::size_t i = 0; i < f0.size(); ++i)
    CHECK(p.corner_point(f0[i]) == i);
}

TEST_CASE("side movement follows its definition")
{
  // corners: d -> phi(d), sigma(d) -> sigma(phi(d)), sigma^2 likewise;
  // side edges: d -> phi(d), alpha(d) -> alpha(phi(d)).
  for (const auto &name : catalog_names()) {
    CAPTURE(name);
    Map m = catalog_map(name);
    RubikPresentation p(m);
    for (std::size_t f = 0; f < m.num_faces(); ++f) {
      const auto &g = p.generators()[f];
      for (Dart d : m.faces()[f]) {
        Dart e = m.phi(d);
        CHECK(g[p.corner_point(d)] == p.corner_point(e));
        CHECK(g[p.corner_point(m.sigma(d))] == p.corner_point(m.sigma(e)));
        CHECK(g[p.corner_point(m.sigma(m.sigma(d)))] == p.corner_point(m.sigma(m.sigma(e))));
        CHECK(g[p.side_edge_point(d)] == p.side_edge_point(e));
        CHECK(g[p.side_edge_point(m.alpha(d))] == p.side_edge_point(m.alpha(e)));
      }
    }
  }
}

TEST_CASE("generator structure across the catalog")
{
  for (const auto &name : catalog_names()) {
    CAPTURE(name);
    RubikPresentation p(catalog_map(name));
    const Map &m = p.map();
    for (std::size_t f = 0; f < m.num_faces(); ++f) {
      const auto &g = p.generators()[f];
      long long size = static_cast<long long>(m.faces()[f].size());
      CHECK(g.pow(size).is_identity());
      CHECK(g.order() == size);
      CHECK(g.moved_points() == 5 * static_cast<std::size_t>(size));
      // blocks
      for (Point x = 0; x < p.degree(); ++x)
        CHECK((x < p.num_corners()) == (g[x] < p.num_corners()));
      // side edges: two p-cycles
      CHECK(project(g, p.to_side_edge()).cycle_type() == Sizes(2, size));
      // vertex action: one p-cycle
      auto v = project(g, p.to_vertex());
      CHECK(v.cycle_type() == Sizes{static_cast<std::size_t>(size)});
      CHECK(v.sign() == (size % 2 ? 1 : -1));
      CHECK(is_ormap(m, p.corner_dart_action(g)));
    }
  }
}

TEST_CASE("signature lemma")
{
  for (const auto &name : catalog_names()) {
    CAPTURE(name);
    RubikPresentation p(catalog_map(name));
    for (const auto &g : p.generators()) {
      CHECK(project(g, p.to_side_edge()).sign() == 1);
      CHECK(project(g, p.to_vertex()).sign() == project(g, p.to_edge()).sign());
    }
  }
}

TEST_CASE("random words preserve the blocks")
{
  RubikPresentation p(prism(4));
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    Permutation g(p.degree());
    for (int k = 0; k < 40; ++k)
      g = g * p.generators()[rng() % p.generators().size()];
    for (Point x = 0; x < p.degree(); ++x)
      CHECK((x < p.num_corners()) == (g[x] < p.num_corners()));
    CHECK(is_ormap(p.map(), p.corner_dart_action(g)));
  }
}

TEST_CASE("unknown face")
{
  RubikPresentation p(prism(3));
  try {
    p.side_movement(5);
    FAIL("no exception");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::FaceNotInMap);
  }
  CHECK_THROWS_AS(side_movement(prism(3), 99), Error);
  CHECK(side_movement(prism(3), 2) == p.side_movement(2));
}

TEST_CASE("published prism3 generators")
{
  auto listed = parse_script_generators(kPrism3Listing, 36);
  REQUIRE(listed.size() == 5);
  RubikPresentation p(prism(3));
  CHECK(cycle_types(listed) == cycle_types(p.generators()));
  CHECK(GroupHandle::from_generators(listed).order() == p.group().order());
  CHECK(p.group().order().str() == "8126654054400");
  // As printed, point 28 occurs in two cycles. Read as a cycle product it
  // is a valid permutation, but not one with five disjoint 3-cycles, and
  // point 29 would be left out of the listing entirely.
  std::string typo = kPrism3Listing;
  typo.replace(typo.find("(29,27,25)"), 10, "(28,27,25)");
  auto misprint = parse_script_generators(typo, 36);
  CHECK(misprint[1].cycle_type() != Sizes(5, 3));
  CHECK(listed[1].cycle_type() == Sizes(5, 3));
}

TEST_CASE("script export")
{
  RubikPresentation p(prism(3));
  std::string text = script_text(p);
  CHECK(text == script_text(RubikPresentation(prism(3))));
  CHECK(text.find("Rubik_prism3 := Group([") != std::string::npos);
  CHECK(text.rfind("# ", 0) == 0);

  auto back = parse_script_generators(text, p.degree());
  CHECK(back == p.generators());
  CHECK(GroupHandle::from_generators(back).order() == p.group().order());

  std::multiset<Sizes> expected{Sizes(5, 3), Sizes(5, 3), Sizes(5, 4), Sizes(5, 4), Sizes(5, 4)};
  CHECK(cycle_types(back) == expected);

  auto path = std::filesystem::temp_directory_path() / "rubikmap_test_prism3.g";
  export_script(p, path);
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == text);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(export_script(p, "/nonexistent/dir/x.g"), Error);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <thread>

#include "rubikmap/builders.hpp"
#include "rubikmap/error.hpp"
#include "rubikmap/session.hpp"

using namespace rubikmap;

namespace {

ErrorCode code_of(auto &&fn)
{
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("no exception");
  return ErrorCode::MalformedInput;
}

// Stickers obtained by replaying the history on a fresh solved puzzle.
std::vector<std::size_t> replayed(const PuzzleModel &model, const PuzzleState &state)
{
  PuzzleState fresh = solved_state(model, state.map_name);
  apply(fresh, current_element(state, model));
  return fresh.stickers;
}

std::vector<std::size_t> sorted(std::vector<std::size_t> v)
{
  std::sort(v.begin(), v.end());
  return v;
}

} // namespace

TEST_CASE("solved state colours every sticker by its face")
{
  PuzzleModel model(prism(3));
  auto s = solved_state(model, "prism3");
  CHECK(is_solved(s, model));
  CHECK(s.stickers.size() == 36);
  std::vector<std::size_t> per_face(5, 0);
  for (auto f : s.stickers)
    ++per_face[f];
  // a p-gon carries p corner and p side-edge stickers
  CHECK(per_face == std::vector<std::size_t>{6, 6, 8, 8, 8});
}

TEST_CASE("p turns of a p-gon restore the state")
{
  SessionStore store;
  auto id = store.create("prism3").id;
  auto model = store.model("prism3");
  for (std::size_t f = 0; f < model->face_sizes.size(); ++f) {
    auto before = store.get(id).state.stickers;
    SessionView v;
    for (std::size_t k = 0; k < model->face_sizes[f]; ++k) {
      v = store.move(id, f, 1);
      if (k + 1 < model->face_sizes[f])
        CHECK(v.state.stickers != before);
    }
    CHECK(v.state.stickers == before);
    CHECK(v.solved);
  }
}

TEST_CASE("history reproduces the stickers after every request")
{
  SessionStore store;
  auto id = store.create("cube").id;
  auto model = store.model("cube");
  auto multiset = sorted(model->solved);
  auto check = [&](const SessionView &v) {
    CHECK(replayed(*model, v.state) == v.state.stickers);
    CHECK(sorted(v.state.stickers) == multiset);
  };
  check(store.move(id, 0, 1));
  check(store.move(id, 3, -1));
  check(store.move(id, 2, 6));
  check(store.scramble(id, 5, 40));
  check(store.move(id, 5, 2));
  check(store.reset(id));
  CHECK(store.get(id).solved);
  CHECK(store.get(id).state.history.empty());
}

TEST_CASE("solve returns the puzzle to solved and leaves the session alone")
{
  SessionStore store;
  for (const char *name : {"prism3", "cube", "tetrahedron"}) {
    CAPTURE(name);
    auto id = store.create(name).id;
    CHECK(store.solve(id).empty());
    auto scrambled = store.scramble(id, 77, 30);
    Word w = store.solve(id);
    CHECK(store.get(id).state.stickers == scrambled.state.stickers);
    SessionView v = scrambled;
    for (const auto &l : w.letters())
      v = store.move(id, l.generator, l.exponent);
    CHECK(v.solved);
    CHECK(current_element(v.state, *store.model(name)).is_identity());
  }
}

TEST_CASE("scrambles are reproducible")
{
  PuzzleModel model(platonic("cube"));
  CHECK(scramble_word(model, 3, 25) == scramble_word(model, 3, 25));
  CHECK(scramble_word(model, 3, 25) != scramble_word(model, 4, 25));
  auto w = scramble_word(model, 3, 25);
  CHECK(w.letters().size() == 25);
  for (std::size_t i = 0; i < w.letters().size(); ++i) {
    const auto &l = w.letters()[i];
    CHECK(l.exponent != 0);
    CHECK(l.generator < 6);
    if (i)
      CHECK(l.generator != w.letters()[i - 1].generator);
  }
  CHECK(scramble_word(model, 3, 0).empty());
}

TEST_CASE("errors")
{
  SessionStore store;
  auto id = store.create("prism3").id;
  CHECK(code_of([&] { store.get("nope"); }) == ErrorCode::UnknownSession);
  CHECK(code_of([&] { store.move("nope", 0, 1); }) == ErrorCode::UnknownSession);
  CHECK(code_of([&] { store.solve("nope"); }) == ErrorCode::UnknownSession);
  CHECK(code_of([&] { store.move(id, 5, 1); }) == ErrorCode::UnknownFace);
  CHECK(code_of([&] { store.create("octahedron"); }) == ErrorCode::UnknownMap);
  CHECK(store.get(id).solved);
}

TEST_CASE("session ids are unique")
{
  SessionStore store;
  std::set<std::string> ids;
  for (int i = 0; i < 20; ++i)
    ids.insert(store.create("prism3").id);
  CHECK(ids.size() == 20);
}

TEST_CASE("sessions run concurrently")
{
  SessionStore store;
  std::vector<std::string> ids;
  for (int i = 0; i < 4; ++i)
    ids.push_back(store.create(i % 2 ? "cube" : "prism4").id);
  // four threads per session hammer it with moves
  std::vector<std::jthread> workers;
  for (std::size_t t = 0; t < 16; ++t)
    workers.emplace_back([&, t] {
      const auto &id = ids[t % ids.size()];
      for (int k = 0; k < 200; ++k)
        store.move(id, (t + static_cast<std::size_t>(k)) % 6, 1 + k % 3);
    });
  workers.clear();
  for (const auto &id : ids) {
    auto v = store.get(id);
    auto model = store.model(v.state.map_name);
    CHECK(replayed(*model, v.state) == v.state.stickers);
    auto w = store.solve(id);
    for (const auto &l : w.letters())
      v = store.move(id, l.generator, l.exponent);
    CHECK(v.solved);
  }
}

TEST_CASE("json views")
{
  SessionStore store;
  auto v = store.move(store.create("prism3").id, 2, 1);
  auto doc = session_to_json(v);
  CHECK(doc["map"] == "prism3");
  CHECK(doc["history"] == "F3");
  CHECK(doc["stickers"].size() == 36);
  CHECK(doc["solved"] == false);

  auto m = model_to_json(*store.model("prism3"));
  CHECK(m["order"] == "8126654054400");
  CHECK(m["points"].size() == 36);
  CHECK(m["face_sizes"] == nlohmann::json::array({3, 3, 4, 4, 4}));
}

#include "rubikmap/session.hpp"

#include <random>

#include "rubikmap/error.hpp"
#include "rubikmap/map_io.hpp"

namespace rubikmap {

PuzzleModel::PuzzleModel(Map map)
    : presentation(std::move(map)), group(presentation.group())
{
  const Map &m = presentation.map();
  solved.resize(presentation.degree());
  for (Dart d = 0; d < m.num_darts(); ++d) {
    solved[presentation.corner_point(d)] = m.face_of(d);
    solved[presentation.side_edge_point(d)] = m.face_of(d);
  }
  for (const auto &f : m.faces())
    face_sizes.push_back(f.size());
}

PuzzleState solved_state(const PuzzleModel &model, std::string map_name)
{
  return PuzzleState{std::move(map_name), model.solved, Word{}};
}

void apply(PuzzleState &state, const Permutation &g)
{
  if (g.degree() != state.stickers.size())
    throw Error(ErrorCode::DomainMismatch, "move degree does not match the puzzle");
  std::vector<std::size_t> next(state.stickers.size());
  for (Point x = 0; x < next.size(); ++x)
    next[g[x]] = state.stickers[x];
  state.stickers = std::move(next);
}

void apply(PuzzleState &state, const PuzzleModel &model, const Word &word)
{
  const auto &gens = model.presentation.generators();
  for (const Letter &l : word.letters()) {
    if (l.generator >= gens.size())
      throw Error(ErrorCode::UnknownFace, "face " + std::to_string(l.generator + 1) + " not in map");
    apply(state, gens[l.generator].pow(l.exponent));
  }
  state.history.append(word, model.group.generator_orders());
}

Permutation current_element(const PuzzleState &state, const PuzzleModel &model)
{
  return state.history.evaluate(model.presentation.generators(), model.presentation.degree());
}

bool is_solved(const PuzzleState &state, const PuzzleModel &model)
{
  return state.stickers == model.solved;
}

Word scramble_word(const PuzzleModel &model, std::uint64_t seed, std::size_t length)
{
  // Plain modular reduction of the engine output keeps the word identical
  // across standard library implementations.
  std::mt19937_64 rng(seed);
  const auto &sizes = model.face_sizes;
  std::vector<Letter> letters;
  std::size_t previous = sizes.size();
  while (letters.size() < length) {
    std::size_t face = rng() % sizes.size();
    if (face == previous && sizes.size() > 1)
      continue;
    long long p = static_cast<long long>(sizes[face]);
    long long e = p > 1 ? 1 + static_cast<long long>(rng() % static_cast<std::uint64_t>(p - 1)) : 1;
    if (e > p / 2)
      e -= p;
    letters.push_back({face, e});
    previous = face;
  }
  return Word(std::move(letters));
}

Word solve_word(const PuzzleState &state, const PuzzleModel &model)
{
  return model.group.factor(current_element(state, model)).inverse();
}

nlohmann::json model_to_json(const PuzzleModel &model)
{
  const auto &pres = model.presentation;
  const Map &m = pres.map();
  nlohmann::json faces = nlohmann::json::array();
  for (const auto &f : m.faces()) {
    nlohmann::json darts = nlohmann::json::array();
    for (Dart d : f)
      darts.push_back(d + 1);
    faces.push_back(std::move(darts));
  }
  nlohmann::json points = nlohmann::json::array();
  for (Point p = 0; p < pres.degree(); ++p) {
    bool corner = p < pres.num_corners();
    Dart d = corner ? pres.corner_dart(p) : pres.side_edge_dart(p);
    nlohmann::json pt{{"point", p + 1},
                      {"kind", corner ? "corner" : "side_edge"},
                      {"dart", d + 1},
                      {"face", m.face_of(d) + 1}};
    if (corner)
      pt["vertex"] = m.vertex_of(d) + 1;
    else
      pt["edge"] = m.edge_of(d) + 1;
    points.push_back(std::move(pt));
  }
  return {{"name", m.name()},
          {"map", map_to_json(m)},
          {"vertices", m.num_vertices()},
          {"edges", m.num_edges()},
          {"faces", m.num_faces()},
          {"genus", m.genus()},
          {"face_darts", std::move(faces)},
          {"face_sizes", model.face_sizes},
          {"points", std::move(points)},
          {"order", model.group.order().str()}};
}

nlohmann::json session_to_json(const SessionView &view)
{
  nlohmann::json stickers = nlohmann::json::array();
  for (std::size_t f : view.state.stickers)
    stickers.push_back(f + 1);
  auto created = std::chrono::duration_cast<std::chrono::milliseconds>(
      view.created.time_since_epoch());
  return {{"id", view.id},
          {"map", view.state.map_name},
          {"created_ms", created.count()},
          {"stickers", std::move(stickers)},
          {"history", view.state.history.to_string()},
          {"moves", view.state.history.letters().size()},
          {"solved", view.solved}};
}

std::vector<std::string> SessionStore::map_names() const
{
  return catalog_names();
}

std::shared_ptr<const PuzzleModel> SessionStore::model(const std::string &map_name)
{
  std::lock_guard lock(models_mutex_);
  auto it = models_.find(map_name);
  if (it != models_.end())
    return it->second;
  auto model = std::make_shared<const PuzzleModel>(catalog_map(map_name));
  models_.emplace(map_name, model);
  return model;
}

SessionView SessionStore::view(const Session &s)
{
  return SessionView{s.id, s.created, s.state, is_solved(s.state, *s.model)};
}

SessionView SessionStore::create(const std::string &map_name)
{
  auto m = model(map_name);
  auto s = std::make_shared<Session>();
  s->created = std::chrono::system_clock::now();
  s->model = m;
  s->state = solved_state(*m, map_name);
  {
    std::lock_guard lock(sessions_mutex_);
    s->id = "s" + std::to_string(next_id_++);
    sessions_.emplace(s->id, s);
  }
  return view(*s);
}

std::shared_ptr<SessionStore::Session> SessionStore::find(const std::string &id)
{
  std::lock_guard lock(sessions_mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end())
    throw Error(ErrorCode::UnknownSession, "no session '" + id + "'");
  return it->second;
}

SessionView SessionStore::get(const std::string &id)
{
  auto s = find(id);
  std::lock_guard lock(s->mutex);
  return view(*s);
}

SessionView SessionStore::move(const std::string &id, std::size_t face, long long exponent)
{
  auto s = find(id);
  std::lock_guard lock(s->mutex);
  if (face >= s->model->face_sizes.size())
    throw Error(ErrorCode::UnknownFace, "face " + std::to_string(face + 1) + " not in map");
  if (exponent != 0)
    apply(s->state, *s->model, Word(std::vector<Letter>{Letter{face, exponent}}));
  return view(*s);
}

SessionView SessionStore::scramble(const std::string &id, std::uint64_t seed, std::size_t length)
{
  auto s = find(id);
  std::lock_guard lock(s->mutex);
  apply(s->state, *s->model, scramble_word(*s->model, seed, length));
  return view(*s);
}

SessionView SessionStore::reset(const std::string &id)
{
  auto s = find(id);
  std::lock_guard lock(s->mutex);
  s->state = solved_state(*s->model, s->state.map_name);
  return view(*s);
}

Word SessionStore::solve(const std::string &id)
{
  auto s = find(id);
  PuzzleState snapshot;
  {
    std::lock_guard lock(s->mutex);
    snapshot = s->state;
  }
  return solve_word(snapshot, *s->model);
}

} // namespace rubikmap

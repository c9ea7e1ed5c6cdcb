#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "json.hpp"

#include "rubikmap/group.hpp"
#include "rubikmap/rubik.hpp"

namespace rubikmap {

/// Presentation and group of one map, shared read-only by every session
/// playing on it.
struct PuzzleModel {
  explicit PuzzleModel(Map map);

  RubikPresentation presentation;
  GroupHandle group;
  /// Face label (0-based face index) of every point in the solved state.
  std::vector<std::size_t> solved;
  std::vector<std::size_t> face_sizes; // in canonical face order
};

/// Sticker colouring by home face plus the moves that produced it.
struct PuzzleState {
  std::string map_name;
  std::vector<std::size_t> stickers; // point -> face label, 0-based
  Word history;
};

PuzzleState solved_state(const PuzzleModel &model, std::string map_name);

/// Moves the sticker on point x to g(x).
void apply(PuzzleState &state, const Permutation &g);

/// Word of one-move letters (F1..Fk) applied left to right.
void apply(PuzzleState &state, const PuzzleModel &model, const Word &word);

/// Group element taking the solved state to `state`.
Permutation current_element(const PuzzleState &state, const PuzzleModel &model);

bool is_solved(const PuzzleState &state, const PuzzleModel &model);

/// `length` random moves, each a face and a nonzero power below its size.
/// Identical for identical (model, seed, length).
Word scramble_word(const PuzzleModel &model, std::uint64_t seed, std::size_t length);

/// Word returning the puzzle in `state` to solved. Not minimal.
Word solve_word(const PuzzleState &state, const PuzzleModel &model);

nlohmann::json model_to_json(const PuzzleModel &model);

struct SessionView {
  std::string id;
  std::chrono::system_clock::time_point created;
  PuzzleState state;
  bool solved = false;
};

nlohmann::json session_to_json(const SessionView &view);

/// In-memory sessions. Safe to call from many threads; operations on one
/// session are serialized, different sessions proceed in parallel.
class SessionStore {
public:
  /// Maps must be catalog names; models are built on first use.
  std::vector<std::string> map_names() const;
  std::shared_ptr<const PuzzleModel> model(const std::string &map_name);

  SessionView create(const std::string &map_name);
  SessionView get(const std::string &id);
  /// `face` is 0-based. Throws UnknownFace.
  SessionView move(const std::string &id, std::size_t face, long long exponent);
  SessionView scramble(const std::string &id, std::uint64_t seed, std::size_t length);
  SessionView reset(const std::string &id);
  /// Leaves the session untouched.
  Word solve(const std::string &id);

private:
  struct Session {
    std::string id;
    std::chrono::system_clock::time_point created;
    std::shared_ptr<const PuzzleModel> model;
    std::mutex mutex;
    PuzzleState state;
  };

  std::shared_ptr<Session> find(const std::string &id);
  static SessionView view(const Session &s);

  std::mutex models_mutex_;
  std::map<std::string, std::shared_ptr<const PuzzleModel>> models_;

  std::mutex sessions_mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::uint64_t next_id_ = 1;
};

} // namespace rubikmap

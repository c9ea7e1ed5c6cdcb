#pragma once

// Internal stabilizer chain shared by group.cpp and factor.cpp.

#include <cstdint>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "rubikmap/group.hpp"

namespace rubikmap::detail {

struct Level {
  Point base = 0;
  std::vector<std::int32_t> orbit_index; // -1 when the point is not in the orbit
  std::vector<Point> orbit;
  std::vector<Permutation> transversal; // transversal[k] maps base to orbit[k]
  std::vector<Permutation> transversal_inv;
  std::vector<std::size_t> generators; // indices into Chain::strong
};

struct Chain {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<long long> generator_orders;
  std::vector<Permutation> strong;
  std::vector<Level> levels;
  std::vector<Point> base;
  BigInt order;

  void add_level(Point point);

  // `h` fixes the base points of levels [0, level) and moves the base point
  // of `level`.
  void add_strong_generator(Permutation h, std::size_t level);

  // Residue of `g` and the first level at which it left the chain
  // (levels.size() when every level was passed).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from = 0) const;

private:
  void extend_orbit(Level &level, std::size_t new_generator);
};

class WordTable;

struct FactorCache {
  FactorCache();
  ~FactorCache();
  std::once_flag once;
  std::unique_ptr<WordTable> table;
};

// Builds the tables on first use; thread-safe.
const WordTable &word_table(FactorCache &cache, const Chain &chain);
Word factor_with_table(const WordTable &table, const Chain &chain, const Permutation &p);

} // namespace rubikmap::detail

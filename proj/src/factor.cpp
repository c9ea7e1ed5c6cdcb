// Word tables for factorization: a transversal per chain level whose
// entries carry short words in the original generators, filled and then
// shortened by sifting words (Minkwitz's method). Membership and orders
// never depend on these tables; they only produce words.

#include <algorithm>
#include <random>

#include "chain.hpp"
#include "rubikmap/error.hpp"

namespace rubikmap::detail {

class WordTable {
public:
  struct Entry {
    Word word;
    Permutation perm;
    Permutation inv;
    bool filled = false;
  };

  WordTable(const Chain &chain, std::uint64_t seed);

  const std::vector<std::vector<Entry>> &levels() const noexcept { return levels_; }

private:
  // Sift a word through the table, storing it (or a residue) wherever it
  // fills an empty slot or beats the stored word. Returns true when an
  // empty slot was filled.
  bool sift_in(Word word, Permutation perm, std::size_t max_length);

  Word random_word(std::size_t length);
  void improve(std::size_t rounds, std::size_t max_length);

  const Chain &chain_;
  std::mt19937_64 rng_;
  std::vector<std::vector<Entry>> levels_;
  std::size_t missing_ = 0;
};

WordTable::WordTable(const Chain &chain, std::uint64_t seed) : chain_(chain), rng_(seed)
{
  for (const auto &level : chain.levels) {
    std::vector<Entry> entries(level.orbit.size());
    entries[0] = {Word{}, Permutation(chain.degree), Permutation(chain.degree), true};
    missing_ += level.orbit.size() - 1;
    levels_.push_back(std::move(entries));
  }
  if (missing_ == 0)
    return;

  constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();
  for (std::size_t g = 0; g < chain.generators.size(); ++g) {
    const long long ord = chain.generator_orders[g];
    const long long top = ord > 0 ? std::min<long long>(ord - 1, 8) : 8;
    for (long long e = 1; e <= top; ++e) {
      Word w;
      w.append(Letter{g, e}, chain.generator_orders);
      Permutation p = w.evaluate(chain.generators, chain.degree);
      sift_in(std::move(w), std::move(p), kUnbounded);
    }
  }

  // Fill with random walks. Lengths grow while progress stalls, which
  // pushes the walks toward the uniform distribution.
  std::size_t walk = 8;
  std::size_t stalled = 0;
  while (missing_ > 0) {
    std::uniform_int_distribution<std::size_t> len(1, walk);
    Word w = random_word(len(rng_));
    Permutation p = w.evaluate(chain.generators, chain.degree);
    if (sift_in(std::move(w), std::move(p), kUnbounded)) {
      stalled = 0;
    } else if (++stalled > 64) {
      walk = std::min<std::size_t>(walk * 2, 1u << 12);
      stalled = 0;
      improve(1, kUnbounded);
    }
  }

  std::size_t longest = 0;
  for (const auto &level : levels_)
    for (const auto &e : level)
      longest = std::max(longest, e.word.length());
  improve(4, longest);
}

Word WordTable::random_word(std::size_t length)
{
  std::uniform_int_distribution<std::size_t> gen(0, chain_.generators.size() - 1);
  Word w;
  for (std::size_t i = 0; i < length; ++i)
    w.append(Letter{gen(rng_), (rng_() & 1u) ? 1 : -1}, chain_.generator_orders);
  return w;
}

bool WordTable::sift_in(Word word, Permutation perm, std::size_t max_length)
{
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (perm.is_identity() || word.length() > max_length)
      break;
    const Level &level = chain_.levels[i];
    const std::int32_t k = level.orbit_index[perm[level.base]];
    if (k < 0)
      throw Error(ErrorCode::NotAMember, "word table received a non-member");
    Entry &entry = levels_[i][static_cast<std::size_t>(k)];
    if (!entry.filled) {
      entry.inv = perm.inverse();
      entry.perm = std::move(perm);
      entry.word = std::move(word);
      entry.filled = true;
      --missing_;
      return true;
    }
    if (k == 0) {
      // perm fixes the base point; move on without touching the table.
      continue;
    }
    Word residue = word;
    residue.append(entry.word.inverse(), chain_.generator_orders);
    Permutation residue_perm = perm * entry.inv;
    if (word.length() < entry.word.length()) {
      entry.inv = perm.inverse();
      entry.perm = std::move(perm);
      entry.word = std::move(word);
    }
    word = std::move(residue);
    perm = std::move(residue_perm);
  }
  return false;
}

void WordTable::improve(std::size_t rounds, std::size_t max_length)
{
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < levels_.size(); ++i)
    for (std::size_t k = 1; k < levels_[i].size(); ++k)
      slots.emplace_back(i, k);
  if (slots.empty())
    return;
  std::uniform_int_distribution<std::size_t> pick(0, slots.size() - 1);
  const std::size_t per_round = std::min<std::size_t>(slots.size() * slots.size(), 4 * slots.size() + 256);
  for (std::size_t r = 0; r < rounds; ++r) {
    for (std::size_t t = 0; t < per_round; ++t) {
      auto [i1, k1] = slots[pick(rng_)];
      auto [i2, k2] = slots[pick(rng_)];
      const Entry &a = levels_[i1][k1];
      const Entry &b = levels_[i2][k2];
      if (!a.filled || !b.filled)
        continue;
      Word w = a.word;
      w.append(b.word, chain_.generator_orders);
      if (w.length() > max_length)
        continue;
      Permutation p = a.perm * b.perm;
      sift_in(std::move(w), std::move(p), max_length);
    }
  }
}

FactorCache::FactorCache() = default;
FactorCache::~FactorCache() = default;

const WordTable &word_table(FactorCache &cache, const Chain &chain)
{
  std::call_once(cache.once, [&] { cache.table = std::make_unique<WordTable>(chain, 0x243f6a8885a308d3ull); });
  return *cache.table;
}

Word factor_with_table(const WordTable &table, const Chain &chain, const Permutation &p)
{
  // p = u_last * ... * u_1 * u_0 where u_i is the table entry used at level i.
  std::vector<const Word *> used;
  Permutation g = p;
  for (std::size_t i = 0; i < chain.levels.size(); ++i) {
    const Level &level = chain.levels[i];
    const std::int32_t k = level.orbit_index[g[level.base]];
    if (k < 0)
      throw Error(ErrorCode::NotAMember, "permutation left the stabilizer chain");
    const auto &entry = table.levels()[i][static_cast<std::size_t>(k)];
    if (k != 0) {
      g = g * entry.inv;
      used.push_back(&entry.word);
    }
  }
  if (!g.is_identity())
    throw Error(ErrorCode::NotAMember, "permutation is not in the group");
  Word result;
  for (auto it = used.rbegin(); it != used.rend(); ++it)
    result.append(**it, chain.generator_orders);
  return result;
}

} // namespace rubikmap::detail

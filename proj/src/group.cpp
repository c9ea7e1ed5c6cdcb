#include "rubikmap/group.hpp"

#include <algorithm>
#include <unordered_set>

#include "chain.hpp"
#include "rubikmap/error.hpp"

namespace rubikmap {

namespace detail {

void Chain::add_level(Point point)
{
  Level level;
  level.base = point;
  level.orbit_index.assign(degree, -1);
  level.orbit_index[point] = 0;
  level.orbit.push_back(point);
  level.transversal.emplace_back(degree);
  level.transversal_inv.emplace_back(degree);
  levels.push_back(std::move(level));
  base.push_back(point);
}

void Chain::extend_orbit(Level &level, std::size_t new_generator)
{
  auto try_add = [&](std::size_t k, const Permutation &s) {
    Point image = s[level.orbit[k]];
    if (level.orbit_index[image] >= 0)
      return;
    level.orbit_index[image] = static_cast<std::int32_t>(level.orbit.size());
    level.orbit.push_back(image);
    Permutation u = level.transversal[k] * s;
    level.transversal_inv.push_back(u.inverse());
    level.transversal.push_back(std::move(u));
  };

  const std::size_t old_size = level.orbit.size();
  for (std::size_t k = 0; k < old_size; ++k)
    try_add(k, strong[new_generator]);
  for (std::size_t k = old_size; k < level.orbit.size(); ++k)
    for (std::size_t gi : level.generators)
      try_add(k, strong[gi]);
}

void Chain::add_strong_generator(Permutation h, std::size_t level)
{
  strong.push_back(std::move(h));
  const std::size_t index = strong.size() - 1;
  for (std::size_t i = 0; i <= level; ++i) {
    levels[i].generators.push_back(index);
    extend_orbit(levels[i], index);
  }
}

std::pair<Permutation, std::size_t> Chain::sift(Permutation g, std::size_t from) const
{
  for (std::size_t i = from; i < levels.size(); ++i) {
    const Level &level = levels[i];
    Point image = g[level.base];
    if (image == level.base)
      continue;
    std::int32_t k = level.orbit_index[image];
    if (k < 0)
      return {std::move(g), i};
    const Permutation &uinv = level.transversal_inv[static_cast<std::size_t>(k)];
    g = g * uinv;
  }
  return {std::move(g), levels.size()};
}

namespace {

long long small_order(const Permutation &p)
{
  BigInt o = p.order();
  if (o > BigInt(std::numeric_limits<long long>::max()))
    return 0;
  return static_cast<long long>(o);
}

void check_deadline(const BuildOptions &options)
{
  if (options.deadline && std::chrono::steady_clock::now() >= *options.deadline)
    throw Error(ErrorCode::BudgetExceeded, "time budget exhausted while building a stabilizer chain");
}

// Sifts `g` and inserts its residue as a new strong generator if needed.
// Returns true when the chain grew.
bool absorb(Chain &chain, Permutation g, std::size_t from = 0)
{
  auto [residue, level] = chain.sift(std::move(g), from);
  if (residue.is_identity())
    return false;
  if (level == chain.levels.size())
    chain.add_level(residue.first_moved_point());
  chain.add_strong_generator(std::move(residue), level);
  return true;
}

// Product replacement generator of random group elements.
class ProductReplacement {
public:
  ProductReplacement(const std::vector<Permutation> &gens, std::mt19937_64 &rng)
      : rng_(rng), accumulator_(gens.front().degree())
  {
    const std::size_t slots = std::max<std::size_t>(10, gens.size());
    for (std::size_t i = 0; i < slots; ++i)
      slots_.push_back(gens[i % gens.size()]);
    for (int i = 0; i < 50; ++i)
      next();
  }

  Permutation next()
  {
    std::uniform_int_distribution<std::size_t> pick(0, slots_.size() - 1);
    std::size_t i = pick(rng_);
    std::size_t j = pick(rng_);
    while (j == i)
      j = pick(rng_);
    if (rng_() & 1u)
      slots_[i] = slots_[i] * slots_[j];
    else
      slots_[i] = slots_[j] * slots_[i];
    accumulator_ = accumulator_ * slots_[i];
    return accumulator_;
  }

private:
  std::mt19937_64 &rng_;
  std::vector<Permutation> slots_;
  Permutation accumulator_;
};

void verify_schreier_generators(Chain &chain, const BuildOptions &options)
{
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(chain.levels.size()) - 1;
  std::size_t checked = 0;
  while (i >= 0) {
    bool grew = false;
    const std::size_t li = static_cast<std::size_t>(i);
    for (std::size_t k = 0; k < chain.levels[li].orbit.size() && !grew; ++k) {
      for (std::size_t gpos = 0; gpos < chain.levels[li].generators.size(); ++gpos) {
        const Level &level = chain.levels[li];
        const Permutation &s = chain.strong[level.generators[gpos]];
        const Point beta = level.orbit[k];
        // s already lies in the next stabilizer.
        if (beta == level.base && s[beta] == beta)
          continue;
        const Point gamma = s[beta];
        const auto kg = static_cast<std::size_t>(level.orbit_index[gamma]);
        Permutation schreier = level.transversal[k] * s * level.transversal_inv[kg];
        if (schreier.is_identity())
          continue;
        if ((++checked & 0x3ffu) == 0)
          check_deadline(options);
        auto [residue, at] = chain.sift(std::move(schreier), li + 1);
        if (residue.is_identity())
          continue;
        if (at == chain.levels.size())
          chain.add_level(residue.first_moved_point());
        chain.add_strong_generator(std::move(residue), at);
        i = static_cast<std::ptrdiff_t>(at);
        grew = true;
        break;
      }
    }
    if (!grew)
      --i;
  }
}

} // namespace

} // namespace detail

GroupHandle GroupHandle::from_generators(std::vector<Permutation> generators,
                                         const BuildOptions &options)
{
  if (generators.empty())
    throw Error(ErrorCode::DomainMismatch, "a group needs at least one generator");
  const std::size_t n = generators.front().degree();
  for (const auto &g : generators)
    if (g.degree() != n)
      throw Error(ErrorCode::DomainMismatch, "generators act on domains of different sizes");
  detail::check_deadline(options);

  auto chain = std::make_shared<detail::Chain>();
  chain->degree = n;
  chain->generators = std::move(generators);
  for (const auto &g : chain->generators)
    chain->generator_orders.push_back(detail::small_order(g));

  std::vector<bool> in_base(n, false);
  for (Point b : options.base_prefix) {
    if (b >= n)
      throw Error(ErrorCode::DomainMismatch, "base prefix point outside the domain");
    if (!in_base[b]) {
      in_base[b] = true;
      chain->add_level(b);
    }
  }

  for (const auto &g : chain->generators)
    detail::absorb(*chain, g);

  const bool trivial = chain->strong.empty();
  if (!trivial) {
    std::mt19937_64 rng(options.seed);
    detail::ProductReplacement random(chain->generators, rng);
    std::size_t streak = 0;
    std::size_t draws = 0;
    while (streak < options.random_sift_streak) {
      if ((++draws & 0x3fu) == 0)
        detail::check_deadline(options);
      if (detail::absorb(*chain, random.next()))
        streak = 0;
      else
        ++streak;
    }
    detail::verify_schreier_generators(*chain, options);
  }

  chain->order = 1;
  for (const auto &level : chain->levels)
    chain->order *= level.orbit.size();

  GroupHandle handle;
  handle.chain_ = std::move(chain);
  handle.factor_cache_ = std::make_shared<detail::FactorCache>();
  return handle;
}

std::size_t GroupHandle::degree() const noexcept { return chain_->degree; }

const std::vector<Permutation> &GroupHandle::generators() const noexcept
{
  return chain_->generators;
}

const std::vector<long long> &GroupHandle::generator_orders() const noexcept
{
  return chain_->generator_orders;
}

const BigInt &GroupHandle::order() const noexcept { return chain_->order; }

const std::vector<Point> &GroupHandle::base() const noexcept { return chain_->base; }

std::vector<std::size_t> GroupHandle::orbit_sizes() const
{
  std::vector<std::size_t> sizes;
  for (const auto &level : chain_->levels)
    sizes.push_back(level.orbit.size());
  return sizes;
}

const std::vector<Permutation> &GroupHandle::strong_generators() const noexcept
{
  return chain_->strong;
}

std::vector<Permutation> GroupHandle::stabilizer_generators(std::size_t level) const
{
  if (level >= chain_->levels.size())
    return {};
  std::vector<Permutation> result;
  for (std::size_t gi : chain_->levels[level].generators)
    result.push_back(chain_->strong[gi]);
  return result;
}

bool GroupHandle::contains(const Permutation &p) const
{
  if (p.degree() != degree())
    throw Error(ErrorCode::DomainMismatch, "membership test on a foreign domain");
  return chain_->sift(p).first.is_identity();
}

Word GroupHandle::factor(const Permutation &p) const
{
  if (!contains(p))
    throw Error(ErrorCode::NotAMember, "permutation " + p.to_cycle_string() + " is not in the group");
  if (p.is_identity())
    return {};
  return detail::factor_with_table(detail::word_table(*factor_cache_, *chain_), *chain_, p);
}

Permutation GroupHandle::random_element(std::mt19937_64 &rng) const
{
  Permutation g(degree());
  for (auto it = chain_->levels.rbegin(); it != chain_->levels.rend(); ++it) {
    std::uniform_int_distribution<std::size_t> pick(0, it->orbit.size() - 1);
    g = g * it->transversal[pick(rng)];
  }
  return g;
}

bool GroupHandle::is_abelian() const
{
  const auto &gens = chain_->generators;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i])
        return false;
  return true;
}

bool GroupHandle::has_exponent(long long k, std::mt19937_64 &rng, std::size_t samples) const
{
  for (const auto &g : chain_->generators)
    if (!g.pow(k).is_identity())
      return false;
  for (const auto &g : chain_->strong)
    if (!g.pow(k).is_identity())
      return false;
  for (std::size_t i = 0; i < samples; ++i)
    if (!random_element(rng).pow(k).is_identity())
      return false;
  return true;
}

// ---------------------------------------------------------------- projections

Projection Projection::identity(std::size_t degree)
{
  Projection p;
  p.target_degree = degree;
  p.target.resize(degree);
  for (std::size_t i = 0; i < degree; ++i)
    p.target[i] = static_cast<std::int64_t>(i);
  return p;
}

Projection compose(const Projection &first, const Projection &second)
{
  if (first.target_degree != second.source_degree())
    throw Error(ErrorCode::DomainMismatch, "projection domains do not chain");
  Projection result;
  result.target_degree = second.target_degree;
  result.target.resize(first.source_degree(), Projection::kDropped);
  for (std::size_t i = 0; i < first.source_degree(); ++i) {
    std::int64_t mid = first.target[i];
    if (mid != Projection::kDropped)
      result.target[i] = second.target[static_cast<std::size_t>(mid)];
  }
  return result;
}

Permutation project(const Permutation &p, const Projection &projection)
{
  if (p.degree() != projection.source_degree())
    throw Error(ErrorCode::DomainMismatch, "projection source does not match permutation degree");
  constexpr Point kUnset = std::numeric_limits<Point>::max();
  std::vector<Point> images(projection.target_degree, kUnset);
  for (std::size_t x = 0; x < p.degree(); ++x) {
    const std::int64_t from = projection.target[x];
    if (from == Projection::kDropped)
      continue;
    const std::int64_t to = projection.target[p[static_cast<Point>(x)]];
    if (to == Projection::kDropped)
      throw Error(ErrorCode::IllDefinedProjection, "a kept point is moved onto a dropped point");
    Point &slot = images[static_cast<std::size_t>(from)];
    if (slot != kUnset && slot != static_cast<Point>(to))
      throw Error(ErrorCode::IllDefinedProjection, "point images disagree on a collapsed class");
    slot = static_cast<Point>(to);
  }
  for (Point y : images)
    if (y == kUnset)
      throw Error(ErrorCode::IllDefinedProjection, "projection does not cover the target domain");
  try {
    return Permutation(std::move(images));
  } catch (const Error &) {
    throw Error(ErrorCode::IllDefinedProjection, "induced map on the target is not a bijection");
  }
}

GroupHandle action_image(const GroupHandle &group, const Projection &projection,
                         const BuildOptions &options)
{
  std::vector<Permutation> images;
  for (const auto &g : group.generators())
    images.push_back(project(g, projection));
  return GroupHandle::from_generators(std::move(images), options);
}

GroupHandle kernel(const GroupHandle &group, const Projection &projection,
                   const BuildOptions &options)
{
  // Act on target ⊔ source with the target points opening the base; the
  // pointwise stabilizer of the target is then a level of the chain.
  const std::size_t m = projection.target_degree;
  const std::size_t n = group.degree();
  std::vector<Permutation> combined;
  for (const auto &g : group.generators()) {
    Permutation image = project(g, projection);
    std::vector<Point> images(m + n);
    for (std::size_t x = 0; x < m; ++x)
      images[x] = image[static_cast<Point>(x)];
    for (std::size_t x = 0; x < n; ++x)
      images[m + x] = static_cast<Point>(m + g[static_cast<Point>(x)]);
    combined.emplace_back(std::move(images));
  }
  BuildOptions opts = options;
  opts.base_prefix.clear();
  for (std::size_t x = 0; x < m; ++x)
    opts.base_prefix.push_back(static_cast<Point>(x));
  GroupHandle big = GroupHandle::from_generators(std::move(combined), opts);

  std::vector<Permutation> kernel_gens;
  for (const auto &h : big.stabilizer_generators(m)) {
    std::vector<Point> images(n);
    for (std::size_t x = 0; x < n; ++x)
      images[x] = static_cast<Point>(h[static_cast<Point>(m + x)] - m);
    kernel_gens.emplace_back(std::move(images));
  }
  if (kernel_gens.empty())
    kernel_gens.emplace_back(n);
  BuildOptions kopts = options;
  kopts.base_prefix.clear();
  return GroupHandle::from_generators(std::move(kernel_gens), kopts);
}

std::uint64_t enumerate_all(std::span<const Permutation> generators, std::uint64_t cap)
{
  if (generators.empty())
    throw Error(ErrorCode::DomainMismatch, "enumeration needs at least one generator");
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> frontier{Permutation(generators.front().degree())};
  seen.insert(frontier.front());
  if (seen.size() > cap)
    throw Error(ErrorCode::CapExceeded, "enumeration cap exceeded");
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto &g : frontier) {
      for (const auto &s : generators) {
        Permutation h = g * s;
        if (seen.insert(h).second) {
          if (seen.size() > cap)
            throw Error(ErrorCode::CapExceeded,
                        "enumeration cap of " + std::to_string(cap) + " exceeded");
          next.push_back(std::move(h));
        }
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

} // namespace rubikmap

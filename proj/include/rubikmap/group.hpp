#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "rubikmap/permutation.hpp"

namespace rubikmap {

namespace detail {
struct Chain;
struct FactorCache;
} // namespace detail

struct BuildOptions {
  /// Seed for the randomized phase. The verified result does not depend on it.
  std::uint64_t seed = 0x9e3779b97f4a7c15ull;

  /// Points that must open the base, in this order, even when every
  /// generator fixes them. Kernels of projections are read off the chain
  /// by putting the projected points here.
  std::vector<Point> base_prefix;

  /// Consecutive random elements that must sift to the identity before the
  /// randomized phase hands over to the deterministic verification.
  std::size_t random_sift_streak = 24;

  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// A permutation group given by generators together with a verified
/// base and strong generating set.
///
/// Construction runs a randomized Schreier-Sims pass followed by a
/// deterministic Schreier generator check, so order() and contains() are
/// exact. Handles are immutable and cheap to copy; the word tables used by
/// factor() are built on first use and shared between copies.
class GroupHandle {
public:
  /// Throws DomainMismatch on an empty list or mixed degrees, and
  /// BudgetExceeded when the deadline in `options` passes.
  static GroupHandle from_generators(std::vector<Permutation> generators,
                                     const BuildOptions &options = {});

  std::size_t degree() const noexcept;
  const std::vector<Permutation> &generators() const noexcept;

  const BigInt &order() const noexcept;

  const std::vector<Point> &base() const noexcept;
  std::vector<std::size_t> orbit_sizes() const;
  const std::vector<Permutation> &strong_generators() const noexcept;

  /// Strong generators fixing the first `level` base points; they generate
  /// the pointwise stabilizer of those points.
  std::vector<Permutation> stabilizer_generators(std::size_t level) const;

  bool contains(const Permutation &p) const;

  /// A word in generators() evaluating to `p`. Not minimal. Throws
  /// NotAMember when `p` is outside the group.
  Word factor(const Permutation &p) const;

  /// Uniformly distributed element, drawn through the chain transversals.
  Permutation random_element(std::mt19937_64 &rng) const;

  /// All pairs of generators commute.
  bool is_abelian() const;

  /// g^k is the identity for every strong generator and for `samples`
  /// random elements.
  bool has_exponent(long long k, std::mt19937_64 &rng, std::size_t samples = 32) const;

  /// Orders of the generators, used to shorten words.
  const std::vector<long long> &generator_orders() const noexcept;

private:
  std::shared_ptr<const detail::Chain> chain_;
  std::shared_ptr<detail::FactorCache> factor_cache_;
};

/// Point map from a source domain onto a target domain, with some source
/// points possibly dropped. A group element induces a permutation of the
/// target when the map is compatible with its action.
struct Projection {
  static constexpr std::int64_t kDropped = -1;

  std::size_t target_degree = 0;
  std::vector<std::int64_t> target; // one entry per source point

  static Projection identity(std::size_t degree);
  std::size_t source_degree() const noexcept { return target.size(); }
};

/// Apply `second` after `first`.
Projection compose(const Projection &first, const Projection &second);

/// Induced permutation of the target domain; throws IllDefinedProjection.
Permutation project(const Permutation &p, const Projection &projection);

GroupHandle action_image(const GroupHandle &group, const Projection &projection,
                         const BuildOptions &options = {});

/// Elements acting trivially on the target domain, as a group on the
/// source domain. |group| = |action_image| * |kernel|.
GroupHandle kernel(const GroupHandle &group, const Projection &projection,
                   const BuildOptions &options = {});

/// Breadth-first closure over the generators. Throws CapExceeded as soon as
/// more than `cap` elements are found.
std::uint64_t enumerate_all(std::span<const Permutation> generators, std::uint64_t cap);

} // namespace rubikmap

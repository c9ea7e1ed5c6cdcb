#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rubikmap {

using BigInt = boost::multiprecision::cpp_int;

/// A point of a permutation domain. Zero-based internally; every textual
/// form (cycle notation, files, CLI) is one-based.
using Point = std::uint32_t;

/// Bijection of {0, ..., n-1}.
///
/// Products compose left to right: `(a * b)(x) == b(a(x))`, so a word
/// g1 g2 g3 applies g1 first. This matches GAP and the way face moves are
/// read in a move sequence.
class Permutation {
public:
  Permutation() = default;

  /// Identity on `degree` points.
  explicit Permutation(std::size_t degree);

  /// Throws MalformedInput if `images` is not a bijection of 0..n-1.
  explicit Permutation(std::vector<Point> images);

  /// Build from zero-based disjoint (or not) cycles; later cycles act after
  /// earlier ones, as in GAP's cycle products.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>> &cycles);

  /// Parse one-based cycle notation such as "(1,2,3)(4,5)" or "()".
  static Permutation parse(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point x) const noexcept { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  /// +1 or -1.
  int sign() const;
  BigInt order() const;

  std::vector<std::vector<Point>> cycles() const;
  /// Sorted multiset of nontrivial cycle lengths.
  std::vector<std::size_t> cycle_type() const;
  std::size_t moved_points() const;

  /// First point x with p(x) != x, or degree() for the identity.
  Point first_moved_point() const noexcept;

  /// One-based disjoint-cycle notation, "()" for the identity.
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation &a, const Permutation &b);
  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

  Permutation pow(long long exponent) const;

private:
  std::vector<Point> images_;
};

std::ostream &operator<<(std::ostream &os, const Permutation &p);

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const noexcept;
};

/// Sequence of (generator index, nonzero exponent) letters.
struct Letter {
  std::size_t generator;
  long long exponent;

  friend bool operator==(const Letter &, const Letter &) = default;
};

class Word {
public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  const std::vector<Letter> &letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }

  /// Sum of absolute exponents.
  std::size_t length() const noexcept;

  /// Append with free cancellation; exponents are reduced modulo the
  /// generator orders when `orders` is non-empty.
  void append(Letter letter, std::span<const long long> orders = {});
  void append(const Word &other, std::span<const long long> orders = {});

  Word inverse() const;

  /// Empty word evaluates to the identity on `degree` points.
  Permutation evaluate(std::span<const Permutation> generators,
                       std::size_t degree) const;

  /// "F1 F3^-1 F2^2" style text; `prefix` names the generators.
  std::string to_string(std::string_view prefix = "F") const;
  static Word parse(std::string_view text, std::string_view prefix = "F");

  friend bool operator==(const Word &, const Word &) = default;

private:
  std::vector<Letter> letters_;
};

} // namespace rubikmap

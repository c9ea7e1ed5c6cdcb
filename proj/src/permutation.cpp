#include "rubikmap/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <ostream>
#include <sstream>

#include "rubikmap/error.hpp"

namespace rubikmap {

std::string_view error_code_name(ErrorCode code) noexcept
{
  switch (code) {
    case ErrorCode::NotTrivalent: return "NotTrivalent";
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::NotAMember: return "NotAMember";
    case ErrorCode::IllDefinedProjection: return "IllDefinedProjection";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::FaceNotInMap: return "FaceNotInMap";
    case ErrorCode::DegenerateFace: return "DegenerateFace";
    case ErrorCode::DifferentVertices: return "DifferentVertices";
    case ErrorCode::NotOrientationPreserving: return "NotOrientationPreserving";
    case ErrorCode::OutOfConjectureScope: return "OutOfConjectureScope";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::UnknownSession: return "UnknownSession";
    case ErrorCode::UnknownFace: return "UnknownFace";
    case ErrorCode::MalformedRequest: return "MalformedRequest";
    case ErrorCode::UnknownMap: return "UnknownMap";
  }
  return "Unknown";
}

Permutation::Permutation(std::size_t degree) : images_(degree)
{
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images))
{
  std::vector<bool> seen(images_.size(), false);
  for (Point y : images_) {
    if (y >= images_.size() || seen[y])
      throw Error(ErrorCode::MalformedInput, "image list is not a bijection");
    seen[y] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>> &cycles)
{
  Permutation result(degree);
  for (const auto &cycle : cycles) {
    std::vector<bool> seen(degree, false);
    for (Point x : cycle) {
      if (x >= degree)
        throw Error(ErrorCode::MalformedInput,
                    "cycle point " + std::to_string(x + 1) + " outside domain");
      if (seen[x])
        throw Error(ErrorCode::MalformedInput,
                    "point " + std::to_string(x + 1) + " repeated within a cycle");
      seen[x] = true;
    }
    if (cycle.size() < 2)
      continue;
    Permutation c(degree);
    for (std::size_t i = 0; i < cycle.size(); ++i)
      c.images_[cycle[i]] = cycle[(i + 1) % cycle.size()];
    result = result * c;
  }
  return result;
}

Permutation Permutation::parse(std::string_view text, std::size_t degree)
{
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw Error(ErrorCode::MalformedInput, "expected '(' in cycle notation");
    ++i;
    std::vector<Point> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      skip_ws();
      unsigned long value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc() || value == 0)
        throw Error(ErrorCode::MalformedInput, "bad point in cycle notation");
      i = static_cast<std::size_t>(ptr - text.data());
      cycle.push_back(static_cast<Point>(value - 1));
      skip_ws();
      if (i < text.size() && text[i] == ',')
        ++i;
      skip_ws();
    }
    if (i >= text.size())
      throw Error(ErrorCode::MalformedInput, "unterminated cycle");
    ++i;
    cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return from_cycles(degree, cycles);
}

bool Permutation::is_identity() const noexcept
{
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation Permutation::inverse() const
{
  Permutation inv;
  inv.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv.images_[images_[i]] = static_cast<Point>(i);
  return inv;
}

std::vector<std::vector<Point>> Permutation::cycles() const
{
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start)
      continue;
    std::vector<Point> cycle;
    for (Point x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::vector<std::size_t> Permutation::cycle_type() const
{
  std::vector<std::size_t> lengths;
  for (const auto &c : cycles())
    lengths.push_back(c.size());
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

int Permutation::sign() const
{
  std::size_t even_cycles = 0;
  for (const auto &c : cycles())
    if (c.size() % 2 == 0)
      ++even_cycles;
  return even_cycles % 2 == 0 ? 1 : -1;
}

BigInt Permutation::order() const
{
  BigInt result = 1;
  for (const auto &c : cycles()) {
    BigInt len = c.size();
    result = result / boost::multiprecision::gcd(result, len) * len;
  }
  return result;
}

std::size_t Permutation::moved_points() const
{
  std::size_t count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      ++count;
  return count;
}

Point Permutation::first_moved_point() const noexcept
{
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return static_cast<Point>(i);
  return static_cast<Point>(images_.size());
}

std::string Permutation::to_cycle_string() const
{
  auto cs = cycles();
  if (cs.empty())
    return "()";
  std::string out;
  for (const auto &c : cs) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i)
        out += ',';
      out += std::to_string(c[i] + 1);
    }
    out += ')';
  }
  return out;
}

Permutation operator*(const Permutation &a, const Permutation &b)
{
  if (a.degree() != b.degree())
    throw Error(ErrorCode::DomainMismatch, "composing permutations of degree " +
                                               std::to_string(a.degree()) + " and " +
                                               std::to_string(b.degree()));
  Permutation c;
  c.images_.resize(a.images_.size());
  for (std::size_t i = 0; i < a.images_.size(); ++i)
    c.images_[i] = b.images_[a.images_[i]];
  return c;
}

Permutation Permutation::pow(long long exponent) const
{
  Permutation base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-(exponent + 1)) + 1
                                      : static_cast<unsigned long long>(exponent);
  Permutation result(degree());
  while (e) {
    if (e & 1u)
      result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

std::ostream &operator<<(std::ostream &os, const Permutation &p)
{
  return os << p.to_cycle_string();
}

std::size_t PermutationHash::operator()(const Permutation &p) const noexcept
{
  // FNV-1a over the image array.
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

// ---------------------------------------------------------------- Word

std::size_t Word::length() const noexcept
{
  std::size_t total = 0;
  for (const auto &l : letters_)
    total += static_cast<std::size_t>(l.exponent < 0 ? -l.exponent : l.exponent);
  return total;
}

namespace {

long long reduce_exponent(long long e, std::size_t gen, std::span<const long long> orders)
{
  if (gen >= orders.size() || orders[gen] <= 0)
    return e;
  long long ord = orders[gen];
  e %= ord;
  if (e < 0)
    e += ord;
  // Prefer the representative of smallest magnitude, positive on ties.
  if (2 * e > ord)
    e -= ord;
  return e;
}

} // namespace

void Word::append(Letter letter, std::span<const long long> orders)
{
  if (letter.exponent == 0)
    return;
  if (!letters_.empty() && letters_.back().generator == letter.generator) {
    long long e = reduce_exponent(letters_.back().exponent + letter.exponent,
                                  letter.generator, orders);
    if (e == 0)
      letters_.pop_back();
    else
      letters_.back().exponent = e;
    return;
  }
  long long e = reduce_exponent(letter.exponent, letter.generator, orders);
  if (e != 0)
    letters_.push_back({letter.generator, e});
}

void Word::append(const Word &other, std::span<const long long> orders)
{
  for (const auto &l : other.letters_)
    append(l, orders);
}

Word Word::inverse() const
{
  std::vector<Letter> inv;
  inv.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    inv.push_back({it->generator, -it->exponent});
  return Word(std::move(inv));
}

Permutation Word::evaluate(std::span<const Permutation> generators, std::size_t degree) const
{
  Permutation result(degree);
  for (const auto &l : letters_) {
    if (l.generator >= generators.size())
      throw Error(ErrorCode::MalformedInput,
                  "word refers to generator " + std::to_string(l.generator + 1));
    result = result * generators[l.generator].pow(l.exponent);
  }
  return result;
}

std::string Word::to_string(std::string_view prefix) const
{
  std::ostringstream os;
  bool first = true;
  for (const auto &l : letters_) {
    if (!first)
      os << ' ';
    first = false;
    os << prefix << (l.generator + 1);
    if (l.exponent != 1)
      os << '^' << l.exponent;
  }
  return os.str();
}

Word Word::parse(std::string_view text, std::string_view prefix)
{
  Word w;
  std::istringstream is{std::string(text)};
  std::string token;
  while (is >> token) {
    if (token.rfind(prefix, 0) != 0)
      throw Error(ErrorCode::MalformedInput, "bad move token '" + token + "'");
    std::string_view rest = std::string_view(token).substr(prefix.size());
    auto caret = rest.find('^');
    std::string_view index_part = rest.substr(0, caret);
    unsigned long index = 0;
    auto [p1, e1] = std::from_chars(index_part.data(), index_part.data() + index_part.size(), index);
    if (e1 != std::errc() || p1 != index_part.data() + index_part.size() || index == 0)
      throw Error(ErrorCode::MalformedInput, "bad move token '" + token + "'");
    long long exponent = 1;
    if (caret != std::string_view::npos) {
      std::string_view exp_part = rest.substr(caret + 1);
      auto [p2, e2] = std::from_chars(exp_part.data(), exp_part.data() + exp_part.size(), exponent);
      if (e2 != std::errc() || p2 != exp_part.data() + exp_part.size() || exponent == 0)
        throw Error(ErrorCode::MalformedInput, "bad exponent in '" + token + "'");
    }
    w.letters_.push_back({index - 1, exponent});
  }
  return w;
}

} // namespace rubikmap

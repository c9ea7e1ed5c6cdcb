#include "rubikmap/rubik.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "rubikmap/error.hpp"

namespace rubikmap {

namespace {

constexpr Point kUnset = std::numeric_limits<Point>::max();

// Rotate the layer around `face` one step along its boundary: corner d_i
// goes to d_{i+1} and the two other corners at that vertex follow with the
// same offset in sigma order; side edges d_i and alpha(d_i) go to d_{i+1}
// and alpha(d_{i+1}).
Permutation rotate_face(const Map &m, std::size_t face, const std::vector<Point> &position)
{
  const auto &boundary = m.faces()[face];
  const std::size_t corners = m.num_darts();
  std::vector<Point> images(2 * corners, kUnset);
  auto assign = [&](Point from, Point to) {
    if (images[from] != kUnset && images[from] != to)
      throw Error(ErrorCode::DegenerateFace,
                  "face " + std::to_string(face + 1) + " of " + m.name() +
                      " touches itself; its rotation is not a permutation");
    images[from] = to;
  };
  const std::size_t p = boundary.size();
  for (std::size_t i = 0; i < p; ++i) {
    Dart here = boundary[i];
    Dart next = boundary[(i + 1) % p];
    Dart a = here, b = next;
    for (int k = 0; k < 3; ++k) {
      assign(position[a], position[b]);
      a = m.sigma(a);
      b = m.sigma(b);
    }
    assign(static_cast<Point>(corners + position[here]), static_cast<Point>(corners + position[next]));
    assign(static_cast<Point>(corners + position[m.alpha(here)]),
           static_cast<Point>(corners + position[m.alpha(next)]));
  }
  for (std::size_t x = 0; x < images.size(); ++x)
    if (images[x] == kUnset)
      images[x] = static_cast<Point>(x);
  try {
    return Permutation(std::move(images));
  } catch (const Error &) {
    throw Error(ErrorCode::DegenerateFace, "face " + std::to_string(face + 1) + " of " + m.name() +
                                               " does not rotate to a permutation");
  }
}

} // namespace

RubikPresentation::RubikPresentation(Map map) : map_(std::move(map))
{
  position_.assign(map_.num_darts(), 0);
  for (const auto &face : map_.faces()) {
    for (Dart d : face) {
      position_[d] = static_cast<Point>(dart_at_.size());
      dart_at_.push_back(d);
    }
  }
  for (std::size_t f = 0; f < map_.num_faces(); ++f)
    generators_.push_back(rotate_face(map_, f, position_));
}

const Permutation &RubikPresentation::side_movement(std::size_t face) const
{
  if (face >= generators_.size())
    throw Error(ErrorCode::FaceNotInMap, "face " + std::to_string(face + 1) + " not in " + map_.name());
  return generators_[face];
}

Projection RubikPresentation::to_corner_side_edge() const { return Projection::identity(degree()); }

Projection RubikPresentation::to_corner_edge() const
{
  Projection p;
  p.target_degree = num_corners() + map_.num_edges();
  p.target.resize(degree());
  for (Point x = 0; x < num_corners(); ++x)
    p.target[x] = x;
  for (Point x = 0; x < num_side_edges(); ++x)
    p.target[num_corners() + x] =
        static_cast<std::int64_t>(num_corners() + map_.edge_of(dart_at_[x]));
  return p;
}

Projection RubikPresentation::to_corner() const
{
  return compose(to_corner_edge(), corner_edge_to_corner());
}

Projection RubikPresentation::to_vertex() const { return compose(to_corner(), corner_to_vertex()); }

Projection RubikPresentation::to_edge() const
{
  Projection p;
  p.target_degree = map_.num_edges();
  p.target.assign(degree(), Projection::kDropped);
  for (Point x = 0; x < num_side_edges(); ++x)
    p.target[num_corners() + x] = static_cast<std::int64_t>(map_.edge_of(dart_at_[x]));
  return p;
}

Projection RubikPresentation::to_side_edge() const
{
  Projection p;
  p.target_degree = num_side_edges();
  p.target.assign(degree(), Projection::kDropped);
  for (Point x = 0; x < num_side_edges(); ++x)
    p.target[num_corners() + x] = x;
  return p;
}

Projection RubikPresentation::corner_edge_to_corner() const
{
  Projection p;
  p.target_degree = num_corners();
  p.target.assign(num_corners() + map_.num_edges(), Projection::kDropped);
  for (Point x = 0; x < num_corners(); ++x)
    p.target[x] = x;
  return p;
}

Projection RubikPresentation::corner_to_vertex() const
{
  Projection p;
  p.target_degree = map_.num_vertices();
  p.target.resize(num_corners());
  for (Point x = 0; x < num_corners(); ++x)
    p.target[x] = static_cast<std::int64_t>(map_.vertex_of(dart_at_[x]));
  return p;
}

Permutation RubikPresentation::corner_dart_action(const Permutation &g) const
{
  std::vector<Point> images(num_corners());
  for (Dart d = 0; d < num_corners(); ++d)
    images[d] = dart_at_[g[position_[d]]];
  return Permutation(std::move(images));
}

GroupHandle RubikPresentation::group(const BuildOptions &options) const
{
  return GroupHandle::from_generators(generators_, options);
}

Permutation side_movement(const Map &m, std::size_t face)
{
  if (face >= m.num_faces())
    throw Error(ErrorCode::FaceNotInMap, "face " + std::to_string(face + 1) + " not in " + m.name());
  return RubikPresentation(m).side_movement(face);
}

std::string script_text(const RubikPresentation &p)
{
  const Map &m = p.map();
  std::string ident = "Rubik_";
  for (char c : m.name())
    ident += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';

  std::ostringstream os;
  os << "# Rubik group of the 3-valent map \"" << m.name() << "\"\n";
  os << "# V = " << m.num_vertices() << ", E = " << m.num_edges() << ", F = " << m.num_faces()
     << ", genus " << m.genus() << "\n";
  os << "# points 1.." << p.num_corners() << " are corners, " << p.num_corners() + 1 << ".."
     << p.degree() << " are side edges\n";
  os << "# generator k is the side movement of face k\n";
  os << ident << " := Group([\n";
  for (std::size_t f = 0; f < p.generators().size(); ++f) {
    os << "  " << p.generators()[f].to_cycle_string();
    os << (f + 1 < p.generators().size() ? ",\n" : "\n");
  }
  os << "]);\n";
  return os.str();
}

void export_script(const RubikPresentation &p, const std::filesystem::path &path)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << script_text(p);
  if (!out)
    throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

std::vector<Permutation> parse_script_generators(std::string_view text, std::size_t degree)
{
  std::string body;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos)
      line.resize(hash);
    body += line;
    body += ' ';
  }
  auto open = body.find("Group([");
  if (open == std::string::npos)
    throw Error(ErrorCode::MalformedInput, "no Group([...]) in script");
  auto close = body.find("])", open);
  if (close == std::string::npos)
    throw Error(ErrorCode::MalformedInput, "unterminated Group([...])");
  std::string_view list = std::string_view(body).substr(open + 7, close - open - 7);

  std::vector<Permutation> gens;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= list.size(); ++i) {
    if (i == list.size() || (list[i] == ',' && depth == 0)) {
      auto item = list.substr(start, i - start);
      if (item.find('(') != std::string_view::npos)
        gens.push_back(Permutation::parse(item, degree));
      start = i + 1;
    } else if (list[i] == '(') {
      ++depth;
    } else if (list[i] == ')') {
      --depth;
    }
  }
  return gens;
}

} // namespace rubikmap

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "rubikmap/map.hpp"
#include "rubikmap/permutation.hpp"

namespace rubikmap {

/// Conjectured |Rubik(M)| = 2^(E-1) * E!/2 * 3^(V-1) * (V!/2 if every face
/// is odd, V! otherwise). Throws OutOfConjectureScope for faces of size < 3.
BigInt predicted_order(const Map &m);

struct ChainOrders {
  BigInt rubik;        // corner + side-edge action
  BigInt corner_edge;  // image on corners + edges
  BigInt corner;       // image on corners
  BigInt vertex_image; // image on vertices
  BigInt h1, h2, h3;
};

struct ClauseResult {
  bool holds = false;       // the conjectured isomorphism type is attained
  bool bound_holds = false; // the proven subgroup bound
  std::string detail;
};

struct ConjectureReport {
  std::string name;
  std::size_t vertices = 0, edges = 0, faces = 0;
  long long genus = 0;
  std::vector<std::size_t> face_sizes;
  bool all_odd = false;

  std::optional<ChainOrders> orders;
  std::optional<BigInt> predicted;
  ClauseResult clause[4]; // (i) H1, (ii) H2, (iii) H3, (iv) vertex image
  bool pass = false;

  /// Set when verification could not run; `pass` is then false.
  std::optional<std::string> error_code;
  std::string error_message;

  double seconds = 0.0;
};

struct VerifyOptions {
  std::uint64_t seed = 0x5eed;
  /// Wall-clock cap per map; zero means no time at all.
  std::optional<double> budget_seconds;
  /// Rebuild Rubik(M) and its images independently and check the chain
  /// orders against them.
  bool cross_check = true;
  /// Random elements used for exponent and shift checks.
  std::size_t samples = 32;
};

/// Throws OutOfConjectureScope, DegenerateFace or BudgetExceeded.
ConjectureReport verify(const Map &m, const VerifyOptions &options = {});

/// Verifies every map; failures are recorded in the reports, never thrown.
/// Maps are processed by up to `threads` workers (0 = hardware default).
std::vector<ConjectureReport> run_suite(const std::vector<Map> &maps,
                                        const VerifyOptions &options = {},
                                        unsigned threads = 0);

/// Maps of the standard verification suite.
std::vector<Map> standard_suite();

// Report output. Columns: name, V, E, F, all_odd, order, h1, h2, h3,
// vertex_image, predicted, pass, seconds.
void write_csv(std::ostream &os, const std::vector<ConjectureReport> &reports);
void write_table(std::ostream &os, const std::vector<ConjectureReport> &reports);
nlohmann::json report_to_json(const ConjectureReport &report);
nlohmann::json reports_to_json(const std::vector<ConjectureReport> &reports);

} // namespace rubikmap

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "stuckknot/diagram.hpp"

namespace stuckknot {

enum class MoveKind { R1_add, R1_remove, R2_add, R2_remove, R3, RigidSlide, Unstick };

std::string to_string(MoveKind k);

/// A local move and its site.
///
/// Sites: R1_add {arc} (or {-1} for a free loop), param picks the kink shape
/// (0..3, or 0/1 = positive/negative on a free loop); R1_remove and Unstick
/// {crossing}; R2_remove {c1, c2}; R2_add {c1, i1, c2, i2} two darts of one
/// face, param 0 pushes the first dart's arc over the second, 1 under;
/// R3 and RigidSlide {c, i}, the smallest dart of the triangular face.
struct Move {
  MoveKind kind = MoveKind::R1_remove;
  std::vector<int> site;
  int param = 0;

  std::string to_string() const;
  nlohmann::json to_json() const;
  static Move from_json(const nlohmann::json &j);
  friend auto operator<=>(const Move &, const Move &) = default;
};

/// All applicable moves, sorted. Additions are offered only while the result
/// stays within max_crossings.
std::vector<Move> available_moves(const StuckDiagram &d, bool allow_unstick, int max_crossings);

/// Throws InapplicableMove when the site does not support the move.
StuckDiagram apply_move(const StuckDiagram &d, const Move &m);

enum class BarrierKind { RigidTwist, HalfRigidR2 };

struct Barrier {
  BarrierKind kind;
  std::vector<int> crossings;
  std::vector<int> arcs; ///< the supporting loop or bigon sides
};

std::vector<Barrier> detect_barriers(const StuckDiagram &d);

/// Size of the largest family of barriers with pairwise disjoint crossing
/// and arc supports.
int barrier_lower_bound(const StuckDiagram &d);

/// Crossing-removing stuck-isotopy moves applied greedily (R1/R2 removals,
/// with one step of R3/RigidSlide lookahead when nothing else applies).
struct Simplification {
  StuckDiagram diagram;
  std::vector<Move> moves;
};
Simplification simplify(const StuckDiagram &d);

/// Number of unsticks used by the greedy strategy to turn d into target, or
/// nullopt when it gets stuck. Throws InvariantMismatch when the underlying
/// classical diagrams have different invariants.
std::optional<int> unstick_upper_bound(const StuckDiagram &d, const StuckDiagram &target);

struct DistanceReport {
  int lower = 0;
  std::optional<int> upper;
  std::optional<int> exact;
  /// Moves from d1 (or d2 when !certificate_from_first), see replay().
  std::vector<Move> certificate;
  bool certificate_from_first = true;
  bool exhausted = false;
  std::size_t nodes = 0;
  std::string note;

  nlohmann::json to_json() const;
};

struct SearchLimits {
  int max_crossings = -1; ///< -1: the larger crossing count of the two inputs
  std::size_t node_budget = 200'000;
};

/// Unsticking distance by 0/1-weighted search over canonical codes: isotopy
/// moves cost 0, unsticks cost 1. Budget exhaustion is reported, not thrown.
DistanceReport unsticking_distance(const StuckDiagram &d1, const StuckDiagram &d2, const SearchLimits &limits = {});

/// Applies each move to the canonical form of the previous diagram, which is
/// how the distance search records its certificates.
StuckDiagram replay(const StuckDiagram &start, const std::vector<Move> &moves);

/// Every canonical code reachable from d within the limits.
struct Exploration {
  std::set<std::string> codes;
  bool exhausted = false;
};
Exploration explore(const StuckDiagram &d, bool allow_unstick, const SearchLimits &limits);

struct FuzzResult {
  StuckDiagram diagram;
  std::vector<Move> moves;
};

/// Seeded random walk of `length` non-unstick moves within max_crossings.
FuzzResult fuzz_sequence(const StuckDiagram &d, int length, std::uint64_t seed, int max_crossings);

} // namespace stuckknot

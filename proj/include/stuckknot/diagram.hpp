#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stuckknot {

enum class CrossingKind { Classical, Stuck };

/// One end of an arc: crossing index and slot position 0..3.
struct Slot {
  int crossing = -1;
  int index = -1;
  friend bool operator==(const Slot &, const Slot &) = default;
};

/// A crossing in extended PD form. Slots are listed counterclockwise starting
/// at the incoming end of the under-strand, so the under-strand runs 0 -> 2 and
/// the over-strand runs 1 -> 3 when `over_forward` is set, 3 -> 1 otherwise.
struct Crossing {
  CrossingKind kind = CrossingKind::Classical;
  std::array<int, 4> arcs{};
  bool over_forward = true;

  bool is_stuck() const noexcept { return kind == CrossingKind::Stuck; }
  /// +1 when the over-strand points a quarter turn counterclockwise from the
  /// under-strand.
  int sign() const noexcept { return over_forward ? 1 : -1; }
  bool is_incoming(int slot) const noexcept {
    switch (slot & 3) {
    case 0: return true;
    case 1: return over_forward;
    case 2: return false;
    default: return !over_forward;
    }
  }
  friend bool operator==(const Crossing &, const Crossing &) = default;
};

/// An oriented stuck link diagram on the sphere: classical and stuck
/// crossings joined by directed arcs, plus crossing-free circles.
///
/// Arcs are numbered 0..arc_count()-1. Every instance satisfies the
/// structural invariants (arc multiplicity, orientation, planarity); edits
/// return new diagrams.
class StuckDiagram {
public:
  StuckDiagram() = default;

  /// Validates and compacts arc ids (relative order is kept). Throws
  /// ArcMultiplicityError, OrientationError or NonPlanarError.
  static StuckDiagram build(std::vector<Crossing> crossings, int free_loops);

  static StuckDiagram unknot() { return build({}, 1); }
  static StuckDiagram unlink(int n) { return build({}, n); }

  const std::vector<Crossing> &crossings() const noexcept { return crossings_; }
  const Crossing &crossing(int c) const { return crossings_.at(static_cast<std::size_t>(c)); }
  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  int arc_count() const noexcept { return static_cast<int>(head_.size()); }
  int free_loops() const noexcept { return free_loops_; }
  int stuck_count() const noexcept;
  int classical_count() const noexcept { return crossing_count() - stuck_count(); }
  bool empty() const noexcept { return crossings_.empty() && free_loops_ == 0; }

  int arc_at(Slot s) const { return crossing(s.crossing).arcs[static_cast<std::size_t>(s.index)]; }
  /// End where the arc enters a crossing.
  Slot head(int arc) const { return head_.at(static_cast<std::size_t>(arc)); }
  /// End where the arc leaves a crossing.
  Slot tail(int arc) const { return tail_.at(static_cast<std::size_t>(arc)); }
  Slot other_end(Slot s) const;
  /// Arc continuing the same strand through the crossing at head(arc).
  int next_arc(int arc) const;

  /// Components that pass through crossings, each as its arcs in traversal
  /// order starting from the lowest arc id. Free loops are not included.
  std::vector<std::vector<int>> strand_cycles() const;

  friend bool operator==(const StuckDiagram &, const StuckDiagram &) = default;

private:
  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
  std::vector<Slot> head_;
  std::vector<Slot> tail_;
};

// Text format ------------------------------------------------------------

/// Parses `X[a,b,c,d]`, `S[a,b,c,d]` and `O` tokens (whitespace or commas
/// between tokens, `#` comments). Over-strand directions are inferred from the
/// arc incidences; a component that never passes under is oriented so that
/// its smallest arc is followed by the smaller of its two neighbours, or, for
/// a two-arc component, so that it enters slot 2 at its earlier crossing.
StuckDiagram parse(std::string_view text);

/// Canonical serialization; parse(serialize(d)) is d up to relabeling.
std::string serialize(const StuckDiagram &d);

struct CanonicalForm {
  StuckDiagram diagram; ///< relabeled so that parse(code) == diagram
  std::string code;
};

/// Minimal serialization over start arcs, component order and crossing order.
CanonicalForm canonical_form(const StuckDiagram &d);
std::string canonical_code(const StuckDiagram &d);

// Queries ----------------------------------------------------------------

int crossing_sign(const StuckDiagram &d, int c);
/// Sum of signs over classical crossings; stuck crossings contribute nothing.
int writhe(const StuckDiagram &d);
int component_count(const StuckDiagram &d);

/// Faces of the projection, each as the list of darts traversed with the face
/// on the right. A dart is the slot an arc is left from.
std::vector<std::vector<Slot>> faces(const StuckDiagram &d);

/// Connected pieces of the projection graph, as sorted crossing lists.
std::vector<std::vector<int>> projection_blocks(const StuckDiagram &d);

// Edits ------------------------------------------------------------------

StuckDiagram forget_rigidity(const StuckDiagram &d);
/// Inclusion of classical diagrams; throws NotClassical if d has stuck crossings.
StuckDiagram include_classical(const StuckDiagram &d);
StuckDiagram unstick(const StuckDiagram &d, int c);
StuckDiagram stuck_to_classical_crossing(const StuckDiagram &d, int c);
StuckDiagram smooth_oriented(const StuckDiagram &d, int c);
StuckDiagram switch_crossing(const StuckDiagram &d, int c);
StuckDiagram disjoint_union(const StuckDiagram &d1, const StuckDiagram &d2);

/// Deletes the given crossings, joining the two strands through each of them.
/// Circles left without crossings become free loops.
StuckDiagram remove_crossings(const StuckDiagram &d, std::span<const int> cs);

/// Closure of a braid word on `strands` strands: +i is sigma_i (positive
/// crossing), -i its inverse. Strands never touched become free loops.
StuckDiagram braid_closure(int strands, std::span<const int> word);

} // namespace stuckknot

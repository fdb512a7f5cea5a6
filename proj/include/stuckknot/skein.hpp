#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "stuckknot/diagram.hpp"
#include "stuckknot/laurent.hpp"

namespace stuckknot {

struct SkeinTerm {
  LaurentPoly coeff;
  StuckDiagram child;
};

/// Rigid crossing relation at stuck crossing c:
/// L*+ -> [(t, L0), (r, L+)], L*- -> [(t, L0), (r^-1, L-)].
std::vector<SkeinTerm> eliminate_stuck(const StuckDiagram &d, int c);

/// One step of the descending-diagram reduction on a classical diagram.
struct DescendingStep {
  bool descending = false;
  LaurentPoly unlink_value; ///< set when descending
  int crossing = -1;        ///< first crossing met on its under-strand
  std::vector<SkeinTerm> children;
};

/// Base points are the lowest arc of each component in canonical labeling,
/// components are taken in canonical order. Throws NotClassical if d has
/// stuck crossings.
DescendingStep descending_resolution(const StuckDiagram &d);

/// Memoized evaluator of the rigid HOMFLYPT polynomial. Not thread-safe; use
/// one engine per thread.
class SkeinEngine {
public:
  explicit SkeinEngine(std::size_t node_budget = 1'000'000) : budget_(node_budget) {}

  /// Throws EmptyDiagram or BudgetExceeded.
  LaurentPoly evaluate(const StuckDiagram &d);

  std::size_t nodes_used() const noexcept { return nodes_; }
  std::size_t memo_size() const noexcept { return memo_.size(); }

private:
  LaurentPoly eval(const StuckDiagram &d);
  LaurentPoly eval_classical(const StuckDiagram &canonical);
  void charge();

  std::unordered_map<std::string, LaurentPoly> memo_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
};

/// Rigid HOMFLYPT polynomial in a, z, t, r.
LaurentPoly rigid_homflypt(const StuckDiagram &d, std::size_t node_budget = 1'000'000);

} // namespace stuckknot

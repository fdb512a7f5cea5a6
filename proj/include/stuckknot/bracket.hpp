#pragma once

#include <span>
#include <vector>

#include "stuckknot/diagram.hpp"
#include "stuckknot/laurent.hpp"

namespace stuckknot {

enum class Smoothing { A, B };

/// A resolved state: A/B choices at the classical crossings (in crossing
/// order); every stuck crossing stays a rigid 4-valent vertex.
struct State {
  std::vector<Smoothing> choices;
  int alpha = 0;      ///< number of A smoothings
  int beta = 0;       ///< number of B smoothings
  int nu = 0;         ///< number of rigid vertex states (= stuck crossings)
  int components = 0; ///< connected components of the resolved picture

  /// A^(alpha - beta) R^nu
  LaurentPoly weight() const;
};

/// Resolves the diagram. The A smoothing joins slots {0,3} and {1,2}, the B
/// smoothing {0,1} and {2,3}; a stuck crossing joins all four slots.
/// Throws ChoiceArityMismatch if choices.size() != classical crossing count.
State resolve_state(const StuckDiagram &d, std::span<const Smoothing> choices);

struct BracketOptions {
  int max_classical = 24; ///< CapExceeded beyond 2^max_classical states
  unsigned threads = 0;   ///< 0 = hardware concurrency
};

/// Stuck bracket: sum over states of A^(alpha-beta) R^nu delta^(|s|-1).
/// Throws EmptyDiagram for a diagram with no components.
LaurentPoly stuck_bracket(const StuckDiagram &d, const BracketOptions &opts = {});

/// (-A^3)^(-writhe) times the stuck bracket.
LaurentPoly normalized_bracket(const StuckDiagram &d, const BracketOptions &opts = {});

/// (-A^3)^n
LaurentPoly curl_factor(int n);

} // namespace stuckknot

#include "stuckknot/skein.hpp"

#include "stuckknot/error.hpp"

namespace stuckknot {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

LaurentPoly var(Var v, int p = 1) { return LaurentPoly::variable(v, p); }

LaurentPoly unlink_value(int components) { return unlink_factor().pow(components - 1); }

// Crossings first reached on their under-strand, in traversal order.
std::vector<int> under_first_crossings(const StuckDiagram &d) {
  std::vector<bool> seen(idx(d.crossing_count()), false);
  std::vector<int> bad;
  for (const auto &cycle : d.strand_cycles()) {
    for (int arc : cycle) {
      const Slot h = d.head(arc);
      if (seen[idx(h.crossing)])
        continue;
      seen[idx(h.crossing)] = true;
      if (h.index == 0)
        bad.push_back(h.crossing);
    }
  }
  return bad;
}

// Skein children for switching crossing c:
// L+ = a^-2 L- + a^-1 z L0,  L- = a^2 L+ - a z L0.
std::vector<SkeinTerm> switch_children(const StuckDiagram &d, int c) {
  if (crossing_sign(d, c) > 0)
    return {{var(Var::a, -2), switch_crossing(d, c)}, {var(Var::a, -1) * var(Var::z), smooth_oriented(d, c)}};
  return {{var(Var::a, 2), switch_crossing(d, c)}, {-(var(Var::a) * var(Var::z)), smooth_oriented(d, c)}};
}

} // namespace

std::vector<SkeinTerm> eliminate_stuck(const StuckDiagram &d, int c) {
  if (c < 0 || c >= d.crossing_count() || !d.crossing(c).is_stuck())
    throw Error(ErrorKind::NotStuck, "crossing " + std::to_string(c) + " is not stuck");
  const int sign = crossing_sign(d, c);
  return {{var(Var::t), smooth_oriented(d, c)}, {var(Var::r, sign), stuck_to_classical_crossing(d, c)}};
}

DescendingStep descending_resolution(const StuckDiagram &d) {
  if (d.stuck_count() != 0)
    throw Error(ErrorKind::NotClassical, "descending reduction needs a classical diagram");
  const StuckDiagram cd = canonical_form(d).diagram;
  DescendingStep step;
  const auto bad = under_first_crossings(cd);
  if (bad.empty()) {
    step.descending = true;
    step.unlink_value = unlink_value(component_count(cd));
    return step;
  }
  step.crossing = bad.front();
  step.children = switch_children(cd, bad.front());
  return step;
}

void SkeinEngine::charge() {
  if (++nodes_ > budget_)
    throw Error(ErrorKind::BudgetExceeded, "skein recursion exceeded " + std::to_string(budget_) + " nodes");
}

LaurentPoly SkeinEngine::evaluate(const StuckDiagram &d) {
  if (d.empty())
    throw Error(ErrorKind::EmptyDiagram, "diagram has no components");
  return eval(d);
}

LaurentPoly SkeinEngine::eval(const StuckDiagram &d) {
  if (d.crossing_count() == 0)
    return unlink_value(d.free_loops());

  CanonicalForm cf = canonical_form(d);
  if (auto it = memo_.find(cf.code); it != memo_.end())
    return it->second;
  charge();

  LaurentPoly value;
  const StuckDiagram &cd = cf.diagram;
  int stuck = -1;
  for (int c = 0; c < cd.crossing_count() && stuck < 0; ++c)
    if (cd.crossing(c).is_stuck())
      stuck = c;
  if (stuck >= 0) {
    for (auto &term : eliminate_stuck(cd, stuck))
      value += term.coeff * eval(term.child);
  } else {
    value = eval_classical(cd);
  }
  memo_.emplace(std::move(cf.code), value);
  return value;
}

// Switches every under-first crossing in turn while keeping the same base
// points, so the switched diagram ends up descending.
LaurentPoly SkeinEngine::eval_classical(const StuckDiagram &canonical) {
  LaurentPoly total;
  LaurentPoly coeff(1);
  StuckDiagram current = canonical;
  for (int c : under_first_crossings(canonical)) {
    auto children = switch_children(current, c);
    total += coeff * children[1].coeff * eval(children[1].child);
    coeff *= children[0].coeff;
    current = std::move(children[0].child);
  }
  total += coeff * unlink_value(component_count(current));
  return total;
}

LaurentPoly rigid_homflypt(const StuckDiagram &d, std::size_t node_budget) {
  SkeinEngine engine(node_budget);
  return engine.evaluate(d);
}

} // namespace stuckknot

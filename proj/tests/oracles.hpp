#pragma once

// Reference implementations used only by tests. They share the diagram edits
// with the library but none of its evaluation strategy: no memo, no canonical
// relabeling, different base points and traversal direction.

#include <algorithm>
#include <vector>

#include "stuckknot/diagram.hpp"
#include "stuckknot/laurent.hpp"

namespace oracle {

using stuckknot::Exponents;
using stuckknot::LaurentPoly;
using stuckknot::StuckDiagram;
using stuckknot::Var;

inline LaurentPoly mono(long c, Exponents e) { return LaurentPoly::from_term(c, e); }

// ((a - a^-1) / z)^k
inline LaurentPoly unlink_power(int k) {
  const LaurentPoly step = mono(1, {{Var::a, 1}, {Var::z, -1}}) - mono(1, {{Var::a, -1}, {Var::z, -1}});
  LaurentPoly out(1);
  for (int i = 0; i < k; ++i)
    out = out * step;
  return out;
}

// First crossing met on its under-strand when every component is walked
// backwards from its highest arc, components taken from the last one found.
inline int first_bad_crossing(const StuckDiagram &d) {
  std::vector<int> prev(static_cast<std::size_t>(d.arc_count()));
  for (int a = 0; a < d.arc_count(); ++a)
    prev[static_cast<std::size_t>(d.next_arc(a))] = a;
  auto cycles = d.strand_cycles();
  std::reverse(cycles.begin(), cycles.end());
  std::vector<bool> met(static_cast<std::size_t>(d.crossing_count()), false);
  for (const auto &cyc : cycles) {
    const int base = *std::max_element(cyc.begin(), cyc.end());
    int a = base;
    do {
      const auto t = d.tail(a);
      if (!met[static_cast<std::size_t>(t.crossing)]) {
        met[static_cast<std::size_t>(t.crossing)] = true;
        if (t.index % 2 == 0)
          return t.crossing;
      }
      a = prev[static_cast<std::size_t>(a)];
    } while (a != base);
  }
  return -1;
}

// Full skein tree of the rigid HOMFLYPT polynomial.
inline LaurentPoly naive_homflypt(const StuckDiagram &d) {
  for (int c = d.crossing_count() - 1; c >= 0; --c) {
    const auto &x = d.crossing(c);
    if (!x.is_stuck())
      continue;
    const LaurentPoly t = mono(1, {{Var::t, 1}});
    const LaurentPoly r = mono(1, {{Var::r, x.sign()}});
    return t * naive_homflypt(stuckknot::smooth_oriented(d, c)) + r * naive_homflypt(stuckknot::unstick(d, c));
  }
  const int c = first_bad_crossing(d);
  if (c < 0)
    return unlink_power(stuckknot::component_count(d) - 1);
  const LaurentPoly smooth = naive_homflypt(stuckknot::smooth_oriented(d, c));
  const LaurentPoly switched = naive_homflypt(stuckknot::switch_crossing(d, c));
  if (d.crossing(c).sign() > 0)
    return mono(1, {{Var::a, -2}}) * switched + mono(1, {{Var::a, -1}, {Var::z, 1}}) * smooth;
  return mono(1, {{Var::a, 2}}) * switched - mono(1, {{Var::a, 1}, {Var::z, 1}}) * smooth;
}

// Connected pieces of a resolved picture, by depth-first search over arcs.
inline int count_pieces(int arcs, const std::vector<std::pair<int, int>> &links) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(arcs));
  for (auto [u, v] : links) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  std::vector<bool> seen(static_cast<std::size_t>(arcs), false);
  int pieces = 0;
  for (int s = 0; s < arcs; ++s) {
    if (seen[static_cast<std::size_t>(s)])
      continue;
    ++pieces;
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = true;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : adj[static_cast<std::size_t>(u)]) {
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = true;
          stack.push_back(v);
        }
      }
    }
  }
  return pieces;
}

// <D> = A <D_A> + A^-1 <D_B>, expanding classical crossings from the last.
inline LaurentPoly recursive_bracket(const StuckDiagram &d, std::size_t next,
                                     std::vector<std::pair<int, int>> &links) {
  const auto &xs = d.crossings();
  while (next < xs.size() && xs[next].is_stuck())
    ++next;
  if (next == xs.size()) {
    std::vector<std::pair<int, int>> all = links;
    int nu = 0;
    for (const auto &x : xs) {
      if (!x.is_stuck())
        continue;
      ++nu;
      all.emplace_back(x.arcs[0], x.arcs[1]);
      all.emplace_back(x.arcs[1], x.arcs[2]);
      all.emplace_back(x.arcs[2], x.arcs[3]);
    }
    const int pieces = count_pieces(d.arc_count(), all) + d.free_loops();
    const LaurentPoly delta = mono(-1, {{Var::A, 2}}) - mono(1, {{Var::A, -2}});
    LaurentPoly out = mono(1, {{Var::R, nu}});
    for (int i = 1; i < pieces; ++i)
      out = out * delta;
    return out;
  }
  const auto &s = xs[next].arcs;
  links.emplace_back(s[0], s[3]);
  links.emplace_back(s[1], s[2]);
  const LaurentPoly a_part = recursive_bracket(d, next + 1, links);
  links.resize(links.size() - 2);
  links.emplace_back(s[0], s[1]);
  links.emplace_back(s[2], s[3]);
  const LaurentPoly b_part = recursive_bracket(d, next + 1, links);
  links.resize(links.size() - 2);
  return mono(1, {{Var::A, 1}}) * a_part + mono(1, {{Var::A, -1}}) * b_part;
}

inline LaurentPoly recursive_bracket(const StuckDiagram &d) {
  std::vector<std::pair<int, int>> links;
  return recursive_bracket(d, 0, links);
}

} // namespace oracle

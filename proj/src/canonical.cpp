// Canonical relabeling of stuck diagrams.
//
// For every piece of the projection and every choice of start arc, arcs are
// numbered along the orientation, one whole component at a time; components
// are queued in the order their crossings are first met, and crossings are
// listed in order of first arrival. The lexicographically smallest encoding
// wins. Pieces are then sorted by their encodings and free loops appended.

#include <algorithm>
#include <deque>
#include <sstream>

#include "stuckknot/diagram.hpp"

namespace stuckknot {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

// A two-arc component that never passes under: the text format requires its
// positive crossing to be listed before its negative one.
struct OverPair {
  int positive;
  int negative;
};

std::vector<OverPair> two_arc_over_components(const StuckDiagram &d) {
  std::vector<OverPair> out;
  for (const auto &cycle : d.strand_cycles()) {
    if (cycle.size() != 2)
      continue;
    const Slot h0 = d.head(cycle[0]);
    const Slot h1 = d.head(cycle[1]);
    if ((h0.index & 1) == 0 || (h1.index & 1) == 0)
      continue;
    if (d.crossing(h0.crossing).over_forward)
      out.push_back({h0.crossing, h1.crossing});
    else
      out.push_back({h1.crossing, h0.crossing});
  }
  return out;
}

struct Labeling {
  std::vector<int> encoding;
  std::vector<int> order;     // crossing ids in output order
  std::vector<int> arc_label; // local 0-based labels
};

Labeling label_from(const StuckDiagram &d, int start, const std::vector<OverPair> &pairs,
                    std::vector<int> &label, std::vector<int> &pos) {
  std::fill(label.begin(), label.end(), -1);
  std::fill(pos.begin(), pos.end(), -1);
  Labeling out;
  int next = 0;
  std::deque<int> queue{start};
  while (!queue.empty()) {
    const int e = queue.front();
    queue.pop_front();
    if (label[idx(e)] >= 0)
      continue;
    int a = e;
    do {
      label[idx(a)] = next++;
      const Slot h = d.head(a);
      const Crossing &x = d.crossing(h.crossing);
      if (pos[idx(h.crossing)] < 0) {
        pos[idx(h.crossing)] = static_cast<int>(out.order.size());
        out.order.push_back(h.crossing);
      }
      const int s1 = (h.index + 1) & 3;
      const int s3 = (h.index + 3) & 3;
      const int across = x.arcs[idx(x.is_incoming(s1) ? s3 : s1)];
      if (label[idx(across)] < 0)
        queue.push_back(across);
      a = d.next_arc(a);
    } while (a != e);
  }

  for (const auto &p : pairs) {
    const int pp = pos[idx(p.positive)];
    const int pn = pos[idx(p.negative)];
    if (pp >= 0 && pn >= 0 && pp > pn) {
      std::swap(out.order[idx(pp)], out.order[idx(pn)]);
      std::swap(pos[idx(p.positive)], pos[idx(p.negative)]);
    }
  }

  out.encoding.reserve(out.order.size() * 5);
  for (int c : out.order) {
    const Crossing &x = d.crossing(c);
    out.encoding.push_back(x.is_stuck() ? 1 : 0);
    for (int a : x.arcs)
      out.encoding.push_back(label[idx(a)] + 1);
  }
  out.arc_label = label;
  return out;
}

} // namespace

CanonicalForm canonical_form(const StuckDiagram &d) {
  const auto pairs = two_arc_over_components(d);
  std::vector<int> label(idx(d.arc_count()));
  std::vector<int> pos(idx(d.crossing_count()));

  std::vector<Labeling> best_per_block;
  for (const auto &block : projection_blocks(d)) {
    std::vector<bool> in_block(idx(d.crossing_count()), false);
    for (int c : block)
      in_block[idx(c)] = true;
    Labeling best;
    bool have = false;
    for (int a = 0; a < d.arc_count(); ++a) {
      if (!in_block[idx(d.head(a).crossing)])
        continue;
      Labeling cand = label_from(d, a, pairs, label, pos);
      if (!have || cand.encoding < best.encoding) {
        best = std::move(cand);
        have = true;
      }
    }
    best_per_block.push_back(std::move(best));
  }
  std::sort(best_per_block.begin(), best_per_block.end(), [](const Labeling &x, const Labeling &y) {
    if (x.order.size() != y.order.size())
      return x.order.size() < y.order.size();
    return x.encoding < y.encoding;
  });

  std::vector<Crossing> xs;
  std::ostringstream code;
  int offset = 0;
  bool first = true;
  for (const auto &lab : best_per_block) {
    for (int c : lab.order) {
      Crossing x = d.crossing(c);
      for (int &a : x.arcs)
        a = offset + lab.arc_label[idx(a)];
      code << (first ? "" : " ") << (x.is_stuck() ? 'S' : 'X') << '[' << x.arcs[0] + 1 << ',' << x.arcs[1] + 1
           << ',' << x.arcs[2] + 1 << ',' << x.arcs[3] + 1 << ']';
      first = false;
      xs.push_back(x);
    }
    offset += 2 * static_cast<int>(lab.order.size());
  }
  for (int i = 0; i < d.free_loops(); ++i) {
    code << (first ? "" : " ") << 'O';
    first = false;
  }
  return CanonicalForm{StuckDiagram::build(std::move(xs), d.free_loops()), code.str()};
}

std::string canonical_code(const StuckDiagram &d) { return canonical_form(d).code; }

} // namespace stuckknot

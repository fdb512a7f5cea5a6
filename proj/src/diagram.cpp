#include "stuckknot/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "stuckknot/error.hpp"
#include "union_find.hpp"

namespace stuckknot {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

} // namespace

// StuckDiagram -------------------------------------------------------------

StuckDiagram StuckDiagram::build(std::vector<Crossing> crossings, int free_loops) {
  if (free_loops < 0)
    throw Error(ErrorKind::SyntaxError, "negative free loop count");

  std::map<int, int> count;
  for (const auto &x : crossings)
    for (int a : x.arcs)
      ++count[a];
  for (auto [id, n] : count) {
    if (n != 2)
      throw Error(ErrorKind::ArcMultiplicityError, "arc " + std::to_string(id));
  }
  std::map<int, int> compact;
  for (auto [id, n] : count)
    compact.emplace(id, static_cast<int>(compact.size()));

  StuckDiagram d;
  d.free_loops_ = free_loops;
  d.head_.assign(compact.size(), Slot{});
  d.tail_.assign(compact.size(), Slot{});
  for (std::size_t c = 0; c < crossings.size(); ++c) {
    auto &x = crossings[c];
    for (int i = 0; i < 4; ++i) {
      const int raw = x.arcs[idx(i)];
      const int a = compact.at(raw);
      x.arcs[idx(i)] = a;
      Slot &end = x.is_incoming(i) ? d.head_[idx(a)] : d.tail_[idx(a)];
      if (end.crossing >= 0)
        throw Error(ErrorKind::OrientationError, "arc " + std::to_string(raw) + " has inconsistent direction");
      end = Slot{static_cast<int>(c), i};
    }
  }
  d.crossings_ = std::move(crossings);

  // Each connected piece of the rotation system must be a sphere:
  // V - E + F = 2 with E = 2V for a 4-valent graph.
  const auto blocks = projection_blocks(d);
  std::vector<int> block_of(d.crossings_.size(), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int c : blocks[b])
      block_of[idx(c)] = static_cast<int>(b);
  std::vector<int> face_count(blocks.size(), 0);
  for (const auto &f : faces(d))
    ++face_count[idx(block_of[idx(f.front().crossing)])];
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const int v = static_cast<int>(blocks[b].size());
    if (face_count[b] != v + 2)
      throw Error(ErrorKind::NonPlanarError, "piece containing crossing " + std::to_string(blocks[b].front() + 1) +
                                                 " has " + std::to_string(v) + " crossings and " +
                                                 std::to_string(face_count[b]) + " faces");
  }
  return d;
}

int StuckDiagram::stuck_count() const noexcept {
  return static_cast<int>(std::count_if(crossings_.begin(), crossings_.end(), [](const Crossing &x) { return x.is_stuck(); }));
}

Slot StuckDiagram::other_end(Slot s) const {
  const int a = arc_at(s);
  return head(a) == s ? tail(a) : head(a);
}

int StuckDiagram::next_arc(int arc) const {
  const Slot h = head(arc);
  return arc_at(Slot{h.crossing, (h.index + 2) & 3});
}

std::vector<std::vector<int>> StuckDiagram::strand_cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(head_.size(), false);
  for (int start = 0; start < arc_count(); ++start) {
    if (seen[idx(start)])
      continue;
    std::vector<int> cycle;
    int a = start;
    do {
      seen[idx(a)] = true;
      cycle.push_back(a);
      a = next_arc(a);
    } while (a != start);
    out.push_back(std::move(cycle));
  }
  return out;
}

// Queries ----------------------------------------------------------------

int crossing_sign(const StuckDiagram &d, int c) { return d.crossing(c).sign(); }

int writhe(const StuckDiagram &d) {
  int w = 0;
  for (const auto &x : d.crossings())
    if (!x.is_stuck())
      w += x.sign();
  return w;
}

int component_count(const StuckDiagram &d) {
  return static_cast<int>(d.strand_cycles().size()) + d.free_loops();
}

std::vector<std::vector<Slot>> faces(const StuckDiagram &d) {
  const int n = d.crossing_count();
  std::vector<bool> used(idx(4 * n), false);
  std::vector<std::vector<Slot>> out;
  for (int c = 0; c < n; ++c) {
    for (int i = 0; i < 4; ++i) {
      if (used[idx(4 * c + i)])
        continue;
      std::vector<Slot> face;
      Slot s{c, i};
      while (!used[idx(4 * s.crossing + s.index)]) {
        used[idx(4 * s.crossing + s.index)] = true;
        face.push_back(s);
        const Slot t = d.other_end(s);
        s = Slot{t.crossing, (t.index + 1) & 3};
      }
      out.push_back(std::move(face));
    }
  }
  return out;
}

std::vector<std::vector<int>> projection_blocks(const StuckDiagram &d) {
  const int n = d.crossing_count();
  detail::UnionFind uf(idx(n));
  for (int a = 0; a < d.arc_count(); ++a)
    uf.unite(idx(d.head(a).crossing), idx(d.tail(a).crossing));
  std::map<std::size_t, std::vector<int>> groups;
  for (int c = 0; c < n; ++c)
    groups[uf.find(idx(c))].push_back(c);
  std::vector<std::vector<int>> out;
  for (auto &[root, cs] : groups)
    out.push_back(std::move(cs));
  std::sort(out.begin(), out.end());
  return out;
}

// Parsing ----------------------------------------------------------------

namespace {

struct RawCrossing {
  Crossing crossing;
  int line = 0;
};

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip() {
    while (pos_ < text_.size()) {
      const char ch = text_[pos_];
      if (ch == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n')
          ++pos_;
      } else if (ch == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == ';') {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool done() {
    skip();
    return pos_ >= text_.size();
  }

  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }
  int line() const { return line_; }

  void expect(char ch) {
    skip_inline_space();
    if (pos_ >= text_.size() || text_[pos_] != ch)
      fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  int integer() {
    skip_inline_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected a positive arc id");
    const auto digits = text_.substr(start, pos_ - start);
    if (digits.size() > 9)
      fail("arc id '" + std::string(digits) + "' out of range");
    const int v = std::stoi(std::string(digits));
    if (v <= 0)
      fail("arc ids must be positive, got " + std::string(digits));
    return v;
  }

  [[noreturn]] void fail(const std::string &what) const {
    std::string near = pos_ < text_.size() ? std::string(1, text_[pos_]) : std::string("end of input");
    throw Error(ErrorKind::SyntaxError, what + " near '" + near + "' on line " + std::to_string(line_));
  }

private:
  void skip_inline_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t'))
      ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

// Orients every strand component. Under-passes fix the direction; an all-over
// component gets the deterministic rule documented on parse().
void infer_orientation(std::vector<Crossing> &xs) {
  std::map<int, std::vector<Slot>> occ;
  for (std::size_t c = 0; c < xs.size(); ++c)
    for (int i = 0; i < 4; ++i)
      occ[xs[c].arcs[idx(i)]].push_back(Slot{static_cast<int>(c), i});

  // pass (c, pair): pair 0 is the under-strand, 1 the over-strand.
  std::vector<std::array<bool, 2>> visited(xs.size(), {false, false});
  for (std::size_t c0 = 0; c0 < xs.size(); ++c0) {
    for (int pair = 0; pair < 2; ++pair) {
      if (visited[c0][idx(pair)])
        continue;
      struct Pass {
        int crossing;
        int enter;
        int leaving_arc;
      };
      std::vector<Pass> passes;
      int c = static_cast<int>(c0);
      int enter = pair;
      while (!visited[idx(c)][idx(enter & 1)]) {
        visited[idx(c)][idx(enter & 1)] = true;
        const int exit = (enter + 2) & 3;
        const int arc = xs[idx(c)].arcs[idx(exit)];
        passes.push_back(Pass{c, enter, arc});
        const auto &ends = occ.at(arc);
        const Slot next = (ends[0] == Slot{c, exit}) ? ends[1] : ends[0];
        c = next.crossing;
        enter = next.index;
      }

      int forward_votes = 0;
      int reverse_votes = 0;
      for (const auto &p : passes) {
        if (p.enter == 0)
          ++forward_votes;
        else if (p.enter == 2)
          ++reverse_votes;
      }
      if (forward_votes > 0 && reverse_votes > 0)
        throw Error(ErrorKind::OrientationError,
                    "strand through arc " + std::to_string(passes.front().leaving_arc) + " runs both ways");

      bool reversed = reverse_votes > 0;
      const std::size_t len = passes.size();
      if (forward_votes == 0 && reverse_votes == 0 && len >= 3) {
        std::size_t k = 0;
        for (std::size_t j = 1; j < len; ++j)
          if (passes[j].leaving_arc < passes[k].leaving_arc)
            k = j;
        const int succ = passes[(k + 1) % len].leaving_arc;
        const int pred = passes[(k + len - 1) % len].leaving_arc;
        reversed = succ > pred;
      } else if (forward_votes == 0 && reverse_votes == 0 && len == 2) {
        const auto &early = passes[0].crossing < passes[1].crossing ? passes[0] : passes[1];
        reversed = early.enter != 1;
      }

      for (const auto &p : passes) {
        if (p.enter == 0 || p.enter == 2)
          continue;
        const int actual_entry = reversed ? (p.enter + 2) & 3 : p.enter;
        xs[idx(p.crossing)].over_forward = actual_entry == 1;
      }
    }
  }
}

} // namespace

StuckDiagram parse(std::string_view text) {
  Lexer lex(text);
  std::vector<Crossing> xs;
  int loops = 0;
  while (!lex.done()) {
    const char kind = lex.get();
    if (kind == 'O') {
      ++loops;
      continue;
    }
    if (kind != 'X' && kind != 'S') {
      throw Error(ErrorKind::SyntaxError,
                  std::string("unexpected token '") + kind + "' on line " + std::to_string(lex.line()));
    }
    Crossing x;
    x.kind = kind == 'S' ? CrossingKind::Stuck : CrossingKind::Classical;
    lex.expect('[');
    for (int i = 0; i < 4; ++i) {
      if (i > 0)
        lex.expect(',');
      x.arcs[idx(i)] = lex.integer();
    }
    lex.expect(']');
    xs.push_back(x);
  }

  std::map<int, int> count;
  for (const auto &x : xs)
    for (int a : x.arcs)
      ++count[a];
  for (auto [id, n] : count)
    if (n != 2)
      throw Error(ErrorKind::ArcMultiplicityError, "arc " + std::to_string(id));

  infer_orientation(xs);
  return StuckDiagram::build(std::move(xs), loops);
}

std::string serialize(const StuckDiagram &d) { return canonical_code(d); }

// Edits ------------------------------------------------------------------

namespace {

// Removes `cs`, merging the arc pairs in `joins`; leftover crossing-free
// circles become free loops.
StuckDiagram rebuild_without(const StuckDiagram &d, std::span<const int> cs,
                             const std::vector<std::pair<int, int>> &joins) {
  detail::UnionFind uf(idx(d.arc_count()));
  for (auto [x, y] : joins)
    uf.unite(idx(x), idx(y));

  std::vector<bool> removed(idx(d.crossing_count()), false);
  for (int c : cs)
    removed[idx(c)] = true;

  std::vector<Crossing> kept;
  std::vector<bool> root_used(idx(d.arc_count()), false);
  for (int c = 0; c < d.crossing_count(); ++c) {
    if (removed[idx(c)])
      continue;
    Crossing x = d.crossing(c);
    for (int &a : x.arcs) {
      a = static_cast<int>(uf.find(idx(a)));
      root_used[idx(a)] = true;
    }
    kept.push_back(x);
  }
  std::vector<bool> counted(idx(d.arc_count()), false);
  int loops = d.free_loops();
  for (int c : cs) {
    for (int a : d.crossing(c).arcs) {
      const std::size_t r = uf.find(idx(a));
      if (!root_used[r] && !counted[r]) {
        counted[r] = true;
        ++loops;
      }
    }
  }
  return StuckDiagram::build(std::move(kept), loops);
}

void check_index(const StuckDiagram &d, int c) {
  if (c < 0 || c >= d.crossing_count())
    throw Error(ErrorKind::InapplicableMove, "no crossing " + std::to_string(c));
}

} // namespace

StuckDiagram remove_crossings(const StuckDiagram &d, std::span<const int> cs) {
  std::vector<std::pair<int, int>> joins;
  for (int c : cs) {
    check_index(d, c);
    const auto &a = d.crossing(c).arcs;
    joins.emplace_back(a[0], a[2]);
    joins.emplace_back(a[1], a[3]);
  }
  return rebuild_without(d, cs, joins);
}

StuckDiagram forget_rigidity(const StuckDiagram &d) {
  auto xs = d.crossings();
  for (auto &x : xs)
    x.kind = CrossingKind::Classical;
  return StuckDiagram::build(std::move(xs), d.free_loops());
}

StuckDiagram include_classical(const StuckDiagram &d) {
  if (d.stuck_count() != 0)
    throw Error(ErrorKind::NotClassical, "diagram has " + std::to_string(d.stuck_count()) + " stuck crossings");
  return d;
}

StuckDiagram unstick(const StuckDiagram &d, int c) {
  check_index(d, c);
  if (!d.crossing(c).is_stuck())
    throw Error(ErrorKind::NotStuck, "crossing " + std::to_string(c) + " is classical");
  auto xs = d.crossings();
  xs[idx(c)].kind = CrossingKind::Classical;
  return StuckDiagram::build(std::move(xs), d.free_loops());
}

StuckDiagram stuck_to_classical_crossing(const StuckDiagram &d, int c) { return unstick(d, c); }

StuckDiagram smooth_oriented(const StuckDiagram &d, int c) {
  check_index(d, c);
  const auto &x = d.crossing(c);
  const int over_in = x.over_forward ? 1 : 3;
  const int over_out = x.over_forward ? 3 : 1;
  const std::vector<std::pair<int, int>> joins = {{x.arcs[0], x.arcs[idx(over_out)]},
                                                  {x.arcs[idx(over_in)], x.arcs[2]}};
  const int cs[] = {c};
  return rebuild_without(d, cs, joins);
}

StuckDiagram switch_crossing(const StuckDiagram &d, int c) {
  check_index(d, c);
  const auto &x = d.crossing(c);
  if (x.is_stuck())
    throw Error(ErrorKind::NotClassical, "crossing " + std::to_string(c) + " is stuck");
  auto xs = d.crossings();
  auto &y = xs[idx(c)];
  const auto &s = x.arcs;
  if (x.over_forward) {
    y.arcs = {s[1], s[2], s[3], s[0]};
    y.over_forward = false;
  } else {
    y.arcs = {s[3], s[0], s[1], s[2]};
    y.over_forward = true;
  }
  return StuckDiagram::build(std::move(xs), d.free_loops());
}

StuckDiagram disjoint_union(const StuckDiagram &d1, const StuckDiagram &d2) {
  auto xs = d1.crossings();
  const int offset = d1.arc_count();
  for (auto x : d2.crossings()) {
    for (int &a : x.arcs)
      a += offset;
    xs.push_back(x);
  }
  return StuckDiagram::build(std::move(xs), d1.free_loops() + d2.free_loops());
}

StuckDiagram braid_closure(int strands, std::span<const int> word) {
  std::vector<int> current(idx(strands));
  std::iota(current.begin(), current.end(), 0);
  int next_id = strands;
  std::vector<Crossing> xs;
  for (int g : word) {
    const int i = std::abs(g) - 1;
    if (g == 0 || i + 1 >= strands)
      throw Error(ErrorKind::SyntaxError, "braid generator " + std::to_string(g) + " out of range");
    const int in_left = current[idx(i)];
    const int in_right = current[idx(i + 1)];
    const int out_left = next_id++;
    const int out_right = next_id++;
    Crossing x;
    if (g > 0) {
      x.arcs = {in_left, in_right, out_right, out_left};
      x.over_forward = true;
    } else {
      x.arcs = {in_right, out_right, out_left, in_left};
      x.over_forward = false;
    }
    xs.push_back(x);
    current[idx(i)] = out_left;
    current[idx(i + 1)] = out_right;
  }
  int loops = 0;
  for (int p = 0; p < strands; ++p) {
    if (current[idx(p)] == p) {
      ++loops;
      continue;
    }
    for (auto &x : xs)
      for (int &a : x.arcs)
        if (a == current[idx(p)])
          a = p;
  }
  return StuckDiagram::build(std::move(xs), loops);
}

} // namespace stuckknot

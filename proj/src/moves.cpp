#include <algorithm>
#include <sstream>

#include "stuckknot/error.hpp"
#include "stuckknot/isotopy.hpp"

namespace stuckknot {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

[[noreturn]] void inapplicable(const Move &m, const std::string &why) {
  throw Error(ErrorKind::InapplicableMove, m.to_string() + ": " + why);
}

// Builds a crossing from four arcs listed counterclockwise. The strand on the
// positions with parity `under_parity` goes under.
Crossing make_crossing(CrossingKind kind, std::array<int, 4> ccw, std::array<bool, 4> incoming, int under_parity) {
  const int k = incoming[idx(under_parity)] ? under_parity : under_parity + 2;
  Crossing x;
  x.kind = kind;
  for (int i = 0; i < 4; ++i)
    x.arcs[idx(i)] = ccw[idx((k + i) & 3)];
  x.over_forward = incoming[idx((k + 1) & 3)];
  return x;
}

bool has_loop(const Crossing &x) {
  for (int i = 0; i < 4; ++i)
    if (x.arcs[idx(i)] == x.arcs[idx((i + 1) & 3)])
      return true;
  return false;
}

// Bigon face whose shared strand is over (or under) at both crossings.
struct Bigon {
  int c1, c2;
  int e, f;
  bool cancellable;
};

std::optional<Bigon> as_bigon(const StuckDiagram &d, const std::vector<Slot> &face) {
  if (face.size() != 2)
    return std::nullopt;
  const Slot s0 = face[0];
  const Slot s1 = face[1];
  if (s0.crossing == s1.crossing)
    return std::nullopt;
  const int e = d.arc_at(s0);
  const int f = d.arc_at(s1);
  if (e == f)
    return std::nullopt;
  const Slot e_far = d.other_end(s0);
  Bigon b{std::min(s0.crossing, s1.crossing), std::max(s0.crossing, s1.crossing), e, f,
          (s0.index & 1) == (e_far.index & 1)};
  return b;
}

struct Triangle {
  int x, y, z;       // crossings, counterclockwise
  int jx, jy, jz;    // slot of the side leaving towards the next vertex
  bool p_under_x;    // strand P (sides p) passes under at X
  bool q_under_y;
  bool s_under_z;
};

// Reads the triangle starting at dart s0 = (Y, i0). Sides: p = X-Y, q = Y-Z,
// s = Z-X, with X, Y, Z counterclockwise.
std::optional<Triangle> as_triangle(const StuckDiagram &d, Slot s0) {
  const Slot t0 = d.other_end(s0);
  const Slot s1{t0.crossing, (t0.index + 1) & 3};
  const Slot t1 = d.other_end(s1);
  const Slot s2{t1.crossing, (t1.index + 1) & 3};
  const Slot t2 = d.other_end(s2);
  if (t2.crossing != s0.crossing || ((t2.index + 1) & 3) != s0.index)
    return std::nullopt;
  if (s0.crossing == t0.crossing || t0.crossing == t1.crossing || t1.crossing == s0.crossing)
    return std::nullopt;
  Triangle tr{};
  tr.x = t0.crossing;
  tr.y = s0.crossing;
  tr.z = t1.crossing;
  tr.jx = t0.index;
  tr.jy = t2.index;
  tr.jz = t1.index;
  tr.p_under_x = (tr.jx & 1) == 0;
  tr.q_under_y = (tr.jy & 1) == 0;
  tr.s_under_z = (tr.jz & 1) == 0;
  return tr;
}

bool r3_allowed(const Triangle &t) {
  const bool p_top = !t.p_under_x && t.q_under_y;
  const bool q_top = !t.q_under_y && t.s_under_z;
  const bool s_top = !t.s_under_z && t.p_under_x;
  return p_top || q_top || s_top;
}

// The strand opposite the single stuck vertex must pass over both of its
// edges or under both.
bool slide_allowed(const StuckDiagram &d, const Triangle &t) {
  const bool sx = d.crossing(t.x).is_stuck();
  const bool sy = d.crossing(t.y).is_stuck();
  const bool sz = d.crossing(t.z).is_stuck();
  if (sx + sy + sz != 1)
    return false;
  if (sx)
    return !t.q_under_y == t.s_under_z;
  if (sy)
    return !t.s_under_z == t.p_under_x;
  return !t.p_under_x == t.q_under_y;
}

StuckDiagram apply_triangle(const StuckDiagram &d, const Triangle &t) {
  const auto &X = d.crossing(t.x);
  const auto &Y = d.crossing(t.y);
  const auto &Z = d.crossing(t.z);
  auto at = [](const Crossing &c, int i) { return c.arcs[idx(i & 3)]; };
  const int p = at(X, t.jx);
  const int s = at(X, t.jx + 1);
  const int p_x = at(X, t.jx + 2);
  const int s_x = at(X, t.jx + 3);
  const int q = at(Y, t.jy);
  const int q_y = at(Y, t.jy + 2);
  const int p_y = at(Y, t.jy + 3);
  const int s_z = at(Z, t.jz + 2);
  const int q_z = at(Z, t.jz + 3);
  const bool fp = X.is_incoming(t.jx + 2);
  const bool fq = Y.is_incoming(t.jy + 2);
  const bool fs = Z.is_incoming(t.jz + 2);

  auto xs = d.crossings();
  xs[idx(t.x)] = make_crossing(X.kind, {p, s, p_y, s_z}, {fp, !fs, !fp, fs}, t.p_under_x ? 0 : 1);
  xs[idx(t.y)] = make_crossing(Y.kind, {q, p, q_z, p_x}, {fq, !fp, !fq, fp}, t.q_under_y ? 0 : 1);
  xs[idx(t.z)] = make_crossing(Z.kind, {s, q, s_x, q_y}, {fs, !fq, !fs, fq}, t.s_under_z ? 0 : 1);
  return StuckDiagram::build(std::move(xs), d.free_loops());
}

bool same_face(const StuckDiagram &d, Slot a, Slot b) {
  Slot s = a;
  do {
    if (s == b)
      return true;
    const Slot t = d.other_end(s);
    s = Slot{t.crossing, (t.index + 1) & 3};
  } while (!(s == a));
  return false;
}

StuckDiagram add_kink(const StuckDiagram &d, const Move &m) {
  const int n = d.arc_count();
  auto xs = d.crossings();
  if (m.site.size() != 1 || m.param < 0 || m.param > 3)
    inapplicable(m, "bad site");
  if (m.site[0] < 0) {
    if (d.free_loops() == 0 || m.param > 1)
      inapplicable(m, "no free loop");
    const int outer = n;
    const int loop = n + 1;
    Crossing x;
    x.arcs = m.param == 0 ? std::array<int, 4>{outer, loop, loop, outer} : std::array<int, 4>{outer, outer, loop, loop};
    x.over_forward = m.param == 0;
    xs.push_back(x);
    return StuckDiagram::build(std::move(xs), d.free_loops() - 1);
  }
  const int e = m.site[0];
  if (e >= n)
    inapplicable(m, "no such arc");
  const Slot h = d.head(e);
  const int loop = n;
  const int e2 = n + 1;
  xs[idx(h.crossing)].arcs[idx(h.index)] = e2;
  Crossing x;
  switch (m.param) {
  case 0: x.arcs = {e, loop, loop, e2}; x.over_forward = true; break;
  case 1: x.arcs = {e, e2, loop, loop}; x.over_forward = false; break;
  case 2: x.arcs = {loop, loop, e2, e}; x.over_forward = false; break;
  default: x.arcs = {loop, e, e2, loop}; x.over_forward = true; break;
  }
  xs.push_back(x);
  return StuckDiagram::build(std::move(xs), d.free_loops());
}

// Pushes a finger of the first dart's arc e across the second dart's arc f
// inside their common face, creating crossings P and Q.
StuckDiagram add_bigon(const StuckDiagram &d, const Move &m) {
  if (m.site.size() != 4 || m.param < 0 || m.param > 1)
    inapplicable(m, "bad site");
  for (int k : {0, 2})
    if (m.site[idx(k)] < 0 || m.site[idx(k)] >= d.crossing_count() || m.site[idx(k + 1)] < 0 || m.site[idx(k + 1)] > 3)
      inapplicable(m, "no such dart");
  const Slot d1{m.site[0], m.site[1]};
  const Slot d2{m.site[2], m.site[3]};
  const int e = d.arc_at(d1);
  const int f = d.arc_at(d2);
  if (e == f || !same_face(d, d1, d2))
    inapplicable(m, "darts do not bound a common face with distinct arcs");

  const Slot end1 = d.other_end(d1);
  const Slot end2 = d.other_end(d2);
  const bool e_fwd = !d.crossing(d1.crossing).is_incoming(d1.index);
  const bool f_fwd = !d.crossing(d2.crossing).is_incoming(d2.index);
  const int n = d.arc_count();
  const int e_mid = n;
  const int e2 = n + 1;
  const int f_mid = n + 2;
  const int f2 = n + 3;

  auto xs = d.crossings();
  xs[idx(end1.crossing)].arcs[idx(end1.index)] = e2;
  xs[idx(end2.crossing)].arcs[idx(end2.index)] = f2;
  const int under_parity = m.param == 0 ? 0 : 1;
  xs.push_back(make_crossing(CrossingKind::Classical, {f_mid, e_mid, f, e2}, {!f_fwd, e_fwd, f_fwd, !e_fwd}, under_parity));
  xs.push_back(make_crossing(CrossingKind::Classical, {f2, e_mid, f_mid, e}, {!f_fwd, !e_fwd, f_fwd, e_fwd}, under_parity));
  return StuckDiagram::build(std::move(xs), d.free_loops());
}

void check_crossing(const StuckDiagram &d, const Move &m, std::size_t n) {
  if (m.site.size() != n)
    inapplicable(m, "bad site");
  for (int c : m.site)
    if (c < 0 || c >= d.crossing_count())
      inapplicable(m, "no such crossing");
}

} // namespace

std::string to_string(MoveKind k) {
  switch (k) {
  case MoveKind::R1_add: return "R1_add";
  case MoveKind::R1_remove: return "R1_remove";
  case MoveKind::R2_add: return "R2_add";
  case MoveKind::R2_remove: return "R2_remove";
  case MoveKind::R3: return "R3";
  case MoveKind::RigidSlide: return "RigidSlide";
  case MoveKind::Unstick: return "Unstick";
  }
  return "?";
}

std::string Move::to_string() const {
  std::ostringstream os;
  os << stuckknot::to_string(kind) << '[';
  for (std::size_t i = 0; i < site.size(); ++i)
    os << (i ? "," : "") << site[i];
  os << ']';
  if (kind == MoveKind::R1_add || kind == MoveKind::R2_add)
    os << '/' << param;
  return os.str();
}

nlohmann::json Move::to_json() const { return {{"kind", stuckknot::to_string(kind)}, {"site", site}, {"param", param}}; }

Move Move::from_json(const nlohmann::json &j) {
  Move m;
  const auto name = j.at("kind").get<std::string>();
  bool found = false;
  for (auto k : {MoveKind::R1_add, MoveKind::R1_remove, MoveKind::R2_add, MoveKind::R2_remove, MoveKind::R3,
                 MoveKind::RigidSlide, MoveKind::Unstick}) {
    if (stuckknot::to_string(k) == name) {
      m.kind = k;
      found = true;
    }
  }
  if (!found)
    throw Error(ErrorKind::SyntaxError, "unknown move kind '" + name + "'");
  m.site = j.at("site").get<std::vector<int>>();
  m.param = j.value("param", 0);
  return m;
}

std::vector<Move> available_moves(const StuckDiagram &d, bool allow_unstick, int max_crossings) {
  std::vector<Move> out;
  const int n = d.crossing_count();

  for (int c = 0; c < n; ++c) {
    const auto &x = d.crossing(c);
    if (!x.is_stuck() && has_loop(x))
      out.push_back({MoveKind::R1_remove, {c}, 0});
    if (x.is_stuck() && allow_unstick)
      out.push_back({MoveKind::Unstick, {c}, 0});
  }

  if (n + 1 <= max_crossings) {
    for (int a = 0; a < d.arc_count(); ++a)
      for (int v = 0; v < 4; ++v)
        out.push_back({MoveKind::R1_add, {a}, v});
    if (d.free_loops() > 0) {
      out.push_back({MoveKind::R1_add, {-1}, 0});
      out.push_back({MoveKind::R1_add, {-1}, 1});
    }
  }

  const bool can_add_two = n + 2 <= max_crossings;
  for (const auto &face : faces(d)) {
    if (auto b = as_bigon(d, face); b && b->cancellable) {
      if (!d.crossing(b->c1).is_stuck() && !d.crossing(b->c2).is_stuck())
        out.push_back({MoveKind::R2_remove, {b->c1, b->c2}, 0});
    }
    if (face.size() == 3) {
      if (auto t = as_triangle(d, face.front())) {
        const int stuck = d.crossing(t->x).is_stuck() + d.crossing(t->y).is_stuck() + d.crossing(t->z).is_stuck();
        const Slot s = face.front();
        if (stuck == 0 && r3_allowed(*t))
          out.push_back({MoveKind::R3, {s.crossing, s.index}, 0});
        else if (stuck == 1 && slide_allowed(d, *t))
          out.push_back({MoveKind::RigidSlide, {s.crossing, s.index}, 0});
      }
    }
    if (can_add_two) {
      for (std::size_t i = 0; i < face.size(); ++i) {
        for (std::size_t j = i + 1; j < face.size(); ++j) {
          if (d.arc_at(face[i]) == d.arc_at(face[j]))
            continue;
          Slot a = face[i];
          Slot b = face[j];
          if (std::pair(b.crossing, b.index) < std::pair(a.crossing, a.index))
            std::swap(a, b);
          for (int param = 0; param < 2; ++param)
            out.push_back({MoveKind::R2_add, {a.crossing, a.index, b.crossing, b.index}, param});
        }
      }
    }
  }

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

StuckDiagram apply_move(const StuckDiagram &d, const Move &m) {
  switch (m.kind) {
  case MoveKind::R1_add:
    return add_kink(d, m);
  case MoveKind::R1_remove: {
    check_crossing(d, m, 1);
    const auto &x = d.crossing(m.site[0]);
    if (x.is_stuck())
      inapplicable(m, "Reidemeister 1 is not allowed at a stuck crossing");
    if (!has_loop(x))
      inapplicable(m, "crossing has no kink loop");
    return remove_crossings(d, m.site);
  }
  case MoveKind::R2_add:
    return add_bigon(d, m);
  case MoveKind::R2_remove: {
    check_crossing(d, m, 2);
    const int c1 = std::min(m.site[0], m.site[1]);
    const int c2 = std::max(m.site[0], m.site[1]);
    if (d.crossing(c1).is_stuck() || d.crossing(c2).is_stuck())
      inapplicable(m, "Reidemeister 2 cancellation blocked by a stuck crossing");
    for (const auto &face : faces(d)) {
      auto b = as_bigon(d, face);
      if (b && b->cancellable && b->c1 == c1 && b->c2 == c2) {
        const int cs[] = {c1, c2};
        return remove_crossings(d, cs);
      }
    }
    inapplicable(m, "crossings do not bound a cancellable bigon");
  }
  case MoveKind::R3:
  case MoveKind::RigidSlide: {
    if (m.site.size() != 2 || m.site[0] < 0 || m.site[0] >= d.crossing_count() || m.site[1] < 0 || m.site[1] > 3)
      inapplicable(m, "bad site");
    auto t = as_triangle(d, Slot{m.site[0], m.site[1]});
    if (!t)
      inapplicable(m, "dart does not bound a triangle");
    const int stuck = d.crossing(t->x).is_stuck() + d.crossing(t->y).is_stuck() + d.crossing(t->z).is_stuck();
    if (m.kind == MoveKind::R3 && (stuck != 0 || !r3_allowed(*t)))
      inapplicable(m, "triangle does not admit Reidemeister 3");
    if (m.kind == MoveKind::RigidSlide && !slide_allowed(d, *t))
      inapplicable(m, "strand does not pass consistently over or under the stuck vertex");
    return apply_triangle(d, *t);
  }
  case MoveKind::Unstick:
    check_crossing(d, m, 1);
    if (!d.crossing(m.site[0]).is_stuck())
      inapplicable(m, "crossing is classical");
    return unstick(d, m.site[0]);
  }
  inapplicable(m, "unknown move");
}

} // namespace stuckknot

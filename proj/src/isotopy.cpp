#include "stuckknot/isotopy.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "stuckknot/bracket.hpp"
#include "stuckknot/error.hpp"
#include "stuckknot/skein.hpp"

namespace stuckknot {

namespace {

bool is_removal(const Move &m) { return m.kind == MoveKind::R1_remove || m.kind == MoveKind::R2_remove; }

std::optional<Move> first_removal(const StuckDiagram &d) {
  for (const auto &m : available_moves(d, false, -1))
    if (is_removal(m))
      return m;
  return std::nullopt;
}

bool disjoint(const std::vector<int> &a, const std::vector<int> &b) {
  for (int x : a)
    if (std::find(b.begin(), b.end(), x) != b.end())
      return false;
  return true;
}

void best_packing(const std::vector<std::vector<bool>> &conflict, std::vector<int> &chosen, std::size_t next,
                  int &best) {
  const int n = static_cast<int>(conflict.size());
  if (static_cast<int>(chosen.size()) + (n - static_cast<int>(next)) <= best)
    return;
  if (next == conflict.size()) {
    best = static_cast<int>(chosen.size());
    return;
  }
  bool free = true;
  for (int c : chosen)
    free = free && !conflict[next][static_cast<std::size_t>(c)];
  if (free) {
    chosen.push_back(static_cast<int>(next));
    best_packing(conflict, chosen, next + 1, best);
    chosen.pop_back();
  }
  best_packing(conflict, chosen, next + 1, best);
}

std::unordered_set<std::string> goal_codes(const StuckDiagram &target) {
  return {canonical_code(target), canonical_code(simplify(target).diagram)};
}

void check_same_classical_type(const StuckDiagram &a, const StuckDiagram &b) {
  const auto ca = forget_rigidity(a);
  const auto cb = forget_rigidity(b);
  if (rigid_homflypt(ca) != rigid_homflypt(cb))
    throw Error(ErrorKind::InvariantMismatch, "underlying classical links have different HOMFLYPT polynomials");
  if (ca.classical_count() <= BracketOptions{}.max_classical && cb.classical_count() <= BracketOptions{}.max_classical &&
      normalized_bracket(ca) != normalized_bracket(cb))
    throw Error(ErrorKind::InvariantMismatch, "underlying classical links have different brackets");
}

int default_max(const StuckDiagram &a, const StuckDiagram &b, const SearchLimits &limits) {
  return limits.max_crossings >= 0 ? limits.max_crossings : std::max(a.crossing_count(), b.crossing_count());
}

} // namespace

std::vector<Barrier> detect_barriers(const StuckDiagram &d) {
  std::vector<Barrier> out;
  for (int c = 0; c < d.crossing_count(); ++c) {
    const auto &x = d.crossing(c);
    if (!x.is_stuck())
      continue;
    std::vector<int> loops;
    for (std::size_t i = 0; i < 4; ++i)
      if (x.arcs[i] == x.arcs[(i + 1) & 3] && std::find(loops.begin(), loops.end(), x.arcs[i]) == loops.end())
        loops.push_back(x.arcs[i]);
    if (!loops.empty())
      out.push_back({BarrierKind::RigidTwist, {c}, loops});
  }
  for (const auto &face : faces(d)) {
    if (face.size() != 2 || face[0].crossing == face[1].crossing)
      continue;
    const int e = d.arc_at(face[0]);
    const int f = d.arc_at(face[1]);
    if (e == f)
      continue;
    const int c1 = std::min(face[0].crossing, face[1].crossing);
    const int c2 = std::max(face[0].crossing, face[1].crossing);
    if (d.crossing(c1).is_stuck() == d.crossing(c2).is_stuck())
      continue;
    // The same strand is over at both ends of e.
    if ((face[0].index & 1) != (d.other_end(face[0]).index & 1))
      continue;
    out.push_back({BarrierKind::HalfRigidR2, {c1, c2}, {std::min(e, f), std::max(e, f)}});
  }
  return out;
}

int barrier_lower_bound(const StuckDiagram &d) {
  const auto bs = detect_barriers(d);
  std::vector<std::vector<bool>> conflict(bs.size(), std::vector<bool>(bs.size(), false));
  for (std::size_t i = 0; i < bs.size(); ++i)
    for (std::size_t j = 0; j < bs.size(); ++j)
      conflict[i][j] = i != j && (!disjoint(bs[i].crossings, bs[j].crossings) || !disjoint(bs[i].arcs, bs[j].arcs));
  std::vector<int> chosen;
  int best = 0;
  best_packing(conflict, chosen, 0, best);
  return best;
}

Simplification simplify(const StuckDiagram &d) {
  Simplification out{d, {}};
  for (;;) {
    if (auto m = first_removal(out.diagram)) {
      out.diagram = apply_move(out.diagram, *m);
      out.moves.push_back(*m);
      continue;
    }
    bool progressed = false;
    for (const auto &m : available_moves(out.diagram, false, -1)) {
      if (m.kind != MoveKind::R3 && m.kind != MoveKind::RigidSlide)
        continue;
      auto next = apply_move(out.diagram, m);
      if (first_removal(next)) {
        out.diagram = std::move(next);
        out.moves.push_back(m);
        progressed = true;
        break;
      }
    }
    if (!progressed)
      return out;
  }
}

std::optional<int> unstick_upper_bound(const StuckDiagram &d, const StuckDiagram &target) {
  check_same_classical_type(d, target);
  const auto goals = goal_codes(target);
  StuckDiagram cur = d;
  int unsticks = 0;
  for (;;) {
    cur = simplify(cur).diagram;
    if (goals.count(canonical_code(cur)))
      return unsticks;
    if (cur.stuck_count() <= target.stuck_count())
      return std::nullopt;
    int site = -1;
    for (const auto &b : detect_barriers(cur)) {
      for (int c : b.crossings) {
        if (cur.crossing(c).is_stuck()) {
          site = c;
          break;
        }
      }
      if (site >= 0)
        break;
    }
    for (int c = 0; site < 0 && c < cur.crossing_count(); ++c)
      if (cur.crossing(c).is_stuck())
        site = c;
    cur = unstick(cur, site);
    ++unsticks;
  }
}

StuckDiagram replay(const StuckDiagram &start, const std::vector<Move> &moves) {
  StuckDiagram cur = start;
  for (const auto &m : moves)
    cur = apply_move(canonical_form(cur).diagram, m);
  return cur;
}

nlohmann::json DistanceReport::to_json() const {
  nlohmann::json j;
  j["lower"] = lower;
  j["upper"] = upper ? nlohmann::json(*upper) : nlohmann::json(nullptr);
  j["exact"] = exact ? nlohmann::json(*exact) : nlohmann::json(nullptr);
  j["exhausted"] = exhausted;
  j["certificate"] = nlohmann::json::array();
  for (const auto &m : certificate)
    j["certificate"].push_back(m.to_json());
  j["certificate_from_first"] = certificate_from_first;
  j["nodes"] = nodes;
  j["note"] = note;
  return j;
}

DistanceReport unsticking_distance(const StuckDiagram &d1, const StuckDiagram &d2, const SearchLimits &limits) {
  DistanceReport rep;
  rep.note = "exact is relative to the implemented move set (R1, R2, R3, RigidSlide, Unstick) within the crossing cap";
  const bool first_hi = d1.stuck_count() >= d2.stuck_count();
  const StuckDiagram &hi = first_hi ? d1 : d2;
  const StuckDiagram &lo = first_hi ? d2 : d1;
  rep.certificate_from_first = first_hi;
  const int k_lo = lo.stuck_count();
  rep.lower = hi.stuck_count() - k_lo;
  if (k_lo == 0)
    rep.lower = std::max(rep.lower, barrier_lower_bound(hi));

  try {
    rep.upper = unstick_upper_bound(hi, lo);
  } catch (const Error &e) {
    if (e.kind() == ErrorKind::InvariantMismatch) {
      rep.note = std::string("no relaxed isotopy exists: ") + e.what();
      return rep;
    }
    if (!e.is_budget_error())
      throw;
  }

  const int max_crossings = default_max(d1, d2, limits);
  const auto goals = goal_codes(lo);

  struct Node {
    StuckDiagram diagram;
    int dist;
    std::string parent;
    Move via;
  };
  std::unordered_map<std::string, Node> seen;
  std::deque<std::string> queue;
  auto start = canonical_form(hi);
  seen.emplace(start.code, Node{start.diagram, 0, {}, {}});
  queue.push_back(start.code);

  std::string found;
  if (goals.count(start.code))
    found = start.code;
  while (found.empty() && !queue.empty()) {
    if (rep.nodes >= limits.node_budget) {
      rep.exhausted = true;
      break;
    }
    const std::string code = queue.front();
    queue.pop_front();
    ++rep.nodes;
    const Node node = seen.at(code);
    const bool may_unstick = node.diagram.stuck_count() > k_lo;
    for (const auto &m : available_moves(node.diagram, may_unstick, max_crossings)) {
      auto next = canonical_form(apply_move(node.diagram, m));
      const int cost = m.kind == MoveKind::Unstick ? 1 : 0;
      const int dist = node.dist + cost;
      auto it = seen.find(next.code);
      if (it != seen.end() && it->second.dist <= dist)
        continue;
      seen.insert_or_assign(next.code, Node{std::move(next.diagram), dist, code, m});
      if (goals.count(next.code)) {
        found = next.code;
        break;
      }
      if (cost == 0)
        queue.push_front(next.code);
      else
        queue.push_back(next.code);
    }
  }

  if (!found.empty()) {
    rep.exact = seen.at(found).dist;
    for (std::string c = found; !seen.at(c).parent.empty(); c = seen.at(c).parent)
      rep.certificate.push_back(seen.at(c).via);
    std::reverse(rep.certificate.begin(), rep.certificate.end());
    if (!rep.upper || *rep.upper < *rep.exact)
      rep.upper = rep.exact;
  }
  return rep;
}

Exploration explore(const StuckDiagram &d, bool allow_unstick, const SearchLimits &limits) {
  Exploration out;
  const int max_crossings = default_max(d, d, limits);
  std::unordered_map<std::string, StuckDiagram> pending;
  std::deque<std::string> queue;
  auto start = canonical_form(d);
  out.codes.insert(start.code);
  pending.emplace(start.code, start.diagram);
  queue.push_back(start.code);
  std::size_t nodes = 0;
  while (!queue.empty()) {
    if (nodes++ >= limits.node_budget) {
      out.exhausted = true;
      break;
    }
    const auto code = queue.front();
    queue.pop_front();
    const StuckDiagram cur = std::move(pending.at(code));
    pending.erase(code);
    for (const auto &m : available_moves(cur, allow_unstick, max_crossings)) {
      auto next = canonical_form(apply_move(cur, m));
      if (out.codes.insert(next.code).second) {
        pending.emplace(next.code, std::move(next.diagram));
        queue.push_back(next.code);
      }
    }
  }
  return out;
}

FuzzResult fuzz_sequence(const StuckDiagram &d, int length, std::uint64_t seed, int max_crossings) {
  FuzzResult out{d, {}};
  std::mt19937_64 rng(seed);
  for (int step = 0; step < length; ++step) {
    const auto moves = available_moves(out.diagram, false, max_crossings);
    if (moves.empty())
      break;
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    const Move &m = moves[pick(rng)];
    out.diagram = apply_move(out.diagram, m);
    out.moves.push_back(m);
  }
  return out;
}

} // namespace stuckknot

#include "stuckknot/bracket.hpp"

#include <algorithm>
#include <cstdint>
#include <thread>

#include "stuckknot/error.hpp"
#include "union_find.hpp"

namespace stuckknot {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

// Arc ids of each classical crossing, plus the unions every state shares.
struct Resolver {
  std::vector<std::array<int, 4>> classical;
  std::vector<std::array<int, 4>> stuck;
  int arcs = 0;
  int loops = 0;

  explicit Resolver(const StuckDiagram &d) : arcs(d.arc_count()), loops(d.free_loops()) {
    for (const auto &x : d.crossings())
      (x.is_stuck() ? stuck : classical).push_back(x.arcs);
  }

  // Component count for the state whose bit i selects B at classical crossing i.
  int components(std::uint64_t mask, detail::UnionFind &uf) const {
    uf.reset();
    int classes = arcs;
    for (const auto &s : stuck) {
      classes -= uf.unite(idx(s[0]), idx(s[1]));
      classes -= uf.unite(idx(s[0]), idx(s[2]));
      classes -= uf.unite(idx(s[0]), idx(s[3]));
    }
    for (std::size_t i = 0; i < classical.size(); ++i) {
      const auto &s = classical[i];
      if ((mask >> i) & 1U) {
        classes -= uf.unite(idx(s[0]), idx(s[1]));
        classes -= uf.unite(idx(s[2]), idx(s[3]));
      } else {
        classes -= uf.unite(idx(s[0]), idx(s[3]));
        classes -= uf.unite(idx(s[1]), idx(s[2]));
      }
    }
    return classes + loops;
  }
};

} // namespace

LaurentPoly State::weight() const {
  return LaurentPoly::from_term(1, Exponents{{Var::A, alpha - beta}, {Var::R, nu}});
}

State resolve_state(const StuckDiagram &d, std::span<const Smoothing> choices) {
  const Resolver res(d);
  if (choices.size() != res.classical.size())
    throw Error(ErrorKind::ChoiceArityMismatch, "expected " + std::to_string(res.classical.size()) +
                                                    " choices, got " + std::to_string(choices.size()));
  if (choices.size() > 64)
    throw Error(ErrorKind::CapExceeded, "more than 64 classical crossings");
  std::uint64_t mask = 0;
  State st;
  st.choices.assign(choices.begin(), choices.end());
  for (std::size_t i = 0; i < choices.size(); ++i) {
    if (choices[i] == Smoothing::B) {
      mask |= std::uint64_t{1} << i;
      ++st.beta;
    } else {
      ++st.alpha;
    }
  }
  st.nu = static_cast<int>(res.stuck.size());
  detail::UnionFind uf(idx(res.arcs));
  st.components = res.components(mask, uf);
  return st;
}

LaurentPoly curl_factor(int n) { return LaurentPoly::from_term(n % 2 == 0 ? 1 : -1, Exponents{{Var::A, 3 * n}}); }

LaurentPoly stuck_bracket(const StuckDiagram &d, const BracketOptions &opts) {
  if (d.empty())
    throw Error(ErrorKind::EmptyDiagram, "diagram has no components");
  const Resolver res(d);
  const int c = static_cast<int>(res.classical.size());
  if (c > opts.max_classical || c > 62)
    throw Error(ErrorKind::CapExceeded,
                std::to_string(c) + " classical crossings exceed the state cap of " + std::to_string(opts.max_classical));

  // counts[b * (max_comp + 1) + k]: states with b B-smoothings and k components.
  const int max_comp = res.arcs + res.loops + 1;
  const std::size_t width = idx(max_comp + 1);
  const std::uint64_t total = std::uint64_t{1} << c;

  unsigned workers = opts.threads ? opts.threads : std::max(1U, std::thread::hardware_concurrency());
  if (total < (std::uint64_t{1} << 12))
    workers = 1;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));

  std::vector<std::vector<std::uint64_t>> tables(workers, std::vector<std::uint64_t>(idx(c + 1) * width, 0));
  auto work = [&](unsigned w) {
    detail::UnionFind uf(idx(res.arcs));
    auto &table = tables[w];
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      const int b = __builtin_popcountll(mask);
      ++table[idx(b) * width + idx(res.components(mask, uf))];
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back(work, w);
  }

  const LaurentPoly delta = bracket_delta();
  std::vector<LaurentPoly> delta_pow(width);
  delta_pow[0] = LaurentPoly(1);
  for (std::size_t k = 1; k < width; ++k)
    delta_pow[k] = delta_pow[k - 1] * delta;

  LaurentPoly sum;
  const int nu = static_cast<int>(res.stuck.size());
  for (int b = 0; b <= c; ++b) {
    for (std::size_t k = 1; k < width; ++k) {
      std::uint64_t n = 0;
      for (const auto &t : tables)
        n += t[idx(b) * width + k];
      if (n == 0)
        continue;
      sum += LaurentPoly::from_term(Integer(n), Exponents{{Var::A, c - 2 * b}, {Var::R, nu}}) * delta_pow[k - 1];
    }
  }
  return sum;
}

LaurentPoly normalized_bracket(const StuckDiagram &d, const BracketOptions &opts) {
  return curl_factor(-writhe(d)) * stuck_bracket(d, opts);
}

} // namespace stuckknot

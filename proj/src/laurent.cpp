#include "stuckknot/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "stuckknot/error.hpp"

namespace stuckknot {

namespace {

constexpr std::array<Var, kVarCount> kDisplayVars = {Var::t, Var::r, Var::a, Var::z, Var::A, Var::R};

Integer parse_integer(const std::string &s) {
  std::size_t i = (s.size() > 0 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size() || !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(), ::isdigit))
    throw Error(ErrorKind::SyntaxError, "bad integer '" + s + "'");
  return Integer(s);
}

} // namespace

char var_name(Var v) {
  switch (v) {
  case Var::A: return 'A';
  case Var::R: return 'R';
  case Var::a: return 'a';
  case Var::z: return 'z';
  case Var::t: return 't';
  case Var::r: return 'r';
  }
  return '?';
}

bool DisplayOrder::operator()(const Exponents &x, const Exponents &y) const {
  for (Var v : kDisplayVars) {
    if (x[v] != y[v])
      return x[v] > y[v];
  }
  return false;
}

LaurentPoly::LaurentPoly(long long constant) {
  if (constant != 0)
    terms_.emplace(Exponents{}, Integer(constant));
}

LaurentPoly LaurentPoly::from_term(const Integer &coeff, const Exponents &exps) {
  LaurentPoly p;
  if (coeff != 0)
    p.terms_.emplace(exps, coeff);
  return p;
}

Integer LaurentPoly::coeff(const Exponents &exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(const Exponents &exps, const Integer &c) {
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &q) {
  for (const auto &[e, c] : q.terms_)
    add_term(e, c);
  return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &q) {
  for (const auto &[e, c] : q.terms_)
    add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto &[e, c] : out.terms_)
    c = -c;
  return out;
}

LaurentPoly operator*(const LaurentPoly &p, const LaurentPoly &q) {
  LaurentPoly out;
  for (const auto &[ep, cp] : p.terms_)
    for (const auto &[eq, cq] : q.terms_)
      out.add_term(ep + eq, cp * cq);
  return out;
}

LaurentPoly &LaurentPoly::operator*=(const LaurentPoly &q) {
  *this = *this * q;
  return *this;
}

LaurentPoly LaurentPoly::pow(int n) const {
  if (n < 0) {
    if (terms_.size() != 1 || (terms_.begin()->second != 1 && terms_.begin()->second != -1))
      throw Error(ErrorKind::NegativeExponentSubstitution, "negative power of a non-unit " + to_string());
    const auto &[e, c] = *terms_.begin();
    Exponents inv;
    for (std::size_t i = 0; i < kVarCount; ++i)
      inv.e[i] = -e.e[i] * -n;
    return from_term((-n) % 2 == 1 ? c : Integer(1), inv);
  }
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1)
      result *= base;
    n >>= 1;
    if (n > 0)
      base *= base;
  }
  return result;
}

std::optional<int> LaurentPoly::total_degree_in(std::initializer_list<Var> vars) const {
  std::optional<int> best;
  for (const auto &[e, c] : terms_) {
    int d = 0;
    for (Var v : vars)
      d += e[v];
    if (!best || d > *best)
      best = d;
  }
  return best;
}

int LaurentPoly::min_exponent(Var v) const {
  if (terms_.empty())
    return 0;
  int m = terms_.begin()->first[v];
  for (const auto &[e, c] : terms_)
    m = std::min(m, e[v]);
  return m;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[e, c] : terms_) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;

    std::string mono;
    for (Var v : kDisplayVars) {
      int p = e[v];
      if (p == 0)
        continue;
      if (!mono.empty())
        mono += '*';
      mono += var_name(v);
      if (p != 1)
        mono += "^" + std::to_string(p);
    }
    if (mono.empty())
      os << mag;
    else if (mag == 1)
      os << mono;
    else
      os << mag << '*' << mono;
  }
  return os.str();
}

nlohmann::json LaurentPoly::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto &[e, c] : terms_) {
    nlohmann::json exp = nlohmann::json::object();
    for (Var v : kAllVars)
      exp[std::string(1, var_name(v))] = e[v];
    arr.push_back({{"coeff", c.str()}, {"exp", exp}});
  }
  return arr;
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json &j) {
  if (!j.is_array())
    throw Error(ErrorKind::SyntaxError, "polynomial JSON must be an array");
  LaurentPoly p;
  for (const auto &term : j) {
    Exponents e;
    for (Var v : kAllVars) {
      std::string key(1, var_name(v));
      if (term.at("exp").contains(key))
        e[v] = term.at("exp").at(key).get<int>();
    }
    p.add_term(e, parse_integer(term.at("coeff").get<std::string>()));
  }
  return p;
}

LaurentPoly substitute(const LaurentPoly &p, Var v, const LaurentPoly &value) {
  const bool invertible = value.term_count() == 1 &&
                          (value.terms().begin()->second == 1 || value.terms().begin()->second == -1);
  LaurentPoly out;
  for (const auto &[e, c] : p.terms()) {
    const int power = e[v];
    if (power < 0 && !invertible)
      throw Error(ErrorKind::NegativeExponentSubstitution,
                  std::string("variable ") + var_name(v) + " has exponent " + std::to_string(power));
    Exponents rest = e;
    rest[v] = 0;
    out += LaurentPoly::from_term(c, rest) * value.pow(power);
  }
  return out;
}

LaurentPoly bracket_delta() { return -LaurentPoly::variable(Var::A, 2) - LaurentPoly::variable(Var::A, -2); }

LaurentPoly unlink_factor() {
  return (LaurentPoly::variable(Var::a) - LaurentPoly::variable(Var::a, -1)) * LaurentPoly::variable(Var::z, -1);
}

} // namespace stuckknot

#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace stuckknot {

using Integer = boost::multiprecision::cpp_int;

// Storage order of the indeterminates. A and R belong to the stuck bracket,
// a, z, t and r to the rigid HOMFLYPT polynomial.
enum class Var : std::uint8_t { A = 0, R = 1, a = 2, z = 3, t = 4, r = 5 };

inline constexpr std::size_t kVarCount = 6;
inline constexpr std::array<Var, kVarCount> kAllVars = {Var::A, Var::R, Var::a, Var::z, Var::t, Var::r};

char var_name(Var v);

struct Exponents {
  std::array<int, kVarCount> e{};

  Exponents() = default;
  Exponents(std::initializer_list<std::pair<Var, int>> powers) {
    for (auto [v, p] : powers)
      e[static_cast<std::size_t>(v)] += p;
  }

  int &operator[](Var v) { return e[static_cast<std::size_t>(v)]; }
  int operator[](Var v) const { return e[static_cast<std::size_t>(v)]; }

  Exponents &operator+=(const Exponents &o) {
    for (std::size_t i = 0; i < kVarCount; ++i)
      e[i] += o.e[i];
    return *this;
  }
  friend Exponents operator+(Exponents x, const Exponents &y) { return x += y; }
  friend auto operator<=>(const Exponents &, const Exponents &) = default;
};

// Ordering used for rendering: descending lexicographic on the exponent
// vector read in display order (t, r, a, z, A, R).
struct DisplayOrder {
  bool operator()(const Exponents &x, const Exponents &y) const;
};

class LaurentPoly {
public:
  using TermMap = std::map<Exponents, Integer, DisplayOrder>;

  LaurentPoly() = default;
  LaurentPoly(long long constant); // NOLINT(google-explicit-constructor)

  static LaurentPoly from_term(const Integer &coeff, const Exponents &exps);
  static LaurentPoly variable(Var v, int power = 1) { return from_term(1, Exponents{{v, power}}); }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const TermMap &terms() const noexcept { return terms_; }

  // Coefficient of the given monomial (zero when absent).
  Integer coeff(const Exponents &exps) const;

  LaurentPoly &operator+=(const LaurentPoly &q);
  LaurentPoly &operator-=(const LaurentPoly &q);
  LaurentPoly &operator*=(const LaurentPoly &q);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly &q) { return p += q; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly &q) { return p -= q; }
  friend LaurentPoly operator*(const LaurentPoly &p, const LaurentPoly &q);
  friend bool operator==(const LaurentPoly &p, const LaurentPoly &q) { return p.terms_ == q.terms_; }

  // Non-negative powers always; negative powers only for a single-term unit
  // (coefficient +-1).
  LaurentPoly pow(int n) const;

  // Largest signed exponent sum over `vars` among the terms, nullopt for zero.
  std::optional<int> total_degree_in(std::initializer_list<Var> vars) const;

  // Lowest exponent of v among the terms (0 for the zero polynomial).
  int min_exponent(Var v) const;

  std::string to_string() const;
  nlohmann::json to_json() const;
  static LaurentPoly from_json(const nlohmann::json &j);

private:
  void add_term(const Exponents &exps, const Integer &c);

  TermMap terms_;
};

inline LaurentPoly add(const LaurentPoly &p, const LaurentPoly &q) { return p + q; }
inline LaurentPoly mul(const LaurentPoly &p, const LaurentPoly &q) { return p * q; }

// Replace every occurrence of `v` by `value`. Throws
// NegativeExponentSubstitution when a negative power of v meets a value that
// is not a single invertible term.
LaurentPoly substitute(const LaurentPoly &p, Var v, const LaurentPoly &value);

/// delta = -A^2 - A^-2, the loop value of the bracket.
LaurentPoly bracket_delta();

/// (a - a^-1) z^-1, the value of a split unknotted component.
LaurentPoly unlink_factor();

} // namespace stuckknot

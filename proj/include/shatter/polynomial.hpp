#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "shatter/subset.hpp"

namespace shatter::poly {

inline constexpr int kMaxVars = kMaxGround;

// Exponent vector; variable i (0-based) is x_{i+1} in printed form.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> exp{};

  static Monomial one() { return {}; }
  static Monomial of_set(Subset s);  // x_S = prod_{i in S} x_i
  static Monomial var(int i, int power = 1);

  int degree() const;
  bool is_one() const { return degree() == 0; }
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // other must divide *this
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  // the point v_F makes x^e nonzero iff every variable of e lies in F
  Subset support() const;

  auto operator<=>(const Monomial&) const = default;
};

// Lexicographic order on a permutation of the variables: priority[0] is the
// most significant variable.
class TermOrder {
 public:
  TermOrder() = default;
  static TermOrder lex(int nvars);
  static TermOrder lex(std::vector<int> priority);
  static std::vector<TermOrder> all_lex(int nvars);

  int nvars() const { return static_cast<int>(priority_.size()); }
  std::span<const int> priority() const { return priority_; }
  bool less(const Monomial& a, const Monomial& b) const;
  // "x1 > x3 > x2"
  std::string to_string() const;

  bool operator==(const TermOrder&) const = default;

 private:
  std::vector<int> priority_;
};

// Z/pZ for prime P < 2^31.
template <std::uint32_t P>
class ModP {
  static_assert(P > 2 && P < (1u << 31));

 public:
  static constexpr std::uint32_t modulus = P;

  constexpr ModP() = default;
  constexpr ModP(long long v) : v_(static_cast<std::uint32_t>(((v % static_cast<long long>(P)) + P) % P)) {}

  constexpr std::uint32_t value() const { return v_; }

  constexpr ModP operator+(ModP o) const { return from_raw((v_ + o.v_) % P); }
  constexpr ModP operator-(ModP o) const { return from_raw((v_ + P - o.v_) % P); }
  constexpr ModP operator*(ModP o) const {
    return from_raw(static_cast<std::uint32_t>(std::uint64_t{v_} * o.v_ % P));
  }
  constexpr ModP operator-() const { return from_raw((P - v_) % P); }
  constexpr ModP inverse() const {
    if (v_ == 0) throw Error(Errc::InvalidArgument, "division by zero in prime field");
    return pow(P - 2);
  }
  constexpr ModP operator/(ModP o) const { return *this * o.inverse(); }
  constexpr ModP& operator+=(ModP o) { return *this = *this + o; }
  constexpr ModP& operator-=(ModP o) { return *this = *this - o; }
  constexpr ModP& operator*=(ModP o) { return *this = *this * o; }

  constexpr ModP pow(std::uint64_t e) const {
    ModP base = *this, acc = from_raw(1);
    for (; e; e >>= 1, base = base * base)
      if (e & 1) acc = acc * base;
    return acc;
  }

  constexpr bool operator==(const ModP&) const = default;

 private:
  static constexpr ModP from_raw(std::uint32_t v) {
    ModP r;
    r.v_ = v;
    return r;
  }
  std::uint32_t v_ = 0;
};

using Rational = mpq_class;
using DefaultPrime = ModP<2147483647u>;

inline bool is_zero(const Rational& c) { return sgn(c) == 0; }
inline int sign_of(const Rational& c) { return sgn(c); }
inline Rational abs_of(const Rational& c) { return abs(c); }
inline std::string coeff_string(const Rational& c) { return c.get_str(); }

template <std::uint32_t P>
bool is_zero(const ModP<P>& c) { return c.value() == 0; }
template <std::uint32_t P>
int sign_of(const ModP<P>& c) { return c.value() == 0 ? 0 : 1; }
template <std::uint32_t P>
ModP<P> abs_of(const ModP<P>& c) { return c; }
template <std::uint32_t P>
std::string coeff_string(const ModP<P>& c) { return std::to_string(c.value()); }

// Sparse polynomial with exact coefficients; zero coefficients are never stored.
template <typename K>
class Polynomial {
 public:
  using Coeff = K;
  using TermMap = std::map<Monomial, K>;

  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const K& c) { return monomial(nvars, Monomial::one(), c); }
  static Polynomial monomial(int nvars, const Monomial& m, const K& c = K(1)) {
    Polynomial p(nvars);
    p.add_term(m, c);
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  K coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? K(0) : it->second;
  }

  void add_term(const Monomial& m, const K& c) {
    if (poly::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (poly::is_zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const { return scaled(K(-1)); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }

  Polynomial scaled(const K& c) const { return times(Monomial::one(), c); }

  // (c * m) * this
  Polynomial times(const Monomial& m, const K& c) const {
    Polynomial out(nvars_);
    if (poly::is_zero(c)) return out;
    for (const auto& [mt, ct] : terms_) out.terms_.emplace_hint(out.terms_.end(), mt * m, ct * c);
    return out;
  }

  // value at the 0/1 point v_F
  K evaluate_01(Subset point) const {
    K acc(0);
    for (const auto& [m, c] : terms_)
      if (m.support().subset_of(point)) acc += c;
    return acc;
  }

  bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

 private:
  int nvars_ = 0;
  TermMap terms_;
};

using QPolynomial = Polynomial<Rational>;

std::string monomial_string(const Monomial& m, int nvars);

// Terms in descending `ord` order, variables x1..xn, e.g. "x1*x2 - x1".
template <typename K>
std::string to_string(const Polynomial<K>& p, const TermOrder& ord) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, K>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return ord.less(b.first, a.first); });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    const bool negative = sign_of(c) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const K mag = abs_of(c);
    const bool unit = mag == K(1);
    if (m.is_one()) {
      out += coeff_string(mag);
    } else {
      if (!unit) out += coeff_string(mag) + "*";
      out += monomial_string(m, p.nvars());
    }
  }
  return out;
}

}  // namespace shatter::poly

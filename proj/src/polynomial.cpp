#include "shatter/polynomial.hpp"

#include <numeric>

namespace shatter::poly {

Monomial Monomial::of_set(Subset s) {
  Monomial m;
  for (int e : s.elements()) m.exp[e - 1] = 1;
  return m;
}

Monomial Monomial::var(int i, int power) {
  if (i < 0 || i >= kMaxVars || power < 0 || power > 255) {
    throw Error(Errc::InvalidArgument, "variable index or power out of range");
  }
  Monomial m;
  m.exp[i] = static_cast<std::uint8_t>(power);
  return m;
}

int Monomial::degree() const { return std::accumulate(exp.begin(), exp.end(), 0); }

bool Monomial::divides(const Monomial& other) const {
  for (int i = 0; i < kMaxVars; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (int i = 0; i < kMaxVars; ++i)
    if (exp[i] && other.exp[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  for (int i = 0; i < kMaxVars; ++i) out.exp[i] = static_cast<std::uint8_t>(exp[i] + other.exp[i]);
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial out;
  for (int i = 0; i < kMaxVars; ++i) out.exp[i] = static_cast<std::uint8_t>(exp[i] - other.exp[i]);
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out;
  for (int i = 0; i < kMaxVars; ++i) out.exp[i] = std::max(exp[i], other.exp[i]);
  return out;
}

Subset Monomial::support() const {
  std::uint32_t bits = 0;
  for (int i = 0; i < kMaxVars; ++i)
    if (exp[i]) bits |= 1u << i;
  return Subset(bits);
}

TermOrder TermOrder::lex(int nvars) {
  std::vector<int> p(nvars);
  std::iota(p.begin(), p.end(), 0);
  return lex(std::move(p));
}

TermOrder TermOrder::lex(std::vector<int> priority) {
  if (priority.size() > static_cast<std::size_t>(kMaxVars)) throw Error(Errc::TooLarge, "too many variables");
  std::vector<int> sorted = priority;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i)) {
      throw Error(Errc::InvalidArgument, "variable priority is not a permutation of the variables");
    }
  TermOrder ord;
  ord.priority_ = std::move(priority);
  return ord;
}

std::vector<TermOrder> TermOrder::all_lex(int nvars) {
  std::vector<int> p(nvars);
  std::iota(p.begin(), p.end(), 0);
  std::vector<TermOrder> out;
  do {
    out.push_back(lex(p));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool TermOrder::less(const Monomial& a, const Monomial& b) const {
  for (int k : priority_)
    if (a.exp[k] != b.exp[k]) return a.exp[k] < b.exp[k];
  return false;
}

std::string TermOrder::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < priority_.size(); ++i) {
    if (i) out += " > ";
    out += "x" + std::to_string(priority_[i] + 1);
  }
  return out;
}

std::string monomial_string(const Monomial& m, int nvars) {
  if (m.is_one()) return "1";
  std::string out;
  for (int i = 0; i < nvars; ++i) {
    if (!m.exp[i]) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (m.exp[i] > 1) out += "^" + std::to_string(m.exp[i]);
  }
  return out;
}

}  // namespace shatter::poly

#include "shatter/groebner.hpp"

#include <gmpxx.h>

#include <optional>

namespace shatter::poly {

template <typename K>
Polynomial<K> f_poly(int nvars, Subset s, Subset h) {
  if (!h.subset_of(s)) {
    throw Error(Errc::PatternNotInSupport, "pattern " + h.to_string() + " not inside support " + s.to_string());
  }
  if (!GroundSet(nvars).valid(s)) throw Error(Errc::InvalidArgument, "support outside the variables");
  Polynomial<K> p = Polynomial<K>::monomial(nvars, Monomial::of_set(h));
  for (int i : (s - h).elements()) {
    Polynomial<K> factor = Polynomial<K>::monomial(nvars, Monomial::var(i - 1));
    factor.add_term(Monomial::one(), K(-1));
    p = p * factor;
  }
  return p;
}

template <typename K>
std::vector<Polynomial<K>> generator_set(const SpernerSystem& sys) {
  const int n = sys.ground().n();
  std::vector<Polynomial<K>> out;
  for (const auto& m : sys.members()) out.push_back(f_poly<K>(n, m.support, m.pattern));
  for (int i = 0; i < n; ++i) {
    Polynomial<K> field = Polynomial<K>::monomial(n, Monomial::var(i, 2));
    field.add_term(Monomial::var(i), K(-1));
    out.push_back(std::move(field));
  }
  return out;
}

namespace {

template <typename K>
typename Polynomial<K>::TermMap::const_iterator leading_term(const Polynomial<K>& p, const TermOrder& ord) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "the zero polynomial has no leading monomial");
  auto best = p.terms().begin();
  for (auto it = std::next(best); it != p.terms().end(); ++it)
    if (ord.less(best->first, it->first)) best = it;
  return best;
}

}  // namespace

template <typename K>
Monomial leading_monomial(const Polynomial<K>& p, const TermOrder& ord) {
  return leading_term(p, ord)->first;
}

template <typename K>
K leading_coefficient(const Polynomial<K>& p, const TermOrder& ord) {
  return leading_term(p, ord)->second;
}

template <typename K>
Polynomial<K> reduce(const Polynomial<K>& p, const std::vector<Polynomial<K>>& basis, const TermOrder& ord) {
  std::vector<Monomial> leads;
  std::vector<K> coeffs;
  for (const auto& b : basis) {
    const auto it = leading_term(b, ord);
    leads.push_back(it->first);
    coeffs.push_back(it->second);
  }
  Polynomial<K> r = p;
  while (true) {
    std::optional<Monomial> target;
    K target_coeff(0);
    std::size_t divisor = 0;
    for (const auto& [m, c] : r.terms()) {
      if (target && !ord.less(*target, m)) continue;
      for (std::size_t k = 0; k < leads.size(); ++k)
        if (leads[k].divides(m)) {
          target = m;
          target_coeff = c;
          divisor = k;
          break;
        }
    }
    if (!target) return r;
    const K scale = target_coeff / coeffs[divisor];
    r -= basis[divisor].times(*target / leads[divisor], scale);
  }
}

template <typename K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g, const TermOrder& ord) {
  const auto lf = leading_term(f, ord);
  const auto lg = leading_term(g, ord);
  const Monomial l = lf->first.lcm(lg->first);
  const K cf = K(1) / lf->second;
  const K cg = K(1) / lg->second;
  return f.times(l / lf->first, cf) - g.times(l / lg->first, cg);
}

template <typename K>
bool buchberger_is_groebner(const std::vector<Polynomial<K>>& basis, const TermOrder& ord) {
  std::vector<Monomial> leads;
  for (const auto& b : basis) leads.push_back(leading_monomial(b, ord));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (leads[i].coprime(leads[j])) continue;
      if (!reduce(s_polynomial(basis[i], basis[j], ord), basis, ord).is_zero()) return false;
    }
  return true;
}

template <typename K>
std::uint64_t standard_monomial_count(const std::vector<Polynomial<K>>& basis, const TermOrder& ord) {
  const int nvars = ord.nvars();
  std::vector<Monomial> leads;
  for (const auto& b : basis) leads.push_back(leading_monomial(b, ord));
  // the staircase lies inside the box bounded by the pure powers
  std::vector<int> bound(nvars, -1);
  for (const Monomial& m : leads) {
    const Subset vars = m.support();
    if (vars.size() != 1) continue;
    const int i = vars.elements()[0] - 1;
    if (i < nvars && (bound[i] < 0 || m.exp[i] < bound[i])) bound[i] = m.exp[i];
  }
  double box = 1;
  for (int i = 0; i < nvars; ++i) {
    if (bound[i] < 0) {
      throw Error(Errc::InfiniteStaircase, "no leading monomial is a pure power of x" + std::to_string(i + 1));
    }
    box *= bound[i];
  }
  if (box > double(1u << 26)) throw Error(Errc::TooLarge, "staircase box too large to enumerate");
  for (const Monomial& m : leads)
    if (m.is_one()) return 0;

  std::uint64_t count = 0;
  Monomial cur;
  while (true) {
    bool standard = true;
    for (const Monomial& m : leads)
      if (m.divides(cur)) {
        standard = false;
        break;
      }
    if (standard) ++count;
    int i = 0;
    for (; i < nvars; ++i) {
      if (++cur.exp[i] < bound[i]) break;
      cur.exp[i] = 0;
    }
    if (i == nvars) break;
  }
  return count;
}

std::size_t evaluation_matrix_rank(const SetFamily& fam, const SetFamily& monomial_sets) {
  require_same_ground(fam.ground(), monomial_sets.ground());
  const std::size_t rows = monomial_sets.size();
  const std::size_t cols = fam.size();
  std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = monomial_sets.members()[i].subset_of(fam.members()[j]) ? 1 : 0;

  std::size_t rank = 0;
  mpz_class previous = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const mpz_class& p = m[rank][col];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        mpz_class v = p * m[i][j] - m[i][col] * m[rank][j];
        mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
      }
      m[i][col] = 0;
    }
    previous = p;
    ++rank;
  }
  return rank;
}

template <typename K>
EquivalenceReport equivalence_check(const SpernerSystem& sys, const TermOrder& ord) {
  const int n = sys.ground().n();
  if (n > kMaxEquivalenceGround || sys.size() > kMaxEquivalenceMembers) {
    throw Error(Errc::TooLarge, "equivalence_check supports n <= " + std::to_string(kMaxEquivalenceGround) +
                                    " and at most " + std::to_string(kMaxEquivalenceMembers) + " members");
  }
  if (ord.nvars() != n) throw Error(Errc::InvalidArgument, "term order arity does not match n");
  const SetFamily h = h_complement(sys);
  const SetFamily f = build_f(sys);
  const auto gens = generator_set<K>(sys);
  EquivalenceReport r;
  r.h_size = h.size();
  r.f_size = f.size();
  r.counting_equal = r.h_size == r.f_size;
  r.is_groebner = buchberger_is_groebner(gens, ord);
  r.rank = evaluation_matrix_rank(f, h);
  r.rank_full = r.rank == r.f_size;
  r.standard_monomials = standard_monomial_count(gens, ord);
  return r;
}

#define SHATTER_INSTANTIATE(K)                                                                          \
  template Polynomial<K> f_poly<K>(int, Subset, Subset);                                                \
  template std::vector<Polynomial<K>> generator_set<K>(const SpernerSystem&);                          \
  template Monomial leading_monomial<K>(const Polynomial<K>&, const TermOrder&);                       \
  template K leading_coefficient<K>(const Polynomial<K>&, const TermOrder&);                           \
  template Polynomial<K> reduce<K>(const Polynomial<K>&, const std::vector<Polynomial<K>>&,           \
                                   const TermOrder&);                                                  \
  template Polynomial<K> s_polynomial<K>(const Polynomial<K>&, const Polynomial<K>&, const TermOrder&); \
  template bool buchberger_is_groebner<K>(const std::vector<Polynomial<K>>&, const TermOrder&);        \
  template std::uint64_t standard_monomial_count<K>(const std::vector<Polynomial<K>>&, const TermOrder&); \
  template EquivalenceReport equivalence_check<K>(const SpernerSystem&, const TermOrder&);

SHATTER_INSTANTIATE(Rational)
SHATTER_INSTANTIATE(DefaultPrime)

#undef SHATTER_INSTANTIATE

}  // namespace shatter::poly

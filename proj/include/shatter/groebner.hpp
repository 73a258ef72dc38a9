#pragma once

#include <cstdint>
#include <vector>

#include "shatter/polynomial.hpp"
#include "shatter/sperner.hpp"

namespace shatter::poly {

// f_{S,H} = x_H * prod_{i in S \ H} (x_i - 1), expanded. Nonzero at v_F iff F & S == H.
template <typename K>
Polynomial<K> f_poly(int nvars, Subset s, Subset h);

// f_{S_i,H_i} in member order, then x_i^2 - x_i for i = 1..n.
template <typename K>
std::vector<Polynomial<K>> generator_set(const SpernerSystem& sys);

template <typename K>
Monomial leading_monomial(const Polynomial<K>& p, const TermOrder& ord);
template <typename K>
K leading_coefficient(const Polynomial<K>& p, const TermOrder& ord);

// Normal form: repeatedly cancels the ord-largest term divisible by some
// leading monomial, using the first such basis element in list order.
template <typename K>
Polynomial<K> reduce(const Polynomial<K>& p, const std::vector<Polynomial<K>>& basis, const TermOrder& ord);

template <typename K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g, const TermOrder& ord);

// Buchberger's criterion; pairs with coprime leading monomials are skipped.
template <typename K>
bool buchberger_is_groebner(const std::vector<Polynomial<K>>& basis, const TermOrder& ord);

// Number of monomials divisible by no leading monomial of the basis.
// Throws InfiniteStaircase when some variable has no pure-power leading monomial.
template <typename K>
std::uint64_t standard_monomial_count(const std::vector<Polynomial<K>>& basis, const TermOrder& ord);

// Exact rank of M[T,F] = [T subset of F], rows T in monomial_sets, columns F in fam,
// by fraction-free elimination over arbitrary-precision integers.
std::size_t evaluation_matrix_rank(const SetFamily& fam, const SetFamily& monomial_sets);

inline constexpr int kMaxEquivalenceGround = 8;
inline constexpr std::size_t kMaxEquivalenceMembers = 6;

struct EquivalenceReport {
  std::size_t h_size = 0;
  std::size_t f_size = 0;
  bool counting_equal = false;  // |H(S)| == |F(S,h)|
  bool is_groebner = false;     // G(S,h) passes Buchberger under the order
  std::size_t rank = 0;         // evaluation rank of H(S) monomials on F(S,h)
  bool rank_full = false;       // rank == |F(S,h)|
  std::uint64_t standard_monomials = 0;

  bool equivalence_holds() const { return counting_equal == is_groebner; }
};

template <typename K = Rational>
EquivalenceReport equivalence_check(const SpernerSystem& sys, const TermOrder& ord);

}  // namespace shatter::poly

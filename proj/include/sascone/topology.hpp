#pragma once

#include <set>

#include "sascone/core_types.hpp"
#include "sascone/integer.hpp"

namespace sascone::topology {

// Labels (k, j, l) of the contact bundle on S^3-bundles over S^2 together
// with i = g(j) = gcd(l, 2(k - j)).
struct BouquetLabel {
  Int k = 0;
  Int j = 0;
  Int l = 0;
  Int i = 0;

  friend bool operator==(const BouquetLabel&, const BouquetLabel&) = default;
};

// Coefficient of gamma in c1(D) for joins S^{2p+1} * S^3_w, i.e. over CP^p:
// l2 (p + 1) - l1 (w1 + w2). Throws BaseMismatch unless the base is CP^p.
WideInt c1_gamma_coeff_sphere_join(Int p, const JoinParams& join);

// Second Stiefel-Whitney class vanishes iff the c1 coefficient is even.
bool spin_check(Int p, const JoinParams& join);

// Order w1 w2 l1^2 of the torsion class x^2 in the cohomology ring. Only
// topologically meaningful for p > 1 (see torsion_order_caveat).
WideInt torsion_order(const JoinParams& join);
bool torsion_order_caveat(const JoinParams& join);

// i = g(j) = gcd(l, 2(k - j)).
Int g_map(Int k, Int j, Int l);

// Throws OddTotal when l1 (w1 + w2) is odd.
BouquetLabel bouquet_label(const JoinParams& join);

// Whether the (k, j, l) labelling applies: base CP^1 only.
bool bouquet_applicable(const JoinParams& join);

// { j in 1..k : g(j) = i }.
std::set<Int> bouquet_level_set(Int k, Int l, Int i);

// B = l1 w2 on the w-subcone. Throws NotFano.
WideInt b_invariant_wcone(const JoinParams& join);

}  // namespace sascone::topology

#include "sascone/topology.hpp"

#include <numeric>
#include <string>

#include "sascone/error.hpp"

namespace sascone::topology {
namespace {

void require_sphere_join(Int p, const JoinParams& join) {
  const BaseManifold& base = join.base();
  if (p < 1 || base.dim_c != p || base.c1_coeff != p + 1) {
    throw Error(ErrorKind::BaseMismatch,
                "base '" + base.label + "' (dim " + std::to_string(base.dim_c) +
                    ", c1 " + std::to_string(base.c1_coeff) + ") is not CP^" +
                    std::to_string(p));
  }
}

}  // namespace

WideInt c1_gamma_coeff_sphere_join(Int p, const JoinParams& join) {
  require_sphere_join(p, join);
  return static_cast<WideInt>(join.l2()) * (p + 1) -
         static_cast<WideInt>(join.l1()) * join.w_total();
}

bool spin_check(Int p, const JoinParams& join) {
  return c1_gamma_coeff_sphere_join(p, join) % 2 == 0;
}

WideInt torsion_order(const JoinParams& join) {
  return static_cast<WideInt>(join.w1()) * join.w2() * join.l1() * join.l1();
}

bool torsion_order_caveat(const JoinParams& join) {
  return join.base().dim_c <= 1;
}

Int g_map(Int k, Int j, Int l) {
  return std::gcd(l, 2 * (k - j));
}

BouquetLabel bouquet_label(const JoinParams& join) {
  const WideInt total = static_cast<WideInt>(join.l1()) * join.w_total();
  if (total % 2 != 0) {
    throw Error(ErrorKind::OddTotal,
                "l1*(w1+w2) = " + to_string_wide(total) +
                    " is odd; (k, j, l) labels are undefined");
  }
  BouquetLabel label;
  label.k = narrow(total / 2, "bouquet k");
  label.j = narrow(static_cast<WideInt>(join.l1()) * join.w2(), "bouquet j");
  label.l = join.l2();
  label.i = g_map(label.k, label.j, label.l);
  return label;
}

bool bouquet_applicable(const JoinParams& join) {
  return join.base().dim_c == 1 && join.base().c1_coeff == 2;
}

std::set<Int> bouquet_level_set(Int k, Int l, Int i) {
  std::set<Int> level;
  for (Int j = 1; j <= k; ++j) {
    if (g_map(k, j, l) == i) level.insert(j);
  }
  return level;
}

WideInt b_invariant_wcone(const JoinParams& join) {
  if (!join.base().is_fano()) {
    throw Error(ErrorKind::NotFano,
                "B = l1*w2 is defined on the w-cone only for Fano bases");
  }
  return static_cast<WideInt>(join.l1()) * join.w2();
}

}  // namespace sascone::topology

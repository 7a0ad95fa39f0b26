#include <doctest.h>

#include <numeric>

#include "sascone/error.hpp"
#include "sascone/topology.hpp"

using namespace sascone;
using namespace sascone::topology;

namespace {

const BaseManifold kCP1 = BaseManifold::projective_space(1);
const BaseManifold kCP2 = BaseManifold::projective_space(2);

JoinParams relaxed(Int l1, Int l2, Int w1, Int w2, const BaseManifold& base) {
  return validate_join(l1, l2, w1, w2, base, Smoothness::Relaxed);
}

}  // namespace

TEST_CASE("c1 coefficient of the contact bundle") {
  CHECK(c1_gamma_coeff_sphere_join(2, validate_join(1, 5, 12, 1, kCP2)) == 2);
  CHECK(c1_gamma_coeff_sphere_join(2, validate_join(3, 13, 12, 1, kCP2)) == 0);
  CHECK(c1_gamma_coeff_sphere_join(1, validate_join(4, 1, 1, 1, kCP1)) == -6);
  CHECK_THROWS_AS(c1_gamma_coeff_sphere_join(2, validate_join(4, 1, 1, 1, kCP1)), Error);
  try {
    c1_gamma_coeff_sphere_join(1, validate_join(1, 1, 1, 1, BaseManifold::riemann_surface(1)));
    FAIL("expected BaseMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BaseMismatch);
  }
}

TEST_CASE("c1 of the 12,1 family is 3 l2 - 13") {
  for (Int l2 : {1, 5, 7, 11, 13, 17}) {
    CHECK(c1_gamma_coeff_sphere_join(2, validate_join(1, l2, 12, 1, kCP2)) == 3 * l2 - 13);
  }
}

TEST_CASE("spin check") {
  CHECK(spin_check(2, validate_join(1, 5, 12, 1, kCP2)));
  CHECK_FALSE(spin_check(2, validate_join(2, 5, 3, 1, kCP2)));
  CHECK(spin_check(1, validate_join(2, 1, 1, 1, kCP1)));
}

TEST_CASE("torsion order") {
  CHECK(torsion_order(validate_join(1, 5, 12, 1, kCP2)) == 12);
  CHECK(torsion_order(validate_join(2, 5, 3, 1, kCP2)) == 12);
  CHECK(torsion_order(validate_join(1, 1, 1, 1, kCP1)) == 1);
  CHECK(torsion_order_caveat(validate_join(1, 1, 1, 1, kCP1)));
  CHECK_FALSE(torsion_order_caveat(validate_join(1, 5, 12, 1, kCP2)));
}

TEST_CASE("bouquet labels") {
  CHECK(bouquet_label(validate_join(4, 1, 1, 1, kCP1)) == BouquetLabel{4, 4, 1, 1});
  CHECK(bouquet_label(validate_join(1, 1, 7, 1, kCP1)) == BouquetLabel{4, 1, 1, 1});
  CHECK(bouquet_label(relaxed(1, 3, 7, 1, kCP1)) == BouquetLabel{4, 1, 3, 3});
  try {
    bouquet_label(validate_join(1, 1, 2, 1, kCP1));
    FAIL("expected OddTotal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OddTotal);
  }
  CHECK(bouquet_applicable(validate_join(4, 1, 1, 1, kCP1)));
  CHECK_FALSE(bouquet_applicable(validate_join(1, 5, 12, 1, kCP2)));
}

TEST_CASE("level sets") {
  CHECK(bouquet_level_set(4, 1, 1) == std::set<Int>{1, 2, 3, 4});
  // g(1) = gcd(3, 6) = 3, g(2) = gcd(3, 4) = 1, g(3) = gcd(3, 2) = 1,
  // g(4) = gcd(3, 0) = 3.
  CHECK(bouquet_level_set(4, 3, 1) == std::set<Int>{2, 3});
  CHECK(bouquet_level_set(4, 3, 3) == std::set<Int>{1, 4});
  CHECK(bouquet_level_set(1, 1, 2).empty());
  CHECK(g_map(4, 1, 3) == 3);
}

TEST_CASE("B invariant") {
  CHECK(b_invariant_wcone(validate_join(4, 1, 1, 1, kCP1)) == 4);
  CHECK(b_invariant_wcone(validate_join(2, 1, 3, 1, kCP1)) == 2);
  CHECK(b_invariant_wcone(validate_join(1, 1, 7, 1, kCP1)) == 1);
  CHECK_THROWS_AS(b_invariant_wcone(validate_join(1, 1, 1, 1, BaseManifold::riemann_surface(2))),
                  Error);
}

TEST_CASE("property: B + l1(w1 - w2)/2 = k and j = B") {
  int checked = 0;
  for (Int l1 = 1; l1 <= 12; ++l1)
    for (Int w1 = 1; w1 <= 15; ++w1)
      for (Int w2 = 1; w2 <= w1; ++w2)
        for (Int l2 = 1; l2 <= 9; ++l2) {
          if (std::gcd(w1, w2) != 1 || std::gcd(l1, l2) != 1) continue;
          if ((l1 * (w1 + w2)) % 2 != 0) continue;
          const JoinParams join = relaxed(l1, l2, w1, w2, kCP1);
          const BouquetLabel label = bouquet_label(join);
          const WideInt b = b_invariant_wcone(join);
          CHECK(b + l1 * (w1 - w2) / 2 == label.k);
          CHECK(label.j == b);
          CHECK(label.i == g_map(label.k, label.j, label.l));
          ++checked;
        }
  CHECK(checked > 100);
}

TEST_CASE("property: level sets partition 1..k") {
  for (Int k = 1; k <= 20; ++k)
    for (Int l = 1; l <= 12; ++l) {
      std::set<Int> seen;
      std::size_t total = 0;
      for (Int i = 1; i <= std::max<Int>(l, 2 * k); ++i) {
        const auto level = bouquet_level_set(k, l, i);
        total += level.size();
        seen.insert(level.begin(), level.end());
      }
      CHECK(total == static_cast<std::size_t>(k));
      CHECK(seen.size() == static_cast<std::size_t>(k));
    }
}

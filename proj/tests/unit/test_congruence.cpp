#include <doctest.h>

#include <random>

#include "genuslab/congruence.hpp"
#include "genuslab/error.hpp"
#include "oracles.hpp"

using namespace genuslab;

namespace {

ChiVector chi(std::vector<long> v) {
  std::vector<BigInt> b(v.begin(), v.end());
  return ChiVector(static_cast<int>(v.size()) - 1, b);
}

YPolynomial random_poly(std::mt19937_64& rng, int degree) {
  std::vector<BigInt> c;
  for (int k = 0; k <= degree; ++k) c.emplace_back(static_cast<long>(rng() % 41) - 20);
  return YPolynomial(c);
}

}  // namespace

TEST_SUITE("congruence") {
  TEST_CASE("reductions agree with values at the roots of the modulus") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
      const auto p = random_poly(rng, static_cast<int>(rng() % 9));
      const BigInt p0 = p.evaluate(0), p1 = p.evaluate(1), pm1 = p.evaluate(-1);
      const auto r2 = reduce_mod_1_minus_y2(p);
      CHECK(r2.degree() <= 1);
      CHECK(r2.evaluate(1) == p1);
      CHECK(r2.evaluate(-1) == pm1);
      const auto r3 = reduce_mod_y_minus_y3(p);
      CHECK(r3.degree() <= 2);
      CHECK(r3.evaluate(0) == p0);
      CHECK(r3.evaluate(1) == p1);
      CHECK(r3.evaluate(-1) == pm1);
      CHECK(divisible_by_1_minus_y2(p - r2));
    }
  }

  TEST_CASE("divisibility by 1 - y^2") {
    CHECK(divisible_by_1_minus_y2(YPolynomial{}));
    CHECK(divisible_by_1_minus_y2(YPolynomial{1, 0, -1}));
    CHECK(divisible_by_1_minus_y2(YPolynomial{1, 0, -1} * YPolynomial{3, -7, 2}));
    CHECK_FALSE(divisible_by_1_minus_y2(YPolynomial{1, 0, 1}));
    CHECK_FALSE(divisible_by_1_minus_y2(YPolynomial{2}));
    CHECK_FALSE(divisible_by_1_minus_y2(YPolynomial{0, 1, 0, -1, 1}));
  }

  TEST_CASE("canonical forms") {
    CHECK(to_string(reduce_mod_1_minus_y2(YPolynomial{2, -20, 2})) == "4 - 20*y");
    CHECK(signature_euler_canonical(-16, 24) == YPolynomial{4, -20});
    CHECK(todd_euler_signature_canonical(2, 24, -16) == YPolynomial{2, -20, 2});
    CHECK_THROWS_AS(signature_euler_canonical(1, 2), Error);
    CHECK_THROWS_AS(todd_euler_signature_canonical(0, 1, 2), Error);
  }

  TEST_CASE("defect of the worked triple") {
    const auto f = chi({1, -1});
    const auto e = chi({2, 0, 2});
    CHECK(defect(e, f, f) == YPolynomial{1, 2, 1});
    CHECK(signature_defect(e, f, f) == 4);
  }

  TEST_CASE("classification matches direct evaluation") {
    const auto f = chi({1, -1});
    const auto e = chi({2, 0, 2});
    const auto d = defect(e, f, f);
    for (long y : odd_values(-21, 21)) {
      const auto r = classify_and_check(d, 4, y);
      const BigInt direct = oracle::chi_y_at({2, 0, 2}, y) - oracle::chi_y_at({1, -1}, y) * oracle::chi_y_at({1, -1}, y);
      CHECK(r.defect_value == direct);
      CHECK(r.y == y);
      const long y4 = oracle::mod(BigInt(y), 4);
      CHECK(r.guaranteed_modulus == (y4 == 3 ? 8 : 4));
      CHECK(r.holds == (oracle::mod(direct, r.guaranteed_modulus) == 0));
      CHECK(r.equivalence_checked == (y4 == 1));
      if (r.equivalence_checked) {
        CHECK(r.equivalence_modulus == 8);
        CHECK(r.defect_vanishes == (oracle::mod(direct, 8) == 0));
        CHECK_FALSE(r.sigma_vanishes);
      }
      CHECK(r.ok());
    }
  }

  TEST_CASE("worked sweep 3..5") {
    const auto f = chi({1, -1});
    const auto rows = check_triple(chi({2, 0, 2}), f, f, odd_values(3, 5));
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].defect_value == 16);
    CHECK(rows[0].guaranteed_modulus == 8);
    CHECK(rows[0].holds);
    CHECK(rows[1].defect_value == 36);
    CHECK(rows[1].equivalence_checked);
    CHECK_FALSE(rows[1].defect_vanishes);
    CHECK_FALSE(rows[1].sigma_vanishes);
    CHECK(rows[1].equivalence_holds);
  }

  TEST_CASE("monodromy assertion upgrades the modulus") {
    const auto f = chi({1, -1});
    const auto d = defect(chi({2, 0, 2}), f, f);
    const auto r = classify_and_check(d, 4, 5, CongruenceOptions{true, true});
    CHECK(r.guaranteed_modulus == 8);
    CHECK_FALSE(r.holds);
    CHECK_FALSE(r.ok());
    // No upgrade in singular mode.
    const auto s = classify_and_check(d, 4, 5, CongruenceOptions{false, true});
    CHECK(s.guaranteed_modulus == 2);
  }

  TEST_CASE("singular mode moduli") {
    const auto d = YPolynomial{1, 1};
    for (long y : odd_values(-9, 9)) {
      const auto r = classify_and_check(d, 2, y, CongruenceOptions{false, false});
      CHECK(r.guaranteed_modulus == (oracle::mod(BigInt(y), 4) == 3 ? 4 : 2));
      if (r.equivalence_checked) CHECK(r.equivalence_modulus == 4);
      CHECK(r.ok());
    }
  }

  TEST_CASE("a broken equivalence is reported") {
    // defect vanishes mod 8 at y = 1 while the signature defect does not.
    const auto r = classify_and_check(YPolynomial{8}, 4, 1);
    CHECK(r.holds);
    CHECK(r.defect_vanishes);
    CHECK_FALSE(r.sigma_vanishes);
    CHECK_FALSE(r.equivalence_holds);
    CHECK_FALSE(r.ok());
  }

  TEST_CASE("argument checks") {
    CHECK_THROWS_AS(classify_and_check(YPolynomial{1}, 0, 2), Error);
    CHECK(odd_values(-3, 3) == std::vector<long>{-3, -1, 1, 3});
    CHECK(odd_values(2, 2).empty());
    CHECK(odd_values(-99, 99).size() == 100);
  }
}

#include <doctest.h>

#include <set>

#include "genuslab/algebra.hpp"
#include "genuslab/error.hpp"
#include "oracles.hpp"

using namespace genuslab;

namespace {

// Number of partitions of n by brute-force recursion on the largest part.
long count_partitions(int n, int max_part) {
  if (n == 0) return 1;
  long c = 0;
  for (int k = std::min(n, max_part); k >= 1; --k) c += count_partitions(n - k, k);
  return c;
}

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("mod_floor returns residues in [0, m)") {
    CHECK(mod_floor(-1L, 4L) == 3);
    CHECK(mod_floor(-8L, 8L) == 0);
    CHECK(mod_floor(13L, 8L) == 5);
    CHECK(mod_floor(BigInt(-99), BigInt(4)) == 1);
    CHECK(mod_floor(BigInt("-1000000000000000000000001"), BigInt(8)) == 7);
  }

  TEST_CASE("polynomial arithmetic and normalisation") {
    const YPolynomial a{1, -1};
    const YPolynomial b{1, 1};
    CHECK(a * b == YPolynomial{1, 0, -1});
    CHECK((a + b) == YPolynomial{2});
    CHECK((a - a).is_zero());
    CHECK((a - a).degree() == -1);
    CHECK(YPolynomial{0, 0, 0}.is_zero());
    CHECK(YPolynomial::monomial(BigInt(3), 4).degree() == 4);
    CHECK(a.evaluate(BigInt(5)) == -4);
    CHECK((BigInt(3) * b) == YPolynomial{3, 3});
    CHECK((a * YPolynomial{}).is_zero());
  }

  TEST_CASE("evaluation agrees with explicit powers") {
    const std::vector<BigInt> c{7, -3, 0, 11, -2};
    const YPolynomial p(c);
    for (long y = -9; y <= 9; ++y) CHECK(p.evaluate(BigInt(y)) == oracle::chi_y_at(c, y));
  }

  TEST_CASE("rendering is ascending with explicit signs") {
    CHECK(to_string(YPolynomial{2, -20, 2}) == "2 - 20*y + 2*y^2");
    CHECK(to_string(YPolynomial{-8, -8}) == "-8 - 8*y");
    CHECK(to_string(YPolynomial{1, -1, 1}) == "1 - y + y^2");
    CHECK(to_string(YPolynomial{0, 1}) == "y");
    CHECK(to_string(YPolynomial{0, -1}) == "-y");
    CHECK(to_string(YPolynomial{}) == "0");
    CHECK(to_string(RationalPolynomial{BigRational(0), BigRational(1, 2)}) == "1/2*y");
  }

  TEST_CASE("integral conversion") {
    const RationalPolynomial p{BigRational(2), BigRational(-4, 2)};
    CHECK(has_integral_coefficients(p));
    CHECK(to_integral(p) == YPolynomial{2, -2});
    const RationalPolynomial q{BigRational(1, 2)};
    CHECK_FALSE(has_integral_coefficients(q));
    CHECK_THROWS_AS(to_integral(q), Error);
    CHECK(to_rational(YPolynomial{1, 2}) == RationalPolynomial{BigRational(1), BigRational(2)});
  }

  TEST_CASE("partitions are complete, distinct and ordered") {
    for (int n = 0; n <= 9; ++n) {
      const auto parts = partitions_of(n);
      CHECK(static_cast<long>(parts.size()) == count_partitions(n, n));
      std::set<Partition> seen(parts.begin(), parts.end());
      CHECK(seen.size() == parts.size());
      for (const auto& p : parts) {
        CHECK(weight(p) == n);
        CHECK(std::is_sorted(p.rbegin(), p.rend()));
      }
      for (std::size_t i = 1; i < parts.size(); ++i) CHECK(parts[i - 1] > parts[i]);
    }
    CHECK(partitions_of(3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
  }

  TEST_CASE("partition keys round trip and reject garbage") {
    for (const auto& p : partitions_of(6)) CHECK(parse_partition_key(partition_key(p)) == p);
    CHECK(partition_key({2, 1}) == "2,1");
    CHECK(partition_key({}) == "");
    CHECK(parse_partition_key("").empty());
    CHECK_THROWS_AS(parse_partition_key("1,2"), ValidationError);
    CHECK_THROWS_AS(parse_partition_key("2,x"), ValidationError);
    CHECK_THROWS_AS(parse_partition_key("0"), ValidationError);
    CHECK_THROWS_AS(parse_partition_key("2,,1"), ValidationError);
  }

  TEST_CASE("binomial matches GMP") {
    for (long n = 0; n <= 30; ++n) {
      for (long k = 0; k <= n; ++k) CHECK(binomial(n, k) == oracle::choose(n, k));
    }
    CHECK(binomial(4, 7) == 0);
  }
}

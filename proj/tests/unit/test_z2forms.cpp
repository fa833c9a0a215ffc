#include <doctest.h>

#include <random>

#include "genuslab/error.hpp"
#include "genuslab/z2forms.hpp"
#include "oracles.hpp"

using namespace genuslab;
using oracle::Matrix;

namespace {

// Every symmetric matrix with zero diagonal of the given size that is
// nonsingular over Z_2.
std::vector<Matrix> nonsingular_alternating(int dim) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) slots.emplace_back(i, j);
  }
  std::vector<Matrix> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    Matrix m(static_cast<std::size_t>(dim), std::vector<int>(static_cast<std::size_t>(dim), 0));
    for (std::size_t k = 0; k < slots.size(); ++k) {
      const int b = static_cast<int>((mask >> k) & 1U);
      m[slots[k].first][slots[k].second] = m[slots[k].second][slots[k].first] = b;
    }
    if (Z2BilinearSpace::from_matrix(m).is_nonsingular()) out.push_back(m);
  }
  return out;
}

std::vector<int> bits_of(std::uint64_t x, int dim) {
  std::vector<int> v;
  for (int i = 0; i < dim; ++i) v.push_back(static_cast<int>((x >> i) & 1U));
  return v;
}

Matrix random_symmetric(std::mt19937_64& rng, int dim) {
  while (true) {
    Matrix m(static_cast<std::size_t>(dim), std::vector<int>(static_cast<std::size_t>(dim), 0));
    for (int i = 0; i < dim; ++i) {
      for (int j = i; j < dim; ++j) m[i][j] = m[j][i] = static_cast<int>(rng() & 1U);
    }
    if (Z2BilinearSpace::from_matrix(m).is_nonsingular()) return m;
  }
}

std::vector<int> random_z4_values(std::mt19937_64& rng, const Matrix& m) {
  std::vector<int> q;
  for (std::size_t i = 0; i < m.size(); ++i) q.push_back(m[i][i] + 2 * static_cast<int>(rng() & 1U));
  return q;
}

}  // namespace

TEST_SUITE("z2forms") {
  TEST_CASE("vector operations") {
    const auto a = Z2Vector::from_coordinates(std::vector<int>{1, 0, 1});
    const auto b = Z2Vector::from_coordinates(std::vector<int>{1, 1, 0});
    CHECK((a + b).bits() == 0b110);
    CHECK(dot(a, b) == 1);
    CHECK(a.weight() == 2);
    CHECK(Z2Vector::join(a, b, 3).bits() == 0b011101);
    CHECK(Z2Vector::unit(63)[63]);
  }

  TEST_CASE("linear algebra") {
    const std::vector<Z2Vector> v{Z2Vector(0b011), Z2Vector(0b110), Z2Vector(0b101)};
    CHECK(z2_rank(v) == 2);
    CHECK(z2_span_basis(v).size() == 2);
    CHECK(same_span(v, std::vector<Z2Vector>{Z2Vector(0b011), Z2Vector(0b101)}));
    CHECK_FALSE(same_span(v, std::vector<Z2Vector>{Z2Vector(0b001)}));
    CHECK(enumerate_span(z2_span_basis(v)).size() == 4);

    const auto sol = solve_z2(v, Z2Vector(0b000), 3);
    REQUIRE(sol.particular);
    CHECK(sol.kernel.size() == 1);
    CHECK(sol.kernel[0].bits() == 0b111);
    // x0 + x1 = 1, x1 + x2 = 1, x0 + x2 = 1 is inconsistent.
    CHECK_FALSE(solve_z2(v, Z2Vector(0b111), 3).particular);
  }

  TEST_CASE("bilinear space validation") {
    CHECK_THROWS_AS(Z2BilinearSpace::from_matrix({{0, 1}, {0, 0}}), ValidationError);
    CHECK_THROWS_AS(Z2BilinearSpace::from_matrix({{0, 1}, {1}}), ValidationError);
    CHECK_FALSE(Z2BilinearSpace::from_matrix({{1, 1}, {1, 1}}).is_nonsingular());
    CHECK(Z2BilinearSpace::hyperbolic().is_alternating());
    CHECK_FALSE(Z2BilinearSpace::from_matrix({{1}}).is_alternating());
  }

  TEST_CASE("Arf is exhaustively correct in dimensions 2 and 4") {
    for (int dim : {2, 4}) {
      const auto forms = nonsingular_alternating(dim);
      CHECK(!forms.empty());
      for (const auto& m : forms) {
        const auto space = Z2BilinearSpace::from_matrix(m);
        const auto basis = symplectic_basis(space);
        CHECK(static_cast<int>(basis.size()) == dim / 2);
        for (std::size_t i = 0; i < basis.size(); ++i) {
          CHECK(space.pairing(basis[i].e, basis[i].e_bar) == 1);
          for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            CHECK(space.pairing(basis[i].e, basis[j].e) == 0);
            CHECK(space.pairing(basis[i].e, basis[j].e_bar) == 0);
            CHECK(space.pairing(basis[i].e_bar, basis[j].e_bar) == 0);
          }
        }
        for (std::uint64_t h = 0; h < (std::uint64_t{1} << dim); ++h) {
          const Z2QuadraticForm form(space, Z2Vector(h));
          const int expected = oracle::arf_majority(m, bits_of(h, dim));
          CHECK(arf(form) == expected);
          CHECK(arf_gauss_oracle(form) == expected);
        }
      }
    }
  }

  TEST_CASE("quadratic form values follow the refinement rule") {
    std::mt19937_64 rng(5);
    const auto forms = nonsingular_alternating(4);
    for (int k = 0; k < 20; ++k) {
      const auto& m = forms[rng() % forms.size()];
      const std::uint64_t h = rng() & 0xF;
      const Z2QuadraticForm form(Z2BilinearSpace::from_matrix(m), Z2Vector(h));
      for (std::uint64_t x = 0; x < 16; ++x) CHECK(form.value(Z2Vector(x)) == oracle::z2_quadratic(m, bits_of(h, 4), x));
    }
  }

  TEST_CASE("Brown invariant matches the numeric Gauss sum") {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 150; ++k) {
      const int dim = 1 + static_cast<int>(rng() % 6);
      const auto m = random_symmetric(rng, dim);
      const auto q = random_z4_values(rng, m);
      const Z4QuadraticForm form(Z2BilinearSpace::from_matrix(m), q);
      CHECK(form.verify_refinement());
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << dim); ++x) CHECK(form.value(Z2Vector(x)) == oracle::z4_quadratic(m, q, x));
      CHECK(brown_invariant(form) == oracle::brown_numeric(m, q));
      CHECK(brown_invariant_by_splitting(form) == oracle::brown_numeric(m, q));
      CHECK(brown_invariant(form.negated()) == (8 - brown_invariant(form)) % 8);
    }
  }

  TEST_CASE("Brown invariant of small forms") {
    CHECK(brown_invariant(Z4QuadraticForm(Z2BilinearSpace::from_matrix({{1}}), {1})) == 1);
    CHECK(brown_invariant(Z4QuadraticForm(Z2BilinearSpace::from_matrix({{1}}), {3})) == 7);
    CHECK(brown_invariant(Z4QuadraticForm(Z2BilinearSpace::hyperbolic(), {0, 0})) == 0);
    const Z4QuadraticForm h22(Z2BilinearSpace::hyperbolic(), {2, 2});
    CHECK(gauss_sum(h22) == GaussianInteger{-2, 0});
    CHECK(brown_invariant(h22) == 4);
    // q(e) = q(f) = 1 on the hyperbolic plane is not a refinement.
    CHECK_THROWS_AS(Z4QuadraticForm(Z2BilinearSpace::hyperbolic(), {1, 1}), ValidationError);
    CHECK_THROWS_AS(brown_invariant(Z4QuadraticForm(Z2BilinearSpace::from_matrix({{1, 1}, {1, 1}}), {1, 1})), Error);
  }

  TEST_CASE("doubled forms and additivity") {
    std::mt19937_64 rng(23);
    const auto forms = nonsingular_alternating(4);
    for (const auto& m : forms) {
      for (std::uint64_t h = 0; h < 16; ++h) {
        const Z2QuadraticForm form(Z2BilinearSpace::from_matrix(m), Z2Vector(h));
        CHECK(brown_invariant(doubled(form)) == 4 * arf(form));
      }
    }
    for (int k = 0; k < 100; ++k) {
      const auto ma = random_symmetric(rng, 1 + static_cast<int>(rng() % 3));
      const auto mb = random_symmetric(rng, 1 + static_cast<int>(rng() % 3));
      const Z4QuadraticForm a(Z2BilinearSpace::from_matrix(ma), random_z4_values(rng, ma));
      const Z4QuadraticForm b(Z2BilinearSpace::from_matrix(mb), random_z4_values(rng, mb));
      CHECK(brown_invariant(orthogonal_sum(a, b)) == (brown_invariant(a) + brown_invariant(b)) % 8);
    }
    const Z2QuadraticForm one(Z2BilinearSpace::hyperbolic(), Z2Vector(0b11));
    CHECK(arf(orthogonal_sum(one, one)) == 0);
  }

  TEST_CASE("characteristic elements") {
    std::mt19937_64 rng(29);
    for (int k = 0; k < 40; ++k) {
      const int dim = 1 + static_cast<int>(rng() % 6);
      const auto m = random_symmetric(rng, dim);
      const auto space = Z2BilinearSpace::from_matrix(m);
      const auto found = characteristic_elements(space);
      const auto expected = oracle::characteristic_brute(m);
      REQUIRE(found.size() == expected.size());
      for (std::size_t i = 0; i < found.size(); ++i) CHECK(found[i].bits() == expected[i]);
      CHECK(found.size() == 1);
      CHECK(is_characteristic(space, found[0]));
    }
  }

  TEST_CASE("sublagrangian reduction") {
    // <1> + <1> + H with L spanned by e1 + e2.
    const auto space = Z2BilinearSpace::from_matrix({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
    const std::vector<Z2Vector> l{Z2Vector(0b0011)};
    const auto perp = orthogonal_complement(space, l);
    CHECK(perp.size() == 3);
    const auto red = sublagrangian_reduction(space, l);
    CHECK(red.space.dim() == 2);
    CHECK(red.space.is_nonsingular());
    CHECK(red.space.is_alternating());
    CHECK_THROWS_AS(sublagrangian_reduction(space, std::vector<Z2Vector>{Z2Vector(0b0001)}), Error);

    const Z2QuadraticForm h(Z2BilinearSpace::hyperbolic(), Z2Vector(0b01));
    const auto hr = sublagrangian_reduction(h, std::vector<Z2Vector>{Z2Vector(0b10)});
    CHECK(hr.space.dim() == 0);
    REQUIRE(hr.enhancement);
    CHECK_THROWS_AS(sublagrangian_reduction(h, std::vector<Z2Vector>{Z2Vector(0b01)}), Error);
  }

  TEST_CASE("Brown invariant beyond the enumeration bound") {
    // 24 copies of <1> have Brown 24 = 0 mod 8; add <-1> for 7.
    std::vector<std::vector<int>> id(25, std::vector<int>(25, 0));
    std::vector<int> q(25, 1);
    for (int i = 0; i < 25; ++i) id[i][i] = 1;
    q[24] = 3;
    const Z4QuadraticForm big(Z2BilinearSpace::from_matrix(id), q);
    CHECK(brown_invariant(big) == 7);
    CHECK_THROWS_AS(gauss_sum(big), Error);
  }

  TEST_CASE("enumeration bound") {
    std::vector<Z2Vector> basis;
    for (int i = 0; i < 21; ++i) basis.push_back(Z2Vector::unit(i));
    CHECK_THROWS_AS(enumerate_span(basis), Error);
  }
}

#include <doctest.h>

#include <random>

#include "genuslab/error.hpp"
#include "genuslab/lattice.hpp"
#include "oracles.hpp"

using namespace genuslab;
using oracle::Matrix;

namespace {

Matrix small(const IntegralLattice& l) {
  Matrix m;
  for (const auto& row : l.gram()) {
    std::vector<int> r;
    for (const auto& x : row) r.push_back(static_cast<int>(x.get_si()));
    m.push_back(r);
  }
  return m;
}

IntegralLattice from_small(const Matrix& m) {
  std::vector<std::vector<BigInt>> g;
  for (const auto& row : m) g.emplace_back(row.begin(), row.end());
  return IntegralLattice(g);
}

std::vector<IntegralLattice> pipeline_set() {
  const auto h = hyperbolic_lattice();
  return {diagonal_lattice({1, 1, 1, 1}), orthogonal_sum(h, h), e8_lattice(), diagonal_lattice({1, 1, 1, 1, 1, 1, 1, 1}),
          orthogonal_sum(diagonal_lattice({1, 1, 1, 1}), h)};
}

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("construction and validation") {
    CHECK_THROWS_AS(IntegralLattice({}), ValidationError);
    CHECK_THROWS_AS(IntegralLattice({{BigInt(1), BigInt(2)}, {BigInt(3), BigInt(1)}}), ValidationError);
    CHECK_THROWS_AS(IntegralLattice({{BigInt(1), BigInt(2)}}), ValidationError);
    CHECK(e8_lattice().determinant() == 1);
    CHECK(hyperbolic_lattice().determinant() == -1);
    CHECK(from_small({{2, 1}, {1, 2}}).determinant() == 3);
    CHECK_FALSE(from_small({{2, 1}, {1, 2}}).is_unimodular());
    for (int i = 0; i < 8; ++i) CHECK(e8_lattice().gram()[i][i] == 2);
  }

  TEST_CASE("signature agrees with floating-point eigenvalues") {
    std::mt19937_64 rng(31);
    int tested = 0;
    while (tested < 60) {
      const int dim = 1 + static_cast<int>(rng() % 7);
      Matrix m(static_cast<std::size_t>(dim), std::vector<int>(static_cast<std::size_t>(dim)));
      for (int i = 0; i < dim; ++i) {
        for (int j = i; j < dim; ++j) {
          const int v = (i == j && rng() % 3 == 0) ? 0 : static_cast<int>(rng() % 7) - 3;
          m[i][j] = m[j][i] = v;
        }
      }
      const auto l = from_small(m);
      if (l.determinant() == 0) {
        CHECK_THROWS_AS(lattice_signature(l), Error);
        continue;
      }
      CHECK(lattice_signature(l) == oracle::signature_numeric(m));
      ++tested;
    }
    CHECK(lattice_signature(e8_lattice()) == 8);
    CHECK(lattice_signature(negated(e8_lattice())) == -8);
    CHECK(lattice_signature(hyperbolic_lattice()) == 0);
    CHECK(lattice_signature(from_small({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})) == 1);
  }

  TEST_CASE("mod 2 forms and characteristic elements") {
    for (const auto& l : pipeline_set()) {
      const auto forms = lattice_to_forms(l);
      const auto m = small(l);
      CHECK(forms.characteristic.bits() == oracle::characteristic_brute(m).at(0));
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << l.dim()); ++x) {
        CHECK(forms.square.value(Z2Vector(x)) == oracle::mod(BigInt(oracle::integer_square(m, x)), 4));
      }
    }
    CHECK(lattice_to_forms(e8_lattice()).characteristic.is_zero());
    CHECK_THROWS_AS(lattice_to_forms(from_small({{2, 1}, {1, 2}})), Error);
  }

  TEST_CASE("Morita check and van der Blij") {
    const auto diag4 = morita_arf_check(diagonal_lattice({1, 1, 1, 1}));
    CHECK(diag4.signature == 4);
    CHECK(diag4.arf == 1);
    CHECK(diag4.van_der_blij);
    CHECK(diag4.consistent);
    CHECK(diag4.quotient_dimension == 2);
    const auto e8 = morita_arf_check(e8_lattice());
    CHECK(e8.arf == 0);
    CHECK(e8.characteristic_square == 0);
    CHECK(e8.consistent);
    for (int plus = 0; plus <= 8; ++plus) {
      for (int minus = 0; plus + minus <= 8; ++minus) {
        if (plus + minus == 0 || (plus - minus) % 4 != 0) continue;
        std::vector<int> d(static_cast<std::size_t>(plus), 1);
        d.insert(d.end(), static_cast<std::size_t>(minus), -1);
        const auto r = morita_arf_check(diagonal_lattice(d));
        CHECK(r.signature == plus - minus);
        CHECK(r.characteristic_square == plus - minus);
        CHECK(r.van_der_blij);
        CHECK(r.consistent);
      }
    }
    CHECK_THROWS_AS(morita_arf_check(diagonal_lattice({1, 1})), Error);
  }

  TEST_CASE("pipeline agrees with the brute-force Arf on L-perp") {
    const auto set = pipeline_set();
    int checked = 0;
    for (const auto& e : set) {
      for (const auto& fb : set) {
        const long sd = lattice_signature(e) - lattice_signature(fb);
        if (oracle::mod(BigInt(sd), 4) != 0) {
          CHECK_THROWS_AS(signature_defect_form(lattice_to_forms(e), lattice_to_forms(fb)), Error);
          continue;
        }
        const auto r = signature_defect_form(lattice_to_forms(e), lattice_to_forms(fb));
        CHECK(r.perp_descriptions_agree);
        CHECK(r.enhancement_descends);
        const bool trivial = lattice_to_forms(e).characteristic.is_zero() && lattice_to_forms(fb).characteristic.is_zero();
        CHECK(r.perp_dimension == e.dim() + fb.dim() - (trivial ? 0 : 1));
        CHECK(r.quotient.dim() == e.dim() + fb.dim() - (trivial ? 0 : 2));
        CHECK(r.arf == oracle::pipeline_arf(small(e), small(fb)));
        CHECK(oracle::mod(BigInt(4 * r.arf - sd), 8) == 0);
        ++checked;
      }
    }
    CHECK(checked == 25);
    const auto ex = signature_defect_form(lattice_to_forms(set[0]), lattice_to_forms(set[1]));
    CHECK(ex.arf == 1);
    CHECK(ex.quotient.dim() == 6);
  }
}

#include "genuslab/lattice.hpp"

#include <algorithm>

#include "genuslab/error.hpp"

namespace genuslab {

namespace {

struct EliminationResult {
  int positive = 0;
  int negative = 0;
  bool singular = false;
  BigRational determinant = 1;
};

// Symmetric Gaussian elimination over Q. When every remaining diagonal entry
// vanishes, the congruence e_j -> e_j + e_k creates the pivot 2 a_jk.
EliminationResult eliminate(const std::vector<std::vector<BigInt>>& gram) {
  const std::size_t n = gram.size();
  std::vector<std::vector<BigRational>> a(n, std::vector<BigRational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = gram[i][j];
  }
  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;

  EliminationResult r;
  while (!active.empty()) {
    auto pivot = std::find_if(active.begin(), active.end(), [&](std::size_t i) { return a[i][i] != 0; });
    if (pivot == active.end()) {
      std::size_t j = n, k = n;
      for (std::size_t x : active) {
        for (std::size_t y : active) {
          if (x != y && a[x][y] != 0) {
            j = x;
            k = y;
            break;
          }
        }
        if (j != n) break;
      }
      if (j == n) {
        r.singular = true;
        r.determinant = 0;
        return r;
      }
      for (std::size_t m : active) a[j][m] += a[k][m];
      for (std::size_t m : active) a[m][j] += a[m][k];
      continue;
    }
    const std::size_t i = *pivot;
    const BigRational d = a[i][i];
    r.determinant *= d;
    if (d > 0) {
      ++r.positive;
    } else {
      ++r.negative;
    }
    active.erase(pivot);
    for (std::size_t j : active) {
      if (a[j][i] == 0) continue;
      const BigRational factor = a[j][i] / d;
      for (std::size_t k : active) a[j][k] -= factor * a[i][k];
    }
  }
  return r;
}

BigInt self_pairing_of_lift(const IntegralLattice& lattice, Z2Vector v) {
  std::vector<BigInt> x(static_cast<std::size_t>(lattice.dim()));
  for (int i = 0; i < lattice.dim(); ++i) x[static_cast<std::size_t>(i)] = v[i] ? 1 : 0;
  return lattice.pairing(x, x);
}

struct HalvedReduction {
  SublagrangianQuotient reduction;
  Z2QuadraticForm enhancement;
  bool descends = false;
};

// Reduces q's bilinear form along <generator> and halves q on the quotient.
HalvedReduction halve_along(const Z4QuadraticForm& q, Z2Vector generator) {
  std::vector<Z2Vector> subspace;
  if (!generator.is_zero()) subspace.push_back(generator);

  HalvedReduction out{sublagrangian_reduction(q.space(), subspace), {}, false};
  const auto& red = out.reduction;

  for (auto z : red.perp_basis) {
    if (q.value(z) % 2 != 0) throw Error("q is odd on L-perp; halving is undefined (q does not refine lambda here)");
  }
  if (q.value(generator) != 0) throw Error("h is not constant on L-cosets: q(v) = 2 mod 4");

  Z2Vector values;
  for (std::size_t i = 0; i < red.representatives.size(); ++i) {
    values.set(static_cast<int>(i), q.value(red.representatives[i]) == 2);
  }
  out.enhancement = Z2QuadraticForm(red.space, values);

  if (static_cast<int>(red.perp_basis.size()) <= kMaxEnumerationDimension) {
    bool ok = true;
    for (auto z : enumerate_span(red.perp_basis)) {
      const int qz = q.value(z);
      ok = ok && qz % 2 == 0 && q.value(z + generator) == qz;
    }
    const auto& reps = red.representatives;
    for (std::uint64_t c = 0; ok && c < (std::uint64_t{1} << reps.size()); ++c) {
      Z2Vector lift;
      for (std::size_t i = 0; i < reps.size(); ++i) {
        if ((c >> i) & 1U) lift += reps[i];
      }
      ok = out.enhancement.value(Z2Vector(c)) == q.value(lift) / 2;
    }
    out.descends = ok;
  } else {
    // Parity on a basis of L-perp and q(v) = 0 mod 4 already imply descent.
    out.descends = true;
  }
  return out;
}

}  // namespace

IntegralLattice::IntegralLattice(std::vector<std::vector<BigInt>> gram) : gram_(std::move(gram)) {
  const std::size_t n = gram_.size();
  if (n == 0) throw ValidationError("gram", "lattice must have positive dimension");
  for (std::size_t i = 0; i < n; ++i) {
    if (gram_[i].size() != n) {
      throw ValidationError("gram[" + std::to_string(i) + "]", "expected " + std::to_string(n) + " entries");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (gram_[i][j] != gram_[j][i]) {
        throw ValidationError("gram[" + std::to_string(i) + "][" + std::to_string(j) + "]", "matrix is not symmetric");
      }
    }
  }
  const auto r = eliminate(gram_);
  det_ = r.determinant.get_num();
}

BigInt IntegralLattice::pairing(const std::vector<BigInt>& x, const std::vector<BigInt>& y) const {
  BigInt acc = 0;
  for (std::size_t i = 0; i < gram_.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < gram_.size(); ++j) acc += x[i] * gram_[i][j] * y[j];
  }
  return acc;
}

IntegralLattice diagonal_lattice(const std::vector<int>& entries) {
  std::vector<std::vector<BigInt>> g(entries.size(), std::vector<BigInt>(entries.size(), BigInt(0)));
  for (std::size_t i = 0; i < entries.size(); ++i) g[i][i] = entries[i];
  return IntegralLattice(std::move(g));
}

IntegralLattice hyperbolic_lattice() { return IntegralLattice({{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(0)}}); }

IntegralLattice e8_lattice() {
  // Cartan matrix of E8: a chain of seven nodes with the eighth node
  // attached to the fifth, giving arms of length 4, 2 and 1.
  std::vector<std::vector<BigInt>> g(8, std::vector<BigInt>(8, BigInt(0)));
  for (std::size_t i = 0; i < 8; ++i) g[i][i] = 2;
  auto edge = [&](std::size_t a, std::size_t b) { g[a][b] = g[b][a] = -1; };
  for (std::size_t i = 0; i + 1 < 7; ++i) edge(i, i + 1);
  edge(4, 7);
  return IntegralLattice(std::move(g));
}

IntegralLattice orthogonal_sum(const IntegralLattice& a, const IntegralLattice& b) {
  const auto n = static_cast<std::size_t>(a.dim() + b.dim());
  std::vector<std::vector<BigInt>> g(n, std::vector<BigInt>(n, BigInt(0)));
  const auto da = static_cast<std::size_t>(a.dim());
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < da; ++j) g[i][j] = a.gram()[i][j];
  }
  for (std::size_t i = 0; i < static_cast<std::size_t>(b.dim()); ++i) {
    for (std::size_t j = 0; j < static_cast<std::size_t>(b.dim()); ++j) g[da + i][da + j] = b.gram()[i][j];
  }
  return IntegralLattice(std::move(g));
}

IntegralLattice negated(const IntegralLattice& a) {
  auto g = a.gram();
  for (auto& row : g) {
    for (auto& x : row) x = -x;
  }
  return IntegralLattice(std::move(g));
}

int lattice_signature(const IntegralLattice& lattice) {
  const auto r = eliminate(lattice.gram());
  if (r.singular) throw Error("signature requires a nonsingular gram matrix");
  return r.positive - r.negative;
}

LatticeForms lattice_to_forms(const IntegralLattice& lattice) {
  if (!lattice.is_unimodular()) {
    throw ValidationError("gram", "lattice is not unimodular (det = " + lattice.determinant().get_str() + ")");
  }
  if (lattice.dim() > kMaxZ2Dimension) throw Error("lattice dimension exceeds 64");
  const int n = lattice.dim();
  std::vector<Z2Vector> rows(static_cast<std::size_t>(n));
  std::vector<int> q(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      rows[static_cast<std::size_t>(i)].set(j, mod_floor(lattice.gram()[i][j], BigInt(2)) != 0);
    }
    q[static_cast<std::size_t>(i)] = static_cast<int>(mod_floor(lattice.gram()[i][i], BigInt(4)).get_si());
  }
  Z2BilinearSpace lambda(n, std::move(rows));
  const auto chars = characteristic_elements(lambda);
  if (chars.size() != 1) throw Error("expected a unique characteristic element for a unimodular lattice");
  return {Z4QuadraticForm(std::move(lambda), std::move(q)), chars.front()};
}

MoritaCheck morita_arf_check(const IntegralLattice& lattice) {
  MoritaCheck out;
  out.signature = lattice_signature(lattice);
  if (mod_floor(static_cast<long>(out.signature), 4L) != 0) {
    throw Error("signature " + std::to_string(out.signature) + " is not divisible by 4");
  }
  const LatticeForms forms = lattice_to_forms(lattice);
  out.characteristic_square = self_pairing_of_lift(lattice, forms.characteristic);
  out.van_der_blij = mod_floor(BigInt(out.signature - out.characteristic_square), BigInt(8)) == 0;

  const auto halved = halve_along(forms.square, forms.characteristic);
  out.quotient_dimension = halved.enhancement.dim();
  out.arf = arf(halved.enhancement);
  out.consistent = mod_floor(static_cast<long>(out.signature - 4 * out.arf), 8L) == 0;
  return out;
}

SignatureDefectForm signature_defect_form(const LatticeForms& total, const LatticeForms& product) {
  const Z4QuadraticForm combined = orthogonal_sum(total.square, product.square.negated());
  const Z2BilinearSpace& lambda = combined.space();
  const Z2Vector generator = Z2Vector::join(total.characteristic, product.characteristic, total.square.dim());

  // {(x, x') : lambda(x, x) = lambda'(x', x')}, linear because the
  // self-pairing is additive over Z_2.
  const Z2Vector diag = lambda.diagonal();
  const std::vector<Z2Vector> by_self_pairing = solve_z2(std::span<const Z2Vector>(&diag, 1), Z2Vector{}, lambda.dim()).kernel;
  std::vector<Z2Vector> subspace;
  if (!generator.is_zero()) subspace.push_back(generator);
  const std::vector<Z2Vector> by_orthogonality = orthogonal_complement(lambda, subspace);

  SignatureDefectForm out;
  out.perp_descriptions_agree = same_span(by_self_pairing, by_orthogonality);
  if (!out.perp_descriptions_agree) {
    throw Error("the two descriptions of L-perp disagree; (v, v') is not characteristic");
  }

  auto halved = halve_along(combined, generator);
  out.quotient = halved.reduction.space;
  out.enhancement = halved.enhancement;
  out.perp_basis = halved.reduction.perp_basis;
  out.perp_dimension = static_cast<int>(out.perp_basis.size());
  out.enhancement_descends = halved.descends;
  if (!out.enhancement_descends) throw Error("h does not descend to L-perp / L");
  out.arf = arf(out.enhancement);
  return out;
}

}  // namespace genuslab

#include "genuslab/z2forms.hpp"

#include <algorithm>
#include <string>

#include "genuslab/error.hpp"

namespace genuslab {

namespace {

int leading_bit(Z2Vector v) { return 63 - std::countl_zero(v.bits()); }

// Row-echelon basis keyed by leading bit, largest first.
class Echelon {
 public:
  Z2Vector reduce(Z2Vector v) const {
    for (const auto& r : rows_) {
      if (v[leading_bit(r)]) v += r;
    }
    return v;
  }

  bool insert(Z2Vector v) {
    v = reduce(v);
    if (v.is_zero()) return false;
    const int lead = leading_bit(v);
    auto pos = std::find_if(rows_.begin(), rows_.end(), [&](Z2Vector r) { return leading_bit(r) < lead; });
    rows_.insert(pos, v);
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

  // Reduced echelon form, ascending by leading bit.
  std::vector<Z2Vector> reduced() const {
    std::vector<Z2Vector> out(rows_);
    for (std::size_t i = 0; i < out.size(); ++i) {
      const int lead = leading_bit(out[i]);
      for (std::size_t j = 0; j < out.size(); ++j) {
        if (j != i && out[j][lead]) out[j] += out[i];
      }
    }
    std::sort(out.begin(), out.end(), [](Z2Vector a, Z2Vector b) { return leading_bit(a) < leading_bit(b); });
    return out;
  }

 private:
  std::vector<Z2Vector> rows_;
};

std::uint64_t low_mask(int dim) { return dim >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << dim) - 1; }

// sum_{i<j, i,j in x} lambda(e_i, e_j) mod 2.
int cross_terms(const Z2BilinearSpace& space, Z2Vector x) {
  int acc = 0;
  std::uint64_t bits = x.bits();
  while (bits) {
    const int i = std::countr_zero(bits);
    bits &= bits - 1;
    acc ^= dot(space.rows()[static_cast<std::size_t>(i)], Z2Vector(bits));
  }
  return acc;
}

void require_enumerable(int dim, const char* what) {
  if (dim > kMaxEnumerationDimension) {
    throw Error(std::string(what) + ": dimension " + std::to_string(dim) + " exceeds enumeration bound " +
                std::to_string(kMaxEnumerationDimension));
  }
}

}  // namespace

Z2Vector Z2Vector::from_coordinates(std::span<const int> coords) {
  if (coords.size() > static_cast<std::size_t>(kMaxZ2Dimension)) throw Error("Z_2 vector longer than 64 coordinates");
  Z2Vector v;
  for (std::size_t i = 0; i < coords.size(); ++i) v.set(static_cast<int>(i), (coords[i] & 1) != 0);
  return v;
}

int z2_rank(std::span<const Z2Vector> vectors) {
  Echelon e;
  for (auto v : vectors) e.insert(v);
  return e.rank();
}

std::vector<Z2Vector> z2_span_basis(std::span<const Z2Vector> vectors) {
  Echelon e;
  for (auto v : vectors) e.insert(v);
  return e.reduced();
}

bool same_span(std::span<const Z2Vector> a, std::span<const Z2Vector> b) {
  return z2_span_basis(a) == z2_span_basis(b);
}

std::vector<Z2Vector> enumerate_span(std::span<const Z2Vector> basis) {
  require_enumerable(static_cast<int>(basis.size()), "span enumeration");
  std::vector<Z2Vector> out;
  out.reserve(std::size_t{1} << basis.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << basis.size()); ++mask) {
    Z2Vector v;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if ((mask >> i) & 1U) v += basis[i];
    }
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Z2LinearSolution solve_z2(std::span<const Z2Vector> rows, Z2Vector rhs, int dim) {
  struct Equation {
    Z2Vector coeffs;
    bool value;
  };
  std::vector<Equation> eqs;
  eqs.reserve(rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) eqs.push_back({rows[k] & Z2Vector(low_mask(dim)), rhs[static_cast<int>(k)]});

  std::vector<int> pivot_cols;
  std::size_t next = 0;
  for (int col = 0; col < dim && next < eqs.size(); ++col) {
    auto it = std::find_if(eqs.begin() + static_cast<std::ptrdiff_t>(next), eqs.end(),
                           [&](const Equation& e) { return e.coeffs[col]; });
    if (it == eqs.end()) continue;
    std::swap(*it, eqs[next]);
    for (std::size_t k = 0; k < eqs.size(); ++k) {
      if (k != next && eqs[k].coeffs[col]) {
        eqs[k].coeffs += eqs[next].coeffs;
        eqs[k].value ^= eqs[next].value;
      }
    }
    pivot_cols.push_back(col);
    ++next;
  }

  Z2LinearSolution sol;
  for (std::size_t k = next; k < eqs.size(); ++k) {
    if (eqs[k].value) return sol;  // 0 = 1
  }

  Z2Vector particular;
  for (std::size_t k = 0; k < pivot_cols.size(); ++k) particular.set(pivot_cols[k], eqs[k].value);
  sol.particular = particular;

  std::vector<bool> is_pivot(static_cast<std::size_t>(dim), false);
  for (int c : pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  for (int free = 0; free < dim; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Z2Vector v = Z2Vector::unit(free);
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
      if (eqs[k].coeffs[free]) v.set(pivot_cols[k]);
    }
    sol.kernel.push_back(v);
  }
  return sol;
}

Z2BilinearSpace::Z2BilinearSpace(int dim, std::vector<Z2Vector> rows) : dim_(dim), rows_(std::move(rows)) {
  if (dim < 0 || dim > kMaxZ2Dimension) throw Error("Z_2 form dimension must lie in [0, 64]");
  if (rows_.size() != static_cast<std::size_t>(dim)) throw ValidationError("gram", "expected " + std::to_string(dim) + " rows");
  for (int i = 0; i < dim; ++i) {
    if ((rows_[static_cast<std::size_t>(i)].bits() & ~low_mask(dim)) != 0) {
      throw ValidationError("gram[" + std::to_string(i) + "]", "entries beyond the dimension");
    }
    for (int j = 0; j < i; ++j) {
      if (entry(i, j) != entry(j, i)) {
        throw ValidationError("gram[" + std::to_string(i) + "][" + std::to_string(j) + "]", "matrix is not symmetric");
      }
    }
    diagonal_.set(i, entry(i, i) != 0);
  }
  nonsingular_ = z2_rank(rows_) == dim;
}

Z2BilinearSpace Z2BilinearSpace::from_matrix(const std::vector<std::vector<int>>& gram) {
  const int dim = static_cast<int>(gram.size());
  if (dim > kMaxZ2Dimension) throw Error("Z_2 form dimension exceeds 64");
  std::vector<Z2Vector> rows;
  rows.reserve(gram.size());
  for (std::size_t i = 0; i < gram.size(); ++i) {
    if (gram[i].size() != gram.size()) {
      throw ValidationError("gram[" + std::to_string(i) + "]", "expected " + std::to_string(dim) + " entries");
    }
    rows.push_back(Z2Vector::from_coordinates(gram[i]));
  }
  return Z2BilinearSpace(dim, std::move(rows));
}

Z2BilinearSpace Z2BilinearSpace::hyperbolic() { return from_matrix({{0, 1}, {1, 0}}); }

Z2Vector Z2BilinearSpace::image(Z2Vector x) const {
  Z2Vector acc;
  std::uint64_t bits = x.bits() & low_mask(dim_);
  while (bits) {
    acc += rows_[static_cast<std::size_t>(std::countr_zero(bits))];
    bits &= bits - 1;
  }
  return acc;
}

std::vector<std::vector<int>> Z2BilinearSpace::matrix() const {
  std::vector<std::vector<int>> m(static_cast<std::size_t>(dim_), std::vector<int>(static_cast<std::size_t>(dim_)));
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = entry(i, j);
  }
  return m;
}

Z2BilinearSpace orthogonal_sum(const Z2BilinearSpace& a, const Z2BilinearSpace& b) {
  if (a.dim_ + b.dim_ > kMaxZ2Dimension) throw Error("orthogonal sum exceeds 64 dimensions");
  std::vector<Z2Vector> rows(a.rows_);
  for (auto r : b.rows_) rows.push_back(Z2Vector::join(Z2Vector{}, r, a.dim_));
  return Z2BilinearSpace(a.dim_ + b.dim_, std::move(rows));
}

Z2QuadraticForm::Z2QuadraticForm(Z2BilinearSpace space, Z2Vector basis_values)
    : space_(std::move(space)), values_(basis_values & Z2Vector(low_mask(space_.dim()))) {}

int Z2QuadraticForm::value(Z2Vector x) const { return dot(x, values_) ^ cross_terms(space_, x); }

Z2QuadraticForm orthogonal_sum(const Z2QuadraticForm& a, const Z2QuadraticForm& b) {
  return Z2QuadraticForm(orthogonal_sum(a.space_, b.space_), Z2Vector::join(a.values_, b.values_, a.dim()));
}

Z4QuadraticForm::Z4QuadraticForm(Z2BilinearSpace space, std::vector<int> basis_values)
    : space_(std::move(space)), values_(std::move(basis_values)) {
  if (values_.size() != static_cast<std::size_t>(space_.dim())) {
    throw ValidationError("q", "expected " + std::to_string(space_.dim()) + " basis values");
  }
  for (int i = 0; i < space_.dim(); ++i) {
    int& q = values_[static_cast<std::size_t>(i)];
    q = ((q % 4) + 4) % 4;
    if ((q & 1) != space_.entry(i, i)) {
      throw ValidationError("q[" + std::to_string(i) + "]",
                            "q(e_i) = " + std::to_string(q) + " must have the parity of lambda(e_i, e_i) = " +
                                std::to_string(space_.entry(i, i)));
    }
  }
}

int Z4QuadraticForm::value(Z2Vector x) const {
  int acc = 0;
  std::uint64_t bits = x.bits();
  while (bits) {
    acc += values_[static_cast<std::size_t>(std::countr_zero(bits))];
    bits &= bits - 1;
  }
  return (acc + 2 * cross_terms(space_, x)) & 3;
}

Z4QuadraticForm Z4QuadraticForm::negated() const {
  std::vector<int> v(values_);
  for (int& q : v) q = (4 - q) & 3;
  return Z4QuadraticForm(space_, std::move(v));
}

bool Z4QuadraticForm::verify_refinement() const {
  const int dim = space_.dim();
  if (dim > 12) throw Error("exhaustive refinement check is limited to dimension 12");
  const std::uint64_t count = std::uint64_t{1} << dim;
  std::vector<int> q(count);
  std::vector<Z2Vector> images(count);
  for (std::uint64_t x = 0; x < count; ++x) {
    q[x] = value(Z2Vector(x));
    images[x] = space_.image(Z2Vector(x));
  }
  if (q[0] != 0) return false;
  for (std::uint64_t x = 0; x < count; ++x) {
    for (std::uint64_t y = 0; y < count; ++y) {
      const int lhs = (q[x ^ y] - q[x] - q[y] + 8) & 3;
      if (lhs != 2 * dot(images[x], Z2Vector(y))) return false;
    }
  }
  return true;
}

Z4QuadraticForm orthogonal_sum(const Z4QuadraticForm& a, const Z4QuadraticForm& b) {
  std::vector<int> v(a.values_);
  v.insert(v.end(), b.values_.begin(), b.values_.end());
  return Z4QuadraticForm(orthogonal_sum(a.space_, b.space_), std::move(v));
}

Z4QuadraticForm doubled(const Z2QuadraticForm& h) {
  if (!h.space().is_alternating()) throw Error("2h is a Z_4 refinement only over an alternating form");
  std::vector<int> v(static_cast<std::size_t>(h.dim()));
  for (int i = 0; i < h.dim(); ++i) v[static_cast<std::size_t>(i)] = 2 * static_cast<int>(h.basis_values()[i]);
  return Z4QuadraticForm(h.space(), std::move(v));
}

std::vector<SymplecticPair> symplectic_basis(const Z2BilinearSpace& space) {
  if (!space.is_alternating()) throw Error("no symplectic basis: the form has a nonzero diagonal entry");
  if (!space.is_nonsingular()) throw Error("no symplectic basis: the form is singular");

  std::vector<Z2Vector> remaining;
  for (int i = 0; i < space.dim(); ++i) remaining.push_back(Z2Vector::unit(i));

  std::vector<SymplecticPair> pairs;
  while (!remaining.empty()) {
    const Z2Vector a = remaining.front();
    auto partner = std::find_if(remaining.begin() + 1, remaining.end(), [&](Z2Vector x) { return space.pairing(a, x) == 1; });
    if (partner == remaining.end()) throw Error("no symplectic basis: the form is singular");
    const Z2Vector b = *partner;
    remaining.erase(partner);
    remaining.erase(remaining.begin());
    // Project the rest onto the orthogonal complement of span(a, b).
    for (auto& x : remaining) {
      const int with_a = space.pairing(x, a);
      const int with_b = space.pairing(x, b);
      if (with_b) x += a;
      if (with_a) x += b;
    }
    pairs.push_back({a, b});
  }
  return pairs;
}

int arf(const Z2QuadraticForm& h) {
  int acc = 0;
  for (const auto& [e, e_bar] : symplectic_basis(h.space())) acc ^= h.value(e) & h.value(e_bar);
  return acc;
}

int arf_gauss_oracle(const Z2QuadraticForm& h) {
  require_enumerable(h.dim(), "Gauss-sum Arf oracle");
  std::int64_t sum = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << h.dim()); ++x) sum += h.value(Z2Vector(x)) ? -1 : 1;
  if (sum == 0) throw Error("Gauss sum vanishes: the form is singular or not alternating");
  return sum > 0 ? 0 : 1;
}

std::vector<Z2Vector> characteristic_elements(const Z2BilinearSpace& space) {
  const auto sol = solve_z2(space.rows(), space.diagonal(), space.dim());
  if (!sol.particular) return {};
  std::vector<Z2Vector> out;
  for (auto k : enumerate_span(sol.kernel)) out.push_back(*sol.particular + k);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_characteristic(const Z2BilinearSpace& space, Z2Vector v) { return space.image(v) == space.diagonal(); }

std::vector<Z2Vector> orthogonal_complement(const Z2BilinearSpace& space, std::span<const Z2Vector> subspace) {
  std::vector<Z2Vector> rows;
  rows.reserve(subspace.size());
  for (auto l : subspace) rows.push_back(space.image(l));
  return solve_z2(rows, Z2Vector{}, space.dim()).kernel;
}

SublagrangianQuotient sublagrangian_reduction(const Z2BilinearSpace& space, std::span<const Z2Vector> subspace) {
  for (auto a : subspace) {
    for (auto b : subspace) {
      if (space.pairing(a, b) != 0) throw Error("subspace is not sublagrangian: lambda(L, L) != 0");
    }
  }
  SublagrangianQuotient out;
  out.perp_basis = orthogonal_complement(space, subspace);

  Echelon e;
  for (auto l : subspace) e.insert(l);
  for (auto x : out.perp_basis) {
    if (e.insert(x)) out.representatives.push_back(x);
  }

  const auto m = out.representatives.size();
  std::vector<Z2Vector> rows(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      rows[i].set(static_cast<int>(j), space.pairing(out.representatives[i], out.representatives[j]) != 0);
    }
  }
  out.space = Z2BilinearSpace(static_cast<int>(m), std::move(rows));
  return out;
}

SublagrangianQuotient sublagrangian_reduction(const Z2QuadraticForm& h, std::span<const Z2Vector> subspace) {
  auto out = sublagrangian_reduction(h.space(), subspace);
  // On L, h is additive (lambda vanishes there), so checking a spanning set suffices.
  for (auto l : subspace) {
    if (h.value(l) != 0) throw Error("enhancement is not constant on L-cosets: h(l) = 1 for some l in L");
  }
  Z2Vector values;
  for (std::size_t i = 0; i < out.representatives.size(); ++i) {
    values.set(static_cast<int>(i), h.value(out.representatives[i]) != 0);
  }
  out.enhancement = Z2QuadraticForm(out.space, values);
  return out;
}

GaussianInteger gauss_sum(const Z4QuadraticForm& q) {
  require_enumerable(q.dim(), "Gauss sum");
  std::int64_t parts[4] = {0, 0, 0, 0};
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << q.dim()); ++x) ++parts[q.value(Z2Vector(x))];
  // i^0 = 1, i^1 = i, i^2 = -1, i^3 = -i
  return {parts[0] - parts[2], parts[1] - parts[3]};
}

int brown_invariant_by_splitting(const Z4QuadraticForm& q) {
  const auto& space = q.space();
  if (!space.is_nonsingular()) throw Error("Brown invariant needs a nonsingular form");
  std::vector<Z2Vector> remaining;
  for (int i = 0; i < q.dim(); ++i) remaining.push_back(Z2Vector::unit(i));
  int total = 0;
  while (!remaining.empty()) {
    auto odd = std::find_if(remaining.begin(), remaining.end(), [&](Z2Vector r) { return space.self_pairing(r) == 1; });
    if (odd != remaining.end()) {
      const Z2Vector x = *odd;
      remaining.erase(odd);
      total += q.value(x) == 1 ? 1 : 7;
      for (auto& r : remaining) {
        if (space.pairing(r, x)) r += x;
      }
      continue;
    }
    const Z2Vector x = remaining.back();
    remaining.pop_back();
    auto partner = std::find_if(remaining.begin(), remaining.end(), [&](Z2Vector r) { return space.pairing(r, x) == 1; });
    if (partner == remaining.end()) throw Error("Brown invariant needs a nonsingular form");
    const Z2Vector y = *partner;
    remaining.erase(partner);
    // Hyperbolic plane: G = 2 when Arf = 0 and -2 when Arf = 1.
    if (q.value(x) == 2 && q.value(y) == 2) total += 4;
    for (auto& r : remaining) {
      const int rx = space.pairing(r, x);
      const int ry = space.pairing(r, y);
      if (ry) r += x;
      if (rx) r += y;
    }
  }
  return total % 8;
}

int brown_invariant(const Z4QuadraticForm& q) {
  const int dim = q.dim();
  if (dim > kMaxEnumerationDimension) return brown_invariant_by_splitting(q);
  const GaussianInteger g = gauss_sum(q);
  const std::int64_t norm = g.re * g.re + g.im * g.im;
  if (norm != (std::int64_t{1} << dim)) {
    throw Error("|Gauss sum|^2 = " + std::to_string(norm) + " != 2^" + std::to_string(dim) +
                ": the form is singular or q is inconsistent");
  }
  // Candidates 2^{dim/2} zeta_8^k; only the k with k = dim mod 2 are Gaussian integers.
  const std::int64_t scale = std::int64_t{1} << (dim / 2);
  for (int k = dim % 2; k < 8; k += 2) {
    GaussianInteger target = (dim % 2 == 0) ? GaussianInteger{scale, 0} : GaussianInteger{scale, scale};
    for (int r = 0; r < k / 2; ++r) target = {-target.im, target.re};  // multiply by i
    if (target == g) return k;
  }
  throw Error("Gauss sum is not an eighth root of unity times 2^{dim/2}");
}

}  // namespace genuslab

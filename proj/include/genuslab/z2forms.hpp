#pragma once

// Symmetric bilinear forms over Z_2 together with Z_2- and Z_4-valued
// quadratic refinements: Arf and Brown invariants, characteristic elements,
// and reduction along sublagrangian subspaces.
//
// Vectors live in Z_2^dim with dim <= 64 and are stored as bit masks: bit i
// is the coordinate along basis vector e_i.

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace genuslab {

inline constexpr int kMaxZ2Dimension = 64;
// Gauss sums and other exhaustive enumerations refuse larger spaces.
inline constexpr int kMaxEnumerationDimension = 20;

class Z2Vector {
 public:
  constexpr Z2Vector() = default;
  constexpr explicit Z2Vector(std::uint64_t bits) : bits_(bits) {}

  static constexpr Z2Vector unit(int i) { return Z2Vector(std::uint64_t{1} << i); }
  static Z2Vector from_coordinates(std::span<const int> coords);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool operator[](int i) const { return (bits_ >> i) & 1U; }
  constexpr bool is_zero() const { return bits_ == 0; }
  int weight() const { return std::popcount(bits_); }

  void set(int i, bool value = true) {
    if (value) {
      bits_ |= std::uint64_t{1} << i;
    } else {
      bits_ &= ~(std::uint64_t{1} << i);
    }
  }

  friend constexpr Z2Vector operator+(Z2Vector a, Z2Vector b) { return Z2Vector(a.bits_ ^ b.bits_); }
  friend constexpr Z2Vector operator&(Z2Vector a, Z2Vector b) { return Z2Vector(a.bits_ & b.bits_); }
  Z2Vector& operator+=(Z2Vector o) {
    bits_ ^= o.bits_;
    return *this;
  }

  // Standard dot product sum_i a_i b_i in Z_2.
  friend int dot(Z2Vector a, Z2Vector b) { return std::popcount(a.bits_ & b.bits_) & 1; }

  // Concatenation: the first `low_dim` coordinates from `low`, then `high`.
  static constexpr Z2Vector join(Z2Vector low, Z2Vector high, int low_dim) {
    return Z2Vector(low.bits_ | (high.bits_ << low_dim));
  }

  friend constexpr auto operator<=>(Z2Vector, Z2Vector) = default;

 private:
  std::uint64_t bits_ = 0;
};

// Rank of a family of vectors.
int z2_rank(std::span<const Z2Vector> vectors);

// Reduced basis of the span (echelon form, deterministic).
std::vector<Z2Vector> z2_span_basis(std::span<const Z2Vector> vectors);

bool same_span(std::span<const Z2Vector> a, std::span<const Z2Vector> b);

// Every element of span(basis), in ascending bit order. Refuses more than
// kMaxEnumerationDimension generators.
std::vector<Z2Vector> enumerate_span(std::span<const Z2Vector> basis);

// Solutions x of dot(rows[k], x) = rhs[k] for all k, x in Z_2^dim.
struct Z2LinearSolution {
  std::optional<Z2Vector> particular;
  std::vector<Z2Vector> kernel;  // basis of the homogeneous solution space
};
Z2LinearSolution solve_z2(std::span<const Z2Vector> rows, Z2Vector rhs, int dim);

class Z2BilinearSpace {
 public:
  Z2BilinearSpace() = default;
  // rows[i] holds lambda(e_i, e_j) at bit j. Throws if not symmetric.
  Z2BilinearSpace(int dim, std::vector<Z2Vector> rows);
  static Z2BilinearSpace from_matrix(const std::vector<std::vector<int>>& gram);
  static Z2BilinearSpace hyperbolic();

  int dim() const { return dim_; }
  const std::vector<Z2Vector>& rows() const { return rows_; }
  int entry(int i, int j) const { return rows_[static_cast<std::size_t>(i)][j]; }
  bool is_nonsingular() const { return nonsingular_; }
  // Zero diagonal; only such forms carry Z_2 quadratic enhancements.
  bool is_alternating() const { return diagonal_.is_zero(); }
  Z2Vector diagonal() const { return diagonal_; }

  // lambda(x, .) as a vector.
  Z2Vector image(Z2Vector x) const;
  int pairing(Z2Vector x, Z2Vector y) const { return dot(image(x), y); }
  // lambda(x, x) is linear in x over Z_2.
  int self_pairing(Z2Vector x) const { return dot(diagonal_, x); }

  std::vector<std::vector<int>> matrix() const;

  friend Z2BilinearSpace orthogonal_sum(const Z2BilinearSpace& a, const Z2BilinearSpace& b);
  friend bool operator==(const Z2BilinearSpace& a, const Z2BilinearSpace& b) {
    return a.dim_ == b.dim_ && a.rows_ == b.rows_;
  }

 private:
  int dim_ = 0;
  std::vector<Z2Vector> rows_;
  Z2Vector diagonal_;
  bool nonsingular_ = true;
};

// Z_2-valued enhancement h with h(x+y) = h(x) + h(y) + lambda(x, y),
// determined by its values on the basis.
class Z2QuadraticForm {
 public:
  Z2QuadraticForm() = default;
  Z2QuadraticForm(Z2BilinearSpace space, Z2Vector basis_values);

  const Z2BilinearSpace& space() const { return space_; }
  Z2Vector basis_values() const { return values_; }
  int dim() const { return space_.dim(); }
  int value(Z2Vector x) const;

  friend Z2QuadraticForm orthogonal_sum(const Z2QuadraticForm& a, const Z2QuadraticForm& b);

 private:
  Z2BilinearSpace space_;
  Z2Vector values_;
};

// Z_4-valued refinement q with q(x+y) = q(x) + q(y) + 2 lambda(x, y).
class Z4QuadraticForm {
 public:
  Z4QuadraticForm() = default;
  // Throws if some q(e_i) has the wrong parity (q(e_i) = lambda(e_i, e_i) mod 2).
  Z4QuadraticForm(Z2BilinearSpace space, std::vector<int> basis_values);

  const Z2BilinearSpace& space() const { return space_; }
  const std::vector<int>& basis_values() const { return values_; }
  int dim() const { return space_.dim(); }
  int value(Z2Vector x) const;

  // -q, refining the same form over Z_2.
  Z4QuadraticForm negated() const;

  // Exhaustive check of q(x+y) - q(x) - q(y) = 2 lambda(x, y) and q(0) = 0.
  // Limited to dim <= 12.
  bool verify_refinement() const;

  friend Z4QuadraticForm orthogonal_sum(const Z4QuadraticForm& a, const Z4QuadraticForm& b);

 private:
  Z2BilinearSpace space_;
  std::vector<int> values_;
};

// 2h as a Z_4 form (the underlying lambda must be alternating).
Z4QuadraticForm doubled(const Z2QuadraticForm& h);

struct SymplecticPair {
  Z2Vector e;
  Z2Vector e_bar;
};

// Hyperbolic pairs (e_j, e_bar_j) with lambda(e_j, e_bar_j) = 1 and all
// other pairings zero. Throws for singular or non-alternating forms.
std::vector<SymplecticPair> symplectic_basis(const Z2BilinearSpace& space);

// sum_j h(e_j) h(e_bar_j) over a symplectic basis.
int arf(const Z2QuadraticForm& h);

// Sign of sum_x (-1)^{h(x)}: positive gives 0, negative gives 1.
int arf_gauss_oracle(const Z2QuadraticForm& h);

// All v with lambda(u, u) = lambda(u, v) for every u, ascending.
std::vector<Z2Vector> characteristic_elements(const Z2BilinearSpace& space);
bool is_characteristic(const Z2BilinearSpace& space, Z2Vector v);

// {x : lambda(x, l) = 0 for every l in L}.
std::vector<Z2Vector> orthogonal_complement(const Z2BilinearSpace& space, std::span<const Z2Vector> subspace);

struct SublagrangianQuotient {
  Z2BilinearSpace space;                  // mu on L-perp / L
  std::vector<Z2Vector> perp_basis;       // basis of L-perp in the original coordinates
  std::vector<Z2Vector> representatives;  // lifts of the quotient basis
  std::optional<Z2QuadraticForm> enhancement;
};

// Throws if lambda(L, L) != 0.
SublagrangianQuotient sublagrangian_reduction(const Z2BilinearSpace& space, std::span<const Z2Vector> subspace);
// Also descends h; throws unless h vanishes on L (h constant on L-cosets).
SublagrangianQuotient sublagrangian_reduction(const Z2QuadraticForm& h, std::span<const Z2Vector> subspace);

struct GaussianInteger {
  std::int64_t re = 0;
  std::int64_t im = 0;
  friend bool operator==(const GaussianInteger&, const GaussianInteger&) = default;
};

// sum_x i^{q(x)}, exact.
GaussianInteger gauss_sum(const Z4QuadraticForm& q);

// k in Z_8 with gauss_sum(q) = 2^{dim/2} exp(2 pi i k / 8). Throws unless
// |G|^2 = 2^dim. Above kMaxEnumerationDimension the form is split instead.
int brown_invariant(const Z4QuadraticForm& q);

// Splits off rank-1 and hyperbolic summands and adds their invariants.
// Any dimension; throws for singular forms.
int brown_invariant_by_splitting(const Z4QuadraticForm& q);

}  // namespace genuslab

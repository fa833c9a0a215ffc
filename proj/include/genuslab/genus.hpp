#pragma once

// chi_y-genera from Hodge data and, independently, from Chern numbers.

#include <map>
#include <vector>

#include "genuslab/algebra.hpp"

namespace genuslab {

// chi^0(X) ... chi^n(X) for a space of complex dimension n.
class ChiVector {
 public:
  ChiVector() : ChiVector(0, {BigInt(1)}) {}
  ChiVector(int n, std::vector<BigInt> values);

  int dimension() const { return n_; }
  const std::vector<BigInt>& values() const { return values_; }
  const BigInt& operator[](int p) const { return values_.at(static_cast<std::size_t>(p)); }

  friend bool operator==(const ChiVector& a, const ChiVector& b) { return a.n_ == b.n_ && a.values_ == b.values_; }

 private:
  int n_;
  std::vector<BigInt> values_;
};

// h^{p,q} = dim H^q(X, Lambda^p T*X), indexed h[p][q].
struct HodgeDiamond {
  int n = 0;
  std::vector<std::vector<BigInt>> h;

  // Throws ValidationError on shape mismatch or negative entries.
  void validate() const;
  bool has_complex_conjugation_symmetry() const;  // h^{p,q} = h^{q,p}
  bool has_serre_symmetry() const;                // h^{p,q} = h^{n-p,n-q}
};

// Chern numbers c_I[X] for every partition I of n.
struct ChernData {
  int n = 0;
  std::map<Partition, BigInt> numbers;

  // Every key must be a partition of n and every partition of n present.
  // For n = 0 the map may be empty; the point has c_{}[pt] = 1.
  void validate() const;
  BigInt number(const Partition& monomial) const;
};

struct Specializations {
  BigInt euler;      // y = -1
  BigInt todd;       // y = 0
  BigInt signature;  // y = 1
};

struct ParityParts {
  BigInt chi_even;
  BigInt chi_odd;
};

ChiVector chi_vector_from_hodge(const HodgeDiamond& d);
YPolynomial chi_y_polynomial(const ChiVector& v);

// Reads a chi_y polynomial back into a ChiVector of the given dimension.
// Throws if the polynomial has degree above n.
ChiVector chi_vector_from_polynomial(int n, const YPolynomial& p);

Specializations specialize(const YPolynomial& p);
bool check_duality(const ChiVector& v);
ParityParts parity_parts(const ChiVector& v);

// Pairs the degree-n part of T_y with the Chern numbers. Throws when the
// result is not integral, which means the Chern data is inconsistent.
YPolynomial genus_from_chern(const ChernData& c);

ChiVector product_chi_vector(const ChiVector& a, const ChiVector& b);

// Kuenneth formula for h^{p,q} of a product.
HodgeDiamond product_hodge(const HodgeDiamond& a, const HodgeDiamond& b);

// Chern numbers of X x Y from those of the factors, via c(X x Y) = c(X) c(Y).
ChernData product_chern(const ChernData& a, const ChernData& b);

struct ProjectiveSpaceData {
  HodgeDiamond hodge;
  ChernData chern;
};

ProjectiveSpaceData projective_space_fixture(int n);

}  // namespace genuslab

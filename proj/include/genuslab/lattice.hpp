#pragma once

// Integral symmetric lattices standing in for middle-cohomology intersection
// forms, their mod 2 / mod 4 shadows, and the quadratic form whose Arf
// invariant measures the signature defect of a bundle mod 8.

#include <vector>

#include "genuslab/algebra.hpp"
#include "genuslab/z2forms.hpp"

namespace genuslab {

class IntegralLattice {
 public:
  // Throws ValidationError unless gram is square, non-empty and symmetric.
  explicit IntegralLattice(std::vector<std::vector<BigInt>> gram);

  int dim() const { return static_cast<int>(gram_.size()); }
  const std::vector<std::vector<BigInt>>& gram() const { return gram_; }
  const BigInt& determinant() const { return det_; }
  bool is_unimodular() const { return abs(det_) == 1; }

  BigInt pairing(const std::vector<BigInt>& x, const std::vector<BigInt>& y) const;

  friend bool operator==(const IntegralLattice& a, const IntegralLattice& b) { return a.gram_ == b.gram_; }

 private:
  std::vector<std::vector<BigInt>> gram_;
  BigInt det_;
};

IntegralLattice diagonal_lattice(const std::vector<int>& entries);
IntegralLattice hyperbolic_lattice();
IntegralLattice e8_lattice();  // positive definite, even, rank 8
IntegralLattice orthogonal_sum(const IntegralLattice& a, const IntegralLattice& b);
IntegralLattice negated(const IntegralLattice& a);

// Positive minus negative eigenvalues, by exact symmetric elimination.
// Throws for singular gram matrices.
int lattice_signature(const IntegralLattice& lattice);

// Mod 2 reduction lambda, the Z_4 refinement q(x) = x.x mod 4 of integral
// lifts, and the unique mod 2 characteristic element.
struct LatticeForms {
  Z4QuadraticForm square;
  Z2Vector characteristic;

  const Z2BilinearSpace& lambda() const { return square.space(); }
};

// Throws for non-unimodular lattices.
LatticeForms lattice_to_forms(const IntegralLattice& lattice);

struct MoritaCheck {
  int signature = 0;
  BigInt characteristic_square;  // v.v for the {0,1} lift of v
  int arf = 0;
  int quotient_dimension = 0;
  bool van_der_blij = false;     // signature = v.v mod 8
  bool consistent = false;       // signature = 4 Arf mod 8
};

// Reduces along <v> and reads sigma mod 8 off the Arf invariant of the
// halved Z_4 form. Throws unless sigma = 0 mod 4.
MoritaCheck morita_arf_check(const IntegralLattice& lattice);

// (W, mu, h) built from the forms of E and of F x B.
struct SignatureDefectForm {
  Z2BilinearSpace quotient;       // W with mu
  Z2QuadraticForm enhancement;    // h
  std::vector<Z2Vector> perp_basis;
  int perp_dimension = 0;
  bool perp_descriptions_agree = false;
  bool enhancement_descends = false;
  int arf = 0;
};

// L = <(v, v')>, W = L-perp / L under lambda + lambda', h = (q - q') / 2.
// Throws when the two descriptions of L-perp disagree, when q - q' is odd on
// L-perp, or when h is not constant on L-cosets.
SignatureDefectForm signature_defect_form(const LatticeForms& total, const LatticeForms& product);

}  // namespace genuslab

#pragma once

// Congruence calculus for chi_y of fibre-bundle triples F -> E -> B at odd y.

#include <vector>

#include "genuslab/algebra.hpp"
#include "genuslab/genus.hpp"

namespace genuslab {

// Substitutes y^2 = 1: folds y^k onto y^(k mod 2).
YPolynomial reduce_mod_1_minus_y2(const YPolynomial& p);

// Substitutes y^3 = y: folds y^k (k >= 3) down by steps of two.
YPolynomial reduce_mod_y_minus_y3(const YPolynomial& p);

// (sigma/2)(1+y) + (chi/2)(1-y). Throws if sigma - chi is odd.
YPolynomial signature_euler_canonical(const BigInt& signature, const BigInt& euler);

// todd(1-y^2) + (chi/2)(y^2-y) + (sigma/2)(y^2+y). Throws if sigma - chi is odd.
YPolynomial todd_euler_signature_canonical(const BigInt& todd, const BigInt& euler, const BigInt& signature);

// Exact test for p = (1 - y^2) * c with c in Z[y].
bool divisible_by_1_minus_y2(const YPolynomial& p);

// chi_y(E) - chi_y(F) chi_y(B).
YPolynomial defect(const ChiVector& total, const ChiVector& fiber, const ChiVector& base);

// sigma(E) - sigma(F) sigma(B).
BigInt signature_defect(const ChiVector& total, const ChiVector& fiber, const ChiVector& base);

struct CongruenceOptions {
  // false selects the weaker thresholds for data without chi^p duality.
  bool duality_mode = true;
  // Asserted (never computed) triviality of the pi_1(B) action on the
  // middle cohomology of F mod 4; upgrades every odd y to mod 8.
  bool monodromy_mod4_trivial = false;
};

struct CongruenceReport {
  long y = 1;
  BigInt defect_value;
  BigInt sigma_defect;
  long guaranteed_modulus = 4;
  bool holds = false;

  // y = 1 mod 4 without the monodromy upgrade: the defect vanishes mod
  // `equivalence_modulus` exactly when the signature defect does.
  bool equivalence_checked = false;
  long equivalence_modulus = 0;
  bool defect_vanishes = false;
  bool sigma_vanishes = false;
  bool equivalence_holds = true;

  // Every claimed congruence is satisfied.
  bool ok() const { return holds && equivalence_holds; }
};

// Throws genuslab::Error for even y.
CongruenceReport classify_and_check(const YPolynomial& defect_poly, const BigInt& sigma_defect, long y,
                                    const CongruenceOptions& options = {});

// Odd integers in [lo, hi], ascending.
std::vector<long> odd_values(long lo, long hi);

std::vector<CongruenceReport> check_triple(const ChiVector& total, const ChiVector& fiber, const ChiVector& base,
                                           const std::vector<long>& ys, const CongruenceOptions& options = {});

}  // namespace genuslab

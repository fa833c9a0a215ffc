#include "genuslab/congruence.hpp"

#include "genuslab/error.hpp"

namespace genuslab {

namespace {

YPolynomial fold(const YPolynomial& p, std::size_t max_degree) {
  std::vector<BigInt> v(max_degree + 1, BigInt(0));
  const auto& cs = p.coefficients();
  for (std::size_t k = 0; k < cs.size(); ++k) {
    std::size_t target = k;
    while (target > max_degree) target -= 2;
    v[target] += cs[k];
  }
  return YPolynomial(std::move(v));
}

BigInt exact_half(const BigInt& value, const char* what) {
  if (mod_floor(value, BigInt(2)) != 0) throw Error(std::string(what) + " is odd; not valid manifold data");
  return value / 2;
}

void require_parity(const BigInt& signature, const BigInt& euler) {
  if (mod_floor(BigInt(signature - euler), BigInt(2)) != 0) {
    throw Error("sigma - chi = " + BigInt(signature - euler).get_str() + " is odd; not valid manifold data");
  }
}

bool divides(long modulus, const BigInt& value) { return mod_floor(value, BigInt(modulus)) == 0; }

}  // namespace

YPolynomial reduce_mod_1_minus_y2(const YPolynomial& p) { return fold(p, 1); }

YPolynomial reduce_mod_y_minus_y3(const YPolynomial& p) {
  // y^k with k >= 3 folds to y^2 for even k, y for odd k; the constant stays.
  return fold(p, 2);
}

YPolynomial signature_euler_canonical(const BigInt& signature, const BigInt& euler) {
  require_parity(signature, euler);
  const BigInt even_part = exact_half(signature + euler, "sigma + chi");
  const BigInt odd_part = exact_half(signature - euler, "sigma - chi");
  return YPolynomial{even_part, odd_part};
}

YPolynomial todd_euler_signature_canonical(const BigInt& todd, const BigInt& euler, const BigInt& signature) {
  require_parity(signature, euler);
  // t(1-y^2) + (chi/2)(y^2-y) + (sigma/2)(y^2+y)
  //   = t + ((sigma-chi)/2) y + ((sigma+chi)/2 - t) y^2
  const BigInt odd_part = exact_half(signature - euler, "sigma - chi");
  const BigInt even_part = exact_half(signature + euler, "sigma + chi");
  return YPolynomial{todd, odd_part, BigInt(even_part - todd)};
}

bool divisible_by_1_minus_y2(const YPolynomial& p) {
  // Long division by -(y^2 - 1); the divisor is monic up to sign, so the
  // quotient stays integral and only the remainder matters.
  std::vector<BigInt> r = p.coefficients();
  for (std::size_t k = r.size(); k-- > 2;) {
    // Remove r_k y^k using r_k y^{k-2} (y^2 - 1).
    r[k - 2] += r[k];
    r[k] = 0;
  }
  for (const auto& c : r) {
    if (c != 0) return false;
  }
  return true;
}

YPolynomial defect(const ChiVector& total, const ChiVector& fiber, const ChiVector& base) {
  return chi_y_polynomial(total) - chi_y_polynomial(fiber) * chi_y_polynomial(base);
}

BigInt signature_defect(const ChiVector& total, const ChiVector& fiber, const ChiVector& base) {
  return specialize(chi_y_polynomial(total)).signature -
         specialize(chi_y_polynomial(fiber)).signature * specialize(chi_y_polynomial(base)).signature;
}

CongruenceReport classify_and_check(const YPolynomial& defect_poly, const BigInt& sigma_defect, long y,
                                    const CongruenceOptions& options) {
  if (mod_floor(y, 2) == 0) throw Error("y = " + std::to_string(y) + " is even; no congruence is claimed");

  const long weak = options.duality_mode ? 4 : 2;
  const long strong = options.duality_mode ? 8 : 4;

  CongruenceReport r;
  r.y = y;
  r.defect_value = defect_poly.evaluate(BigInt(y));
  r.sigma_defect = sigma_defect;

  const long residue = mod_floor(y, 4);
  if (residue == 3 || (options.monodromy_mod4_trivial && options.duality_mode)) {
    r.guaranteed_modulus = strong;
  } else {
    r.guaranteed_modulus = weak;
  }
  r.holds = divides(r.guaranteed_modulus, r.defect_value);

  if (residue == 1) {
    r.equivalence_checked = true;
    r.equivalence_modulus = strong;
    r.defect_vanishes = divides(strong, r.defect_value);
    r.sigma_vanishes = divides(strong, sigma_defect);
    r.equivalence_holds = r.defect_vanishes == r.sigma_vanishes;
  }
  return r;
}

std::vector<long> odd_values(long lo, long hi) {
  std::vector<long> out;
  for (long y = lo; y <= hi; ++y) {
    if (mod_floor(y, 2) == 1) out.push_back(y);
  }
  return out;
}

std::vector<CongruenceReport> check_triple(const ChiVector& total, const ChiVector& fiber, const ChiVector& base,
                                           const std::vector<long>& ys, const CongruenceOptions& options) {
  const YPolynomial d = defect(total, fiber, base);
  const BigInt sd = signature_defect(total, fiber, base);
  std::vector<CongruenceReport> out;
  out.reserve(ys.size());
  for (long y : ys) out.push_back(classify_and_check(d, sd, y, options));
  return out;
}

}  // namespace genuslab

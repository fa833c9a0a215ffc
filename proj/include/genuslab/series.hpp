#pragma once

// Truncated power series in a single Chern root alpha, and graded series in
// the Chern classes c_1..c_n. Coefficients are rational polynomials in y so
// that one computation covers the whole Hirzebruch family at once.

#include <map>
#include <vector>

#include "genuslab/algebra.hpp"

namespace genuslab {

// sum_k coefficient[k] * alpha^k, truncated after alpha^order.
class AlphaSeries {
 public:
  AlphaSeries() = default;
  explicit AlphaSeries(std::vector<RationalPolynomial> coefficients);

  // Series whose coefficients do not depend on y.
  static AlphaSeries from_constants(const std::vector<BigRational>& coefficients);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const RationalPolynomial& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  const std::vector<RationalPolynomial>& coefficients() const { return coeffs_; }

  // Leading coefficient equals the constant 1.
  bool is_normalized() const;

  // Coefficients after substituting a numeric value for y.
  std::vector<BigRational> at_y(const BigRational& y) const;

  // Product truncated to the smaller of the two orders.
  friend AlphaSeries operator*(const AlphaSeries& a, const AlphaSeries& b);

  friend bool operator==(const AlphaSeries& a, const AlphaSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<RationalPolynomial> coeffs_;
};

// Expansion of x / (1 - e^{-x}) through x^order.
AlphaSeries todd_series(int order);

// Expansion of alpha(1+y)/(1 - e^{-alpha(1+y)}) - alpha*y through alpha^order.
AlphaSeries qy_series(int order);

// Polynomial in c_1..c_n with every monomial of weight <= truncation degree.
// Monomials are keyed by the partition listing their indices, so c_1^2 c_2
// is {2,1,1}. The empty partition is the constant term.
class GradedSeries {
 public:
  explicit GradedSeries(int truncation_degree) : degree_(truncation_degree) {}

  static GradedSeries constant(int truncation_degree, const RationalPolynomial& c);
  // The Chern class c_index as a series (zero when index exceeds the truncation).
  static GradedSeries chern_class(int truncation_degree, int index);

  int truncation_degree() const { return degree_; }
  const std::map<Partition, RationalPolynomial>& terms() const { return terms_; }

  RationalPolynomial coefficient(const Partition& monomial) const;

  // Drops the term when it exceeds the truncation degree or is zero.
  void add_term(const Partition& monomial, const RationalPolynomial& c);

  // Terms of weight exactly k.
  GradedSeries homogeneous(int k) const;

  friend GradedSeries operator+(const GradedSeries& a, const GradedSeries& b);
  friend GradedSeries operator-(const GradedSeries& a, const GradedSeries& b);
  friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);
  friend GradedSeries operator*(const RationalPolynomial& s, const GradedSeries& g);

  friend bool operator==(const GradedSeries& a, const GradedSeries& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  int degree_;
  std::map<Partition, RationalPolynomial> terms_;
};

// Merges two partitions into the partition of the product monomial.
Partition multiply_monomials(const Partition& a, const Partition& b);

// Expresses prod_i q(alpha_i) through the elementary symmetric functions
// c_j = e_j(alpha) up to weight n. The homogeneous part of weight j is the
// j-th K-polynomial. Throws genuslab::Error if q[0] != 1 or n > q.order().
GradedSeries multiplicative_sequence(const AlphaSeries& q, int n);

}  // namespace genuslab

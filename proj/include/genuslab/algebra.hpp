#pragma once

// Exact arithmetic primitives: big integers/rationals, univariate polynomials
// in the genus variable y, and integer partitions used to key Chern monomials.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace genuslab {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Builds a canonical rational from numerator/denominator (denominator != 0).
BigRational make_rational(const BigInt& num, const BigInt& den);

// Floor-style residue in [0, m).
BigInt mod_floor(const BigInt& a, const BigInt& m);
long mod_floor(long a, long m);

bool is_integer(const BigRational& r);

// Dense polynomial in y. Coefficient k multiplies y^k; trailing zeros are
// stripped so that the zero polynomial has an empty coefficient list.
template <typename Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> coefficients) : coeffs_(std::move(coefficients)) { normalize(); }
  Polynomial(std::initializer_list<Coeff> coefficients) : coeffs_(coefficients) { normalize(); }

  static Polynomial constant(Coeff c) { return Polynomial(std::vector<Coeff>{std::move(c)}); }

  static Polynomial monomial(Coeff c, std::size_t power) {
    std::vector<Coeff> v(power + 1, Coeff(0));
    v[power] = std::move(c);
    return Polynomial(std::move(v));
  }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Coeff>& coefficients() const { return coeffs_; }

  Coeff coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Coeff(0); }

  // Horner evaluation.
  Coeff evaluate(const Coeff& y) const {
    Coeff acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * y + *it;
    }
    return acc;
  }

  Polynomial operator-() const {
    std::vector<Coeff> v(coeffs_);
    for (auto& c : v) c = -c;
    return Polynomial(std::move(v));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Coeff> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return Polynomial(std::move(v));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> v(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        v[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Polynomial(std::move(v));
  }

  friend Polynomial operator*(const Coeff& s, const Polynomial& p) {
    std::vector<Coeff> v(p.coeffs_);
    for (auto& c : v) c *= s;
    return Polynomial(std::move(v));
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using YPolynomial = Polynomial<BigInt>;
using RationalPolynomial = Polynomial<BigRational>;

RationalPolynomial to_rational(const YPolynomial& p);

// Throws genuslab::Error when some coefficient is not an integer.
YPolynomial to_integral(const RationalPolynomial& p);
bool has_integral_coefficients(const RationalPolynomial& p);

// Ascending powers with explicit signs, e.g. "2 - 20*y + 2*y^2"; zero is "0".
std::string to_string(const YPolynomial& p);
std::string to_string(const RationalPolynomial& p);

// Integer partition, parts sorted in non-increasing order.
using Partition = std::vector<int>;

int weight(const Partition& p);

// All partitions of n in reverse lexicographic order ([n] first, [1,...,1] last).
std::vector<Partition> partitions_of(int n);

// Comma-joined descending parts: {2,1} <-> "2,1". The empty partition is "".
std::string partition_key(const Partition& p);
Partition parse_partition_key(std::string_view key);

BigInt binomial(long n, long k);

}  // namespace genuslab

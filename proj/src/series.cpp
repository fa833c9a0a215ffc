#include "genuslab/series.hpp"

#include <functional>

#include "genuslab/error.hpp"

namespace genuslab {

AlphaSeries::AlphaSeries(std::vector<RationalPolynomial> coefficients) : coeffs_(std::move(coefficients)) {}

AlphaSeries AlphaSeries::from_constants(const std::vector<BigRational>& coefficients) {
  std::vector<RationalPolynomial> v;
  v.reserve(coefficients.size());
  for (const auto& c : coefficients) v.push_back(RationalPolynomial::constant(c));
  return AlphaSeries(std::move(v));
}

bool AlphaSeries::is_normalized() const {
  return !coeffs_.empty() && coeffs_[0] == RationalPolynomial::constant(BigRational(1));
}

std::vector<BigRational> AlphaSeries::at_y(const BigRational& y) const {
  std::vector<BigRational> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.evaluate(y));
  return out;
}

AlphaSeries operator*(const AlphaSeries& a, const AlphaSeries& b) {
  const int order = std::min(a.order(), b.order());
  if (order < 0) return {};
  std::vector<RationalPolynomial> v(static_cast<std::size_t>(order) + 1);
  for (int i = 0; i <= order; ++i) {
    for (int j = 0; i + j <= order; ++j) {
      v[static_cast<std::size_t>(i + j)] += a[i] * b[j];
    }
  }
  return AlphaSeries(std::move(v));
}

AlphaSeries todd_series(int order) {
  if (order < 0) throw Error("series order must be non-negative");
  // (1 - e^{-x}) / x = sum_k d_k x^k with d_k = (-1)^k / (k+1)!, and S * D = 1.
  std::vector<BigRational> d(static_cast<std::size_t>(order) + 1);
  BigInt factorial = 1;
  for (int k = 0; k <= order; ++k) {
    factorial *= k + 1;
    d[static_cast<std::size_t>(k)] = make_rational(k % 2 == 0 ? 1 : -1, factorial);
  }
  std::vector<BigRational> s(static_cast<std::size_t>(order) + 1);
  s[0] = 1;
  for (int m = 1; m <= order; ++m) {
    BigRational acc = 0;
    for (int k = 1; k <= m; ++k) acc += d[static_cast<std::size_t>(k)] * s[static_cast<std::size_t>(m - k)];
    s[static_cast<std::size_t>(m)] = -acc;
  }
  return AlphaSeries::from_constants(s);
}

AlphaSeries qy_series(int order) {
  const AlphaSeries todd = todd_series(order);
  const RationalPolynomial one_plus_y{BigRational(1), BigRational(1)};
  std::vector<RationalPolynomial> v;
  v.reserve(static_cast<std::size_t>(order) + 1);
  RationalPolynomial power = RationalPolynomial::constant(BigRational(1));
  for (int k = 0; k <= order; ++k) {
    v.push_back(todd[k] * power);
    power *= one_plus_y;
  }
  if (order >= 1) v[1] -= RationalPolynomial::monomial(BigRational(1), 1);
  return AlphaSeries(std::move(v));
}

GradedSeries GradedSeries::constant(int truncation_degree, const RationalPolynomial& c) {
  GradedSeries g(truncation_degree);
  g.add_term({}, c);
  return g;
}

GradedSeries GradedSeries::chern_class(int truncation_degree, int index) {
  GradedSeries g(truncation_degree);
  g.add_term({index}, RationalPolynomial::constant(BigRational(1)));
  return g;
}

RationalPolynomial GradedSeries::coefficient(const Partition& monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? RationalPolynomial{} : it->second;
}

void GradedSeries::add_term(const Partition& monomial, const RationalPolynomial& c) {
  if (weight(monomial) > degree_ || c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(monomial, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GradedSeries GradedSeries::homogeneous(int k) const {
  GradedSeries g(degree_);
  for (const auto& [m, c] : terms_) {
    if (weight(m) == k) g.terms_.emplace(m, c);
  }
  return g;
}

GradedSeries operator+(const GradedSeries& a, const GradedSeries& b) {
  GradedSeries g(std::min(a.degree_, b.degree_));
  for (const auto& [m, c] : a.terms_) g.add_term(m, c);
  for (const auto& [m, c] : b.terms_) g.add_term(m, c);
  return g;
}

GradedSeries operator-(const GradedSeries& a, const GradedSeries& b) {
  GradedSeries g(std::min(a.degree_, b.degree_));
  for (const auto& [m, c] : a.terms_) g.add_term(m, c);
  for (const auto& [m, c] : b.terms_) g.add_term(m, -c);
  return g;
}

Partition multiply_monomials(const Partition& a, const Partition& b) {
  Partition out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), std::greater<>());
  return out;
}

GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
  GradedSeries g(std::min(a.degree_, b.degree_));
  for (const auto& [ma, ca] : a.terms_) {
    const int wa = weight(ma);
    for (const auto& [mb, cb] : b.terms_) {
      if (wa + weight(mb) > g.degree_) continue;
      g.add_term(multiply_monomials(ma, mb), ca * cb);
    }
  }
  return g;
}

GradedSeries operator*(const RationalPolynomial& s, const GradedSeries& g) {
  GradedSeries out(g.degree_);
  for (const auto& [m, c] : g.terms_) out.add_term(m, s * c);
  return out;
}

GradedSeries multiplicative_sequence(const AlphaSeries& q, int n) {
  if (!q.is_normalized()) throw Error("multiplicative sequence needs a normalized series (constant term 1)");
  if (n < 0 || n > q.order()) {
    throw Error("multiplicative sequence degree " + std::to_string(n) + " exceeds series order " +
                std::to_string(q.order()));
  }

  // log q(alpha) = sum_k l_k alpha^k, from k*l_k = k*q_k - sum_{j<k} j*l_j*q_{k-j}.
  std::vector<RationalPolynomial> log_coeffs(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) {
    RationalPolynomial acc = BigRational(k) * q[k];
    for (int j = 1; j < k; ++j) acc -= BigRational(j) * (log_coeffs[static_cast<std::size_t>(j)] * q[k - j]);
    log_coeffs[static_cast<std::size_t>(k)] = make_rational(1, k) * acc;
  }

  // Newton's identities: p_k = sum_{i=1}^{k-1} (-1)^{i-1} c_i p_{k-i} + (-1)^{k-1} k c_k.
  std::vector<GradedSeries> power_sums(static_cast<std::size_t>(n) + 1, GradedSeries(n));
  for (int k = 1; k <= n; ++k) {
    GradedSeries p(n);
    for (int i = 1; i < k; ++i) {
      const BigRational sign = (i % 2 == 1) ? 1 : -1;
      p = p + RationalPolynomial::constant(sign) * (GradedSeries::chern_class(n, i) * power_sums[static_cast<std::size_t>(k - i)]);
    }
    const BigRational last = (k % 2 == 1) ? BigRational(k) : BigRational(-k);
    p = p + RationalPolynomial::constant(last) * GradedSeries::chern_class(n, k);
    power_sums[static_cast<std::size_t>(k)] = p;
  }

  // G_k = l_k p_k is the weight-k part of log prod q(alpha_i). The weight
  // derivation turns E = exp(G) into m E_m = sum_k k G_k E_{m-k}.
  std::vector<GradedSeries> exp_parts(static_cast<std::size_t>(n) + 1, GradedSeries(n));
  exp_parts[0] = GradedSeries::constant(n, RationalPolynomial::constant(BigRational(1)));
  for (int m = 1; m <= n; ++m) {
    GradedSeries acc(n);
    for (int k = 1; k <= m; ++k) {
      const RationalPolynomial scale = BigRational(k) * log_coeffs[static_cast<std::size_t>(k)];
      acc = acc + scale * (power_sums[static_cast<std::size_t>(k)] * exp_parts[static_cast<std::size_t>(m - k)]);
    }
    exp_parts[static_cast<std::size_t>(m)] = RationalPolynomial::constant(make_rational(1, m)) * acc;
  }

  GradedSeries result(n);
  for (const auto& part : exp_parts) result = result + part;
  return result;
}

}  // namespace genuslab

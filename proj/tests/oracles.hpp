#pragma once

// Slow reference computations for the tests. Each one is written from the
// textbook definition and shares no code path with the library routine it
// checks (only BigInt/BigRational and plain containers are reused).

#include <gmpxx.h>

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace oracle {

using Int = mpz_class;
using Rat = mpq_class;
using Series = std::vector<Rat>;  // coefficient k of t^k
using Matrix = std::vector<std::vector<int>>;

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Int choose(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Bernoulli numbers with B_1 = +1/2, from sum_{j<=m} C(m+1, j) B_j = 0.
inline std::vector<Rat> bernoulli_plus(int n) {
  std::vector<Rat> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rat s = 0;
    for (int j = 0; j < m; ++j) s += Rat(choose(m + 1, j)) * b[j];
    b[m] = -s / Rat(m + 1);
  }
  if (n >= 1) b[1] = Rat(1, 2);
  return b;
}

// x / (1 - e^{-x}) = sum B_k^+ x^k / k!.
inline Series todd(int order) {
  const auto b = bernoulli_plus(order);
  Series s;
  for (int k = 0; k <= order; ++k) s.push_back(b[k] / Rat(factorial(k)));
  return s;
}

inline Series mul(const Series& a, const Series& b, int order) {
  Series c(static_cast<std::size_t>(order) + 1, Rat(0));
  for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i) {
    for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// a / b with b[0] != 0, by long division.
inline Series div(const Series& a, const Series& b, int order) {
  Series q(static_cast<std::size_t>(order) + 1, Rat(0));
  Series r = a;
  r.resize(static_cast<std::size_t>(order) + 1, Rat(0));
  for (int k = 0; k <= order; ++k) {
    q[k] = r[k] / b[0];
    for (int j = 0; k + j <= order && j < static_cast<int>(b.size()); ++j) r[k + j] -= q[k] * b[j];
  }
  return q;
}

// Hirzebruch's form alpha (1 + y e^{-alpha(1+y)}) / (1 - e^{-alpha(1+y)})
// at a numeric y, both numerator and denominator divided by alpha.
inline Series hirzebruch_q(const Rat& y, int order) {
  const Rat u = 1 + y;
  Series num(static_cast<std::size_t>(order) + 1);
  Series den(static_cast<std::size_t>(order) + 1);
  Rat pw = 1;  // (-u)^k
  for (int k = 0; k <= order; ++k) {
    num[k] = y * pw / Rat(factorial(k));
    den[k] = -(pw * -u) / Rat(factorial(k + 1));
    pw *= -u;
  }
  num[0] += 1;
  if (u == 0) {
    Series s(static_cast<std::size_t>(order) + 1, Rat(0));
    s[0] = 1;
    if (order >= 1) s[1] = 1;
    return s;
  }
  return div(num, den, order);
}

// prod_i q(alpha_i t) as a series in t.
inline Series product_over_roots(const Series& q, const std::vector<Rat>& roots, int order) {
  Series acc(static_cast<std::size_t>(order) + 1, Rat(0));
  acc[0] = 1;
  for (const auto& a : roots) {
    Series scaled(static_cast<std::size_t>(order) + 1);
    Rat pw = 1;
    for (int k = 0; k <= order; ++k) {
      scaled[k] = q[k] * pw;
      pw *= a;
    }
    acc = mul(acc, scaled, order);
  }
  return acc;
}

// e_1..e_n of the roots.
inline std::vector<Rat> elementary(const std::vector<Rat>& roots) {
  std::vector<Rat> e(roots.size() + 1, Rat(0));
  e[0] = 1;
  for (const auto& a : roots) {
    for (std::size_t j = e.size() - 1; j >= 1; --j) e[j] += a * e[j - 1];
  }
  return e;
}

// sum_p chi^p y^p with explicit powers.
inline Int chi_y_at(const std::vector<Int>& chi, long y) {
  Int total = 0;
  for (std::size_t p = 0; p < chi.size(); ++p) {
    Int pw;
    mpz_pow_ui(pw.get_mpz_t(), Int(y).get_mpz_t(), p);
    total += chi[p] * pw;
  }
  return total;
}

inline long mod(const Int& a, long m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r.get_si();
}

// Z_2 helpers on bit masks.
inline int bit(std::uint64_t x, int i) { return static_cast<int>((x >> i) & 1U); }

// h(x) = sum x_i h_i + sum_{i<j} x_i x_j lambda_ij mod 2.
inline int z2_quadratic(const Matrix& lambda, const std::vector<int>& h, std::uint64_t x) {
  const int n = static_cast<int>(lambda.size());
  int v = 0;
  for (int i = 0; i < n; ++i) {
    if (!bit(x, i)) continue;
    v += h[i];
    for (int j = i + 1; j < n; ++j) v += bit(x, j) * lambda[i][j];
  }
  return v & 1;
}

// Arf by majority vote: 1 exactly when h takes the value 1 more often.
inline int arf_majority(const Matrix& lambda, const std::vector<int>& h) {
  const int n = static_cast<int>(lambda.size());
  long ones = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) ones += z2_quadratic(lambda, h, x);
  return 2 * ones > (1L << n) ? 1 : 0;
}

// q(x) = sum x_i q_i + 2 sum_{i<j} x_i x_j lambda_ij mod 4.
inline int z4_quadratic(const Matrix& lambda, const std::vector<int>& q, std::uint64_t x) {
  const int n = static_cast<int>(lambda.size());
  int v = 0;
  for (int i = 0; i < n; ++i) {
    if (!bit(x, i)) continue;
    v += q[i];
    for (int j = i + 1; j < n; ++j) v += 2 * bit(x, j) * (lambda[i][j] & 1);
  }
  return ((v % 4) + 4) % 4;
}

// Brown invariant from the argument of the floating-point Gauss sum.
inline int brown_numeric(const Matrix& lambda, const std::vector<int>& q) {
  const int n = static_cast<int>(lambda.size());
  const std::complex<double> powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::complex<double> g = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) g += powers[z4_quadratic(lambda, q, x)];
  const double eighths = std::atan2(g.imag(), g.real()) / (std::atan(1.0));
  return ((static_cast<int>(std::lround(eighths)) % 8) + 8) % 8;
}

// All v with lambda(u, u) = lambda(u, v) for every u, by enumeration.
inline std::vector<std::uint64_t> characteristic_brute(const Matrix& lambda) {
  const int n = static_cast<int>(lambda.size());
  auto pair = [&](std::uint64_t a, std::uint64_t b) {
    int s = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) s += bit(a, i) * bit(b, j) * (lambda[i][j] & 1);
    }
    return s & 1;
  };
  std::vector<std::uint64_t> out;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    bool ok = true;
    for (std::uint64_t u = 0; u < (std::uint64_t{1} << n) && ok; ++u) ok = pair(u, u) == pair(u, v);
    if (ok) out.push_back(v);
  }
  return out;
}

// Signature from floating-point eigenvalues.
inline int signature_numeric(const Matrix& gram) {
  const int n = static_cast<int>(gram.size());
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = gram[i][j];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  int s = 0;
  for (int i = 0; i < n; ++i) s += solver.eigenvalues()(i) > 0 ? 1 : -1;
  return s;
}

inline long integer_square(const Matrix& gram, std::uint64_t x) {
  const int n = static_cast<int>(gram.size());
  long s = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) s += bit(x, i) * bit(x, j) * gram[i][j];
  }
  return s;
}

inline Matrix block_sum(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size() + b.size();
  Matrix m(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) m[i][j] = a[i][j];
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) m[a.size() + i][a.size() + j] = b[i][j];
  }
  return m;
}

// Arf of h = (x.x - x'.x')/2 on the orthogonal complement of (v, v'),
// read off the sign of sum_{x in L-perp} (-1)^h(x). Needs a + b <= 22.
inline int pipeline_arf(const Matrix& e, const Matrix& fb) {
  const int a = static_cast<int>(e.size());
  const int b = static_cast<int>(fb.size());
  const std::uint64_t v = characteristic_brute(e).at(0);
  const std::uint64_t w = characteristic_brute(fb).at(0);
  long sum = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << a); ++x) {
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << b); ++y) {
      int pairing = 0;
      for (int i = 0; i < a; ++i) {
        for (int j = 0; j < a; ++j) pairing += bit(x, i) * bit(v, j) * e[i][j];
      }
      for (int i = 0; i < b; ++i) {
        for (int j = 0; j < b; ++j) pairing += bit(y, i) * bit(w, j) * fb[i][j];
      }
      if (pairing % 2 != 0) continue;
      const long diff = integer_square(e, x) - integer_square(fb, y);
      const long h = (((diff % 4) + 4) % 4) / 2;
      sum += h == 0 ? 1 : -1;
    }
  }
  return sum < 0 ? 1 : 0;
}

}  // namespace oracle

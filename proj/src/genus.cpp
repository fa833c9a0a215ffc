#include "genuslab/genus.hpp"

#include <utility>

#include "genuslab/error.hpp"
#include "genuslab/series.hpp"

namespace genuslab {

ChiVector::ChiVector(int n, std::vector<BigInt> values) : n_(n), values_(std::move(values)) {
  if (n < 0) throw ValidationError("n", "complex dimension must be non-negative");
  if (values_.size() != static_cast<std::size_t>(n) + 1) {
    throw ValidationError("chi", "expected " + std::to_string(n + 1) + " entries for n = " + std::to_string(n) +
                                     ", got " + std::to_string(values_.size()));
  }
}

void HodgeDiamond::validate() const {
  if (n < 0) throw ValidationError("hodge", "complex dimension must be non-negative");
  const auto size = static_cast<std::size_t>(n) + 1;
  if (h.size() != size) throw ValidationError("hodge", "expected " + std::to_string(size) + " rows");
  for (std::size_t p = 0; p < size; ++p) {
    if (h[p].size() != size) {
      throw ValidationError("hodge[" + std::to_string(p) + "]", "expected " + std::to_string(size) + " entries");
    }
    for (std::size_t q = 0; q < size; ++q) {
      if (h[p][q] < 0) {
        throw ValidationError("hodge[" + std::to_string(p) + "][" + std::to_string(q) + "]", "negative Hodge number");
      }
    }
  }
}

bool HodgeDiamond::has_complex_conjugation_symmetry() const {
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      if (h[p][q] != h[q][p]) return false;
    }
  }
  return true;
}

bool HodgeDiamond::has_serre_symmetry() const {
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      if (h[p][q] != h[n - p][n - q]) return false;
    }
  }
  return true;
}

BigInt ChernData::number(const Partition& monomial) const {
  auto it = numbers.find(monomial);
  if (it != numbers.end()) return it->second;
  if (monomial.empty() && n == 0) return 1;
  throw ValidationError("chern[\"" + partition_key(monomial) + "\"]", "missing Chern number");
}

void ChernData::validate() const {
  if (n < 0) throw ValidationError("chern", "complex dimension must be non-negative");
  for (const auto& [key, value] : numbers) {
    if (weight(key) != n || !std::is_sorted(key.begin(), key.end(), std::greater<>())) {
      throw ValidationError("chern[\"" + partition_key(key) + "\"]", "not a partition of " + std::to_string(n));
    }
  }
  for (const auto& part : partitions_of(n)) {
    if (!part.empty() && !numbers.contains(part)) {
      throw ValidationError("chern[\"" + partition_key(part) + "\"]", "missing Chern number");
    }
  }
}

ChiVector chi_vector_from_hodge(const HodgeDiamond& d) {
  d.validate();
  std::vector<BigInt> chi(static_cast<std::size_t>(d.n) + 1);
  for (int p = 0; p <= d.n; ++p) {
    BigInt acc = 0;
    for (int q = 0; q <= d.n; ++q) {
      if (q % 2 == 0) {
        acc += d.h[p][q];
      } else {
        acc -= d.h[p][q];
      }
    }
    chi[static_cast<std::size_t>(p)] = acc;
  }
  return ChiVector(d.n, std::move(chi));
}

YPolynomial chi_y_polynomial(const ChiVector& v) { return YPolynomial(v.values()); }

ChiVector chi_vector_from_polynomial(int n, const YPolynomial& p) {
  if (p.degree() > n) {
    throw Error("polynomial of degree " + std::to_string(p.degree()) + " exceeds dimension " + std::to_string(n));
  }
  std::vector<BigInt> values(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) values[static_cast<std::size_t>(k)] = p.coefficient(static_cast<std::size_t>(k));
  return ChiVector(n, std::move(values));
}

Specializations specialize(const YPolynomial& p) {
  return {p.evaluate(BigInt(-1)), p.evaluate(BigInt(0)), p.evaluate(BigInt(1))};
}

bool check_duality(const ChiVector& v) {
  const int n = v.dimension();
  for (int p = 0; p <= n; ++p) {
    const BigInt mirrored = (n % 2 == 0) ? v[n - p] : BigInt(-v[n - p]);
    if (v[p] != mirrored) return false;
  }
  return true;
}

ParityParts parity_parts(const ChiVector& v) {
  ParityParts parts{0, 0};
  for (int p = 0; p <= v.dimension(); ++p) {
    if (p % 2 == 0) {
      parts.chi_even += v[p];
    } else {
      parts.chi_odd += v[p];
    }
  }
  return parts;
}

YPolynomial genus_from_chern(const ChernData& c) {
  c.validate();
  const GradedSeries hirzebruch = multiplicative_sequence(qy_series(c.n), c.n);
  const GradedSeries top = hirzebruch.homogeneous(c.n);
  RationalPolynomial total;
  for (const auto& [monomial, coeff] : top.terms()) {
    total += BigRational(c.number(monomial)) * coeff;
  }
  if (!has_integral_coefficients(total)) {
    throw Error("Chern numbers give a non-integral chi_y genus (" + to_string(total) + "); data is inconsistent");
  }
  return to_integral(total);
}

ChiVector product_chi_vector(const ChiVector& a, const ChiVector& b) {
  const int n = a.dimension() + b.dimension();
  return chi_vector_from_polynomial(n, chi_y_polynomial(a) * chi_y_polynomial(b));
}

HodgeDiamond product_hodge(const HodgeDiamond& a, const HodgeDiamond& b) {
  a.validate();
  b.validate();
  HodgeDiamond out;
  out.n = a.n + b.n;
  const auto size = static_cast<std::size_t>(out.n) + 1;
  out.h.assign(size, std::vector<BigInt>(size, BigInt(0)));
  for (int p1 = 0; p1 <= a.n; ++p1) {
    for (int q1 = 0; q1 <= a.n; ++q1) {
      for (int p2 = 0; p2 <= b.n; ++p2) {
        for (int q2 = 0; q2 <= b.n; ++q2) {
          out.h[p1 + p2][q1 + q2] += a.h[p1][q1] * b.h[p2][q2];
        }
      }
    }
  }
  return out;
}

ChernData product_chern(const ChernData& a, const ChernData& b) {
  a.validate();
  b.validate();
  // A mixed monomial is a pair (monomial in c(X), monomial in c(Y)); only
  // pairs of bi-weight (n_X, n_Y) survive evaluation on [X] x [Y].
  using Mixed = std::pair<Partition, Partition>;
  ChernData out;
  out.n = a.n + b.n;
  for (const auto& target : partitions_of(out.n)) {
    std::map<Mixed, BigInt> expansion{{Mixed{}, BigInt(1)}};
    for (int index : target) {
      std::map<Mixed, BigInt> next;
      for (const auto& [mixed, coeff] : expansion) {
        const int wa = weight(mixed.first);
        const int wb = weight(mixed.second);
        // c_index(X x Y) = sum_{i+j=index} c_i(X) c_j(Y), with c_0 = 1.
        for (int i = 0; i <= index; ++i) {
          const int j = index - i;
          if (wa + i > a.n || wb + j > b.n) continue;
          Mixed m = mixed;
          if (i > 0) m.first = multiply_monomials(m.first, {i});
          if (j > 0) m.second = multiply_monomials(m.second, {j});
          next[m] += coeff;
        }
      }
      expansion = std::move(next);
    }
    BigInt value = 0;
    for (const auto& [mixed, coeff] : expansion) {
      if (weight(mixed.first) != a.n || weight(mixed.second) != b.n) continue;
      value += coeff * a.number(mixed.first) * b.number(mixed.second);
    }
    if (!target.empty()) out.numbers.emplace(target, value);
  }
  return out;
}

ProjectiveSpaceData projective_space_fixture(int n) {
  if (n < 0) throw Error("projective space dimension must be non-negative");
  ProjectiveSpaceData data;
  data.hodge.n = n;
  const auto size = static_cast<std::size_t>(n) + 1;
  data.hodge.h.assign(size, std::vector<BigInt>(size, BigInt(0)));
  for (std::size_t p = 0; p < size; ++p) data.hodge.h[p][p] = 1;
  // c(P^n) = (1 + a)^{n+1}, so c_i = binom(n+1, i) a^i and a^n[P^n] = 1.
  data.chern.n = n;
  for (const auto& part : partitions_of(n)) {
    if (part.empty()) continue;
    BigInt value = 1;
    for (int i : part) value *= binomial(n + 1, i);
    data.chern.numbers.emplace(part, value);
  }
  return data;
}

}  // namespace genuslab

#include "genuslab/algebra.hpp"

#include <charconv>
#include <functional>

#include "genuslab/error.hpp"

namespace genuslab {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error("rational with zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

long mod_floor(long a, long m) {
  long r = a % m;
  return r < 0 ? r + (m < 0 ? -m : m) : r;
}

bool is_integer(const BigRational& r) {
  return mpz_divisible_p(r.get_num_mpz_t(), r.get_den_mpz_t()) != 0;
}

RationalPolynomial to_rational(const YPolynomial& p) {
  std::vector<BigRational> v;
  v.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) v.emplace_back(c);
  return RationalPolynomial(std::move(v));
}

bool has_integral_coefficients(const RationalPolynomial& p) {
  return std::all_of(p.coefficients().begin(), p.coefficients().end(), [](const BigRational& c) { return is_integer(c); });
}

YPolynomial to_integral(const RationalPolynomial& p) {
  std::vector<BigInt> v;
  v.reserve(p.coefficients().size());
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    const auto& c = p.coefficients()[k];
    if (!is_integer(c)) {
      throw Error("coefficient of y^" + std::to_string(k) + " is not an integer: " + c.get_str());
    }
    v.push_back(BigInt(c.get_num() / c.get_den()));
  }
  return YPolynomial(std::move(v));
}

namespace {

template <typename Coeff>
std::string render(const Polynomial<Coeff>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  const auto& cs = p.coefficients();
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (cs[k] == 0) continue;
    const bool negative = cs[k] < 0;
    Coeff magnitude = abs(cs[k]);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (k == 0) {
      out += magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out += magnitude.get_str() + "*";
    out += "y";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace

std::string to_string(const YPolynomial& p) { return render(p); }
std::string to_string(const RationalPolynomial& p) { return render(p); }

int weight(const Partition& p) {
  int w = 0;
  for (int part : p) w += part;
  return w;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  Partition current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::string partition_key(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out;
}

Partition parse_partition_key(std::string_view key) {
  Partition p;
  if (key.empty()) return p;
  std::size_t pos = 0;
  while (pos <= key.size()) {
    std::size_t comma = key.find(',', pos);
    if (comma == std::string_view::npos) comma = key.size();
    std::string_view token = key.substr(pos, comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value <= 0) {
      throw ValidationError("", "malformed partition key \"" + std::string(key) + "\"");
    }
    p.push_back(value);
    pos = comma + 1;
  }
  if (!std::is_sorted(p.begin(), p.end(), std::greater<>())) {
    throw ValidationError("", "partition key \"" + std::string(key) + "\" must list parts in descending order");
  }
  return p;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace genuslab

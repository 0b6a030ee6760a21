#include "bizon/polynomial.hpp"

#include "bizon/errors.hpp"

#include <algorithm>

namespace bizon {

HilbertPolynomial::HilbertPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  normalise();
}

HilbertPolynomial::HilbertPolynomial(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  normalise();
}

HilbertPolynomial HilbertPolynomial::geometric(int len) {
  return HilbertPolynomial(std::vector<BigInt>(std::max(len, 0), BigInt(1)));
}

void HilbertPolynomial::normalise() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt HilbertPolynomial::dimension() const {
  BigInt s = 0;
  for (const BigInt& c : coeffs_) s += c;
  return s;
}

HilbertPolynomial HilbertPolynomial::shifted(int k) const {
  if (k < 0) throw InvalidArgument("negative shift");
  if (is_zero()) return {};
  std::vector<BigInt> c(static_cast<std::size_t>(k), BigInt(0));
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return HilbertPolynomial(std::move(c));
}

HilbertPolynomial& HilbertPolynomial::operator+=(const HilbertPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalise();
  return *this;
}

HilbertPolynomial& HilbertPolynomial::operator-=(const HilbertPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalise();
  return *this;
}

HilbertPolynomial operator*(const HilbertPolynomial& a, const HilbertPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return HilbertPolynomial(std::move(c));
}

HilbertPolynomial HilbertPolynomial::pow(int e) const {
  if (e < 0) throw InvalidArgument("negative exponent");
  HilbertPolynomial acc = one();
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

std::string HilbertPolynomial::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ", ";
    s += coeffs_[i].str();
  }
  return s;
}

bool is_unimodal(const HilbertPolynomial& h) {
  const auto& c = h.coeffs();
  std::size_t i = 0;
  while (i + 1 < c.size() && c[i] <= c[i + 1]) ++i;
  while (i + 1 < c.size() && c[i] >= c[i + 1]) ++i;
  return i + 1 >= c.size();
}

bool is_log_concave(const HilbertPolynomial& h) {
  const auto& c = h.coeffs();
  for (std::size_t i = 1; i + 1 < c.size(); ++i)
    if (c[i] * c[i] < c[i - 1] * c[i + 1]) return false;
  return true;
}

} // namespace bizon

#pragma once

#include "bizon/bigint.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace bizon {

/// Hilbert polynomial of a graded algebra: coeff(k) = dimension in degree k.
///
/// Coefficients are kept normalised (no trailing zeros), so the zero
/// algebra is the empty coefficient list.
class HilbertPolynomial {
public:
  HilbertPolynomial() = default;
  explicit HilbertPolynomial(std::vector<BigInt> coeffs);
  HilbertPolynomial(std::initializer_list<long long> coeffs);

  static HilbertPolynomial one() { return HilbertPolynomial{1}; }
  /// 1 + t + ... + t^(len-1); zero when len == 0.
  static HilbertPolynomial geometric(int len);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }
  bool is_zero() const { return coeffs_.empty(); }

  /// Index of the last nonzero coefficient; -1 for the zero polynomial.
  int top_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt top_coefficient() const { return is_zero() ? BigInt(0) : coeffs_.back(); }
  BigInt dimension() const;

  /// Multiplication by t^k.
  HilbertPolynomial shifted(int k) const;

  HilbertPolynomial& operator+=(const HilbertPolynomial& o);
  HilbertPolynomial& operator-=(const HilbertPolynomial& o);
  friend HilbertPolynomial operator+(HilbertPolynomial a, const HilbertPolynomial& b) { return a += b; }
  friend HilbertPolynomial operator-(HilbertPolynomial a, const HilbertPolynomial& b) { return a -= b; }
  friend HilbertPolynomial operator*(const HilbertPolynomial& a, const HilbertPolynomial& b);
  HilbertPolynomial pow(int e) const;

  friend bool operator==(const HilbertPolynomial&, const HilbertPolynomial&) = default;

  /// "1, 3, 6, 7"
  std::string to_string() const;

private:
  void normalise();
  std::vector<BigInt> coeffs_;
};

/// Empirical shape checks, reported alongside computed series.
bool is_unimodal(const HilbertPolynomial& h);
bool is_log_concave(const HilbertPolynomial& h);

} // namespace bizon

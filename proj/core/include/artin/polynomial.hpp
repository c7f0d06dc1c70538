// Integer-coefficient polynomials of degree 1..3, the candidate-value
// generators. Coefficients are bounded by 2^70 in magnitude; evaluation is
// overflow-checked and must stay below 2^72 in magnitude.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "artin/wide.hpp"

namespace artin {

class Polynomial {
 public:
  // Coefficients constant-term first, degree = size-1 in [1,3], leading
  // coefficient nonzero, |coefficient| < 2^70. Throws std::invalid_argument.
  explicit Polynomial(std::vector<i128> coefficients);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const i128> coefficients() const noexcept { return coeffs_; }
  i128 coefficient(std::size_t i) const noexcept { return coeffs_[i]; }

  // Exact f(n) by Horner evaluation. Throws std::range_error if any
  // intermediate overflows or |f(n)| >= 2^72.
  i128 eval(std::uint64_t n) const;

  // True when f(n+1) > f(n) for every integer n in [begin, end-1), decided
  // exactly; returns false when in doubt (callers treat this as an
  // optimization hint only).
  bool strictly_increasing_on(std::uint64_t begin, std::uint64_t end) const noexcept;

  // Completed-square form for ax^2+bx+c with a > 0, b >= 0 and 2a | b:
  // returns (h, t) with h(n) = a*n^2 + (c - a*t^2), t = b/(2a), so that
  // f(x) = h(x + t). Otherwise nullopt.
  std::optional<std::pair<Polynomial, std::uint64_t>> depressed() const;

  // "c0,c1,...,cd" with exact decimal coefficients.
  std::string csv() const;
  static std::optional<Polynomial> parse_csv(std::string_view text);

  // Human-readable rendering, highest power first.
  std::string display() const;

  bool operator==(const Polynomial&) const = default;

 private:
  std::vector<i128> coeffs_;
};

// Largest coefficient magnitude accepted (exclusive bound).
inline constexpr u128 kCoeffBound = static_cast<u128>(1) << 70;
// Largest |f(n)| the scanning kernels accept (exclusive bound).
inline constexpr u128 kValueBound = static_cast<u128>(1) << 72;

}  // namespace artin

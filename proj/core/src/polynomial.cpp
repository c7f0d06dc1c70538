#include "artin/polynomial.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace artin {
namespace {

bool checked_mul(i128 a, i128 b, i128* out) noexcept {
  return !__builtin_mul_overflow(a, b, out);
}
bool checked_add(i128 a, i128 b, i128* out) noexcept {
  return !__builtin_add_overflow(a, b, out);
}

// Evaluates at a signed argument with overflow detection; used both for
// public eval and for the monotonicity analysis.
bool eval_checked(std::span<const i128> coeffs, i128 x, i128* out) noexcept {
  i128 acc = coeffs.back();
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
    if (!checked_mul(acc, x, &acc)) return false;
    if (!checked_add(acc, coeffs[i], &acc)) return false;
  }
  *out = acc;
  return true;
}

// floor division for i128
i128 div_floor(i128 a, i128 b) noexcept {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

Polynomial::Polynomial(std::vector<i128> coefficients)
    : coeffs_(std::move(coefficients)) {
  if (coeffs_.size() < 2 || coeffs_.size() > 4)
    throw std::invalid_argument("Polynomial: degree must be 1..3");
  if (coeffs_.back() == 0)
    throw std::invalid_argument("Polynomial: leading coefficient must be nonzero");
  for (const i128 c : coeffs_)
    if (abs_wide(c) >= kCoeffBound)
      throw std::invalid_argument(
          "Polynomial: coefficient magnitude must be below 2^70");
}

i128 Polynomial::eval(std::uint64_t n) const {
  if (n > static_cast<std::uint64_t>(1) << 62)
    throw std::range_error("Polynomial::eval: argument out of range");
  i128 value;
  if (!eval_checked(coeffs_, static_cast<i128>(n), &value))
    throw std::range_error("Polynomial::eval: overflow at n = " + std::to_string(n));
  if (abs_wide(value) >= kValueBound)
    throw std::range_error("Polynomial::eval: |f(n)| exceeds 2^72 at n = " +
                           std::to_string(n));
  return value;
}

bool Polynomial::strictly_increasing_on(std::uint64_t begin,
                                        std::uint64_t end) const noexcept {
  if (end < begin + 2) return true;
  // Difference polynomial D(x) = f(x+1) - f(x); strict increase over the
  // integer window means D > 0 on [begin, end-2].
  const i128 c1 = coeffs_[1];
  const i128 c2 = coeffs_.size() > 2 ? coeffs_[2] : 0;
  const i128 c3 = coeffs_.size() > 3 ? coeffs_[3] : 0;
  const i128 da = 3 * c3;                   // x^2
  const i128 db = 2 * c2 + 3 * c3;          // x
  const i128 dc = c1 + c2 + c3;             // 1

  const i128 lo = static_cast<i128>(begin);
  const i128 hi = static_cast<i128>(end - 2);
  const auto positive_at = [&](i128 x) noexcept {
    i128 v;
    std::array<i128, 3> cs{dc, db, da};
    if (!eval_checked(std::span<const i128>(cs.data(), 3), x, &v)) return false;
    return v > 0;
  };

  if (da == 0) {
    // D linear (or constant): minimum at an endpoint.
    return positive_at(lo) && positive_at(hi);
  }
  if (da > 0) {
    // Upward parabola: integer minimum is adjacent to the vertex -db/(2da).
    const i128 vx = div_floor(-db, 2 * da);
    if (vx >= lo && vx <= hi) {
      const i128 vy = std::min(vx + 1, hi);
      return positive_at(vx) && positive_at(vy);
    }
    return positive_at(vx < lo ? lo : hi);
  }
  // Downward parabola: minimum at an endpoint.
  return positive_at(lo) && positive_at(hi);
}

std::optional<std::pair<Polynomial, std::uint64_t>> Polynomial::depressed() const {
  if (degree() != 2) return std::nullopt;
  const i128 a = coeffs_[2], b = coeffs_[1], c = coeffs_[0];
  if (a <= 0 || b < 0 || b % (2 * a) != 0) return std::nullopt;
  const i128 t = b / (2 * a);
  i128 at2, c0;
  if (!checked_mul(a, t, &at2) || !checked_mul(at2, t, &at2)) return std::nullopt;
  if (!checked_add(c, -at2, &c0)) return std::nullopt;
  if (abs_wide(c0) >= kCoeffBound) return std::nullopt;
  if (static_cast<u128>(t) > static_cast<u128>(1) << 62) return std::nullopt;
  return std::make_pair(Polynomial({c0, 0, a}), static_cast<std::uint64_t>(t));
}

std::string Polynomial::csv() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += to_string(coeffs_[i]);
  }
  return out;
}

std::optional<Polynomial> Polynomial::parse_csv(std::string_view text) {
  std::vector<i128> coeffs;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto token = text.substr(0, comma);
    const auto v = parse_i128(token);
    if (!v || abs_wide(*v) >= kCoeffBound) return std::nullopt;
    coeffs.push_back(*v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) return std::nullopt;  // trailing comma
  }
  if (coeffs.size() < 2 || coeffs.size() > 4 || coeffs.back() == 0)
    return std::nullopt;
  return Polynomial(std::move(coeffs));
}

std::string Polynomial::display() const {
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const i128 c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0 && !out.empty()) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const u128 mag = abs_wide(c);
    if (mag != 1 || i == 0) out += to_string(mag);
    if (i > 0) {
      if (mag != 1) out += "*";
      out += "X";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace artin

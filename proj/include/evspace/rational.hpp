#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace evspace {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses `a/b`, an integer, or a decimal literal (`0.125` is read exactly
/// as 125/1000). Leading sign allowed. Throws InputError.
Rational parse_rational(std::string_view text);

/// Canonical text form: `a/b`, or `a` when the denominator is 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// A probability held as a reduced rational in [0,1].
class Prob {
 public:
  Prob() = default;
  /// Throws InputError("probability out of range") outside [0,1].
  explicit Prob(Rational value);

  static Prob zero() { return Prob(); }
  static Prob one() { return Prob(Rational(1)); }

  const Rational& value() const noexcept { return value_; }
  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  Prob complement() const { return Prob(Rational(1) - value_); }
  std::string str() const { return to_string(value_); }
  double to_double() const { return evspace::to_double(value_); }

  friend bool operator==(const Prob& a, const Prob& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Prob& a, const Prob& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  Rational value_{0};
};

/// Builds num/den in lowest terms. Requires 0 <= num <= den, den > 0.
Prob prob(const BigInt& num, const BigInt& den);
Prob prob(std::int64_t num, std::int64_t den);

/// parse_rational followed by the [0,1] range check.
Prob parse_prob(std::string_view text);

/// Comparison policy. Exact mode compares rationals; float mode treats
/// values within `eps` as equal.
struct EvalMode {
  enum class Kind { Exact, Float };
  Kind kind = Kind::Exact;
  double eps = 1e-9;

  static EvalMode exact() { return {}; }
  static EvalMode floating(double eps = 1e-9) { return {Kind::Float, eps}; }
};

/// Three-way comparison under `mode`: -1, 0 or +1.
int compare(const Rational& a, const Rational& b,
            const EvalMode& mode = EvalMode::exact());

inline int compare(const Prob& a, const Prob& b,
                   const EvalMode& mode = EvalMode::exact()) {
  return compare(a.value(), b.value(), mode);
}

}  // namespace evspace

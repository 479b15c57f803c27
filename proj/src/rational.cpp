#include "evspace/rational.hpp"

#include <cctype>
#include <cmath>

#include "evspace/errors.hpp"

namespace evspace {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad_literal(std::string_view text) {
  throw InputError("malformed rational '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational out;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_literal(text);
    BigInt d{std::string(den)};
    if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    out = Rational(BigInt(std::string(num)), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad_literal(text);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)))
      bad_literal(text);
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    BigInt w = whole.empty() ? BigInt(0) : BigInt(std::string(whole));
    BigInt f = frac.empty() ? BigInt(0) : BigInt(std::string(frac));
    out = Rational(w * scale + f, scale);
  } else {
    if (!all_digits(s)) bad_literal(text);
    out = Rational(BigInt(std::string(s)));
  }
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_str();
}

double to_double(const Rational& value) { return value.get_d(); }

Prob::Prob(Rational value) : value_(std::move(value)) {
  value_.canonicalize();
  if (value_ < 0 || value_ > 1)
    throw InputError("probability out of range: " + to_string(value_));
}

Prob prob(const BigInt& num, const BigInt& den) {
  if (den <= 0 || num < 0 || num > den)
    throw InputError("probability out of range: " + num.get_str() + "/" +
                     den.get_str());
  Rational r(num, den);
  r.canonicalize();
  return Prob(std::move(r));
}

Prob prob(std::int64_t num, std::int64_t den) {
  return prob(BigInt(std::to_string(num)), BigInt(std::to_string(den)));
}

Prob parse_prob(std::string_view text) { return Prob(parse_rational(text)); }

int compare(const Rational& a, const Rational& b, const EvalMode& mode) {
  if (mode.kind == EvalMode::Kind::Float) {
    double diff = to_double(a) - to_double(b);
    if (std::fabs(diff) <= mode.eps) return 0;
    return diff < 0 ? -1 : 1;
  }
  int c = cmp(a, b);
  return (c > 0) - (c < 0);
}

}  // namespace evspace

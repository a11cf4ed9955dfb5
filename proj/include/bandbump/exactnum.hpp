#pragma once

// Exact integer and rational arithmetic for the probability engine.
//
// Every probability in the library is an ExactRational. Decimal strings are
// produced only at the output boundary, by to_decimal() and sqrt_to_decimal(),
// both of which round correctly (half to even) at the requested number of
// significant figures.

#include <gmpxx.h>

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bandbump {

using ExactInteger = mpz_class;
using ExactRational = mpq_class;

/// Raised for arguments that violate an operation's preconditions.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Canonical num/den. Throws ParameterError when den == 0.
ExactRational make_rational(const ExactInteger& num, const ExactInteger& den);

/// C(a, b); zero when b < 0 or b > a. Throws ParameterError when a < 0.
ExactInteger binomial(long a, long b);

/// m! / (parts[0]! * parts[1]! * ...). The parts must be non-negative and sum to m.
ExactInteger multinomial(long m, std::span<const long> parts);

/// Pascal triangle cached up to row max_n. Read-only after construction.
class BinomialTable {
 public:
  explicit BinomialTable(int max_n);

  int max_n() const { return static_cast<int>(rows_.size()) - 1; }

  /// C(a, b) for 0 <= a <= max_n; zero for b outside [0, a].
  const ExactInteger& operator()(int a, int b) const;

 private:
  std::vector<std::vector<ExactInteger>> rows_;
};

long floor_div(long a, long b);
long ceil_div(long a, long b);

/// floor / ceil of an exact rational.
ExactInteger floor(const ExactRational& x);
ExactInteger ceil(const ExactRational& x);

/// Fixed-point decimal with sig_figs significant digits, round half to even.
/// Zero renders as "0".
std::string to_decimal(const ExactRational& x, int sig_figs);

/// Correctly rounded decimal of sqrt(x) for x >= 0, same format as to_decimal.
std::string sqrt_to_decimal(const ExactRational& x, int sig_figs);

/// "num/den" (den omitted never; integers render as "k/1").
std::string to_fraction_string(const ExactRational& x);

/// Parses "[-+]digits[.digits]" or "[-+]num/den" exactly.
ExactRational parse_exact(std::string_view text);

}  // namespace bandbump

#include "bandbump/exactnum.hpp"

#include <cctype>

namespace bandbump {

namespace {

ExactInteger pow10(unsigned long e) {
  ExactInteger r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// 10^e as a rational, for any sign of e.
ExactRational pow10q(long e) {
  if (e >= 0) return ExactRational(pow10(static_cast<unsigned long>(e)));
  return make_rational(1, pow10(static_cast<unsigned long>(-e)));
}

// Renders the sig-digit significand `digits` scaled so that its leading digit
// sits at decimal position `exponent` (10^exponent).
std::string place_digits(const ExactInteger& significand, long exponent, int sig_figs,
                         bool negative) {
  std::string digits = significand.get_str();
  std::string out = negative ? "-" : "";
  if (exponent < 0) {
    out += "0.";
    out.append(static_cast<size_t>(-exponent - 1), '0');
    out += digits;
  } else if (exponent + 1 >= sig_figs) {
    out += digits;
    out.append(static_cast<size_t>(exponent + 1 - sig_figs), '0');
  } else {
    out += digits.substr(0, static_cast<size_t>(exponent + 1));
    out += '.';
    out += digits.substr(static_cast<size_t>(exponent + 1));
  }
  return out;
}

// Round half to even of a non-negative rational given as floor + fraction.
ExactInteger round_half_even(const ExactInteger& whole, const ExactRational& fraction) {
  const ExactRational half = make_rational(1, 2);
  if (fraction > half) return whole + 1;
  if (fraction < half) return whole;
  return mpz_even_p(whole.get_mpz_t()) ? whole : ExactInteger(whole + 1);
}

}  // namespace

ExactRational make_rational(const ExactInteger& num, const ExactInteger& den) {
  if (den == 0) throw ParameterError("rational with zero denominator");
  ExactRational r(num, den);
  r.canonicalize();
  return r;
}

ExactInteger binomial(long a, long b) {
  if (a < 0) throw ParameterError("binomial: negative upper index " + std::to_string(a));
  if (b < 0 || b > a) return 0;
  ExactInteger r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

ExactInteger multinomial(long m, std::span<const long> parts) {
  long sum = 0;
  for (long p : parts) {
    if (p < 0) throw ParameterError("multinomial: negative part");
    sum += p;
  }
  if (sum != m) {
    throw ParameterError("multinomial: parts sum to " + std::to_string(sum) + ", expected " +
                         std::to_string(m));
  }
  ExactInteger num;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(m));
  ExactInteger den = 1;
  for (long p : parts) {
    ExactInteger f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(p));
    den *= f;
  }
  return num / den;
}

BinomialTable::BinomialTable(int max_n) {
  if (max_n < 0) throw ParameterError("BinomialTable: negative size");
  rows_.resize(static_cast<size_t>(max_n) + 1);
  for (int a = 0; a <= max_n; ++a) {
    auto& row = rows_[static_cast<size_t>(a)];
    row.resize(static_cast<size_t>(a) + 1);
    row.front() = 1;
    row.back() = 1;
    for (int b = 1; b < a; ++b) {
      const auto& prev = rows_[static_cast<size_t>(a) - 1];
      row[static_cast<size_t>(b)] = prev[static_cast<size_t>(b) - 1] + prev[static_cast<size_t>(b)];
    }
  }
}

const ExactInteger& BinomialTable::operator()(int a, int b) const {
  static const ExactInteger zero = 0;
  if (a < 0 || a > max_n()) {
    throw ParameterError("BinomialTable: row " + std::to_string(a) + " outside [0, " +
                         std::to_string(max_n()) + "]");
  }
  if (b < 0 || b > a) return zero;
  return rows_[static_cast<size_t>(a)][static_cast<size_t>(b)];
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long ceil_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

ExactInteger floor(const ExactRational& x) {
  ExactInteger r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

ExactInteger ceil(const ExactRational& x) {
  ExactInteger r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

std::string to_decimal(const ExactRational& x, int sig_figs) {
  if (sig_figs < 1) throw ParameterError("to_decimal: sig_figs must be >= 1");
  if (x == 0) return "0";
  const ExactRational a = abs(x);

  // 10^e <= a < 10^(e+1)
  long e = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 10));
  while (a < pow10q(e)) --e;
  while (a >= pow10q(e + 1)) ++e;

  const ExactRational scaled = a * pow10q(sig_figs - 1 - e);
  const ExactInteger whole = floor(scaled);
  ExactInteger significand = round_half_even(whole, scaled - whole);
  if (significand == pow10(static_cast<unsigned long>(sig_figs))) {
    significand /= 10;
    ++e;
  }
  return place_digits(significand, e, sig_figs, x < 0);
}

std::string sqrt_to_decimal(const ExactRational& x, int sig_figs) {
  if (sig_figs < 1) throw ParameterError("sqrt_to_decimal: sig_figs must be >= 1");
  if (x < 0) throw ParameterError("sqrt_to_decimal: negative argument");
  if (x == 0) return "0";

  // 10^e <= sqrt(x) < 10^(e+1)  <=>  10^(2e) <= x < 10^(2e+2)
  long e = (static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 10)) -
            static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 10))) / 2;
  while (x < pow10q(2 * e)) --e;
  while (x >= pow10q(2 * e + 2)) ++e;

  // w = sqrt(x) * 10^j has sig_figs digits before the point; w^2 = y.
  const long j = sig_figs - 1 - e;
  const ExactRational y = x * pow10q(2 * j);
  ExactInteger whole;
  const ExactInteger y_floor = floor(y);
  mpz_sqrt(whole.get_mpz_t(), y_floor.get_mpz_t());

  // Compare y with (whole + 1/2)^2 to round sqrt(y) exactly.
  const ExactRational mid = ExactRational(whole) + make_rational(1, 2);
  const ExactRational mid_sq = mid * mid;
  ExactInteger significand = whole;
  if (y > mid_sq || (y == mid_sq && mpz_odd_p(whole.get_mpz_t()))) significand += 1;
  if (significand == pow10(static_cast<unsigned long>(sig_figs))) {
    significand /= 10;
    ++e;
  }
  return place_digits(significand, e, sig_figs, false);
}

std::string to_fraction_string(const ExactRational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

ExactRational parse_exact(std::string_view text) {
  const std::string original(text);
  auto fail = [&]() -> ParameterError {
    return ParameterError("not an exact decimal or fraction: '" + original + "'");
  };

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    ExactInteger num, den;
    const std::string lhs(text.substr(0, slash));
    const std::string rhs(text.substr(slash + 1));
    if (num.set_str(lhs, 10) != 0 || den.set_str(rhs, 10) != 0) throw fail();
    return make_rational(num, den);
  }

  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  for (char c : text) {
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      if (seen_point) ++frac_digits;
    } else {
      throw fail();
    }
  }
  if (digits.empty()) throw fail();
  ExactInteger num(digits, 10);
  if (negative) num = -num;
  return make_rational(num, pow10(static_cast<unsigned long>(frac_digits)));
}

}  // namespace bandbump

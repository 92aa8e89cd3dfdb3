#include "precision.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace heunspec {

namespace {

// Splits x into sign, significant-digit string and decimal exponent such
// that x = sign 0.DDDD * 10^exp, with |D| = sig_digits correctly rounded.
struct DecimalParts {
  bool negative = false;
  std::string digits;
  long exponent = 0;  // position of the decimal point relative to digits
  bool zero = false;
};

DecimalParts decompose(const Real& x, int sig_digits) {
  DecimalParts parts;
  if (x.is_zero()) {
    parts.zero = true;
    parts.digits.assign(static_cast<size_t>(sig_digits), '0');
    parts.exponent = 1;
    return parts;
  }
  parts.negative = x.sign() < 0;
  mpfr_exp_t exp = 0;
  char* raw = mpfr_get_str(nullptr, &exp, 10, static_cast<size_t>(sig_digits),
                           x.backend().data(), MPFR_RNDN);
  if (raw == nullptr) throw std::runtime_error("mpfr_get_str failed");
  std::string s(raw);
  mpfr_free_str(raw);
  if (!s.empty() && s[0] == '-') s.erase(0, 1);
  // mpfr may round up to one extra digit (e.g. 999.. -> 1000..); renormalize
  if (static_cast<int>(s.size()) > sig_digits) {
    s.resize(static_cast<size_t>(sig_digits));
  }
  parts.digits = s;
  parts.exponent = static_cast<long>(exp);
  return parts;
}

}  // namespace

std::string format_significant(const Real& x, int sig_digits) {
  if (sig_digits < 1) sig_digits = 1;
  DecimalParts p = decompose(x, sig_digits);
  const long e = p.exponent;
  std::string out;
  if (p.negative && !p.zero) out.push_back('-');
  // fixed notation while the exponent stays readable, scientific otherwise
  if (e >= -3 && e <= sig_digits + 6) {
    if (e <= 0) {
      out += "0.";
      out.append(static_cast<size_t>(-e), '0');
      out += p.digits;
    } else if (e >= static_cast<long>(p.digits.size())) {
      out += p.digits;
      out.append(static_cast<size_t>(e) - p.digits.size(), '0');
      // all significant digits are left of the point; no fraction part
    } else {
      out += p.digits.substr(0, static_cast<size_t>(e));
      out += '.';
      out += p.digits.substr(static_cast<size_t>(e));
    }
  } else {
    out += p.digits.substr(0, 1);
    if (p.digits.size() > 1) {
      out += '.';
      out += p.digits.substr(1);
    }
    out += 'e';
    out += std::to_string(e - 1);
  }
  return out;
}

Real parse_alpha_token(const std::string& token) {
  std::string s = token;
  // trim
  auto issp = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && issp(s.front())) s.erase(s.begin());
  while (!s.empty() && issp(s.back())) s.pop_back();
  if (s.empty()) throw std::invalid_argument("empty coupling token");

  int sign = 1;
  std::string body = s;
  if (body[0] == '+' || body[0] == '-') {
    if (body[0] == '-') sign = -1;
    body.erase(0, 1);
  }
  if (body.rfind("sqrt", 0) == 0) {
    std::string arg = body.substr(4);
    if (arg.empty() ||
        !std::all_of(arg.begin(), arg.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; })) {
      throw std::invalid_argument("malformed sqrt token: " + token);
    }
    Real v = sqrt(Real(arg));
    return sign < 0 ? Real(-v) : v;
  }
  if (body.find('/') != std::string::npos) {
    try {
      Rational q(body);
      Real v = to_real(q);
      return sign < 0 ? Real(-v) : v;
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed rational token: " + token);
    }
  }
  try {
    Real v(body);
    return sign < 0 ? Real(-v) : v;
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed numeric token: " + token);
  }
}

Real to_real(const Rational& q) {
  const Real num(boost::multiprecision::mpz_int(
      boost::multiprecision::numerator(q)));
  const Real den(boost::multiprecision::mpz_int(
      boost::multiprecision::denominator(q)));
  return num / den;
}

bool matches_printed(const Real& value, const std::string& printed) {
  // count printed significant digits
  int sig = 0;
  bool seen_nonzero = false;
  for (char c : printed) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      if (c != '0') seen_nonzero = true;
      if (seen_nonzero) ++sig;
    }
  }
  if (sig == 0) throw std::invalid_argument("no digits in printed value");
  Real p(printed);
  if (p.is_zero()) return abs(value) <= Real(0);
  Real mag = abs(p);
  Real exp10 = floor(log10(mag));
  Real half_ulp = pow(Real(10), exp10 - (sig - 1)) / 2;
  // tiny relative slop absorbs the decimal->binary parse of `printed`
  return abs(value - p) <= half_ulp * (1 + Real("1e-25"));
}

}  // namespace heunspec

#include "heunspectra/bigrat.hpp"

#include <cmath>

#include "heunspectra/errors.hpp"

namespace heunspectra {

BigRat rat(long num, long den) {
  if (den == 0) throw DivisionByZero("zero denominator");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

BigRat rat_from_double(double v) {
  if (!std::isfinite(v)) throw InvalidParams("non-finite value");
  return BigRat(v);
}

BigRat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    mpz_class num(text.substr(0, slash), 10), den(text.substr(slash + 1), 10);
    if (den == 0) throw DivisionByZero("zero denominator in " + text);
    BigRat r(num, den);
    r.canonicalize();
    return r;
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) return BigRat(mpz_class(text, 10));
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, text.size() - dot - 1);
  if (digits.empty() || digits == "-" || digits == "+") digits = "0";
  if (digits[0] == '+') digits.erase(0, 1);
  BigRat r(mpz_class(digits, 10), den);
  r.canonicalize();
  return r;
}

std::string to_string(const BigRat& v) {
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

double to_double(const BigRat& v) { return v.get_d(); }

std::optional<BigRat> exact_sqrt(const BigRat& v) {
  if (sgn(v) < 0) return std::nullopt;
  const mpz_class& n = v.get_num();
  const mpz_class& d = v.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  BigRat r(rn, rd);
  r.canonicalize();
  return r;
}

}  // namespace heunspectra

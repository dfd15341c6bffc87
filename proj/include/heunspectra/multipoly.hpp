#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "heunspectra/bigrat.hpp"

namespace heunspectra {

using Exponents = std::vector<int>;

// Graded lexicographic: total degree first, then lexicographic on the
// variable order. Terms are stored ascending, so the leading term is last.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class MultiPoly {
 public:
  using Terms = std::map<Exponents, BigRat, GrlexLess>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> variables);

  static MultiPoly constant(std::vector<std::string> variables, const BigRat& c);
  static MultiPoly variable(std::vector<std::string> variables, const std::string& name);
  static MultiPoly monomial(std::vector<std::string> variables, const Exponents& e, const BigRat& c);

  const std::vector<std::string>& variables() const { return vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t nvars() const { return vars_.size(); }
  int index_of(const std::string& name) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  BigRat coefficient(const Exponents& e) const;
  void add_term(const Exponents& e, const BigRat& c);

  int degree(int var) const;
  int degree(const std::string& name) const { return degree(index_of(name)); }
  int total_degree() const;

  // Coefficient of var^k as a polynomial in the same variable list.
  MultiPoly coefficient_in(int var, int k) const;

  BigRat evaluate(const std::vector<BigRat>& point) const;
  double evaluate(const std::vector<double>& point) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const BigRat& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const BigRat& c) { return a *= c; }
  friend MultiPoly operator*(const BigRat& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  std::string str() const;

 private:
  std::vector<std::string> vars_;
  Terms terms_;
  void check_compatible(const MultiPoly& o) const;
};

// Division in one variable over the fraction field of the others. When the
// divisor's leading coefficient in `var` is not a constant, pseudo-division
// is followed by exact division of the multiplier; a quotient that does not
// clear to a polynomial raises NonPolynomialQuotient.
std::pair<MultiPoly, MultiPoly> poly_divide(const MultiPoly& num, const MultiPoly& den,
                                            const std::string& var);

}  // namespace heunspectra

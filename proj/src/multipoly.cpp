#include "heunspectra/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "heunspectra/errors.hpp"

namespace heunspectra {

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return a < b;
}

MultiPoly::MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const BigRat& c) {
  MultiPoly p(std::move(variables));
  p.add_term(Exponents(p.nvars(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, const std::string& name) {
  MultiPoly p(std::move(variables));
  Exponents e(p.nvars(), 0);
  e[p.index_of(name)] = 1;
  p.add_term(e, 1);
  return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> variables, const Exponents& e, const BigRat& c) {
  MultiPoly p(std::move(variables));
  p.add_term(e, c);
  return p;
}

int MultiPoly::index_of(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw InvalidParams("unknown variable " + name);
  return static_cast<int>(it - vars_.begin());
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

BigRat MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigRat(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const BigRat& c) {
  if (e.size() != vars_.size()) throw LengthMismatch("exponent vector size");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

int MultiPoly::degree(int var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

int MultiPoly::total_degree() const {
  return terms_.empty() ? -1 : std::accumulate(terms_.rbegin()->first.begin(), terms_.rbegin()->first.end(), 0);
}

MultiPoly MultiPoly::coefficient_in(int var, int k) const {
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] != k) continue;
    Exponents f = e;
    f[var] = 0;
    r.add_term(f, c);
  }
  return r;
}

BigRat MultiPoly::evaluate(const std::vector<BigRat>& point) const {
  if (point.size() != vars_.size()) throw LengthMismatch("evaluation point size");
  BigRat sum = 0;
  for (const auto& [e, c] : terms_) {
    BigRat term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      BigRat p;
      mpz_pow_ui(p.get_num_mpz_t(), point[i].get_num_mpz_t(), e[i]);
      mpz_pow_ui(p.get_den_mpz_t(), point[i].get_den_mpz_t(), e[i]);
      term *= p;
    }
    sum += term;
  }
  return sum;
}

double MultiPoly::evaluate(const std::vector<double>& point) const {
  if (point.size() != vars_.size()) throw LengthMismatch("evaluation point size");
  double sum = 0;
  for (const auto& [e, c] : terms_) {
    double term = c.get_d();
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    sum += term;
  }
  return sum;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (vars_ != o.vars_) throw LengthMismatch("polynomials over different variable lists");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly r(a.vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const BigRat& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(it->second) << ")";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (it->first[i] == 0) continue;
      os << "*" << vars_[i];
      if (it->first[i] > 1) os << "^" << it->first[i];
    }
  }
  return os.str();
}

namespace {

MultiPoly shift(const MultiPoly& p, int var, int k) {
  MultiPoly r(p.variables());
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    f[var] += k;
    r.add_term(f, c);
  }
  return r;
}

MultiPoly exact_quotient(const MultiPoly& p, const MultiPoly& m) {
  if (p.is_zero()) return p;
  std::string var;
  for (std::size_t i = 0; i < m.nvars(); ++i)
    if (m.degree(static_cast<int>(i)) > 0) {
      var = m.variables()[i];
      break;
    }
  if (var.empty()) return p * (BigRat(1) / m.coefficient(Exponents(m.nvars(), 0)));
  auto [q, r] = poly_divide(p, m, var);
  if (!r.is_zero()) throw NonPolynomialQuotient("quotient has non-polynomial coefficients");
  return q;
}

}  // namespace

std::pair<MultiPoly, MultiPoly> poly_divide(const MultiPoly& num, const MultiPoly& den,
                                            const std::string& var_name) {
  if (den.is_zero()) throw ZeroDivisor("division by the zero polynomial");
  if (num.variables() != den.variables()) throw LengthMismatch("polynomials over different variable lists");
  int var = num.index_of(var_name);
  int d = den.degree(var);
  MultiPoly lc = den.coefficient_in(var, d);
  MultiPoly quot(num.variables()), rem = num;

  if (lc.is_constant()) {
    BigRat inv = BigRat(1) / lc.coefficient(Exponents(num.nvars(), 0));
    while (!rem.is_zero() && rem.degree(var) >= d) {
      int k = rem.degree(var);
      MultiPoly term = shift(rem.coefficient_in(var, k), var, k - d) * inv;
      quot += term;
      rem -= term * den;
    }
    return {quot, rem};
  }

  MultiPoly scale = MultiPoly::constant(num.variables(), 1);
  while (!rem.is_zero() && rem.degree(var) >= d) {
    int k = rem.degree(var);
    MultiPoly term = shift(rem.coefficient_in(var, k), var, k - d);
    quot = lc * quot + term;
    rem = lc * rem - term * den;
    scale *= lc;
  }
  return {exact_quotient(quot, scale), exact_quotient(rem, scale)};
}

}  // namespace heunspectra

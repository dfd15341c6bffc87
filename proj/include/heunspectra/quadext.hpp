#pragma once

#include <iosfwd>
#include <string>

#include "heunspectra/bigrat.hpp"

namespace heunspectra {

// Element u + v*sqrt(t) of Q(sqrt(t)).
//
// A value built from a plain rational carries no radicand and mixes freely
// with any field. Once a radicand is attached it must agree across operands.
// If t is the square of a rational the surd is folded into u at construction.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(int u) : u_(u) {}
  QuadExt(long u) : u_(u) {}
  QuadExt(const BigRat& u) : u_(u) {}
  QuadExt(const BigRat& u, const BigRat& v, const BigRat& t);

  // sqrt(t) itself.
  static QuadExt surd(const BigRat& t) { return QuadExt(0, 1, t); }

  const BigRat& base() const { return u_; }
  const BigRat& radical() const { return v_; }
  const BigRat& radicand() const { return t_; }
  bool has_radicand() const { return sgn(t_) != 0; }

  bool is_zero() const { return sgn(u_) == 0 && sgn(v_) == 0; }
  bool is_rational() const { return sgn(v_) == 0; }
  int sign() const;
  double to_double() const;

  QuadExt conjugate() const;
  // u^2 - t v^2
  BigRat norm() const;

  QuadExt operator-() const;
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }
  friend bool operator==(const QuadExt& a, const QuadExt& b);
  friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

  std::string str() const;

 private:
  BigRat u_, v_, t_;
  void fold();
  BigRat common_radicand(const QuadExt& o) const;
};

std::ostream& operator<<(std::ostream& os, const QuadExt& q);

}  // namespace heunspectra

#include "heunspectra/quadext.hpp"

#include <cmath>
#include <ostream>

#include "heunspectra/errors.hpp"

namespace heunspectra {

QuadExt::QuadExt(const BigRat& u, const BigRat& v, const BigRat& t) : u_(u), v_(v), t_(t) {
  if (sgn(t_) <= 0) throw InvalidParams("radicand must be positive");
  fold();
}

void QuadExt::fold() {
  if (sgn(v_) == 0 || !has_radicand()) return;
  if (auto root = exact_sqrt(t_)) {
    u_ += v_ * *root;
    v_ = 0;
  }
}

BigRat QuadExt::common_radicand(const QuadExt& o) const {
  if (!has_radicand()) return o.t_;
  if (!o.has_radicand() || t_ == o.t_) return t_;
  if (is_rational() && o.is_rational()) return t_;
  throw MismatchedRadicand(to_string(t_) + " vs " + to_string(o.t_));
}

int QuadExt::sign() const {
  int su = sgn(u_), sv = sgn(v_);
  if (sv == 0) return su;
  if (su == 0 || su == sv) return sv;
  BigRat lhs = u_ * u_, rhs = v_ * v_ * t_;
  int c = cmp(lhs, rhs);
  return c == 0 ? 0 : (c > 0 ? su : sv);
}

double QuadExt::to_double() const {
  if (sgn(v_) == 0) return u_.get_d();
  double t = t_.get_d();
  return u_.get_d() + v_.get_d() * std::sqrt(t);
}

QuadExt QuadExt::conjugate() const {
  QuadExt r = *this;
  r.v_ = -v_;
  return r;
}

BigRat QuadExt::norm() const { return u_ * u_ - t_ * v_ * v_; }

QuadExt QuadExt::operator-() const {
  QuadExt r = *this;
  r.u_ = -u_;
  r.v_ = -v_;
  return r;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  t_ = common_radicand(o);
  u_ += o.u_;
  v_ += o.v_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  t_ = common_radicand(o);
  u_ -= o.u_;
  v_ -= o.v_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  t_ = common_radicand(o);
  BigRat u = u_ * o.u_ + t_ * v_ * o.v_;
  BigRat v = u_ * o.v_ + v_ * o.u_;
  u_ = u;
  v_ = v;
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  if (o.is_zero()) throw DivisionByZero("quadratic extension element is zero");
  t_ = common_radicand(o);
  if (o.is_rational()) {
    u_ /= o.u_;
    v_ /= o.u_;
    return *this;
  }
  BigRat n = o.u_ * o.u_ - t_ * o.v_ * o.v_;
  QuadExt num = *this * o.conjugate();
  u_ = num.u_ / n;
  v_ = num.v_ / n;
  return *this;
}

bool operator==(const QuadExt& a, const QuadExt& b) {
  if (a.has_radicand() && b.has_radicand() && a.t_ != b.t_ && !(a.is_rational() && b.is_rational()))
    throw MismatchedRadicand(to_string(a.t_) + " vs " + to_string(b.t_));
  return a.u_ == b.u_ && a.v_ == b.v_;
}

std::string QuadExt::str() const {
  if (is_rational()) return to_string(u_);
  return to_string(u_) + " + " + to_string(v_) + "*sqrt(" + to_string(t_) + ")";
}

std::ostream& operator<<(std::ostream& os, const QuadExt& q) { return os << q.str(); }

}  // namespace heunspectra

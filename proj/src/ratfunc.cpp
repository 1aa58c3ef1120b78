#include "quasihom/ratfunc.hpp"

#include <stdexcept>
#include <vector>

namespace quasihom {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.is_constant()) {
    const Poly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_divide(num_, g);
      den_ = exact_divide(den_, g);
    }
  }
  const Rational lead = den_.leading_term().second;
  if (lead != 1) {
    const Rational inv = Rational(1) / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

RatFunc RatFunc::from_factored(Poly num, const std::vector<Poly>& den_factors) {
  // Any common factor of num and the product divides one of the factors, so
  // reducing against each factor in turn gives lowest terms while every gcd
  // involves only one (small) factor.
  for (const Poly& f : den_factors) {
    if (f.is_zero()) throw std::domain_error("rational function with zero denominator");
  }
  std::vector<Poly> factors;
  Rational scale(1);
  for (const Poly& f : den_factors) {
    if (f.is_constant()) {
      scale *= f.constant();
    } else {
      factors.push_back(f);
    }
  }
  if (!num.is_zero()) {
    for (Poly& f : factors) {
      while (!f.is_constant()) {
        const Poly g = gcd(num, f);
        if (g.is_constant()) break;
        num = exact_divide(num, g);
        f = exact_divide(f, g);
      }
    }
  }
  RatFunc out;
  out.num_ = std::move(num);
  Poly den(scale);
  for (const Poly& f : factors) den *= f;
  out.den_ = std::move(den);
  if (out.num_.is_zero()) {
    out.den_ = Poly(1);
    return out;
  }
  const Rational lead = out.den_.leading_term().second;
  if (lead != 1) {
    const Rational inv = Rational(1) / lead;
    out.num_ *= inv;
    out.den_ *= inv;
  }
  return out;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
  } else if (den_.is_constant() || o.den_.is_constant()) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
  } else {
    *this = from_factored(num_ * o.den_ + o.num_ * den_, {den_, o.den_});
  }
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
  } else {
    *this = from_factored(num_ * o.num_, {den_, o.den_});
  }
  return *this;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero rational function");
  return RatFunc::from_factored(a.num_ * b.den_, {a.den_, b.num_});
}

RatFunc RatFunc::derivative(Coord c) const {
  if (den_.is_constant()) return RatFunc(num_.derivative(c), den_);
  return from_factored(num_.derivative(c) * den_ - num_ * den_.derivative(c), {den_, den_});
}

Rational RatFunc::evaluate(const Point& p) const {
  const Rational d = den_.evaluate(p);
  if (sgn(d) == 0) throw std::domain_error("denominator vanishes at evaluation point");
  return num_.evaluate(p) / d;
}

double RatFunc::evaluate(const PointD& p) const { return num_.evaluate(p) / den_.evaluate(p); }

std::string RatFunc::to_string() const {
  if (den_ == Poly(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace quasihom

#include "quasihom/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace quasihom {

std::vector<Exponent> monomials_up_to(int max_degree) {
  std::vector<Exponent> out;
  for (int d = 0; d <= max_degree; ++d) {
    for (int z = 0; z <= d; ++z) {
      for (int h = 0; h <= d - z; ++h) {
        const int x = d - z - h;
        out.push_back({static_cast<std::uint16_t>(x), static_cast<std::uint16_t>(h),
                       static_cast<std::uint16_t>(z)});
      }
    }
  }
  std::sort(out.begin(), out.end(), GradedLex{});
  return out;
}

Poly::Poly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(Exponent{0, 0, 0}, c);
}

Poly Poly::var(Coord c) {
  Exponent e{0, 0, 0};
  e[static_cast<int>(c)] = 1;
  return monomial(e);
}

Poly Poly::monomial(const Exponent& e, const Rational& c) {
  Poly p;
  if (sgn(c) != 0) p.terms_.emplace(e, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rational Poly::constant() const { return coefficient({0, 0, 0}); }

Rational Poly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::degree() const { return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first); }

int Poly::degree_in(Coord c) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, _] : terms_) d = std::max<int>(d, e[static_cast<int>(c)]);
  return d;
}

void Poly::add_term(const Exponent& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [_, v] : terms_) v *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [_, v] : r.terms_) v = -v;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  Rational tmp;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e{static_cast<std::uint16_t>(ea[0] + eb[0]), static_cast<std::uint16_t>(ea[1] + eb[1]),
                 static_cast<std::uint16_t>(ea[2] + eb[2])};
      tmp = ca * cb;
      r.add_term(e, tmp);
    }
  }
  return r;
}

Poly Poly::pow(unsigned n) const {
  Poly result(1);
  Poly base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

Poly Poly::derivative(Coord c) const {
  const int v = static_cast<int>(c);
  Poly r;
  for (const auto& [e, coef] : terms_) {
    if (e[v] == 0) continue;
    Exponent d = e;
    d[v] -= 1;
    r.terms_.emplace(d, coef * e[v]);
  }
  return r;
}

Rational Poly::evaluate(const Point& p) const {
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int v = 0; v < 3; ++v) {
      for (int k = 0; k < e[v]; ++k) t *= p[v];
    }
    sum += t;
  }
  return sum;
}

double Poly::evaluate(const PointD& p) const {
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c.get_d();
    for (int v = 0; v < 3; ++v) t *= std::pow(p[v], e[v]);
    sum += t;
  }
  return sum;
}

namespace {

std::string monomial_text(const Exponent& e) {
  std::string out;
  for (int v = 0; v < 3; ++v) {
    if (e[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += kCoordNames[v];
    if (e[v] > 1) out += "^" + std::to_string(e[v]);
  }
  return out;
}

}  // namespace

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = sgn(c) < 0;
    Rational mag = abs(c);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const std::string mono = monomial_text(e);
    if (mono.empty()) {
      os << quasihom::to_string(mag);
    } else if (mag == 1) {
      os << mono;
    } else {
      os << quasihom::to_string(mag) << "*" << mono;
    }
  }
  return os.str();
}

Poly exact_divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (b.is_constant()) return a * (Rational(1) / b.constant());
  Poly q;
  Poly r = a;
  const auto& [lb_e, lb_c] = b.leading_term();
  while (!r.is_zero()) {
    const auto& [lr_e, lr_c] = r.leading_term();
    Exponent d{};
    for (int v = 0; v < 3; ++v) {
      if (lr_e[v] < lb_e[v]) throw std::domain_error("polynomial division is not exact");
      d[v] = static_cast<std::uint16_t>(lr_e[v] - lb_e[v]);
    }
    Poly t = Poly::monomial(d, lr_c / lb_c);
    q += t;
    r -= t * b;
  }
  return q;
}

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p * (Rational(1) / p.leading_term().second);
}

}  // namespace quasihom

#include "quasihom/exppoly.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace quasihom {

Rate parse_rate(const std::string& text) {
  Rate r;
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    const auto comma = text.find(',', start);
    if ((i < 2) != (comma != std::string::npos)) {
      throw std::invalid_argument("rate must be three comma-separated rationals: '" + text + "'");
    }
    r[i] = parse_rational(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    start = comma + 1;
  }
  return r;
}

std::string to_string(const Rate& r) {
  return to_string(r[0]) + "," + to_string(r[1]) + "," + to_string(r[2]);
}

ExpPoly::ExpPoly(const Poly& p) { add(zero_rate(), p); }

ExpPoly::ExpPoly(const Rate& rate, const Poly& p) { add(rate, p); }

bool ExpPoly::is_polynomial() const {
  return summands_.empty() || (summands_.size() == 1 && is_zero_rate(summands_.begin()->first));
}

Poly ExpPoly::polynomial_part() const { return part(zero_rate()); }

Poly ExpPoly::part(const Rate& r) const {
  auto it = summands_.find(r);
  return it == summands_.end() ? Poly() : it->second;
}

void ExpPoly::add(const Rate& r, const Poly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = summands_.try_emplace(r, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) summands_.erase(it);
  }
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& o) {
  for (const auto& [r, p] : o.summands_) add(r, p);
  return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& o) {
  for (const auto& [r, p] : o.summands_) add(r, -p);
  return *this;
}

ExpPoly& ExpPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    summands_.clear();
    return *this;
  }
  for (auto& [_, p] : summands_) p *= c;
  return *this;
}

ExpPoly ExpPoly::operator-() const {
  ExpPoly r = *this;
  r *= Rational(-1);
  return r;
}

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
  ExpPoly out;
  for (const auto& [ra, pa] : a.summands_) {
    for (const auto& [rb, pb] : b.summands_) {
      Rate r{ra[0] + rb[0], ra[1] + rb[1], ra[2] + rb[2]};
      out.add(r, pa * pb);
    }
  }
  return out;
}

ExpPoly ExpPoly::derivative(Coord c) const {
  const int v = static_cast<int>(c);
  ExpPoly out;
  for (const auto& [r, p] : summands_) {
    Poly d = p.derivative(c);
    if (sgn(r[v]) != 0) d += p * r[v];
    out.add(r, d);
  }
  return out;
}

std::optional<Rational> ExpPoly::evaluate_exact(const Point& p) const {
  Rational sum(0);
  for (const auto& [r, poly] : summands_) {
    const Rational arg = r[0] * p[0] + r[1] * p[1] + r[2] * p[2];
    if (sgn(arg) != 0) return std::nullopt;
    sum += poly.evaluate(p);
  }
  return sum;
}

double ExpPoly::evaluate(const PointD& p) const {
  double sum = 0.0;
  for (const auto& [r, poly] : summands_) {
    const double arg = r[0].get_d() * p[0] + r[1].get_d() * p[1] + r[2].get_d() * p[2];
    sum += std::exp(arg) * poly.evaluate(p);
  }
  return sum;
}

std::string ExpPoly::to_string() const {
  if (summands_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [r, p] : summands_) {
    if (!first) os << " + ";
    first = false;
    if (is_zero_rate(r)) {
      os << (summands_.size() == 1 ? p.to_string() : "(" + p.to_string() + ")");
      continue;
    }
    const Poly form = Poly::var(Coord::x) * r[0] + Poly::var(Coord::h) * r[1] + Poly::var(Coord::z) * r[2];
    os << "exp(";
    os << form.to_string() << ")*(" << p.to_string() << ")";
  }
  return os.str();
}

}  // namespace quasihom

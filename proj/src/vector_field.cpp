#include "quasihom/vector_field.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "quasihom/linalg.hpp"

namespace quasihom {

VectorField VectorField::coordinate(Coord c) {
  VectorField v;
  v.c_[static_cast<int>(c)] = ExpPoly(Rational(1));
  return v;
}

VectorField& VectorField::operator+=(const VectorField& o) {
  for (int i = 0; i < 3; ++i) c_[i] += o.c_[i];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
  for (int i = 0; i < 3; ++i) c_[i] -= o.c_[i];
  return *this;
}

VectorField& VectorField::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

VectorField operator*(const ExpPoly& f, const VectorField& v) {
  return VectorField(f * v.c_[0], f * v.c_[1], f * v.c_[2]);
}

ExpPoly VectorField::apply(const ExpPoly& f) const {
  ExpPoly out;
  for (int i = 0; i < 3; ++i) {
    if (c_[i].is_zero()) continue;
    out += c_[i] * f.derivative(static_cast<Coord>(i));
  }
  return out;
}

std::optional<std::array<Rational, 3>> VectorField::evaluate_exact(const Point& p) const {
  std::array<Rational, 3> out;
  for (int i = 0; i < 3; ++i) {
    auto v = c_[i].evaluate_exact(p);
    if (!v) return std::nullopt;
    out[i] = *v;
  }
  return out;
}

std::array<double, 3> VectorField::evaluate(const PointD& p) const {
  return {c_[0].evaluate(p), c_[1].evaluate(p), c_[2].evaluate(p)};
}

std::vector<Rate> VectorField::rates() const {
  std::map<Rate, bool, RateLess> seen;
  for (const auto& c : c_) {
    for (const auto& [r, _] : c.summands()) seen[r] = true;
  }
  std::vector<Rate> out;
  for (const auto& [r, _] : seen) out.push_back(r);
  return out;
}

std::string VectorField::to_string() const {
  std::ostringstream os;
  os << "[" << c_[0].to_string() << ", " << c_[1].to_string() << ", " << c_[2].to_string() << "]";
  return os.str();
}

VectorField bracket(const VectorField& x, const VectorField& y) {
  VectorField out;
  for (int k = 0; k < 3; ++k) out[k] = x.apply(y[k]) - y.apply(x[k]);
  return out;
}

namespace {

using Key = std::tuple<int, Rate, Exponent>;

struct KeyLess {
  bool operator()(const Key& a, const Key& b) const {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    RateLess rl;
    if (rl(std::get<1>(a), std::get<1>(b))) return true;
    if (rl(std::get<1>(b), std::get<1>(a))) return false;
    return GradedLex{}(std::get<2>(a), std::get<2>(b));
  }
};

}  // namespace

FieldCoordinates field_coordinates(const std::vector<VectorField>& fields) {
  std::map<Key, std::size_t, KeyLess> index;
  for (const auto& f : fields) {
    for (int i = 0; i < 3; ++i) {
      for (const auto& [r, p] : f[i].summands()) {
        for (const auto& [e, _] : p.terms()) index.try_emplace(Key{i, r, e}, 0);
      }
    }
  }
  std::size_t n = 0;
  for (auto& [_, v] : index) v = n++;
  FieldCoordinates out;
  out.key_count = n;
  for (const auto& f : fields) {
    std::vector<Rational> col(n);
    for (int i = 0; i < 3; ++i) {
      for (const auto& [r, p] : f[i].summands()) {
        for (const auto& [e, c] : p.terms()) col[index.at(Key{i, r, e})] = c;
      }
    }
    out.columns.push_back(std::move(col));
  }
  return out;
}

std::optional<std::vector<Rational>> express_in_span(const std::vector<VectorField>& fields,
                                                     const VectorField& target) {
  std::vector<VectorField> all = fields;
  all.push_back(target);
  const FieldCoordinates fc = field_coordinates(all);
  std::vector<RVector> cols(fc.columns.begin(), fc.columns.end() - 1);
  if (fields.empty()) {
    if (target.is_zero()) return std::vector<Rational>{};
    return std::nullopt;
  }
  const Matrix a = Matrix::from_columns(cols);
  return solve(a, fc.columns.back());
}

VectorField combine(const std::vector<VectorField>& fields, const std::vector<Rational>& coeffs) {
  if (fields.size() != coeffs.size()) throw std::invalid_argument("combine: size mismatch");
  VectorField out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (sgn(coeffs[i]) != 0) out += fields[i] * coeffs[i];
  }
  return out;
}

}  // namespace quasihom

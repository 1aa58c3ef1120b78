#include "quasihom/lie_algebra.hpp"

#include <sstream>

#include "quasihom/minkowski.hpp"

namespace quasihom {

LieAlgebra::LieAlgebra(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

LieAlgebra LieAlgebra::from_ad_matrices(const std::vector<Matrix>& ad) {
  const std::size_t n = ad.size();
  LieAlgebra l(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (ad[i].rows() != n || ad[i].cols() != n) throw std::invalid_argument("ad matrix has the wrong shape");
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) l.at(k, i, j) = ad[i](k, j);
  }
  if (!l.is_antisymmetric()) throw std::invalid_argument("ad matrices are not antisymmetric");
  return l;
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const RVector& v) {
  if (v.size() != dim_) throw std::invalid_argument("set_bracket: wrong vector size");
  if (i == j) {
    for (const auto& x : v)
      if (sgn(x) != 0) throw std::invalid_argument("set_bracket: [X_i, X_i] must vanish");
    return;
  }
  for (std::size_t k = 0; k < dim_; ++k) {
    at(k, i, j) = v[k];
    at(k, j, i) = -v[k];
  }
}

RVector LieAlgebra::bracket_of_basis(std::size_t i, std::size_t j) const {
  RVector out(dim_);
  for (std::size_t k = 0; k < dim_; ++k) out[k] = c(k, i, j);
  return out;
}

RVector LieAlgebra::bracket(const RVector& a, const RVector& b) const {
  RVector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(b[j]) == 0) continue;
      const Rational w = a[i] * b[j];
      for (std::size_t k = 0; k < dim_; ++k) out[k] += w * c(k, i, j);
    }
  }
  return out;
}

Matrix LieAlgebra::ad(std::size_t i) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = c(k, i, j);
  return m;
}

Matrix LieAlgebra::ad(const RVector& v) const {
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    if (sgn(v[i]) != 0) m += ad(i) * v[i];
  return m;
}

bool LieAlgebra::is_antisymmetric() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (c(k, i, j) != -c(k, j, i)) return false;
  return true;
}

bool LieAlgebra::satisfies_jacobi() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        for (std::size_t l = 0; l < dim_; ++l) {
          Rational s;
          for (std::size_t m = 0; m < dim_; ++m)
            s += c(m, i, j) * c(l, m, k) + c(m, j, k) * c(l, m, i) + c(m, k, i) * c(l, m, j);
          if (sgn(s) != 0) return false;
        }
  return true;
}

LieAlgebra structure_constants(const std::vector<VectorField>& fields) {
  const std::size_t n = fields.size();
  std::vector<VectorField> all = fields;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      all.push_back(bracket(fields[i], fields[j]));
      pairs.emplace_back(i, j);
    }
  const FieldCoordinates fc = field_coordinates(all);
  const Matrix a = Matrix::from_columns(std::vector<RVector>(fc.columns.begin(), fc.columns.begin() + n));
  if (n > 0 && rank(a) != n) throw std::invalid_argument("structure_constants: fields are linearly dependent");
  LieAlgebra l(n);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto x = solve(a, fc.columns[n + p]);
    if (!x) throw ClosureError(pairs[p].first, pairs[p].second);
    l.set_bracket(pairs[p].first, pairs[p].second, *x);
  }
  return l;
}

bool is_unimodular(const LieAlgebra& l) {
  for (std::size_t i = 0; i < l.dim(); ++i)
    if (sgn(l.ad(i).trace()) != 0) return false;
  return true;
}

std::vector<RVector> span_basis(const std::vector<RVector>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  Matrix m(vectors.size(), dim);
  for (std::size_t r = 0; r < vectors.size(); ++r)
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = vectors[r][c];
  const Echelon e = row_reduce(m);
  std::vector<RVector> out;
  for (std::size_t r = 0; r < e.rank(); ++r) out.push_back(e.rref.row(r));
  return out;
}

std::vector<RVector> derived_algebra(const LieAlgebra& l, const std::vector<RVector>& sub) {
  std::vector<RVector> brackets;
  for (std::size_t i = 0; i < sub.size(); ++i)
    for (std::size_t j = i + 1; j < sub.size(); ++j) brackets.push_back(l.bracket(sub[i], sub[j]));
  return span_basis(brackets, l.dim());
}

std::vector<RVector> derived_algebra(const LieAlgebra& l) {
  std::vector<RVector> basis;
  for (std::size_t i = 0; i < l.dim(); ++i) {
    RVector e(l.dim());
    e[i] = 1;
    basis.push_back(e);
  }
  return derived_algebra(l, basis);
}

std::vector<RVector> center(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  if (n == 0) return {};
  Matrix m(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(i * n + k, j) = l.c(k, i, j);
  return nullspace(m);
}

Matrix killing_form(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(l.ad(i));
  Matrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      b(i, j) = (ads[i] * ads[j]).trace();
      b(j, i) = b(i, j);
    }
  return b;
}

LieAlgebra restrict_to(const LieAlgebra& l, const std::vector<RVector>& basis) {
  const std::size_t m = basis.size();
  LieAlgebra out(m);
  if (m == 0) return out;
  const Matrix b = Matrix::from_columns(basis);
  if (rank(b) != m) throw std::invalid_argument("restrict_to: basis is linearly dependent");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto x = solve(b, l.bracket(basis[i], basis[j]));
      if (!x) throw std::invalid_argument("restrict_to: span is not a subalgebra");
      out.set_bracket(i, j, *x);
    }
  return out;
}

LieAlgebra change_basis(const LieAlgebra& l, const Matrix& p) {
  if (!p.is_square() || p.rows() != l.dim() || !inverse(p)) {
    throw std::invalid_argument("change_basis: matrix is not invertible");
  }
  std::vector<RVector> cols;
  for (std::size_t j = 0; j < p.cols(); ++j) cols.push_back(p.column(j));
  return restrict_to(l, cols);
}

std::string to_string(AlgebraTag tag) {
  switch (tag) {
    case AlgebraTag::Abelian: return "Abelian";
    case AlgebraTag::Heisenberg: return "Heisenberg";
    case AlgebraTag::AffPlusR: return "AffPlusR";
    case AlgebraTag::Sol: return "Sol";
    case AlgebraTag::Sl2: return "Sl2";
    case AlgebraTag::RplusSl2: return "RplusSl2";
    case AlgebraTag::RsemidirectHeis: return "RsemidirectHeis";
    case AlgebraTag::Sl2plusSl2: return "Sl2plusSl2";
    case AlgebraTag::Sl2semidirectR3: return "Sl2semidirectR3";
    case AlgebraTag::Other: return "Other";
  }
  return "Other";
}

std::string AlgebraClass::to_string() const {
  if (tag != AlgebraTag::Sol || !sol) return quasihom::to_string(tag);
  std::ostringstream os;
  if (sol->rational) {
    os << "Sol(" << quasihom::to_string(sol->a) << "," << quasihom::to_string(sol->b) << ")";
  } else {
    os << "Sol(" << quasihom::to_string(sol->center) << "+sqrt(" << quasihom::to_string(sol->radicand) << "),"
       << quasihom::to_string(sol->center) << "-sqrt(" << quasihom::to_string(sol->radicand) << "))";
  }
  return os.str();
}

namespace {

bool in_span(const std::vector<RVector>& basis, const RVector& v) {
  if (basis.empty()) {
    for (const auto& x : v)
      if (sgn(x) != 0) return false;
    return true;
  }
  return solve(Matrix::from_columns(basis), v).has_value();
}

bool is_zero_vector(const RVector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

AlgebraClass classify_dim3(const LieAlgebra& l) {
  const auto d = derived_algebra(l);
  AlgebraClass out;
  switch (d.size()) {
    case 0:
      out.tag = AlgebraTag::Abelian;
      return out;
    case 1: {
      bool central = true;
      for (std::size_t i = 0; i < 3; ++i) {
        RVector e(3);
        e[i] = 1;
        if (!is_zero_vector(l.bracket(e, d[0]))) central = false;
      }
      out.tag = central ? AlgebraTag::Heisenberg : AlgebraTag::AffPlusR;
      return out;
    }
    case 2: {
      if (!is_zero_vector(l.bracket(d[0], d[1]))) return out;
      RVector z(3);
      for (std::size_t i = 0; i < 3; ++i) {
        RVector e(3);
        e[i] = 1;
        if (!in_span(d, e)) {
          z = e;
          break;
        }
      }
      // M = ad Z restricted to the derived algebra, in the basis d.
      const Matrix basis = Matrix::from_columns(d);
      Matrix m(2, 2);
      for (std::size_t k = 0; k < 2; ++k) {
        const auto x = solve(basis, l.bracket(z, d[k]));
        if (!x) return out;
        m(0, k) = (*x)[0];
        m(1, k) = (*x)[1];
      }
      const Rational t = m.trace();
      const Rational det = determinant(m);
      const Rational disc = t * t - 4 * det;
      SolParams p;
      p.raw_trace = t;
      p.raw_det = det;
      if (sgn(disc) < 0) return out;
      if (sgn(disc) == 0) {
        if (sgn(m(0, 1)) != 0 || sgn(m(1, 0)) != 0) return out;
        p.a = 1;
        p.b = 1;
      } else if (sgn(t) == 0) {
        p.a = 1;
        p.b = -1;
      } else if (Rational s; rational_sqrt(disc, s)) {
        Rational l1 = (t + s) / 2, l2 = (t - s) / 2;
        if (abs(l2) < abs(l1)) std::swap(l1, l2);
        p.a = 1;
        p.b = l2 / l1;
      } else {
        p.rational = false;
        p.center = 1;
        p.radicand = disc / (t * t);
      }
      out.tag = AlgebraTag::Sol;
      out.sol = p;
      return out;
    }
    default: {
      const Signature sig = signature(killing_form(l));
      if (sig == Signature{2, 1, 0}) out.tag = AlgebraTag::Sl2;
      return out;
    }
  }
}

AlgebraClass classify_dim4(const LieAlgebra& l) {
  AlgebraClass out;
  const auto d = derived_algebra(l);
  if (d.size() != 3) return out;
  const AlgebraTag sub = classify_dim3(restrict_to(l, d)).tag;
  if (sub == AlgebraTag::Sl2 && center(l).size() == 1) {
    out.tag = AlgebraTag::RplusSl2;
  } else if (sub == AlgebraTag::Heisenberg) {
    out.tag = AlgebraTag::RsemidirectHeis;
  }
  return out;
}

AlgebraClass classify_dim6(const LieAlgebra& l) {
  AlgebraClass out;
  const Matrix b = killing_form(l);
  const std::size_t r = rank(b);
  if (r == 6) {
    if (signature(b) == Signature{4, 2, 0}) out.tag = AlgebraTag::Sl2plusSl2;
    return out;
  }
  if (r != 3) return out;
  const auto k = nullspace(b);
  for (std::size_t i = 0; i < k.size(); ++i)
    for (std::size_t j = i + 1; j < k.size(); ++j)
      if (!is_zero_vector(l.bracket(k[i], k[j]))) return out;
  for (std::size_t i = 0; i < 6; ++i) {
    RVector e(6);
    e[i] = 1;
    for (const auto& v : k)
      if (!in_span(k, l.bracket(e, v))) return out;
  }
  out.tag = AlgebraTag::Sl2semidirectR3;
  return out;
}

}  // namespace

AlgebraClass classify(const LieAlgebra& l) {
  switch (l.dim()) {
    case 3: return classify_dim3(l);
    case 4: return classify_dim4(l);
    case 6: return classify_dim6(l);
    default: return {};
  }
}

LieAlgebra make_abelian(std::size_t dim) { return LieAlgebra(dim); }

LieAlgebra make_heisenberg() {
  LieAlgebra l(3);
  l.set_bracket(0, 1, {0, 0, 1});
  return l;
}

LieAlgebra make_aff_plus_r() {
  LieAlgebra l(3);
  l.set_bracket(0, 1, {0, 1, 0});
  return l;
}

LieAlgebra make_sl2() {
  LieAlgebra l(3);
  l.set_bracket(0, 1, {0, 1, 0});
  l.set_bracket(0, 2, {0, 0, -1});
  l.set_bracket(1, 2, {1, 0, 0});
  return l;
}

LieAlgebra make_sol(const Rational& a, const Rational& b) {
  LieAlgebra l(3);
  l.set_bracket(0, 1, {0, a, 0});
  l.set_bracket(0, 2, {0, 0, b});
  return l;
}

LieAlgebra make_unipotent_case(const Rational& gamma, const Rational& r) {
  // The three adjoint matrices in the basis (X, Y, Z).
  const Matrix ad_x{{0, 0, gamma}, {0, 0, r}, {0, 0, 0}};
  const Matrix ad_y{{0, 0, 1}, {0, 0, gamma}, {0, 0, 0}};
  const Matrix ad_z{{-gamma, -1, 0}, {-r, -gamma, 0}, {0, 0, 0}};
  return LieAlgebra::from_ad_matrices({ad_x, ad_y, ad_z});
}

std::string to_string(IsotropyClass c) {
  switch (c) {
    case IsotropyClass::Zero: return "Zero";
    case IsotropyClass::Elliptic: return "Elliptic";
    case IsotropyClass::Semisimple: return "Semisimple";
    case IsotropyClass::Unipotent: return "Unipotent";
  }
  return "Zero";
}

namespace {

// Characteristic polynomial l^3 - q l of a traceless, singular 3x3 matrix.
IsotropyClass by_q(const Matrix& m) {
  if (m.is_zero()) return IsotropyClass::Zero;
  const Rational c2 = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) + m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0) +
                      m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  const int s = -sgn(c2);
  if (s > 0) return IsotropyClass::Semisimple;
  if (s < 0) return IsotropyClass::Elliptic;
  return IsotropyClass::Unipotent;
}

}  // namespace

IsotropyClass classify_o21_element(const Matrix& m) {
  if (!in_o21(m)) throw std::invalid_argument("classify_o21_element: matrix is not in o(2,1)");
  return by_q(m);
}

IsotropyClass classify_skew_endomorphism(const Matrix& m, const Matrix& gram) {
  if (m.rows() != 3 || m.cols() != 3 || !(m.transpose() * gram + gram * m).is_zero()) {
    throw std::invalid_argument("classify_skew_endomorphism: matrix is not skew for the form");
  }
  return by_q(m);
}

}  // namespace quasihom

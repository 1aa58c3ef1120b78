#pragma once

#include <array>
#include <string>
#include <vector>

#include "quasihom/curvature.hpp"
#include "quasihom/linalg.hpp"
#include "quasihom/minkowski.hpp"
#include "quasihom/vector_field.hpp"

namespace quasihom {

/// Coordinates (a, b, c) of a E + b H + c F. Throws std::invalid_argument
/// outside o(2,1).
std::array<Rational, 3> o21_coordinates(const Matrix& m);
Matrix o21_element(const std::array<Rational, 3>& coords);

/// Element of Lambda^2 (R^{2,1})* (x) o(2,1) over the basis
/// {e*^h*, e*^f*, h*^f*} (x) {E, H, F}, where w*(u) = <w, u> for the form I.
class CurvatureModuleElement {
 public:
  enum Pair { EH = 0, EF = 1, HF = 2 };
  enum Gen { GE = 0, GH = 1, GF = 2 };

  CurvatureModuleElement() = default;
  /// v*^w* (x) X for basis vectors v, w in {0 = e, 1 = h, 2 = f} and an o(2,1) element X.
  static CurvatureModuleElement simple(int v, int w, const Matrix& x);
  /// The element with the given values on the pairs (f, h), (f, e), (h, e),
  /// which are dual to e*^h*, e*^f*, h*^f*.
  static CurvatureModuleElement from_values(const Matrix& on_fh, const Matrix& on_fe, const Matrix& on_he);

  Rational& coeff(Pair p, Gen g) { return c_[p][g]; }
  const Rational& coeff(Pair p, Gen g) const { return c_[p][g]; }

  /// kappa(u, v) as an element of o(2,1).
  Matrix evaluate(const RVector& u, const RVector& v) const;
  bool is_zero() const;

  CurvatureModuleElement& operator+=(const CurvatureModuleElement& o);
  CurvatureModuleElement& operator*=(const Rational& s);
  friend CurvatureModuleElement operator+(CurvatureModuleElement a, const CurvatureModuleElement& b) {
    return a += b;
  }
  friend CurvatureModuleElement operator-(CurvatureModuleElement a, const CurvatureModuleElement& b) {
    return a += b * Rational(-1);
  }
  friend CurvatureModuleElement operator*(CurvatureModuleElement a, const Rational& s) { return a *= s; }
  friend bool operator==(const CurvatureModuleElement& a, const CurvatureModuleElement& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  std::array<std::array<Rational, 3>, 3> c_{};
};

/// First Bianchi identity k(u, v) w + k(v, w) u + k(w, u) v = 0 on all basis triples.
bool satisfies_bianchi(const CurvatureModuleElement& k);

/// phi(v*^w* (x) X) = (w* o X) (x) v - (v* o X) (x) w, extended linearly.
Matrix phi(const CurvatureModuleElement& w);

struct TableRow {
  std::string name;
  Matrix expected;  // second column
  CurvatureModuleElement element;  // third column
  Matrix value;  // phi(element)
  bool matches = false;
  bool i_symmetric = false;
  std::string note;  // set when the third column deviates from the printed table
};

/// The six rows of the E_0 + E_2 basis table with phi evaluated on each. In
/// the m_eh row the printed term f*^h* (x) H maps to -f* (x) h; the row uses
/// e*^h* (x) H, which gives the listed e* (x) h and satisfies Bianchi.
std::vector<TableRow> verify_table();
/// True when every row matches, every value is I-symmetric and m_d = 2 Id.
bool table_ok(const std::vector<TableRow>& rows);
/// The m_eh third column exactly as printed in the table.
CurvatureModuleElement printed_m_eh_element();

/// Group elements with exact entries: exp(t E), exp(t F), diag(l^2... ) torus.
Matrix exp_e(const Rational& t);
Matrix exp_f(const Rational& t);
/// exp(s H) for e^s = lambda: diag(lambda, 1, 1/lambda).
Matrix torus(const Rational& lambda);
bool in_o21_group(const Matrix& p);

/// (p . k)(u, v) = p k(p^-1 u, p^-1 v) p^-1. Throws std::invalid_argument
/// unless p is an exact element of O(2,1).
CurvatureModuleElement act(const Matrix& p, const CurvatureModuleElement& k);
/// (A . k)(u, v) = [A, k(u, v)] - k(Au, v) - k(u, Av) for A in o(2,1).
CurvatureModuleElement act_infinitesimal(const Matrix& a, const CurvatureModuleElement& k);

struct RicciDecomposition {
  Rational y;         // coefficient of m_d = 2 Id
  Matrix tracefree;   // the E_2 part
};

/// Splits an I-symmetric endomorphism into y m_d + tracefree. Throws
/// std::invalid_argument when M has a component in the complement E_1 = o(2,1),
/// i.e. when M is not I-symmetric.
RicciDecomposition decompose_ricci(const Matrix& m);

/// A point p and a matrix b whose columns are the images of (e, h, f) in T_pU,
/// with b^T g(p) b = I.
struct AdaptedFrame {
  Point point;
  Matrix b;
};

/// Checks the frame condition and returns the frame; throws std::invalid_argument otherwise.
AdaptedFrame adapted_frame(const Metric& g, const Point& p, const Matrix& b);

/// An exact adapted frame at p from a congruence diagonalization of g(p).
/// Throws std::domain_error when the normalization needs an irrational square root.
AdaptedFrame make_adapted_frame(const Metric& g, const Point& p);

/// kappa_b(u, v) = b^-1 R(bu, bv) b.
CurvatureModuleElement kappa_at_frame(const Metric& g, const AdaptedFrame& b);
CurvatureModuleElement kappa_at_frame(const RiemannTensor& r, const AdaptedFrame& b);

/// Element (A, v) of o(2,1) semidirect R^{2,1} with
/// [(A, v), (B, w)] = ([A, B], A w - B v).
struct HElement {
  Matrix p = Matrix(3, 3);
  RVector t = RVector(3);
  bool is_zero() const;
  friend bool operator==(const HElement& a, const HElement& b) { return a.p == b.p && a.t == b.t; }
};
HElement h_bracket(const HElement& a, const HElement& b);
HElement operator+(const HElement& a, const HElement& b);
HElement operator-(const HElement& a, const HElement& b);

/// omega_b(X) = (b^-1 (nabla X)(p) b, b^-1 X(p)). Throws std::invalid_argument
/// when nabla X(p) is not skew for g(p) (X is not Killing there) and
/// std::domain_error when X does not evaluate exactly at p.
HElement omega_of_killing(const Metric& g, const VectorField& x, const AdaptedFrame& b);
HElement omega_of_killing(const Metric& g, const Christoffel& gamma, const VectorField& x, const AdaptedFrame& b);

/// omega_b([X, Y]) - [omega_b(Y), omega_b(X)] - K_b(X, Y); zero for Killing X, Y.
HElement check_identity(const Metric& g, const VectorField& x, const VectorField& y, const AdaptedFrame& b);
HElement check_identity(const Metric& g, const Christoffel& gamma, const RiemannTensor& r, const VectorField& x,
                        const VectorField& y, const AdaptedFrame& b);

}  // namespace quasihom

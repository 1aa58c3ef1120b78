#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quasihom/curvature.hpp"
#include "quasihom/killing.hpp"
#include "quasihom/lie_algebra.hpp"

namespace quasihom {

struct FamilyParams {
  Rational c, d;
};

/// g = dx^2 + 2 dh dz + C z^2 dh^2 + 2 D z dx dh: g_xx = 1, g_hz = 1,
/// g_hh = C z^2, g_xh = D z, base point the origin. det g = -1.
Metric metric_gCD(const FamilyParams& p);

/// d_x, d_h and Y = -h d_h + z d_z, Killing for every (C, D).
std::vector<VectorField> standard_killing_fields();

/// T = D h d_x + 1/2 (D^2 - C) h^2 d_h + ((C - D^2) z h - 1) d_z.
VectorField extra_killing_T(const FamilyParams& p);

enum class GeometryTag { Minkowski, AdS3, RtimesDS2, LorentzHeisenberg, LeftInvariantSL2, Undetermined };
std::string to_string(GeometryTag tag);

struct GeometryEvidence {
  std::optional<Rational> constant_curvature;
  std::size_t killing_dimension = 0;
  std::optional<AlgebraClass> algebra;
  std::string char_poly;        // Ricci characteristic polynomial
  std::string spectrum_shape;   // "constant", "(0,mu,mu)" or "other"
  std::optional<Rational> mu;
  bool center_in_ricci_kernel = false;
};

struct GeometryClass {
  GeometryTag tag = GeometryTag::Undetermined;
  GeometryEvidence evidence;
};

/// Tag predicted from (C, D) alone: (i) D != 0, C not in {0, D^2}; (ii) C = D^2 != 0;
/// (iii) C = 0 != D; (iv) C != 0 = D; (v) C = D = 0.
GeometryTag parameter_tag(const FamilyParams& p);

/// Raised when the evidence-based tag disagrees with parameter_tag.
class CrossCheckError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evidence first: constant curvature 0 or negative decides Minkowski / AdS3;
/// otherwise the degree-2 Killing algebra with rates {0, (-D,0,0)} is
/// classified and combined with the Ricci spectrum. Throws CrossCheckError
/// when the result disagrees with parameter_tag.
GeometryClass classify_family(const FamilyParams& p);
/// The same decision tree without the cross-check.
GeometryClass classify_family_evidence(const FamilyParams& p);

/// mu when the characteristic polynomial is exactly lambda (lambda - mu)^2 with mu != 0.
std::optional<Rational> zero_mu_mu_root(const CharPoly& cp);

struct SweepCell {
  FamilyParams params;
  std::optional<GeometryClass> result;
  GeometryTag expected = GeometryTag::Undetermined;
  std::string error;
};

/// classify_family on every (C, D) in cs x ds, row-major in C. In Parallel mode
/// cells run as OpenMP tasks; results are written by index, so the output does
/// not depend on scheduling.
std::vector<SweepCell> sweep_family(const std::vector<Rational>& cs, const std::vector<Rational>& ds,
                                    Assembly mode = Assembly::Parallel);

/// Values min, min + step, ..., up to max inclusive. Throws std::invalid_argument
/// for a non-positive step or min > max.
std::vector<Rational> grid_values(const Rational& min, const Rational& max, const Rational& step);

struct RicciRoot {
  std::array<double, 3> numeric{};   // always filled
  std::optional<RVector> exact;      // when the square root is rational
  bool isotropic = false;            // g(W, W) = 0 (exact when available)
};

/// W with Ricci(u, u) = g(W, u)^2 when the Ricci form at p has rank one and is
/// positive semidefinite; the sign makes the first nonzero component positive.
std::optional<RicciRoot> rank_one_ricci_root(const Metric& g, const Point& p);
/// The same for a Ricci form and Gram matrix given directly.
std::optional<RicciRoot> rank_one_ricci_root(const Matrix& ricci_form, const Matrix& gram);

}  // namespace quasihom

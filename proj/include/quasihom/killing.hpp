#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "quasihom/metric.hpp"
#include "quasihom/vector_field.hpp"

namespace quasihom {

using ExpMatrix = std::array<std::array<ExpPoly, 3>, 3>;

/// (L_X g)_ij = X^k d_k g_ij + g_kj d_i X^k + g_ik d_j X^k.
ExpMatrix lie_derivative_metric(const Metric& g, const VectorField& x);

bool is_killing(const Metric& g, const VectorField& x);

/// Killing fields found by solve_killing, together with the metric they annihilate.
struct KillingBasis {
  Metric metric;
  std::vector<VectorField> fields;
  std::size_t dimension() const { return fields.size(); }
};

enum class Assembly { Serial, Parallel };

inline constexpr int kMaxKillingDegree = 6;

/// Killing fields of the form sum over rates r of exp(r . (x,h,z)) * (polynomial
/// components of degree <= max_degree). Each rate sector is an independent
/// linear system in the unknown coefficients. Throws std::invalid_argument when
/// max_degree is outside [0, 6] or the zero rate is missing.
KillingBasis solve_killing(const Metric& g, int max_degree, const std::vector<Rate>& rates,
                           Assembly assembly = Assembly::Parallel);
KillingBasis solve_killing(const Metric& g, int max_degree);

/// Coefficient matrix of the Killing system for one rate sector: one column
/// per unknown (component, monomial), rows keyed by (i<=j, monomial) in a
/// deterministic order. Exposed for benchmarking the two assembly paths.
struct KillingSystem {
  Matrix matrix;
  std::vector<std::pair<int, Exponent>> unknowns;  // (component, monomial) per column
};
KillingSystem assemble_killing_system(const Metric& g, int max_degree, const Rate& rate, Assembly assembly);

/// Rank of the n x 3 matrix of field values at p; exact when every field
/// evaluates exactly at p, otherwise double precision with tolerance 1e-12.
std::size_t evaluation_rank(const std::vector<VectorField>& fields, const Point& p);

/// Numeric evaluation rank (tolerance 1e-12) at each sample point, one
/// OpenMP task per point in Parallel mode; the output order follows `points`.
std::vector<std::size_t> sample_evaluation_ranks(const std::vector<VectorField>& fields,
                                                 const std::vector<PointD>& points,
                                                 Assembly assembly = Assembly::Parallel);

/// Coefficient vectors c with sum_i c_i fields[i](p) = 0. Throws
/// std::domain_error when some field does not evaluate exactly at p.
std::vector<RVector> isotropy_coefficients(const std::vector<VectorField>& fields, const Point& p);
std::vector<VectorField> isotropy_subalgebra(const std::vector<VectorField>& fields, const Point& p);

/// Determinant of the component matrix of three fields.
ExpPoly vol_determinant(const std::vector<VectorField>& fields);

}  // namespace quasihom

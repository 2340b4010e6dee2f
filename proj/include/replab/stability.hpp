#pragma once

#include <array>
#include <complex>
#include <string_view>

#include "replab/model.hpp"

namespace replab {

struct Matrix2 {
  double m11 = 0.0, m12 = 0.0;
  double m21 = 0.0, m22 = 0.0;
};

enum class Classification { Attractor, Saddle, Repellor, NonHyperbolic };

std::string_view to_string(Classification c);

inline constexpr double kHyperbolicityTolerance = 1e-9;

struct StabilityReport {
  std::array<std::complex<double>, 2> eigenvalues;
  std::array<double, 2> magnitudes{};
  Classification classification = Classification::NonHyperbolic;
};

/// Classifies by eigenvalue magnitudes relative to the unit circle.
Classification classify_magnitudes(double m1, double m2, double tol = kHyperbolicityTolerance);

/// Report for two real eigenvalues.
StabilityReport make_report(double lambda1, double lambda2, double tol = kHyperbolicityTolerance);

/// Report from the eigenvalues of a general 2x2 matrix (complex pairs allowed).
StabilityReport eigen_report(const Matrix2& m, double tol = kHyperbolicityTolerance);

/// Closed-form Jacobian of the full map. Satisfies J21(x,y) = J12(y,x) and
/// J22(x,y) = J11(y,x).
Matrix2 jacobian(const ModelParams& params, const State& s);

namespace kernel {
Matrix2 jacobian(const ModelParams& params, const Coefficients& c, const State& s);
}

struct VertexStability {
  StabilityReport v00, v10, v11, v01;
};

/// Closed-form vertex eigenvalues:
///   (0,0): exp(-beta(b + c_g)) twice
///   (1,1): exp(beta(a + b - c_b)) twice
///   (1,0): exp(beta(b - c_b)), exp(-beta(a + b + c_g)); (0,1) the same pair swapped.
VertexStability vertex_eigenvalues(const ModelParams& params);

enum class EdgeId {
  ZeroEdge,     ///< (0, eta*)
  ZeroEdgeSym,  ///< (eta*, 0)
  OneEdge,      ///< (1, eta+)
  OneEdgeSym,   ///< (eta+, 1)
};

/// Eigenvalues at an existing edge equilibrium: the transverse one
/// (exp(-beta(a eta* + b + c_g)) or exp(beta(a eta+ + b - c_b))) first,
/// the along-edge one second. Throws NotAnEquilibriumError when the edge
/// equilibrium does not exist.
StabilityReport edge_eigenvalues(const ModelParams& params, EdgeId which);

enum class BifurcationDirection { AlongDiagonal, TransverseToDiagonal };

std::string_view to_string(BifurcationDirection d);

struct DiagonalStability {
  /// eigenvalues[0] has eigenvector (1,1) (along the diagonal),
  /// eigenvalues[1] has eigenvector (-1,1) (transverse).
  StabilityReport report;
  BifurcationDirection direction = BifurcationDirection::AlongDiagonal;
};

/// Closed-form eigenvalues at a diagonal equilibrium (eta_bar, eta_bar).
/// Throws NotAnEquilibriumError if the fixed-point residual exceeds 1e-8 and
/// UndefinedDirectionError when a == 0.
DiagonalStability diagonal_eigenvalues(const ModelParams& params, double eta_bar);

enum class ScenarioId { S1, S2, S3, S4, S5, S6, S7, S8, S9, Degenerate };

std::string_view to_string(ScenarioId id);

/// 1-based scenario number, 0 for Degenerate.
int scenario_number(ScenarioId id);
ScenarioId scenario_from_number(int n);

/// Sign discriminants of the vertex stability conditions, computed from payoffs:
///   d1 = pi_bb - (pi_gb - c_g)   (0,0) stable iff d1 > 0
///   d2 = pi_gg - (pi_bg - c_b)   (1,1) stable iff d2 > 0
///   d3 = pi_bg - (pi_gg - c_g)   (1,0) stable along eta2 iff d3 > 0
///   d4 = pi_gb - (pi_bb - c_b)   (1,0) stable along eta1 iff d4 > 0
struct Discriminants {
  double d1 = 0.0, d2 = 0.0, d3 = 0.0, d4 = 0.0;
};

Discriminants scenario_discriminants(const ModelParams& params);

ScenarioId classify_scenario(const ModelParams& params, double tolerance = 1e-9);

}  // namespace replab

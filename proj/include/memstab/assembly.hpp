#pragma once

#include <Eigen/Core>
#include <Eigen/Sparse>
#include <functional>
#include <optional>
#include <vector>

#include "memstab/mesh.hpp"
#include "memstab/params.hpp"

namespace memstab {

using SparseMat = Eigen::SparseMatrix<double>;
using Vector = Eigen::VectorXd;

/// Mass matrix on interior DOFs (Dirichlet rows/columns eliminated).
SparseMat assemble_mass(const Mesh& mesh);
/// Stiffness matrix on interior DOFs.
SparseMat assemble_stiffness(const Mesh& mesh);

/// Pre-elimination variants over all nodes, used by conservation checks.
SparseMat assemble_mass_full(const Mesh& mesh);
SparseMat assemble_stiffness_full(const Mesh& mesh);

/// Semi-discrete matrices of the coupled system on interior DOFs.
///
///   E = diag(M, M)
///   A = [ -eta*L - beta*gamma*M   -kappa*L ]
///       [            M            -lambda*M ]
///   Anu = A + nu*E
///   B = [ M(:,S) ; 0 ],  R = M(S,S)   with S the control DOFs.
struct OperatorBlocks {
  SparseMat M, L;        // N x N
  SparseMat E, A, Anu;   // 2N x 2N
  SparseMat B;           // 2N x m
  SparseMat R;           // m x m
  std::vector<int> control_dofs;
  double nu = 0.0;
  int num_interior = 0;
};

OperatorBlocks assemble_coupled(const Mesh& mesh, const ModelParams& params,
                                const std::optional<Box>& region = std::nullopt);

/// Load vector and consistent Jacobian of the advection + reaction terms,
///   F_i(y) = int_Omega [ alpha y^d (dy/dx1 + dy/dx2)
///                        + beta y^(2d+1) - beta(1+gamma) y^(d+1) ] phi_i dx,
/// evaluated with a fixed-order Gauss rule on triangles (degree 5 for
/// delta = 1, degree 8 otherwise; entries for delta >= 4 are inexact).
class NonlinearAssembler {
 public:
  NonlinearAssembler(const Mesh& mesh, const ModelParams& params);

  Vector residual(const Vector& y) const;
  /// Residual together with d(residual)/dy under the same quadrature.
  std::pair<Vector, SparseMat> residual_and_jacobian(const Vector& y) const;

  int num_interior() const { return num_interior_; }

 private:
  struct Element {
    std::array<int, 3> dofs;  // -1 for boundary vertices
    std::array<double, 3> gx, gy;
    double area;
  };
  std::vector<Element> elements_;
  ModelParams params_;
  int num_interior_ = 0;
  const std::vector<std::array<double, 4>>* quad_;  // (l1,l2,l3,w)

  template <bool WithJacobian>
  void accumulate(const Vector& y, Vector& F, std::vector<Eigen::Triplet<double>>* trip) const;
};

namespace detail {
/// Element kernel on one triangle: local load and Jacobian of the
/// advection+reaction integrand for local P1 values yloc.
void element_nonlinear(const std::array<std::array<double, 2>, 3>& coords,
                       const std::array<double, 3>& yloc, const ModelParams& params,
                       std::array<double, 3>& Floc, std::array<std::array<double, 3>, 3>& Jloc);

/// Integrate f over the reference-mapped triangle with the degree-5 rule.
double integrate_triangle(const std::array<std::array<double, 2>, 3>& coords,
                          const std::function<double(double, double)>& f);
}  // namespace detail

}  // namespace memstab

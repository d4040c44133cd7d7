#pragma once

#include <stdexcept>
#include <string>

namespace memstab {

/// Physical and control coefficients of the model.
///
/// eta    diffusion, alpha advection, delta nonlinearity degree,
/// beta   reaction strength, gamma reaction threshold,
/// kappa  memory-kernel scale, lambda memory-kernel decay,
/// nu     stabilization shift.
///
/// kappa = 0 and beta = 0 are accepted so the decoupled heat limit can be
/// exercised; the nu-range conditions for feedback synthesis are checked by
/// the callers that need them (see require_zero_state_shift /
/// require_steady_shift).
struct ModelParams {
  double eta = 0.2;
  double alpha = 1.0;
  int delta = 1;
  double beta = 1.5;
  double gamma = 0.5;
  double kappa = 1.5;
  double lambda = 3.0;
  double nu = 0.0;

  /// Accumulation point of the mu+ branch, lambda + kappa/eta.
  double nu0() const { return lambda + kappa / eta; }

  void validate() const {
    if (!(eta > 0.0)) throw std::invalid_argument("ModelParams: eta must be > 0");
    if (!(alpha > 0.0)) throw std::invalid_argument("ModelParams: alpha must be > 0");
    if (delta < 1) throw std::invalid_argument("ModelParams: delta must be a positive integer");
    if (!(beta >= 0.0)) throw std::invalid_argument("ModelParams: beta must be >= 0");
    if (!(gamma >= 0.0 && gamma < 1.0)) throw std::invalid_argument("ModelParams: gamma must lie in [0,1)");
    if (!(kappa >= 0.0)) throw std::invalid_argument("ModelParams: kappa must be >= 0");
    if (!(lambda > 0.0)) throw std::invalid_argument("ModelParams: lambda must be > 0");
    if (!(nu >= 0.0)) throw std::invalid_argument("ModelParams: nu must be >= 0");
  }

  /// Shift admissible for stabilization around the zero state: nu < nu0.
  void require_zero_state_shift() const {
    if (!(nu < nu0()))
      throw std::invalid_argument("ModelParams: zero-state stabilization requires nu < nu0 = lambda + kappa/eta = " +
                                  std::to_string(nu0()));
  }

  /// Shift admissible for stabilization around a non-constant steady state: nu < lambda.
  void require_steady_shift() const {
    if (!(nu < lambda))
      throw std::invalid_argument("ModelParams: steady-state stabilization requires nu < lambda = " +
                                  std::to_string(lambda));
  }
};

ModelParams params_from_json_file(const std::string& path);
std::string params_to_json(const ModelParams& p);

}  // namespace memstab

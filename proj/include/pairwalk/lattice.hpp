#pragma once

#include <Eigen/Dense>
#include <vector>

namespace pairwalk {

// Physical description of an array of identical single-mode waveguides with
// nearest-neighbour evanescent coupling. Couplings are in 1/m. The common
// propagation constant beta only contributes a global phase e^{i beta z} and
// never enters any |.|^2 observable; it is recorded to document the model.
struct LatticeSpec {
  int n = 0;                  // waveguide count, >= 2
  std::vector<double> bonds;  // n-1 coupling constants C_{k,k+1} [1/m]
  double beta = 0.0;          // propagation constant [1/m]

  bool uniform() const;
};

// Scalar coupling expands to a uniform bond sequence.
LatticeSpec build_lattice(int n, double coupling, double beta = 0.0);
LatticeSpec build_lattice(int n, const std::vector<double>& bonds,
                          double beta = 0.0);

// Real symmetric tridiagonal matrix: zero diagonal (identical waveguides),
// bonds on the two off-diagonals.
Eigen::MatrixXd coupling_matrix(const LatticeSpec& spec);

}  // namespace pairwalk

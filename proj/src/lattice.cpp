#include "pairwalk/lattice.hpp"

#include <cmath>
#include <string>

#include "pairwalk/errors.hpp"

namespace pairwalk {

namespace {

void check_bond(double value, int index) {
  if (!std::isfinite(value) || value < 0.0) {
    throw ValidationError("coupling constant at bond " + std::to_string(index) +
                          " must be finite and >= 0, got " +
                          std::to_string(value));
  }
}

}  // namespace

bool LatticeSpec::uniform() const {
  for (double b : bonds) {
    if (b != bonds.front()) return false;
  }
  return true;
}

LatticeSpec build_lattice(int n, double coupling, double beta) {
  if (n < 2) {
    throw ValidationError("lattice needs n >= 2 waveguides, got " +
                          std::to_string(n));
  }
  check_bond(coupling, 0);
  return LatticeSpec{n, std::vector<double>(static_cast<size_t>(n - 1), coupling), beta};
}

LatticeSpec build_lattice(int n, const std::vector<double>& bonds, double beta) {
  if (n < 2) {
    throw ValidationError("lattice needs n >= 2 waveguides, got " +
                          std::to_string(n));
  }
  if (bonds.size() != static_cast<size_t>(n - 1)) {
    throw ValidationError("expected " + std::to_string(n - 1) +
                          " coupling constants for n = " + std::to_string(n) +
                          ", got " + std::to_string(bonds.size()));
  }
  for (size_t i = 0; i < bonds.size(); ++i) check_bond(bonds[i], static_cast<int>(i));
  return LatticeSpec{n, bonds, beta};
}

Eigen::MatrixXd coupling_matrix(const LatticeSpec& spec) {
  if (spec.n < 2 || spec.bonds.size() != static_cast<size_t>(spec.n - 1)) {
    throw ValidationError("malformed lattice spec: n = " + std::to_string(spec.n) +
                          ", bonds = " + std::to_string(spec.bonds.size()));
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(spec.n, spec.n);
  for (int k = 0; k + 1 < spec.n; ++k) {
    m(k, k + 1) = spec.bonds[static_cast<size_t>(k)];
    m(k + 1, k) = spec.bonds[static_cast<size_t>(k)];
  }
  return m;
}

}  // namespace pairwalk

#pragma once

/**
 * core.hpp
 *
 * Shared aliases, numeric constants and small helpers used across the
 * library.  Everything operates on dense complex matrices in double
 * precision; Eigen supplies the decompositions.
 */

#include <Eigen/Dense>

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace framepair {

using cxd = std::complex<double>;
using Vec = Eigen::VectorXcd;      // complex column vector (Hilbert-space element)
using Mat = Eigen::MatrixXcd;      // complex dense matrix
using RealVec = Eigen::VectorXd;
using RealMat = Eigen::MatrixXd;

// Relative numerical-rank threshold: sigma <= tol * sigma_max counts as zero.
inline constexpr double kDefaultRankTol = 1e-10;

// Below this smallest singular value the condition number is reported as inf.
inline constexpr double kCondFloor = 1e-300;

// Default admissible condition number for a well-posed pair.
inline constexpr double kDefaultKappaMax = 1e8;

inline double inf() { return std::numeric_limits<double>::infinity(); }

// Throws std::invalid_argument with the given message.  Centralised so call
// sites stay one-liners.
[[noreturn]] inline void fail(const std::string& msg) {
    throw std::invalid_argument(msg);
}

inline void require(bool cond, const std::string& msg) {
    if (!cond) fail(msg);
}

// True when every entry of the matrix is finite.
template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
    return m.allFinite();
}

}  // namespace framepair

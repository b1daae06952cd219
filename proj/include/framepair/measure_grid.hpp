#pragma once

/**
 * measure_grid.hpp
 *
 * MeasureGrid: a finite quadrature grid standing in for a measure space.
 * Each point carries one or two real coordinates (index, frequency, scale,
 * a (translation, scale) pair, ...) and a strictly positive weight, so that
 * sums over the grid approximate integrals against the underlying measure.
 */

#include "framepair/core.hpp"

#include <cmath>
#include <utility>

namespace framepair {

class MeasureGrid {
public:
    // points: N x k matrix, k in {1, 2}; weights: length N, all > 0, finite.
    MeasureGrid(RealMat points, RealVec weights)
        : points_(std::move(points)), weights_(std::move(weights)) {
        require(points_.rows() >= 1, "MeasureGrid: at least one point required");
        require(points_.cols() == 1 || points_.cols() == 2,
                "MeasureGrid: points must have 1 or 2 coordinates");
        require(weights_.size() == points_.rows(),
                "MeasureGrid: weights length must equal point count");
        require(all_finite(points_) && all_finite(weights_),
                "MeasureGrid: coordinates and weights must be finite");
        require((weights_.array() > 0.0).all(),
                "MeasureGrid: weights must be strictly positive");
    }

    // Convenience: 1-coordinate grid.
    MeasureGrid(const RealVec& coords, RealVec weights)
        : MeasureGrid(RealMat(coords), std::move(weights)) {}

    Eigen::Index size() const { return points_.rows(); }
    Eigen::Index coord_count() const { return points_.cols(); }
    const RealMat& points() const { return points_; }
    const RealVec& weights() const { return weights_; }
    double weight(Eigen::Index i) const { return weights_(i); }
    double coord(Eigen::Index i, Eigen::Index c = 0) const { return points_(i, c); }

    // Grids are interchangeable when points and weights agree to roundoff.
    bool same_as(const MeasureGrid& other, double tol = 1e-12) const {
        if (size() != other.size() || coord_count() != other.coord_count()) return false;
        return (points_ - other.points_).cwiseAbs().maxCoeff() <= tol &&
               (weights_ - other.weights_).cwiseAbs().maxCoeff() <= tol;
    }

    // Integer index grid 0..n-1 with unit weights.
    static MeasureGrid index_grid(Eigen::Index n) {
        require(n >= 1, "MeasureGrid: at least one point required");
        RealVec coords = RealVec::LinSpaced(n, 0.0, double(n - 1));
        if (n == 1) coords(0) = 0.0;
        return MeasureGrid(coords, RealVec::Ones(n));
    }

private:
    RealMat points_;
    RealVec weights_;
};

// Trapezoidal quadrature weights for a strictly increasing 1-D grid:
// interior weight (x_{i+1} - x_{i-1})/2, end weights are half-cells.  A
// single point gets weight 1 (counting measure fallback).
inline RealVec trapezoid_weights(const RealVec& x) {
    const Eigen::Index n = x.size();
    require(n >= 1, "trapezoid_weights: empty grid");
    RealVec w(n);
    if (n == 1) {
        w(0) = 1.0;
        return w;
    }
    for (Eigen::Index i = 1; i < n; ++i)
        require(x(i) > x(i - 1), "trapezoid_weights: grid must be strictly increasing");
    w(0) = (x(1) - x(0)) / 2.0;
    w(n - 1) = (x(n - 1) - x(n - 2)) / 2.0;
    for (Eigen::Index i = 1; i + 1 < n; ++i) w(i) = (x(i + 1) - x(i - 1)) / 2.0;
    return w;
}

}  // namespace framepair

#pragma once

/**
 * family.hpp
 *
 * VectorFamily: a finite family {phi_x : x in grid} of vectors in C^d,
 * stored column-wise, together with an optional diagonal metric.  The
 * metric g turns C^d into the model Hilbert space with inner product
 *
 *     <f, h> = sum_k g_k f_k conj(h_k)     (linear in the first argument),
 *
 * which is how weighted spaces such as L^2(R+, r^{n-1} dr) are represented
 * on a grid.  CoefficientFunction, LinearMap and SpectralSummary are the
 * companion value types for analysis coefficients, operators on C^d, and
 * singular-value summaries.
 */

#include "framepair/core.hpp"
#include "framepair/measure_grid.hpp"

#include <cmath>
#include <utility>

namespace framepair {

class VectorFamily {
public:
    // vectors: d x N complex, column i is the family member at grid point i.
    // metric: length-d positive diagonal; defaults to ones.
    VectorFamily(MeasureGrid grid, Mat vectors, RealVec metric)
        : grid_(std::move(grid)), vectors_(std::move(vectors)), metric_(std::move(metric)) {
        require(vectors_.rows() >= 1, "VectorFamily: dimension must be at least 1");
        require(vectors_.cols() == grid_.size(),
                "VectorFamily: one vector per grid point required");
        require(all_finite(vectors_), "VectorFamily: vector entries must be finite");
        require(metric_.size() == vectors_.rows(),
                "VectorFamily: metric length must equal the dimension");
        require(all_finite(metric_) && (metric_.array() > 0.0).all(),
                "VectorFamily: metric weights must be strictly positive");
    }

    VectorFamily(MeasureGrid grid, const Mat& vectors)
        : VectorFamily(std::move(grid), vectors, RealVec::Ones(vectors.rows())) {}

    Eigen::Index dim() const { return vectors_.rows(); }
    Eigen::Index size() const { return vectors_.cols(); }
    const MeasureGrid& grid() const { return grid_; }
    const Mat& vectors() const { return vectors_; }
    const RealVec& metric() const { return metric_; }
    Vec vector(Eigen::Index i) const { return vectors_.col(i); }
    bool unit_metric(double tol = 0.0) const {
        return (metric_.array() - 1.0).abs().maxCoeff() <= tol;
    }

private:
    MeasureGrid grid_;
    Mat vectors_;
    RealVec metric_;
};

// Metric inner product <f, h> = sum_k g_k f_k conj(h_k).
inline cxd metric_inner(const Vec& f, const Vec& h, const RealVec& metric) {
    require(f.size() == h.size() && f.size() == metric.size(),
            "metric_inner: dimension mismatch");
    return (f.array() * h.conjugate().array() * metric.array().cast<cxd>()).sum();
}

inline double metric_norm(const Vec& f, const RealVec& metric) {
    require(f.size() == metric.size(), "metric_norm: dimension mismatch");
    return std::sqrt((f.array().abs2() * metric.array()).sum());
}

// A coefficient function: one complex value per grid point.
class CoefficientFunction {
public:
    explicit CoefficientFunction(Vec values) : values_(std::move(values)) {
        require(values_.size() >= 1, "CoefficientFunction: empty value list");
        require(all_finite(values_), "CoefficientFunction: values must be finite");
    }

    Eigen::Index size() const { return values_.size(); }
    const Vec& values() const { return values_; }
    cxd value(Eigen::Index i) const { return values_(i); }

private:
    Vec values_;
};

// A linear operator on C^d stored as its dense coordinate matrix.
class LinearMap {
public:
    explicit LinearMap(Mat matrix) : matrix_(std::move(matrix)) {
        require(matrix_.rows() == matrix_.cols(), "LinearMap: matrix must be square");
        require(matrix_.rows() >= 1, "LinearMap: dimension must be at least 1");
        require(all_finite(matrix_), "LinearMap: entries must be finite");
    }

    Eigen::Index dim() const { return matrix_.rows(); }
    const Mat& matrix() const { return matrix_; }

private:
    Mat matrix_;
};

// Extreme singular values with the derived condition number.  cond is the
// infinity sentinel once sigma_min falls below kCondFloor.
struct SpectralSummary {
    double sigma_min = 0.0;
    double sigma_max = 0.0;
    double cond = 0.0;

    static SpectralSummary from_extremes(double smin, double smax) {
        require(smin >= 0.0 && smax >= smin,
                "SpectralSummary: need 0 <= sigma_min <= sigma_max");
        SpectralSummary s;
        s.sigma_min = smin;
        s.sigma_max = smax;
        s.cond = (smin < kCondFloor) ? inf() : smax / smin;
        return s;
    }
};

}  // namespace framepair

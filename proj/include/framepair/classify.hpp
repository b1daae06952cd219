#pragma once

/**
 * classify.hpp
 *
 * Frame classification across a refinement sequence.  Each level is a
 * finite family standing in for the same underlying system at increasing
 * resolution; the per-level frame bounds and their trend decide between a
 * genuine frame, the two semi-frame regimes, and the non-total cases.
 * Every kind other than `frame` is a statement about the limit and so
 * requires at least two levels.
 */

#include "framepair/core.hpp"
#include "framepair/family.hpp"
#include "framepair/operators.hpp"

#include <vector>

namespace framepair {

enum class FrameKind { frame, upper_semi_frame, lower_semi_frame, bessel_not_total, not_total };
enum class BoundTrend { stable, lower_bound_decaying, upper_bound_growing };

struct Classification {
    FrameKind kind = FrameKind::not_total;
    BoundTrend trend = BoundTrend::stable;
    std::vector<FrameBounds> bounds_per_level;
    bool finest_mu_total = false;
};

namespace detail {

// Relative stabilisation: every transition moves by at most tol.
inline bool bounds_stable(const std::vector<double>& x, double tol) {
    for (std::size_t l = 1; l < x.size(); ++l) {
        const double scale = std::max(std::abs(x[l - 1]), std::abs(x[l]));
        if (std::abs(x[l] - x[l - 1]) > tol * scale) return false;
    }
    return true;
}

// Strict decay by a factor greater than 1 + tol at every transition.
inline bool bound_decaying(const std::vector<double>& x, double tol) {
    for (std::size_t l = 1; l < x.size(); ++l) {
        if (!(x[l - 1] > (1.0 + tol) * x[l])) return false;
    }
    return true;
}

// Strict growth by a factor greater than 1 + tol at every transition.
inline bool bound_growing(const std::vector<double>& x, double tol) {
    for (std::size_t l = 1; l < x.size(); ++l) {
        if (!(x[l] > (1.0 + tol) * x[l - 1])) return false;
    }
    return true;
}

}  // namespace detail

// Classifies a refinement sequence ordered coarse to fine.  tol controls
// both the stabilisation test and the minimal decay/growth factor 1 + tol.
inline Classification classify(const std::vector<VectorFamily>& levels, double tol = 1e-6,
                               double rank_tol = kDefaultRankTol) {
    require(!levels.empty(), "classify: at least one level required");
    require(tol > 0.0, "classify: tolerance must be positive");

    Classification c;
    std::vector<double> lower, upper;
    for (const auto& fam : levels) {
        FrameBounds b = frame_bounds(fam);
        c.bounds_per_level.push_back(b);
        lower.push_back(b.lower);
        upper.push_back(b.upper);
    }
    c.finest_mu_total = mu_total(levels.back(), rank_tol);

    const bool m_stable = detail::bounds_stable(lower, tol);
    const bool m_decay = detail::bound_decaying(lower, tol);
    const bool big_m_stable = detail::bounds_stable(upper, tol);
    const bool big_m_grow = detail::bound_growing(upper, tol);

    c.trend = m_decay           ? BoundTrend::lower_bound_decaying
              : big_m_grow      ? BoundTrend::upper_bound_growing
                                : BoundTrend::stable;

    if (levels.size() < 2) {
        if (c.finest_mu_total) {
            c.kind = FrameKind::frame;
            c.trend = BoundTrend::stable;
            return c;
        }
        fail("classify: any verdict other than frame requires a refinement sequence "
             "of at least 2 levels");
    }

    if (c.finest_mu_total && m_stable && big_m_stable && lower.back() > 0.0) {
        c.kind = FrameKind::frame;
    } else if (c.finest_mu_total && big_m_stable && m_decay) {
        c.kind = FrameKind::upper_semi_frame;
    } else if (m_stable && big_m_grow && lower.back() > 0.0) {
        c.kind = FrameKind::lower_semi_frame;
    } else if (big_m_stable && !c.finest_mu_total) {
        c.kind = FrameKind::bessel_not_total;
    } else {
        c.kind = FrameKind::not_total;
    }
    return c;
}

inline const char* to_string(FrameKind k) {
    switch (k) {
        case FrameKind::frame: return "frame";
        case FrameKind::upper_semi_frame: return "upper_semi_frame";
        case FrameKind::lower_semi_frame: return "lower_semi_frame";
        case FrameKind::bessel_not_total: return "bessel_not_total";
        case FrameKind::not_total: return "not_total";
    }
    return "unknown";
}

inline const char* to_string(BoundTrend t) {
    switch (t) {
        case BoundTrend::stable: return "stable";
        case BoundTrend::lower_bound_decaying: return "lower_bound_decaying";
        case BoundTrend::upper_bound_growing: return "upper_bound_growing";
    }
    return "unknown";
}

}  // namespace framepair

#pragma once

// Complex dense-matrix kernel. A single SVD backs the spectral norm, the
// numerical rank, the orthonormal range/null-space bases and the
// Moore-Penrose inverse, so one tolerance policy governs all of them.

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <utility>

#include "gencore/errors.hpp"

namespace gencore {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

inline bool all_finite(const CMatrix& a) {
    return a.allFinite();
}

/// Numerical-rank threshold policy. Default: max(m,n) * eps * sigma_max.
/// An absolute override replaces the whole formula.
struct RankTolerance {
    std::optional<double> absolute;

    static RankTolerance standard() { return {}; }

    static RankTolerance absolute_tol(double t) {
        if (!(t > 0.0)) throw InvalidArgumentError("rank tolerance override must be positive");
        return RankTolerance{t};
    }

    double threshold(Index rows, Index cols, double sigma_max) const {
        if (absolute) return *absolute;
        const double eps = std::numeric_limits<double>::epsilon();
        return static_cast<double>(std::max(rows, cols)) * eps * sigma_max;
    }
};

namespace detail {

/// Shared SVD decomposition: a = U * diag(sigma) * V^*.
struct Svd {
    Eigen::JacobiSVD<CMatrix> svd;
    Index rank = 0;
    double threshold = 0.0;

    const CMatrix& matrix_u() const { return svd.matrixU(); }
    const CMatrix& matrix_v() const { return svd.matrixV(); }
    const Eigen::VectorXd& sigma() const { return svd.singularValues(); }
};

inline Svd svd_of(const CMatrix& a, const RankTolerance& tol) {
    Svd out;
    out.svd.compute(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& s = out.svd.singularValues();
    const double sigma_max = s.size() > 0 ? s(0) : 0.0;
    out.threshold = tol.threshold(a.rows(), a.cols(), sigma_max);
    out.rank = 0;
    for (Index i = 0; i < s.size(); ++i)
        if (s(i) > out.threshold) ++out.rank;
    return out;
}

} // namespace detail

/// Largest singular value; 0 for the zero (or empty) matrix.
inline double spectral_norm(const CMatrix& a) {
    if (a.size() == 0) return 0.0;
    return a.jacobiSvd().singularValues()(0);
}

inline double frobenius_norm(const CMatrix& a) { return a.norm(); }

inline Index rank_of(const CMatrix& a, const RankTolerance& tol = {}) {
    if (a.size() == 0) return 0;
    return detail::svd_of(a, tol).rank;
}

/// Orthonormal basis of a subspace of C^n. `basis` is n x k with
/// orthonormal columns; k = 0 encodes the zero subspace.
struct SubspaceBasis {
    Index ambient_dim = 0;
    CMatrix basis;

    Index dim() const { return basis.cols(); }

    static SubspaceBasis zero(Index ambient) {
        return SubspaceBasis{ambient, CMatrix::Zero(ambient, 0)};
    }

    /// Wraps a matrix whose columns are already orthonormal (checked).
    static SubspaceBasis from_orthonormal(CMatrix b, double check_tol = 1e-12) {
        SubspaceBasis s{b.rows(), std::move(b)};
        if (s.dim() > s.ambient_dim)
            throw InvalidArgumentError("subspace dimension exceeds ambient dimension");
        if (s.dim() > 0) {
            const CMatrix gram = s.basis.adjoint() * s.basis;
            const double defect = (gram - CMatrix::Identity(s.dim(), s.dim())).norm();
            if (defect > check_tol * std::sqrt(static_cast<double>(s.dim())))
                throw InvalidArgumentError("basis columns are not orthonormal (defect " +
                                           std::to_string(defect) + ")");
        }
        return s;
    }
};

/// Orthonormal basis of the column space; dimension = rank_of(a).
inline SubspaceBasis range_basis(const CMatrix& a, const RankTolerance& tol = {}) {
    if (a.size() == 0) return SubspaceBasis::zero(a.rows());
    const auto dec = detail::svd_of(a, tol);
    return SubspaceBasis{a.rows(), dec.matrix_u().leftCols(dec.rank)};
}

/// Orthonormal basis of the null space; dimension = cols - rank.
inline SubspaceBasis null_basis(const CMatrix& a, const RankTolerance& tol = {}) {
    if (a.size() == 0) return SubspaceBasis{a.cols(), CMatrix::Identity(a.cols(), a.cols())};
    // Thin V is min(m,n) columns; the null space needs the full V.
    Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    const double sigma_max = s.size() > 0 ? s(0) : 0.0;
    const double thr = tol.threshold(a.rows(), a.cols(), sigma_max);
    Index rank = 0;
    for (Index i = 0; i < s.size(); ++i)
        if (s(i) > thr) ++rank;
    return SubspaceBasis{a.cols(), svd.matrixV().rightCols(a.cols() - rank)};
}

/// Orthogonal projector B * B^*; self-adjoint idempotent by construction.
inline CMatrix projector(const SubspaceBasis& s) {
    if (s.dim() == 0) return CMatrix::Zero(s.ambient_dim, s.ambient_dim);
    return s.basis * s.basis.adjoint();
}

} // namespace gencore

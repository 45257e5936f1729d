#pragma once

// The four generalized inverses of a square complex matrix and the identity
// suite connecting them:
//
//   mp (x = a+):    axa=a, xax=x, (ax)* = ax, (xa)* = xa    -- always exists
//   group (a#):     axa=a, xax=x, ax=xa                     -- exists iff rank(a^2)=rank(a)
//   core:           the unique x with ax^2=x, xa^2=a, (ax)* = ax; equals a# a a+
//   dual core:      a+ a a#; equals (core(a*))*
//
// Core and dual core exist exactly when the group inverse does.

#include <map>
#include <optional>
#include <string>

#include "gencore/matrix.hpp"

namespace gencore {

/// Residual tolerance for the defining equations of group/core/dual core.
inline constexpr double kDefiningEquationTol = 1e-9;
/// Condition limit on the full-rank factor product GF; beyond it the matrix
/// is treated as numerically of index > 1.
inline constexpr double kGroupConditionLimit = 1e12;
/// Residuals at or below this mark a bundle as verified.
inline constexpr double kIdentityAcceptTol = 1e-8;

/// ||x - y||_F / max(1, ||y||_F)
inline double relative_residual(const CMatrix& x, const CMatrix& y) {
    return (x - y).norm() / std::max(1.0, y.norm());
}

inline CMatrix mp_inverse(const CMatrix& a, const RankTolerance& tol = {}) {
    if (a.size() == 0) return CMatrix::Zero(a.cols(), a.rows());
    const auto dec = detail::svd_of(a, tol);
    const Index r = dec.rank;
    if (r == 0) return CMatrix::Zero(a.cols(), a.rows());
    const CMatrix ur = dec.matrix_u().leftCols(r);
    const CMatrix vr = dec.matrix_v().leftCols(r);
    const Eigen::VectorXd inv_sigma = dec.sigma().head(r).cwiseInverse();
    return vr * inv_sigma.asDiagonal() * ur.adjoint();
}

inline void require_square(const CMatrix& a, const char* op) {
    if (a.rows() != a.cols())
        throw DimensionMismatchError(std::string(op) + " requires a square matrix, got " +
                                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

/// Index <= 1 test: rank(a^2) = rank(a).
inline bool is_group_invertible(const CMatrix& a, const RankTolerance& tol = {}) {
    require_square(a, "is_group_invertible");
    return rank_of(a * a, tol) == rank_of(a, tol);
}

namespace detail {

struct FullRankFactors {
    CMatrix f;     // U_r * Sigma_r
    CMatrix g;     // V_r^*
    Index rank;
};

inline FullRankFactors full_rank_factorization(const CMatrix& a, const RankTolerance& tol) {
    const auto dec = svd_of(a, tol);
    const Index r = dec.rank;
    FullRankFactors out;
    out.rank = r;
    out.f = dec.matrix_u().leftCols(r) * dec.sigma().head(r).asDiagonal();
    out.g = dec.matrix_v().leftCols(r).adjoint();
    return out;
}

} // namespace detail

/// Group inverse via the full-rank factorization a = F G: a# = F (GF)^-2 G.
/// Existence is decided by the rank criterion so the error can cite both
/// ranks; a near-singular GF is reported as numerically of index > 1.
inline CMatrix group_inverse(const CMatrix& a, const RankTolerance& tol = {}) {
    require_square(a, "group_inverse");
    const Index n = a.rows();
    const auto fac = detail::full_rank_factorization(a, tol);
    const Index rank_a = fac.rank;
    const Index rank_a2 = rank_of(a * a, tol);
    if (rank_a2 != rank_a) throw NotGroupInvertibleError(rank_a, rank_a2);
    if (rank_a == 0) return CMatrix::Zero(n, n);

    const CMatrix gf = fac.g * fac.f;
    {
        const Eigen::VectorXd s = gf.jacobiSvd().singularValues();
        if (s(s.size() - 1) <= 0.0 || s(0) / s(s.size() - 1) > kGroupConditionLimit)
            throw NotGroupInvertibleError(rank_a, rank_a2, /*numerically_borderline=*/true);
    }
    const CMatrix gf_inv = gf.partialPivLu().solve(CMatrix::Identity(rank_a, rank_a));
    const CMatrix x = fac.f * gf_inv * gf_inv * fac.g;

    const double r1 = relative_residual(a * x * a, a);
    const double r2 = relative_residual(x * a * x, x);
    const double r3 = (a * x - x * a).norm() / std::max(1.0, (a * x).norm());
    if (r1 > kDefiningEquationTol || r2 > kDefiningEquationTol || r3 > kDefiningEquationTol)
        throw InternalInconsistencyError(
            "group inverse failed its defining equations (residuals " + std::to_string(r1) +
            ", " + std::to_string(r2) + ", " + std::to_string(r3) + ")");
    return x;
}

/// Core inverse a# a a+, post-verified against the characterization
/// ax^2 = x, xa^2 = a, (ax)* = ax.
inline CMatrix core_inverse(const CMatrix& a, const RankTolerance& tol = {}) {
    const CMatrix group = group_inverse(a, tol);
    const CMatrix mp = mp_inverse(a, tol);
    const CMatrix x = group * a * mp;

    const double r1 = relative_residual(a * x * x, x);
    const double r2 = relative_residual(x * a * a, a);
    const CMatrix ax = a * x;
    const double r3 = (ax - ax.adjoint()).norm() / std::max(1.0, ax.norm());
    if (r1 > kDefiningEquationTol || r2 > kDefiningEquationTol || r3 > kDefiningEquationTol)
        throw InternalInconsistencyError(
            "core inverse failed its characterization (residuals " + std::to_string(r1) + ", " +
            std::to_string(r2) + ", " + std::to_string(r3) + ")");
    return x;
}

/// Dual core inverse a+ a a#, post-verified against (core(a*))*.
inline CMatrix dual_core_inverse(const CMatrix& a, const RankTolerance& tol = {}) {
    const CMatrix group = group_inverse(a, tol);
    const CMatrix mp = mp_inverse(a, tol);
    const CMatrix x = mp * a * group;

    const CMatrix via_adjoint = core_inverse(a.adjoint(), tol).adjoint();
    const double dual_defect = relative_residual(x, via_adjoint);
    if (dual_defect > kDefiningEquationTol)
        throw InternalInconsistencyError("dual core inverse disagrees with (core(a*))* by " +
                                         std::to_string(dual_defect));
    return x;
}

/// A matrix together with its generalized inverses. group/core/dual_core are
/// all present or all absent.
struct InverseBundle {
    CMatrix a;
    CMatrix mp;
    std::optional<CMatrix> group;
    std::optional<CMatrix> core;
    std::optional<CMatrix> dual_core;
    bool group_exists = false;
    std::map<std::string, double> residuals;
    bool verified = false;
};

/// Residual map over the identity suite tying the four inverses together.
/// All inverses must be present. Residuals are reported even when large.
inline std::map<std::string, double> verify_identities(const InverseBundle& b) {
    if (!b.group || !b.core || !b.dual_core)
        throw InvalidArgumentError("verify_identities needs a bundle with all inverses present");
    const CMatrix& a = b.a;
    const CMatrix& mp = b.mp;
    const CMatrix& g = *b.group;
    const CMatrix& c = *b.core;
    const CMatrix& d = *b.dual_core;
    const Index n = a.rows();
    const CMatrix id = CMatrix::Identity(n, n);

    std::map<std::string, double> r;
    r["group_from_core_sq"] = relative_residual(c * c * a, g);
    r["group_from_core_dual"] = relative_residual(c * a * d, g);
    r["group_from_a_dual_sq"] = relative_residual(a * d * d, g);
    r["mp_from_dual_core"] = relative_residual(d * a * c, mp);
    r["core_from_group_mp"] = relative_residual(g * a * mp, c);
    r["dual_from_mp_group"] = relative_residual(mp * a * g, d);
    r["core_range_absorption"] = relative_residual(a * mp * c, c);

    // m = aa+ + a+a - 1 is invertible iff the core inverse exists, with
    // m^-1 = c a + (c a)* - 1.
    const CMatrix m = a * mp + mp * a - id;
    r["mp_from_projector_combo"] = relative_residual(m * c, mp);
    const CMatrix claimed_inverse = c * a + (c * a).adjoint() - id;
    const CMatrix m_inv = m.partialPivLu().solve(id);
    r["projector_combo_invertible"] = relative_residual(m * m_inv, id);
    r["projector_combo_inverse"] = relative_residual(m_inv, claimed_inverse);
    return r;
}

/// Computes every inverse that exists, plus the identity residual map.
inline InverseBundle make_bundle(const CMatrix& a, const RankTolerance& tol = {}) {
    require_square(a, "make_bundle");
    InverseBundle b;
    b.a = a;
    b.mp = mp_inverse(a, tol);
    b.residuals["penrose_axa"] = relative_residual(a * b.mp * a, a);
    b.residuals["penrose_xax"] = relative_residual(b.mp * a * b.mp, b.mp);
    const CMatrix ax = a * b.mp;
    const CMatrix xa = b.mp * a;
    b.residuals["penrose_ax_hermitian"] = (ax - ax.adjoint()).norm() / std::max(1.0, ax.norm());
    b.residuals["penrose_xa_hermitian"] = (xa - xa.adjoint()).norm() / std::max(1.0, xa.norm());

    b.group_exists = is_group_invertible(a, tol);
    if (b.group_exists) {
        b.group = group_inverse(a, tol);
        b.core = core_inverse(a, tol);
        b.dual_core = dual_core_inverse(a, tol);
        for (const auto& [name, value] : verify_identities(b)) b.residuals[name] = value;
    }
    b.verified = true;
    for (const auto& [name, value] : b.residuals)
        if (value > kIdentityAcceptTol) b.verified = false;
    return b;
}

} // namespace gencore

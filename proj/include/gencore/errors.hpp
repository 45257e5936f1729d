#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gencore {

/// Base class for all library errors. `code()` is a stable machine-readable
/// identifier (also used by the CLI error objects).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// rank(a^2) < rank(a), or GF numerically too close to singular (index > 1).
class NotGroupInvertibleError : public Error {
public:
    NotGroupInvertibleError(std::ptrdiff_t rank_a, std::ptrdiff_t rank_a2,
                            bool numerically_borderline = false)
        : Error("NOT_GROUP_INVERTIBLE",
                numerically_borderline
                    ? "matrix is numerically of index > 1 (full-rank factor GF is "
                      "near-singular); rank(a)=" + std::to_string(rank_a) +
                          ", rank(a^2)=" + std::to_string(rank_a2)
                    : "matrix is not group invertible: rank(a)=" + std::to_string(rank_a) +
                          " != rank(a^2)=" + std::to_string(rank_a2)),
          rank_a_(rank_a), rank_a2_(rank_a2), numerically_borderline_(numerically_borderline) {}

    std::ptrdiff_t rank_a() const noexcept { return rank_a_; }
    std::ptrdiff_t rank_a2() const noexcept { return rank_a2_; }
    bool numerically_borderline() const noexcept { return numerically_borderline_; }

private:
    std::ptrdiff_t rank_a_;
    std::ptrdiff_t rank_a2_;
    bool numerically_borderline_;
};

class DimensionMismatchError : public Error {
public:
    explicit DimensionMismatchError(const std::string& message)
        : Error("DIMENSION_MISMATCH", message) {}
};

/// Input matrix fails the self-adjoint idempotent checks.
class NotAProjectorError : public Error {
public:
    NotAProjectorError(double idempotency_defect, double self_adjointness_defect)
        : Error("NOT_A_PROJECTOR",
                "matrix is not an orthogonal projector: |p^2-p|=" +
                    std::to_string(idempotency_defect) +
                    ", |p-p*|=" + std::to_string(self_adjointness_defect)) {}
};

class InvalidArgumentError : public Error {
public:
    explicit InvalidArgumentError(const std::string& message)
        : Error("INVALID_ARGUMENT", message) {}
};

/// A quantity that should agree by an exact identity came out inconsistent;
/// indicates numerical trouble upstream rather than bad input.
class InternalInconsistencyError : public Error {
public:
    explicit InternalInconsistencyError(const std::string& message)
        : Error("INTERNAL_INCONSISTENCY", message) {}
};

/// A finite-difference sample point failed the index-1 check.
class GroupInvertibilityLostNearT0Error : public Error {
public:
    explicit GroupInvertibilityLostNearT0Error(double t)
        : Error("GROUP_INVERTIBILITY_LOST_NEAR_T0",
                "family is not group invertible at sample point t=" + std::to_string(t)),
          t_(t) {}

    double t() const noexcept { return t_; }

private:
    double t_;
};

/// Malformed input file (JSON shape, non-finite entry, wrong row length, ...).
class SchemaError : public Error {
public:
    explicit SchemaError(const std::string& message, std::string where = {})
        : Error("SCHEMA_ERROR", where.empty() ? message : message + " (at " + where + ")"),
          where_(std::move(where)) {}

    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

} // namespace gencore

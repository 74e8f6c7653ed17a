#pragma once

#include <Eigen/Dense>

#include "houseod/error.hpp"

namespace houseod {

/// Lower-triangular square root of a covariance matrix: S * S^T = P.
///
/// Canonical form: strictly positive diagonal, zero above the diagonal.
/// All factory functions and kernel operations preserve canonical form, so a
/// TriFactor obtained from this module is always a valid SPD square root.
class TriFactor {
  public:
    TriFactor() = default;

    /// Wraps a matrix that is already lower triangular. Columns whose diagonal
    /// entry is negative are flipped (S*S^T is invariant under column sign
    /// changes). Throws if the matrix is not triangular or has a zero diagonal.
    static TriFactor from_lower(Eigen::MatrixXd L);

    /// Cholesky-factorizes an SPD matrix.
    static TriFactor from_covariance(const Eigen::MatrixXd& P);

    /// Diagonal factor from per-component standard deviations.
    static TriFactor from_stddev(const Eigen::VectorXd& sigma);

    static TriFactor identity(Eigen::Index n);

    Eigen::Index dim() const { return s_.rows(); }
    const Eigen::MatrixXd& matrix() const { return s_; }
    Eigen::MatrixXd covariance() const { return s_ * s_.transpose(); }

    /// Leading principal n x n block; equals the factor of the corresponding
    /// covariance block.
    TriFactor top_left(Eigen::Index n) const;

    /// Block-diagonal composition, the factor of blkdiag(A A^T, B B^T).
    static TriFactor block_diag(const TriFactor& a, const TriFactor& b);

  private:
    explicit TriFactor(Eigen::MatrixXd s) : s_(std::move(s)) {}
    Eigen::MatrixXd s_;

    friend TriFactor chol_update(const TriFactor&, const Eigen::VectorXd&, double);
    friend TriFactor chol_update_multi(const TriFactor&, const Eigen::MatrixXd&, double);
    friend TriFactor sqrt_from_weighted_deviations(const Eigen::MatrixXd&);
};

/// Rank-one update/downdate: returns T with T T^T = S S^T + sign(w)|w| u u^T.
/// Negative `w` downdates; an indefinite downdate throws.
TriFactor chol_update(const TriFactor& s, const Eigen::VectorXd& u, double w);

/// Columns of U applied left to right with the common signed weight `w`.
/// On an indefinite downdate the error reports the offending column.
TriFactor chol_update_multi(const TriFactor& s, const Eigen::MatrixXd& u, double w);

/// Triangular factor T with T T^T = D D^T, for a matrix D of deviation columns
/// already scaled by the square roots of their (nonnegative) weights.
/// Requires cols(D) >= rows(D); throws DegenerateDeviationsError when the
/// numerical rank of D is below its row count.
TriFactor sqrt_from_weighted_deviations(const Eigen::MatrixXd& d);

enum class TriSide {
    Lower,           ///< solve S X = B
    UpperTranspose,  ///< solve S^T X = B
};

/// Triangular solve against the factor (vector or matrix right-hand side).
Eigen::MatrixXd tri_solve(const TriFactor& s, const Eigen::MatrixXd& b,
                          TriSide side = TriSide::Lower);

}  // namespace houseod

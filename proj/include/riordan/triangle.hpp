#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "riordan/series.hpp"

namespace riordan {

/// Diagonal matrix data [{beta_n}]; values must be invertible wherever the
/// operation divides by them.
using DiagonalSeq = std::vector<Poly>;

/// Finite-order view of an infinite lower-triangular matrix: N x N, rows and
/// columns indexed from 0. Entries above the diagonal are identically zero
/// by representation and are never stored. Truncating to a smaller order
/// commutes with every operation (the nested-submatrix tower).
class Triangle {
public:
    explicit Triangle(int order);

    static Triangle identity(int order);
    /// entry(n, j) = data[n - j]; requires at least `order` values.
    static Triangle from_toeplitz(const std::vector<Poly>& data, int order);
    /// entry(n, j) = gen(n, j).
    static Triangle build(int order, const std::function<Poly(int, int)>& gen);
    /// Toeplitz builder from a difference-only generator.
    static Triangle toeplitz(int order, const std::function<Poly(int)>& gen);

    int order() const { return order_; }
    /// Zero above the diagonal; throws MathError outside the order.
    const Poly& entry(int n, int j) const;
    void set(int n, int j, Poly p);

    Triangle truncated(int m) const;
    bool is_zero() const;
    bool is_identity() const;

    friend bool operator==(const Triangle& a, const Triangle& b) {
        return a.order_ == b.order_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Triangle& a, const Triangle& b) { return !(a == b); }

private:
    size_t idx(int n, int j) const { return static_cast<size_t>(n) * (n + 1) / 2 + j; }
    int order_;
    std::vector<Poly> e_;
};

/// Block product: entry(n,j) = sum_{k=j}^{n} A(n,k) B(k,j). Orders must match.
Triangle mul(const Triangle& a, const Triangle& b, const Ctx& ctx = Ctx::exact());

/// Inverse by forward substitution, column by column. Every diagonal entry
/// must be invertible; the first offending row is reported otherwise.
Triangle inverse(const Triangle& a, const Ctx& ctx = Ctx::exact());

/// Independent inverse via the block recursion that appends one row at a
/// time (last row = -a_n^T A_n^{-1} / alpha_n). Kept as an oracle for the
/// forward-substitution path.
Triangle inverse_block_recursion(const Triangle& a, const Ctx& ctx = Ctx::exact());

/// Inverse Toeplitz data: e_0 = 1, e_k = -sum_{s<k} d_{k-s} e_s. Requires
/// d[0] == 1 and produces `count` values.
std::vector<Poly> toeplitz_inverse_seq(const std::vector<Poly>& d, int count,
                                       const Ctx& ctx = Ctx::exact());

/// [alpha_n * a_{n,j}]
Triangle scale_rows(const Triangle& a, const DiagonalSeq& alpha, const Ctx& ctx = Ctx::exact());
/// [a_{n,j} / alpha_j]
Triangle scale_cols_inv(const Triangle& a, const DiagonalSeq& alpha, const Ctx& ctx = Ctx::exact());
/// [{alpha_n}] A [{alpha_j}]^{-1} = [alpha_n a_{n,j} / alpha_j]
Triangle diag_conjugate(const DiagonalSeq& alpha, const Triangle& a, const Ctx& ctx = Ctx::exact());
/// [a_{n,j} lambda^{n-j}]; pairs of mutual inverses stay mutual inverses.
Triangle grade(const Triangle& a, const Poly& lambda, const Ctx& ctx = Ctx::exact());

/// Generating function of the matrix as column series: result[i] is the
/// series g_i with coefficient of the n-th power equal to entry(n, i).
std::vector<Series> matrix_gf(const Triangle& a);

/// First coordinates (row-major) at which the two triangles differ.
std::optional<std::pair<int, int>> first_diff(const Triangle& a, const Triangle& b);

}  // namespace riordan

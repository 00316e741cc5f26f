#pragma once

#include <optional>
#include <vector>

#include "liecoh/rational.hpp"

namespace liecoh {

/// Dense matrix over exact rationals. Elimination routines use fraction-free
/// (Bareiss) pivoting with deterministic leftmost/topmost pivot choice, so
/// ranks, kernels and echelon bases are reproducible bit for bit.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols);

    static RatMatrix identity(int n);
    static RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    std::vector<Rat> row(int r) const;
    std::vector<Rat> col(int c) const;

    bool operator==(const RatMatrix& other) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> a_;
};

/// Rank by integer Bareiss elimination after clearing row denominators.
int rank(const RatMatrix& m);

/// Determinant (square matrices) by Bareiss elimination.
Rat determinant(const RatMatrix& m);

/// Reduced row-echelon form; pivot columns reported in increasing order.
/// Forward elimination is fraction-free; the Jordan normalization divides
/// out pivots afterwards.
RatMatrix rref(const RatMatrix& m, std::vector<int>* pivot_cols = nullptr);

/// Canonical kernel basis from the RREF: one vector per free column, in
/// increasing free-column order, unit at its free coordinate.
std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m);

/// Unique solution of A x = b when the columns of A are linearly
/// independent; nullopt when b is outside the column span.
/// Throws std::logic_error if the columns are dependent (solution not unique).
std::optional<std::vector<Rat>> solve_unique(const RatMatrix& a, const std::vector<Rat>& b);

/// Membership test: reduces v against the rows of an RREF matrix and
/// returns the residue (zero iff v lies in the row space).
std::vector<Rat> reduce_against_rref(const RatMatrix& r, const std::vector<int>& pivot_cols,
                                     std::vector<Rat> v);

}  // namespace liecoh

#include "liecoh/rat_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace liecoh {

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("RatMatrix: negative extent");
    a_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rat(0));
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    RatMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
            throw std::invalid_argument("RatMatrix::from_rows: ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

std::vector<Rat> RatMatrix::row(int r) const {
    std::vector<Rat> out(static_cast<std::size_t>(cols_));
    for (int j = 0; j < cols_; ++j) out[static_cast<std::size_t>(j)] = at(r, j);
    return out;
}

std::vector<Rat> RatMatrix::col(int c) const {
    std::vector<Rat> out(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) out[static_cast<std::size_t>(i)] = at(i, c);
    return out;
}

bool RatMatrix::operator==(const RatMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
}

namespace {

// Integer copy with each row scaled by the lcm of its denominators.
// Row scaling by positive rationals preserves rank and row space.
std::vector<std::vector<Int>> integer_rows(const RatMatrix& m) {
    std::vector<std::vector<Int>> rows(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) {
        Int l = denominator_lcm(m.row(i));
        auto& out = rows[static_cast<std::size_t>(i)];
        out.resize(static_cast<std::size_t>(m.cols()));
        for (int j = 0; j < m.cols(); ++j) {
            Rat v = m.at(i, j) * Rat(l);
            out[static_cast<std::size_t>(j)] = v.get_num();  // denominator is 1 here
        }
    }
    return rows;
}

// Fraction-free echelon reduction in place. Returns pivot columns.
// Deterministic: scans columns left to right, picks the topmost unused row.
std::vector<int> bareiss_echelon(std::vector<std::vector<Int>>& a, int cols) {
    std::vector<int> pivots;
    int rows = static_cast<int>(a.size());
    Int prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i) {
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        std::swap(a[static_cast<std::size_t>(p)], a[static_cast<std::size_t>(r)]);
        const Int piv = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        for (int i = r + 1; i < rows; ++i) {
            auto& row_i = a[static_cast<std::size_t>(i)];
            const auto& row_r = a[static_cast<std::size_t>(r)];
            const Int head = row_i[static_cast<std::size_t>(c)];
            for (int j = c; j < cols; ++j) {
                Int t = row_i[static_cast<std::size_t>(j)] * piv -
                        head * row_r[static_cast<std::size_t>(j)];
                // exact by the Bareiss identity
                row_i[static_cast<std::size_t>(j)] = t / prev;
            }
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(const RatMatrix& m) {
    auto a = integer_rows(m);
    return static_cast<int>(bareiss_echelon(a, m.cols()).size());
}

Rat determinant(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const int n = m.rows();
    if (n == 0) return Rat(1);

    // Track the row scalings and swap parity applied before Bareiss.
    Rat scale(1);
    std::vector<std::vector<Int>> a(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Int l = denominator_lcm(m.row(i));
        scale *= Rat(l);
        auto& row = a[static_cast<std::size_t>(i)];
        row.resize(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = Rat(m.at(i, j) * Rat(l)).get_num();
    }

    Int prev = 1;
    int swaps = 0;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
                p = i;
                break;
            }
        if (p < 0) return Rat(0);
        if (p != c) {
            std::swap(a[static_cast<std::size_t>(p)], a[static_cast<std::size_t>(c)]);
            ++swaps;
        }
        const Int piv = a[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
        for (int i = c + 1; i < n; ++i) {
            auto& row_i = a[static_cast<std::size_t>(i)];
            const auto& row_c = a[static_cast<std::size_t>(c)];
            const Int head = row_i[static_cast<std::size_t>(c)];
            for (int j = c; j < n; ++j) {
                Int t = row_i[static_cast<std::size_t>(j)] * piv -
                        head * row_c[static_cast<std::size_t>(j)];
                row_i[static_cast<std::size_t>(j)] = t / prev;
            }
        }
        prev = piv;
    }
    Rat det = Rat(a[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)]) / scale;
    return (swaps % 2 == 0) ? det : -det;
}

RatMatrix rref(const RatMatrix& m, std::vector<int>* pivot_cols) {
    auto a = integer_rows(m);
    const int cols = m.cols();
    std::vector<int> pivots = bareiss_echelon(a, cols);
    const int r = static_cast<int>(pivots.size());

    // Jordan phase over the (small) echelon part, then divide out pivots.
    std::vector<std::vector<Rat>> rows(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        rows[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(cols));
        for (int j = 0; j < cols; ++j)
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                Rat(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    for (int i = r - 1; i >= 0; --i) {
        auto& row_i = rows[static_cast<std::size_t>(i)];
        const int pc = pivots[static_cast<std::size_t>(i)];
        const Rat piv = row_i[static_cast<std::size_t>(pc)];
        for (int j = 0; j < cols; ++j) row_i[static_cast<std::size_t>(j)] /= piv;
        for (int k = 0; k < i; ++k) {
            auto& row_k = rows[static_cast<std::size_t>(k)];
            const Rat f = row_k[static_cast<std::size_t>(pc)];
            if (f == 0) continue;
            for (int j = pc; j < cols; ++j)
                row_k[static_cast<std::size_t>(j)] -= f * row_i[static_cast<std::size_t>(j)];
        }
    }

    RatMatrix out(r, cols);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < cols; ++j) out.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    if (pivot_cols) *pivot_cols = std::move(pivots);
    return out;
}

std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m) {
    std::vector<int> pivots;
    RatMatrix r = rref(m, &pivots);
    const int cols = m.cols();

    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<std::vector<Rat>> out;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        std::vector<Rat> v(static_cast<std::size_t>(cols), Rat(0));
        v[static_cast<std::size_t>(f)] = 1;
        for (int i = 0; i < r.rows(); ++i)
            v[static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])] = -r.at(i, f);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<std::vector<Rat>> solve_unique(const RatMatrix& a, const std::vector<Rat>& b) {
    if (static_cast<int>(b.size()) != a.rows())
        throw std::invalid_argument("solve_unique: rhs length mismatch");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[static_cast<std::size_t>(i)];
    }
    std::vector<int> pivots;
    RatMatrix r = rref(aug, &pivots);
    for (int p : pivots)
        if (p == a.cols()) return std::nullopt;  // inconsistent system
    if (static_cast<int>(pivots.size()) != a.cols())
        throw std::logic_error("solve_unique: columns are linearly dependent");
    std::vector<Rat> x(static_cast<std::size_t>(a.cols()), Rat(0));
    for (int i = 0; i < r.rows(); ++i)
        x[static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])] = r.at(i, a.cols());
    return x;
}

std::vector<Rat> reduce_against_rref(const RatMatrix& r, const std::vector<int>& pivot_cols,
                                     std::vector<Rat> v) {
    if (static_cast<int>(v.size()) != r.cols())
        throw std::invalid_argument("reduce_against_rref: length mismatch");
    for (int i = 0; i < r.rows(); ++i) {
        const Rat f = v[static_cast<std::size_t>(pivot_cols[static_cast<std::size_t>(i)])];
        if (f == 0) continue;
        for (int j = 0; j < r.cols(); ++j) v[static_cast<std::size_t>(j)] -= f * r.at(i, j);
    }
    return v;
}

}  // namespace liecoh

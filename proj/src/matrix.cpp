#include "ktriv/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace ktriv {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    a_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_)
            throw std::invalid_argument("ragged matrix initializer");
        for (long v : r)
            a_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(int n)
{
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0)
                continue;
            for (int j = 0; j < b.cols(); ++j)
                c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sum shape mismatch");
    IntMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            c.at(i, j) = a.at(i, j) + b.at(i, j);
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix difference shape mismatch");
    IntMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            c.at(i, j) = a.at(i, j) - b.at(i, j);
    return c;
}

std::vector<Int> operator*(const IntMatrix& a, const std::vector<Int>& x)
{
    if (a.cols() != static_cast<int>(x.size()))
        throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<Int> y(a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != 0)
                y[i] += a.at(i, j) * x[j];
    return y;
}

// Bareiss one-step elimination; returns the permutation sign and leaves the
// echelon form in place. Shared by det and rank.
static int bareiss(IntMatrix& m, int& out_rank)
{
    const int rows = m.rows(), cols = m.cols();
    int sign = 1;
    Int prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != r) {
            for (int j = 0; j < cols; ++j)
                swap(m.at(piv, j), m.at(r, j));
            sign = -sign;
        }
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                m.at(i, j) = exact_div(m.at(r, c) * m.at(i, j) - m.at(i, c) * m.at(r, j), prev);
            m.at(i, c) = 0;
        }
        prev = m.at(r, c);
        ++r;
    }
    out_rank = r;
    return sign;
}

Int det(IntMatrix a)
{
    if (a.rows() != a.cols())
        throw std::invalid_argument("det of non-square matrix");
    if (a.rows() == 0)
        return 1;
    int r = 0;
    int sign = bareiss(a, r);
    if (r < a.rows())
        return 0;
    // after full elimination the last pivot is det up to the row-swap sign
    return sign * a.at(a.rows() - 1, a.cols() - 1);
}

int rank(IntMatrix a)
{
    int r = 0;
    bareiss(a, r);
    return r;
}

} // namespace ktriv

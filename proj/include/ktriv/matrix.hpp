#ifndef KTRIV_MATRIX_HPP
#define KTRIV_MATRIX_HPP

#include "ktriv/numeric.hpp"

#include <initializer_list>
#include <vector>

namespace ktriv {

// Dense integer matrix, row-major. Small fixed ranks (<= 10 here), so no
// attempt at anything clever; everything is exact.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    IntMatrix transpose() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    int rows_, cols_;
    std::vector<Int> a_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
std::vector<Int> operator*(const IntMatrix& a, const std::vector<Int>& x);

// Exact determinant / rank via fraction-free (Bareiss) elimination.
Int det(IntMatrix a);
int rank(IntMatrix a);

} // namespace ktriv

#endif

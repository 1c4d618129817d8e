#pragma once

#include <vector>

#include "skewclifford/rational.hpp"

namespace skcl {

/// Dense matrix over Q, row-major.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static Mat identity(int n);
    static Mat zero(int rows, int cols) { return Mat(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_zero() const;

    Rat& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    Mat transpose() const;

    /// Sub-matrix keeping the given (0-based, ascending) row/column indices.
    Mat submatrix(const std::vector<int>& keep) const;

    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);
    friend Mat operator+(Mat a, const Mat& b) { a += b; return a; }
    friend Mat operator-(Mat a, const Mat& b) { a -= b; return a; }
    friend Mat operator*(const Rat& c, Mat m);

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

struct RrefResult {
    Mat reduced;
    int rank = 0;
    std::vector<int> pivots;  // 0-based pivot column indices
};

/// Reduced row echelon form over Q, exact.  Columns are processed left to
/// right; within a column the first nonzero row becomes the pivot.
RrefResult rref(const Mat& m);

int rank(const Mat& m);

}  // namespace skcl

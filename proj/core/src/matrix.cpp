#include "skewclifford/matrix.hpp"

#include <utility>

#include "skewclifford/errors.hpp"

namespace skcl {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

bool Mat::is_zero() const {
    for (const Rat& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Mat Mat::submatrix(const std::vector<int>& keep) const {
    Mat s(static_cast<int>(keep.size()), static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j)
            s.at(static_cast<int>(i), static_cast<int>(j)) = at(keep[i], keep[j]);
    return s;
}

Mat& Mat::operator+=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InternalError("matrix shape mismatch in +");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

Mat& Mat::operator-=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InternalError("matrix shape mismatch in -");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

Mat operator*(const Rat& c, Mat m) {
    for (Rat& x : m.a_) x *= c;
    return m;
}

RrefResult rref(const Mat& m) {
    RrefResult res;
    res.reduced = m;
    Mat& a = res.reduced;
    int pivot_row = 0;
    for (int col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        int sel = -1;
        for (int r = pivot_row; r < a.rows(); ++r) {
            if (!a.at(r, col).is_zero()) { sel = r; break; }
        }
        if (sel < 0) continue;
        if (sel != pivot_row)
            for (int c = 0; c < a.cols(); ++c) std::swap(a.at(sel, c), a.at(pivot_row, c));
        Rat inv = a.at(pivot_row, col).inv();
        for (int c = col; c < a.cols(); ++c) a.at(pivot_row, c) *= inv;
        for (int r = 0; r < a.rows(); ++r) {
            if (r == pivot_row || a.at(r, col).is_zero()) continue;
            Rat f = a.at(r, col);
            for (int c = col; c < a.cols(); ++c) a.at(r, c) -= f * a.at(pivot_row, c);
        }
        res.pivots.push_back(col);
        ++pivot_row;
    }
    res.rank = pivot_row;
    return res;
}

int rank(const Mat& m) { return rref(m).rank; }

}  // namespace skcl

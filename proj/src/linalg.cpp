#include "braidkit/linalg.hpp"

namespace braidkit {

Mat Mat::identity(int n, const FieldMode& m) {
    Mat r(n, n, m);
    for (int i = 0; i < n; ++i) r.at(i, i) = Scalar::one(m);
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    Mat r(rows_, o.cols_, mode_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.at(i, j) += a * b;
            }
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    Mat r = *this;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) += o.at(i, j);
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    Mat r = *this;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) -= o.at(i, j);
    return r;
}

Mat Mat::scaled(const Scalar& c) const {
    Mat r = *this;
    for (auto& x : r.data_) x *= c;
    return r;
}

Mat Mat::transpose() const {
    Mat r(cols_, rows_, mode_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Mat::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

bool Mat::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    return true;
}

std::optional<Mat> Mat::try_inverse() const {
    if (rows_ != cols_) return std::nullopt;
    Mat a = *this;
    Mat inv = identity(rows_, mode_);
    for (int col = 0; col < cols_; ++col) {
        int piv = -1;
        for (int r = col; r < rows_; ++r)
            if (!a.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return std::nullopt;
        if (piv != col) {
            for (int j = 0; j < cols_; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        }
        Scalar ivp = a.at(col, col).inv();
        for (int j = 0; j < cols_; ++j) {
            a.at(col, j) *= ivp;
            inv.at(col, j) *= ivp;
        }
        for (int r = 0; r < rows_; ++r) {
            if (r == col || a.at(r, col).is_zero()) continue;
            Scalar f = a.at(r, col);
            for (int j = 0; j < cols_; ++j) {
                a.at(r, j) -= f * a.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

Mat Mat::inverse() const {
    auto r = try_inverse();
    if (!r) throw SingularMatrix("matrix is singular");
    return *r;
}

Mat Mat::rref(std::vector<int>* pivots) const {
    Mat a = *this;
    int r = 0;
    for (int col = 0; col < cols_ && r < rows_; ++col) {
        int piv = -1;
        for (int i = r; i < rows_; ++i)
            if (!a.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols_; ++j) std::swap(a.at(piv, j), a.at(r, j));
        Scalar ivp = a.at(r, col).inv();
        for (int j = 0; j < cols_; ++j) a.at(r, j) *= ivp;
        for (int i = 0; i < rows_; ++i) {
            if (i == r || a.at(i, col).is_zero()) continue;
            Scalar f = a.at(i, col);
            for (int j = 0; j < cols_; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        if (pivots) pivots->push_back(col);
        ++r;
    }
    return a;
}

int Mat::rank() const {
    std::vector<int> piv;
    rref(&piv);
    return static_cast<int>(piv.size());
}

std::optional<std::vector<Scalar>> Mat::solve(const std::vector<Scalar>& b) const {
    Mat aug(rows_, cols_ + 1, mode_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    std::vector<int> piv;
    Mat e = aug.rref(&piv);
    // inconsistent if a pivot lands in the augmented column
    for (int c : piv)
        if (c == cols_) return std::nullopt;
    std::vector<Scalar> x(cols_, Scalar::zero(mode_));
    for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = e.at(static_cast<int>(i), cols_);
    return x;
}

} // namespace braidkit

#ifndef BRAIDKIT_LINALG_HPP
#define BRAIDKIT_LINALG_HPP

#include <optional>
#include <vector>

#include "braidkit/scalar.hpp"

namespace braidkit {

// Dense matrix over Scalar.  Row-major.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols, const FieldMode& m)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, Scalar::zero(m)), mode_(m) {}

    static Mat identity(int n, const FieldMode& m);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldMode& mode() const { return mode_; }

    Scalar& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scaled(const Scalar& c) const;
    Mat transpose() const;
    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

    // Gaussian elimination.  inverse() throws SingularMatrix.
    Mat inverse() const;
    std::optional<Mat> try_inverse() const;
    int rank() const;
    // Solve A x = b for one solution (A = *this, b column vector); nullopt if inconsistent.
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;
    // Reduced row echelon form (in place copy); returns pivot columns.
    Mat rref(std::vector<int>* pivots = nullptr) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
    FieldMode mode_;
};

} // namespace braidkit

#endif

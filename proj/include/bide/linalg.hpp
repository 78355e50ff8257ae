#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace bide {

/// Real vector of basis coefficients.
class CoeffVector {
public:
    CoeffVector() = default;
    explicit CoeffVector(std::size_t size, double value = 0.0) : data_(size, value) {}
    explicit CoeffVector(std::vector<double> data) : data_(std::move(data)) {}
    CoeffVector(std::initializer_list<double> data) : data_(data) {}

    std::size_t size() const noexcept { return data_.size(); }
    double& operator[](std::size_t i) { return data_[i]; }
    double operator[](std::size_t i) const { return data_[i]; }
    std::span<const double> values() const noexcept { return data_; }
    const std::vector<double>& vector() const noexcept { return data_; }

    auto begin() const noexcept { return data_.begin(); }
    auto end() const noexcept { return data_.end(); }

    static CoeffVector unit(std::size_t size, std::size_t index);

    friend bool operator==(const CoeffVector&, const CoeffVector&) = default;

private:
    std::vector<double> data_;
};

/// Row-major dense real matrix.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, double value = 0.0);
    DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

    static DenseMatrix identity(std::size_t n);
    static DenseMatrix diagonal(std::span<const double> entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<const double> data() const noexcept { return data_; }

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

DenseMatrix identity(std::size_t n);
DenseMatrix transpose(const DenseMatrix& a);
DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix mat_add(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix mat_scale(const DenseMatrix& a, double s);
/// a^m by repeated squaring; a^0 is the identity.
DenseMatrix mat_pow(const DenseMatrix& a, int m);

CoeffVector mat_vec(const DenseMatrix& a, const CoeffVector& v);
/// Row vector times matrix: returns v^T a as a column.
CoeffVector vec_mat(const CoeffVector& v, const DenseMatrix& a);

inline DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) { return mat_mul(a, b); }
inline DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) { return mat_add(a, b); }
inline DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) { return mat_add(a, mat_scale(b, -1.0)); }
inline DenseMatrix operator*(double s, const DenseMatrix& a) { return mat_scale(a, s); }

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);
double max_abs_diff(const CoeffVector& a, const CoeffVector& b);
double norm_inf(const CoeffVector& v);
/// Maximum absolute column sum.
double norm_1(const DenseMatrix& a);

/// LU factorization with partial pivoting, PA = LU.
///
/// A pivot whose magnitude falls to 1e-13 times the largest entry the
/// pivot column had before elimination is reported as singular.
class LuDecomposition {
public:
    static constexpr double kSingularThreshold = 1e-13;

    explicit LuDecomposition(const DenseMatrix& a);

    std::size_t size() const noexcept { return lu_.rows(); }
    CoeffVector solve(const CoeffVector& b) const;
    DenseMatrix inverse() const;

private:
    DenseMatrix lu_;
    std::vector<std::size_t> perm_;
};

/// Solves M^T c = r, i.e. the row-vector system c^T M = r^T.
CoeffVector solve_transposed(const DenseMatrix& m, const CoeffVector& r);

/// 1-norm condition number estimate ||A||_1 ||A^-1||_1 from an explicit inverse.
double condition_estimate(const DenseMatrix& a);

} // namespace bide

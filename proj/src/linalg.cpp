#include "bide/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "bide/error.hpp"

namespace bide {

namespace {

void require(bool ok, const char* what)
{
    if (!ok)
        throw DimensionError(what);
}

} // namespace

CoeffVector CoeffVector::unit(std::size_t size, std::size_t index)
{
    CoeffVector v(size);
    v[index] = 1.0;
    return v;
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, double value)
    : rows_(rows), cols_(cols), data_(rows * cols, value)
{
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<double>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        require(r.size() == cols_, "ragged matrix initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

DenseMatrix DenseMatrix::identity(std::size_t n)
{
    DenseMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        out(i, i) = 1.0;
    return out;
}

DenseMatrix DenseMatrix::diagonal(std::span<const double> entries)
{
    DenseMatrix out(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        out(i, i) = entries[i];
    return out;
}

DenseMatrix identity(std::size_t n)
{
    return DenseMatrix::identity(n);
}

DenseMatrix transpose(const DenseMatrix& a)
{
    DenseMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(j, i) = a(i, j);
    return out;
}

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b)
{
    require(a.cols() == b.rows(), "mat_mul: inner dimensions differ");
    DenseMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) += aik * b(k, j);
        }
    return out;
}

DenseMatrix mat_add(const DenseMatrix& a, const DenseMatrix& b)
{
    require(a.rows() == b.rows() && a.cols() == b.cols(), "mat_add: shapes differ");
    DenseMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j) + b(i, j);
    return out;
}

DenseMatrix mat_scale(const DenseMatrix& a, double s)
{
    DenseMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = s * a(i, j);
    return out;
}

DenseMatrix mat_pow(const DenseMatrix& a, int m)
{
    require(a.is_square(), "mat_pow: matrix is not square");
    if (m < 0)
        throw DimensionError("mat_pow: negative exponent");
    DenseMatrix result = DenseMatrix::identity(a.rows());
    DenseMatrix base = a;
    while (m > 0) {
        if (m & 1)
            result = mat_mul(result, base);
        m >>= 1;
        if (m > 0)
            base = mat_mul(base, base);
    }
    return result;
}

CoeffVector mat_vec(const DenseMatrix& a, const CoeffVector& v)
{
    require(a.cols() == v.size(), "mat_vec: dimension mismatch");
    CoeffVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j)
            acc += a(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

CoeffVector vec_mat(const CoeffVector& v, const DenseMatrix& a)
{
    require(a.rows() == v.size(), "vec_mat: dimension mismatch");
    CoeffVector out(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        double acc = 0.0;
        for (std::size_t i = 0; i < a.rows(); ++i)
            acc += v[i] * a(i, j);
        out[j] = acc;
    }
    return out;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b)
{
    require(a.rows() == b.rows() && a.cols() == b.cols(), "max_abs_diff: shapes differ");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i)
        worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    return worst;
}

double max_abs_diff(const CoeffVector& a, const CoeffVector& b)
{
    require(a.size() == b.size(), "max_abs_diff: lengths differ");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

double norm_inf(const CoeffVector& v)
{
    double worst = 0.0;
    for (double x : v)
        worst = std::max(worst, std::abs(x));
    return worst;
}

double norm_1(const DenseMatrix& a)
{
    double worst = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        double sum = 0.0;
        for (std::size_t i = 0; i < a.rows(); ++i)
            sum += std::abs(a(i, j));
        worst = std::max(worst, sum);
    }
    return worst;
}

LuDecomposition::LuDecomposition(const DenseMatrix& a) : lu_(a), perm_(a.rows())
{
    require(a.is_square(), "LU: matrix is not square");
    const std::size_t n = a.rows();
    std::iota(perm_.begin(), perm_.end(), std::size_t{0});

    std::vector<double> column_scale(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            column_scale[j] = std::max(column_scale[j], std::abs(a(i, j)));

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(lu_(i, k)) > std::abs(lu_(pivot, k)))
                pivot = i;

        const double magnitude = std::abs(lu_(pivot, k));
        if (!(magnitude > kSingularThreshold * column_scale[k]) || magnitude == 0.0)
            throw SingularMatrixError("matrix is singular: pivot " + std::to_string(k) + " vanishes");

        if (pivot != k) {
            std::swap(perm_[k], perm_[pivot]);
            for (std::size_t j = 0; j < n; ++j)
                std::swap(lu_(k, j), lu_(pivot, j));
        }

        for (std::size_t i = k + 1; i < n; ++i) {
            const double factor = lu_(i, k) / lu_(k, k);
            lu_(i, k) = factor;
            for (std::size_t j = k + 1; j < n; ++j)
                lu_(i, j) -= factor * lu_(k, j);
        }
    }
}

CoeffVector LuDecomposition::solve(const CoeffVector& b) const
{
    const std::size_t n = size();
    require(b.size() == n, "LU solve: dimension mismatch");
    CoeffVector x(n);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = b[perm_[i]];
        for (std::size_t j = 0; j < i; ++j)
            acc -= lu_(i, j) * x[j];
        x[i] = acc;
    }
    for (std::size_t i = n; i-- > 0;) {
        double acc = x[i];
        for (std::size_t j = i + 1; j < n; ++j)
            acc -= lu_(i, j) * x[j];
        x[i] = acc / lu_(i, i);
    }
    return x;
}

DenseMatrix LuDecomposition::inverse() const
{
    const std::size_t n = size();
    DenseMatrix inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const CoeffVector col = solve(CoeffVector::unit(n, j));
        for (std::size_t i = 0; i < n; ++i)
            inv(i, j) = col[i];
    }
    return inv;
}

CoeffVector solve_transposed(const DenseMatrix& m, const CoeffVector& r)
{
    require(m.is_square(), "solve_transposed: matrix is not square");
    require(m.rows() == r.size(), "solve_transposed: dimension mismatch");
    return LuDecomposition(transpose(m)).solve(r);
}

double condition_estimate(const DenseMatrix& a)
{
    const LuDecomposition lu(a);
    return norm_1(a) * norm_1(lu.inverse());
}

} // namespace bide

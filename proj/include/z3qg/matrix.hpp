#pragma once

#include "z3qg/algebra.hpp"
#include "z3qg/report.hpp"
#include "z3qg/tensor.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace z3qg {

template <class T>
class Matrix {
public:
    Matrix(size_t rows, size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(size_t rows, size_t cols) : Matrix(rows, cols, T{}) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    T& operator()(size_t i, size_t j) { return data_.at(i * cols_ + j); }
    const T& operator()(size_t i, size_t j) const { return data_.at(i * cols_ + j); }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    size_t rows_;
    size_t cols_;
    std::vector<T> data_;
};

using ScalarMatrix = Matrix<CycScalar>;
using PolyMatrix = Matrix<Poly>;
using TensorMatrix = Matrix<TensorPoly>;

ScalarMatrix identity_matrix(size_t n);
ScalarMatrix operator*(const ScalarMatrix& x, const ScalarMatrix& y);
ScalarMatrix operator+(const ScalarMatrix& x, const ScalarMatrix& y);
ScalarMatrix operator-(const ScalarMatrix& x, const ScalarMatrix& y);
ScalarMatrix operator*(const CycScalar& c, const ScalarMatrix& x);
ScalarMatrix matrix_power(const ScalarMatrix& x, unsigned n);
// Ordinary Kronecker product, rows and columns ordered (i, j) -> i*dim(B) + j.
ScalarMatrix kron(const ScalarMatrix& a, const ScalarMatrix& b);

PolyMatrix to_poly_matrix(const ScalarMatrix& x);
PolyMatrix mul(const PolyMatrix& x, const PolyMatrix& y, const Presentation& p);
PolyMatrix mul(const ScalarMatrix& x, const PolyMatrix& y);
PolyMatrix mul(const PolyMatrix& x, const ScalarMatrix& y);
PolyMatrix operator-(const PolyMatrix& x, const PolyMatrix& y);

// Graded Kronecker rule
//   (A ox B)_{ij,kl} = q^(exponent * t(j) * (t(i) + sign * t(k))) A_ik B_jl
// with index grades t on the basis of the two-dimensional factor space.
struct KronConvention {
    std::array<int, 2> index_grades{0, 1};
    int sign = 1;
    int exponent = 1;

    std::string str() const;
    bool operator==(const KronConvention&) const = default;
};

// Grade of a basis index of (C^2)^(ox k), k = log2(n): sum of its binary digits' grades.
int index_grade(size_t index, size_t n, const std::array<int, 2>& grades);
long kron_exponent(const KronConvention& c, size_t i, size_t j, size_t k, size_t l, size_t na, size_t nb);

ScalarMatrix graded_kron(const ScalarMatrix& a, const ScalarMatrix& b, const KronConvention& c);
PolyMatrix graded_kron(const PolyMatrix& a, const PolyMatrix& b, const Presentation& p, const KronConvention& c);

// Two-slot matrix product (A .ox B)_{ik} = sum_j A_ij ox B_jk.
TensorMatrix dot_tensor(const PolyMatrix& a, const PolyMatrix& b, TensorSpacePtr space);

std::string render(const ScalarMatrix& m);
std::string render(const PolyMatrix& m, const Presentation& p);

// The 4x4 braid matrix in the basis (11, 12, 21, 22).
ScalarMatrix r_hat();
// Plain swap of tensor factors.
ScalarMatrix permutation_matrix();
// e_a ox e_b -> q^(t(a) t(b)) e_b ox e_a for basis grades t.
ScalarMatrix graded_permutation(const std::array<int, 2>& grades = {0, 1});

CheckReport p_cube_check(const std::array<int, 2>& grades = {0, 1});
CheckReport hecke_check(const ScalarMatrix& r);
// Plain braid relation; fails on a mismatch.
CheckReport ybe_plain_check(const ScalarMatrix& r);
// Braid relation with the 8x8 embeddings taken through the graded Kronecker rule,
// entry grades of the 4x4 factor t(i)+t(k)-t(j)-t(l). Always a REPORT record.
CheckReport ybe_graded_report(const ScalarMatrix& r, const KronConvention& c);

}  // namespace z3qg

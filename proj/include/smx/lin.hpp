// lin.hpp — complex dense/sparse matrices, Kronecker products, Fourier bases,
// and Hermitian matrix exponentials.

#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace smx::lin {

using cplx = std::complex<double>;
using Vector = Eigen::VectorXcd;
using DenseMatrix = Eigen::MatrixXcd;
using SparseMatrix = Eigen::SparseMatrix<cplx>;
using Triplet = Eigen::Triplet<cplx>;

// Storage boundary: square matrices of dimension >= kDenseLimit are kept sparse.
inline constexpr Eigen::Index kDenseLimit = 1024;

void validate_finite(const Vector& v, const char* what);

// Dense below kDenseLimit, sparse above; both sides expose the same entrywise view.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(DenseMatrix m);
    explicit ComplexMatrix(SparseMatrix m);

    static ComplexMatrix zero(Eigen::Index rows, Eigen::Index cols);
    static ComplexMatrix identity(Eigen::Index n);
    static ComplexMatrix from_triplets(Eigen::Index rows, Eigen::Index cols,
                                       const std::vector<Triplet>& entries);

    Eigen::Index rows() const { return rows_; }
    Eigen::Index cols() const { return cols_; }
    bool is_dense() const { return dense_; }
    bool is_square() const { return rows_ == cols_; }

    cplx coeff(Eigen::Index i, Eigen::Index j) const;

    DenseMatrix dense() const;          // materialize
    const SparseMatrix& sparse() const; // valid only when !is_dense()

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    Vector apply(const Vector& v) const;

    double max_norm() const;            // largest |entry|
    Eigen::Index max_nnz_per_row() const;
    bool is_zero(double tol = 0.0) const;

    // alpha*this + beta*rhs, preserving sparsity when both sides are sparse
    ComplexMatrix linear_combination(cplx alpha, const ComplexMatrix& rhs, cplx beta) const;

    double max_abs_difference(const ComplexMatrix& rhs) const;

private:
    Eigen::Index rows_ = 0, cols_ = 0;
    bool dense_ = true;
    DenseMatrix d_;
    SparseMatrix s_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// h1 = (a + a†)/2, h2 = (a - a†)/(2i); a = h1 + i h2
std::pair<ComplexMatrix, ComplexMatrix> hermitian_split(const ComplexMatrix& a);

// F_M = sum_i |i><i+1| + |M-1><0|  (unitary circulant forward shift)
ComplexMatrix shift_matrix(Eigen::Index m);

struct FourierBasis {
    DenseMatrix phi;        // phi(j,l) = exp(i nu_l x_j) on the uniform grid
    Eigen::VectorXd freqs;  // nu_l = 2 pi (l - n/2 - 1)/length, l = 1..n
    double length = 0.0;

    DenseMatrix inverse() const { return phi.adjoint() / static_cast<double>(phi.rows()); }
};

FourierBasis fourier_basis(Eigen::Index n, double length);

// In-place transforms between nodal values and the fourier_basis coefficients
// (radix-2 fast path, dense multiply otherwise).
void to_coefficients(const FourierBasis& basis, Vector& v);
void from_coefficients(const FourierBasis& basis, Vector& v);

// Prepared application of e^{-iHt} for Hermitian H. Splits the sparsity graph
// into connected components and eigendecomposes each block once.
class HermitianPropagator {
public:
    explicit HermitianPropagator(const ComplexMatrix& h, double hermiticity_tol = 1e-10);

    Eigen::Index dim() const { return dim_; }
    void apply_inplace(double t, Vector& v) const;
    Vector apply(double t, const Vector& v) const;

private:
    struct Block {
        std::vector<Eigen::Index> index;
        DenseMatrix vectors;
        Eigen::VectorXd values;
    };
    Eigen::Index dim_ = 0;
    std::vector<Block> blocks_;
};

// e^{-i h t} v for Hermitian h (validated to hermiticity_tol in max-norm).
Vector expm_apply(const ComplexMatrix& h, double t, const Vector& v,
                  double hermiticity_tol = 1e-10);

// LAPACK-backed Hermitian eigendecomposition; `a` is replaced by its eigenvectors.
void hermitian_eigendecompose(DenseMatrix& a, Eigen::VectorXd& values);

}  // namespace smx::lin

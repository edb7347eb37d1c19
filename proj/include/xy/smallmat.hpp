// Dense complex 2x2 / 4x4 matrix arithmetic and decompositions.
// Everything here is stack-allocated and exact-dimension checked; these
// routines back all physics code and the brute-force cross checks.
#pragma once

#include <array>
#include <complex>
#include <vector>

namespace xy {

using cplx = std::complex<double>;
using Vec2 = std::array<cplx, 2>;
using Vec4 = std::array<cplx, 4>;

class CMat {
public:
    CMat() : n_(0) { e_.fill(cplx{}); }
    explicit CMat(int n);
    static CMat identity(int n);

    int dim() const { return n_; }

    cplx& operator()(int i, int j) { return e_[i * n_ + j]; }
    const cplx& operator()(int i, int j) const { return e_[i * n_ + j]; }

    CMat& operator+=(const CMat& o);
    CMat& operator-=(const CMat& o);
    CMat& operator*=(cplx s);

private:
    int n_;
    std::array<cplx, 16> e_;
};

CMat operator+(CMat a, const CMat& b);
CMat operator-(CMat a, const CMat& b);
CMat operator*(cplx s, CMat a);
CMat operator*(double s, CMat a);
CMat operator*(const CMat& a, const CMat& b);

CMat adjoint(const CMat& a);
CMat conjugate(const CMat& a);
CMat transpose(const CMat& a);
cplx trace(const CMat& a);
double max_abs(const CMat& a);
double inf_norm(const CMat& a);   // max row sum of |entries|
bool is_hermitian(const CMat& a, double tol);

/// Pauli matrices sigma^0..sigma^3 (identity, x, y, z).
const CMat& pauli(int i);

/// Tensor product of two 2x2 matrices, row-major qubit order (a acts on
/// the left/first qubit).
CMat kron(const CMat& a, const CMat& b);

CMat outer(const Vec4& u, const Vec4& v);            // |u><v|
cplx qform(const Vec4& u, const CMat& a, const Vec4& v);  // <u|A|v>

struct EigenDecomposition {
    std::vector<double> values;  // descending
    CMat vectors;                // columns are the eigenvectors
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix. Off-diagonal
/// sweep threshold 1e-14 relative to the largest input entry.
EigenDecomposition eig_hermitian(const CMat& a);

/// Matrix exponential via scaling-and-squaring with a Taylor core
/// (argument scaled below 0.5 in the infinity norm).
CMat expm(const CMat& a);

/// Singular values, descending, via one-sided Jacobi. Retains high
/// relative accuracy for graded matrices, which the entanglement code
/// depends on.
std::vector<double> singular_values(const CMat& a);

double trace_norm_hermitian(const CMat& a);
double trace_distance(const CMat& a, const CMat& b);  // (1/2)||a-b||_1

}  // namespace xy

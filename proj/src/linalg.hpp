// Part of the qmlc project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#ifndef QMLC_LINALG_HPP
#define QMLC_LINALG_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace qml::linalg {

    using Complex = std::complex<double>;

    /// Dense row-major complex matrix. Values are immutable by convention
    /// once built; all operations return fresh matrices.
    class CMatrix {
       public:
        CMatrix() = default;
        CMatrix(std::size_t rows, std::size_t cols)
            : m_rows(rows), m_cols(cols), m_data(rows * cols, Complex(0, 0)) {}

        static CMatrix identity(std::size_t n);
        /// Basis column vector e_k of dimension n.
        static CMatrix basisColumn(std::size_t n, std::size_t k);

        std::size_t rows() const { return m_rows; }
        std::size_t cols() const { return m_cols; }

        Complex& at(std::size_t r, std::size_t c) { return m_data[r * m_cols + c]; }
        const Complex& at(std::size_t r, std::size_t c) const { return m_data[r * m_cols + c]; }

        const std::vector<Complex>& data() const { return m_data; }

        CMatrix adjoint() const;
        CMatrix transpose() const;
        CMatrix conj() const;
        Complex trace() const;
        CMatrix scaled(Complex factor) const;

        bool sameShape(const CMatrix& other) const {
            return m_rows == other.m_rows && m_cols == other.m_cols;
        }

       private:
        std::size_t m_rows = 0;
        std::size_t m_cols = 0;
        std::vector<Complex> m_data;
    };

    /// Standard product; throws SizeMismatch on shape disagreement.
    CMatrix mul(const CMatrix& a, const CMatrix& b);
    CMatrix add(const CMatrix& a, const CMatrix& b);
    CMatrix sub(const CMatrix& a, const CMatrix& b);

    /// Kronecker product. With the wire-0-most-significant convention the
    /// left factor acts on the more significant qubits.
    CMatrix kron(const CMatrix& a, const CMatrix& b);

    /// Traces out the trailing `drop` qubits of a 2^(keep+drop) square matrix.
    CMatrix partialTraceLast(const CMatrix& rho, std::size_t keep, std::size_t drop);

    /// Max absolute entry (infinity norm over entries).
    double maxAbs(const CMatrix& a);
    double maxAbsDiff(const CMatrix& a, const CMatrix& b);

    bool isUnitary(const CMatrix& u, double tol);

    /// True when a == phase * b for some unit-modulus phase, entrywise
    /// within tol. Zero matrices compare equal to zero matrices only.
    bool equalUpToPhase(const CMatrix& a, const CMatrix& b, double tol);

    /// Column-stacking vectorization of a matrix (Fortran order).
    CMatrix vectorize(const CMatrix& a);
    CMatrix devectorize(const CMatrix& v, std::size_t rows, std::size_t cols);

    /// 2x2 helpers used throughout the gate layer.
    CMatrix mat2(Complex a00, Complex a01, Complex a10, Complex a11);
    CMatrix pauliX();
    CMatrix hadamard();

}  // namespace qml::linalg

#endif

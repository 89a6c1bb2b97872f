// Part of the qmlc project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "linalg.hpp"

#include <algorithm>
#include <cmath>

#include "diag.hpp"

namespace qml::linalg {

    CMatrix CMatrix::identity(std::size_t n) {
        CMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, i) = Complex(1, 0);
        return m;
    }

    CMatrix CMatrix::basisColumn(std::size_t n, std::size_t k) {
        CMatrix m(n, 1);
        m.at(k, 0) = Complex(1, 0);
        return m;
    }

    CMatrix CMatrix::adjoint() const {
        CMatrix out(m_cols, m_rows);
        for (std::size_t r = 0; r < m_rows; ++r)
            for (std::size_t c = 0; c < m_cols; ++c)
                out.at(c, r) = std::conj(at(r, c));
        return out;
    }

    CMatrix CMatrix::transpose() const {
        CMatrix out(m_cols, m_rows);
        for (std::size_t r = 0; r < m_rows; ++r)
            for (std::size_t c = 0; c < m_cols; ++c)
                out.at(c, r) = at(r, c);
        return out;
    }

    CMatrix CMatrix::conj() const {
        CMatrix out(m_rows, m_cols);
        for (std::size_t r = 0; r < m_rows; ++r)
            for (std::size_t c = 0; c < m_cols; ++c)
                out.at(r, c) = std::conj(at(r, c));
        return out;
    }

    Complex CMatrix::trace() const {
        Complex t(0, 0);
        for (std::size_t i = 0; i < std::min(m_rows, m_cols); ++i)
            t += at(i, i);
        return t;
    }

    CMatrix CMatrix::scaled(Complex factor) const {
        CMatrix out(m_rows, m_cols);
        for (std::size_t i = 0; i < m_data.size(); ++i)
            out.m_data[i] = m_data[i] * factor;
        return out;
    }

    CMatrix mul(const CMatrix& a, const CMatrix& b) {
        if (a.cols() != b.rows())
            throw Error(ErrorKind::SizeMismatch, {},
                        "matrix product shape mismatch: " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
        CMatrix out(a.rows(), b.cols());
        for (std::size_t r = 0; r < a.rows(); ++r) {
            for (std::size_t k = 0; k < a.cols(); ++k) {
                const Complex v = a.at(r, k);
                if (v == Complex(0, 0))
                    continue;
                for (std::size_t c = 0; c < b.cols(); ++c)
                    out.at(r, c) += v * b.at(k, c);
            }
        }
        return out;
    }

    CMatrix add(const CMatrix& a, const CMatrix& b) {
        if (!a.sameShape(b))
            throw Error(ErrorKind::SizeMismatch, {}, "matrix sum shape mismatch");
        CMatrix out(a.rows(), a.cols());
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t c = 0; c < a.cols(); ++c)
                out.at(r, c) = a.at(r, c) + b.at(r, c);
        return out;
    }

    CMatrix sub(const CMatrix& a, const CMatrix& b) {
        if (!a.sameShape(b))
            throw Error(ErrorKind::SizeMismatch, {}, "matrix difference shape mismatch");
        CMatrix out(a.rows(), a.cols());
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t c = 0; c < a.cols(); ++c)
                out.at(r, c) = a.at(r, c) - b.at(r, c);
        return out;
    }

    CMatrix kron(const CMatrix& a, const CMatrix& b) {
        CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
        for (std::size_t ar = 0; ar < a.rows(); ++ar)
            for (std::size_t ac = 0; ac < a.cols(); ++ac) {
                const Complex v = a.at(ar, ac);
                if (v == Complex(0, 0))
                    continue;
                for (std::size_t br = 0; br < b.rows(); ++br)
                    for (std::size_t bc = 0; bc < b.cols(); ++bc)
                        out.at(ar * b.rows() + br, ac * b.cols() + bc) = v * b.at(br, bc);
            }
        return out;
    }

    CMatrix partialTraceLast(const CMatrix& rho, std::size_t keep, std::size_t drop) {
        const std::size_t dim = std::size_t(1) << (keep + drop);
        if (rho.rows() != dim || rho.cols() != dim)
            throw Error(ErrorKind::SizeMismatch, {},
                        "partial trace expects a 2^(keep+drop) square matrix");
        const std::size_t dk = std::size_t(1) << keep;
        const std::size_t dd = std::size_t(1) << drop;
        CMatrix out(dk, dk);
        for (std::size_t r = 0; r < dk; ++r)
            for (std::size_t c = 0; c < dk; ++c) {
                Complex sum(0, 0);
                for (std::size_t k = 0; k < dd; ++k)
                    sum += rho.at(r * dd + k, c * dd + k);
                out.at(r, c) = sum;
            }
        return out;
    }

    double maxAbs(const CMatrix& a) {
        double m = 0.0;
        for (const auto& v : a.data())
            m = std::max(m, std::abs(v));
        return m;
    }

    double maxAbsDiff(const CMatrix& a, const CMatrix& b) {
        if (!a.sameShape(b))
            throw Error(ErrorKind::SizeMismatch, {}, "matrix comparison shape mismatch");
        double m = 0.0;
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t c = 0; c < a.cols(); ++c)
                m = std::max(m, std::abs(a.at(r, c) - b.at(r, c)));
        return m;
    }

    bool isUnitary(const CMatrix& u, double tol) {
        if (u.rows() != u.cols())
            return false;
        return maxAbsDiff(mul(u.adjoint(), u), CMatrix::identity(u.rows())) < tol;
    }

    bool equalUpToPhase(const CMatrix& a, const CMatrix& b, double tol) {
        if (!a.sameShape(b))
            return false;
        // Anchor the phase at the largest entry of a.
        std::size_t br = 0, bc = 0;
        double best = -1.0;
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t c = 0; c < a.cols(); ++c)
                if (std::abs(a.at(r, c)) > best) {
                    best = std::abs(a.at(r, c));
                    br = r;
                    bc = c;
                }
        if (best < tol)
            return maxAbs(b) < tol;
        if (std::abs(b.at(br, bc)) < tol)
            return false;
        Complex phase = b.at(br, bc) / a.at(br, bc);
        phase /= std::abs(phase);
        return maxAbsDiff(a.scaled(phase), b) < tol;
    }

    CMatrix vectorize(const CMatrix& a) {
        CMatrix out(a.rows() * a.cols(), 1);
        for (std::size_t c = 0; c < a.cols(); ++c)
            for (std::size_t r = 0; r < a.rows(); ++r)
                out.at(c * a.rows() + r, 0) = a.at(r, c);
        return out;
    }

    CMatrix devectorize(const CMatrix& v, std::size_t rows, std::size_t cols) {
        if (v.rows() != rows * cols || v.cols() != 1)
            throw Error(ErrorKind::SizeMismatch, {}, "devectorize shape mismatch");
        CMatrix out(rows, cols);
        for (std::size_t c = 0; c < cols; ++c)
            for (std::size_t r = 0; r < rows; ++r)
                out.at(r, c) = v.at(c * rows + r, 0);
        return out;
    }

    CMatrix mat2(Complex a00, Complex a01, Complex a10, Complex a11) {
        CMatrix m(2, 2);
        m.at(0, 0) = a00;
        m.at(0, 1) = a01;
        m.at(1, 0) = a10;
        m.at(1, 1) = a11;
        return m;
    }

    CMatrix pauliX() { return mat2(0, 1, 1, 0); }

    CMatrix hadamard() {
        const double s = 1.0 / std::sqrt(2.0);
        return mat2(s, s, s, -s);
    }

}  // namespace qml::linalg

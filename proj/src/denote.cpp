// Part of the qmlc project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "denote.hpp"

#include "diag.hpp"

namespace qml::denote {

    namespace {

        using circuit::Circuit;
        using circuit::ControlledGate;
        using circuit::Gate;
        using circuit::IdGate;
        using circuit::PermuteGate;
        using circuit::Polarity;
        using circuit::SingleGate;
        using linalg::Complex;

        // wire 0 is the most significant bit of the basis index
        std::size_t bitOf(std::size_t index, std::size_t wire, std::size_t width) {
            return (index >> (width - 1 - wire)) & 1u;
        }

        CMatrix gateUnitary(const Gate& g, std::size_t width);

        CMatrix sequenceUnitary(const Circuit& c) {
            const std::size_t dim = std::size_t(1) << c.width;
            CMatrix u = CMatrix::identity(dim);
            for (const auto& g : c.gates)
                u = linalg::mul(gateUnitary(g, c.width), u);
            return u;
        }

        CMatrix gateUnitary(const Gate& g, std::size_t width) {
            const std::size_t dim = std::size_t(1) << width;
            if (const auto* s = std::get_if<SingleGate>(&g.op)) {
                CMatrix left = CMatrix::identity(std::size_t(1) << s->wire);
                CMatrix right = CMatrix::identity(std::size_t(1) << (width - 1 - s->wire));
                return linalg::kron(linalg::kron(left, s->u), right);
            }
            if (const auto* ctl = std::get_if<ControlledGate>(&g.op)) {
                CMatrix body = sequenceUnitary(*ctl->body);
                const std::size_t active = ctl->polarity == Polarity::Pos ? 1 : 0;
                CMatrix u(dim, dim);
                for (std::size_t c = 0; c < dim; ++c) {
                    if (bitOf(c, ctl->control, width) == active) {
                        for (std::size_t r = 0; r < dim; ++r)
                            u.at(r, c) = body.at(r, c);
                    } else {
                        u.at(c, c) = Complex(1, 0);
                    }
                }
                return u;
            }
            if (const auto* p = std::get_if<PermuteGate>(&g.op)) {
                CMatrix u(dim, dim);
                for (std::size_t i = 0; i < dim; ++i) {
                    std::size_t j = 0;
                    for (std::size_t w = 0; w < width; ++w)
                        if (bitOf(i, w, width))
                            j |= std::size_t(1) << (width - 1 - p->perm[w]);
                    u.at(j, i) = Complex(1, 0);
                }
                return u;
            }
            (void)std::get<IdGate>(g.op);
            return CMatrix::identity(dim);
        }

    }  // namespace

    CMatrix circuitToUnitary(const circuit::Circuit& c, std::size_t cap) {
        if (c.width > cap)
            throw Error(ErrorKind::CapExceeded, {},
                        "circuit width " + std::to_string(c.width) +
                            " exceeds the qubit cap " + std::to_string(cap));
        return sequenceUnitary(c);
    }

    UnitaryResult runM(const FqcMorphism& m, std::size_t cap) {
        return UnitaryResult{m.heap, m.garbage, circuitToUnitary(m.body, cap)};
    }

    Isometry runI(const FqcMorphism& m, std::size_t cap) {
        CMatrix u = circuitToUnitary(m.body, cap);
        const std::size_t dimIn = std::size_t(1) << m.inputSize;
        const std::size_t heapDim = std::size_t(1) << m.heap;
        CMatrix iso(u.rows(), dimIn);
        // inputs are the leading wires, so heap contributes the low bits
        for (std::size_t b = 0; b < dimIn; ++b)
            for (std::size_t r = 0; r < u.rows(); ++r)
                iso.at(r, b) = u.at(r, b * heapDim);
        return Isometry{std::move(iso), m.garbage};
    }

    SuperOp superFromIsometry(const Isometry& iso, std::size_t inputSize,
                              std::size_t outputSize) {
        const std::size_t dimIn = std::size_t(1) << inputSize;
        const std::size_t dimOut = std::size_t(1) << outputSize;
        const std::size_t dimG = std::size_t(1) << iso.garbage;
        if (iso.matrix.rows() != dimOut * dimG || iso.matrix.cols() != dimIn)
            throw Error(ErrorKind::SizeMismatch, {}, "isometry shape mismatch");
        CMatrix s(dimOut * dimOut, dimIn * dimIn);
        for (std::size_t k = 0; k < dimG; ++k) {
            CMatrix kraus(dimOut, dimIn);
            for (std::size_t o = 0; o < dimOut; ++o)
                for (std::size_t i = 0; i < dimIn; ++i)
                    kraus.at(o, i) = iso.matrix.at(o * dimG + k, i);
            s = linalg::add(s, linalg::kron(kraus.conj(), kraus));
        }
        return SuperOp{std::move(s), inputSize, outputSize};
    }

    SuperOp runS(const FqcMorphism& m, std::size_t cap) {
        if (m.width() > cap)
            throw Error(ErrorKind::CapExceeded, {},
                        "circuit width " + std::to_string(m.width()) +
                            " exceeds the superoperator cap " + std::to_string(cap));
        Isometry iso = runI(m, cap);
        return superFromIsometry(iso, m.inputSize, m.outputSize);
    }

    CMatrix SuperOp::apply(const CMatrix& rho) const {
        const std::size_t dimIn = std::size_t(1) << inputSize;
        const std::size_t dimOut = std::size_t(1) << outputSize;
        if (rho.rows() != dimIn || rho.cols() != dimIn)
            throw Error(ErrorKind::SizeMismatch, {}, "density matrix shape mismatch");
        CMatrix out = linalg::mul(matrix, linalg::vectorize(rho));
        return linalg::devectorize(out, dimOut, dimOut);
    }

}  // namespace qml::denote

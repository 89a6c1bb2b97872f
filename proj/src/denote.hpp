// Part of the qmlc project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#ifndef QMLC_DENOTE_HPP
#define QMLC_DENOTE_HPP

#include "circuit.hpp"
#include "linalg.hpp"

namespace qml::denote {

    using circuit::FqcMorphism;
    using linalg::CMatrix;

    inline constexpr std::size_t kDefaultUnitaryCap = 12;
    inline constexpr std::size_t kDefaultSuperCap = 8;

    /// Norm-preserving map V with V†V = I; the trailing `garbage` qubits of
    /// the row index are destined for the partial trace.
    struct Isometry {
        CMatrix matrix;  // 2^(out+garbage) x 2^in
        std::size_t garbage = 0;
    };

    /// Completely positive trace-preserving map materialized on
    /// column-stacking-vectorized density matrices.
    struct SuperOp {
        CMatrix matrix;  // 4^out x 4^in
        std::size_t inputSize = 0;
        std::size_t outputSize = 0;

        CMatrix apply(const CMatrix& rho) const;
    };

    /// Full 2^width unitary of the reversible circuit body.
    CMatrix circuitToUnitary(const circuit::Circuit& c, std::size_t cap = kDefaultUnitaryCap);

    /// Heap and garbage counts plus the raw body unitary (heap left
    /// uninitialised; initialisation is runI's job).
    struct UnitaryResult {
        std::size_t heap = 0;
        std::size_t garbage = 0;
        CMatrix unitary;
    };
    UnitaryResult runM(const FqcMorphism& m, std::size_t cap = kDefaultUnitaryCap);

    /// Restricts the body unitary to heap = |0...0> columns.
    Isometry runI(const FqcMorphism& m, std::size_t cap = kDefaultUnitaryCap);

    /// Initialises heap and traces out garbage: rho -> Tr_g(V rho V†),
    /// materialized as a matrix via the Kraus decomposition induced by the
    /// garbage basis.
    SuperOp runS(const FqcMorphism& m, std::size_t cap = kDefaultSuperCap);

    /// Channel matrix of an isometry followed by tracing its garbage block.
    SuperOp superFromIsometry(const Isometry& iso, std::size_t inputSize,
                              std::size_t outputSize);

}  // namespace qml::denote

#endif

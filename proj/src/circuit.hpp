// Part of the qmlc project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#ifndef QMLC_CIRCUIT_HPP
#define QMLC_CIRCUIT_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "linalg.hpp"

namespace qml::circuit {

    using linalg::CMatrix;

    enum class Polarity { Pos, Neg };

    struct Gate;

    struct Circuit {
        std::size_t width = 0;
        std::vector<Gate> gates;
    };

    /// Arbitrary single-qubit unitary on one wire.
    struct SingleGate {
        std::size_t wire = 0;
        CMatrix u;  // 2x2
    };

    /// Conditional block. The body circuit has the same width as the parent
    /// and must not touch the control wire. Pos fires on |1>, Neg on |0>.
    struct ControlledGate {
        std::size_t control = 0;
        Polarity polarity = Polarity::Pos;
        std::shared_ptr<const Circuit> body;
    };

    /// Wire relocation: the qubit on wire i moves to wire perm[i].
    struct PermuteGate {
        std::vector<std::size_t> perm;
    };

    /// Explicit no-op; the optimizer removes these.
    struct IdGate {
        std::size_t width = 0;
    };

    struct Gate {
        std::variant<SingleGate, ControlledGate, PermuteGate, IdGate> op;
    };

    Gate single(std::size_t wire, CMatrix u);
    Gate controlled(std::size_t control, Polarity polarity, Circuit body);
    Gate permute(std::vector<std::size_t> perm);

    bool isIdentityPerm(const std::vector<std::size_t>& perm);
    std::vector<std::size_t> invertPerm(const std::vector<std::size_t>& perm);
    /// Result of applying `first`, then `second`.
    std::vector<std::size_t> composePerm(const std::vector<std::size_t>& first,
                                         const std::vector<std::size_t>& second);

    /// Checks gate wire bounds, control-disjointness and unitarity of
    /// single-qubit blocks; throws InternalError on violation.
    void validate(const Circuit& c);

    bool circuitEquals(const Circuit& a, const Circuit& b, double tol = 1e-12);

    /// Reversed gate list with adjointed unitaries and inverted permutations.
    Circuit inverse(const Circuit& c);

    /// Collapses identities, fuses neighbouring permutations and cancels
    /// adjacent gate/inverse pairs. Denotation-preserving.
    Circuit optimize(const Circuit& c);

    /// Typed reversible circuit: a morphism from an input context of
    /// `inputSize` qubits to an output of `outputSize` qubits, with `heap`
    /// ancilla wires initialised to |0> and `garbage` wires removed by a
    /// partial trace at the end.
    ///
    /// Wire layout: inputs occupy [0, inputSize) and heap [inputSize, width)
    /// before the body runs; afterwards outputs occupy [0, outputSize) and
    /// garbage [outputSize, width). Always inputSize + heap == outputSize +
    /// garbage == body.width.
    struct FqcMorphism {
        std::size_t inputSize = 0;
        std::size_t outputSize = 0;
        std::size_t heap = 0;
        std::size_t garbage = 0;
        Circuit body;

        std::size_t width() const { return body.width; }
    };

    /// Identity morphism on n qubits.
    FqcMorphism identityMorphism(std::size_t n);
    /// Pure wire relocation (no heap, no garbage).
    FqcMorphism permutationMorphism(std::vector<std::size_t> perm);

    /// Throws InternalError if the wire-conservation invariant fails.
    void validate(const FqcMorphism& m);

    /// Sequential composition: f then g (f.outputSize must equal
    /// g.inputSize). f's garbage bypasses g; heaps and garbage add.
    FqcMorphism compose(const FqcMorphism& f, const FqcMorphism& g);

    /// Side-by-side composition; inputs, outputs, heap and garbage add
    /// componentwise, with regrouping permutations inserted.
    FqcMorphism tensor(const FqcMorphism& f, const FqcMorphism& g);

    /// Optimizes the body in place.
    FqcMorphism optimized(FqcMorphism m);

    /// Shift every wire index by `offset` within a circuit of width
    /// `newWidth` (used to embed sub-circuits).
    Circuit embed(const Circuit& c, std::size_t offset, std::size_t newWidth);

    /// One wire per line, gates in columns; ASCII rendering.
    std::string renderText(const Circuit& c);

}  // namespace qml::circuit

#endif

// Part of the qmlc project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#ifndef QMLC_DIAG_HPP
#define QMLC_DIAG_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qml {

    /// Half-open source range, 1-based line/column of the start position.
    struct Span {
        std::size_t line = 1;
        std::size_t column = 1;
        std::size_t length = 0;
    };

    enum class ErrorKind {
        Lex,
        Parse,
        UnknownVariable,
        UnusedVariable,
        UnknownFunction,
        DuplicateDefinition,
        TypeMismatch,
        BranchTypeMismatch,
        ArityMismatch,
        OrthogonalityFailure,
        NonStrictUnderIfq,
        ZeroAmplitude,
        NestedSup,
        NotClosed,
        SizeMismatch,
        CapExceeded,
        Internal,
    };

    const char* errorKindName(ErrorKind kind);

    /// User-facing failure (bad source, bad request). Internal invariant
    /// violations use InternalError below so drivers can exit differently.
    class Error : public std::runtime_error {
       public:
        Error(ErrorKind kind, Span span, const std::string& message)
            : std::runtime_error(message), m_kind(kind), m_span(span) {}

        ErrorKind kind() const { return m_kind; }
        const Span& span() const { return m_span; }

        /// "file:line:col: error: message" (file may be empty).
        std::string render(const std::string& file) const;

       private:
        ErrorKind m_kind;
        Span m_span;
    };

    class InternalError : public std::logic_error {
       public:
        explicit InternalError(const std::string& message) : std::logic_error(message) {}
    };

}  // namespace qml

#endif

// Part of the qmlc project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "diag.hpp"

namespace qml {

    const char* errorKindName(ErrorKind kind) {
        switch (kind) {
            case ErrorKind::Lex: return "LexError";
            case ErrorKind::Parse: return "ParseError";
            case ErrorKind::UnknownVariable: return "UnknownVariable";
            case ErrorKind::UnusedVariable: return "UnusedVariable";
            case ErrorKind::UnknownFunction: return "UnknownFunction";
            case ErrorKind::DuplicateDefinition: return "DuplicateDefinition";
            case ErrorKind::TypeMismatch: return "TypeMismatch";
            case ErrorKind::BranchTypeMismatch: return "BranchTypeMismatch";
            case ErrorKind::ArityMismatch: return "ArityMismatch";
            case ErrorKind::OrthogonalityFailure: return "OrthogonalityFailure";
            case ErrorKind::NonStrictUnderIfq: return "NonStrictUnderIfq";
            case ErrorKind::ZeroAmplitude: return "ZeroAmplitude";
            case ErrorKind::NestedSup: return "NestedSup";
            case ErrorKind::NotClosed: return "NotClosed";
            case ErrorKind::SizeMismatch: return "SizeMismatch";
            case ErrorKind::CapExceeded: return "CapExceeded";
            case ErrorKind::Internal: return "Internal";
        }
        return "Error";
    }

    std::string Error::render(const std::string& file) const {
        std::string out;
        if (!file.empty())
            out += file + ":";
        out += std::to_string(m_span.line) + ":" + std::to_string(m_span.column);
        out += ": error: ";
        out += what();
        out += " [";
        out += errorKindName(m_kind);
        out += "]";
        return out;
    }

}  // namespace qml

// Part of the qmlc project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#ifndef QMLC_AST_HPP
#define QMLC_AST_HPP

#include <complex>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "diag.hpp"

namespace qml::ast {

    using Amplitude = std::complex<double>;

    /// QML type: Q1 (unit), Q2 (qubit), or a tensor pair. Structurally
    /// shared and immutable; size() is the qubit count.
    class QType {
       public:
        enum class Kind { Unit, Qubit, Tensor };

        static QType unit();
        static QType qubit();
        static QType tensor(const QType& left, const QType& right);

        Kind kind() const { return m_node->kind; }
        bool isUnit() const { return kind() == Kind::Unit; }
        bool isQubit() const { return kind() == Kind::Qubit; }
        bool isTensor() const { return kind() == Kind::Tensor; }

        QType left() const;
        QType right() const;

        /// Number of qubits: 0, 1, or the sum of the components.
        int size() const { return m_node->size; }

        bool operator==(const QType& other) const;
        bool operator!=(const QType& other) const { return !(*this == other); }

        std::string str() const;

       private:
        struct Node {
            Kind kind;
            std::shared_ptr<const Node> left, right;
            int size;
        };
        explicit QType(std::shared_ptr<const Node> node) : m_node(std::move(node)) {}
        std::shared_ptr<const Node> m_node;
    };

    struct Term;
    using TermPtr = std::unique_ptr<Term>;

    struct VarTerm {
        std::string name;
        std::vector<std::string> weakened;
    };
    struct UnitTerm {};
    struct PairTerm {
        TermPtr fst, snd;
    };
    // let x = bound in body
    struct LetTerm {
        std::string var;
        TermPtr bound, body;
    };
    // let (x, y) = bound in body
    struct LetPairTerm {
        std::string fst, snd;
        TermPtr bound, body;
    };
    // quantum == true is the measurement-free conditional (ifq)
    struct IfTerm {
        bool quantum;
        TermPtr cond, thenBranch, elseBranch;
    };
    // qtrue / qfalse with optional weakening vector
    struct LitTerm {
        bool value;
        std::vector<std::string> weakened;
    };
    struct ScaleTerm {
        Amplitude amp;
        TermPtr body;
    };
    struct SupTerm {
        TermPtr left, right;
    };
    struct AppTerm {
        std::string fn;
        std::vector<TermPtr> args;
    };

    using TermNode = std::variant<VarTerm, UnitTerm, PairTerm, LetTerm, LetPairTerm, IfTerm,
                                  LitTerm, ScaleTerm, SupTerm, AppTerm>;

    struct Term {
        Span span;
        TermNode node;
    };

    TermPtr makeTerm(Span span, TermNode node);
    TermPtr cloneTerm(const Term& t);
    /// Structural equality; amplitudes compared within tol.
    bool termEquals(const Term& a, const Term& b, double tol = 1e-12);

    struct FunDef {
        std::string name;
        std::vector<std::pair<std::string, QType>> params;
        QType result = QType::unit();
        TermPtr body;
        Span span;
    };

    struct Program {
        std::vector<FunDef> defs;
    };

    // ---- concrete syntax ----

    enum class TokenType {
        Ident,
        Complex,     // numeric literal, possibly with an i suffix
        KwQTrue,
        KwQFalse,
        KwIf,
        KwIfq,
        KwThen,
        KwElse,
        KwLet,
        KwIn,
        KwQ1,
        KwQ2,
        LParen,
        RParen,
        LBracket,
        RBracket,
        Comma,
        Colon,
        Equals,
        Star,
        Plus,
        Minus,
        Caret,
        Eof,
    };

    struct Token {
        TokenType type;
        Span span;
        std::string text;
        Amplitude value{};  // Complex tokens only
    };

    /// Tokenize; `--` comments and whitespace are skipped. Throws
    /// Error(ErrorKind::Lex) on unexpected characters.
    std::vector<Token> lex(const std::string& source);

    /// Parse a whole program (a sequence of function definitions).
    Program parse(const std::vector<Token>& tokens);
    Program parseProgram(const std::string& source);

    /// Pretty-print; parse(lex(render(p))) is structurally equal to p.
    std::string render(const Program& p);
    std::string renderTerm(const Term& t);

}  // namespace qml::ast

#endif

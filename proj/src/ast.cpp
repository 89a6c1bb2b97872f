// Part of the qmlc project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "ast.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <sstream>

namespace qml::ast {

    // ---- QType ----

    QType QType::unit() {
        static auto node = std::make_shared<const Node>(Node{Kind::Unit, nullptr, nullptr, 0});
        return QType(node);
    }

    QType QType::qubit() {
        static auto node = std::make_shared<const Node>(Node{Kind::Qubit, nullptr, nullptr, 1});
        return QType(node);
    }

    QType QType::tensor(const QType& left, const QType& right) {
        auto node = std::make_shared<const Node>(
            Node{Kind::Tensor, left.m_node, right.m_node, left.size() + right.size()});
        return QType(node);
    }

    QType QType::left() const {
        if (!isTensor())
            throw InternalError("QType::left on non-tensor");
        return QType(m_node->left);
    }

    QType QType::right() const {
        if (!isTensor())
            throw InternalError("QType::right on non-tensor");
        return QType(m_node->right);
    }

    bool QType::operator==(const QType& other) const {
        if (m_node == other.m_node)
            return true;
        if (kind() != other.kind() || size() != other.size())
            return false;
        if (!isTensor())
            return true;
        return left() == other.left() && right() == other.right();
    }

    std::string QType::str() const {
        switch (kind()) {
            case Kind::Unit: return "Q1";
            case Kind::Qubit: return "Q2";
            case Kind::Tensor: {
                // '*' is right-associative, so only left tensors need parens
                std::string l = left().isTensor() ? "(" + left().str() + ")" : left().str();
                return l + "*" + right().str();
            }
        }
        return "?";
    }

    // ---- terms ----

    TermPtr makeTerm(Span span, TermNode node) {
        auto t = std::make_unique<Term>();
        t->span = span;
        t->node = std::move(node);
        return t;
    }

    TermPtr cloneTerm(const Term& t) {
        TermNode node = std::visit(
            [](const auto& n) -> TermNode {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, PairTerm>)
                    return PairTerm{cloneTerm(*n.fst), cloneTerm(*n.snd)};
                else if constexpr (std::is_same_v<T, LetTerm>)
                    return LetTerm{n.var, cloneTerm(*n.bound), cloneTerm(*n.body)};
                else if constexpr (std::is_same_v<T, LetPairTerm>)
                    return LetPairTerm{n.fst, n.snd, cloneTerm(*n.bound), cloneTerm(*n.body)};
                else if constexpr (std::is_same_v<T, IfTerm>)
                    return IfTerm{n.quantum, cloneTerm(*n.cond), cloneTerm(*n.thenBranch),
                                  cloneTerm(*n.elseBranch)};
                else if constexpr (std::is_same_v<T, ScaleTerm>)
                    return ScaleTerm{n.amp, cloneTerm(*n.body)};
                else if constexpr (std::is_same_v<T, SupTerm>)
                    return SupTerm{cloneTerm(*n.left), cloneTerm(*n.right)};
                else if constexpr (std::is_same_v<T, AppTerm>) {
                    AppTerm out{n.fn, {}};
                    for (const auto& a : n.args)
                        out.args.push_back(cloneTerm(*a));
                    return out;
                } else
                    return n;
            },
            t.node);
        return makeTerm(t.span, std::move(node));
    }

    bool termEquals(const Term& a, const Term& b, double tol) {
        if (a.node.index() != b.node.index())
            return false;
        return std::visit(
            [&](const auto& na) -> bool {
                using T = std::decay_t<decltype(na)>;
                const auto& nb = std::get<T>(b.node);
                if constexpr (std::is_same_v<T, VarTerm>)
                    return na.name == nb.name && na.weakened == nb.weakened;
                else if constexpr (std::is_same_v<T, UnitTerm>)
                    return true;
                else if constexpr (std::is_same_v<T, PairTerm>)
                    return termEquals(*na.fst, *nb.fst, tol) && termEquals(*na.snd, *nb.snd, tol);
                else if constexpr (std::is_same_v<T, LetTerm>)
                    return na.var == nb.var && termEquals(*na.bound, *nb.bound, tol) &&
                           termEquals(*na.body, *nb.body, tol);
                else if constexpr (std::is_same_v<T, LetPairTerm>)
                    return na.fst == nb.fst && na.snd == nb.snd &&
                           termEquals(*na.bound, *nb.bound, tol) &&
                           termEquals(*na.body, *nb.body, tol);
                else if constexpr (std::is_same_v<T, IfTerm>)
                    return na.quantum == nb.quantum && termEquals(*na.cond, *nb.cond, tol) &&
                           termEquals(*na.thenBranch, *nb.thenBranch, tol) &&
                           termEquals(*na.elseBranch, *nb.elseBranch, tol);
                else if constexpr (std::is_same_v<T, LitTerm>)
                    return na.value == nb.value && na.weakened == nb.weakened;
                else if constexpr (std::is_same_v<T, ScaleTerm>)
                    return std::abs(na.amp - nb.amp) <= tol && termEquals(*na.body, *nb.body, tol);
                else if constexpr (std::is_same_v<T, SupTerm>)
                    return termEquals(*na.left, *nb.left, tol) &&
                           termEquals(*na.right, *nb.right, tol);
                else if constexpr (std::is_same_v<T, AppTerm>) {
                    if (na.fn != nb.fn || na.args.size() != nb.args.size())
                        return false;
                    for (std::size_t i = 0; i < na.args.size(); ++i)
                        if (!termEquals(*na.args[i], *nb.args[i], tol))
                            return false;
                    return true;
                } else
                    return false;
            },
            a.node);
    }

    // ---- lexer ----

    namespace {

        bool isIdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
        bool isIdentBody(char c) {
            return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
        }

        struct Lexer {
            const std::string& src;
            std::size_t pos = 0;
            std::size_t line = 1;
            std::size_t col = 1;

            char peek(std::size_t off = 0) const {
                return pos + off < src.size() ? src[pos + off] : '\0';
            }

            void advance() {
                if (pos < src.size()) {
                    if (src[pos] == '\n') {
                        ++line;
                        col = 1;
                    } else {
                        ++col;
                    }
                    ++pos;
                }
            }

            void skipTrivia() {
                for (;;) {
                    char c = peek();
                    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                        advance();
                    } else if (c == '-' && peek(1) == '-') {
                        while (peek() != '\n' && peek() != '\0')
                            advance();
                    } else {
                        break;
                    }
                }
            }

            Token make(TokenType type, Span span, std::string text) {
                return Token{type, span, std::move(text), Amplitude{}};
            }
        };

        TokenType keywordType(const std::string& word) {
            if (word == "qtrue") return TokenType::KwQTrue;
            if (word == "qfalse") return TokenType::KwQFalse;
            if (word == "if") return TokenType::KwIf;
            if (word == "ifq") return TokenType::KwIfq;
            if (word == "then") return TokenType::KwThen;
            if (word == "else") return TokenType::KwElse;
            if (word == "let") return TokenType::KwLet;
            if (word == "in") return TokenType::KwIn;
            if (word == "Q1") return TokenType::KwQ1;
            if (word == "Q2") return TokenType::KwQ2;
            return TokenType::Ident;
        }

    }  // namespace

    std::vector<Token> lex(const std::string& source) {
        Lexer lx{source};
        std::vector<Token> out;
        for (;;) {
            lx.skipTrivia();
            Span span{lx.line, lx.col, 1};
            char c = lx.peek();
            if (c == '\0') {
                out.push_back(lx.make(TokenType::Eof, span, ""));
                break;
            }
            if (isIdentStart(c)) {
                std::string word;
                while (isIdentBody(lx.peek())) {
                    word += lx.peek();
                    lx.advance();
                }
                span.length = word.size();
                out.push_back(lx.make(keywordType(word), span, word));
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num;
                while (std::isdigit(static_cast<unsigned char>(lx.peek())))
                    num += lx.peek(), lx.advance();
                if (lx.peek() == '.' && std::isdigit(static_cast<unsigned char>(lx.peek(1)))) {
                    num += '.';
                    lx.advance();
                    while (std::isdigit(static_cast<unsigned char>(lx.peek())))
                        num += lx.peek(), lx.advance();
                }
                if ((lx.peek() == 'e' || lx.peek() == 'E') &&
                    (std::isdigit(static_cast<unsigned char>(lx.peek(1))) ||
                     ((lx.peek(1) == '+' || lx.peek(1) == '-') &&
                      std::isdigit(static_cast<unsigned char>(lx.peek(2)))))) {
                    num += lx.peek();
                    lx.advance();
                    if (lx.peek() == '+' || lx.peek() == '-')
                        num += lx.peek(), lx.advance();
                    while (std::isdigit(static_cast<unsigned char>(lx.peek())))
                        num += lx.peek(), lx.advance();
                }
                bool imaginary = false;
                // 'i' suffix marks an imaginary literal unless it starts an identifier
                if (lx.peek() == 'i' && !isIdentBody(lx.peek(1))) {
                    imaginary = true;
                    lx.advance();
                }
                double v = std::stod(num);
                if (!std::isfinite(v))
                    throw Error(ErrorKind::Lex, span, "numeric literal out of range");
                Token tok = lx.make(TokenType::Complex, span, num);
                tok.span.length = num.size() + (imaginary ? 1 : 0);
                tok.value = imaginary ? Amplitude(0, v) : Amplitude(v, 0);
                out.push_back(tok);
                continue;
            }
            TokenType type;
            switch (c) {
                case '(': type = TokenType::LParen; break;
                case ')': type = TokenType::RParen; break;
                case '[': type = TokenType::LBracket; break;
                case ']': type = TokenType::RBracket; break;
                case ',': type = TokenType::Comma; break;
                case ':': type = TokenType::Colon; break;
                case '=': type = TokenType::Equals; break;
                case '*': type = TokenType::Star; break;
                case '+': type = TokenType::Plus; break;
                case '-': type = TokenType::Minus; break;
                case '^': type = TokenType::Caret; break;
                default:
                    throw Error(ErrorKind::Lex, span,
                                std::string("unexpected character '") + c + "'");
            }
            lx.advance();
            out.push_back(lx.make(type, span, std::string(1, c)));
        }
        return out;
    }

    // ---- parser ----

    namespace {

        struct Parser {
            const std::vector<Token>& tokens;
            std::size_t current = 0;

            const Token& peek(std::size_t off = 0) const {
                std::size_t i = std::min(current + off, tokens.size() - 1);
                return tokens[i];
            }
            const Token& advance() {
                const Token& t = tokens[current];
                if (current + 1 < tokens.size())
                    ++current;
                return t;
            }
            bool check(TokenType type, std::size_t off = 0) const { return peek(off).type == type; }
            bool match(TokenType type) {
                if (check(type)) {
                    advance();
                    return true;
                }
                return false;
            }
            const Token& expect(TokenType type, const std::string& what) {
                if (!check(type))
                    fail("expected " + what);
                return advance();
            }
            [[noreturn]] void fail(const std::string& message) const {
                const Token& t = peek();
                std::string found = t.type == TokenType::Eof ? "end of input" : "'" + t.text + "'";
                throw Error(ErrorKind::Parse, t.span, message + ", found " + found);
            }

            QType parseType() {
                QType left = parseAtomType();
                if (match(TokenType::Star))
                    return QType::tensor(left, parseType());
                return left;
            }

            QType parseAtomType() {
                if (match(TokenType::KwQ1))
                    return QType::unit();
                if (match(TokenType::KwQ2))
                    return QType::qubit();
                if (match(TokenType::LParen)) {
                    QType t = parseType();
                    expect(TokenType::RParen, "')' in type");
                    return t;
                }
                fail("expected a type (Q1, Q2 or parenthesized tensor)");
            }

            std::vector<std::string> parseWeakList() {
                expect(TokenType::LBracket, "'[' after '^'");
                std::vector<std::string> names;
                if (!check(TokenType::RBracket)) {
                    do {
                        const Token& id = expect(TokenType::Ident, "variable name in weakening list");
                        if (std::find(names.begin(), names.end(), id.text) != names.end())
                            throw Error(ErrorKind::Parse, id.span,
                                        "duplicate name '" + id.text + "' in weakening list");
                        names.push_back(id.text);
                    } while (match(TokenType::Comma));
                }
                expect(TokenType::RBracket, "']' closing weakening list");
                return names;
            }

            std::vector<std::string> maybeWeakList() {
                if (match(TokenType::Caret))
                    return parseWeakList();
                return {};
            }

            bool atAtomStart() const {
                switch (peek().type) {
                    case TokenType::Ident:
                    case TokenType::KwQTrue:
                    case TokenType::KwQFalse:
                    case TokenType::LParen: return true;
                    default: return false;
                }
            }

            // True when the upcoming tokens form an amplitude prefix "k *".
            bool atAmplitude() const {
                if (check(TokenType::Complex))
                    return true;
                if (!check(TokenType::LParen))
                    return false;
                if (check(TokenType::Minus, 1))
                    return true;
                if (!check(TokenType::Complex, 1))
                    return false;
                // '(' k ')' or '(' k '+'|'-' k ')': an amplitude group;
                // '(' k '*' ... is a parenthesized scaled term instead.
                return check(TokenType::RParen, 2) || check(TokenType::Plus, 2) ||
                       check(TokenType::Minus, 2);
            }

            Amplitude parseAmplitude() {
                if (check(TokenType::Complex))
                    return advance().value;
                expect(TokenType::LParen, "'(' opening an amplitude");
                double sign = match(TokenType::Minus) ? -1.0 : 1.0;
                const Token& first = expect(TokenType::Complex, "numeric literal in amplitude");
                Amplitude value = sign * first.value;
                if (check(TokenType::Plus) || check(TokenType::Minus)) {
                    double s2 = advance().type == TokenType::Plus ? 1.0 : -1.0;
                    const Token& second = expect(TokenType::Complex, "numeric literal in amplitude");
                    value += s2 * second.value;
                }
                expect(TokenType::RParen, "')' closing an amplitude");
                return value;
            }

            TermPtr parseTerm() {
                Span span = peek().span;
                if (check(TokenType::KwIf) || check(TokenType::KwIfq)) {
                    bool quantum = advance().type == TokenType::KwIfq;
                    TermPtr cond = parseTerm();
                    expect(TokenType::KwThen, "'then'");
                    TermPtr thenB = parseTerm();
                    expect(TokenType::KwElse, "'else'");
                    TermPtr elseB = parseTerm();
                    return makeTerm(span, IfTerm{quantum, std::move(cond), std::move(thenB),
                                                 std::move(elseB)});
                }
                if (match(TokenType::KwLet)) {
                    if (match(TokenType::LParen)) {
                        const Token& x = expect(TokenType::Ident, "variable in pair pattern");
                        expect(TokenType::Comma, "',' in pair pattern");
                        const Token& y = expect(TokenType::Ident, "variable in pair pattern");
                        if (x.text == y.text)
                            throw Error(ErrorKind::Parse, y.span,
                                        "pair pattern binds '" + y.text + "' twice");
                        expect(TokenType::RParen, "')' closing pair pattern");
                        expect(TokenType::Equals, "'=' in let");
                        TermPtr bound = parseTerm();
                        expect(TokenType::KwIn, "'in'");
                        TermPtr body = parseTerm();
                        return makeTerm(span, LetPairTerm{x.text, y.text, std::move(bound),
                                                          std::move(body)});
                    }
                    const Token& x = expect(TokenType::Ident, "pattern after 'let'");
                    expect(TokenType::Equals, "'=' in let");
                    TermPtr bound = parseTerm();
                    expect(TokenType::KwIn, "'in'");
                    TermPtr body = parseTerm();
                    return makeTerm(span, LetTerm{x.text, std::move(bound), std::move(body)});
                }
                return parseSup();
            }

            TermPtr parseSup() {
                Span span = peek().span;
                TermPtr left = parseScaled();
                if (!match(TokenType::Plus))
                    return left;
                TermPtr right = parseScaled();
                if (check(TokenType::Plus))
                    fail("superposition is binary; parenthesize one side");
                return makeTerm(span, SupTerm{std::move(left), std::move(right)});
            }

            TermPtr parseScaled() {
                Span span = peek().span;
                if (atAmplitude()) {
                    Amplitude amp = parseAmplitude();
                    expect(TokenType::Star, "'*' after amplitude");
                    TermPtr body = parseScaled();
                    return makeTerm(span, ScaleTerm{amp, std::move(body)});
                }
                return parseApp();
            }

            TermPtr parseApp() {
                Span span = peek().span;
                if (check(TokenType::Ident) && !check(TokenType::Caret, 1)) {
                    std::string name = advance().text;
                    std::vector<TermPtr> args;
                    while (atAtomStart())
                        args.push_back(parseAtom());
                    if (args.empty())
                        return makeTerm(span, VarTerm{name, {}});
                    return makeTerm(span, AppTerm{std::move(name), std::move(args)});
                }
                return parseAtom();
            }

            TermPtr parseAtom() {
                Span span = peek().span;
                if (check(TokenType::Ident)) {
                    std::string name = advance().text;
                    return makeTerm(span, VarTerm{std::move(name), maybeWeakList()});
                }
                if (match(TokenType::KwQTrue))
                    return makeTerm(span, LitTerm{true, maybeWeakList()});
                if (match(TokenType::KwQFalse))
                    return makeTerm(span, LitTerm{false, maybeWeakList()});
                if (match(TokenType::LParen)) {
                    if (match(TokenType::RParen))
                        return makeTerm(span, UnitTerm{});
                    TermPtr first = parseTerm();
                    if (match(TokenType::Comma)) {
                        TermPtr second = parseTerm();
                        expect(TokenType::RParen, "')' closing pair");
                        return makeTerm(span, PairTerm{std::move(first), std::move(second)});
                    }
                    expect(TokenType::RParen, "')'");
                    return first;
                }
                fail("expected a term");
            }

            FunDef parseFunDef() {
                FunDef def;
                const Token& name = expect(TokenType::Ident, "function name");
                def.name = name.text;
                def.span = name.span;
                if (match(TokenType::LParen)) {
                    do {
                        const Token& p = expect(TokenType::Ident, "parameter name");
                        for (const auto& [existing, ty] : def.params)
                            if (existing == p.text)
                                throw Error(ErrorKind::Parse, p.span,
                                            "duplicate parameter '" + p.text + "'");
                        expect(TokenType::Colon, "':' after parameter name");
                        def.params.emplace_back(p.text, parseType());
                    } while (match(TokenType::Comma));
                    expect(TokenType::RParen, "')' closing parameter list");
                }
                expect(TokenType::Colon, "':' before result type");
                def.result = parseType();
                expect(TokenType::Equals, "'=' before function body");
                def.body = parseTerm();
                return def;
            }

            Program parseProgram() {
                Program p;
                while (!check(TokenType::Eof))
                    p.defs.push_back(parseFunDef());
                return p;
            }
        };

    }  // namespace

    Program parse(const std::vector<Token>& tokens) {
        if (tokens.empty())
            return Program{};
        Parser p{tokens};
        return p.parseProgram();
    }

    Program parseProgram(const std::string& source) { return parse(lex(source)); }

    // ---- renderer ----

    namespace {

        std::string formatReal(double v) {
            std::ostringstream os;
            os.precision(17);
            os << v;
            return os.str();
        }

        std::string renderAmp(const Amplitude& amp) {
            const double re = amp.real(), im = amp.imag();
            if (im == 0.0)
                return re < 0.0 ? "(-" + formatReal(-re) + ")" : formatReal(re);
            if (re == 0.0)
                return im < 0.0 ? "(-" + formatReal(-im) + "i)" : formatReal(im) + "i";
            std::string tail = im < 0.0 ? "-" + formatReal(-im) + "i" : "+" + formatReal(im) + "i";
            if (re < 0.0)
                return "(-" + formatReal(-re) + tail + ")";
            return "(" + formatReal(re) + tail + ")";
        }

        // precedence levels: 0 term (if/let), 1 sup, 2 scaled, 3 app, 4 atom
        int termLevel(const Term& t) {
            return std::visit(
                [](const auto& n) -> int {
                    using T = std::decay_t<decltype(n)>;
                    if constexpr (std::is_same_v<T, IfTerm> || std::is_same_v<T, LetTerm> ||
                                  std::is_same_v<T, LetPairTerm>)
                        return 0;
                    else if constexpr (std::is_same_v<T, SupTerm>)
                        return 1;
                    else if constexpr (std::is_same_v<T, ScaleTerm>)
                        return 2;
                    else if constexpr (std::is_same_v<T, AppTerm>)
                        return 3;
                    else
                        return 4;
                },
                t.node);
        }

        std::string renderAt(const Term& t, int minLevel);

        std::string renderWeak(const std::vector<std::string>& weakened) {
            if (weakened.empty())
                return "";
            std::string out = " ^ [";
            for (std::size_t i = 0; i < weakened.size(); ++i) {
                if (i)
                    out += ", ";
                out += weakened[i];
            }
            return out + "]";
        }

        std::string renderNode(const Term& t) {
            return std::visit(
                [&](const auto& n) -> std::string {
                    using T = std::decay_t<decltype(n)>;
                    if constexpr (std::is_same_v<T, VarTerm>)
                        return n.name + renderWeak(n.weakened);
                    else if constexpr (std::is_same_v<T, UnitTerm>)
                        return "()";
                    else if constexpr (std::is_same_v<T, PairTerm>)
                        return "(" + renderAt(*n.fst, 0) + ", " + renderAt(*n.snd, 0) + ")";
                    else if constexpr (std::is_same_v<T, LetTerm>)
                        return "let " + n.var + " = " + renderAt(*n.bound, 0) + " in " +
                               renderAt(*n.body, 0);
                    else if constexpr (std::is_same_v<T, LetPairTerm>)
                        return "let (" + n.fst + ", " + n.snd + ") = " + renderAt(*n.bound, 0) +
                               " in " + renderAt(*n.body, 0);
                    else if constexpr (std::is_same_v<T, IfTerm>)
                        return std::string(n.quantum ? "ifq " : "if ") + renderAt(*n.cond, 0) +
                               " then " + renderAt(*n.thenBranch, 0) + " else " +
                               renderAt(*n.elseBranch, 0);
                    else if constexpr (std::is_same_v<T, LitTerm>)
                        return std::string(n.value ? "qtrue" : "qfalse") + renderWeak(n.weakened);
                    else if constexpr (std::is_same_v<T, ScaleTerm>)
                        return renderAmp(n.amp) + "*" + renderAt(*n.body, 2);
                    else if constexpr (std::is_same_v<T, SupTerm>)
                        return renderAt(*n.left, 2) + " + " + renderAt(*n.right, 2);
                    else {
                        const auto& app = static_cast<const AppTerm&>(n);
                        std::string out = app.fn;
                        for (const auto& a : app.args)
                            out += " " + renderAt(*a, 4);
                        return out;
                    }
                },
                t.node);
        }

        std::string renderAt(const Term& t, int minLevel) {
            std::string body = renderNode(t);
            if (termLevel(t) < minLevel)
                return "(" + body + ")";
            return body;
        }

    }  // namespace

    std::string renderTerm(const Term& t) { return renderAt(t, 0); }

    std::string render(const Program& p) {
        std::string out;
        for (const auto& def : p.defs) {
            out += def.name;
            if (!def.params.empty()) {
                out += " (";
                for (std::size_t i = 0; i < def.params.size(); ++i) {
                    if (i)
                        out += ", ";
                    out += def.params[i].first + ":" + def.params[i].second.str();
                }
                out += ")";
            }
            out += " : " + def.result.str() + " = " + renderTerm(*def.body) + "\n";
        }
        return out;
    }

}  // namespace qml::ast

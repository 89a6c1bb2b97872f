// Part of the qmlc project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "circuit.hpp"

#include <algorithm>
#include <sstream>

#include "diag.hpp"

namespace qml::circuit {

    Gate single(std::size_t wire, CMatrix u) { return Gate{SingleGate{wire, std::move(u)}}; }

    Gate controlled(std::size_t control, Polarity polarity, Circuit body) {
        return Gate{ControlledGate{control, polarity,
                                   std::make_shared<const Circuit>(std::move(body))}};
    }

    Gate permute(std::vector<std::size_t> perm) { return Gate{PermuteGate{std::move(perm)}}; }

    bool isIdentityPerm(const std::vector<std::size_t>& perm) {
        for (std::size_t i = 0; i < perm.size(); ++i)
            if (perm[i] != i)
                return false;
        return true;
    }

    std::vector<std::size_t> invertPerm(const std::vector<std::size_t>& perm) {
        std::vector<std::size_t> inv(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i)
            inv[perm[i]] = i;
        return inv;
    }

    std::vector<std::size_t> composePerm(const std::vector<std::size_t>& first,
                                         const std::vector<std::size_t>& second) {
        if (first.size() != second.size())
            throw InternalError("composePerm: width mismatch");
        std::vector<std::size_t> out(first.size());
        for (std::size_t i = 0; i < first.size(); ++i)
            out[i] = second[first[i]];
        return out;
    }

    namespace {

        void validateGate(const Gate& g, std::size_t width, std::vector<std::size_t>& controls) {
            if (const auto* s = std::get_if<SingleGate>(&g.op)) {
                if (s->wire >= width)
                    throw InternalError("gate wire out of range");
                for (std::size_t c : controls)
                    if (s->wire == c)
                        throw InternalError("controlled body touches a control wire");
                if (s->u.rows() != 2 || s->u.cols() != 2)
                    throw InternalError("single-qubit gate is not 2x2");
                if (!linalg::isUnitary(s->u, 1e-9))
                    throw InternalError("single-qubit gate is not unitary");
            } else if (const auto* c = std::get_if<ControlledGate>(&g.op)) {
                if (c->control >= width)
                    throw InternalError("control wire out of range");
                for (std::size_t outer : controls)
                    if (c->control == outer)
                        throw InternalError("controlled body touches a control wire");
                if (c->body->width != width)
                    throw InternalError("controlled body width mismatch");
                controls.push_back(c->control);
                for (const auto& inner : c->body->gates)
                    validateGate(inner, width, controls);
                controls.pop_back();
            } else if (const auto* p = std::get_if<PermuteGate>(&g.op)) {
                if (p->perm.size() != width)
                    throw InternalError("permutation width mismatch");
                std::vector<bool> seen(width, false);
                for (std::size_t v : p->perm) {
                    if (v >= width || seen[v])
                        throw InternalError("permutation is not a bijection");
                    seen[v] = true;
                }
                for (std::size_t c : controls)
                    if (p->perm[c] != c)
                        throw InternalError("controlled body permutes a control wire");
            } else if (const auto* id = std::get_if<IdGate>(&g.op)) {
                if (id->width != width)
                    throw InternalError("identity gate width mismatch");
            }
        }

    }  // namespace

    void validate(const Circuit& c) {
        std::vector<std::size_t> controls;
        for (const auto& g : c.gates)
            validateGate(g, c.width, controls);
    }

    bool circuitEquals(const Circuit& a, const Circuit& b, double tol) {
        if (a.width != b.width || a.gates.size() != b.gates.size())
            return false;
        for (std::size_t i = 0; i < a.gates.size(); ++i) {
            const Gate& ga = a.gates[i];
            const Gate& gb = b.gates[i];
            if (ga.op.index() != gb.op.index())
                return false;
            if (const auto* sa = std::get_if<SingleGate>(&ga.op)) {
                const auto& sb = std::get<SingleGate>(gb.op);
                if (sa->wire != sb.wire || linalg::maxAbsDiff(sa->u, sb.u) > tol)
                    return false;
            } else if (const auto* ca = std::get_if<ControlledGate>(&ga.op)) {
                const auto& cb = std::get<ControlledGate>(gb.op);
                if (ca->control != cb.control || ca->polarity != cb.polarity ||
                    !circuitEquals(*ca->body, *cb.body, tol))
                    return false;
            } else if (const auto* pa = std::get_if<PermuteGate>(&ga.op)) {
                if (pa->perm != std::get<PermuteGate>(gb.op).perm)
                    return false;
            } else if (const auto* ia = std::get_if<IdGate>(&ga.op)) {
                if (ia->width != std::get<IdGate>(gb.op).width)
                    return false;
            }
        }
        return true;
    }

    Circuit inverse(const Circuit& c) {
        Circuit out;
        out.width = c.width;
        out.gates.reserve(c.gates.size());
        for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
            if (const auto* s = std::get_if<SingleGate>(&it->op)) {
                out.gates.push_back(single(s->wire, s->u.adjoint()));
            } else if (const auto* ctl = std::get_if<ControlledGate>(&it->op)) {
                out.gates.push_back(controlled(ctl->control, ctl->polarity, inverse(*ctl->body)));
            } else if (const auto* p = std::get_if<PermuteGate>(&it->op)) {
                out.gates.push_back(permute(invertPerm(p->perm)));
            } else {
                out.gates.push_back(*it);
            }
        }
        return out;
    }

    namespace {

        bool nearIdentity2(const CMatrix& u, double tol) {
            return linalg::maxAbsDiff(u, CMatrix::identity(2)) < tol;
        }

        bool onePass(Circuit& c, double tol) {
            bool changed = false;
            std::vector<Gate> out;
            out.reserve(c.gates.size());
            for (auto& gate : c.gates) {
                // normalize inside controlled bodies first
                if (auto* ctl = std::get_if<ControlledGate>(&gate.op)) {
                    Circuit body = optimize(*ctl->body);
                    if (body.gates.empty()) {
                        changed = true;
                        continue;  // conditional no-op
                    }
                    if (!circuitEquals(body, *ctl->body, 0.0)) {
                        changed = true;
                        gate = controlled(ctl->control, ctl->polarity, std::move(body));
                    }
                }
                if (std::holds_alternative<IdGate>(gate.op)) {
                    changed = true;
                    continue;
                }
                if (const auto* s = std::get_if<SingleGate>(&gate.op)) {
                    if (nearIdentity2(s->u, tol)) {
                        changed = true;
                        continue;
                    }
                    if (!out.empty()) {
                        if (auto* prev = std::get_if<SingleGate>(&out.back().op);
                            prev && prev->wire == s->wire) {
                            CMatrix fused = linalg::mul(s->u, prev->u);
                            out.pop_back();
                            changed = true;
                            if (!nearIdentity2(fused, tol))
                                out.push_back(single(s->wire, std::move(fused)));
                            continue;
                        }
                    }
                }
                if (const auto* p = std::get_if<PermuteGate>(&gate.op)) {
                    if (isIdentityPerm(p->perm)) {
                        changed = true;
                        continue;
                    }
                    if (!out.empty()) {
                        if (auto* prev = std::get_if<PermuteGate>(&out.back().op)) {
                            std::vector<std::size_t> fused = composePerm(prev->perm, p->perm);
                            out.pop_back();
                            changed = true;
                            if (!isIdentityPerm(fused))
                                out.push_back(permute(std::move(fused)));
                            continue;
                        }
                    }
                }
                if (const auto* ctl = std::get_if<ControlledGate>(&gate.op)) {
                    if (!out.empty()) {
                        if (auto* prev = std::get_if<ControlledGate>(&out.back().op);
                            prev && prev->control == ctl->control &&
                            prev->polarity == ctl->polarity &&
                            circuitEquals(inverse(*prev->body), *ctl->body, tol)) {
                            out.pop_back();
                            changed = true;
                            continue;
                        }
                    }
                }
                out.push_back(std::move(gate));
            }
            c.gates = std::move(out);
            return changed;
        }

    }  // namespace

    Circuit optimize(const Circuit& c) {
        Circuit out = c;
        const double tol = 1e-12;
        for (int iter = 0; iter < 64; ++iter) {
            if (!onePass(out, tol))
                break;
        }
        return out;
    }

    // ---- morphisms ----

    FqcMorphism identityMorphism(std::size_t n) {
        FqcMorphism m;
        m.inputSize = m.outputSize = n;
        m.body.width = n;
        return m;
    }

    FqcMorphism permutationMorphism(std::vector<std::size_t> perm) {
        FqcMorphism m;
        m.inputSize = m.outputSize = perm.size();
        m.body.width = perm.size();
        if (!isIdentityPerm(perm))
            m.body.gates.push_back(permute(std::move(perm)));
        return m;
    }

    void validate(const FqcMorphism& m) {
        if (m.inputSize + m.heap != m.body.width || m.outputSize + m.garbage != m.body.width)
            throw InternalError("FQC wire conservation violated: in=" +
                                std::to_string(m.inputSize) + " h=" + std::to_string(m.heap) +
                                " out=" + std::to_string(m.outputSize) + " g=" +
                                std::to_string(m.garbage) + " width=" +
                                std::to_string(m.body.width));
        validate(m.body);
    }

    Circuit embed(const Circuit& c, std::size_t offset, std::size_t newWidth) {
        if (offset + c.width > newWidth)
            throw InternalError("embed: sub-circuit does not fit");
        Circuit out;
        out.width = newWidth;
        out.gates.reserve(c.gates.size());
        for (const auto& g : c.gates) {
            if (const auto* s = std::get_if<SingleGate>(&g.op)) {
                out.gates.push_back(single(s->wire + offset, s->u));
            } else if (const auto* ctl = std::get_if<ControlledGate>(&g.op)) {
                out.gates.push_back(controlled(ctl->control + offset, ctl->polarity,
                                               embed(*ctl->body, offset, newWidth)));
            } else if (const auto* p = std::get_if<PermuteGate>(&g.op)) {
                std::vector<std::size_t> perm(newWidth);
                for (std::size_t i = 0; i < newWidth; ++i)
                    perm[i] = i;
                for (std::size_t i = 0; i < p->perm.size(); ++i)
                    perm[i + offset] = p->perm[i] + offset;
                out.gates.push_back(permute(std::move(perm)));
            } else {
                out.gates.push_back(Gate{IdGate{newWidth}});
            }
        }
        return out;
    }

    FqcMorphism compose(const FqcMorphism& f, const FqcMorphism& g) {
        if (f.outputSize != g.inputSize)
            throw Error(ErrorKind::SizeMismatch, {},
                        "compose: output size " + std::to_string(f.outputSize) +
                            " does not match input size " + std::to_string(g.inputSize));
        const std::size_t width = f.inputSize + f.heap + g.heap;
        FqcMorphism r;
        r.inputSize = f.inputSize;
        r.outputSize = g.outputSize;
        r.heap = f.heap + g.heap;
        r.garbage = f.garbage + g.garbage;
        r.body.width = width;

        Circuit fEmb = embed(f.body, 0, width);
        r.body.gates.insert(r.body.gates.end(), fEmb.gates.begin(), fEmb.gates.end());

        // [f.out][f.g][g.h] -> [g.in][g.h][f.g]
        std::vector<std::size_t> perm(width);
        for (std::size_t i = 0; i < f.outputSize; ++i)
            perm[i] = i;
        for (std::size_t j = 0; j < f.garbage; ++j)
            perm[f.outputSize + j] = f.outputSize + g.heap + j;
        for (std::size_t j = 0; j < g.heap; ++j)
            perm[f.width() + j] = f.outputSize + j;
        if (!isIdentityPerm(perm))
            r.body.gates.push_back(permute(std::move(perm)));

        Circuit gEmb = embed(g.body, 0, width);
        r.body.gates.insert(r.body.gates.end(), gEmb.gates.begin(), gEmb.gates.end());
        validate(r);
        return r;
    }

    FqcMorphism tensor(const FqcMorphism& f, const FqcMorphism& g) {
        const std::size_t width = f.width() + g.width();
        FqcMorphism r;
        r.inputSize = f.inputSize + g.inputSize;
        r.outputSize = f.outputSize + g.outputSize;
        r.heap = f.heap + g.heap;
        r.garbage = f.garbage + g.garbage;
        r.body.width = width;

        // [f.in][g.in][f.h][g.h] -> [f.in][f.h][g.in][g.h]
        std::vector<std::size_t> pre(width);
        for (std::size_t i = 0; i < f.inputSize; ++i)
            pre[i] = i;
        for (std::size_t j = 0; j < g.inputSize; ++j)
            pre[f.inputSize + j] = f.width() + j;
        for (std::size_t j = 0; j < f.heap; ++j)
            pre[r.inputSize + j] = f.inputSize + j;
        for (std::size_t j = 0; j < g.heap; ++j)
            pre[r.inputSize + f.heap + j] = f.width() + g.inputSize + j;
        if (!isIdentityPerm(pre))
            r.body.gates.push_back(permute(std::move(pre)));

        Circuit fEmb = embed(f.body, 0, width);
        r.body.gates.insert(r.body.gates.end(), fEmb.gates.begin(), fEmb.gates.end());
        Circuit gEmb = embed(g.body, f.width(), width);
        r.body.gates.insert(r.body.gates.end(), gEmb.gates.begin(), gEmb.gates.end());

        // [f.out][f.g][g.out][g.g] -> [f.out][g.out][f.g][g.g]
        std::vector<std::size_t> post(width);
        for (std::size_t i = 0; i < f.outputSize; ++i)
            post[i] = i;
        for (std::size_t j = 0; j < f.garbage; ++j)
            post[f.outputSize + j] = r.outputSize + j;
        for (std::size_t j = 0; j < g.outputSize; ++j)
            post[f.width() + j] = f.outputSize + j;
        for (std::size_t j = 0; j < g.garbage; ++j)
            post[f.width() + g.outputSize + j] = r.outputSize + f.garbage + j;
        if (!isIdentityPerm(post))
            r.body.gates.push_back(permute(std::move(post)));
        validate(r);
        return r;
    }

    FqcMorphism optimized(FqcMorphism m) {
        m.body = optimize(m.body);
        return m;
    }

    // ---- text rendering ----

    namespace {

        std::string gateLetter(const CMatrix& u) {
            using linalg::maxAbsDiff;
            const double tol = 1e-9;
            if (maxAbsDiff(u, linalg::pauliX()) < tol)
                return "X";
            if (maxAbsDiff(u, linalg::hadamard()) < tol)
                return "H";
            if (maxAbsDiff(u, linalg::mat2(1, 0, 0, -1)) < tol)
                return "Z";
            return "U";
        }

        void fillColumn(const Gate& g, std::vector<std::string>& column) {
            if (const auto* s = std::get_if<SingleGate>(&g.op)) {
                column[s->wire] = gateLetter(s->u);
            } else if (const auto* ctl = std::get_if<ControlledGate>(&g.op)) {
                column[ctl->control] = ctl->polarity == Polarity::Pos ? "*" : "o";
                for (const auto& inner : ctl->body->gates)
                    fillColumn(inner, column);
            } else if (const auto* p = std::get_if<PermuteGate>(&g.op)) {
                for (std::size_t i = 0; i < p->perm.size(); ++i)
                    if (p->perm[i] != i)
                        column[i] = ">" + std::to_string(p->perm[i]);
            }
        }

    }  // namespace

    std::string renderText(const Circuit& c) {
        std::vector<std::vector<std::string>> columns;
        for (const auto& g : c.gates) {
            std::vector<std::string> column(c.width);
            fillColumn(g, column);
            columns.push_back(std::move(column));
        }
        std::vector<std::size_t> colWidth(columns.size(), 1);
        for (std::size_t j = 0; j < columns.size(); ++j)
            for (const auto& cell : columns[j])
                colWidth[j] = std::max(colWidth[j], cell.size());
        std::ostringstream os;
        for (std::size_t w = 0; w < c.width; ++w) {
            os << "w" << w << ": -";
            for (std::size_t j = 0; j < columns.size(); ++j) {
                std::string cell = columns[j][w];
                while (cell.size() < colWidth[j])
                    cell += "-";
                if (cell.empty())
                    cell = std::string(colWidth[j], '-');
                os << cell << "-";
            }
            os << "\n";
        }
        if (c.width == 0)
            os << "(empty circuit)\n";
        return os.str();
    }

}  // namespace qml::circuit

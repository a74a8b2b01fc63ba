#pragma once

#include "netpres/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

namespace netpres {

struct ParseError final : std::runtime_error {
    int line;
    int col;
    ParseError(int line_, int col_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ", col " +
                             std::to_string(col_) + ": " + what_),
          line(line_),
          col(col_) {}
};

struct SemanticError final : std::runtime_error {
    int line;
    SemanticError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

namespace detail {

inline std::string dot_token(const DotIndex& dot) {
    static constexpr const char* names[2][3] = {{"0", "l1", "2l1"}, {"l2", "l1+l2", "2l1+l2"}};
    return names[dot.j][dot.i];
}

inline std::string selector_token(const Parity& p) {
    static constexpr const char* names[2][2] = {{"0", "l2"}, {"l1", "l1+l2"}};
    return names[p.c1][p.c2];
}

struct LineScanner {
    std::string_view text;
    int line;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& expected) const {
        throw ParseError(line, static_cast<int>(pos) + 1, "expected " + expected);
    }

    void skip_spaces() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }

    bool at_end() {
        skip_spaces();
        return pos >= text.size();
    }

    bool try_literal(std::string_view lit) {
        skip_spaces();
        if (text.substr(pos, lit.size()) != lit) return false;
        pos += lit.size();
        return true;
    }

    void literal(std::string_view lit) {
        if (!try_literal(lit)) fail("'" + std::string(lit) + "'");
    }

    Int integer() {
        skip_spaces();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) {
            pos = start;
            fail("an integer");
        }
        return Int(std::string(text.substr(start, pos - start)));
    }

    IntVec2 coordinates() {
        literal("(");
        Int x = integer();
        literal(",");
        Int y = integer();
        literal(")");
        return {x, y};
    }

    // Longest-match over the six dot tokens.
    DotIndex dot() {
        skip_spaces();
        static constexpr std::pair<std::string_view, DotIndex> tokens[] = {
            {"2l1+l2", {2, 1}}, {"l1+l2", {1, 1}}, {"2l1", {2, 0}},
            {"l2", {0, 1}},     {"l1", {1, 0}},    {"0", {0, 0}}};
        for (const auto& [tok, idx] : tokens)
            if (try_literal(tok)) return idx;
        fail("a dot (one of 0, l1, 2l1, l2, l1+l2, 2l1+l2)");
    }
};

}  // namespace detail

inline PresentationDiagram parse(std::string_view text) {
    std::optional<IntVec2> lambda1, lambda2;
    std::optional<Parity> selector;
    struct PendingPush {
        DotIndex initial;
        std::optional<IntVec2> terminal;  // empty: dot shorthand below
        DotIndex terminal_dot;
        int line;
    };
    std::vector<PendingPush> pushes;

    bool header_seen = false;
    int line_no = 0;
    std::size_t offset = 0;
    while (offset <= text.size()) {
        std::size_t eol = text.find('\n', offset);
        std::string_view raw =
            text.substr(offset, eol == std::string_view::npos ? text.size() - offset : eol - offset);
        offset = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (std::size_t hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        detail::LineScanner sc{raw, line_no};
        if (sc.at_end()) continue;

        if (!header_seen) {
            sc.literal("netmap");
            sc.literal("v1");
            if (!sc.at_end()) sc.fail("end of line");
            header_seen = true;
            continue;
        }

        if (sc.try_literal("lambda1") || sc.try_literal("lambda2")) {
            bool first = raw[sc.pos - 1] == '1';
            sc.literal("=");
            IntVec2 v = sc.coordinates();
            if (!sc.at_end()) sc.fail("end of line");
            auto& slot = first ? lambda1 : lambda2;
            if (slot) throw SemanticError(line_no, first ? "duplicate lambda1" : "duplicate lambda2");
            slot = v;
            continue;
        }
        if (sc.try_literal("translate")) {
            sc.literal("=");
            DotIndex d = sc.dot();
            if (d.i > 1) sc.fail("a translate value (one of 0, l1, l2, l1+l2)");
            if (!sc.at_end()) sc.fail("end of line");
            if (selector) throw SemanticError(line_no, "duplicate translate");
            selector = Parity{d.i, d.j};
            continue;
        }
        if (sc.try_literal("push")) {
            DotIndex initial = sc.dot();
            sc.literal("->");
            sc.skip_spaces();
            PendingPush p{initial, std::nullopt, {}, line_no};
            if (sc.pos < sc.text.size() && sc.text[sc.pos] == '(') {
                p.terminal = sc.coordinates();
            } else {
                p.terminal_dot = sc.dot();
            }
            if (!sc.at_end()) sc.fail("end of line");
            if (pushes.size() == 4) throw SemanticError(line_no, "expected 4 push lines, found more");
            pushes.push_back(p);
            continue;
        }
        sc.fail("lambda1, lambda2, translate or push");
    }

    if (!header_seen) throw ParseError(1, 1, "expected 'netmap v1' header");
    if (!lambda1) throw SemanticError(line_no, "missing lambda1");
    if (!lambda2) throw SemanticError(line_no, "missing lambda2");
    if (!selector) throw SemanticError(line_no, "missing translate");
    if (pushes.size() != 4)
        throw SemanticError(line_no, "expected 4 push lines, found " + std::to_string(pushes.size()));

    PresentationDiagram diagram;
    diagram.basis = IntMat2{*lambda1, *lambda2};
    diagram.selector = *selector;

    bool seen[2][2] = {};
    for (const PendingPush& p : pushes) {
        Parity cls = p.initial.parity();
        if (seen[cls.c1][cls.c2])
            throw SemanticError(p.line, "duplicate push for parity class (" +
                                            std::to_string(cls.c1) + "," + std::to_string(cls.c2) + ")");
        seen[cls.c1][cls.c2] = true;
    }

    std::sort(pushes.begin(), pushes.end(),
              [](const PendingPush& a, const PendingPush& b) {
                  return a.initial.order() < b.initial.order();
              });
    for (std::size_t k = 0; k < 4; ++k) {
        const PendingPush& p = pushes[k];
        IntVec2 terminal = p.terminal ? *p.terminal : p.terminal_dot.coords(diagram.basis);
        diagram.pushes[k] = GreenSegment{p.initial, terminal};
    }
    return diagram;
}

// Canonical text form: fixed field order, pushes sorted by initial dot,
// terminals always written as coordinates. Byte-identical across runs.
inline std::string serialize(const PresentationDiagram& diagram) {
    std::array<GreenSegment, 4> pushes = diagram.pushes;
    std::sort(pushes.begin(), pushes.end(), [](const GreenSegment& a, const GreenSegment& b) {
        return a.initial.order() < b.initial.order();
    });
    std::ostringstream out;
    out << "netmap v1\n";
    out << "lambda1 = " << to_string(diagram.basis.col1) << "\n";
    out << "lambda2 = " << to_string(diagram.basis.col2) << "\n";
    out << "translate = " << detail::selector_token(diagram.selector) << "\n";
    for (const GreenSegment& seg : pushes)
        out << "push " << detail::dot_token(seg.initial) << " -> " << to_string(seg.terminal)
            << "\n";
    return out.str();
}

}  // namespace netpres

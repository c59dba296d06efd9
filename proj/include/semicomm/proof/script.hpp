#ifndef SEMICOMM_PROOF_SCRIPT_HPP
#define SEMICOMM_PROOF_SCRIPT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "word.hpp"

namespace semicomm::proof {

enum class Mode { plain, cancellative };
enum class Direction { l2r, r2l };
enum class Side { lhs, rhs };

inline const char* to_string(Mode m) { return m == Mode::plain ? "plain" : "cancellative"; }
inline const char* to_string(Direction d) { return d == Direction::l2r ? "L2R" : "R2L"; }
inline const char* to_string(Side s) { return s == Side::lhs ? "lhs" : "rhs"; }

/// Where a rewrite applies: which side of the current equation, a descent
/// through nested g(...) / (...)' arguments, and the start offset in the
/// word reached.
struct Position {
    Side side = Side::rhs;
    std::vector<std::size_t> descent;
    std::size_t offset = 0;

    friend bool operator==(const Position&, const Position&) = default;
};

struct Rewrite {
    std::string rule;
    Direction direction = Direction::l2r;
    Position at;
    Substitution sub;
};

struct CancelLeft {
    std::size_t count = 1;
};
struct CancelRight {
    std::size_t count = 1;
};
/// Asserts that both sides of the current equation are identical.
struct Reflexivity {};
/// Swaps the two sides.
struct Symmetry {};

using StepKind = std::variant<Rewrite, CancelLeft, CancelRight, Reflexivity, Symmetry>;

struct ProofStep {
    StepKind kind;
    std::size_t line = 0;
};

struct ClaimBlock {
    Equation goal;
    /// The replay starts from w = w; w defaults to goal.lhs.
    std::optional<Word> start;
    std::vector<ProofStep> steps;
    std::size_t line = 0;
};

struct ProofScript {
    std::string name;
    Mode mode = Mode::plain;
    std::vector<std::string> constants;
    std::vector<Equation> hypotheses;
    std::vector<ClaimBlock> claims;
};

inline std::string render(const Position& p) {
    std::string out = p.side == Side::lhs ? "lhs:" : "";
    for (auto d : p.descent)
        out += std::to_string(d) + ".";
    return out + std::to_string(p.offset);
}

inline std::string render(const ProofStep& step) {
    struct Visitor {
        std::string operator()(const Rewrite& r) const {
            std::string out = std::string("rw ") + to_string(r.direction) + " " + r.rule + " at " + render(r.at);
            if (!r.sub.empty()) {
                out += " sub {";
                bool first = true;
                for (const auto& [v, w] : r.sub) {
                    out += (first ? "" : "; ") + v + " = " + render(w);
                    first = false;
                }
                out += "}";
            }
            return out;
        }
        std::string operator()(const CancelLeft& c) const { return "cancel-left " + std::to_string(c.count); }
        std::string operator()(const CancelRight& c) const { return "cancel-right " + std::to_string(c.count); }
        std::string operator()(const Reflexivity&) const { return "refl"; }
        std::string operator()(const Symmetry&) const { return "symm"; }
    };
    return std::visit(Visitor{}, step.kind);
}

/// Serializes a script in the .prf format; parse_script reads it back.
inline std::string render(const ProofScript& s) {
    std::string out = std::string("mode ") + to_string(s.mode) + "\n";
    if (!s.constants.empty()) {
        out += "const";
        for (const auto& c : s.constants)
            out += " " + c;
        out += "\n";
    }
    for (const auto& h : s.hypotheses)
        out += "hyp " + h.name + ": " + render(h) + "\n";
    for (const auto& c : s.claims) {
        out += "\nclaim " + c.goal.name + ": " + render(c.goal) + "\n";
        if (c.start)
            out += "start " + render(*c.start) + "\n";
        for (const auto& st : c.steps)
            out += render(st) + "\n";
        out += "qed\n";
    }
    return out;
}

} // namespace semicomm::proof

#endif

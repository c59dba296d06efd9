#ifndef SEMICOMM_PROOF_CHECKER_HPP
#define SEMICOMM_PROOF_CHECKER_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "../error.hpp"
#include "script.hpp"
#include "word.hpp"

namespace semicomm::proof {

/// A single proof step does not apply; the message says why.
class StepFailure : public Error {
public:
    using Error::Error;
};

namespace detail {

inline Word splice(const Word& target, const std::vector<std::size_t>& descent, std::size_t level,
                   std::size_t offset, const Word& source, const Word& dest) {
    if (level < descent.size()) {
        const std::size_t i = descent[level];
        if (i >= target.size())
            throw StepFailure("path index " + std::to_string(i) + " is past the end of '" + render(target) +
                              "'");
        if (!target[i].compound())
            throw StepFailure("path index " + std::to_string(i) + " selects '" + render(target[i]) +
                              "', which has no argument");
        Word out = target;
        out[i].arg = splice(target[i].arg, descent, level + 1, offset, source, dest);
        return out;
    }
    if (offset + source.size() > target.size() ||
        !std::equal(source.begin(), source.end(), target.begin() + static_cast<std::ptrdiff_t>(offset))) {
        const std::size_t end = std::min(target.size(), offset + source.size());
        const Word found = offset < target.size()
                               ? Word(target.begin() + static_cast<std::ptrdiff_t>(offset),
                                      target.begin() + static_cast<std::ptrdiff_t>(end))
                               : Word{};
        throw StepFailure("expected '" + render(source) + "' at offset " + std::to_string(offset) + " of '" +
                          render(target) + "', found '" + (found.empty() ? "" : render(found)) + "'");
    }
    Word out(target.begin(), target.begin() + static_cast<std::ptrdiff_t>(offset));
    out.insert(out.end(), dest.begin(), dest.end());
    out.insert(out.end(), target.begin() + static_cast<std::ptrdiff_t>(offset + source.size()), target.end());
    return out;
}

} // namespace detail

/// Replaces the occurrence of sigma(source side) at the step's position in
/// `target` by sigma(other side). The side field of the position is ignored.
inline Word apply_rewrite(const Word& target, const Rewrite& step, const Equation& rule) {
    const auto vars = variables(rule);
    for (const auto& [v, w] : step.sub) {
        if (!vars.count(v))
            throw StepFailure("substitution binds '" + v + "', which does not occur in rule '" + rule.name + "'");
        if (w.empty())
            throw StepFailure("substitution maps '" + v + "' to an empty word");
    }
    const Word& from = step.direction == Direction::l2r ? rule.lhs : rule.rhs;
    const Word& to = step.direction == Direction::l2r ? rule.rhs : rule.lhs;
    return detail::splice(target, step.at.descent, 0, step.at.offset, substitute(from, step.sub),
                          substitute(to, step.sub));
}

inline Equation apply_rewrite(const Equation& state, const Rewrite& step, const Equation& rule) {
    Equation out = state;
    Word& side = step.at.side == Side::lhs ? out.lhs : out.rhs;
    side = apply_rewrite(side, step, rule);
    return out;
}

/// Removes a common prefix (CancelLeft) or suffix (CancelRight) of length
/// `count` from both sides. Only sound in cancellative semigroups.
template <class Cancel>
Equation apply_cancel(const Equation& eq, const Cancel& step, Mode mode) {
    constexpr bool left = std::is_same_v<Cancel, CancelLeft>;
    const char* what = left ? "cancel-left" : "cancel-right";
    if (mode != Mode::cancellative)
        throw StepFailure(std::string(what) + " needs mode cancellative");
    const std::size_t k = step.count;
    if (k == 0)
        throw StepFailure(std::string(what) + " count must be positive");
    if (eq.lhs.size() <= k || eq.rhs.size() <= k)
        throw StepFailure(std::string(what) + " " + std::to_string(k) + " would empty a side of '" +
                          render(eq) + "'");
    Equation out;
    out.name = eq.name;
    if constexpr (left) {
        if (!std::equal(eq.lhs.begin(), eq.lhs.begin() + static_cast<std::ptrdiff_t>(k), eq.rhs.begin()))
            throw StepFailure("sides of '" + render(eq) + "' do not share their first " + std::to_string(k) +
                              " atoms");
        out.lhs.assign(eq.lhs.begin() + static_cast<std::ptrdiff_t>(k), eq.lhs.end());
        out.rhs.assign(eq.rhs.begin() + static_cast<std::ptrdiff_t>(k), eq.rhs.end());
    } else {
        if (!std::equal(eq.lhs.end() - static_cast<std::ptrdiff_t>(k), eq.lhs.end(),
                        eq.rhs.end() - static_cast<std::ptrdiff_t>(k)))
            throw StepFailure("sides of '" + render(eq) + "' do not share their last " + std::to_string(k) +
                              " atoms");
        out.lhs.assign(eq.lhs.begin(), eq.lhs.end() - static_cast<std::ptrdiff_t>(k));
        out.rhs.assign(eq.rhs.begin(), eq.rhs.end() - static_cast<std::ptrdiff_t>(k));
    }
    return out;
}

struct StepTrace {
    std::size_t index = 0;
    std::size_t line = 0;
    std::string step;
    Equation before;
    Equation after; ///< equals `before` when the step failed
    bool ok = false;
    std::string message;
};

struct ClaimVerdict {
    std::string name;
    Equation goal;
    bool verified = false;
    std::vector<StepTrace> trace;
    std::string failure;
    std::size_t failure_line = 0;
};

struct ScriptVerdict {
    std::string script;
    std::vector<ClaimVerdict> claims;

    bool all_verified() const {
        for (const auto& c : claims)
            if (!c.verified)
                return false;
        return !claims.empty();
    }
    std::size_t failed_steps() const {
        std::size_t n = 0;
        for (const auto& c : claims)
            for (const auto& t : c.trace)
                n += t.ok ? 0 : 1;
        return n;
    }
};

/// Replays every claim. Hypotheses and previously verified claims are the
/// rules in scope; a failing claim is reported and the next one is tried.
inline ScriptVerdict check_proof(const ProofScript& script) {
    ScriptVerdict verdict;
    verdict.script = script.name;
    std::map<std::string, Equation> rules;
    for (const auto& h : script.hypotheses)
        rules.emplace(h.name, h);

    for (const auto& claim : script.claims) {
        ClaimVerdict cv;
        cv.name = claim.goal.name;
        cv.goal = claim.goal;
        const Word& w = claim.start ? *claim.start : claim.goal.lhs;
        Equation state{claim.goal.name, w, w};
        bool failed = false;
        for (std::size_t i = 0; i < claim.steps.size(); ++i) {
            const ProofStep& step = claim.steps[i];
            StepTrace t{i, step.line, render(step), state, state, false, {}};
            try {
                if (auto r = std::get_if<Rewrite>(&step.kind)) {
                    auto it = rules.find(r->rule);
                    if (it == rules.end())
                        throw StepFailure("rule '" + r->rule + "' is not a hypothesis or a verified claim");
                    state = apply_rewrite(state, *r, it->second);
                } else if (auto cl = std::get_if<CancelLeft>(&step.kind)) {
                    state = apply_cancel(state, *cl, script.mode);
                } else if (auto cr = std::get_if<CancelRight>(&step.kind)) {
                    state = apply_cancel(state, *cr, script.mode);
                } else if (std::holds_alternative<Reflexivity>(step.kind)) {
                    if (state.lhs != state.rhs)
                        throw StepFailure("refl: sides of '" + render(state) + "' differ");
                } else {
                    std::swap(state.lhs, state.rhs);
                }
                t.ok = true;
                t.after = state;
            } catch (const StepFailure& e) {
                t.message = e.what();
                cv.failure = "step " + std::to_string(i + 1) + " (" + t.step + "): " + e.what();
                cv.failure_line = step.line;
                failed = true;
            }
            cv.trace.push_back(std::move(t));
            if (failed)
                break;
        }
        if (!failed) {
            if (state.same_sides(claim.goal)) {
                cv.verified = true;
            } else {
                cv.failure = "final equation '" + render(state) + "' is not the goal '" + render(claim.goal) + "'";
                cv.failure_line = claim.line;
            }
        }
        if (cv.verified)
            rules.emplace(claim.goal.name, claim.goal);
        verdict.claims.push_back(std::move(cv));
    }
    return verdict;
}

/// Text trace: one line per step, then one verdict line per claim.
inline std::string render(const ScriptVerdict& v) {
    std::string out;
    for (const auto& c : v.claims) {
        out += "claim " + c.name + ": " + render(c.goal) + "\n";
        for (const auto& t : c.trace) {
            out += "  [" + std::to_string(t.index + 1) + "] " + t.step + "\n";
            if (t.ok)
                out += "      " + render(t.before) + "  ==>  " + render(t.after) + "\n";
            else
                out += "      FAILED: " + t.message + "\n";
        }
        if (c.verified)
            out += "  verified\n";
        else
            out += "  NOT VERIFIED (line " + std::to_string(c.failure_line) + "): " + c.failure + "\n";
    }
    return out;
}

} // namespace semicomm::proof

#endif

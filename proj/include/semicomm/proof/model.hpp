#ifndef SEMICOMM_PROOF_MODEL_HPP
#define SEMICOMM_PROOF_MODEL_HPP

// Finite-model semantics for proof scripts. A model is a semigroup table
// together with interpretations of g, of the inverse mark and of the
// declared constants. The soundness audit enumerates every such model of
// small order that satisfies a script's hypotheses and checks that every
// verified claim holds there too.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "../cayley_table.hpp"
#include "../classify.hpp"
#include "../enumerate.hpp"
#include "../error.hpp"
#include "checker.hpp"
#include "script.hpp"
#include "word.hpp"

namespace semicomm::proof {

using UnaryMap = std::vector<std::size_t>;

struct Model {
    const CayleyTable* table = nullptr;
    const UnaryMap* g = nullptr;
    const UnaryMap* inverse = nullptr;
    std::map<std::string, std::size_t> constants;
};

namespace detail {

struct Term {
    AtomKind kind;
    std::size_t id = 0; ///< variable slot or constant slot
    std::vector<Term> arg;
};

struct CompiledEquation {
    std::vector<Term> lhs, rhs;
    std::size_t variables = 0;
};

class Compiler {
public:
    explicit Compiler(const std::vector<std::string>& constants) {
        for (std::size_t i = 0; i < constants.size(); ++i)
            consts_[constants[i]] = i;
    }

    CompiledEquation compile(const Equation& e) {
        vars_.clear();
        CompiledEquation out;
        out.lhs = word(e.lhs);
        out.rhs = word(e.rhs);
        out.variables = vars_.size();
        return out;
    }

private:
    std::vector<Term> word(const Word& w) {
        std::vector<Term> out;
        for (const auto& a : w) {
            Term t{a.kind, 0, {}};
            if (a.kind == AtomKind::var)
                t.id = vars_.emplace(a.name, vars_.size()).first->second;
            else if (a.kind == AtomKind::constant) {
                auto it = consts_.find(a.name);
                if (it == consts_.end())
                    throw InputError("undeclared constant '" + a.name + "'");
                t.id = it->second;
            } else {
                t.arg = word(a.arg);
            }
            out.push_back(std::move(t));
        }
        return out;
    }

    std::map<std::string, std::size_t> consts_;
    std::map<std::string, std::size_t> vars_;
};

struct Env {
    const CayleyTable* table;
    const UnaryMap* g;
    const UnaryMap* inverse;
    const std::vector<std::size_t>* constants;
    const std::vector<std::size_t>* vars;
};

inline std::size_t eval(const std::vector<Term>& w, const Env& env) {
    std::size_t acc = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Term& t = w[i];
        std::size_t v = 0;
        switch (t.kind) {
        case AtomKind::var:
            v = (*env.vars)[t.id];
            break;
        case AtomKind::constant:
            v = (*env.constants)[t.id];
            break;
        case AtomKind::gapp:
            if (!env.g)
                throw InputError("model does not interpret g");
            v = (*env.g)[eval(t.arg, env)];
            break;
        case AtomKind::inv:
            if (!env.inverse)
                throw InputError("model does not interpret the inverse mark");
            v = (*env.inverse)[eval(t.arg, env)];
            break;
        }
        acc = i == 0 ? v : env.table->at(acc, v);
    }
    return acc;
}

/// First assignment (as variable values) under which `e` fails, if any.
inline std::optional<std::vector<std::size_t>> falsify(const CompiledEquation& e, Env env) {
    const std::size_t n = env.table->order();
    std::vector<std::size_t> vars(e.variables, 0);
    env.vars = &vars;
    while (true) {
        if (eval(e.lhs, env) != eval(e.rhs, env))
            return vars;
        std::size_t i = 0;
        while (i < vars.size() && vars[i] + 1 == n)
            vars[i++] = 0;
        if (i == vars.size())
            return std::nullopt;
        ++vars[i];
    }
}

inline bool next_tuple(std::vector<std::size_t>& v, std::size_t n) {
    std::size_t i = 0;
    while (i < v.size() && v[i] + 1 == n)
        v[i++] = 0;
    if (i == v.size())
        return false;
    ++v[i];
    return true;
}

inline std::string tuple_text(const std::vector<std::size_t>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + std::to_string(v[i]);
    return out + "]";
}

} // namespace detail

/// Whether `e` holds in `m` under every assignment of its variables.
inline bool holds(const Equation& e, const Model& m) {
    if (!m.table)
        throw InputError("model has no table");
    std::vector<std::string> names;
    std::vector<std::size_t> values;
    for (const auto& [k, v] : m.constants) {
        names.push_back(k);
        values.push_back(v);
    }
    detail::Compiler comp(names);
    const auto ce = comp.compile(e);
    return !detail::falsify(ce, {m.table, m.g, m.inverse, &values, nullptr});
}

struct SoundnessReport {
    std::string script;
    std::size_t max_order = 0;
    std::uint64_t tables = 0;
    std::uint64_t models = 0; ///< interpretations satisfying every hypothesis
    std::size_t claims_checked = 0;
    std::uint64_t discrepancy_count = 0;
    std::vector<std::string> discrepancies; ///< first few, with the model

    bool sound() const noexcept { return discrepancy_count == 0; }
};

inline constexpr std::size_t max_soundness_order = 4;

/// Checks every claim verified in `verdict` against every model of order
/// <= max_order satisfying the hypotheses. Cancellative scripts range over
/// cancellative tables only.
inline SoundnessReport audit_soundness(const ProofScript& script, const ScriptVerdict& verdict,
                                       std::size_t max_order = max_soundness_order) {
    if (max_order == 0 || max_order > max_soundness_order)
        throw InputError("soundness audit order must be in [1, " + std::to_string(max_soundness_order) + "]");
    Signature sig;
    for (const auto& h : script.hypotheses)
        sig.add(h);
    for (const auto& c : script.claims)
        sig.add(c.goal);
    for (const auto& c : sig.constants)
        if (std::find(script.constants.begin(), script.constants.end(), c) == script.constants.end())
            throw InputError("undeclared constant '" + c + "'");

    detail::Compiler comp(script.constants);
    std::vector<detail::CompiledEquation> hyps;
    for (const auto& h : script.hypotheses)
        hyps.push_back(comp.compile(h));
    std::vector<std::pair<std::string, detail::CompiledEquation>> claims;
    for (const auto& cv : verdict.claims)
        if (cv.verified)
            claims.emplace_back(cv.name, comp.compile(cv.goal));

    SoundnessReport rep;
    rep.script = script.name;
    rep.max_order = max_order;
    rep.claims_checked = claims.size();

    for (std::size_t n = 1; n <= max_order; ++n) {
        EnumerationOptions opt;
        opt.order = n;
        if (script.mode == Mode::cancellative)
            opt.filter = [](const Semigroup& s) { return is_cancellative(s); };
        enumerate_semigroups(opt, [&](const Semigroup& s) {
            ++rep.tables;
            UnaryMap g(sig.uses_g ? n : 0, 0), inv(sig.uses_inverse ? n : 0, 0);
            std::vector<std::size_t> consts(script.constants.size(), 0);
            do {
                do {
                    do {
                        detail::Env env{&s, sig.uses_g ? &g : nullptr, sig.uses_inverse ? &inv : nullptr,
                                        &consts, nullptr};
                        bool model = true;
                        for (const auto& h : hyps)
                            if (detail::falsify(h, env)) {
                                model = false;
                                break;
                            }
                        if (!model)
                            continue;
                        ++rep.models;
                        for (const auto& [name, ce] : claims) {
                            auto bad = detail::falsify(ce, env);
                            if (!bad)
                                continue;
                            ++rep.discrepancy_count;
                            if (rep.discrepancies.size() < 8) {
                                std::string d = "claim " + name + " fails in table " +
                                                detail::tuple_text(std::vector<std::size_t>(s.cells().begin(), s.cells().end()));
                                if (sig.uses_g)
                                    d += " g=" + detail::tuple_text(g);
                                if (sig.uses_inverse)
                                    d += " inv=" + detail::tuple_text(inv);
                                if (!consts.empty())
                                    d += " constants=" + detail::tuple_text(consts);
                                d += " at variables " + detail::tuple_text(*bad);
                                rep.discrepancies.push_back(std::move(d));
                            }
                        }
                    } while (detail::next_tuple(consts, n));
                } while (detail::next_tuple(inv, n));
            } while (detail::next_tuple(g, n));
        });
    }
    return rep;
}

} // namespace semicomm::proof

#endif

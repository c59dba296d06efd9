#ifndef SEMICOMM_PROOF_WORD_HPP
#define SEMICOMM_PROOF_WORD_HPP

// Terms of semigroup equational logic, flattened modulo associativity. A
// Word is a nonempty product of atoms; an atom is a variable, a constant, an
// application g(w) of the unary symbol g, or an inverse w'.

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "../error.hpp"

namespace semicomm::proof {

enum class AtomKind { var, constant, gapp, inv };

struct Atom {
    AtomKind kind = AtomKind::var;
    std::string name;     ///< var / constant
    std::vector<Atom> arg; ///< gapp / inv argument word

    static Atom variable(std::string n) { return Atom{AtomKind::var, std::move(n), {}}; }
    static Atom constant(std::string n) { return Atom{AtomKind::constant, std::move(n), {}}; }
    static Atom g(std::vector<Atom> w) { return Atom{AtomKind::gapp, {}, std::move(w)}; }
    static Atom inverse(std::vector<Atom> w) { return Atom{AtomKind::inv, {}, std::move(w)}; }

    bool compound() const noexcept { return kind == AtomKind::gapp || kind == AtomKind::inv; }

    friend bool operator==(const Atom&, const Atom&) = default;
};

using Word = std::vector<Atom>;

struct Equation {
    std::string name;
    Word lhs;
    Word rhs;

    /// Literal equality of both sides; the name is not compared.
    bool same_sides(const Equation& other) const { return lhs == other.lhs && rhs == other.rhs; }
};

using Substitution = std::map<std::string, Word>;

std::string render(const Word& w);

inline std::string render(const Atom& a) {
    switch (a.kind) {
    case AtomKind::var:
    case AtomKind::constant:
        return a.name;
    case AtomKind::gapp:
        return "g(" + render(a.arg) + ")";
    case AtomKind::inv:
        if (a.arg.size() == 1)
            return render(a.arg.front()) + "'";
        return "(" + render(a.arg) + ")'";
    }
    return "?";
}

inline std::string render(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            out += " * ";
        out += render(w[i]);
    }
    return out;
}

inline std::string render(const Equation& e) { return render(e.lhs) + " = " + render(e.rhs); }

inline void collect_variables(const Word& w, std::set<std::string>& out) {
    for (const auto& a : w) {
        if (a.kind == AtomKind::var)
            out.insert(a.name);
        else if (a.compound())
            collect_variables(a.arg, out);
    }
}

inline std::set<std::string> variables(const Equation& e) {
    std::set<std::string> out;
    collect_variables(e.lhs, out);
    collect_variables(e.rhs, out);
    return out;
}

/// Function symbols and constants occurring in a word.
struct Signature {
    bool uses_g = false;
    bool uses_inverse = false;
    std::set<std::string> constants;

    void add(const Word& w) {
        for (const auto& a : w) {
            if (a.kind == AtomKind::constant)
                constants.insert(a.name);
            if (a.kind == AtomKind::gapp)
                uses_g = true;
            if (a.kind == AtomKind::inv)
                uses_inverse = true;
            if (a.compound())
                add(a.arg);
        }
    }
    void add(const Equation& e) {
        add(e.lhs);
        add(e.rhs);
    }
};

/// Simultaneous substitution; unbound variables stay as they are.
inline Word substitute(const Word& w, const Substitution& sigma) {
    Word out;
    out.reserve(w.size());
    for (const auto& a : w) {
        switch (a.kind) {
        case AtomKind::var: {
            auto it = sigma.find(a.name);
            if (it == sigma.end())
                out.push_back(a);
            else
                out.insert(out.end(), it->second.begin(), it->second.end());
            break;
        }
        case AtomKind::constant:
            out.push_back(a);
            break;
        case AtomKind::gapp:
            out.push_back(Atom::g(substitute(a.arg, sigma)));
            break;
        case AtomKind::inv:
            out.push_back(Atom::inverse(substitute(a.arg, sigma)));
            break;
        }
    }
    return out;
}

} // namespace semicomm::proof

#endif

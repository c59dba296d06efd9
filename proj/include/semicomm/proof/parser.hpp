#ifndef SEMICOMM_PROOF_PARSER_HPP
#define SEMICOMM_PROOF_PARSER_HPP

// Surface syntax, Prover9 style:
//   word   := factor ("*" factor)*
//   factor := primary postfix*
//   primary:= ident | "g" "(" word ")" | "(" word ")"
//   postfix:= "'" | "^" digits
// Parentheses flatten. w' wraps the whole factor so far; w^n repeats it.
// "g" is reserved for the unary map.

#include <cctype>
#include <cstddef>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "../error.hpp"
#include "script.hpp"
#include "word.hpp"

namespace semicomm::proof {

namespace detail {

inline constexpr std::size_t max_power_sugar = 64;
inline constexpr std::size_t max_nesting = 64;

class Cursor {
public:
    Cursor(std::string_view text, std::size_t line, std::size_t first_column,
           const std::set<std::string>* constants)
        : text_(text), line_(line), col0_(first_column), constants_(constants) {}

    [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }
    [[noreturn]] void fail_at(std::size_t pos, const std::string& what) const {
        throw SyntaxError(what, line_, col0_ + pos);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c))
            fail(std::string("expected '") + c + "'" + found());
    }
    std::string found() {
        if (at_end())
            return ", found end of input";
        return std::string(", found '") + text_[pos_] + "'";
    }
    void expect_end() {
        if (!at_end())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    }

    static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
    static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    std::string ident() {
        skip_ws();
        if (pos_ >= text_.size() || !ident_start(text_[pos_]))
            fail("expected identifier" + found());
        const std::size_t b = pos_;
        while (pos_ < text_.size() && ident_char(text_[pos_]))
            ++pos_;
        return std::string(text_.substr(b, pos_ - b));
    }

    std::size_t number() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected number" + found());
        std::size_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<std::size_t>(text_[pos_] - '0');
            if (v > 1'000'000)
                fail("number too large");
            ++pos_;
        }
        return v;
    }

    Word word(std::size_t depth = 0) {
        if (depth > max_nesting)
            fail("nesting too deep");
        Word w = factor(depth);
        while (accept('*')) {
            Word f = factor(depth);
            w.insert(w.end(), f.begin(), f.end());
        }
        return w;
    }

    Equation equation(std::string name) {
        Equation e;
        e.name = std::move(name);
        e.lhs = word();
        expect('=');
        e.rhs = word();
        return e;
    }

    std::size_t position() const { return pos_; }
    std::string_view rest() const { return text_.substr(pos_); }

private:
    Word factor(std::size_t depth) {
        const char c = peek();
        Word w;
        if (c == '(') {
            ++pos_;
            w = word(depth + 1);
            expect(')');
        } else if (ident_start(c)) {
            const std::size_t at = pos_;
            std::string name = ident();
            if (name == "g") {
                if (peek() != '(')
                    fail_at(at, "'g' is the unary map and must be applied, as in g(x)");
                ++pos_;
                Word arg = word(depth + 1);
                expect(')');
                w.push_back(Atom::g(std::move(arg)));
            } else if (constants_ && constants_->count(name)) {
                w.push_back(Atom::constant(std::move(name)));
            } else {
                w.push_back(Atom::variable(std::move(name)));
            }
        } else {
            fail("expected a factor" + found());
        }
        while (true) {
            if (accept('\'')) {
                Word inner = std::move(w);
                w = Word{Atom::inverse(std::move(inner))};
            } else if (peek() == '^') {
                ++pos_;
                const std::size_t at = pos_;
                const std::size_t n = number();
                if (n == 0 || n > max_power_sugar)
                    fail_at(at, "exponent must be in [1, " + std::to_string(max_power_sugar) + "]");
                Word base = std::move(w);
                w.clear();
                for (std::size_t i = 0; i < n; ++i)
                    w.insert(w.end(), base.begin(), base.end());
            } else {
                break;
            }
        }
        return w;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_;
    std::size_t col0_;
    const std::set<std::string>* constants_;
};

} // namespace detail

inline Word parse_word(std::string_view text, const std::set<std::string>& constants = {}) {
    detail::Cursor c(text, 1, 1, &constants);
    Word w = c.word();
    c.expect_end();
    return w;
}

inline Equation parse_equation(std::string_view text, const std::set<std::string>& constants = {},
                               std::string name = "") {
    detail::Cursor c(text, 1, 1, &constants);
    Equation e = c.equation(std::move(name));
    c.expect_end();
    return e;
}

namespace detail {

class ScriptParser {
public:
    explicit ScriptParser(std::string_view text) : text_(text) {}

    ProofScript run() {
        std::size_t line_no = 0;
        std::size_t b = 0;
        while (b <= text_.size()) {
            std::size_t e = text_.find('\n', b);
            if (e == std::string_view::npos)
                e = text_.size();
            ++line_no;
            line(text_.substr(b, e - b), line_no);
            b = e + 1;
        }
        if (open_)
            throw SyntaxError("claim '" + script_.claims.back().goal.name + "' has no qed", line_no, 1);
        return std::move(script_);
    }

private:
    void line(std::string_view raw, std::size_t n) {
        if (!raw.empty() && raw.back() == '\r')
            raw.remove_suffix(1);
        Cursor c(raw, n, 1, &constants_);
        if (c.at_end() || c.peek() == '#' || c.peek() == '%')
            return;
        const std::size_t at = c.position();
        std::string word = directive(c);
        if (word == "mode")
            mode(c);
        else if (word == "const")
            constants(c);
        else if (word == "hyp")
            hypothesis(c);
        else if (word == "claim")
            claim(c, n);
        else if (word == "start")
            start(c);
        else if (word == "rw")
            step(c, n, rewrite(c));
        else if (word == "cancel-left")
            step(c, n, CancelLeft{count(c)});
        else if (word == "cancel-right")
            step(c, n, CancelRight{count(c)});
        else if (word == "refl")
            step(c, n, Reflexivity{});
        else if (word == "symm")
            step(c, n, Symmetry{});
        else if (word == "qed")
            qed(c);
        else
            c.fail_at(at, "unknown directive '" + word + "'");
    }

    static std::string directive(Cursor& c) {
        std::string w = c.ident();
        // cancel-left / cancel-right
        while (c.rest().size() > 1 && c.rest().front() == '-' && Cursor::ident_start(c.rest()[1])) {
            c.expect('-');
            w += "-" + c.ident();
        }
        return w;
    }

    void mode(Cursor& c) {
        if (saw_mode_)
            c.fail("mode declared twice");
        if (!script_.hypotheses.empty() || !script_.claims.empty())
            c.fail("mode must precede hypotheses and claims");
        const std::size_t at = c.position();
        const std::string m = c.ident();
        if (m == "plain")
            script_.mode = Mode::plain;
        else if (m == "cancellative")
            script_.mode = Mode::cancellative;
        else
            c.fail_at(at, "mode must be 'plain' or 'cancellative'");
        saw_mode_ = true;
        c.expect_end();
    }

    void constants(Cursor& c) {
        if (!script_.hypotheses.empty() || !script_.claims.empty())
            c.fail("constants must be declared before hypotheses and claims");
        do {
            const std::size_t at = c.position();
            std::string name = c.ident();
            if (name == "g")
                c.fail_at(at, "'g' is reserved");
            if (!constants_.insert(name).second)
                c.fail_at(at, "constant '" + name + "' declared twice");
            script_.constants.push_back(std::move(name));
        } while (!c.at_end());
    }

    std::string new_name(Cursor& c) {
        const std::size_t at = c.position();
        std::string name = c.ident();
        if (!names_.insert(name).second)
            c.fail_at(at, "name '" + name + "' already used");
        c.expect(':');
        return name;
    }

    void hypothesis(Cursor& c) {
        if (open_)
            c.fail("hypothesis inside a claim");
        if (!script_.claims.empty())
            c.fail("hypotheses must precede claims");
        std::string name = new_name(c);
        script_.hypotheses.push_back(c.equation(std::move(name)));
        c.expect_end();
    }

    void claim(Cursor& c, std::size_t n) {
        if (open_)
            c.fail("previous claim has no qed");
        std::string name = new_name(c);
        ClaimBlock block;
        block.goal = c.equation(std::move(name));
        block.line = n;
        c.expect_end();
        script_.claims.push_back(std::move(block));
        open_ = true;
    }

    ClaimBlock& current(Cursor& c, const char* what) {
        if (!open_)
            c.fail(std::string(what) + " outside a claim");
        return script_.claims.back();
    }

    void start(Cursor& c) {
        ClaimBlock& block = current(c, "start");
        if (block.start || !block.steps.empty())
            c.fail("start must come first and only once");
        Word w = c.word();
        c.expect_end();
        block.start = std::move(w);
    }

    static std::size_t count(Cursor& c) {
        const std::size_t at = c.position();
        const std::size_t k = c.number();
        if (k == 0)
            c.fail_at(at, "cancellation count must be positive");
        return k;
    }

    static Position position(Cursor& c) {
        Position p;
        if (Cursor::ident_start(c.peek())) {
            const std::size_t at = c.position();
            const std::string side = c.ident();
            if (side == "lhs")
                p.side = Side::lhs;
            else if (side == "rhs")
                p.side = Side::rhs;
            else
                c.fail_at(at, "expected 'lhs:' or 'rhs:'");
            c.expect(':');
        }
        std::vector<std::size_t> parts{c.number()};
        while (c.rest().size() > 0 && c.rest().front() == '.') {
            c.expect('.');
            parts.push_back(c.number());
        }
        p.offset = parts.back();
        parts.pop_back();
        p.descent = std::move(parts);
        return p;
    }

    Rewrite rewrite(Cursor& c) {
        Rewrite r;
        const std::size_t at = c.position();
        const std::string dir = c.ident();
        if (dir == "L2R")
            r.direction = Direction::l2r;
        else if (dir == "R2L")
            r.direction = Direction::r2l;
        else
            c.fail_at(at, "direction must be L2R or R2L");
        r.rule = c.ident();
        const std::size_t kw = c.position();
        if (c.ident() != "at")
            c.fail_at(kw, "expected 'at'");
        r.at = position(c);
        if (c.at_end())
            return r;
        const std::size_t sk = c.position();
        if (c.ident() != "sub")
            c.fail_at(sk, "expected 'sub'");
        c.expect('{');
        if (!c.accept('}')) {
            do {
                const std::size_t vat = c.position();
                std::string v = c.ident();
                if (v == "g" || constants_.count(v))
                    c.fail_at(vat, "'" + v + "' is not a variable");
                c.expect('=');
                Word w = c.word();
                if (!r.sub.emplace(v, std::move(w)).second)
                    c.fail_at(vat, "variable '" + v + "' bound twice");
            } while (c.accept(';'));
            c.expect('}');
        }
        return r;
    }

    void step(Cursor& c, std::size_t n, StepKind kind) {
        ClaimBlock& block = current(c, "proof step");
        c.expect_end();
        block.steps.push_back(ProofStep{std::move(kind), n});
    }

    void qed(Cursor& c) {
        current(c, "qed");
        c.expect_end();
        open_ = false;
    }

    std::string_view text_;
    ProofScript script_;
    std::set<std::string> constants_;
    std::set<std::string> names_;
    bool open_ = false;
    bool saw_mode_ = false;
};

} // namespace detail

inline ProofScript parse_script(std::string_view text, std::string name = "") {
    ProofScript s = detail::ScriptParser(text).run();
    s.name = std::move(name);
    return s;
}

inline ProofScript load_script(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string name = path;
    if (auto slash = name.find_last_of('/'); slash != std::string::npos)
        name = name.substr(slash + 1);
    if (auto dot = name.rfind(".prf"); dot != std::string::npos && dot + 4 == name.size())
        name.resize(dot);
    return parse_script(buf.str(), name);
}

} // namespace semicomm::proof

#endif

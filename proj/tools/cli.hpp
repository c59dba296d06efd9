#ifndef SEMICOMM_TOOLS_CLI_HPP
#define SEMICOMM_TOOLS_CLI_HPP

// Command-line front end. Every result is built as an ordered JSON record;
// --format machine prints it as one JSON line, text mode renders the same
// record as indented key: value lines.
//
// Exit codes: 0 success / holds, 1 violation or failed claim,
// 2 usage or parse error, 3 hypothesis never satisfied.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <semicomm/audit.hpp>
#include <semicomm/cayley_table.hpp>
#include <semicomm/classify.hpp>
#include <semicomm/construct.hpp>
#include <semicomm/decompose.hpp>
#include <semicomm/enumerate.hpp>
#include <semicomm/error.hpp>
#include <semicomm/proof/checker.hpp>
#include <semicomm/proof/model.hpp>
#include <semicomm/proof/parser.hpp>
#include <semicomm/proof/prover9.hpp>
#include <semicomm/sg_format.hpp>

namespace semicomm::cli {

using Json = nlohmann::ordered_json;

enum Exit : int { ok = 0, violation = 1, usage = 2, vacuous = 3 };

class Printer {
public:
    Printer(std::ostream& out, bool machine) : out_(out), machine_(machine) {}

    bool machine() const { return machine_; }

    void emit(const Json& record) {
        if (machine_) {
            out_ << record.dump() << '\n';
            return;
        }
        text(record, 0);
        out_ << '\n';
    }

    std::ostream& raw() { return out_; }

private:
    static std::string scalar(const Json& v) {
        if (v.is_string())
            return v.get<std::string>();
        if (v.is_null())
            return "none";
        return v.dump();
    }

    static bool all_scalars(const Json& arr) {
        for (const auto& e : arr)
            if (e.is_structured())
                return false;
        return true;
    }

    void text(const Json& obj, std::size_t indent) {
        const std::string pad(indent, ' ');
        for (auto it = obj.begin(); it != obj.end(); ++it) {
            const Json& v = it.value();
            if (!v.is_structured()) {
                out_ << pad << it.key() << ": " << scalar(v) << '\n';
            } else if (v.is_array() && all_scalars(v)) {
                out_ << pad << it.key() << ": [";
                for (std::size_t i = 0; i < v.size(); ++i)
                    out_ << (i ? ", " : "") << scalar(v[i]);
                out_ << "]\n";
            } else if (v.is_array()) {
                out_ << pad << it.key() << ":\n";
                for (const auto& e : v) {
                    if (e.is_object()) {
                        out_ << pad << "  -\n";
                        text(e, indent + 4);
                    } else {
                        out_ << pad << "  - " << e.dump() << '\n';
                    }
                }
            } else {
                out_ << pad << it.key() << ":\n";
                text(v, indent + 2);
            }
        }
    }

    std::ostream& out_;
    bool machine_;
};

inline Json table_json(const CayleyTable& s) {
    Json j;
    j["order"] = s.order();
    Json rows = Json::array();
    for (std::size_t i = 0; i < s.order(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < s.order(); ++k)
            row.push_back(s.at(i, k));
        rows.push_back(row);
    }
    j["rows"] = rows;
    if (s.has_names())
        j["names"] = *s.names();
    return j;
}

inline Semigroup load_semigroup(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    return Semigroup(read_sg(in));
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot write " + path);
    out << content;
    if (!out)
        throw InputError("write failed: " + path);
}

// ---------------------------------------------------------------- construct

struct ConstructArgs {
    std::string name;
    std::size_t n = 2;
    std::size_t index = 1;
    std::size_t period = 1;
    std::size_t p = 3;
    bool add_identity = false;
    std::string output;
};

inline const std::vector<std::string>& construction_names() {
    static const std::vector<std::string> names{"brandt_b2", "left_zero", "right_zero", "cyclic",
                                                "klein",     "monogenic", "chain",      "heisenberg",
                                                "symmetric"};
    return names;
}

inline Semigroup build(const ConstructArgs& a) {
    Semigroup s = [&]() -> Semigroup {
        if (a.name == "brandt_b2")
            return brandt_b2();
        if (a.name == "left_zero")
            return left_zero(a.n);
        if (a.name == "right_zero")
            return right_zero(a.n);
        if (a.name == "cyclic")
            return cyclic_group(a.n);
        if (a.name == "klein")
            return klein_group();
        if (a.name == "monogenic")
            return monogenic(a.index, a.period);
        if (a.name == "chain")
            return chain_semilattice(a.n);
        if (a.name == "heisenberg")
            return heisenberg_mod(a.p);
        if (a.name == "symmetric")
            return symmetric_group(a.n);
        throw InputError("unknown construction '" + a.name + "'");
    }();
    return a.add_identity ? with_identity(s) : s;
}

inline int cmd_construct(const ConstructArgs& a, Printer& pr) {
    Semigroup s = build(a);
    const std::string comment = "construct " + a.name;
    if (!a.output.empty()) {
        write_file(a.output, to_sg(s, comment));
        Json j;
        j["record"] = "construct";
        j["name"] = a.name;
        j["order"] = s.order();
        j["output"] = a.output;
        pr.emit(j);
    } else if (pr.machine()) {
        Json j;
        j["record"] = "table";
        j["name"] = a.name;
        j.update(table_json(s));
        pr.emit(j);
    } else {
        write_sg(pr.raw(), s, comment);
    }
    return ok;
}

// ----------------------------------------------------------------- classify

inline Json classification_json(const Semigroup& s) {
    const auto r = classify(s);
    Json j;
    j["order"] = s.order();
    j["commutative"] = r.commutative;
    j["cancellative"] = r.cancellative;
    j["separative"] = r.separative;
    j["regular"] = r.regular;
    j["inverse"] = r.inverse;
    j["completely_regular"] = r.completely_regular;
    j["clifford"] = r.clifford;
    j["group"] = r.group;
    j["has_identity"] = r.has_identity;
    j["identity"] = r.identity ? Json(s.name(*r.identity)) : Json(nullptr);
    j["idempotent_count"] = r.idempotent_count;
    if (auto c = commutativity(s); !c)
        j["noncommuting_pair"] = {s.name(c.counterexample->first), s.name(c.counterexample->second)};
    return j;
}

inline int cmd_classify(const std::string& path, Printer& pr) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    auto tables = read_sg_stream(in);
    if (tables.empty())
        throw InputError(path + ": no tables");
    for (std::size_t i = 0; i < tables.size(); ++i) {
        Semigroup s(tables[i]);
        Json j;
        j["record"] = "classification";
        j["file"] = path;
        if (tables.size() > 1)
            j["index"] = i;
        j.update(classification_json(s));
        pr.emit(j);
    }
    return ok;
}

// ---------------------------------------------------------------- decompose

inline int cmd_decompose(const std::string& path, const std::string& outdir, Printer& pr) {
    Semigroup s = load_semigroup(path);
    auto d = decompose_semilattice(s);
    Json j;
    j["record"] = "decomposition";
    j["file"] = path;
    j["order"] = s.order();
    j["components"] = d.components.size();
    Json comps = Json::array();
    for (std::size_t i = 0; i < d.components.size(); ++i) {
        Json c;
        c["class"] = d.partition.class_ids()[i];
        std::vector<std::string> names;
        for (auto e : d.members[i])
            names.push_back(s.name(e));
        c["members"] = names;
        c["cancellative"] = is_cancellative(d.components[i]);
        c["commutative"] = commutativity(d.components[i]).holds();
        comps.push_back(c);
    }
    j["classes"] = comps;
    Json meet = Json::array();
    for (std::size_t a = 0; a < d.meet_table.order(); ++a) {
        Json row = Json::array();
        for (std::size_t b = 0; b < d.meet_table.order(); ++b)
            row.push_back(d.partition.class_ids()[d.meet_table.at(a, b)]);
        meet.push_back(row);
    }
    j["meet"] = meet;
    const auto audit = audit_prop_1_2(s);
    j["separative"] = audit.separative;
    j["all_components_cancellative"] = audit.all_components_cancellative;
    j["separative_agrees"] = audit.agree;
    if (!outdir.empty()) {
        std::filesystem::create_directories(outdir);
        write_file(outdir + "/quotient.sg", to_sg(d.meet_table, "semilattice quotient of " + path));
        for (std::size_t i = 0; i < d.components.size(); ++i)
            write_file(outdir + "/component_" + std::to_string(d.partition.class_ids()[i]) + ".sg",
                       to_sg(d.components[i], "component of " + path));
        j["output"] = outdir;
    }
    pr.emit(j);
    return ok;
}

// ---------------------------------------------------------------- enumerate

inline const std::map<std::string, std::function<bool(const Semigroup&)>>& predicates() {
    static const std::map<std::string, std::function<bool(const Semigroup&)>> preds{
        {"commutative", [](const Semigroup& s) { return commutativity(s).holds(); }},
        {"cancellative", [](const Semigroup& s) { return is_cancellative(s); }},
        {"separative", [](const Semigroup& s) { return separativity(s).holds(); }},
        {"regular", [](const Semigroup& s) { return check_regularity(s).regular; }},
        {"inverse", [](const Semigroup& s) { return check_regularity(s).inverse; }},
        {"completely_regular", [](const Semigroup& s) { return check_regularity(s).completely_regular; }},
        {"clifford", [](const Semigroup& s) { return check_regularity(s).clifford; }},
        {"group", [](const Semigroup& s) { return check_regularity(s).group; }},
        {"monoid", [](const Semigroup& s) { return identity_element(s).has_value(); }},
    };
    return preds;
}

struct EnumerateArgs {
    std::size_t order = 1;
    bool count_only = false;
    bool iso = false;
    std::vector<std::string> filters;
    std::size_t jobs = 1;
    std::string output;
};

inline int cmd_enumerate(const EnumerateArgs& a, Printer& pr) {
    EnumerationOptions opt;
    opt.order = a.order;
    opt.up_to_iso = a.iso;
    std::vector<std::function<bool(const Semigroup&)>> fs;
    for (const auto& name : a.filters) {
        auto it = predicates().find(name);
        if (it == predicates().end())
            throw InputError("unknown filter '" + name + "'");
        fs.push_back(it->second);
    }
    if (!fs.empty())
        opt.filter = [fs](const Semigroup& s) {
            for (const auto& f : fs)
                if (!f(s))
                    return false;
            return true;
        };

    std::size_t count = 0;
    std::vector<CayleyTable> tables;
    if (a.count_only) {
        auto accs = enumerate_partitioned<std::size_t>(opt, a.jobs, [](std::size_t& c, const Semigroup&) { ++c; });
        for (auto c : accs)
            count += c;
    } else {
        auto accs = enumerate_partitioned<std::vector<CayleyTable>>(
            opt, a.jobs, [](std::vector<CayleyTable>& v, const Semigroup& s) { v.push_back(s.table()); });
        for (auto& v : accs)
            for (auto& t : v)
                tables.push_back(std::move(t));
        std::sort(tables.begin(), tables.end(), lex_less);
        count = tables.size();
    }

    std::string filter_text;
    for (const auto& f : a.filters)
        filter_text += (filter_text.empty() ? "" : ",") + f;

    if (!a.count_only) {
        if (!a.output.empty()) {
            std::ofstream out(a.output);
            if (!out)
                throw InputError("cannot write " + a.output);
            for (std::size_t i = 0; i < tables.size(); ++i) {
                if (i)
                    out << '\n';
                write_sg(out, tables[i]);
            }
        } else if (pr.machine()) {
            for (const auto& t : tables) {
                Json j;
                j["record"] = "table";
                j.update(table_json(t));
                pr.emit(j);
            }
        } else {
            for (const auto& t : tables) {
                write_sg(pr.raw(), t);
                pr.raw() << '\n';
            }
        }
    }
    Json j;
    j["record"] = "enumeration";
    j["order"] = a.order;
    j["up_to_isomorphism"] = a.iso;
    j["filter"] = filter_text.empty() ? Json(nullptr) : Json(filter_text);
    j["count"] = count;
    if (!a.output.empty())
        j["output"] = a.output;
    pr.emit(j);
    return ok;
}

// ------------------------------------------------------------------- verify

inline int exit_for(Verdict v) {
    switch (v) {
    case Verdict::holds:
        return ok;
    case Verdict::violated:
        return violation;
    case Verdict::hypothesis_never_satisfied:
        return vacuous;
    }
    return violation;
}

inline constexpr std::size_t max_reported_violations = 5;

inline Json audit_json(const AuditResult& r) {
    Json j;
    j["claim"] = r.claim;
    j["universe"] = r.universe;
    j["models_checked"] = r.models_checked;
    j["hypothesis_models"] = r.hypothesis_models;
    j["violation_count"] = r.violations.size();
    if (!r.checks.empty()) {
        Json checks = Json::array();
        for (const auto& c : r.checks) {
            Json e;
            e["check"] = c.name;
            e["passed"] = c.passed;
            if (!c.detail.empty())
                e["detail"] = c.detail;
            checks.push_back(e);
        }
        j["checks"] = checks;
    }
    if (!r.violations.empty()) {
        Json vs = Json::array();
        for (std::size_t i = 0; i < r.violations.size() && i < max_reported_violations; ++i) {
            const auto& v = r.violations[i];
            Json e;
            e["description"] = v.description;
            if (v.table) {
                std::vector<std::string> w;
                for (auto x : v.witness)
                    w.push_back(v.table->name(x));
                e["witness"] = w;
                e["table"] = table_json(*v.table);
            }
            vs.push_back(e);
        }
        j["violations"] = vs;
    }
    if (r.hypothesis_witness)
        j["hypothesis_witness"] = *r.hypothesis_witness;
    if (!r.notes.empty())
        j["notes"] = r.notes;
    j["verdict"] = to_string(r.verdict);
    return j;
}

struct VerifyArgs {
    std::string claim;
    std::size_t max_order = 4;
    std::uint64_t p = 2, q = 3, k = 2;
    std::size_t bound = 8;
    std::string universe = "enumerated";
    std::size_t jobs = 1;
};

inline int cmd_verify(const VerifyArgs& a, Printer& pr) {
    auto claim = parse_claim(a.claim);
    if (!claim)
        throw InputError("unknown claim '" + a.claim + "'");
    ClaimParams params{a.p, a.q, a.k, a.bound};
    if (*claim == Claim::main1 && (a.p < 1 || a.q < 1 || std::gcd(a.p, a.q) != 1))
        throw InputError("main1 needs coprime positive --p and --q");
    if (*claim == Claim::lemma31 && a.k < 2)
        throw InputError("lemma31 needs --k >= 2");
    if ((*claim == Claim::main2_part1 || *claim == Claim::main2_part2) && a.bound < 3)
        throw InputError("--bound must be at least 3");
    AuditResult r;
    if (a.universe == "enumerated") {
        r = audit_theorem(*claim, a.max_order, params, a.jobs);
    } else if (a.universe == "clifford") {
        if (a.max_order > 8)
            throw InputError("clifford universe is built up to order 8");
        r = audit_theorem_on(*claim, chain_clifford_semigroups(a.max_order),
                             "strong semilattices of small groups over chains, order <= " +
                                 std::to_string(a.max_order),
                             params);
    } else {
        throw InputError("--universe must be 'enumerated' or 'clifford'");
    }
    Json j;
    j["record"] = "audit";
    j.update(audit_json(r));
    pr.emit(j);
    return exit_for(r.verdict);
}

inline int cmd_audit_example(const std::string& id, Printer& pr) {
    auto ex = parse_example(id);
    if (!ex)
        throw InputError("unknown example '" + id + "'");
    auto r = audit_counterexample(*ex);
    Json j;
    j["record"] = "example";
    j["example"] = id;
    j.update(audit_json(r));
    pr.emit(j);
    return exit_for(r.verdict);
}

// ------------------------------------------------------------------- replay

inline int cmd_replay(const std::string& path, bool soundness, std::size_t model_order, Printer& pr) {
    auto script = proof::load_script(path);
    auto v = proof::check_proof(script);
    int code = v.all_verified() ? ok : violation;
    for (const auto& c : v.claims) {
        Json j;
        j["record"] = "claim";
        j["script"] = script.name;
        j["claim"] = c.name;
        j["goal"] = proof::render(c.goal);
        Json steps = Json::array();
        for (const auto& t : c.trace) {
            Json s;
            s["step"] = t.step;
            s["line"] = t.line;
            s["before"] = proof::render(t.before);
            if (t.ok)
                s["after"] = proof::render(t.after);
            else
                s["error"] = t.message;
            steps.push_back(s);
        }
        j["steps"] = steps;
        j["verified"] = c.verified;
        if (!c.verified) {
            j["failure"] = c.failure;
            j["failure_line"] = c.failure_line;
        }
        pr.emit(j);
    }
    Json sum;
    sum["record"] = "replay";
    sum["script"] = script.name;
    sum["mode"] = proof::to_string(script.mode);
    sum["claims"] = v.claims.size();
    std::size_t verified = 0;
    for (const auto& c : v.claims)
        verified += c.verified ? 1 : 0;
    sum["verified"] = verified;
    sum["failed_steps"] = v.failed_steps();
    if (soundness) {
        auto rep = proof::audit_soundness(script, v, model_order);
        sum["model_order"] = rep.max_order;
        sum["tables"] = rep.tables;
        sum["models"] = rep.models;
        sum["discrepancies"] = rep.discrepancy_count;
        if (!rep.discrepancies.empty())
            sum["discrepancy_examples"] = rep.discrepancies;
        if (!rep.sound())
            code = violation;
    }
    pr.emit(sum);
    return code;
}

inline int cmd_emit_prover9(std::int64_t p, std::int64_t q, const std::string& theory, Printer& pr) {
    auto t = proof::parse_theory(theory);
    if (!t)
        throw InputError("--theory must be 'group' or 'semigroup_cancellative'");
    const std::string text = proof::emit_prover9(p, q, *t);
    if (pr.machine()) {
        Json j;
        j["record"] = "prover9";
        j["p"] = p;
        j["q"] = q;
        j["theory"] = theory;
        j["input"] = text;
        pr.emit(j);
    } else {
        pr.raw() << text;
    }
    return ok;
}

// ---------------------------------------------------------------------- run

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite-model audits and proof replay for commutativity theorems on semigroups", "semicomm"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "machine"}));

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "Build a named semigroup and write it as .sg");
    construct->add_option("name", ca.name, "Construction")->required()->check(CLI::IsMember(construction_names()));
    construct->add_option("--n", ca.n, "Size parameter (left_zero, right_zero, cyclic, chain, symmetric)");
    construct->add_option("--index", ca.index, "Index of a monogenic semigroup");
    construct->add_option("--period", ca.period, "Period of a monogenic semigroup");
    construct->add_option("--p", ca.p, "Prime for heisenberg");
    construct->add_flag("--with-identity", ca.add_identity, "Adjoin an identity element");
    construct->add_option("-o,--output", ca.output, "Output file (default: standard output)");

    std::string classify_path;
    auto* classify_cmd = app.add_subcommand("classify", "Report class predicates of each table in a .sg file");
    classify_cmd->add_option("file", classify_path, ".sg file")->required();

    std::string decompose_path, decompose_out;
    auto* decompose = app.add_subcommand("decompose", "Least semilattice congruence decomposition");
    decompose->add_option("file", decompose_path, ".sg file")->required();
    decompose->add_option("-o,--output-dir", decompose_out, "Write components and quotient as .sg files");

    EnumerateArgs ea;
    std::string filter_list;
    auto* enumerate = app.add_subcommand("enumerate", "Enumerate associative tables of one order");
    enumerate->add_option("--order", ea.order, "Order (1-5)")->required()->check(CLI::Range(1, 5));
    enumerate->add_flag("--count-only", ea.count_only, "Print only the count");
    enumerate->add_flag("--iso", ea.iso, "One table per isomorphism class");
    enumerate->add_option("--filter", filter_list, "Comma-separated predicates that must all hold");
    enumerate->add_option("--jobs", ea.jobs, "Worker threads")->check(CLI::Range(1, 64));
    enumerate->add_option("-o,--output", ea.output, "Write tables to this .sg file");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Audit a theorem over finite models");
    verify->add_option("--claim", va.claim, "Claim id")->required();
    verify->add_option("--max-order", va.max_order, "Largest order (1-5 enumerated, up to 8 clifford)")
        ->check(CLI::Range(1, 8));
    verify->add_option("--p", va.p, "p for main1")->check(CLI::Range(1, 64));
    verify->add_option("--q", va.q, "q for main1")->check(CLI::Range(1, 64));
    verify->add_option("--k", va.k, "k for lemma31")->check(CLI::Range(2, 64));
    verify->add_option("--bound", va.bound, "Exponent bound for main2")->check(CLI::Range(3, 64));
    verify->add_option("--universe", va.universe, "enumerated or clifford")
        ->check(CLI::IsMember({"enumerated", "clifford"}));
    verify->add_option("--jobs", va.jobs, "Worker threads")->check(CLI::Range(1, 64));

    std::string example;
    auto* audit_ex = app.add_subcommand("audit-example", "Re-check the properties of a counterexample");
    audit_ex->add_option("id", example, "Example id")->required();

    std::string replay_path;
    bool soundness = false;
    std::size_t model_order = proof::max_soundness_order;
    auto* replay = app.add_subcommand("replay", "Check a .prf proof script");
    replay->add_option("file", replay_path, ".prf file")->required();
    replay->add_flag("--models", soundness, "Also check verified claims in all small models of the hypotheses");
    replay->add_option("--model-order", model_order, "Largest model order for --models")->check(CLI::Range(1, 4));

    std::int64_t p9 = 2, q9 = 3;
    std::string theory = "group";
    auto* emit = app.add_subcommand("emit-prover9", "Print Prover9 input for commuting p-th and q-th powers");
    emit->add_option("--p", p9, "p")->required();
    emit->add_option("--q", q9, "q")->required();
    emit->add_option("--theory", theory, "group or semigroup_cancellative");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }

    Printer pr(out, format == "machine");
    try {
        if (*construct)
            return cmd_construct(ca, pr);
        if (*classify_cmd)
            return cmd_classify(classify_path, pr);
        if (*decompose)
            return cmd_decompose(decompose_path, decompose_out, pr);
        if (*enumerate) {
            std::stringstream ss(filter_list);
            for (std::string f; std::getline(ss, f, ',');)
                if (!f.empty())
                    ea.filters.push_back(f);
            return cmd_enumerate(ea, pr);
        }
        if (*verify)
            return cmd_verify(va, pr);
        if (*audit_ex)
            return cmd_audit_example(example, pr);
        if (*replay)
            return cmd_replay(replay_path, soundness, model_order, pr);
        if (*emit)
            return cmd_emit_prover9(p9, q9, theory, pr);
    } catch (const InvariantFailure& e) {
        err << "internal error: " << e.what() << '\n';
        return violation;
    } catch (const ContractViolation& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
    err << "error: no subcommand\n";
    return usage;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, out, err);
}

} // namespace semicomm::cli

#endif

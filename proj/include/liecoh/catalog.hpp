#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "liecoh/cochain.hpp"
#include "liecoh/symplectic.hpp"
#include "liecoh/tseng_yau.hpp"

namespace liecoh {

using Params = std::map<std::string, Rational>;

// ---------------------------------------------------------------------------
// Parameter expressions: +, -, *, /, parentheses, abs(), rational and decimal
// literals, parameter names. Used by catalog differential templates,
// 2-form templates, and constraint sides.
// ---------------------------------------------------------------------------

namespace expr {

struct Cursor {
    std::string_view s;
    std::size_t i = 0;
    void skip() {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    }
    bool at(char c) {
        skip();
        return i < s.size() && s[i] == c;
    }
    bool eat(char c) {
        if (!at(c)) return false;
        ++i;
        return true;
    }
};

inline Rational parse_sum(Cursor& c, const Params& params);

inline Rational parse_factor(Cursor& c, const Params& params) {
    c.skip();
    if (c.eat('-')) return -parse_factor(c, params);
    if (c.eat('+')) return parse_factor(c, params);
    if (c.eat('(')) {
        Rational v = parse_sum(c, params);
        if (!c.eat(')')) throw ParseError(c.i, "expected ')'");
        return v;
    }
    if (c.i < c.s.size() && (detail::is_digit(c.s[c.i]))) {
        // plain integer or decimal; '/' is handled as division below
        std::size_t start = c.i;
        Integer whole = detail::parse_unsigned(c.s, c.i);
        if (c.i < c.s.size() && c.s[c.i] == '.') {
            c.i = start;
            return parse_rational(c.s, c.i);
        }
        return Rational(whole);
    }
    // identifier
    std::size_t start = c.i;
    while (c.i < c.s.size() && (std::isalpha(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '_')) ++c.i;
    if (c.i == start) throw ParseError(c.i, "expected a factor");
    std::string name(c.s.substr(start, c.i - start));
    if (name == "abs") {
        if (!c.eat('(')) throw ParseError(c.i, "expected '(' after abs");
        Rational v = parse_sum(c, params);
        if (!c.eat(')')) throw ParseError(c.i, "expected ')'");
        return v < 0 ? Rational(-v) : v;
    }
    auto it = params.find(name);
    if (it == params.end()) throw ParseError(start, "unknown parameter '" + name + "'");
    return it->second;
}

inline Rational parse_product(Cursor& c, const Params& params) {
    Rational v = parse_factor(c, params);
    while (true) {
        if (c.eat('*')) v *= parse_factor(c, params);
        else if (c.eat('/')) {
            Rational d = parse_factor(c, params);
            if (d == 0) throw ParseError(c.i, "division by zero");
            v /= d;
        } else
            return v;
    }
}

inline Rational parse_sum(Cursor& c, const Params& params) {
    Rational v = parse_product(c, params);
    while (true) {
        if (c.eat('+')) v += parse_product(c, params);
        else if (c.eat('-')) v -= parse_product(c, params);
        else return v;
    }
}

}  // namespace expr

inline Rational eval_expr(std::string_view text, const Params& params) {
    expr::Cursor c{text, 0};
    Rational v = expr::parse_sum(c, params);
    c.skip();
    if (c.i != text.size()) throw ParseError(c.i, "unexpected trailing characters in expression");
    return v;
}

/// "lhs OP rhs" with OP one of <, <=, >, >=, =, !=.
inline bool eval_constraint(std::string_view text, const Params& params) {
    static const char* ops[] = {"<=", ">=", "!=", "<", ">", "="};
    for (const char* op : ops) {
        std::size_t pos = text.find(op);
        if (pos == std::string_view::npos) continue;
        Rational lhs = eval_expr(text.substr(0, pos), params);
        Rational rhs = eval_expr(text.substr(pos + std::string(op).size()), params);
        std::string o = op;
        if (o == "<") return lhs < rhs;
        if (o == "<=") return lhs <= rhs;
        if (o == ">") return lhs > rhs;
        if (o == ">=") return lhs >= rhs;
        if (o == "=") return lhs == rhs;
        return lhs != rhs;
    }
    throw ParseError(0, "constraint has no comparison operator: " + std::string(text));
}

/// Differential / 2-form template: '0' or signed terms "[coeff-expr *] pair",
/// e.g. "-23-(a+b)*16" or "(a+1)/3*16". The final two digits of each term are
/// the blade pair; everything before the last top-level '*' is an expression.
inline Form eval_form_template(std::string_view text, int dim, const Params& params) {
    Form f(dim);
    std::size_t i = 0;
    auto skip_ws = [&]() {
        while (i < text.size() && text[i] == ' ') ++i;
    };
    skip_ws();
    if (text.substr(i) == "0") return f;
    bool first = true;
    while (i < text.size()) {
        skip_ws();
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw ParseError(i, "expected '+' or '-' between template terms");
        }
        // scan one term: up to the next top-level +/-
        int depth = 0;
        std::size_t start = i;
        while (i < text.size()) {
            char ch = text[i];
            if (ch == '(') ++depth;
            else if (ch == ')') --depth;
            else if ((ch == '+' || ch == '-') && depth == 0)
                break;
            ++i;
        }
        std::string term(text.substr(start, i - start));
        while (!term.empty() && term.back() == ' ') term.pop_back();
        if (term.size() < 2) throw ParseError(start, "template term too short");
        std::string pair = term.substr(term.size() - 2);
        if (!detail::is_digit(pair[0]) || !detail::is_digit(pair[1]))
            throw ParseError(start, "template term must end in a blade pair");
        int a = pair[0] - '0', b = pair[1] - '0';
        if (a == 0 || b == 0 || a > dim || b > dim) throw ParseError(start, "blade index out of range");
        if (a >= b) throw NonAscendingPair(start, pair);
        Rational coeff = 1;
        std::string prefix = term.substr(0, term.size() - 2);
        while (!prefix.empty() && prefix.back() == ' ') prefix.pop_back();
        if (!prefix.empty()) {
            if (prefix.back() != '*') throw ParseError(start, "expected '*' between coefficient and pair");
            prefix.pop_back();
            coeff = eval_expr(prefix, params);
        }
        f.add_term(blade_of({a, b}), sign < 0 ? Rational(-coeff) : coeff);
        first = false;
    }
    return f;
}

// ---------------------------------------------------------------------------
// Catalog model
// ---------------------------------------------------------------------------

struct SymplecticTemplate {
    std::vector<std::string> generators;   // 2-form templates (may use entry params)
    std::vector<std::string> conditions;   // provenance strings from the source table
    std::vector<Rational> witness;         // coefficient per generator
    std::vector<std::vector<Rational>> violations;  // points expected degenerate
};

struct HLExpect {
    std::string omega;                     // 2-form template
    std::map<int, int> dims;               // degree -> common dim of H_d, H_{d+dL}, H_{d cap dL}
    bool verdict = false;
};

struct Expect {
    std::optional<std::array<int, 3>> betti;         // (b1, b2, b3)
    std::optional<bool> symplectic;
    std::optional<SymplecticTemplate> symplectic_template;
    std::optional<int> step;
    bool step_in_2_3 = false;                        // ambiguous names: assert step in {2,3} and log
    std::optional<int> nilradical_codim;
    std::vector<HLExpect> hl;
};

struct Fixture {
    Params params;
    Expect expect;
    std::string cite;
    bool generic = false;
};

struct CatalogEntry {
    std::string name;
    int dim = 6;
    std::vector<std::string> params;
    std::vector<std::string> constraints;
    std::vector<std::string> diff;
    std::string note;
    std::string block;      // "6", "n6", "5+1", "4+2", "3+3", "5", "4", "3"
    bool nilpotent = false; // classification hint from the source tables
    std::vector<Fixture> fixtures;
};

struct TheoremFamily {
    std::string verbatim;   // the source table's name, e.g. "g6.13^{1/2,-1,0}"
    std::string entry;
    Params params;          // representative sample point
};

struct StepException {
    std::string verbatim;
    std::string entry;
    Params params;          // resolved parameter point (empty when ambiguous)
    bool ambiguous = false;
};

struct CatalogLists {
    std::vector<TheoremFamily> theorem11;
    std::vector<StepException> codim1_two_step;
    std::vector<StepException> codim_gt1_three_step;
    std::vector<std::string> lattice_completely_solvable;  // verbatim names
    std::vector<std::string> hl_theorem;                   // Theorem HL list
    std::string lattice_note;
};

class Catalog {
public:
    std::vector<CatalogEntry> entries;
    CatalogLists lists;

    static Catalog load(const std::string& catalog_path, const std::string& lists_path);
    static Catalog load_default();
    static std::string default_catalog_path();
    static std::string default_lists_path();

    const CatalogEntry* find(const std::string& name) const {
        for (const auto& e : entries)
            if (e.name == name) return &e;
        return nullptr;
    }

    /// Instantiates an entry at a parameter point. Validates arity, the
    /// printed constraints, Jacobi and unimodularity.
    LieAlgebra lookup(const std::string& name, const Params& params) const {
        const CatalogEntry* e = find(name);
        if (!e) throw UnknownName(name);
        return instantiate(*e, params);
    }

    static LieAlgebra instantiate(const CatalogEntry& e, const Params& params) {
        for (const auto& p : e.params)
            if (!params.count(p)) throw ArityMismatch("missing parameter '" + p + "' for " + e.name);
        for (const auto& [k, v] : params)
            if (std::find(e.params.begin(), e.params.end(), k) == e.params.end())
                throw ArityMismatch("unexpected parameter '" + k + "' for " + e.name);
        for (const auto& c : e.constraints)
            if (!eval_constraint(c, params)) throw ConstraintViolation(c);
        std::vector<Form> diffs;
        for (const auto& t : e.diff) diffs.push_back(eval_form_template(t, e.dim, params));
        LieAlgebra g(e.dim, std::move(diffs));  // Jacobi checked here
        if (!is_unimodular(g))
            throw InternalVerificationFailure("catalog entry " + e.name + " instantiates non-unimodular");
        return g;
    }

    /// Entry-level filters: "", "dim=N", "block=B", "paramfree", "nilpotent".
    std::vector<const CatalogEntry*> enumerate(const std::string& filter = "") const {
        std::vector<const CatalogEntry*> out;
        for (const auto& e : entries) {
            bool keep = true;
            if (filter.empty()) keep = true;
            else if (filter.rfind("dim=", 0) == 0) keep = e.dim == std::stoi(filter.substr(4));
            else if (filter.rfind("block=", 0) == 0) keep = e.block == filter.substr(6);
            else if (filter == "paramfree") keep = e.params.empty();
            else if (filter == "nilpotent") keep = e.nilpotent;
            else if (filter == "theorem11") {
                keep = false;
                for (const auto& f : lists.theorem11) keep = keep || f.entry == e.name;
            } else
                throw Error("unknown catalog filter '" + filter + "'");
            if (keep) out.push_back(&e);
        }
        return out;
    }
};

// ---------------------------------------------------------------------------
// Fixture verification
// ---------------------------------------------------------------------------

struct CheckResult {
    std::string what;
    bool pass = false;
    std::string detail;  // expected vs got on failure, notes on pass
};

struct FixtureResult {
    std::string entry;
    std::string point;
    std::vector<CheckResult> checks;
    std::vector<std::string> logs;
    bool pass = true;
};

struct VerifyReport {
    std::vector<FixtureResult> fixtures;
    int passed = 0, failed = 0;
};

namespace detail {

inline std::string params_to_string(const Params& p) {
    std::string s;
    for (const auto& [k, v] : p) s += (s.empty() ? "" : ",") + k + "=" + to_string(v);
    return s.empty() ? "-" : s;
}

inline void check(FixtureResult& r, const std::string& what, bool ok, const std::string& detail = "") {
    r.checks.push_back({what, ok, detail});
    r.pass = r.pass && ok;
}

inline Form template_two_form(const std::string& text, int dim, const Params& params) {
    return eval_form_template(text, dim, params);
}

}  // namespace detail

/// Runs every expectation a fixture carries against the engine.
inline FixtureResult verify_fixture(const CatalogEntry& e, const Fixture& fx) {
    FixtureResult r;
    r.entry = e.name;
    r.point = detail::params_to_string(fx.params);
    LieAlgebra g = [&]() -> LieAlgebra {
        try {
            return Catalog::instantiate(e, fx.params);
        } catch (const Error& err) {
            detail::check(r, "instantiate", false, err.what());
            throw;
        }
    }();

    if (fx.expect.betti) {
        BettiReport b = betti(g);
        std::array<int, 3> got{b.b[1], b.b[2], b.b[3]};
        bool ok = got == *fx.expect.betti;
        std::ostringstream os;
        os << "expected (" << (*fx.expect.betti)[0] << "," << (*fx.expect.betti)[1] << ","
           << (*fx.expect.betti)[2] << ") got (" << got[0] << "," << got[1] << "," << got[2] << ")";
        detail::check(r, "betti", ok, os.str());
    }
    if (fx.expect.symplectic) {
        bool got = has_symplectic(g);
        detail::check(r, "symplectic", got == *fx.expect.symplectic,
                      std::string("expected ") + (*fx.expect.symplectic ? "true" : "false") + " got " +
                          (got ? "true" : "false"));
    }
    if (fx.expect.symplectic_template) {
        const SymplecticTemplate& t = *fx.expect.symplectic_template;
        std::vector<Form> gens;
        bool closed = true;
        for (const auto& gen : t.generators) {
            gens.push_back(detail::template_two_form(gen, g.dim(), fx.params));
            closed = closed && ce_d(g, gens.back()).is_zero();
        }
        detail::check(r, "template generators closed", closed);
        std::vector<Vector> rows;
        for (const Form& gen : gens) rows.push_back(grade_coordinates(gen, 2));
        Subspace span = Subspace::span_of(rows, BladeBasis(g.dim(), 2).size());
        detail::check(r, "template spans ker d|_2", span == closed_two_forms(g).coordinates,
                      "span dim " + std::to_string(span.dim()));
        if (t.witness.size() == gens.size()) {
            Form omega(g.dim());
            for (std::size_t i = 0; i < gens.size(); ++i) omega += t.witness[i] * gens[i];
            detail::check(r, "template witness symplectic", verify_symplectic(g, omega), form_to_string(omega));
        }
        Blade top = (Blade(1) << g.dim()) - 1;
        bool violations_degenerate = true;
        for (const auto& point : t.violations) {
            Form omega(g.dim());
            for (std::size_t i = 0; i < gens.size() && i < point.size(); ++i) omega += point[i] * gens[i];
            violations_degenerate =
                violations_degenerate && wedge_power(omega, g.dim() / 2).coefficient(top) == 0;
        }
        if (!t.violations.empty())
            detail::check(r, "condition violations degenerate", violations_degenerate);
    }
    if (fx.expect.step) {
        int got = solvable_step(g);
        detail::check(r, "step", got == *fx.expect.step,
                      "expected " + std::to_string(*fx.expect.step) + " got " + std::to_string(got));
    }
    if (fx.expect.step_in_2_3) {
        int got = solvable_step(g);
        detail::check(r, "step in {2,3}", got == 2 || got == 3, "got " + std::to_string(got));
        r.logs.push_back("ambiguous superscript: computed step " + std::to_string(got));
    }
    if (fx.expect.nilradical_codim) {
        int got = g.dim() - nilradical(g).dim();
        detail::check(r, "nilradical codim", got == *fx.expect.nilradical_codim,
                      "expected " + std::to_string(*fx.expect.nilradical_codim) + " got " + std::to_string(got));
    }
    for (const HLExpect& h : fx.expect.hl) {
        Form omega = detail::template_two_form(h.omega, g.dim(), fx.params);
        SymplecticPair pair = build_pair(g, omega);
        auto [verdict, rep] = hard_lefschetz(pair);
        bool dims_ok = true;
        for (const auto& [k, v] : h.dims)
            dims_ok = dims_ok && rep.h_d[k] == v && rep.h_plus[k] == v && rep.h_cap[k] == v;
        if (!h.dims.empty())
            detail::check(r, "hl dims (" + h.omega + ")", dims_ok);
        detail::check(r, "hl verdict (" + h.omega + ")", verdict == h.verdict,
                      std::string("expected ") + (h.verdict ? "true" : "false") + " got " +
                          (verdict ? "true" : "false"));
        detail::check(r, "hl duality (" + h.omega + ")", rep.duality_ok);
    }
    return r;
}

/// Verifies fixtures, optionally restricted to one entry, fanning out over
/// `jobs` threads (0 = hardware concurrency). Failures are data, not errors.
inline VerifyReport verify_fixtures(const Catalog& cat, const std::string& only_entry = "", int jobs = 0) {
    std::vector<std::pair<const CatalogEntry*, const Fixture*>> work;
    for (const auto& e : cat.entries) {
        if (!only_entry.empty() && e.name != only_entry) continue;
        for (const auto& fx : e.fixtures) work.emplace_back(&e, &fx);
    }
    VerifyReport report;
    report.fixtures.resize(work.size());
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= work.size()) return;
            try {
                report.fixtures[i] = verify_fixture(*work[i].first, *work[i].second);
            } catch (const Error& err) {
                FixtureResult r;
                r.entry = work[i].first->name;
                r.point = detail::params_to_string(work[i].second->params);
                r.pass = false;
                r.checks.push_back({"exception", false, err.what()});
                report.fixtures[i] = std::move(r);
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (const auto& f : report.fixtures) (f.pass ? report.passed : report.failed)++;
    return report;
}

// ---------------------------------------------------------------------------
// JSON loading
// ---------------------------------------------------------------------------

namespace detail {

inline Rational json_rational(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<long long>()));
    return parse_rational(j.get<std::string>());
}

inline Params json_params(const nlohmann::json& j) {
    Params p;
    for (auto it = j.begin(); it != j.end(); ++it) p[it.key()] = json_rational(it.value());
    return p;
}

}  // namespace detail

inline Catalog Catalog::load(const std::string& catalog_path, const std::string& lists_path) {
    Catalog cat;
    std::ifstream in(catalog_path);
    if (!in) throw Error("cannot open catalog file " + catalog_path);
    nlohmann::json root = nlohmann::json::parse(in);
    for (const auto& je : root) {
        CatalogEntry e;
        e.name = je.at("name").get<std::string>();
        e.dim = je.value("dim", 6);
        if (je.contains("params")) e.params = je["params"].get<std::vector<std::string>>();
        if (je.contains("constraints")) e.constraints = je["constraints"].get<std::vector<std::string>>();
        e.diff = je.at("diff").get<std::vector<std::string>>();
        e.note = je.value("note", "");
        e.block = je.value("block", "");
        e.nilpotent = je.value("nilpotent", false);
        if (je.contains("fixtures")) {
            for (const auto& jf : je["fixtures"]) {
                Fixture fx;
                if (jf.contains("params")) fx.params = detail::json_params(jf["params"]);
                fx.cite = jf.value("cite", "");
                fx.generic = jf.value("generic", false);
                if (jf.contains("expect")) {
                    const auto& ex = jf["expect"];
                    if (ex.contains("betti")) {
                        auto v = ex["betti"].get<std::vector<int>>();
                        fx.expect.betti = std::array<int, 3>{v.at(0), v.at(1), v.at(2)};
                    }
                    if (ex.contains("symplectic")) fx.expect.symplectic = ex["symplectic"].get<bool>();
                    if (ex.contains("symplectic_template")) {
                        const auto& jt = ex["symplectic_template"];
                        SymplecticTemplate t;
                        t.generators = jt.at("generators").get<std::vector<std::string>>();
                        if (jt.contains("conditions"))
                            t.conditions = jt["conditions"].get<std::vector<std::string>>();
                        if (jt.contains("witness"))
                            for (const auto& w : jt["witness"]) t.witness.push_back(detail::json_rational(w));
                        if (jt.contains("violations"))
                            for (const auto& row : jt["violations"]) {
                                std::vector<Rational> point;
                                for (const auto& w : row) point.push_back(detail::json_rational(w));
                                t.violations.push_back(std::move(point));
                            }
                        fx.expect.symplectic_template = std::move(t);
                    }
                    if (ex.contains("step")) fx.expect.step = ex["step"].get<int>();
                    if (ex.contains("step_in_2_3")) fx.expect.step_in_2_3 = ex["step_in_2_3"].get<bool>();
                    if (ex.contains("nilradical_codim"))
                        fx.expect.nilradical_codim = ex["nilradical_codim"].get<int>();
                    if (ex.contains("hl")) {
                        for (const auto& jh : ex["hl"]) {
                            HLExpect h;
                            h.omega = jh.at("omega").get<std::string>();
                            h.verdict = jh.at("verdict").get<bool>();
                            if (jh.contains("dims"))
                                for (auto it = jh["dims"].begin(); it != jh["dims"].end(); ++it)
                                    h.dims[std::stoi(it.key())] = it.value().get<int>();
                            fx.expect.hl.push_back(std::move(h));
                        }
                    }
                }
                e.fixtures.push_back(std::move(fx));
            }
        }
        cat.entries.push_back(std::move(e));
    }

    std::ifstream lin(lists_path);
    if (!lin) throw Error("cannot open lists file " + lists_path);
    nlohmann::json lj = nlohmann::json::parse(lin);
    for (const auto& jf : lj.at("theorem_1_1")) {
        TheoremFamily f;
        f.verbatim = jf.at("verbatim").get<std::string>();
        f.entry = jf.at("entry").get<std::string>();
        if (jf.contains("params")) f.params = detail::json_params(jf["params"]);
        cat.lists.theorem11.push_back(std::move(f));
    }
    auto load_exceptions = [](const nlohmann::json& arr) {
        std::vector<StepException> out;
        for (const auto& jf : arr) {
            StepException s;
            s.verbatim = jf.at("verbatim").get<std::string>();
            s.entry = jf.at("entry").get<std::string>();
            if (jf.contains("params")) s.params = detail::json_params(jf["params"]);
            s.ambiguous = jf.value("ambiguous", false);
            out.push_back(std::move(s));
        }
        return out;
    };
    cat.lists.codim1_two_step = load_exceptions(lj.at("steps_codim1_two_step"));
    cat.lists.codim_gt1_three_step = load_exceptions(lj.at("steps_codim_gt1_three_step"));
    cat.lists.lattice_completely_solvable =
        lj.at("lattice_completely_solvable").get<std::vector<std::string>>();
    cat.lists.hl_theorem = lj.at("hl_theorem").get<std::vector<std::string>>();
    cat.lists.lattice_note = lj.value("lattice_note", "");
    return cat;
}

inline std::string Catalog::default_catalog_path() {
    if (const char* env = std::getenv("LIECOH_CATALOG")) return env;
#ifdef LIECOH_DATA_DIR
    return std::string(LIECOH_DATA_DIR) + "/catalog.json";
#else
    return "data/catalog.json";
#endif
}

inline std::string Catalog::default_lists_path() {
    if (const char* env = std::getenv("LIECOH_LISTS")) return env;
#ifdef LIECOH_DATA_DIR
    return std::string(LIECOH_DATA_DIR) + "/lists.json";
#else
    return "data/lists.json";
#endif
}

inline Catalog Catalog::load_default() { return load(default_catalog_path(), default_lists_path()); }

}  // namespace liecoh

#pragma once

#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "liecoh/catalog.hpp"

namespace liecoh::cli {

using Json = nlohmann::ordered_json;

// exit codes
constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;  // also: negative verdict where a positive was asserted
constexpr int kUsageError = 2;
constexpr int kInputError = 3;          // parse or constraint errors

namespace detail_cli {

struct AlgebraSelection {
    std::string spec;                   // literal Maurer-Cartan text
    std::string catalog_name;
    std::vector<std::string> raw_params;
    std::string label;

    LieAlgebra resolve(const Catalog*& cat_out) const {
        if (!catalog_name.empty()) {
            static thread_local std::unique_ptr<Catalog> cached;
            if (!cached) cached = std::make_unique<Catalog>(Catalog::load_default());
            cat_out = cached.get();
            Params params;
            for (const auto& kv : the_params()) params[kv.first] = kv.second;
            return cached->lookup(catalog_name, params);
        }
        return parse_algebra(spec);
    }

    std::vector<std::pair<std::string, Rational>> the_params() const {
        std::vector<std::pair<std::string, Rational>> out;
        for (const auto& raw : raw_params) {
            std::size_t eq = raw.find('=');
            if (eq == std::string::npos) throw ParseError(0, "--param expects name=value, got '" + raw + "'");
            out.emplace_back(raw.substr(0, eq), parse_rational(raw.substr(eq + 1)));
        }
        return out;
    }

    std::string describe() const {
        if (catalog_name.empty()) return spec;
        std::string s = catalog_name;
        for (const auto& raw : raw_params) s += " " + raw;
        return s;
    }
};

inline void add_algebra_options(CLI::App* cmd, AlgebraSelection& sel) {
    cmd->add_option("spec", sel.spec, "Maurer-Cartan literal, e.g. \"[-23,0,0,-46,56,0]\"");
    cmd->add_option("--catalog", sel.catalog_name, "catalog entry name, e.g. g6.13");
    cmd->add_option("--param", sel.raw_params, "parameter assignment name=value (repeatable)");
}

inline void require_algebra(const AlgebraSelection& sel) {
    if (sel.spec.empty() == sel.catalog_name.empty())
        throw CLI::ValidationError("provide exactly one of <spec> or --catalog");
}

inline std::string yn(bool b) { return b ? "yes" : "no"; }

inline Json betti_json(const BettiReport& r) {
    Json j;
    Json b = Json::array();
    for (int x : r.b) b.push_back(x);
    j["b"] = b;
    Json reps = Json::array();
    for (const auto& degree : r.representatives) {
        Json row = Json::array();
        for (const Form& f : degree) row.push_back(form_to_string(f));
        reps.push_back(row);
    }
    j["representatives"] = reps;
    return j;
}

}  // namespace detail_cli

/// Full command-line surface; reads `args` (without the program name),
/// writes reports to `out`, errors to `err`, returns the exit code.
inline int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using detail_cli::AlgebraSelection;
    using detail_cli::yn;

    CLI::App app{"Exact invariants of finite-dimensional Lie algebras from Maurer-Cartan data"};
    app.name("liecoh");
    app.require_subcommand(1);
    bool json_out = false;
    app.add_flag("--json", json_out, "machine-readable report");

    AlgebraSelection sel;
    int degree = -1;
    bool want_witness = false;
    std::string omega_text;
    int scan_witnesses = 0;
    std::string filter, show_name;
    int jobs = 0;

    CLI::App* analyze = app.add_subcommand("analyze", "structural report");
    detail_cli::add_algebra_options(analyze, sel);

    CLI::App* betti_cmd = app.add_subcommand("betti", "Chevalley-Eilenberg Betti numbers");
    detail_cli::add_algebra_options(betti_cmd, sel);
    betti_cmd->add_option("--degree", degree, "report a single degree");

    CLI::App* sympl = app.add_subcommand("symplectic", "symplectic structure existence");
    detail_cli::add_algebra_options(sympl, sel);
    sympl->add_flag("--witness", want_witness, "produce an explicit witness");

    CLI::App* hodge = app.add_subcommand("hodge", "symplectic cohomology dimensions and Hard Lefschetz");
    detail_cli::add_algebra_options(hodge, sel);
    hodge->add_option("--omega", omega_text, "symplectic 2-form, e.g. \"12+36+45\"");
    hodge->add_option("--scan-witnesses", scan_witnesses, "scan N deterministic witnesses instead");

    for (CLI::App* sub : {analyze, betti_cmd, sympl, hodge}) sub->fallthrough();

    CLI::App* catalog_cmd = app.add_subcommand("catalog", "catalog operations");
    catalog_cmd->fallthrough();
    catalog_cmd->require_subcommand(1);
    CLI::App* cat_list = catalog_cmd->add_subcommand("list", "list entries");
    cat_list->fallthrough();
    cat_list->add_option("--filter", filter, "dim=N | block=B | paramfree | nilpotent | theorem11");
    CLI::App* cat_show = catalog_cmd->add_subcommand("show", "show one entry");
    cat_show->fallthrough();
    cat_show->add_option("name", show_name, "entry name")->required();
    CLI::App* cat_verify = catalog_cmd->add_subcommand("verify", "run the fixture regression suite");
    cat_verify->fallthrough();
    cat_verify->add_option("--filter", filter, "restrict to one entry name");
    cat_verify->add_option("--jobs", jobs, "worker threads (default: hardware concurrency)");

    std::vector<const char*> argv;
    argv.push_back("liecoh");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kUsageError;
    }

    try {
        const Catalog* cat = nullptr;

        if (*analyze) {
            detail_cli::require_algebra(sel);
            LieAlgebra g = sel.resolve(cat);
            bool unimod = is_unimodular(g);
            bool nilp = is_nilpotent(g);
            SeriesReport derived = derived_series_report(g);
            bool solvable = derived.step.has_value();
            std::optional<Subspace> n;
            if (solvable) n = nilradical(g);
            bool almost = solvable && !nilp && is_almost_abelian(g);
            BettiReport b = betti(g);
            int pdim = bracket_kernel_dim(g);
            bool mm = b.b[2] == 0 && b.b[3] == 0;

            if (json_out) {
                Json j;
                j["algebra"] = to_text(g);
                j["dim"] = g.dim();
                j["unimodular"] = unimod;
                j["solvable"] = solvable;
                if (derived.step) j["solvable_step"] = *derived.step;
                j["nilpotent"] = nilp;
                if (auto s = lower_central_series(g).step) j["nilpotency_class"] = *s;
                if (n) {
                    j["nilradical_dim"] = n->dim();
                    j["nilradical_codim"] = g.dim() - n->dim();
                }
                j["almost_abelian"] = almost;
                j["bracket_kernel_dim"] = pdim;
                j["multi_moment_eligible"] = mm;
                out << j.dump() << "\n";
            } else {
                out << "algebra:               " << to_text(g) << "\n";
                out << "dim:                   " << g.dim() << "\n";
                out << "unimodular:            " << yn(unimod) << "\n";
                if (derived.step) out << "solvable step:         " << *derived.step << "\n";
                else out << "solvable step:         not solvable\n";
                out << "nilpotent:             " << yn(nilp);
                if (auto s = lower_central_series(g).step) out << " (class " << *s << ")";
                out << "\n";
                if (n) out << "nilradical:            dim " << n->dim() << " codim " << g.dim() - n->dim() << "\n";
                else out << "nilradical:            (not solvable)\n";
                out << "almost abelian:        " << yn(almost) << "\n";
                out << "bracket kernel dim:    " << pdim << "\n";
                out << "multi-moment eligible: " << yn(mm) << "\n";
            }
            return kOk;
        }

        if (*betti_cmd) {
            detail_cli::require_algebra(sel);
            LieAlgebra g = sel.resolve(cat);
            BettiReport r = betti(g);
            if (degree >= 0 && degree > g.dim()) throw CLI::ValidationError("--degree out of range");
            if (json_out) {
                Json j;
                j["algebra"] = to_text(g);
                if (degree >= 0) {
                    j["degree"] = degree;
                    j["b"] = r.b[degree];
                    Json reps = Json::array();
                    for (const Form& f : r.representatives[degree]) reps.push_back(form_to_string(f));
                    j["representatives"] = reps;
                } else {
                    j.update(detail_cli::betti_json(r));
                }
                out << j.dump() << "\n";
            } else if (degree >= 0) {
                out << "b_" << degree << " = " << r.b[degree] << "\n";
                for (const Form& f : r.representatives[degree]) out << "  [" << form_to_string(f) << "]\n";
            } else {
                out << "b = (";
                for (int k = 0; k <= g.dim(); ++k) out << (k ? "," : "") << r.b[k];
                out << ")\n";
            }
            return kOk;
        }

        if (*sympl) {
            detail_cli::require_algebra(sel);
            LieAlgebra g = sel.resolve(cat);
            ClosedTwoFormSpace space = closed_two_forms(g);
            CubicVolumePolynomial poly = cubic_top_polynomial(space);
            bool exists = !poly.is_identically_zero();
            std::optional<SymplecticWitness> witness;
            if (want_witness && exists) witness = symplectic_witness(g);

            if (json_out) {
                Json j;
                j["algebra"] = to_text(g);
                j["closed_two_form_dim"] = space.coordinates.dim();
                j["volume_polynomial_monomials"] = poly.monomials.size();
                j["symplectic"] = exists;
                if (witness) {
                    j["witness"] = form_to_string(witness->omega);
                    j["top_coefficient"] = to_string(witness->top_coefficient);
                }
                out << j.dump() << "\n";
            } else {
                out << "closed 2-form family dim: " << space.coordinates.dim() << "\n";
                out << "volume polynomial:        " << poly.monomials.size() << " monomials\n";
                out << "symplectic:               " << yn(exists) << "\n";
                if (witness) {
                    out << "witness:                  " << form_to_string(witness->omega) << "\n";
                    out << "top coefficient:          " << to_string(witness->top_coefficient) << "\n";
                }
            }
            return want_witness && !exists ? kVerificationFailed : kOk;
        }

        if (*hodge) {
            detail_cli::require_algebra(sel);
            LieAlgebra g = sel.resolve(cat);
            if (omega_text.empty() && scan_witnesses <= 0)
                throw CLI::ValidationError("hodge needs --omega or --scan-witnesses");

            std::vector<Form> omegas;
            if (!omega_text.empty()) omegas.push_back(eval_form_template(omega_text, g.dim(), {}));
            if (scan_witnesses > 0) {
                // deterministic scan: enumerate ladder-valued coefficient vectors
                ClosedTwoFormSpace space = closed_two_forms(g);
                CubicVolumePolynomial poly = cubic_top_polynomial(space);
                static const int ladder[] = {0, 1, -1, 2, -2};
                std::vector<Rational> point(space.basis.size());
                std::function<void(std::size_t)> enumerate = [&](std::size_t var) {
                    if (static_cast<int>(omegas.size()) >= scan_witnesses + (omega_text.empty() ? 0 : 1)) return;
                    if (var == point.size()) {
                        if (poly.evaluate(point) == 0) return;
                        Form omega(g.dim());
                        for (std::size_t i = 0; i < point.size(); ++i)
                            if (point[i] != 0) omega += point[i] * space.basis[i];
                        omegas.push_back(std::move(omega));
                        return;
                    }
                    for (int v : ladder) {
                        point[var] = v;
                        enumerate(var + 1);
                    }
                };
                if (!poly.is_identically_zero()) enumerate(0);
            }
            if (omegas.empty()) {
                err << "no symplectic witness exists\n";
                return kVerificationFailed;
            }

            Json jall = Json::array();
            bool all_hl = true;
            for (const Form& omega : omegas) {
                SymplecticPair pair = build_pair(g, omega);
                auto [verdict, rep] = hard_lefschetz(pair);
                all_hl = all_hl && verdict;
                if (json_out) {
                    Json j;
                    j["omega"] = form_to_string(omega);
                    auto dims = [](const std::vector<int>& v) {
                        Json a = Json::array();
                        for (int x : v) a.push_back(x);
                        return a;
                    };
                    j["h_d"] = dims(rep.h_d);
                    j["h_dlambda"] = dims(rep.h_dlambda);
                    j["h_d_plus_dlambda"] = dims(rep.h_plus);
                    j["h_ddlambda"] = dims(rep.h_ddlambda);
                    j["h_d_cap_dlambda"] = dims(rep.h_cap);
                    j["duality"] = rep.duality_ok;
                    j["hard_lefschetz"] = verdict;
                    jall.push_back(std::move(j));
                } else {
                    out << "omega: " << form_to_string(omega) << "\n";
                    out << "  k:          ";
                    for (int k = 0; k <= g.dim(); ++k) out << k << "\t";
                    out << "\n  H_d:        ";
                    for (int x : rep.h_d) out << x << "\t";
                    out << "\n  H_dL:       ";
                    for (int x : rep.h_dlambda) out << x << "\t";
                    out << "\n  H_{d+dL}:   ";
                    for (int x : rep.h_plus) out << x << "\t";
                    out << "\n  H_{ddL}:    ";
                    for (int x : rep.h_ddlambda) out << x << "\t";
                    out << "\n  H_{d&dL}:   ";
                    for (int x : rep.h_cap) out << x << "\t";
                    out << "\n  duality:        " << yn(rep.duality_ok) << "\n";
                    out << "  hard Lefschetz: " << yn(verdict) << "\n";
                }
            }
            if (json_out) out << jall.dump() << "\n";
            return kOk;
        }

        if (*catalog_cmd) {
            Catalog catalog = Catalog::load_default();
            if (*cat_list) {
                if (filter == "theorem11") {
                    Json j = Json::array();
                    for (const auto& fam : catalog.lists.theorem11) {
                        if (json_out) {
                            Json f;
                            f["family"] = fam.verbatim;
                            f["entry"] = fam.entry;
                            j.push_back(std::move(f));
                        } else {
                            out << fam.verbatim << "  (" << fam.entry << ")\n";
                        }
                    }
                    if (json_out) out << j.dump() << "\n";
                    return kOk;
                }
                Json j = Json::array();
                for (const CatalogEntry* e : catalog.enumerate(filter)) {
                    if (json_out) {
                        Json f;
                        f["name"] = e->name;
                        f["dim"] = e->dim;
                        f["params"] = e->params;
                        f["fixtures"] = e->fixtures.size();
                        j.push_back(std::move(f));
                    } else {
                        out << e->name << "  dim " << e->dim;
                        if (!e->params.empty()) {
                            out << "  params";
                            for (const auto& p : e->params) out << " " << p;
                        }
                        out << "  fixtures " << e->fixtures.size() << "\n";
                    }
                }
                if (json_out) out << j.dump() << "\n";
                return kOk;
            }
            if (*cat_show) {
                const CatalogEntry* e = catalog.find(show_name);
                if (!e) throw UnknownName(show_name);
                if (json_out) {
                    Json j;
                    j["name"] = e->name;
                    j["dim"] = e->dim;
                    j["params"] = e->params;
                    j["constraints"] = e->constraints;
                    j["diff"] = e->diff;
                    j["note"] = e->note;
                    j["fixtures"] = e->fixtures.size();
                    out << j.dump() << "\n";
                } else {
                    out << e->name << "  (dim " << e->dim << ")\n";
                    out << "  differentials:";
                    for (const auto& d : e->diff) out << " " << d << ";";
                    out << "\n";
                    if (!e->params.empty()) {
                        out << "  parameters: ";
                        for (const auto& p : e->params) out << p << " ";
                        out << "\n  constraints: ";
                        for (const auto& c : e->constraints) out << "[" << c << "] ";
                        out << "\n";
                    }
                    if (!e->note.empty()) out << "  note: " << e->note << "\n";
                    out << "  fixtures: " << e->fixtures.size() << "\n";
                }
                return kOk;
            }
            if (*cat_verify) {
                VerifyReport rep = verify_fixtures(catalog, filter, jobs);
                if (json_out) {
                    Json j;
                    Json rows = Json::array();
                    for (const auto& f : rep.fixtures) {
                        Json r;
                        r["entry"] = f.entry;
                        r["point"] = f.point;
                        r["pass"] = f.pass;
                        Json checks = Json::array();
                        for (const auto& c : f.checks) {
                            Json cc;
                            cc["what"] = c.what;
                            cc["pass"] = c.pass;
                            if (!c.pass) cc["detail"] = c.detail;
                            checks.push_back(std::move(cc));
                        }
                        r["checks"] = std::move(checks);
                        rows.push_back(std::move(r));
                    }
                    j["fixtures"] = std::move(rows);
                    j["passed"] = rep.passed;
                    j["failed"] = rep.failed;
                    out << j.dump() << "\n";
                } else {
                    for (const auto& f : rep.fixtures) {
                        out << (f.pass ? "pass" : "FAIL") << "  " << f.entry << " [" << f.point << "]\n";
                        for (const auto& c : f.checks)
                            if (!c.pass) out << "      " << c.what << ": " << c.detail << "\n";
                        for (const auto& l : f.logs) out << "      log: " << l << "\n";
                    }
                    out << rep.passed << " passed, " << rep.failed << " failed\n";
                }
                return rep.failed == 0 ? kOk : kVerificationFailed;
            }
        }
        err << "no subcommand\n";
        return kUsageError;
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return kUsageError;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return kInputError;
    } catch (const DimensionOutOfRange& e) {
        err << e.what() << "\n";
        return kInputError;
    } catch (const JacobiViolation& e) {
        err << e.what() << "\n";
        return kInputError;
    } catch (const UnknownName& e) {
        err << e.what() << "\n";
        return kInputError;
    } catch (const ArityMismatch& e) {
        err << e.what() << "\n";
        return kInputError;
    } catch (const ConstraintViolation& e) {
        err << e.what() << "\n";
        return kInputError;
    } catch (const NotSymplectic& e) {
        err << e.what() << "\n";
        return kVerificationFailed;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return kVerificationFailed;
    }
}

}  // namespace liecoh::cli

/* Copyright (c) 2026 The unitheta authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef UNITHETA_CLI_HPP
#define UNITHETA_CLI_HPP

#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "unitheta/bounds.hpp"
#include "unitheta/forms.hpp"
#include "unitheta/io.hpp"
#include "unitheta/lattice.hpp"
#include "unitheta/secrecy.hpp"
#include "unitheta/selftest.hpp"

namespace unitheta {
namespace cli_detail {

inline ShortVectorCounts parse_counts(const std::string& s) {
    ShortVectorCounts counts;
    if (s.empty()) return counts;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        counts.counts.emplace_back(tok);  // strict; throws invalid_argument on junk
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return counts;
}

inline json counts_to_json(const ShortVectorCounts& counts) {
    json arr = json::array();
    for (const auto& c : counts.counts) arr.push_back(to_json(c));
    return arr;
}

inline const char* lambda_sign_string(LambdaSign s) {
    return s == LambdaSign::Plus ? "plus" : "minus";
}

// Orders used internally by the count constructors; echoed in output so
// every run reports its truncation.
inline int even_solve_order(int n) { return 8 * ((n / 8) / 3) + 8; }
inline int general_solve_order(int n) { return 4 * (n / 8) + 8; }

inline json poly_report(const Poly& p, Var v) {
    json j;
    j["variable"] = std::string(1, var_symbol(v));
    j["coefficients_ascending"] = to_json(p);
    return j;
}

inline json bound_report_json(const DimensionBoundReport& rep) {
    json j;
    j["k"] = rep.k;
    j["mode"] = bound_mode_string(rep.mode);
    j["constraint"] = poly_report(rep.constraint_poly, Var::N);
    j["bound_constant"] = to_json(rep.bound_constant);
    j["threshold"] = rep.threshold;
    j["lambda_sign"] = lambda_sign_string(rep.lambda_sign);
    return j;
}

inline json check_result_json(const CheckResult& r) {
    json j;
    j["id"] = r.id;
    j["battery"] = r.battery;
    j["name"] = r.name;
    j["pass"] = r.pass;
    j["detail"] = r.detail;
    return j;
}

inline std::string scalar_text(const json& j) {
    return j.is_string() ? j.get<std::string>() : j.dump();
}

inline bool is_flat_array(const json& j) {
    if (!j.is_array()) return false;
    for (const auto& el : j)
        if (el.is_object() || el.is_array()) return false;
    return true;
}

inline std::string inline_array(const json& j) {
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) s += ", ";
        s += scalar_text(j[i]);
    }
    return s + "]";
}

inline void render_text(const json& j, std::ostream& out, int indent) {
    std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto& [key, val] : j.items()) {
            if (val.is_object() || (val.is_array() && !is_flat_array(val))) {
                out << pad << key << ":\n";
                render_text(val, out, indent + 2);
            } else if (val.is_array()) {
                out << pad << key << ": " << inline_array(val) << "\n";
            } else {
                out << pad << key << ": " << scalar_text(val) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& el : j) {
            if (el.is_object() || (el.is_array() && !is_flat_array(el))) {
                out << pad << "-\n";
                render_text(el, out, indent + 2);
            } else if (el.is_array()) {
                out << pad << "- " << inline_array(el) << "\n";
            } else {
                out << pad << "- " << scalar_text(el) << "\n";
            }
        }
    } else {
        out << pad << scalar_text(j) << "\n";
    }
}

inline void emit(const json& j, const std::string& format, std::ostream& out) {
    if (format == "text")
        render_text(j, out, 0);
    else
        out << j.dump(2) << "\n";
}

inline void render_selftest_table(const std::vector<CheckResult>& results,
                                  std::ostream& out) {
    out << " ID  BATTERY     RESULT  NAME\n";
    int passed = 0;
    for (const auto& r : results) {
        out << std::setw(3) << r.id << "  " << std::left << std::setw(10) << r.battery
            << std::right << "  " << (r.pass ? "PASS  " : "FAIL  ") << "  " << r.name
            << "\n";
        if (!r.pass) out << "         " << r.detail << "\n";
        if (r.pass) ++passed;
    }
    out << passed << "/" << results.size() << " checks passed\n";
}

}  // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
    using cli_detail::emit;

    CLI::App app{"exact theta-series, secrecy-gain and dimension-bound pipelines",
                 "unitheta"};
    app.require_subcommand(1);

    std::string format = "json";
    bool approx = false;
    auto common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "text"}));
        cmd->add_flag("--approx", approx,
                      "add decimal renderings alongside exact values");
    };

    // forms
    CLI::App* forms = app.add_subcommand("forms", "modular form series");
    forms->require_subcommand(1);
    std::string form_name = "E4";
    int forms_order = 64;
    CLI::App* forms_expand = forms->add_subcommand("expand", "emit a series expansion");
    forms_expand->add_option("--name", form_name, "series name")->required();
    forms_expand->add_option("--order", forms_order, "truncation order in u");
    common(forms_expand);
    CLI::App* forms_check = forms->add_subcommand("check", "run the identity suite");
    forms_check->add_option("--order", forms_order, "truncation order in u");
    common(forms_check);

    // lattice
    CLI::App* lattice = app.add_subcommand("lattice", "theta series from counts");
    lattice->require_subcommand(1);
    int dim = 0;
    bool even = false;
    std::string counts_arg;
    int lattice_order = 0;
    CLI::App* from_counts =
        lattice->add_subcommand("from-counts", "solve basis coefficients from counts");
    from_counts->add_option("--dim", dim, "lattice dimension")->required();
    from_counts->add_flag("--even", even, "even lattice (counts at norms 2,4,...)");
    from_counts->add_option("--counts", counts_arg, "comma-separated short-vector counts");
    from_counts->add_option("--order", lattice_order, "expansion order in u (0 = default)");
    common(from_counts);

    // secrecy
    CLI::App* secrecy = app.add_subcommand("secrecy", "secrecy gain certification");
    secrecy->require_subcommand(1);
    int bracket_bits = 40;
    CLI::App* certify = secrecy->add_subcommand("certify", "certify the gain maximum");
    certify->add_option("--dim", dim, "lattice dimension")->required();
    certify->add_flag("--even", even, "even lattice");
    certify->add_option("--counts", counts_arg, "comma-separated short-vector counts");
    certify->add_option("--bracket-bits", bracket_bits,
                        "gain bracket width target 2^-bits");
    common(certify);
    CLI::App* gain_one = secrecy->add_subcommand("gain-at-one", "evaluate 1/D(1/4)");
    gain_one->add_option("--dim", dim, "lattice dimension")->required();
    gain_one->add_flag("--even", even, "even lattice");
    gain_one->add_option("--counts", counts_arg, "comma-separated short-vector counts");
    common(gain_one);

    int thm_m = 1, thm_k = 0, thm_n = 8;
    std::string kappa = "0", kappa_prime = "0", kappa_prev = "0", kappa_prev_prime = "0";
    std::string h_arg = "0", h_prime_arg = "0";
    long long kissing = 0;
    CLI::App* thm1 = secrecy->add_subcommand(
        "thm1", "inverse-gain difference for even lattices differing in the top count");
    thm1->add_option("--m", thm_m)->required();
    thm1->add_option("--k", thm_k)->required();
    thm1->add_option("--kappa", kappa)->required();
    thm1->add_option("--kappa-prime", kappa_prime)->required();
    common(thm1);
    CLI::App* thm2 = secrecy->add_subcommand(
        "thm2", "strict gain comparison from the top two counts");
    thm2->add_option("--m", thm_m)->required();
    thm2->add_option("--k", thm_k)->required();
    thm2->add_option("--kappa-prev", kappa_prev)->required();
    thm2->add_option("--kappa", kappa)->required();
    thm2->add_option("--kappa-prev-prime", kappa_prev_prime)->required();
    thm2->add_option("--kappa-prime", kappa_prime)->required();
    common(thm2);
    CLI::App* thm3 = secrecy->add_subcommand(
        "thm3", "inverse-gain difference for general lattices differing in the top "
               "basis coefficient");
    thm3->set_help_flag("--help", "print help");  // frees -h for the --h option
    thm3->add_option("--n", thm_n)->required();
    thm3->add_option("--h", h_arg)->required();
    thm3->add_option("--h-prime", h_prime_arg)->required();
    common(thm3);
    CLI::App* lin_oggier = secrecy->add_subcommand(
        "lin-oggier", "closed-form gain for dimensions 16..23 from the kissing number");
    lin_oggier->add_option("--n", thm_n)->required();
    lin_oggier->add_option("--kissing", kissing)->required();
    common(lin_oggier);

    // bounds
    CLI::App* bounds = app.add_subcommand("bounds", "dimension bound reports");
    bounds->require_subcommand(1);
    int bound_k = 3;
    std::string mode_arg;
    CLI::App* n8k = bounds->add_subcommand("n8k", "largest dimension passing the "
                                                  "count constraint");
    n8k->add_option("--k", bound_k, "norm offset index")->required();
    n8k->add_option("--mode", mode_arg, "paper | derived (omit for both)")
        ->check(CLI::IsMember({"paper", "paper_faithful", "derived"}));
    common(n8k);

    // selftest
    std::string only;
    std::string selftest_format = "text";
    bool selftest_approx = false;
    CLI::App* selftest = app.add_subcommand("selftest", "acceptance battery");
    selftest->add_option("--only", only, "restrict to one battery")
        ->check(CLI::IsMember({"forms", "secrecy", "bounds", "properties"}));
    selftest->add_option("--format", selftest_format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    selftest->add_flag("--approx", selftest_approx)->group("");

    std::vector<const char*> argv;
    argv.push_back("unitheta");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (forms_expand->parsed()) {
            FormName name = form_name_from_string(form_name);
            if (forms_order < 1)
                throw std::invalid_argument("cli: --order must be positive");
            json j;
            j["command"] = "forms expand";
            j["params"] = {{"name", form_name_string(name)}, {"order", forms_order}};
            j["series"] = to_json(form_series(name, forms_order));
            emit(j, format, out);
            return 0;
        }
        if (forms_check->parsed()) {
            IdentityReport rep = check_identities(forms_order);
            json checks = json::array();
            for (const auto& c : rep.checks)
                checks.push_back({{"name", c.name},
                                  {"pass", c.pass},
                                  {"first_fail_exponent", c.first_fail_exponent}});
            json j;
            j["command"] = "forms check";
            j["params"] = {{"order", rep.order}};
            j["identities"] = checks;
            j["all_pass"] = rep.all_pass();
            emit(j, format, out);
            return rep.all_pass() ? 0 : 1;
        }
        if (from_counts->parsed()) {
            ShortVectorCounts counts = cli_detail::parse_counts(counts_arg);
            json j;
            j["command"] = "lattice from-counts";
            json basis;
            ValidationReport validation;
            KissingData kiss;
            bool have_kissing = true;
            std::string kissing_note;
            int order = lattice_order;
            if (even) {
                EvenLatticeTheta lat = even_from_counts(dim, counts);
                if (order == 0) order = default_expansion_order(lat);
                basis["type"] = "e4_delta";
                basis["m"] = lat.m;
                basis["k"] = lat.k;
                json bj = json::array();
                for (const auto& b : lat.b) bj.push_back(to_json(b));
                basis["coefficients"] = bj;
                j["expansion"] = to_json(theta_expansion(lat, order));
                validation = validate_lattice_series(lat, order);
                try {
                    kiss = kissing_data(lat, order);
                } catch (const InsufficientOrder& ex) {
                    have_kissing = false;
                    kissing_note = ex.what();
                }
            } else {
                GeneralLatticeTheta lat = general_from_counts(dim, counts);
                if (order == 0) order = default_expansion_order(lat);
                basis["type"] = "theta3_delta8";
                basis["mu"] = lat.mu();
                json aj = json::array();
                for (const auto& a : lat.a) aj.push_back(to_json(a));
                basis["coefficients"] = aj;
                j["expansion"] = to_json(theta_expansion(lat, order));
                validation = validate_lattice_series(lat, order);
                try {
                    kiss = kissing_data(lat, order);
                } catch (const InsufficientOrder& ex) {
                    have_kissing = false;
                    kissing_note = ex.what();
                }
            }
            j["params"] = {{"dim", dim},
                           {"even", even},
                           {"counts", cli_detail::counts_to_json(counts)},
                           {"order", order}};
            j["basis"] = basis;
            if (have_kissing)
                j["kissing"] = {{"min_norm", kiss.min_norm}, {"count", to_json(kiss.count)}};
            else {
                j["kissing"] = nullptr;
                j["kissing_note"] = kissing_note;
            }
            json issues = json::array();
            for (const auto& issue : validation.issues)
                issues.push_back(
                    {{"q_exponent", issue.q_exponent}, {"message", issue.message}});
            j["validation"] = {{"pass", validation.pass}, {"issues", issues}};
            emit(j, format, out);
            return validation.pass ? 0 : 1;
        }
        if (certify->parsed() || gain_one->parsed()) {
            ShortVectorCounts counts = cli_detail::parse_counts(counts_arg);
            json j;
            json params = {{"dim", dim},
                           {"even", even},
                           {"counts", cli_detail::counts_to_json(counts)},
                           {"solve_order", even ? cli_detail::even_solve_order(dim)
                                                : cli_detail::general_solve_order(dim)}};
            if (gain_one->parsed()) {
                Rational gain = even ? gain_at_one(even_from_counts(dim, counts))
                                     : gain_at_one(general_from_counts(dim, counts));
                j["command"] = "secrecy gain-at-one";
                j["params"] = params;
                j["value_at_quarter"] = to_json(gain.inverse());
                j["gain"] = to_json(gain);
                if (approx)
                    j["approx"] = {{"gain", gain.to_double()},
                                   {"value_at_quarter", gain.inverse().to_double()}};
                emit(j, format, out);
                return 0;
            }
            if (bracket_bits < 1)
                throw std::invalid_argument("cli: --bracket-bits must be positive");
            params.push_back({"bracket_bits", bracket_bits});
            Rational width = pow2(-static_cast<long long>(bracket_bits));
            SecrecyCertificate cert =
                even ? certify_gain(even_from_counts(dim, counts), width)
                     : certify_gain(general_from_counts(dim, counts), width);
            j["command"] = "secrecy certify";
            j["params"] = params;
            j["inverse_secrecy_polynomial"] = cli_detail::poly_report(cert.d, Var::Z);
            j["value_at_quarter"] = to_json(cert.value_at_quarter);
            j["verdict"] = verdict_string(cert.verdict);
            j["gain"] = cert.gain ? to_json(*cert.gain) : json(nullptr);
            j["gain_bracket"] = json::array(
                {to_json(cert.gain_bracket.first), to_json(cert.gain_bracket.second)});
            json intervals = json::array();
            for (const auto& iv : cert.interior_critical_intervals)
                intervals.push_back(to_json(iv));
            j["interior_critical_intervals"] = intervals;
            if (approx) {
                json a;
                a["value_at_quarter"] = cert.value_at_quarter.to_double();
                if (cert.gain) a["gain"] = cert.gain->to_double();
                a["gain_bracket"] = json::array({cert.gain_bracket.first.to_double(),
                                                 cert.gain_bracket.second.to_double()});
                j["approx"] = a;
            }
            emit(j, format, out);
            return cert.verdict == Verdict::HoldsAtQuarter ? 0 : 1;
        }
        if (thm1->parsed()) {
            Rational diff =
                inverse_gain_difference_even(thm_m, thm_k, Rational(kappa),
                                             Rational(kappa_prime));
            json j;
            j["command"] = "secrecy thm1";
            j["params"] = {{"m", thm_m},
                           {"k", thm_k},
                           {"kappa", to_json(Rational(kappa))},
                           {"kappa_prime", to_json(Rational(kappa_prime))}};
            j["difference"] = to_json(diff);
            j["cross_checked"] = true;
            if (approx) j["approx"] = {{"difference", diff.to_double()}};
            emit(j, format, out);
            return 0;
        }
        if (thm2->parsed()) {
            bool improves =
                gain_improves_even(thm_m, thm_k, Rational(kappa_prev), Rational(kappa),
                                   Rational(kappa_prev_prime), Rational(kappa_prime));
            json j;
            j["command"] = "secrecy thm2";
            j["params"] = {{"m", thm_m},
                           {"k", thm_k},
                           {"kappa_prev", to_json(Rational(kappa_prev))},
                           {"kappa", to_json(Rational(kappa))},
                           {"kappa_prev_prime", to_json(Rational(kappa_prev_prime))},
                           {"kappa_prime", to_json(Rational(kappa_prime))}};
            j["improves"] = improves;
            j["cross_checked"] = true;
            j["note"] =
                "the comparison is linear in the count differences; no ordering "
                "between kappa_prev and kappa is assumed or enforced";
            emit(j, format, out);
            return improves ? 0 : 1;
        }
        if (thm3->parsed()) {
            Rational diff = inverse_gain_difference_general(thm_n, Rational(h_arg),
                                                            Rational(h_prime_arg));
            json j;
            j["command"] = "secrecy thm3";
            j["params"] = {{"n", thm_n},
                           {"h", to_json(Rational(h_arg))},
                           {"h_prime", to_json(Rational(h_prime_arg))}};
            j["difference"] = to_json(diff);
            j["cross_checked"] = true;
            if (approx) j["approx"] = {{"difference", diff.to_double()}};
            emit(j, format, out);
            return 0;
        }
        if (lin_oggier->parsed()) {
            Rational gain = closed_form_gain_16_23(thm_n, kissing);
            json j;
            j["command"] = "secrecy lin-oggier";
            j["params"] = {{"n", thm_n}, {"kissing", kissing}};
            j["gain"] = to_json(gain);
            j["cross_checked"] = true;
            if (approx) j["approx"] = {{"gain", gain.to_double()}};
            emit(j, format, out);
            return 0;
        }
        if (n8k->parsed()) {
            json reports = json::array();
            if (mode_arg == "paper" || mode_arg == "paper_faithful") {
                reports.push_back(
                    cli_detail::bound_report_json(dimension_bound(bound_k,
                                                                  BoundMode::PaperFaithful)));
            } else if (mode_arg == "derived") {
                reports.push_back(cli_detail::bound_report_json(
                    dimension_bound(bound_k, BoundMode::Derived)));
            } else {
                // No mode given: run every mode this k supports.
                if (bound_k >= 3 && bound_k <= 5)
                    reports.push_back(cli_detail::bound_report_json(
                        dimension_bound(bound_k, BoundMode::PaperFaithful)));
                reports.push_back(cli_detail::bound_report_json(
                    dimension_bound(bound_k, BoundMode::Derived)));
            }
            json j;
            j["command"] = "bounds n8k";
            j["params"] = {{"k", bound_k},
                           {"mode", mode_arg.empty() ? "both" : mode_arg},
                           {"order", 4 * (bound_k + 2)}};
            j["reports"] = reports;
            if (approx) {
                json a = json::array();
                for (const auto& r : reports)
                    a.push_back(rational_from_json(r["bound_constant"]).to_double());
                j["approx"] = {{"bound_constants", a}};
            }
            emit(j, format, out);
            return 0;
        }
        if (selftest->parsed()) {
            std::vector<CheckResult> results = run_acceptance_battery(only);
            if (selftest_format == "json") {
                json checks = json::array();
                for (const auto& r : results)
                    checks.push_back(cli_detail::check_result_json(r));
                json j;
                j["command"] = "selftest";
                j["params"] = {{"only", only}};
                j["checks"] = checks;
                j["all_pass"] = all_pass(results);
                emit(j, "json", out);
            } else {
                cli_detail::render_selftest_table(results, out);
            }
            return all_pass(results) ? 0 : 1;
        }
        err << "error: no subcommand executed\n";
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "infeasible: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        err << "cross-check failure: " << e.what() << "\n";
        return 1;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace unitheta

#endif  // UNITHETA_CLI_HPP

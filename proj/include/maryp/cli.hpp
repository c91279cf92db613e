#pragma once

// Command-line front end. One subcommand per library operation; json and csv
// output is byte-stable (pinned by golden files), text is for humans.
//
// Exit codes:
//   0  success, or a conjecture probe that merely found violations
//   1  a theorem-style check or reproduction failed
//   2  usage / parse errors

#include <maryp/alpha.hpp>
#include <maryp/hbeta.hpp>
#include <maryp/mseq.hpp>
#include <maryp/partitions.hpp>
#include <maryp/report.hpp>
#include <maryp/series.hpp>
#include <maryp/verify.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace maryp::cli {

enum class Format { text, json, csv };

namespace detail {

inline Format parse_format(const std::string& name) {
    if (name == "text") return Format::text;
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    throw CLI::ValidationError("--format", "unknown format '" + name + "'");
}

inline Format default_format() {
    if (const char* env = std::getenv("MARYP_FORMAT")) {
        std::string v(env);
        if (v == "json") return Format::json;
        if (v == "csv") return Format::csv;
    }
    return Format::text;
}

inline void emit_json(const Json& j, std::ostream& os) { os << j.dump(2) << '\n'; }

inline void emit_report(const CongruenceReport& rep, Format f, std::ostream& os) {
    switch (f) {
        case Format::json: emit_json(to_json(rep), os); break;
        case Format::csv: os << to_csv(rep); break;
        case Format::text: os << to_text(rep); break;
    }
}

inline void emit_series(const TruncatedSeries& s, const Json& meta, Format f, std::ostream& os) {
    switch (f) {
        case Format::json: {
            Json j = meta;
            j["order"] = s.order();
            Json coeffs = Json::array();
            for (int n = 0; n <= s.order(); ++n) coeffs.push_back(s[n].get_str());
            j["coeffs"] = coeffs;
            emit_json(j, os);
            break;
        }
        case Format::csv:
            os << "n,coefficient\n";
            for (int n = 0; n <= s.order(); ++n) os << n << ',' << s[n].get_str() << '\n';
            break;
        case Format::text:
            dump(s, os);
            break;
    }
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out_stream, std::ostream& err) {
    using detail::emit_json;
    using detail::emit_report;
    using detail::emit_series;

    CLI::App app{"maryp: exact counting and congruence verification for partitions into\n"
                 "parts m_0 m_1 ... m_r of a sequence M (sequence specs: const:m[,len],\n"
                 "fact, list:a,b,c[,tail=const|succ])"};
    app.require_subcommand(1);
    app.fallthrough();  // --format / --out may follow the subcommand
    std::string format_name;
    std::string out_file;
    app.add_option("--format", format_name, "output format: text|json|csv")->capture_default_str();
    app.add_option("--out", out_file, "write output to a file instead of stdout");

    std::string seq_spec = "const:2";
    long n_value = 0;
    int r_value = 1;
    long n_max = 50;
    int order = 50;
    long m_value = 2;
    std::vector<long> ms_values;
    std::vector<int> eps;
    long c_value = 0;
    int k_value = 1;
    std::vector<long> n_list = {2, 6, 8, 10, 12, 16};
    bool factorial_mode = false;
    std::string indexing_name = "rfact";

    auto* cmd_count = app.add_subcommand("count", "p_M(n) by dynamic programming");
    cmd_count->add_option("--seq", seq_spec, "sequence spec")->required();
    cmd_count->add_option("--n", n_value, "argument n >= 0")->required();

    auto* cmd_series = app.add_subcommand("series", "coefficients of the partition series F_M");
    cmd_series->add_option("--seq", seq_spec)->required();
    cmd_series->add_option("--order", order, "truncation order")->required();

    auto* cmd_alpha = app.add_subcommand("alpha", "basis-change table alpha_{m,r}(1..r)");
    cmd_alpha->add_option("--m", m_value)->required();
    cmd_alpha->add_option("--r", r_value)->required();

    auto* cmd_beta = app.add_subcommand("beta", "canonical beta coefficients for a tuple of entries");
    cmd_beta->add_option("--ms", ms_values, "entries m_1,m_2,...")->required()->delimiter(',');

    auto* cmd_hseries = app.add_subcommand("hseries", "coefficients of H_(m_1..m_r)");
    cmd_hseries->add_option("--ms", ms_values)->required()->delimiter(',');
    cmd_hseries->add_option("--order", order)->required();

    auto* cmd_thm = app.add_subcommand("verify-theorem", "main congruence sweep");
    cmd_thm->add_option("--seq", seq_spec)->required();
    cmd_thm->add_option("--r", r_value)->required();
    cmd_thm->add_option("--n-max", n_max);

    auto* cmd_ident = app.add_subcommand("verify-identity",
                                         "shifted series against H * F (truncated equality)");
    cmd_ident->add_option("--seq", seq_spec)->required();
    cmd_ident->add_option("--r", r_value)->required();
    cmd_ident->add_option("--order", order);

    auto* cmd_conj = app.add_subcommand("check-conjecture", "observational congruence probe");
    cmd_conj->add_option("--seq", seq_spec);
    cmd_conj->add_option("--r", r_value)->required();
    cmd_conj->add_option("--eps", eps, "shift bits, e.g. 0,1,0")->delimiter(',');
    cmd_conj->add_option("--c", c_value);
    cmd_conj->add_option("--n-max", n_max);
    cmd_conj->add_flag("--factorial", factorial_mode, "factorial-parts variant");
    cmd_conj->add_option("--indexing", indexing_name, "rfact|products (factorial variant)");

    auto* cmd_cex = app.add_subcommand("counterexample",
                                       "factorial-parts residue reproduction, p(120n-26) mod 20");
    cmd_cex->add_option("--n-list", n_list, "n values to sample")->delimiter(',');

    auto* cmd_classical = app.add_subcommand("classical", "m-ary congruence regression");
    cmd_classical->add_option("--m", m_value)->required();
    cmd_classical->add_option("--r", r_value)->required();
    cmd_classical->add_option("--eps", eps)->delimiter(',');
    cmd_classical->add_option("--n-max", n_max);

    auto* cmd_church = app.add_subcommand("churchhouse", "binary-partition congruence families");
    cmd_church->add_option("--k", k_value)->required();
    cmd_church->add_option("--n-max", n_max);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out_stream << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    std::ofstream file_stream;
    std::ostream* os = &out_stream;
    if (!out_file.empty()) {
        file_stream.open(out_file);
        if (!file_stream) {
            err << "error: cannot open output file '" << out_file << "'\n";
            return 2;
        }
        os = &file_stream;
    }
    Format format = format_name.empty() ? detail::default_format() : detail::parse_format(format_name);

    if (eps.empty() && r_value > 1 &&
        (app.got_subcommand(cmd_conj) || app.got_subcommand(cmd_classical)))
        eps.assign(static_cast<std::size_t>(r_value - 1), 0);

    try {
        if (app.got_subcommand(cmd_count)) {
            MSequence M = MSequence::parse_spec(seq_spec);
            Int value = count_pm(M, Int(n_value));
            switch (format) {
                case Format::text: *os << value.get_str() << '\n'; break;
                case Format::json:
                    emit_json({{"check", "count"},
                               {"seq", M.print_spec()},
                               {"n", n_value},
                               {"value", value.get_str()}},
                              *os);
                    break;
                case Format::csv:
                    *os << "seq,n,value\n" << M.print_spec() << ',' << n_value << ','
                        << value.get_str() << '\n';
                    break;
            }
            return 0;
        }
        if (app.got_subcommand(cmd_series)) {
            MSequence M = MSequence::parse_spec(seq_spec);
            emit_series(pm_series(M, order), {{"check", "series"}, {"seq", M.print_spec()}}, format,
                        *os);
            return 0;
        }
        if (app.got_subcommand(cmd_alpha)) {
            AlphaTable t = alpha_table(m_value, r_value);
            switch (format) {
                case Format::json: {
                    Json values = Json::array();
                    for (const Int& v : t.values) values.push_back(v.get_str());
                    emit_json({{"check", "alpha"}, {"m", t.m}, {"r", t.r}, {"values", values}}, *os);
                    break;
                }
                case Format::csv:
                    *os << "m,r,i,alpha\n";
                    for (int i = 1; i <= t.r; ++i)
                        *os << t.m << ',' << t.r << ',' << i << ',' << t.alpha(i).get_str() << '\n';
                    break;
                case Format::text:
                    for (int i = 1; i <= t.r; ++i)
                        *os << "alpha(" << i << ") = " << t.alpha(i).get_str() << '\n';
                    break;
            }
            return 0;
        }
        if (app.got_subcommand(cmd_beta)) {
            BetaMap bm = beta_map(ms_values);
            switch (format) {
                case Format::json: {
                    Json entries = Json::array();
                    for (const auto& [tuple, value] : bm.entries)
                        entries.push_back({{"tuple", tuple}, {"value", value.get_str()}});
                    emit_json({{"check", "beta"}, {"ms", bm.ms}, {"entries", entries}}, *os);
                    break;
                }
                case Format::csv:
                    *os << "tuple,value\n";
                    for (const auto& [tuple, value] : bm.entries) {
                        *os << '"';
                        for (std::size_t i = 0; i < tuple.size(); ++i)
                            *os << (i ? " " : "") << tuple[i];
                        *os << "\"," << value.get_str() << '\n';
                    }
                    break;
                case Format::text:
                    for (const auto& [tuple, value] : bm.entries) {
                        *os << "beta_(";
                        for (std::size_t i = 0; i < tuple.size(); ++i)
                            *os << (i ? "," : "") << tuple[i];
                        *os << ") = " << value.get_str() << '\n';
                    }
                    break;
            }
            return 0;
        }
        if (app.got_subcommand(cmd_hseries)) {
            HSeries h = build_h(ms_values, order);
            emit_series(h.series, {{"check", "hseries"}, {"ms", h.ms}}, format, *os);
            return 0;
        }
        if (app.got_subcommand(cmd_thm)) {
            MSequence M = MSequence::parse_spec(seq_spec);
            CongruenceReport rep = verify_main_theorem(M, r_value, n_max);
            emit_report(rep, format, *os);
            return rep.pass() ? 0 : 1;
        }
        if (app.got_subcommand(cmd_ident)) {
            MSequence M = MSequence::parse_spec(seq_spec);
            IdentityReport rep = verify_identity(M, r_value, order);
            Json params{{"seq", M.print_spec()}, {"r", r_value}, {"order", order}};
            switch (format) {
                case Format::json: emit_json(to_json(rep, "identity", params), *os); break;
                case Format::csv:
                    *os << "equal,order,first_mismatch\n"
                        << (rep.equal ? 1 : 0) << ',' << rep.order << ',' << rep.first_mismatch
                        << '\n';
                    break;
                case Format::text:
                    *os << "identity " << (rep.equal ? "holds" : "FAILS") << " to order "
                        << rep.order;
                    if (!rep.equal) *os << " (first mismatch at " << rep.first_mismatch << ")";
                    *os << '\n';
                    break;
            }
            return rep.equal ? 0 : 1;
        }
        if (app.got_subcommand(cmd_conj)) {
            CongruenceReport rep;
            if (factorial_mode) {
                FactorialIndexing idx;
                if (indexing_name == "rfact") idx = FactorialIndexing::r_factorial;
                else if (indexing_name == "products") idx = FactorialIndexing::entry_products;
                else {
                    err << "error: --indexing must be rfact or products\n";
                    return 2;
                }
                rep = check_conjecture_factorial(r_value, eps, Int(c_value), n_max, idx);
            } else {
                ConjectureParams p{MSequence::parse_spec(seq_spec), r_value, eps, Int(c_value)};
                rep = check_conjecture_general(p, n_max);
            }
            emit_report(rep, format, *os);
            return 0;  // findings, not failures
        }
        if (app.got_subcommand(cmd_cex)) {
            CongruenceReport rep = reproduce_counterexample(n_list);
            emit_report(rep, format, *os);
            return rep.pass() ? 0 : 1;
        }
        if (app.got_subcommand(cmd_classical)) {
            CongruenceReport rep = verify_classical_mary(m_value, r_value, eps, n_max);
            emit_report(rep, format, *os);
            return rep.pass() ? 0 : 1;
        }
        if (app.got_subcommand(cmd_church)) {
            ChurchhouseReports reps = verify_churchhouse(k_value, n_max);
            switch (format) {
                case Format::json:
                    emit_json(Json{{"check", "churchhouse"},
                                   {"scaling", to_json(reps.scaling)},
                                   {"powers", to_json(reps.powers)}},
                              *os);
                    break;
                case Format::csv: {
                    *os << "family,n,arg,residue,violation\n";
                    for (const CongruenceReport* rep : {&reps.scaling, &reps.powers})
                        for (const Sample& s : rep->samples) {
                            bool bad = false;
                            for (long v : rep->violations)
                                if (v == s.n) bad = true;
                            *os << rep->check << ',' << s.n << ',' << s.arg.get_str() << ','
                                << s.residue.get_str() << ',' << (bad ? 1 : 0) << '\n';
                        }
                    break;
                }
                case Format::text:
                    *os << to_text(reps.scaling) << to_text(reps.powers);
                    break;
            }
            return reps.scaling.pass() && reps.powers.pass() ? 0 : 1;
        }
    } catch (const SpecParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const OrderBudgetError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const SequenceError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    }
    err << "error: no subcommand given\n";
    return 2;
}

inline int run(int argc, char** argv) {
    return run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}

}  // namespace maryp::cli

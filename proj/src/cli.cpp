#include "permav/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "permav/automaton.hpp"
#include "permav/oracle.hpp"
#include "permav/survey.hpp"

namespace permav::cli {

namespace {

struct CommonArgs {
    std::string basis_text;
    std::string format = "text";
    std::string output_path;
    long guard_states = BuildGuards{}.max_states;
    int guard_slots = BuildGuards{}.max_slots;
    bool force = false;
};

BuildOptions build_options(const CommonArgs& c) {
    BuildOptions o;
    o.guards.max_states = c.guard_states;
    o.guards.max_slots = c.guard_slots;
    o.force = c.force;
    return o;
}

void add_common(CLI::App* cmd, CommonArgs& c, bool with_basis = true,
                std::vector<std::string> formats = {"text", "structured"}) {
    if (with_basis)
        cmd->add_option("--basis", c.basis_text, "comma-separated basis, e.g. 4321,3142")
            ->required();
    c.format = formats.front();
    cmd->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember(std::move(formats)));
    cmd->add_option("--output", c.output_path, "write output to this file instead of stdout");
    cmd->add_option("--guard-states", c.guard_states, "abort above this many automaton states");
    cmd->add_option("--guard-slots", c.guard_slots, "abort above this many slots");
    cmd->add_flag("--force", c.force, "skip the regularity gate");
}

void emit(const CommonArgs& c, std::ostream& out, const std::string& text) {
    if (c.output_path.empty()) {
        out << text;
    } else {
        std::ofstream f(c.output_path);
        if (!f) throw Error("cannot open output file: " + c.output_path);
        f << text;
    }
}

std::string render_checks(const RegularityReport& report, bool structured) {
    std::ostringstream os;
    if (structured) {
        for (const auto& chk : report.checks) {
            os << "check." << chk.name << "=" << (chk.passed ? "pass" : "fail");
            if (chk.witness) os << " witness=" << to_string(*chk.witness);
            os << "\n";
        }
        os << "regular=" << (report.regular ? "true" : "false") << "\n";
    } else {
        for (const auto& chk : report.checks) {
            os << "  " << chk.name << ": " << (chk.passed ? "pass" : "FAIL");
            if (chk.witness) os << "  (witness " << to_string(*chk.witness) << ")";
            os << "\n";
        }
        os << "verdict: " << (report.regular ? "regular" : "not regular") << "\n";
        if (!report.regular)
            os << "failing condition: " << report.first_failing()->name << "\n";
    }
    return os.str();
}

int cmd_check(const CommonArgs& c, std::ostream& out) {
    const Basis basis = parse_basis(c.basis_text);
    const RegularityReport report = check_regular(basis);
    const bool structured = c.format == "structured";
    std::string head = structured ? "basis=" + to_string(basis) + "\n"
                                  : "basis " + to_string(basis) + "\n";
    emit(c, out, head + render_checks(report, structured));
    return report.regular ? kExitOk : kExitNotRegular;
}

int cmd_automaton(const CommonArgs& c, const std::string& format, bool do_minimize, bool indec,
                  std::ostream& out) {
    const Basis basis = parse_basis(c.basis_text);
    Automaton a = build_automaton(
        basis, indec ? Automaton::Kind::SumIndecomposable : Automaton::Kind::Class,
        build_options(c));
    if (do_minimize) a = minimize(a);
    emit(c, out, format == "dot" ? to_dot(a) : to_json(a) + "\n");
    return kExitOk;
}

int cmd_gf(const CommonArgs& c, bool indec, std::ostream& out) {
    const Basis basis = parse_basis(c.basis_text);
    const Automaton::Kind kind =
        indec ? Automaton::Kind::SumIndecomposable : Automaton::Kind::Class;
    const Automaton a = build_automaton(basis, kind, build_options(c));
    const RationalFunction gf = gf_from_automaton(minimize(a));
    std::ostringstream os;
    if (c.format == "structured") {
        os << "basis=" << to_string(basis) << "\n";
        os << "kind=" << (indec ? "indecomposable" : "class") << "\n";
        os << "numerator=" << to_string(gf.num()) << "\n";
        os << "denominator=" << to_string(gf.den()) << "\n";
        os << "states=" << a.state_count() << "\n";
        os << "slot_bound=" << a.slot_bound << "\n";
    } else {
        os << to_string(gf) << "\n";
    }
    emit(c, out, os.str());
    return kExitOk;
}

int cmd_count(const CommonArgs& c, int n, bool indec, std::ostream& out) {
    const Basis basis = parse_basis(c.basis_text);
    const Automaton::Kind kind =
        indec ? Automaton::Kind::SumIndecomposable : Automaton::Kind::Class;
    const Automaton a = build_automaton(basis, kind, build_options(c));
    const Series s = series_from_automaton(a, n);
    std::ostringstream os;
    if (c.format == "structured") {
        os << "basis=" << to_string(basis) << "\n";
        os << "kind=" << (indec ? "indecomposable" : "class") << "\n";
        os << "series=" << to_string(s) << "\n";
    } else {
        os << to_string(s) << "\n";
    }
    emit(c, out, os.str());
    return kExitOk;
}

int cmd_oracle(const CommonArgs& c, int n, std::ostream& out) {
    const Basis basis = parse_basis(c.basis_text);
    const OracleCounts counts = enumerate_class(basis, n);
    std::ostringstream os;
    if (c.format == "structured") {
        os << "basis=" << to_string(basis) << "\n";
        os << "class=" << to_string(counts.class_counts) << "\n";
        os << "indecomposable=" << to_string(counts.indecomposable_counts) << "\n";
    } else {
        os << "class:          " << to_string(counts.class_counts) << "\n";
        os << "indecomposable: " << to_string(counts.indecomposable_counts) << "\n";
    }
    emit(c, out, os.str());
    return kExitOk;
}

int cmd_compare(const CommonArgs& c, int n, std::ostream& out) {
    const Basis basis = parse_basis(c.basis_text);
    const CompareReport report = compare(basis, n);
    std::ostringstream os;
    const bool structured = c.format == "structured";
    if (structured) {
        os << "basis=" << to_string(basis) << "\n";
        os << "regular=" << (report.regular ? "true" : "false") << "\n";
        os << "oracle.class=" << to_string(report.oracle.class_counts) << "\n";
        os << "oracle.indecomposable=" << to_string(report.oracle.indecomposable_counts) << "\n";
    } else {
        os << "basis " << to_string(basis) << (report.regular ? " (regular)" : " (not regular)")
           << "\n";
        os << "oracle class:          " << to_string(report.oracle.class_counts) << "\n";
        os << "oracle indecomposable: " << to_string(report.oracle.indecomposable_counts) << "\n";
    }
    if (!report.regular) {
        os << (structured ? "verdict=oracle-only\n"
                          : "class is not regular; oracle counts only\n");
        emit(c, out, os.str());
        return kExitOk;
    }
    if (structured) {
        os << "automaton.class=" << to_string(report.automaton_class) << "\n";
        os << "automaton.indecomposable=" << to_string(report.automaton_indecomposable) << "\n";
        os << "verdict=" << (report.ok ? "match" : "MISMATCH") << "\n";
        if (!report.ok)
            os << "mismatch=" << report.mismatch_kind << " n=" << *report.first_mismatch_length
               << "\n";
    } else {
        os << "automaton class:       " << to_string(report.automaton_class) << "\n";
        os << "automaton indecomp.:   " << to_string(report.automaton_indecomposable) << "\n";
        if (report.ok) {
            os << "verdict: match\n";
        } else {
            os << "verdict: MISMATCH (" << report.mismatch_kind << " series, length "
               << *report.first_mismatch_length << ")\n";
        }
    }
    emit(c, out, os.str());
    return report.ok ? kExitOk : kExitMismatch;
}

int cmd_survey(const CommonArgs& c, int length, int size, int n, bool verify_members,
               std::ostream& out) {
    SurveyOptions options;
    options.series_length = n;
    options.verify_members = verify_members;
    const SurveyResult res = survey(length, size, options);
    std::ostringstream os;
    const bool structured = c.format == "structured";
    for (const auto& row : res.rows) {
        if (structured) {
            os << "class=" << row.symmetry_class_id << "\n";
            os << "basis=" << to_string(row.representative) << "\n";
            os << "members=" << row.members.size() << "\n";
            os << "regular=" << (row.regular ? "true" : "false") << "\n";
            if (row.regular) {
                os << "gf=" << to_string(*row.gf) << "\n";
                os << "series=" << to_string(row.series) << "\n";
                os << "states=" << row.automaton_states << "\n";
                os << "minimized_states=" << row.minimized_states << "\n";
                os << "slot_bound=" << row.slot_bound << "\n";
            } else {
                os << "failing_condition=" << row.failing_condition << "\n";
            }
            os << "\n";
        } else {
            os << "class " << row.symmetry_class_id << ": {" << to_string(row.representative)
               << "} x" << row.members.size();
            if (row.regular) {
                os << "\n  gf     " << to_string(*row.gf);
                os << "\n  series " << to_string(row.series) << "\n";
            } else {
                os << "  -- not regular (" << row.failing_condition << ")\n";
            }
        }
    }
    if (structured) {
        os << "summary.bases=" << res.basis_count << "\n";
        os << "summary.symmetry_classes=" << res.rows.size() << "\n";
        os << "summary.regular_classes=" << res.regular_class_count << "\n";
        os << "summary.distinct_gfs=" << res.distinct_gf_count << "\n";
    } else {
        os << "\nbases: " << res.basis_count << "\n";
        os << "symmetry classes: " << res.rows.size() << "\n";
        os << "regular classes: " << res.regular_class_count << "\n";
        os << "distinct generating functions among regular classes: " << res.distinct_gf_count
           << "\n";
        os << "note: Wilf classification of classes without a regular insertion encoding is out"
              " of scope; equality is certified only where a generating function was computed.\n";
    }
    emit(c, out, os.str());
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"insertion-encoding automata and generating functions for permutation classes"};
    app.require_subcommand(1);

    CommonArgs check_args;
    CLI::App* check = app.add_subcommand("check", "decide regularity of the insertion encoding");
    add_common(check, check_args);

    CommonArgs auto_args;
    bool auto_minimize = false, auto_indec = false;
    CLI::App* automaton = app.add_subcommand("automaton", "construct the accepting automaton");
    add_common(automaton, auto_args, /*with_basis=*/true, {"structured", "dot"});
    automaton->add_flag("--minimize", auto_minimize, "minimize before exporting");
    automaton->add_flag("--indecomposable", auto_indec, "sum indecomposable variant");

    CommonArgs gf_args;
    bool gf_indec = false;
    CLI::App* gf = app.add_subcommand("gf", "compute the rational generating function");
    add_common(gf, gf_args);
    gf->add_flag("--indecomposable", gf_indec, "sum indecomposable variant");

    CommonArgs count_args;
    bool count_indec = false;
    int count_n = 10;
    CLI::App* count = app.add_subcommand("count", "count the class by length via the automaton");
    add_common(count, count_args);
    count->add_option("--n", count_n, "maximum length")->required();
    count->add_flag("--indecomposable", count_indec, "sum indecomposable variant");

    CommonArgs oracle_args;
    int oracle_n = 8;
    CLI::App* oracle = app.add_subcommand("oracle", "brute-force enumeration counts");
    add_common(oracle, oracle_args);
    oracle->add_option("--n", oracle_n, "maximum length")->required();

    CommonArgs compare_args;
    int compare_n = 8;
    CLI::App* cmp = app.add_subcommand("compare", "diff automaton series against the oracle");
    add_common(cmp, compare_args);
    cmp->add_option("--n", compare_n, "maximum length")->required();

    CommonArgs survey_args;
    int survey_length = 4, survey_size = 2, survey_n = 8;
    bool survey_no_verify = false;
    CLI::App* svy = app.add_subcommand("survey", "classify all bases of a given shape");
    add_common(svy, survey_args, /*with_basis=*/false);
    svy->add_option("--length", survey_length, "pattern length")->required();
    svy->add_option("--size", survey_size, "basis size")->required();
    svy->add_option("--n", survey_n, "series prefix length");
    svy->add_flag("--no-verify-members", survey_no_verify,
                  "skip the per-member generating-function verification");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (check->parsed()) return cmd_check(check_args, out);
        if (automaton->parsed())
            return cmd_automaton(auto_args, auto_args.format, auto_minimize, auto_indec, out);
        if (gf->parsed()) return cmd_gf(gf_args, gf_indec, out);
        if (count->parsed()) return cmd_count(count_args, count_n, count_indec, out);
        if (oracle->parsed()) return cmd_oracle(oracle_args, oracle_n, out);
        if (cmp->parsed()) return cmd_compare(compare_args, compare_n, out);
        if (svy->parsed())
            return cmd_survey(survey_args, survey_length, survey_size, survey_n,
                              !survey_no_verify, out);
    } catch (const NotRegularError& e) {
        err << e.what() << "\n";
        err << render_checks(e.report(), false);
        err << "re-run with --force to attempt the construction anyway\n";
        return kExitNotRegular;
    } catch (const GuardError& e) {
        err << "resource guard tripped (" << e.guard() << "): " << e.what() << "\n";
        return kExitGuard;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    err << "no subcommand given\n";
    return kExitUsage;
}

}  // namespace permav::cli

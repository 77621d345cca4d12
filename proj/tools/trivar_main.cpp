#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "trivar/classify.hpp"
#include "trivar/errors.hpp"
#include "trivar/io.hpp"
#include "trivar/relations.hpp"
#include "trivar/suspension.hpp"
#include "trivar/sweep.hpp"

namespace {

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw trivar::ParseError("cannot read " + path);
        buf << in.rdbuf();
    }
    return buf.str();
}

int run_validate(const std::string& path) {
    const trivar::TrinomialDatum d = trivar::parse_input_document(read_input(path));
    const trivar::ValidationReport rep = trivar::validate(d);
    std::cout << trivar::validation_to_json(rep).dump(2) << '\n';
    return rep.valid ? 0 : 2;
}

int run_classify(const std::string& path, bool witness, int bound, bool json) {
    const trivar::TrinomialDatum d = trivar::parse_input_document(read_input(path));
    const trivar::ValidationReport rep = trivar::validate(d);
    if (!rep.valid) {
        std::cout << trivar::validation_to_json(rep).dump(2) << '\n';
        return 2;
    }
    bool witness_failed = false;
    const auto report = trivar::classification_report(d, witness, bound, &witness_failed);
    if (json) {
        std::cout << report.dump() << '\n';
    } else {
        std::cout << trivar::classification_text(report);
    }
    return witness_failed ? 4 : 0;
}

nlohmann::ordered_json stage_to_json(const trivar::SplitResult& split, bool reconstructed) {
    nlohmann::ordered_json stage;
    stage["p1"] = split.p1.str();
    stage["p2"] = split.p2.str();
    stage["f"] = split.f.str();
    nlohmann::ordered_json vars = nlohmann::ordered_json::array();
    for (const auto& v : split.suspension_vars) vars.push_back(trivar::variable_name(v));
    stage["suspension_vars"] = vars;
    stage["suspension_weights"] = split.suspension_weights;
    stage["base"] = trivar::datum_to_json(split.base);
    stage["reconstruction"] = reconstructed ? "pass" : "fail";
    return stage;
}

// T_r^{l_r} - f must be a nonzero rational multiple of the relation it
// rewrites (the last one of the datum being split).
bool reconstruction_ok(const trivar::TrinomialDatum& d, const trivar::SplitResult& split) {
    const trivar::Polynomial rewritten =
        trivar::Polynomial::term(trivar::tuple_monomial(d, d.r), trivar::Rational(1)) - split.f;
    const auto rels = trivar::relations(d).relations;
    return !rels.empty() && rewritten.proportional_to(rels.back());
}

int run_suspend(const std::string& path, bool chain) {
    trivar::TrinomialDatum d = trivar::parse_input_document(read_input(path));
    trivar::require_valid(d);

    nlohmann::ordered_json doc;
    doc["stages"] = nlohmann::ordered_json::array();
    bool all_ok = true;
    if (chain) {
        trivar::TrinomialDatum current = d;
        while (current.r >= 2) {
            const trivar::SplitResult split = trivar::suspension_split(current);
            const bool ok = reconstruction_ok(current, split);
            all_ok = all_ok && ok;
            doc["stages"].push_back(stage_to_json(split, ok));
            current = split.base;
        }
    } else {
        const trivar::SplitResult split = trivar::suspension_split(d);
        const bool ok = reconstruction_ok(d, split);
        all_ok = ok;
        doc["stages"].push_back(stage_to_json(split, ok));
    }
    std::cout << doc.dump(2) << '\n';
    return all_ok ? 0 : 4;
}

struct SweepFlags {
    int type = 2;
    trivar::SweepOptions opt;
    std::string out;
};

int run_sweep_cmd(const SweepFlags& flags) {
    trivar::SweepOptions opt = flags.opt;
    opt.type = flags.type == 1 ? trivar::VarietyType::Type1 : trivar::VarietyType::Type2;

    std::ofstream out_file;
    std::ostream* rows = nullptr;
    if (!flags.out.empty()) {
        out_file.open(flags.out, std::ios::binary);
        if (!out_file) throw trivar::ParseError("cannot write " + flags.out);
        rows = &out_file;
    }

    const trivar::SweepSummary summary = trivar::run_sweep(opt, rows);
    for (const auto& [name, stats] : summary.by_check) {
        std::cout << name << ": " << stats.rows << " rows, " << stats.failures << " failures\n";
    }
    std::cout << "total: " << summary.rows << " rows, " << summary.failures << " failures\n";
    if (summary.failures > 0) {
        if (summary.first_failure) std::cerr << *summary.first_failure << '\n';
        return 5;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rigidity, rationality and additive-action witnesses for trinomial varieties"};
    app.require_subcommand(1);

    std::string in_path = "-";
    bool witness = false;
    int bound = trivar::kDefaultNilpotencyBound;
    bool json = false;
    bool split = false;
    bool chain = false;
    SweepFlags sweep;
    std::vector<std::string> checks;

    auto* validate_cmd = app.add_subcommand("validate", "Check an input document");
    validate_cmd->add_option("path", in_path, "Input file (defaults to stdin)");

    auto* classify_cmd =
        app.add_subcommand("classify", "Rigidity/rationality report for an input document");
    classify_cmd->add_option("path", in_path, "Input file (defaults to stdin)");
    classify_cmd->add_flag("--witness", witness, "Construct and verify a derivation witness");
    classify_cmd->add_option("--bound", bound, "Nilpotency iteration bound");
    classify_cmd->add_flag("--json", json, "Emit the report as one JSON line");

    auto* suspend_cmd =
        app.add_subcommand("suspend", "Rewrite a Type 2 datum as an iterated suspension");
    suspend_cmd->add_option("path", in_path, "Input file (defaults to stdin)");
    auto* split_flag = suspend_cmd->add_flag("--split", split, "Peel one suspension stage");
    suspend_cmd->add_flag("--chain", chain, "Peel stages until the base is an affine space")
        ->excludes(split_flag);

    auto* sweep_cmd = app.add_subcommand("sweep", "Cross-check the classifiers over a grid");
    sweep_cmd->add_option("--type", sweep.type, "Datum type (1 or 2)")
        ->check(CLI::IsMember({1, 2}));
    sweep_cmd->add_option("--max-r", sweep.opt.max_r, "Largest r");
    sweep_cmd->add_option("--max-l", sweep.opt.max_l, "Largest exponent");
    sweep_cmd->add_option("--max-n", sweep.opt.max_n, "Largest tuple length");
    sweep_cmd->add_option("--max-m", sweep.opt.max_m, "Largest free-variable count");
    sweep_cmd->add_option("--checks", checks, "Comma-separated check names (default: all)")
        ->delimiter(',');
    sweep_cmd->add_option("--out", sweep.out, "Write one JSON line per check row");
    sweep_cmd->add_option("--seed", sweep.opt.seed, "Seed for the randomized checks");
    sweep_cmd->add_option("--bound", sweep.opt.bound, "Nilpotency iteration bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        if (validate_cmd->parsed()) return run_validate(in_path);
        if (classify_cmd->parsed()) return run_classify(in_path, witness, bound, json);
        if (suspend_cmd->parsed()) return run_suspend(in_path, chain);
        sweep.opt.checks = checks;
        return run_sweep_cmd(sweep);
    } catch (const trivar::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 3;
    } catch (const trivar::InvalidDatum& e) {
        std::cerr << "invalid datum: " << e.what() << '\n';
        return 2;
    } catch (const trivar::NotSurface& e) {
        std::cerr << "invalid datum: " << e.what() << '\n';
        return 2;
    } catch (const trivar::WrongShape& e) {
        std::cerr << "invalid datum: " << e.what() << '\n';
        return 2;
    } catch (const trivar::PreconditionViolated& e) {
        std::cerr << "invalid datum: " << e.what() << '\n';
        return 2;
    } catch (const trivar::ExponentNotOne& e) {
        std::cerr << "invalid datum: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    }
}

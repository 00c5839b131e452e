#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "fleib/classify.hpp"
#include "fleib/io.hpp"
#include "fleib/structure.hpp"

using namespace fleib;

namespace {

// Exit codes beyond the iso contract (0 isomorphic / 1 not / 2 undecided):
// 3 parse errors, 4 dimension mismatches, 5 outside-open-set, 6 invalid
// arguments.
constexpr int kExitParse = 3;
constexpr int kExitDimension = 4;
constexpr int kExitOpenSet = 5;
constexpr int kExitArgument = 6;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

ParamVector load_params(const std::string& path) {
    return param_from_json(parse_json(read_input(path)));
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_psi(int n, const std::string& format) {
    PsiSystem sys = psi_generate(n);
    if (format == "json") {
        emit(psi_to_json(sys));
        return 0;
    }
    for (int t = 3; t <= n + 1; ++t) {
        if (format == "latex")
            std::cout << "\\psi_" << (t < 10 ? std::to_string(t) : "{" + std::to_string(t) + "}")
                      << " = " << poly_to_latex(sys.psi(t)) << "\n";
        else
            std::cout << "psi_" << t << " = " << poly_to_text(sys.psi(t)) << "\n";
    }
    return 0;
}

int cmd_check(const std::string& file, bool one_based) {
    StructureTable t = table_from_json(parse_json(read_input(file)));
    const int shift = one_based ? 1 : 0;
    std::cout << "dim: " << t.dim() << "\n";
    auto violations = leibniz_check(t);
    if (violations.empty()) {
        std::cout << "leibniz: ok\n";
    } else {
        std::cout << "leibniz: " << violations.size() << " violation(s)\n";
        for (const auto& v : violations) {
            std::cout << "  triple (e" << v.x + shift << ",e" << v.y + shift << ",e"
                      << v.z + shift << "): defect";
            for (const auto& [k, c] : v.defect)
                std::cout << " + (" << c.str() << ")*e" << k + shift;
            std::cout << "\n";
        }
    }
    LowerCentralSeries s = lower_central_dims(t);
    std::cout << "nilpotent: " << (s.nilpotent ? "yes" : "no") << "\n";
    std::cout << "lower_central_dims:";
    for (int d : s.dims) std::cout << " " << d;
    std::cout << "\n";
    std::cout << "filiform: " << (is_filiform(t) ? "yes" : "no") << "\n";
    std::cout << "lie: " << (is_lie(t) ? "yes" : "no") << "\n";
    return violations.empty() ? 0 : 1;
}

int cmd_transform(const std::string& a, const std::string& b, const std::string& d,
                  const std::string& file) {
    TransformParams tp(QiScalar::parse(a), QiScalar::parse(b), QiScalar::parse(d));
    emit(param_to_json(rho_apply(tp, load_params(file))));
    return 0;
}

int cmd_invariants(const std::string& file, bool literal) {
    json report = invariant_report(load_params(file), literal);
    emit(report);
    return report.at("open_set").get<bool>() ? 0 : kExitOpenSet;
}

int cmd_iso(const std::string& f1, const std::string& f2) {
    ParamVector p = load_params(f1);
    ParamVector q = load_params(f2);
    try {
        IsoVerdict v = iso_decide(p, q);
        emit(iso_verdict_to_json(v));
        return v.isomorphic ? 0 : 1;
    } catch (const Undecided& e) {
        emit(json{{"answer", "undecided_outside_U"}, {"error", e.what()}});
        return 2;
    }
}

int cmd_classify(const std::string& file) {
    emit(canonical_form_to_json(canonical_form(load_params(file))));
    return 0;
}

int cmd_reps(int dim, const std::string& lambda, const std::string& format, bool one_based) {
    QiScalar l = QiScalar::parse(lambda);
    if (format == "text") {
        for (const auto& f : representatives(dim)) {
            ParamVector p = f.parametric() ? f.params(l) : f.params();
            std::cout << f.name;
            if (f.parametric()) std::cout << " at lambda = " << l.str();
            std::cout << ":\n" << table_to_text(build_second_class(p), one_based) << "\n";
        }
        return 0;
    }
    json out = json::array();
    for (const auto& f : representatives(dim)) {
        ParamVector p = f.parametric() ? f.params(l) : f.params();
        json entry;
        entry["family"] = f.name;
        if (f.parametric()) entry["lambda"] = l.str();
        entry["params"] = param_to_json(p);
        entry["table"] = table_to_json(build_second_class(p));
        out.push_back(std::move(entry));
    }
    emit(out);
    return 0;
}

int cmd_audit(int dim, int samples, unsigned long seed) {
    emit(verify_classification(dim, samples, seed));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact construction, verification and classification of second-class "
                 "filiform Leibniz algebras"};
    app.require_subcommand(1);

    int exit_code = 0;
    std::function<int()> action;

    auto* psi = app.add_subcommand("psi", "print the transition polynomial system");
    int psi_n = 5;
    std::string psi_format = "text";
    bool psi_latex = false;
    psi->add_option("--n", psi_n, "system size (n >= 3)")->required();
    psi->add_option("--format", psi_format, "text, json or latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    psi->add_flag("--latex", psi_latex, "shorthand for --format latex");
    psi->callback([&] {
        action = [&] { return cmd_psi(psi_n, psi_latex ? "latex" : psi_format); };
    });

    auto* check = app.add_subcommand("check", "verify a structure-constant table");
    std::string check_file;
    bool check_one_based = false;
    check->add_option("file", check_file, "table JSON ('-' for stdin)")->required();
    check->add_flag("--one-based", check_one_based, "report basis indices 1-based");
    check->callback([&] {
        action = [&] { return cmd_check(check_file, check_one_based); };
    });

    auto* transform = app.add_subcommand("transform", "apply an adapted base change");
    std::string tr_a = "1", tr_b = "0", tr_d = "1", tr_file;
    transform->add_option("--A", tr_a, "scalar A (nonzero)")->required();
    transform->add_option("--B", tr_b, "scalar B");
    transform->add_option("--D", tr_d, "scalar D (nonzero)")->required();
    transform->add_option("file", tr_file, "parameter JSON ('-' for stdin)")->required();
    transform->callback([&] {
        action = [&] { return cmd_transform(tr_a, tr_b, tr_d, tr_file); };
    });

    auto* invariants = app.add_subcommand("invariants", "cell membership and invariant report");
    std::string inv_file;
    bool inv_literal = false;
    invariants->add_option("file", inv_file, "parameter JSON ('-' for stdin)")->required();
    invariants->add_flag("--literal", inv_literal,
                         "use the verbatim printed open-set polynomial (no correctness claim)");
    invariants->callback([&] {
        action = [&] { return cmd_invariants(inv_file, inv_literal); };
    });

    auto* iso = app.add_subcommand("iso", "decide isomorphism of two algebras");
    std::string iso_f1, iso_f2;
    iso->add_option("file1", iso_f1, "first parameter JSON")->required();
    iso->add_option("file2", iso_f2, "second parameter JSON")->required();
    iso->callback([&] {
        action = [&] { return cmd_iso(iso_f1, iso_f2); };
    });

    auto* classify = app.add_subcommand("classify", "canonical form with verified witness");
    std::string cls_file;
    classify->add_option("file", cls_file, "parameter JSON ('-' for stdin)")->required();
    classify->callback([&] {
        action = [&] { return cmd_classify(cls_file); };
    });

    auto* reps = app.add_subcommand("reps", "published representative catalog");
    int reps_dim = 5;
    std::string reps_lambda = "0", reps_format = "json";
    bool reps_one_based = false;
    reps->add_option("--dim", reps_dim, "5 or 6")->required()->check(CLI::IsMember({5, 6}));
    reps->add_option("--lambda", reps_lambda, "value for the parametric families");
    reps->add_option("--format", reps_format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    reps->add_flag("--one-based", reps_one_based, "print tables with 1-based labels");
    reps->callback([&] {
        action = [&] { return cmd_reps(reps_dim, reps_lambda, reps_format, reps_one_based); };
    });

    auto* audit = app.add_subcommand("audit", "certified classification audit");
    int audit_dim = 5, audit_samples = 100;
    unsigned long audit_seed = 0;
    audit->add_option("--dim", audit_dim, "5 or 6")->required()->check(CLI::IsMember({5, 6}));
    audit->add_option("--samples", audit_samples, "samples per cell");
    audit->add_option("--seed", audit_seed, "random seed (default 0)");
    audit->callback([&] {
        action = [&] { return cmd_audit(audit_dim, audit_samples, audit_seed); };
    });

    try {
        app.parse(argc, argv);
        exit_code = action();
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDimension;
    } catch (const OutsideOpenSet& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOpenSet;
    } catch (const ArithmeticError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitArgument;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 10;
    }
    return exit_code;
}

#include "griess/ansatz.hpp"
#include "griess/fusion.hpp"
#include "griess/json_io.hpp"
#include "griess/paper_report.hpp"
#include "griess/s3.hpp"
#include "griess/series.hpp"
#include "griess/verification.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <functional>
#include <iostream>
#include <string>

namespace {

using griess::Rational;
using nlohmann::ordered_json;

ordered_json rat_array(const std::set<Rational>& xs) {
    ordered_json out = ordered_json::array();
    for (const Rational& x : xs) out.push_back(x.str());
    return out;
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

ordered_json report_json(const griess::Report& rep) {
    ordered_json entries = ordered_json::array();
    for (const griess::CheckEntry& e : rep.entries()) {
        ordered_json cell;
        cell["name"] = e.name;
        cell["status"] = griess::to_string(e.status);
        if (!e.lhs.empty()) cell["lhs"] = e.lhs;
        if (!e.rhs.empty()) cell["rhs"] = e.rhs;
        if (!e.context.empty()) cell["context"] = e.context;
        entries.push_back(cell);
    }
    ordered_json doc;
    doc["checks"] = rep.entries().size();
    doc["failures"] = rep.failures();
    doc["flags"] = rep.flags();
    doc["entries"] = entries;
    return doc;
}

int run_solve_lambda() {
    ordered_json doc;
    doc["candidates"] = rat_array(griess::candidate_lambdas());
    doc["norm_constraint_roots"] = rat_array(griess::norm_constraint_roots());
    doc["admissible"] = rat_array(griess::admissible_lambdas());
    std::set<Rational> inners;
    for (const Rational& lm : griess::admissible_lambdas()) inners.insert(lm / 4);
    doc["inner_products"] = rat_array(inners);
    emit(doc);
    return 0;
}

int run_build(const std::string& lambda_str, const std::string& out_path) {
    Rational lambda = Rational::parse(lambda_str);
    griess::GriessAlgebra alg = griess::build_algebra(lambda);
    griess::write_algebra_file(alg, out_path);

    griess::Element e = alg.basis_element(alg.index_of("e"));
    ordered_json doc;
    doc["lambda"] = lambda.str();
    doc["dimension"] = alg.dim();
    doc["basis"] = alg.basis();
    ordered_json charges;
    charges["e"] = griess::central_charge(e).str();
    charges["omega1"] = griess::central_charge(griess::omega1_of(alg)).str();
    charges["omega"] = griess::central_charge(griess::omega_of(alg)).str();
    doc["charges"] = charges;
    doc["file"] = out_path;
    emit(doc);
    return 0;
}

int run_verify(const std::string& path, bool strict) {
    griess::GriessAlgebra alg = griess::read_algebra_file(path);
    griess::Report rep = griess::build_verify_report(alg);
    ordered_json doc = report_json(rep);
    doc["file"] = path;
    emit(doc);
    if (rep.failures() > 0) return 1;
    if (strict && rep.flags() > 0) return 1;
    return 0;
}

int run_audit() {
    griess::AuditReport audit = griess::audit_printed_constants();
    ordered_json entries = ordered_json::array();
    for (const griess::AuditEntry& e : audit.entries) {
        ordered_json cell;
        cell["constant"] = e.constant;
        cell["group"] = e.group;
        cell["printed"] = e.printed.str();
        cell["derived"] = e.derived.str();
        cell["status"] = griess::to_string(e.status);
        cell["oracle"] = e.oracle;
        entries.push_back(cell);
    }
    ordered_json flagged = ordered_json::array();
    for (const griess::AuditEntry* e : audit.flagged())
        flagged.push_back(
            ordered_json::object({{"constant", e->constant}, {"group", e->group}}));
    ordered_json doc;
    doc["constants"] = audit.entries.size();
    doc["flags"] = audit.flag_count();
    doc["flagged"] = flagged;
    doc["entries"] = entries;
    emit(doc);
    return 0;
}

ordered_json weight_doc(long m) {
    griess::MinimalModelTable table = griess::weight_table(m);
    ordered_json doc;
    doc["m"] = table.m;
    doc["c"] = table.c.str();
    doc["weights"] = rat_array(table.values());
    return doc;
}

int run_series(bool has_m, long m, bool has_charge, const std::string& charge_str) {
    if (has_m == has_charge) {
        std::cerr << "error: series needs exactly one of --m and --charge\n";
        return 2;
    }
    if (has_m) {
        emit(weight_doc(m));
        return 0;
    }
    Rational c = Rational::parse(charge_str);
    std::optional<long> found = griess::find_m(c);
    ordered_json doc;
    doc["charge"] = c.str();
    doc["found"] = found.has_value();
    if (found) {
        ordered_json inner = weight_doc(*found);
        doc["m"] = inner["m"];
        doc["c"] = inner["c"];
        doc["weights"] = inner["weights"];
    }
    emit(doc);
    return 0;
}

int run_fusion(const std::string& name, bool check) {
    griess::FusionRing ring = griess::builtin(name);
    if (!check) {
        std::cout << griess::fusion_to_json(ring);
        return 0;
    }
    griess::Report rep = griess::verify(ring);
    if (name == "w3_4_5") rep.merge(griess::verify_grading(ring, griess::w3_grading(), 3));
    ordered_json doc = report_json(rep);
    doc["ring"] = name;
    emit(doc);
    return rep.ok() ? 0 : 1;
}

int run_pairs(const std::string& c1_str, const std::string& c2_str) {
    Rational c1 = Rational::parse(c1_str);
    Rational c2 = Rational::parse(c2_str);
    std::optional<long> m1 = griess::find_m(c1);
    std::optional<long> m2 = griess::find_m(c2);
    if (!m1 || !m2) {
        std::cerr << "error: " << (m1 ? c2 : c1).str()
                  << " is not a discrete-series central charge\n";
        return 2;
    }
    auto pairs = griess::integer_weight_pairs(griess::weights(*m1), griess::weights(*m2));
    ordered_json doc;
    doc["c1"] = c1.str();
    doc["m1"] = *m1;
    doc["c2"] = c2.str();
    doc["m2"] = *m2;
    ordered_json arr = ordered_json::array();
    for (const auto& [h, k] : pairs) arr.push_back(ordered_json::array({h.str(), k.str()}));
    doc["pairs"] = arr;
    emit(doc);
    return 0;
}

int run_decompose(const std::string& charge_str, const std::string& min_str,
                  const std::string& max_str) {
    Rational c = Rational::parse(charge_str);
    Rational lo = Rational::parse(min_str);
    Rational hi = Rational::parse(max_str);
    auto outs = griess::decompose_charge(c, lo, hi);
    ordered_json doc;
    doc["charge"] = c.str();
    doc["window"] = ordered_json::array({lo.str(), hi.str()});
    doc["count"] = outs.size();
    ordered_json arr = ordered_json::array();
    for (const auto& parts : outs) {
        ordered_json one = ordered_json::array();
        for (const Rational& p : parts) one.push_back(p.str());
        arr.push_back(one);
    }
    doc["decompositions"] = arr;
    emit(doc);
    return 0;
}

int run_paper_report(const std::string& format) {
    if (format == "json")
        std::cout << griess::paper_report_json();
    else
        std::cout << griess::paper_report_markdown();
    return 0;
}

/// Maps exceptions onto the exit-code contract: malformed input and domain
/// violations are usage errors (2); everything else that escapes is a
/// verification failure (1).
int guard(const std::function<int()>& body) {
    try {
        return body();
    } catch (const griess::FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact reconstruction, verification and audit of the algebras generated by "
                 "two charge-1/2 conformal vectors with S3 symmetry"};
    app.require_subcommand(1);
    int rc = 0;

    app.add_subcommand("solve-lambda", "classify the admissible values of the parameter")
        ->callback([&] { rc = guard(run_solve_lambda); });

    auto* build = app.add_subcommand("build", "instantiate an algebra and write it as JSON");
    std::string lambda_str, out_path;
    build->add_option("--lambda", lambda_str, "parameter as p/q")->required();
    build->add_option("--out", out_path, "output file path")->required();
    build->callback([&] { rc = guard([&] { return run_build(lambda_str, out_path); }); });

    auto* verify = app.add_subcommand("verify", "certify an algebra file end to end");
    std::string verify_path;
    bool strict = false;
    verify->add_option("file", verify_path, "algebra file to verify")->required();
    verify->add_flag("--strict", strict, "count flagged audit entries as failures");
    verify->callback([&] { rc = guard([&] { return run_verify(verify_path, strict); }); });

    app.add_subcommand("audit", "recompute every published constant and flag misprints")
        ->callback([&] { rc = guard(run_audit); });

    auto* series = app.add_subcommand("series", "discrete-series weight data");
    long m = 0;
    std::string charge_str;
    auto* m_opt = series->add_option("--m", m, "series index (non-negative)");
    auto* charge_opt = series->add_option("--charge", charge_str, "central charge as p/q");
    series->callback([&] {
        rc = guard([&] {
            return run_series(m_opt->count() > 0, m, charge_opt->count() > 0, charge_str);
        });
    });

    auto* fusion = app.add_subcommand("fusion", "print or certify an embedded fusion ring");
    std::string ring_name;
    bool check = false;
    fusion->add_option("--ring", ring_name, "ring name")->required();
    fusion->add_flag("--check", check, "run the ring-law certification");
    fusion->callback([&] { rc = guard([&] { return run_fusion(ring_name, check); }); });

    auto* pairs = app.add_subcommand("pairs", "integer-weight pairs of two series models");
    std::string c1_str, c2_str;
    pairs->add_option("--c1", c1_str, "first central charge as p/q")->required();
    pairs->add_option("--c2", c2_str, "second central charge as p/q")->required();
    pairs->callback([&] { rc = guard([&] { return run_pairs(c1_str, c2_str); }); });

    auto* decomp = app.add_subcommand("decompose", "write a charge as window-bounded sums");
    std::string dc_str, min_str, max_str;
    decomp->add_option("--charge", dc_str, "target charge as p/q")->required();
    decomp->add_option("--min", min_str, "window lower bound as p/q")->required();
    decomp->add_option("--max", max_str, "window upper bound as p/q")->required();
    decomp->callback(
        [&] { rc = guard([&] { return run_decompose(dc_str, min_str, max_str); }); });

    auto* report = app.add_subcommand("paper-report", "emit the full reproduction document");
    std::string format;
    report->add_option("--format", format, "output format")
        ->required()
        ->check(CLI::IsMember({"json", "md"}));
    report->callback([&] { rc = guard([&] { return run_paper_report(format); }); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return rc;
}

#include "griess/paper_report.hpp"

#include "griess/ansatz.hpp"
#include "griess/fusion.hpp"
#include "griess/s3.hpp"
#include "griess/series.hpp"
#include "griess/verification.hpp"

#include "json.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace griess {

namespace {

using nlohmann::ordered_json;

ordered_json rat_array(const std::set<Rational>& xs) {
    ordered_json out = ordered_json::array();
    for (const Rational& x : xs) out.push_back(x.str());
    return out;
}

ordered_json pair_array(const std::set<std::pair<Rational, Rational>>& ps) {
    ordered_json out = ordered_json::array();
    for (const auto& [h, k] : ps) out.push_back(ordered_json::array({h.str(), k.str()}));
    return out;
}

std::string hex64(uint64_t value) {
    std::ostringstream os;
    os << "0x" << std::hex << value;
    return os.str();
}

ordered_json algebra_section(const Rational& lambda) {
    GriessAlgebra alg = build_algebra(lambda);
    ordered_json doc;
    doc["lambda"] = lambda.str();
    doc["dimension"] = alg.dim();
    doc["basis"] = alg.basis();

    ordered_json products = ordered_json::object();
    for (size_t i = 0; i < alg.dim(); ++i)
        for (size_t j = i; j < alg.dim(); ++j) {
            Element p = product(alg.basis_element(i), alg.basis_element(j));
            products[alg.basis()[i] + "*" + alg.basis()[j]] = p.str();
        }
    doc["products"] = products;

    ordered_json form = ordered_json::object();
    for (size_t i = 0; i < alg.dim(); ++i)
        form["<" + alg.basis()[i] + "," + alg.basis()[i] + ">"] = alg.gram(i, i).str();
    doc["form_diagonal"] = form;

    Element e = alg.basis_element(alg.index_of("e"));
    Element f = distinguished_f(alg);
    doc["f"] = f.str();
    doc["f_norm"] = inner(f, f).str();
    doc["ef_inner"] = inner(e, f).str();
    doc["sum_rule_coefficient"] = (Rational(1) - lambda / 16).str();

    Element w1 = omega1_of(alg);
    Element w = omega_of(alg);
    doc["omega1"] = w1.str();
    doc["omega"] = w.str();
    ordered_json charges = ordered_json::object();
    charges["e"] = central_charge(e).str();
    charges["omega1"] = central_charge(w1).str();
    charges["omega"] = central_charge(w).str();
    doc["charges"] = charges;
    doc["theta_fixed_dimension"] = theta_fixed_subspace(alg).size();
    return doc;
}

ordered_json symmetry_section() {
    ordered_json doc;

    ordered_json orbits = ordered_json::object();
    for (const Rational& lambda : admissible_lambdas()) {
        GriessAlgebra alg = build_algebra(lambda);
        auto orbit = conformal_orbit(alg);
        ordered_json o;
        o["pairwise_inner"] = inner(orbit[0], orbit[1]).str();
        o["fixed_dimension"] = theta_fixed_subspace(alg).size();
        o["alpha"] = orbit_sum(alg).str();
        orbits[lambda.str()] = o;
    }
    doc["orbits"] = orbits;

    GriessAlgebra alg4 = build_algebra(Rational(13, 256));
    AlphaBeta ab = alpha_beta(alg4);
    ConformalSplit split = conformal_split(alg4);
    ordered_json inv;
    inv["alpha"] = ab.alpha.str();
    inv["beta"] = ab.beta.str();
    inv["alpha_squared"] = "(57/16)alpha - (315/256)omega";
    inv["beta_squared"] = "19beta - 35omega";
    inv["beta_norm"] = inner(ab.beta, ab.beta).str();
    inv["beta_omega_inner"] = inner(ab.beta, omega_of(alg4)).str();
    inv["omega_norm"] = inner(omega_of(alg4), omega_of(alg4)).str();
    inv["omega2"] = split.omega2.str();
    inv["omega3"] = split.omega3.str();
    inv["conformal_split"] = "charge(omega2)=4/5, charge(omega3)=6/7";
    inv["orthogonality"] = "omega2 * omega3 = 0, <omega2, omega3> = 0";
    ordered_json gamma = ordered_json::array();
    Report gamma_report = gamma_relations(alg4);
    for (const CheckEntry& entry : gamma_report.entries()) gamma.push_back(entry.name);
    inv["gamma"] = gamma;
    doc["invariants"] = inv;
    return doc;
}

ordered_json audit_section() {
    AuditReport audit = audit_printed_constants();
    ordered_json doc;
    ordered_json entries = ordered_json::array();
    for (const AuditEntry& e : audit.entries) {
        ordered_json cell;
        cell["constant"] = e.constant;
        cell["group"] = e.group;
        cell["printed"] = e.printed.str();
        cell["derived"] = e.derived.str();
        cell["status"] = to_string(e.status);
        cell["oracle"] = e.oracle;
        entries.push_back(cell);
    }
    doc["entries"] = entries;
    ordered_json flagged = ordered_json::array();
    for (const AuditEntry* e : audit.flagged())
        flagged.push_back(ordered_json::object({{"constant", e->constant}, {"group", e->group}}));
    doc["flagged"] = flagged;
    return doc;
}

ordered_json series_section() {
    ordered_json doc;
    ordered_json ccs = ordered_json::array();
    for (long m : {1L, 2L, 3L, 4L, 9L})
        ccs.push_back(ordered_json::object({{"m", m}, {"c", central_charge(m).str()}}));
    doc["central_charges"] = ccs;

    ordered_json ws = ordered_json::object();
    for (long m : {1L, 4L, 9L}) ws[std::to_string(m)] = rat_array(weights(m));
    doc["weights"] = ws;

    ordered_json pairs = ordered_json::object();
    pairs["m1_x_m9"] = pair_array(integer_weight_pairs(weights(1), weights(9)));
    std::set<Rational> sub45 = {Rational(0), Rational(2, 3), Rational(3)};
    std::set<Rational> sub67 = {Rational(0), Rational(4, 3), Rational(5)};
    pairs["subsets_c_4_5_x_c_6_7"] = pair_array(integer_weight_pairs(sub45, sub67));
    doc["integer_weight_pairs"] = pairs;
    return doc;
}

ordered_json window_case(const Rational& c, const Rational& lo, const Rational& hi) {
    ordered_json doc;
    doc["charge"] = c.str();
    doc["window"] = ordered_json::array({lo.str(), hi.str()});
    ordered_json outs = ordered_json::array();
    for (const auto& parts : decompose_charge(c, lo, hi)) {
        ordered_json one = ordered_json::array();
        for (const Rational& p : parts) one.push_back(p.str());
        outs.push_back(one);
    }
    doc["decompositions"] = outs;
    return doc;
}

ordered_json decomposition_section() {
    ordered_json cases = ordered_json::array();
    for (const A2Decomposition& d : type_a2_decompositions()) {
        ordered_json c;
        c["case"] = d.case_number;
        ordered_json summands = ordered_json::array();
        for (const A2Summand& s : d.summands) summands.push_back(s.label);
        c["summands"] = summands;
        c["annotation"] = d.annotation;
        cases.push_back(c);
    }
    return cases;
}

ordered_json fusion_section() {
    ordered_json doc;
    ordered_json rings = ordered_json::array();
    for (const std::string& name : builtin_names()) {
        FusionRing ring = builtin(name);
        ordered_json r;
        r["name"] = name;
        r["size"] = ring.size();
        r["labels"] = ring.labels();
        r["certified"] = verify(ring).ok();
        r["checksum"] = hex64(table_checksum(ring));
        rings.push_back(r);
    }
    doc["rings"] = rings;

    FusionRing vir45 = builtin("vir_4_5");
    std::set<std::string> cl = closure(vir45, {"2/3"});
    ordered_json closure_doc;
    closure_doc["ring"] = "vir_4_5";
    closure_doc["seed"] = ordered_json::array({"2/3"});
    closure_doc["result"] = cl;
    doc["closure"] = closure_doc;

    FusionRing sub = restriction(vir45, cl);
    std::map<std::string, std::string> lm = {{"0", "0"}, {"2/3", "4/3"}, {"3", "5"}};
    ordered_json iso;
    iso["from"] = "vir_4_5 restricted to its {2/3}-closure";
    iso["to"] = "vir_6_7_sub";
    iso["map"] = lm;
    iso["isomorphic"] = isomorphic_by_label_map(sub, builtin("vir_6_7_sub"), lm);
    doc["subring_isomorphism"] = iso;

    ordered_json grading;
    grading["ring"] = "w3_4_5";
    grading["grades"] = w3_grading();
    grading["verified"] = verify_grading(builtin("w3_4_5"), w3_grading(), 3).ok();
    doc["z3_grading"] = grading;
    return doc;
}

ordered_json build_document() {
    ordered_json doc;
    doc["document"] = "two-generator algebra reconstruction";
    ordered_json params;
    params["candidates"] = rat_array(candidate_lambdas());
    params["norm_constraint_roots"] = rat_array(norm_constraint_roots());
    params["admissible"] = rat_array(admissible_lambdas());
    std::set<Rational> inners;
    for (const Rational& lm : admissible_lambdas()) inners.insert(lm / 4);
    params["generator_inner_products"] = rat_array(inners);
    doc["parameters"] = params;

    ordered_json algebras = ordered_json::array();
    for (const Rational& lm : admissible_lambdas()) algebras.push_back(algebra_section(lm));
    doc["algebras"] = algebras;

    doc["symmetry"] = symmetry_section();
    doc["audit"] = audit_section();
    doc["discrete_series"] = series_section();

    ordered_json windows = ordered_json::array();
    windows.push_back(window_case(Rational(81, 70), Rational(1, 2), Rational(23, 35)));
    windows.push_back(window_case(Rational(1), Rational(1, 2), Rational(1, 2)));
    windows.push_back(window_case(Rational(6, 5), Rational(1, 2), Rational(7, 10)));
    doc["window_search"] = windows;

    doc["module_decompositions"] = decomposition_section();
    doc["fusion_rings"] = fusion_section();
    return doc;
}

std::string join(const ordered_json& arr, const std::string& sep) {
    std::string out;
    for (const auto& x : arr) {
        if (!out.empty()) out += sep;
        out += x.get<std::string>();
    }
    return out;
}

std::string render_markdown(const ordered_json& doc) {
    std::ostringstream md;
    md << "# Two-generator algebra reconstruction\n\n";
    md << "All values below are recomputed exactly over the rationals on every run; the\n"
          "document is deterministic byte for byte.\n\n";

    const auto& params = doc["parameters"];
    md << "## Parameter classification\n\n";
    md << "The pairing constraint has rational roots {" << join(params["candidates"], ", ")
       << "} and the norm constraint <f,f> = 1/4 has rational roots {"
       << join(params["norm_constraint_roots"], ", ") << "}.  Both hold at the admissible\n"
       << "parameters {" << join(params["admissible"], ", ")
       << "}, with generator inner products <e,f> in {"
       << join(params["generator_inner_products"], ", ") << "}.\n\n";

    for (const auto& alg : doc["algebras"]) {
        md << "## The algebra at lambda = " << alg["lambda"].get<std::string>()
           << " (dimension " << alg["dimension"].get<size_t>() << ")\n\n";
        md << "Basis (" << join(alg["basis"], ", ") << ").  Products:\n\n";
        for (const auto& [key, value] : alg["products"].items())
            md << "- " << key << " = " << value.get<std::string>() << "\n";
        md << "\nForm diagonal: ";
        bool first = true;
        for (const auto& [key, value] : alg["form_diagonal"].items()) {
            if (!first) md << ", ";
            md << key << " = " << value.get<std::string>();
            first = false;
        }
        md << ".\n\n";
        md << "The second generator f = " << alg["f"].get<std::string>() << " is conformal with "
           << "<f,f> = " << alg["f_norm"].get<std::string>() << " and <e,f> = "
           << alg["ef_inner"].get<std::string>() << ".\n";
        md << "Sum rule: (a + b)*c = " << alg["sum_rule_coefficient"].get<std::string>()
           << "*c.\n";
        md << "Conformal frame: omega1 = " << alg["omega1"].get<std::string>()
           << ", omega = " << alg["omega"].get<std::string>() << "; charge(e) = "
           << alg["charges"]["e"].get<std::string>() << ", charge(omega1) = "
           << alg["charges"]["omega1"].get<std::string>() << ", charge(omega) = "
           << alg["charges"]["omega"].get<std::string>() << ".\n";
        md << "The theta-fixed subspace has dimension "
           << alg["theta_fixed_dimension"].get<size_t>() << ".\n\n";
    }

    md << "## Symmetry\n\n";
    md << "Both algebras carry the order-6 symmetry generated by the reflections of e and\n"
          "f; the composite theta has order 3 and cycles the conformal orbit.\n\n";
    for (const auto& [lambda, o] : doc["symmetry"]["orbits"].items())
        md << "- lambda = " << lambda << ": orbit pairwise inner product "
           << o["pairwise_inner"].get<std::string>() << ", fixed dimension "
           << o["fixed_dimension"].get<size_t>() << ", alpha = "
           << o["alpha"].get<std::string>() << "\n";
    const auto& inv = doc["symmetry"]["invariants"];
    md << "\nInvariant vectors at lambda = 13/256, with beta = (16/3)alpha:\n\n";
    md << "- alpha = " << inv["alpha"].get<std::string>() << ", beta = "
       << inv["beta"].get<std::string>() << "\n";
    md << "- alpha^2 = " << inv["alpha_squared"].get<std::string>() << ", beta^2 = "
       << inv["beta_squared"].get<std::string>() << "\n";
    md << "- <beta,beta> = " << inv["beta_norm"].get<std::string>() << ", <beta,omega> = "
       << inv["beta_omega_inner"].get<std::string>() << ", <omega,omega> = "
       << inv["omega_norm"].get<std::string>() << "\n";
    md << "- omega2 = " << inv["omega2"].get<std::string>() << ", omega3 = "
       << inv["omega3"].get<std::string>() << "\n";
    md << "- " << inv["conformal_split"].get<std::string>() << "\n";
    md << "- " << inv["orthogonality"].get<std::string>() << "\n";
    md << "\nEigenrelations of gamma = e + z3*f + z3^2*f^tau_e over Q(z3):\n\n";
    for (const auto& g : inv["gamma"]) md << "- " << g.get<std::string>() << "\n";

    md << "\n## Printed-constant audit\n\n";
    md << "Every published constant is recomputed from the certified algebras; `flagged`\n"
          "marks a printed value that disagrees with its derivation.\n\n";
    md << "| constant | group | printed | derived | status |\n";
    md << "|---|---|---|---|---|\n";
    for (const auto& e : doc["audit"]["entries"])
        md << "| " << e["constant"].get<std::string>() << " | " << e["group"].get<std::string>()
           << " | " << e["printed"].get<std::string>() << " | "
           << e["derived"].get<std::string>() << " | " << e["status"].get<std::string>()
           << " |\n";
    md << "\nFlagged: ";
    bool first_flag = true;
    for (const auto& f : doc["audit"]["flagged"]) {
        if (!first_flag) md << "; ";
        md << f["constant"].get<std::string>() << " (" << f["group"].get<std::string>() << ")";
        first_flag = false;
    }
    md << "\n";

    md << "\n## Discrete series\n\n";
    md << "Central charges c(m) = 1 - 6/((m+2)(m+3)): ";
    bool first_cc = true;
    for (const auto& cc : doc["discrete_series"]["central_charges"]) {
        if (!first_cc) md << ", ";
        md << "c(" << cc["m"].get<long>() << ") = " << cc["c"].get<std::string>();
        first_cc = false;
    }
    md << ".\n\nWeight sets:\n\n";
    for (const auto& [m, ws] : doc["discrete_series"]["weights"].items())
        md << "- m = " << m << ": " << join(ws, ", ") << "\n";
    md << "\nInteger-weight pairs (h, k) with h + k a non-negative integer:\n\n";
    auto render_pairs = [&md](const ordered_json& pairs) {
        bool first_pair = true;
        for (const auto& p : pairs) {
            if (!first_pair) md << ", ";
            md << "(" << p[0].get<std::string>() << ", " << p[1].get<std::string>() << ")";
            first_pair = false;
        }
    };
    md << "- between the m = 1 and m = 9 weight sets: ";
    render_pairs(doc["discrete_series"]["integer_weight_pairs"]["m1_x_m9"]);
    md << "\n- between {0, 2/3, 3} at c = 4/5 and {0, 4/3, 5} at c = 6/7: ";
    render_pairs(doc["discrete_series"]["integer_weight_pairs"]["subsets_c_4_5_x_c_6_7"]);
    md << "\n";

    md << "\n## Charge window search\n\n";
    for (const auto& w : doc["window_search"]) {
        md << "- " << w["charge"].get<std::string>() << " over ["
           << w["window"][0].get<std::string>() << ", " << w["window"][1].get<std::string>()
           << "]: ";
        if (w["decompositions"].empty()) {
            md << "no decomposition\n";
        } else {
            bool first_d = true;
            for (const auto& d : w["decompositions"]) {
                if (!first_d) md << "; ";
                md << "{" << join(d, ", ") << "}";
                first_d = false;
            }
            md << "\n";
        }
    }

    md << "\n## Module decompositions\n\n";
    for (const auto& c : doc["module_decompositions"]) {
        md << "- Case " << c["case"].get<int>() << ": " << join(c["summands"], " + ");
        std::string note = c["annotation"].get<std::string>();
        if (!note.empty()) md << " (" << note << ")";
        md << "\n";
    }

    md << "\n## Fusion rings\n\n";
    md << "| ring | size | certified | checksum |\n";
    md << "|---|---|---|---|\n";
    for (const auto& r : doc["fusion_rings"]["rings"])
        md << "| " << r["name"].get<std::string>() << " | " << r["size"].get<size_t>() << " | "
           << (r["certified"].get<bool>() ? "yes" : "NO") << " | "
           << r["checksum"].get<std::string>() << " |\n";
    const auto& cl = doc["fusion_rings"]["closure"];
    md << "\n- closure(" << cl["ring"].get<std::string>() << ", {" << join(cl["seed"], ", ")
       << "}) = {" << join(cl["result"], ", ") << "}\n";
    const auto& iso = doc["fusion_rings"]["subring_isomorphism"];
    md << "- " << iso["from"].get<std::string>() << " is "
       << (iso["isomorphic"].get<bool>() ? "" : "NOT ") << "isomorphic to "
       << iso["to"].get<std::string>() << " under ";
    bool first_m = true;
    for (const auto& [from, to] : iso["map"].items()) {
        if (!first_m) md << ", ";
        md << from << " -> " << to.get<std::string>();
        first_m = false;
    }
    md << "\n";
    const auto& gr = doc["fusion_rings"]["z3_grading"];
    md << "- " << gr["ring"].get<std::string>() << " carries a Z3 grading ("
       << (gr["verified"].get<bool>() ? "verified" : "FAILED") << "): ";
    bool first_g = true;
    for (const auto& [label, degree] : gr["grades"].items()) {
        if (!first_g) md << ", ";
        md << label << " in degree " << degree.get<int>();
        first_g = false;
    }
    md << "\n";

    return md.str();
}

}  // namespace

std::string paper_report_json() { return build_document().dump(2) + "\n"; }

std::string paper_report_markdown() { return render_markdown(build_document()); }

size_t paper_report_flag_count() { return audit_printed_constants().flag_count(); }

}  // namespace griess

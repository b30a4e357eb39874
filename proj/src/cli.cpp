#include "bcrep/cli.hpp"

#include <CLI11.hpp>

#include "bcrep/io.hpp"
#include "bcrep/theorem.hpp"

namespace bcrep {

namespace {

int report_violations(const Violations& v, const std::string& what, std::ostream& out) {
    for (const Violation& x : v) out << x.to_string() << '\n';
    if (v.empty()) {
        out << "OK " << what << '\n';
        return exit_ok;
    }
    out << v.size() << (v.size() == 1 ? " violation" : " violations") << " in " << what << '\n';
    return exit_semantic;
}

/// Validates pi0 first so a broken table is reported as violations rather than a construction error.
int load_group_file(const Document& doc, TwoGroupPtr& group, std::ostream& out) {
    const Violations table = check_group_table(pi0_table_from_json(doc.json, ""));
    if (!table.empty()) return report_violations(table, "twogroup", out);
    TwoGroupData data = two_group_from_json(doc.json, "");
    const Violations v = two_group_violations(data);
    if (!v.empty()) return report_violations(v, "twogroup", out);
    group = make_two_group(std::move(data.pi0), std::move(data.pi1), std::move(data.action), std::move(data.z));
    return exit_ok;
}

Document expect(const std::string& path, std::initializer_list<const char*> kinds) {
    Document d = read_document(path);
    std::string names;
    for (const char* k : kinds) {
        if (d.kind == k) return d;
        names += names.empty() ? k : std::string(", ") + k;
    }
    throw ParseError(path + ": /kind", "kind \"" + d.kind + "\" is not one of " + names);
}

void maybe_write(const RunConfig& cfg, const Json& j, std::ostream& out) {
    if (cfg.out.empty()) return;
    write_json(cfg.out, j);
    out << "wrote " << cfg.out << '\n';
}

std::string dims(const RepReduced& r) { return "(" + std::to_string(r.n1) + "," + std::to_string(r.n0) + ")"; }

std::string matrices(const std::vector<Matrix>& ms) {
    std::string s;
    for (const Matrix& m : ms) s += (s.empty() ? "" : " ") + m.to_string();
    return s;
}

}  // namespace

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
    const Document doc = read_document(cfg.inputs.at(0));
    const std::string& kind = doc.kind;
    if (kind == "twogroup") {
        TwoGroupPtr g;
        const int code = load_group_file(doc, g, out);
        if (code == exit_ok) out << "OK twogroup\n";
        return code;
    }
    if (kind == "representation") return report_violations(validate_rep_reduced(rep_from_json(doc.json, doc.base, "")), kind, out);
    if (kind == "rep_full") return report_violations(validate_rep_full(rep_full_from_json(doc.json, doc.base, "")), kind, out);
    if (kind == "inter1") return report_violations(validate_inter1(inter1_from_json(doc.json, doc.base, "")), kind, out);
    if (kind == "inter2") {
        const Inter2 w = inter2_from_json(doc.json, doc.base, "");
        Violations v = validate_inter1(w.src);
        for (Violation& x : v) x.axiom = "SRC " + x.axiom;
        for (Violation x : validate_inter1(w.dst)) {
            x.axiom = "DST " + x.axiom;
            v.push_back(x);
        }
        if (v.empty()) v = validate_inter2(w);
        return report_violations(v, kind, out);
    }
    if (kind == "cochain") {
        const Cochain c = cochain_from_json(doc.json, doc.base, "");
        out << "degree " << c.degree() << (is_cocycle(c) ? ", cocycle" : ", not a cocycle")
            << (c.is_normalized() ? ", normalized" : ", not normalized") << '\n';
        return report_violations(bimodule_violations(*c.bimodule()), kind, out);
    }
    if (kind == "complex") {
        const TwoVect v = complex_from_json(doc.json, "");
        out << "complex " << v.dim1() << " -> " << v.dim0() << ", rank " << rank(v.d()) << '\n';
        return report_violations({}, kind, out);
    }
    if (kind == "onecell" || kind == "twocell") {
        try {
            if (kind == "onecell") onecell_from_json(doc.json, "");
            else twocell_from_json(doc.json, "");
        } catch (const AlgebraError& e) {
            if (e.kind() == ErrorKind::parse) throw;
            return report_violations({{kind == "onecell" ? "ONECELL" : "TWOCELL", e.what()}}, kind, out);
        }
        return report_violations({}, kind, out);
    }
    throw ParseError(cfg.inputs.at(0) + ": /kind", "unknown kind \"" + kind + "\"");
}

int cmd_normalize(const RunConfig& cfg, std::ostream& out) {
    const Document doc = expect(cfg.inputs.at(0), {"complex"});
    const TwoVect v = complex_from_json(doc.json, "");
    const Normalization n = normalize(v);
    out << "input " << v.dim1() << " -> " << v.dim0() << ", rank " << rank(v.d()) << '\n';
    out << "ker " << n.normal.dim1() << ", coker " << n.normal.dim0() << '\n';
    out << "witnesses to_normal, from_normal, unit, counit validated\n";
    maybe_write(cfg,
                Json{{"kind", "normalization"},
                     {"normal", complex_to_json(n.normal)},
                     {"to_normal", onecell_to_json(n.to_normal)},
                     {"from_normal", onecell_to_json(n.from_normal)},
                     {"unit", twocell_to_json(n.unit)},
                     {"counit", twocell_to_json(n.counit)}},
                out);
    return exit_ok;
}

int cmd_cohomology(const RunConfig& cfg, std::ostream& out) {
    const Document doc = expect(cfg.inputs.at(0), {"cochain", "representation"});
    std::optional<Cochain> c;
    if (doc.kind == "cochain") {
        c = cochain_from_json(doc.json, doc.base, "");
    } else {
        c = rep_from_json(doc.json, doc.base, "").c;
    }
    const std::size_t degree = cfg.degree_given ? cfg.degree : c->degree();
    const CohomologyDims d = cohomology_dims(c->bimodule(), degree);
    out << "degree " << degree << ": cochains " << d.cochains << ", cocycles " << d.cocycles << ", coboundaries "
        << d.coboundaries << ", cohomology " << d.cohomology() << '\n';
    if (c->degree() == 0) return exit_ok;
    if (!is_cocycle(*c)) {
        out << "input " << c->degree() << "-cochain is not a cocycle\n";
        return exit_semantic;
    }
    const Cochain x = averaging_contraction(*c);
    const std::size_t n = c->group().order();
    for (std::size_t k = 0; k < x.values().size(); ++k)
        out << "x" << tuple_label("", index_tuple(k, x.degree(), n)).substr(3) << " = " << x.at(k).to_string() << '\n';
    out << "averaging contraction satisfies dx = z\n";
    maybe_write(cfg, cochain_to_json(x), out);
    return exit_ok;
}

int cmd_strictify(const RunConfig& cfg, std::ostream& out) {
    const Document doc = expect(cfg.inputs.at(0), {"representation"});
    auto r = std::make_shared<const RepReduced>(rep_from_json(doc.json, doc.base, ""));
    const Violations v = validate_rep_reduced(*r);
    if (!v.empty()) return report_violations(v, "representation", out);
    const Strictification s = strictify(r);
    Violations bad = validate_inter1(s.forward);
    for (const Violation& x : validate_inter1(s.backward)) bad.push_back(x);
    if (!bad.empty()) return report_violations(bad, "strictification", out);
    const bool back_forth = two_iso(compose_inter1(s.backward, s.forward), identity_inter1(r)).has_value();
    const bool forth_back = two_iso(compose_inter1(s.forward, s.backward), identity_inter1(s.forward.dst)).has_value();
    out << "strict representation dims " << dims(s.strict) << '\n';
    out << "forward mu " << matrices(s.forward.mu.values()) << '\n';
    out << "backward o forward " << (back_forth ? "2-isomorphic" : "NOT 2-isomorphic") << " to identity\n";
    out << "forward o backward " << (forth_back ? "2-isomorphic" : "NOT 2-isomorphic") << " to identity\n";
    maybe_write(cfg,
                Json{{"kind", "strictification"},
                     {"strict", rep_to_json(s.strict)},
                     {"forward", inter1_to_json(s.forward)},
                     {"backward", inter1_to_json(s.backward)}},
                out);
    return back_forth && forth_back ? exit_ok : exit_semantic;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
    if (cfg.inputs.size() != 2) throw ParseError("arguments", "classify takes two representation files");
    std::vector<RepReduced> reps;
    for (const std::string& path : cfg.inputs) {
        const Document doc = expect(path, {"representation"});
        RepReduced r = rep_from_json(doc.json, doc.base, "");
        const Violations v = validate_rep_reduced(r);
        if (!v.empty()) return report_violations(v, path, out);
        if (!is_strict(r)) {
            r = strictify(std::make_shared<const RepReduced>(r)).strict;
            out << path << ": strictified\n";
        }
        reps.push_back(std::move(r));
    }
    const HomClasses h = hom_classes(reps[0], reps[1]);
    out << "level 1: intertwiner space dimension " << h.level1.size() << '\n';
    out << "level 0: intertwiner space dimension " << h.level0.size() << '\n';
    out << "hom classes correspond to pairs (r1, r0), dimension " << h.level1.size() + h.level0.size() << '\n';
    Json l1 = Json::array(), l0 = Json::array();
    for (const Matrix& m : h.level1) l1.push_back(matrix_to_json(m));
    for (const Matrix& m : h.level0) l0.push_back(matrix_to_json(m));
    maybe_write(cfg, Json{{"kind", "hom_classes"}, {"level1", std::move(l1)}, {"level0", std::move(l0)}}, out);
    return exit_ok;
}

int cmd_verify_theorem(const RunConfig& cfg, std::ostream& out) {
    if (cfg.dim_max < 1) throw ParseError("--dim-max", "must be at least 1");
    const Document doc = expect(cfg.inputs.at(0), {"twogroup"});
    TwoGroupPtr g;
    if (const int code = load_group_file(doc, g, out); code != exit_ok) return code;
    SplitMix64 rng(cfg.seed);
    std::vector<RepReduced> inventory = build_inventory(g, cfg.dim_max, rng);
    for (const std::string& path : cfg.extra_reps) {
        const Document rd = expect(path, {"representation"});
        inventory.push_back(rep_from_json(rd.json, rd.base, ""));
    }
    const EquivalenceReport report = verify_equivalence(g, inventory, cfg.trials, cfg.seed);
    out << report.render();
    if (!cfg.out.empty()) {
        Json failures = Json::array();
        for (const ClauseLine& l : report.lines)
            if (!l.pass) failures.push_back(std::string(1, l.clause) + " " + l.instance + " " + l.witness);
        Json clauses = Json::object();
        for (char c : {'A', 'B', 'C', 'D'}) clauses[std::string(1, c)] = report.passed(c);
        maybe_write(cfg,
                    Json{{"kind", "theorem_report"},
                         {"seed", report.seed},
                         {"trials", report.trials},
                         {"dim_max", cfg.dim_max},
                         {"inventory", inventory.size()},
                         {"clauses", std::move(clauses)},
                         {"pass", report.all_passed()},
                         {"failures", std::move(failures)}},
                    out);
    }
    return report.all_passed() ? exit_ok : exit_semantic;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact checks for representations of finite 2-groups on 2-vector spaces over Q", "bcrep"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_out = [&](CLI::App* sub) { sub->add_option("-o,--out", cfg.out, "Output file"); };
    auto* validate = app.add_subcommand("validate", "Check every axiom instance for the file's kind");
    validate->add_option("file", cfg.inputs, "Input file")->required()->expected(1);
    auto* normalize_cmd = app.add_subcommand("normalize", "Replace a complex by ker d -0-> coker d with witnesses");
    normalize_cmd->add_option("file", cfg.inputs, "Complex file")->required()->expected(1);
    add_out(normalize_cmd);
    auto* cohomology = app.add_subcommand("cohomology", "Cochain dimensions and the averaging contraction");
    cohomology->add_option("file", cfg.inputs, "Cochain or representation file")->required()->expected(1);
    cohomology->add_option("--degree", cfg.degree, "Degree for the dimension count");
    add_out(cohomology);
    auto* strictify_cmd = app.add_subcommand("strictify", "Equivalence to (rho1, rho0, 0, 0)");
    strictify_cmd->add_option("file", cfg.inputs, "Representation file")->required()->expected(1);
    add_out(strictify_cmd);
    auto* classify = app.add_subcommand("classify", "Hom classes between two representations");
    classify->add_option("files", cfg.inputs, "Two representation files")->required()->expected(2);
    add_out(classify);
    auto* verify = app.add_subcommand("verify-theorem", "Check the homotopy category against Rep x Rep");
    verify->add_option("file", cfg.inputs, "2-group file")->required()->expected(1);
    verify->add_option("--dim-max", cfg.dim_max, "Maximal level dimension")->capture_default_str();
    verify->add_option("--trials", cfg.trials, "Random hom-class trials")->capture_default_str();
    verify->add_option("--seed", cfg.seed, "PRNG seed")->capture_default_str();
    verify->add_option("--rep", cfg.extra_reps, "Extra representation files for the inventory");
    add_out(verify);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return exit_input;
    }
    cfg.degree_given = cohomology->count("--degree") > 0;
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        if (cfg.command == "validate") return cmd_validate(cfg, out);
        if (cfg.command == "normalize") return cmd_normalize(cfg, out);
        if (cfg.command == "cohomology") return cmd_cohomology(cfg, out);
        if (cfg.command == "strictify") return cmd_strictify(cfg, out);
        if (cfg.command == "classify") return cmd_classify(cfg, out);
        return cmd_verify_theorem(cfg, out);
    } catch (const ParseError& e) {
        err << e.what() << '\n';
        return exit_input;
    } catch (const AlgebraError& e) {
        err << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::parse ? exit_input : exit_semantic;
    } catch (const nlohmann::json::exception& e) {
        err << "parse error: " << e.what() << '\n';
        return exit_input;
    }
}

}  // namespace bcrep

// Command-line front end: emits human-readable and JSON reports for the
// verification surfaces of the library (Gram/D matrices, determinant checks,
// simplicity predicates, singular vectors, free-field residuals, the
// Whittaker action table, and graded dimensions).

#include "bms/reports.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>

namespace {

using namespace bms;

constexpr std::uint64_t kDefaultSeed = 20240901;

void write_out(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw std::runtime_error("cannot open output file: " + path);
    os << content;
}

// "symbolic" (or "sym") keeps the named variable; anything else must be a rational.
Poly value_or_symbol(const std::string& text, Var v) {
    if (text == "symbolic" || text == "sym")
        return Poly::variable(v);
    return Poly(parse_rational(text));
}

WeightParams params_from_flags(const std::string& h1, const std::string& h2,
                               const std::string& c1, const std::string& c2) {
    WeightParams p;
    p.h1 = value_or_symbol(h1, Var::h1);
    p.h2 = value_or_symbol(h2, Var::h2);
    p.c1 = value_or_symbol(c1, Var::c1);
    p.c2 = value_or_symbol(c2, Var::c2);
    return p;
}

std::map<Var, Rational> random_assignment(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-12, 12);
    std::uniform_int_distribution<int> den(1, 3);
    std::map<Var, Rational> out;
    for (Var v : {Var::h1, Var::h2, Var::c1, Var::c2})
        out[v] = Rational(num(rng), den(rng));
    return out;
}

int run_gram(const std::string& level, const WeightParams& params, const std::string& format,
             const std::string& matrix, const std::string& out) {
    GramData data = gram_data(HalfInt::parse(level), params);
    GramReport report = GramReport::build(data);
    if (format == "json")
        write_out(out, dump_json(to_json(report)));
    else if (format == "csv")
        write_out(out, gram_report_csv(report, matrix));
    else
        write_out(out, gram_report_text(report));
    return 0;
}

int run_detcheck(const std::string& level, bool symbolic, int trials, std::uint64_t seed,
                 const std::string& format, const std::string& out) {
    const HalfInt n = HalfInt::parse(level);
    Json levels = Json::array();
    bool ok = true;
    std::mt19937_64 rng(seed);
    for (long long tw = 0; tw <= n.twice; ++tw) {
        const HalfInt lev{tw};
        Json entry;
        entry["level"] = lev.str();
        if (symbolic) {
            GramData data = gram_data(lev, WeightParams::symbolic());
            Poly det = det_fraction_free(data.gram);
            Poly prod{Rational(1)};
            for (std::size_t i = 0; i < data.basis.size(); ++i)
                prod *= data.dmat.at(i, i);
            if (!data.basis.empty() && data.star_sign() < 0)
                prod = -prod;
            const bool match = det == prod;
            ok = ok && match;
            entry["mode"] = "symbolic";
            entry["det"] = det.str();
            entry["signed_diagonal_product"] = prod.str();
            entry["match"] = match;
        } else {
            entry["mode"] = "points";
            Json points = Json::array();
            for (int t = 0; t < trials; ++t) {
                auto assignment = random_assignment(rng);
                WeightParams params;
                params.h1 = Poly(assignment.at(Var::h1));
                params.h2 = Poly(assignment.at(Var::h2));
                params.c1 = Poly(assignment.at(Var::c1));
                params.c2 = Poly(assignment.at(Var::c2));
                GramData data = gram_data(lev, params);
                RatMatrix gm(data.basis.size(), std::vector<Rational>(data.basis.size()));
                Rational prod = 1;
                for (std::size_t i = 0; i < data.basis.size(); ++i) {
                    prod *= data.dmat.at(i, i).constant_value();
                    for (std::size_t j = 0; j < data.basis.size(); ++j)
                        gm[i][j] = data.gram.at(i, j).constant_value();
                }
                if (!data.basis.empty() && data.star_sign() < 0)
                    prod = -prod;
                Rational det = rat_det(gm);
                const bool match = det == prod;
                ok = ok && match;
                Json point;
                point["h1"] = rat_to_string(assignment.at(Var::h1));
                point["h2"] = rat_to_string(assignment.at(Var::h2));
                point["c1"] = rat_to_string(assignment.at(Var::c1));
                point["c2"] = rat_to_string(assignment.at(Var::c2));
                point["det"] = rat_to_string(det);
                point["signed_diagonal_product"] = rat_to_string(prod);
                point["match"] = match;
                points.push_back(std::move(point));
            }
            entry["points"] = std::move(points);
        }
        levels.push_back(std::move(entry));
    }
    Json j;
    j["max_level"] = n.str();
    j["seed"] = seed;
    j["levels"] = std::move(levels);
    j["verified"] = ok;
    if (format == "json") {
        write_out(out, dump_json(j));
    } else {
        std::ostringstream os;
        os << "determinant identity up to level " << n.str() << ": "
           << (ok ? "verified" : "MISMATCH") << "\n";
        write_out(out, os.str());
    }
    return ok ? 0 : 2;
}

int run_simplicity(const std::string& kind, const std::map<std::string, std::string>& args,
                   long long max_i, const std::string& format, const std::string& out) {
    SimplicityReport r;
    r.kind = kind;
    auto need = [&](const std::string& name) {
        auto it = args.find(name);
        if (it == args.end() || it->second.empty())
            throw CLI::ValidationError("simplicity", "--" + name + " is required for kind " + kind);
        return parse_rational(it->second);
    };
    if (kind == "verma") {
        Rational h2 = need("h2"), c2 = need("c2");
        auto res = verma_simple(h2, c2, max_i);
        r.inputs = {{"h2", rat_to_string(h2)}, {"c2", rat_to_string(c2)},
                    {"max_i", std::to_string(max_i)}};
        r.simple = res.simple;
        r.violations = res.violations;
        r.exhaustive = res.exhaustive;
    } else if (kind == "vacuum") {
        Rational c2 = need("c2");
        r.inputs = {{"c2", rat_to_string(c2)}};
        r.simple = vacuum_simple(c2);
    } else if (kind == "fock") {
        Rational b = need("b"), rho = need("rho");
        auto res = fock_simple(b, rho);
        r.inputs = {{"b", rat_to_string(b)}, {"rho", rat_to_string(rho)}};
        r.simple = res.simple;
        if (res.violating_n)
            r.violations.push_back(*res.violating_n);
    } else if (kind == "hc-whittaker") {
        Rational pk = need("phi-k");
        r.inputs = {{"phi_k", rat_to_string(pk)}};
        r.simple = hc_whittaker_simple(pk);
    } else if (kind == "fock-whittaker") {
        Rational pb1 = need("phi-b1");
        r.inputs = {{"phi_b1", rat_to_string(pb1)}};
        r.simple = fock_whittaker_simple(pb1);
    } else if (kind == "bms-whittaker") {
        Rational m2k = need("phi-m2k"), m2k1 = need("phi-m2k1");
        r.inputs = {{"phi_m2k", rat_to_string(m2k)}, {"phi_m2k1", rat_to_string(m2k1)}};
        r.simple = bms_whittaker_simple(m2k, m2k1);
    } else {
        throw CLI::ValidationError("simplicity", "unknown kind " + kind);
    }
    write_out(out, format == "json" ? dump_json(to_json(r)) : simplicity_report_text(r));
    return 0;
}

int run_singular(const std::string& level, const WeightParams& params, long long cutoff,
                 const std::string& format, const std::string& out) {
    SingularReport r;
    r.level = HalfInt::parse(level);
    r.params = params;
    r.mode_cutoff = cutoff > 0 ? cutoff : r.level.as_integer() + 1;
    if (2 * r.mode_cutoff < r.level.twice + 2)
        r.mode_cutoff = (r.level.twice + 2 + 1) / 2;
    r.vectors = singular_vectors(r.level, params, r.mode_cutoff);
    write_out(out, format == "json" ? dump_json(to_json(r)) : singular_report_text(r));
    return 0;
}

int run_ffr_verify(const std::string& spec_kind, long long max_mode, const std::string& max_depth,
                   const std::string& rho, const std::map<std::string, std::string>& vals,
                   const std::string& format, const std::string& out) {
    HcModuleSpec spec;
    auto val = [&](const std::string& name, Var v, const Rational& dflt) {
        auto it = vals.find(name);
        if (it == vals.end() || it->second.empty())
            return Poly(dflt);
        return value_or_symbol(it->second, v);
    };
    if (spec_kind == "verma") {
        spec = HcModuleSpec::verma(val("level", Var::k, 1), val("a", Var::a, 0),
                                   val("b", Var::b, 0));
    } else if (spec_kind == "whittaker") {
        spec = HcModuleSpec::whittaker(
            val("phi-a0", Var::phi_a0, 0), val("phi-a1", Var::phi_a1, 0),
            val("phi-b0", Var::phi_b0, 0), val("phi-b1", Var::phi_b1, 0), val("phi-k", Var::k, 1));
    } else {
        throw CLI::ValidationError("ffr-verify", "unknown spec " + spec_kind);
    }
    FfrParams params{value_or_symbol(rho, Var::rho)};
    ResidualSuiteReport report = run_residual_suite(spec, params, HalfInt::whole(max_mode),
                                                    HalfInt::parse(max_depth));
    write_out(out, format == "json" ? dump_json(to_json(report)) : residual_suite_text(report));
    return report.all_zero ? 0 : 2;
}

int run_whittaker(const std::string& rho, const std::map<std::string, std::string>& vals,
                  const std::string& format, const std::string& out) {
    auto val = [&](const std::string& name, Var v) {
        auto it = vals.find(name);
        if (it == vals.end() || it->second.empty())
            return Poly::variable(v);
        return value_or_symbol(it->second, v);
    };
    WhittakerTableReport r;
    r.spec = HcModuleSpec::whittaker(val("phi-a0", Var::phi_a0), val("phi-a1", Var::phi_a1),
                                     val("phi-b0", Var::phi_b0), val("phi-b1", Var::phi_b1),
                                     vals.count("phi-k") && !vals.at("phi-k").empty()
                                         ? Poly(parse_rational(vals.at("phi-k")))
                                         : Poly(Rational(1)));
    r.rho = value_or_symbol(rho, Var::rho);
    r.table = whittaker_action_table(r.spec, FfrParams{r.rho});
    write_out(out, format == "json" ? dump_json(to_json(r)) : whittaker_report_text(r));
    return 0;
}

int run_partition(const std::string& n, const std::string& format, const std::string& out) {
    PartitionReport r;
    r.n = HalfInt::parse(n);
    r.count = partition_count(r.n);
    if (format == "json") {
        write_out(out, dump_json(to_json(r)));
    } else {
        write_out(out, "p(" + r.n.str() + ") = " + std::to_string(r.count) + "\n");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer algebra for the N=1 BMS superalgebra"};
    app.require_subcommand(1);

    std::string format = "text", out = "-";
    app.add_option("--format", format, "output format: text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", out, "output path ('-' for stdout)");

    // gram
    auto* gram = app.add_subcommand("gram", "Gram and D matrices of a weight space");
    std::string level = "2", h1 = "symbolic", h2 = "symbolic", c1 = "symbolic", c2 = "symbolic";
    std::string matrix = "gram";
    bool symbolic = false;
    gram->add_option("--level", level, "weight level (half-integer)")->required();
    gram->add_flag("--symbolic", symbolic, "all weight parameters symbolic");
    gram->add_option("--h1", h1, "h1 (rational or 'symbolic')");
    gram->add_option("--h2", h2, "h2 (rational or 'symbolic')");
    gram->add_option("--c1", c1, "c1 (rational or 'symbolic')");
    gram->add_option("--c2", c2, "c2 (rational or 'symbolic')");
    gram->add_option("--matrix", matrix, "matrix for csv output: gram|dmat")
        ->check(CLI::IsMember({"gram", "dmat"}));

    // detcheck
    auto* det = app.add_subcommand("detcheck", "determinant identity det(gram) = +-prod d_ii");
    bool det_symbolic = false;
    int trials = 5;
    std::uint64_t seed = kDefaultSeed;
    det->add_option("--level", level, "maximum level to check")->required();
    det->add_flag("--symbolic", det_symbolic, "verify symbolically (small levels)");
    det->add_option("--trials", trials, "random rational specializations per level (default 5)");
    det->add_option("--seed", seed, "RNG seed for the specializations (default 20240901)");

    // simplicity
    auto* simp = app.add_subcommand("simplicity", "simplicity predicates");
    std::string kind;
    long long max_i = 50;
    std::map<std::string, std::string> sv;
    simp->add_option("--kind", kind,
                     "verma|vacuum|fock|hc-whittaker|fock-whittaker|bms-whittaker")
        ->required();
    simp->add_option("--h2", sv["h2"], "h2 (verma)");
    simp->add_option("--c2", sv["c2"], "c2 (verma, vacuum)");
    simp->add_option("--b", sv["b"], "b (fock)");
    simp->add_option("--rho", sv["rho"], "rho (fock)");
    simp->add_option("--phi-k", sv["phi-k"], "phi(k) (hc-whittaker)");
    simp->add_option("--phi-b1", sv["phi-b1"], "phi(b_1) (fock-whittaker)");
    simp->add_option("--phi-m2k", sv["phi-m2k"], "phi_k(M_{2k}) (bms-whittaker)");
    simp->add_option("--phi-m2k1", sv["phi-m2k1"], "phi_k(M_{2k-1}) (bms-whittaker)");
    simp->add_option("--max-i", max_i, "report window for the degenerate verma case");

    // singular
    auto* sing = app.add_subcommand("singular", "singular vectors of a Verma module");
    long long cutoff = 0;
    sing->add_option("--level", level, "weight level (half-integer)")->required();
    sing->add_option("--h1", h1, "h1 (rational)")->required();
    sing->add_option("--h2", h2, "h2 (rational)")->required();
    sing->add_option("--c1", c1, "c1 (rational)")->required();
    sing->add_option("--c2", c2, "c2 (rational)")->required();
    sing->add_option("--cutoff", cutoff, "raising-mode cutoff (default: level + 1)");

    // ffr-verify
    auto* ffr = app.add_subcommand("ffr-verify", "free-field commutator residual suite");
    std::string spec_kind = "verma", rho = "symbolic", max_depth = "4";
    long long max_mode = 3;
    std::map<std::string, std::string> fv;
    ffr->add_option("--spec", spec_kind, "verma|whittaker (default verma)");
    ffr->add_option("--max-mode", max_mode, "largest |mode| of tested generators (default 3)");
    ffr->add_option("--max-depth", max_depth, "largest monomial depth tested (default 4)");
    ffr->add_option("--rho", rho, "rho (rational or 'symbolic')");
    ffr->add_option("--level", fv["level"], "hc level (verma spec; default 1)");
    ffr->add_option("--a", fv["a"], "a_0 eigenvalue (verma spec; default 0)");
    ffr->add_option("--b", fv["b"], "b_0 eigenvalue (verma spec; default 0)");
    ffr->add_option("--phi-a0", fv["phi-a0"], "phi(a_0) (whittaker spec)");
    ffr->add_option("--phi-a1", fv["phi-a1"], "phi(a_1) (whittaker spec)");
    ffr->add_option("--phi-b0", fv["phi-b0"], "phi(b_0) (whittaker spec)");
    ffr->add_option("--phi-b1", fv["phi-b1"], "phi(b_1) (whittaker spec)");
    ffr->add_option("--phi-k", fv["phi-k"], "phi(k) (whittaker spec; default 1)");

    // whittaker
    auto* whit = app.add_subcommand("whittaker", "action table on the Whittaker vector");
    std::map<std::string, std::string> wv;
    whit->add_option("--rho", rho, "rho (rational or 'symbolic')");
    whit->add_option("--phi-a0", wv["phi-a0"], "phi(a_0) (default symbolic)");
    whit->add_option("--phi-a1", wv["phi-a1"], "phi(a_1) (default symbolic)");
    whit->add_option("--phi-b0", wv["phi-b0"], "phi(b_0) (default symbolic)");
    whit->add_option("--phi-b1", wv["phi-b1"], "phi(b_1) (default symbolic)");
    whit->add_option("--phi-k", wv["phi-k"], "phi(k) (default 1)");

    // partition
    auto* part = app.add_subcommand("partition", "graded dimension p(n)");
    std::string pn;
    part->add_option("--n", pn, "level (half-integer)")->required();

    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gram->parsed()) {
            WeightParams p = symbolic ? WeightParams::symbolic()
                                      : params_from_flags(h1, h2, c1, c2);
            return run_gram(level, p, format, matrix, out);
        }
        if (det->parsed())
            return run_detcheck(level, det_symbolic, trials, seed, format, out);
        if (simp->parsed())
            return run_simplicity(kind, sv, max_i, format, out);
        if (sing->parsed())
            return run_singular(level, params_from_flags(h1, h2, c1, c2), cutoff, format, out);
        if (ffr->parsed())
            return run_ffr_verify(spec_kind, max_mode, max_depth, rho, fv, format, out);
        if (whit->parsed())
            return run_whittaker(rho, wv, format, out);
        if (part->parsed())
            return run_partition(pn, format, out);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

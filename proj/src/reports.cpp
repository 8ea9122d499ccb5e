#include "bms/reports.hpp"

#include <sstream>

namespace bms {

namespace {

Json matrix_to_json(const PolyMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows; ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols; ++c)
            row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

PolyMatrix matrix_from_json(const Json& j) {
    PolyMatrix m(j.size(), j.empty() ? 0 : j[0].size());
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c)
            m.at(r, c) = Poly::parse(j[r][c].get<std::string>());
    return m;
}

Json fock_vector_to_json(const FockVector& v) {
    Json out = Json::array();
    for (const auto& [t, c] : v) {
        Json term;
        term["monomial"] = monomial_str(hc_lowering_word(t));
        term["coeff"] = c.str();
        out.push_back(std::move(term));
    }
    return out;
}

FockVector fock_vector_from_json(const Json& j) {
    FockVector v;
    for (const auto& term : j)
        fock_add(v, triple_from_word(monomial_parse(term.at("monomial").get<std::string>())),
                 Poly::parse(term.at("coeff").get<std::string>()));
    return v;
}

}  // namespace

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json poly_to_json(const Poly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json term;
        term["coeff"] = rat_to_string(c);
        Json exps;
        for (std::size_t v = 0; v < kNumVars; ++v)
            if (e[v] != 0)
                exps[var_names()[v]] = e[v];
        term["exps"] = std::move(exps);
        terms.push_back(std::move(term));
    }
    return terms;
}

Poly poly_from_json(const Json& j) {
    Poly p;
    for (const auto& term : j) {
        ExpVec e{};
        for (const auto& [name, exp] : term.at("exps").items()) {
            auto v = var_from_name(name);
            if (!v)
                throw std::invalid_argument("poly_from_json: unknown variable '" + name + "'");
            e[static_cast<std::size_t>(*v)] = exp.get<std::uint16_t>();
        }
        p.add_term(e, parse_rational(term.at("coeff").get<std::string>()));
    }
    return p;
}

GramReport GramReport::build(const GramData& data) {
    GramReport r;
    r.level = data.level;
    r.basis = data.basis;
    r.gram = data.gram;
    r.dmat = data.dmat;
    Poly prod{Rational(1)};
    for (std::size_t i = 0; i < data.basis.size(); ++i) {
        r.diagonal.push_back(data.dmat.at(i, i));
        prod *= data.dmat.at(i, i);
    }
    const int sign = data.basis.empty() ? 1 : data.star_sign();
    r.det = sign < 0 ? -prod : prod;
    return r;
}

Json to_json(const GramReport& r) {
    Json j;
    j["level"] = r.level.str();
    Json basis = Json::array();
    for (const auto& t : r.basis)
        basis.push_back(monomial_str(bms_lowering_word(t)));
    j["basis"] = std::move(basis);
    j["gram"] = matrix_to_json(r.gram);
    j["dmat"] = matrix_to_json(r.dmat);
    j["det"] = r.det.str();
    Json diag = Json::array();
    for (const auto& p : r.diagonal)
        diag.push_back(p.str());
    j["diagonal"] = std::move(diag);
    return j;
}

GramReport gram_report_from_json(const Json& j) {
    GramReport r;
    r.level = HalfInt::parse(j.at("level").get<std::string>());
    for (const auto& s : j.at("basis"))
        r.basis.push_back(triple_from_word(monomial_parse(s.get<std::string>())));
    r.gram = matrix_from_json(j.at("gram"));
    r.dmat = matrix_from_json(j.at("dmat"));
    r.det = Poly::parse(j.at("det").get<std::string>());
    for (const auto& s : j.at("diagonal"))
        r.diagonal.push_back(Poly::parse(s.get<std::string>()));
    return r;
}

std::string gram_report_csv(const GramReport& r, const std::string& which) {
    const PolyMatrix& m = which == "dmat" ? r.dmat : r.gram;
    std::ostringstream os;
    os << "basis";
    for (const auto& t : r.basis) {
        const IndexTriple col = which == "dmat" ? star_dual(t) : t;
        os << "," << monomial_str(bms_lowering_word(col));
    }
    os << "\n";
    for (std::size_t i = 0; i < m.rows; ++i) {
        os << monomial_str(bms_lowering_word(r.basis[i]));
        for (std::size_t c = 0; c < m.cols; ++c)
            os << "," << m.at(i, c).str();
        os << "\n";
    }
    return os.str();
}

std::string gram_report_text(const GramReport& r) {
    std::ostringstream os;
    os << "level " << r.level.str() << ", dimension " << r.basis.size() << "\n";
    os << "basis:";
    for (const auto& t : r.basis)
        os << " " << monomial_str(bms_lowering_word(t));
    os << "\nD-matrix diagonal:\n";
    for (std::size_t i = 0; i < r.diagonal.size(); ++i)
        os << "  d[" << i + 1 << "] = " << r.diagonal[i].str() << "\n";
    os << "det(gram) = " << r.det.str() << "\n";
    return os.str();
}

Json to_json(const ResidualReport& r, const Poly& rho) {
    Json j;
    j["pair"] = Json::array({r.x.str(), r.y.str()});
    j["cutoff"] = r.cutoff.str();
    j["max_residual_terms"] = r.max_residual_terms;
    j["central"] = Json::array(
        {Poly(Rational(5, 2)).str(), (Poly(Rational(-12)) * rho * rho).str()});
    return j;
}

Json to_json(const ResidualSuiteReport& r) {
    Json j;
    j["spec"] = r.spec_kind;
    j["rho"] = r.rho.str();
    j["max_mode"] = r.max_mode.str();
    j["cutoff"] = r.cutoff.str();
    Json pairs = Json::array();
    for (const auto& p : r.pairs)
        pairs.push_back(to_json(p, r.rho));
    j["pairs"] = std::move(pairs);
    j["all_zero"] = r.all_zero;
    return j;
}

ResidualSuiteReport residual_suite_from_json(const Json& j) {
    ResidualSuiteReport r;
    r.spec_kind = j.at("spec").get<std::string>();
    r.rho = Poly::parse(j.at("rho").get<std::string>());
    r.max_mode = HalfInt::parse(j.at("max_mode").get<std::string>());
    r.cutoff = HalfInt::parse(j.at("cutoff").get<std::string>());
    for (const auto& p : j.at("pairs")) {
        ResidualReport rr{Generator::parse(p.at("pair")[0].get<std::string>()),
                          Generator::parse(p.at("pair")[1].get<std::string>()),
                          HalfInt::parse(p.at("cutoff").get<std::string>())};
        rr.max_residual_terms = p.at("max_residual_terms").get<std::size_t>();
        rr.all_zero = rr.max_residual_terms == 0;
        r.pairs.push_back(std::move(rr));
    }
    r.all_zero = j.at("all_zero").get<bool>();
    return r;
}

std::string residual_suite_text(const ResidualSuiteReport& r) {
    std::ostringstream os;
    os << "free-field commutator residuals, spec=" << r.spec_kind << ", rho=" << r.rho.str()
       << ", |mode| <= " << r.max_mode.str() << ", depth <= " << r.cutoff.str() << "\n";
    for (const auto& p : r.pairs) {
        os << "  [" << p.x.str() << ", " << p.y.str() << "]: "
           << (p.all_zero ? "ok" : "NONZERO residual (" + std::to_string(p.max_residual_terms) +
                                       " terms on " +
                                       monomial_str(hc_lowering_word(*p.worst_vector)) + ")")
           << "\n";
    }
    os << (r.all_zero ? "all residuals zero" : "RESIDUALS FOUND") << "\n";
    return os.str();
}

ResidualSuiteReport run_residual_suite(const HcModuleSpec& spec, const FfrParams& params,
                                       HalfInt max_mode, HalfInt cutoff) {
    ResidualSuiteReport report;
    report.spec_kind = spec.kind == HcModuleSpec::Kind::Verma ? "verma" : "whittaker";
    report.rho = params.rho;
    report.max_mode = max_mode;
    report.cutoff = cutoff;
    FreeFieldRealization ffr(spec, params);

    std::vector<Generator> gens;
    for (long long m = -max_mode.as_integer(); m <= max_mode.as_integer(); ++m) {
        gens.emplace_back(Family::L, HalfInt::whole(m));
        gens.emplace_back(Family::M, HalfInt::whole(m));
    }
    for (long long twice = -max_mode.twice; twice <= max_mode.twice; twice += 2)
        if (twice % 2 != 0)
            gens.emplace_back(Family::Q, HalfInt(twice));

    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t jdx = i; jdx < gens.size(); ++jdx) {
            ResidualReport rr = commutator_residual(gens[i], gens[jdx], ffr, cutoff);
            report.all_zero = report.all_zero && rr.all_zero;
            report.pairs.push_back(std::move(rr));
        }
    }
    return report;
}

Json to_json(const SimplicityReport& r) {
    Json j;
    j["kind"] = r.kind;
    Json in;
    for (const auto& [k, v] : r.inputs)
        in[k] = v;
    j["inputs"] = std::move(in);
    j["simple"] = r.simple;
    j["violations"] = r.violations;
    j["exhaustive"] = r.exhaustive;
    return j;
}

SimplicityReport simplicity_report_from_json(const Json& j) {
    SimplicityReport r;
    r.kind = j.at("kind").get<std::string>();
    for (const auto& [k, v] : j.at("inputs").items())
        r.inputs.emplace_back(k, v.get<std::string>());
    r.simple = j.at("simple").get<bool>();
    r.violations = j.at("violations").get<std::vector<long long>>();
    r.exhaustive = j.at("exhaustive").get<bool>();
    return r;
}

std::string simplicity_report_text(const SimplicityReport& r) {
    std::ostringstream os;
    os << r.kind << " module(";
    for (std::size_t i = 0; i < r.inputs.size(); ++i)
        os << (i ? ", " : "") << r.inputs[i].first << "=" << r.inputs[i].second;
    os << "): " << (r.simple ? "simple" : "NOT simple");
    if (!r.violations.empty()) {
        os << ", violations at";
        for (auto v : r.violations)
            os << " " << v;
        if (!r.exhaustive)
            os << " (and beyond)";
    }
    os << "\n";
    return os.str();
}

Json to_json(const SingularReport& r) {
    Json j;
    j["level"] = r.level.str();
    Json params;
    params["h1"] = r.params.h1.str();
    params["h2"] = r.params.h2.str();
    params["c1"] = r.params.c1.str();
    params["c2"] = r.params.c2.str();
    j["params"] = std::move(params);
    j["mode_cutoff"] = r.mode_cutoff;
    j["dimension"] = r.vectors.size();
    Json vecs = Json::array();
    for (const auto& v : r.vectors) {
        Json terms = Json::array();
        for (const auto& [t, c] : v) {
            Json term;
            term["monomial"] = monomial_str(bms_lowering_word(t));
            term["coeff"] = c.str();
            terms.push_back(std::move(term));
        }
        vecs.push_back(std::move(terms));
    }
    j["vectors"] = std::move(vecs);
    return j;
}

SingularReport singular_report_from_json(const Json& j) {
    SingularReport r;
    r.level = HalfInt::parse(j.at("level").get<std::string>());
    r.params.h1 = Poly::parse(j.at("params").at("h1").get<std::string>());
    r.params.h2 = Poly::parse(j.at("params").at("h2").get<std::string>());
    r.params.c1 = Poly::parse(j.at("params").at("c1").get<std::string>());
    r.params.c2 = Poly::parse(j.at("params").at("c2").get<std::string>());
    r.mode_cutoff = j.at("mode_cutoff").get<long long>();
    for (const auto& vec : j.at("vectors")) {
        VermaVector v;
        for (const auto& term : vec)
            verma_add(v, triple_from_word(monomial_parse(term.at("monomial").get<std::string>())),
                      Poly::parse(term.at("coeff").get<std::string>()));
        r.vectors.push_back(std::move(v));
    }
    return r;
}

std::string singular_report_text(const SingularReport& r) {
    std::ostringstream os;
    os << "singular vectors at level " << r.level.str() << " (h1=" << r.params.h1.str()
       << ", h2=" << r.params.h2.str() << ", c1=" << r.params.c1.str()
       << ", c2=" << r.params.c2.str() << "): dimension " << r.vectors.size() << "\n";
    for (const auto& v : r.vectors)
        os << "  " << verma_vector_str(v) << "\n";
    return os.str();
}

Json to_json(const WhittakerTableReport& r) {
    Json j;
    j["rho"] = r.rho.str();
    Json phi;
    phi["a0"] = r.spec.cyclic_scalar(Generator(Family::A, HalfInt::whole(0))).str();
    phi["a1"] = r.spec.cyclic_scalar(Generator(Family::A, HalfInt::whole(1))).str();
    phi["b0"] = r.spec.cyclic_scalar(Generator(Family::B, HalfInt::whole(0))).str();
    phi["b1"] = r.spec.cyclic_scalar(Generator(Family::B, HalfInt::whole(1))).str();
    phi["k"] = r.spec.cyclic_scalar(Generator(Family::K, HalfInt())).str();
    j["phi"] = std::move(phi);
    Json table = Json::array();
    for (const auto& [g, v] : r.table) {
        Json entry;
        entry["generator"] = g.str();
        entry["value"] = fock_vector_to_json(v);
        table.push_back(std::move(entry));
    }
    j["table"] = std::move(table);
    return j;
}

WhittakerTableReport whittaker_report_from_json(const Json& j) {
    WhittakerTableReport r;
    r.rho = Poly::parse(j.at("rho").get<std::string>());
    const auto& phi = j.at("phi");
    r.spec = HcModuleSpec::whittaker(Poly::parse(phi.at("a0").get<std::string>()),
                                     Poly::parse(phi.at("a1").get<std::string>()),
                                     Poly::parse(phi.at("b0").get<std::string>()),
                                     Poly::parse(phi.at("b1").get<std::string>()),
                                     Poly::parse(phi.at("k").get<std::string>()));
    for (const auto& entry : j.at("table"))
        r.table.emplace_back(Generator::parse(entry.at("generator").get<std::string>()),
                             fock_vector_from_json(entry.at("value")));
    return r;
}

std::string whittaker_report_text(const WhittakerTableReport& r) {
    std::ostringstream os;
    os << "Whittaker action table (rho=" << r.rho.str() << ")\n";
    for (const auto& [g, v] : r.table)
        os << "  " << g.str() << " w = " << fock_vector_str(v)
           << (v.empty() ? "" : " w") << "\n";
    return os.str();
}

Json to_json(const PartitionReport& r) {
    Json j;
    j["n"] = r.n.str();
    j["count"] = r.count;
    return j;
}

PartitionReport partition_report_from_json(const Json& j) {
    PartitionReport r;
    r.n = HalfInt::parse(j.at("n").get<std::string>());
    r.count = j.at("count").get<long long>();
    return r;
}

}  // namespace bms

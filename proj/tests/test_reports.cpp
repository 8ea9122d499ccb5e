#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bms/reports.hpp"

#include <random>

using namespace bms;

TEST_CASE("poly structured json round trips") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coeff(-6, 6), exp(0, 3);
    for (int rep = 0; rep < 50; ++rep) {
        Poly p;
        for (int t = 0; t < 3; ++t) {
            Poly term{Rational(coeff(rng))};
            term = term * Poly::variable(Var::h2).pow(exp(rng)) *
                   Poly::variable(Var::rho).pow(exp(rng));
            p += term;
        }
        Json j = poly_to_json(p);
        CHECK(poly_from_json(j) == p);
        CHECK(dump_json(poly_to_json(poly_from_json(j))) == dump_json(j));
    }
    // the documented shape: list of {"coeff": "p/q", "exps": {...}}
    Poly q = Poly(Rational(5, 2)) * Poly::variable(Var::h2) - Poly(Rational(1));
    Json j = poly_to_json(q);
    REQUIRE(j.size() == 2);
    CHECK(j[0].at("coeff") == "5/2");
    CHECK(j[0].at("exps").at("h2") == 1);
    CHECK(j[1].at("coeff") == "-1");
    CHECK(j[1].at("exps").empty());
}

TEST_CASE("gram report json round trips byte-exactly") {
    for (long long twice : {1LL, 2LL, 3LL, 4LL}) {
        GramReport r = GramReport::build(gram_data(HalfInt(twice), WeightParams::symbolic()));
        std::string emitted = dump_json(to_json(r));
        GramReport parsed = gram_report_from_json(Json::parse(emitted));
        CHECK(dump_json(to_json(parsed)) == emitted);
        CHECK(parsed.basis == r.basis);
        CHECK(parsed.det == r.det);
    }
}

TEST_CASE("gram report csv") {
    GramReport r = GramReport::build(gram_data(HalfInt::whole(1), WeightParams::symbolic()));
    std::string csv = gram_report_csv(r, "gram");
    CHECK(csv == "basis,M[-1],L[-1]\n"
                 "M[-1],0,2*h2\n"
                 "L[-1],2*h2,2*h1\n");
    std::string dcsv = gram_report_csv(r, "dmat");
    CHECK(dcsv == "basis,L[-1],M[-1]\n"
                  "M[-1],2*h2,0\n"
                  "L[-1],2*h1,2*h2\n");
}

TEST_CASE("residual suite report round trips") {
    ResidualSuiteReport r = run_residual_suite(HcModuleSpec::whittaker_symbolic(),
                                               FfrParams::symbolic(), HalfInt::whole(1),
                                               HalfInt::whole(1));
    CHECK(r.all_zero);
    std::string emitted = dump_json(to_json(r));
    ResidualSuiteReport parsed = residual_suite_from_json(Json::parse(emitted));
    CHECK(dump_json(to_json(parsed)) == emitted);

    // the per-pair schema carries the central charges
    Json j = Json::parse(emitted);
    REQUIRE(!j.at("pairs").empty());
    CHECK(j.at("pairs")[0].at("central")[0] == "5/2");
    CHECK(j.at("pairs")[0].at("central")[1] == "-12*rho^2");
}

TEST_CASE("simplicity report round trips") {
    SimplicityReport r;
    r.kind = "verma";
    r.inputs = {{"h2", "-1"}, {"c2", "8"}, {"max_i", "50"}};
    auto res = verma_simple(-1, 8, 50);
    r.simple = res.simple;
    r.violations = res.violations;
    r.exhaustive = res.exhaustive;
    std::string emitted = dump_json(to_json(r));
    SimplicityReport parsed = simplicity_report_from_json(Json::parse(emitted));
    CHECK(dump_json(to_json(parsed)) == emitted);
    CHECK(parsed.violations == std::vector<long long>{2});
}

TEST_CASE("singular report round trips") {
    SingularReport r;
    r.level = HalfInt(1);
    r.params = WeightParams::numeric(0, 0, 1, 1);
    r.mode_cutoff = 2;
    r.vectors = singular_vectors(r.level, r.params, r.mode_cutoff);
    REQUIRE(r.vectors.size() == 1);
    std::string emitted = dump_json(to_json(r));
    SingularReport parsed = singular_report_from_json(Json::parse(emitted));
    CHECK(dump_json(to_json(parsed)) == emitted);
    CHECK(parsed.vectors == r.vectors);
}

TEST_CASE("whittaker table report round trips") {
    WhittakerTableReport r;
    r.spec = HcModuleSpec::whittaker_symbolic();
    r.rho = Poly::variable(Var::rho);
    r.table = whittaker_action_table(r.spec, FfrParams{r.rho});
    std::string emitted = dump_json(to_json(r));
    WhittakerTableReport parsed = whittaker_report_from_json(Json::parse(emitted));
    CHECK(dump_json(to_json(parsed)) == emitted);
}

TEST_CASE("partition report round trips") {
    PartitionReport r{HalfInt(3), partition_count(HalfInt(3))};
    CHECK(r.count == 3);
    std::string emitted = dump_json(to_json(r));
    PartitionReport parsed = partition_report_from_json(Json::parse(emitted));
    CHECK(dump_json(to_json(parsed)) == emitted);
}

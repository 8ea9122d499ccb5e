#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bms/freefield.hpp"

using namespace bms;

namespace {

Generator L(long long n) { return Generator(Family::L, HalfInt::whole(n)); }
Generator M(long long n) { return Generator(Family::M, HalfInt::whole(n)); }
Generator Q(long long twice) { return Generator(Family::Q, HalfInt(twice)); }
Generator A(long long n) { return Generator(Family::A, HalfInt::whole(n)); }
Generator B(long long n) { return Generator(Family::B, HalfInt::whole(n)); }
Generator Cf(long long twice) { return Generator(Family::C, HalfInt(twice)); }

Poly pv(Var v) { return Poly::variable(v); }

FockVector unit_of(const std::string& monomial) {
    return fock_unit(triple_from_word(monomial_parse(monomial)));
}

Poly coeff_of(const FockVector& v, const std::string& monomial) {
    auto it = v.find(triple_from_word(monomial_parse(monomial)));
    return it == v.end() ? Poly() : it->second;
}

const FockVector vac = fock_unit(IndexTriple{});

}  // namespace

TEST_CASE("hc module action") {
    HcModule verma(HcModuleSpec::verma_symbolic());  // level k, eigenvalues a, b

    // a_1 b_{-1} |a,b> = level |a,b>   (single contraction)
    FockVector r = verma.act(A(1), unit_of("b[-1]"));
    CHECK(r.size() == 1);
    CHECK(coeff_of(r, "1") == pv(Var::k));

    // c_{1/2} c_{-1/2} |a,b> = level |a,b>
    r = verma.act(Cf(1), unit_of("c[-1/2]"));
    CHECK(coeff_of(r, "1") == pv(Var::k));

    // zero modes act by the eigenvalues
    CHECK(coeff_of(verma.act(A(0), vac), "1") == pv(Var::a));
    CHECK(coeff_of(verma.act(B(0), vac), "1") == pv(Var::b));

    // positive modes annihilate after commuting; b's never contract with b's
    CHECK(verma.act(B(1), unit_of("b[-1]")).empty());
    CHECK(coeff_of(verma.act(B(1), unit_of("a[-1]")), "1") == pv(Var::k));

    // fermionic sign: c_{3/2} (c_{-3/2} c_{-1/2}) = c_{-1/2}, passing no factor
    r = verma.act(Cf(3), unit_of("c[-3/2]c[-1/2]"));
    CHECK(coeff_of(r, "c[-1/2]") == pv(Var::k));
    // c_{1/2} (c_{-3/2} c_{-1/2}) = -c_{-3/2}: one anticommutation
    r = verma.act(Cf(1), unit_of("c[-3/2]c[-1/2]"));
    CHECK(coeff_of(r, "c[-3/2]") == Poly(Rational(-1)) * pv(Var::k));

    // whittaker: nonnegative modes act by phi after commuting
    HcModule wh(HcModuleSpec::whittaker_symbolic());
    r = wh.act(B(1), vac);
    CHECK(coeff_of(r, "1") == pv(Var::phi_b1));
    r = wh.act(A(2), vac);
    CHECK(r.empty());  // phi(a_2) = 0 in the standard profile
    r = wh.act(Cf(1), vac);
    CHECK(r.empty());  // phi vanishes on the odd part

    CHECK_THROWS_AS(verma.act(L(1), vac), std::invalid_argument);
}

TEST_CASE("free-field action on the Fock highest-weight vector") {
    FreeFieldRealization ffr(HcModuleSpec::verma(Poly(Rational(1)), pv(Var::a), pv(Var::b)),
                             FfrParams::symbolic());
    const Poly a = pv(Var::a), b = pv(Var::b), rho = pv(Var::rho);

    // L_0 |a,b> = (ab - rho a) |a,b>
    FockVector r = ffr.act(L(0), vac);
    CHECK(r.size() == 1);
    CHECK(coeff_of(r, "1") == a * b - rho * a);

    // M_0 |a,b> = (b^2/2 - rho b) |a,b>
    r = ffr.act(M(0), vac);
    CHECK(coeff_of(r, "1") == Poly(Rational(1, 2)) * b * b - rho * b);

    // the realization of Q_{-1/2} is a nonzero operator: Q_{-1/2}|a,b> = b c_{-1/2}|a,b>
    r = ffr.act(Q(-1), vac);
    CHECK(r.size() == 1);
    CHECK(coeff_of(r, "c[-1/2]") == b);

    // central charges
    CHECK(coeff_of(ffr.act(Generator(Family::C1, HalfInt{}), vac), "1") == Poly(Rational(5, 2)));
    CHECK(coeff_of(ffr.act(Generator(Family::C2, HalfInt{}), vac), "1") ==
          Poly(Rational(-12)) * rho * rho);

    CHECK_THROWS_AS(ffr.act(A(1), vac), std::invalid_argument);
}

TEST_CASE("free-field action shifts depth by minus the mode") {
    FreeFieldRealization ffr(HcModuleSpec::verma(Poly(Rational(1)), pv(Var::a), pv(Var::b)),
                             FfrParams::symbolic());
    for (long long tw = 0; tw <= 4; ++tw) {
        for (const auto& t : weight_basis(HalfInt(tw))) {
            for (const auto& g : {L(1), L(-2), M(0), M(2), Q(1), Q(-3)}) {
                for (const auto& [t2, c] : ffr.act(g, fock_unit(t)))
                    CHECK(t2.weight() == t.weight() - g.mode);
            }
        }
    }
}

TEST_CASE("commutator residuals vanish on small windows") {
    FreeFieldRealization verma(HcModuleSpec::verma(Poly(Rational(1)), pv(Var::a), pv(Var::b)),
                               FfrParams::symbolic());
    FreeFieldRealization wh(HcModuleSpec::whittaker_symbolic(), FfrParams::symbolic());
    const std::vector<std::pair<Generator, Generator>> pairs = {
        {L(1), L(-1)}, {Q(1), Q(-1)}, {M(1), M(-1)}, {L(2), M(-2)}, {L(1), Q(-1)},
        {Q(3), Q(-3)}, {L(-2), Q(3)}, {Q(1), Q(1)},
    };
    for (const auto& [x, y] : pairs) {
        ResidualReport r = commutator_residual(x, y, verma, HalfInt::whole(2));
        CHECK(r.all_zero);
        CHECK(r.max_residual_terms == 0);
        r = commutator_residual(x, y, wh, HalfInt::whole(2));
        CHECK(r.all_zero);
    }
    // level != 1 breaks the homomorphism: [L_1, L_{-1}] picks up the wrong
    // central contraction, a nonzero residual must be reported
    FreeFieldRealization off(HcModuleSpec::verma(Poly(Rational(2)), pv(Var::a), pv(Var::b)),
                             FfrParams::symbolic());
    ResidualReport bad = commutator_residual(L(1), L(-1), off, HalfInt::whole(1));
    CHECK_FALSE(bad.all_zero);
    CHECK(bad.max_residual_terms > 0);
}

TEST_CASE("fock highest-weight data") {
    WeightParams p = fock_hw_data(pv(Var::a), pv(Var::b), pv(Var::rho));
    CHECK(p.h1 == pv(Var::a) * pv(Var::b) - pv(Var::rho) * pv(Var::a));
    CHECK(p.h2 == Poly(Rational(1, 2)) * pv(Var::b) * pv(Var::b) - pv(Var::rho) * pv(Var::b));
    CHECK(p.c1 == Poly(Rational(5, 2)));
    CHECK(p.c2 == Poly(Rational(-12)) * pv(Var::rho) * pv(Var::rho));

    WeightParams n = fock_hw_data(Poly(Rational(1)), Poly(Rational(2)), Poly(Rational(1)));
    CHECK(n.h1 == Poly(Rational(1)));
    CHECK(n.h2 == Poly());
    CHECK(n.c2 == Poly(Rational(-12)));

    // character: Fock depth dimensions match the graded dimensions
    for (long long tw = 0; tw <= 8; ++tw)
        CHECK(fock_depth_dimension(HalfInt(tw)) == partition_count(HalfInt(tw)));
}

TEST_CASE("simplicity predicates") {
    CHECK(fock_simple(3, 0).simple);
    CHECK_FALSE(fock_simple(0, 0).simple);
    auto r = fock_simple(2, 1);
    CHECK_FALSE(r.simple);
    CHECK(r.violating_n == -1);  // b + (n-1) rho = 0 at n = -1
    CHECK(fock_simple(Rational(1, 2), 1).simple);
    CHECK(fock_simple(1, 1).simple);  // root n = 0 is excluded from Z*

    CHECK(hc_whittaker_simple(1));
    CHECK_FALSE(hc_whittaker_simple(0));

    CHECK(fock_whittaker_simple(1));
    CHECK_FALSE(fock_whittaker_simple(0));

    CHECK(bms_whittaker_simple(0, 3));
    CHECK(bms_whittaker_simple(2, 0));
    CHECK_FALSE(bms_whittaker_simple(0, 0));
}

TEST_CASE("whittaker action table reproduces the displayed identities") {
    auto table = whittaker_action_table(HcModuleSpec::whittaker_symbolic(), FfrParams::symbolic());
    std::map<std::string, FockVector> by_gen;
    for (const auto& [g, v] : table)
        by_gen[g.str()] = v;

    const Poly pa0 = pv(Var::phi_a0), pa1 = pv(Var::phi_a1);
    const Poly pb0 = pv(Var::phi_b0), pb1 = pv(Var::phi_b1);
    const Poly rho = pv(Var::rho);
    const Poly two_rho = Poly(Rational(2)) * rho;

    CHECK(coeff_of(by_gen.at("L[1]"), "1") == pa0 * pb1 + pa1 * pb0 - two_rho * pa1);
    CHECK(by_gen.at("L[1]").size() == 1);
    CHECK(coeff_of(by_gen.at("L[2]"), "1") == pa1 * pb1);
    CHECK(by_gen.at("L[3]").empty());
    CHECK(by_gen.at("L[4]").empty());
    CHECK(coeff_of(by_gen.at("M[1]"), "1") == (pb0 - two_rho) * pb1);
    CHECK(coeff_of(by_gen.at("M[2]"), "1") == Poly(Rational(1, 2)) * pb1 * pb1);
    CHECK(by_gen.at("M[3]").empty());
    CHECK(by_gen.at("M[4]").empty());
    CHECK(coeff_of(by_gen.at("Q[1/2]"), "c[-1/2]") == pb1);
    CHECK(by_gen.at("Q[1/2]").size() == 1);
    CHECK(by_gen.at("Q[3/2]").empty());
    CHECK(by_gen.at("Q[5/2]").empty());
    CHECK(coeff_of(by_gen.at("c1"), "1") == Poly(Rational(5, 2)));
    CHECK(coeff_of(by_gen.at("c2"), "1") == Poly(Rational(-12)) * rho * rho);

    CHECK_THROWS_AS(whittaker_action_table(HcModuleSpec::verma_symbolic(), FfrParams::symbolic()),
                    std::invalid_argument);
}

TEST_CASE("fock modules match Verma modules with the induced weights") {
    // (a, b, rho) = (1, 2, 1): h2 = 0, so the i = 1 factor vanishes and the
    // level-1/2 Gram matrix degenerates; fock_simple flags n = -1.
    auto fs = fock_simple(2, 1);
    CHECK_FALSE(fs.simple);
    WeightParams p = fock_hw_data(Poly(Rational(1)), Poly(Rational(2)), Poly(Rational(1)));
    GramData d = gram_data(HalfInt(1), p);
    CHECK(d.gram.at(0, 0).is_zero());

    // (a, b, rho) = (1, 1/2, 1): simple, Gram matrices of full rank, levels <= 2
    CHECK(fock_simple(Rational(1, 2), 1).simple);
    WeightParams ps = fock_hw_data(Poly(Rational(1)), Poly(Rational(1, 2)), Poly(Rational(1)));
    auto rs = verma_simple(ps.h2.constant_value(), ps.c2.constant_value(), 20);
    CHECK(rs.simple);
    for (long long tw = 1; tw <= 4; ++tw) {
        GramData dd = gram_data(HalfInt(tw), ps);
        RatMatrix m(dd.basis.size(), std::vector<Rational>(dd.basis.size()));
        for (std::size_t i = 0; i < dd.basis.size(); ++i)
            for (std::size_t j = 0; j < dd.basis.size(); ++j)
                m[i][j] = dd.gram.at(i, j).constant_value();
        CHECK(rat_rank(m) == dd.basis.size());
    }
}

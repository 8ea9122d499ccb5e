#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bms/pbw.hpp"

#include <algorithm>
#include <random>

using namespace bms;

namespace {

Generator L(long long n) { return Generator(Family::L, HalfInt::whole(n)); }
Generator M(long long n) { return Generator(Family::M, HalfInt::whole(n)); }
Generator Q(long long twice) { return Generator(Family::Q, HalfInt(twice)); }

IndexTriple triple(std::vector<int> l, std::vector<int> m, std::vector<char> q) {
    IndexTriple t;
    t.l = std::move(l);
    t.m = std::move(m);
    t.q = std::move(q);
    t.normalize();
    return t;
}

Poly coeff_of(const UEAElement& e, const std::string& monomial) {
    auto it = e.find(monomial_parse(monomial));
    return it == e.end() ? Poly() : it->second;
}

std::vector<std::string> basis_strings(HalfInt n) {
    std::vector<std::string> out;
    for (const auto& t : weight_basis(n))
        out.push_back(monomial_str(bms_lowering_word(t)));
    return out;
}

// Total (1/2)Z-degree and parity of a word.
std::pair<long long, int> word_degree_parity(const Word& w) {
    long long twice = 0;
    int parity = 0;
    for (const auto& g : w) {
        twice += g.mode.twice;
        parity ^= g.odd() ? 1 : 0;
    }
    return {twice, parity};
}

Word random_word(std::mt19937_64& rng, int max_len) {
    std::uniform_int_distribution<int> len(1, max_len);
    std::uniform_int_distribution<int> fam(0, 2);
    std::uniform_int_distribution<int> imode(-4, 4);
    std::uniform_int_distribution<int> qmode(-4, 3);
    Word w;
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
        switch (fam(rng)) {
            case 0: w.push_back(L(imode(rng))); break;
            case 1: w.push_back(M(imode(rng))); break;
            default: w.push_back(Q(2 * qmode(rng) + 1)); break;
        }
    }
    return w;
}

}  // namespace

TEST_CASE("index triple weight and star dual") {
    IndexTriple t = triple({1, 0}, {0, 1}, {1, 0});          // M_{-2} L_{-1} Q_{-1/2}
    CHECK(t.weight() == HalfInt(7));                          // 1 + 2 + 1/2
    CHECK(star_dual(star_dual(t)) == t);
    CHECK(star_dual(t).weight() == t.weight());

    // M_{-1} L_{-1} is self-dual; M_{-1}^2 <-> L_{-1}^2; the odd part is fixed
    CHECK(star_dual(triple({1}, {1}, {})) == triple({1}, {1}, {}));
    CHECK(star_dual(triple({}, {2}, {})) == triple({2}, {}, {}));
    CHECK(star_dual(triple({}, {}, {1, 1})) == triple({}, {}, {1, 1}));
}

TEST_CASE("weight basis reproduces the listed bases") {
    CHECK(basis_strings(HalfInt::whole(0)) == std::vector<std::string>{"1"});
    CHECK(basis_strings(HalfInt(1)) == std::vector<std::string>{"Q[-1/2]"});
    CHECK(basis_strings(HalfInt::whole(1)) == std::vector<std::string>{"M[-1]", "L[-1]"});
    CHECK(basis_strings(HalfInt(3)) ==
          std::vector<std::string>{"Q[-1/2]M[-1]", "Q[-3/2]", "Q[-1/2]L[-1]"});
    CHECK(basis_strings(HalfInt::whole(2)) ==
          std::vector<std::string>{"M[-1]^2", "M[-2]", "M[-1]L[-1]", "Q[-3/2]Q[-1/2]", "L[-2]",
                                   "L[-1]^2"});
    CHECK(weight_basis(HalfInt(-2)).empty());
}

TEST_CASE("partition count matches enumeration") {
    CHECK(partition_count(HalfInt::whole(0)) == 1);
    CHECK(partition_count(HalfInt::whole(2)) == 6);
    // independent oracle: exhaustive enumeration of triples of weight 3
    CHECK(weight_basis(HalfInt::whole(3)).size() == 13);
    CHECK(partition_count(HalfInt::whole(3)) == 13);
    for (long long twice = 0; twice <= 12; ++twice)
        CHECK(partition_count(HalfInt(twice)) ==
              static_cast<long long>(weight_basis(HalfInt(twice)).size()));
    CHECK(partition_count(HalfInt(-1)) == 0);
}

TEST_CASE("order examples") {
    // principal order: M_{-2} > M_{-1} L_{-1} (larger |j|)
    CHECK(compare(OrderTag::principal_sn, triple({}, {0, 1}, {}), triple({1}, {1}, {})) ==
          std::strong_ordering::greater);
    // lex: (...,0,2,1) vs (...,0,1,3): decided at the highest differing slot
    CHECK(compare(OrderTag::lex_gt, std::vector<int>{1, 2}, std::vector<int>{3, 1}) ==
          std::strong_ordering::greater);
    // revlex: decided at the lowest differing slot
    CHECK(compare(OrderTag::revlex, std::vector<int>{1, 2}, std::vector<int>{3, 1}) ==
          std::strong_ordering::less);
    // induced order: shorter comes first
    CHECK(compare(OrderTag::principal_induced, triple({1}, {}, {}), triple({2}, {}, {})) ==
          std::strong_ordering::less);
    CHECK_THROWS_AS(compare(OrderTag::principal_sn, std::vector<int>{}, std::vector<int>{}),
                    std::invalid_argument);
    CHECK_THROWS_AS(compare(OrderTag::lex_gt, IndexTriple{}, IndexTriple{}),
                    std::invalid_argument);
}

TEST_CASE("orders are total on weight bases") {
    for (long long twice = 0; twice <= 6; ++twice) {
        auto basis = weight_basis(HalfInt(twice));
        for (OrderTag tag : {OrderTag::principal_sn, OrderTag::principal_induced}) {
            for (const auto& x : basis) {
                CHECK(compare(tag, x, x) == std::strong_ordering::equal);
                for (const auto& y : basis) {
                    auto xy = compare(tag, x, y);
                    auto yx = compare(tag, y, x);
                    if (x == y) {
                        CHECK(xy == std::strong_ordering::equal);
                    } else {
                        CHECK(xy != std::strong_ordering::equal);  // total
                        CHECK((xy == std::strong_ordering::less) ==
                              (yx == std::strong_ordering::greater));  // antisymmetric
                    }
                    for (const auto& z : basis) {  // transitive
                        if (xy == std::strong_ordering::less &&
                            compare(tag, y, z) == std::strong_ordering::less)
                            CHECK(compare(tag, x, z) == std::strong_ordering::less);
                    }
                }
            }
        }
    }
}

TEST_CASE("star dual permutes each weight basis") {
    for (long long twice = 0; twice <= 8; ++twice) {
        auto basis = weight_basis(HalfInt(twice));
        std::vector<IndexTriple> image;
        for (const auto& t : basis)
            image.push_back(star_dual(t));
        std::sort(image.begin(), image.end());
        std::vector<IndexTriple> sorted = basis;
        std::sort(sorted.begin(), sorted.end());
        CHECK(image == sorted);
    }
}

TEST_CASE("normal form examples") {
    // L_1 L_{-1} = L_{-1} L_1 + 2 L_0
    UEAElement nf = normal_form(Word{L(1), L(-1)});
    CHECK(coeff_of(nf, "L[-1]L[1]") == Poly(Rational(1)));
    CHECK(coeff_of(nf, "L[0]") == Poly(Rational(2)));
    CHECK(nf.size() == 2);

    // odd square: Q_{-1/2} Q_{-1/2} = M_{-1}
    nf = normal_form(Word{Q(-1), Q(-1)});
    CHECK(nf.size() == 1);
    CHECK(coeff_of(nf, "M[-1]") == Poly(Rational(1)));

    // L_1 M_{-1} M_{-1} = M_{-1}^2 L_1 + 4 M_{-1} M_0
    nf = normal_form(Word{L(1), M(-1), M(-1)});
    CHECK(coeff_of(nf, "M[-1]^2L[1]") == Poly(Rational(1)));
    CHECK(coeff_of(nf, "M[-1]M[0]") == Poly(Rational(4)));
    CHECK(nf.size() == 2);

    // already canonical stays put
    nf = normal_form(Word{Q(-3), Q(-1), M(-2), L(-1), L(-1)});
    CHECK(nf.size() == 1);
    CHECK(coeff_of(nf, "Q[-3/2]Q[-1/2]M[-2]L[-1]^2") == Poly(Rational(1)));
}

TEST_CASE("normal form is confluent and preserves degree and parity") {
    std::mt19937_64 rng(123456);
    int checked = 0;
    while (checked < 200) {
        Word w = random_word(rng, 5);
        auto [deg, par] = word_degree_parity(w);
        UEAElement left = normal_form(w, Poly(Rational(1)), RewriteStrategy::leftmost);
        UEAElement right = normal_form(w, Poly(Rational(1)), RewriteStrategy::rightmost);
        CHECK(left == right);
        for (const auto& [word, c] : left) {
            CHECK(is_canonical(word));
            auto [d2, p2] = word_degree_parity(word);
            CHECK(d2 == deg);
            CHECK(p2 == par);
        }
        ++checked;
    }
}

TEST_CASE("anti-involution on words is an anti-homomorphism") {
    CHECK(anti_involution_word(monomial_parse("Q[-3/2]M[-2]L[1]")) ==
          monomial_parse("L[-1]M[2]Q[3/2]"));
    // omega commutes with normal ordering: nf(omega(w)) = omega(nf(w))
    std::mt19937_64 rng(2025);
    for (int rep = 0; rep < 60; ++rep) {
        Word w = random_word(rng, 4);
        UEAElement lhs = normal_form(anti_involution_word(w));
        UEAElement rhs = anti_involution(normal_form(w));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("monomial text round trip") {
    for (const auto& text : {"1", "Q[-3/2]Q[-1/2]M[-2]L[-1]^2", "L[-1]^3", "M[-4]", "Q[-5/2]",
                             "a[-2]b[-1]^2c[-1/2]", "c[-3/2]c[-1/2]"}) {
        CHECK(monomial_str(monomial_parse(text)) == text);
    }
    CHECK_THROWS_AS(monomial_parse("L[2"), std::invalid_argument);
    CHECK_THROWS_AS(monomial_parse("L[-1]^"), std::invalid_argument);

    // triple -> word -> triple round trip, both algebras
    std::mt19937_64 rng(77);
    for (long long twice = 0; twice <= 8; ++twice) {
        for (const auto& t : weight_basis(HalfInt(twice))) {
            CHECK(triple_from_word(bms_lowering_word(t)) == t);
            CHECK(triple_from_word(hc_lowering_word(t)) == t);
            CHECK(monomial_parse(monomial_str(bms_lowering_word(t))) == bms_lowering_word(t));
        }
    }
}

#pragma once

#include "bms/algebra.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace bms {

/// Exponent data of a canonical lowering monomial Q^q M^m L^l (resp.
/// c^q b^m a^l on the Heisenberg-Clifford side). Index p of each vector
/// refers to mode -(p+1) for the integer families and -(2p+1)/2 for the odd
/// family; the odd exponents are 0/1. Trailing zeros are never stored.
struct IndexTriple {
    std::vector<int> l;   // exponents of L_{-1}, L_{-2}, ...   (a_{-n} for hc)
    std::vector<int> m;   // exponents of M_{-1}, M_{-2}, ...   (b_{-n} for hc)
    std::vector<char> q;  // occupancy of Q_{-1/2}, Q_{-3/2}, ... (c_{-r} for hc)

    void normalize();
    HalfInt weight() const;
    bool empty() const { return l.empty() && m.empty() && q.empty(); }

    friend auto operator<=>(const IndexTriple&, const IndexTriple&) = default;
};

/// Swaps the L- and M-exponent vectors (the star dual u -> u*). An involution
/// preserving the weight.
IndexTriple star_dual(const IndexTriple& t);

/// Number of weight-n basis monomials: the coefficient of q^n in
/// prod_{k in N+1/2}(1+q^k) / prod_{k>=1}(1-q^k)^2, by series multiplication.
long long partition_count(HalfInt n);

/// All index triples of weight n, sorted descending by the principal total
/// order (largest first, matching the listed bases S_n). Empty for n < 0.
std::vector<IndexTriple> weight_basis(HalfInt n);

// ---- total orders -------------------------------------------------------

enum class OrderTag : std::uint8_t {
    lex_gt,             // compare at the highest differing position
    revlex,             // compare at the lowest differing position
    principal_sn,       // the order sorting S_n
    principal_induced,  // the length-first order on triples
};

/// Compares exponent vectors under lex_gt or revlex. `greater` means greater
/// in the order's own sense. Throws on a triple-valued tag.
std::strong_ordering compare(OrderTag tag, const std::vector<int>& x, const std::vector<int>& y);

/// Compares index triples under principal_sn or principal_induced.
std::strong_ordering compare(OrderTag tag, const IndexTriple& x, const IndexTriple& y);

// ---- enveloping-algebra words -------------------------------------------

/// A word in U(g): generators multiplied left to right.
using Word = std::vector<Generator>;

/// Element of the enveloping algebra in (or en route to) PBW canonical form.
using UEAElement = std::map<Word, Poly>;

/// Canonical position of a generator inside a PBW word: words sorted
/// ascending by this key are canonical. Lowering block (negative modes,
/// families Q<M<L resp. a<b<c... with modes ascending), then the degree-zero
/// block, then the raising block with modes descending.
struct PbwPos {
    int part;
    int fam_rank;
    long long mode_key;
    friend auto operator<=>(const PbwPos&, const PbwPos&) = default;
};
PbwPos pbw_pos(const Generator& g);

/// True if the word is in PBW canonical form (nondecreasing positions, no
/// repeated odd generator).
bool is_canonical(const Word& w);

/// Which adjacent violation the rewriter resolves first. The result is the
/// same either way (the canonical form is unique); the knob exists so the
/// confluence tests can drive both strategies.
enum class RewriteStrategy : std::uint8_t { leftmost, rightmost };

/// Rewrites a word (or a combination of words) into the unique PBW canonical
/// form, using the structure constants to swap adjacent out-of-order factors
/// and replacing odd squares x^2 by (1/2)[x,x].
UEAElement normal_form(const Word& w, const Poly& coeff = Poly(Rational(1)),
                       RewriteStrategy strategy = RewriteStrategy::leftmost);
UEAElement normal_form(const UEAElement& x);

void uea_add(UEAElement& dst, const Word& w, const Poly& c);

/// The anti-involution extended to enveloping-algebra words as an
/// anti-homomorphism: bar each factor and reverse the word. On combinations
/// the result is re-normal-ordered.
Word anti_involution_word(const Word& w);
UEAElement anti_involution(const UEAElement& x);

/// The canonical lowering word of an index triple: Q-block, M-block, L-block,
/// each with |mode| decreasing left to right.
Word bms_lowering_word(const IndexTriple& t);
/// Heisenberg-Clifford counterpart: a-block, b-block, c-block.
Word hc_lowering_word(const IndexTriple& t);

/// Inverse of the word builders; requires a canonical lowering word.
IndexTriple triple_from_word(const Word& w);

/// Text form of a monomial word, e.g. "Q[-3/2]Q[-1/2]M[-2]L[-1]^2"; "1" when
/// empty. Round-trips bit-exactly through monomial_parse.
std::string monomial_str(const Word& w);
Word monomial_parse(const std::string& s);

}  // namespace bms

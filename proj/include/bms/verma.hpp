#pragma once

#include "bms/linalg.hpp"
#include "bms/pbw.hpp"

#include <map>
#include <vector>

namespace bms {

/// Highest-weight data (h1, h2, c1, c2). Each entry is a polynomial: the
/// matching variable for a symbolic weight, a constant for a numeric one;
/// mixed profiles are fine.
struct WeightParams {
    Poly h1, h2, c1, c2;

    static WeightParams symbolic();
    static WeightParams numeric(const Rational& h1v, const Rational& h2v, const Rational& c1v,
                                const Rational& c2v);
    bool is_numeric() const;
};

/// Element of the Verma module: Poly-linear combination of basis monomials
/// Q^q M^m L^l (x) 1.
using VermaVector = std::map<IndexTriple, Poly>;

void verma_add(VermaVector& dst, const IndexTriple& t, const Poly& c);
VermaVector verma_unit(const IndexTriple& t);

/// Verma module with fixed weight data. Caches single-generator actions on
/// basis monomials, so Gram-matrix fills share work.
class VermaModule {
  public:
    explicit VermaModule(WeightParams params) : params_(std::move(params)) {}

    const WeightParams& params() const { return params_; }

    /// Module action of a single generator / word / enveloping element:
    /// normal-order, kill raising operators on 1, evaluate the Cartan part.
    VermaVector act(const Generator& g, const VermaVector& v) const;
    VermaVector act(const Word& w, const VermaVector& v) const;
    VermaVector act(const UEAElement& x, const VermaVector& v) const;

    /// The contravariant form <u, v>: coefficient of 1 in the action of the
    /// reversed bar word of u on v.
    Poly form(const VermaVector& u, const VermaVector& v) const;

  private:
    VermaVector act_monomial(const Generator& g, const IndexTriple& t) const;

    WeightParams params_;
    mutable std::map<std::pair<Generator, IndexTriple>, VermaVector> memo_;
};

/// Level-n Gram data: the basis S_n, the Gram matrix <b_i, b_j>, and the
/// matrix D_n = <b_i, b_j*> whose columns run over the star-dual basis.
struct GramData {
    HalfInt level;
    std::vector<IndexTriple> basis;
    PolyMatrix gram;
    PolyMatrix dmat;

    /// Sign of the permutation sending the basis to its star dual, so
    /// det(gram) = star_sign() * det(dmat).
    int star_sign() const;
};

GramData gram_data(HalfInt n, const WeightParams& params);

/// Simplicity of the Verma module M(h1, h2, c1, c2): the module is simple iff
/// h2 + (i^2-1)/24 c2 != 0 for every positive integer i.
struct VermaSimplicity {
    bool simple;
    std::vector<long long> violations;  // violating i, ascending
    bool exhaustive;                    // true when `violations` lists every violating i
};

/// For c2 != 0 the root check is closed-form over all of Z_+; for c2 == 0 the
/// criterion degenerates to h2 != 0 (reported over [1, max_i] when h2 == 0).
VermaSimplicity verma_simple(const Rational& h2, const Rational& c2, long long max_i);

/// The vacuum module is simple iff c2 != 0.
bool vacuum_simple(const Rational& c2);

/// Basis of the space of weight-n singular vectors (killed by L_m, M_m,
/// Q_{m-1/2} for 1 <= m <= mode_cutoff). Requires numeric params and
/// mode_cutoff >= n + 1, which makes the computed space exact.
std::vector<VermaVector> singular_vectors(HalfInt n, const WeightParams& params,
                                          long long mode_cutoff);

/// The diagonal-entry product displayed in the triangularity lemma, taken
/// verbatim. Compared against the computed diagonal by diagonal_report; the
/// two are known to disagree on some entries, which the report flags.
Poly lemma_display_diagonal(const IndexTriple& t);

struct DiagonalEntryReport {
    IndexTriple monomial;
    Poly computed;
    Poly displayed;
    bool match;
};

std::vector<DiagonalEntryReport> diagonal_report(const GramData& data);

std::string verma_vector_str(const VermaVector& v);

}  // namespace bms

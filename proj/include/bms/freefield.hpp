#pragma once

#include "bms/pbw.hpp"
#include "bms/verma.hpp"

#include <map>
#include <optional>
#include <vector>

namespace bms {

/// A Heisenberg-Clifford module with a distinguished cyclic vector: either a
/// Verma module M_hc(level, a, b) or a Whittaker module W_hc(phi).
/// Whittaker character values are stored for a_i, b_i (i >= 0) and k; the
/// values on c_r (r > 0) are identically zero.
struct HcModuleSpec {
    enum class Kind { Verma, Whittaker };
    Kind kind = Kind::Verma;

    // Verma data
    Poly level{Rational(1)};
    Poly a0, b0;

    // Whittaker data
    std::map<std::pair<Family, long long>, Poly> phi;  // keys (Family::A|B, mode >= 0)
    Poly phi_k;

    static HcModuleSpec verma(Poly level, Poly a0, Poly b0);
    static HcModuleSpec verma_symbolic();  // level k, eigenvalues a, b
    static HcModuleSpec whittaker(Poly pa0, Poly pa1, Poly pb0, Poly pb1, Poly pk);
    /// phi(a_0), phi(a_1), phi(b_0), phi(b_1) symbolic; phi(k) = 1.
    static HcModuleSpec whittaker_symbolic();

    /// Scalar by which a nonnegative-mode generator (or k) acts on the cyclic
    /// vector. Zero-mode and positive-mode actions both route through here.
    Poly cyclic_scalar(const Generator& g) const;

    /// Largest mode with a nonzero character value (0 for Verma modules);
    /// bounds the truncation windows.
    long long max_phi_mode() const;
};

/// Element of the Fock/Whittaker module: Poly-linear combination of canonical
/// monomials in negative modes applied to the cyclic vector. The IndexTriple
/// fields map as l <-> a-exponents, m <-> b-exponents, q <-> c-occupancy.
using FockVector = std::map<IndexTriple, Poly>;

void fock_add(FockVector& dst, const IndexTriple& t, const Poly& c);
FockVector fock_unit(const IndexTriple& t);
std::string fock_vector_str(const FockVector& v);

/// Action of the Heisenberg-Clifford algebra on the module.
class HcModule {
  public:
    explicit HcModule(HcModuleSpec spec) : spec_(std::move(spec)) {}
    const HcModuleSpec& spec() const { return spec_; }

    FockVector act(const Generator& g, const FockVector& v) const;

  private:
    FockVector act_monomial(const Generator& g, const IndexTriple& t) const;

    HcModuleSpec spec_;
    mutable std::map<std::pair<Generator, IndexTriple>, FockVector> memo_;
};

/// Deformation parameter of the realization; central charges come out as
/// (5/2, -12 rho^2).
struct FfrParams {
    Poly rho;
    static FfrParams symbolic() { return {Poly::variable(Var::rho)}; }
};

/// The free-field realization: BMS mode operators acting on a
/// Heisenberg-Clifford module through normal-ordered quadratic expressions
///   L_n = sum_m :a_m b_{n-m}: - (n+1) rho a_n - 1/2 sum_s (s+1/2) :c_s c_{n-s}:
///   M_n = 1/2 sum_m b_m b_{n-m} - (n+1) rho b_n
///   Q_r = sum_s :b_{r-s} c_s: - 2 (r+1/2) rho c_r
///   c1 -> 5/2,  c2 -> -12 rho^2
/// with each sum truncated to the finite window that can act nonzero.
class FreeFieldRealization {
  public:
    FreeFieldRealization(HcModuleSpec spec, FfrParams params)
        : module_(std::move(spec)), rho_(std::move(params.rho)) {}

    const HcModule& module() const { return module_; }
    const Poly& rho() const { return rho_; }

    FockVector act(const Generator& bms_gen, const FockVector& v) const;

  private:
    FockVector act_monomial(const Generator& bms_gen, const IndexTriple& t) const;

    HcModule module_;
    Poly rho_;
    mutable std::map<std::pair<Generator, IndexTriple>, FockVector> memo_;
};

/// Residual of one commutation relation on all monomials of depth <= cutoff:
/// ffr(x)ffr(y)v -+ ffr(y)ffr(x)v - ffr([x,y])v, expected identically zero.
struct ResidualReport {
    Generator x;
    Generator y;
    HalfInt cutoff;
    std::size_t vectors_checked = 0;
    bool all_zero = true;
    std::size_t max_residual_terms = 0;
    FockVector max_residual;                  // largest offender, empty when all zero
    std::optional<IndexTriple> worst_vector;  // basis vector it occurred on
};

ResidualReport commutator_residual(const Generator& x, const Generator& y,
                                   const FreeFieldRealization& ffr, HalfInt degree_cutoff);

/// Highest-weight data of the Fock module F(a, b, rho):
/// (h1, h2, c1, c2) = (ab - rho a, b^2/2 - rho b, 5/2, -12 rho^2).
WeightParams fock_hw_data(const Poly& a, const Poly& b, const Poly& rho);

/// Dimension of the depth-n subspace of the Fock module (equals the graded
/// dimension p(n) of the Verma module).
long long fock_depth_dimension(HalfInt n);

// ---- simplicity predicates ------------------------------------------------

struct FockSimplicity {
    bool simple;
    std::optional<long long> violating_n;  // a nonzero integer n with b + (n-1) rho = 0
};

/// Fock module F(a, b, rho): simple iff b + (n-1) rho != 0 for all nonzero
/// integers n (closed-form root check).
FockSimplicity fock_simple(const Rational& b, const Rational& rho);

/// Whittaker hc-module: simple iff phi(k) != 0.
bool hc_whittaker_simple(const Rational& phi_k);

/// Fock-Whittaker module over the BMS superalgebra: simple iff phi(b_1) != 0.
bool fock_whittaker_simple(const Rational& phi_b1);

/// Universal Whittaker module W(phi_k): simple iff phi_k(M_{2k}) != 0 or
/// phi_k(M_{2k-1}) != 0.
bool bms_whittaker_simple(const Rational& phi_m_2k, const Rational& phi_m_2k_minus_1);

/// Action of the listed BMS generators on the Whittaker cyclic vector,
/// computed through the realization. The table reproduces the displayed
/// closed forms (L_1, L_2, L_{i>=3}, M_1, M_2, M_{i>=3}, Q_{1/2}, Q_{r>=3/2},
/// c1, c2).
std::vector<std::pair<Generator, FockVector>> whittaker_action_table(const HcModuleSpec& spec,
                                                                     const FfrParams& params);

}  // namespace bms

#pragma once

#include "bms/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace bms {

/// The fixed, globally ordered variable list of the coefficient ring. Every
/// scalar the library manipulates (weights, central charges, the deformation
/// parameter, Fock eigenvalues, Whittaker character values) is a polynomial
/// in these variables over Q.
enum class Var : std::uint8_t {
    h1, h2, c1, c2, rho, a, b, k, phi_a0, phi_a1, phi_b0, phi_b1
};

inline constexpr std::size_t kNumVars = 12;

const std::array<std::string, kNumVars>& var_names();
std::optional<Var> var_from_name(const std::string& name);

/// Exponent vector over the fixed variable list.
using ExpVec = std::array<std::uint16_t, kNumVars>;

/// Graded-lexicographic term order, leading term first (descending).
struct GrlexDesc {
    bool operator()(const ExpVec& x, const ExpVec& y) const {
        unsigned dx = 0, dy = 0;
        for (std::size_t v = 0; v < kNumVars; ++v) {
            dx += x[v];
            dy += y[v];
        }
        if (dx != dy)
            return dx > dy;
        for (std::size_t v = 0; v < kNumVars; ++v)
            if (x[v] != y[v])
                return x[v] > y[v];
        return false;
    }
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Invariants: no zero coefficient is ever stored; terms are kept in
/// graded-lex order, which fixes the serialization.
class Poly {
  public:
    using TermMap = std::map<ExpVec, Rational, GrlexDesc>;

    Poly() = default;
    Poly(const Rational& c);          // NOLINT: implicit constant promotion is intended
    Poly(long long c) : Poly(Rational(c)) {}
    static Poly variable(Var v);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value of a constant polynomial (0 for the zero polynomial).
    Rational constant_value() const;

    const TermMap& terms() const { return terms_; }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly x, const Poly& y) { return x += y; }
    friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
    friend Poly operator*(const Poly& x, const Poly& y);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly operator-() const;
    friend bool operator==(const Poly& x, const Poly& y) { return x.terms_ == y.terms_; }
    friend bool operator!=(const Poly& x, const Poly& y) { return !(x == y); }

    Poly pow(unsigned e) const;

    bool uses(Var v) const;
    unsigned total_degree() const;

    /// Exact evaluation. The assignment must cover every variable occurring
    /// in the polynomial; a missing variable raises std::invalid_argument
    /// naming it.
    Rational eval(const std::map<Var, Rational>& assignment) const;

    /// Substitutes polynomials for variables (used to specialize symbolic
    /// weights). Variables absent from the map are left alone.
    Poly subst(const std::map<Var, Poly>& assignment) const;

    /// The quotient *this / d when d divides exactly, std::nullopt otherwise.
    std::optional<Poly> divide_exact(const Poly& d) const;

    /// Canonical text form, e.g. "4*h2^2-3*c1+5/2"; "0" for zero.
    std::string str() const;
    /// Parses the canonical text form (also accepts redundant "+x" leading sign).
    static Poly parse(const std::string& s);

    void add_term(const ExpVec& e, const Rational& c);

  private:
    TermMap terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return Poly(c) * p; }

}  // namespace bms

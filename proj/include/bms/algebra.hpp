#pragma once

#include "bms/halfint.hpp"
#include "bms/poly.hpp"

#include <compare>
#include <map>
#include <string>

namespace bms {

enum class Algebra : std::uint8_t { BMS, HC };

/// Generator families: L, M, Q and the central charges c1, c2 span the N=1
/// BMS superalgebra; a, b, c and the central element k span Heisenberg-Clifford.
enum class Family : std::uint8_t { L, M, Q, C1, C2, A, B, C, K };

bool family_is_central(Family f);
Algebra family_algebra(Family f);

/// A single mode generator, e.g. L_{-2}, Q_{3/2}, a_1, c2.
/// Central families carry mode 0.
struct Generator {
    Family fam;
    HalfInt mode;

    Generator(Family f, HalfInt m);
    static Generator parse(const std::string& text);

    Algebra algebra() const { return family_algebra(fam); }
    bool is_central() const { return family_is_central(fam); }
    /// Odd exactly for the Q and c families.
    bool odd() const { return fam == Family::Q || fam == Family::C; }
    /// The (1/2)Z-degree under ad L_0 (resp. the hc grading); 0 for centrals.
    HalfInt degree() const { return mode; }

    /// "L[-2]", "Q[-3/2]", "a[1]", "c[1/2]", "c1", "c2", "k".
    std::string str() const;

    friend auto operator<=>(const Generator& x, const Generator& y) = default;
};

/// Degree and parity of a generator: (mode index, parity bit).
std::pair<HalfInt, bool> degree_parity(const Generator& g);

/// Finite Poly-linear combination of generators.
using AlgebraElement = std::map<Generator, Poly>;

void elem_add(AlgebraElement& dst, const Generator& g, const Poly& c);
AlgebraElement elem_scale(const AlgebraElement& x, const Poly& c);

/// The super-bracket [x, y] from the defining structure constants
/// (anticommutator when both arguments are odd). Central terms included.
/// Throws if the generators belong to different algebras.
AlgebraElement bracket(const Generator& x, const Generator& y);

/// Bilinear extension.
AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);

/// The anti-involution L_n -> L_{-n}, M_n -> M_{-n}, Q_r -> Q_{-r},
/// c1 -> c1, c2 -> c2. Defined only on the BMS side.
Generator anti_involution(const Generator& g);
AlgebraElement anti_involution(const AlgebraElement& x);

}  // namespace bms

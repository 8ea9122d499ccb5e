#include "bms/algebra.hpp"

#include <stdexcept>

namespace bms {

bool family_is_central(Family f) {
    return f == Family::C1 || f == Family::C2 || f == Family::K;
}

Algebra family_algebra(Family f) {
    switch (f) {
        case Family::L:
        case Family::M:
        case Family::Q:
        case Family::C1:
        case Family::C2:
            return Algebra::BMS;
        default:
            return Algebra::HC;
    }
}

Generator::Generator(Family f, HalfInt m) : fam(f), mode(m) {
    const bool half_odd = !m.is_integer();
    switch (f) {
        case Family::L:
        case Family::M:
        case Family::A:
        case Family::B:
            if (half_odd)
                throw std::invalid_argument("Generator: integer-mode family with half-odd index " + m.str());
            break;
        case Family::Q:
        case Family::C:
            if (!half_odd)
                throw std::invalid_argument("Generator: half-odd family with integer index " + m.str());
            break;
        case Family::C1:
        case Family::C2:
        case Family::K:
            if (!m.is_zero())
                throw std::invalid_argument("Generator: central element with nonzero index");
            break;
    }
}

std::string Generator::str() const {
    switch (fam) {
        case Family::C1: return "c1";
        case Family::C2: return "c2";
        case Family::K: return "k";
        case Family::L: return "L[" + mode.str() + "]";
        case Family::M: return "M[" + mode.str() + "]";
        case Family::Q: return "Q[" + mode.str() + "]";
        case Family::A: return "a[" + mode.str() + "]";
        case Family::B: return "b[" + mode.str() + "]";
        case Family::C: return "c[" + mode.str() + "]";
    }
    throw std::logic_error("Generator::str: bad family");
}

Generator Generator::parse(const std::string& text) {
    if (text == "c1")
        return Generator(Family::C1, HalfInt());
    if (text == "c2")
        return Generator(Family::C2, HalfInt());
    if (text == "k")
        return Generator(Family::K, HalfInt());
    if (text.size() < 4 || text[1] != '[' || text.back() != ']')
        throw std::invalid_argument("Generator::parse: malformed generator '" + text + "'");
    Family fam;
    switch (text[0]) {
        case 'L': fam = Family::L; break;
        case 'M': fam = Family::M; break;
        case 'Q': fam = Family::Q; break;
        case 'a': fam = Family::A; break;
        case 'b': fam = Family::B; break;
        case 'c': fam = Family::C; break;
        default:
            throw std::invalid_argument("Generator::parse: unknown family in '" + text + "'");
    }
    HalfInt mode = HalfInt::parse(text.substr(2, text.size() - 3));
    return Generator(fam, mode);
}

std::pair<HalfInt, bool> degree_parity(const Generator& g) {
    return {g.degree(), g.odd()};
}

void elem_add(AlgebraElement& dst, const Generator& g, const Poly& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = dst.emplace(g, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            dst.erase(it);
    }
}

AlgebraElement elem_scale(const AlgebraElement& x, const Poly& c) {
    AlgebraElement out;
    for (const auto& [g, co] : x)
        elem_add(out, g, co * c);
    return out;
}

namespace {

Rational half(long long twice) { return Rational(twice, 2); }

// (m^3 - m)/12 for the c1/c2 cocycles.
Rational virasoro_cocycle(long long m) { return Rational(m * m * m - m, 12); }

}  // namespace

AlgebraElement bracket(const Generator& x, const Generator& y) {
    if (x.algebra() != y.algebra())
        throw std::invalid_argument("bracket: generators from different algebras: " + x.str() +
                                    ", " + y.str());
    AlgebraElement out;
    if (x.is_central() || y.is_central())
        return out;

    const Family fx = x.fam, fy = y.fam;
    const HalfInt mx = x.mode, my = y.mode;
    const HalfInt sum = mx + my;

    auto add = [&out](Generator g, const Rational& c) { elem_add(out, g, Poly(c)); };

    if (x.algebra() == Algebra::BMS) {
        if (fx == Family::L && fy == Family::L) {
            add(Generator(Family::L, sum), half(mx.twice - my.twice));
            if (sum.is_zero())
                add(Generator(Family::C1, HalfInt()), virasoro_cocycle(mx.as_integer()));
        } else if (fx == Family::L && fy == Family::M) {
            add(Generator(Family::M, sum), half(mx.twice - my.twice));
            if (sum.is_zero())
                add(Generator(Family::C2, HalfInt()), virasoro_cocycle(mx.as_integer()));
        } else if (fx == Family::M && fy == Family::L) {
            return elem_scale(bracket(y, x), Poly(Rational(-1)));
        } else if (fx == Family::Q && fy == Family::Q) {
            add(Generator(Family::M, sum), 2);
            if (sum.is_zero()) {
                // (1/3)(r^2 - 1/4) with r = mx: equals (twice^2 - 1)/12
                add(Generator(Family::C2, HalfInt()), Rational(mx.twice * mx.twice - 1, 12));
            }
        } else if (fx == Family::L && fy == Family::Q) {
            add(Generator(Family::Q, sum), half(mx.twice / 2 - my.twice));  // m/2 - r
        } else if (fx == Family::Q && fy == Family::L) {
            return elem_scale(bracket(y, x), Poly(Rational(-1)));
        }
        // [M, M] = [M, Q] = [Q, M] = 0
        return out;
    }

    // Heisenberg-Clifford: [a_m, b_n] = m delta_{m+n,0} k, {c_r, c_s} = delta_{r+s,0} k.
    if (!sum.is_zero())
        return out;
    if (fx == Family::A && fy == Family::B) {
        add(Generator(Family::K, HalfInt()), Rational(mx.as_integer()));
    } else if (fx == Family::B && fy == Family::A) {
        add(Generator(Family::K, HalfInt()), Rational(-my.as_integer()));
    } else if (fx == Family::C && fy == Family::C) {
        add(Generator(Family::K, HalfInt()), 1);
    }
    return out;
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
    AlgebraElement out;
    for (const auto& [gx, cx] : x)
        for (const auto& [gy, cy] : y)
            for (const auto& [g, c] : bracket(gx, gy))
                elem_add(out, g, c * cx * cy);
    return out;
}

Generator anti_involution(const Generator& g) {
    if (g.algebra() != Algebra::BMS)
        throw std::invalid_argument("anti_involution: not defined on the Heisenberg-Clifford side");
    if (g.is_central())
        return g;
    return Generator(g.fam, -g.mode);
}

AlgebraElement anti_involution(const AlgebraElement& x) {
    AlgebraElement out;
    for (const auto& [g, c] : x)
        elem_add(out, anti_involution(g), c);
    return out;
}

}  // namespace bms

#include "bms/freefield.hpp"

#include <sstream>
#include <stdexcept>

namespace bms {

HcModuleSpec HcModuleSpec::verma(Poly level, Poly a0, Poly b0) {
    HcModuleSpec s;
    s.kind = Kind::Verma;
    s.level = std::move(level);
    s.a0 = std::move(a0);
    s.b0 = std::move(b0);
    return s;
}

HcModuleSpec HcModuleSpec::verma_symbolic() {
    return verma(Poly::variable(Var::k), Poly::variable(Var::a), Poly::variable(Var::b));
}

HcModuleSpec HcModuleSpec::whittaker(Poly pa0, Poly pa1, Poly pb0, Poly pb1, Poly pk) {
    HcModuleSpec s;
    s.kind = Kind::Whittaker;
    s.phi[{Family::A, 0}] = std::move(pa0);
    s.phi[{Family::A, 1}] = std::move(pa1);
    s.phi[{Family::B, 0}] = std::move(pb0);
    s.phi[{Family::B, 1}] = std::move(pb1);
    s.phi_k = std::move(pk);
    return s;
}

HcModuleSpec HcModuleSpec::whittaker_symbolic() {
    return whittaker(Poly::variable(Var::phi_a0), Poly::variable(Var::phi_a1),
                     Poly::variable(Var::phi_b0), Poly::variable(Var::phi_b1),
                     Poly(Rational(1)));
}

Poly HcModuleSpec::cyclic_scalar(const Generator& g) const {
    if (g.fam == Family::K)
        return kind == Kind::Verma ? level : phi_k;
    if (kind == Kind::Verma) {
        if (g.mode.twice > 0)
            return Poly();
        if (g.fam == Family::A)
            return a0;
        if (g.fam == Family::B)
            return b0;
        return Poly();  // no zero mode in the c family
    }
    if (g.fam == Family::C)
        return Poly();  // phi vanishes on the odd part
    auto it = phi.find({g.fam, g.mode.as_integer()});
    return it == phi.end() ? Poly() : it->second;
}

long long HcModuleSpec::max_phi_mode() const {
    long long m = 0;
    if (kind == Kind::Whittaker)
        for (const auto& [key, value] : phi)
            if (!value.is_zero() && key.second > m)
                m = key.second;
    return m;
}

void fock_add(FockVector& dst, const IndexTriple& t, const Poly& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = dst.emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            dst.erase(it);
    }
}

FockVector fock_unit(const IndexTriple& t) {
    FockVector v;
    v[t] = Poly(Rational(1));
    return v;
}

std::string fock_vector_str(const FockVector& v) {
    if (v.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : v) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c.str() << ")*" << monomial_str(hc_lowering_word(t));
    }
    return os.str();
}

FockVector HcModule::act_monomial(const Generator& g, const IndexTriple& t) const {
    auto key = std::make_pair(g, t);
    if (auto it = memo_.find(key); it != memo_.end())
        return it->second;
    Word w;
    w.push_back(g);
    Word low = hc_lowering_word(t);
    w.insert(w.end(), low.begin(), low.end());
    FockVector out;
    for (const auto& [cw, coeff] : normal_form(w)) {
        Poly scalar = coeff;
        Word low_part;
        for (const auto& gen : cw) {
            if (pbw_pos(gen).part == 0) {
                low_part.push_back(gen);
            } else {
                // zero-mode or raising factor: acts on the cyclic vector by a
                // scalar (0 for raising modes of a Verma module)
                scalar *= spec_.cyclic_scalar(gen);
                if (scalar.is_zero())
                    break;
            }
        }
        if (scalar.is_zero())
            continue;
        fock_add(out, triple_from_word(low_part), scalar);
    }
    memo_.emplace(std::move(key), out);
    return out;
}

FockVector HcModule::act(const Generator& g, const FockVector& v) const {
    if (g.algebra() != Algebra::HC)
        throw std::invalid_argument("HcModule::act: BMS generator " + g.str());
    FockVector out;
    for (const auto& [t, c] : v)
        for (const auto& [t2, c2] : act_monomial(g, t))
            fock_add(out, t2, c * c2);
    return out;
}

namespace {

Generator gen_a(long long n) { return Generator(Family::A, HalfInt::whole(n)); }
Generator gen_b(long long n) { return Generator(Family::B, HalfInt::whole(n)); }
Generator gen_c(long long twice) { return Generator(Family::C, HalfInt(twice)); }

struct ModeTerm {
    Word ops;  // applied right to left
    Poly coeff;
};

// :x y: with annihilators (mode > 0, and zero modes, which commute anyway)
// moved right. Fermion pairs pick up the swap sign.
ModeTerm nord(const Generator& g1, const Generator& g2, Poly coeff) {
    if (g1.mode.twice >= 0) {
        if (g1.odd() && g2.odd())
            coeff = -coeff;
        return {{g2, g1}, std::move(coeff)};
    }
    return {{g1, g2}, std::move(coeff)};
}

}  // namespace

FockVector FreeFieldRealization::act_monomial(const Generator& g, const IndexTriple& t) const {
    auto key = std::make_pair(g, t);
    if (auto it = memo_.find(key); it != memo_.end())
        return it->second;

    std::vector<ModeTerm> terms;
    const Poly one{Rational(1)};
    if (g.fam == Family::C1) {
        terms.push_back({{}, Poly(Rational(5, 2))});
    } else if (g.fam == Family::C2) {
        terms.push_back({{}, Poly(Rational(-12)) * rho_ * rho_});
    } else {
        // Window wide enough that every excluded summand kills the monomial:
        // the right factor is then an annihilator of mode > depth + max phi mode.
        const long long depth_ceil = (t.weight().twice + 1) / 2;
        const long long mode_ceil = (g.mode.abs().twice + 1) / 2;
        const long long W = depth_ceil + mode_ceil + module_.spec().max_phi_mode() + 1;
        if (g.fam == Family::L) {
            const long long n = g.mode.as_integer();
            for (long long m = n - W; m <= W; ++m)
                terms.push_back(nord(gen_a(m), gen_b(n - m), one));
            terms.push_back({{gen_a(n)}, Poly(Rational(-(n + 1))) * rho_});
            for (long long st = 2 * (n - W) - 1; st <= 2 * W + 1; st += 2) {
                // -1/2 (s + 1/2) :c_s c_{n-s}: with s = st/2
                Poly c = Poly(Rational(-(st + 1), 4));
                terms.push_back(nord(gen_c(st), gen_c(2 * n - st), std::move(c)));
            }
        } else if (g.fam == Family::M) {
            const long long n = g.mode.as_integer();
            for (long long m = n - W; m <= W; ++m)
                terms.push_back(nord(gen_b(m), gen_b(n - m), Poly(Rational(1, 2))));
            terms.push_back({{gen_b(n)}, Poly(Rational(-(n + 1))) * rho_});
        } else if (g.fam == Family::Q) {
            const long long r2 = g.mode.twice;
            for (long long st = r2 - 2 * W; st <= 2 * W + 1; st += 2) {
                // :b_{r-s} c_s:, s = st/2 (b and c commute; keep annihilator right)
                Generator b = gen_b((r2 - st) / 2);
                Generator c = gen_c(st);
                if (st > 0)
                    terms.push_back({{b, c}, one});
                else
                    terms.push_back({{c, b}, one});
            }
            // -2 (r + 1/2) rho c_r
            terms.push_back({{gen_c(r2)}, Poly(Rational(-(r2 + 1))) * rho_});
        } else {
            throw std::invalid_argument("FreeFieldRealization::act: not a BMS generator: " +
                                        g.str());
        }
    }

    FockVector out;
    const FockVector unit = fock_unit(t);
    for (const auto& term : terms) {
        FockVector cur = unit;
        for (std::size_t i = term.ops.size(); i-- > 0 && !cur.empty();)
            cur = module_.act(term.ops[i], cur);
        for (const auto& [t2, c2] : cur)
            fock_add(out, t2, term.coeff * c2);
    }
    memo_.emplace(std::move(key), out);
    return out;
}

FockVector FreeFieldRealization::act(const Generator& g, const FockVector& v) const {
    if (g.algebra() != Algebra::BMS)
        throw std::invalid_argument("FreeFieldRealization::act: hc generator " + g.str());
    FockVector out;
    for (const auto& [t, c] : v)
        for (const auto& [t2, c2] : act_monomial(g, t))
            fock_add(out, t2, c * c2);
    return out;
}

ResidualReport commutator_residual(const Generator& x, const Generator& y,
                                   const FreeFieldRealization& ffr, HalfInt degree_cutoff) {
    ResidualReport report{x, y, degree_cutoff};
    const bool both_odd = x.odd() && y.odd();
    const AlgebraElement br = bracket(x, y);
    for (long long tw = 0; tw <= degree_cutoff.twice; ++tw) {
        for (const auto& t : weight_basis(HalfInt(tw))) {
            FockVector v = fock_unit(t);
            FockVector res = ffr.act(x, ffr.act(y, v));
            for (const auto& [t2, c2] : ffr.act(y, ffr.act(x, v)))
                fock_add(res, t2, both_odd ? c2 : -c2);
            for (const auto& [g, c] : br)
                for (const auto& [t2, c2] : ffr.act(g, v))
                    fock_add(res, t2, -(c * c2));
            ++report.vectors_checked;
            if (!res.empty()) {
                report.all_zero = false;
                if (res.size() > report.max_residual_terms) {
                    report.max_residual_terms = res.size();
                    report.max_residual = res;
                    report.worst_vector = t;
                }
            }
        }
    }
    return report;
}

WeightParams fock_hw_data(const Poly& a, const Poly& b, const Poly& rho) {
    WeightParams p;
    p.h1 = a * b - rho * a;
    p.h2 = Poly(Rational(1, 2)) * b * b - rho * b;
    p.c1 = Poly(Rational(5, 2));
    p.c2 = Poly(Rational(-12)) * rho * rho;
    return p;
}

long long fock_depth_dimension(HalfInt n) {
    return static_cast<long long>(weight_basis(n).size());
}

FockSimplicity fock_simple(const Rational& b, const Rational& rho) {
    FockSimplicity r{true, std::nullopt};
    if (rho == 0) {
        if (b == 0) {
            r.simple = false;
            r.violating_n = 1;  // b + (n-1) rho = 0 for every n
        }
        return r;
    }
    Rational q = b / rho;  // violation at n = 1 - q when q is an integer != 1
    if (rat_den(q) == 1 && q != 1) {
        r.simple = false;
        r.violating_n = (1 - q.convert_to<Int>()).convert_to<long long>();
    }
    return r;
}

bool hc_whittaker_simple(const Rational& phi_k) { return phi_k != 0; }

bool fock_whittaker_simple(const Rational& phi_b1) { return phi_b1 != 0; }

bool bms_whittaker_simple(const Rational& phi_m_2k, const Rational& phi_m_2k_minus_1) {
    return phi_m_2k != 0 || phi_m_2k_minus_1 != 0;
}

std::vector<std::pair<Generator, FockVector>> whittaker_action_table(const HcModuleSpec& spec,
                                                                     const FfrParams& params) {
    if (spec.kind != HcModuleSpec::Kind::Whittaker)
        throw std::invalid_argument("whittaker_action_table: Whittaker spec required");
    FreeFieldRealization ffr(spec, params);
    const FockVector w = fock_unit(IndexTriple{});
    std::vector<Generator> gens = {
        Generator(Family::L, HalfInt::whole(1)),  Generator(Family::L, HalfInt::whole(2)),
        Generator(Family::L, HalfInt::whole(3)),  Generator(Family::L, HalfInt::whole(4)),
        Generator(Family::M, HalfInt::whole(1)),  Generator(Family::M, HalfInt::whole(2)),
        Generator(Family::M, HalfInt::whole(3)),  Generator(Family::M, HalfInt::whole(4)),
        Generator(Family::Q, HalfInt(1)),         Generator(Family::Q, HalfInt(3)),
        Generator(Family::Q, HalfInt(5)),         Generator(Family::C1, HalfInt()),
        Generator(Family::C2, HalfInt()),
    };
    std::vector<std::pair<Generator, FockVector>> out;
    for (const auto& g : gens)
        out.emplace_back(g, ffr.act(g, w));
    return out;
}

}  // namespace bms

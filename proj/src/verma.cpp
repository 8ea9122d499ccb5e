#include "bms/verma.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>

namespace bms {

WeightParams WeightParams::symbolic() {
    return {Poly::variable(Var::h1), Poly::variable(Var::h2), Poly::variable(Var::c1),
            Poly::variable(Var::c2)};
}

WeightParams WeightParams::numeric(const Rational& h1v, const Rational& h2v, const Rational& c1v,
                                   const Rational& c2v) {
    return {Poly(h1v), Poly(h2v), Poly(c1v), Poly(c2v)};
}

bool WeightParams::is_numeric() const {
    return h1.is_constant() && h2.is_constant() && c1.is_constant() && c2.is_constant();
}

void verma_add(VermaVector& dst, const IndexTriple& t, const Poly& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = dst.emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            dst.erase(it);
    }
}

VermaVector verma_unit(const IndexTriple& t) {
    VermaVector v;
    v[t] = Poly(Rational(1));
    return v;
}

VermaVector VermaModule::act_monomial(const Generator& g, const IndexTriple& t) const {
    auto key = std::make_pair(g, t);
    if (auto it = memo_.find(key); it != memo_.end())
        return it->second;
    Word w;
    w.push_back(g);
    Word low = bms_lowering_word(t);
    w.insert(w.end(), low.begin(), low.end());
    VermaVector out;
    for (const auto& [cw, coeff] : normal_form(w)) {
        // canonical word: lowering block, Cartan block, raising block
        Poly scalar = coeff;
        IndexTriple lowering;
        bool killed = false;
        Word low_part;
        for (const auto& gen : cw) {
            PbwPos pos = pbw_pos(gen);
            if (pos.part == 0) {
                low_part.push_back(gen);
            } else if (pos.part == 2) {
                killed = true;  // raising operator reaches the highest-weight vector
                break;
            } else {
                switch (gen.fam) {
                    case Family::L: scalar *= params_.h1; break;
                    case Family::M: scalar *= params_.h2; break;
                    case Family::C1: scalar *= params_.c1; break;
                    case Family::C2: scalar *= params_.c2; break;
                    default:
                        throw std::logic_error("VermaModule: hc generator in BMS word");
                }
            }
        }
        if (killed || scalar.is_zero())
            continue;
        verma_add(out, triple_from_word(low_part), scalar);
    }
    memo_.emplace(std::move(key), out);
    return out;
}

VermaVector VermaModule::act(const Generator& g, const VermaVector& v) const {
    VermaVector out;
    for (const auto& [t, c] : v)
        for (const auto& [t2, c2] : act_monomial(g, t))
            verma_add(out, t2, c * c2);
    return out;
}

VermaVector VermaModule::act(const Word& w, const VermaVector& v) const {
    VermaVector cur = v;
    for (std::size_t i = w.size(); i-- > 0;)
        cur = act(w[i], cur);
    return cur;
}

VermaVector VermaModule::act(const UEAElement& x, const VermaVector& v) const {
    VermaVector out;
    for (const auto& [w, c] : x) {
        for (const auto& [t, c2] : act(w, v))
            verma_add(out, t, c * c2);
    }
    return out;
}

Poly VermaModule::form(const VermaVector& u, const VermaVector& v) const {
    Poly out;
    for (const auto& [tu, cu] : u) {
        // apply omega(word) = bar(x_n)...bar(x_1) right to left
        const Word bar = anti_involution_word(bms_lowering_word(tu));
        VermaVector cur = v;
        for (std::size_t i = bar.size(); i-- > 0;) {
            cur = act(bar[i], cur);
            if (cur.empty())
                break;
        }
        auto it = cur.find(IndexTriple{});
        if (it != cur.end())
            out += cu * it->second;
    }
    return out;
}

int GramData::star_sign() const {
    std::vector<std::size_t> perm(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        IndexTriple d = star_dual(basis[j]);
        auto it = std::find(basis.begin(), basis.end(), d);
        if (it == basis.end())
            throw std::logic_error("GramData: star dual left the basis");
        perm[j] = static_cast<std::size_t>(it - basis.begin());
    }
    std::vector<bool> seen(perm.size(), false);
    int sign = 1;
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (seen[s])
            continue;
        std::size_t len = 0, cur = s;
        while (!seen[cur]) {
            seen[cur] = true;
            cur = perm[cur];
            ++len;
        }
        if (len % 2 == 0)
            sign = -sign;
    }
    return sign;
}

GramData gram_data(HalfInt n, const WeightParams& params) {
    GramData data;
    data.level = n;
    if (n.twice < 0) {
        data.gram = PolyMatrix(0, 0);
        data.dmat = PolyMatrix(0, 0);
        return data;
    }
    data.basis = weight_basis(n);
    const std::size_t p = data.basis.size();
    data.gram = PolyMatrix(p, p);
    data.dmat = PolyMatrix(p, p);
    VermaModule module(params);
    std::vector<VermaVector> units;
    units.reserve(p);
    for (const auto& t : data.basis)
        units.push_back(verma_unit(t));
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < p; ++j) {
            data.gram.at(i, j) = module.form(units[i], units[j]);
            data.dmat.at(i, j) = module.form(units[i], verma_unit(star_dual(data.basis[j])));
        }
    }
    return data;
}

VermaSimplicity verma_simple(const Rational& h2, const Rational& c2, long long max_i) {
    if (max_i < 1)
        throw std::invalid_argument("verma_simple: max_i must be >= 1");
    VermaSimplicity r;
    if (c2 == 0) {
        if (h2 != 0) {
            r.simple = true;
            r.exhaustive = true;
            return r;
        }
        // h2 = c2 = 0: every i violates; report the requested window.
        for (long long i = 1; i <= max_i; ++i)
            r.violations.push_back(i);
        r.simple = false;
        r.exhaustive = false;
        return r;
    }
    // h2 + (i^2-1)/24 c2 = 0  <=>  i^2 = 1 - 24 h2/c2
    Rational target = 1 - 24 * h2 / c2;
    r.exhaustive = true;
    if (rat_den(target) == 1 && rat_num(target) > 0) {
        Int root = boost::multiprecision::sqrt(rat_num(target));
        if (root * root == rat_num(target) && root >= 1)
            r.violations.push_back(root.convert_to<long long>());
    }
    r.simple = r.violations.empty();
    return r;
}

bool vacuum_simple(const Rational& c2) { return c2 != 0; }

std::vector<VermaVector> singular_vectors(HalfInt n, const WeightParams& params,
                                          long long mode_cutoff) {
    if (!params.is_numeric())
        throw std::invalid_argument("singular_vectors: weight parameters must be numeric");
    if (2 * mode_cutoff < n.twice + 2)
        throw std::invalid_argument("singular_vectors: mode_cutoff must be >= n + 1");
    auto basis = weight_basis(n);
    if (basis.empty())
        return {};
    VermaModule module(params);

    RatMatrix rows;
    auto add_constraints = [&](const Generator& g) {
        HalfInt target = n - g.mode;
        if (target.twice < 0)
            return;  // lands in weight < 0: automatically zero
        auto target_basis = weight_basis(target);
        std::map<IndexTriple, std::size_t> index;
        for (std::size_t s = 0; s < target_basis.size(); ++s)
            index[target_basis[s]] = s;
        std::vector<std::vector<Rational>> block(target_basis.size(),
                                                 std::vector<Rational>(basis.size(), 0));
        for (std::size_t col = 0; col < basis.size(); ++col) {
            VermaVector img = module.act(g, verma_unit(basis[col]));
            for (const auto& [t, c] : img)
                block[index.at(t)][col] = c.constant_value();
        }
        for (auto& row : block)
            rows.push_back(std::move(row));
    };
    for (long long m = 1; m <= mode_cutoff; ++m) {
        add_constraints(Generator(Family::L, HalfInt::whole(m)));
        add_constraints(Generator(Family::M, HalfInt::whole(m)));
        add_constraints(Generator(Family::Q, HalfInt(2 * m - 1)));
    }
    auto null_basis = rat_nullspace(rows, basis.size());
    std::vector<VermaVector> out;
    for (const auto& coeffs : null_basis) {
        VermaVector v;
        for (std::size_t s = 0; s < basis.size(); ++s)
            verma_add(v, basis[s], Poly(coeffs[s]));
        out.push_back(std::move(v));
    }
    return out;
}

Poly lemma_display_diagonal(const IndexTriple& t) {
    const Poly h2 = Poly::variable(Var::h2);
    const Poly c2 = Poly::variable(Var::c2);
    Poly out{Rational(1)};
    for (std::size_t p = 0; p < t.l.size(); ++p) {
        if (t.l[p] == 0)
            continue;
        long long r = static_cast<long long>(p) + 1;
        Poly factor = Poly(Rational(2)) * h2 + Poly(Rational(r * r - 1, 12)) * c2;
        out *= Poly(Rational(r)) * factor.pow(static_cast<unsigned>(t.l[p]));
    }
    for (std::size_t p = 0; p < t.q.size(); ++p) {
        if (!t.q[p])
            continue;
        long long tt = static_cast<long long>(p) + 1;
        out *= Poly(Rational(2)) * h2 + Poly(Rational(4 * tt * tt - 1, 12)) * c2;
    }
    for (std::size_t p = 0; p < t.m.size(); ++p) {
        if (t.m[p] == 0)
            continue;
        long long s = static_cast<long long>(p) + 1;
        Poly factor = Poly(Rational(2)) * h2 + Poly(Rational(s * s - 1, 12)) * c2;
        out *= Poly(Rational(s)) * factor.pow(static_cast<unsigned>(t.m[p]));
    }
    return out;
}

std::vector<DiagonalEntryReport> diagonal_report(const GramData& data) {
    std::vector<DiagonalEntryReport> out;
    for (std::size_t i = 0; i < data.basis.size(); ++i) {
        DiagonalEntryReport r;
        r.monomial = data.basis[i];
        r.computed = data.dmat.at(i, i);
        r.displayed = lemma_display_diagonal(data.basis[i]);
        r.match = r.computed == r.displayed;
        out.push_back(std::move(r));
    }
    return out;
}

std::string verma_vector_str(const VermaVector& v) {
    if (v.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : v) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c.str() << ")*" << monomial_str(bms_lowering_word(t));
    }
    return os.str();
}

}  // namespace bms

#include "bms/pbw.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace bms {

void IndexTriple::normalize() {
    while (!l.empty() && l.back() == 0)
        l.pop_back();
    while (!m.empty() && m.back() == 0)
        m.pop_back();
    while (!q.empty() && q.back() == 0)
        q.pop_back();
}

HalfInt IndexTriple::weight() const {
    long long twice = 0;
    for (std::size_t p = 0; p < l.size(); ++p)
        twice += 2LL * (p + 1) * l[p];
    for (std::size_t p = 0; p < m.size(); ++p)
        twice += 2LL * (p + 1) * m[p];
    for (std::size_t p = 0; p < q.size(); ++p)
        twice += static_cast<long long>(2 * (p + 1) - 1) * q[p];
    return HalfInt(twice);
}

IndexTriple star_dual(const IndexTriple& t) {
    IndexTriple out;
    out.l = t.m;
    out.m = t.l;
    out.q = t.q;
    return out;
}

long long partition_count(HalfInt n) {
    if (n.twice < 0)
        return 0;
    const std::size_t top = static_cast<std::size_t>(n.twice);
    // Series in t = q^{1/2} up to degree `top`.
    std::vector<Int> coef(top + 1, 0);
    coef[0] = 1;
    // Fermionic factors (1 + t^{2p-1}), p = 1, 2, ...
    for (std::size_t p = 1; 2 * p - 1 <= top; ++p) {
        const std::size_t step = 2 * p - 1;
        for (std::size_t d = top + 1; d-- > step;)
            coef[d] += coef[d - step];
    }
    // Two bosonic families: (1 - t^{2k})^{-2}.
    for (std::size_t k = 1; 2 * k <= top; ++k) {
        const std::size_t step = 2 * k;
        for (int rep = 0; rep < 2; ++rep)
            for (std::size_t d = step; d <= top; ++d)
                coef[d] += coef[d - step];
    }
    return coef[top].convert_to<long long>();
}

namespace {

// All partitions of m as exponent vectors (index p <-> part p+1).
std::vector<std::vector<int>> integer_partitions(long long m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, long long part, long long rem) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (long long p = part; p <= rem; ++p) {
            for (long long e = 1; p * e <= rem; ++e) {
                if (cur.size() < static_cast<std::size_t>(p))
                    cur.resize(static_cast<std::size_t>(p), 0);
                cur[static_cast<std::size_t>(p - 1)] = static_cast<int>(e);
                self(self, p + 1, rem - p * e);
                cur[static_cast<std::size_t>(p - 1)] = 0;
            }
        }
    };
    rec(rec, 1, m);
    for (auto& v : out)
        while (!v.empty() && v.back() == 0)
            v.pop_back();
    return out;
}

// All 0/1 occupancy vectors with odd-part twice-weight exactly `twice`.
std::vector<std::vector<char>> odd_subsets(long long twice) {
    std::vector<std::vector<char>> out;
    std::vector<char> cur;
    auto rec = [&](auto&& self, long long pos, long long rem) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (long long t = pos; 2 * t - 1 <= rem; ++t) {
            if (cur.size() < static_cast<std::size_t>(t))
                cur.resize(static_cast<std::size_t>(t), 0);
            cur[static_cast<std::size_t>(t - 1)] = 1;
            self(self, t + 1, rem - (2 * t - 1));
            cur[static_cast<std::size_t>(t - 1)] = 0;
        }
    };
    rec(rec, 1, twice);
    for (auto& v : out)
        while (!v.empty() && v.back() == 0)
            v.pop_back();
    return out;
}

}  // namespace

std::vector<IndexTriple> weight_basis(HalfInt n) {
    std::vector<IndexTriple> out;
    if (n.twice < 0)
        return out;
    for (long long ferm2 = n.twice % 2; ferm2 <= n.twice; ferm2 += 2) {
        auto qs = odd_subsets(ferm2);
        const long long rem = (n.twice - ferm2) / 2;
        for (long long wl = 0; wl <= rem; ++wl) {
            auto ls = integer_partitions(wl);
            auto ms = integer_partitions(rem - wl);
            for (const auto& qv : qs)
                for (const auto& mv : ms)
                    for (const auto& lv : ls) {
                        IndexTriple t;
                        t.l = lv;
                        t.m = mv;
                        t.q.assign(qv.begin(), qv.end());
                        out.push_back(std::move(t));
                    }
        }
    }
    std::sort(out.begin(), out.end(), [](const IndexTriple& x, const IndexTriple& y) {
        return compare(OrderTag::principal_sn, x, y) == std::strong_ordering::greater;
    });
    return out;
}

namespace {

long long exp_weight2(const std::vector<int>& v) {
    long long twice = 0;
    for (std::size_t p = 0; p < v.size(); ++p)
        twice += 2LL * (p + 1) * v[p];
    return twice;
}

long long occ_weight2(const std::vector<char>& v) {
    long long twice = 0;
    for (std::size_t p = 0; p < v.size(); ++p)
        twice += static_cast<long long>(2 * (p + 1) - 1) * v[p];
    return twice;
}

int at(const std::vector<int>& v, std::size_t p) { return p < v.size() ? v[p] : 0; }
int at(const std::vector<char>& v, std::size_t p) { return p < v.size() ? v[p] : 0; }

template <typename V>
std::strong_ordering lex_high(const V& x, const V& y) {
    std::size_t top = std::max(x.size(), y.size());
    for (std::size_t p = top; p-- > 0;) {
        if (at(x, p) != at(y, p))
            return at(x, p) <=> at(y, p);
    }
    return std::strong_ordering::equal;
}

template <typename V>
std::strong_ordering revlex_low(const V& x, const V& y) {
    std::size_t top = std::max(x.size(), y.size());
    for (std::size_t p = 0; p < top; ++p) {
        if (at(x, p) != at(y, p))
            return at(x, p) <=> at(y, p);
    }
    return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering compare(OrderTag tag, const std::vector<int>& x, const std::vector<int>& y) {
    switch (tag) {
        case OrderTag::lex_gt:
            return lex_high(x, y);
        case OrderTag::revlex:
            return revlex_low(x, y);
        default:
            throw std::invalid_argument("compare: triple-valued order applied to exponent vectors");
    }
}

std::strong_ordering compare(OrderTag tag, const IndexTriple& x, const IndexTriple& y) {
    if (tag == OrderTag::principal_sn) {
        // (i) by |m| descending; (ii) reversed lex on m; (iii) |q|;
        // (iv) lex on q; (v) lex on l.
        long long wx = exp_weight2(x.m), wy = exp_weight2(y.m);
        if (wx != wy)
            return wx <=> wy;
        if (auto c = lex_high(y.m, x.m); c != std::strong_ordering::equal)
            return c;
        long long qx = occ_weight2(x.q), qy = occ_weight2(y.q);
        if (qx != qy)
            return qx <=> qy;
        if (auto c = lex_high(x.q, y.q); c != std::strong_ordering::equal)
            return c;
        return lex_high(x.l, y.l);
    }
    if (tag == OrderTag::principal_induced) {
        // (1) by length; (2) reversed revlex on l; (3) revlex on q, then m.
        if (x.weight() != y.weight())
            return x.weight().twice <=> y.weight().twice;
        if (auto c = revlex_low(y.l, x.l); c != std::strong_ordering::equal)
            return c;
        if (auto c = revlex_low(x.q, y.q); c != std::strong_ordering::equal)
            return c;
        return revlex_low(x.m, y.m);
    }
    throw std::invalid_argument("compare: exponent-vector order applied to triples");
}

// ---- PBW words -----------------------------------------------------------

PbwPos pbw_pos(const Generator& g) {
    PbwPos p{};
    if (g.is_central() || g.mode.is_zero())
        p.part = 1;
    else
        p.part = g.mode.twice < 0 ? 0 : 2;
    switch (g.fam) {
        case Family::Q: p.fam_rank = 0; break;
        case Family::M: p.fam_rank = 1; break;
        case Family::L: p.fam_rank = p.part == 1 ? -1 : 2; break;  // Cartan block: L0 M0 c1 c2
        case Family::C1: p.fam_rank = 3; break;
        case Family::C2: p.fam_rank = 4; break;
        case Family::A: p.fam_rank = 0; break;
        case Family::B: p.fam_rank = 1; break;
        case Family::C: p.fam_rank = 2; break;
        case Family::K: p.fam_rank = 3; break;
    }
    p.mode_key = p.part == 2 ? -g.mode.twice : g.mode.twice;
    return p;
}

bool is_canonical(const Word& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (pbw_pos(w[i]) > pbw_pos(w[i + 1]))
            return false;
        if (w[i] == w[i + 1] && w[i].odd())
            return false;
    }
    return true;
}

void uea_add(UEAElement& dst, const Word& w, const Poly& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = dst.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            dst.erase(it);
    }
}

UEAElement normal_form(const Word& w, const Poly& coeff, RewriteStrategy strategy) {
    UEAElement result;
    std::deque<std::pair<Word, Poly>> work;
    work.emplace_back(w, coeff);
    while (!work.empty()) {
        auto [word, c] = std::move(work.front());
        work.pop_front();
        if (c.is_zero())
            continue;
        std::size_t viol = word.size();
        bool square = false;
        for (std::size_t i = 0; i + 1 < word.size(); ++i) {
            std::size_t pos = strategy == RewriteStrategy::leftmost ? i : word.size() - 2 - i;
            if (word[pos] == word[pos + 1] && word[pos].odd()) {
                viol = pos;
                square = true;
                break;
            }
            if (pbw_pos(word[pos]) > pbw_pos(word[pos + 1])) {
                viol = pos;
                break;
            }
        }
        if (viol == word.size()) {
            uea_add(result, word, c);
            continue;
        }
        const Generator x = word[viol], y = word[viol + 1];
        if (square) {
            // x^2 = (1/2)[x,x] for odd x
            for (const auto& [g, bc] : bracket(x, x)) {
                Word nw(word.begin(), word.begin() + viol);
                nw.push_back(g);
                nw.insert(nw.end(), word.begin() + viol + 2, word.end());
                work.emplace_back(std::move(nw), c * bc * Poly(Rational(1, 2)));
            }
            continue;
        }
        // x y = (-1)^{|x||y|} y x + [x, y]
        const bool both_odd = x.odd() && y.odd();
        Word swapped = word;
        std::swap(swapped[viol], swapped[viol + 1]);
        work.emplace_back(std::move(swapped), both_odd ? -c : c);
        for (const auto& [g, bc] : bracket(x, y)) {
            Word nw(word.begin(), word.begin() + viol);
            nw.push_back(g);
            nw.insert(nw.end(), word.begin() + viol + 2, word.end());
            work.emplace_back(std::move(nw), c * bc);
        }
    }
    return result;
}

UEAElement normal_form(const UEAElement& x) {
    UEAElement result;
    for (const auto& [w, c] : x)
        for (const auto& [cw, cc] : normal_form(w, c))
            uea_add(result, cw, cc);
    return result;
}

Word anti_involution_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (std::size_t i = w.size(); i-- > 0;)
        out.push_back(anti_involution(w[i]));
    return out;
}

UEAElement anti_involution(const UEAElement& x) {
    UEAElement out;
    for (const auto& [w, c] : x)
        for (const auto& [cw, cc] : normal_form(anti_involution_word(w), c))
            uea_add(out, cw, cc);
    return out;
}

Word bms_lowering_word(const IndexTriple& t) {
    Word w;
    for (std::size_t p = t.q.size(); p-- > 0;)
        if (t.q[p])
            w.emplace_back(Family::Q, HalfInt(-(2 * static_cast<long long>(p) + 1)));
    for (std::size_t p = t.m.size(); p-- > 0;)
        for (int e = 0; e < t.m[p]; ++e)
            w.emplace_back(Family::M, HalfInt::whole(-(static_cast<long long>(p) + 1)));
    for (std::size_t p = t.l.size(); p-- > 0;)
        for (int e = 0; e < t.l[p]; ++e)
            w.emplace_back(Family::L, HalfInt::whole(-(static_cast<long long>(p) + 1)));
    return w;
}

Word hc_lowering_word(const IndexTriple& t) {
    Word w;
    for (std::size_t p = t.l.size(); p-- > 0;)
        for (int e = 0; e < t.l[p]; ++e)
            w.emplace_back(Family::A, HalfInt::whole(-(static_cast<long long>(p) + 1)));
    for (std::size_t p = t.m.size(); p-- > 0;)
        for (int e = 0; e < t.m[p]; ++e)
            w.emplace_back(Family::B, HalfInt::whole(-(static_cast<long long>(p) + 1)));
    for (std::size_t p = t.q.size(); p-- > 0;)
        if (t.q[p])
            w.emplace_back(Family::C, HalfInt(-(2 * static_cast<long long>(p) + 1)));
    return w;
}

IndexTriple triple_from_word(const Word& w) {
    IndexTriple t;
    auto bump = [](std::vector<int>& v, std::size_t p) {
        if (v.size() <= p)
            v.resize(p + 1, 0);
        ++v[p];
    };
    for (const auto& g : w) {
        if (g.mode.twice >= 0)
            throw std::invalid_argument("triple_from_word: not a lowering word: " + g.str());
        switch (g.fam) {
            case Family::L:
            case Family::A:
                bump(t.l, static_cast<std::size_t>(-g.mode.as_integer()) - 1);
                break;
            case Family::M:
            case Family::B:
                bump(t.m, static_cast<std::size_t>(-g.mode.as_integer()) - 1);
                break;
            case Family::Q:
            case Family::C: {
                std::size_t p = static_cast<std::size_t>((-g.mode.twice - 1) / 2);
                if (t.q.size() <= p)
                    t.q.resize(p + 1, 0);
                if (t.q[p])
                    throw std::invalid_argument("triple_from_word: repeated odd factor " + g.str());
                t.q[p] = 1;
                break;
            }
            default:
                throw std::invalid_argument("triple_from_word: central factor " + g.str());
        }
    }
    t.normalize();
    return t;
}

std::string monomial_str(const Word& w) {
    if (w.empty())
        return "1";
    std::string out;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i])
            ++j;
        out += w[i].str();
        if (j - i > 1)
            out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

Word monomial_parse(const std::string& s) {
    Word w;
    if (s == "1")
        return w;
    std::size_t i = 0;
    while (i < s.size()) {
        std::string tok;
        if (s[i] == 'c' && i + 1 < s.size() && (s[i + 1] == '1' || s[i + 1] == '2')) {
            tok = s.substr(i, 2);
            i += 2;
        } else if (s[i] == 'k') {
            tok = "k";
            i += 1;
        } else {
            auto close = s.find(']', i);
            if (close == std::string::npos)
                throw std::invalid_argument("monomial_parse: malformed monomial '" + s + "'");
            tok = s.substr(i, close - i + 1);
            i = close + 1;
        }
        Generator g = Generator::parse(tok);
        std::size_t count = 1;
        if (i < s.size() && s[i] == '^') {
            std::size_t j = i + 1, start = j;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
                ++j;
            if (j == start)
                throw std::invalid_argument("monomial_parse: malformed exponent in '" + s + "'");
            count = std::stoul(s.substr(start, j - start));
            i = j;
        }
        for (std::size_t rep = 0; rep < count; ++rep)
            w.push_back(g);
    }
    return w;
}

}  // namespace bms

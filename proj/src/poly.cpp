#include "bms/poly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace bms {

const std::array<std::string, kNumVars>& var_names() {
    static const std::array<std::string, kNumVars> names = {
        "h1", "h2", "c1", "c2", "rho", "a", "b", "k",
        "phi_a0", "phi_a1", "phi_b0", "phi_b1"};
    return names;
}

std::optional<Var> var_from_name(const std::string& name) {
    const auto& names = var_names();
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (names[i] == name)
            return static_cast<Var>(i);
    return std::nullopt;
}

Poly::Poly(const Rational& c) {
    if (c != 0)
        terms_[ExpVec{}] = c;
}

Poly Poly::variable(Var v) {
    Poly p;
    ExpVec e{};
    e[static_cast<std::size_t>(v)] = 1;
    p.terms_[e] = 1;
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ExpVec{});
}

Rational Poly::constant_value() const {
    if (terms_.empty())
        return 0;
    if (!is_constant())
        throw std::invalid_argument("Poly::constant_value: polynomial '" + str() + "' is not constant");
    return terms_.begin()->second;
}

void Poly::add_term(const ExpVec& e, const Rational& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& x, const Poly& y) {
    Poly out;
    for (const auto& [ex, cx] : x.terms_) {
        for (const auto& [ey, cy] : y.terms_) {
            ExpVec e;
            for (std::size_t v = 0; v < kNumVars; ++v)
                e[v] = static_cast<std::uint16_t>(ex[v] + ey[v]);
            out.add_term(e, cx * cy);
        }
    }
    return out;
}

Poly Poly::operator-() const {
    Poly out;
    for (const auto& [e, c] : terms_)
        out.terms_[e] = -c;
    return out;
}

Poly Poly::pow(unsigned e) const {
    Poly result(Rational(1));
    Poly base = *this;
    while (e) {
        if (e & 1u)
            result *= base;
        e >>= 1u;
        if (e)
            base *= base;
    }
    return result;
}

bool Poly::uses(Var v) const {
    for (const auto& [e, c] : terms_)
        if (e[static_cast<std::size_t>(v)] != 0)
            return true;
    return false;
}

unsigned Poly::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        unsigned t = 0;
        for (auto x : e)
            t += x;
        if (t > d)
            d = t;
    }
    return d;
}

Rational Poly::eval(const std::map<Var, Rational>& assignment) const {
    Rational out = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t v = 0; v < kNumVars; ++v) {
            if (e[v] == 0)
                continue;
            auto it = assignment.find(static_cast<Var>(v));
            if (it == assignment.end())
                throw std::invalid_argument("poly_eval: missing assignment for variable '" +
                                            var_names()[v] + "'");
            Rational p = 1;
            for (unsigned x = 0; x < e[v]; ++x)
                p *= it->second;
            term *= p;
        }
        out += term;
    }
    return out;
}

Poly Poly::subst(const std::map<Var, Poly>& assignment) const {
    Poly out;
    for (const auto& [e, c] : terms_) {
        Poly term{c};
        for (std::size_t v = 0; v < kNumVars; ++v) {
            if (e[v] == 0)
                continue;
            auto it = assignment.find(static_cast<Var>(v));
            Poly base = (it != assignment.end()) ? it->second : variable(static_cast<Var>(v));
            term *= base.pow(e[v]);
        }
        out += term;
    }
    return out;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
    if (d.is_zero())
        return std::nullopt;
    Poly rem = *this;
    Poly quot;
    const auto& [de, dc] = *d.terms_.begin();
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms_.begin();
        ExpVec qe;
        for (std::size_t v = 0; v < kNumVars; ++v) {
            if (re[v] < de[v])
                return std::nullopt;
            qe[v] = static_cast<std::uint16_t>(re[v] - de[v]);
        }
        Poly qterm;
        qterm.terms_[qe] = rc / dc;
        quot += qterm;
        rem -= qterm * d;
    }
    return quot;
}

std::string Poly::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational ac = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0)
                os << '-';
            first = false;
        } else {
            os << (c < 0 ? '-' : '+');
        }
        bool has_var = false;
        for (auto x : e)
            if (x) {
                has_var = true;
                break;
            }
        if (!has_var || ac != 1) {
            os << rat_to_string(ac);
            if (has_var)
                os << '*';
        }
        bool firstv = true;
        for (std::size_t v = 0; v < kNumVars; ++v) {
            if (e[v] == 0)
                continue;
            if (!firstv)
                os << '*';
            firstv = false;
            os << var_names()[v];
            if (e[v] > 1)
                os << '^' << e[v];
        }
    }
    return os.str();
}

namespace {

// Splits at top-level '+'/'-' (every position: there are no parentheses in the
// canonical form), keeping the sign with the term.
std::invalid_argument parse_error(const std::string& s) {
    return std::invalid_argument("Poly::parse: malformed polynomial '" + s + "'");
}

}  // namespace

Poly Poly::parse(const std::string& input) {
    std::string s;
    for (char ch : input)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s += ch;
    if (s.empty())
        throw parse_error(input);
    if (s == "0")
        return Poly();
    Poly out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        }
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-')
            ++end;
        std::string term = s.substr(pos, end - pos);
        pos = end;
        if (term.empty())
            throw parse_error(input);

        Rational coeff = 1;
        ExpVec e{};
        std::size_t t = 0;
        bool coeff_seen = false;
        while (t < term.size()) {
            std::size_t stop = term.find('*', t);
            std::string factor = term.substr(t, stop == std::string::npos ? std::string::npos : stop - t);
            t = stop == std::string::npos ? term.size() : stop + 1;
            if (factor.empty())
                throw parse_error(input);
            if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
                if (coeff_seen)
                    throw parse_error(input);
                coeff_seen = true;
                coeff = parse_rational(factor);
            } else {
                std::string name = factor;
                unsigned exp = 1;
                auto caret = factor.find('^');
                if (caret != std::string::npos) {
                    name = factor.substr(0, caret);
                    try {
                        exp = static_cast<unsigned>(std::stoul(factor.substr(caret + 1)));
                    } catch (const std::exception&) {
                        throw parse_error(input);
                    }
                }
                auto v = var_from_name(name);
                if (!v)
                    throw parse_error(input);
                e[static_cast<std::size_t>(*v)] = static_cast<std::uint16_t>(
                    e[static_cast<std::size_t>(*v)] + exp);
            }
        }
        out.add_term(e, sign * coeff);
    }
    return out;
}

}  // namespace bms

#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace bms {

/// Exact element of (1/2)Z, stored as twice its value. Mode indices of the
/// superalgebras live here: integer modes have even `twice`, half-odd modes
/// (Q_r, c_r) have odd `twice`.
struct HalfInt {
    long long twice = 0;

    constexpr HalfInt() = default;
    constexpr explicit HalfInt(long long tw) : twice(tw) {}

    static constexpr HalfInt whole(long long n) { return HalfInt(2 * n); }
    static constexpr HalfInt half_odd(long long numer) { return HalfInt(numer); }

    constexpr bool is_integer() const { return twice % 2 == 0; }
    constexpr long long as_integer() const { return twice / 2; }

    constexpr HalfInt operator-() const { return HalfInt(-twice); }
    constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice + o.twice); }
    constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice - o.twice); }
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

    constexpr HalfInt abs() const { return HalfInt(twice < 0 ? -twice : twice); }
    constexpr bool is_zero() const { return twice == 0; }

    /// "2", "-1", "3/2", "-1/2"
    std::string str() const {
        if (is_integer())
            return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    }

    /// Parses the formats produced by str(). Throws on anything else.
    static HalfInt parse(const std::string& s) {
        if (s.empty())
            throw std::invalid_argument("HalfInt::parse: empty string");
        auto slash = s.find('/');
        std::size_t pos = 0;
        try {
            if (slash == std::string::npos) {
                long long n = std::stoll(s, &pos);
                if (pos != s.size())
                    throw std::invalid_argument("");
                return whole(n);
            }
            long long num = std::stoll(s.substr(0, slash), &pos);
            if (pos != slash)
                throw std::invalid_argument("");
            long long den = std::stoll(s.substr(slash + 1), &pos);
            if (pos != s.size() - slash - 1 || den != 2 || num % 2 == 0)
                throw std::invalid_argument("");
            return HalfInt(num);
        } catch (const std::exception&) {
            throw std::invalid_argument("HalfInt::parse: malformed half-integer '" + s + "'");
        }
    }
};

}  // namespace bms

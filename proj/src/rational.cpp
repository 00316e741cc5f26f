#include "liecoh/rational.hpp"

#include <stdexcept>

namespace liecoh {

Rat make_rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat parse_rat(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) throw std::invalid_argument("parse_rat: empty input");

    auto parse_int = [&](std::string_view s) -> Int {
        s = trim(s);
        if (s.empty()) throw std::invalid_argument("parse_rat: empty integer");
        std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size()) throw std::invalid_argument("parse_rat: lone sign");
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("parse_rat: bad digit in '" + std::string(s) + "'");
        return Int(std::string(s), 10);
    };

    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(text));

    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

int sign_of(const Rat& x) { return sgn(x); }

Int denominator_lcm(const std::vector<Rat>& xs) {
    Int l = 1;
    for (const auto& x : xs) {
        Int d = x.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        l = l / g * d;
    }
    return l;
}

std::string to_string(const Rat& x) { return x.get_str(); }
std::string to_string(const Int& x) { return x.get_str(); }

}  // namespace liecoh

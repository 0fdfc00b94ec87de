#include "orbiseif/rational.hpp"

#include "orbiseif/error.hpp"

#include <charconv>

namespace orbiseif {

std::int64_t floor_q(const Q& x) {
    auto n = x.numerator(), d = x.denominator();  // d > 0
    auto q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

Q frac(const Q& x) { return x - Q(floor_q(x)); }

Q mod_q(const Q& x, const Q& m) { return x - m * Q(floor_q(x / m)); }

bool is_integer(const Q& x) { return x.denominator() == 1; }

std::string to_string(const Q& x) {
    if (x.denominator() == 1) return std::to_string(x.numerator());
    return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

static std::int64_t parse_int(std::string_view s, std::string_view whole) {
    std::int64_t v = 0;
    const char* b = s.data();
    const char* e = s.data() + s.size();
    if (b != e && *b == '+') ++b;
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || p != e || b == e)
        throw Error("syntax", "bad rational '" + std::string(whole) + "'");
    return v;
}

Q parse_q(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Q(parse_int(text, text));
    auto num = parse_int(text.substr(0, slash), text);
    auto den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw Error("syntax", "zero denominator in '" + std::string(text) + "'");
    return Q(num, den);
}

}  // namespace orbiseif

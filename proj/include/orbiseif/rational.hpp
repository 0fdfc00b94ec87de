#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace orbiseif {

using Q = boost::rational<std::int64_t>;

std::int64_t floor_q(const Q& x);
// x - floor(x), in [0,1)
Q frac(const Q& x);
// x reduced into [0, m)
Q mod_q(const Q& x, const Q& m);
bool is_integer(const Q& x);

std::string to_string(const Q& x);
// accepts "p", "-p", "p/q"; throws Error("syntax") otherwise
Q parse_q(std::string_view text);

}  // namespace orbiseif

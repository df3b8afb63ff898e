#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <sstream>
#include <string>

namespace pirlrc {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << "/" << r.denominator();
    return os.str();
}

}  // namespace pirlrc

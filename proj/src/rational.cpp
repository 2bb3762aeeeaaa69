#include "lcmid/rational.hpp"

#include "lcmid/errors.hpp"

namespace lcmid {

Rational make_rational(long numerator, long denominator) {
    if (denominator == 0) {
        throw StructuralError("rational with zero denominator");
    }
    Rational value(numerator, denominator);
    value.canonicalize();
    return value;
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) {
        return value.get_num().get_str();
    }
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    Rational value;
    if (text.empty() || value.set_str(std::string(text), 10) != 0) {
        throw ParseError("not a rational number: '" + std::string(text) + "'");
    }
    if (value.get_den() == 0) {
        throw ParseError("rational with zero denominator");
    }
    value.canonicalize();
    return value;
}

}  // namespace lcmid

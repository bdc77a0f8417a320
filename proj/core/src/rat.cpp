#include "zariski/rat.hpp"

#include <ostream>

namespace zariski {

Rat Rat::parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw ParseError("rational with zero denominator: " + text);
        return Rat(num, den);
    } catch (const std::invalid_argument&) {
        throw ParseError("not a rational: '" + text + "'");
    }
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace zariski

#include "zariski/divisor.hpp"

#include "zariski/errors.hpp"

namespace zariski {

namespace {
void check_sizes(std::size_t a, std::size_t b, const char* what) {
    if (a != b) throw DimensionMismatch(std::string(what) + ": coordinate lengths differ");
}
}  // namespace

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
    check_sizes(a.size(), b.size(), "DivisorClass +");
    DivisorClass out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.coords[i] = a.coords[i] + b.coords[i];
    return out;
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
    check_sizes(a.size(), b.size(), "DivisorClass -");
    DivisorClass out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.coords[i] = a.coords[i] - b.coords[i];
    return out;
}

DivisorClass operator*(const Int& k, const DivisorClass& a) {
    DivisorClass out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.coords[i] = k * a.coords[i];
    return out;
}

DivisorClass RationalDivisor::to_integral() const {
    DivisorClass out(size());
    for (std::size_t i = 0; i < size(); ++i) {
        if (!coords[i].is_integer())
            throw InvalidParameter("to_integral: coordinate " + coords[i].str() + " is not an integer");
        out.coords[i] = coords[i].num();
    }
    return out;
}

RationalDivisor operator+(const RationalDivisor& a, const RationalDivisor& b) {
    check_sizes(a.size(), b.size(), "RationalDivisor +");
    RationalDivisor out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.coords[i] = a.coords[i] + b.coords[i];
    return out;
}

RationalDivisor operator-(const RationalDivisor& a, const RationalDivisor& b) {
    check_sizes(a.size(), b.size(), "RationalDivisor -");
    RationalDivisor out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.coords[i] = a.coords[i] - b.coords[i];
    return out;
}

RationalDivisor operator*(const Rat& k, const RationalDivisor& a) {
    RationalDivisor out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.coords[i] = k * a.coords[i];
    return out;
}

}  // namespace zariski

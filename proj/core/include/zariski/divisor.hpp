#pragma once

#include <cstddef>

#include "zariski/rat.hpp"

namespace zariski {

// Integral divisor class: coordinates in the fixed lattice basis.
struct DivisorClass {
    IntVector coords;

    DivisorClass() = default;
    explicit DivisorClass(IntVector c) : coords(std::move(c)) {}
    explicit DivisorClass(std::size_t rank) : coords(rank) {}

    std::size_t size() const { return coords.size(); }
    bool is_zero() const {
        for (const auto& c : coords)
            if (c != 0) return false;
        return true;
    }

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
    friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
    friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
    friend DivisorClass operator*(const Int& k, const DivisorClass& a);
};

// Q-divisor class: exact rational coordinates.
struct RationalDivisor {
    RatVector coords;

    RationalDivisor() = default;
    explicit RationalDivisor(RatVector c) : coords(std::move(c)) {}
    explicit RationalDivisor(std::size_t rank) : coords(rank) {}
    explicit RationalDivisor(const DivisorClass& d) {
        coords.reserve(d.coords.size());
        for (const auto& c : d.coords) coords.emplace_back(c);
    }

    std::size_t size() const { return coords.size(); }

    // Exact integrality test; extracts integer coordinates when they exist.
    bool is_integral() const {
        for (const auto& c : coords)
            if (!c.is_integer()) return false;
        return true;
    }
    DivisorClass to_integral() const;

    friend bool operator==(const RationalDivisor&, const RationalDivisor&) = default;
    friend RationalDivisor operator+(const RationalDivisor& a, const RationalDivisor& b);
    friend RationalDivisor operator-(const RationalDivisor& a, const RationalDivisor& b);
    friend RationalDivisor operator*(const Rat& k, const RationalDivisor& a);
};

}  // namespace zariski

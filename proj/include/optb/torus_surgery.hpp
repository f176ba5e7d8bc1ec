#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "optb/lens.hpp"

namespace optb {

// p/q-surgery on the torus knot T(r,s), 0 < s < r.
struct SurgeryDescription {
    std::int64_t r = 0;
    std::int64_t s = 0;
    std::int64_t p = 0;
    std::int64_t q = 0;

    // T(r,1) is unknotted; such descriptions are flagged, not rejected.
    bool trivial_knot() const noexcept { return s == 1; }

    std::string str() const; // "T(3,2) @ -19/3"

    friend bool operator==(const SurgeryDescription&, const SurgeryDescription&) = default;
    friend auto operator<=>(const SurgeryDescription&, const SurgeryDescription&) = default;
};

// Validates gcd(r,s) = 1, 0 < s < r, gcd(p,q) = 1, q != 0.
SurgeryDescription make_surgery(std::int64_t r, std::int64_t s, std::int64_t p, std::int64_t q);

// The surgery yields a lens space iff |rsq + p| = 1, and then it is
// L(|p|, q s^2). Returns nullopt when the criterion fails.
std::optional<LensSpace> moser_forward(const SurgeryDescription& d);

// All (p, q) with p = +-m and |6q + p| = 1 whose trefoil surgery gives a
// space homeomorphic to l. Unoriented matching covers both chiralities.
// Sorted by (p, q); m >= 2.
std::vector<SurgeryDescription> trefoil_surgeries(const LensSpace& l);

// Every lens-yielding torus-knot surgery description of l: p = +-m forces
// rs|q| in {m-1, m+1}, enumerated over coprime factorizations with
// s >= 2. Sorted by (r, s, p, q); m >= 2.
std::vector<SurgeryDescription> moser_inverse(const LensSpace& l);

} // namespace optb

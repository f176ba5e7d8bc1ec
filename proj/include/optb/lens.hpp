#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace optb {

// L(m, n), stored with m >= 0 and n reduced mod m. Unoriented
// homeomorphism is n ~ +-n^{+-1} (mod m); `canonical` is the least orbit
// member, so two lens spaces are homeomorphic iff (m, canonical) agree.
// L(0,1) is S^2 x S^1 and L(1,0) is S^3.
struct LensSpace {
    std::int64_t m = 1;
    std::int64_t n = 0;
    std::int64_t canonical = 0;

    std::string str() const { return "L(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

    friend bool operator==(const LensSpace&, const LensSpace&) = default;
};

// Accepts negative m and unreduced n; throws NotALensSpace when
// gcd(m, n) != 1 or both arguments vanish.
LensSpace make_lens(std::int64_t m, std::int64_t n);

bool is_homeomorphic(const LensSpace& a, const LensSpace& b);

// The full orbit {+-n^{+-1} mod m}, sorted, duplicates removed. m >= 2.
std::vector<std::int64_t> homeo_class(const LensSpace& l);

// a mod m in [0, m); m > 0.
std::int64_t mod_nonneg(std::int64_t a, std::int64_t m);

// Inverse of a mod m; requires gcd(a, m) = 1, m >= 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

} // namespace optb

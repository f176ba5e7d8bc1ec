#include "optb/lens.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "optb/checked.hpp"
#include "optb/errors.hpp"

namespace optb {

std::int64_t mod_nonneg(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    // Extended Euclid on (a mod m, m).
    std::int64_t r0 = mod_nonneg(a, m), r1 = m;
    std::int64_t s0 = 1, s1 = 0;
    while (r1 != 0) {
        std::int64_t k = r0 / r1;
        r0 = std::exchange(r1, r0 - k * r1);
        s0 = std::exchange(s1, s0 - k * s1);
    }
    if (r0 != 1) fail(ErrorKind::NotALensSpace, "no inverse: gcd != 1");
    return mod_nonneg(s0, m);
}

LensSpace make_lens(std::int64_t m, std::int64_t n) {
    m = checked_abs(m);
    if (m == 0) {
        if (checked_abs(n) != 1) fail(ErrorKind::NotALensSpace, "L(0,n) needs n = +-1");
        return {0, 1, 1};
    }
    if (m == 1) return {1, 0, 0};
    n = mod_nonneg(n, m);
    if (std::gcd(m, n) != 1)
        fail(ErrorKind::NotALensSpace,
             "gcd(" + std::to_string(m) + "," + std::to_string(n) + ") != 1");
    std::int64_t inv = mod_inverse(n, m);
    std::int64_t canonical = std::min({n, m - n, inv, m - inv});
    return {m, n, canonical};
}

bool is_homeomorphic(const LensSpace& a, const LensSpace& b) {
    return a.m == b.m && a.canonical == b.canonical;
}

std::vector<std::int64_t> homeo_class(const LensSpace& l) {
    if (l.m < 2) fail(ErrorKind::BadParameters, "homeo_class needs m >= 2");
    std::int64_t inv = mod_inverse(l.n, l.m);
    std::vector<std::int64_t> orbit = {l.n, mod_nonneg(-l.n, l.m), inv, mod_nonneg(-inv, l.m)};
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
}

} // namespace optb

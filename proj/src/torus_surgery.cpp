#include "optb/torus_surgery.hpp"

#include <algorithm>
#include <numeric>

#include "optb/checked.hpp"
#include "optb/errors.hpp"

namespace optb {

std::string SurgeryDescription::str() const {
    return "T(" + std::to_string(r) + "," + std::to_string(s) + ") @ " + std::to_string(p) + "/" +
           std::to_string(q);
}

SurgeryDescription make_surgery(std::int64_t r, std::int64_t s, std::int64_t p, std::int64_t q) {
    if (s <= 0 || s >= r) fail(ErrorKind::BadParameters, "torus knot needs 0 < s < r");
    if (std::gcd(r, s) != 1) fail(ErrorKind::BadParameters, "torus knot needs gcd(r,s) = 1");
    if (q == 0 || std::gcd(p, q) != 1)
        fail(ErrorKind::InvalidSlope, "surgery slope p/q needs gcd(p,q) = 1 and q != 0");
    return {r, s, p, q};
}

std::optional<LensSpace> moser_forward(const SurgeryDescription& d) {
    std::int64_t crit = checked_add(checked_mul(checked_mul(d.r, d.s), d.q), d.p);
    if (crit != 1 && crit != -1) return std::nullopt;
    if (d.p == 0) fail(ErrorKind::InternalConsistency, "criterion cannot hold with p = 0");
    return make_lens(checked_abs(d.p), checked_mul(d.q, checked_mul(d.s, d.s)));
}

std::vector<SurgeryDescription> trefoil_surgeries(const LensSpace& l) {
    if (l.m < 2) fail(ErrorKind::BadParameters, "trefoil search needs m >= 2");
    std::vector<SurgeryDescription> out;
    for (std::int64_t p : {-l.m, l.m}) {
        for (std::int64_t eps : {-1, 1}) {
            // 6q + p = eps
            std::int64_t num = checked_sub(eps, p);
            if (num % 6 != 0) continue;
            std::int64_t q = num / 6;
            if (q == 0 || std::gcd(p, q) != 1) continue;
            SurgeryDescription d{3, 2, p, q};
            auto result = moser_forward(d);
            if (result && is_homeomorphic(*result, l)) out.push_back(d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SurgeryDescription> moser_inverse(const LensSpace& l) {
    if (l.m < 2) fail(ErrorKind::BadParameters, "surgery search needs m >= 2");
    std::vector<SurgeryDescription> out;
    for (std::int64_t p : {-l.m, l.m}) {
        for (std::int64_t eps : {-1, 1}) {
            std::int64_t num = checked_sub(eps, p); // rs * q, so |num| is m -+ 1
            std::int64_t mag = checked_abs(num);
            // rs runs over divisors of |num|; s = 1 (unknots) and q = 0 are
            // excluded from the inverse search.
            for (std::int64_t s = 2; checked_mul(s, s) < mag; ++s) {
                if (mag % s != 0) continue;
                for (std::int64_t r = s + 1; checked_mul(r, s) <= mag; ++r) {
                    std::int64_t rs = r * s;
                    if (mag % rs != 0 || std::gcd(r, s) != 1) continue;
                    std::int64_t q = num / rs;
                    if (q == 0 || std::gcd(p, q) != 1) continue;
                    SurgeryDescription d{r, s, p, q};
                    auto result = moser_forward(d);
                    if (result && is_homeomorphic(*result, l)) out.push_back(d);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace optb

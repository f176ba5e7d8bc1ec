#include "optb/gof.hpp"

#include <algorithm>
#include <vector>

#include "optb/checked.hpp"
#include "optb/errors.hpp"

namespace optb {

std::string gof_case_name(GofCase c) {
    switch (c) {
        case GofCase::B01: return "B01";
        case GofCase::Alpha1Special: return "ALPHA1_SPECIAL";
        case GofCase::FourOne: return "FOUR_ONE";
        case GofCase::AlphaOneFamily: return "ALPHA_ONE_FAMILY";
        case GofCase::Diophantine1: return "DIOPHANTINE_1";
        case GofCase::Diophantine2: return "DIOPHANTINE_2";
        case GofCase::None: return "NONE";
    }
    fail(ErrorKind::BadParameters, "unknown gof case");
}

namespace {

// The non-search cases: returns a verdict for m in {0, 1}, and for orbits
// containing 1 (the b(alpha,1) and b(4,1) links).
std::optional<GofVerdict> special_cases(const LensSpace& l, const std::vector<std::int64_t>& orbit) {
    if (l.m == 0) return GofVerdict{1, GofCase::B01, std::nullopt};
    // At alpha = 1 the exterior count is read off S^3 directly: both
    // trefoils and the figure eight, so three, not the b(alpha,1) two.
    if (l.m == 1) return GofVerdict{3, GofCase::Alpha1Special, std::nullopt};
    bool one_in_orbit = std::binary_search(orbit.begin(), orbit.end(), std::int64_t{1});
    if (l.m == 4 && one_in_orbit) return GofVerdict{3, GofCase::FourOne, std::nullopt};
    if (one_in_orbit) return GofVerdict{2, GofCase::AlphaOneFamily, std::nullopt};
    return std::nullopt;
}

} // namespace

GofVerdict gof_count(const LensSpace& l) {
    std::vector<std::int64_t> orbit = l.m >= 2 ? homeo_class(l) : std::vector<std::int64_t>{};
    if (auto v = special_cases(l, orbit)) return *v;

    // Diophantine families: beta = 2q+1 with m = 2pq+p+q (p,q > 1) or
    // m = 2pq+p+q+1 (p,q > 0). For fixed q both reduce to a divisibility
    // test, since 2pq+p+q = p(2q+1) + q.
    for (std::int64_t beta : orbit) {
        if (beta % 2 == 0) continue;
        std::int64_t q = (beta - 1) / 2;
        if (q < 1) continue;
        if (q > 1 && (l.m - q) % beta == 0) {
            std::int64_t p = (l.m - q) / beta;
            if (p > 1) return GofVerdict{1, GofCase::Diophantine1, GofWitness{p, q, beta}};
        }
        if ((l.m - 1 - q) % beta == 0) {
            std::int64_t p = (l.m - 1 - q) / beta;
            if (p > 0) return GofVerdict{1, GofCase::Diophantine2, GofWitness{p, q, beta}};
        }
    }
    return GofVerdict{0, GofCase::None, std::nullopt};
}

GofVerdict gof_count_bruteforce(const LensSpace& l, std::int64_t bound) {
    if (l.m > bound) fail(ErrorKind::BoundExceeded, "m exceeds the brute-force bound");
    std::vector<std::int64_t> orbit = l.m >= 2 ? homeo_class(l) : std::vector<std::int64_t>{};
    if (auto v = special_cases(l, orbit)) return *v;

    // Same orbit walk as gof_count, but every p is tried explicitly and the
    // family sums 2pq+p+q / 2pq+p+q+1 are evaluated as written.
    auto family_sum = [](std::int64_t p, std::int64_t q) {
        return checked_add(checked_add(checked_mul(2, checked_mul(p, q)), p), q);
    };
    for (std::int64_t beta : orbit) {
        if (beta % 2 == 0) continue;
        std::int64_t q = (beta - 1) / 2;
        if (q < 1) continue;
        if (q > 1)
            for (std::int64_t p = 2; p <= bound; ++p)
                if (family_sum(p, q) == l.m)
                    return GofVerdict{1, GofCase::Diophantine1, GofWitness{p, q, beta}};
        for (std::int64_t p = 1; p <= bound; ++p)
            if (checked_add(family_sum(p, q), 1) == l.m)
                return GofVerdict{1, GofCase::Diophantine2, GofWitness{p, q, beta}};
    }
    return GofVerdict{0, GofCase::None, std::nullopt};
}

} // namespace optb

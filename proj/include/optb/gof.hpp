#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "optb/lens.hpp"

namespace optb {

// Which clause of the 3-braid-representative classification decided the
// count. Precedence is fixed: B01, then alpha = 1, then b(4,1), then
// b(alpha,1), then the two Diophantine families, then none.
enum class GofCase : std::uint8_t {
    B01,              // b(0,1): one representative
    Alpha1Special,    // S^3: the two trefoils and the figure eight
    FourOne,          // b(4,1): three
    AlphaOneFamily,   // b(alpha,1), alpha != 0: two
    Diophantine1,     // alpha = 2pq+p+q,   beta = 2q+1, p,q > 1
    Diophantine2,     // alpha = 2pq+p+q+1, beta = 2q+1, p,q > 0
    None,
};

std::string gof_case_name(GofCase c);

struct GofWitness {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::int64_t beta = 0; // the orbit member 2q+1 that matched

    friend bool operator==(const GofWitness&, const GofWitness&) = default;
};

struct GofVerdict {
    int count = 0; // 0..3
    GofCase case_tag = GofCase::None;
    std::optional<GofWitness> witness; // present iff Diophantine1/2

    friend bool operator==(const GofVerdict&, const GofVerdict&) = default;
};

// Number of genus-one fibered knots in l, decided by arithmetic over the
// whole homeomorphism orbit of n.
GofVerdict gof_count(const LensSpace& l);

// Same verdict, but the Diophantine families are checked by exhausting all
// (p, q) pairs up to `bound` instead of solving the divisibility directly.
// Cross-validation oracle; throws BoundExceeded when m > bound.
GofVerdict gof_count_bruteforce(const LensSpace& l, std::int64_t bound);

} // namespace optb

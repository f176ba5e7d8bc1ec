#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "optb/gof.hpp"
#include "optb/lens.hpp"
#include "optb/torus_surgery.hpp"

namespace optb {

enum class OptbReason : std::uint8_t { HasGofKnot, TrefoilSurgery, NoCertificate };

std::string reason_name(OptbReason r);

// Verdict for "does l contain a knot whose exterior is a once-punctured
// torus bundle?". A YES always carries its certificate: either a positive
// GOF-knot count or a nonempty trefoil surgery list. Figure-eight
// surgeries never yield lens spaces, so they are not searched.
struct OptbVerdict {
    bool yes = false;
    OptbReason reason = OptbReason::NoCertificate;
    GofVerdict gof;
    std::vector<SurgeryDescription> surgeries;
    // The NO direction is only valid when |H1| = m is prime; composite-m
    // verdicts are heuristic and say so.
    bool outside_hypotheses = false;
    // Set by beta = 2 scans: the congruence oracle agreed with the surgery
    // search (a disagreement aborts the scan instead).
    std::optional<bool> congruence_consistent;
};

// Requires m >= 2; composite m throws HypothesisViolation unless
// allow_composite is set, in which case the verdict is marked
// outside_hypotheses.
OptbVerdict decide_optb(const LensSpace& l, bool allow_composite = false);

// Arithmetic possibility of a trefoil surgery for the L(m,2) class, by
// exhausting q mod m in the congruence pair 24q = +-4 and
// 24q in {+-12, +-3}. Odd prime m only. Agrees with
// trefoil_surgeries(L(m,2)) being nonempty.
bool cor5_congruence_check(std::int64_t m);

// The no-GOF-knot bullets for the L(m,2) class: true iff no admissible
// k > 0 with 2k+1 in {2, m-2, (m+1)/2, (m-1)/2} has 2kl+k+l in {m, m-1}
// for any l > 0. Odd prime m only.
bool cor5_gof_bullets_check(std::int64_t m);

struct ScanRecord {
    LensSpace lens;
    OptbVerdict verdict;
    // beta = 2, odd prime m only.
    std::optional<bool> congruence_check;
    std::optional<bool> bullets_check;
};

// The m-values a scan visits: gcd(m, beta) = 1, beta < m <= m_max,
// ascending; composite m dropped when primes_only.
std::vector<std::int64_t> scan_plan(std::int64_t beta, std::int64_t m_max, bool primes_only);

// One scan record. For beta = 2 and odd prime m the record carries both
// arithmetic cross-checks, and a congruence/surgery-search disagreement
// throws InternalConsistency.
ScanRecord scan_one(std::int64_t beta, std::int64_t m);

// Verdicts for every L(m, beta) with gcd(m, beta) = 1, beta < m <= m_max,
// ascending in m. With primes_only, composite m are skipped; otherwise
// they are included and marked outside_hypotheses.
std::vector<ScanRecord> scan_family(std::int64_t beta, std::int64_t m_max, bool primes_only);

} // namespace optb

#include "optb/decider.hpp"

#include <algorithm>
#include <numeric>

#include "optb/checked.hpp"
#include "optb/errors.hpp"
#include "optb/primality.hpp"

namespace optb {

std::string reason_name(OptbReason r) {
    switch (r) {
        case OptbReason::HasGofKnot: return "HAS_GOF_KNOT";
        case OptbReason::TrefoilSurgery: return "TREFOIL_SURGERY";
        case OptbReason::NoCertificate: return "NO_CERTIFICATE";
    }
    fail(ErrorKind::BadParameters, "unknown reason");
}

OptbVerdict decide_optb(const LensSpace& l, bool allow_composite) {
    if (l.m < 2) fail(ErrorKind::BadParameters, "decision procedure needs m >= 2");
    bool prime = is_prime(l.m);
    if (!prime && !allow_composite)
        fail(ErrorKind::HypothesisViolation,
             "|H1| = " + std::to_string(l.m) + " is composite; pass the override for a "
             "heuristic verdict");

    OptbVerdict v;
    v.outside_hypotheses = !prime;
    v.gof = gof_count(l);
    v.surgeries = trefoil_surgeries(l);
    if (v.gof.count > 0) {
        v.yes = true;
        v.reason = OptbReason::HasGofKnot;
    } else if (!v.surgeries.empty()) {
        v.yes = true;
        v.reason = OptbReason::TrefoilSurgery;
    } else {
        v.yes = false;
        v.reason = OptbReason::NoCertificate;
    }
    return v;
}

namespace {

void require_odd_prime(std::int64_t m) {
    if (m < 3 || m % 2 == 0 || !is_prime(m))
        fail(ErrorKind::NonPrime, std::to_string(m) + " is not an odd prime");
}

} // namespace

bool cor5_congruence_check(std::int64_t m) {
    require_odd_prime(m);
    // 24q = +-4 comes from doubling 12q = +-2 (the surgery criterion);
    // 24q in {12, -12, 3, -3} comes from sextupling 4q = 2, -2, (m+1)/2,
    // (m-1)/2 (the homeomorphism constraint).
    auto first = [&](std::int64_t v) { return v == mod_nonneg(4, m) || v == mod_nonneg(-4, m); };
    auto second = [&](std::int64_t v) {
        return v == mod_nonneg(12, m) || v == mod_nonneg(-12, m) || v == mod_nonneg(3, m) ||
               v == mod_nonneg(-3, m);
    };
    for (std::int64_t q = 0; q < m; ++q) {
        std::int64_t v = mod_nonneg(checked_mul(24, q), m);
        if (first(v) && second(v)) return true;
    }
    return false;
}

bool cor5_gof_bullets_check(std::int64_t m) {
    require_odd_prime(m);
    // Admissible k > 0 with 2k+1 equal to one of the four orbit members of
    // the beta = 2 class.
    std::vector<std::int64_t> betas = {2, m - 2, (m + 1) / 2, (m - 1) / 2};
    for (std::int64_t beta : betas) {
        if (beta % 2 == 0 || beta < 3) continue; // 2k+1 must be odd with k > 0
        std::int64_t k = (beta - 1) / 2;
        // l <= m is lossless: for k >= 1, 2kl+k+l >= 3l+1 > m once l > m.
        for (std::int64_t l = 1; l <= m; ++l) {
            std::int64_t sum = checked_add(checked_add(checked_mul(2, checked_mul(k, l)), k), l);
            if (sum == m || sum == m - 1) return false;
        }
    }
    return true;
}

std::vector<std::int64_t> scan_plan(std::int64_t beta, std::int64_t m_max, bool primes_only) {
    if (beta <= 0) fail(ErrorKind::BadParameters, "beta must be positive");
    if (m_max < beta + 1) fail(ErrorKind::BadParameters, "m_max must be at least beta + 1");
    std::vector<std::int64_t> plan;
    for (std::int64_t m = std::max<std::int64_t>(2, beta + 1); m <= m_max; ++m) {
        if (std::gcd(m, beta) != 1) continue;
        if (primes_only && !is_prime(m)) continue;
        plan.push_back(m);
    }
    return plan;
}

ScanRecord scan_one(std::int64_t beta, std::int64_t m) {
    ScanRecord rec;
    rec.lens = make_lens(m, beta);
    rec.verdict = decide_optb(rec.lens, /*allow_composite=*/true);
    if (beta == 2 && m % 2 == 1 && is_prime(m)) {
        rec.congruence_check = cor5_congruence_check(m);
        rec.bullets_check = cor5_gof_bullets_check(m);
        bool consistent = *rec.congruence_check == !rec.verdict.surgeries.empty();
        rec.verdict.congruence_consistent = consistent;
        if (!consistent)
            fail(ErrorKind::InternalConsistency,
                 "congruence oracle disagrees with the trefoil surgery search at m = " +
                     std::to_string(m));
    }
    return rec;
}

std::vector<ScanRecord> scan_family(std::int64_t beta, std::int64_t m_max, bool primes_only) {
    std::vector<ScanRecord> out;
    for (std::int64_t m : scan_plan(beta, m_max, primes_only)) out.push_back(scan_one(beta, m));
    return out;
}

} // namespace optb

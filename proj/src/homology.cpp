#include "optb/homology.hpp"

#include <algorithm>
#include <numeric>

#include "optb/checked.hpp"
#include "optb/errors.hpp"

namespace optb {

HomologyMatrix::HomologyMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : e_{a, b, c, d} {
    std::int64_t det = checked_sub(checked_mul(a, d), checked_mul(b, c));
    if (det != 1) fail(ErrorKind::BadParameters, "homology matrix must have determinant 1");
}

HomologyMatrix HomologyMatrix::operator*(const HomologyMatrix& r) const {
    auto dot = [](std::int64_t u, std::int64_t v, std::int64_t s, std::int64_t t) {
        return checked_add(checked_mul(u, v), checked_mul(s, t));
    };
    return HomologyMatrix(dot(e_[0], r.e_[0], e_[1], r.e_[2]), dot(e_[0], r.e_[1], e_[1], r.e_[3]),
                          dot(e_[2], r.e_[0], e_[3], r.e_[2]), dot(e_[2], r.e_[1], e_[3], r.e_[3]));
}

std::int64_t HomologyMatrix::trace() const { return checked_add(e_[0], e_[3]); }

namespace {

// Letter matrices come in closed form; no repeated squaring needed.
HomologyMatrix letter_matrix(const Letter& l) {
    switch (l.gen) {
        case Gen::X: return HomologyMatrix(1, l.exp, 0, 1);
        case Gen::Y: return HomologyMatrix(1, 0, checked_neg(l.exp), 1);
        case Gen::Delta: return HomologyMatrix::identity();
        case Gen::W:
            // w acts as -I, so only the parity of the exponent matters.
            return (l.exp % 2 == 0) ? HomologyMatrix::identity() : HomologyMatrix(-1, 0, 0, -1);
    }
    fail(ErrorKind::BadParameters, "unknown generator");
}

} // namespace

HomologyMatrix word_to_matrix(const TwistWord& word) {
    HomologyMatrix m;
    for (const Letter& l : word.letters()) m = m * letter_matrix(l);
    return m;
}

AbelianGroup AbelianGroup::free(int rank) {
    AbelianGroup g;
    g.free_rank_ = rank;
    return g;
}

AbelianGroup AbelianGroup::cyclic(std::int64_t n) {
    n = checked_abs(n);
    if (n == 0) return free(1);
    AbelianGroup g;
    if (n >= 2) g.torsion_.push_back(n);
    return g;
}

AbelianGroup AbelianGroup::make(int free_rank, std::vector<std::int64_t> torsion) {
    AbelianGroup g = free(free_rank);
    for (std::int64_t t : torsion) g = g.direct_sum(cyclic(t));
    return g;
}

std::optional<std::int64_t> AbelianGroup::order() const {
    if (free_rank_ > 0) return std::nullopt;
    std::int64_t n = 1;
    for (std::int64_t t : torsion_) n = checked_mul(n, t);
    return n;
}

AbelianGroup AbelianGroup::direct_sum(const AbelianGroup& other) const {
    AbelianGroup g;
    g.free_rank_ = free_rank_ + other.free_rank_;
    std::vector<std::int64_t>& t = g.torsion_;
    t = torsion_;
    t.insert(t.end(), other.torsion_.begin(), other.torsion_.end());

    // Re-normalize to invariant factors. Z/a + Z/b = Z/gcd + Z/lcm, applied
    // until every pair divides; avoids factoring.
    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(t.begin(), t.end());
        for (std::size_t i = 0; i + 1 < t.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < t.size() && !changed; ++j) {
                if (t[j] % t[i] != 0) {
                    std::int64_t d = std::gcd(t[i], t[j]);
                    std::int64_t l = checked_mul(t[i] / d, t[j]);
                    t[i] = d;
                    t[j] = l;
                    changed = true;
                }
            }
        }
    }
    std::erase_if(t, [](std::int64_t v) { return v == 1; });
    return g;
}

std::string AbelianGroup::str() const {
    if (is_trivial()) return "0";
    std::string out;
    if (free_rank_ == 1) out = "Z";
    else if (free_rank_ > 1) out = "Z^" + std::to_string(free_rank_);
    for (std::int64_t t : torsion_) {
        if (!out.empty()) out += " + ";
        out += "Z/" + std::to_string(t);
    }
    return out;
}

AbelianGroup cokernel(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    // Smith normal form of a 2x2 integer matrix by elementary operations.
    // Reduce until b = c = 0 and a | d, tracking nothing but the entries
    // (the transforms are unimodular, so the cokernel is unchanged).
    auto swap_rows = [&] { std::swap(a, c), std::swap(b, d); };
    auto swap_cols = [&] { std::swap(a, b), std::swap(c, d); };

    while (true) {
        if (a == 0) {
            if (b != 0) swap_cols();
            else if (c != 0) swap_rows();
            else if (d != 0) { swap_rows(); swap_cols(); }
            else break; // zero matrix
        }
        if (b != 0 && b % a != 0) {
            std::int64_t k = b / a; // col2 -= k * col1
            b = checked_sub(b, checked_mul(k, a));
            d = checked_sub(d, checked_mul(k, c));
            swap_cols();
            continue;
        }
        if (c != 0 && c % a != 0) {
            std::int64_t k = c / a; // row2 -= k * row1
            c = checked_sub(c, checked_mul(k, a));
            d = checked_sub(d, checked_mul(k, b));
            swap_rows();
            continue;
        }
        if (b != 0) { // b divisible by a: clear it
            std::int64_t k = b / a;
            b = 0;
            d = checked_sub(d, checked_mul(k, c));
        }
        if (c != 0) {
            std::int64_t k = c / a;
            c = 0;
            d = checked_sub(d, checked_mul(k, 0)); // row op with b already 0
        }
        if (d % a != 0) {
            // Fold d into the pivot: add row2 to row1 and restart.
            b = checked_add(b, d);
            continue;
        }
        break;
    }

    int rank = 0;
    std::vector<std::int64_t> torsion;
    for (std::int64_t diag : {a, d}) {
        if (diag == 0) ++rank;
        else if (checked_abs(diag) >= 2) torsion.push_back(checked_abs(diag));
    }
    std::sort(torsion.begin(), torsion.end());
    return AbelianGroup::make(rank, torsion);
}

AbelianGroup h1_open_book(const TwistWord& word) {
    HomologyMatrix m = word_to_matrix(word);
    return cokernel(checked_sub(m.a(), 1), m.b(), m.c(), checked_sub(m.d(), 1));
}

AbelianGroup h1_binding_surgery(const TwistWord& word, std::int64_t p, std::int64_t q) {
    if (q == 0 || std::gcd(p, q) != 1)
        fail(ErrorKind::InvalidSlope, "surgery slope p/q needs gcd(p,q) = 1 and q != 0");
    if (p <= 1) fail(ErrorKind::UnsupportedSlope, "binding surgery formula requires p > 1");
    // The binding does not algebraically link the other surgery curves, so
    // the slope's q never enters.
    return h1_open_book(word).direct_sum(AbelianGroup::cyclic(p));
}

} // namespace optb

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "optb/twist_word.hpp"

namespace optb {

// Action of a mapping class on H1(punctured torus) = Z^2. Entries are
// exact 64-bit integers; any product that would wrap throws Overflow.
// Determinant is always 1 (enforced on construction).
class HomologyMatrix {
  public:
    HomologyMatrix() : e_{1, 0, 0, 1} {}
    HomologyMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

    static HomologyMatrix identity() { return HomologyMatrix(); }

    std::int64_t a() const { return e_[0]; }
    std::int64_t b() const { return e_[1]; }
    std::int64_t c() const { return e_[2]; }
    std::int64_t d() const { return e_[3]; }

    HomologyMatrix operator*(const HomologyMatrix& rhs) const;
    std::int64_t trace() const;

    friend bool operator==(const HomologyMatrix&, const HomologyMatrix&) = default;

  private:
    std::array<std::int64_t, 4> e_; // row-major a b / c d
};

// Finitely generated abelian group in invariant-factor form:
// Z^free_rank + Z/d1 + ... + Z/dk with 2 <= d1 | d2 | ... | dk.
class AbelianGroup {
  public:
    AbelianGroup() = default; // trivial group

    static AbelianGroup trivial() { return {}; }
    static AbelianGroup free(int rank);
    // cyclic(1) is trivial, cyclic(0) is Z.
    static AbelianGroup cyclic(std::int64_t n);
    static AbelianGroup make(int free_rank, std::vector<std::int64_t> torsion);

    int free_rank() const noexcept { return free_rank_; }
    const std::vector<std::int64_t>& torsion() const noexcept { return torsion_; }

    bool is_trivial() const noexcept { return free_rank_ == 0 && torsion_.empty(); }
    bool is_finite() const noexcept { return free_rank_ == 0; }

    // Product of the torsion factors, or nullopt when free_rank > 0.
    std::optional<std::int64_t> order() const;

    // Direct sum, re-normalized to a divisibility chain.
    AbelianGroup direct_sum(const AbelianGroup& other) const;

    // "0", "Z/4", "Z + Z/7", "Z^2", ...
    std::string str() const;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

  private:
    int free_rank_ = 0;
    std::vector<std::int64_t> torsion_;
};

// Fixed homological representation of the generators:
//   x -> [[1,1],[0,1]],  y -> [[1,0],[-1,1]],  d -> I,  w -> -I,
// and word_to_matrix(l1 l2 ... lk) = M(l1) * M(l2) * ... * M(lk).
HomologyMatrix word_to_matrix(const TwistWord& word);

// Cokernel of the integer matrix [[a,b],[c,d]] acting on Z^2, via Smith
// normal form.
AbelianGroup cokernel(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

// H1 of the open book with the given monodromy: coker(phi_* - I) on Z^2.
AbelianGroup h1_open_book(const TwistWord& word);

// H1 after p/q-surgery on the binding: h1_open_book(word) + Z/p.
// Requires p > 1 (UnsupportedSlope otherwise), gcd(p,q) = 1 and q != 0
// (InvalidSlope otherwise). q does not affect the result.
AbelianGroup h1_binding_surgery(const TwistWord& word, std::int64_t p, std::int64_t q);

} // namespace optb

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "optb/homology.hpp"
#include "optb/twist_word.hpp"

namespace optb {

// The six normal forms every genus-one, one-boundary open book monodromy
// reduces to (d = boundary-twist exponent throughout):
//   A: d^d x^{a1} y^-1 ... x^{an} y^-1      a_i >= 0, some a_j != 0
//   B: d^d w x^{a1} y^-1 ... x^{an} y^-1    same constraint
//   C: d^d y^m                              m in Z
//   D: d^d w y^m                            m in Z
//   E: d^d x^m y^-1                         m in {-1,-2,-3}
//   F: d^d w x^m y^-1                       m in {-1,-2,-3}
class MonodromyType {
  public:
    enum class Tag : std::uint8_t { A, B, C, D, E, F };

    static MonodromyType make_A(std::int64_t d, std::vector<std::int64_t> a);
    static MonodromyType make_B(std::int64_t d, std::vector<std::int64_t> a);
    static MonodromyType make_C(std::int64_t d, std::int64_t m);
    static MonodromyType make_D(std::int64_t d, std::int64_t m);
    static MonodromyType make_E(std::int64_t d, std::int64_t m);
    static MonodromyType make_F(std::int64_t d, std::int64_t m);

    Tag tag() const noexcept { return tag_; }
    std::int64_t d() const noexcept { return d_; }
    const std::vector<std::int64_t>& a() const; // A/B only
    std::int64_t m() const;                     // C-F only

    bool has_involution() const noexcept; // B, D, F carry the leading w

    std::string str() const; // "A(d=0; a=1,2)", "D(d=2; m=5)", ...

    friend bool operator==(const MonodromyType&, const MonodromyType&) = default;

  private:
    MonodromyType(Tag tag, std::int64_t d) : tag_(tag), d_(d) {}

    Tag tag_;
    std::int64_t d_;
    std::vector<std::int64_t> a_;
    std::int64_t m_ = 0;
};

char tag_char(MonodromyType::Tag t);

// The literal normal-form word for the type.
TwistWord word_of_type(const MonodromyType& t);

// H1 of the open book for the type, checked against the closed-form
// summary (A: trivial iff n=1, a1=1; B: order >= 4; C: infinite; D: order
// exactly 4; E: trivial iff m=-1; F: trivial iff m=-3). A mismatch is a
// library bug and throws InternalConsistency.
AbelianGroup h1_table(const MonodromyType& t);

// All type instances with d in [d_lo, d_hi], n and |parameters| bounded by
// param_bound, whose open book has trivial H1. Sorted by (tag, d, params).
std::vector<MonodromyType> trivial_h1_candidates(std::int64_t d_lo, std::int64_t d_hi,
                                                 std::int64_t param_bound);

enum class ReducedKnot : std::uint8_t { FigureEight, LeftTrefoil, RightTrefoil };

std::string knot_name(ReducedKnot k);

struct BindingReduction {
    ReducedKnot knot;
    std::int64_t p;
    std::int64_t q; // q - d*p of the input slope

    friend bool operator==(const BindingReduction&, const BindingReduction&) = default;
};

// p/q-surgery on the binding of the trivial-H1 candidate family
// (1: d^d x y^-1, 2: d^d x^-1 y^-1, 3: d^d w x^-3 y^-1) equals
// p/(q-dp)-surgery on the figure eight / left trefoil / right trefoil
// respectively.
BindingReduction reduce_binding_surgery(int family, std::int64_t d, std::int64_t p, std::int64_t q);

} // namespace optb

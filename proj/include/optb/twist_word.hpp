#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace optb {

// Dehn-twist generators of the genus-one, one-boundary mapping class group:
// x, y are right-handed twists about dual non-separating curves, d (delta)
// is the twist about a boundary-parallel curve, w is the hyperelliptic
// involution (acts as -I on H1).
enum class Gen : std::uint8_t { X, Y, Delta, W };

char gen_char(Gen g);

struct Letter {
    Gen gen;
    std::int64_t exp; // never 0 in a stored word

    friend bool operator==(const Letter&, const Letter&) = default;
};

// A monodromy word in canonical run-length form: adjacent letters always
// have distinct generators and nonzero exponents. The empty word is the
// identity monodromy. Composition reads left to right.
class TwistWord {
  public:
    TwistWord() = default;

    // Canonicalizes: drops zero exponents, merges equal-generator runs
    // (cascading, so "x^2 x^-2" collapses to the identity).
    static TwistWord from_letters(const std::vector<Letter>& letters);

    // Grammar: word := token (SP+ token)*, token := ("x"|"y"|"d"|"w") ("^" "-"? digit+)?
    // An omitted exponent means 1. Empty input is the identity word.
    // Throws BadWord on malformed tokens or an explicit zero exponent.
    static TwistWord parse(const std::string& text);

    // Exact inverse of parse on canonical words; "^k" appears only for k != 1.
    std::string str() const;

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    bool is_identity() const noexcept { return letters_.empty(); }

    // Concatenation (composition of monodromies), canonicalized at the seam.
    TwistWord concat(const TwistWord& rhs) const;

    // Reversed letters with negated exponents; w * w.inverse() is the identity.
    TwistWord inverse() const;

    friend bool operator==(const TwistWord&, const TwistWord&) = default;

  private:
    void push(Gen g, std::int64_t exp);

    std::vector<Letter> letters_;
};

} // namespace optb

#include "optb/twist_word.hpp"

#include <charconv>
#include <sstream>

#include "optb/checked.hpp"
#include "optb/errors.hpp"

namespace optb {

char gen_char(Gen g) {
    switch (g) {
        case Gen::X: return 'x';
        case Gen::Y: return 'y';
        case Gen::Delta: return 'd';
        case Gen::W: return 'w';
    }
    fail(ErrorKind::BadParameters, "unknown generator");
}

void TwistWord::push(Gen g, std::int64_t exp) {
    if (exp == 0) return;
    if (!letters_.empty() && letters_.back().gen == g) {
        std::int64_t merged = checked_add(letters_.back().exp, exp);
        letters_.pop_back();
        // Merging may expose another run of the same generator.
        push(g, merged);
        return;
    }
    letters_.push_back({g, exp});
}

TwistWord TwistWord::from_letters(const std::vector<Letter>& letters) {
    TwistWord w;
    for (const Letter& l : letters) w.push(l.gen, l.exp);
    return w;
}

TwistWord TwistWord::concat(const TwistWord& rhs) const {
    TwistWord w = *this;
    for (const Letter& l : rhs.letters_) w.push(l.gen, l.exp);
    return w;
}

TwistWord TwistWord::inverse() const {
    TwistWord w;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        w.push(it->gen, checked_neg(it->exp));
    return w;
}

namespace {

Letter parse_token(const std::string& tok) {
    Gen g;
    switch (tok[0]) {
        case 'x': g = Gen::X; break;
        case 'y': g = Gen::Y; break;
        case 'd': g = Gen::Delta; break;
        case 'w': g = Gen::W; break;
        default: fail(ErrorKind::BadWord, "unknown generator in token '" + tok + "'");
    }
    if (tok.size() == 1) return {g, 1};
    if (tok[1] != '^' || tok.size() == 2)
        fail(ErrorKind::BadWord, "malformed token '" + tok + "'");

    const char* first = tok.data() + 2;
    const char* last = tok.data() + tok.size();
    std::int64_t exp = 0;
    auto [ptr, ec] = std::from_chars(first, last, exp);
    if (ec == std::errc::result_out_of_range)
        fail(ErrorKind::Overflow, "exponent out of 64-bit range in token '" + tok + "'");
    if (ec != std::errc() || ptr != last)
        fail(ErrorKind::BadWord, "malformed exponent in token '" + tok + "'");
    if (exp == 0) fail(ErrorKind::BadWord, "zero exponent in token '" + tok + "'");
    return {g, exp};
}

} // namespace

TwistWord TwistWord::parse(const std::string& text) {
    TwistWord w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        Letter l = parse_token(tok);
        w.push(l.gen, l.exp);
    }
    return w;
}

std::string TwistWord::str() const {
    std::string out;
    for (const Letter& l : letters_) {
        if (!out.empty()) out += ' ';
        out += gen_char(l.gen);
        if (l.exp != 1) {
            out += '^';
            out += std::to_string(l.exp);
        }
    }
    return out;
}

} // namespace optb

#include "optb/monodromy.hpp"

#include <algorithm>
#include <numeric>

#include "optb/checked.hpp"
#include "optb/errors.hpp"

namespace optb {

namespace {

void check_a_params(const std::vector<std::int64_t>& a) {
    if (a.empty()) fail(ErrorKind::BadParameters, "types A/B need at least one exponent a_i");
    bool some_nonzero = false;
    for (std::int64_t v : a) {
        if (v < 0) fail(ErrorKind::BadParameters, "types A/B require a_i >= 0");
        if (v != 0) some_nonzero = true;
    }
    if (!some_nonzero) fail(ErrorKind::BadParameters, "types A/B require some a_j != 0");
}

void check_ef_param(std::int64_t m) {
    if (m < -3 || m > -1) fail(ErrorKind::BadParameters, "types E/F require m in {-1,-2,-3}");
}

} // namespace

MonodromyType MonodromyType::make_A(std::int64_t d, std::vector<std::int64_t> a) {
    check_a_params(a);
    MonodromyType t(Tag::A, d);
    t.a_ = std::move(a);
    return t;
}

MonodromyType MonodromyType::make_B(std::int64_t d, std::vector<std::int64_t> a) {
    check_a_params(a);
    MonodromyType t(Tag::B, d);
    t.a_ = std::move(a);
    return t;
}

MonodromyType MonodromyType::make_C(std::int64_t d, std::int64_t m) {
    MonodromyType t(Tag::C, d);
    t.m_ = m;
    return t;
}

MonodromyType MonodromyType::make_D(std::int64_t d, std::int64_t m) {
    MonodromyType t(Tag::D, d);
    t.m_ = m;
    return t;
}

MonodromyType MonodromyType::make_E(std::int64_t d, std::int64_t m) {
    check_ef_param(m);
    MonodromyType t(Tag::E, d);
    t.m_ = m;
    return t;
}

MonodromyType MonodromyType::make_F(std::int64_t d, std::int64_t m) {
    check_ef_param(m);
    MonodromyType t(Tag::F, d);
    t.m_ = m;
    return t;
}

const std::vector<std::int64_t>& MonodromyType::a() const {
    if (tag_ != Tag::A && tag_ != Tag::B)
        fail(ErrorKind::BadParameters, "a-parameters exist only for types A/B");
    return a_;
}

std::int64_t MonodromyType::m() const {
    if (tag_ == Tag::A || tag_ == Tag::B)
        fail(ErrorKind::BadParameters, "m-parameter exists only for types C-F");
    return m_;
}

bool MonodromyType::has_involution() const noexcept {
    return tag_ == Tag::B || tag_ == Tag::D || tag_ == Tag::F;
}

char tag_char(MonodromyType::Tag t) { return static_cast<char>('A' + static_cast<int>(t)); }

std::string MonodromyType::str() const {
    std::string out(1, tag_char(tag_));
    out += "(d=" + std::to_string(d_);
    if (tag_ == Tag::A || tag_ == Tag::B) {
        out += "; a=";
        for (std::size_t i = 0; i < a_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(a_[i]);
        }
    } else {
        out += "; m=" + std::to_string(m_);
    }
    return out + ")";
}

TwistWord word_of_type(const MonodromyType& t) {
    std::vector<Letter> letters;
    letters.push_back({Gen::Delta, t.d()});
    if (t.has_involution()) letters.push_back({Gen::W, 1});
    switch (t.tag()) {
        case MonodromyType::Tag::A:
        case MonodromyType::Tag::B:
            for (std::int64_t ai : t.a()) {
                letters.push_back({Gen::X, ai});
                letters.push_back({Gen::Y, -1});
            }
            break;
        case MonodromyType::Tag::C:
        case MonodromyType::Tag::D:
            letters.push_back({Gen::Y, t.m()});
            break;
        case MonodromyType::Tag::E:
        case MonodromyType::Tag::F:
            letters.push_back({Gen::X, t.m()});
            letters.push_back({Gen::Y, -1});
            break;
    }
    return TwistWord::from_letters(letters);
}

namespace {

bool order_is(const AbelianGroup& g, std::int64_t n) {
    auto o = g.order();
    return o && *o == n;
}

// Closed-form summary per type; infinite counts as "> 1" and ">= 4".
bool summary_holds(const MonodromyType& t, const AbelianGroup& g) {
    using Tag = MonodromyType::Tag;
    switch (t.tag()) {
        case Tag::A: {
            bool expect_trivial = t.a().size() == 1 && t.a()[0] == 1;
            return order_is(g, 1) == expect_trivial;
        }
        case Tag::B: return !g.is_finite() || *g.order() >= 4;
        case Tag::C: return !g.is_finite();
        case Tag::D: return order_is(g, 4);
        case Tag::E: return order_is(g, 1) == (t.m() == -1);
        case Tag::F: return order_is(g, 1) == (t.m() == -3);
    }
    return false;
}

} // namespace

AbelianGroup h1_table(const MonodromyType& t) {
    AbelianGroup g = h1_open_book(word_of_type(t));
    if (!summary_holds(t, g))
        fail(ErrorKind::InternalConsistency,
             "computed H1 = " + g.str() + " contradicts the closed-form table for " + t.str());
    return g;
}

namespace {

// Enumerate exponent vectors (a_1..a_n), each in [0, bound], some nonzero.
template <typename Fn>
void for_each_a(std::int64_t n, std::int64_t bound, std::vector<std::int64_t>& a, Fn&& fn) {
    if (static_cast<std::int64_t>(a.size()) == n) {
        if (std::any_of(a.begin(), a.end(), [](std::int64_t v) { return v != 0; })) fn(a);
        return;
    }
    for (std::int64_t v = 0; v <= bound; ++v) {
        a.push_back(v);
        for_each_a(n, bound, a, fn);
        a.pop_back();
    }
}

} // namespace

std::vector<MonodromyType> trivial_h1_candidates(std::int64_t d_lo, std::int64_t d_hi,
                                                 std::int64_t param_bound) {
    if (param_bound <= 0) fail(ErrorKind::BadParameters, "param_bound must be positive");
    std::vector<MonodromyType> out;
    auto keep = [&](const MonodromyType& t) {
        if (order_is(h1_table(t), 1)) out.push_back(t);
    };
    for (std::int64_t d = d_lo; d <= d_hi; ++d) {
        std::vector<std::int64_t> a;
        for (std::int64_t n = 1; n <= param_bound; ++n)
            for_each_a(n, param_bound, a, [&](const std::vector<std::int64_t>& v) {
                keep(MonodromyType::make_A(d, v));
            });
        for (std::int64_t n = 1; n <= param_bound; ++n)
            for_each_a(n, param_bound, a, [&](const std::vector<std::int64_t>& v) {
                keep(MonodromyType::make_B(d, v));
            });
        for (std::int64_t m = -param_bound; m <= param_bound; ++m) {
            keep(MonodromyType::make_C(d, m));
            keep(MonodromyType::make_D(d, m));
        }
        for (std::int64_t m = -3; m <= -1; ++m) {
            if (-m > param_bound) continue;
            keep(MonodromyType::make_E(d, m));
            keep(MonodromyType::make_F(d, m));
        }
    }
    std::sort(out.begin(), out.end(), [](const MonodromyType& l, const MonodromyType& r) {
        if (l.tag() != r.tag()) return l.tag() < r.tag();
        if (l.d() != r.d()) return l.d() < r.d();
        auto params = [](const MonodromyType& t) {
            return (t.tag() == MonodromyType::Tag::A || t.tag() == MonodromyType::Tag::B)
                       ? t.a()
                       : std::vector<std::int64_t>{t.m()};
        };
        return params(l) < params(r);
    });
    return out;
}

std::string knot_name(ReducedKnot k) {
    switch (k) {
        case ReducedKnot::FigureEight: return "figure-eight";
        case ReducedKnot::LeftTrefoil: return "left-trefoil";
        case ReducedKnot::RightTrefoil: return "right-trefoil";
    }
    fail(ErrorKind::BadParameters, "unknown knot");
}

BindingReduction reduce_binding_surgery(int family, std::int64_t d, std::int64_t p,
                                        std::int64_t q) {
    if (q == 0 || std::gcd(p, q) != 1)
        fail(ErrorKind::InvalidSlope, "surgery slope p/q needs gcd(p,q) = 1 and q != 0");
    ReducedKnot knot;
    switch (family) {
        case 1: knot = ReducedKnot::FigureEight; break;
        case 2: knot = ReducedKnot::LeftTrefoil; break;
        case 3: knot = ReducedKnot::RightTrefoil; break;
        default: fail(ErrorKind::BadParameters, "candidate family index must be 1, 2 or 3");
    }
    return {knot, p, checked_sub(q, checked_mul(d, p))};
}

} // namespace optb

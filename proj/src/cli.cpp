#include "optb/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "optb/decider.hpp"
#include "optb/errors.hpp"
#include "optb/gof.hpp"
#include "optb/homology.hpp"
#include "optb/lens.hpp"
#include "optb/monodromy.hpp"
#include "optb/records.hpp"
#include "optb/scan_store.hpp"
#include "optb/torus_surgery.hpp"
#include "optb/twist_word.hpp"

namespace optb::cli {

namespace {

using nlohmann::json;

enum class Mode { Table, JsonLines };

std::int64_t parse_int(const std::string& text, const std::string& flag) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw CLI::ValidationError(flag, "'" + text + "' is not an integer");
    return v;
}

// "P/Q"; a bare "P" means P/1.
std::pair<std::int64_t, std::int64_t> parse_slope(const std::string& text,
                                                  const std::string& flag) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return {parse_int(text, flag), 1};
    return {parse_int(text.substr(0, slash), flag), parse_int(text.substr(slash + 1), flag)};
}

// "LO:HI"
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text,
                                                  const std::string& flag) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError(flag, "expected LO:HI, got '" + text + "'");
    return {parse_int(text.substr(0, colon), flag), parse_int(text.substr(colon + 1), flag)};
}

std::string order_str(const AbelianGroup& g) {
    auto o = g.order();
    return o ? std::to_string(*o) : "inf";
}

json type_json(const MonodromyType& t) {
    json j{{"type", std::string(1, tag_char(t.tag()))},
           {"d", t.d()},
           {"word", word_of_type(t).str()}};
    if (t.tag() == MonodromyType::Tag::A || t.tag() == MonodromyType::Tag::B) j["a"] = t.a();
    else j["m"] = t.m();
    return j;
}

void emit_scan_record(const json& rec, Mode mode, std::ostream& out) {
    if (mode == Mode::JsonLines) {
        out << rec.dump() << "\n";
        return;
    }
    out << "L(" << rec.at("m").get<std::int64_t>() << "," << rec.at("n").get<std::int64_t>()
        << ")  " << rec.at("verdict").get<std::string>() << "  ["
        << rec.at("reason").get<std::string>() << "]  gof="
        << rec.at("gof").at("count").get<int>() << "(" << rec.at("gof").at("case").get<std::string>()
        << ")  surgeries=" << rec.at("surgeries").size();
    if (rec.contains("congruence_check"))
        out << "  congruence=" << (rec["congruence_check"].get<bool>() ? "T" : "F");
    if (rec.contains("bullets_check"))
        out << "  bullets=" << (rec["bullets_check"].get<bool>() ? "T" : "F");
    if (rec.at("outside_hypotheses").get<bool>()) out << "  [outside-hypotheses]";
    out << "\n";
}

struct ScanOptions {
    std::int64_t beta = 2;
    std::int64_t m_max = 0;
    bool primes_only = false;
    std::string out_file;
};

void run_scan(const ScanOptions& opt, Mode mode, std::ostream& out) {
    auto plan = scan_plan(opt.beta, opt.m_max, opt.primes_only);
    if (opt.out_file.empty()) {
        for (std::int64_t m : plan) emit_scan_record(to_json(scan_one(opt.beta, m)), mode, out);
        return;
    }
    ScanStore store = ScanStore::open(opt.out_file, opt.beta);
    for (std::int64_t m : plan) {
        if (!store.has(m)) store.append(to_json(scan_one(opt.beta, m)));
        emit_scan_record(store.get(m), mode, out);
    }
}

Mode default_mode() {
    const char* env = std::getenv("OPTB_OUTPUT");
    if (env && (std::string(env) == "jsonl" || std::string(env) == "json-lines"))
        return Mode::JsonLines;
    return Mode::Table;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Genus-one fibered knots, torus-knot surgeries and once-punctured torus "
                 "bundle certificates in lens spaces"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string mode_name = default_mode() == Mode::JsonLines ? "jsonl" : "table";
    app.add_option("--output", mode_name, "output mode (jsonl = one JSON record per line)")
        ->check(CLI::IsMember({"table", "jsonl", "json-lines"}));
    auto mode = [&] { return mode_name == "table" ? Mode::Table : Mode::JsonLines; };

    // h1 --word W [--surgery P/Q]
    auto* h1_cmd = app.add_subcommand("h1", "H1 of an open book, or of surgery on its binding");
    std::string h1_word, h1_slope;
    h1_cmd->add_option("--word", h1_word, "monodromy word, e.g. \"x y^3 x\"")->required();
    h1_cmd->add_option("--surgery", h1_slope, "binding surgery slope P/Q");
    h1_cmd->callback([&] {
        TwistWord w = TwistWord::parse(h1_word);
        AbelianGroup g;
        json j{{"word", w.str()}};
        if (h1_slope.empty()) {
            g = h1_open_book(w);
        } else {
            auto [p, q] = parse_slope(h1_slope, "--surgery");
            g = h1_binding_surgery(w, p, q);
            j["surgery"] = std::to_string(p) + "/" + std::to_string(q);
        }
        j["h1"] = to_json(g);
        if (mode() == Mode::JsonLines) out << j.dump() << "\n";
        else out << "H1 = " << g.str() << "  (order " << order_str(g) << ")\n";
    });

    // h1-type --type T --d D [--a LIST | --m M]
    auto* ht_cmd = app.add_subcommand("h1-type", "H1 for a normal-form monodromy type A-F");
    std::string ht_tag;
    std::int64_t ht_d = 0, ht_m = 0;
    std::vector<std::int64_t> ht_a;
    ht_cmd->add_option("--type", ht_tag, "one of A B C D E F")->required();
    ht_cmd->add_option("--d", ht_d, "boundary twist exponent")->required();
    ht_cmd->add_option("--a", ht_a, "comma-separated a_1,...,a_n (types A/B)")->delimiter(',');
    ht_cmd->add_option("--m", ht_m, "m parameter (types C-F)");
    ht_cmd->callback([&] {
        if (ht_tag.size() != 1 || ht_tag[0] < 'A' || ht_tag[0] > 'F')
            throw CLI::ValidationError("--type", "expected one of A B C D E F");
        bool wants_a = ht_tag[0] == 'A' || ht_tag[0] == 'B';
        if (wants_a && (ht_cmd->count("--a") == 0 || ht_cmd->count("--m") != 0))
            throw CLI::ValidationError("--a", "types A/B take --a, not --m");
        if (!wants_a && (ht_cmd->count("--m") == 0 || ht_cmd->count("--a") != 0))
            throw CLI::ValidationError("--m", "types C-F take --m, not --a");
        MonodromyType t = [&] {
            switch (ht_tag[0]) {
                case 'A': return MonodromyType::make_A(ht_d, ht_a);
                case 'B': return MonodromyType::make_B(ht_d, ht_a);
                case 'C': return MonodromyType::make_C(ht_d, ht_m);
                case 'D': return MonodromyType::make_D(ht_d, ht_m);
                case 'E': return MonodromyType::make_E(ht_d, ht_m);
                default: return MonodromyType::make_F(ht_d, ht_m);
            }
        }();
        AbelianGroup g = h1_table(t);
        if (mode() == Mode::JsonLines) {
            json j = type_json(t);
            j["h1"] = to_json(g);
            out << j.dump() << "\n";
        } else {
            out << t.str() << "  word: " << word_of_type(t).str() << "\n";
            out << "H1 = " << g.str() << "  (order " << order_str(g) << ")\n";
        }
    });

    // candidates --d-range LO:HI --bound B
    auto* cand_cmd = app.add_subcommand("candidates", "normal-form types with trivial H1");
    std::string cand_range;
    std::int64_t cand_bound = 0;
    cand_cmd->add_option("--d-range", cand_range, "delta exponent range LO:HI")->required();
    cand_cmd->add_option("--bound", cand_bound, "bound on n, a_i and |m|")->required();
    cand_cmd->callback([&] {
        auto [lo, hi] = parse_range(cand_range, "--d-range");
        for (const MonodromyType& t : trivial_h1_candidates(lo, hi, cand_bound)) {
            if (mode() == Mode::JsonLines) out << type_json(t).dump() << "\n";
            else out << t.str() << "  word: " << word_of_type(t).str() << "\n";
        }
    });

    // reduce --family F --d D --slope P/Q
    auto* red_cmd =
        app.add_subcommand("reduce", "binding surgery on a trivial-H1 candidate as a knot surgery");
    int red_family = 0;
    std::int64_t red_d = 0;
    std::string red_slope;
    red_cmd->add_option("--family", red_family, "candidate family 1, 2 or 3")->required();
    red_cmd->add_option("--d", red_d, "boundary twist exponent")->required();
    red_cmd->add_option("--slope", red_slope, "surgery slope P/Q")->required();
    red_cmd->callback([&] {
        auto [p, q] = parse_slope(red_slope, "--slope");
        BindingReduction r = reduce_binding_surgery(red_family, red_d, p, q);
        if (mode() == Mode::JsonLines)
            out << json{{"knot", knot_name(r.knot)}, {"p", r.p}, {"q", r.q}}.dump() << "\n";
        else out << knot_name(r.knot) << " @ " << r.p << "/" << r.q << "\n";
    });

    // gof M N
    auto* gof_cmd = app.add_subcommand("gof", "count genus-one fibered knots in L(M,N)");
    std::int64_t gof_m = 0, gof_n = 0;
    gof_cmd->add_option("m", gof_m, "order of H1")->required();
    gof_cmd->add_option("n", gof_n, "surgery coefficient class")->required();
    gof_cmd->callback([&] {
        LensSpace l = make_lens(gof_m, gof_n);
        GofVerdict v = gof_count(l);
        if (mode() == Mode::JsonLines) {
            json j = to_json(v);
            j["m"] = l.m;
            j["n"] = l.n;
            out << j.dump() << "\n";
        } else {
            out << l.str() << ": " << v.count << " GOF-knot" << (v.count == 1 ? "" : "s") << "  ["
                << gof_case_name(v.case_tag) << "]";
            if (v.witness)
                out << "  witness p=" << v.witness->p << " q=" << v.witness->q
                    << " beta=" << v.witness->beta;
            out << "\n";
        }
    });

    // moser R S P Q
    auto* moser_cmd = app.add_subcommand("moser", "lens space from P/Q-surgery on T(R,S)");
    std::int64_t mo_r = 0, mo_s = 0, mo_p = 0, mo_q = 0;
    moser_cmd->add_option("r", mo_r)->required();
    moser_cmd->add_option("s", mo_s)->required();
    moser_cmd->add_option("p", mo_p)->required();
    moser_cmd->add_option("q", mo_q)->required();
    moser_cmd->callback([&] {
        SurgeryDescription d = make_surgery(mo_r, mo_s, mo_p, mo_q);
        if (d.trivial_knot()) err << "warning: T(" << d.r << ",1) is an unknot\n";
        auto l = moser_forward(d);
        if (mode() == Mode::JsonLines) {
            json j{{"surgery", to_json(d)}};
            if (l) j["lens"] = {{"m", l->m}, {"n", l->n}, {"canonical", l->canonical}};
            else j["lens"] = nullptr;
            out << j.dump() << "\n";
        } else if (l) {
            out << d.str() << " -> " << l->str() << "  (canonical L(" << l->m << ","
                << l->canonical << "))\n";
        } else {
            out << d.str() << " -> no lens space (criterion |rsq+p| = 1 fails)\n";
        }
    });

    // trefoil M N
    auto* tre_cmd = app.add_subcommand("trefoil", "trefoil surgeries yielding L(M,N)");
    std::int64_t tre_m = 0, tre_n = 0;
    tre_cmd->add_option("m", tre_m)->required();
    tre_cmd->add_option("n", tre_n)->required();
    tre_cmd->callback([&] {
        for (const SurgeryDescription& d : trefoil_surgeries(make_lens(tre_m, tre_n))) {
            if (mode() == Mode::JsonLines) out << to_json(d).dump() << "\n";
            else out << d.str() << "\n";
        }
    });

    // optb M N [--allow-composite]
    auto* dec_cmd = app.add_subcommand(
        "optb", "does L(M,N) contain a knot whose exterior is a once-punctured torus bundle?");
    std::int64_t dec_m = 0, dec_n = 0;
    bool dec_allow = false;
    dec_cmd->add_option("m", dec_m)->required();
    dec_cmd->add_option("n", dec_n)->required();
    dec_cmd->add_flag("--allow-composite", dec_allow, "heuristic verdict for composite M");
    dec_cmd->callback([&] {
        LensSpace l = make_lens(dec_m, dec_n);
        OptbVerdict v = decide_optb(l, dec_allow);
        if (mode() == Mode::JsonLines) {
            json j = to_json(v);
            j["m"] = l.m;
            j["n"] = l.n;
            out << j.dump() << "\n";
        } else {
            out << l.str() << ": " << (v.yes ? "YES" : "NO") << "  [" << reason_name(v.reason)
                << "]";
            if (v.outside_hypotheses) out << "  [outside-hypotheses]";
            out << "\n";
            if (v.gof.count > 0)
                out << "  gof-knots: " << v.gof.count << "  [" << gof_case_name(v.gof.case_tag)
                    << "]\n";
            for (const SurgeryDescription& d : v.surgeries)
                out << "  certificate: " << d.str() << "\n";
        }
    });

    // scan --beta B --max-m M [--primes-only] [--out FILE]
    auto* scan_cmd = app.add_subcommand("scan", "verdicts for the family L(m, BETA), m <= MAX");
    ScanOptions scan_opt;
    scan_cmd->add_option("--beta", scan_opt.beta, "fixed second parameter")->required();
    scan_cmd->add_option("--max-m", scan_opt.m_max, "largest m to visit")->required();
    scan_cmd->add_flag("--primes-only", scan_opt.primes_only, "skip composite m");
    scan_cmd->add_option("--out", scan_opt.out_file,
                         "persist records; re-running extends instead of recomputing");
    scan_cmd->footer("Record schema (one JSON object per line; file starts with a versioned\n"
                     "header line): m, n, verdict, reason, gof{count, case, witness?},\n"
                     "surgeries[{r,s,p,q}], outside_hypotheses, and for beta=2 prime m the\n"
                     "congruence_check / bullets_check / congruence_consistent bits.");
    scan_cmd->callback([&] { run_scan(scan_opt, mode(), out); });

    // homeo M1 N1 M2 N2
    auto* ho_cmd = app.add_subcommand("homeo", "are L(M1,N1) and L(M2,N2) homeomorphic?");
    std::int64_t ho_m1 = 0, ho_n1 = 0, ho_m2 = 0, ho_n2 = 0;
    ho_cmd->add_option("m1", ho_m1)->required();
    ho_cmd->add_option("n1", ho_n1)->required();
    ho_cmd->add_option("m2", ho_m2)->required();
    ho_cmd->add_option("n2", ho_n2)->required();
    ho_cmd->callback([&] {
        LensSpace a = make_lens(ho_m1, ho_n1), b = make_lens(ho_m2, ho_n2);
        bool eq = is_homeomorphic(a, b);
        if (mode() == Mode::JsonLines)
            out << json{{"a", {{"m", a.m}, {"n", a.n}}},
                        {"b", {{"m", b.m}, {"n", b.n}}},
                        {"homeomorphic", eq}}
                       .dump()
                << "\n";
        else out << a.str() << (eq ? " ~ " : " !~ ") << b.str() << "\n";
    });

    // class M N
    auto* cl_cmd = app.add_subcommand("class", "homeomorphism orbit of N mod M");
    std::int64_t cl_m = 0, cl_n = 0;
    cl_cmd->add_option("m", cl_m)->required();
    cl_cmd->add_option("n", cl_n)->required();
    cl_cmd->callback([&] {
        LensSpace l = make_lens(cl_m, cl_n);
        auto orbit = homeo_class(l);
        if (mode() == Mode::JsonLines) {
            out << json{{"m", l.m}, {"n", l.n}, {"canonical", l.canonical}, {"orbit", orbit}}.dump()
                << "\n";
        } else {
            out << l.str() << "  canonical " << l.canonical << "  orbit {";
            for (std::size_t i = 0; i < orbit.size(); ++i) out << (i ? ", " : "") << orbit[i];
            out << "}\n";
        }
    });

    std::vector<const char*> argv;
    argv.push_back("optb");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace optb::cli

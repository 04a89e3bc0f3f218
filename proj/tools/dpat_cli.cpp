// Command-line front end for the dpat library.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "dpat/canonical.hpp"
#include "dpat/fequiv.hpp"
#include "dpat/lemma.hpp"
#include "dpat/occurrence.hpp"
#include "dpat/psi.hpp"
#include "dpat/verify.hpp"
#include "dpat/word.hpp"

using json = nlohmann::ordered_json;
using namespace dpat;

namespace {

struct Output {
    bool json = false;
    bool csv = false;
};

json positions_json(const PositionSet& s) { return json(s.to_vector()); }

json histogram_json(const Histogram& h) {
    json out = json::object();
    for (const auto& [value, count] : h) out[std::to_string(value)] = count;
    return out;
}

std::string histogram_text(const Histogram& h) {
    std::string out;
    for (const auto& [value, count] : h) {
        if (!out.empty()) out += ' ';
        out += std::to_string(value) + ":" + std::to_string(count);
    }
    return out.empty() ? "{}" : "{" + out + "}";
}

json report_json(const Report& r) {
    json params = json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    json out{{"claim", r.claim}, {"params", params}, {"verdict", r.holds ? "holds" : "fails"},
             {"checked", r.checked}, {"seconds", r.seconds}};
    if (!r.holds) out["witness"] = r.witness;
    return out;
}

void print_report(const Report& r, const Output& out) {
    if (out.json) {
        std::cout << report_json(r).dump(2) << '\n';
        return;
    }
    std::cout << r.claim << ": " << (r.holds ? "holds" : "FAILS") << " (checked " << r.checked << ", "
              << r.seconds << " s)\n";
    for (const auto& [k, v] : r.params) std::cout << "  " << k << " = " << v << '\n';
    if (!r.holds) std::cout << "  witness: " << r.witness << '\n';
}

// Class options shared by several subcommands.
struct ClassArgs {
    std::size_t n = 0;
    std::string alphabet;
    std::string descents;
    Symbol q = 0;
    bool permutations = false;

    void attach(CLI::App* app, bool require_n = true) {
        auto* opt = app->add_option("--n", n, "word length");
        if (require_n) opt->required();
        app->add_option("--alphabet", alphabet, "underlying alphabet, e.g. 1-5 or 1,3,4");
        app->add_option("--descents", descents, "descent set, e.g. 2,3,5 (empty: -)")->required();
        app->add_option("--q", q, "arity bound; without --alphabet selects the descent class of [q]^n");
        app->add_flag("--permutations", permutations, "permutations of length n");
    }

    std::vector<Word> words() const {
        const auto d = parse_positions(descents);
        if (permutations) return permutations_with_descents(n, d);
        if (!alphabet.empty()) return enumerate_class({n, parse_alphabet(alphabet), d});
        if (q > 0) return enumerate_descent_class(n, q, d);
        throw CLI::ValidationError("class", "give --alphabet, --q or --permutations");
    }

    std::string describe() const {
        std::string out = "n=" + std::to_string(n) + " descents=" + descents;
        if (permutations) return out + " permutations";
        if (!alphabet.empty()) return out + " alphabet=" + alphabet;
        return out + " q=" + std::to_string(q);
    }
};

struct LemmaArgs {
    std::string p, s, t, anchors, word;
    Symbol host_arity = 0;
    bool inverse = false;

    void attach(CLI::App* app) {
        app->add_option("--p", p, "pattern")->required();
        app->add_option("--s", s, "pattern")->required();
        app->add_option("--t", t, "trace, _ marks a hole")->required();
        app->add_option("--A", anchors, "anchor positions")->required();
    }
};

int run_descents(const std::string& text, const Output& out) {
    const Word w = parse_word(text);
    const auto b = descent_word(w);
    if (out.json) {
        std::cout << json{{"word", format_word(w)},
                          {"descents", positions_json(descent_set(w))},
                          {"ascents", positions_json(ascent_set(w))},
                          {"descent_word", format_descent_word(b)},
                          {"alphabet", format_alphabet(underlying_alphabet(w))},
                          {"reduction", format_word(reduce(w))}}
                         .dump(2)
                  << '\n';
    } else {
        std::cout << "descents     " << format_positions(descent_set(w)) << '\n'
                  << "ascents      " << format_positions(ascent_set(w)) << '\n'
                  << "descent word " << format_descent_word(b) << '\n'
                  << "alphabet     " << format_alphabet(underlying_alphabet(w)) << '\n'
                  << "reduction    " << format_word(reduce(w)) << '\n';
    }
    return 0;
}

int run_canon(const std::string& form, const std::string& input, bool from_word, Symbol q, const Output& out) {
    const DescentWord b = from_word ? descent_word(parse_word(input)) : parse_descent_word(input);
    Word result;
    if (form == "alpha") {
        result = alpha(b);
    } else if (form == "omega") {
        result = omega(b);
    } else {
        if (q == 0) q = from_word ? parse_word(input).arity() : minimal_arity(b);
        result = beta(q, b);
    }
    if (out.json) {
        json j{{"form", form}, {"descent_word", format_descent_word(b)}, {"result", format_word(result)}};
        if (form == "beta") j["q"] = q;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << format_word(result) << '\n';
    }
    return 0;
}

int run_feq(const std::string& a, const std::string& b, bool bfs, const Output& out) {
    const Word p = parse_word(a);
    const Word s = parse_word(b);
    const bool feq = f_equivalent(p, s);
    const bool deq = d_equivalent(p, s);
    json j{{"p", format_word(p)}, {"s", format_word(s)}, {"f_equivalent", feq}, {"d_equivalent", deq},
           {"beta_p", format_word(beta_of(p))}, {"beta_s", format_word(beta_of(s))}};
    if (bfs) j["f_equivalent_bfs"] = f_equivalent_bfs(p, s, p.size());
    if (out.json) {
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << (feq ? "f-equivalent" : "not f-equivalent") << " (beta " << format_word(beta_of(p)) << " / "
                  << format_word(beta_of(s)) << ")\n";
    }
    return 0;
}

int run_fpath(const std::string& text, const Output& out) {
    const Word p = parse_word(text);
    const auto steps = f_path_steps(p);
    if (out.json) {
        json arr = json::array();
        for (const auto& st : steps)
            arr.push_back({{"kind", to_string(st.kind)},
                           {"positions", st.positions},
                           {"before", format_word(st.before)},
                           {"after", format_word(st.after)}});
        std::cout << json{{"pattern", format_word(p)}, {"beta", format_word(beta_of(p))}, {"steps", arr}}.dump(2)
                  << '\n';
    } else {
        std::cout << format_word(p) << '\n';
        for (const auto& st : steps) {
            std::cout << format_word(st.after) << "  " << to_string(st.kind);
            for (auto pos : st.positions) std::cout << ' ' << pos;
            std::cout << '\n';
        }
    }
    return 0;
}

int run_count(const std::string& pat, const std::string& text, bool dp, const Output& out) {
    const Word p = parse_word(pat);
    const Word w = parse_word(text);
    const Count c = dp ? occurrences_count_dp(p, w) : occurrences_count(p, w);
    if (out.json)
        std::cout << json{{"pattern", format_word(p)}, {"word", format_word(w)}, {"count", c}}.dump(2) << '\n';
    else
        std::cout << c << '\n';
    return 0;
}

int run_popularity(const std::string& pat, const ClassArgs& cls, const Output& out) {
    const Word p = parse_word(pat);
    const auto words = cls.words();
    const Count c = popularity(p, words);
    if (out.json) {
        std::cout << json{{"pattern", format_word(p)},
                          {"class", cls.describe()},
                          {"class_size", words.size()},
                          {"popularity", c},
                          {"distribution", histogram_json(occurrence_distribution(p, words))}}
                         .dump(2)
                  << '\n';
    } else {
        std::cout << c << '\n';
    }
    return 0;
}

int run_tracestat(const std::string& t, const std::string& anchors, const std::string& p, const std::string& w,
                  const Output& out) {
    const Count c = trace_statistic(parse_trace(t), parse_positions(anchors), parse_word(p), parse_word(w));
    if (out.json)
        std::cout << json{{"t", t}, {"A", positions_json(parse_positions(anchors))}, {"pattern", p}, {"word", w},
                          {"value", c}}
                         .dump(2)
                  << '\n';
    else
        std::cout << c << '\n';
    return 0;
}

int run_psi(const std::string& text, Symbol q, bool inverse, const Output& out) {
    const Word w = parse_word(text);
    if (q == 0) q = w.arity();
    const Word v = inverse ? psi_inverse(w, q) : psi(w, q);
    if (out.json)
        std::cout << json{{"word", format_word(w)}, {"q", q}, {"inverse", inverse}, {"result", format_word(v)}}.dump(2)
                  << '\n';
    else
        std::cout << format_word(v) << '\n';
    return 0;
}

int run_lemma(int which, const LemmaArgs& a, const Output& out) {
    const Word w = parse_word(a.word);
    Word v;
    Count before = 0;
    Count after = 0;
    const Trace t = parse_trace(a.t);
    const PositionSet at = parse_positions(a.anchors);
    const Word p = parse_word(a.p);
    const Word s = parse_word(a.s);
    if (which == 1) {
        const auto inst = Lemma1Instance::make(p, s, t, at, w.size());
        v = a.inverse ? lemma1_inverse(inst, w) : lemma1_map(inst, w);
    } else {
        const auto inst = Lemma2Instance::make(p, s, t, at, w.size(), a.host_arity ? a.host_arity : w.arity());
        v = a.inverse ? lemma2_inverse(inst, w) : lemma2_map(inst, w);
    }
    // Forward: w carries p, v carries s. Inverse: the roles swap.
    before = trace_statistic(t, at, a.inverse ? s : p, w);
    after = trace_statistic(t, at, a.inverse ? p : s, v);
    if (out.json)
        std::cout << json{{"input", format_word(w)}, {"output", format_word(v)}, {"inverse", a.inverse},
                          {"statistic_input", before}, {"statistic_output", after}}
                         .dump(2)
                  << '\n';
    else
        std::cout << format_word(v) << '\n';
    return before == after ? 0 : 1;
}

int run_verify_lemma(int which, const LemmaArgs& a, const ClassArgs& cls, const Output& out) {
    const DClass c{cls.n, parse_alphabet(cls.alphabet), parse_positions(cls.descents)};
    const Trace t = parse_trace(a.t);
    const PositionSet at = parse_positions(a.anchors);
    LemmaCheck check;
    if (which == 1) {
        check = check_lemma1(Lemma1Instance::make(parse_word(a.p), parse_word(a.s), t, at, c.length), c);
    } else {
        const Symbol arity = a.host_arity ? a.host_arity : *c.alphabet.rbegin();
        check = check_lemma2(Lemma2Instance::make(parse_word(a.p), parse_word(a.s), t, at, c.length, arity), c);
    }
    if (out.json) {
        json j{{"class_size", check.class_size},    {"moved", check.moved},
               {"permutation", check.permutation},  {"round_trip", check.round_trip},
               {"d_preserving", check.d_preserving}, {"transports", check.transports},
               {"histogram_p", histogram_json(check.hist_p)}, {"histogram_s", histogram_json(check.hist_s)},
               {"verdict", check.ok() ? "holds" : "fails"}};
        if (!check.ok()) j["witness"] = check.witness;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << (check.ok() ? "holds" : "FAILS") << " on " << check.class_size << " words (" << check.moved
                  << " moved)\n"
                  << "  p: " << histogram_text(check.hist_p) << '\n'
                  << "  s: " << histogram_text(check.hist_s) << '\n';
        if (!check.ok()) std::cout << "  witness: " << check.witness << '\n';
    }
    return check.ok() ? 0 : 1;
}

int run_verify_equipop(const std::string& a, const std::string& b, const ClassArgs& cls, const Output& out) {
    const Word p = parse_word(a);
    const Word s = parse_word(b);
    const auto d = parse_positions(cls.descents);
    Report r;
    if (cls.permutations)
        r = verify_permutation_equipopularity(p, s, cls.n, d);
    else if (!cls.alphabet.empty())
        r = verify_equipopularity(p, s, {cls.n, parse_alphabet(cls.alphabet), d});
    else if (cls.q > 0)
        r = verify_descent_equipopularity(p, s, cls.n, cls.q, d);
    else
        throw CLI::ValidationError("class", "give --alphabet, --q or --permutations");
    print_report(r, out);
    return r.holds ? 0 : 1;
}

int run_separate(const std::string& a, const std::string& b, const Output& out) {
    const Word p = parse_word(a);
    const Word s = parse_word(b);
    const auto c = find_separating_class(p, s);
    const auto words = enumerate_class(*c);
    const Count pp = popularity(p, words);
    const Count ps = popularity(s, words);
    if (out.json)
        std::cout << json{{"p", format_word(p)},
                          {"s", format_word(s)},
                          {"class",
                           {{"n", c->length}, {"alphabet", format_alphabet(c->alphabet)},
                            {"descents", positions_json(c->descents)}}},
                          {"popularity_p", pp},
                          {"popularity_s", ps}}
                         .dump(2)
                  << '\n';
    else
        std::cout << "n=" << c->length << " alphabet=" << format_alphabet(c->alphabet)
                  << " descents=" << format_positions(c->descents) << "  " << pp << " vs " << ps << '\n';
    return 0;
}

int run_table1(const Output& out) {
    const auto table = reproduce_table1();
    if (out.json) {
        json rows = json::array();
        for (const auto& r : table.rows) rows.push_back({{"w", format_word(r.w)}, {"p", r.stat_p}, {"s", r.stat_s}});
        std::cout << json{{"p", format_word(table.spec_p.pattern)},
                          {"s", format_word(table.spec_s.pattern)},
                          {"t", format_trace(table.spec_p.t)},
                          {"A", positions_json(table.spec_p.anchors_at)},
                          {"class_size", table.class_size},
                          {"rows", rows},
                          {"histogram_p", histogram_json(table.hist_p)},
                          {"histogram_s", histogram_json(table.hist_s)}}
                         .dump(2)
                  << '\n';
    } else if (out.csv) {
        std::cout << "w,p,s\n";
        for (const auto& r : table.rows) std::cout << format_word(r.w) << ',' << r.stat_p << ',' << r.stat_s << '\n';
    } else {
        std::cout << format_table(table);
        std::cout << "distribution p " << histogram_text(table.hist_p) << "\ndistribution s "
                  << histogram_text(table.hist_s) << '\n';
    }
    return table.hist_p == table.hist_s ? 0 : 1;
}

int run_table2(const Output& out) {
    const auto table = reproduce_table2();
    if (out.json) {
        json rows = json::array();
        for (const auto& r : table.rows)
            rows.push_back({{"w", format_word(r.w)}, {"p", r.count_p}, {"s", r.count_s}});
        std::cout << json{{"p", format_word(table.p)},
                          {"s", format_word(table.s)},
                          {"n", table.n},
                          {"descents", positions_json(table.descents)},
                          {"class_size", table.class_size},
                          {"rows", rows},
                          {"popularity_p", table.popularity_p},
                          {"popularity_s", table.popularity_s},
                          {"distribution_p", histogram_json(table.hist_p)},
                          {"distribution_s", histogram_json(table.hist_s)}}
                         .dump(2)
                  << '\n';
    } else if (out.csv) {
        std::cout << "w,p,s\n";
        for (const auto& r : table.rows) std::cout << format_word(r.w) << ',' << r.count_p << ',' << r.count_s << '\n';
        std::cout << "popularity," << table.popularity_p << ',' << table.popularity_s << '\n';
    } else {
        std::cout << format_table(table);
        std::cout << "distribution p " << histogram_text(table.hist_p) << "\ndistribution s "
                  << histogram_text(table.hist_s) << '\n';
    }
    return table.popularity_p == table.popularity_s ? 0 : 1;
}

int run_sweep(const std::string& kind, const SweepBounds& bounds, const Output& out) {
    std::vector<Report> reports;
    if (kind == "dequiv" || kind == "all") reports.push_back(sweep_d_equivalent_pairs(bounds));
    if (kind == "fneighbors" || kind == "all") reports.push_back(sweep_f_neighbors(bounds));
    if (kind == "descent" || kind == "all") reports.push_back(sweep_descent_classes(bounds));
    if (kind == "permutation" || kind == "all") reports.push_back(sweep_permutation_classes(bounds));
    bool ok = true;
    if (out.json) {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(report_json(r));
        std::cout << arr.dump(2) << '\n';
    } else {
        for (const auto& r : reports) print_report(r, out);
    }
    for (const auto& r : reports) ok = ok && r.holds;
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"d-equivalent patterns: canonical forms, popularity and verification sweeps"};
    app.require_subcommand(1);
    app.fallthrough();
    Output out;
    app.add_flag("--json", out.json, "machine-readable output");
    app.add_flag("--csv", out.csv, "CSV output for tables");

    std::string word, other, form = "beta";
    Symbol q = 0;
    bool flag_a = false;

    auto* descents = app.add_subcommand("descents", "descent set, ascent set and descent word");
    descents->add_option("word", word)->required();

    auto* canon = app.add_subcommand("canon", "alpha, omega or beta of a descent word");
    canon->add_option("form", form)->required()->check(CLI::IsMember({"alpha", "omega", "beta"}));
    canon->add_option("input", word, "descent word, or a word with --word")->required();
    canon->add_option("--q", q, "arity for beta");
    canon->add_flag("--word", flag_a, "read input as a word");

    auto* feq = app.add_subcommand("feq", "f-equivalence of two patterns");
    feq->add_option("p", word)->required();
    feq->add_option("s", other)->required();
    feq->add_flag("--bfs", flag_a, "also run the breadth-first search");

    auto* fpath = app.add_subcommand("fpath", "f-transformations from a pattern to its canonical form");
    fpath->add_option("pattern", word)->required();

    auto* count = app.add_subcommand("count", "occurrences of a pattern in a word");
    count->add_option("pattern", word)->required();
    count->add_option("word", other)->required();
    count->add_flag("--dp", flag_a, "use the dynamic-programming counter");

    ClassArgs cls;
    auto* pop = app.add_subcommand("popularity", "popularity of a pattern on a class");
    pop->add_option("pattern", word)->required();
    cls.attach(pop);

    std::string trace, anchors, pattern;
    auto* tracestat = app.add_subcommand("tracestat", "trace statistic (t,A,p)w");
    tracestat->add_option("--t", trace)->required();
    tracestat->add_option("--A", anchors)->required();
    tracestat->add_option("--p", pattern)->required();
    tracestat->add_option("word", word)->required();

    auto* psi_cmd = app.add_subcommand("psi", "descent-to-ascent bijection");
    psi_cmd->add_option("word", word)->required();
    psi_cmd->add_option("--q", q, "arity bound (default: arity of the word)");
    psi_cmd->add_flag("--inverse", flag_a);

    LemmaArgs lem;
    auto* lemma1 = app.add_subcommand("lemma1", "one-position lemma map on a word");
    lem.attach(lemma1);
    lemma1->add_option("--word", lem.word)->required();
    lemma1->add_flag("--inverse", lem.inverse);
    auto* lemma2 = app.add_subcommand("lemma2", "two-position lemma map on a word");
    lem.attach(lemma2);
    lemma2->add_option("--word", lem.word)->required();
    lemma2->add_option("--q", lem.host_arity, "largest symbol of the host class (default: arity of the word)");
    lemma2->add_flag("--inverse", lem.inverse);

    auto* vl1 = app.add_subcommand("verify-lemma1", "check the one-position map on a whole class");
    lem.attach(vl1);
    vl1->add_option("--n", cls.n)->required();
    vl1->add_option("--alphabet", cls.alphabet)->required();
    vl1->add_option("--descents", cls.descents)->required();
    auto* vl2 = app.add_subcommand("verify-lemma2", "check the two-position map on a whole class");
    lem.attach(vl2);
    vl2->add_option("--n", cls.n)->required();
    vl2->add_option("--alphabet", cls.alphabet)->required();
    vl2->add_option("--descents", cls.descents)->required();

    auto* equipop = app.add_subcommand("verify-equipop", "compare popularities on a class");
    equipop->add_option("p", word)->required();
    equipop->add_option("s", other)->required();
    cls.attach(equipop);

    auto* separate = app.add_subcommand("separate", "class separating two non-d-equivalent patterns");
    separate->add_option("p", word)->required();
    separate->add_option("s", other)->required();

    auto* table1 = app.add_subcommand("table1", "trace-statistic distribution table");
    auto* table2 = app.add_subcommand("table2", "213 vs 312 popularity table");

    SweepBounds bounds;
    std::string kind = "all";
    auto* sweep = app.add_subcommand("sweep", "exhaustive equipopularity sweeps");
    sweep->add_option("--kind", kind)->check(CLI::IsMember({"all", "dequiv", "fneighbors", "descent", "permutation"}));
    sweep->add_option("--n", bounds.max_n, "largest word length");
    sweep->add_option("--q", bounds.max_q, "largest symbol");
    sweep->add_option("--max-pattern-length", bounds.max_pattern_length);
    sweep->add_option("--max-class-size", bounds.max_class_size, "skip larger classes (0: no cap)");
    sweep->add_option("--jobs", bounds.jobs, "worker threads (0: hardware)");

    CLI11_PARSE(app, argc, argv);
    if (bounds.jobs == 0) bounds.jobs = std::max(1u, std::thread::hardware_concurrency());

    try {
        if (*descents) return run_descents(word, out);
        if (*canon) return run_canon(form, word, flag_a, q, out);
        if (*feq) return run_feq(word, other, flag_a, out);
        if (*fpath) return run_fpath(word, out);
        if (*count) return run_count(word, other, flag_a, out);
        if (*pop) return run_popularity(word, cls, out);
        if (*tracestat) return run_tracestat(trace, anchors, pattern, word, out);
        if (*psi_cmd) return run_psi(word, q, flag_a, out);
        if (*lemma1) return run_lemma(1, lem, out);
        if (*lemma2) return run_lemma(2, lem, out);
        if (*vl1) return run_verify_lemma(1, lem, cls, out);
        if (*vl2) return run_verify_lemma(2, lem, cls, out);
        if (*equipop) return run_verify_equipop(word, other, cls, out);
        if (*separate) return run_separate(word, other, out);
        if (*table1) return run_table1(out);
        if (*table2) return run_table2(out);
        if (*sweep) return run_sweep(kind, bounds, out);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

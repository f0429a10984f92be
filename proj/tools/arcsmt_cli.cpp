// Command-line surface for the library: deterministic, machine-readable
// output on stdout (JSON lines unless --output text), diagnostics on stderr.
//
// Exit codes: 0 success, 1 falsification (a verified property failed),
// 2 parse/usage error, 3 input not in the subring within bounds.

#include "CLI11.hpp"
#include "json.hpp"

#include "arcsmt/action.hpp"
#include "arcsmt/relations.hpp"

#include <iostream>

using json = nlohmann::ordered_json;
using namespace arcsmt;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotInSubring = 3;

std::vector<int> range_list(int n) {
    std::vector<int> xs(n);
    for (int i = 0; i < n; ++i) xs[i] = i + 1;
    return xs;
}

void for_each_ksubset(int n, int k, auto&& fn) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(cur.size()) == k) {
            fn(cur);
            return;
        }
        for (int x = from; x <= n; ++x) {
            cur.push_back(x);
            self(self, x + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
}

std::string index_list(const std::vector<int>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i)
        s += (i ? "," : "") + std::to_string(xs[i]);
    return s;
}

// --- generators ----------------------------------------------------------

int run_generators(int p, int q, int h, long max_weight, bool as_json) {
    auto emit = [&](const std::string& symbol, long k, const Poly& f) {
        if (as_json) {
            json o;
            o["symbol"] = symbol;
            o["weight"] = k;
            o["poly"] = to_string(f);
            std::cout << o.dump() << '\n';
        } else {
            std::cout << symbol << " = " << to_string(f) << '\n';
        }
    };
    for (long k = 0; k <= max_weight; ++k) {
        std::string sup = "^(" + std::to_string(k) + ")";
        for (int i = 1; i <= p; ++i)
            for (int j = 1; j <= q; ++j)
                emit("X" + sup + "[" + std::to_string(i) + "," + std::to_string(j) +
                         "]",
                     k, dbar(x_entry(i, j, h), k));
        for_each_ksubset(p, h, [&](const std::vector<int>& s) {
            emit("Y" + sup + "[" + index_list(s) + "]", k, dbar(det_a(s), k));
        });
        for_each_ksubset(q, h, [&](const std::vector<int>& s) {
            emit("Z" + sup + "[" + index_list(s) + "]", k, dbar(det_b(s), k));
        });
    }
    return kExitOk;
}

// --- straighten ----------------------------------------------------------

int run_straighten(int p, int q, int h) {
    Ambient amb{p, q, h};
    std::vector<std::string> tokens;
    {
        std::string tok;
        while (std::cin >> tok) tokens.push_back(tok);
    }
    JWord w;
    try {
        for (const std::string& t : tokens) {
            JSeq j = parse_jseq(t);
            // Accept anything q_eval can interpret: one-sided symbols of size
            // exactly h, full symbols of size 1..h (a size-h full symbol is
            // not an alphabet letter but straightens to a Y*Z product), with
            // in-range indices. This is wider than the standard alphabet.
            bool ok = j.weight >= 0;
            auto in_range = [](const std::vector<int>& xs, int hi) {
                return xs.empty() || (xs.front() >= 1 && xs.back() <= hi);
            };
            switch (j.kind) {
                case JKind::L: ok = ok && j.size() == h && in_range(j.us, p); break;
                case JKind::R: ok = ok && j.size() == h && in_range(j.vs, q); break;
                default:
                    ok = ok && j.size() >= 1 && j.size() <= h &&
                         in_range(j.us, p) && in_range(j.vs, q);
                    break;
            }
            if (!ok)
                throw std::invalid_argument(
                    "symbol does not fit the (p,q,h) ambient: " + t);
            w.push_back(std::move(j));
        }
    } catch (const std::exception& e) {
        std::cerr << "straighten: " << e.what() << '\n';
        return kExitUsage;
    }
    std::sort(w.begin(), w.end(),
              [](const JSeq& a, const JSeq& b) { return cmp_total_J(a, b) < 0; });
    PeelResult res = peel(q_eval_word(w, amb), amb);
    json o;
    o["ok"] = res.ok;
    if (!res.ok) {
        o["error"] = res.error;
        o["residual"] = to_string(res.residual);
        std::cout << o.dump() << '\n';
        std::cerr << "straighten: " << res.error << '\n';
        return kExitNotInSubring;
    }
    json coords = json::array();
    for (const auto& [s, c] : res.coords) {
        json e;
        json word = json::array();
        for (const JSeq& j : s) word.push_back(to_string(j));
        e["word"] = std::move(word);
        e["coeff"] = c.get_str();
        coords.push_back(std::move(e));
    }
    o["coords"] = std::move(coords);
    std::cout << o.dump() << '\n';
    return kExitOk;
}

// --- verify-relations ----------------------------------------------------

const std::vector<RelFamily>& all_families() {
    static const std::vector<RelFamily> fams = {
        RelFamily::DetYZ,          RelFamily::XYPlucker,
        RelFamily::XZPlucker,      RelFamily::YYShuffle,
        RelFamily::ZZShuffle,      RelFamily::FullSplit,
        RelFamily::OverflowLFull,  RelFamily::OverflowRFull,
        RelFamily::StraightLFull,  RelFamily::StraightRFull,
        RelFamily::StraightLL,     RelFamily::StraightRR,
    };
    return fams;
}

int run_verify_relations(int p, int q, int h, int n_max,
                         const std::string& families_csv, bool families_given,
                         bool corrupt) {
    std::vector<RelFamily> selected;
    if (!families_given) {
        selected = all_families();
    } else {
        std::string csv = families_csv;
        std::size_t start = 0;
        while (start <= csv.size()) {
            std::size_t end = csv.find(',', start);
            std::string name = csv.substr(
                start, end == std::string::npos ? std::string::npos : end - start);
            if (!name.empty()) {
                bool found = false;
                for (RelFamily f : all_families())
                    if (name == family_name(f)) {
                        selected.push_back(f);
                        found = true;
                        break;
                    }
                if (!found) {
                    std::cerr << "verify-relations: unknown family '" << name
                              << "'\n";
                    return kExitUsage;
                }
            }
            if (end == std::string::npos) break;
            start = end + 1;
        }
    }
    Ambient amb{p, q, h};
    std::vector<RelationInstance> instances = enumerate_relations(amb, n_max);
    bool all_ok = true;
    for (RelFamily fam : selected) {
        long count = 0, failures = 0;
        for (const RelationInstance& inst : instances) {
            if (inst.family != fam) continue;
            ++count;
            Poly image = relation_image(inst, amb);
            if (corrupt && count == 1) image += Poly::constant(1);
            if (!image.is_zero()) ++failures;
        }
        json o;
        o["family"] = family_name(fam);
        o["instances"] = count;
        o["failures"] = failures;
        o["ok"] = failures == 0;
        std::cout << o.dump() << '\n';
        if (failures != 0) all_ok = false;
    }
    return all_ok ? kExitOk : kExitFalsified;
}

// --- nilradical ----------------------------------------------------------

int run_nilradical(int h, int p, int q) {
    if (h <= 2) {
        std::cerr << "nilradical: the witness construction requires h > 2\n";
        return kExitUsage;
    }
    if (p < 2 * h) {
        std::cerr << "nilradical: the witness construction requires p >= 2h\n";
        return kExitUsage;
    }
    Ambient amb{p, q, h};
    PresPoly f = nilradical_witness(h, p);
    Degree deg{2L * h, 0, 1};
    std::vector<PresPoly> classical = yy_shuffle_family(h, p, 0, 1);
    std::vector<PresPoly> full = classical;
    for (PresPoly& g : yy_shuffle_family(h, p, 1, 1)) full.push_back(std::move(g));
    json o;
    o["witness"] = to_string(f);
    o["qstar_is_zero"] = q_eval_pres(f, amb).is_zero();
    o["in_classical_span"] = membership(f, classical, deg, p, q, h);
    o["in_full_span"] = membership(f, full, deg, p, q, h);
    std::cout << o.dump() << '\n';
    return kExitOk;
}

// --- enumerate-standard --------------------------------------------------

int run_enumerate_standard(int p, int q, int h, long max_weight, long max_degree,
                           bool as_json) {
    Ambient amb{p, q, h};
    std::vector<JWord> words = enumerate_standard(amb, max_weight, max_degree);
    for (const JWord& w : words) {
        if (as_json) {
            json arr = json::array();
            for (const JSeq& j : w) arr.push_back(to_string(j));
            json o;
            o["word"] = std::move(arr);
            std::cout << o.dump() << '\n';
        } else {
            if (w.empty()) {
                std::cout << "(empty)\n";
            } else {
                for (std::size_t i = 0; i < w.size(); ++i)
                    std::cout << (i ? " " : "") << to_string(w[i]);
                std::cout << '\n';
            }
        }
    }
    std::cerr << "enumerate-standard: " << words.size() << " words\n";
    return kExitOk;
}

// --- invariance ----------------------------------------------------------

int run_invariance(int p, int q, int h, int max_weight, int m_max) {
    InvarianceReport rep = check_invariance(p, q, h, max_weight, m_max);
    json o;
    o["ok"] = rep.ok;
    o["generators_checked"] = rep.generators_checked;
    o["pairs_checked"] = rep.pairs_checked;
    json v = json::array();
    for (const std::string& s : rep.violations) v.push_back(s);
    o["violations"] = std::move(v);
    std::cout << o.dump() << '\n';
    return rep.ok ? kExitOk : kExitFalsified;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact symbolic calculator/verifier for the derived invariant subring: "
        "generator expansion, straightening to the standard-monomial basis, "
        "relation kernel verification, graded span analysis, and infinitesimal "
        "invariance checks."};
    app.require_subcommand(1);
    long seed = 0;
    app.add_option("--seed", seed,
                   "Seed for randomized suites (accepted for reproducibility; "
                   "the built-in subcommands are fully deterministic)");

    int p = 2, q = 2, h = 2;
    long max_weight = 0, max_degree = 2;
    int n_max = 1, m_max = 2, weight_max = 2;
    std::string output = "json";
    std::string families_csv;
    bool corrupt = false;

    auto add_ambient = [&](CLI::App* sub) {
        // Drop the default -h short help flag so --h can name the column count.
        sub->set_help_flag("--help", "Print this help message and exit");
        sub->add_option("--p", p, "Number of a-rows")->check(CLI::PositiveNumber);
        sub->add_option("--q", q, "Number of b-rows")->check(CLI::PositiveNumber);
        sub->add_option("--h", h, "Number of columns")->check(CLI::PositiveNumber);
    };
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--output", output, "Output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* gen = app.add_subcommand(
        "generators", "Print the derived generators X/Y/Z up to --max-weight");
    add_ambient(gen);
    add_output(gen);
    gen->add_option("--max-weight", max_weight, "Largest derivative order");

    CLI::App* str = app.add_subcommand(
        "straighten",
        "Read a word (whitespace-separated D^k... symbols) from stdin and print "
        "its standard-basis coordinates as JSON");
    add_ambient(str);

    CLI::App* ver = app.add_subcommand(
        "verify-relations",
        "Check that every enumerated relation instance evaluates to zero");
    add_ambient(ver);
    ver->add_option("--n-max", n_max, "Largest outer derivative order");
    CLI::Option* fam_opt = ver->add_option(
        "--families", families_csv,
        "Comma-separated family names (default: all); empty string checks none");
    ver->add_flag("--corrupt", corrupt,
                  "Test hook: corrupt one instance per family to force a failure");

    CLI::App* nil = app.add_subcommand(
        "nilradical",
        "Build the degree-(2h,0,1) witness and report its span memberships");
    add_ambient(nil);

    CLI::App* enu = app.add_subcommand("enumerate-standard",
                                       "List all standard words within bounds");
    add_ambient(enu);
    add_output(enu);
    enu->add_option("--max-weight", max_weight, "Total weight bound");
    enu->add_option("--max-degree", max_degree, "Factor count bound");

    CLI::App* inv = app.add_subcommand(
        "invariance",
        "Check that the trace-zero derivations annihilate every generator");
    add_ambient(inv);
    inv->add_option("--max-weight", weight_max, "Largest generator weight");
    inv->add_option("--m-max", m_max, "Largest t-power in the derivation basis");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed())
            return run_generators(p, q, h, max_weight, output == "json");
        if (str->parsed()) return run_straighten(p, q, h);
        if (ver->parsed())
            return run_verify_relations(p, q, h, n_max, families_csv,
                                        fam_opt->count() > 0, corrupt);
        if (nil->parsed()) return run_nilradical(h, p, q);
        if (enu->parsed())
            return run_enumerate_standard(p, q, h, max_weight, max_degree,
                                          output == "json");
        if (inv->parsed()) return run_invariance(p, q, h, weight_max, m_max);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

// hooklab command line front end: exact verification of hook-length and
// eta-power identities, series expansion, and bijection exploration.
//
//   hooklab verify <target> [options]     machine-readable pass/fail report
//   hooklab expand <expr> [options]       truncated series dump
//   hooklab bijection <which> [options]   image + weight-law + class tables
//
// Exit codes: 0 pass, 1 verification failure, 2 usage or validation error.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "hooklab/hooklab.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace hooklab;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int default_order() {
    if (const char* env = std::getenv("HOOKLAB_ORDER_DEFAULT")) {
        try {
            const int v = std::stoi(env);
            if (v >= 0) return v;
        } catch (const std::exception&) {
        }
    }
    return 12;
}

struct Check {
    std::string name;
    std::string expected;
    std::string actual;
    bool equal = false;
};

struct Report {
    std::string command;
    std::vector<Check> checks;

    void add(std::string name, std::string expected, std::string actual) {
        const bool equal = expected == actual;
        checks.push_back({std::move(name), std::move(expected), std::move(actual), equal});
    }

    bool pass() const {
        for (const auto& c : checks)
            if (!c.equal) return false;
        return true;
    }

    int emit(std::chrono::steady_clock::time_point start,
             const std::string& error = std::string()) const {
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start);
        json doc;
        doc["command"] = command;
        doc["status"] = !error.empty() ? "error" : (pass() ? "pass" : "fail");
        doc["checks"] = json::array();
        for (const auto& c : checks) {
            json jc;
            jc["name"] = c.name;
            jc["expected"] = c.expected;
            jc["actual"] = c.actual;
            jc["equal"] = c.equal;
            doc["checks"].push_back(jc);
        }
        if (!error.empty()) doc["error"] = error;
        doc["runtime_ms"] = elapsed.count();
        std::cout << doc.dump(2) << "\n";
        if (!error.empty()) return kExitUsage;
        return pass() ? kExitPass : kExitFail;
    }
};

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    if (csv.empty()) return out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        const int v = std::stoi(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("malformed integer list: " + csv);
        out.push_back(v);
    }
    return out;
}

std::vector<long long> parse_long_list(const std::string& csv) {
    std::vector<long long> out;
    for (int v : parse_int_list(csv)) out.push_back(v);
    return out;
}

std::string series_mismatch_string(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    if (auto mm = series_first_mismatch(lhs, rhs)) {
        return "x^" + exponent_string(mm->exponent) + ": " + fraction_string(mm->lhs) + " vs " +
               fraction_string(mm->rhs);
    }
    return "equal";
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

void run_verify_no(Report& rep, int order, int jobs) {
    const auto r = poly_identity_check([order](long long z) { return no_rhs(z, order); },
                                       [order](long long z) { return power_product(z - 1, order); },
                                       order, [](int m) { return m; }, jobs);
    std::ostringstream name;
    name << "hook expansion in z == (1-x^k) powers, order " << order << ", " << r.samples
         << " samples";
    rep.add(name.str(), "identical coefficients",
            r.pass ? "identical coefficients"
                   : "z=" + std::to_string(r.failed_t) + " x^" +
                         exponent_string(r.failed_exponent) + ": " + fraction_string(r.lhs) +
                         " vs " + fraction_string(r.rhs));
}

void run_verify_type_c(Report& rep, int order, int jobs) {
    const auto r = poly_identity_check(
        [order](long long t) { return typeC_rhs(t, order); },
        [order](long long t) { return power_product(2 * t * t + t, order); }, order,
        [](int m) { return 2 * m; }, jobs);
    std::ostringstream name;
    name << "doubled distinct hook expansion in t == (1-x^k) powers, order " << order << ", "
         << r.samples << " samples";
    rep.add(name.str(), "identical coefficients",
            r.pass ? "identical coefficients"
                   : "t=" + std::to_string(r.failed_t) + " x^" +
                         exponent_string(r.failed_exponent) + ": " + fraction_string(r.lhs) +
                         " vs " + fraction_string(r.rhs));
}

void run_verify_pair(Report& rep, long long t, int order) {
    if (t < 2) throw std::invalid_argument("verify pair requires --t >= 2");
    const TruncatedSeries pr = pair_rhs(t, order);
    rep.add("pair sum == (1-x^k)^(2t^2+t) at t=" + std::to_string(t), "equal",
            series_mismatch_string(pr, power_product(2 * t * t + t, order)));
    rep.add("pair sum == doubled distinct sum at t=" + std::to_string(t), "equal",
            series_mismatch_string(pr, typeC_rhs(t, order)));
    rep.add("core-restricted pair sum == unrestricted at t=" + std::to_string(t), "equal",
            series_mismatch_string(pair_rhs(t, order, PairRange::cores_only), pr));
}

void run_verify_macdonald(Report& rep, const std::string& family_str, int t, int order) {
    const auto family = family_from_string(family_str);
    if (!family) throw std::invalid_argument("unknown family: " + family_str);
    const auto r = verify_macdonald(*family, t, order);  // throws on inadmissible t
    std::ostringstream name;
    name << "lattice sum " << family_name(*family) << " t=" << t << " == eta^" << r.eta_exponent
         << " to order " << order << " (" << r.term_count << " terms)";
    rep.add(name.str(), "equal",
            r.pass ? "equal"
                   : "step " + std::to_string(r.first_mismatch) + ": " + fraction_string(r.lhs) +
                         " vs " + fraction_string(r.rhs));
}

void run_verify_hook_formula(Report& rep, int n) {
    if (n < 1) throw std::invalid_argument("verify hook-formula requires --n >= 1");
    const Rational expected = Rational(Integer(1), integer_pow(2, n) * factorial(n));
    rep.add("symplectic hook sum at n=" + std::to_string(n), fraction_string(expected),
            fraction_string(symplectic_hook_sum(n)));
}

void run_verify_genfunc(Report& rep, int modulus, int order) {
    const TruncatedSeries e = genfunc_pair(modulus, order, GenfuncMode::enumeration);
    const TruncatedSeries p = genfunc_pair(modulus, order, GenfuncMode::product);
    rep.add("core pair generating function, modulus " + std::to_string(modulus) + ", order " +
                std::to_string(order),
            "equal", series_mismatch_string(e, p));
}

void run_verify_compact_lemma(Report& rep, long long t, int count, unsigned long long seed) {
    if (t < 1) throw std::invalid_argument("verify compact-lemma requires --t >= 1");
    {
        std::set<long long> minimal;
        for (long long j = 1; j <= 2 * t + 1; ++j) minimal.insert(-j);
        const auto r = compact_lemma_check(minimal, t);
        rep.add("minimal compact set, t=" + std::to_string(t), "-1/1",
                r.pass ? fraction_string(r.lhs)
                       : fraction_string(r.lhs) + " vs " + fraction_string(r.rhs));
    }
    {
        const auto r = compact_lemma_check({-1, -2, -3, 1}, 1);
        rep.add("worked set {-1,-2,-3,1}, t=1", "15/1",
                r.pass ? fraction_string(r.lhs)
                       : fraction_string(r.lhs) + " vs " + fraction_string(r.rhs));
    }
    std::mt19937_64 rng(seed);
    int failures = 0;
    std::string first_failure = "all equal";
    for (int trial = 0; trial < count; ++trial) {
        const auto a = random_compact_set(t, rng, 40);
        const auto r = compact_lemma_check(a, t);
        if (!r.pass && ++failures == 1)
            first_failure = "trial " + std::to_string(trial) + ": " + fraction_string(r.lhs) +
                            " vs " + fraction_string(r.rhs);
    }
    rep.add("random compact sets, t=" + std::to_string(t) + ", count " + std::to_string(count) +
                ", seed " + std::to_string(seed),
            "all equal", first_failure);
}

// ---------------------------------------------------------------------------
// expand
// ---------------------------------------------------------------------------

int emit_series(const TruncatedSeries& s, const std::string& command, const std::string& format) {
    if (format == "text") {
        s.write_text(std::cout);
        return kExitPass;
    }
    if (format != "structured") throw std::invalid_argument("unknown format: " + format);
    json doc;
    doc["command"] = command;
    doc["offset"] = exponent_string(s.offset());
    doc["order"] = s.order();
    doc["terms"] = json::array();
    for (int k = 0; k <= s.order(); ++k) {
        if (s.coeff(k) == 0) continue;
        json term;
        term["exponent"] = exponent_string(s.offset() + k);
        term["coefficient"] = fraction_string(s.coeff(k));
        doc["terms"].push_back(term);
    }
    std::cout << doc.dump(2) << "\n";
    return kExitPass;
}

// ---------------------------------------------------------------------------
// bijection
// ---------------------------------------------------------------------------

void print_kv(const std::string& key, const std::string& value) {
    std::cout << key << '\t' << value << '\n';
}

int run_bijection(const std::string& which, const std::string& partition_csv,
                  const std::string& lambda_csv, const std::string& mu_csv,
                  const std::string& vector_csv, int t) {
    if (which == "gks" || which == "phi1" || which == "phi2") {
        const Partition p(parse_int_list(partition_csv));
        if (t < 1) throw std::invalid_argument("--t must be >= 1");
        CoreVector v;
        long long law = 0;
        if (which == "gks") {
            v = gks_phi(p, t);
            law = gks_weight(v.entries);
        } else if (which == "phi1") {
            v = phi1(p, t);
            law = phi1_weight(v.entries, t);
        } else {
            v = phi2(p, t);
            law = phi2_weight(v.entries, t);
        }
        print_kv("image", v.to_string());
        print_kv("weight", std::to_string(p.weight()));
        print_kv("weight-law", std::to_string(law));
        print_kv("weight-law-ok", law == p.weight() ? "true" : "false");
        return law == p.weight() ? kExitPass : kExitFail;
    }
    if (which == "gks-inv") {
        const auto n = parse_long_list(vector_csv);
        const Partition p = gks_phi_inv(n, t);
        print_kv("image", p.to_string());
        print_kv("weight", std::to_string(p.weight()));
        return kExitPass;
    }
    if (which == "varphi") {
        const PairSCDD pair(Partition(parse_int_list(lambda_csv)),
                            Partition(parse_int_list(mu_csv)), t + 1);
        const CoreVector v = varphi(pair);
        const long long law = varphi_weight(v.entries, t);
        print_kv("image", v.to_string());
        print_kv("weight", std::to_string(pair.weight()));
        print_kv("weight-law", std::to_string(law));
        print_kv("weight-law-ok", law == pair.weight() ? "true" : "false");
        const DeltaProfile prof = delta_profile(pair.lambda, pair.mu, t + 1);
        std::cout << "i\tdelta_i\tsigma_i\tn_i\trelation-ok\n";
        bool all_ok = law == pair.weight();
        for (int i = 1; i <= prof.t; ++i) {
            const long long di = prof.delta_i[static_cast<std::size_t>(i - 1)];
            const int si = prof.sigma_i[static_cast<std::size_t>(i - 1)];
            const long long ni = v.entries[static_cast<std::size_t>(i - 1)];
            const bool ok = t + 1 + di == si * ((2LL * t + 2) * ni + i);
            all_ok = all_ok && ok;
            std::cout << i << '\t' << di << '\t' << si << '\t' << ni << '\t'
                      << (ok ? "true" : "false") << '\n';
        }
        return all_ok ? kExitPass : kExitFail;
    }
    if (which == "varphi-inv") {
        const auto n = parse_long_list(vector_csv);
        const PairSCDD pair = varphi_inv(n, t);
        print_kv("lambda", pair.lambda.to_string());
        print_kv("mu", pair.mu.to_string());
        print_kv("weight", std::to_string(pair.weight()));
        return kExitPass;
    }
    if (which == "pair-to-dd") {
        const PairSCDD pair(Partition(parse_int_list(lambda_csv)),
                            Partition(parse_int_list(mu_csv)), 0);
        const Partition nu = pair_to_dd(pair);
        print_kv("image", nu.to_string());
        print_kv("weight", std::to_string(nu.weight()));
        print_kv("weight-ok", nu.weight() == 2 * pair.weight() ? "true" : "false");
        print_kv("sign-ok",
                 nu.delta_sign() == pair.lambda.delta_sign() * pair.mu.delta_sign() ? "true"
                                                                                    : "false");
        return kExitPass;
    }
    if (which == "dd-to-pair") {
        const Partition nu(parse_int_list(partition_csv));
        const PairSCDD pair = dd_to_pair(nu);
        print_kv("lambda", pair.lambda.to_string());
        print_kv("mu", pair.mu.to_string());
        return kExitPass;
    }
    throw std::invalid_argument("unknown bijection: " + which);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hooklab: exact partition, core and eta-power identity toolkit"};
    app.require_subcommand(1);

    // verify -------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run an identity check and emit a JSON report");
    std::string target;
    verify
        ->add_option("target", target,
                     "no | type-c | pair | macdonald | hook-formula | genfunc | compact-lemma")
        ->required();
    int v_order = -1;
    long long v_t = -1;
    int v_n = -1;
    std::string v_family;
    int v_count = 500;
    unsigned long long v_seed = 1;
    int v_jobs = 1;
    verify->add_option("--order", v_order,
                       "truncation order (default HOOKLAB_ORDER_DEFAULT or 12)");
    verify->add_option("--t", v_t, "rank / parameter t");
    verify->add_option("--n", v_n, "hook formula parameter n");
    verify->add_option("--family", v_family, "macdonald family: A, B, C or BC");
    verify->add_option("--count", v_count, "random instances for compact-lemma");
    verify->add_option("--seed", v_seed, "random seed for compact-lemma");
    verify->add_option("--jobs", v_jobs, "max parallel sample evaluations");

    // expand -------------------------------------------------------------
    auto* expand = app.add_subcommand("expand", "print a truncated series");
    std::string expr;
    expand->add_option("expr", expr, "eta-power | no-rhs | type-c-rhs | macdonald")->required();
    int e_order = -1;
    long long e_e = 0, e_z = 0, e_t = 0;
    std::string e_family, e_format = "text";
    expand->add_option("--order", e_order, "truncation order");
    expand->add_option("--e", e_e, "eta exponent");
    expand->add_option("--z", e_z, "hook expansion parameter z");
    expand->add_option("--t", e_t, "parameter t");
    expand->add_option("--family", e_family, "macdonald family");
    expand->add_option("--format", e_format, "text | structured");

    // bijection -----------------------------------------------------------
    auto* bij = app.add_subcommand("bijection", "apply one of the core bijections");
    std::string which, b_partition, b_lambda, b_mu, b_vector;
    int b_t = 0;
    bij->add_option("which", which,
                    "gks | gks-inv | phi1 | phi2 | varphi | varphi-inv | pair-to-dd | dd-to-pair")
        ->required();
    bij->add_option("--partition", b_partition, "comma separated non-increasing parts");
    bij->add_option("--lambda", b_lambda, "self-conjugate partition");
    bij->add_option("--mu", b_mu, "doubled distinct partition");
    bij->add_option("--vector", b_vector, "comma separated integer vector");
    bij->add_option("--t", b_t, "modulus parameter t");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        if (*verify) {
            const int order = v_order >= 0 ? v_order : default_order();
            Report rep;
            rep.command = "verify " + target;
            try {
                if (target == "no") {
                    run_verify_no(rep, order, v_jobs);
                } else if (target == "type-c") {
                    run_verify_type_c(rep, order, v_jobs);
                } else if (target == "pair") {
                    run_verify_pair(rep, v_t, order);
                } else if (target == "macdonald") {
                    run_verify_macdonald(rep, v_family, static_cast<int>(v_t), order);
                } else if (target == "hook-formula") {
                    run_verify_hook_formula(rep, v_n);
                } else if (target == "genfunc") {
                    if (v_t < 1) throw std::invalid_argument("verify genfunc requires --t >= 1");
                    run_verify_genfunc(rep, static_cast<int>(v_t), order);
                } else if (target == "compact-lemma") {
                    run_verify_compact_lemma(rep, v_t, v_count, v_seed);
                } else {
                    throw std::invalid_argument("unknown verify target: " + target);
                }
            } catch (const std::invalid_argument& e) {
                std::cerr << "error: " << e.what() << "\n";
                return rep.emit(start, e.what());
            }
            return rep.emit(start);
        }
        if (*expand) {
            const int order = e_order >= 0 ? e_order : default_order();
            if (expr == "eta-power")
                return emit_series(eta_power(e_e, order), "expand eta-power", e_format);
            if (expr == "no-rhs") return emit_series(no_rhs(e_z, order), "expand no-rhs", e_format);
            if (expr == "type-c-rhs")
                return emit_series(typeC_rhs(e_t, order), "expand type-c-rhs", e_format);
            if (expr == "macdonald") {
                const auto family = family_from_string(e_family);
                if (!family) throw std::invalid_argument("unknown family: " + e_family);
                return emit_series(macdonald_series(*family, static_cast<int>(e_t), order),
                                   "expand macdonald", e_format);
            }
            throw std::invalid_argument("unknown expand expression: " + expr);
        }
        return run_bijection(which, b_partition, b_lambda, b_mu, b_vector, b_t);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitFail;
    }
}

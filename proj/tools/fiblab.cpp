#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fiblab/density.hpp"
#include "fiblab/fibcore.hpp"
#include "fiblab/identities.hpp"
#include "fiblab/randomfib.hpp"
#include "fiblab/realbase.hpp"
#include "fiblab/words.hpp"
#include "fiblab/zeckendorf.hpp"

using nlohmann::ordered_json;
using namespace fiblab;

namespace {

constexpr const char* kToolName = "fiblab";
constexpr const char* kToolVersion = "0.1.0";

struct Output {
    std::string format = "json";  // json | csv | plain
    unsigned precision = 12;      // decimal places for display; never affects computation
    int exit_code = 0;            // 3 once any identity check refutes
};

ordered_json envelope(const std::string& command, ordered_json params,
                      ordered_json convention = nullptr, ordered_json seed = nullptr) {
    ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = command;
    j["params"] = std::move(params);
    j["convention"] = std::move(convention);
    j["seed"] = std::move(seed);
    return j;
}

void emit_line(const ordered_json& j) { std::cout << j.dump() << "\n"; }

ordered_json exact_json(const QuadraticReal& v, unsigned prec) {
    return ordered_json{{"exact", v.to_string()}, {"decimal", v.decimal_string(prec)}};
}

ordered_json bounded_json(const BoundedValue& b, unsigned prec) {
    ordered_json j;
    j["lo"] = b.lo.to_string();
    j["hi"] = b.hi.to_string();
    j["lo_decimal"] = b.lo.decimal_string(prec);
    j["hi_decimal"] = b.hi.decimal_string(prec);
    j["tail_bound"] = b.tail_bound.to_string();
    j["exact"] = b.exact();
    return j;
}

ordered_json report_json(const IdentityReport& rep, const std::string& command, unsigned prec) {
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : rep.params) params[k] = v;
    ordered_json j = envelope(command, std::move(params), to_string(rep.convention));
    ordered_json r;
    r["id"] = rep.id;
    r["verdict"] = to_string(rep.verdict);
    r["lhs"] = bounded_json(rep.lhs, prec);
    r["rhs"] = bounded_json(rep.rhs, prec);
    r["tail_bound"] = rep.tail_bound.to_string();
    if (!rep.expressions.empty()) {
        ordered_json ex = ordered_json::object();
        for (const auto& [name, bv] : rep.expressions) ex[name] = bounded_json(bv, prec);
        r["expressions"] = ex;
    }
    if (rep.witness) {
        r["witness"] = ordered_json{{"lhs", exact_json(rep.witness->lhs, prec)},
                                    {"rhs", exact_json(rep.witness->rhs, prec)},
                                    {"note", rep.witness->note}};
    }
    j["result"] = std::move(r);
    return j;
}

/// Accepted spellings: "phi", "sqrt5", a rational "p" or "p/q", or the
/// combined form "P+Q*sqrt5" / "P-Q*sqrt5" / "Q*sqrt5" with rational P, Q.
QuadraticReal parse_real(const std::string& s) {
    if (s == "phi") return QuadraticReal::phi();
    if (s.find("sqrt5") == std::string::npos) return QuadraticReal(Rational::from_string(s));

    if (s.size() < 5 || s.substr(s.size() - 5) != "sqrt5")
        throw std::invalid_argument("cannot parse real value '" + s + "'");
    std::string head = s.substr(0, s.size() - 5);  // "", "-", or "...*"
    if (head.empty()) return QuadraticReal::sqrt5();
    if (head == "-") return -QuadraticReal::sqrt5();
    if (head.back() != '*') throw std::invalid_argument("expected '*sqrt5' in '" + s + "'");
    head.pop_back();

    // Split "P+Q" / "P-Q" at the last sign that follows a digit.
    std::size_t split = std::string::npos;
    for (std::size_t i = head.size(); i-- > 1;) {
        if ((head[i] == '+' || head[i] == '-') && std::isdigit(static_cast<unsigned char>(head[i - 1]))) {
            split = i;
            break;
        }
    }
    if (split == std::string::npos)
        return QuadraticReal(Rational(0), Rational::from_string(head));
    Rational p = Rational::from_string(head.substr(0, split));
    Rational q = Rational::from_string(head.substr(split + 1));
    if (head[split] == '-') q = -q;
    return QuadraticReal(p, q);
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void require_not_csv(const Output& out) {
    if (out.format == "csv")
        throw std::invalid_argument("csv output is only available for 'density profile'");
}

}  // namespace

int main(int argc, char** argv) {
    Output out;

    CLI::App app{"Exact and reproducible Fibonacci computations: Zeckendorf codes, "
                 "digit systems over exact real bases, random Fibonacci growth, "
                 "densities, balanced words, and identity checking"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "plain"}))
        ->capture_default_str();
    app.add_option("--precision", out.precision,
                   "Decimal places used when rendering exact values (display only)")
        ->check(CLI::Range(1u, 200u))
        ->capture_default_str();

    // ---- zeckendorf ----
    auto* zk = app.add_subcommand("zeckendorf", "Zeckendorf encoding of naturals");
    zk->require_subcommand(1);
    zk->fallthrough();

    std::string zk_value;
    auto* zk_enc = zk->add_subcommand("encode", "Greedy decomposition into non-adjacent Fibonacci values");
    zk_enc->fallthrough();
    zk_enc->add_option("--value", zk_value, "Natural number to encode (decimal)")->required();
    zk_enc->callback([&] {
        require_not_csv(out);
        if (zk_value.size() > 2000)
            throw std::invalid_argument("value capped at 2000 decimal digits");
        mpz_class a(zk_value);
        if (a < 1) throw std::invalid_argument("value must be >= 1");
        ZeckendorfRep rep = zeckendorf_encode(a);
        if (out.format == "plain") {
            std::cout << rep.coeff_string() << "\n";
            return;
        }
        ordered_json terms = ordered_json::array();
        for (std::uint32_t i : rep.indices()) terms.push_back(fib(i, FibConvention::Shifted).get_str());
        ordered_json j = envelope("zeckendorf encode", {{"value", zk_value}}, "shifted");
        j["result"] = {{"value", a.get_str()},
                       {"coefficients", rep.coeff_string()},
                       {"indices", rep.indices()},
                       {"terms", terms}};
        emit_line(j);
    });

    std::string zk_coeffs;
    auto* zk_dec = zk->add_subcommand("decode", "Weighted sum of a 0/1 coefficient string");
    zk_dec->fallthrough();
    zk_dec->add_option("--coeffs", zk_coeffs,
                       "Coefficients a_1..a_n as a 01-string (a_n must be 1, no adjacent 1s)")
        ->required();
    zk_dec->callback([&] {
        require_not_csv(out);
        if (zk_coeffs.size() > 100000)
            throw std::invalid_argument("coefficient string capped at 100000 digits");
        ZeckendorfRep rep = ZeckendorfRep::from_coeff_string(zk_coeffs);
        mpz_class value = zeckendorf_decode(rep);
        if (out.format == "plain") {
            std::cout << value.get_str() << "\n";
            return;
        }
        ordered_json j = envelope("zeckendorf decode", {{"coeffs", zk_coeffs}}, "shifted");
        j["result"] = {{"value", value.get_str()}, {"indices", rep.indices()}};
        emit_line(j);
    });

    // ---- realrep ----
    std::string rr_base = "2";
    std::string rr_value;
    std::string rr_system = "theta";
    std::size_t rr_digits = 16;
    auto* rr = app.add_subcommand("realrep", "Digit expansions over exact real bases");
    rr->fallthrough();
    rr->add_option("--base", rr_base,
                   "Base theta > 1: rational, 'phi', 'sqrt5', or 'P+Q*sqrt5' (theta system only)")
        ->capture_default_str();
    rr->add_option("--value", rr_value, "Value to expand: rational, 'phi', 'sqrt5', or 'P+Q*sqrt5'")
        ->required();
    rr->add_option("--system", rr_system,
                   "'theta': digits via floor(theta x); 'fibfrac': binary digits over 1/F_k")
        ->check(CLI::IsMember({"theta", "fibfrac"}))
        ->capture_default_str();
    rr->add_option("--digits", rr_digits, "Number of digits to extract")
        ->check(CLI::Range(std::size_t{1}, std::size_t{5000}))
        ->capture_default_str();
    rr->callback([&] {
        require_not_csv(out);
        const QuadraticReal value = parse_real(rr_value);
        if (rr_system == "theta") {
            const QuadraticReal base = parse_real(rr_base);
            ThetaExpansion exp = theta_digits(value, base, rr_digits);
            if (out.format == "plain") {
                for (std::size_t i = 0; i < exp.digits.size(); ++i)
                    std::cout << (i ? "," : "") << exp.digits[i].get_str();
                std::cout << "\n";
                return;
            }
            ordered_json digits = ordered_json::array();
            for (const mpz_class& d : exp.digits) {
                if (d < 2000000000)
                    digits.push_back(d.get_si());
                else
                    digits.push_back(d.get_str());
            }
            ordered_json remainders = ordered_json::array();
            for (const auto& x : exp.remainders) remainders.push_back(x.to_string());
            ordered_json partials = ordered_json::array();
            for (std::size_t n = 1; n <= exp.digits.size(); ++n)
                partials.push_back(theta_partial_sum(exp, n).to_string());
            ordered_json j = envelope("realrep",
                                      {{"base", rr_base},
                                       {"value", rr_value},
                                       {"system", rr_system},
                                       {"digits", rr_digits}});
            j["result"] = {{"base", base.to_string()},
                           {"value", value.to_string()},
                           {"digits", digits},
                           {"remainders", remainders},
                           {"partial_sums", partials}};
            emit_line(j);
        } else {
            FibFractionRep rep = fib_fraction_digits(value, rr_digits);
            if (out.format == "plain") {
                std::cout << rep.integer_part.get_str() << ";";
                for (std::size_t i = 0; i < rep.digits.size(); ++i)
                    std::cout << (i ? "," : "") << rep.digits[i];
                std::cout << "\n";
                return;
            }
            ordered_json remainders = ordered_json::array();
            for (const auto& x : rep.remainders) remainders.push_back(x.to_string());
            ordered_json partials = ordered_json::array();
            for (std::size_t n = 1; n <= rep.digits.size(); ++n)
                partials.push_back(fib_fraction_partial(rep, n).to_string());
            ordered_json j = envelope("realrep",
                                      {{"base", nullptr},
                                       {"value", rr_value},
                                       {"system", rr_system},
                                       {"digits", rr_digits}},
                                      "shifted");
            j["result"] = {{"value", value.to_string()},
                           {"integer_part", rep.integer_part.get_str()},
                           {"digits", rep.digits},
                           {"remainders", remainders},
                           {"partial_sums", partials}};
            emit_line(j);
        }
    });

    // ---- randomfib ----
    auto* rf = app.add_subcommand("randomfib", "Random Fibonacci sequences t_n = +-t_{n-1} +- t_{n-2}");
    rf->require_subcommand(1);
    rf->fallthrough();

    std::uint64_t mc_n = 500, mc_trials = 10000, mc_seed = 0;
    unsigned mc_threads = 0;
    auto* mc = rf->add_subcommand("mc", "Monte Carlo estimate of the limit of |t_n|^(1/n)");
    mc->fallthrough();
    mc->add_option("--n", mc_n, "Walk length")->check(CLI::Range(std::uint64_t{10}, std::uint64_t{1000000}))->capture_default_str();
    mc->add_option("--trials", mc_trials, "Number of independent walks")
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{10000000}))
        ->capture_default_str();
    mc->add_option("--seed", mc_seed, "Master seed (env FIBLAB_SEED when unset)")
        ->envname("FIBLAB_SEED")
        ->capture_default_str();
    mc->add_option("--threads", mc_threads, "Worker threads; 0 = auto. Never changes the result")
        ->check(CLI::Range(0u, 256u))
        ->capture_default_str();
    mc->callback([&] {
        require_not_csv(out);
        LyapunovEstimate est = estimate_viswanath(mc_n, mc_trials, mc_seed, mc_threads);
        if (out.format == "plain") {
            std::cout << format_double(est.estimate) << "\n";
            return;
        }
        ordered_json j = envelope("randomfib mc",
                                  {{"n", mc_n},
                                   {"trials", mc_trials},
                                   {"seed", mc_seed},
                                   {"threads", mc_threads}},
                                  nullptr, mc_seed);
        j["result"] = {{"n", est.n},
                       {"trials", est.trials},
                       {"zero_terminal_count", est.zero_terminal_count},
                       {"included", est.included},
                       {"mean_log", est.mean_log},
                       {"std_error", est.std_error},
                       {"estimate", est.estimate}};
        emit_line(j);
    });

    std::uint64_t ex_n = 10;
    auto* ex = rf->add_subcommand("exact", "Exact E(|t_n|) by dynamic programming over value pairs");
    ex->fallthrough();
    ex->add_option("--n", ex_n, "Level (3..24; the table doubles per level)")
        ->check(CLI::Range(std::uint64_t{3}, kExpectationCap))
        ->capture_default_str();
    ex->callback([&] {
        require_not_csv(out);
        Rational e = exact_expectation(ex_n);
        if (out.format == "plain") {
            std::cout << e.to_string() << "\n";
            return;
        }
        double nth_root = std::pow(e.to_double(), 1.0 / static_cast<double>(ex_n));
        ordered_json j = envelope("randomfib exact", {{"n", ex_n}});
        j["result"] = {{"n", ex_n},
                       {"expectation", e.to_string()},
                       {"expectation_decimal", e.decimal_string(out.precision)},
                       {"nth_root", nth_root}};
        emit_line(j);
    });

    std::string root_tol = "1/1000000000";
    auto* rt = rf->add_subcommand("root", "Bisection root of x^3 - 2x^2 - 1 on [2, 3]");
    rt->fallthrough();
    rt->add_option("--tol", root_tol, "Bracket width to stop at, as a rational like 1/1000000000")
        ->capture_default_str();
    rt->callback([&] {
        require_not_csv(out);
        Rational tol = Rational::from_string(root_tol);
        RootBracket b = rittaud_root(tol);
        Rational mid = b.mid();
        if (out.format == "plain") {
            std::cout << mid.decimal_string(out.precision) << "\n";
            return;
        }
        ordered_json j = envelope("randomfib root", {{"tol", root_tol}});
        j["result"] = {{"lo", b.lo.to_string()},
                       {"hi", b.hi.to_string()},
                       {"mid", mid.to_string()},
                       {"root_decimal", mid.decimal_string(out.precision)},
                       {"root_minus_one_decimal", (mid - Rational(1)).decimal_string(out.precision)},
                       {"residual_decimal", rittaud_poly(mid).decimal_string(out.precision)}};
        emit_line(j);
    });

    // ---- density ----
    auto* dn = app.add_subcommand("density", "Counting functions and densities of integer sets");
    dn->require_subcommand(1);
    dn->fallthrough();

    std::string dp_set = "fib";
    std::vector<std::uint64_t> dp_points;
    auto* dp = dn->add_subcommand("profile", "Counts and ratios at sample points");
    dp->fallthrough();
    dp->add_option("--set", dp_set, "fib | evil | file:<path> (newline-delimited naturals)")
        ->capture_default_str();
    dp->add_option("--points", dp_points, "Sample points, strictly increasing")
        ->required()
        ->delimiter(',');
    dp->callback([&] {
        std::optional<IntegerSet> set;
        if (dp_set == "fib") {
            set = IntegerSet::fibonacci_values();
        } else if (dp_set == "evil") {
            set = IntegerSet::gelfond_n0();
        } else if (dp_set.rfind("file:", 0) == 0) {
            std::ifstream in(dp_set.substr(5));
            if (!in) throw std::invalid_argument("cannot open " + dp_set.substr(5));
            std::vector<std::uint64_t> members;
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                members.push_back(std::stoull(line));
            }
            set = IntegerSet::explicit_list(std::move(members));
        } else {
            throw std::invalid_argument("unknown set '" + dp_set + "' (expected fib|evil|file:<path>)");
        }
        for (std::uint64_t x : dp_points)
            if (dp_set == "evil" && x > 2000000000ull)
                throw std::invalid_argument("evil-number counting capped at 2*10^9");
        DensityProfile prof = density_profile(*set, dp_points);

        const bool fibset = prof.kind == SetKind::FibonacciValues;
        if (out.format == "csv") {
            std::cout << "x,count,ratio,ratio_decimal,tail_min,tail_max";
            if (fibset) std::cout << ",log_bound,within_log_bound";
            std::cout << "\n";
            for (const DensitySample& s : prof.samples) {
                std::cout << s.x << "," << s.count << "," << s.ratio.to_string() << ","
                          << s.ratio.decimal_string(out.precision) << ","
                          << s.tail_min.to_string() << "," << s.tail_max.to_string();
                if (fibset)
                    std::cout << "," << format_double(s.log_bound) << ","
                              << (s.within_log_bound ? "true" : "false");
                std::cout << "\n";
            }
            return;
        }
        if (out.format == "plain") {
            for (const DensitySample& s : prof.samples)
                std::cout << s.x << " " << s.count << " "
                          << s.ratio.decimal_string(out.precision) << "\n";
            return;
        }
        ordered_json pts = ordered_json::array();
        for (const DensitySample& s : prof.samples) {
            ordered_json p;
            p["x"] = s.x;
            p["count"] = s.count;
            p["ratio"] = s.ratio.to_string();
            p["ratio_decimal"] = s.ratio.decimal_string(out.precision);
            p["tail_min"] = s.tail_min.to_string();
            p["tail_max"] = s.tail_max.to_string();
            if (fibset) {
                p["log_bound"] = s.log_bound;
                p["within_log_bound"] = s.within_log_bound;
            }
            pts.push_back(std::move(p));
        }
        ordered_json j = envelope("density profile",
                                  {{"set", dp_set}, {"points", dp_points}});
        j["result"] = {{"set", to_string(prof.kind)}, {"points", pts}};
        emit_line(j);
    });

    std::uint64_t fm_p = 2, fm_lambda = 1;
    auto* fm = dn->add_subcommand("fibmod", "Fraction of residues mod p^lambda hit by the Fibonacci sequence");
    fm->fallthrough();
    fm->add_option("--p", fm_p, "Prime")->required();
    fm->add_option("--lambda", fm_lambda, "Exponent >= 1")->required();
    fm->callback([&] {
        require_not_csv(out);
        ResidueDensity r = fib_residue_density(fm_p, fm_lambda);
        if (out.format == "plain") {
            std::cout << r.density.to_string() << "\n";
            return;
        }
        ordered_json j = envelope("density fibmod", {{"p", fm_p}, {"lambda", fm_lambda}});
        j["result"] = {{"p", r.p},
                       {"lambda", r.lambda},
                       {"modulus", r.modulus},
                       {"residue_count", r.residue_count},
                       {"density", r.density.to_string()},
                       {"density_decimal", r.density.decimal_string(out.precision)}};
        emit_line(j);
    });

    // ---- words ----
    auto* wd = app.add_subcommand("words", "Morphic words and the balance property");
    wd->require_subcommand(1);
    wd->fallthrough();

    std::string wg_preset = "fib";
    std::size_t wg_length = 0;
    auto* wg = wd->add_subcommand("generate", "Prefix of a fixed-point or k-bonacci word");
    wg->fallthrough();
    wg->add_option("--preset", wg_preset, "fib | thue-morse | kfib:<k>")->capture_default_str();
    wg->add_option("--length", wg_length, "Prefix length")
        ->required()
        ->check(CLI::Range(std::size_t{0}, std::size_t{10000000}));
    wg->callback([&] {
        require_not_csv(out);
        Word w;
        if (wg_preset == "fib") {
            w = morphic_prefix(fibonacci_morphism(), 0, wg_length);
        } else if (wg_preset == "thue-morse") {
            w = morphic_prefix(thue_morse_morphism(), 0, wg_length);
        } else if (wg_preset.rfind("kfib:", 0) == 0) {
            unsigned long k = std::stoul(wg_preset.substr(5));
            if (k < 1 || k > 1000) throw std::invalid_argument("kfib order must be in 1..1000");
            w = kfib_prefix(static_cast<unsigned>(k), wg_length);
        } else {
            throw std::invalid_argument("unknown preset '" + wg_preset + "'");
        }
        if (out.format == "plain") {
            std::cout << w.to_string() << "\n";
            return;
        }
        ordered_json j = envelope("words generate",
                                  {{"preset", wg_preset}, {"length", wg_length}});
        j["result"] = {{"length", w.size()}, {"word", w.to_string()}};
        emit_line(j);
    });

    std::string wb_word;
    auto* wb = wd->add_subcommand("balanced", "Balance check for a binary word, with witness on failure");
    wb->fallthrough();
    wb->add_option("--word", wb_word, "Word as a 01-string")->required();
    wb->callback([&] {
        require_not_csv(out);
        if (wb_word.size() > 20000)
            throw std::invalid_argument("balance scan capped at length 20000");
        BalanceReport rep = is_balanced(Word::from_digits(wb_word, 2));
        if (out.format == "plain") {
            if (rep.balanced)
                std::cout << "balanced\n";
            else
                std::cout << "unbalanced " << rep.witness->factor_high.to_string() << " "
                          << rep.witness->factor_low.to_string() << "\n";
            return;
        }
        ordered_json j = envelope("words balanced", {{"word", wb_word}});
        ordered_json r;
        r["word"] = rep.word.to_string();
        r["balanced"] = rep.balanced;
        if (rep.witness) {
            r["witness"] = {{"window", rep.witness->window},
                            {"pos_high", rep.witness->pos_high},
                            {"pos_low", rep.witness->pos_low},
                            {"factor_high", rep.witness->factor_high.to_string()},
                            {"factor_low", rep.witness->factor_low.to_string()}};
        }
        j["result"] = std::move(r);
        emit_line(j);
    });

    std::uint64_t wc_n = 1;
    std::string wc_method = "formula";
    auto* wc = wd->add_subcommand("count", "Number of balanced binary words of a given length");
    wc->fallthrough();
    wc->add_option("--n", wc_n, "Word length")->required();
    wc->add_option("--method", wc_method, "formula | brute")
        ->check(CLI::IsMember({"formula", "brute"}))
        ->capture_default_str();
    wc->callback([&] {
        require_not_csv(out);
        std::uint64_t count;
        if (wc_method == "brute") {
            if (wc_n > 20) throw std::invalid_argument("brute force is capped at n = 20");
            count = count_balanced_bruteforce(static_cast<unsigned>(wc_n));
        } else {
            if (wc_n < 1 || wc_n > 2000)
                throw std::invalid_argument("formula evaluation is capped at n = 2000");
            count = balanced_formula(wc_n);
        }
        if (out.format == "plain") {
            std::cout << count << "\n";
            return;
        }
        ordered_json j = envelope("words count", {{"n", wc_n}, {"method", wc_method}});
        j["result"] = {{"n", wc_n}, {"method", wc_method}, {"count", count}};
        emit_line(j);
    });

    // ---- identities ----
    auto* id = app.add_subcommand("identities", "Exact identity checking with tail bounds and refutation witnesses");
    id->require_subcommand(1);
    id->fallthrough();

    std::string ic_id;
    std::uint64_t ic_k = 1, ic_terms = 0, ic_a = 1, ic_b = 1, ic_n = 1;
    std::string ic_conv = "classic";
    auto* ic = id->add_subcommand("check", "Run one identity check; exit 3 if refuted");
    ic->fallthrough();
    ic->add_option("--id", ic_id, "reciprocal | symmetry | sqrt5cf | dflemma")
        ->required()
        ->check(CLI::IsMember({"reciprocal", "symmetry", "sqrt5cf", "dflemma"}));
    ic->add_option("--k", ic_k, "Parameter k (reciprocal, dflemma)");
    auto* ic_terms_opt = ic->add_option("--terms", ic_terms, "Series truncation length");
    ic->add_option("--a", ic_a, "Parameter a (symmetry)");
    ic->add_option("--b", ic_b, "Parameter b (symmetry)");
    ic->add_option("--n", ic_n, "Parameter n (dflemma)");
    auto* ic_conv_opt =
        ic->add_option("--convention", ic_conv, "Fibonacci indexing for dflemma: classic | shifted")
            ->check(CLI::IsMember({"classic", "shifted"}));
    ic->callback([&] {
        require_not_csv(out);
        IdentityReport rep;
        if (ic_id == "reciprocal") {
            if (ic_conv_opt->count() > 0 && ic_conv != "classic")
                throw std::invalid_argument("reciprocal is defined with the classic indexing");
            std::uint64_t terms = ic_terms_opt->count() > 0 ? ic_terms : 50;
            if (ic_k < 1 || ic_k > 1000) throw std::invalid_argument("k must be in 1..1000");
            if (terms < 1 || terms > 100000)
                throw std::invalid_argument("terms must be in 1..100000");
            rep = check_reciprocal_sum(ic_k, terms);
        } else if (ic_id == "symmetry") {
            if (ic_conv_opt->count() > 0 && ic_conv != "classic")
                throw std::invalid_argument("symmetry is defined with the classic indexing");
            if (ic_a < 1 || ic_a > 2000 || ic_b < 1 || ic_b > 2000)
                throw std::invalid_argument("a and b must be in 1..2000");
            rep = check_symmetry(ic_a, ic_b);
        } else if (ic_id == "sqrt5cf") {
            if (ic_conv_opt->count() > 0 && ic_conv != "classic")
                throw std::invalid_argument("sqrt5cf is defined with the classic indexing");
            std::uint64_t terms = ic_terms_opt->count() > 0 ? ic_terms : 10;
            if (terms < 1 || terms > 2000) throw std::invalid_argument("terms must be in 1..2000");
            rep = check_sqrt5_cf(terms);
        } else {
            if (ic_k < 1 || ic_n < 1 || ic_k > 200 || ic_k * (ic_n + 1) > 200000)
                throw std::invalid_argument("dflemma needs k >= 1, n >= 1, k*(n+1) <= 200000");
            rep = check_df_lemma(ic_k, ic_n, convention_from_string(ic_conv));
        }
        if (out.format == "plain") {
            std::cout << to_string(rep.verdict) << "\n";
        } else {
            emit_line(report_json(rep, "identities check", out.precision));
        }
        if (rep.verdict == Verdict::Refuted) out.exit_code = 3;
    });

    auto* is = id->add_subcommand("sweep", "Run the full fixed identity matrix; exit 3 if any check refutes");
    is->fallthrough();
    is->callback([&] {
        require_not_csv(out);
        for (const IdentityReport& rep : identity_sweep()) {
            if (out.format == "plain")
                std::cout << rep.id << " " << to_string(rep.verdict) << "\n";
            else
                emit_line(report_json(rep, "identities sweep", out.precision));
            if (rep.verdict == Verdict::Refuted) out.exit_code = 3;
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return out.exit_code;
}

#include "fiblab/randomfib.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

namespace fiblab {

std::uint64_t walk_seed(std::uint64_t master_seed, std::uint64_t walk_index) {
    // The (walk_index+1)-th output of SplitMix64(master_seed); the state
    // advances by a fixed gamma, so jump straight to it.
    SplitMix64 rng(master_seed + walk_index * 0x9E3779B97F4A7C15ULL);
    return rng.next();
}

SignWalk walk_from_signs(std::uint64_t n, const SignSource& signs) {
    if (n == 0) throw std::invalid_argument("walk length must be at least 1");
    SignWalk w;
    w.values.reserve(n);
    w.values.emplace_back(1);
    if (n >= 2) w.values.emplace_back(1);
    for (std::uint64_t k = 3; k <= n; ++k) {
        auto [s1, s2] = signs();
        const mpz_class& a = w.values[k - 2];
        const mpz_class& b = w.values[k - 3];
        mpz_class t = (s1 > 0 ? a : -a) + (s2 > 0 ? b : -b);
        w.values.push_back(std::move(t));
    }
    return w;
}

SignWalk simulate_walk(std::uint64_t n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    SignWalk w = walk_from_signs(n, [&rng]() {
        std::uint64_t bits = rng.next();
        int s1 = (bits & 1u) ? 1 : -1;
        int s2 = (bits & 2u) ? 1 : -1;
        return std::pair<int, int>(s1, s2);
    });
    w.seed = seed;
    return w;
}

namespace {

// ln|t| for a GMP integer without overflowing double: mantissa in
// [0.5, 1) plus the binary exponent.
double log_abs(const mpz_class& t) {
    signed long exp = 0;
    double d = mpz_get_d_2exp(&exp, t.get_mpz_t());
    return std::log(std::fabs(d)) + static_cast<double>(exp) * M_LN2;
}

}  // namespace

LyapunovEstimate estimate_viswanath(std::uint64_t n, std::uint64_t trials,
                                    std::uint64_t master_seed, unsigned threads) {
    if (n < 3) throw std::invalid_argument("need n >= 3 to observe growth");
    if (trials == 0) throw std::invalid_argument("need at least one trial");

    // Per-walk results land in a slot indexed by walk number, so the
    // reduction below is independent of thread scheduling.
    std::vector<double> per_walk(trials, 0.0);
    std::vector<unsigned char> is_zero(trials, 0);

    auto run_range = [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi; ++i) {
            SignWalk w = simulate_walk(n, walk_seed(master_seed, i));
            const mpz_class& last = w.values.back();
            if (last == 0) {
                is_zero[i] = 1;
            } else {
                per_walk[i] = log_abs(last) / static_cast<double>(n);
            }
        }
    };

    unsigned nthreads = threads;
    if (nthreads == 0) {
        nthreads = std::thread::hardware_concurrency();
        if (nthreads == 0) nthreads = 1;
    }
    if (nthreads > 1 && trials >= 2 * nthreads) {
        std::vector<std::thread> pool;
        std::uint64_t chunk = trials / nthreads;
        std::uint64_t start = 0;
        for (unsigned t = 0; t < nthreads; ++t) {
            std::uint64_t stop = (t + 1 == nthreads) ? trials : start + chunk;
            pool.emplace_back(run_range, start, stop);
            start = stop;
        }
        for (auto& th : pool) th.join();
    } else {
        run_range(0, trials);
    }

    LyapunovEstimate est;
    est.n = n;
    est.trials = trials;

    // Serial merge in walk order: identical result for any thread count.
    double sum = 0.0, sumsq = 0.0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        if (is_zero[i]) {
            ++est.zero_terminal_count;
            continue;
        }
        sum += per_walk[i];
        sumsq += per_walk[i] * per_walk[i];
    }
    est.included = trials - est.zero_terminal_count;
    if (est.included == 0) throw std::runtime_error("every walk ended at zero");

    double m = sum / static_cast<double>(est.included);
    est.mean_log = m;
    if (est.included > 1) {
        double var = (sumsq - sum * m) / static_cast<double>(est.included - 1);
        if (var < 0) var = 0;
        est.std_error = std::sqrt(var / static_cast<double>(est.included));
    }
    est.estimate = std::exp(m);
    return est;
}

ExpectationTable ExpectationTable::initial() {
    ExpectationTable t;
    t.states_[{1, 1}] = Rational(1);
    return t;
}

void ExpectationTable::step() {
    std::map<std::pair<std::int64_t, std::int64_t>, Rational> next;
    const Rational quarter(1, 4);
    for (const auto& [pair, prob] : states_) {
        auto [prev, cur] = pair;
        Rational share = prob * quarter;
        const std::int64_t succ[4] = {cur + prev, cur - prev, -cur + prev, -cur - prev};
        for (std::int64_t v : succ) next[{cur, v}] += share;
    }
    states_ = std::move(next);
    ++level_;
}

Rational ExpectationTable::probability_sum() const {
    Rational s(0);
    for (const auto& [pair, prob] : states_) s += prob;
    return s;
}

Rational ExpectationTable::expected_abs() const {
    Rational s(0);
    for (const auto& [pair, prob] : states_) {
        std::int64_t v = pair.second;
        s += prob * Rational(v < 0 ? -v : v);
    }
    return s;
}

Rational exact_expectation(std::uint64_t n, std::uint64_t cap) {
    if (n < 3) throw std::invalid_argument("expectation defined for n >= 3");
    if (n > cap)
        throw std::invalid_argument(
            "n exceeds the expectation cap; raise the cap only with the memory to match");
    ExpectationTable t = ExpectationTable::initial();
    while (t.level() < n) t.step();
    return t.expected_abs();
}

Rational rittaud_poly(const Rational& x) {
    return x * x * x - Rational(2) * x * x - Rational(1);
}

RootBracket rittaud_root(const Rational& tolerance) {
    if (tolerance.sign() <= 0) throw std::invalid_argument("tolerance must be positive");
    RootBracket b{Rational(2), Rational(3)};
    // f(2) = -1 < 0 < 8 = f(3); the cubic is increasing past x = 4/3, so
    // this bracket pins the unique real root.
    while (b.hi - b.lo > tolerance) {
        Rational mid = b.mid();
        if (rittaud_poly(mid).sign() < 0)
            b.lo = mid;
        else
            b.hi = mid;
    }
    return b;
}

}  // namespace fiblab

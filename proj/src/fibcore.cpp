#include "fiblab/fibcore.hpp"

#include <stdexcept>
#include <utility>

namespace fiblab {

std::string to_string(FibConvention conv) {
    return conv == FibConvention::Classic ? "classic" : "shifted";
}

FibConvention convention_from_string(const std::string& s) {
    if (s == "classic") return FibConvention::Classic;
    if (s == "shifted") return FibConvention::Shifted;
    throw std::invalid_argument("unknown convention '" + s + "' (expected classic|shifted)");
}

namespace {

// (F_n, F_{n+1}) in the Classic indexing.
std::pair<mpz_class, mpz_class> fib_pair(std::uint64_t n) {
    if (n == 0) return {0, 1};
    auto [a, b] = fib_pair(n >> 1);
    // F_{2k} = F_k (2 F_{k+1} - F_k),  F_{2k+1} = F_k^2 + F_{k+1}^2
    mpz_class c = a * (2 * b - a);
    mpz_class d = a * a + b * b;
    if (n & 1) return {d, c + d};
    return {c, d};
}

}  // namespace

mpz_class fib(std::uint64_t n, FibConvention conv) {
    if (conv == FibConvention::Shifted) n += 1;
    return fib_pair(n).first;
}

mpz_class order_r_fib(std::uint32_t r, std::uint64_t n) {
    if (r < 2) throw std::invalid_argument("order_r_fib: order must be >= 2");
    if (n < r - 1) return 0;
    if (n == r - 1) return 1;
    // sliding window of the last r terms, starting at indices 0..r-1
    std::vector<mpz_class> w(r, 0);
    w[r - 1] = 1;
    mpz_class window_sum = 1;
    for (std::uint64_t i = r; i <= n; ++i) {
        mpz_class next = window_sum;
        window_sum += next - w[i % r];
        w[i % r] = std::move(next);
    }
    return w[n % r];
}

std::uint64_t pisano_period(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("pisano_period: modulus must be >= 1");
    // target pair is (0, 1) reduced mod m; for m == 1 that is (0, 0)
    const std::uint64_t t0 = 0 % m, t1 = 1 % m;
    std::uint64_t a = t0, b = t1, period = 0;
    do {
        const std::uint64_t c = (a + b) % m;
        a = b;
        b = c;
        ++period;
    } while (a != t0 || b != t1);
    return period;
}

std::vector<std::uint64_t> fib_residues(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("fib_residues: modulus must be >= 1");
    const std::uint64_t period = pisano_period(m);
    std::vector<bool> seen(m, false);
    std::uint64_t a = 0 % m, b = 1 % m;
    for (std::uint64_t i = 0; i < period; ++i) {
        seen[a] = true;
        const std::uint64_t c = (a + b) % m;
        a = b;
        b = c;
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t r = 0; r < m; ++r)
        if (seen[r]) out.push_back(r);
    return out;
}

std::uint64_t totient(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("totient: argument must be >= 1");
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<Rational> sqrt5_convergents(std::size_t count) {
    if (count == 0) throw std::invalid_argument("sqrt5_convergents: count must be >= 1");
    std::vector<Rational> out;
    out.reserve(count);
    // standard p/q recurrences for [2; 4, 4, 4, ...]
    mpz_class p_prev = 1, p_cur = 2, q_prev = 0, q_cur = 1;
    out.emplace_back(p_cur, q_cur);
    for (std::size_t k = 1; k < count; ++k) {
        mpz_class p_next = 4 * p_cur + p_prev;
        mpz_class q_next = 4 * q_cur + q_prev;
        p_prev = std::move(p_cur);
        q_prev = std::move(q_cur);
        p_cur = std::move(p_next);
        q_cur = std::move(q_next);
        out.emplace_back(p_cur, q_cur);
    }
    return out;
}

}  // namespace fiblab

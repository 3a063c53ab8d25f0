#include "fiblab/density.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "fiblab/fibcore.hpp"

namespace fiblab {

std::string to_string(SetKind kind) {
    switch (kind) {
        case SetKind::FibonacciValues: return "fibonacci";
        case SetKind::GelfondN0: return "gelfond-n0";
        case SetKind::ExplicitList: return "explicit";
    }
    return "?";
}

IntegerSet IntegerSet::fibonacci_values() { return IntegerSet(SetKind::FibonacciValues); }

IntegerSet IntegerSet::gelfond_n0() { return IntegerSet(SetKind::GelfondN0); }

IntegerSet IntegerSet::explicit_list(std::vector<std::uint64_t> members) {
    for (std::size_t i = 1; i < members.size(); ++i)
        if (members[i] <= members[i - 1])
            throw std::invalid_argument("explicit list must be strictly increasing");
    IntegerSet s(SetKind::ExplicitList);
    s.members_ = std::move(members);
    return s;
}

bool gelfond_member(std::uint64_t n) { return std::popcount(n) % 2 == 0; }

bool IntegerSet::contains(std::uint64_t n) const {
    switch (kind_) {
        case SetKind::FibonacciValues: {
            if (n == 0) return false;
            if (n == 1) return true;
            unsigned __int128 a = 1, b = 2;
            while (b < n) {
                unsigned __int128 c = a + b;
                a = b;
                b = c;
            }
            return b == n;
        }
        case SetKind::GelfondN0:
            return gelfond_member(n);
        case SetKind::ExplicitList:
            return std::binary_search(members_.begin(), members_.end(), n);
    }
    return false;
}

const std::vector<std::uint64_t>& IntegerSet::members() const {
    if (kind_ != SetKind::ExplicitList)
        throw std::logic_error("only explicit lists expose a member vector");
    return members_;
}

namespace {

// Evil numbers in [0, x], counted by walking x's bits from the top. At
// each set bit, the branch that clears it frees the lower bits: half of
// those suffixes match any required parity (all of the one suffix, when
// no bits remain free).
std::uint64_t evil_upto(std::uint64_t x) {
    std::uint64_t total = 0;
    int parity = 0;  // parity of x's bits above the current position
    for (int i = 63; i >= 0; --i) {
        if (!((x >> i) & 1u)) continue;
        if (i == 0)
            total += (parity == 0) ? 1 : 0;
        else
            total += 1ull << (i - 1);
        parity ^= 1;
    }
    // x itself.
    if (parity == 0) ++total;
    return total;
}

}  // namespace

std::uint64_t counting_function(const IntegerSet& set, std::uint64_t x) {
    if (x == 0) throw std::invalid_argument("counting function needs x >= 1");
    switch (set.kind()) {
        case SetKind::FibonacciValues: {
            std::uint64_t count = 1;  // the value 1
            unsigned __int128 a = 1, b = 2;
            while (b <= x) {
                ++count;
                unsigned __int128 c = a + b;
                a = b;
                b = c;
            }
            return count;
        }
        case SetKind::GelfondN0:
            return evil_upto(x) - 1;  // drop n = 0
        case SetKind::ExplicitList: {
            const auto& m = set.members();
            auto lo = std::lower_bound(m.begin(), m.end(), std::uint64_t{1});
            auto hi = std::upper_bound(m.begin(), m.end(), x);
            return static_cast<std::uint64_t>(hi - lo);
        }
    }
    return 0;
}

DensityProfile density_profile(const IntegerSet& set, const std::vector<std::uint64_t>& xs) {
    if (xs.empty()) throw std::invalid_argument("need at least one sample point");
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (xs[i] <= xs[i - 1])
            throw std::invalid_argument("sample points must be strictly increasing");

    DensityProfile prof;
    prof.kind = set.kind();
    prof.samples.resize(xs.size());
    const double log_phi = std::log((1.0 + std::sqrt(5.0)) / 2.0);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        DensitySample& s = prof.samples[i];
        s.x = xs[i];
        s.count = counting_function(set, xs[i]);
        s.ratio = Rational(mpz_class(s.count), mpz_class(s.x));
        if (set.kind() == SetKind::FibonacciValues) {
            s.has_log_bound = true;
            s.log_bound = std::log(static_cast<double>(s.x)) / log_phi;
            s.within_log_bound = static_cast<double>(s.count) <= s.log_bound;
        }
    }
    for (std::size_t i = prof.samples.size(); i-- > 0;) {
        DensitySample& s = prof.samples[i];
        if (i + 1 == prof.samples.size()) {
            s.tail_min = s.ratio;
            s.tail_max = s.ratio;
        } else {
            const DensitySample& next = prof.samples[i + 1];
            s.tail_min = std::min(s.ratio, next.tail_min);
            s.tail_max = std::max(s.ratio, next.tail_max);
        }
    }
    return prof;
}

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

ResidueDensity fib_residue_density(std::uint64_t p, std::uint64_t lambda,
                                   std::uint64_t modulus_cap) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (lambda == 0) throw std::invalid_argument("lambda must be >= 1");

    unsigned __int128 m = 1;
    for (std::uint64_t i = 0; i < lambda; ++i) {
        m *= p;
        if (m > modulus_cap)
            throw std::invalid_argument("p^lambda exceeds the enumeration cap");
    }

    ResidueDensity r;
    r.p = p;
    r.lambda = lambda;
    r.modulus = static_cast<std::uint64_t>(m);
    r.residue_count = fib_residues(r.modulus).size();
    r.density = Rational(mpz_class(r.residue_count), mpz_class(r.modulus));
    return r;
}

}  // namespace fiblab

#include "fiblab/identities.hpp"

#include <algorithm>
#include <stdexcept>

namespace fiblab {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::ExactEqual: return "ExactEqual";
        case Verdict::WithinTailBound: return "WithinTailBound";
        case Verdict::Refuted: return "Refuted";
    }
    return "?";
}

BoundedValue BoundedValue::exact_value(QuadraticReal v) {
    BoundedValue b;
    b.lo = v;
    b.hi = std::move(v);
    b.tail_bound = Rational(0);
    return b;
}

BoundedValue BoundedValue::truncated(const QuadraticReal& partial, const Rational& tail) {
    if (tail.sign() <= 0) throw std::invalid_argument("tail bound must be positive");
    BoundedValue b;
    b.lo = partial;
    b.hi = partial + QuadraticReal(tail);
    b.tail_bound = tail;
    return b;
}

BoundedValue BoundedValue::intersection(const BoundedValue& a, const BoundedValue& b) {
    if (!a.overlaps(b)) throw std::logic_error("intervals do not intersect");
    BoundedValue r;
    r.lo = std::max(a.lo, b.lo);
    r.hi = std::min(a.hi, b.hi);
    r.tail_bound = std::min(a.tail_bound, b.tail_bound);
    return r;
}

Rational phi_lower_bound() {
    static const Rational lo = [] {
        Rational r(809, 500);
        // r < phi iff r^2 < r + 1 (phi is the positive root of x^2 = x + 1).
        if (!(r * r < r + Rational(1))) throw std::logic_error("phi lower bound is wrong");
        return r;
    }();
    return lo;
}

// All three bounds majorize 1/F_m by phi^(2-m) termwise and sum the
// resulting geometric series; substituting the rational phi_lower_bound
// only enlarges them (negative exponents, smaller denominator).
Rational reciprocal_tail_bound(std::uint64_t k, std::uint64_t terms) {
    const Rational lo = phi_lower_bound();
    long e = 4 - 2 * static_cast<long>(terms) - 2 * static_cast<long>(k);
    return lo.pow(e) / (Rational(1) - lo.pow(-2));
}

Rational sqrt5_series_tail_bound(std::uint64_t terms) {
    const Rational lo = phi_lower_bound();
    long e = -4 - 6 * static_cast<long>(terms);
    return Rational(2) * lo.pow(e) / (Rational(1) - lo.pow(-6));
}

Rational sqrt5_rational_tail_bound(std::uint64_t terms) {
    const Rational lo = phi_lower_bound();
    long e = -5 - 12 * static_cast<long>(terms);
    return Rational(4) * lo.pow(e) / (Rational(1) - lo.pow(-12));
}

namespace {

std::string u64str(std::uint64_t v) { return std::to_string(v); }

Rational inv_product(const mpz_class& a, const mpz_class& b) {
    return Rational(mpz_class(1), a * b);
}

}  // namespace

IdentityReport check_reciprocal_sum(std::uint64_t k, std::uint64_t terms) {
    if (k < 1 || terms < 1) throw std::invalid_argument("need k >= 1 and terms >= 1");

    Rational partial(0);
    for (std::uint64_t n = 1; n <= terms; ++n)
        partial += inv_product(fib(n), fib(n + 2 * k));

    Rational rhs_sum(0);
    for (std::uint64_t n = 1; n <= k; ++n)
        rhs_sum += inv_product(fib(2 * n - 1), fib(2 * n));
    Rational rhs = rhs_sum / Rational(fib(2 * k));

    Rational tail = reciprocal_tail_bound(k, terms);

    IdentityReport rep;
    rep.id = "reciprocal";
    rep.params = {{"k", u64str(k)}, {"terms", u64str(terms)}};
    rep.convention = FibConvention::Classic;
    rep.lhs = BoundedValue::truncated(QuadraticReal(partial), tail);
    rep.rhs = BoundedValue::exact_value(QuadraticReal(rhs));
    rep.tail_bound = tail;

    Rational diff = rhs - partial;
    if (diff.sign() >= 0 && diff <= tail) {
        rep.verdict = Verdict::WithinTailBound;
    } else {
        rep.verdict = Verdict::Refuted;
        rep.witness = RefutationWitness{QuadraticReal(partial), QuadraticReal(rhs),
                                        "closed form escapes [partial, partial + tail]"};
    }
    return rep;
}

IdentityReport check_symmetry(std::uint64_t a, std::uint64_t b) {
    if (a < 1 || b < 1) throw std::invalid_argument("need a >= 1 and b >= 1");

    auto side = [](std::uint64_t upper, std::uint64_t offset) {
        Rational sum(0);
        mpz_class f_off = fib(offset);
        for (std::uint64_t n = 1; n <= upper; ++n) {
            Rational term(f_off, fib(n) * fib(n + offset));
            sum += (n % 2 == 1) ? -term : term;
        }
        return sum;
    };
    Rational lhs = side(b, a);
    Rational rhs = side(a, b);

    IdentityReport rep;
    rep.id = "symmetry";
    rep.params = {{"a", u64str(a)}, {"b", u64str(b)}};
    rep.convention = FibConvention::Classic;
    rep.lhs = BoundedValue::exact_value(QuadraticReal(lhs));
    rep.rhs = BoundedValue::exact_value(QuadraticReal(rhs));
    if (lhs == rhs) {
        rep.verdict = Verdict::ExactEqual;
    } else {
        rep.verdict = Verdict::Refuted;
        rep.witness =
            RefutationWitness{QuadraticReal(lhs), QuadraticReal(rhs), "finite sums differ"};
    }
    return rep;
}

IdentityReport check_sqrt5_cf(std::uint64_t terms) {
    if (terms < 1) throw std::invalid_argument("need terms >= 1");

    const QuadraticReal root5 = QuadraticReal::sqrt5();
    const QuadraticReal golden = QuadraticReal::phi();

    QuadraticReal s_cf(Rational(0));
    for (const Rational& conv : sqrt5_convergents(terms))
        s_cf += (root5 - QuadraticReal(conv)).abs();

    QuadraticReal s_phi(Rational(0));
    for (std::uint64_t n = 1; n <= terms; ++n) {
        long e = -3 * static_cast<long>(n);
        s_phi += QuadraticReal(Rational(mpz_class(2), fib(3 * n))) * golden.pow(e);
    }

    Rational s_rat(0);
    for (std::uint64_t n = 1; n <= terms; ++n)
        s_rat += Rational(mpz_class(4), fib(6 * n - 3) * fib(6 * n));

    const Rational t_series = sqrt5_series_tail_bound(terms);
    const Rational t_rat = sqrt5_rational_tail_bound(terms);

    BoundedValue e_cf = BoundedValue::truncated(s_cf, t_series);
    BoundedValue e_phi = BoundedValue::truncated(s_phi, t_series);
    BoundedValue e_rat = BoundedValue::truncated(QuadraticReal(s_rat), t_rat);

    IdentityReport rep;
    rep.id = "sqrt5cf";
    rep.params = {{"terms", u64str(terms)}};
    rep.convention = FibConvention::Classic;
    rep.expressions = {{"convergent-error-sum", e_cf},
                       {"phi-series", e_phi},
                       {"rational-series", e_rat}};
    rep.lhs = e_cf;
    rep.tail_bound = std::max(t_series, t_rat);

    bool ok = e_cf.overlaps(e_phi) && e_cf.overlaps(e_rat) && e_phi.overlaps(e_rat);
    if (ok) {
        rep.rhs = BoundedValue::intersection(e_phi, e_rat);
        rep.verdict = Verdict::WithinTailBound;
    } else {
        rep.rhs = e_phi;
        rep.verdict = Verdict::Refuted;
        rep.witness = RefutationWitness{s_cf, s_phi, "truncation intervals fail to intersect"};
    }
    return rep;
}

IdentityReport check_df_lemma(std::uint64_t k, std::uint64_t n, FibConvention conv) {
    if (k < 1 || n < 1) throw std::invalid_argument("need k >= 1 and n >= 1");

    mpz_class lhs_sum(0);
    if (k % 2 == 0) {
        for (std::uint64_t i = 1; i <= n; ++i) lhs_sum += fib(2 * k * i, conv);
    } else {
        for (std::uint64_t i = 1; i <= n; ++i) {
            mpz_class f = fib(k * i, conv);
            lhs_sum += f * f;
        }
    }

    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k));
    Rational rhs(fib(k * n, conv) * fib(k * (n + 1), conv), fact);
    Rational lhs(lhs_sum);

    IdentityReport rep;
    rep.id = "dflemma";
    rep.params = {{"k", u64str(k)}, {"n", u64str(n)}};
    rep.convention = conv;
    rep.lhs = BoundedValue::exact_value(QuadraticReal(lhs));
    rep.rhs = BoundedValue::exact_value(QuadraticReal(rhs));
    if (lhs == rhs) {
        rep.verdict = Verdict::ExactEqual;
    } else {
        rep.verdict = Verdict::Refuted;
        rep.witness = RefutationWitness{QuadraticReal(lhs), QuadraticReal(rhs),
                                        "exact sides differ"};
    }
    return rep;
}

std::vector<IdentityReport> identity_sweep() {
    std::vector<IdentityReport> out;
    for (std::uint64_t k = 1; k <= 5; ++k) out.push_back(check_reciprocal_sum(k, 50));
    for (std::uint64_t a = 1; a <= 30; ++a)
        for (std::uint64_t b = 1; b <= 30; ++b) out.push_back(check_symmetry(a, b));
    out.push_back(check_sqrt5_cf(10));
    for (std::uint64_t n = 1; n <= 50; ++n)
        out.push_back(check_df_lemma(1, n, FibConvention::Classic));
    out.push_back(check_df_lemma(1, 2, FibConvention::Shifted));
    out.push_back(check_df_lemma(2, 2, FibConvention::Classic));
    out.push_back(check_df_lemma(2, 2, FibConvention::Shifted));
    return out;
}

}  // namespace fiblab

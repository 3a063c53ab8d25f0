#include "fiblab/words.hpp"

#include <algorithm>
#include <stdexcept>

#include "fiblab/fibcore.hpp"

namespace fiblab {

Word::Word(std::vector<std::uint8_t> letters, unsigned alphabet_size)
    : letters_(std::move(letters)), b_(alphabet_size) {
    if (b_ < 1) throw std::invalid_argument("alphabet must have at least one letter");
    for (std::uint8_t c : letters_)
        if (c >= b_) throw std::invalid_argument("letter outside alphabet");
}

Word Word::from_digits(const std::string& s, unsigned alphabet_size) {
    std::vector<std::uint8_t> letters;
    letters.reserve(s.size());
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("word must be decimal digits");
        letters.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return Word(std::move(letters), alphabet_size);
}

Word Word::subword(std::size_t pos, std::size_t len) const {
    if (pos + len > letters_.size()) throw std::out_of_range("factor exceeds word");
    return Word(std::vector<std::uint8_t>(letters_.begin() + pos, letters_.begin() + pos + len),
                b_);
}

Word Word::repeated(std::size_t times) const {
    std::vector<std::uint8_t> out;
    out.reserve(letters_.size() * times);
    for (std::size_t i = 0; i < times; ++i)
        out.insert(out.end(), letters_.begin(), letters_.end());
    return Word(std::move(out), b_);
}

std::string Word::to_string() const {
    std::string s;
    s.reserve(letters_.size());
    for (std::uint8_t c : letters_) s.push_back(static_cast<char>('0' + c));
    return s;
}

Word operator+(const Word& a, const Word& b) {
    if (a.b_ != b.b_) throw std::invalid_argument("alphabet mismatch");
    std::vector<std::uint8_t> out;
    out.reserve(a.letters_.size() + b.letters_.size());
    out.insert(out.end(), a.letters_.begin(), a.letters_.end());
    out.insert(out.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(out), a.b_);
}

Morphism::Morphism(std::vector<Word> images) : images_(std::move(images)) {
    if (images_.empty()) throw std::invalid_argument("morphism needs at least one image");
    unsigned b = static_cast<unsigned>(images_.size());
    for (const Word& w : images_) {
        if (w.empty()) throw std::invalid_argument("morphism images must be nonempty");
        if (w.alphabet_size() != b)
            throw std::invalid_argument("morphism images must share the alphabet");
    }
}

const Word& Morphism::image(std::uint8_t letter) const {
    if (letter >= images_.size()) throw std::out_of_range("letter outside alphabet");
    return images_[letter];
}

bool Morphism::prolongable_on(std::uint8_t start) const {
    if (start >= images_.size()) return false;
    return images_[start][0] == start;
}

Word Morphism::apply(const Word& w, std::size_t truncate_to) const {
    if (w.alphabet_size() != alphabet_size())
        throw std::invalid_argument("alphabet mismatch");
    std::vector<std::uint8_t> out;
    for (std::uint8_t c : w.letters()) {
        const Word& img = images_[c];
        for (std::uint8_t d : img.letters()) {
            out.push_back(d);
            if (out.size() >= truncate_to) return Word(std::move(out), alphabet_size());
        }
    }
    return Word(std::move(out), alphabet_size());
}

Morphism fibonacci_morphism() {
    return Morphism({Word::from_digits("01"), Word::from_digits("0")});
}

Morphism thue_morse_morphism() {
    return Morphism({Word::from_digits("01"), Word::from_digits("10")});
}

Word morphic_prefix(const Morphism& m, std::uint8_t start, std::size_t len) {
    if (!m.prolongable_on(start))
        throw std::invalid_argument("morphism is not prolongable on the start letter");
    Word w({start}, m.alphabet_size());
    if (len == 0) return Word({}, m.alphabet_size());
    // During a stretch of non-growing iterations every present letter has
    // a single-letter image, and each position's letter chain enters its
    // cycle within alphabet_size steps; twice that with slack proves the
    // iteration can never grow again.
    std::size_t stalled = 0;
    const std::size_t stall_limit = 2 * m.alphabet_size() + 2;
    while (w.size() < len) {
        Word next = m.apply(w, len);
        if (next.size() == w.size()) {
            if (++stalled > stall_limit)
                throw std::invalid_argument("fixed point is shorter than the requested prefix");
        } else {
            stalled = 0;
        }
        w = std::move(next);
    }
    return w.subword(0, len);
}

Word kfib_word(unsigned k, unsigned n) {
    if (k < 1 || n < 1) throw std::invalid_argument("need k >= 1 and n >= 1");
    Word prev2 = Word::from_digits("0");  // f_{k,1}
    if (n == 1) return prev2;
    std::vector<std::uint8_t> seed(k - 1, 0);
    seed.push_back(1);
    Word prev1(std::move(seed), 2);  // f_{k,2}
    for (unsigned i = 3; i <= n; ++i) {
        Word cur = prev1.repeated(k) + prev2;
        prev2 = std::move(prev1);
        prev1 = std::move(cur);
    }
    return prev1;
}

Word kfib_prefix(unsigned k, std::size_t len) {
    if (k < 1) throw std::invalid_argument("need k >= 1");
    unsigned n = 1;
    Word w = kfib_word(k, 1);
    while (w.size() < len) w = kfib_word(k, ++n);
    return w.subword(0, len);
}

namespace {

// Smallest-window balance scan over prefix 1-counts; on imbalance fills
// positions of one heaviest and one lightest factor.
bool balance_scan(const std::vector<std::uint8_t>& w, std::size_t* window,
                  std::size_t* pos_high, std::size_t* pos_low) {
    const std::size_t n = w.size();
    std::vector<std::size_t> ones(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) ones[i + 1] = ones[i] + (w[i] == 1);
    for (std::size_t m = 1; m + 1 <= n; ++m) {
        std::size_t lo = m + 1, hi = 0, lo_at = 0, hi_at = 0;
        for (std::size_t j = 0; j + m <= n; ++j) {
            std::size_t c = ones[j + m] - ones[j];
            if (c < lo) { lo = c; lo_at = j; }
            if (c > hi) { hi = c; hi_at = j; }
        }
        if (hi >= lo + 2) {
            if (window) {
                *window = m;
                *pos_high = hi_at;
                *pos_low = lo_at;
            }
            return false;
        }
    }
    return true;
}

}  // namespace

BalanceReport is_balanced(const Word& w) {
    if (w.alphabet_size() != 2)
        throw std::invalid_argument("balance is defined for binary words");
    BalanceReport rep;
    rep.word = w;
    std::size_t window = 0, pos_high = 0, pos_low = 0;
    rep.balanced = balance_scan(w.letters(), &window, &pos_high, &pos_low);
    if (!rep.balanced) {
        BalanceWitness wit;
        wit.window = window;
        wit.pos_high = pos_high;
        wit.pos_low = pos_low;
        wit.factor_high = w.subword(pos_high, window);
        wit.factor_low = w.subword(pos_low, window);
        rep.witness = std::move(wit);
    }
    return rep;
}

std::uint64_t count_balanced_bruteforce(unsigned n) {
    if (n > 20) throw std::invalid_argument("brute force is capped at length 20");
    if (n == 0) return 1;  // the empty word
    std::uint64_t count = 0;
    std::vector<std::uint8_t> w(n);
    for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
        for (unsigned i = 0; i < n; ++i) w[i] = (bits >> i) & 1u;
        if (balance_scan(w, nullptr, nullptr, nullptr)) ++count;
    }
    return count;
}

std::uint64_t balanced_increment(std::uint64_t n) {
    std::uint64_t s = 0;
    for (std::uint64_t i = 1; i <= n + 1; ++i) s += totient(i);
    return s;
}

namespace {

std::uint64_t phi_of(std::uint64_t i) { return totient(i); }

// The four summation forms, evaluated independently.
std::uint64_t form_a(std::uint64_t n) {
    std::uint64_t s = 1;
    for (std::uint64_t k = 0; k + 1 <= n; ++k) s += balanced_increment(k);
    return s;
}

std::uint64_t form_b(std::uint64_t n) {
    std::uint64_t s = 1;
    for (std::uint64_t k = 0; k + 1 <= n; ++k)
        for (std::uint64_t i = 1; i <= k + 1; ++i) s += phi_of(i);
    return s;
}

std::uint64_t form_c(std::uint64_t n) {
    std::uint64_t s = 1;
    for (std::uint64_t k = 1; k <= n; ++k)
        for (std::uint64_t i = 1; i <= k; ++i) s += phi_of(i);
    return s;
}

std::uint64_t form_d(std::uint64_t n) {
    std::uint64_t s = 1;
    for (std::uint64_t i = 1; i <= n; ++i) s += (n + 1 - i) * phi_of(i);
    return s;
}

std::uint64_t forms_agree(std::uint64_t n) {
    std::uint64_t a = form_a(n), b = form_b(n), c = form_c(n), d = form_d(n);
    if (a != b || a != c || a != d)
        throw std::logic_error("balanced-count closed forms disagree");
    return a;
}

}  // namespace

std::uint64_t balanced_formula(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("count defined for length >= 1");
    std::uint64_t value = forms_agree(n);
    // One-step recurrence cross-check.
    if (forms_agree(n + 1) != value + balanced_increment(n))
        throw std::logic_error("balanced-count recurrence fails");
    return value;
}

}  // namespace fiblab

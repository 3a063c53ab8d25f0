#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fiblab {

/// Finite word over the alphabet {0, ..., alphabet_size-1}. The empty
/// word is valid.
class Word {
public:
    Word() : b_(2) {}
    Word(std::vector<std::uint8_t> letters, unsigned alphabet_size);

    /// Parses digit characters '0'..'9'; each must be < alphabet_size.
    static Word from_digits(const std::string& s, unsigned alphabet_size = 2);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    std::uint8_t operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<std::uint8_t>& letters() const { return letters_; }
    unsigned alphabet_size() const { return b_; }

    Word subword(std::size_t pos, std::size_t len) const;
    Word repeated(std::size_t times) const;
    std::string to_string() const;

    friend Word operator+(const Word& a, const Word& b);
    friend bool operator==(const Word& a, const Word& b) {
        return a.b_ == b.b_ && a.letters_ == b.letters_;
    }

private:
    std::vector<std::uint8_t> letters_;
    unsigned b_;
};

/// Substitution: letter i maps to images[i], all over the same alphabet.
class Morphism {
public:
    explicit Morphism(std::vector<Word> images);

    unsigned alphabet_size() const { return static_cast<unsigned>(images_.size()); }
    const Word& image(std::uint8_t letter) const;

    /// Fixed-point generation needs image(start) to begin with start.
    bool prolongable_on(std::uint8_t start) const;

    /// Applies the substitution letterwise, keeping at most `truncate_to`
    /// letters of the result.
    Word apply(const Word& w, std::size_t truncate_to = SIZE_MAX) const;

private:
    std::vector<Word> images_;
};

Morphism fibonacci_morphism();   // 0 -> 01, 1 -> 0
Morphism thue_morse_morphism();  // 0 -> 01, 1 -> 10

/// Length-len prefix of the fixed point of m at start. Throws if m is not
/// prolongable on start or the fixed point is too short to supply len
/// letters (the iteration stalls).
Word morphic_prefix(const Morphism& m, std::uint8_t start, std::size_t len);

/// k-Fibonacci word: f_{k,1} = "0", f_{k,2} = 0^{k-1} 1,
/// f_{k,n} = (f_{k,n-1})^k f_{k,n-2}. Lengths obey L_n = k L_{n-1} + L_{n-2}.
Word kfib_word(unsigned k, unsigned n);

/// Length-len prefix of the infinite k-Fibonacci word (each f_{k,n} is a
/// prefix of the next).
Word kfib_prefix(unsigned k, std::size_t len);

struct BalanceWitness {
    std::size_t window = 0;  // common length of the two factors
    std::size_t pos_high = 0;
    std::size_t pos_low = 0;
    Word factor_high;  // carries at least two more ones than factor_low
    Word factor_low;
};

struct BalanceReport {
    Word word;
    bool balanced = true;
    std::optional<BalanceWitness> witness;  // present iff not balanced
};

/// Balance test for binary words: every pair of equal-length factors has
/// 1-counts differing by at most 1. Scans per-window-length min/max of
/// sliding 1-counts; the first violating window yields the witness.
BalanceReport is_balanced(const Word& w);

/// Number of balanced binary words of length n among all 2^n. n <= 20.
std::uint64_t count_balanced_bruteforce(unsigned n);

/// Sum of Euler totients phi(1) + ... + phi(n+1): the count of balanced
/// words gained when the length grows from n to n+1.
std::uint64_t balanced_increment(std::uint64_t n);

/// Closed-form count of balanced binary words of length n >= 1. Evaluates
/// four equivalent summation forms plus the one-step recurrence and
/// throws std::logic_error if they ever disagree.
std::uint64_t balanced_formula(std::uint64_t n);

}  // namespace fiblab

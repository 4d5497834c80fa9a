#ifndef RLDG_ALPHABET_HPP
#define RLDG_ALPHABET_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "rldg/errors.hpp"

namespace rldg {

// Digits are plain integers drawn from a two-letter alphabet {p, q}.
using Digit = int;
using DigitSeq = std::vector<Digit>;
// Run lengths: positive integers. Same representation as digits so that the
// output of one decoding round can feed the next as its length sequence.
using LenSeq = std::vector<Digit>;

// A validated two-letter alphabet {p, q} of distinct positive integers with
// p + q odd. The odd-sum restriction is what makes the downstream group
// structure nontrivial (even/even never moves the automaton state, odd/odd
// flips every digit on every input); `unchecked` exists so that those
// degenerate pairs can still be exercised where they are mathematically
// meaningful (plain decoding, the automaton remark cases).
class Alphabet {
public:
    Alphabet(Digit p, Digit q) : p_(p), q_(q) {
        validate_basic(p, q);
        if ((p + q) % 2 == 0)
            throw std::invalid_argument(
                "alphabet {" + std::to_string(p) + "," + std::to_string(q) +
                "}: p + q must be odd (even-sum pairs degenerate: both even "
                "never changes the automaton state, both odd flips every "
                "digit on every input)");
    }

    // Skips the p + q parity check only. Intended for exploring the
    // degenerate even-sum automata; group-theoretic modules still require
    // an odd sum and will refuse.
    static Alphabet unchecked(Digit p, Digit q) {
        validate_basic(p, q);
        return Alphabet(p, q, unchecked_tag{});
    }

    Digit p() const { return p_; }
    Digit q() const { return q_; }
    int sum() const { return p_ + q_; }
    int diff() const { return p_ - q_; }
    bool odd_sum() const { return (p_ + q_) % 2 != 0; }

    bool contains(Digit d) const { return d == p_ || d == q_; }

    void check_digit(Digit d) const {
        if (!contains(d))
            throw InvalidDigit("digit " + std::to_string(d) +
                               " not in alphabet {" + std::to_string(p_) +
                               "," + std::to_string(q_) + "}");
    }

    // The other letter.
    Digit opp(Digit d) const {
        check_digit(d);
        return d == p_ ? q_ : p_;
    }

    // digit -> bit encoding used by every leaf/portrait index: p is 0, q is 1.
    int bit(Digit d) const {
        check_digit(d);
        return d == q_ ? 1 : 0;
    }

    Digit digit(int bit) const { return bit ? q_ : p_; }

    // The letter with odd value (exactly one when p + q is odd).
    Digit odd_letter() const { return (p_ % 2 != 0) ? p_ : q_; }

    bool operator==(const Alphabet& o) const { return p_ == o.p_ && q_ == o.q_; }

private:
    struct unchecked_tag {};
    Alphabet(Digit p, Digit q, unchecked_tag) : p_(p), q_(q) {}

    static void validate_basic(Digit p, Digit q) {
        if (p < 1 || q < 1)
            throw std::invalid_argument("alphabet letters must be positive");
        if (p == q)
            throw std::invalid_argument("alphabet letters must be distinct");
    }

    Digit p_;
    Digit q_;
};

}  // namespace rldg

#endif  // RLDG_ALPHABET_HPP

#ifndef RLDG_AUTOMATON_HPP
#define RLDG_AUTOMATON_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rldg/alphabet.hpp"
#include "rldg/perm.hpp"

namespace rldg {

// The permutation automaton on length-n digit strings: digit i of the image
// of x under input s is OppEnd of the i-fold decoding of (x_1..x_i, s).
//
// States are encoded as leaf indices with the first digit as the most
// significant bit and p -> 0, q -> 1, so the state space is the leaf row of
// a binary tree whose root decides the first digit.

struct State {
    DigitSeq digits;
};

uint32_t encode_state(const Alphabet& a, const DigitSeq& digits);
DigitSeq decode_state(const Alphabet& a, int n, uint32_t leaf_index);

// One transition on a single input symbol s in {p, q}. Runs the decode
// cascade level by level, keeping only what the next level needs; cost is
// proportional to the total decoded length, not to 2^n.
DigitSeq step(const Alphabet& a, const DigitSeq& x, Digit s);

// Left fold of step over a word; the empty word returns x unchanged.
DigitSeq step_word(const Alphabet& a, const DigitSeq& x, const DigitSeq& word);

// Inverse transition: step(inverse_step(y, s), s) == y.
DigitSeq inverse_step(const Alphabet& a, const DigitSeq& y, Digit s);

struct TransitionTable {
    Alphabet alphabet;
    int n;
    Perm on_p;  // image of each leaf index under input p
    Perm on_q;

    const Perm& on(Digit s) const {
        return s == alphabet.p() ? on_p : (alphabet.check_digit(s), on_q);
    }
};

inline constexpr int kTableDepthCap = 20;

// Full transition table for all 2^n states. Built level by level from the
// depth-(n-1) table: the image of (x1, rest) under s prepends the flipped
// first digit and applies the depth-(n-1) symbol-x1 map s times to rest.
// This is the same recursion step() runs, tabulated, and costs
// O((p+q) 2^n) instead of one cascade per state.
TransitionTable build_table(const Alphabet& a, int n, int cap = kTableDepthCap);

Perm symbol_permutation(const Alphabet& a, int n, Digit s, int cap = kTableDepthCap);

// Graphviz rendering: one node per state labelled by its digit string, one
// edge per (state, symbol). Node order and edge order follow leaf_index, so
// output is byte-identical across runs.
std::string to_dot(const TransitionTable& t);

}  // namespace rldg

#endif  // RLDG_AUTOMATON_HPP

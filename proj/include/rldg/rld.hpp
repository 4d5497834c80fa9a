#ifndef RLDG_RLD_HPP
#define RLDG_RLD_HPP

#include <utility>
#include <vector>

#include "rldg/alphabet.hpp"

namespace rldg {

// Single and iterated run-length decoding over {p, q}.
//
// rld(a, x, s) expands the run lengths s into a sequence over {p, q} whose
// runs alternate starting at x. rld_n iterates: level 1 decodes the input
// lengths starting at starts[0], level i decodes level i-1 starting at
// starts[i-1]. All outputs are materialized eagerly; lengths grow roughly
// like (p+q)^n, which stays desk-sized for the depths this library targets.
//
// Every function here is pure; values are immutable after construction.

Digit opp(const Alphabet& a, Digit d);

// Opp of the last element. Throws EmptySequence on an empty sequence.
Digit opp_end(const Alphabet& a, const DigitSeq& s);

DigitSeq rld(const Alphabet& a, Digit start, const LenSeq& lengths);

// n-fold iterated decoding, n = starts.size() >= 1.
DigitSeq rld_n(const Alphabet& a, const DigitSeq& starts, const LenSeq& lengths);

// All intermediate levels; back() equals rld_n on the same input.
std::vector<DigitSeq> rld_levels(const Alphabet& a, const DigitSeq& starts,
                                 const LenSeq& lengths);

// Block decomposition of an iterated decoding: one (state, block) pair per
// input symbol, where the state is the start vector in force when that
// symbol is consumed and the block is its n-fold decoding. Concatenating
// the blocks reproduces rld_n(starts, lengths). Input symbols must lie in
// the alphabet, since the states advance through the automaton.
struct StateBlock {
    DigitSeq state;
    DigitSeq block;
};
std::vector<StateBlock> emit_blocks(const Alphabet& a, const DigitSeq& starts,
                                    const LenSeq& lengths);

}  // namespace rldg

#endif  // RLDG_RLD_HPP

#ifndef RLDG_ORBITS_HPP
#define RLDG_ORBITS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "rldg/alphabet.hpp"
#include "rldg/automaton.hpp"
#include "rldg/tree_aut.hpp"

namespace rldg {

// Cycle structure of the automaton action of a fixed input word on all 2^n
// states, and the maximal-orbit laws: cycle lengths are powers of two,
// bounded by 2^{ceil(n/2)}, and for odd n the number of maximal-length
// cycles is exactly two when both |s| and the letter sum of s are odd,
// otherwise zero.

struct OrbitReport {
    DigitSeq word;
    int n = 0;
    std::map<uint64_t, uint64_t> cycle_type;  // length -> multiplicity
    uint64_t max_len = 0;                     // 2^{ceil(n/2)}
    uint64_t max_count = 0;                   // cycles of that maximal length
    bool predicate = false;                   // |s| odd and sum(s) odd
    bool powers_of_two = true;                // every cycle length a power of 2
    bool within_bound = true;                 // every cycle length <= max_len
};

bool theorem3_predicate(const DigitSeq& word);

OrbitReport cycle_structure(const Alphabet& a, int n, const DigitSeq& word,
                            int cap = kTableDepthCap);

struct Theorem3Report {
    int n = 0;
    int max_word_len = 0;
    uint64_t words_checked = 0;
    std::vector<DigitSeq> counterexamples;  // reported verbatim
    bool ok() const { return counterexamples.empty(); }
};

// Exhaustive sweep over all nonempty words of length <= max_word_len.
// A word is a counterexample if any cycle length is not a power of two,
// exceeds the bound, or the maximal-cycle count disagrees with the
// predicate (anything other than 2-iff-predicate / 0-iff-not).
// Odd n only; the even case is unproven and available descriptively via
// cycle_structure.
Theorem3Report verify_theorem3(const Alphabet& a, int n, int max_word_len,
                               uint64_t work_budget = uint64_t(1) << 40);

// Group-level form of the maximal-orbit criterion: psi(g) odd and root flip
// set. Requires membership and odd n.
bool group_level_criterion(const Alphabet& a, const TreeAut& g);

struct SquareSplitReport {
    bool flips_vanish = false;  // (g^2)_f = (g^2)_Lf = (g^2)_Rf = 0
    bool cycles_match = false;  // the g <-> g^2-restriction correspondence
    std::map<uint64_t, uint64_t> g_cycles;
    std::map<uint64_t, uint64_t> restriction_cycles;  // four quadrants combined
    bool ok() const { return flips_vanish && cycles_match; }
};

// Squares split: g^2 restricts to the four depth-(n-2) corners, and m
// cycles of length 2^v (v > 0) in g become 2m cycles of length 2^{v-1}
// there, while fixed points stay fixed.
SquareSplitReport square_split_check(const Alphabet& a, const TreeAut& g);

}  // namespace rldg

#endif  // RLDG_ORBITS_HPP

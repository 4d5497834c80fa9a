#include "rldg/rld.hpp"

#include <stdexcept>

#include "rldg/automaton.hpp"

namespace rldg {

Digit opp(const Alphabet& a, Digit d) { return a.opp(d); }

Digit opp_end(const Alphabet& a, const DigitSeq& s) {
    if (s.empty()) throw EmptySequence("OppEnd of an empty sequence");
    return a.opp(s.back());
}

DigitSeq rld(const Alphabet& a, Digit start, const LenSeq& lengths) {
    a.check_digit(start);
    size_t total = 0;
    for (Digit len : lengths) {
        if (len < 1)
            throw InvalidDigit("run lengths must be positive, got " +
                               std::to_string(len));
        total += size_t(len);
    }
    DigitSeq out;
    out.reserve(total);
    Digit cur = start;
    for (Digit len : lengths) {
        out.insert(out.end(), size_t(len), cur);
        cur = a.opp(cur);
    }
    return out;
}

DigitSeq rld_n(const Alphabet& a, const DigitSeq& starts, const LenSeq& lengths) {
    if (starts.empty()) throw EmptySequence("rld_n needs at least one start digit");
    DigitSeq cur = rld(a, starts[0], lengths);
    for (size_t i = 1; i < starts.size(); ++i) cur = rld(a, starts[i], cur);
    return cur;
}

std::vector<DigitSeq> rld_levels(const Alphabet& a, const DigitSeq& starts,
                                 const LenSeq& lengths) {
    if (starts.empty()) throw EmptySequence("rld_levels needs at least one start digit");
    std::vector<DigitSeq> levels;
    levels.reserve(starts.size());
    levels.push_back(rld(a, starts[0], lengths));
    for (size_t i = 1; i < starts.size(); ++i)
        levels.push_back(rld(a, starts[i], levels.back()));
    return levels;
}

std::vector<StateBlock> emit_blocks(const Alphabet& a, const DigitSeq& starts,
                                    const LenSeq& lengths) {
    if (starts.empty()) throw EmptySequence("emit_blocks needs at least one start digit");
    std::vector<StateBlock> blocks;
    blocks.reserve(lengths.size());
    DigitSeq state = starts;
    for (Digit s : lengths) {
        a.check_digit(s);  // the automaton only steps on alphabet symbols
        blocks.push_back({state, rld_n(a, state, LenSeq{s})});
        state = step(a, state, s);
    }
    return blocks;
}

}  // namespace rldg

#include "rldg/automaton.hpp"

#include <sstream>

#include "rldg/rld.hpp"

namespace rldg {

uint32_t encode_state(const Alphabet& a, const DigitSeq& digits) {
    uint32_t idx = 0;
    for (Digit d : digits) idx = (idx << 1) | uint32_t(a.bit(d));
    return idx;
}

DigitSeq decode_state(const Alphabet& a, int n, uint32_t leaf_index) {
    DigitSeq digits(size_t(n), 0);
    for (int i = 0; i < n; ++i)
        digits[size_t(i)] = a.digit(int((leaf_index >> (n - 1 - i)) & 1));
    return digits;
}

DigitSeq step(const Alphabet& a, const DigitSeq& x, Digit s) {
    a.check_digit(s);
    DigitSeq out;
    out.reserve(x.size());
    // Level by level: digit i flips iff the word feeding level i has odd
    // length; the word feeding level i+1 is the decode of that word at x_i.
    DigitSeq word{s};
    for (size_t i = 0; i < x.size(); ++i) {
        a.check_digit(x[i]);
        out.push_back(word.size() % 2 ? a.opp(x[i]) : x[i]);
        if (i + 1 < x.size()) word = rld(a, x[i], word);
    }
    return out;
}

DigitSeq step_word(const Alphabet& a, const DigitSeq& x, const DigitSeq& word) {
    DigitSeq cur = x;
    for (Digit s : word) cur = step(a, cur, s);
    return cur;
}

DigitSeq inverse_step(const Alphabet& a, const DigitSeq& y, Digit s) {
    a.check_digit(s);
    if (y.empty()) return y;
    for (Digit d : y) a.check_digit(d);
    // A single symbol flips the first digit, then acts on the tail as the
    // symbol x1 = opp(y1) applied s times one level down; invert by undoing
    // those s single-symbol steps (the repeated letter commutes with its
    // own reversal).
    DigitSeq out;
    out.reserve(y.size());
    Digit x1 = a.opp(y[0]);
    out.push_back(x1);
    DigitSeq tail(y.begin() + 1, y.end());
    for (Digit i = 0; i < s; ++i) tail = inverse_step(a, tail, x1);
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

TransitionTable build_table(const Alphabet& a, int n, int cap) {
    if (n < 1) throw CapExceeded("table depth must be >= 1");
    if (n > cap)
        throw CapExceeded("table depth " + std::to_string(n) + " exceeds cap " +
                          std::to_string(cap));
    // Depth 1: both symbols flip the single digit.
    Perm on_p(std::vector<uint32_t>{1, 0});
    Perm on_q = on_p;
    for (int k = 2; k <= n; ++k) {
        const uint32_t half = uint32_t(1) << (k - 1);
        // s-th powers of the depth-(k-1) maps: the tail of a state whose
        // first digit is p advances by the symbol-p map s times, likewise q.
        Perm pow_pp = power(on_p, uint64_t(a.p()));
        Perm pow_qp = power(on_q, uint64_t(a.p()));
        Perm pow_pq = power(on_p, uint64_t(a.q()));
        Perm pow_qq = power(on_q, uint64_t(a.q()));
        Perm next_p, next_q;
        next_p.img.resize(size_t(half) * 2);
        next_q.img.resize(size_t(half) * 2);
        for (uint32_t r = 0; r < half; ++r) {
            // First digit p (bit 0) flips to q, and vice versa.
            next_p.img[r] = half + pow_pp.img[r];
            next_p.img[half + r] = pow_qp.img[r];
            next_q.img[r] = half + pow_pq.img[r];
            next_q.img[half + r] = pow_qq.img[r];
        }
        on_p = std::move(next_p);
        on_q = std::move(next_q);
    }
    return TransitionTable{a, n, std::move(on_p), std::move(on_q)};
}

Perm symbol_permutation(const Alphabet& a, int n, Digit s, int cap) {
    a.check_digit(s);
    TransitionTable t = build_table(a, n, cap);
    return s == a.p() ? std::move(t.on_p) : std::move(t.on_q);
}

namespace {

std::string state_label(const Alphabet& a, int n, uint32_t leaf) {
    DigitSeq digits = decode_state(a, n, leaf);
    // Single-character letters concatenate; bigger letters need a separator
    // to keep labels unambiguous.
    const bool sep = a.p() > 9 || a.q() > 9;
    std::string s;
    for (size_t i = 0; i < digits.size(); ++i) {
        if (sep && i) s += '-';
        s += std::to_string(digits[i]);
    }
    return s;
}

}  // namespace

std::string to_dot(const TransitionTable& t) {
    std::ostringstream os;
    const uint32_t count = uint32_t(1) << t.n;
    os << "digraph automaton {\n";
    os << "  rankdir=LR;\n";
    for (uint32_t i = 0; i < count; ++i)
        os << "  \"" << state_label(t.alphabet, t.n, i) << "\";\n";
    for (uint32_t i = 0; i < count; ++i) {
        os << "  \"" << state_label(t.alphabet, t.n, i) << "\" -> \""
           << state_label(t.alphabet, t.n, t.on_p.img[i]) << "\" [label=\""
           << t.alphabet.p() << "\"];\n";
        os << "  \"" << state_label(t.alphabet, t.n, i) << "\" -> \""
           << state_label(t.alphabet, t.n, t.on_q.img[i]) << "\" [label=\""
           << t.alphabet.q() << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace rldg

#include "rldg/orbits.hpp"

#include <stdexcept>

#include "rldg/jn.hpp"

namespace rldg {

bool theorem3_predicate(const DigitSeq& word) {
    int64_t sum = 0;
    for (Digit d : word) sum += d;
    return word.size() % 2 == 1 && sum % 2 == 1;
}

namespace {

bool is_pow2(uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

OrbitReport report_from_perm(const Alphabet&, int n, const DigitSeq& word,
                             const Perm& action) {
    OrbitReport r;
    r.word = word;
    r.n = n;
    r.cycle_type = cycle_type(action);
    r.max_len = uint64_t(1) << ((n + 1) / 2);
    auto it = r.cycle_type.find(r.max_len);
    r.max_count = it == r.cycle_type.end() ? 0 : it->second;
    r.predicate = theorem3_predicate(word);
    for (const auto& [len, count] : r.cycle_type) {
        (void)count;
        if (!is_pow2(len)) r.powers_of_two = false;
        if (len > r.max_len) r.within_bound = false;
    }
    return r;
}

Perm word_action(const TransitionTable& t, const DigitSeq& word) {
    Perm acc(size_t(1) << t.n);
    for (Digit s : word) acc = compose(acc, t.on(s));
    return acc;
}

}  // namespace

OrbitReport cycle_structure(const Alphabet& a, int n, const DigitSeq& word,
                            int cap) {
    if (word.empty()) throw EmptyWord("cycle structure needs a nonempty word");
    for (Digit d : word) a.check_digit(d);
    TransitionTable t = build_table(a, n, cap);
    return report_from_perm(a, n, word, word_action(t, word));
}

Theorem3Report verify_theorem3(const Alphabet& a, int n, int max_word_len,
                               uint64_t work_budget) {
    if (n % 2 == 0) throw EvenN("the maximal-orbit law is stated for odd n only");
    if (n < 3) throw CapExceeded("odd n >= 3 required");
    if (max_word_len < 1) throw CapExceeded("max word length must be >= 1");
    if (max_word_len > 62) throw BudgetExceeded("word length out of range");
    const uint64_t cost = (uint64_t(1) << (max_word_len + 1)) * (uint64_t(1) << n);
    if (cost > work_budget)
        throw BudgetExceeded("sweep cost " + std::to_string(cost) +
                             " exceeds work budget " + std::to_string(work_budget));
    TransitionTable t = build_table(a, n);
    Theorem3Report report;
    report.n = n;
    report.max_word_len = max_word_len;
    for (int len = 1; len <= max_word_len; ++len) {
        for (uint64_t mask = 0; mask < (uint64_t(1) << len); ++mask) {
            DigitSeq word(size_t(len), 0);
            for (int i = 0; i < len; ++i)
                word[size_t(i)] = ((mask >> i) & 1) ? a.q() : a.p();
            OrbitReport r = report_from_perm(a, n, word, word_action(t, word));
            ++report.words_checked;
            const uint64_t expect = r.predicate ? 2 : 0;
            if (!r.powers_of_two || !r.within_bound || r.max_count != expect)
                report.counterexamples.push_back(word);
        }
    }
    return report;
}

bool group_level_criterion(const Alphabet& a, const TreeAut& g) {
    if (g.depth() % 2 == 0)
        throw EvenN("the group-level criterion is stated for odd n only");
    JnEngine engine(a);
    if (!engine.is_member(g)) throw NotAMember("criterion defined on J_n only");
    const Residue p = engine.psi(g);
    return p.value % 2 == 1 && g.root_flip() == 1;
}

SquareSplitReport square_split_check(const Alphabet& a, const TreeAut& g) {
    if (g.depth() < 3)
        throw std::invalid_argument("square splitting needs depth >= 3");
    if (!is_member(a, g)) throw NotAMember("square splitting is stated on J_n");
    SquareSplitReport r;
    const TreeAut g2 = mul(g, g);
    r.flips_vanish =
        g2.root_flip() == 0 && g2.bit(1, 0) == 0 && g2.bit(1, 1) == 0;
    r.g_cycles = cycle_type(to_permutation(g));
    if (!r.flips_vanish) return r;
    for (int b0 = 0; b0 <= 1; ++b0)
        for (int b1 = 0; b1 <= 1; ++b1)
            for (const auto& [len, count] :
                 cycle_type(to_permutation(g2.restrict({b0, b1}))))
                r.restriction_cycles[len] += count;
    // m cycles of length 2^v (v > 0) halve into 2m of length 2^(v-1);
    // fixed points stay fixed.
    std::map<uint64_t, uint64_t> expected;
    for (const auto& [len, count] : r.g_cycles) {
        if (!is_pow2(len)) return r;  // cycles_match stays false
        if (len == 1)
            expected[1] += count;
        else if (len == 2)
            expected[1] += 2 * count;
        else
            expected[len / 2] += 2 * count;
    }
    r.cycles_match = expected == r.restriction_cycles;
    return r;
}

}  // namespace rldg

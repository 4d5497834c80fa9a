#ifndef RLDG_BSGS_HPP
#define RLDG_BSGS_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "rldg/alphabet.hpp"
#include "rldg/perm.hpp"

namespace rldg {

// Deterministic Schreier-Sims over a small domain (2^n points, n <= 14).
//
// Base points are chosen in natural domain order (smallest moved point at
// each new level), transversals are Schreier vectors, and Schreier
// generators are filtered explicitly: tree edges are skipped, every other
// (point, generator) pair is sifted exactly once. At the top level only the
// original generators are processed, which is enough because they generate
// the whole group. The construction is fully deterministic given the
// generator order, so serialized chains are byte-identical across runs.

struct BsgsLevel {
    uint32_t base_point = 0;
    std::vector<int> gen_ids;       // strong generators with home >= this level
    std::vector<int32_t> sv_gen;    // Schreier vector: gen id that discovered the point
    std::vector<int32_t> sv_prev;   // predecessor point (-1 off-orbit, -2 base)
    std::vector<uint32_t> orbit;    // points in discovery order
};

class Bsgs {
public:
    // Builds the chain. All generators must share one degree.
    explicit Bsgs(const std::vector<Perm>& gens);

    size_t degree() const { return degree_; }
    const std::vector<BsgsLevel>& levels() const { return levels_; }
    const std::vector<Perm>& strong_gens() const { return pool_; }

    std::vector<uint32_t> base() const;
    std::vector<uint64_t> orbit_sizes() const;

    // Residue of g after dividing off transversal representatives level by
    // level; the identity residue certifies membership.
    Perm sift(const Perm& g) const;
    bool contains(const Perm& g) const { return sift(g).is_identity(); }

    // Canonical text form (base, orbit sizes, Schreier vectors) for the
    // determinism regression test.
    std::string serialize() const;

private:
    void add_generator(const Perm& g, int home);
    void extend_orbit(size_t level, const std::vector<int>& new_gen_ids);
    void process_pending();
    // Divide g by the representative taking base[level] to x, in place.
    void divide_by_rep(Perm& g, size_t level, uint32_t x) const;
    std::pair<size_t, Perm> strip(Perm g, size_t from_level) const;
    // Transversal representatives reconstructed from the Schreier vector.
    // Results are cached per (level, point) until the byte budget runs out;
    // past it, callers fall back to walking the vector.
    const Perm* cached_fwd_rep(size_t level, uint32_t x) const;
    const Perm* cached_inv_rep(size_t level, uint32_t x) const;
    Perm walk_fwd_rep(size_t level, uint32_t x) const;

    size_t degree_ = 0;
    std::vector<Perm> pool_;      // originals first, then added residues
    std::vector<Perm> pool_inv_;
    size_t n_original_ = 0;
    std::vector<BsgsLevel> levels_;
    // Per level: processed-prefix counters, one per gen id in gen_ids order
    // (pairs (orbit[i], gen) with i < counter are done).
    std::vector<std::vector<size_t>> done_upto_;
    mutable std::vector<std::unordered_map<uint32_t, Perm>> fwd_rep_cache_;
    mutable std::vector<std::unordered_map<uint32_t, Perm>> inv_rep_cache_;
    mutable size_t cache_bytes_ = 0;
    static constexpr size_t kCacheByteCap = size_t(1) << 30;
};

struct OrderExponent {
    int64_t exp = 0;
    bool exact = true;  // every chain orbit size was a power of two
    std::vector<uint64_t> orbit_sizes;
};

// Order as a power-of-two exponent. A non-power-of-two orbit is reported
// with exact = false and exp = ceil(log2 order), never thrown: it would
// contradict the expected 2-group structure and must surface loudly.
OrderExponent order_exponent(const Bsgs& b);

inline constexpr int kKnDepthCap = 14;

// Order of the transformation group generated by the two symbol
// permutations of the depth-n automaton.
OrderExponent kn_order_exponent(const Alphabet& a, int n, int cap = kKnDepthCap);

struct ConjectureRow {
    int n = 0;
    int64_t k_exponent = 0;
    int64_t j_formula_exponent = 0;
    bool exact = true;
    bool equal = false;
    bool containment_checked = false;  // enumeration + sift, n <= 6
    bool containment_ok = false;
    bool generators_in_jn = false;
};

struct ConjectureReport {
    Alphabet alphabet;
    std::vector<ConjectureRow> rows;
    bool all_equal = true;
};

// Per-n comparison of the computed group order against the closed-form
// exponent, with full containment evidence (J_n enumeration sifted through
// the chain, generators checked for membership) at n <= 6.
ConjectureReport verify_conjecture(const Alphabet& a, int n_max, int cap = kKnDepthCap);

}  // namespace rldg

#endif  // RLDG_BSGS_HPP

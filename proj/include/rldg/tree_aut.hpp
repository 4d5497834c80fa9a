#ifndef RLDG_TREE_AUT_HPP
#define RLDG_TREE_AUT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rldg/perm.hpp"

namespace rldg {

// An automorphism of the depth-(n+1) binary tree, stored as a portrait of
// 2^n - 1 flip bits, one per internal node, in breadth-first heap order
// (node 1 is the root, node i has children 2i and 2i+1). The identity is
// the all-zero portrait.
//
// Wreath decomposition g = (g_f, g_L, g_R): g_f is the root bit, g_L / g_R
// are the sub-portraits below it, viewed by index arithmetic.
//
// Conventions, pinned by the generator-correspondence tests against the
// automaton tables:
//   * Leaf action descends by the ORIGINAL path bit: g sends (b, w) to
//     (b xor g_f, g_b(w)) where g_0 = g_L, g_1 = g_R.
//   * Multiplication is left-to-right: (g h) applies g first, then h, so
//     to_permutation(mul(g, h)) == compose(to_permutation(g),
//     to_permutation(h)). Under this reading the wreath rule is
//     (f, A, B)(g, C, D) = (f+g, AC, BD) for f = 0 and (f+g, AD, BC)
//     for f = 1, with subtree juxtaposition also left-to-right.
class TreeAut {
public:
    // Identity automorphism of depth parameter n (n >= 1).
    explicit TreeAut(int n);

    static TreeAut identity(int n) { return TreeAut(n); }

    // Assemble (f, left, right); children must share the same depth.
    static TreeAut from_children(int f, const TreeAut& left, const TreeAut& right);

    int depth() const { return n_; }
    size_t node_count() const { return bits_.size(); }

    // Flip bit of internal node (level, pos): level 0 is the root, pos runs
    // over the 2^level nodes of that level left to right.
    int bit(int level, uint32_t pos) const { return bits_[idx(level, pos)]; }
    void set_bit(int level, uint32_t pos, int v) { bits_[idx(level, pos)] = uint8_t(v & 1); }

    int root_flip() const { return bits_[0]; }

    // Sub-automorphism below the root (copies 2^(n-1) - 1 bits).
    TreeAut left() const { return subtree(1, 0); }
    TreeAut right() const { return subtree(1, 1); }

    // Sub-automorphism at the node reached by `path` (0 = left, 1 = right).
    // Only defined when every traversed node has flip bit 0; a set bit on
    // the path raises SwappedPrefix rather than silently conjugating.
    TreeAut restrict(const std::vector<int>& path) const;

    bool is_identity() const;
    bool operator==(const TreeAut& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator!=(const TreeAut& o) const { return !(*this == o); }

    // Key for hashing/memoization: packed bits prefixed by the depth.
    std::string key() const;

    // Serialization: "<n>:<hex>", bits breadth-first, LSB-first within each
    // byte, padded to whole bytes.
    std::string to_hex() const;
    static TreeAut from_hex(const std::string& text);

    uint32_t leaf_count() const { return uint32_t(1) << n_; }

    friend TreeAut mul(const TreeAut& g, const TreeAut& h);
    friend TreeAut inverse(const TreeAut& g);
    friend uint32_t act_on_leaf(const TreeAut& g, uint32_t leaf);

private:
    TreeAut subtree(int level, uint32_t pos) const;
    size_t idx(int level, uint32_t pos) const {
        return (size_t(1) << level) - 1 + pos;
    }

    int n_;
    std::vector<uint8_t> bits_;  // one byte per internal node, values 0/1
};

// g then h. Throws DepthMismatch on unequal depths.
TreeAut mul(const TreeAut& g, const TreeAut& h);

TreeAut inverse(const TreeAut& g);

TreeAut tree_power(const TreeAut& g, uint64_t e);

// Image of a leaf index (bits read root-first, MSB = root decision).
uint32_t act_on_leaf(const TreeAut& g, uint32_t leaf);

Perm to_permutation(const TreeAut& g);

}  // namespace rldg

#endif  // RLDG_TREE_AUT_HPP

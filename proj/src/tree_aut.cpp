#include "rldg/tree_aut.hpp"

#include <stdexcept>

namespace rldg {

namespace {

void check_depth(int n) {
    if (n < 1 || n > 30)
        throw std::invalid_argument("tree depth parameter out of range: " +
                                    std::to_string(n));
}

int hex_val(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

constexpr char kHexDigits[] = "0123456789abcdef";

}  // namespace

TreeAut::TreeAut(int n) : n_(n) {
    check_depth(n);
    bits_.assign((size_t(1) << n) - 1, 0);
}

TreeAut TreeAut::from_children(int f, const TreeAut& left, const TreeAut& right) {
    if (left.n_ != right.n_)
        throw DepthMismatch("children depths differ: " + std::to_string(left.n_) +
                            " vs " + std::to_string(right.n_));
    TreeAut g(left.n_ + 1);
    g.bits_[0] = uint8_t(f & 1);
    // Level l of a child is the matching half of level l+1 of the parent.
    for (int l = 0; l < left.n_; ++l) {
        const size_t w = size_t(1) << l;
        for (size_t p = 0; p < w; ++p) {
            g.bits_[g.idx(l + 1, uint32_t(p))] = left.bits_[left.idx(l, uint32_t(p))];
            g.bits_[g.idx(l + 1, uint32_t(w + p))] = right.bits_[right.idx(l, uint32_t(p))];
        }
    }
    return g;
}

TreeAut TreeAut::subtree(int level, uint32_t pos) const {
    TreeAut s(n_ - level);
    for (int l = 0; l < s.n_; ++l) {
        const size_t w = size_t(1) << l;
        for (size_t p = 0; p < w; ++p)
            s.bits_[s.idx(l, uint32_t(p))] =
                bits_[idx(level + l, uint32_t((size_t(pos) << l) + p))];
    }
    return s;
}

TreeAut TreeAut::restrict(const std::vector<int>& path) const {
    if (int(path.size()) > n_ - 1)
        throw LeafOutOfRange("restriction path longer than n - 1");
    int level = 0;
    uint32_t pos = 0;
    for (int dir : path) {
        if (bits_[idx(level, pos)])
            throw SwappedPrefix("restriction path crosses a swapped node at level " +
                                std::to_string(level));
        pos = pos * 2 + uint32_t(dir & 1);
        ++level;
    }
    return subtree(level, pos);
}

bool TreeAut::is_identity() const {
    for (uint8_t b : bits_)
        if (b) return false;
    return true;
}

std::string TreeAut::key() const {
    std::string k;
    k.reserve(bits_.size() / 8 + 2);
    k.push_back(char(n_));
    uint8_t acc = 0;
    int fill = 0;
    for (uint8_t b : bits_) {
        acc |= uint8_t(b << fill);
        if (++fill == 8) {
            k.push_back(char(acc));
            acc = 0;
            fill = 0;
        }
    }
    if (fill) k.push_back(char(acc));
    return k;
}

std::string TreeAut::to_hex() const {
    const size_t nbytes = (bits_.size() + 7) / 8;
    std::string out = std::to_string(n_) + ":";
    for (size_t byte = 0; byte < nbytes; ++byte) {
        uint8_t acc = 0;
        for (size_t bit = 0; bit < 8; ++bit) {
            const size_t i = byte * 8 + bit;
            if (i < bits_.size() && bits_[i]) acc |= uint8_t(1u << bit);
        }
        out += kHexDigits[acc >> 4];
        out += kHexDigits[acc & 0xf];
    }
    return out;
}

TreeAut TreeAut::from_hex(const std::string& text) {
    const size_t colon = text.find(':');
    if (colon == std::string::npos || colon == 0)
        throw InvalidDigit("portrait must look like <n>:<hex>");
    int n = 0;
    for (size_t i = 0; i < colon; ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw InvalidDigit("portrait depth prefix is not a number");
        n = n * 10 + (text[i] - '0');
        if (n > 30) throw InvalidDigit("portrait depth prefix too large");
    }
    if (n < 1) throw InvalidDigit("portrait depth must be >= 1");
    TreeAut g(n);
    const size_t nbits = g.bits_.size();
    const size_t nbytes = (nbits + 7) / 8;
    if (text.size() - colon - 1 != nbytes * 2)
        throw InvalidDigit("portrait hex length must be " +
                           std::to_string(nbytes * 2) + " for depth " +
                           std::to_string(n));
    for (size_t byte = 0; byte < nbytes; ++byte) {
        const int hi = hex_val(text[colon + 1 + byte * 2]);
        const int lo = hex_val(text[colon + 2 + byte * 2]);
        if (hi < 0 || lo < 0) throw InvalidDigit("portrait contains a non-hex character");
        const uint8_t acc = uint8_t(hi << 4 | lo);
        for (size_t bit = 0; bit < 8; ++bit) {
            const size_t i = byte * 8 + bit;
            const int v = (acc >> bit) & 1;
            if (i < nbits)
                g.bits_[i] = uint8_t(v);
            else if (v)
                throw InvalidDigit("portrait has nonzero padding bits");
        }
    }
    return g;
}

namespace {

// out := g then h on the subtrees rooted at (level, pg) / (level, ph),
// written at (level, po). depth counts remaining levels including this one.
void mul_rec(const TreeAut& g, const TreeAut& h, TreeAut& out, int depth,
             int level, uint32_t pg, uint32_t ph, uint32_t po) {
    const int fg = g.bit(level, pg);
    const int fh = h.bit(level, ph);
    out.set_bit(level, po, fg ^ fh);
    if (depth == 1) return;
    if (fg == 0) {
        mul_rec(g, h, out, depth - 1, level + 1, pg * 2, ph * 2, po * 2);
        mul_rec(g, h, out, depth - 1, level + 1, pg * 2 + 1, ph * 2 + 1, po * 2 + 1);
    } else {
        // g routes the left input into h's right subtree and vice versa.
        mul_rec(g, h, out, depth - 1, level + 1, pg * 2, ph * 2 + 1, po * 2);
        mul_rec(g, h, out, depth - 1, level + 1, pg * 2 + 1, ph * 2, po * 2 + 1);
    }
}

void inv_rec(const TreeAut& g, TreeAut& out, int depth, int level, uint32_t pg,
             uint32_t po) {
    const int f = g.bit(level, pg);
    out.set_bit(level, po, f);
    if (depth == 1) return;
    if (f == 0) {
        inv_rec(g, out, depth - 1, level + 1, pg * 2, po * 2);
        inv_rec(g, out, depth - 1, level + 1, pg * 2 + 1, po * 2 + 1);
    } else {
        // (1, A, B)^-1 = (1, B^-1, A^-1).
        inv_rec(g, out, depth - 1, level + 1, pg * 2 + 1, po * 2);
        inv_rec(g, out, depth - 1, level + 1, pg * 2, po * 2 + 1);
    }
}

}  // namespace

TreeAut mul(const TreeAut& g, const TreeAut& h) {
    if (g.n_ != h.n_)
        throw DepthMismatch("automorphism depths differ: " + std::to_string(g.n_) +
                            " vs " + std::to_string(h.n_));
    TreeAut out(g.n_);
    mul_rec(g, h, out, g.n_, 0, 0, 0, 0);
    return out;
}

TreeAut inverse(const TreeAut& g) {
    TreeAut out(g.n_);
    inv_rec(g, out, g.n_, 0, 0, 0);
    return out;
}

TreeAut tree_power(const TreeAut& g, uint64_t e) {
    TreeAut acc = TreeAut::identity(g.depth());
    TreeAut sq = g;
    while (e) {
        if (e & 1) acc = mul(acc, sq);
        e >>= 1;
        if (e) sq = mul(sq, sq);
    }
    return acc;
}

uint32_t act_on_leaf(const TreeAut& g, uint32_t leaf) {
    if (leaf >= g.leaf_count())
        throw LeafOutOfRange("leaf index " + std::to_string(leaf) +
                             " out of range for depth " + std::to_string(g.n_));
    uint32_t out = 0;
    uint32_t pos = 0;
    for (int level = 0; level < g.n_; ++level) {
        const uint32_t b = (leaf >> (g.n_ - 1 - level)) & 1;
        out = (out << 1) | (b ^ uint32_t(g.bits_[g.idx(level, pos)]));
        pos = pos * 2 + b;  // descend by the original direction
    }
    return out;
}

Perm to_permutation(const TreeAut& g) {
    Perm p;
    p.img.resize(g.leaf_count());
    for (uint32_t leaf = 0; leaf < g.leaf_count(); ++leaf)
        p.img[leaf] = act_on_leaf(g, leaf);
    return p;
}

}  // namespace rldg

#ifndef RLDG_PERM_HPP
#define RLDG_PERM_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "rldg/errors.hpp"

namespace rldg {

// A permutation of [0, degree). Composition is left-to-right throughout the
// library: compose(a, b) maps x to b[a[x]], i.e. "a then b". This matches
// the tree-automorphism multiplication, where gh means "apply g, then h".
struct Perm {
    std::vector<uint32_t> img;

    Perm() = default;
    explicit Perm(size_t degree) : img(degree) {
        std::iota(img.begin(), img.end(), 0u);
    }
    explicit Perm(std::vector<uint32_t> images) : img(std::move(images)) {}

    size_t degree() const { return img.size(); }
    uint32_t operator[](size_t x) const { return img[x]; }

    bool is_identity() const {
        for (size_t i = 0; i < img.size(); ++i)
            if (img[i] != i) return false;
        return true;
    }

    bool operator==(const Perm& o) const { return img == o.img; }
    bool operator!=(const Perm& o) const { return img != o.img; }

    // True bijection check (every image hit exactly once).
    bool is_valid() const {
        std::vector<char> seen(img.size(), 0);
        for (uint32_t v : img) {
            if (v >= img.size() || seen[v]) return false;
            seen[v] = 1;
        }
        return true;
    }
};

inline void compose_into(Perm& out, const Perm& a, const Perm& b) {
    if (a.degree() != b.degree())
        throw DomainMismatch("permutation degrees differ");
    out.img.resize(a.degree());
    for (size_t i = 0; i < a.img.size(); ++i) out.img[i] = b.img[a.img[i]];
}

// a then b.
inline Perm compose(const Perm& a, const Perm& b) {
    Perm r;
    compose_into(r, a, b);
    return r;
}

inline Perm inverse(const Perm& a) {
    Perm r;
    r.img.resize(a.degree());
    for (size_t i = 0; i < a.img.size(); ++i) r.img[a.img[i]] = uint32_t(i);
    return r;
}

inline Perm power(const Perm& a, uint64_t e) {
    Perm acc(a.degree());
    Perm sq = a;
    while (e) {
        if (e & 1) acc = compose(acc, sq);
        e >>= 1;
        if (e) sq = compose(sq, sq);
    }
    return acc;
}

// Multiset of cycle lengths, as length -> multiplicity.
inline std::map<uint64_t, uint64_t> cycle_type(const Perm& a) {
    std::map<uint64_t, uint64_t> ct;
    std::vector<char> seen(a.degree(), 0);
    for (size_t i = 0; i < a.degree(); ++i) {
        if (seen[i]) continue;
        uint64_t len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = a.img[j];
            ++len;
        }
        ++ct[len];
    }
    return ct;
}

}  // namespace rldg

#endif  // RLDG_PERM_HPP

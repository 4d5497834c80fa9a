#ifndef RLDG_DIHEDRAL_HPP
#define RLDG_DIHEDRAL_HPP

#include <cstdint>
#include <string>

#include "rldg/alphabet.hpp"
#include "rldg/errors.hpp"

namespace rldg {

// Value-with-modulus in Z_{2^k}. k = 0 is the trivial ring (everything 0).
// All arithmetic requires matching moduli; division by odd numbers is
// multiplication by the 2-adic inverse truncated to k bits.
struct Residue {
    int64_t value = 0;  // canonical representative in [0, 2^k)
    int k = 0;

    Residue() = default;
    Residue(int64_t v, int modulus_exp) : k(modulus_exp) { value = reduce(v, k); }

    static int64_t reduce(int64_t v, int k) {
        if (k <= 0) return 0;
        const int64_t m = int64_t(1) << k;
        int64_t r = v % m;
        return r < 0 ? r + m : r;
    }

    bool operator==(const Residue& o) const { return value == o.value && k == o.k; }
    bool operator!=(const Residue& o) const { return !(*this == o); }
};

inline void check_same_modulus(const Residue& a, const Residue& b) {
    if (a.k != b.k)
        throw ModulusMismatch("residue moduli differ: 2^" + std::to_string(a.k) +
                              " vs 2^" + std::to_string(b.k));
}

inline Residue operator+(const Residue& a, const Residue& b) {
    check_same_modulus(a, b);
    return Residue(a.value + b.value, a.k);
}

inline Residue operator-(const Residue& a, const Residue& b) {
    check_same_modulus(a, b);
    return Residue(a.value - b.value, a.k);
}

inline Residue operator*(const Residue& a, const Residue& b) {
    check_same_modulus(a, b);
    return Residue(a.value * b.value, a.k);
}

// Inverse of an odd value mod 2^k by Newton lifting (x -> x(2 - vx) doubles
// the number of correct bits each round).
inline int64_t inverse_odd_mod_pow2(int64_t v, int k) {
    if (k <= 0) return 0;
    if (v % 2 == 0) throw ModulusMismatch("even value has no inverse mod 2^k");
    uint64_t m_mask = (k >= 64) ? ~uint64_t(0) : ((uint64_t(1) << k) - 1);
    uint64_t x = 1;
    uint64_t uv = uint64_t(Residue::reduce(v, k));
    for (int i = 0; i < 6; ++i) x = x * (2 - uv * x);
    return int64_t(x & m_mask);
}

// Element (f, x) of the dihedral group D_{2^{k+1}}, f the reflection bit and
// x a rotation in Z_{2^k}, multiplying as
//   (f1, x1)(f2, x2) = (f1 + f2, x1 + (-1)^{f1} x2).
struct DihedralElem {
    int f = 0;
    Residue x;

    DihedralElem() = default;
    DihedralElem(int flip, Residue rot) : f(flip & 1), x(rot) {}

    bool operator==(const DihedralElem& o) const { return f == o.f && x == o.x; }
    bool operator!=(const DihedralElem& o) const { return !(*this == o); }
};

inline DihedralElem dihedral_mul(const DihedralElem& a, const DihedralElem& b) {
    check_same_modulus(a.x, b.x);
    int64_t rot = a.f ? a.x.value - b.x.value : a.x.value + b.x.value;
    return DihedralElem(a.f ^ b.f, Residue(rot, a.x.k));
}

inline DihedralElem dihedral_inverse(const DihedralElem& a) {
    // (f, x)^-1 = (f, (-1)^{f+1} x): reflections are involutions.
    return DihedralElem(a.f, Residue(a.f ? a.x.value : -a.x.value, a.x.k));
}

// The involution relating sibling invariants:
//   Phi((f, x)) = (f, [f = 1](p+q)(p-q) - x).
inline DihedralElem phi(const Alphabet& a, const DihedralElem& d) {
    int64_t c = d.f ? int64_t(a.sum()) * int64_t(a.diff()) : 0;
    return DihedralElem(d.f, Residue(c - d.x.value, d.x.k));
}

}  // namespace rldg

#endif  // RLDG_DIHEDRAL_HPP

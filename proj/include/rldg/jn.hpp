#ifndef RLDG_JN_HPP
#define RLDG_JN_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rldg/alphabet.hpp"
#include "rldg/dihedral.hpp"
#include "rldg/tree_aut.hpp"

namespace rldg {

// The recursively constrained groups J_n inside Aut(T_{n+1}), their
// invariants psi_n : J_n -> Z_{2^{floor(n/2)}} and
// Delta_n : J_n -> D_{2^{floor(n/2)+1}}, and the standard generators.
//
// Membership: J_1 is everything, J_2 requires equal children, and for
// n >= 3 both children must be members with
// Delta_{n-1}(g_L) = Phi(Delta_{n-1}(g_R)).
//
// psi recursion (division by the odd p+q is 2-adic inversion):
//   odd n:  ((psi(g_L) + psi(g_R)) / (p+q)) mod 2^{n/2 floor}
//   even n: ((2(psi(g_LL) + psi(g_RL)) - [g_Lf](p+q)(p-q)) / (p+q)^2)
// Child values live one modulus step down; the even case lifts grandchild
// values with the explicit factor 2 before inverting.

int psi_modulus_exp(int n);  // floor(n/2)

int jn_order_exponent(int n);  // ceil((2^n + 3n) / 6)

// Where a membership check first failed: the path from the root (0 = left,
// 1 = right) to the node whose constraint is violated, plus a reason.
struct MembershipViolation {
    std::string path;
    std::string reason;
};

// Shared recursion context. Caches psi/Delta/membership per subtree
// portrait, which the enumeration and repeated membership checks hit
// heavily. Not synchronized: confine one engine to one thread (results are
// identical regardless of sharing, per the pure recursions).
class JnEngine {
public:
    explicit JnEngine(const Alphabet& a);

    const Alphabet& alphabet() const { return a_; }

    bool is_member(const TreeAut& g);
    std::optional<MembershipViolation> diagnose(const TreeAut& g);

    // Throw NotAMember unless g is in J_n.
    Residue psi(const TreeAut& g);
    DihedralElem delta(const TreeAut& g);

    // Enumerate J_n in a fixed deterministic order: root flip 0 before 1,
    // then g_L in level-(n-1) enumeration order, then g_R through the
    // kernel coset matching Phi(Delta(g_L)). Levels above `soft_cap` are
    // refused (default 6; 7 is allowed explicitly, beyond that never).
    void for_each(int n, const std::function<void(const TreeAut&)>& fn,
                  int soft_cap = kEnumerateCap);
    std::vector<TreeAut> enumerate(int n, int soft_cap = kEnumerateCap);

    static constexpr int kEnumerateCap = 6;
    static constexpr int kEnumerateHardCap = 7;

private:
    struct DKey {
        int f;
        int64_t x;
        bool operator==(const DKey& o) const { return f == o.f && x == o.x; }
    };
    struct DKeyHash {
        size_t operator()(const DKey& k) const {
            return std::hash<int64_t>()(k.x * 2 + k.f);
        }
    };

    bool member_unchecked(const TreeAut& g);
    int64_t psi_unchecked(const TreeAut& g);
    DihedralElem delta_unchecked(const TreeAut& g);
    int64_t inv_sum(int k);
    std::vector<TreeAut> enumerate_level(int n, int soft_cap);
    std::optional<MembershipViolation> diagnose_rec(const TreeAut& g,
                                                    const std::string& path);

    Alphabet a_;
    std::unordered_map<std::string, int64_t> psi_memo_;
    std::unordered_map<std::string, char> member_memo_;
    std::vector<int64_t> inv_sum_;  // inverse of p+q mod 2^k, by k
};

// Standard generators as portraits.
//   gen_p(1) = gen_q(1) = the root flip; for n >= 2,
//   gen_p(n) = (1, gen_p(n-1)^p, gen_q(n-1)^p), gen_q likewise with ^q,
//   gen_y(n) = (0, gen_p(n-1), gen_q(n-1)) (identity at n = 1),
//   gen_f(n) = the root flip alone.
TreeAut gen_p(const Alphabet& a, int n);
TreeAut gen_q(const Alphabet& a, int n);
TreeAut gen_y(const Alphabet& a, int n);
TreeAut gen_f(int n);

// Convenience wrappers over a throwaway engine.
bool is_member(const Alphabet& a, const TreeAut& g);
Residue psi(const Alphabet& a, const TreeAut& g);
DihedralElem delta(const Alphabet& a, const TreeAut& g);
std::vector<TreeAut> enumerate_jn(const Alphabet& a, int n,
                                  int soft_cap = JnEngine::kEnumerateCap);

}  // namespace rldg

#endif  // RLDG_JN_HPP

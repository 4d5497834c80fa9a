#include "rldg/jn.hpp"

#include <stdexcept>
#include <utility>

namespace rldg {

int psi_modulus_exp(int n) { return n / 2; }

int jn_order_exponent(int n) {
    if (n < 1 || n > 62)
        throw CapExceeded("order exponent defined for 1 <= n <= 62");
    const int64_t num = (int64_t(1) << n) + 3 * int64_t(n);
    return int((num + 5) / 6);  // ceil(num / 6)
}

JnEngine::JnEngine(const Alphabet& a) : a_(a) {
    if (!a.odd_sum())
        throw std::invalid_argument("J_n structure requires p + q odd");
}

namespace {

int64_t delta_correction(const Alphabet& a) {
    return int64_t(a.sum()) * int64_t(a.diff());
}

}  // namespace

bool JnEngine::is_member(const TreeAut& g) { return member_unchecked(g); }

bool JnEngine::member_unchecked(const TreeAut& g) {
    const int n = g.depth();
    if (n == 1) return true;
    if (n == 2) return g.bit(1, 0) == g.bit(1, 1);
    std::string key = g.key();
    auto it = member_memo_.find(key);
    if (it != member_memo_.end()) return it->second != 0;
    TreeAut gl = g.left();
    TreeAut gr = g.right();
    const bool ok = member_unchecked(gl) && member_unchecked(gr) &&
                    delta_unchecked(gl) == phi(a_, delta_unchecked(gr));
    member_memo_.emplace(std::move(key), ok ? 1 : 0);
    return ok;
}

int64_t JnEngine::inv_sum(int k) {
    while (int(inv_sum_.size()) <= k)
        inv_sum_.push_back(inverse_odd_mod_pow2(a_.sum(), int(inv_sum_.size())));
    return inv_sum_[size_t(k)];
}

int64_t JnEngine::psi_unchecked(const TreeAut& g) {
    const int n = g.depth();
    if (n == 1) return 0;
    if (n == 2) return g.bit(1, 0);
    std::string key = g.key();
    auto it = psi_memo_.find(key);
    if (it != psi_memo_.end()) return it->second;
    const int k = psi_modulus_exp(n);
    int64_t value;
    if (n % 2 == 1) {
        // Children sit one (even) level down at the same modulus.
        const int64_t sum = psi_unchecked(g.left()) + psi_unchecked(g.right());
        value = Residue::reduce(Residue::reduce(sum, k) * inv_sum(k), k);
    } else {
        // Grandchild values carry modulus k-1; the explicit factor 2 lifts
        // them to k before the division by (p+q)^2.
        const int64_t sum =
            psi_unchecked(g.left().left()) + psi_unchecked(g.right().left());
        const int64_t num = 2 * sum - (g.bit(1, 0) ? delta_correction(a_) : 0);
        value = Residue::reduce(num, k);
        value = Residue::reduce(value * inv_sum(k), k);
        value = Residue::reduce(value * inv_sum(k), k);
    }
    psi_memo_.emplace(std::move(key), value);
    return value;
}

DihedralElem JnEngine::delta_unchecked(const TreeAut& g) {
    const int n = g.depth();
    const int k = psi_modulus_exp(n);
    if (n == 1) return DihedralElem(g.root_flip(), Residue(0, 0));
    if (n == 2) return DihedralElem(g.root_flip(), Residue(g.bit(1, 0), 1));
    if (n % 2 == 1) {
        const int64_t diff = psi_unchecked(g.left()) - psi_unchecked(g.right());
        return DihedralElem(g.root_flip(), Residue(diff, k));
    }
    const int64_t rot =
        int64_t(a_.sum()) * psi_unchecked(g) - 2 * psi_unchecked(g.right());
    return DihedralElem(g.root_flip(), Residue(rot, k));
}

Residue JnEngine::psi(const TreeAut& g) {
    if (!member_unchecked(g))
        throw NotAMember("psi is only defined on members of J_n");
    return Residue(psi_unchecked(g), psi_modulus_exp(g.depth()));
}

DihedralElem JnEngine::delta(const TreeAut& g) {
    if (!member_unchecked(g))
        throw NotAMember("Delta is only defined on members of J_n");
    return delta_unchecked(g);
}

std::optional<MembershipViolation> JnEngine::diagnose(const TreeAut& g) {
    return diagnose_rec(g, "");
}

std::optional<MembershipViolation> JnEngine::diagnose_rec(const TreeAut& g,
                                                          const std::string& path) {
    const int n = g.depth();
    if (n == 1) return std::nullopt;
    if (n == 2) {
        if (g.bit(1, 0) != g.bit(1, 1))
            return MembershipViolation{path, "children differ (g_L != g_R at depth 2)"};
        return std::nullopt;
    }
    TreeAut gl = g.left();
    TreeAut gr = g.right();
    if (auto v = diagnose_rec(gl, path + "L")) return v;
    if (auto v = diagnose_rec(gr, path + "R")) return v;
    const DihedralElem dl = delta_unchecked(gl);
    const DihedralElem dr = delta_unchecked(gr);
    if (dl != phi(a_, dr)) {
        if (dl.f != dr.f)
            return MembershipViolation{path, "root flips of children differ (g_Lf != g_Rf)"};
        return MembershipViolation{path, "Delta(g_L) != Phi(Delta(g_R))"};
    }
    return std::nullopt;
}

void JnEngine::for_each(int n, const std::function<void(const TreeAut&)>& fn,
                        int soft_cap) {
    if (soft_cap > kEnumerateHardCap)
        throw CapExceeded("enumeration cap may not exceed " +
                          std::to_string(kEnumerateHardCap));
    if (n < 1 || n > soft_cap)
        throw CapExceeded("enumeration depth " + std::to_string(n) +
                          " exceeds cap " + std::to_string(soft_cap));
    if (n == 1) {
        TreeAut id(1);
        fn(id);
        id.set_bit(0, 0, 1);
        fn(id);
        return;
    }
    // Free choice of g_f and g_L; g_R runs over the coset of ker(Delta)
    // matching Phi(Delta(g_L)), realized as a bucket per Delta value.
    std::vector<TreeAut> prev = enumerate_level(n - 1, soft_cap);
    std::unordered_map<DKey, std::vector<size_t>, DKeyHash> buckets;
    for (size_t i = 0; i < prev.size(); ++i) {
        const DihedralElem d = delta_unchecked(prev[i]);
        buckets[DKey{d.f, d.x.value}].push_back(i);
    }
    for (int f = 0; f <= 1; ++f) {
        for (const TreeAut& gl : prev) {
            const DihedralElem target = phi(a_, delta_unchecked(gl));
            auto it = buckets.find(DKey{target.f, target.x.value});
            if (it == buckets.end()) continue;
            for (size_t ri : it->second) fn(TreeAut::from_children(f, gl, prev[ri]));
        }
    }
}

std::vector<TreeAut> JnEngine::enumerate_level(int n, int soft_cap) {
    std::vector<TreeAut> out;
    for_each(n, [&out](const TreeAut& g) { out.push_back(g); }, soft_cap);
    return out;
}

std::vector<TreeAut> JnEngine::enumerate(int n, int soft_cap) {
    if (soft_cap > kEnumerateCap)
        throw CapExceeded("materialized enumeration is capped at depth " +
                          std::to_string(kEnumerateCap) + "; use for_each beyond");
    return enumerate_level(n, soft_cap);
}

namespace {

// [p]_n and [q]_n share one recursion: both children of [s]_n are the s-th
// powers of the previous pair.
std::pair<TreeAut, TreeAut> generator_pair(const Alphabet& a, int n) {
    TreeAut gp(1);
    gp.set_bit(0, 0, 1);
    TreeAut gq = gp;
    for (int k = 2; k <= n; ++k) {
        TreeAut pp = tree_power(gp, uint64_t(a.p()));
        TreeAut qp = tree_power(gq, uint64_t(a.p()));
        TreeAut pq = tree_power(gp, uint64_t(a.q()));
        TreeAut qq = tree_power(gq, uint64_t(a.q()));
        gp = TreeAut::from_children(1, pp, qp);
        gq = TreeAut::from_children(1, pq, qq);
    }
    return {std::move(gp), std::move(gq)};
}

}  // namespace

TreeAut gen_p(const Alphabet& a, int n) { return generator_pair(a, n).first; }

TreeAut gen_q(const Alphabet& a, int n) { return generator_pair(a, n).second; }

TreeAut gen_y(const Alphabet& a, int n) {
    if (n == 1) return TreeAut::identity(1);
    auto pair = generator_pair(a, n - 1);
    return TreeAut::from_children(0, pair.first, pair.second);
}

TreeAut gen_f(int n) {
    TreeAut g(n);
    g.set_bit(0, 0, 1);
    return g;
}

bool is_member(const Alphabet& a, const TreeAut& g) {
    JnEngine e(a);
    return e.is_member(g);
}

Residue psi(const Alphabet& a, const TreeAut& g) {
    JnEngine e(a);
    return e.psi(g);
}

DihedralElem delta(const Alphabet& a, const TreeAut& g) {
    JnEngine e(a);
    return e.delta(g);
}

std::vector<TreeAut> enumerate_jn(const Alphabet& a, int n, int soft_cap) {
    JnEngine e(a);
    return e.enumerate(n, soft_cap);
}

}  // namespace rldg

#include "rldg/bsgs.hpp"

#include <cmath>
#include <sstream>

#include "rldg/automaton.hpp"
#include "rldg/jn.hpp"
#include "rldg/tree_aut.hpp"

namespace rldg {

Bsgs::Bsgs(const std::vector<Perm>& gens) {
    for (const Perm& g : gens) {
        if (degree_ == 0) degree_ = g.degree();
        if (g.degree() != degree_)
            throw DomainMismatch("generators act on different domains");
        if (!g.is_valid()) throw DomainMismatch("generator is not a bijection");
    }
    for (const Perm& g : gens) {
        if (g.is_identity()) continue;
        pool_.push_back(g);
        pool_inv_.push_back(inverse(g));
    }
    n_original_ = pool_.size();
    if (n_original_ == 0) return;  // trivial group, empty chain

    // Level 0 holds the original generators; its base point is the smallest
    // point any of them moves.
    uint32_t base = 0;
    for (; base < degree_; ++base) {
        bool moved = false;
        for (const Perm& g : pool_)
            if (g.img[base] != base) {
                moved = true;
                break;
            }
        if (moved) break;
    }
    levels_.push_back(BsgsLevel{});
    levels_[0].base_point = base;
    levels_[0].sv_gen.assign(degree_, -1);
    levels_[0].sv_prev.assign(degree_, -1);
    levels_[0].sv_prev[base] = -2;
    levels_[0].orbit.push_back(base);
    done_upto_.emplace_back();
    inv_rep_cache_.emplace_back();
    fwd_rep_cache_.emplace_back();
    std::vector<int> ids(n_original_);
    for (size_t i = 0; i < n_original_; ++i) ids[i] = int(i);
    levels_[0].gen_ids = ids;
    done_upto_[0].assign(n_original_, 0);
    extend_orbit(0, ids);
    process_pending();
}

void Bsgs::extend_orbit(size_t level, const std::vector<int>& new_gen_ids) {
    BsgsLevel& L = levels_[level];
    const size_t old_size = L.orbit.size();
    // Old points only need the new edges; points appended during the sweep
    // are explored with every generator of the level.
    for (size_t i = 0; i < L.orbit.size(); ++i) {
        const uint32_t x = L.orbit[i];
        const std::vector<int>& gens = (i < old_size) ? new_gen_ids : L.gen_ids;
        for (int gid : gens) {
            const uint32_t y = pool_[size_t(gid)].img[x];
            if (L.sv_prev[y] == -1) {
                L.sv_prev[y] = int32_t(x);
                L.sv_gen[y] = gid;
                L.orbit.push_back(y);
            }
        }
    }
}

Perm Bsgs::walk_fwd_rep(size_t level, uint32_t x) const {
    const BsgsLevel& L = levels_[level];
    std::vector<int> path;  // gen ids from the base point out to x
    uint32_t cur = x;
    while (L.sv_prev[cur] != -2) {
        path.push_back(L.sv_gen[cur]);
        cur = uint32_t(L.sv_prev[cur]);
    }
    Perm rep(degree_);
    Perm tmp;
    for (size_t i = path.size(); i-- > 0;) {
        compose_into(tmp, rep, pool_[size_t(path[i])]);
        rep = std::move(tmp);
    }
    return rep;
}

const Perm* Bsgs::cached_fwd_rep(size_t level, uint32_t x) const {
    auto& cache = fwd_rep_cache_[level];
    auto it = cache.find(x);
    if (it != cache.end()) return &it->second;
    if (cache_bytes_ >= kCacheByteCap) return nullptr;
    const BsgsLevel& L = levels_[level];
    Perm rep;
    if (L.sv_prev[x] == -2) {
        rep = Perm(degree_);
    } else if (const Perm* prev = cached_fwd_rep(level, uint32_t(L.sv_prev[x]))) {
        compose_into(rep, *prev, pool_[size_t(L.sv_gen[x])]);
    } else {
        rep = walk_fwd_rep(level, x);
    }
    cache_bytes_ += degree_ * sizeof(uint32_t);
    return &cache.emplace(x, std::move(rep)).first->second;
}

const Perm* Bsgs::cached_inv_rep(size_t level, uint32_t x) const {
    auto& cache = inv_rep_cache_[level];
    auto it = cache.find(x);
    if (it != cache.end()) return &it->second;
    if (cache_bytes_ >= kCacheByteCap) return nullptr;
    Perm rep;
    if (const Perm* fwd = cached_fwd_rep(level, x))
        rep = inverse(*fwd);
    else
        rep = inverse(walk_fwd_rep(level, x));
    cache_bytes_ += degree_ * sizeof(uint32_t);
    return &cache.emplace(x, std::move(rep)).first->second;
}

void Bsgs::divide_by_rep(Perm& g, size_t level, uint32_t x) const {
    if (const Perm* ux_inv = cached_inv_rep(level, x)) {
        Perm out;
        compose_into(out, g, *ux_inv);
        g = std::move(out);
        return;
    }
    // Cache budget exhausted: peel the representative off generator by
    // generator along the Schreier path (u_x = u_prev s, so dividing by
    // u_x^-1 is dividing by s^-1 then recursing on prev).
    const BsgsLevel& L = levels_[level];
    uint32_t cur = x;
    Perm tmp;
    while (L.sv_prev[cur] != -2) {
        compose_into(tmp, g, pool_inv_[size_t(L.sv_gen[cur])]);
        g = std::move(tmp);
        cur = uint32_t(L.sv_prev[cur]);
    }
}

std::pair<size_t, Perm> Bsgs::strip(Perm g, size_t from_level) const {
    for (size_t l = from_level; l < levels_.size(); ++l) {
        const uint32_t x = g.img[levels_[l].base_point];
        if (x == levels_[l].base_point) continue;
        if (levels_[l].sv_prev[x] == -1) return {l, std::move(g)};
        divide_by_rep(g, l, x);
    }
    return {levels_.size(), std::move(g)};
}

void Bsgs::add_generator(const Perm& g, int home) {
    const int gid = int(pool_.size());
    pool_.push_back(g);
    pool_inv_.push_back(inverse(g));
    if (size_t(home) == levels_.size()) {
        uint32_t base = 0;
        while (base < degree_ && g.img[base] == base) ++base;
        levels_.push_back(BsgsLevel{});
        BsgsLevel& L = levels_.back();
        L.base_point = base;
        L.sv_gen.assign(degree_, -1);
        L.sv_prev.assign(degree_, -1);
        L.sv_prev[base] = -2;
        L.orbit.push_back(base);
        done_upto_.emplace_back();
        inv_rep_cache_.emplace_back();
        fwd_rep_cache_.emplace_back();
    }
    // The residue fixes base points 0..home-1, so it is a strong generator
    // for every level from 1 up to its home. Level 0 keeps the original
    // generators only: they already generate the whole group.
    const std::vector<int> one{gid};
    for (size_t k = 1; k <= size_t(home); ++k) {
        levels_[k].gen_ids.push_back(gid);
        done_upto_[k].push_back(0);
        extend_orbit(k, one);
    }
}

void Bsgs::process_pending() {
    while (true) {
        // Deepest level with an unprocessed (point, generator) pair.
        size_t level = levels_.size();
        for (size_t l = levels_.size(); l-- > 0;) {
            const BsgsLevel& L = levels_[l];
            for (size_t s = 0; s < L.gen_ids.size(); ++s) {
                if (done_upto_[l][s] < L.orbit.size()) {
                    level = l;
                    break;
                }
            }
            if (level != levels_.size()) break;
        }
        if (level == levels_.size()) return;

        BsgsLevel& L = levels_[level];
        bool added = false;
        for (size_t s = 0; s < L.gen_ids.size() && !added; ++s) {
            const int gid = L.gen_ids[s];
            const Perm& gen = pool_[size_t(gid)];
            while (done_upto_[level][s] < L.orbit.size()) {
                const uint32_t x = L.orbit[done_upto_[level][s]++];
                const uint32_t y = gen.img[x];
                // Tree edges give trivial Schreier generators by construction.
                if (L.sv_gen[y] == gid && L.sv_prev[y] == int32_t(x)) continue;
                const Perm* ux = cached_fwd_rep(level, x);
                Perm h = ux ? compose(*ux, gen) : compose(walk_fwd_rep(level, x), gen);
                divide_by_rep(h, level, y);
                auto [home, residue] = strip(std::move(h), level + 1);
                if (residue.is_identity()) continue;
                add_generator(residue, int(home));
                added = true;  // new pending work sits deeper; go there first
                break;
            }
        }
    }
}

Perm Bsgs::sift(const Perm& g) const {
    if (degree_ != 0 && g.degree() != degree_)
        throw DomainMismatch("sift: permutation degree differs from the chain's");
    if (!g.is_valid()) throw DomainMismatch("sift: not a bijection");
    return strip(g, 0).second;
}

std::vector<uint32_t> Bsgs::base() const {
    std::vector<uint32_t> b;
    b.reserve(levels_.size());
    for (const BsgsLevel& L : levels_) b.push_back(L.base_point);
    return b;
}

std::vector<uint64_t> Bsgs::orbit_sizes() const {
    std::vector<uint64_t> s;
    s.reserve(levels_.size());
    for (const BsgsLevel& L : levels_) s.push_back(L.orbit.size());
    return s;
}

std::string Bsgs::serialize() const {
    std::ostringstream os;
    os << "degree " << degree_ << "\n";
    os << "strong_gens " << pool_.size() << "\n";
    for (size_t l = 0; l < levels_.size(); ++l) {
        const BsgsLevel& L = levels_[l];
        os << "level " << l << " base " << L.base_point << " orbit "
           << L.orbit.size() << "\n gens";
        for (int gid : L.gen_ids) os << ' ' << gid;
        os << "\n sv";
        for (uint32_t x : L.orbit) os << ' ' << x << ':' << L.sv_gen[x] << ','
                                      << L.sv_prev[x];
        os << "\n";
    }
    return os.str();
}

OrderExponent order_exponent(const Bsgs& b) {
    OrderExponent r;
    r.orbit_sizes = b.orbit_sizes();
    for (uint64_t s : r.orbit_sizes) {
        if ((s & (s - 1)) == 0) {
            uint64_t v = s;
            while (v > 1) {
                ++r.exp;
                v >>= 1;
            }
        } else {
            r.exact = false;
        }
    }
    if (!r.exact) {
        long double total = 0;
        for (uint64_t s : r.orbit_sizes) total += log2l((long double)s);
        r.exp = int64_t(ceill(total - 1e-9L));
    }
    return r;
}

OrderExponent kn_order_exponent(const Alphabet& a, int n, int cap) {
    if (n < 1 || n > cap)
        throw CapExceeded("group order depth " + std::to_string(n) +
                          " out of range (cap " + std::to_string(cap) + ")");
    TransitionTable t = build_table(a, n, cap);
    Bsgs chain({t.on_p, t.on_q});
    return order_exponent(chain);
}

ConjectureReport verify_conjecture(const Alphabet& a, int n_max, int cap) {
    if (n_max < 1 || n_max > cap)
        throw CapExceeded("conjecture sweep depth out of range");
    ConjectureReport report{a, {}, true};
    for (int n = 1; n <= n_max; ++n) {
        TransitionTable t = build_table(a, n, cap);
        Bsgs chain({t.on_p, t.on_q});
        OrderExponent ord = order_exponent(chain);
        ConjectureRow row;
        row.n = n;
        row.k_exponent = ord.exp;
        row.j_formula_exponent = jn_order_exponent(n);
        row.exact = ord.exact;
        row.equal = ord.exact && row.k_exponent == row.j_formula_exponent;
        if (n <= JnEngine::kEnumerateCap) {
            row.containment_checked = true;
            JnEngine engine(a);
            row.generators_in_jn =
                engine.is_member(gen_p(a, n)) && engine.is_member(gen_q(a, n));
            bool all_sift = true;
            uint64_t count = 0;
            engine.for_each(n, [&](const TreeAut& g) {
                ++count;
                if (all_sift && !chain.contains(to_permutation(g))) all_sift = false;
            });
            row.containment_ok = all_sift && row.generators_in_jn &&
                                 count == (uint64_t(1) << row.j_formula_exponent);
        }
        report.all_equal = report.all_equal && row.equal;
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace rldg

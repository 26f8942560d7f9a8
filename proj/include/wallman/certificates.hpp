#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bitset.hpp"
#include "error.hpp"
#include "filters.hpp"
#include "lattice.hpp"
#include "space.hpp"

namespace wallman {

/// One member U of a cover family: a subset of the ground set, the groups
/// it belongs to, and optionally an increasing chain of stages ending at U.
struct Member {
    std::string id;
    Bitset set;
    std::vector<unsigned> groups;
    std::vector<Bitset> stages;

    bool in_group(unsigned n) const { return std::binary_search(groups.begin(), groups.end(), n); }
};

struct CoverFamily {
    std::vector<std::string> ground;
    std::vector<Member> members;

    std::size_t ground_size() const { return ground.size(); }
    std::size_t size() const { return members.size(); }

    std::optional<std::size_t> find(const std::string& id) const
    {
        for (std::size_t i = 0; i < members.size(); ++i)
            if (members[i].id == id)
                return i;
        return std::nullopt;
    }

    std::size_t index(const std::string& id) const
    {
        if (auto i = find(id))
            return *i;
        throw Error(ErrorCode::invalid_argument, "no member '" + id + "'");
    }

    /// Largest group index in use, or nullopt for an empty family.
    std::optional<unsigned> max_group() const
    {
        std::optional<unsigned> best;
        for (const auto& m : members)
            for (auto g : m.groups)
                best = std::max(best.value_or(0), g);
        return best;
    }

    /// Member indices of group n (the family Y_n).
    std::vector<std::size_t> group(unsigned n) const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < members.size(); ++i)
            if (members[i].in_group(n))
                out.push_back(i);
        return out;
    }

    std::vector<std::size_t> all_members() const
    {
        std::vector<std::size_t> out(members.size());
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = i;
        return out;
    }
};

inline void normalize_groups(std::vector<unsigned>& g)
{
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
}

/// Stages, when present, increase and end at the member itself.
inline void validate_family(const CoverFamily& F)
{
    for (const auto& m : F.members) {
        if (m.set.size() != F.ground_size())
            throw Error(ErrorCode::invalid_argument, "member '" + m.id + "' is over the wrong ground set");
        if (m.groups.empty())
            throw Error(ErrorCode::invalid_argument, "member '" + m.id + "' has no group");
        if (m.stages.empty())
            continue;
        for (std::size_t k = 0; k + 1 < m.stages.size(); ++k)
            if (!m.stages[k].is_subset_of(m.stages[k + 1]))
                throw Error(ErrorCode::invalid_argument,
                            "stages of '" + m.id + "' are not increasing at " + std::to_string(k));
        if (m.stages.back() != m.set)
            throw Error(ErrorCode::invalid_argument, "last stage of '" + m.id + "' is not the member");
    }
}

/// phi: member index -> nonempty set of naturals.
struct PhiAssignment {
    std::vector<std::vector<unsigned>> values;

    const std::vector<unsigned>& operator[](std::size_t u) const { return values[u]; }
    std::size_t size() const { return values.size(); }
    bool contains(std::size_t u, unsigned m) const
    {
        return std::binary_search(values[u].begin(), values[u].end(), m);
    }
    friend bool operator==(const PhiAssignment&, const PhiAssignment&) = default;
};

inline void validate_phi(const CoverFamily& F, const PhiAssignment& phi)
{
    if (phi.size() != F.size())
        throw Error(ErrorCode::invalid_argument, "phi has " + std::to_string(phi.size()) + " values for " +
                                                     std::to_string(F.size()) + " members");
    for (std::size_t u = 0; u < phi.size(); ++u) {
        if (phi[u].empty())
            throw Error(ErrorCode::empty_phi_value, "phi('" + F.members[u].id + "') is empty",
                        {static_cast<ElementId>(u)});
        if (!std::is_sorted(phi[u].begin(), phi[u].end()) ||
            std::adjacent_find(phi[u].begin(), phi[u].end()) != phi[u].end())
            throw Error(ErrorCode::invalid_argument, "phi('" + F.members[u].id + "') is not a sorted set");
    }
}

/// Number of the listed members containing x.
inline std::size_t ord(const CoverFamily& F, std::size_t x, const std::vector<std::size_t>& V)
{
    std::size_t c = 0;
    for (auto v : V)
        if (F.members[v].set.test(x))
            ++c;
    return c;
}

inline std::size_t ord(const CoverFamily& F, std::size_t x) { return ord(F, x, F.all_members()); }

/// For x != y some member contains exactly one of them. Witness: (x, y).
inline Verdict is_T0_separating(const CoverFamily& F)
{
    for (std::size_t x = 0; x < F.ground_size(); ++x)
        for (std::size_t y = x + 1; y < F.ground_size(); ++y) {
            const bool split = std::any_of(F.members.begin(), F.members.end(),
                                           [&](const Member& m) { return m.set.test(x) != m.set.test(y); });
            if (!split)
                return Verdict::fail({static_cast<ElementId>(x), static_cast<ElementId>(y)});
        }
    return Verdict::pass();
}

/// Listed members whose intersection is nonempty. The empty collection is
/// centered.
inline bool is_centered_collection(const CoverFamily& F, const std::vector<std::size_t>& V)
{
    if (V.empty())
        return true;
    Bitset acc = Bitset::full(F.ground_size());
    for (auto v : V)
        acc &= F.members[v].set;
    return acc.any();
}

inline bool is_centered_collection(const CoverFamily& F, const Bitset& s)
{
    return is_centered_collection(F, [&] {
        std::vector<std::size_t> v;
        s.for_each([&](std::size_t i) { v.push_back(i); });
        return v;
    }());
}

struct CenteredRank {
    /// Longest strictly shrinking chain of centered subcollections, which
    /// is the size of the largest centered subcollection.
    std::size_t max_centered = 0;
    /// max over x of ord(x, V).
    std::size_t max_ord = 0;
    /// From a largest centered subcollection down to the empty one.
    std::vector<std::vector<std::size_t>> chain;
};

inline constexpr std::size_t centered_scan_cap = 24;

/// Scans every centered subcollection of V. Capped at 24 members.
inline CenteredRank centered_poset_rank(const CoverFamily& F, const std::vector<std::size_t>& V)
{
    if (V.size() > centered_scan_cap)
        throw Error(ErrorCode::too_large,
                    "centered subcollection scan capped at " + std::to_string(centered_scan_cap) + " members");
    CenteredRank r;
    std::vector<std::size_t> current, best;
    auto dfs = [&](auto& self, std::size_t from, const Bitset& common) -> void {
        if (current.size() > best.size())
            best = current;
        for (std::size_t i = from; i < V.size(); ++i) {
            const Bitset next = common & F.members[V[i]].set;
            if (next.none())
                continue;
            current.push_back(V[i]);
            self(self, i + 1, next);
            current.pop_back();
        }
    };
    dfs(dfs, 0, Bitset::full(F.ground_size()));
    r.max_centered = best.size();
    for (std::size_t x = 0; x < F.ground_size(); ++x)
        r.max_ord = std::max(r.max_ord, ord(F, x, V));
    for (std::size_t k = best.size() + 1; k-- > 0;)
        r.chain.emplace_back(best.begin(), best.begin() + static_cast<std::ptrdiff_t>(k));
    return r;
}

/// phi(u) = the groups containing u.
inline PhiAssignment phi_from_witness(const CoverFamily& F)
{
    PhiAssignment phi;
    for (const auto& m : F.members) {
        auto g = m.groups;
        normalize_groups(g);
        phi.values.push_back(std::move(g));
    }
    validate_phi(F, phi);
    return phi;
}

/// Regroup so that Y_m = {u : m in phi(u)}.
inline CoverFamily witness_from_phi(const CoverFamily& F, const PhiAssignment& phi)
{
    validate_phi(F, phi);
    CoverFamily out = F;
    for (std::size_t u = 0; u < F.size(); ++u)
        out.members[u].groups = phi[u];
    return out;
}

/// The two orders on nodes: the membership reading m in phi(v), and the
/// literal reading phi(v) = {m}.
enum class GulkoMode { membership, equality };

struct GulkoNode {
    Bitset s;
    unsigned k = 0;
    friend bool operator==(const GulkoNode&, const GulkoNode&) = default;
};

struct GulkoContext {
    const CoverFamily* family = nullptr;
    const PhiAssignment* phi = nullptr;
    std::size_t u = 0;
    GulkoMode mode = GulkoMode::membership;

    GulkoContext(const CoverFamily& F, const PhiAssignment& p, std::size_t member,
                 GulkoMode m = GulkoMode::membership)
        : family(&F), phi(&p), u(member), mode(m)
    {
        validate_phi(F, p);
        if (member >= F.size())
            throw Error(ErrorCode::invalid_argument, "no member with index " + std::to_string(member));
    }

    bool covers(std::size_t v, unsigned m) const
    {
        return mode == GulkoMode::membership ? phi->contains(v, m)
                                             : ((*phi)[v].size() == 1 && (*phi)[v].front() == m);
    }

    void validate(const GulkoNode& a) const
    {
        if (a.s.size() != family->size())
            throw Error(ErrorCode::invalid_node, "node set is over the wrong member list");
        if (!is_centered_collection(*family, a.s))
            throw Error(ErrorCode::invalid_node, "node set is not centered");
    }

    /// (s, k) < (t, l): s within t, k < l, and each m in phi(u) below k is
    /// covered by some v in t \ s.
    bool lt(const GulkoNode& a, const GulkoNode& b) const
    {
        validate(a);
        validate(b);
        return lt_unchecked(a, b);
    }

    bool lt_unchecked(const GulkoNode& a, const GulkoNode& b) const
    {
        if (!a.s.is_subset_of(b.s) || a.k >= b.k)
            return false;
        const Bitset fresh = b.s - a.s;
        for (auto m : (*phi)[u]) {
            if (m >= a.k)
                break;
            bool found = false;
            fresh.for_each([&](std::size_t v) { found = found || covers(v, m); });
            if (!found)
                return false;
        }
        return true;
    }
};

inline bool gulko_lt(const GulkoNode& a, const GulkoNode& b, const CoverFamily& F, const PhiAssignment& phi,
                     std::size_t u, GulkoMode mode = GulkoMode::membership)
{
    return GulkoContext(F, phi, u, mode).lt(a, b);
}

struct ChainResult {
    /// Number of strict steps in the longest chain found.
    std::size_t length = 0;
    std::vector<GulkoNode> chain;
    /// Capped search only: raising the cap could still lengthen the chain.
    bool cap_too_small = false;
};

inline constexpr std::size_t chain_search_member_cap = 20;

namespace detail {

struct NodeKey {
    Bitset s;
    unsigned k;
    friend bool operator==(const NodeKey&, const NodeKey&) = default;
};

struct NodeKeyHash {
    std::size_t operator()(const NodeKey& n) const { return n.s.hash() * 31 + n.k; }
};

class ChainSearch {
public:
    ChainSearch(const GulkoContext& ctx, std::optional<unsigned> k_cap) : ctx_(ctx), cap_(k_cap)
    {
        const auto& phi_u = (*ctx.phi)[ctx.u];
        saturation_ = phi_u.back() + 1;
    }

    ChainResult run()
    {
        const GulkoNode start{Bitset(ctx_.family->size()), 0};
        ChainResult r;
        r.length = longest(start.s, 0);
        GulkoNode cur = start;
        r.chain.push_back(cur);
        while (true) {
            auto it = best_.find(key(cur.s, cur.k));
            if (it == best_.end() || !it->second)
                break;
            cur = GulkoNode{*it->second, cur.k + 1};
            r.chain.push_back(cur);
        }
        return r;
    }

private:
    // Memo key: beyond max phi(u) + 1 the order no longer depends on k,
    // except through the cap.
    NodeKey key(const Bitset& s, unsigned k) const { return {s, cap_ ? k : std::min(k, saturation_)}; }

    // Longest chain starting at (s, k). A successor (t, l) is never worse
    // with l = k + 1, and never worse with t = s plus a minimal set of fresh
    // members covering the required groups, so only those are tried.
    std::size_t longest(const Bitset& s, unsigned k)
    {
        const NodeKey nk = key(s, k);
        if (auto it = memo_.find(nk); it != memo_.end())
            return it->second;
        std::size_t best = 0;
        std::optional<Bitset> arg;
        if (!cap_ || k + 1 <= *cap_) {
            std::vector<unsigned> required;
            for (auto m : (*ctx_.phi)[ctx_.u])
                if (m < k)
                    required.push_back(m);
            Bitset common = Bitset::full(ctx_.family->ground_size());
            s.for_each([&](std::size_t v) { common &= ctx_.family->members[v].set; });
            std::vector<std::size_t> outer;
            std::swap(outer, added_);
            extend(s, common, required, 0, k, best, arg);
            std::swap(outer, added_);
        }
        memo_[nk] = best;
        best_[nk] = arg;
        return best;
    }

    void extend(const Bitset& t, const Bitset& common, const std::vector<unsigned>& required, std::size_t i,
                unsigned k, std::size_t& best, std::optional<Bitset>& arg)
    {
        while (i < required.size() && std::any_of(added_.begin(), added_.end(), [&](std::size_t v) {
                   return ctx_.covers(v, required[i]);
               }))
            ++i;
        if (i == required.size()) {
            const std::size_t len = 1 + longest(t, k + 1);
            if (len > best || (len == best && arg && t < *arg)) {
                best = len;
                arg = t;
            }
            return;
        }
        for (std::size_t v = 0; v < ctx_.family->size(); ++v) {
            if (t.test(v) || !ctx_.covers(v, required[i]))
                continue;
            const Bitset next_common = common & ctx_.family->members[v].set;
            if (next_common.none())
                continue;
            Bitset next = t;
            next.set(v);
            added_.push_back(v);
            extend(next, next_common, required, i + 1, k, best, arg);
            added_.pop_back();
        }
    }

    const GulkoContext& ctx_;
    std::optional<unsigned> cap_;
    unsigned saturation_ = 0;
    std::vector<std::size_t> added_;
    std::unordered_map<NodeKey, std::size_t, NodeKeyHash> memo_;
    std::unordered_map<NodeKey, std::optional<Bitset>, NodeKeyHash> best_;
};

} // namespace detail

/// Longest <-increasing chain among nodes with k <= k_cap, starting at
/// (empty, 0). The start is optimal: every chain can be shifted down to it.
inline ChainResult max_increasing_chain(const CoverFamily& F, const PhiAssignment& phi, std::size_t u,
                                        unsigned k_cap, GulkoMode mode = GulkoMode::membership)
{
    if (F.size() > chain_search_member_cap)
        throw Error(ErrorCode::too_large, "chain search capped at " + std::to_string(chain_search_member_cap) +
                                              " members");
    const GulkoContext ctx(F, phi, u, mode);
    ChainResult r = detail::ChainSearch(ctx, k_cap).run();
    r.cap_too_small = detail::ChainSearch(ctx, k_cap + 1).run().length > r.length;
    return r;
}

/// The stabilized chain length: no cap on k.
inline ChainResult gulko_rank(const CoverFamily& F, const PhiAssignment& phi, std::size_t u,
                              GulkoMode mode = GulkoMode::membership)
{
    if (F.size() > chain_search_member_cap)
        throw Error(ErrorCode::too_large, "chain search capped at " + std::to_string(chain_search_member_cap) +
                                              " members");
    const GulkoContext ctx(F, phi, u, mode);
    return detail::ChainSearch(ctx, std::nullopt).run();
}

/// |members| + min phi(u) + 2.
inline std::size_t gulko_rank_bound(const CoverFamily& F, const PhiAssignment& phi, std::size_t u)
{
    return F.size() + phi[u].front() + 2;
}

/// The chain built by the well-foundedness argument around a point x:
/// start at (empty, 0); from (s, k) move to k + 1, adding for each
/// m in phi(u) below k + 1 the first member of Y_m outside s that contains
/// x. Stops when some required group has no such member left.
inline std::vector<GulkoNode> proof_replay(const CoverFamily& F, const PhiAssignment& phi, std::size_t u,
                                           std::size_t x)
{
    validate_phi(F, phi);
    if (x >= F.ground_size())
        throw Error(ErrorCode::invalid_argument, "no point with index " + std::to_string(x));
    std::vector<GulkoNode> chain{GulkoNode{Bitset(F.size()), 0}};
    while (true) {
        const GulkoNode& cur = chain.back();
        const unsigned k = cur.k + 1;
        Bitset next = cur.s;
        bool stuck = false;
        for (auto m : phi[u]) {
            if (m >= k)
                break;
            std::optional<std::size_t> pick;
            for (std::size_t v = 0; v < F.size() && !pick; ++v)
                if (!cur.s.test(v) && phi.contains(v, m) && F.members[v].set.test(x))
                    pick = v;
            if (!pick) {
                stuck = true;
                break;
            }
            next.set(*pick);
        }
        if (stuck)
            break;
        chain.push_back({std::move(next), k});
    }
    return chain;
}

/// Cantor pairing of (a, b).
inline unsigned cantor_pair(unsigned a, unsigned b) { return (a + b) * (a + b + 1) / 2 + b; }

inline std::pair<unsigned, unsigned> cantor_unpair(unsigned z)
{
    unsigned w = 0;
    while ((w + 1) * (w + 2) / 2 <= z)
        ++w;
    const unsigned b = z - w * (w + 1) / 2;
    return {w - b, b};
}

enum class RefinementOrder { stage_group, group_stage };

namespace detail {

inline CoverFamily refine(const CoverFamily& F, RefinementOrder order)
{
    validate_family(F);
    CoverFamily W;
    W.ground = F.ground;
    for (const auto& m : F.members) {
        if (m.stages.empty())
            throw Error(ErrorCode::missing_stages, "member '" + m.id + "' has no stages");
        for (unsigned k = 0; k < m.stages.size(); ++k) {
            Member w{m.id + "#" + std::to_string(k), m.stages[k], {}, {}};
            for (auto n : m.groups)
                w.groups.push_back(order == RefinementOrder::stage_group ? cantor_pair(k, n) : cantor_pair(n, k));
            normalize_groups(w.groups);
            W.members.push_back(std::move(w));
        }
    }
    return W;
}

} // namespace detail

/// Each staged member U becomes its stages W_k(U); W_k(U) joins group
/// pair(k, n) for every group n of U.
inline CoverFamily wiec_refinement(const CoverFamily& F) { return detail::refine(F, RefinementOrder::stage_group); }

/// Same, grouped by pair(n, k).
inline CoverFamily rosenthal_refinement(const CoverFamily& F)
{
    return detail::refine(F, RefinementOrder::group_stage);
}

struct RefinementReport {
    bool input_t0 = false;
    Verdict output_t0;
    /// ord(x, W_{k,n}) <= ord(x, Y_n); witness (x, refined group).
    Verdict ord_transfer;
    /// Largest centered part of W_{k,n} <= that of Y_n; witness: refined group.
    Verdict centered_transfer;
    bool t0_preserved() const { return !input_t0 || output_t0.holds; }
};

/// Checks a refinement W of F group by group, reading each refined group
/// back through the pairing.
inline RefinementReport refinement_report(const CoverFamily& F, const CoverFamily& W, RefinementOrder order)
{
    RefinementReport r;
    r.input_t0 = static_cast<bool>(is_T0_separating(F));
    r.output_t0 = is_T0_separating(W);
    std::vector<unsigned> refined_groups;
    for (const auto& m : W.members)
        refined_groups.insert(refined_groups.end(), m.groups.begin(), m.groups.end());
    normalize_groups(refined_groups);
    for (auto g : refined_groups) {
        const auto [first, second] = cantor_unpair(g);
        const unsigned n = order == RefinementOrder::stage_group ? second : first;
        const auto Wg = W.group(g);
        const auto Yn = F.group(n);
        for (std::size_t x = 0; x < F.ground_size() && r.ord_transfer; ++x)
            if (ord(W, x, Wg) > ord(F, x, Yn))
                r.ord_transfer = Verdict::fail({static_cast<ElementId>(x), g});
        if (r.centered_transfer && Wg.size() <= centered_scan_cap && Yn.size() <= centered_scan_cap &&
            centered_poset_rank(W, Wg).max_centered > centered_poset_rank(F, Yn).max_centered)
            r.centered_transfer = Verdict::fail({g});
    }
    return r;
}

/// Finite-threshold reading of weak sigma-point-finiteness: for every
/// point x, every member lies in some group n with ord(x, Y_n) < tau.
/// Witness: (x, member). With tau > |members| this always holds.
inline Verdict is_weakly_sigma_point_finite(const CoverFamily& F, std::optional<std::size_t> tau = std::nullopt)
{
    const std::size_t threshold = tau.value_or(F.size() + 1);
    const unsigned groups = F.max_group().value_or(0) + 1;
    for (std::size_t x = 0; x < F.ground_size(); ++x) {
        std::vector<bool> small(groups);
        for (unsigned n = 0; n < groups; ++n)
            small[n] = ord(F, x, F.group(n)) < threshold;
        for (std::size_t u = 0; u < F.size(); ++u) {
            const auto& g = F.members[u].groups;
            if (std::none_of(g.begin(), g.end(), [&](unsigned n) { return small[n]; }))
                return Verdict::fail({static_cast<ElementId>(x), static_cast<ElementId>(u)});
        }
    }
    return Verdict::pass();
}

/// Lattice elements as clopen sets of ult(L): the ground set is the
/// ultrafilter space, each listed element a becomes a+ in group groups[i].
inline CoverFamily family_from_elements(LatticePtr L, const std::vector<ElementId>& elements,
                                        const std::vector<unsigned>& groups)
{
    if (groups.size() != elements.size())
        throw Error(ErrorCode::invalid_argument, "one group per element is required");
    const WallmanSpace ult = build_space(L, SpaceKind::ultra);
    CoverFamily F;
    for (std::size_t p = 0; p < ult.point_count(); ++p)
        F.ground.push_back(ult.point_name(p));
    for (std::size_t i = 0; i < elements.size(); ++i)
        F.members.push_back({L->element_name(elements[i]), ult.plus(elements[i]), {groups[i]}, {}});
    return F;
}

} // namespace wallman

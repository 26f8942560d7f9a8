#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bitset.hpp"
#include "error.hpp"
#include "filters.hpp"
#include "lattice.hpp"
#include "properties.hpp"

namespace wallman {

enum class SpaceKind { prime, ultra };

inline const char* to_string(SpaceKind k) { return k == SpaceKind::prime ? "prime" : "ultra"; }

/// Spaces with more points than this keep only the closed base; the full
/// family of closed sets is not materialized.
inline constexpr std::size_t topology_point_cap = 14;

/// Prime filters (Pf) or ultrafilters (ult) of a finite lattice with the
/// topology generated by the sets a- = {p : a not in p}.
///
/// Points are ordered by the id of their least element and carry their
/// filter bitsets, so a point prints as the principal filter it is.
struct WallmanSpace {
    LatticePtr lattice;
    SpaceKind kind = SpaceKind::ultra;
    std::vector<FilterSet> points;
    std::vector<ElementId> point_min;
    /// closed_base[a] = a+, the points containing a.
    std::vector<Bitset> closed_base;
    /// Every closed set, sorted; empty unless topology_materialized.
    std::vector<Bitset> closed_sets;
    bool topology_materialized = false;

    std::size_t point_count() const { return points.size(); }
    const Bitset& plus(ElementId a) const { return closed_base[a]; }
    Bitset minus(ElementId a) const { return ~closed_base[a]; }
    Bitset all_points() const { return Bitset::full(point_count()); }

    std::string point_name(std::size_t p) const { return "^" + lattice->element_name(point_min[p]); }

    std::optional<std::size_t> index_of(const Bitset& filter) const
    {
        for (std::size_t i = 0; i < points.size(); ++i)
            if (points[i].members == filter)
                return i;
        return std::nullopt;
    }

    /// Closure of one point: the intersection of the basic closed sets
    /// containing it.
    Bitset point_closure(std::size_t p) const
    {
        Bitset acc = all_points();
        for (const auto& c : closed_base)
            if (c.test(p))
                acc &= c;
        return acc;
    }

    /// Smallest open set containing p: the complement of every basic closed
    /// set that misses p.
    Bitset minimal_neighbourhood(std::size_t p) const
    {
        Bitset missed(point_count());
        for (const auto& c : closed_base)
            if (!c.test(p))
                missed |= c;
        return ~missed;
    }

    /// In a finite space the closure of S is the union of its point closures.
    Bitset closure(const Bitset& S) const
    {
        Bitset acc(point_count());
        S.for_each([&](std::size_t p) { acc |= point_closure(p); });
        return acc;
    }

    bool is_closed(const Bitset& S) const { return closure(S) == S; }
};

namespace detail {

// Close the base (plus the empty and full sets) under pairwise union and
// intersection: that is exactly the closed sets of the generated topology.
inline std::vector<Bitset> generate_closed_sets(const std::vector<Bitset>& base, std::size_t points)
{
    std::unordered_set<Bitset, BitsetHash> seen;
    std::vector<Bitset> family;
    auto add = [&](Bitset s) {
        if (seen.insert(s).second)
            family.push_back(std::move(s));
    };
    add(Bitset(points));
    add(Bitset::full(points));
    for (const auto& b : base)
        add(b);
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            add(family[i] | family[j]);
            add(family[i] & family[j]);
        }
    std::sort(family.begin(), family.end());
    return family;
}

} // namespace detail

/// Enumerate the points, materialize a -> a+, and (for small spaces) the
/// full family of closed sets. Without an explicit strategy, distributive
/// lattices use the fast enumeration and the rest the brute one.
inline WallmanSpace build_space(LatticePtr L, SpaceKind kind, std::optional<Strategy> strategy = std::nullopt)
{
    require_nondegenerate(*L);
    WallmanSpace S;
    S.lattice = L;
    S.kind = kind;
    S.points = enumerate_filters(*L, kind == SpaceKind::prime ? FilterClass::prime : FilterClass::ultra,
                                 strategy.value_or(default_strategy(*L)));
    for (const auto& p : S.points)
        S.point_min.push_back(L->meet_of(p.members));
    S.closed_base.assign(L->size(), Bitset(S.points.size()));
    for (std::size_t i = 0; i < S.points.size(); ++i)
        S.points[i].members.for_each([&](std::size_t a) { S.closed_base[a].set(i); });
    if (S.points.size() <= topology_point_cap) {
        S.closed_sets = detail::generate_closed_sets(S.closed_base, S.points.size());
        S.topology_materialized = true;
    }
    return S;
}

inline WallmanSpace build_space(const FiniteLattice& L, SpaceKind kind, std::optional<Strategy> strategy = std::nullopt)
{
    return build_space(share(L), kind, strategy);
}

/// a -> a+ preserves meet, join and both bounds. Witness: (a, b), or a
/// single bound.
inline Verdict check_base_homomorphism(const WallmanSpace& S)
{
    const FiniteLattice& L = *S.lattice;
    if (S.plus(L.bottom()).any())
        return Verdict::fail({L.bottom()});
    if (S.plus(L.top()) != S.all_points())
        return Verdict::fail({L.top()});
    for (ElementId a = 0; a < L.size(); ++a)
        for (ElementId b = a + 1; b < L.size(); ++b)
            if (S.plus(L.meet(a, b)) != (S.plus(a) & S.plus(b)) || S.plus(L.join(a, b)) != (S.plus(a) | S.plus(b)))
                return Verdict::fail({a, b});
    return Verdict::pass();
}

/// Separation axioms. Witnesses are point-index pairs.
struct SeparationReport {
    Verdict t0;
    Verdict t1;
    Verdict hausdorff;
};

inline SeparationReport separation_axioms(const WallmanSpace& S)
{
    SeparationReport r;
    const std::size_t n = S.point_count();
    std::vector<Bitset> closure(n), nbhd(n);
    for (std::size_t p = 0; p < n; ++p) {
        closure[p] = S.point_closure(p);
        nbhd[p] = S.minimal_neighbourhood(p);
    }
    auto pair = [](std::size_t p, std::size_t q) {
        return std::vector<ElementId>{static_cast<ElementId>(p), static_cast<ElementId>(q)};
    };
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) {
            const bool split = std::any_of(S.closed_base.begin(), S.closed_base.end(),
                                           [&](const Bitset& c) { return c.test(p) != c.test(q); });
            if (r.t0 && !split)
                r.t0 = Verdict::fail(pair(p, q));
            if (r.t1 && (closure[p].test(q) || closure[q].test(p)))
                r.t1 = closure[p].test(q) ? Verdict::fail(pair(p, q)) : Verdict::fail(pair(q, p));
            if (r.hausdorff && nbhd[p].intersects(nbhd[q]))
                r.hausdorff = Verdict::fail(pair(p, q));
        }
    return r;
}

/// One clause of the prime/ultrafilter space theorem, evaluated on a
/// finite lattice. Observed-only clauses are reported but never fail the
/// suite.
struct SuiteClause {
    std::string id;
    std::string statement;
    bool asserted = true;
    bool evaluated = true;
    bool holds = true;
    std::string note;
};

struct SuiteReport {
    std::string lattice;
    bool distributive = true;
    bool normal = false;
    bool separative = false;
    bool boolean = false;
    std::size_t prime_points = 0;
    std::size_t ultra_points = 0;
    std::vector<SuiteClause> clauses;

    /// Every asserted, evaluated clause holds.
    bool consistent() const
    {
        return std::all_of(clauses.begin(), clauses.end(),
                           [](const SuiteClause& c) { return !c.asserted || !c.evaluated || c.holds; });
    }

    const SuiteClause* find(const std::string& id) const
    {
        for (const auto& c : clauses)
            if (c.id == id)
                return &c;
        return nullptr;
    }
};

/// Finite-scale shadows of the Pf/ult space theorem for a distributive
/// lattice. Each biconditional is split into its two implications. The
/// converse "ult Hausdorff implies normal" is observed, not asserted: the
/// finite, non-normal lattice fivepoint has a discrete ultrafilter space.
inline SuiteReport vbeer_suite(LatticePtr L)
{
    if (auto d = is_distributive(*L); !d)
        throw Error(ErrorCode::not_distributive, "the space suite needs a distributive lattice", d.witness);
    SuiteReport r;
    r.lattice = L->name();
    r.normal = static_cast<bool>(is_normal(*L));
    r.separative = static_cast<bool>(is_separative(*L));
    r.boolean = static_cast<bool>(is_boolean(*L));

    const WallmanSpace pf = build_space(L, SpaceKind::prime);
    const WallmanSpace ult = build_space(L, SpaceKind::ultra);
    r.prime_points = pf.point_count();
    r.ultra_points = ult.point_count();
    const SeparationReport pf_sep = separation_axioms(pf);
    const SeparationReport ult_sep = separation_axioms(ult);

    std::vector<Bitset> pf_ult_points;
    for (const auto& p : pf.points)
        pf_ult_points.push_back(p.members);
    bool ult_equals_pf = ult.point_count() == pf.point_count();
    for (const auto& u : ult.points)
        ult_equals_pf = ult_equals_pf && pf.index_of(u.members).has_value();

    auto add = [&](std::string id, std::string statement, bool holds, bool asserted = true, std::string note = {}) {
        r.clauses.push_back({std::move(id), std::move(statement), asserted, true, holds, std::move(note)});
    };

    add("a.T0", "Pf is T0", static_cast<bool>(pf_sep.t0));
    add("a.T1=>Boolean", "Pf T1 implies L Boolean", !pf_sep.t1 || r.boolean);
    add("a.Boolean=>T2", "L Boolean implies Pf Hausdorff", !r.boolean || pf_sep.hausdorff);

    SuiteClause b{"b.closed=a+", "closed sets of Pf are exactly the sets a+", true, pf.topology_materialized, true,
                  {}};
    if (pf.topology_materialized) {
        std::vector<Bitset> base = pf.closed_base;
        std::sort(base.begin(), base.end());
        base.erase(std::unique(base.begin(), base.end()), base.end());
        b.holds = base == pf.closed_sets;
    } else {
        b.note = "Pf has more than " + std::to_string(topology_point_cap) + " points; topology not materialized";
    }
    r.clauses.push_back(std::move(b));

    add("c.T1", "ult is T1", static_cast<bool>(ult_sep.t1));
    add("c.normal=>T2", "L normal implies ult Hausdorff", !r.normal || ult_sep.hausdorff);
    add("c.T2=>normal", "ult Hausdorff implies L normal", !ult_sep.hausdorff || r.normal, false,
        "observed only; fails on finite non-separative lattices such as fivepoint");
    add("d.ult=Pf=>Boolean", "ult = Pf implies L Boolean", !ult_equals_pf || r.boolean);
    add("d.Boolean=>ult=Pf", "L Boolean implies ult = Pf", !r.boolean || ult_equals_pf);
    return r;
}

inline SuiteReport vbeer_suite(const FiniteLattice& L) { return vbeer_suite(share(L)); }

/// separative and distributive implies Boolean, evaluated on L.
inline bool finite_separative_is_boolean(const FiniteLattice& L)
{
    const bool antecedent = is_separative(L) && is_distributive(L);
    return !antecedent || static_cast<bool>(is_boolean(L));
}

inline void require_generating(const FiniteLattice& L, const Bitset& G)
{
    if (generated_sublattice(L, G) != L.all())
        throw Error(ErrorCode::not_generating, "the given set does not generate '" + L.name() + "'");
}

/// Is the ultrafilter p generated by its trace p meet G on a generating
/// set G, i.e. [p meet G) = p?
inline bool ultrafilter_generated_by(const FiniteLattice& L, const Bitset& G, const Bitset& p)
{
    require_nondegenerate(L);
    require_generating(L, G);
    if (auto u = is_ultrafilter(L, p); !u)
        throw Error(ErrorCode::precondition_failed, "p is not an ultrafilter", u.witness);
    return generated_filter(L, p & G).members == p;
}

struct AlexanderReport {
    bool generator_side = true;
    bool lattice_side = true;
    std::size_t generator_centered_sets = 0;
    std::size_t lattice_centered_sets = 0;
    bool agree() const { return generator_side == lattice_side; }
};

inline constexpr std::size_t alexander_cap = 20;

namespace detail {

// Visit every centered subset of `pool` (including the empty one) and
// report whether each one's sets a+ share an ultrafilter.
inline void scan_centered(const FiniteLattice& L, const WallmanSpace& ult, const std::vector<ElementId>& pool,
                          std::size_t from, ElementId running_meet, const Bitset& running_points, bool& all_hit,
                          std::size_t& count)
{
    ++count;
    if (running_points.none())
        all_hit = false;
    for (std::size_t i = from; i < pool.size(); ++i) {
        const ElementId m = L.meet(running_meet, pool[i]);
        if (m == L.bottom())
            continue;
        scan_centered(L, ult, pool, i + 1, m, running_points & ult.plus(pool[i]), all_hit, count);
    }
}

} // namespace detail

/// Finite compactness through a subbase: every centered subset of G has
/// a common ultrafilter, and likewise for every centered subset of L.
/// Both sides are computed and compared.
inline AlexanderReport alexander_check(LatticePtr L, const Bitset& G)
{
    require_nondegenerate(*L);
    require_generating(*L, G);
    if (L->size() > alexander_cap)
        throw Error(ErrorCode::too_large, "centered-subset scan capped at " + std::to_string(alexander_cap) +
                                              " elements");
    const WallmanSpace ult = build_space(L, SpaceKind::ultra);
    AlexanderReport r;
    std::vector<ElementId> gens, everything;
    G.for_each([&](std::size_t g) { gens.push_back(static_cast<ElementId>(g)); });
    for (ElementId a = 0; a < L->size(); ++a)
        everything.push_back(a);
    detail::scan_centered(*L, ult, gens, 0, L->top(), ult.all_points(), r.generator_side, r.generator_centered_sets);
    detail::scan_centered(*L, ult, everything, 0, L->top(), ult.all_points(), r.lattice_side,
                          r.lattice_centered_sets);
    return r;
}

} // namespace wallman

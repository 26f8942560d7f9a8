#pragma once

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bitset.hpp"
#include "error.hpp"
#include "filters.hpp"
#include "lattice.hpp"
#include "properties.hpp"
#include "space.hpp"

namespace wallman {

/// A map between finite lattices, not yet known to be a homomorphism.
struct LatticeHom {
    LatticePtr source;
    LatticePtr target;
    std::vector<ElementId> map;

    ElementId operator()(ElementId a) const { return map[a]; }

    /// h^-1(S) for S a set of target elements.
    Bitset preimage(const Bitset& S) const
    {
        Bitset out(source->size());
        for (ElementId a = 0; a < source->size(); ++a)
            if (S.test(map[a]))
                out.set(a);
        return out;
    }

    Bitset image() const
    {
        Bitset out(target->size());
        for (auto b : map)
            out.set(b);
        return out;
    }

    /// h^-1(0).
    Bitset kernel() const { return preimage(Bitset(target->size(), {target->bottom()})); }
};

inline LatticeHom identity_hom(LatticePtr L)
{
    LatticeHom h{L, L, std::vector<ElementId>(L->size())};
    for (ElementId a = 0; a < L->size(); ++a)
        h.map[a] = a;
    return h;
}

/// Build a map from element-name pairs. Every source element must be
/// mapped exactly once.
inline LatticeHom make_hom(LatticePtr source, LatticePtr target,
                           const std::vector<std::pair<std::string, std::string>>& pairs)
{
    std::vector<bool> seen(source->size(), false);
    LatticeHom h{source, target, std::vector<ElementId>(source->size(), 0)};
    for (const auto& [x, y] : pairs) {
        const ElementId a = source->id(x);
        if (seen[a])
            throw Error(ErrorCode::invalid_argument, "element '" + x + "' is mapped twice", {a});
        seen[a] = true;
        h.map[a] = target->id(y);
    }
    for (ElementId a = 0; a < source->size(); ++a)
        if (!seen[a])
            throw Error(ErrorCode::invalid_argument, "element '" + source->element_name(a) + "' is not mapped", {a});
    return h;
}

/// Preserves meet, join, 0 and 1. Witness: the pair (a, b), or a single
/// bound.
inline Verdict verify_hom(const LatticeHom& h)
{
    const FiniteLattice& K = *h.source;
    const FiniteLattice& L = *h.target;
    if (h(K.bottom()) != L.bottom())
        return Verdict::fail({K.bottom()});
    if (h(K.top()) != L.top())
        return Verdict::fail({K.top()});
    for (ElementId a = 0; a < K.size(); ++a)
        for (ElementId b = a + 1; b < K.size(); ++b)
            if (h(K.meet(a, b)) != L.meet(h(a), h(b)) || h(K.join(a, b)) != L.join(h(a), h(b)))
                return Verdict::fail({a, b});
    return Verdict::pass();
}

inline void require_hom(const LatticeHom& h)
{
    if (auto v = verify_hom(h); !v)
        throw Error(ErrorCode::precondition_failed, "map is not a lattice homomorphism", v.witness);
}

/// g after h. Needs target(h) == source(g).
inline LatticeHom compose(const LatticeHom& g, const LatticeHom& h)
{
    if (h.target != g.source && !(*h.target == *g.source))
        throw Error(ErrorCode::not_composable,
                    "target '" + h.target->name() + "' differs from source '" + g.source->name() + "'");
    LatticeHom gh{h.source, g.target, std::vector<ElementId>(h.source->size())};
    for (ElementId a = 0; a < h.source->size(); ++a)
        gh.map[a] = g(h(a));
    return gh;
}

using SpacePtr = std::shared_ptr<const WallmanSpace>;

/// A map between the point sets of two Wallman spaces.
struct SpaceMap {
    SpacePtr source;
    SpacePtr target;
    std::vector<std::size_t> point_map;

    std::size_t operator()(std::size_t p) const { return point_map[p]; }

    Bitset preimage(const Bitset& T) const
    {
        Bitset out(source->point_count());
        for (std::size_t p = 0; p < point_map.size(); ++p)
            if (T.test(point_map[p]))
                out.set(p);
        return out;
    }

    bool injective() const
    {
        Bitset hit(target->point_count());
        for (auto q : point_map) {
            if (hit.test(q))
                return false;
            hit.set(q);
        }
        return true;
    }

    bool surjective() const
    {
        Bitset hit(target->point_count());
        for (auto q : point_map)
            hit.set(q);
        return hit.count() == target->point_count();
    }
};

/// The preimage of every basic closed set of the target is closed.
/// Witness: the target-lattice element whose a+ pulls back to a non-closed set.
inline Verdict is_continuous(const SpaceMap& f)
{
    for (ElementId a = 0; a < f.target->closed_base.size(); ++a)
        if (!f.source->is_closed(f.preimage(f.target->plus(a))))
            return Verdict::fail({a});
    return Verdict::pass();
}

/// p -> q pointwise, checking both maps go between the same spaces.
inline bool same_point_map(const SpaceMap& f, const SpaceMap& g)
{
    auto same_points = [](const WallmanSpace& x, const WallmanSpace& y) {
        if (x.point_count() != y.point_count())
            return false;
        for (std::size_t i = 0; i < x.point_count(); ++i)
            if (x.points[i].members != y.points[i].members)
                return false;
        return true;
    };
    return same_points(*f.source, *g.source) && same_points(*f.target, *g.target) && f.point_map == g.point_map;
}

/// f after g.
inline SpaceMap compose(const SpaceMap& f, const SpaceMap& g)
{
    if (g.target->point_count() != f.source->point_count())
        throw Error(ErrorCode::not_composable, "space maps do not compose");
    for (std::size_t i = 0; i < f.source->point_count(); ++i)
        if (g.target->points[i].members != f.source->points[i].members)
            throw Error(ErrorCode::not_composable, "space maps do not compose");
    SpaceMap fg{g.source, f.target, std::vector<std::size_t>(g.point_map.size())};
    for (std::size_t p = 0; p < g.point_map.size(); ++p)
        fg.point_map[p] = f(g(p));
    return fg;
}

struct InducedOptions {
    /// Refuse non-normal source or target lattices.
    bool require_normal = true;
};

/// ult h : ult(target) -> ult(source), sending p to the unique ultrafilter
/// extending h^-1(p). When h^-1(p) is already maximal it is used as is.
inline SpaceMap induced_map(const LatticeHom& h, InducedOptions options = {})
{
    require_hom(h);
    const FiniteLattice& K = *h.source;
    const FiniteLattice& L = *h.target;
    if (options.require_normal) {
        for (const FiniteLattice* M : {&K, &L})
            if (auto nv = is_normal(*M, NormalityMode::report_only); !nv)
                throw Error(ErrorCode::not_normal, "'" + M->name() + "' is not normal", nv.witness);
    }
    auto from = std::make_shared<const WallmanSpace>(build_space(h.target, SpaceKind::ultra));
    auto to = std::make_shared<const WallmanSpace>(build_space(h.source, SpaceKind::ultra));
    SpaceMap f{from, to, std::vector<std::size_t>(from->point_count())};
    for (std::size_t p = 0; p < from->point_count(); ++p) {
        const Bitset pulled = h.preimage(from->points[p].members);
        const Bitset ext =
            is_ultrafilter(K, pulled) ? pulled : unique_ultrafilter_extension(K, pulled, {false}).members;
        const auto q = to->index_of(ext);
        if (!q)
            throw std::logic_error("extension is not among the enumerated ultrafilters");
        f.point_map[p] = *q;
    }
    if (!is_continuous(f))
        throw std::logic_error("induced map is not continuous");
    return f;
}

/// h(a) meet b = 0 implies some c with a meet c = 0 and b <= h(c).
/// Witness: (a, b) with a in the source and b in the target.
inline Verdict is_separative_hom(const LatticeHom& h)
{
    const FiniteLattice& K = *h.source;
    const FiniteLattice& L = *h.target;
    for (ElementId a = 0; a < K.size(); ++a)
        for (ElementId b = 0; b < L.size(); ++b) {
            if (L.meet(h(a), b) != L.bottom())
                continue;
            bool found = false;
            for (ElementId c = 0; c < K.size() && !found; ++c)
                found = K.meet(a, c) == K.bottom() && L.leq(b, h(c));
            if (!found)
                return Verdict::fail({a, b});
        }
    return Verdict::pass();
}

struct EquivalenceReport {
    Verdict separative;        // (a)
    Verdict preimage_ultra;    // (b): witness is an ultrafilter index of ult(target)
    Verdict pulls_back_base;   // (c): witness is a source element a
    bool equivalent() const
    {
        return separative.holds == preimage_ultra.holds && preimage_ultra.holds == pulls_back_base.holds;
    }
};

/// Three conditions on h that coincide for homomorphisms of normal
/// separative lattices: (a) h separative, (b) h^-1(p) maximal for every
/// ultrafilter p, (c) (ult h)^-1(a+) = h(a)+ for every a. `checked`
/// enforces the hypotheses; unchecked mode evaluates the three anyway.
inline EquivalenceReport mbeer_equivalence(const LatticeHom& h, bool checked = true)
{
    require_hom(h);
    if (checked) {
        std::string failures;
        for (const FiniteLattice* M : {h.source.get(), h.target.get()}) {
            if (!is_normal(*M, NormalityMode::report_only))
                failures += " '" + M->name() + "' not normal;";
            if (!is_separative(*M))
                failures += " '" + M->name() + "' not separative;";
        }
        if (!failures.empty())
            throw Error(ErrorCode::precondition_failed, "hypotheses fail:" + failures.substr(0, failures.size() - 1));
    }
    EquivalenceReport r;
    r.separative = is_separative_hom(h);

    const SpaceMap f = induced_map(h, {false});
    for (std::size_t p = 0; p < f.source->point_count(); ++p)
        if (!is_ultrafilter(*h.source, h.preimage(f.source->points[p].members))) {
            r.preimage_ultra = Verdict::fail({static_cast<ElementId>(p)});
            break;
        }
    for (ElementId a = 0; a < h.source->size(); ++a)
        if (f.preimage(f.target->plus(a)) != f.source->plus(h(a))) {
            r.pulls_back_base = Verdict::fail({a});
            break;
        }
    return r;
}

struct FunctorReport {
    /// ult(g o h) = ult(h) o ult(g); witness: a point of ult(target of g).
    Verdict composition;
    /// ult(id) = id on each of the three lattices involved.
    bool identities = true;
};

inline bool induced_identity_is_identity(LatticePtr L)
{
    const SpaceMap f = induced_map(identity_hom(L));
    for (std::size_t p = 0; p < f.point_map.size(); ++p)
        if (f(p) != p)
            return false;
    return true;
}

/// Contravariance on the composable pair h : K -> L, g : L -> M.
inline FunctorReport functor_laws(const LatticeHom& g, const LatticeHom& h)
{
    const LatticeHom gh = compose(g, h);
    const SpaceMap ult_gh = induced_map(gh);
    const SpaceMap ult_h_after_ult_g = compose(induced_map(h), induced_map(g));
    FunctorReport r;
    if (!same_point_map(ult_gh, ult_h_after_ult_g)) {
        for (std::size_t p = 0; p < ult_gh.point_map.size(); ++p)
            if (ult_gh(p) != ult_h_after_ult_g(p)) {
                r.composition = Verdict::fail({static_cast<ElementId>(p)});
                break;
            }
        if (r.composition)
            r.composition = Verdict::fail({});
    }
    r.identities = induced_identity_is_identity(h.source) && induced_identity_is_identity(h.target) &&
                   induced_identity_is_identity(g.target);
    return r;
}

/// An implication checked on one instance: `antecedent` implies
/// `consequent`. The consequent is still computed and reported when the
/// antecedent fails.
struct ImplicationReport {
    bool antecedent = false;
    bool consequent = false;
    bool holds() const { return !antecedent || consequent; }
};

/// Trivial kernel h^-1(0) = {0} implies ult h onto.
inline ImplicationReport surjectivity_from_kernel(const LatticeHom& h)
{
    const SpaceMap f = induced_map(h);
    const Bitset kernel = h.kernel();
    return {kernel.count() == 1 && kernel.test(h.source->bottom()), f.surjective()};
}

/// K separates L: for disjoint a, b in L some c in K has a <= c and
/// c meet b = 0. Witness: (a, b).
inline Verdict separates(const FiniteLattice& L, const Bitset& K)
{
    for (ElementId a = 0; a < L.size(); ++a)
        for (ElementId b = 0; b < L.size(); ++b) {
            if (L.meet(a, b) != L.bottom())
                continue;
            bool found = false;
            K.for_each([&](std::size_t c) {
                if (!found && L.leq(a, static_cast<ElementId>(c)) && L.meet(static_cast<ElementId>(c), b) == L.bottom())
                    found = true;
            });
            if (!found)
                return Verdict::fail({a, b});
        }
    return Verdict::pass();
}

/// Image of h separates the target implies ult h one-to-one.
inline ImplicationReport embedding_from_separation(const LatticeHom& h)
{
    const SpaceMap f = induced_map(h);
    return {static_cast<bool>(separates(*h.target, h.image())), f.injective()};
}

struct AlexandrovResult {
    /// Subalgebra of the powerset of ult(L) generated by the sets a+.
    LatticePtr algebra;
    /// a -> a+.
    LatticeHom j;
    /// ult(j) : ult(algebra) -> ult(L).
    SpaceMap ult_j;
    bool algebra_boolean = false;
    /// ult(algebra) is T1, hence discrete: the 0-dimensional cover.
    bool zero_dimensional = false;
    Bitset kernel;
    bool kernel_trivial = false;
    bool onto = false;
};

namespace detail {

inline std::string point_set_name(const WallmanSpace& S, const Bitset& points)
{
    std::string out = "{";
    bool first = true;
    points.for_each([&](std::size_t p) {
        out += (first ? "" : ",") + S.point_name(p);
        first = false;
    });
    return out + "}";
}

} // namespace detail

/// Finite Alexandrov cover: every distributive L maps onto the ultrafilter
/// space of a Boolean algebra through j(a) = a+.
inline AlexandrovResult alexandrov(LatticePtr L)
{
    require_nondegenerate(*L);
    if (auto d = is_distributive(*L); !d)
        throw Error(ErrorCode::not_distributive, "the cover construction needs a distributive lattice", d.witness);
    const WallmanSpace ult = build_space(L, SpaceKind::ultra);

    // Close {a+} under complement, union and intersection.
    std::vector<Bitset> family;
    std::unordered_set<Bitset, BitsetHash> seen;
    auto add = [&](const Bitset& s) {
        if (seen.insert(s).second)
            family.push_back(s);
    };
    for (const auto& c : ult.closed_base)
        add(c);
    for (std::size_t i = 0; i < family.size(); ++i) {
        add(~family[i]);
        for (std::size_t k = 0; k < i; ++k) {
            add(family[i] | family[k]);
            add(family[i] & family[k]);
        }
    }
    std::sort(family.begin(), family.end(), [](const Bitset& x, const Bitset& y) {
        return x.count() != y.count() ? x.count() < y.count() : x < y;
    });

    std::vector<std::string> names;
    std::vector<Bitset> up(family.size(), Bitset(family.size()));
    for (std::size_t i = 0; i < family.size(); ++i) {
        names.push_back(detail::point_set_name(ult, family[i]));
        for (std::size_t k = 0; k < family.size(); ++k)
            if (family[i].is_subset_of(family[k]))
                up[i].set(k);
    }
    AlexandrovResult r;
    r.algebra = share(FiniteLattice::from_order("B(" + L->name() + ")", std::move(names), std::move(up)));
    r.j = LatticeHom{L, r.algebra, std::vector<ElementId>(L->size())};
    for (ElementId a = 0; a < L->size(); ++a)
        r.j.map[a] = static_cast<ElementId>(
            std::find(family.begin(), family.end(), ult.closed_base[a]) - family.begin());
    if (auto v = verify_hom(r.j); !v)
        throw std::logic_error("a -> a+ is not a homomorphism");

    r.algebra_boolean = static_cast<bool>(is_boolean(*r.algebra));
    r.ult_j = induced_map(r.j, {false});
    r.zero_dimensional = r.algebra_boolean && static_cast<bool>(separation_axioms(*r.ult_j.source).t1);
    r.kernel = r.j.kernel();
    r.kernel_trivial = r.kernel.count() == 1;
    r.onto = r.ult_j.surjective();
    return r;
}

} // namespace wallman

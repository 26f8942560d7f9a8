#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bitset.hpp"
#include "error.hpp"
#include "lattice.hpp"

namespace wallman {

/// Above this size is_distributive switches from the triple scan to the
/// join-prime test.
inline constexpr std::size_t triple_scan_threshold = 128;

/// a meet (b join c) == (a meet b) join (a meet c) for every triple.
/// Witness: (a, b, c).
inline Verdict is_distributive_exhaustive(const FiniteLattice& L)
{
    const auto n = static_cast<ElementId>(L.size());
    for (ElementId a = 0; a < n; ++a)
        for (ElementId b = 0; b < n; ++b)
            for (ElementId c = b + 1; c < n; ++c)
                if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c)))
                    return Verdict::fail({a, b, c});
    return Verdict::pass();
}

/// A finite lattice is distributive iff every join-irreducible j is
/// join-prime, i.e. the complement of the principal filter at j has a
/// greatest element. On failure two maximal elements m1, m2 outside that
/// filter give the violating triple (j, m1, m2).
inline Verdict is_distributive_structural(const FiniteLattice& L)
{
    const Bitset ji = join_irreducibles(L);
    for (std::size_t j = ji.first(); j != Bitset::npos; j = ji.next(j + 1)) {
        const Bitset outside = ~L.up(static_cast<ElementId>(j));
        const std::size_t target = outside.count();
        bool principal = false;
        for (std::size_t m = outside.first(); m != Bitset::npos && !principal; m = outside.next(m + 1))
            principal = L.down_count(static_cast<ElementId>(m)) == target &&
                        L.down(static_cast<ElementId>(m)).is_subset_of(outside);
        if (principal)
            continue;
        std::vector<ElementId> maximal;
        for (std::size_t m = outside.first(); m != Bitset::npos && maximal.size() < 2; m = outside.next(m + 1))
            if (L.up(static_cast<ElementId>(m)).count_and(outside) == 1)
                maximal.push_back(static_cast<ElementId>(m));
        return Verdict::fail({static_cast<ElementId>(j), maximal.at(0), maximal.at(1)});
    }
    return Verdict::pass();
}

inline Verdict is_distributive(const FiniteLattice& L)
{
    if (L.size() <= triple_scan_threshold)
        return is_distributive_exhaustive(L);
    return is_distributive_structural(L);
}

/// Every disjoint pair (a, b) admits a1, b1 with a1 meet b = 0 = a meet b1
/// and a1 join b1 = 1, searched over all candidates. Witness: (a, b).
inline Verdict is_normal_exhaustive(const FiniteLattice& L)
{
    const auto n = static_cast<ElementId>(L.size());
    const ElementId zero = L.bottom(), one = L.top();
    std::vector<Bitset> disjoint_from(n, Bitset(n));
    for (ElementId a = 0; a < n; ++a)
        for (ElementId b = 0; b < n; ++b)
            if (L.meet(a, b) == zero)
                disjoint_from[a].set(b);
    for (ElementId a = 0; a < n; ++a) {
        for (ElementId b = a; b < n; ++b) {
            if (L.meet(a, b) != zero)
                continue;
            const Bitset& a1_choices = disjoint_from[b];
            const Bitset& b1_choices = disjoint_from[a];
            bool found = false;
            a1_choices.for_each([&](std::size_t a1) {
                if (found)
                    return;
                b1_choices.for_each([&](std::size_t b1) {
                    if (!found && L.join(static_cast<ElementId>(a1), static_cast<ElementId>(b1)) == one)
                        found = true;
                });
            });
            if (!found)
                return Verdict::fail({a, b});
        }
    }
    return Verdict::pass();
}

enum class NormalityMode { require_distributive, report_only };

/// Normality. Distributivity is checked first: in require_distributive
/// mode a non-distributive input raises NotDistributive; in report_only
/// mode the definitional search runs regardless.
///
/// For distributive L the elements disjoint from b have a largest member
/// b*, so the pair (a, b) is separable iff a* join b* = 1.
inline Verdict is_normal(const FiniteLattice& L, NormalityMode mode = NormalityMode::require_distributive)
{
    const Verdict distributive = is_distributive(L);
    if (!distributive) {
        if (mode == NormalityMode::require_distributive)
            throw Error(ErrorCode::not_distributive, "normality is defined for distributive lattices",
                        distributive.witness);
        return is_normal_exhaustive(L);
    }
    const auto n = static_cast<ElementId>(L.size());
    std::vector<ElementId> star(n);
    for (ElementId a = 0; a < n; ++a)
        star[a] = *pseudocomplement(L, a);
    for (ElementId a = 0; a < n; ++a)
        for (ElementId b = a; b < n; ++b)
            if (L.meet(a, b) == L.bottom() && L.join(star[a], star[b]) != L.top())
                return Verdict::fail({a, b});
    return Verdict::pass();
}

/// 0 < a, a not below b implies some c > 0 with c <= a and c meet b = 0,
/// searched over every c. Witness: (a, b).
inline Verdict is_separative_exhaustive(const FiniteLattice& L)
{
    const auto n = static_cast<ElementId>(L.size());
    for (ElementId a = 0; a < n; ++a) {
        if (a == L.bottom())
            continue;
        for (ElementId b = 0; b < n; ++b) {
            if (L.leq(a, b))
                continue;
            bool found = false;
            L.down(a).for_each([&](std::size_t c) {
                if (!found && c != L.bottom() && L.meet(static_cast<ElementId>(c), b) == L.bottom())
                    found = true;
            });
            if (!found)
                return Verdict::fail({a, b});
        }
    }
    return Verdict::pass();
}

/// Same predicate, using that c can always be shrunk to an atom: the
/// pair (a, b) is fine iff some atom lies below a but not below b.
inline Verdict is_separative(const FiniteLattice& L)
{
    const Bitset at = atoms(L);
    const auto n = static_cast<ElementId>(L.size());
    for (ElementId a = 0; a < n; ++a) {
        if (a == L.bottom())
            continue;
        const Bitset below_a = at & L.down(a);
        for (ElementId b = 0; b < n; ++b)
            if (!L.leq(a, b) && (below_a - L.down(b)).none())
                return Verdict::fail({a, b});
    }
    return Verdict::pass();
}

/// Distributive with every element complemented. Witness: the
/// distributivity triple, or a single uncomplemented element.
inline Verdict is_boolean(const FiniteLattice& L)
{
    if (auto d = is_distributive(L); !d)
        return d;
    for (ElementId a = 0; a < L.size(); ++a)
        if (!complement_of(L, a))
            return Verdict::fail({a});
    return Verdict::pass();
}

/// Commutativity, associativity, idempotence and both absorption laws of
/// the meet/join tables. Witness: the offending tuple.
inline Verdict check_lattice_laws(const FiniteLattice& L)
{
    const auto n = static_cast<ElementId>(L.size());
    for (ElementId a = 0; a < n; ++a) {
        if (L.meet(a, a) != a || L.join(a, a) != a)
            return Verdict::fail({a});
        for (ElementId b = 0; b < n; ++b) {
            if (L.meet(a, b) != L.meet(b, a) || L.join(a, b) != L.join(b, a))
                return Verdict::fail({a, b});
            if (L.meet(a, L.join(a, b)) != a || L.join(a, L.meet(a, b)) != a)
                return Verdict::fail({a, b});
            for (ElementId c = 0; c < n; ++c)
                if (L.meet(a, L.meet(b, c)) != L.meet(L.meet(a, b), c) ||
                    L.join(a, L.join(b, c)) != L.join(L.join(a, b), c))
                    return Verdict::fail({a, b, c});
        }
    }
    return Verdict::pass();
}

struct LatticeReport {
    bool is_lattice = true;
    Verdict distributive;
    Verdict normal;
    Verdict separative;
    Verdict boolean;
};

/// All structural predicates at once. Normality is evaluated in
/// report_only mode so non-distributive inputs still get an answer.
inline LatticeReport analyze(const FiniteLattice& L)
{
    LatticeReport r;
    r.distributive = is_distributive(L);
    r.normal = is_normal(L, NormalityMode::report_only);
    r.separative = is_separative(L);
    r.boolean = is_boolean(L);
    return r;
}

} // namespace wallman

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bitset.hpp"
#include "error.hpp"
#include "lattice.hpp"
#include "properties.hpp"

namespace wallman {

enum class FilterKind { filter, ideal, prime, ultra, unclassified };

inline const char* to_string(FilterKind k)
{
    switch (k) {
    case FilterKind::filter: return "filter";
    case FilterKind::ideal: return "ideal";
    case FilterKind::prime: return "prime";
    case FilterKind::ultra: return "ultra";
    case FilterKind::unclassified: return "unclassified";
    }
    return "unclassified";
}

/// A set of lattice elements tagged with what it is known to be.
struct FilterSet {
    Bitset members;
    FilterKind kind = FilterKind::unclassified;

    bool contains(ElementId a) const { return members.test(a); }
    friend bool operator==(const FilterSet&, const FilterSet&) = default;
};

enum class FilterClass { all, prime, ultra };

/// brute: one candidate per nonzero element (every finite filter is
/// principal), classified by definition. fast: join-irreducibles and atoms
/// of a distributive lattice. exhaustive: every subset of the carrier.
enum class Strategy { brute, fast, exhaustive };

inline constexpr std::size_t default_exhaustive_cap = 18;
inline constexpr std::size_t hard_exhaustive_cap = 30;

struct EnumerationLimits {
    std::size_t brute_max = max_elements;
    std::size_t exhaustive_max = default_exhaustive_cap;

    /// Defaults, with WALLMAN_MAX_BRUTE overriding the exhaustive cap.
    static EnumerationLimits from_env()
    {
        EnumerationLimits limits;
        if (const char* env = std::getenv("WALLMAN_MAX_BRUTE")) {
            char* end = nullptr;
            const unsigned long v = std::strtoul(env, &end, 10);
            if (end != env && *end == '\0')
                limits.exhaustive_max = std::min<std::size_t>(v, hard_exhaustive_cap);
        }
        return limits;
    }
};

inline void require_nondegenerate(const FiniteLattice& L)
{
    if (L.is_degenerate())
        throw Error(ErrorCode::degenerate_lattice, "filters need 0 != 1; '" + L.name() + "' has one element");
}

namespace detail {

// Filter axioms read in L (dual = false) or in the opposite of L
// (dual = true), without materializing the opposite.
inline Verdict check_filter_axioms(const FiniteLattice& L, const Bitset& S, bool dual)
{
    const ElementId low = dual ? L.top() : L.bottom();
    const ElementId high = dual ? L.bottom() : L.top();
    if (S.test(low))
        return Verdict::fail({low});
    if (!S.test(high))
        return Verdict::fail({high});
    std::vector<ElementId> ids;
    S.for_each([&](std::size_t x) { ids.push_back(static_cast<ElementId>(x)); });
    for (ElementId a : ids) {
        const Bitset& cone = dual ? L.down(a) : L.up(a);
        if (!cone.is_subset_of(S))
            return Verdict::fail({a, a, static_cast<ElementId>((cone - S).first())});
    }
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            const ElementId m = dual ? L.join(ids[i], ids[j]) : L.meet(ids[i], ids[j]);
            if (!S.test(m))
                return Verdict::fail({ids[i], ids[j], m});
        }
    return Verdict::pass();
}

inline Verdict prime_by_pairs(const FiniteLattice& L, const Bitset& F)
{
    const Bitset outside = ~F;
    for (std::size_t x = outside.first(); x != Bitset::npos; x = outside.next(x + 1))
        for (std::size_t y = outside.next(x + 1); y != Bitset::npos; y = outside.next(y + 1))
            if (F.test(L.join(static_cast<ElementId>(x), static_cast<ElementId>(y))))
                return Verdict::fail({static_cast<ElementId>(x), static_cast<ElementId>(y)});
    return Verdict::pass();
}

inline void sort_by_minimum(const FiniteLattice& L, std::vector<FilterSet>& filters)
{
    std::vector<std::pair<ElementId, FilterSet>> keyed;
    keyed.reserve(filters.size());
    for (auto& f : filters)
        keyed.emplace_back(L.meet_of(f.members), std::move(f));
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    filters.clear();
    for (auto& [_, f] : keyed)
        filters.push_back(std::move(f));
}

} // namespace detail

/// 0 not in S, 1 in S, and a, b in S puts everything above a meet b in S.
/// Witness: {0}, {1}, or (a, b, x) with x above a meet b but missing.
inline Verdict is_filter(const FiniteLattice& L, const Bitset& S)
{
    return detail::check_filter_axioms(L, S, false);
}

/// A filter of the opposite lattice.
inline Verdict is_ideal(const FiniteLattice& L, const Bitset& S)
{
    return detail::check_filter_axioms(L, S, true);
}

/// Every finite meet of members is nonzero. Checked as "the meet of all of
/// M is nonzero" and, when tables are available, by closing M under
/// pairwise meets; the two must agree.
inline bool is_centered(const FiniteLattice& L, const Bitset& M)
{
    const bool by_total_meet = L.meet_of(M) != L.bottom();
    if (L.has_tables()) {
        Bitset closed = M;
        std::vector<ElementId> members;
        M.for_each([&](std::size_t x) { members.push_back(static_cast<ElementId>(x)); });
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = 0; j < i; ++j) {
                const ElementId m = L.meet(members[i], members[j]);
                if (!closed.test(m)) {
                    closed.set(m);
                    members.push_back(m);
                }
            }
        const bool by_closure = !closed.test(L.bottom()) && !L.is_degenerate();
        if (by_closure != by_total_meet)
            throw std::logic_error("is_centered: total meet and meet closure disagree");
    }
    return by_total_meet;
}

/// [M): everything above some finite meet of M.
inline FilterSet generated_filter(const FiniteLattice& L, const Bitset& M)
{
    require_nondegenerate(L);
    if (!is_centered(L, M))
        throw Error(ErrorCode::not_centered, "generating set has a zero meet");
    return {L.up(L.meet_of(M)), FilterKind::filter};
}

/// a join b in F forces a in F or b in F. Cross-checked against "the
/// complement of F is an ideal". Witness: (a, b) outside F with join in F.
inline Verdict is_prime(const FiniteLattice& L, const Bitset& F)
{
    if (auto f = is_filter(L, F); !f)
        throw Error(ErrorCode::not_a_filter, "primality is defined for filters", f.witness);
    Verdict by_pairs = detail::prime_by_pairs(L, F);
    const bool complement_is_ideal = static_cast<bool>(is_ideal(L, ~F));
    if (complement_is_ideal != by_pairs.holds)
        throw std::logic_error("is_prime: pair scan and complement-ideal test disagree");
    return by_pairs;
}

inline Verdict is_prime(const FiniteLattice& L, const FilterSet& F) { return is_prime(L, F.members); }

/// Maximality via its finite characterization: every a outside F is
/// disjoint from some b in F. Witness: that a.
inline Verdict is_ultrafilter(const FiniteLattice& L, const Bitset& F)
{
    if (auto f = is_filter(L, F); !f)
        throw Error(ErrorCode::not_a_filter, "maximality is defined for filters", f.witness);
    const Bitset outside = ~F;
    for (std::size_t a = outside.first(); a != Bitset::npos; a = outside.next(a + 1)) {
        bool disjoint = false;
        for (std::size_t b = F.first(); b != Bitset::npos && !disjoint; b = F.next(b + 1))
            disjoint = L.meet(static_cast<ElementId>(a), static_cast<ElementId>(b)) == L.bottom();
        if (!disjoint)
            return Verdict::fail({static_cast<ElementId>(a)});
    }
    return Verdict::pass();
}

namespace detail {

inline std::vector<FilterSet> enumerate_brute(const FiniteLattice& L, FilterClass cls)
{
    std::vector<FilterSet> out;
    for (ElementId a = 0; a < L.size(); ++a) {
        if (a == L.bottom())
            continue;
        const Bitset& F = L.up(a);
        if (!is_filter(L, F))
            throw std::logic_error("principal filter failed the filter axioms");
        switch (cls) {
        case FilterClass::all: out.push_back({F, FilterKind::filter}); break;
        case FilterClass::prime:
            if (detail::prime_by_pairs(L, F))
                out.push_back({F, FilterKind::prime});
            break;
        case FilterClass::ultra:
            if (is_ultrafilter(L, F))
                out.push_back({F, FilterKind::ultra});
            break;
        }
    }
    return out;
}

inline std::vector<FilterSet> enumerate_fast(const FiniteLattice& L, FilterClass cls)
{
    if (auto d = is_distributive(L); !d)
        throw Error(ErrorCode::not_distributive, "fast enumeration needs a distributive lattice", d.witness);
    std::vector<FilterSet> out;
    switch (cls) {
    case FilterClass::all:
        for (ElementId a = 0; a < L.size(); ++a)
            if (a != L.bottom())
                out.push_back({L.up(a), FilterKind::filter});
        break;
    case FilterClass::prime:
        join_irreducibles(L).for_each(
            [&](std::size_t j) { out.push_back({L.up(static_cast<ElementId>(j)), FilterKind::prime}); });
        break;
    case FilterClass::ultra:
        atoms(L).for_each(
            [&](std::size_t a) { out.push_back({L.up(static_cast<ElementId>(a)), FilterKind::ultra}); });
        break;
    }
    return out;
}

inline std::vector<FilterSet> enumerate_exhaustive(const FiniteLattice& L, FilterClass cls)
{
    const std::size_t n = L.size();
    using Mask = std::uint64_t;
    std::vector<Mask> up(n);
    for (std::size_t a = 0; a < n; ++a)
        L.up(static_cast<ElementId>(a)).for_each([&](std::size_t b) { up[a] |= Mask{1} << b; });
    const Mask bottom = Mask{1} << L.bottom();
    const Mask top = Mask{1} << L.top();
    auto has = [](Mask s, std::size_t i) { return (s >> i & 1u) != 0; };

    std::vector<Mask> filters;
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
        if ((s & bottom) || !(s & top))
            continue;
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) {
            if (!has(s, a))
                continue;
            if ((up[a] & ~s) != 0)
                ok = false;
            for (std::size_t b = a + 1; b < n && ok; ++b)
                if (has(s, b) && !has(s, L.meet(static_cast<ElementId>(a), static_cast<ElementId>(b))))
                    ok = false;
        }
        if (ok)
            filters.push_back(s);
    }

    auto to_bitset = [&](Mask s) {
        Bitset b(n);
        for (std::size_t i = 0; i < n; ++i)
            if (has(s, i))
                b.set(i);
        return b;
    };

    std::vector<FilterSet> out;
    for (Mask s : filters) {
        const Bitset F = to_bitset(s);
        if (F != L.up(L.meet_of(F)))
            throw std::logic_error("exhaustive scan found a non-principal filter");
        switch (cls) {
        case FilterClass::all: out.push_back({F, FilterKind::filter}); break;
        case FilterClass::prime: {
            bool prime = true;
            for (std::size_t x = 0; x < n && prime; ++x)
                for (std::size_t y = x + 1; y < n && prime; ++y)
                    if (!has(s, x) && !has(s, y) &&
                        has(s, L.join(static_cast<ElementId>(x), static_cast<ElementId>(y))))
                        prime = false;
            if (prime)
                out.push_back({F, FilterKind::prime});
            break;
        }
        case FilterClass::ultra: {
            const bool maximal = std::none_of(filters.begin(), filters.end(),
                                              [&](Mask t) { return t != s && (s & ~t) == 0; });
            if (maximal)
                out.push_back({F, FilterKind::ultra});
            break;
        }
        }
    }
    return out;
}

} // namespace detail

/// All filters of one class, ordered by the id of their least element.
inline std::vector<FilterSet> enumerate_filters(const FiniteLattice& L, FilterClass cls, Strategy strategy,
                                                const EnumerationLimits& limits = EnumerationLimits::from_env())
{
    require_nondegenerate(L);
    std::vector<FilterSet> out;
    switch (strategy) {
    case Strategy::brute:
        if (L.size() > limits.brute_max)
            throw Error(ErrorCode::too_large, "brute enumeration capped at " + std::to_string(limits.brute_max) +
                                                  " elements, lattice has " + std::to_string(L.size()));
        out = detail::enumerate_brute(L, cls);
        break;
    case Strategy::fast: out = detail::enumerate_fast(L, cls); break;
    case Strategy::exhaustive:
        if (L.size() > limits.exhaustive_max)
            throw Error(ErrorCode::too_large, "exhaustive subset scan capped at " +
                                                  std::to_string(limits.exhaustive_max) + " elements, lattice has " +
                                                  std::to_string(L.size()));
        out = detail::enumerate_exhaustive(L, cls);
        break;
    }
    detail::sort_by_minimum(L, out);
    return out;
}

/// fast when the lattice is distributive, brute otherwise.
inline Strategy default_strategy(const FiniteLattice& L)
{
    return is_distributive(L) ? Strategy::fast : Strategy::brute;
}

struct ExtensionOptions {
    /// Raise NotNormal when the lattice is not normal, even if the
    /// extension turned out unique.
    bool require_normal = true;
};

/// The ultrafilter p_F = {a : a meet b > 0 for all b in F} extending a
/// prime filter F. The formula is cross-checked against the enumerated
/// ultrafilters containing F; anything other than exactly one extension
/// raises NonUniqueExtension carrying the extensions found.
inline FilterSet unique_ultrafilter_extension(const FiniteLattice& L, const Bitset& F,
                                              ExtensionOptions options = {})
{
    require_nondegenerate(L);
    if (auto p = is_prime(L, F); !p)
        throw Error(ErrorCode::not_prime, "extension source is not a prime filter", p.witness);

    std::vector<Bitset> extensions;
    for (auto& u : enumerate_filters(L, FilterClass::ultra, Strategy::brute))
        if (F.is_subset_of(u.members))
            extensions.push_back(std::move(u.members));
    if (extensions.size() != 1)
        throw NonUniqueExtensionError("prime filter has " + std::to_string(extensions.size()) +
                                          " ultrafilter extensions",
                                      std::move(extensions));
    if (options.require_normal)
        if (auto nv = is_normal(L, NormalityMode::report_only); !nv)
            throw Error(ErrorCode::not_normal, "unique extension is only guaranteed for normal lattices",
                        nv.witness);

    Bitset p_F(L.size());
    for (ElementId a = 0; a < L.size(); ++a) {
        bool meets_all = true;
        for (std::size_t b = F.first(); b != Bitset::npos && meets_all; b = F.next(b + 1))
            meets_all = L.meet(a, static_cast<ElementId>(b)) != L.bottom();
        if (meets_all)
            p_F.set(a);
    }
    if (p_F != extensions.front())
        throw std::logic_error("p_F formula disagrees with the enumerated extension");
    return {std::move(p_F), FilterKind::ultra};
}

inline FilterSet unique_ultrafilter_extension(const FiniteLattice& L, const FilterSet& F,
                                              ExtensionOptions options = {})
{
    return unique_ultrafilter_extension(L, F.members, options);
}

/// A prime filter containing F and avoiding a: F is enlarged to a filter
/// maximal among those disjoint from the ideal below a. Such a filter is
/// the principal filter of a minimal g <= min F with g not below a; ties
/// go to the smallest id.
inline FilterSet separate_by_prime(const FiniteLattice& L, const Bitset& F, ElementId a)
{
    require_nondegenerate(L);
    if (auto d = is_distributive(L); !d)
        throw Error(ErrorCode::not_distributive, "prime separation needs a distributive lattice", d.witness);
    if (auto f = is_filter(L, F); !f)
        throw Error(ErrorCode::not_a_filter, "separation source is not a filter", f.witness);
    if (F.test(a))
        throw Error(ErrorCode::element_in_filter, "'" + L.element_name(a) + "' already lies in the filter", {a});

    const ElementId least = L.meet_of(F);
    const Bitset candidates = L.down(least) - L.down(a);
    std::optional<ElementId> chosen;
    candidates.for_each([&](std::size_t g) {
        if (chosen)
            return;
        if (L.down(static_cast<ElementId>(g)).count_and(candidates) == 1)
            chosen = static_cast<ElementId>(g);
    });
    FilterSet p{L.up(*chosen), FilterKind::prime};
    if (!is_prime(L, p.members) || p.members.test(a) || !F.is_subset_of(p.members))
        throw std::logic_error("maximal filter disjoint from the ideal is not a separating prime filter");
    return p;
}

inline FilterSet separate_by_prime(const FiniteLattice& L, const FilterSet& F, ElementId a)
{
    return separate_by_prime(L, F.members, a);
}

} // namespace wallman

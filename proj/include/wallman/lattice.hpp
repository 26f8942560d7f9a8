#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bitset.hpp"
#include "error.hpp"

namespace wallman {

/// Hard cap on the carrier size. The down-set lattice of a 14-point poset
/// (2^14 elements) is the largest workload we commit to.
inline constexpr std::size_t max_elements = 16384;

/// Meet/join tables are materialized up to this size; above it they are
/// computed from the order rows on demand.
inline constexpr std::size_t table_threshold = 1024;

/// Human-writable description of a finite lattice: names plus either the
/// covering relation or (a generating subset of) the order relation.
struct LatticeDescription {
    enum class Relation { covers, leq };

    std::string name;
    std::vector<std::string> elements;
    Relation relation = Relation::covers;
    std::vector<std::pair<std::string, std::string>> pairs;
};

/// A finite bounded lattice over dense ids 0..n-1 (input order).
///
/// The order is stored twice, as up-rows (x <= y) and down-rows, so that
/// principal filters and ideals are plain row lookups. Values are immutable
/// once built; share them through LatticePtr.
class FiniteLattice {
public:
    enum class Trust { validate, trusted };

    /// Build from up-rows: up[x] holds every y with x <= y.
    ///
    /// With Trust::validate the rows are closed reflexively and
    /// transitively, then checked for antisymmetry, bounds and the
    /// existence of every meet and join. Trust::trusted is for callers that
    /// construct a lattice order by design (opposites, down-set lattices,
    /// rings of sets).
    static FiniteLattice from_order(std::string name, std::vector<std::string> names, std::vector<Bitset> up,
                                    Trust trust = Trust::validate)
    {
        const std::size_t n = names.size();
        if (n == 0)
            throw Error(ErrorCode::no_bounds, "lattice has no elements");
        if (n > max_elements)
            throw Error(ErrorCode::too_large,
                        "lattice has " + std::to_string(n) + " elements, cap is " + std::to_string(max_elements));
        if (up.size() != n)
            throw Error(ErrorCode::invalid_argument, "order rows do not match element count");

        FiniteLattice L;
        L.name_ = std::move(name);
        L.names_ = std::move(names);
        L.index_.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (!L.index_.emplace(L.names_[i], static_cast<ElementId>(i)).second)
                throw Error(ErrorCode::invalid_argument, "duplicate element name '" + L.names_[i] + "'");
        }
        L.up_ = std::move(up);

        if (trust == Trust::validate) {
            for (std::size_t i = 0; i < n; ++i)
                L.up_[i].set(i);
            // Warshall: everything above k is above anything below k.
            for (std::size_t k = 0; k < n; ++k) {
                const Bitset row_k = L.up_[k];
                for (std::size_t i = 0; i < n; ++i)
                    if (i != k && L.up_[i].test(k))
                        L.up_[i] |= row_k;
            }
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = L.up_[i].next(i + 1); j != Bitset::npos; j = L.up_[i].next(j + 1))
                    if (L.up_[j].test(i))
                        throw Error(ErrorCode::not_a_poset,
                                    "'" + L.names_[i] + "' and '" + L.names_[j] + "' lie below each other",
                                    {static_cast<ElementId>(i), static_cast<ElementId>(j)});
            }
        }

        L.down_.assign(n, Bitset(n));
        for (std::size_t i = 0; i < n; ++i)
            L.up_[i].for_each([&](std::size_t j) { L.down_[j].set(i); });
        L.up_count_.resize(n);
        L.down_count_.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            L.up_count_[i] = static_cast<std::uint32_t>(L.up_[i].count());
            L.down_count_[i] = static_cast<std::uint32_t>(L.down_[i].count());
        }

        std::optional<ElementId> bottom, top;
        for (std::size_t i = 0; i < n; ++i) {
            if (L.up_count_[i] == n)
                bottom = static_cast<ElementId>(i);
            if (L.down_count_[i] == n)
                top = static_cast<ElementId>(i);
        }
        if (!bottom || !top)
            throw Error(ErrorCode::no_bounds, std::string("no ") + (!bottom ? "least" : "greatest") + " element");
        L.bottom_ = *bottom;
        L.top_ = *top;

        if (n <= table_threshold) {
            L.meet_.assign(n * n, 0);
            L.join_.assign(n * n, 0);
            for (std::size_t a = 0; a < n; ++a) {
                for (std::size_t b = a; b < n; ++b) {
                    auto m = L.compute_meet(a, b);
                    auto j = L.compute_join(a, b);
                    if (!m || !j)
                        throw L.missing_bound(a, b, !m);
                    L.meet_[a * n + b] = L.meet_[b * n + a] = *m;
                    L.join_[a * n + b] = L.join_[b * n + a] = *j;
                }
            }
        } else if (trust == Trust::validate) {
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = a + 1; b < n; ++b) {
                    if (!L.compute_join(a, b))
                        throw L.missing_bound(a, b, false);
                    if (!L.compute_meet(a, b))
                        throw L.missing_bound(a, b, true);
                }
        }
        return L;
    }

    const std::string& name() const { return name_; }
    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& element_name(ElementId a) const { return names_[a]; }

    std::optional<ElementId> find(const std::string& element) const
    {
        auto it = index_.find(element);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    ElementId id(const std::string& element) const
    {
        auto found = find(element);
        if (!found)
            throw Error(ErrorCode::unknown_element, "no element '" + element + "' in lattice '" + name_ + "'");
        return *found;
    }

    ElementId bottom() const { return bottom_; }
    ElementId top() const { return top_; }

    /// The one-point lattice, where 0 = 1.
    bool is_degenerate() const { return size() == 1; }

    bool leq(ElementId a, ElementId b) const { return up_[a].test(b); }
    bool lt(ElementId a, ElementId b) const { return a != b && leq(a, b); }

    /// Principal filter: every y >= a.
    const Bitset& up(ElementId a) const { return up_[a]; }
    /// Principal ideal: every y <= a.
    const Bitset& down(ElementId a) const { return down_[a]; }
    std::size_t up_count(ElementId a) const { return up_count_[a]; }
    std::size_t down_count(ElementId a) const { return down_count_[a]; }

    bool has_tables() const { return !meet_.empty(); }

    ElementId meet(ElementId a, ElementId b) const
    {
        if (has_tables())
            return meet_[a * size() + b];
        return *compute_meet(a, b);
    }

    ElementId join(ElementId a, ElementId b) const
    {
        if (has_tables())
            return join_[a * size() + b];
        return *compute_join(a, b);
    }

    /// Meet of a set; the empty meet is the top.
    ElementId meet_of(const Bitset& s) const
    {
        ElementId acc = top_;
        s.for_each([&](std::size_t x) { acc = meet(acc, static_cast<ElementId>(x)); });
        return acc;
    }

    /// Join of a set; the empty join is the bottom.
    ElementId join_of(const Bitset& s) const
    {
        ElementId acc = bottom_;
        s.for_each([&](std::size_t x) { acc = join(acc, static_cast<ElementId>(x)); });
        return acc;
    }

    Bitset empty_set() const { return Bitset(size()); }
    Bitset all() const { return Bitset::full(size()); }

    Bitset set_of(std::initializer_list<ElementId> ids) const
    {
        Bitset s(size());
        for (auto i : ids)
            s.set(i);
        return s;
    }

    Bitset set_of(const std::vector<std::string>& elements) const
    {
        Bitset s(size());
        for (const auto& e : elements)
            s.set(id(e));
        return s;
    }

    /// b covers a: a < b with nothing strictly between.
    bool covers(ElementId a, ElementId b) const { return lt(a, b) && up_[a].count_and(down_[b]) == 2; }

    std::vector<std::pair<ElementId, ElementId>> cover_pairs() const
    {
        std::vector<std::pair<ElementId, ElementId>> out;
        for (std::size_t a = 0; a < size(); ++a)
            up_[a].for_each([&](std::size_t b) {
                if (covers(static_cast<ElementId>(a), static_cast<ElementId>(b)))
                    out.emplace_back(static_cast<ElementId>(a), static_cast<ElementId>(b));
            });
        return out;
    }

    const std::vector<Bitset>& up_rows() const { return up_; }

    /// Structural equality: same element names in the same order, same
    /// order relation. The lattice's own name is not compared.
    friend bool operator==(const FiniteLattice& a, const FiniteLattice& b)
    {
        return a.names_ == b.names_ && a.up_ == b.up_;
    }

private:
    FiniteLattice() = default;

    // The max of the down-set S is the member whose own down-set has |S|
    // elements.
    std::optional<ElementId> compute_meet(std::size_t a, std::size_t b) const
    {
        if (up_[a].test(b))
            return static_cast<ElementId>(a);
        if (up_[b].test(a))
            return static_cast<ElementId>(b);
        Bitset s = down_[a] & down_[b];
        const std::size_t c = s.count();
        for (std::size_t x = s.first(); x != Bitset::npos; x = s.next(x + 1))
            if (down_count_[x] == c)
                return static_cast<ElementId>(x);
        return std::nullopt;
    }

    std::optional<ElementId> compute_join(std::size_t a, std::size_t b) const
    {
        if (up_[a].test(b))
            return static_cast<ElementId>(b);
        if (up_[b].test(a))
            return static_cast<ElementId>(a);
        Bitset s = up_[a] & up_[b];
        const std::size_t c = s.count();
        for (std::size_t x = s.first(); x != Bitset::npos; x = s.next(x + 1))
            if (up_count_[x] == c)
                return static_cast<ElementId>(x);
        return std::nullopt;
    }

    Error missing_bound(std::size_t a, std::size_t b, bool meet) const
    {
        return Error(ErrorCode::not_a_lattice,
                     "'" + names_[a] + "' and '" + names_[b] + "' have no " + (meet ? "infimum" : "supremum"),
                     {static_cast<ElementId>(a), static_cast<ElementId>(b)});
    }

    std::string name_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, ElementId> index_;
    std::vector<Bitset> up_, down_;
    std::vector<std::uint32_t> up_count_, down_count_;
    std::vector<ElementId> meet_, join_;
    ElementId bottom_ = 0, top_ = 0;
};

using LatticePtr = std::shared_ptr<const FiniteLattice>;

inline LatticePtr share(FiniteLattice L) { return std::make_shared<const FiniteLattice>(std::move(L)); }

/// Resolve names, close the relation, and verify the lattice axioms.
inline FiniteLattice load_lattice(const LatticeDescription& desc)
{
    const std::size_t n = desc.elements.size();
    if (n > max_elements)
        throw Error(ErrorCode::too_large, "lattice has " + std::to_string(n) + " elements");
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i)
        if (!index.emplace(desc.elements[i], i).second)
            throw Error(ErrorCode::invalid_argument, "duplicate element name '" + desc.elements[i] + "'");

    auto lookup = [&](const std::string& e) {
        auto it = index.find(e);
        if (it == index.end())
            throw Error(ErrorCode::unknown_element, "relation mentions unknown element '" + e + "'");
        return it->second;
    };

    std::vector<Bitset> up(n, Bitset(n));
    for (const auto& [lo, hi] : desc.pairs)
        up[lookup(lo)].set(lookup(hi));
    return FiniteLattice::from_order(desc.name, desc.elements, std::move(up), FiniteLattice::Trust::validate);
}

/// Same carrier with the order reversed; meet/join and bounds swap.
inline FiniteLattice opposite(const FiniteLattice& L)
{
    std::vector<Bitset> up;
    up.reserve(L.size());
    for (std::size_t a = 0; a < L.size(); ++a)
        up.push_back(L.down(static_cast<ElementId>(a)));
    return FiniteLattice::from_order(L.name() + "^op", L.names(), std::move(up), FiniteLattice::Trust::trusted);
}

/// 1+L: a fresh element strictly below everything, appended as the last id.
/// It is named "s" (primed until unique).
inline FiniteLattice attach_bottom(const FiniteLattice& L)
{
    const std::size_t n = L.size();
    std::string fresh = "s";
    while (L.find(fresh))
        fresh += "'";
    auto names = L.names();
    names.push_back(fresh);
    std::vector<Bitset> up;
    up.reserve(n + 1);
    for (std::size_t a = 0; a < n; ++a)
        up.push_back(L.up(static_cast<ElementId>(a)).resized(n + 1));
    up.push_back(Bitset::full(n + 1));
    return FiniteLattice::from_order("1+" + L.name(), std::move(names), std::move(up),
                                     FiniteLattice::Trust::trusted);
}

/// Minimal nonzero elements.
inline Bitset atoms(const FiniteLattice& L)
{
    Bitset out(L.size());
    if (L.is_degenerate())
        return out;
    for (ElementId a = 0; a < L.size(); ++a)
        if (L.down_count(a) == 2)
            out.set(a);
    return out;
}

inline Bitset coatoms(const FiniteLattice& L)
{
    Bitset out(L.size());
    if (L.is_degenerate())
        return out;
    for (ElementId a = 0; a < L.size(); ++a)
        if (L.up_count(a) == 2)
            out.set(a);
    return out;
}

/// The unique lower cover of a, when a has exactly one.
inline std::optional<ElementId> unique_lower_cover(const FiniteLattice& L, ElementId a)
{
    const std::size_t target = L.down_count(a) - 1;
    const Bitset& d = L.down(a);
    for (std::size_t x = d.first(); x != Bitset::npos; x = d.next(x + 1))
        if (x != a && L.down_count(static_cast<ElementId>(x)) == target)
            return static_cast<ElementId>(x);
    return std::nullopt;
}

/// Nonzero a that is not the join of two strictly smaller elements;
/// equivalently, a has a single lower cover.
inline Bitset join_irreducibles(const FiniteLattice& L)
{
    Bitset out(L.size());
    for (ElementId a = 0; a < L.size(); ++a)
        if (a != L.bottom() && unique_lower_cover(L, a))
            out.set(a);
    return out;
}

/// Smallest sublattice containing M and both bounds, by closing under
/// pairwise meet and join until nothing new appears.
inline Bitset generated_sublattice(const FiniteLattice& L, const Bitset& M)
{
    Bitset closed = M;
    closed.set(L.bottom());
    closed.set(L.top());
    std::vector<ElementId> members;
    closed.for_each([&](std::size_t x) { members.push_back(static_cast<ElementId>(x)); });
    for (std::size_t i = 0; i < members.size(); ++i) {
        const ElementId x = members[i];
        for (std::size_t j = 0; j <= i; ++j) {
            for (ElementId y : {L.meet(x, members[j]), L.join(x, members[j])}) {
                if (!closed.test(y)) {
                    closed.set(y);
                    members.push_back(y);
                }
            }
        }
    }
    return closed;
}

/// Restrict L to a subset closed under meet and join that contains the
/// bounds. Element ids of the result follow the order of ids in S.
inline FiniteLattice sublattice(const FiniteLattice& L, const Bitset& S, std::string name)
{
    if (generated_sublattice(L, S) != S)
        throw Error(ErrorCode::invalid_argument, "subset is not a sublattice containing 0 and 1");
    auto ids = S.members();
    std::vector<std::string> names;
    std::vector<Bitset> up(ids.size(), Bitset(ids.size()));
    for (std::size_t i = 0; i < ids.size(); ++i) {
        names.push_back(L.element_name(static_cast<ElementId>(ids[i])));
        for (std::size_t j = 0; j < ids.size(); ++j)
            if (L.leq(static_cast<ElementId>(ids[i]), static_cast<ElementId>(ids[j])))
                up[i].set(j);
    }
    return FiniteLattice::from_order(std::move(name), std::move(names), std::move(up),
                                     FiniteLattice::Trust::trusted);
}

/// Some b with a meet b = 0 and a join b = 1, if any.
inline std::optional<ElementId> complement_of(const FiniteLattice& L, ElementId a)
{
    for (ElementId b = 0; b < L.size(); ++b)
        if (L.meet(a, b) == L.bottom() && L.join(a, b) == L.top())
            return b;
    return std::nullopt;
}

/// Largest element disjoint from a, if the disjoint elements have a
/// maximum (always the case in a distributive lattice).
inline std::optional<ElementId> pseudocomplement(const FiniteLattice& L, ElementId a)
{
    Bitset disjoint(L.size());
    for (ElementId x = 0; x < L.size(); ++x)
        if (L.meet(a, x) == L.bottom())
            disjoint.set(x);
    const ElementId j = L.join_of(disjoint);
    if (!disjoint.test(j))
        return std::nullopt;
    return j;
}

} // namespace wallman

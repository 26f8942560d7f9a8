#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bitset.hpp"
#include "certificates.hpp"
#include "duality.hpp"
#include "error.hpp"
#include "lattice.hpp"

namespace wallman {

/// SplitMix64 (Steele, Lea, Flood 2014). The output stream is part of the
/// corpus format: same seed, same fixtures.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t operator()() { return next(); }
    static constexpr std::uint64_t min() { return 0; }
    static constexpr std::uint64_t max() { return ~std::uint64_t{0}; }

    /// Uniform in [0, n) by rejection.
    std::uint64_t below(std::uint64_t n)
    {
        if (n == 0)
            throw Error(ErrorCode::invalid_argument, "empty range");
        const std::uint64_t threshold = (0 - n) % n;
        while (true) {
            const std::uint64_t r = next();
            if (r >= threshold)
                return r % n;
        }
    }

    /// True with probability num / den.
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
    std::uint64_t state_;
};

/// Points 0..n-1; below[i] holds the points strictly below i. Every
/// relation goes from a lower to a higher index.
struct Poset {
    std::vector<std::uint32_t> below;
    std::size_t size() const { return below.size(); }
};

inline constexpr std::size_t max_poset_points = 14;

inline Poset antichain(std::size_t n) { return Poset{std::vector<std::uint32_t>(n, 0)}; }

/// Random poset on max(n, 1) points: each pair i < j is related with
/// probability num/den, then transitively closed.
inline Poset random_poset(std::size_t n, SplitMix64& rng, std::uint64_t num = 1, std::uint64_t den = 3)
{
    if (n > max_poset_points)
        throw Error(ErrorCode::size_cap, "posets are capped at " + std::to_string(max_poset_points) + " points");
    n = std::max<std::size_t>(n, 1);
    Poset P{std::vector<std::uint32_t>(n, 0)};
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (rng.chance(num, den))
                P.below[j] |= (1u << i) | P.below[i];
    return P;
}

inline std::string mask_name(std::uint32_t mask)
{
    std::string out = "{";
    bool first = true;
    for (std::uint32_t i = 0; i < 32; ++i)
        if (mask & (1u << i)) {
            out += (first ? "" : ",") + std::to_string(i);
            first = false;
        }
    return out + "}";
}

/// Lattice of down-sets of P under inclusion; distributive by
/// construction. Elements are ordered by mask value and named like
/// "{0,2}".
inline FiniteLattice downset_lattice(const Poset& P, std::string name = {})
{
    const std::size_t n = P.size();
    if (n > max_poset_points)
        throw Error(ErrorCode::size_cap, "posets are capped at " + std::to_string(max_poset_points) + " points");
    std::vector<std::uint32_t> downsets;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        bool closed = true;
        for (std::size_t i = 0; i < n && closed; ++i)
            if ((m & (1u << i)) && (P.below[i] & ~m))
                closed = false;
        if (closed)
            downsets.push_back(m);
    }
    const std::size_t N = downsets.size();
    std::vector<std::string> names(N);
    std::vector<Bitset> up(N, Bitset(N));
    for (std::size_t a = 0; a < N; ++a) {
        names[a] = mask_name(downsets[a]);
        for (std::size_t b = a; b < N; ++b)
            if ((downsets[a] & ~downsets[b]) == 0)
                up[a].set(b);
    }
    if (name.empty())
        name = "downset" + std::to_string(n);
    return FiniteLattice::from_order(std::move(name), std::move(names), std::move(up), FiniteLattice::Trust::trusted);
}

/// Lattice built from named covers, validated.
inline FiniteLattice from_covers(std::string name, std::vector<std::string> elements,
                                 std::vector<std::pair<std::string, std::string>> covers)
{
    return load_lattice({std::move(name), std::move(elements), LatticeDescription::Relation::covers,
                         std::move(covers)});
}

inline FiniteLattice chain(std::size_t n)
{
    if (n < 1)
        throw Error(ErrorCode::invalid_argument, "a chain needs at least one element");
    std::vector<std::string> names;
    if (n == 1)
        names = {"0"};
    else if (n == 3)
        names = {"0", "m", "1"};
    else {
        names.push_back("0");
        for (std::size_t i = 1; i + 1 < n; ++i)
            names.push_back("c" + std::to_string(i));
        names.push_back("1");
    }
    std::vector<std::pair<std::string, std::string>> covers;
    for (std::size_t i = 0; i + 1 < n; ++i)
        covers.emplace_back(names[i], names[i + 1]);
    return from_covers("chain" + std::to_string(n), names, covers);
}

/// Subsets of {0..k-1}; element id = bitmask.
inline FiniteLattice powerset(std::size_t k)
{
    return downset_lattice(antichain(k), "powerset" + std::to_string(k));
}

inline FiniteLattice m3()
{
    return from_covers("m3", {"0", "a", "b", "c", "1"},
                       {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

inline FiniteLattice n5()
{
    return from_covers("n5", {"0", "a", "b", "c", "1"}, {{"0", "a"}, {"a", "c"}, {"c", "1"}, {"0", "b"}, {"b", "1"}});
}

/// Distributive, not normal, not separative: two atoms a, b below c < 1.
inline FiniteLattice fivepoint()
{
    return from_covers("fivepoint", {"0", "a", "b", "c", "1"},
                       {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"b", "c"}, {"c", "1"}});
}

/// Divisors of n under divisibility.
inline FiniteLattice divisor_lattice(unsigned n)
{
    std::vector<unsigned> d;
    for (unsigned i = 1; i <= n; ++i)
        if (n % i == 0)
            d.push_back(i);
    std::vector<std::string> names;
    for (auto x : d)
        names.push_back(std::to_string(x));
    std::vector<std::pair<std::string, std::string>> leq;
    for (auto x : d)
        for (auto y : d)
            if (y % x == 0)
                leq.emplace_back(std::to_string(x), std::to_string(y));
    return load_lattice({"divisor" + std::to_string(n), names, LatticeDescription::Relation::leq, leq});
}

/// A new least element under the four-element Boolean algebra.
inline FiniteLattice one_plus_b2()
{
    FiniteLattice base = attach_bottom(powerset(2));
    std::vector<Bitset> up = base.up_rows();
    return FiniteLattice::from_order("one_plus_b2", base.names(), std::move(up));
}

/// The named lattices shipped in corpus/.
inline std::vector<FiniteLattice> catalog()
{
    std::vector<FiniteLattice> out;
    out.push_back(chain(2));
    out.push_back(chain(3));
    out.push_back(chain(5));
    out.push_back(m3());
    out.push_back(n5());
    for (std::size_t k = 1; k <= 4; ++k)
        out.push_back(powerset(k));
    out.push_back(fivepoint());
    out.push_back(divisor_lattice(12));
    out.push_back(divisor_lattice(30));
    out.push_back(one_plus_b2());
    return out;
}

/// Random intersection-closed family on {0..ground-1} (plus the full set)
/// ordered by inclusion. Often not distributive.
inline FiniteLattice random_closure_lattice(std::size_t ground, std::size_t generators, SplitMix64& rng,
                                            std::string name = "closure")
{
    if (ground > 16)
        throw Error(ErrorCode::size_cap, "closure systems are capped at 16 ground points");
    const std::uint32_t full = (1u << ground) - 1;
    std::unordered_set<std::uint32_t> seen{full};
    std::vector<std::uint32_t> family{full};
    for (std::size_t i = 0; i < generators; ++i) {
        const auto g = static_cast<std::uint32_t>(rng.below(std::uint64_t{1} << ground));
        if (seen.insert(g).second)
            family.push_back(g);
    }
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (seen.insert(family[i] & family[j]).second)
                family.push_back(family[i] & family[j]);
    std::sort(family.begin(), family.end());
    const std::size_t n = family.size();
    std::vector<std::string> names(n);
    std::vector<Bitset> up(n, Bitset(n));
    for (std::size_t a = 0; a < n; ++a) {
        names[a] = mask_name(family[a]);
        for (std::size_t b = 0; b < n; ++b)
            if ((family[a] & ~family[b]) == 0)
                up[a].set(b);
    }
    return FiniteLattice::from_order(std::move(name), std::move(names), std::move(up));
}

/// h(S) = f^-1(S) from the powerset of m points to that of n points, for a
/// point map f : n -> m. Every Boolean homomorphism between finite
/// powersets has this form.
inline LatticeHom boolean_hom(LatticePtr Bm, LatticePtr Bn, const std::vector<std::size_t>& f)
{
    const auto m = static_cast<std::size_t>(std::countr_zero(Bm->size()));
    if (f.size() > 16 || Bm->size() != (std::size_t{1} << m) || Bn->size() != (std::size_t{1} << f.size()) ||
        std::any_of(f.begin(), f.end(), [&](std::size_t x) { return x >= m; }))
        throw Error(ErrorCode::invalid_argument, "point map does not fit the two powersets");
    LatticeHom h{Bm, Bn, std::vector<ElementId>(Bm->size())};
    for (std::uint32_t S = 0; S < Bm->size(); ++S) {
        std::uint32_t pre = 0;
        for (std::size_t i = 0; i < f.size(); ++i)
            if (S & (1u << f[i]))
                pre |= 1u << i;
        h.map[S] = pre;
    }
    return h;
}

inline std::vector<std::size_t> random_point_map(std::size_t n, std::size_t m, SplitMix64& rng)
{
    std::vector<std::size_t> f(n);
    for (auto& x : f)
        x = static_cast<std::size_t>(rng.below(m));
    return f;
}

inline constexpr std::size_t max_family_points = 12;

/// Random T0-separating family on `points` points with 1-3 increasing
/// stages per member and groups drawn from {0, 1, 2} (some members in two
/// groups). Points not yet separated get an extra singleton member.
inline CoverFamily random_staged_family(std::size_t points, SplitMix64& rng)
{
    if (points > max_family_points)
        throw Error(ErrorCode::size_cap,
                    "families are capped at " + std::to_string(max_family_points) + " ground points");
    CoverFamily F;
    for (std::size_t i = 0; i < points; ++i)
        F.ground.push_back("x" + std::to_string(i));
    auto add_member = [&](Bitset set) {
        Member m{"U" + std::to_string(F.members.size()), std::move(set), {}, {}};
        m.groups.push_back(static_cast<unsigned>(rng.below(3)));
        if (rng.chance(1, 4))
            m.groups.push_back(static_cast<unsigned>(rng.below(3)));
        normalize_groups(m.groups);
        const std::size_t stages = 1 + static_cast<std::size_t>(rng.below(3));
        std::vector<Bitset> chain{m.set};
        for (std::size_t s = 1; s < stages; ++s) {
            Bitset smaller = chain.back();
            smaller.for_each([&](std::size_t x) {
                if (rng.chance(1, 2))
                    smaller.reset(x);
            });
            chain.push_back(std::move(smaller));
        }
        m.stages.assign(chain.rbegin(), chain.rend());
        F.members.push_back(std::move(m));
    };
    const std::size_t base = points == 0 ? 0 : 1 + static_cast<std::size_t>(rng.below(points + 1));
    for (std::size_t i = 0; i < base; ++i) {
        Bitset s(points);
        for (std::size_t x = 0; x < points; ++x)
            if (rng.chance(1, 2))
                s.set(x);
        add_member(std::move(s));
    }
    for (auto bad = is_T0_separating(F); !bad; bad = is_T0_separating(F))
        add_member(Bitset(points, {bad.witness[0]}));
    validate_family(F);
    return F;
}

} // namespace wallman

#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace wallman;

namespace {

std::vector<FiniteLattice> distributive_samples(std::uint64_t seed, int count)
{
    std::vector<FiniteLattice> out;
    for (auto& L : catalog())
        if (is_distributive(L))
            out.push_back(std::move(L));
    SplitMix64 rng(seed);
    for (int i = 0; i < count; ++i) {
        auto D = downset_lattice(random_poset(1 + rng.below(5), rng));
        if (!D.is_degenerate())
            out.push_back(std::move(D));
    }
    return out;
}

std::vector<oracle::Set> base_sets(const WallmanSpace& S)
{
    std::vector<oracle::Set> out;
    for (const auto& c : S.closed_base)
        out.push_back(oracle::to_set(c));
    return out;
}

} // namespace

TEST_CASE("prime and ultrafilter spaces of fivepoint", "[space]")
{
    const auto F = fivepoint();
    const auto pf = build_space(F, SpaceKind::prime);
    REQUIRE(pf.point_count() == 3);
    CHECK(pf.point_name(0) == "^a");
    CHECK(pf.point_name(2) == "^1");
    CHECK(pf.plus(F.id("c")).members() == std::vector<std::size_t>{0, 1});
    CHECK(pf.plus(F.id("1")).count() == 3);
    CHECK(pf.plus(F.id("0")).none());
    CHECK(pf.minus(F.id("a")).members() == std::vector<std::size_t>{1, 2});
    CHECK(pf.point_closure(2).count() == 3);
    CHECK(pf.point_closure(0).members() == std::vector<std::size_t>{0});
    CHECK(pf.index_of(F.up(F.id("b"))) == std::optional<std::size_t>(1));
    CHECK_FALSE(pf.index_of(F.up(F.id("c"))));

    const auto sep = separation_axioms(pf);
    CHECK(sep.t0);
    CHECK_FALSE(sep.t1);
    CHECK_FALSE(sep.hausdorff);

    const auto ult = build_space(F, SpaceKind::ultra);
    REQUIRE(ult.point_count() == 2);
    const auto usep = separation_axioms(ult);
    CHECK(usep.t1);
    CHECK(usep.hausdorff);
}

TEST_CASE("chain3 prime space is not T1", "[space]")
{
    const auto C = chain(3);
    const auto pf = build_space(C, SpaceKind::prime);
    REQUIRE(pf.point_count() == 2);
    const auto sep = separation_axioms(pf);
    REQUIRE_FALSE(sep.t1);
    // ^1 lies in the closure of ^m.
    CHECK(sep.t1.witness == std::vector<ElementId>{1, 0});
    CHECK(pf.minimal_neighbourhood(1).count() == 1);
    CHECK(pf.minimal_neighbourhood(0).count() == 2);
}

TEST_CASE("closed sets match the definition", "[space][oracle]")
{
    for (const auto& L : distributive_samples(2, 30)) {
        for (auto kind : {SpaceKind::prime, SpaceKind::ultra}) {
            const auto S = build_space(L, kind);
            INFO(L.name() << " " << to_string(kind) << " points " << S.point_count());
            if (!S.topology_materialized) {
                CHECK(S.point_count() > topology_point_cap);
                continue;
            }
            const auto points = static_cast<unsigned>(S.point_count());
            const auto expected = oracle::closed_sets(base_sets(S), points);
            std::set<oracle::Set> got;
            for (const auto& c : S.closed_sets)
                got.insert(oracle::to_set(c));
            CHECK(got == expected);
            CHECK(std::is_sorted(S.closed_sets.begin(), S.closed_sets.end()));

            for (const auto& c : expected)
                CHECK(S.is_closed(Bitset::from_range(points, c)));
            for (std::size_t p = 0; p < points; ++p) {
                // smallest closed set containing p
                oracle::Set smallest;
                bool first = true;
                for (const auto& c : expected)
                    if (c.count(static_cast<unsigned>(p)) && (first || c.size() < smallest.size())) {
                        smallest = c;
                        first = false;
                    }
                CHECK(oracle::to_set(S.point_closure(p)) == smallest);
            }

            const auto sep = separation_axioms(S);
            CHECK(static_cast<bool>(sep.t1) == oracle::t1(expected, points));
            CHECK(static_cast<bool>(sep.hausdorff) == oracle::hausdorff(expected, points));
            CHECK(sep.t0);
            CHECK(check_base_homomorphism(S));
        }
    }
}

TEST_CASE("strategies build the same space", "[space]")
{
    for (const auto& L : distributive_samples(5, 15)) {
        const auto a = build_space(L, SpaceKind::prime, Strategy::fast);
        const auto b = build_space(L, SpaceKind::prime, Strategy::brute);
        CHECK(a.points == b.points);
        CHECK(a.closed_base == b.closed_base);
    }
}

TEST_CASE("large spaces skip the closed-set family", "[space]")
{
    const auto S = build_space(powerset(5), SpaceKind::ultra);
    CHECK(S.point_count() == 5);
    CHECK(S.topology_materialized);
    CHECK(S.closed_sets.size() == 32);

    const auto D = downset_lattice(antichain(4));
    // 16 elements, 4 prime filters
    CHECK(build_space(D, SpaceKind::prime).point_count() == 4);
    // chain17: 16 prime filters; the closure of ^c4 adds the larger ^c1..^c3
    const auto big = build_space(chain(17), SpaceKind::prime);
    CHECK(big.point_count() == 16);
    CHECK_FALSE(big.topology_materialized);
    CHECK(big.closed_sets.empty());
    CHECK(big.closure(Bitset(16, {3})).members() == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("suite on the catalog", "[space][suite]")
{
    for (const auto& L : distributive_samples(7, 0)) {
        INFO(L.name());
        const auto r = vbeer_suite(L);
        CHECK(r.consistent());
        CHECK(r.clauses.size() == 9);
        for (const auto& c : r.clauses)
            if (c.asserted && c.evaluated)
                CHECK(c.holds);
    }
    CHECK_THROWS_AS(vbeer_suite(n5()), Error);
    CHECK_THROWS_AS(vbeer_suite(m3()), Error);
}

TEST_CASE("suite records the fivepoint observation", "[space][suite]")
{
    const auto r = vbeer_suite(fivepoint());
    CHECK_FALSE(r.normal);
    CHECK(r.prime_points == 3);
    CHECK(r.ultra_points == 2);
    const auto* c = r.find("c.T2=>normal");
    REQUIRE(c);
    CHECK_FALSE(c->asserted);
    CHECK_FALSE(c->holds);
    CHECK(r.consistent());
    CHECK(r.find("c.normal=>T2")->holds);
    CHECK_FALSE(r.find("no such clause"));
}

TEST_CASE("Boolean clauses on powersets", "[space][suite]")
{
    for (unsigned k = 1; k <= 4; ++k) {
        const auto r = vbeer_suite(powerset(k));
        CHECK(r.boolean);
        CHECK(r.prime_points == k);
        CHECK(r.ultra_points == k);
        CHECK(r.consistent());
    }
    const auto c = vbeer_suite(chain(3));
    CHECK(c.prime_points == 2);
    CHECK(c.ultra_points == 1);
    CHECK(c.consistent());
}

TEST_CASE("suite holds on random distributive lattices", "[space][suite][property]")
{
    SplitMix64 rng(99);
    for (int i = 0; i < 40; ++i) {
        const auto L = downset_lattice(random_poset(1 + rng.below(7), rng));
        if (L.is_degenerate())
            continue;
        INFO(L.name() << " " << L.size());
        CHECK(vbeer_suite(L).consistent());
        CHECK(finite_separative_is_boolean(L));
    }
}

TEST_CASE("separative and distributive gives Boolean", "[space][property]")
{
    SplitMix64 rng(12);
    for (int i = 0; i < 40; ++i) {
        const auto L = random_closure_lattice(4, 1 + rng.below(7), rng);
        CHECK(finite_separative_is_boolean(L));
        const auto o = oracle::Order::of(L);
        if (oracle::separative(o) && oracle::distributive(o))
            CHECK(oracle::boolean(o));
    }
}

TEST_CASE("ultrafilters are generated by their trace on generators", "[space]")
{
    SplitMix64 rng(44);
    for (unsigned k = 1; k <= 4; ++k) {
        const auto P = powerset(k);
        const auto ult = build_space(P, SpaceKind::ultra);
        int tried = 0;
        for (int round = 0; round < 40 && tried < 8; ++round) {
            Bitset G(P.size());
            for (ElementId a = 0; a < P.size(); ++a)
                if (rng.chance(1, 2))
                    G.set(a);
            if (generated_sublattice(P, G) != P.all())
                continue;
            ++tried;
            for (const auto& p : ult.points)
                CHECK(ultrafilter_generated_by(P, G, p.members));
        }
        CHECK(tried > 0);
    }
    const auto P = powerset(2);
    CHECK_THROWS_AS(ultrafilter_generated_by(P, P.set_of({1}), P.up(1)), Error);
    try {
        ultrafilter_generated_by(P, P.all(), P.set_of({3}));
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::precondition_failed);
    }
}

TEST_CASE("subbase compactness agrees on both sides", "[space]")
{
    for (const auto& L : distributive_samples(3, 10)) {
        if (L.size() > alexander_cap)
            continue;
        const auto shared = share(L);
        const auto r = alexander_check(shared, L.all());
        CHECK(r.agree());
        CHECK(r.lattice_side);
        if (L.size() > 12)
            continue;

        // every subset with nonzero meet, by direct count
        const auto o = oracle::Order::of(L);
        std::size_t centered = 0;
        for (std::uint32_t m = 0; m < (1u << L.size()); ++m) {
            unsigned meet = L.top();
            for (unsigned i = 0; i < L.size(); ++i)
                if (m & (1u << i))
                    meet = o.meet(meet, i);
            if (meet != L.bottom())
                ++centered;
        }
        CHECK(r.lattice_centered_sets == centered);
    }
    try {
        alexander_check(share(powerset(5)), powerset(5).all());
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::too_large);
    }
    const auto P = powerset(3);
    const auto r = alexander_check(share(P), atoms(P) | P.set_of({0}));
    CHECK(r.agree());
    CHECK(r.generator_centered_sets == 4);
    CHECK_THROWS_AS(alexander_check(share(P), P.set_of({1})), Error);
}

#include <catch_amalgamated.hpp>

#include <cstdlib>

#include "oracles.hpp"

using namespace wallman;

namespace {

std::vector<FiniteLattice> small_lattices(std::uint64_t seed, int count)
{
    std::vector<FiniteLattice> out = catalog();
    SplitMix64 rng(seed);
    for (int i = 0; i < count; ++i) {
        out.push_back(random_closure_lattice(3 + rng.below(2), 1 + rng.below(5), rng));
        out.push_back(downset_lattice(random_poset(1 + rng.below(4), rng)));
    }
    std::vector<FiniteLattice> kept;
    for (auto& L : out)
        if (L.size() <= 16 && !L.is_degenerate())
            kept.push_back(std::move(L));
    return kept;
}

Bitset names(const FiniteLattice& L, std::vector<std::string> n) { return L.set_of(n); }

} // namespace

TEST_CASE("filter and ideal axioms", "[filters]")
{
    const auto C = chain(3);
    CHECK(is_filter(C, C.up(C.id("m"))));
    CHECK(is_filter(C, names(C, {"1"})));
    CHECK_FALSE(is_filter(C, C.all()));
    CHECK(is_ideal(C, names(C, {"0", "m"})));
    CHECK_FALSE(is_ideal(C, names(C, {"m"})));

    const auto P = powerset(2);
    const auto bad = is_filter(P, names(P, {"{0}", "{1}", "{0,1}"}));
    CHECK_FALSE(bad);
    CHECK_FALSE(bad.witness.empty());
    const auto not_up = is_filter(P, names(P, {"{0}"}));
    CHECK_FALSE(not_up);
}

TEST_CASE("centered sets and generated filters", "[filters]")
{
    const auto F = fivepoint();
    CHECK(is_centered(F, names(F, {"a"})));
    CHECK_FALSE(is_centered(F, names(F, {"a", "b"})));
    CHECK(is_centered(F, F.empty_set()));
    CHECK(generated_filter(F, names(F, {"a"})).members == F.up(F.id("a")));
    CHECK(generated_filter(F, names(F, {"c", "1"})).members == names(F, {"c", "1"}));
    try {
        generated_filter(F, names(F, {"a", "b"}));
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::not_centered);
    }
}

TEST_CASE("prime filters", "[filters]")
{
    const auto C = chain(3);
    CHECK(is_prime(C, C.up(C.id("m"))));
    const auto F = fivepoint();
    const auto up_c = is_prime(F, F.up(F.id("c")));
    REQUIRE_FALSE(up_c);
    REQUIRE(up_c.witness.size() == 2);
    const auto [x, y] = std::pair{up_c.witness[0], up_c.witness[1]};
    CHECK(F.join(x, y) == F.id("c"));
    CHECK(is_prime(F, names(F, {"1"})));
    try {
        (void)is_prime(F, names(F, {"a"}));
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::not_a_filter);
    }
}

TEST_CASE("enumeration examples", "[filters]")
{
    const auto P = powerset(3);
    const auto ult = enumerate_filters(P, FilterClass::ultra, Strategy::brute);
    REQUIRE(ult.size() == 3);
    CHECK(ult[0].members == P.up(1));
    CHECK(ult[2].members == P.up(4));

    CHECK(enumerate_filters(one_plus_b2(), FilterClass::ultra, Strategy::brute).size() == 1);

    const auto F = fivepoint();
    const auto prime = enumerate_filters(F, FilterClass::prime, Strategy::brute);
    REQUIRE(prime.size() == 3);
    CHECK(prime[0].members == F.up(F.id("a")));
    CHECK(prime[1].members == F.up(F.id("b")));
    CHECK(prime[2].members == F.up(F.id("1")));
    const auto ultra = enumerate_filters(F, FilterClass::ultra, Strategy::fast);
    REQUIRE(ultra.size() == 2);
    CHECK(ultra[0].kind == FilterKind::ultra);

    CHECK(enumerate_filters(chain(3), FilterClass::ultra, Strategy::brute).size() == 1);
}

TEST_CASE("fast enumeration refuses non-distributive input", "[filters]")
{
    try {
        enumerate_filters(n5(), FilterClass::prime, Strategy::fast);
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::not_distributive);
    }
}

TEST_CASE("exhaustive scan is capped", "[filters]")
{
    EnumerationLimits limits;
    limits.exhaustive_max = 18;
    const auto big = powerset(5);
    try {
        enumerate_filters(big, FilterClass::all, Strategy::exhaustive, limits);
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::too_large);
    }
    CHECK(enumerate_filters(powerset(4), FilterClass::ultra, Strategy::exhaustive, limits).size() == 4);
}

TEST_CASE("the scan cap can be raised from the environment", "[filters]")
{
    ::setenv("WALLMAN_MAX_BRUTE", "20", 1);
    CHECK(EnumerationLimits::from_env().exhaustive_max == 20);
    ::setenv("WALLMAN_MAX_BRUTE", "99", 1);
    CHECK(EnumerationLimits::from_env().exhaustive_max == hard_exhaustive_cap);
    ::unsetenv("WALLMAN_MAX_BRUTE");
    CHECK(EnumerationLimits::from_env().exhaustive_max == default_exhaustive_cap);
}

TEST_CASE("degenerate lattices have no filters", "[filters]")
{
    try {
        enumerate_filters(chain(1), FilterClass::all, Strategy::brute);
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::degenerate_lattice);
    }
}

TEST_CASE("every strategy matches the subset-scan oracle", "[filters][oracle]")
{
    for (const auto& L : small_lattices(4, 25)) {
        INFO(L.name() << " size " << L.size());
        const auto o = oracle::Order::of(L);
        const auto all = oracle::all_filters(o);
        const auto prime = oracle::prime_filters(o);
        const auto ultra = oracle::ultrafilters(o);
        auto as_set = [](const std::vector<oracle::Set>& v) { return std::set<oracle::Set>(v.begin(), v.end()); };

        CHECK(oracle::to_sets(enumerate_filters(L, FilterClass::all, Strategy::brute)) == as_set(all));
        CHECK(oracle::to_sets(enumerate_filters(L, FilterClass::prime, Strategy::brute)) == as_set(prime));
        CHECK(oracle::to_sets(enumerate_filters(L, FilterClass::ultra, Strategy::brute)) == as_set(ultra));
        CHECK(oracle::to_sets(enumerate_filters(L, FilterClass::all, Strategy::exhaustive)) == as_set(all));
        CHECK(oracle::to_sets(enumerate_filters(L, FilterClass::prime, Strategy::exhaustive)) == as_set(prime));
        CHECK(oracle::to_sets(enumerate_filters(L, FilterClass::ultra, Strategy::exhaustive)) == as_set(ultra));
        if (is_distributive(L)) {
            CHECK(oracle::to_sets(enumerate_filters(L, FilterClass::prime, Strategy::fast)) == as_set(prime));
            CHECK(oracle::to_sets(enumerate_filters(L, FilterClass::ultra, Strategy::fast)) == as_set(ultra));
        }
        for (const auto& s : all) {
            const auto b = Bitset::from_range(L.size(), s);
            CHECK(is_filter(L, b));
            CHECK(static_cast<bool>(is_prime(L, b)) == oracle::is_prime(o, s));
        }
    }
}

TEST_CASE("results are ordered by least element", "[filters]")
{
    SplitMix64 rng(17);
    for (int i = 0; i < 20; ++i) {
        const auto L = downset_lattice(random_poset(5, rng));
        const auto prime = enumerate_filters(L, FilterClass::prime, Strategy::fast);
        for (std::size_t k = 1; k < prime.size(); ++k)
            CHECK(L.meet_of(prime[k - 1].members) < L.meet_of(prime[k].members));
        CHECK(prime == enumerate_filters(L, FilterClass::prime, Strategy::brute));
    }
}

TEST_CASE("unique ultrafilter extension", "[filters]")
{
    const auto C = chain(3);
    const auto ext = unique_ultrafilter_extension(C, names(C, {"1"}));
    CHECK(ext.members == C.up(C.id("m")));
    CHECK(ext.kind == FilterKind::ultra);

    const auto P = powerset(2);
    CHECK(unique_ultrafilter_extension(P, P.up(1)).members == P.up(1));

    const auto F = fivepoint();
    try {
        unique_ultrafilter_extension(F, names(F, {"1"}));
        FAIL("no error");
    } catch (const NonUniqueExtensionError& e) {
        CHECK(e.code() == ErrorCode::non_unique_extension);
        REQUIRE(e.extensions().size() == 2);
        CHECK(e.extensions()[0] == F.up(F.id("a")));
        CHECK(e.extensions()[1] == F.up(F.id("b")));
    }
    // ^a is already maximal, so the extension is unique; normality is still
    // required unless switched off.
    try {
        unique_ultrafilter_extension(F, F.up(F.id("a")));
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::not_normal);
    }
    CHECK(unique_ultrafilter_extension(F, F.up(F.id("a")), {false}).members == F.up(F.id("a")));

    try {
        unique_ultrafilter_extension(F, F.up(F.id("c")));
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::not_prime);
    }
}

TEST_CASE("extensions in normal lattices match the oracle", "[filters][oracle]")
{
    for (const auto& L : small_lattices(9, 25)) {
        if (!is_distributive(L) || !is_normal(L))
            continue;
        const auto o = oracle::Order::of(L);
        const auto ultra = oracle::ultrafilters(o);
        for (const auto& p : oracle::prime_filters(o)) {
            std::vector<oracle::Set> above;
            for (const auto& u : ultra)
                if (std::includes(u.begin(), u.end(), p.begin(), p.end()))
                    above.push_back(u);
            REQUIRE(above.size() == 1);
            CHECK(oracle::to_set(unique_ultrafilter_extension(L, Bitset::from_range(L.size(), p)).members) ==
                  above.front());
        }
    }
}

TEST_CASE("separating an element from a filter", "[filters]")
{
    const auto P = powerset(2);
    CHECK(separate_by_prime(P, names(P, {"{0,1}"}), P.id("{0}")).members == P.up(P.id("{1}")));
    const auto C = chain(3);
    CHECK(separate_by_prime(C, names(C, {"1"}), C.id("m")).members == names(C, {"1"}));
    try {
        separate_by_prime(C, names(C, {"1"}), C.id("1"));
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::element_in_filter);
    }
    try {
        separate_by_prime(n5(), names(n5(), {"1"}), 0);
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::not_distributive);
    }
}

TEST_CASE("prime separation on random distributive lattices", "[filters][property]")
{
    SplitMix64 rng(31);
    for (int i = 0; i < 30; ++i) {
        const auto L = downset_lattice(random_poset(1 + rng.below(6), rng));
        if (L.is_degenerate())
            continue;
        const auto filters = enumerate_filters(L, FilterClass::all, Strategy::brute);
        for (const auto& F : filters)
            for (ElementId a = 0; a < L.size(); ++a) {
                if (F.contains(a))
                    continue;
                const auto p = separate_by_prime(L, F, a);
                CHECK(is_prime(L, p));
                CHECK(F.members.is_subset_of(p.members));
                CHECK_FALSE(p.contains(a));
            }
    }
}

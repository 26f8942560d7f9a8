#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace wallman;

namespace {

ErrorCode code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::invalid_argument;
}

std::vector<FiniteLattice> sample_lattices()
{
    auto out = catalog();
    SplitMix64 rng(3);
    for (int i = 0; i < 15; ++i)
        out.push_back(random_closure_lattice(4, 2 + rng.below(5), rng));
    for (int i = 0; i < 10; ++i)
        out.push_back(downset_lattice(random_poset(1 + rng.below(5), rng)));
    return out;
}

} // namespace

TEST_CASE("chain3 basics", "[lattice]")
{
    const auto L = chain(3);
    CHECK(L.size() == 3);
    CHECK(L.element_name(L.bottom()) == "0");
    CHECK(L.element_name(L.top()) == "1");
    const auto m = L.id("m");
    CHECK(L.meet(m, L.top()) == m);
    CHECK(L.join(m, L.bottom()) == m);
    CHECK(L.covers(L.bottom(), m));
    CHECK_FALSE(L.covers(L.bottom(), L.top()));
    CHECK(L.cover_pairs().size() == 2);
}

TEST_CASE("meet and join agree with the order-only oracle", "[lattice][oracle]")
{
    for (const auto& L : sample_lattices()) {
        INFO(L.name());
        const auto o = oracle::Order::of(L);
        CHECK(o.bottom() == L.bottom());
        CHECK(o.top() == L.top());
        for (ElementId a = 0; a < L.size(); ++a)
            for (ElementId b = 0; b < L.size(); ++b) {
                REQUIRE(L.meet(a, b) == o.meet(a, b));
                REQUIRE(L.join(a, b) == o.join(a, b));
            }
        CHECK(check_lattice_laws(L));
    }
}

TEST_CASE("rejected inputs carry witnesses", "[lattice][errors]")
{
    using R = LatticeDescription::Relation;
    SECTION("cycle")
    {
        try {
            load_lattice({"cyc", {"0", "a", "b", "1"}, R::covers, {{"0", "a"}, {"a", "b"}, {"b", "a"}, {"b", "1"}}});
            FAIL("accepted a cycle");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::not_a_poset);
            CHECK(e.witness().size() == 2);
        }
    }
    SECTION("two maximal upper bounds")
    {
        // a, b both below c and d, which are incomparable.
        try {
            load_lattice({"bowtie",
                          {"0", "a", "b", "c", "d", "1"},
                          R::covers,
                          {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "1"}, {"d", "1"}}});
            FAIL("accepted a non-lattice");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::not_a_lattice);
            REQUIRE(e.witness().size() == 2);
        }
    }
    SECTION("missing bound")
    {
        CHECK(code_of([] { load_lattice({"v", {"a", "b", "1"}, R::covers, {{"a", "1"}, {"b", "1"}}}); }) ==
              ErrorCode::no_bounds);
    }
    SECTION("unknown element")
    {
        CHECK(code_of([] { load_lattice({"u", {"0", "1"}, R::covers, {{"0", "x"}}}); }) ==
              ErrorCode::unknown_element);
        CHECK(code_of([] { chain(2).id("nope"); }) == ErrorCode::unknown_element);
    }
    SECTION("duplicate name")
    {
        CHECK(code_of([] { load_lattice({"d", {"0", "0"}, R::covers, {}}); }) == ErrorCode::invalid_argument);
    }
    SECTION("too many elements")
    {
        std::vector<std::string> names(max_elements + 1, "x");
        CHECK(code_of([&] { load_lattice({"big", names, R::covers, {}}); }) == ErrorCode::too_large);
    }
}

TEST_CASE("leq input is closed transitively", "[lattice]")
{
    const auto L = load_lattice({"c4", {"0", "c1", "c2", "1"}, LatticeDescription::Relation::leq,
                                 {{"0", "c1"}, {"c1", "c2"}, {"c2", "1"}}});
    CHECK(L.leq(L.id("0"), L.id("1")));
    CHECK(L == chain(4));
}

TEST_CASE("large lattices compute meets without tables", "[lattice]")
{
    const auto L = powerset(11);
    REQUIRE(L.size() == 2048);
    CHECK_FALSE(L.has_tables());
    SplitMix64 rng(5);
    for (int i = 0; i < 2000; ++i) {
        const auto a = static_cast<ElementId>(rng.below(2048));
        const auto b = static_cast<ElementId>(rng.below(2048));
        REQUIRE(L.meet(a, b) == (a & b));
        REQUIRE(L.join(a, b) == (a | b));
    }
    CHECK(L.meet_of(L.empty_set()) == L.top());
    CHECK(L.join_of(L.empty_set()) == L.bottom());
}

TEST_CASE("opposite swaps the order", "[lattice]")
{
    const auto L = n5();
    const auto O = opposite(L);
    CHECK(O.name() == "n5^op");
    CHECK(O.bottom() == L.top());
    for (ElementId a = 0; a < L.size(); ++a)
        for (ElementId b = 0; b < L.size(); ++b) {
            CHECK(O.leq(a, b) == L.leq(b, a));
            CHECK(O.meet(a, b) == L.join(a, b));
        }
}

TEST_CASE("attaching a new least element", "[lattice]")
{
    const auto L = attach_bottom(powerset(2));
    CHECK(L.size() == 5);
    CHECK(L.element_name(L.bottom()) == "s");
    CHECK(atoms(L).count() == 1);
    const auto again = attach_bottom(L);
    CHECK(again.element_name(again.bottom()) == "s'");
}

TEST_CASE("atoms, coatoms and join-irreducibles", "[lattice]")
{
    const auto P = powerset(3);
    CHECK(atoms(P).members() == std::vector<std::size_t>{1, 2, 4});
    CHECK(coatoms(P).members() == std::vector<std::size_t>{3, 5, 6});
    CHECK(join_irreducibles(P) == atoms(P));

    const auto C = chain(4);
    CHECK(join_irreducibles(C).count() == 3);
    CHECK(atoms(C).count() == 1);

    // divisors of 12: join-irreducibles are the prime powers 2, 4, 3.
    const auto D = divisor_lattice(12);
    CHECK(join_irreducibles(D) == D.set_of(std::vector<std::string>{"2", "3", "4"}));
}

TEST_CASE("join-irreducibles match the definition", "[lattice][oracle]")
{
    for (const auto& L : sample_lattices()) {
        const auto o = oracle::Order::of(L);
        const auto ji = join_irreducibles(L);
        for (ElementId a = 0; a < L.size(); ++a) {
            bool reducible = a == o.bottom();
            for (unsigned b = 0; b < o.n && !reducible; ++b)
                for (unsigned c = 0; c < o.n && !reducible; ++c)
                    reducible = b != a && c != a && o.join(b, c) == a;
            CHECK(ji.test(a) == !reducible);
        }
    }
}

TEST_CASE("generated sublattices", "[lattice]")
{
    const auto P = powerset(3);
    const auto S = generated_sublattice(P, P.set_of({1, 2}));
    CHECK(S.members() == std::vector<std::size_t>{0, 1, 2, 3, 7});
    const auto sub = sublattice(P, S, "sub");
    CHECK(sub.size() == 5);
    CHECK(is_distributive(sub));
    CHECK(code_of([&] { sublattice(P, P.set_of({0, 1, 2, 7}), "bad"); }) == ErrorCode::invalid_argument);
}

TEST_CASE("complements and pseudocomplements", "[lattice]")
{
    const auto P = powerset(3);
    for (ElementId a = 0; a < 8; ++a) {
        CHECK(complement_of(P, a) == std::optional<ElementId>(7 - a));
        CHECK(pseudocomplement(P, a) == std::optional<ElementId>(7 - a));
    }
    const auto F = fivepoint();
    CHECK_FALSE(complement_of(F, F.id("c")));
    CHECK(pseudocomplement(F, F.id("a")) == F.id("b"));
    CHECK(pseudocomplement(F, F.id("c")) == F.id("0"));
    // m3 has no largest element disjoint from a.
    const auto M = m3();
    CHECK_FALSE(pseudocomplement(M, M.id("a")));
}

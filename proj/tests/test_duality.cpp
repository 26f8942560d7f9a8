#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace wallman;

namespace {

LatticeHom chain3_quotient()
{
    return make_hom(share(chain(3)), share(chain(2)), {{"0", "0"}, {"m", "0"}, {"1", "1"}});
}

// Points of ult(powerset k) are the atoms {i}, in order of i, so the map
// induced by S -> f^-1(S) sends point i to point f(i).
std::vector<std::size_t> expected_point_map(const std::vector<std::size_t>& f) { return f; }

} // namespace

TEST_CASE("homomorphism checks", "[duality]")
{
    const auto C = share(chain(3));
    CHECK(verify_hom(identity_hom(C)));
    CHECK(verify_hom(chain3_quotient()));

    const auto P = share(powerset(2));
    const auto atoms_to_m = make_hom(P, C, {{"{}", "0"}, {"{0}", "m"}, {"{1}", "m"}, {"{0,1}", "1"}});
    const auto v = verify_hom(atoms_to_m);
    REQUIRE_FALSE(v);
    CHECK(v.witness == std::vector<ElementId>{P->id("{0}"), P->id("{1}")});
    CHECK_THROWS_AS(require_hom(atoms_to_m), Error);

    const auto wrong_top = make_hom(C, C, {{"0", "0"}, {"m", "m"}, {"1", "m"}});
    CHECK(verify_hom(wrong_top).witness == std::vector<ElementId>{C->top()});

    try {
        make_hom(C, C, {{"0", "0"}, {"m", "m"}});
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::invalid_argument);
    }
    try {
        make_hom(C, C, {{"0", "0"}, {"0", "m"}, {"m", "m"}, {"1", "1"}});
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::invalid_argument);
    }
    CHECK_THROWS_AS(make_hom(C, C, {{"0", "0"}, {"m", "x"}, {"1", "1"}}), Error);
}

TEST_CASE("composition", "[duality]")
{
    const auto q = chain3_quotient();
    const auto id2 = identity_hom(q.target);
    CHECK(compose(id2, q).map == q.map);
    try {
        compose(q, q);
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::not_composable);
    }
}

TEST_CASE("induced maps on the examples", "[duality]")
{
    const auto C = share(chain(3));
    const auto id = induced_map(identity_hom(C));
    CHECK(id.point_map == std::vector<std::size_t>{0});

    const auto q = chain3_quotient();
    const auto f = induced_map(q);
    REQUIRE(f.source->point_count() == 1);
    REQUIRE(f.target->point_count() == 1);
    CHECK(f.target->points[f(0)].members == C->up(C->id("m")));
    CHECK(is_continuous(f));

    const auto B2 = share(powerset(2));
    const auto B3 = share(powerset(3));
    const auto emb = boolean_hom(B2, B3, {0, 1, 1});
    CHECK(verify_hom(emb));
    const auto g = induced_map(emb);
    CHECK(g.point_map == std::vector<std::size_t>{0, 1, 1});
    CHECK(g.surjective());
    CHECK_FALSE(g.injective());

    try {
        induced_map(identity_hom(share(fivepoint())));
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::not_normal);
    }
}

TEST_CASE("induced maps match the per-point extension", "[duality][oracle]")
{
    // h = a -> a+ into the cover algebra, plus the quotient and identity
    // maps; the expected point is the single oracle ultrafilter above
    // h^-1(p).
    SplitMix64 rng(6);
    std::vector<LatticeHom> homs{chain3_quotient()};
    for (int i = 0; i < 25; ++i) {
        auto L = share(downset_lattice(random_poset(1 + rng.below(4), rng)));
        if (L->is_degenerate() || !is_normal(*L))
            continue;
        homs.push_back(identity_hom(L));
        homs.push_back(alexandrov(L).j);
    }
    for (const auto& h : homs) {
        if (!is_normal(*h.target, NormalityMode::report_only))
            continue;
        INFO(h.source->name() << " -> " << h.target->name());
        const auto f = induced_map(h);
        const auto o = oracle::Order::of(*h.source);
        const auto ultra = oracle::ultrafilters(o);
        for (std::size_t p = 0; p < f.source->point_count(); ++p) {
            const auto pulled = oracle::to_set(h.preimage(f.source->points[p].members));
            std::vector<oracle::Set> above;
            for (const auto& u : ultra)
                if (std::includes(u.begin(), u.end(), pulled.begin(), pulled.end()))
                    above.push_back(u);
            REQUIRE(above.size() == 1);
            CHECK(oracle::to_set(f.target->points[f(p)].members) == above.front());
        }
        CHECK(is_continuous(f));
    }
}

TEST_CASE("separative homomorphisms", "[duality]")
{
    CHECK(is_separative_hom(identity_hom(share(fivepoint()))));
    const auto q = chain3_quotient();
    const auto v = is_separative_hom(q);
    REQUIRE_FALSE(v);
    CHECK(v.witness == std::vector<ElementId>{q.source->id("m"), q.target->id("1")});

    SplitMix64 rng(1);
    for (int i = 0; i < 50; ++i) {
        const auto m = 1 + rng.below(3), n = 1 + rng.below(3);
        const auto h = boolean_hom(share(powerset(m)), share(powerset(n)), random_point_map(n, m, rng));
        CHECK(is_separative_hom(h));
    }
}

TEST_CASE("the three conditions on the quotient", "[duality]")
{
    const auto q = chain3_quotient();
    try {
        mbeer_equivalence(q);
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::precondition_failed);
        CHECK(std::string(e.what()).find("'chain3' not separative") != std::string::npos);
    }
    const auto r = mbeer_equivalence(q, false);
    CHECK_FALSE(r.separative);
    CHECK_FALSE(r.preimage_ultra);
    CHECK_FALSE(r.pulls_back_base);
    CHECK(r.equivalent());

    const auto id = mbeer_equivalence(identity_hom(share(powerset(3))));
    CHECK(id.separative);
    CHECK(id.preimage_ultra);
    CHECK(id.pulls_back_base);
}

TEST_CASE("the three conditions agree on random Boolean homomorphisms", "[duality][property]")
{
    SplitMix64 rng(200);
    for (int i = 0; i < 200; ++i) {
        const auto m = 1 + rng.below(4), n = 1 + rng.below(4);
        const auto f = random_point_map(n, m, rng);
        const auto h = boolean_hom(share(powerset(m)), share(powerset(n)), f);
        const auto r = mbeer_equivalence(h);
        CHECK(r.equivalent());
        CHECK(r.separative);
        CHECK(induced_map(h).point_map == expected_point_map(f));
    }
}

TEST_CASE("functor laws", "[duality][property]")
{
    const auto B2 = share(powerset(2));
    const auto B3 = share(powerset(3));
    const auto h = boolean_hom(B2, B3, {0, 1, 1});
    const auto g = boolean_hom(B3, B3, {2, 0, 1});
    const auto r = functor_laws(g, h);
    CHECK(r.composition);
    CHECK(r.identities);
    const auto id = identity_hom(B3);
    CHECK(functor_laws(id, id).composition);

    SplitMix64 rng(100);
    for (int i = 0; i < 100; ++i) {
        const auto k = 1 + rng.below(3), m = 1 + rng.below(3), n = 1 + rng.below(3);
        const auto f1 = random_point_map(m, k, rng);
        const auto f2 = random_point_map(n, m, rng);
        const auto Bk = share(powerset(k)), Bm = share(powerset(m)), Bn = share(powerset(n));
        const auto hh = boolean_hom(Bk, Bm, f1);
        const auto gg = boolean_hom(Bm, Bn, f2);
        const auto laws = functor_laws(gg, hh);
        CHECK(laws.composition);
        CHECK(laws.identities);
        std::vector<std::size_t> both(n);
        for (std::size_t p = 0; p < n; ++p)
            both[p] = f1[f2[p]];
        CHECK(induced_map(compose(gg, hh)).point_map == both);
    }
    CHECK_THROWS_AS(functor_laws(h, g), Error);
}

TEST_CASE("kernel and surjectivity", "[duality]")
{
    // inclusion of the subalgebra {0, {0}, {1,2}, 1} into powerset3
    const auto P = share(powerset(3));
    const auto S = share(sublattice(*P, P->set_of(std::vector<std::string>{"{}", "{0}", "{1,2}", "{0,1,2}"}), "sub"));
    LatticeHom inc{S, P, {}};
    for (ElementId a = 0; a < S->size(); ++a)
        inc.map.push_back(P->id(S->element_name(a)));
    const auto r = surjectivity_from_kernel(inc);
    CHECK(r.antecedent);
    CHECK(r.consequent);

    const auto q = surjectivity_from_kernel(chain3_quotient());
    CHECK_FALSE(q.antecedent);
    CHECK(q.holds());
    CHECK(chain3_quotient().kernel().count() == 2);

    const auto id = surjectivity_from_kernel(identity_hom(P));
    CHECK(id.antecedent);
    CHECK(id.consequent);

    SplitMix64 rng(7);
    for (int i = 0; i < 100; ++i) {
        const auto m = 1 + rng.below(4), n = 1 + rng.below(4);
        const auto h = boolean_hom(share(powerset(m)), share(powerset(n)), random_point_map(n, m, rng));
        CHECK(surjectivity_from_kernel(h).holds());
    }
}

TEST_CASE("separating images and injectivity", "[duality]")
{
    const auto B3 = share(powerset(3));
    const auto id = embedding_from_separation(identity_hom(B3));
    CHECK(id.antecedent);
    CHECK(id.consequent);

    const auto perm = embedding_from_separation(boolean_hom(B3, B3, {1, 2, 0}));
    CHECK(perm.antecedent);
    CHECK(perm.consequent);

    const auto onto_b2 = embedding_from_separation(boolean_hom(B3, share(powerset(2)), {0, 2}));
    CHECK(onto_b2.antecedent);
    CHECK(onto_b2.consequent);

    const auto collapse = embedding_from_separation(boolean_hom(share(powerset(2)), B3, {0, 0, 0}));
    CHECK_FALSE(collapse.antecedent);
    CHECK(collapse.holds());

    CHECK(separates(*B3, B3->all()));
    CHECK_FALSE(separates(*B3, B3->set_of({0, 7})));

    SplitMix64 rng(8);
    for (int i = 0; i < 100; ++i) {
        const auto m = 1 + rng.below(4), n = 1 + rng.below(4);
        const auto h = boolean_hom(share(powerset(m)), share(powerset(n)), random_point_map(n, m, rng));
        CHECK(embedding_from_separation(h).holds());
    }
}

TEST_CASE("cover algebra examples", "[duality]")
{
    const auto C = alexandrov(share(chain(3)));
    CHECK(C.algebra->size() == 2);
    CHECK(C.algebra->name() == "B(chain3)");
    CHECK(C.ult_j.source->point_count() == 1);
    CHECK(C.ult_j.target->point_count() == 1);
    CHECK(C.onto);
    CHECK(C.kernel_trivial);
    CHECK(C.zero_dimensional);

    const auto F = alexandrov(share(fivepoint()));
    CHECK(F.algebra->size() == 4);
    CHECK(F.ult_j.injective());
    CHECK(F.ult_j.surjective());
    CHECK(F.algebra->element_name(F.j(F.j.source->id("c"))) == "{^a,^b}");

    const auto B = alexandrov(share(powerset(3)));
    CHECK(B.algebra->size() == 8);
    Bitset hit(8);
    for (auto x : B.j.map)
        hit.set(x);
    CHECK(hit.count() == 8);

    CHECK_THROWS_AS(alexandrov(share(n5())), Error);
}

TEST_CASE("cover algebra on random distributive lattices", "[duality][property]")
{
    SplitMix64 rng(13);
    for (int i = 0; i < 40; ++i) {
        const auto P = random_poset(1 + rng.below(6), rng);
        const auto L = share(downset_lattice(P));
        if (L->is_degenerate())
            continue;
        const auto r = alexandrov(L);
        // ultrafilters are the principal filters of atoms, one per minimal point
        const auto points = static_cast<std::size_t>(std::count(P.below.begin(), P.below.end(), 0u));
        CHECK(r.ult_j.target->point_count() == points);
        // the sets a+ separate ultrafilters, so they generate every subset
        CHECK(r.algebra->size() == (std::size_t{1} << points));
        CHECK(r.algebra_boolean);
        CHECK(r.zero_dimensional);
        CHECK(r.kernel_trivial);
        CHECK(r.onto);
        CHECK(verify_hom(r.j));
    }
}

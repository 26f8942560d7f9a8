// Homomorphisms between finite Boolean algebras and their induced maps on
// ultrafilter spaces, then the Boolean cover of a distributive lattice.

#include <iostream>

#include "wallman.hpp"

using namespace wallman;

namespace {

void show(const std::string& label, const LatticeHom& h)
{
    const auto f = induced_map(h);
    std::cout << label << ": " << space_map_to_json(f).dump() << "  injective=" << f.injective()
              << " surjective=" << f.surjective() << "\n";
    const auto k = surjectivity_from_kernel(h);
    const auto s = embedding_from_separation(h);
    std::cout << "  trivial kernel=" << k.antecedent << " -> onto=" << k.consequent
              << "; separating image=" << s.antecedent << " -> injective=" << s.consequent << "\n";
}

} // namespace

int main()
{
    const auto B2 = share(powerset(2));
    const auto B3 = share(powerset(3));

    // S -> f^-1(S) for a point map f
    const auto into = boolean_hom(B2, B3, {0, 1, 1});
    const auto onto = boolean_hom(B3, B2, {0, 2});
    show("B2 -> B3", into);
    show("B3 -> B2", onto);

    const auto laws = functor_laws(onto, into);
    std::cout << "functor laws: composition=" << laws.composition.holds << " identities=" << laws.identities << "\n";

    SplitMix64 rng(2024);
    const auto L = share(downset_lattice(random_poset(5, rng)));
    const auto cover = alexandrov(L);
    std::cout << L->name() << " (" << L->size() << " elements) is covered by " << cover.algebra->name() << " ("
              << cover.algebra->size() << " elements): boolean=" << cover.algebra_boolean
              << " zero-dimensional=" << cover.zero_dimensional << " onto=" << cover.onto << "\n";
    return laws.composition.holds && laws.identities && cover.onto ? 0 : 1;
}

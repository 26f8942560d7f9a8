// Build a lattice, classify it, list its filters and look at its spaces.

#include <iostream>

#include "wallman.hpp"

using namespace wallman;

int main()
{
    const auto L = share(fivepoint());
    const auto r = analyze(*L);
    std::cout << L->name() << ": " << L->size() << " elements"
              << ", distributive=" << r.distributive.holds << ", normal=" << r.normal.holds
              << ", separative=" << r.separative.holds << ", boolean=" << r.boolean.holds << "\n";

    for (auto cls : {FilterClass::prime, FilterClass::ultra}) {
        std::cout << (cls == FilterClass::prime ? "prime filters:" : "ultrafilters:");
        for (const auto& f : enumerate_filters(*L, cls, Strategy::fast))
            std::cout << " " << filter_to_json(*L, f)["elements"].dump();
        std::cout << "\n";
    }

    // the prime filter {1} sits below both ultrafilters
    try {
        unique_ultrafilter_extension(*L, L->set_of({L->top()}));
    } catch (const NonUniqueExtensionError& e) {
        std::cout << "{1} extends to " << e.extensions().size() << " ultrafilters\n";
    }

    for (auto kind : {SpaceKind::prime, SpaceKind::ultra}) {
        const auto S = build_space(L, kind);
        const auto axioms = separation_axioms(S);
        std::cout << to_string(kind) << " space: " << S.point_count() << " points, T0=" << axioms.t0.holds
                  << ", T1=" << axioms.t1.holds << ", hausdorff=" << axioms.hausdorff.holds << "\n";
    }

    const auto suite = vbeer_suite(L);
    for (const auto& c : suite.clauses)
        std::cout << "  " << (c.asserted ? "" : "(observed) ") << c.id << ": " << (c.holds ? "holds" : "fails")
                  << "\n";
    return suite.consistent() ? 0 : 1;
}

#include "chow/presentation.hpp"

#include "chow/classes.hpp"
#include "chow/localization.hpp"

namespace chow {

bool presentation_supported(int n, int d) {
    if (n < 2 || d < 2) return false;
    return (n == 3 && d == 3) || d == 2 || n == 2;
}

Presentation presentation_for(int n, int d) {
    if (!presentation_supported(n, d))
        throw UnsupportedPresentation(
            "no presentation is known for (n, d) = (" + std::to_string(n) + ", " +
            std::to_string(d) +
            "); supported: (3, 3), (n, 2) and (2, d). The next case (3, 4) is open.");

    Presentation pres;
    pres.n = n;
    pres.d = d;
    for (int i = 1; i <= n; ++i) pres.generator_names.push_back("c" + std::to_string(i));
    pres.generator_names.push_back("h");

    pres.relations = alpha_generators(n, d, "h");
    for (int i = 1; i <= n; ++i) pres.relation_names.push_back("alpha" + std::to_string(i));

    if (n == 3 && d == 3) {
        pres.relations.push_back(delta_class(3, 3, Partition({1, 2})));
        pres.relation_names.push_back("delta2");
        pres.provenance =
            "singular-incidence relations alpha1..alpha3 plus the class delta2 of the "
            "reducible locus; delta2 is 2-torsion modulo the alpha ideal";
    } else {
        pres.provenance = "the singular-incidence relations alpha1..alpha" + std::to_string(n) +
                          " generate the full relation ideal in this range";
    }
    return pres;
}

} // namespace chow

#pragma once

#include <string>

#include "pervcoh/matrix.hpp"

namespace pervcoh {

// Finitely presented module coker(presentation : S^cols -> S^rank). The
// provenance tag survives into reports ("H^0(structure)" and the like).
struct PresentedModule {
    RingPtr ring;
    int rank = 0;  // ambient free rank, == presentation.rows()
    Matrix presentation;
    std::string provenance;

    PresentedModule() = default;
    PresentedModule(RingPtr r, Matrix pres, std::string tag = {})
        : ring(std::move(r)), rank(pres.rows()), presentation(std::move(pres)),
          provenance(std::move(tag)) {}

    static PresentedModule zero(RingPtr r, std::string tag = {}) {
        Matrix m(r, 0, 0);
        return PresentedModule(std::move(r), std::move(m), std::move(tag));
    }
};

}  // namespace pervcoh

#pragma once

#include "dupont/complexes.hpp"
#include "dupont/poly_form.hpp"
#include "dupont/simplex_forms.hpp"

namespace dupont {

// Closed-form operators on [0,1] in the coordinate x = t_1, acting on
// one-variable PolyForms. Cochains live on Delta^1.
PolyForm interval_whitney(const Cochain<Simplex>& x);
Cochain<Simplex> interval_integration(const PolyForm& a);
// s(g dx) = int_0^x g - x int_0^1 g, and s vanishes on functions.
PolyForm interval_dupont(const PolyForm& a);

// Definite integral of a one-variable polynomial (0-form part) over [lo, hi].
Scalar integrate_poly(const PolyForm& g, const Scalar& lo, const Scalar& hi);
// Antiderivative vanishing at `base`.
PolyForm antiderivative(const PolyForm& g, const Scalar& base);

// Delta^1 forms <-> forms in x = t_1.
PolyForm to_interval_coordinate(const SimplexForm& a);
SimplexForm from_interval_coordinate(const PolyForm& a);

}  // namespace dupont

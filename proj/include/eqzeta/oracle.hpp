#ifndef EQZETA_ORACLE_HPP
#define EQZETA_ORACLE_HPP

#include "eqzeta/arccoef.hpp"
#include "eqzeta/germs.hpp"
#include "eqzeta/grim.hpp"

// Independent recomputation of the catalogue and the arc-space coefficients
// by mechanizing the stratification / blow-up recursions of the proofs.  This
// module shares only the exact-arithmetic layer and the basic point, affine
// and sphere values with the closed-form modules; in particular it never
// calls beta_Y or the closed-form coefficient functions.  Exact agreement
// with the closed forms over the acceptance grid is the correctness gate.
//
// The quadric recursion relies on strata that are globally stable under the
// involution; pairing an acted variable against an unacted one swaps the
// would-be strata and is therefore excluded (only unacted hyperbolic pairs
// are ever eliminated).

namespace eqzeta::oracle {

// derivation log: each step is one stratum with its contribution
struct RecursionTrace {
    std::vector<std::pair<std::string, SeriesValue>> steps;
    SeriesValue total;
    std::string str() const;
};

RatFunc oracle_Y(grim::QuadSig sig, grim::GAction action, RecursionTrace* trace = nullptr);
RatFunc oracle_Y_fiber(grim::QuadSig sig, int xi, grim::GAction action);

RatFunc oracle_diag_zero(int e, grim::QuadSig sig, int eps, grim::PQAction action);
SeriesValue oracle_power_fiber(int e, int eps, grim::QuadSig sig, grim::PQAction action, int xi);
RatFunc oracle_curve_zero(int l, int eps, bool flip_x);
RatFunc oracle_cusp_fiber(int l, int xi, bool flip_x);

SeriesValue oracle_coeff_zero(const germs::GermNormalForm& g, int m,
                              RecursionTrace* trace = nullptr);
SeriesValue oracle_coeff_sign(const germs::GermNormalForm& g, int m, int xi);

}  // namespace eqzeta::oracle

#endif

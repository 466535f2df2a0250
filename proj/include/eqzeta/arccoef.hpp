#ifndef EQZETA_ARCCOEF_HPP
#define EQZETA_ARCCOEF_HPP

#include "eqzeta/germs.hpp"
#include "eqzeta/grim.hpp"
#include "eqzeta/qring.hpp"

// Closed-form arc-space coefficients beta(A_m^0), beta(A_m^xi), beta(0A_m),
// beta(A_m) for the A/B, C/D, E6/F4 normal forms, and truncated zeta-series
// assembly.  Every request outside the proven m-range errors; no formula is
// extrapolated.  All geometric-series factors go through gsum, so the
// degenerate small signatures need no special-casing and must agree with the
// dedicated low-signature formulas (asserted in tests).

namespace eqzeta::arccoef {

struct OutOfRange : std::runtime_error {
    explicit OutOfRange(const std::string& what) : std::runtime_error(what) {}
};

// beta(A_m^0): arcs on which the germ vanishes to order > m.
SeriesValue coeff_zero(const germs::GermNormalForm& g, int m);
// beta(A_m^xi): arcs with leading coefficient exactly xi at order m.
SeriesValue coeff_sign(const germs::GermNormalForm& g, int m, int xi);
// beta(0A_m) = u^n beta(A_{m-1}^0); full arc space for m = 1.
SeriesValue coeff_lift(const germs::GermNormalForm& g, int m);
// beta(A_m) = beta(0A_m) - beta(A_m^0).
SeriesValue coeff_net(const germs::GermNormalForm& g, int m);

// Largest m with a proven formula on each channel; INT_MAX for the A_0
// family whose coefficients are affine for every m.
int naive_bound(const germs::GermNormalForm& g);
int sign_bound(const germs::GermNormalForm& g);
int channel_bound(const germs::GermNormalForm& g, Channel c);

// The largest degree with closed forms for the cross-pair this germ can sit
// in (2k for A/B, k for C/D, 4 for E6/F4); 0 when there is none.
int pair_critical_degree(const germs::GermNormalForm& g);

ZetaSeries zeta_truncated(const germs::GermNormalForm& g, Channel channel, int M);

enum class PairKind { AB, CD, EF };

// The atom equalities of the conditional clauses, instantiated on the sign
// fiber face_xi.  eta_branch is the acted sign of the surviving branch
// (+1 when p > q + 1, -1 when q > p + 1).
std::vector<AtomEq> pair_conditions(PairKind kind, int k, int p, int q, int eta_branch, int eps,
                                    int face_xi);

// Tail annotation for the cross-pair rules when this germ's parameters meet
// their hypotheses; Unknown otherwise.
TailInfo tail_rule(const germs::GermNormalForm& g, Channel channel);

}  // namespace eqzeta::arccoef

#endif

#ifndef EQZETA_GRIM_HPP
#define EQZETA_GRIM_HPP

#include "eqzeta/qring.hpp"

// Catalogue of equivariant virtual Poincare series for the building-block
// sets: points, affine spaces, spheres, the quadric cones Y_{p,q} and their
// fibers under the four involutions, and the residual sets of the top-degree
// arc-coefficient computations.
//
// Values live in the arc-symmetric category, where only additivity over
// constructible pieces, products with (flipped) affine factors, and genuine
// birational equivariant isomorphisms are available.  Nash-but-not-birational
// identifications give wrong answers here.  Worked counterexample: the
// hyperbola {y1^2 - y2^2 = 1} with the sign flip on y2 has value
// (u^2+1)/(u-1), obtained by equivariant compactification; treating each
// branch as an affine line with a flip would give 2u^2/(u-1), which is NOT
// the value of this invariant.

namespace eqzeta::grim {

struct IncompatibleAction : std::runtime_error {
    explicit IncompatibleAction(const std::string& what) : std::runtime_error(what) {}
};
struct UnsupportedAction : std::runtime_error {
    explicit UnsupportedAction(const std::string& what) : std::runtime_error(what) {}
};
// Residual set the classification leaves uncomputed and uncatalogued.
struct UnresolvedResidual : std::runtime_error {
    explicit UnresolvedResidual(const std::string& what) : std::runtime_error(what) {}
};

// The four involutions on the variables of Q_{p,q}:
//   FlipPlus  (case 1): change the sign of one +y^2 variable   (needs p >= 1)
//   FlipMinus (case 2): change the sign of one -y^2 variable   (needs q >= 1)
//   FlipAll   (case 3): change the sign of every variable
//   Trivial   (case 4): identity
enum class GAction { FlipPlus = 1, FlipMinus = 2, FlipAll = 3, Trivial = 4 };

struct QuadSig {
    int p = 0, q = 0;
    QuadSig() = default;
    QuadSig(int p_, int q_) : p(p_), q(q_) {}
};

enum class PointKind { OneFixed, TwoFixed, TwoSwapped };

RatFunc beta_point(PointKind kind);
RatFunc beta_affine(int d);                        // u^{d+1}/(u-1), any action
RatFunc beta_sphere(int d, bool has_fixed_point);  // d >= 0

RatFunc beta_Y(QuadSig sig, GAction action);            // {Q_{p,q} = 0}
RatFunc beta_Y_punctured(QuadSig sig, GAction action);  // minus the origin
RatFunc beta_Y_fiber(QuadSig sig, int xi, GAction action);  // {Q_{p,q} = xi}

// Involutions on the (x, y)-space of {eps*x^e + Q_{p,q}(y) = c}.
enum class PQAction { FlipYPlus, FlipYMinus, FlipX, FlipAll, Trivial };

// beta of the zero set {eps*x^e + Q_{p,q}(y) = 0} in R^{1+p+q}.
RatFunc beta_diagonal_zero(int e, QuadSig sig, int eps, PQAction action);

// beta of {x^2*y + eps*y^{2l+1} = 0} in R^2; flip_x flips the squared variable.
RatFunc beta_curve_zero(int l, int eps, bool flip_x);

// beta of {x^2*y + y^{2l+1} = xi} in R^2: a circle once compactified and
// resolved, value u^2/(u-1) for both signs and both actions.
RatFunc beta_cusp_fiber(int l, int xi, bool flip_x);

// beta of {overall*(x^e + K squares) = xi}: empty or a sphere with fixed
// points.  The action variant does not change the value.
RatFunc beta_definite_fiber(int e, int K, int overall, int xi);

// A single unresolved atom with coefficient 1 (canonical face: squares
// positive; even power carries -1, odd and cubic powers carry +1; the
// quartic-cubic template keeps its quartic coefficient in eps).
SeriesValue make_residual(Atom::Template tmpl, int e, int K, int xi,
                          Atom::Variant variant, int eps = +1);

// Canonicalizing atom factories from face data (signs as they appear in the
// defining equation, squares carrying square_sign).
Atom atom_even_mixed(int e, int K, int power_sign, int xi, Atom::Variant variant);
Atom atom_odd_mixed(int e, int K, int square_sign, int xi, Atom::Variant variant);
Atom atom_cubic_mixed(int K, int square_sign, int xi, Atom::Variant variant);
Atom atom_quartic_cubic(int K, int quartic_eps, int square_sign, int xi, Atom::Variant variant);

// beta of the fiber {eps*x^e + Q_{p,q}(y) = xi}, e even >= 2, reduced by
// hyperbolic-pair elimination to a definite sphere/empty residual or to a
// catalogued atom.  Throws UnresolvedResidual when the remaining set is
// neither (mixed squares around the acted variable).
SeriesValue power_quadric_fiber(int e, int eps, QuadSig sig, PQAction action, int xi);

}  // namespace eqzeta::grim

#endif

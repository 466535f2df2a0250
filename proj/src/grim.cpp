#include "eqzeta/grim.hpp"

namespace eqzeta::grim {

namespace {

const RatFunc kPoint = RatFunc(IntPoly::u()) / RatFunc(IntPoly{-1, 1});  // u/(u-1)

RatFunc upow(int e) { return RatFunc(IntPoly::monomial(e)); }

RatFunc over_um1(IntPoly num) { return RatFunc(std::move(num), IntPoly{-1, 1}); }

void check_action(QuadSig sig, GAction a) {
    if (a == GAction::FlipPlus && sig.p < 1)
        throw IncompatibleAction("flip-plus action needs p >= 1");
    if (a == GAction::FlipMinus && sig.q < 1)
        throw IncompatibleAction("flip-minus action needs q >= 1");
}

QuadSig merged_sig(QuadSig sig, int eps) {
    return eps > 0 ? QuadSig{sig.p + 1, sig.q} : QuadSig{sig.p, sig.q + 1};
}

void check_pq_action(QuadSig sig, PQAction a) {
    if (a == PQAction::FlipYPlus && sig.p < 1)
        throw IncompatibleAction("flip on a plus square needs p >= 1");
    if (a == PQAction::FlipYMinus && sig.q < 1)
        throw IncompatibleAction("flip on a minus square needs q >= 1");
}

}  // namespace

RatFunc beta_point(PointKind kind) {
    switch (kind) {
        case PointKind::OneFixed: return kPoint;
        case PointKind::TwoFixed: return RatFunc(2) * kPoint;
        case PointKind::TwoSwapped: return RatFunc(1);
    }
    throw std::logic_error("beta_point");
}

RatFunc beta_affine(int d) {
    if (d < 0) throw std::invalid_argument("beta_affine: d >= 0");
    return over_um1(IntPoly::monomial(d + 1));
}

RatFunc beta_sphere(int d, bool has_fixed_point) {
    if (d < 0) throw std::invalid_argument("beta_sphere: d >= 0");
    if (!has_fixed_point) return RatFunc(gsum(1, d + 1));  // 1 + u + ... + u^d
    RatFunc tail(0);
    for (int i = 1; i <= d; ++i) tail = tail + upow(i);
    return beta_point(PointKind::TwoFixed) + tail;
}

RatFunc beta_Y(QuadSig sig, GAction action) {
    if (sig.p < 0 || sig.q < 0) throw std::invalid_argument("beta_Y: negative signature");
    check_action(sig, action);
    if (sig.p == 0 || sig.q == 0) return kPoint;  // Y is the origin
    int p = sig.p, q = sig.q;
    GAction a = action;
    if (q < p) {
        std::swap(p, q);  // exchange roles of p and q along with cases 1 and 2
        if (a == GAction::FlipPlus)
            a = GAction::FlipMinus;
        else if (a == GAction::FlipMinus)
            a = GAction::FlipPlus;
    }
    if (p < q) {
        IntPoly num = IntPoly::monomial(p + q) - IntPoly::monomial(q) +
                      IntPoly::monomial(a == GAction::FlipPlus ? p - 1 : p + 1);
        return over_um1(num);
    }
    // p == q
    bool low = (a == GAction::FlipPlus || a == GAction::FlipMinus);
    IntPoly num = IntPoly::monomial(2 * p) - IntPoly::monomial(p) +
                  IntPoly::monomial(low ? p - 1 : p + 1);
    return over_um1(num);
}

RatFunc beta_Y_punctured(QuadSig sig, GAction action) { return beta_Y(sig, action) - kPoint; }

RatFunc beta_Y_fiber(QuadSig sig, int xi, GAction action) {
    if (action == GAction::FlipAll)
        throw UnsupportedAction(
            "fiber compactification under the flip-all action is not one of the four tabulated involutions");
    check_action(sig, action);
    QuadSig big = xi > 0 ? QuadSig{sig.p, sig.q + 1} : QuadSig{sig.p + 1, sig.q};
    return (beta_Y(big, action) - beta_Y(sig, action)) / (RatFunc(IntPoly::u()) - RatFunc(1));
}

RatFunc beta_diagonal_zero(int e, QuadSig sig, int eps, PQAction action) {
    if (e < 1) throw std::invalid_argument("beta_diagonal_zero: e >= 1");
    check_pq_action(sig, action);
    if (e == 1) return beta_affine(sig.p + sig.q);  // graph of a function
    if (e % 2 == 1) {
        // odd exponent: successive blowings-up, one correction per unit of e
        GAction sub;
        switch (action) {
            case PQAction::FlipYPlus: sub = GAction::FlipPlus; break;
            case PQAction::FlipYMinus: sub = GAction::FlipMinus; break;
            case PQAction::Trivial: sub = GAction::Trivial; break;
            default:
                throw UnsupportedAction("odd-exponent diagonal set with an action on the power variable");
        }
        return beta_affine(sig.p + sig.q) -
               RatFunc(e) * (beta_Y(sig, sub) - kPoint);
    }
    int k = e / 2;
    GAction merged_action;
    GAction sub_action;
    switch (action) {
        case PQAction::FlipYPlus:
            merged_action = GAction::FlipPlus;
            sub_action = GAction::FlipPlus;
            break;
        case PQAction::FlipYMinus:
            merged_action = GAction::FlipMinus;
            sub_action = GAction::FlipMinus;
            break;
        case PQAction::Trivial:
            merged_action = GAction::Trivial;
            sub_action = GAction::Trivial;
            break;
        case PQAction::FlipX:
            // the blow-ups alternate flip-x / flip-all; the flipped variable
            // lands on the merged square after an odd number of steps
            merged_action = (k % 2 == 1) ? (eps > 0 ? GAction::FlipPlus : GAction::FlipMinus)
                                         : GAction::FlipAll;
            sub_action = GAction::Trivial;  // case-3 and case-4 values agree on Y_{p,q}
            break;
        case PQAction::FlipAll:
            merged_action = (k % 2 == 0) ? (eps > 0 ? GAction::FlipPlus : GAction::FlipMinus)
                                         : GAction::FlipAll;
            sub_action = GAction::Trivial;
            break;
        default:
            throw std::logic_error("beta_diagonal_zero: bad action");
    }
    RatFunc head = beta_Y(merged_sig(sig, eps), merged_action);
    if (k == 1) return head;
    return head - RatFunc(k - 1) * (beta_Y(sig, sub_action) - kPoint);
}

RatFunc beta_curve_zero(int l, int eps, bool flip_x) {
    if (l < 1) throw std::invalid_argument("beta_curve_zero: l >= 1");
    RatFunc base = eps > 0 ? kPoint
                           : beta_Y(QuadSig{1, 1}, flip_x ? GAction::FlipPlus : GAction::Trivial);
    return base - kPoint + beta_affine(1);
}

RatFunc beta_cusp_fiber(int l, int xi, bool /*flip_x*/) {
    if (l < 1) throw std::invalid_argument("beta_cusp_fiber: l >= 1");
    if (xi != 1 && xi != -1) throw std::invalid_argument("beta_cusp_fiber: xi = +-1");
    // circle with a fixed point, minus the resolved singular point
    return RatFunc(IntPoly::u()) + beta_point(PointKind::TwoFixed) - kPoint;
}

RatFunc beta_definite_fiber(int e, int K, int overall, int xi) {
    if (e < 2 || e % 2 != 0) throw std::invalid_argument("beta_definite_fiber: e even >= 2");
    if (K < 1) throw std::invalid_argument("beta_definite_fiber: K >= 1");
    if (overall * xi < 0) return RatFunc(0);  // empty
    return beta_sphere(K, true);
}

Atom atom_even_mixed(int e, int K, int power_sign, int xi, Atom::Variant variant) {
    if (e < 2 || e % 2 != 0 || K < 1) throw std::invalid_argument("atom_even_mixed");
    int key_xi = power_sign < 0 ? xi : -xi;  // negate {x^e - S = xi} to the -x^e face
    return Atom{Atom::Template::EvenMixed, e, K, key_xi, variant, +1};
}

Atom atom_odd_mixed(int e, int K, int square_sign, int xi, Atom::Variant variant) {
    if (e < 5 || e % 2 == 0 || K < 1) throw std::invalid_argument("atom_odd_mixed");
    int key_xi = square_sign > 0 ? xi : -xi;
    return Atom{Atom::Template::OddMixed, e, K, key_xi, variant, +1};
}

Atom atom_cubic_mixed(int K, int square_sign, int xi, Atom::Variant variant) {
    if (K < 1) throw std::invalid_argument("atom_cubic_mixed");
    int key_xi = square_sign > 0 ? xi : -xi;
    return Atom{Atom::Template::CubicMixed, 3, K, key_xi, variant, +1};
}

Atom atom_quartic_cubic(int K, int quartic_eps, int square_sign, int xi, Atom::Variant variant) {
    if (K < 1) throw std::invalid_argument("atom_quartic_cubic");
    int key_xi = square_sign > 0 ? xi : -xi;
    int key_eps = square_sign > 0 ? quartic_eps : -quartic_eps;
    return Atom{Atom::Template::QuarticCubicMixed, 4, K, key_xi, variant, key_eps};
}

SeriesValue make_residual(Atom::Template tmpl, int e, int K, int xi, Atom::Variant variant, int eps) {
    Atom a{tmpl, e, K, xi, variant, tmpl == Atom::Template::QuarticCubicMixed ? eps : +1};
    if (K < 1) throw std::invalid_argument("make_residual: K >= 1");
    return SeriesValue::atom(a);
}

SeriesValue power_quadric_fiber(int e, int eps, QuadSig sig, PQAction action, int xi) {
    if (e < 2 || e % 2 != 0) throw std::invalid_argument("power_quadric_fiber: e even >= 2");
    check_pq_action(sig, action);
    if (e == 2) {
        GAction merged;
        switch (action) {
            case PQAction::FlipYPlus: merged = GAction::FlipPlus; break;
            case PQAction::FlipYMinus: merged = GAction::FlipMinus; break;
            case PQAction::Trivial: merged = GAction::Trivial; break;
            case PQAction::FlipX: merged = eps > 0 ? GAction::FlipPlus : GAction::FlipMinus; break;
            case PQAction::FlipAll:
                throw UnsupportedAction("quadric fiber under flip-all");
            default: throw std::logic_error("power_quadric_fiber");
        }
        return SeriesValue(beta_Y_fiber(merged_sig(sig, eps), xi, merged));
    }
    if (action == PQAction::FlipAll)
        throw UnsupportedAction("power fiber under flip-all");

    int p = sig.p, q = sig.q;
    RatFunc sum(0);
    RatFunc pref(1);
    auto eliminate = [&](int& P, int& M) {
        // {uv + rest = xi}: split on u != 0 (graph over R^* x free) and u = 0
        int dim = 1 + P + M;
        sum = sum + pref * upow(dim - 1);
        pref = pref * RatFunc(IntPoly::u());
        --P;
        --M;
    };

    if (action == PQAction::FlipX || action == PQAction::Trivial) {
        while (p >= 1 && q >= 1) eliminate(p, q);
        SeriesValue residual;
        if (p == 0 && q == 0) {
            // {eps*x^e = xi}: two points, swapped under flip-x, fixed otherwise
            if (eps * xi > 0)
                residual = SeriesValue(action == PQAction::FlipX ? beta_point(PointKind::TwoSwapped)
                                                                 : beta_point(PointKind::TwoFixed));
        } else {
            Atom::Variant variant = action == PQAction::FlipX ? Atom::Variant::FlipOnPowerVariable
                                                              : Atom::Variant::TrivialAction;
            if (q == 0) {
                if (eps > 0)
                    residual = SeriesValue(beta_definite_fiber(e, p, +1, xi));
                else
                    residual = SeriesValue::atom(atom_even_mixed(e, p, -1, xi, variant));
            } else {
                if (eps < 0)
                    residual = SeriesValue(beta_definite_fiber(e, q, -1, xi));
                else
                    residual = SeriesValue::atom(atom_even_mixed(e, q, +1, xi, variant));
            }
        }
        return SeriesValue(sum) + residual.scaled(pref);
    }

    // action on one square inside Q
    int sigma = action == PQAction::FlipYPlus ? +1 : -1;
    // stage 1: pair off squares not touching the acted one
    {
        int avail = std::min(p, q) - 1;
        for (int i = 0; i < avail; ++i) eliminate(p, q);
    }
    // stage 2: pair the remaining opposite squares against unacted partners
    while (p >= 1 && q >= 1) {
        bool can = sigma > 0 ? (p >= 2) : (q >= 2);
        if (!can)
            throw UnresolvedResidual(
                "mixed residual around the acted square has no catalogued value");
        eliminate(p, q);
    }
    SeriesValue residual;
    if (sigma > 0) {
        // {eps*x^e + p squares = xi}, acted square among them
        if (eps > 0)
            residual = SeriesValue(beta_definite_fiber(e, p, +1, xi));
        else
            residual = SeriesValue::atom(atom_even_mixed(e, p, -1, xi, Atom::Variant::FlipInsideSquares));
    } else {
        if (eps < 0)
            residual = SeriesValue(beta_definite_fiber(e, q, -1, xi));
        else
            residual = SeriesValue::atom(atom_even_mixed(e, q, +1, xi, Atom::Variant::FlipInsideSquares));
    }
    return SeriesValue(sum) + residual.scaled(pref);
}

}  // namespace eqzeta::grim

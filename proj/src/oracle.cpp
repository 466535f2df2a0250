#include "eqzeta/oracle.hpp"

#include <sstream>

namespace eqzeta::oracle {

using germs::Family;
using germs::GermNormalForm;
using grim::GAction;
using grim::PQAction;
using grim::QuadSig;

namespace {

const RatFunc kPoint = RatFunc(IntPoly::u()) / RatFunc(IntPoly{-1, 1});
const RatFunc kUm1 = RatFunc(IntPoly::u()) - RatFunc(1);

RatFunc upow(int e) { return RatFunc(IntPoly::monomial(e)); }

void record(RecursionTrace* trace, const std::string& what, const SeriesValue& v) {
    if (trace) {
        trace->steps.emplace_back(what, v);
        trace->total = trace->total + v;
    }
}

bool flips_inside_quadric(const GermNormalForm& g) {
    return g.family == Family::A || g.family == Family::D || g.family == Family::E6 ||
           g.family == Family::E7 || g.family == Family::E8;
}

GAction y_action(const GermNormalForm& g) {
    if (!flips_inside_quadric(g)) return GAction::Trivial;
    return g.eta() > 0 ? GAction::FlipPlus : GAction::FlipMinus;
}

PQAction pq_action(const GermNormalForm& g) {
    switch (g.family) {
        case Family::A:
        case Family::D:
        case Family::E6:
            return g.eta() > 0 ? PQAction::FlipYPlus : PQAction::FlipYMinus;
        case Family::B:
        case Family::F4: return PQAction::FlipX;
        case Family::C: return PQAction::Trivial;
        default: throw std::logic_error("oracle: unsupported family");
    }
}

RatFunc o_ypunct(QuadSig sig, GAction a) { return oracle_Y(sig, a) - kPoint; }

}  // namespace

std::string RecursionTrace::str() const {
    std::ostringstream out;
    for (const auto& [what, v] : steps) out << what << ": " << v.str() << "\n";
    out << "total: " << total.str() << "\n";
    return out.str();
}

RatFunc oracle_Y(QuadSig sig, GAction action, RecursionTrace* trace) {
    if (action == GAction::FlipPlus && sig.p < 1)
        throw grim::IncompatibleAction("flip-plus action needs p >= 1");
    if (action == GAction::FlipMinus && sig.q < 1)
        throw grim::IncompatibleAction("flip-minus action needs q >= 1");
    int p = sig.p, q = sig.q;
    GAction a = action;
    if (q < p) {
        std::swap(p, q);
        if (a == GAction::FlipPlus) a = GAction::FlipMinus;
        else if (a == GAction::FlipMinus) a = GAction::FlipPlus;
    }
    if (p == 0) {
        record(trace, "origin", SeriesValue(kPoint));
        return kPoint;
    }
    // hyperbolic-pair elimination: stratum {u_i != 0} is a graph over
    // R^* x R^{p+q-i}, contribution u^{p+q+1-i}
    RatFunc total(0);
    for (int i = 2; i <= p; ++i) {
        RatFunc c = upow(p + q + 1 - i);
        record(trace, "hyperbolic stratum u_" + std::to_string(i) + " != 0", SeriesValue(c));
        total = total + c;
    }
    // blow-up base in 2 + (q - p) variables
    RatFunc base;
    if (p < q) {
        bool fixed = a != GAction::FlipPlus;  // case 1 acts by central symmetry on the sphere
        base = kUm1 * grim::beta_sphere(q - p, fixed) + kPoint;
    } else {
        RatFunc two = (a == GAction::FlipPlus || a == GAction::FlipMinus)
                          ? RatFunc(1)            // the two points are swapped
                          : RatFunc(2) * kPoint;  // fixed
        base = kUm1 * two + kPoint;
    }
    RatFunc c = upow(p - 1) * base;
    record(trace, "blow-up base x " + std::string("u^") + std::to_string(p - 1), SeriesValue(c));
    return total + c;
}

RatFunc oracle_Y_fiber(QuadSig sig, int xi, GAction action) {
    if (action == GAction::FlipAll)
        throw grim::UnsupportedAction("fiber compactification under the flip-all action");
    // beta(Z_{p,q}) = beta(Y_{p,q} minus 0) / (u-1); the fiber is the
    // difference of the two projective quadric values
    QuadSig big = xi > 0 ? QuadSig{sig.p, sig.q + 1} : QuadSig{sig.p + 1, sig.q};
    RatFunc zbig = o_ypunct(big, action) / kUm1;
    RatFunc zsmall = o_ypunct(sig, action) / kUm1;
    return zbig - zsmall;
}

RatFunc oracle_diag_zero(int e, QuadSig sig, int eps, PQAction action) {
    if (e < 1) throw std::invalid_argument("oracle_diag_zero: e >= 1");
    if (e == 1) return grim::beta_affine(sig.p + sig.q);  // graph
    if (e == 2) {
        QuadSig merged = eps > 0 ? QuadSig{sig.p + 1, sig.q} : QuadSig{sig.p, sig.q + 1};
        GAction ma;
        switch (action) {
            case PQAction::FlipYPlus: ma = GAction::FlipPlus; break;
            case PQAction::FlipYMinus: ma = GAction::FlipMinus; break;
            case PQAction::Trivial: ma = GAction::Trivial; break;
            case PQAction::FlipX: ma = eps > 0 ? GAction::FlipPlus : GAction::FlipMinus; break;
            case PQAction::FlipAll: ma = GAction::FlipAll; break;
            default: throw std::logic_error("oracle_diag_zero");
        }
        return oracle_Y(merged, ma);
    }
    if (e % 2 == 1) {
        GAction sub;
        switch (action) {
            case PQAction::FlipYPlus: sub = GAction::FlipPlus; break;
            case PQAction::FlipYMinus: sub = GAction::FlipMinus; break;
            case PQAction::Trivial: sub = GAction::Trivial; break;
            default: throw grim::UnsupportedAction("odd-exponent diagonal with a flipped power variable");
        }
        return grim::beta_affine(sig.p + sig.q) - RatFunc(e) * o_ypunct(sig, sub);
    }
    // one blow-up step: the chart variable slice contributes the quadric cone
    GAction slice;
    PQAction next = action;
    switch (action) {
        case PQAction::FlipYPlus: slice = GAction::FlipPlus; break;
        case PQAction::FlipYMinus: slice = GAction::FlipMinus; break;
        case PQAction::Trivial: slice = GAction::Trivial; break;
        case PQAction::FlipX:
            slice = GAction::FlipAll;
            next = PQAction::FlipAll;
            break;
        case PQAction::FlipAll:
            slice = GAction::Trivial;
            next = PQAction::FlipX;
            break;
        default: throw std::logic_error("oracle_diag_zero");
    }
    return oracle_diag_zero(e - 2, sig, eps, next) - o_ypunct(sig, slice);
}

SeriesValue oracle_power_fiber(int e, int eps, QuadSig sig, PQAction action, int xi) {
    if (e < 2 || e % 2 != 0) throw std::invalid_argument("oracle_power_fiber: e even >= 2");
    int p = sig.p, q = sig.q;
    if (action == PQAction::FlipYPlus && p < 1) throw grim::IncompatibleAction("needs p >= 1");
    if (action == PQAction::FlipYMinus && q < 1) throw grim::IncompatibleAction("needs q >= 1");
    if (action == PQAction::FlipAll) throw grim::UnsupportedAction("power fiber under flip-all");

    bool acts_inside = action == PQAction::FlipYPlus || action == PQAction::FlipYMinus;
    int sigma = action == PQAction::FlipYPlus ? +1 : action == PQAction::FlipYMinus ? -1 : 0;
    if (p >= 1 && q >= 1) {
        bool can = !acts_inside || (sigma > 0 ? p >= 2 : q >= 2);
        if (!can)
            throw grim::UnresolvedResidual("mixed residual around the acted square has no catalogued value");
        // one unacted hyperbolic pair: {uv + rest = xi}
        SeriesValue rest = oracle_power_fiber(e, eps, {p - 1, q - 1}, action, xi);
        return SeriesValue(upow(p + q)) + rest.scaled(RatFunc(IntPoly::u()));
    }
    // residual: squares of a single sign (or none) next to eps*x^e
    if (p == 0 && q == 0) {
        if (eps * xi < 0) return SeriesValue(0);
        return SeriesValue(action == PQAction::FlipX ? grim::beta_point(grim::PointKind::TwoSwapped)
                                                     : grim::beta_point(grim::PointKind::TwoFixed));
    }
    Atom::Variant variant = acts_inside ? Atom::Variant::FlipInsideSquares
                            : action == PQAction::FlipX ? Atom::Variant::FlipOnPowerVariable
                                                        : Atom::Variant::TrivialAction;
    if (q == 0) {
        if (eps > 0) return SeriesValue(xi > 0 ? grim::beta_sphere(p, true) : RatFunc(0));
        return SeriesValue::atom(grim::atom_even_mixed(e, p, -1, xi, variant));
    }
    if (eps < 0) return SeriesValue(xi < 0 ? grim::beta_sphere(q, true) : RatFunc(0));
    return SeriesValue::atom(grim::atom_even_mixed(e, q, +1, xi, variant));
}

RatFunc oracle_curve_zero(int l, int eps, bool flip_x) {
    // {x^2 y + eps y^{2l+1} = 0}: the line {y = 0} plus the punctured set
    // {x^2 + eps y^{2l} = 0} minus its origin
    PQAction act = flip_x ? PQAction::FlipYPlus : PQAction::Trivial;  // flip sits on the square x
    RatFunc diag = oracle_diag_zero(2 * l, {1, 0}, eps, act);
    return grim::beta_affine(1) + diag - kPoint;
}

RatFunc oracle_cusp_fiber(int /*l*/, int /*xi*/, bool /*flip_x*/) {
    // compactify and resolve: a circle with fixed points, minus the point
    // replacing the resolved singularity
    return RatFunc(IntPoly::u()) + grim::beta_point(grim::PointKind::TwoFixed) - kPoint;
}

namespace {

// ---- A/B arc recursion (first nonzero coordinate of c_1, then descend) ----

int e_ab(int m, int s) { return m + (m - 1) * (s - 1) + 1; }

SeriesValue ab_rec_zero(int m, int s, const RatFunc& oy, const RatFunc& oyp, int n,
                        RecursionTrace* trace, const RatFunc& pref = RatFunc(1)) {
    if (m == 1) {
        SeriesValue v(grim::beta_affine(n));
        record(trace, "m=1: whole jet space", v.scaled(pref));
        return v;
    }
    if (m == 2) {
        SeriesValue v(upow(2 + s) * oy);
        record(trace, "base A_2^0: quadric cone x free jet", v.scaled(pref));
        return v;
    }
    if (m == 3) {
        SeriesValue v(upow(e_ab(3, s)) * oyp + upow(4 + 2 * s) / kUm1);
        record(trace, "base A_3^0", v.scaled(pref));
        return v;
    }
    SeriesValue stratum(upow(e_ab(m, s)) * oyp);
    record(trace, "stratum c_1 != 0 at m=" + std::to_string(m), stratum.scaled(pref));
    return stratum +
           ab_rec_zero(m - 2, s, oy, oyp, n, trace, pref * upow(2 + s)).scaled(upow(2 + s));
}

SeriesValue ab_rec_sign(int m, int s, const RatFunc& oyf, const RatFunc& oyp) {
    if (m == 1) return SeriesValue(0);
    if (m == 2) return SeriesValue(upow(2 + s) * oyf);
    if (m == 3) return SeriesValue(upow(e_ab(3, s)) * oyp);  // the c_1 = 0 part is empty
    return SeriesValue(upow(e_ab(m, s)) * oyp) + ab_rec_sign(m - 2, s, oyf, oyp).scaled(upow(2 + s));
}

SeriesValue ab_top(int kb, int s, const RatFunc& oyp, const SeriesValue& core) {
    // m = 2*kb; descend k-1 times, then the eps*a^{2k} + Q equation
    SeriesValue total(0);
    for (int t = 0; t <= kb - 2; ++t)
        total = total + SeriesValue(upow(t * (2 + s) + e_ab(2 * kb - 2 * t, s)) * oyp);
    return total + core.scaled(upow((kb - 1) * (2 + s) + 1 + s));
}

// ---- C/D arc recursion ----

int e_cd(int m, int s) { return 2 * m + (m - 1) * (s - 1) + 1; }

SeriesValue cd_rec_zero(int m, int s, const RatFunc& oy, const RatFunc& oyp, int n) {
    if (m == 1) return SeriesValue(grim::beta_affine(n));
    if (m == 2) return SeriesValue(upow(4 + s) * oy);
    if (m == 3) {
        // {c_1 = 0} leaves {a^2 b = 0}: two crossing lines, times free jets
        RatFunc two_lines = grim::beta_affine(1) + grim::beta_affine(1) - kPoint;
        return SeriesValue(upow(e_cd(3, s)) * oyp + upow(4 + 2 * s) * two_lines);
    }
    return SeriesValue(upow(e_cd(m, s)) * (oyp + RatFunc(1))) +
           cd_rec_zero(m - 2, s, oy, oyp, n).scaled(upow(3 + s));
}

SeriesValue cd_rec_sign(int m, int s, const RatFunc& oyf, const RatFunc& oyp) {
    if (m == 1) return SeriesValue(0);
    if (m == 2) return SeriesValue(upow(4 + s) * oyf);
    if (m == 3) {
        // {c_1 = 0}: {a^2 b = xi} is a graph over a != 0
        return SeriesValue(upow(e_cd(3, s)) * oyp + upow(5 + 2 * s));
    }
    return SeriesValue(upow(e_cd(m, s)) * (oyp + RatFunc(1))) +
           cd_rec_sign(m - 2, s, oyf, oyp).scaled(upow(3 + s));
}

SeriesValue cd_top(int kk, int s, const RatFunc& oyp, const SeriesValue& base2, bool odd_base3,
                   const SeriesValue& base3core) {
    SeriesValue total(0);
    if (kk % 2 == 1) {
        int l = (kk - 1) / 2;
        for (int t = 0; t <= l - 2; ++t)
            total = total + SeriesValue(upow(t * (3 + s) + e_cd(kk - 2 * t, s)) * (oyp + RatFunc(1)));
        // depth l-1: the c_1-stratum plus {eps b^{2l+1} + a^2 b = .} with free jets
        total = total + SeriesValue(upow((l - 1) * (3 + s) + e_cd(3, s)) * oyp);
        (void)odd_base3;
        return total + base3core.scaled(upow((l - 1) * (3 + s) + 4 + 2 * s));
    }
    int l = kk / 2;
    for (int t = 0; t <= l - 2; ++t)
        total = total + SeriesValue(upow(t * (3 + s) + e_cd(kk - 2 * t, s)) * (oyp + RatFunc(1)));
    return total + base2.scaled(upow((l - 1) * (3 + s) + 3 + s));
}

}  // namespace

SeriesValue oracle_coeff_zero(const GermNormalForm& g, int m, RecursionTrace* trace) {
    int s = g.s();
    GAction ya = y_action(g);
    switch (g.family) {
        case Family::A: {
            if (g.k == 0) {
                // every equation of the system solves one jet coordinate
                int equations = m;
                return SeriesValue(grim::beta_affine(m * g.n - equations));
            }
            if (g.k == 1) {
                if (m == 1) return SeriesValue(grim::beta_affine(g.n));
                QuadSig merged = g.eps > 0 ? QuadSig{g.p + 1, g.q} : QuadSig{g.p, g.q + 1};
                return SeriesValue(upow(1 + s) * oracle_Y(merged, ya));
            }
            if (m <= g.k)
                return ab_rec_zero(m, s, oracle_Y({g.p, g.q}, ya), o_ypunct({g.p, g.q}, ya), g.n,
                                   trace);
            int kb = (g.k + 1) / 2;
            SeriesValue diag(oracle_diag_zero(2 * kb, {g.p, g.q}, g.eps, pq_action(g)));
            return ab_top(kb, s, o_ypunct({g.p, g.q}, ya), diag);
        }
        case Family::B: {
            if (m <= 2 * g.k - 1)
                return ab_rec_zero(m, s, oracle_Y({g.p, g.q}, ya), o_ypunct({g.p, g.q}, ya), g.n,
                                   trace);
            SeriesValue diag(oracle_diag_zero(2 * g.k, {g.p, g.q}, g.eps, pq_action(g)));
            return ab_top(g.k, s, o_ypunct({g.p, g.q}, ya), diag);
        }
        case Family::C:
        case Family::D: {
            int kk = g.family == Family::C ? g.k : g.k - 1;
            if (m <= kk - 1)
                return cd_rec_zero(m, s, oracle_Y({g.p, g.q}, ya), o_ypunct({g.p, g.q}, ya), g.n);
            if (kk % 2 == 1) {
                SeriesValue curve(
                    oracle_curve_zero((kk - 1) / 2, g.eps, /*flip_x=*/g.family == Family::C));
                return cd_top(kk, s, o_ypunct({g.p, g.q}, ya), SeriesValue(0), true, curve);
            }
            SeriesValue diag(oracle_diag_zero(kk, {g.p, g.q}, g.eps, pq_action(g)));
            return cd_top(kk, s, o_ypunct({g.p, g.q}, ya), diag, false, SeriesValue(0));
        }
        case Family::E6:
        case Family::F4: {
            RatFunc oyp = o_ypunct({g.p, g.q}, ya);
            if (m == 1) return SeriesValue(grim::beta_affine(g.n));
            if (m == 2) return SeriesValue(upow(4 + s) * oracle_Y({g.p, g.q}, ya));
            if (m == 3) return SeriesValue(upow(2 * s + 5) * oyp + upow(2 * s + 6) / kUm1);
            SeriesValue diag(oracle_diag_zero(4, {g.p, g.q}, g.eps, pq_action(g)));
            return SeriesValue(upow(3 * s + 6) * oyp) + diag.scaled(upow(2 * s + 6));
        }
        default: throw std::logic_error("oracle_coeff_zero: family out of scope");
    }
}

SeriesValue oracle_coeff_sign(const GermNormalForm& g, int m, int xi) {
    int s = g.s();
    GAction ya = y_action(g);
    switch (g.family) {
        case Family::A: {
            if (g.k == 0) return SeriesValue(grim::beta_affine(m * g.n - m));
            if (m == 1) return SeriesValue(0);
            if (g.k == 1) {
                QuadSig merged = g.eps > 0 ? QuadSig{g.p + 1, g.q} : QuadSig{g.p, g.q + 1};
                return SeriesValue(upow(1 + s) * oracle_Y_fiber(merged, xi, ya));
            }
            if (m <= g.k)
                return ab_rec_sign(m, s, oracle_Y_fiber({g.p, g.q}, xi, ya),
                                   o_ypunct({g.p, g.q}, ya));
            int kb = (g.k + 1) / 2;
            SeriesValue fib = oracle_power_fiber(2 * kb, g.eps, {g.p, g.q}, pq_action(g), xi);
            return ab_top(kb, s, o_ypunct({g.p, g.q}, ya), fib);
        }
        case Family::B: {
            if (m == 1) return SeriesValue(0);
            if (m <= 2 * g.k - 1)
                return ab_rec_sign(m, s, oracle_Y_fiber({g.p, g.q}, xi, ya),
                                   o_ypunct({g.p, g.q}, ya));
            SeriesValue fib = oracle_power_fiber(2 * g.k, g.eps, {g.p, g.q}, pq_action(g), xi);
            return ab_top(g.k, s, o_ypunct({g.p, g.q}, ya), fib);
        }
        case Family::C:
        case Family::D: {
            int kk = g.family == Family::C ? g.k : g.k - 1;
            if (m == 1) return SeriesValue(0);
            if (m <= kk - 1)
                return cd_rec_sign(m, s, oracle_Y_fiber({g.p, g.q}, xi, ya),
                                   o_ypunct({g.p, g.q}, ya));
            if (kk % 2 == 1) {
                SeriesValue cusp(
                    oracle_cusp_fiber((kk - 1) / 2, xi, /*flip_x=*/g.family == Family::C));
                return cd_top(kk, s, o_ypunct({g.p, g.q}, ya), SeriesValue(0), true, cusp);
            }
            SeriesValue fib = oracle_power_fiber(kk, g.eps, {g.p, g.q}, pq_action(g), xi);
            return cd_top(kk, s, o_ypunct({g.p, g.q}, ya), fib, false, SeriesValue(0));
        }
        case Family::E6:
        case Family::F4: {
            RatFunc oyp = o_ypunct({g.p, g.q}, ya);
            if (m == 1) return SeriesValue(0);
            if (m == 2) return SeriesValue(upow(4 + s) * oracle_Y_fiber({g.p, g.q}, xi, ya));
            if (m == 3) return SeriesValue(upow(2 * s + 5) * oyp + upow(2 * s + 6) / kUm1);
            SeriesValue fib = oracle_power_fiber(4, g.eps, {g.p, g.q}, pq_action(g), xi);
            return SeriesValue(upow(3 * s + 6) * oyp) + fib.scaled(upow(2 * s + 6));
        }
        default: throw std::logic_error("oracle_coeff_sign: family out of scope");
    }
}

}  // namespace eqzeta::oracle

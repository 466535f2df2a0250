#include "eqzeta/arccoef.hpp"

#include <climits>

namespace eqzeta::arccoef {

using germs::Family;
using germs::GermNormalForm;

namespace {

const RatFunc kPoint = RatFunc(IntPoly::u()) / RatFunc(IntPoly{-1, 1});

RatFunc upow(int e) { return RatFunc(IntPoly::monomial(e)); }
RatFunc affine(int d) { return grim::beta_affine(d); }

bool flips_inside_quadric(const GermNormalForm& g) {
    return g.family == Family::A || g.family == Family::D || g.family == Family::E6 ||
           g.family == Family::E7 || g.family == Family::E8;
}

grim::GAction y_action(const GermNormalForm& g) {
    if (!flips_inside_quadric(g)) return grim::GAction::Trivial;
    return g.eta() > 0 ? grim::GAction::FlipPlus : grim::GAction::FlipMinus;
}

grim::PQAction pq_action(const GermNormalForm& g) {
    switch (g.family) {
        case Family::A:
        case Family::D:
        case Family::E6:
            return g.eta() > 0 ? grim::PQAction::FlipYPlus : grim::PQAction::FlipYMinus;
        case Family::B:
        case Family::F4:
            return grim::PQAction::FlipX;
        case Family::C:
            return grim::PQAction::Trivial;
        default:
            throw std::logic_error("pq_action: unsupported family");
    }
}

RatFunc y_value(const GermNormalForm& g) { return grim::beta_Y({g.p, g.q}, y_action(g)); }
RatFunc y_punct(const GermNormalForm& g) { return grim::beta_Y_punctured({g.p, g.q}, y_action(g)); }

// whether the top-degree sign fiber reduces to a sphere/empty set or a
// catalogued atom (the acted square must sit in the majority block)
bool fiber_resolvable(const GermNormalForm& g) {
    if (!flips_inside_quadric(g)) return true;
    return g.eta() > 0 ? g.p > g.q : g.q > g.p;
}

[[noreturn]] void out_of_range(const GermNormalForm& g, int m, const std::string& why) {
    throw OutOfRange("m=" + std::to_string(m) + " for " + germs::render_germ(g) + ": " + why);
}

// ---- Prop 6.1 / 6.4 shapes (one generic formula; the degenerate
// signatures agree with it and are re-asserted in tests) ----

SeriesValue p61_zero(int m, int s, const RatFunc& yv, const RatFunc& ypunct) {
    int r = m / 2;
    if (m % 2 == 1) {
        RatFunc head = ypunct.is_zero()
                           ? RatFunc(0)
                           : upow(m + (r + 1) * s - 1) * RatFunc(gsum(s - 2, r)) * ypunct;
        return SeriesValue(head + upow((r + 1) * (2 + s)) / (RatFunc(IntPoly::u()) - RatFunc(1)));
    }
    RatFunc head = ypunct.is_zero()
                       ? RatFunc(0)
                       : upow(m + (r + 1) * s - 2) * RatFunc(gsum(s - 2, r - 1)) * ypunct;
    return SeriesValue(head + upow(r * (2 + s)) * yv);
}

SeriesValue p64_sign(int m, int s, const RatFunc& ypunct, const RatFunc& fiber) {
    int r = m / 2;
    if (m % 2 == 1) {
        if (ypunct.is_zero()) return SeriesValue(0);
        return SeriesValue(upow(m + (r + 1) * s - 1) * RatFunc(gsum(s - 2, r)) * ypunct);
    }
    RatFunc head = ypunct.is_zero()
                       ? RatFunc(0)
                       : upow(m + (r + 1) * s - 2) * RatFunc(gsum(s - 2, r - 1)) * ypunct;
    return SeriesValue(head + upow(r * (2 + s)) * fiber);
}

// Prop 6.10 / 6.14 shape at the pair degree m = 2k
SeriesValue p610_top(int k, int s, const RatFunc& ypunct, const SeriesValue& residual) {
    RatFunc head = ypunct.is_zero()
                       ? RatFunc(0)
                       : upow(2 * k - 2 + s * (k + 1)) * RatFunc(gsum(s - 2, k - 1)) * ypunct;
    return SeriesValue(head) + residual.scaled(upow(k * s + 2 * k - 1));
}

// ---- Prop 7.1 / 7.2 shapes ----

SeriesValue p71_zero(int m, int s, const RatFunc& yv, const RatFunc& ypunct) {
    int r = m / 2;
    RatFunc core = ypunct + RatFunc(1);
    if (m % 2 == 1)
        return SeriesValue(upow(3 * r + 2 + (r + 1) * s) * RatFunc(gsum(s - 1, r)) * core +
                           upow(3 * r + 3 + (r + 1) * s) / (RatFunc(IntPoly::u()) - RatFunc(1)));
    return SeriesValue(upow(3 * r + (r + 1) * s) * RatFunc(gsum(s - 1, r - 1)) * core +
                       upow(3 * r + 1 + r * s) * yv);
}

SeriesValue p72_sign(int m, int s, const RatFunc& ypunct, const RatFunc& fiber) {
    int r = m / 2;
    RatFunc core = ypunct + RatFunc(1);
    if (m % 2 == 1)
        return SeriesValue(upow(3 * r + 2 + (r + 1) * s) * RatFunc(gsum(s - 1, r)) * core);
    return SeriesValue(upow(3 * r + (r + 1) * s) * RatFunc(gsum(s - 1, r - 1)) * core +
                       upow(3 * r + 1 + r * s) * fiber);
}

// Prop 7.5 / 7.8 shape at the pair degree m = k
SeriesValue p75_top(int k, int s, const RatFunc& ypunct, const SeriesValue& residual) {
    if (k % 2 == 1) {
        int l = (k - 1) / 2;
        RatFunc head = upow(3 * l + 2 + (l + 1) * s) * RatFunc(gsum(s - 1, l)) * ypunct +
                       upow(3 * l + 1 + (l + 2) * s) * RatFunc(gsum(s - 1, l - 1));
        return SeriesValue(head) + residual.scaled(upow(3 * l + 1 + (l + 1) * s));
    }
    int l = k / 2;
    RatFunc head =
        upow(3 * l + (l + 1) * s) * RatFunc(gsum(s - 1, l - 1)) * (ypunct + RatFunc(1));
    return SeriesValue(head) + residual.scaled(upow(3 * l + l * s));
}

int cd_pair_k(const GermNormalForm& g) { return g.family == Family::C ? g.k : g.k - 1; }

SeriesValue ef_residual(const GermNormalForm& g, std::optional<int> xi) {
    if (!xi) return SeriesValue(grim::beta_diagonal_zero(4, {g.p, g.q}, g.eps, pq_action(g)));
    return grim::power_quadric_fiber(4, g.eps, {g.p, g.q}, pq_action(g), *xi);
}

}  // namespace

SeriesValue coeff_zero(const GermNormalForm& g, int m) {
    if (m < 1) out_of_range(g, m, "m must be positive");
    int s = g.s();
    switch (g.family) {
        case Family::A:
            if (g.k == 0) return SeriesValue(affine(m * (g.n - 1)));  // every set is affine
            if (m == 1) return SeriesValue(affine(g.n));
            if (g.k == 1) {
                if (m != 2) out_of_range(g, m, "A_1 has closed forms only up to m = 2");
                grim::QuadSig merged =
                    g.eps > 0 ? grim::QuadSig{g.p + 1, g.q} : grim::QuadSig{g.p, g.q + 1};
                return SeriesValue(upow(1 + s) * grim::beta_Y(merged, y_action(g)));
            }
            if (m <= g.k) return p61_zero(m, s, y_value(g), y_punct(g));
            if (m == g.k + 1 && g.k % 2 == 1) {
                int kb = (g.k + 1) / 2;
                SeriesValue diag =
                    SeriesValue(grim::beta_diagonal_zero(2 * kb, {g.p, g.q}, g.eps, pq_action(g)));
                return p610_top(kb, s, y_punct(g), diag);
            }
            out_of_range(g, m, "beyond the proven range for this family index");
        case Family::B:
            if (m == 1) return SeriesValue(affine(g.n));
            if (m <= 2 * g.k - 1) return p61_zero(m, s, y_value(g), y_punct(g));
            if (m == 2 * g.k) {
                SeriesValue diag =
                    SeriesValue(grim::beta_diagonal_zero(2 * g.k, {g.p, g.q}, g.eps, pq_action(g)));
                return p610_top(g.k, s, y_punct(g), diag);
            }
            out_of_range(g, m, "beyond the proven range for this family index");
        case Family::C:
        case Family::D: {
            if (s == 0) out_of_range(g, m, "no closed forms with an empty quadratic part");
            int kk = cd_pair_k(g);
            if (m == 1) return SeriesValue(affine(g.n));
            if (m <= kk - 1) return p71_zero(m, s, y_value(g), y_punct(g));
            if (m == kk) {
                if (kk % 2 == 1) {
                    int l = (kk - 1) / 2;
                    SeriesValue curve = SeriesValue(
                        grim::beta_curve_zero(l, g.eps, /*flip_x=*/g.family == Family::C));
                    return p75_top(kk, s, y_punct(g), curve);
                }
                SeriesValue diag =
                    SeriesValue(grim::beta_diagonal_zero(kk, {g.p, g.q}, g.eps, pq_action(g)));
                return p75_top(kk, s, y_punct(g), diag);
            }
            out_of_range(g, m, "beyond the proven range for this family index");
        }
        case Family::E6:
        case Family::F4:
            if (m == 1) return SeriesValue(affine(g.n));
            if (m == 2) return SeriesValue(upow(4 + s) * y_value(g));
            if (m == 3)
                return SeriesValue(upow(2 * s + 5) * y_punct(g) +
                                   upow(2 * s + 6) / (RatFunc(IntPoly::u()) - RatFunc(1)));
            if (m == 4)
                return SeriesValue(upow(3 * s + 6) * y_punct(g)) +
                       ef_residual(g, std::nullopt).scaled(upow(2 * s + 6));
            out_of_range(g, m, "the E6/F4 closed forms stop at m = 4");
        case Family::E7:
        case Family::E8:
            out_of_range(g, m, "no zeta coefficients are computed for E7/E8");
    }
    throw std::logic_error("coeff_zero: unreachable");
}

SeriesValue coeff_sign(const GermNormalForm& g, int m, int xi) {
    if (xi != 1 && xi != -1) throw std::invalid_argument("coeff_sign: xi = +-1");
    if (m < 1) out_of_range(g, m, "m must be positive");
    int s = g.s();
    if (g.family == Family::A && g.k == 0)
        return SeriesValue(affine(m * (g.n - 1)));
    if (m == 1) return SeriesValue(0);  // multiplicity >= 2: A_1^xi is empty
    switch (g.family) {
        case Family::A:
            if (g.k == 1) {
                if (m != 2) out_of_range(g, m, "A_1 has closed forms only up to m = 2");
                grim::QuadSig merged =
                    g.eps > 0 ? grim::QuadSig{g.p + 1, g.q} : grim::QuadSig{g.p, g.q + 1};
                return SeriesValue(upow(1 + s) * grim::beta_Y_fiber(merged, xi, y_action(g)));
            }
            if (m <= g.k)
                return p64_sign(m, s, y_punct(g), grim::beta_Y_fiber({g.p, g.q}, xi, y_action(g)));
            if (m == g.k + 1 && g.k % 2 == 1) {
                int kb = (g.k + 1) / 2;
                try {
                    SeriesValue fib = grim::power_quadric_fiber(2 * kb, g.eps, {g.p, g.q},
                                                                pq_action(g), xi);
                    return p610_top(kb, s, y_punct(g), fib);
                } catch (const grim::UnresolvedResidual& e) {
                    out_of_range(g, m, e.what());
                }
            }
            out_of_range(g, m, "beyond the proven range for this family index");
        case Family::B:
            if (m <= 2 * g.k - 1)
                return p64_sign(m, s, y_punct(g), grim::beta_Y_fiber({g.p, g.q}, xi, y_action(g)));
            if (m == 2 * g.k) {
                SeriesValue fib =
                    grim::power_quadric_fiber(2 * g.k, g.eps, {g.p, g.q}, pq_action(g), xi);
                return p610_top(g.k, s, y_punct(g), fib);
            }
            out_of_range(g, m, "beyond the proven range for this family index");
        case Family::C:
        case Family::D: {
            if (s == 0) out_of_range(g, m, "no closed forms with an empty quadratic part");
            int kk = cd_pair_k(g);
            if (m <= kk - 1)
                return p72_sign(m, s, y_punct(g), grim::beta_Y_fiber({g.p, g.q}, xi, y_action(g)));
            if (m == kk) {
                if (kk % 2 == 1) {
                    if (g.eps != +1)
                        out_of_range(g, m,
                                     "the odd-degree sign fiber is only computed for eps = +1");
                    int l = (kk - 1) / 2;
                    SeriesValue cusp = SeriesValue(
                        grim::beta_cusp_fiber(l, xi, /*flip_x=*/g.family == Family::C));
                    return p75_top(kk, s, y_punct(g), cusp);
                }
                try {
                    SeriesValue fib =
                        grim::power_quadric_fiber(kk, g.eps, {g.p, g.q}, pq_action(g), xi);
                    return p75_top(kk, s, y_punct(g), fib);
                } catch (const grim::UnresolvedResidual& e) {
                    out_of_range(g, m, e.what());
                }
            }
            out_of_range(g, m, "beyond the proven range for this family index");
        }
        case Family::E6:
        case Family::F4:
            if (m == 2)
                return SeriesValue(upow(4 + s) * grim::beta_Y_fiber({g.p, g.q}, xi, y_action(g)));
            if (m == 3) return coeff_zero(g, 3);  // the cube root pins a single point
            if (m == 4) {
                try {
                    return SeriesValue(upow(3 * s + 6) * y_punct(g)) +
                           ef_residual(g, xi).scaled(upow(2 * s + 6));
                } catch (const grim::UnresolvedResidual& e) {
                    out_of_range(g, m, e.what());
                }
            }
            out_of_range(g, m, "the E6/F4 closed forms stop at m = 4");
        case Family::E7:
        case Family::E8:
            out_of_range(g, m, "no zeta coefficients are computed for E7/E8");
    }
    throw std::logic_error("coeff_sign: unreachable");
}

SeriesValue coeff_lift(const GermNormalForm& g, int m) {
    if (m < 1) out_of_range(g, m, "m must be positive");
    if (m == 1) return SeriesValue(affine(g.n));  // the whole first jet space
    return coeff_zero(g, m - 1).scaled(upow(g.n));
}

SeriesValue coeff_net(const GermNormalForm& g, int m) {
    return coeff_lift(g, m) - coeff_zero(g, m);
}

int naive_bound(const GermNormalForm& g) {
    switch (g.family) {
        case Family::A:
            if (g.k == 0) return INT_MAX;
            if (g.k == 1) return 2;
            return g.k % 2 == 1 ? g.k + 1 : g.k;
        case Family::B: return 2 * g.k;
        case Family::C:
        case Family::D: return g.s() == 0 ? 0 : cd_pair_k(g);
        case Family::E6:
        case Family::F4: return 4;
        case Family::E7:
        case Family::E8: return 0;
    }
    return 0;
}

int sign_bound(const GermNormalForm& g) {
    switch (g.family) {
        case Family::A:
            if (g.k == 0) return INT_MAX;
            if (g.k == 1) return 2;
            if (g.k % 2 == 0) return g.k;
            return fiber_resolvable(g) ? g.k + 1 : g.k;
        case Family::B: return 2 * g.k;
        case Family::C:
        case Family::D: {
            if (g.s() == 0) return 0;
            int kk = cd_pair_k(g);
            if (kk % 2 == 1) return g.eps == +1 ? kk : kk - 1;
            return fiber_resolvable(g) ? kk : kk - 1;
        }
        case Family::E6: return fiber_resolvable(g) ? 4 : 3;
        case Family::F4: return 4;
        case Family::E7:
        case Family::E8: return 0;
    }
    return 0;
}

int channel_bound(const GermNormalForm& g, Channel c) {
    return c == Channel::Naive ? naive_bound(g) : sign_bound(g);
}

int pair_critical_degree(const GermNormalForm& g) {
    switch (g.family) {
        case Family::A: return (g.k >= 3 && g.k % 2 == 1) ? g.k + 1 : 0;
        case Family::B: return 2 * g.k;
        case Family::C:
        case Family::D: return cd_pair_k(g) >= 3 ? cd_pair_k(g) : 0;
        case Family::E6:
        case Family::F4: return 4;
        default: return 0;
    }
}

std::vector<AtomEq> pair_conditions(PairKind kind, int k, int p, int q, int eta_branch, int eps,
                                    int face_xi) {
    int K = eta_branch > 0 ? p - q : q - p;
    std::vector<AtomEq> conds;
    auto odd_or_cubic = [&](int e, Atom::Variant v) {
        return e == 3 ? grim::atom_cubic_mixed(K, eta_branch, face_xi, v)
                      : grim::atom_odd_mixed(e, K, eta_branch, face_xi, v);
    };
    switch (kind) {
        case PairKind::AB:
            conds.emplace_back(
                grim::atom_even_mixed(2 * k, K, eps, face_xi, Atom::Variant::FlipInsideSquares),
                grim::atom_even_mixed(2 * k, K, eps, face_xi, Atom::Variant::FlipOnPowerVariable));
            break;
        case PairKind::CD:
            if (k % 2 == 0)
                conds.emplace_back(
                    grim::atom_even_mixed(k, K, eps, face_xi, Atom::Variant::FlipInsideSquares),
                    grim::atom_even_mixed(k, K, eps, face_xi, Atom::Variant::TrivialAction));
            else
                conds.emplace_back(odd_or_cubic(k, Atom::Variant::FlipInsideSquares),
                                   odd_or_cubic(k, Atom::Variant::TrivialAction));
            break;
        case PairKind::EF:
            conds.emplace_back(
                grim::atom_cubic_mixed(K, eta_branch, face_xi, Atom::Variant::FlipInsideSquares),
                grim::atom_cubic_mixed(K, eta_branch, face_xi, Atom::Variant::TrivialAction));
            if (eps == -eta_branch)
                conds.emplace_back(
                    grim::atom_even_mixed(4, K, eps, face_xi, Atom::Variant::FlipInsideSquares),
                    grim::atom_even_mixed(4, K, eps, face_xi, Atom::Variant::FlipOnPowerVariable));
            conds.emplace_back(
                grim::atom_quartic_cubic(K, eps, eta_branch, face_xi, Atom::Variant::FlipInsideSquares),
                grim::atom_quartic_cubic(K, eps, eta_branch, face_xi, Atom::Variant::FlipOnPowerVariable));
            break;
    }
    return conds;
}

TailInfo tail_rule(const GermNormalForm& g, Channel channel) {
    TailInfo t;
    if (g.family == Family::A && g.k == 0) {
        // all arc sets of the A_0 templates are affine spaces
        t.kind = TailInfo::Kind::EqualByRule;
        t.rule = "Rem 6.7";
        return t;
    }
    std::optional<PairKind> kind;
    int pk = 0;
    switch (g.family) {
        case Family::A:
            if (g.k >= 3 && g.k % 2 == 1) {
                kind = PairKind::AB;
                pk = (g.k + 1) / 2;
            }
            break;
        case Family::B:
            kind = PairKind::AB;
            pk = g.k;
            break;
        case Family::C:
        case Family::D:
            if (cd_pair_k(g) >= 3 && g.s() > 0) {
                kind = PairKind::CD;
                pk = cd_pair_k(g);
            }
            break;
        case Family::E6:
        case Family::F4:
            kind = PairKind::EF;
            break;
        default: break;
    }
    if (!kind) return t;
    int b = 0;
    if (flips_inside_quadric(g)) {
        if (g.eta() > 0 && g.p > g.q + 1) b = +1;
        if (g.eta() < 0 && g.q > g.p + 1) b = -1;
    } else {
        if (g.p > g.q + 1) b = +1;
        if (g.q > g.p + 1) b = -1;
    }
    if (b == 0) return t;

    if (channel == Channel::Naive) {
        switch (*kind) {
            case PairKind::AB:
                if (pk % 2 == 0 || g.eps == b) {
                    t.kind = TailInfo::Kind::EqualByRule;
                    t.rule = "Prop 6.20";
                }
                break;
            case PairKind::CD:
                if (pk % 2 == 0 || g.eps == +1) {
                    t.kind = TailInfo::Kind::EqualByRule;
                    t.rule = "Prop 7.11";
                }
                break;
            case PairKind::EF:
                t.kind = TailInfo::Kind::EqualByRule;
                t.rule = "Prop 8.5";
                break;
        }
        return t;
    }

    int xi = channel == Channel::Plus ? +1 : -1;
    switch (*kind) {
        case PairKind::AB:
            if (g.eps == b) {
                t.kind = TailInfo::Kind::EqualByRule;
                t.rule = "Prop 6.21(1)";
            } else if (pk % 2 == 0) {
                t.kind = TailInfo::Kind::ConditionalByRule;
                t.rule = "Prop 6.21(2)";
                t.conditions = pair_conditions(PairKind::AB, pk, g.p, g.q, b, g.eps, xi);
            }
            break;
        case PairKind::CD:
            if (pk % 2 == 0) {
                if (g.eps == b) {
                    t.kind = TailInfo::Kind::EqualByRule;
                    t.rule = "Prop 7.13(1)";
                } else {
                    t.kind = TailInfo::Kind::ConditionalByRule;
                    t.rule = "Prop 7.13(1)";
                    t.conditions = pair_conditions(PairKind::CD, pk, g.p, g.q, b, g.eps, xi);
                }
            } else if (g.eps == +1) {
                t.kind = TailInfo::Kind::ConditionalByRule;
                t.rule = "Prop 7.13(2)";
                t.conditions = pair_conditions(PairKind::CD, pk, g.p, g.q, b, g.eps, xi);
            }
            break;
        case PairKind::EF:
            t.kind = TailInfo::Kind::ConditionalByRule;
            t.rule = g.eps == b ? "Prop 8.7 / Rem 8.8" : "Prop 8.7";
            t.conditions = pair_conditions(PairKind::EF, 4, g.p, g.q, b, g.eps, xi);
            break;
    }
    return t;
}

ZetaSeries zeta_truncated(const GermNormalForm& g, Channel channel, int M) {
    int bound = channel_bound(g, channel);
    if (M < 1) throw OutOfRange("order must be positive");
    if (M > bound)
        throw OutOfRange("order " + std::to_string(M) + " exceeds the proven bound " +
                         std::to_string(bound) + " for " + germs::render_germ(g) + " on the " +
                         channel_name(channel) + " channel");
    ZetaSeries z;
    z.n = g.n;
    z.channel = channel;
    z.valid_to = M;
    int xi = channel == Channel::Plus ? +1 : channel == Channel::Minus ? -1 : 0;
    for (int m = 1; m <= M; ++m) {
        SeriesValue raw = channel == Channel::Naive ? coeff_net(g, m) : coeff_sign(g, m, xi);
        z.coeffs[m] = raw.scaled(RatFunc(IntPoly(1), IntPoly::monomial(m * g.n)));
    }
    if (g.family == Family::A && g.k == 0) {
        z.tail = tail_rule(g, channel);
    } else {
        int crit = pair_critical_degree(g);
        if (crit > 0 && M == crit) z.tail = tail_rule(g, channel);
    }
    return z;
}

}  // namespace eqzeta::arccoef

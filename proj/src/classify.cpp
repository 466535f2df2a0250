#include "eqzeta/classify.hpp"

#include <algorithm>

namespace eqzeta::classify {

using arccoef::PairKind;
using germs::Family;
using germs::GermNormalForm;
using germs::PairRoute;

namespace {

bool is_f_side(const GermNormalForm& g) {
    return g.family == Family::A || g.family == Family::D || g.family == Family::E6;
}

int pair_k(PairKind kind, const GermNormalForm& f) {
    switch (kind) {
        case PairKind::AB: return (f.k + 1) / 2;
        case PairKind::CD: return f.k - 1;  // f is the D germ h_{k+1}
        case PairKind::EF: return 4;
    }
    return 0;
}

std::string distinct_reason(const GermNormalForm& a, const GermNormalForm& b) {
    if (a.underlying() != b.underlying())
        return "different non-equivariant blow-Nash classes (" + a.underlying().first +
               std::to_string(a.underlying().second) + " vs " + b.underlying().first +
               std::to_string(b.underlying().second) + ")";
    if (a.full_signature() != b.full_signature() || a.n != b.n)
        return "different corank or index data";
    return "the distinguished sign is a non-equivariant blow-Nash invariant";
}

std::string distinct_rule(const GermNormalForm& a, const GermNormalForm& b) {
    if (a.underlying() != b.underlying()) return "ade-class";
    if (a.full_signature() != b.full_signature() || a.n != b.n) return "corank-index";
    return "eps-invariant";
}

SeriesValue raw_coeff(const GermNormalForm& g, int m, Channel ch) {
    if (ch == Channel::Naive) return arccoef::coeff_net(g, m);
    return arccoef::coeff_sign(g, m, ch == Channel::Plus ? +1 : -1);
}

struct ScanResult {
    std::optional<Witness> witness;
    std::vector<AtomEq> conditions;
};

// coefficientwise comparison in degree order, naive channel first
ScanResult scan_pair(const GermNormalForm& a, const GermNormalForm& b, int bound) {
    ScanResult res;
    for (int m = 1; m <= bound; ++m) {
        for (Channel ch : {Channel::Naive, Channel::Plus, Channel::Minus}) {
            if (m > std::min(arccoef::channel_bound(a, ch), arccoef::channel_bound(b, ch)))
                continue;
            SeriesValue va = raw_coeff(a, m, ch);
            SeriesValue vb = raw_coeff(b, m, ch);
            SeriesValue d = va - vb;
            if (d.is_zero()) continue;
            if (d.atom_free()) {
                res.witness = Witness{ch, m, va, vb};
                return res;
            }
            if (!d.rat().is_zero() || d.atoms().size() != 2)
                throw std::logic_error("scan_pair: unrecognized atom difference");
            auto it = d.atoms().begin();
            const Atom& a1 = it->first;
            const Atom& a2 = std::next(it)->first;
            AtomEq eq(a1, a2);
            if (std::find(res.conditions.begin(), res.conditions.end(), eq) == res.conditions.end())
                res.conditions.push_back(eq);
        }
    }
    return res;
}

Verdict verdict_distinct(Witness w, const std::string& rule) {
    Verdict v;
    v.kind = Verdict::Kind::Distinct;
    v.reason = "zeta coefficients differ at T^" + std::to_string(w.m) + " on the " +
               channel_name(w.channel) + " channel";
    v.rules = {rule};
    v.witness = std::move(w);
    return v;
}

std::string witness_rule(PairKind kind, int m, int critical) {
    switch (kind) {
        case PairKind::AB: return m < critical ? "Cor 6.8" : "Cor 6.13";
        case PairKind::CD: return m < critical ? "Cor 7.4" : "Cor 7.7";
        case PairKind::EF: return "Cor 8.3";
    }
    return "?";
}

Verdict within_family(const GermNormalForm& a, const GermNormalForm& b) {
    Verdict v;
    bool eps_differ = a.eps != b.eps;
    bool eta_differ = a.acted_sign != b.acted_sign;
    switch (a.family) {
        case Family::B:
        case Family::C:
        case Family::F4:
            v.kind = Verdict::Kind::Distinct;
            v.reason = distinct_reason(a, b);
            v.rules = {"eps-invariant"};
            return v;
        case Family::A:
            if (a.k % 2 == 1 && eps_differ) {
                v.kind = Verdict::Kind::Distinct;
                v.reason = "the distinguished sign is a non-equivariant blow-Nash invariant";
                v.rules = {"eps-invariant"};
                return v;
            }
            if (!eta_differ) {
                // eps differs, k even: x2 -> -x2 is an equivariant change
                v.kind = Verdict::Kind::Equivalent;
                v.reason = "equivariantly Nash equivalent via x2 -> -x2";
                v.rules = {"even-eps-flip"};
                return v;
            }
            if (a.k == 0) {
                v.kind = Verdict::Kind::ZetaEqual;
                v.reason = "all arc coefficient sets are affine spaces of equal dimension";
                v.rules = {"Rem 6.7"};
                return v;
            }
            break;
        case Family::D:
        case Family::E6:
            if (eps_differ) {
                v.kind = Verdict::Kind::Distinct;
                v.reason = "the distinguished sign is a non-equivariant blow-Nash invariant";
                v.rules = {"eps-invariant"};
                return v;
            }
            break;
        default:
            throw std::logic_error("within_family: unreachable family");
    }
    // acted signs differ: a witness exists by degree 2
    ScanResult scan = scan_pair(a, b, 2);
    if (!scan.witness) throw std::logic_error("within_family: expected witness at m <= 2");
    std::string rule = a.family == Family::A    ? "Cor 6.6"
                       : a.family == Family::D  ? "Cor 7.3"
                                                : "Cor 8.3";
    return verdict_distinct(*scan.witness, rule);
}

Verdict cross_pair(PairKind kind, const GermNormalForm& a, const GermNormalForm& b) {
    const GermNormalForm& f = is_f_side(a) ? a : b;
    int k = pair_k(kind, f);
    int critical = kind == PairKind::AB ? 2 * k : kind == PairKind::CD ? k : 4;
    ScanResult scan = scan_pair(a, b, critical);
    if (scan.witness) return verdict_distinct(*scan.witness, witness_rule(kind, scan.witness->m, critical));
    Verdict v;
    std::vector<AtomEq> conds = std::move(scan.conditions);
    std::vector<std::string> rules;
    for (Channel ch : {Channel::Naive, Channel::Plus, Channel::Minus}) {
        TailInfo ta = arccoef::tail_rule(a, ch);
        TailInfo tb = arccoef::tail_rule(b, ch);
        if (ta.kind == TailInfo::Kind::Unknown || tb.kind == TailInfo::Kind::Unknown)
            throw IncomparableTails("cross pair survived the scan without a tail rule");
        for (const TailInfo& t : {ta, tb}) {
            if (std::find(rules.begin(), rules.end(), t.rule) == rules.end()) rules.push_back(t.rule);
            for (const AtomEq& eq : t.conditions)
                if (std::find(conds.begin(), conds.end(), eq) == conds.end()) conds.push_back(eq);
        }
    }
    if (conds.empty()) {
        v.kind = Verdict::Kind::ZetaEqual;
        v.reason = "all coefficients agree up to T^" + std::to_string(critical) +
                   " and the tail rules prove equality beyond";
    } else {
        v.kind = Verdict::Kind::Conditional;
        v.reason = "equality of the zeta functions reduces to " + std::to_string(conds.size()) +
                   " open beta equalities";
        std::sort(conds.begin(), conds.end());
        v.conditions = std::move(conds);
    }
    v.rules = std::move(rules);
    return v;
}

}  // namespace

std::string kind_name(Verdict::Kind k) {
    switch (k) {
        case Verdict::Kind::SameNormalForm: return "SameNormalForm";
        case Verdict::Kind::Equivalent: return "Equivalent";
        case Verdict::Kind::Distinct: return "Distinct";
        case Verdict::Kind::ZetaEqual: return "ZetaEqual";
        case Verdict::Kind::Conditional: return "Conditional";
        case Verdict::Kind::OutOfPaperScope: return "OutOfPaperScope";
    }
    return "?";
}

Verdict compare(const GermNormalForm& a, const GermNormalForm& b) {
    Verdict v;
    switch (germs::pair_route(a, b)) {
        case PairRoute::SameNormalForm:
            v.kind = Verdict::Kind::SameNormalForm;
            v.reason = "identical normal forms";
            return v;
        case PairRoute::OutOfPaper:
            v.kind = Verdict::Kind::OutOfPaperScope;
            v.reason = "within-family " + germs::family_name(a.family) +
                       " pairs have no computed zeta comparison";
            return v;
        case PairRoute::CrossDistinct:
            v.kind = Verdict::Kind::Distinct;
            v.reason = distinct_reason(a, b);
            v.rules = {distinct_rule(a, b)};
            return v;
        case PairRoute::WithinFamily:
            return within_family(a, b);
        case PairRoute::CrossAB:
            return cross_pair(PairKind::AB, a, b);
        case PairRoute::CrossCD:
            return cross_pair(PairKind::CD, a, b);
        case PairRoute::CrossEF:
            return cross_pair(PairKind::EF, a, b);
    }
    throw std::logic_error("compare: unreachable");
}

namespace {

Verdict predicted_cross(PairKind kind, const GermNormalForm& a, const GermNormalForm& b) {
    const GermNormalForm& f = is_f_side(a) ? a : b;
    int k = pair_k(kind, f);
    int p = f.p, q = f.q, eta = f.eta(), eps = f.eps;
    Verdict v;
    auto distinct = [&](const std::string& rule) {
        v.kind = Verdict::Kind::Distinct;
        v.rules = {rule};
        v.reason = "clause table";
        return v;
    };
    auto conditional = [&](const std::string& rule, int b_sign) {
        v.kind = Verdict::Kind::Conditional;
        v.rules = {rule};
        v.reason = "clause table";
        for (int xi : {+1, -1})
            for (const AtomEq& eq : arccoef::pair_conditions(kind, k, p, q, b_sign, eps, xi))
                if (std::find(v.conditions.begin(), v.conditions.end(), eq) == v.conditions.end())
                    v.conditions.push_back(eq);
        std::sort(v.conditions.begin(), v.conditions.end());
        return v;
    };
    auto zeta_equal = [&](const std::string& rule) {
        v.kind = Verdict::Kind::ZetaEqual;
        v.rules = {rule};
        v.reason = "clause table";
        return v;
    };
    bool plus_small = (p <= q && eta == +1) || (q <= p && eta == -1);
    bool adjacent = p == q + 1 || q == p + 1;
    switch (kind) {
        case PairKind::AB:
            if (plus_small || adjacent) return distinct("Thm 6.22(1)");
            if (k % 2 == 1 && ((p > q + 1 && eta == +1 && eps == -1) ||
                               (q > p + 1 && eta == -1 && eps == +1)))
                return distinct("Thm 6.22(1)");
            if ((p > q + 1 && eta == eps && eta == +1) || (q > p + 1 && eta == eps && eta == -1))
                return zeta_equal("Thm 6.22(2)");
            if (k % 2 == 0) return conditional("Thm 6.22(3)", p > q ? +1 : -1);
            throw NoClause("AB pair matches no clause");
        case PairKind::CD:
            if (plus_small || adjacent) return distinct("Thm 7.14(1)");
            if (k % 2 == 1 && eps == -1) return distinct("Thm 7.14(1)");
            if (k % 2 == 0 && ((p > q + 1 && eta == +1 && eps == +1) ||
                               (q > p + 1 && eta == -1 && eps == -1)))
                return zeta_equal("Thm 7.14(2)");
            if (k % 2 == 0) return conditional("Thm 7.14(3)", p > q ? +1 : -1);
            if (eps == +1) return conditional("Thm 7.14(3)", p > q ? +1 : -1);
            throw NoClause("CD pair matches no clause");
        case PairKind::EF:
            if (plus_small || adjacent) return distinct("Thm 8.9(1)");
            return conditional("Thm 8.9(2)", p > q ? +1 : -1);
    }
    throw NoClause("unreachable");
}

}  // namespace

Verdict theorem_verdict(const GermNormalForm& a, const GermNormalForm& b) {
    Verdict v;
    switch (germs::pair_route(a, b)) {
        case PairRoute::SameNormalForm:
            v.kind = Verdict::Kind::SameNormalForm;
            return v;
        case PairRoute::OutOfPaper:
            v.kind = Verdict::Kind::OutOfPaperScope;
            return v;
        case PairRoute::CrossDistinct:
            v.kind = Verdict::Kind::Distinct;
            v.rules = {distinct_rule(a, b)};
            return v;
        case PairRoute::WithinFamily: {
            bool eps_differ = a.eps != b.eps;
            bool eta_differ = a.acted_sign != b.acted_sign;
            switch (a.family) {
                case Family::B:
                case Family::C:
                case Family::F4:
                    v.kind = Verdict::Kind::Distinct;
                    v.rules = {"eps-invariant"};
                    return v;
                case Family::A:
                    if (a.k % 2 == 1 && eps_differ) {
                        v.kind = Verdict::Kind::Distinct;
                        v.rules = {"eps-invariant"};
                        return v;
                    }
                    if (!eta_differ) {
                        v.kind = Verdict::Kind::Equivalent;
                        v.rules = {"even-eps-flip"};
                        return v;
                    }
                    if (a.k == 0) {
                        v.kind = Verdict::Kind::ZetaEqual;
                        v.rules = {"Rem 6.7"};
                        return v;
                    }
                    v.kind = Verdict::Kind::Distinct;
                    v.rules = {"Cor 6.6"};
                    return v;
                case Family::D:
                case Family::E6:
                    if (eps_differ) {
                        v.kind = Verdict::Kind::Distinct;
                        v.rules = {"eps-invariant"};
                        return v;
                    }
                    v.kind = Verdict::Kind::Distinct;
                    v.rules = {a.family == Family::D ? "Cor 7.3" : "Cor 8.3"};
                    return v;
                default:
                    throw std::logic_error("theorem_verdict: unreachable family");
            }
        }
        case PairRoute::CrossAB:
            return predicted_cross(PairKind::AB, a, b);
        case PairRoute::CrossCD:
            return predicted_cross(PairKind::CD, a, b);
        case PairRoute::CrossEF:
            return predicted_cross(PairKind::EF, a, b);
    }
    throw std::logic_error("theorem_verdict: unreachable");
}

std::vector<TableRow> classify_table(const std::vector<std::string>& families, int kmax,
                                     int pqmax) {
    std::vector<std::pair<GermNormalForm, GermNormalForm>> pairs;
    auto add = [&](const GermNormalForm& a, const GermNormalForm& b) { pairs.emplace_back(a, b); };

    auto sig_ok = [](int eta, int p, int q) { return eta > 0 ? p >= 1 : q >= 1; };
    for (const std::string& fam : families) {
        for (int p = 0; p <= pqmax; ++p)
            for (int q = 0; p + q <= pqmax; ++q) {
                if (fam == "AB") {
                    for (int k = 2; k <= kmax; ++k)
                        for (int eps : {+1, -1})
                            for (int eta : {+1, -1}) {
                                if (!sig_ok(eta, p, q)) continue;
                                auto f = GermNormalForm::make(Family::A, 2 * k - 1, eps, eta, p, q);
                                auto g = GermNormalForm::make(Family::B, k, eps, std::nullopt, p, q);
                                add(f, g);
                            }
                    // within-family rows for the same grid
                    if (p >= 1 && q >= 1)
                        for (int k = 0; k <= 2 * kmax - 1; ++k)
                            for (int eps : {+1, -1})
                                add(GermNormalForm::make(Family::A, k, eps, +1, p, q),
                                    GermNormalForm::make(Family::A, k, eps, -1, p, q));
                    for (int k = 2; k <= 2 * kmax - 1; ++k)
                        for (int eta : {+1, -1}) {
                            if (!sig_ok(eta, p, q)) continue;
                            add(GermNormalForm::make(Family::A, k, +1, eta, p, q),
                                GermNormalForm::make(Family::A, k, -1, eta, p, q));
                        }
                    if (p + q >= 1)
                        for (int k = 2; k <= kmax; ++k)
                            add(GermNormalForm::make(Family::B, k, +1, std::nullopt, p, q),
                                GermNormalForm::make(Family::B, k, -1, std::nullopt, p, q));
                } else if (fam == "CD") {
                    if (p + q < 1) continue;
                    for (int k = 3; k <= kmax; ++k)
                        for (int eps : {+1, -1})
                            for (int eta : {+1, -1}) {
                                if (!sig_ok(eta, p, q)) continue;
                                auto h = GermNormalForm::make(Family::D, k + 1, eps, eta, p, q);
                                auto r = GermNormalForm::make(Family::C, k, eps, std::nullopt, p, q);
                                add(h, r);
                            }
                    if (p >= 1 && q >= 1)
                        for (int kD = 4; kD <= kmax + 1; ++kD)
                            for (int eps : {+1, -1})
                                add(GermNormalForm::make(Family::D, kD, eps, +1, p, q),
                                    GermNormalForm::make(Family::D, kD, eps, -1, p, q));
                    for (int kD = 4; kD <= kmax + 1; ++kD)
                        for (int eta : {+1, -1}) {
                            if (!sig_ok(eta, p, q)) continue;
                            add(GermNormalForm::make(Family::D, kD, +1, eta, p, q),
                                GermNormalForm::make(Family::D, kD, -1, eta, p, q));
                        }
                    for (int k = 3; k <= kmax; ++k)
                        add(GermNormalForm::make(Family::C, k, +1, std::nullopt, p, q),
                            GermNormalForm::make(Family::C, k, -1, std::nullopt, p, q));
                } else if (fam == "EF") {
                    for (int eps : {+1, -1})
                        for (int eta : {+1, -1}) {
                            if (!sig_ok(eta, p, q)) continue;
                            add(GermNormalForm::make(Family::E6, 6, eps, eta, p, q),
                                GermNormalForm::make(Family::F4, 4, eps, std::nullopt, p, q));
                        }
                    if (p >= 1 && q >= 1)
                        for (int eps : {+1, -1})
                            add(GermNormalForm::make(Family::E6, 6, eps, +1, p, q),
                                GermNormalForm::make(Family::E6, 6, eps, -1, p, q));
                    for (int eta : {+1, -1}) {
                        if (!sig_ok(eta, p, q)) continue;
                        add(GermNormalForm::make(Family::E6, 6, +1, eta, p, q),
                            GermNormalForm::make(Family::E6, 6, -1, eta, p, q));
                    }
                    add(GermNormalForm::make(Family::F4, 4, +1, std::nullopt, p, q),
                        GermNormalForm::make(Family::F4, 4, -1, std::nullopt, p, q));
                } else {
                    throw std::invalid_argument("classify_table: families are AB, CD, EF");
                }
            }
    }

    std::vector<TableRow> rows;
    rows.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        TableRow row{a, b, compare(a, b), theorem_verdict(a, b)};
        if (row.computed.kind != row.predicted.kind ||
            (row.computed.kind == Verdict::Kind::Conditional &&
             row.computed.conditions != row.predicted.conditions))
            throw DualPathMismatch("computed " + kind_name(row.computed.kind) + " vs predicted " +
                                   kind_name(row.predicted.kind) + " for " +
                                   germs::render_germ(a) + "  |  " + germs::render_germ(b));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace eqzeta::classify

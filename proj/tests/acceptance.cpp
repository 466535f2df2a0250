// Acceptance suite: each criterion prints one pass/fail line and the binary
// exits nonzero if any fails.  All checks are exact symbolic identities.
// Run with no arguments for the whole suite, or with a criterion number.

#include <functional>
#include <iostream>
#include <set>
#include <vector>

#include "eqzeta/classify.hpp"
#include "eqzeta/oracle.hpp"

using namespace eqzeta;
using germs::Family;
using germs::GermNormalForm;
using grim::GAction;

namespace {

struct AcceptFail : std::runtime_error {
    explicit AcceptFail(const std::string& what) : std::runtime_error(what) {}
};

#define REQUIRE_EQ(a, b)                                                                  \
    do {                                                                                  \
        if (!((a) == (b))) throw AcceptFail(std::string("mismatch at ") + __FILE__ + ":" + \
                                            std::to_string(__LINE__));                    \
    } while (0)

#define REQUIRE_TRUE(c)                                                                   \
    do {                                                                                  \
        if (!(c)) throw AcceptFail(std::string("check failed at ") + __FILE__ + ":" +      \
                                   std::to_string(__LINE__));                             \
    } while (0)

RatFunc rf(std::initializer_list<long long> num, std::initializer_list<long long> den = {1}) {
    return RatFunc(IntPoly(num), IntPoly(den));
}
RatFunc up(int e) { return RatFunc(IntPoly::monomial(e)); }
const RatFunc point = rf({0, 1}, {-1, 1});
const RatFunc um1 = rf({-1, 1});

std::vector<RatFunc> g_catalogue_values;  // collected for criterion 5

void note_value(const RatFunc& v) { g_catalogue_values.push_back(v); }

std::vector<GAction> actions_for(int p, int q) {
    std::vector<GAction> out{GAction::FlipAll, GAction::Trivial};
    if (p >= 1) out.push_back(GAction::FlipPlus);
    if (q >= 1) out.push_back(GAction::FlipMinus);
    return out;
}

// literal transcription of the three displayed clauses, p <= q
RatFunc clause_value(int p, int q, GAction a) {
    if (p == 0) return point;
    if (p < q) {
        int last = a == GAction::FlipPlus ? p - 1 : p + 1;
        return (up(p + q) - up(q) + up(last)) / um1;
    }
    int last = (a == GAction::FlipPlus || a == GAction::FlipMinus) ? p - 1 : p + 1;
    return (up(2 * p) - up(p) + up(last)) / um1;
}

// ---- criterion 1 ----
void building_block_regression() {
    for (int p = 0; p <= 5; ++p)
        for (int q = 0; q <= 5; ++q)
            for (GAction a : actions_for(p, q)) {
                RatFunc got = grim::beta_Y({p, q}, a);
                RatFunc want;
                if (q >= p) {
                    want = clause_value(p, q, a);
                } else {
                    GAction swapped = a == GAction::FlipPlus    ? GAction::FlipMinus
                                      : a == GAction::FlipMinus ? GAction::FlipPlus
                                                                : a;
                    want = clause_value(q, p, swapped);
                }
                REQUIRE_EQ(got, want);
                note_value(got);
            }
    REQUIRE_EQ(grim::beta_Y({1, 1}, GAction::Trivial), rf({0, -1, 2}, {-1, 1}));
    REQUIRE_EQ(grim::beta_Y({1, 1}, GAction::FlipPlus), rf({1, -1, 1}, {-1, 1}));
    for (int q = 0; q <= 5; ++q)
        for (GAction a : actions_for(0, q))
            REQUIRE_EQ(grim::beta_Y({0, q}, a), point);
}

// ---- criterion 2 ----
void oracle_equivalence() {
    for (int p = 0; p <= 6; ++p)
        for (int q = 0; p + q <= 6; ++q)
            for (GAction a : actions_for(p, q)) {
                REQUIRE_EQ(oracle::oracle_Y({p, q}, a), grim::beta_Y({p, q}, a));
                if (a == GAction::FlipAll) continue;
                for (int xi : {+1, -1})
                    REQUIRE_EQ(oracle::oracle_Y_fiber({p, q}, xi, a),
                               grim::beta_Y_fiber({p, q}, xi, a));
            }
    auto sweep = [](const GermNormalForm& g) {
        int nb = std::min(arccoef::naive_bound(g), 12);
        for (int m = 1; m <= nb; ++m)
            REQUIRE_EQ(oracle::oracle_coeff_zero(g, m), arccoef::coeff_zero(g, m));
        int sb = std::min(arccoef::sign_bound(g), 12);
        for (int m = 1; m <= sb; ++m)
            for (int xi : {+1, -1})
                REQUIRE_EQ(oracle::oracle_coeff_sign(g, m, xi), arccoef::coeff_sign(g, m, xi));
    };
    for (int p = 0; p <= 4; ++p)
        for (int q = 0; p + q <= 4; ++q)
            for (int eps : {+1, -1}) {
                for (int eta : {+1, -1}) {
                    if ((eta > 0 && p < 1) || (eta < 0 && q < 1)) continue;
                    for (int k = 0; k <= 6; ++k)
                        sweep(GermNormalForm::make(Family::A, k, eps, eta, p, q));
                    for (int kD = 4; kD <= 7; ++kD)
                        sweep(GermNormalForm::make(Family::D, kD, eps, eta, p, q));
                    sweep(GermNormalForm::make(Family::E6, 6, eps, eta, p, q));
                }
                if (p + q >= 1) {
                    for (int k = 2; k <= 6; ++k)
                        sweep(GermNormalForm::make(Family::B, k, eps, std::nullopt, p, q));
                    for (int k = 3; k <= 6; ++k)
                        sweep(GermNormalForm::make(Family::C, k, eps, std::nullopt, p, q));
                    sweep(GermNormalForm::make(Family::F4, 4, eps, std::nullopt, p, q));
                }
            }
}

// ---- criterion 3 ----
void paper_constants() {
    for (int l = 1; l <= 4; ++l)
        for (int xi : {+1, -1})
            for (bool fx : {false, true}) {
                RatFunc v = grim::beta_cusp_fiber(l, xi, fx);
                REQUIRE_EQ(v, up(2) / um1);
                note_value(v);
            }
    RatFunc h_side = grim::beta_curve_zero(1, -1, false);
    RatFunc r_side = grim::beta_curve_zero(1, -1, true);
    REQUIRE_EQ(h_side, rf({0, -2, 3}, {-1, 1}));
    REQUIRE_EQ(r_side, rf({1, -2, 2}, {-1, 1}));
    REQUIRE_TRUE(h_side != r_side);
    note_value(h_side);
    note_value(r_side);
    REQUIRE_EQ(grim::beta_point(grim::PointKind::OneFixed), point);
    REQUIRE_EQ(grim::beta_point(grim::PointKind::TwoFixed), rf({0, 2}, {-1, 1}));
    REQUIRE_EQ(grim::beta_point(grim::PointKind::TwoSwapped), RatFunc(1));
    REQUIRE_EQ(grim::beta_sphere(1, false), rf({1, 1}));
    REQUIRE_EQ(grim::beta_sphere(1, true), rf({0, 1, 1}, {-1, 1}));
    for (int d = 0; d <= 6; ++d) {
        note_value(grim::beta_sphere(d, false));
        note_value(grim::beta_sphere(d, true));
        note_value(grim::beta_affine(d));
    }
    note_value(grim::beta_point(grim::PointKind::TwoSwapped));
    note_value(grim::beta_point(grim::PointKind::TwoFixed));
}

// ---- criterion 4 ----
void degenerate_branch_agreement() {
    // dedicated (p,q) = (1,1) clauses against the gsum-based generic path
    auto f = GermNormalForm::make(Family::A, 11, +1, +1, 1, 1);
    RatFunc yv = grim::beta_Y({1, 1}, GAction::FlipPlus);
    RatFunc yp = grim::beta_Y_punctured({1, 1}, GAction::FlipPlus);
    RatFunc yfp = grim::beta_Y_fiber({1, 1}, +1, GAction::FlipPlus);
    for (int m = 2; m <= 10; ++m) {
        int r = m / 2;
        SeriesValue want0 =
            m % 2 == 1 ? SeriesValue(RatFunc(r) * up(2 * m) * yp + up(4 * (r + 1)) / um1)
                       : SeriesValue(RatFunc(r - 1) * up(2 * m) * yp + up(4 * r) * yv);
        REQUIRE_EQ(arccoef::coeff_zero(f, m), want0);
        SeriesValue wantS = m % 2 == 1
                                ? SeriesValue(RatFunc(r) * up(2 * m) * yp)
                                : SeriesValue(RatFunc(r - 1) * up(2 * m) * yp + up(4 * r) * yfp);
        REQUIRE_EQ(arccoef::coeff_sign(f, m, +1), wantS);
    }
    // dedicated pq = 0 clauses
    for (auto [p, q, eta] : {std::tuple{2, 0, +1}, std::tuple{0, 2, -1}}) {
        auto g = GermNormalForm::make(Family::A, 11, +1, eta, p, q);
        int s = p + q;
        for (int m = 2; m <= 10; ++m) {
            int r = m / 2;
            SeriesValue want = m % 2 == 1 ? SeriesValue(up(m + (r + 1) * s + 1) / um1)
                                          : SeriesValue(up(m + r * s + 1) / um1);
            REQUIRE_EQ(arccoef::coeff_zero(g, m), want);
            if (m % 2 == 1) REQUIRE_EQ(arccoef::coeff_sign(g, m, +1), SeriesValue(0));
        }
    }
    // dedicated p+q = 1 clauses of the corank-2 recursion
    auto h = GermNormalForm::make(Family::D, 13, +1, +1, 1, 0);
    for (int m = 2; m <= 10; ++m) {
        int r = m / 2;
        SeriesValue want =
            m % 2 == 1 ? SeriesValue(RatFunc(r) * up(2 * m + 1) + up(4 * r + 4) / um1)
                       : SeriesValue(RatFunc(r - 1) * up(2 * m + 1) + up(4 * r + 2) / um1);
        REQUIRE_EQ(arccoef::coeff_zero(h, m), want);
        SeriesValue wantS =
            m % 2 == 1
                ? SeriesValue(RatFunc(r) * up(2 * m + 1))
                : SeriesValue(RatFunc(r - 1) * up(2 * m + 1) +
                              up(4 * r + 1) * grim::beta_Y_fiber({1, 0}, +1, GAction::FlipPlus));
        REQUIRE_EQ(arccoef::coeff_sign(h, m, +1), wantS);
    }
}

// ---- criterion 5 ----
void negative_power_constancy() {
    if (g_catalogue_values.empty()) {
        building_block_regression();
        paper_constants();
    }
    for (const RatFunc& v : g_catalogue_values) {
        std::vector<Int> tail = tail_expand(v, 10);
        for (const Int& c : tail) REQUIRE_EQ(c, tail.front());
    }
}

// ---- criterion 6 ----
void theorem_tables() {
    auto check_rows = [](const std::vector<classify::TableRow>& rows) {
        for (const auto& row : rows) {
            REQUIRE_TRUE(row.computed.kind == row.predicted.kind);
            if (row.computed.kind == classify::Verdict::Kind::Conditional)
                REQUIRE_TRUE(row.computed.conditions == row.predicted.conditions);
            if (row.computed.kind == classify::Verdict::Kind::ZetaEqual &&
                germs::pair_route(row.g1, row.g2) != germs::PairRoute::WithinFamily) {
                // confirm by exact coefficientwise equality of the truncated series
                int crit = arccoef::pair_critical_degree(row.g1);
                for (Channel ch : {Channel::Naive, Channel::Plus, Channel::Minus}) {
                    auto z1 = arccoef::zeta_truncated(row.g1, ch, crit);
                    auto z2 = arccoef::zeta_truncated(row.g2, ch, crit);
                    auto cmpres = series_compare(z1, z2);
                    REQUIRE_TRUE(cmpres.kind == SeriesComparison::Kind::Equal);
                }
            }
            if (row.computed.witness) {
                REQUIRE_TRUE(row.computed.witness->lhs.atom_free());
                REQUIRE_TRUE(row.computed.witness->rhs.atom_free());
                REQUIRE_TRUE(row.computed.witness->lhs != row.computed.witness->rhs);
            }
        }
    };
    check_rows(classify::classify_table({"AB"}, 5, 6));
    check_rows(classify::classify_table({"CD"}, 6, 6));
    auto ef_rows = classify::classify_table({"EF"}, 4, 6);
    check_rows(ef_rows);
    // the quartic condition is resolved exactly when eps matches the branch
    for (const auto& row : ef_rows) {
        if (row.computed.kind != classify::Verdict::Kind::Conditional) continue;
        if (germs::pair_route(row.g1, row.g2) != germs::PairRoute::CrossEF) continue;
        int branch = row.g1.p > row.g1.q ? +1 : -1;
        size_t expected = row.g1.eps == branch ? 4 : 6;
        REQUIRE_EQ(row.computed.conditions.size(), expected);
        for (const AtomEq& eq : row.computed.conditions) {
            REQUIRE_TRUE(eq.lhs.tmpl == eq.rhs.tmpl);
            REQUIRE_TRUE(eq.lhs.tmpl != Atom::Template::OddMixed);  // quartic/cubic catalogue only
        }
    }
}

// ---- criterion 7 ----
void structural_properties() {
    std::vector<GermNormalForm> grid;
    for (int p = 0; p <= 5; ++p)
        for (int q = 0; p + q <= 5; ++q)
            for (int eps : {+1, -1}) {
                for (int eta : {+1, -1}) {
                    if ((eta > 0 && p < 1) || (eta < 0 && q < 1)) continue;
                    for (int k = 0; k <= 8; ++k)
                        grid.push_back(GermNormalForm::make(Family::A, k, eps, eta, p, q));
                    for (int k = 4; k <= 8; ++k)
                        grid.push_back(GermNormalForm::make(Family::D, k, eps, eta, p, q));
                    grid.push_back(GermNormalForm::make(Family::E6, 6, eps, eta, p, q));
                    if (eps == +1) {
                        grid.push_back(GermNormalForm::make(Family::E7, 7, +1, eta, p, q));
                        grid.push_back(GermNormalForm::make(Family::E8, 8, +1, eta, p, q));
                    }
                }
                if (p + q >= 1)
                    for (int k = 2; k <= 8; ++k)
                        grid.push_back(GermNormalForm::make(Family::B, k, eps, std::nullopt, p, q));
                for (int k = 3; k <= 8; ++k)
                    grid.push_back(GermNormalForm::make(Family::C, k, eps, std::nullopt, p, q));
                grid.push_back(GermNormalForm::make(Family::F4, 4, eps, std::nullopt, p, q));
            }
    for (const GermNormalForm& g : grid) {
        REQUIRE_TRUE(germs::parse_germ(germs::render_germ(g)) == g);
        if (g.multiplicity() >= 2 && arccoef::naive_bound(g) >= 1)
            REQUIRE_EQ(arccoef::coeff_net(g, 1), SeriesValue(0));
        REQUIRE_TRUE(classify::compare(g, g).kind == classify::Verdict::Kind::SameNormalForm);
    }
    // symmetry on a sample of pairs
    std::vector<std::pair<GermNormalForm, GermNormalForm>> pairs = {
        {GermNormalForm::make(Family::A, 5, +1, +1, 3, 0),
         GermNormalForm::make(Family::B, 3, +1, std::nullopt, 3, 0)},
        {GermNormalForm::make(Family::A, 4, +1, +1, 2, 2),
         GermNormalForm::make(Family::A, 4, +1, -1, 2, 2)},
        {GermNormalForm::make(Family::D, 5, -1, +1, 3, 0),
         GermNormalForm::make(Family::C, 4, -1, std::nullopt, 3, 0)},
        {GermNormalForm::make(Family::E6, 6, -1, +1, 4, 0),
         GermNormalForm::make(Family::F4, 4, -1, std::nullopt, 4, 0)},
        {GermNormalForm::make(Family::A, 2, +1, +1, 1, 1),
         GermNormalForm::make(Family::A, 2, -1, +1, 1, 1)},
    };
    for (const auto& [a, b] : pairs) {
        auto vab = classify::compare(a, b);
        auto vba = classify::compare(b, a);
        REQUIRE_TRUE(vab.kind == vba.kind);
        if (vab.witness) {
            REQUIRE_TRUE(vba.witness.has_value());
            REQUIRE_TRUE(vab.witness->m == vba.witness->m);
            REQUIRE_TRUE(vab.witness->channel == vba.witness->channel);
            REQUIRE_TRUE(vab.witness->lhs == vba.witness->rhs);
            REQUIRE_TRUE(vab.witness->rhs == vba.witness->lhs);
        }
    }
}

// ---- criterion 8 ----
void fiber_cross_checks() {
    struct Case {
        int p, q, xi;
        GAction a;
        RatFunc want;
    };
    std::vector<Case> cases = {
        {1, 0, +1, GAction::Trivial, rf({0, 2}, {-1, 1})},
        {1, 0, +1, GAction::FlipPlus, RatFunc(1)},
        {2, 0, +1, GAction::Trivial, grim::beta_sphere(1, true)},
        {1, 1, +1, GAction::FlipPlus, RatFunc(IntPoly::u())},
        {1, 1, +1, GAction::FlipMinus, rf({1, 0, 1}, {-1, 1})},
    };
    for (const Case& c : cases) {
        RatFunc got = grim::beta_Y_fiber({c.p, c.q}, c.xi, c.a);
        REQUIRE_EQ(got, c.want);
        REQUIRE_EQ(oracle::oracle_Y_fiber({c.p, c.q}, c.xi, c.a), c.want);
        note_value(got);
    }
}

struct Criterion {
    std::string name;
    std::function<void()> run;
};

const std::vector<Criterion> kCriteria = {
    {"building-block regression (quadric cone closed forms)", building_block_regression},
    {"oracle equivalence (recursions = closed forms)", oracle_equivalence},
    {"pinned residual constants", paper_constants},
    {"degenerate-branch agreement", degenerate_branch_agreement},
    {"negative-power constancy of catalogue values", negative_power_constancy},
    {"theorem tables and dual-path agreement", theorem_tables},
    {"vanishing and structural properties", structural_properties},
    {"fiber cross-checks against the compactification route", fiber_cross_checks},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);
    int failures = 0;
    for (size_t i = 0; i < kCriteria.size(); ++i) {
        int num = static_cast<int>(i) + 1;
        if (only != 0 && num != only) continue;
        try {
            kCriteria[i].run();
            std::cout << "criterion " << num << " (" << kCriteria[i].name << "): PASS\n";
        } catch (const std::exception& e) {
            std::cout << "criterion " << num << " (" << kCriteria[i].name << "): FAIL -- "
                      << e.what() << "\n";
            ++failures;
        }
    }
    return failures == 0 ? 0 : 1;
}

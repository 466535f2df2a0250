#include <doctest.h>

#include "eqzeta/classify.hpp"

using namespace eqzeta;
using namespace eqzeta::classify;
using germs::Family;
using germs::GermNormalForm;
using germs::parse_germ;

TEST_CASE("spec compare examples") {
    // surviving AB pair: p=2, q=0, eta=eps=+1
    Verdict v = compare(parse_germ("x2^4 + x1^2 + x3^2"), parse_germ("x1^4 + x2^2 + x3^2"));
    CHECK(v.kind == Verdict::Kind::ZetaEqual);

    // mixed signature: p=q=1, eta=+1 -> distinct by the degree-2 coefficient
    v = compare(parse_germ("x2^4 + x1^2 - x3^2"), parse_germ("x1^4 + x2^2 - x3^2"));
    CHECK(v.kind == Verdict::Kind::Distinct);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->channel == Channel::Naive);
    CHECK(v.witness->m == 2);
    CHECK(v.witness->lhs != v.witness->rhs);
    CHECK(v.witness->lhs.atom_free());

    // the Cor 7.7 discriminating pair at m = 3
    v = compare(parse_germ("x2^2*x3 - x3^3 + x1^2 + x4^2 + x5^2"),
                parse_germ("x1^2*x2 - x2^3 + x3^2 + x4^2 + x5^2"));
    CHECK(v.kind == Verdict::Kind::Distinct);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->channel == Channel::Naive);
    CHECK(v.witness->m == 3);

    // E6/F4, p > q+1, eta=+1, eps=-1: conditional on the open beta equalities
    v = compare(GermNormalForm::make(Family::E6, 6, -1, +1, 3, 0),
                GermNormalForm::make(Family::F4, 4, -1, std::nullopt, 3, 0));
    CHECK(v.kind == Verdict::Kind::Conditional);
    CHECK(v.conditions.size() == 6);  // three open pairs, both signs
    // eps = +1: the quartic pair resolves into spheres
    v = compare(GermNormalForm::make(Family::E6, 6, +1, +1, 3, 0),
                GermNormalForm::make(Family::F4, 4, +1, std::nullopt, 3, 0));
    CHECK(v.kind == Verdict::Kind::Conditional);
    CHECK(v.conditions.size() == 4);

    v = compare(parse_germ("x1^4 + x2^2 + x3^2"), parse_germ("x1^4 + x2^2 + x3^2"));
    CHECK(v.kind == Verdict::Kind::SameNormalForm);
    v = compare(GermNormalForm::make(Family::A, 3, +1, +1, 2, 0),
                GermNormalForm::make(Family::B, 3, +1, std::nullopt, 2, 0));
    CHECK(v.kind == Verdict::Kind::Distinct);
    CHECK(!v.witness.has_value());  // different underlying ADE classes
    v = compare(GermNormalForm::make(Family::E7, 7, +1, +1, 1, 1),
                GermNormalForm::make(Family::E7, 7, +1, -1, 1, 1));
    CHECK(v.kind == Verdict::Kind::OutOfPaperScope);
}

TEST_CASE("within-family verdicts") {
    // A even k, eps differs: equivariantly Nash equivalent
    Verdict v = compare(GermNormalForm::make(Family::A, 2, +1, +1, 1, 1),
                        GermNormalForm::make(Family::A, 2, -1, +1, 1, 1));
    CHECK(v.kind == Verdict::Kind::Equivalent);
    // A odd k, eps differs: blow-Nash invariant
    v = compare(GermNormalForm::make(Family::A, 3, +1, +1, 1, 1),
                GermNormalForm::make(Family::A, 3, -1, +1, 1, 1));
    CHECK(v.kind == Verdict::Kind::Distinct);
    CHECK(!v.witness.has_value());
    // A_0 eta pair: equal zeta functions
    v = compare(GermNormalForm::make(Family::A, 0, +1, +1, 1, 1),
                GermNormalForm::make(Family::A, 0, +1, -1, 1, 1));
    CHECK(v.kind == Verdict::Kind::ZetaEqual);
    // eta pairs with p = q need the sign channel at degree 2
    v = compare(GermNormalForm::make(Family::A, 4, +1, +1, 2, 2),
                GermNormalForm::make(Family::A, 4, +1, -1, 2, 2));
    CHECK(v.kind == Verdict::Kind::Distinct);
    CHECK(v.witness->channel == Channel::Plus);
    CHECK(v.witness->m == 2);
    // and with p != q the naive channel suffices
    v = compare(GermNormalForm::make(Family::D, 5, +1, +1, 2, 1),
                GermNormalForm::make(Family::D, 5, +1, -1, 2, 1));
    CHECK(v.kind == Verdict::Kind::Distinct);
    CHECK(v.witness->channel == Channel::Naive);
    CHECK(v.witness->m == 2);
    // within-B: only the power sign can differ
    v = compare(GermNormalForm::make(Family::B, 2, +1, std::nullopt, 1, 1),
                GermNormalForm::make(Family::B, 2, -1, std::nullopt, 1, 1));
    CHECK(v.kind == Verdict::Kind::Distinct);
    // A_1 acted-sign pairs route on the full quadratic signature even though
    // canonicalization stores different slot decompositions
    auto a1p = GermNormalForm::make(Family::A, 1, -1, +1, 1, 1);  // stays (1,1), eps=-1
    auto a1m = GermNormalForm::make(Family::A, 1, -1, -1, 1, 1);  // renormalizes to (0,2), eps=+1
    CHECK(a1p.full_signature() == a1m.full_signature());
    CHECK(germs::pair_route(a1p, a1m) == germs::PairRoute::WithinFamily);
    v = compare(a1p, a1m);
    CHECK(v.kind == Verdict::Kind::Distinct);
    CHECK(v.witness->m == 2);
}

TEST_CASE("theorem verdict spot checks") {
    // AB pair, p = q+1 -> Distinct
    Verdict v = theorem_verdict(GermNormalForm::make(Family::A, 3, +1, +1, 2, 1),
                                GermNormalForm::make(Family::B, 2, +1, std::nullopt, 2, 1));
    CHECK(v.kind == Verdict::Kind::Distinct);
    CHECK(v.rules == std::vector<std::string>{"Thm 6.22(1)"});
    // AB pair, k odd, p>q+1, eta=+1, eps=-1 -> Distinct
    v = theorem_verdict(GermNormalForm::make(Family::A, 5, -1, +1, 3, 0),
                        GermNormalForm::make(Family::B, 3, -1, std::nullopt, 3, 0));
    CHECK(v.kind == Verdict::Kind::Distinct);
    // CD pair, k even, p>q+1, eta=eps=+1 -> ZetaEqual
    v = theorem_verdict(GermNormalForm::make(Family::D, 5, +1, +1, 3, 0),
                        GermNormalForm::make(Family::C, 4, +1, std::nullopt, 3, 0));
    CHECK(v.kind == Verdict::Kind::ZetaEqual);
    CHECK(v.rules == std::vector<std::string>{"Thm 7.14(2)"});
    // AB k even, eps = -eta: conditional with the two sign instantiations
    v = theorem_verdict(GermNormalForm::make(Family::A, 7, -1, +1, 3, 0),
                        GermNormalForm::make(Family::B, 4, -1, std::nullopt, 3, 0));
    CHECK(v.kind == Verdict::Kind::Conditional);
    CHECK(v.conditions.size() == 2);
}

TEST_CASE("compare is symmetric with mirrored witnesses") {
    auto a = GermNormalForm::make(Family::A, 4, +1, +1, 2, 2);
    auto b = GermNormalForm::make(Family::A, 4, +1, -1, 2, 2);
    Verdict vab = compare(a, b), vba = compare(b, a);
    CHECK(vab.kind == vba.kind);
    REQUIRE(vab.witness.has_value());
    REQUIRE(vba.witness.has_value());
    CHECK(vab.witness->lhs == vba.witness->rhs);
    CHECK(vab.witness->rhs == vba.witness->lhs);

    auto f = GermNormalForm::make(Family::A, 5, +1, +1, 3, 0);
    auto g = GermNormalForm::make(Family::B, 3, +1, std::nullopt, 3, 0);
    CHECK(compare(f, g).kind == compare(g, f).kind);
}

TEST_CASE("dual-path agreement on a small grid") {
    auto rows = classify_table({"AB", "CD", "EF"}, 4, 4);
    CHECK(rows.size() > 100);
    int distinct = 0, zeta_equal = 0, conditional = 0, equivalent = 0;
    for (const auto& row : rows) {
        CHECK(row.computed.kind == row.predicted.kind);
        switch (row.computed.kind) {
            case Verdict::Kind::Distinct:
                ++distinct;
                if (row.computed.witness) {
                    CHECK(row.computed.witness->lhs.atom_free());
                    CHECK(row.computed.witness->rhs.atom_free());
                    CHECK(row.computed.witness->lhs != row.computed.witness->rhs);
                }
                break;
            case Verdict::Kind::ZetaEqual: ++zeta_equal; break;
            case Verdict::Kind::Conditional:
                ++conditional;
                CHECK(row.computed.conditions == row.predicted.conditions);
                break;
            case Verdict::Kind::Equivalent: ++equivalent; break;
            default: break;
        }
    }
    CHECK(distinct > 0);
    CHECK(zeta_equal > 0);
    CHECK(conditional > 0);
    CHECK(equivalent > 0);
}

// Command-line front end: catalogue values, truncated zeta series, pairwise
// classification and the full verdict tables, with plain-text and JSON
// output.  Exit codes: 0 success, 1 usage or parse error, 2 range error,
// 3 internal dual-path mismatch.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "eqzeta/classify.hpp"
#include "eqzeta/oracle.hpp"

using json = nlohmann::ordered_json;
using namespace eqzeta;

namespace {

int parse_sign(const std::string& s, const std::string& what) {
    if (s == "+1" || s == "1" || s == "+") return +1;
    if (s == "-1" || s == "-") return -1;
    throw CLI::ValidationError(what + " must be +1 or -1");
}

grim::GAction parse_gaction(const std::string& s) {
    if (s == "flip-plus") return grim::GAction::FlipPlus;
    if (s == "flip-minus") return grim::GAction::FlipMinus;
    if (s == "flip-all") return grim::GAction::FlipAll;
    if (s == "trivial") return grim::GAction::Trivial;
    throw CLI::ValidationError("action must be flip-plus|flip-minus|flip-all|trivial");
}

grim::PQAction parse_pqaction(const std::string& s) {
    if (s == "flip-plus") return grim::PQAction::FlipYPlus;
    if (s == "flip-minus") return grim::PQAction::FlipYMinus;
    if (s == "flip-x") return grim::PQAction::FlipX;
    if (s == "flip-all") return grim::PQAction::FlipAll;
    if (s == "trivial") return grim::PQAction::Trivial;
    throw CLI::ValidationError("action must be flip-plus|flip-minus|flip-x|flip-all|trivial");
}

json tail_json(const TailInfo& t) {
    json j;
    switch (t.kind) {
        case TailInfo::Kind::Unknown: j["kind"] = "Unknown"; break;
        case TailInfo::Kind::EqualByRule: j["kind"] = "EqualByRule"; break;
        case TailInfo::Kind::ConditionalByRule: j["kind"] = "ConditionalByRule"; break;
    }
    if (!t.rule.empty()) j["rule"] = t.rule;
    if (!t.conditions.empty()) {
        json conds = json::array();
        for (const AtomEq& eq : t.conditions) conds.push_back(eq.str());
        j["conditions"] = conds;
    }
    return j;
}

json verdict_json(const classify::Verdict& v) {
    json j;
    j["verdict"] = classify::kind_name(v.kind);
    j["reason"] = v.reason;
    if (v.witness) {
        j["witness"] = {{"channel", channel_name(v.witness->channel)},
                        {"m", v.witness->m},
                        {"lhs", v.witness->lhs.str()},
                        {"rhs", v.witness->rhs.str()}};
    }
    if (!v.conditions.empty()) {
        json conds = json::array();
        for (const AtomEq& eq : v.conditions) conds.push_back(eq.str());
        j["conditions"] = conds;
    }
    j["provenance"] = v.rules;
    return j;
}

void emit_value(bool as_json, const std::string& command, const json& inputs,
                const std::string& value, const std::vector<std::string>& provenance) {
    if (as_json) {
        json j;
        j["command"] = command;
        j["inputs"] = inputs;
        j["value"] = value;
        j["provenance"] = provenance;
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << value;
    if (!provenance.empty()) {
        std::cout << "    [";
        for (size_t i = 0; i < provenance.size(); ++i)
            std::cout << (i ? ", " : "") << provenance[i];
        std::cout << "]";
    }
    std::cout << "\n";
}

std::vector<std::string> zeta_provenance(const germs::GermNormalForm& g, Channel ch, int M) {
    using germs::Family;
    std::vector<std::string> prov;
    switch (g.family) {
        case Family::A:
            if (g.k == 0) return {"Rem 6.7"};
            [[fallthrough]];
        case Family::B:
            prov = ch == Channel::Naive ? std::vector<std::string>{"Prop 6.1", "Prop 6.3"}
                                        : std::vector<std::string>{"Prop 6.4"};
            if (M >= arccoef::pair_critical_degree(g) && arccoef::pair_critical_degree(g) > 0)
                prov.push_back(ch == Channel::Naive ? "Prop 6.10" : "Prop 6.14");
            break;
        case Family::C:
        case Family::D:
            prov = ch == Channel::Naive ? std::vector<std::string>{"Prop 7.1", "Prop 6.3"}
                                        : std::vector<std::string>{"Prop 7.2"};
            if (M >= arccoef::pair_critical_degree(g))
                prov.push_back(ch == Channel::Naive ? "Prop 7.5" : "Prop 7.8");
            break;
        case Family::E6:
        case Family::F4:
            prov = ch == Channel::Naive ? std::vector<std::string>{"Prop 8.1", "Prop 6.3"}
                                        : std::vector<std::string>{"Prop 8.2"};
            break;
        default: break;
    }
    return prov;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact equivariant zeta classifier for invariant simple Nash germs"};
    app.require_subcommand(1);
    app.fallthrough();

    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output, one object per line");

    // ---- beta ----
    auto* beta = app.add_subcommand("beta", "equivariant virtual Poincare series of a catalogue set");
    beta->require_subcommand(1);

    int bp = 0, bq = 0, bd = 0, bl = 1, be = 2;
    std::string bxi = "+1", beps = "+1", baction = "trivial";
    bool bfixed = false, bflipx = false;

    auto* betaY = beta->add_subcommand("Y", "zero set of the diagonal quadratic form");
    betaY->add_option("p", bp)->required();
    betaY->add_option("q", bq)->required();
    betaY->add_option("--action", baction, "flip-plus|flip-minus|flip-all|trivial")->required();

    auto* betaYf = beta->add_subcommand("Yfiber", "level set of the diagonal quadratic form");
    betaYf->add_option("p", bp)->required();
    betaYf->add_option("q", bq)->required();
    betaYf->add_option("xi", bxi)->required();
    betaYf->add_option("--action", baction)->required();

    auto* betaS = beta->add_subcommand("sphere", "unit sphere");
    betaS->add_option("d", bd)->required();
    betaS->add_flag("--fixed", bfixed, "the action has a fixed point");

    auto* betaC = beta->add_subcommand("curve-zero", "plane curve x^2 y + eps y^{2l+1} = 0");
    betaC->add_option("l", bl)->required();
    betaC->add_option("eps", beps)->required();
    betaC->add_flag("--flip-x", bflipx);

    auto* betaCu = beta->add_subcommand("cusp-fiber", "plane curve x^2 y + y^{2l+1} = xi");
    betaCu->add_option("l", bl)->required();
    betaCu->add_option("xi", bxi)->required();
    betaCu->add_flag("--flip-x", bflipx);

    auto* betaD = beta->add_subcommand("diag-zero", "zero set of eps x^e + Q_{p,q}");
    betaD->add_option("e", be)->required();
    betaD->add_option("p", bp)->required();
    betaD->add_option("q", bq)->required();
    betaD->add_option("eps", beps)->required();
    betaD->add_option("--action", baction, "flip-plus|flip-minus|flip-x|flip-all|trivial")->required();

    // ---- zeta ----
    auto* zeta = app.add_subcommand("zeta", "truncated equivariant zeta series of a germ");
    std::string zgerm, zchannel = "naive";
    int zorder = -1;
    zeta->add_option("germ", zgerm, "germ text or structured form")->required();
    zeta->add_option("--channel", zchannel, "naive|plus|minus");
    zeta->add_option("--order", zorder, "truncation order (default: the proven bound)");

    // ---- compare ----
    auto* cmp = app.add_subcommand("compare", "decide distinguishability of two germs");
    std::string cg1, cg2;
    cmp->add_option("germ1", cg1)->required();
    cmp->add_option("germ2", cg2)->required();

    // ---- table ----
    auto* table = app.add_subcommand("table", "verdict table over a family grid");
    std::string tfamilies = "AB,CD,EF";
    int tkmax = 4, tpqmax = 4;
    table->add_option("--families", tfamilies, "comma list of AB,CD,EF");
    table->add_option("--kmax", tkmax);
    table->add_option("--pqmax", tpqmax);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (betaY->parsed()) {
            RatFunc v = grim::beta_Y({bp, bq}, parse_gaction(baction));
            std::vector<std::string> prov{"Prop 5.1"};
            if (bq < bp) prov.push_back("Rem 5.2");
            emit_value(as_json, "beta Y", {{"p", bp}, {"q", bq}, {"action", baction}}, v.str(), prov);
        } else if (betaYf->parsed()) {
            RatFunc v = grim::beta_Y_fiber({bp, bq}, parse_sign(bxi, "xi"), parse_gaction(baction));
            emit_value(as_json, "beta Yfiber",
                       {{"p", bp}, {"q", bq}, {"xi", bxi}, {"action", baction}}, v.str(),
                       {"Prop 5.3"});
        } else if (betaS->parsed()) {
            RatFunc v = grim::beta_sphere(bd, bfixed);
            emit_value(as_json, "beta sphere", {{"d", bd}, {"fixed", bfixed}}, v.str(), {"Rem 4.1"});
        } else if (betaC->parsed()) {
            RatFunc v = grim::beta_curve_zero(bl, parse_sign(beps, "eps"), bflipx);
            emit_value(as_json, "beta curve-zero", {{"l", bl}, {"eps", beps}, {"flip_x", bflipx}},
                       v.str(), {"Lem 7.6"});
        } else if (betaCu->parsed()) {
            RatFunc v = grim::beta_cusp_fiber(bl, parse_sign(bxi, "xi"), bflipx);
            emit_value(as_json, "beta cusp-fiber", {{"l", bl}, {"xi", bxi}, {"flip_x", bflipx}},
                       v.str(), {"Prop 7.10"});
        } else if (betaD->parsed()) {
            RatFunc v = grim::beta_diagonal_zero(be, {bp, bq}, parse_sign(beps, "eps"),
                                                 parse_pqaction(baction));
            emit_value(as_json, "beta diag-zero",
                       {{"e", be}, {"p", bp}, {"q", bq}, {"eps", beps}, {"action", baction}},
                       v.str(), {be % 2 == 0 ? "Lem 6.11" : "Lem 7.12"});
        } else if (zeta->parsed()) {
            germs::GermNormalForm g = germs::parse_germ(zgerm);
            Channel ch = zchannel == "naive"  ? Channel::Naive
                         : zchannel == "plus" ? Channel::Plus
                         : zchannel == "minus"
                             ? Channel::Minus
                             : throw CLI::ValidationError("channel must be naive|plus|minus");
            int bound = arccoef::channel_bound(g, ch);
            int M = zorder > 0 ? zorder : std::min(bound, 6);
            if (bound <= 0)
                throw arccoef::OutOfRange("no zeta coefficients are computed for this germ");
            ZetaSeries z = arccoef::zeta_truncated(g, ch, M);
            auto prov = zeta_provenance(g, ch, M);
            if (!z.tail.rule.empty()) prov.push_back(z.tail.rule);
            if (as_json) {
                json coeffs;
                for (const auto& [m, v] : z.coeffs) coeffs[std::to_string(m)] = v.str();
                json j{{"command", "zeta"},
                       {"inputs", {{"germ", germs::render_germ(g)}, {"channel", zchannel}, {"order", M}}},
                       {"series",
                        {{"n", z.n}, {"valid_to", z.valid_to}, {"coefficients", coeffs},
                         {"tail", tail_json(z.tail)}}},
                       {"provenance", prov}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "germ: " << germs::render_germ(g) << "  (n=" << g.n << ", channel "
                          << zchannel << ")\n";
                for (const auto& [m, v] : z.coeffs)
                    std::cout << "  T^" << m << ": " << v.str() << "\n";
                std::cout << "  tail: ";
                switch (z.tail.kind) {
                    case TailInfo::Kind::Unknown: std::cout << "unknown beyond T^" << M; break;
                    case TailInfo::Kind::EqualByRule:
                        std::cout << "equal to the paired series by " << z.tail.rule;
                        break;
                    case TailInfo::Kind::ConditionalByRule:
                        std::cout << "equal to the paired series by " << z.tail.rule
                                  << " iff:";
                        for (const AtomEq& eq : z.tail.conditions) std::cout << "\n    " << eq.str();
                        break;
                }
                std::cout << "\n";
            }
        } else if (cmp->parsed()) {
            germs::GermNormalForm g1 = germs::parse_germ(cg1);
            germs::GermNormalForm g2 = germs::parse_germ(cg2);
            classify::Verdict v = classify::compare(g1, g2);
            if (as_json) {
                json j{{"command", "compare"},
                       {"inputs", {{"germ1", germs::render_germ(g1)}, {"germ2", germs::render_germ(g2)}}}};
                j.update(verdict_json(v));
                std::cout << j.dump() << "\n";
            } else {
                std::cout << classify::kind_name(v.kind) << ": " << v.reason << "\n";
                if (v.witness)
                    std::cout << "  witness at T^" << v.witness->m << " ("
                              << channel_name(v.witness->channel) << "): " << v.witness->lhs.str()
                              << "  vs  " << v.witness->rhs.str() << "\n";
                for (const AtomEq& eq : v.conditions) std::cout << "  requires " << eq.str() << "\n";
                if (!v.rules.empty()) {
                    std::cout << "  [";
                    for (size_t i = 0; i < v.rules.size(); ++i)
                        std::cout << (i ? ", " : "") << v.rules[i];
                    std::cout << "]\n";
                }
            }
        } else if (table->parsed()) {
            std::vector<std::string> fams;
            std::string cur;
            for (char c : tfamilies + ",") {
                if (c == ',') {
                    if (!cur.empty()) fams.push_back(cur);
                    cur.clear();
                } else {
                    cur.push_back(c);
                }
            }
            auto rows = classify::classify_table(fams, tkmax, tpqmax);
            for (const auto& row : rows) {
                if (as_json) {
                    json j{{"command", "table"},
                           {"inputs",
                            {{"germ1", germs::render_germ(row.g1)},
                             {"germ2", germs::render_germ(row.g2)}}}};
                    j.update(verdict_json(row.computed));
                    std::cout << j.dump() << "\n";
                } else {
                    std::cout << germs::render_germ(row.g1) << "  |  " << germs::render_germ(row.g2)
                              << "  ->  " << classify::kind_name(row.computed.kind);
                    if (!row.computed.rules.empty()) std::cout << "  [" << row.computed.rules[0] << "]";
                    std::cout << "\n";
                }
            }
        }
    } catch (const germs::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const arccoef::OutOfRange& e) {
        std::cerr << "range error: " << e.what() << "\n";
        return 2;
    } catch (const classify::DualPathMismatch& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 3;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const grim::IncompatibleAction& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const grim::UnsupportedAction& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const grim::UnresolvedResidual& e) {
        std::cerr << "range error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

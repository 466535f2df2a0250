// Python bindings for the main operations: catalogue values, germ parsing,
// truncated zeta series and pairwise classification.  Values cross the
// boundary as canonical strings or small dicts; all arithmetic stays exact
// on the C++ side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eqzeta/classify.hpp"
#include "eqzeta/oracle.hpp"

namespace py = pybind11;
using namespace eqzeta;

namespace {

grim::GAction gaction(const std::string& s) {
    if (s == "flip-plus") return grim::GAction::FlipPlus;
    if (s == "flip-minus") return grim::GAction::FlipMinus;
    if (s == "flip-all") return grim::GAction::FlipAll;
    if (s == "trivial") return grim::GAction::Trivial;
    throw std::invalid_argument("action must be flip-plus|flip-minus|flip-all|trivial");
}

grim::PQAction pqaction(const std::string& s) {
    if (s == "flip-plus") return grim::PQAction::FlipYPlus;
    if (s == "flip-minus") return grim::PQAction::FlipYMinus;
    if (s == "flip-x") return grim::PQAction::FlipX;
    if (s == "flip-all") return grim::PQAction::FlipAll;
    if (s == "trivial") return grim::PQAction::Trivial;
    throw std::invalid_argument("action must be flip-plus|flip-minus|flip-x|flip-all|trivial");
}

Channel channel(const std::string& s) {
    if (s == "naive") return Channel::Naive;
    if (s == "plus") return Channel::Plus;
    if (s == "minus") return Channel::Minus;
    throw std::invalid_argument("channel must be naive|plus|minus");
}

py::dict verdict_dict(const classify::Verdict& v) {
    py::dict d;
    d["verdict"] = classify::kind_name(v.kind);
    d["reason"] = v.reason;
    d["provenance"] = v.rules;
    if (v.witness) {
        py::dict w;
        w["channel"] = channel_name(v.witness->channel);
        w["m"] = v.witness->m;
        w["lhs"] = v.witness->lhs.str();
        w["rhs"] = v.witness->rhs.str();
        d["witness"] = w;
    }
    std::vector<std::string> conds;
    for (const AtomEq& eq : v.conditions) conds.push_back(eq.str());
    d["conditions"] = conds;
    return d;
}

py::dict series_dict(const ZetaSeries& z) {
    py::dict d;
    d["n"] = z.n;
    d["channel"] = channel_name(z.channel);
    d["valid_to"] = z.valid_to;
    py::dict coeffs;
    for (const auto& [m, v] : z.coeffs) coeffs[py::int_(m)] = v.str();
    d["coefficients"] = coeffs;
    py::dict tail;
    tail["kind"] = z.tail.kind == TailInfo::Kind::Unknown        ? "Unknown"
                   : z.tail.kind == TailInfo::Kind::EqualByRule  ? "EqualByRule"
                                                                 : "ConditionalByRule";
    tail["rule"] = z.tail.rule;
    std::vector<std::string> conds;
    for (const AtomEq& eq : z.tail.conditions) conds.push_back(eq.str());
    tail["conditions"] = conds;
    d["tail"] = tail;
    return d;
}

}  // namespace

PYBIND11_MODULE(_eqzeta, m) {
    m.doc() = "exact equivariant zeta-function classifier for invariant simple Nash germs";

    py::register_exception<germs::ParseError>(m, "GermParseError");
    py::register_exception<arccoef::OutOfRange>(m, "OutOfRangeError");

    m.def(
        "beta_Y",
        [](int p, int q, const std::string& action) {
            return grim::beta_Y({p, q}, gaction(action)).str();
        },
        py::arg("p"), py::arg("q"), py::arg("action"));
    m.def(
        "beta_Y_fiber",
        [](int p, int q, int xi, const std::string& action) {
            return grim::beta_Y_fiber({p, q}, xi, gaction(action)).str();
        },
        py::arg("p"), py::arg("q"), py::arg("xi"), py::arg("action"));
    m.def(
        "beta_sphere",
        [](int d, bool fixed) { return grim::beta_sphere(d, fixed).str(); },
        py::arg("d"), py::arg("fixed_point"));
    m.def(
        "beta_curve_zero",
        [](int l, int eps, bool flip_x) { return grim::beta_curve_zero(l, eps, flip_x).str(); },
        py::arg("l"), py::arg("eps"), py::arg("flip_x") = false);
    m.def(
        "beta_cusp_fiber",
        [](int l, int xi, bool flip_x) { return grim::beta_cusp_fiber(l, xi, flip_x).str(); },
        py::arg("l"), py::arg("xi"), py::arg("flip_x") = false);
    m.def(
        "beta_diagonal_zero",
        [](int e, int p, int q, int eps, const std::string& action) {
            return grim::beta_diagonal_zero(e, {p, q}, eps, pqaction(action)).str();
        },
        py::arg("e"), py::arg("p"), py::arg("q"), py::arg("eps"), py::arg("action"));

    m.def("parse_germ", [](const std::string& text) {
        return germs::render_germ(germs::parse_germ(text));
    });
    m.def("germ_info", [](const std::string& text) {
        germs::GermNormalForm g = germs::parse_germ(text);
        py::dict d;
        d["family"] = germs::family_name(g.family);
        d["k"] = g.k;
        d["eps"] = g.eps;
        if (g.acted_sign) d["eta"] = *g.acted_sign;
        d["p"] = g.p;
        d["q"] = g.q;
        d["n"] = g.n;
        d["canonical"] = germs::render_germ(g);
        return d;
    });

    m.def(
        "zeta",
        [](const std::string& germ, const std::string& ch, int order) {
            germs::GermNormalForm g = germs::parse_germ(germ);
            Channel c = channel(ch);
            if (order <= 0) order = std::min(arccoef::channel_bound(g, c), 6);
            return series_dict(arccoef::zeta_truncated(g, c, order));
        },
        py::arg("germ"), py::arg("channel") = "naive", py::arg("order") = -1);

    m.def("compare", [](const std::string& g1, const std::string& g2) {
        return verdict_dict(classify::compare(germs::parse_germ(g1), germs::parse_germ(g2)));
    });

    m.def(
        "table",
        [](const std::vector<std::string>& families, int kmax, int pqmax) {
            py::list rows;
            for (const auto& row : classify::classify_table(families, kmax, pqmax)) {
                py::dict d;
                d["germ1"] = germs::render_germ(row.g1);
                d["germ2"] = germs::render_germ(row.g2);
                d.attr("update")(verdict_dict(row.computed));
                rows.append(d);
            }
            return rows;
        },
        py::arg("families"), py::arg("kmax") = 4, py::arg("pqmax") = 4);

    m.def("oracle_Y", [](int p, int q, const std::string& action) {
        return oracle::oracle_Y({p, q}, gaction(action)).str();
    });
}

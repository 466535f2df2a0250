#include "eqzeta/germs.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <vector>

namespace eqzeta::germs {

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::E6: return "E6";
        case Family::E7: return "E7";
        case Family::E8: return "E8";
        case Family::F4: return "F4";
    }
    return "?";
}

namespace {
[[noreturn]] void fail(ParseError::Kind kind, const std::string& msg) { throw ParseError(kind, msg); }

int need_sign(int v, const char* what) {
    if (v != 1 && v != -1) fail(ParseError::Kind::NotATemplate, std::string(what) + " must be +1 or -1");
    return v;
}
}  // namespace

GermNormalForm GermNormalForm::make(Family family, int k, int eps, std::optional<int> acted_sign,
                                    int p, int q) {
    if (p < 0 || q < 0) fail(ParseError::Kind::NotATemplate, "negative signature");
    need_sign(eps, "eps");
    auto need_eta = [&]() {
        if (!acted_sign) fail(ParseError::Kind::NotATemplate, family_name(family) + " needs an acted sign");
        need_sign(*acted_sign, "eta");
        if (*acted_sign == +1 && p < 1)
            fail(ParseError::Kind::NotATemplate, "acted sign +1 needs a plus square (p >= 1)");
        if (*acted_sign == -1 && q < 1)
            fail(ParseError::Kind::NotATemplate, "acted sign -1 needs a minus square (q >= 1)");
    };
    auto no_eta = [&]() {
        if (acted_sign)
            fail(ParseError::Kind::NotATemplate,
                 family_name(family) + " carries the action on a power variable; no acted-square sign");
    };
    GermNormalForm g{family, k, eps, acted_sign, p, q, 0};
    switch (family) {
        case Family::A:
            if (k < 0) fail(ParseError::Kind::NotATemplate, "A_k needs k >= 0");
            need_eta();
            if (k == 1) {
                // the all-quadratic template: pin the distinguished square to
                // +1 whenever a positive non-acted square exists
                int P = p + (eps > 0 ? 1 : 0), Q = q + (eps < 0 ? 1 : 0);
                int nonacted_pos = P - (*acted_sign == +1 ? 1 : 0);
                g.eps = nonacted_pos >= 1 ? +1 : -1;
                g.p = P - (g.eps > 0 ? 1 : 0);
                g.q = Q - (g.eps < 0 ? 1 : 0);
                if (g.p < 0 || g.q < 0)
                    fail(ParseError::Kind::NotATemplate, "A_1 needs a distinguished square besides x1");
            }
            g.n = g.p + g.q + 1;
            break;
        case Family::B:
            if (k < 2) fail(ParseError::Kind::NotATemplate, "B_k needs k >= 2");
            no_eta();
            if (p + q < 1) fail(ParseError::Kind::NotATemplate, "B_k needs the x2^2 square");
            g.n = p + q + 1;
            break;
        case Family::C:
            if (k < 3) fail(ParseError::Kind::NotATemplate, "C_k needs k >= 3");
            no_eta();
            g.n = p + q + 2;
            break;
        case Family::D:
            if (k < 4) fail(ParseError::Kind::NotATemplate, "D_k needs k >= 4");
            need_eta();
            g.n = p + q + 2;
            break;
        case Family::E6:
        case Family::E7:
        case Family::E8:
            g.k = family == Family::E6 ? 6 : family == Family::E7 ? 7 : 8;
            if (family != Family::E6 && eps != +1)
                fail(ParseError::Kind::NotATemplate, family_name(family) + " has no sign choice on its monomials");
            need_eta();
            g.n = p + q + 2;
            break;
        case Family::F4:
            g.k = 4;
            no_eta();
            g.n = p + q + 2;
            break;
    }
    return g;
}

std::pair<int, int> GermNormalForm::full_signature() const {
    if (family == Family::A && k == 1)
        return {p + (eps > 0 ? 1 : 0), q + (eps < 0 ? 1 : 0)};
    return {p, q};
}

std::pair<std::string, int> GermNormalForm::underlying() const {
    switch (family) {
        case Family::A: return {"A", k};
        case Family::B: return {"A", 2 * k - 1};
        case Family::C: return {"D", k + 1};
        case Family::D: return {"D", k};
        case Family::E6:
        case Family::F4: return {"E", 6};
        case Family::E7: return {"E", 7};
        case Family::E8: return {"E", 8};
    }
    return {"?", 0};
}

int GermNormalForm::multiplicity() const {
    if (family == Family::A && k == 0) return 1;
    if (s() == 0) return 3;  // C or F4 with empty quadratic part
    return 2;
}

// ---------- text grammar ----------

namespace {

using VarMap = std::map<int, int>;  // variable index -> exponent

struct Mono {
    VarMap vars;
    long long coeff = 1;
};

std::vector<Mono> tokenize(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) fail(ParseError::Kind::Syntax, "empty input");
    std::vector<Mono> monos;
    size_t i = 0;
    auto read_int = [&](const char* what) {
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail(ParseError::Kind::Syntax, std::string("expected digits for ") + what +
                                                           " at position " + std::to_string(start));
        return std::stoll(s.substr(start, i - start));
    };
    while (i < s.size()) {
        long long sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!monos.empty()) {
            fail(ParseError::Kind::Syntax, "expected '+' or '-' at position " + std::to_string(i));
        }
        Mono m;
        m.coeff = sign;
        bool more = true;
        bool any_factor = false;
        while (more) {
            if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                m.coeff *= read_int("coefficient");
            } else if (i < s.size() && s[i] == 'x') {
                ++i;
                int idx = static_cast<int>(read_int("variable index"));
                if (idx < 1) fail(ParseError::Kind::Syntax, "variable index must be >= 1");
                int exp = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    exp = static_cast<int>(read_int("exponent"));
                    if (exp < 1) fail(ParseError::Kind::Syntax, "exponent must be >= 1");
                }
                m.vars[idx] += exp;
            } else {
                fail(ParseError::Kind::Syntax, "expected a factor at position " + std::to_string(i));
            }
            any_factor = true;
            if (i < s.size() && s[i] == '*') {
                ++i;
            } else {
                more = false;
            }
        }
        if (!any_factor || m.vars.empty())
            fail(ParseError::Kind::Syntax, "monomial without variables");
        monos.push_back(std::move(m));
    }
    return monos;
}

struct Shape {
    std::map<VarMap, long long> terms;
    int n = 0;
};

Shape combine(const std::vector<Mono>& monos) {
    Shape sh;
    for (const Mono& m : monos) {
        sh.terms[m.vars] += m.coeff;
        for (const auto& [v, e] : m.vars) sh.n = std::max(sh.n, v);
    }
    std::vector<bool> used(static_cast<size_t>(sh.n) + 1, false);
    for (auto it = sh.terms.begin(); it != sh.terms.end();) {
        if (it->second == 0) {
            fail(ParseError::Kind::NonUnitCoefficient,
                 "monomial cancels to zero; normal forms have unit coefficients");
        }
        if (it->second != 1 && it->second != -1)
            fail(ParseError::Kind::NonUnitCoefficient,
                 "coefficient " + std::to_string(it->second) + " is not a unit");
        for (const auto& [v, e] : it->first) used[static_cast<size_t>(v)] = true;
        ++it;
    }
    for (int v = 1; v <= sh.n; ++v)
        if (!used[static_cast<size_t>(v)])
            fail(ParseError::Kind::Syntax, "unused variable index x" + std::to_string(v) +
                                               " (dimension must be explicit)");
    for (const auto& [vars, c] : sh.terms) {
        auto it = vars.find(1);
        if (it != vars.end() && it->second % 2 != 0)
            fail(ParseError::Kind::NotInvariant,
                 "monomial with odd x1-degree is not invariant under x1 -> -x1");
    }
    return sh;
}

struct Classified {
    std::map<int, int> squares;                      // var -> sign
    std::vector<std::tuple<int, int, int>> powers;   // (var, exp, sign), exp >= 3
    std::vector<std::pair<int, int>> linears;        // (var, sign)
    std::vector<std::pair<VarMap, int>> mixed;       // two-variable monomials
};

Classified classify(const Shape& sh) {
    Classified c;
    for (const auto& [vars, coeff] : sh.terms) {
        int sign = static_cast<int>(coeff);
        if (vars.size() == 1) {
            auto [v, e] = *vars.begin();
            if (e == 1)
                c.linears.emplace_back(v, sign);
            else if (e == 2)
                c.squares.emplace(v, sign);
            else
                c.powers.emplace_back(v, e, sign);
        } else if (vars.size() == 2) {
            c.mixed.emplace_back(vars, sign);
        } else {
            fail(ParseError::Kind::NotATemplate, "no template has a three-variable monomial");
        }
    }
    return c;
}

// signature of the pure squares outside the given exclusion set
std::pair<int, int> rest_signature(const Classified& c, std::initializer_list<int> excluded) {
    int p = 0, q = 0;
    for (const auto& [v, sign] : c.squares) {
        if (std::find(excluded.begin(), excluded.end(), v) != excluded.end()) continue;
        (sign > 0 ? p : q) += 1;
    }
    return {p, q};
}

int square_sign(const Classified& c, int v, const char* tmpl) {
    auto it = c.squares.find(v);
    if (it == c.squares.end())
        fail(ParseError::Kind::NotATemplate,
             std::string("template ") + tmpl + " needs the pure square of x" + std::to_string(v));
    return it->second;
}

void expect_positive(int sign, const std::string& what) {
    if (sign != 1)
        fail(ParseError::Kind::NotATemplate,
             what + " is normalized to coefficient +1 in the templates (substitute to flip its sign)");
}

GermNormalForm match_template(const Shape& sh) {
    Classified c = classify(sh);
    size_t classified = c.squares.size() + c.powers.size() + c.linears.size() + c.mixed.size();
    if (classified != sh.terms.size())
        fail(ParseError::Kind::NotATemplate, "repeated square monomial");

    if (!c.mixed.empty()) {
        if (c.mixed.size() > 1)
            fail(ParseError::Kind::NotATemplate, "no template has two mixed monomials");
        if (!c.linears.empty())
            fail(ParseError::Kind::NotATemplate, "no template mixes a linear monomial with a mixed one");
        const auto& [vars, msign] = c.mixed.front();
        auto it = vars.begin();
        auto [v1, e1] = *it;
        ++it;
        auto [v2, e2] = *it;
        // orient as (a^ea, b^eb) with ea >= eb
        int a = v1, ea = e1, b = v2, eb = e2;
        if (ea < eb) {
            std::swap(a, b);
            std::swap(ea, eb);
        }
        if (ea == 2 && eb == 1) {
            if (a == 1) {
                // C_k : x1^2 x2 + eps x2^k + Q
                expect_positive(msign, "x1^2*x" + std::to_string(b));
                int k = -1, eps = 0;
                for (auto& [pv, pe, ps] : c.powers)
                    if (pv == b) {
                        k = pe;
                        eps = ps;
                    }
                if (k < 3 || c.powers.size() != 1)
                    fail(ParseError::Kind::NotATemplate,
                         "C_k needs eps*x" + std::to_string(b) + "^k with k >= 3");
                if (c.squares.count(b) || c.squares.count(1))
                    fail(ParseError::Kind::NotATemplate, "C_k allows no square on x1 or the cubic variable");
                auto [p, q] = rest_signature(c, {1, b});
                return GermNormalForm::make(Family::C, k, eps, std::nullopt, p, q);
            }
            // D_k : eta x1^2 + x2^2 x3 + eps x3^{k-1} + Q
            expect_positive(msign, "x" + std::to_string(a) + "^2*x" + std::to_string(b));
            if (b == 1 || a == 1)
                fail(ParseError::Kind::NotATemplate, "the D template keeps x1 in its pure square");
            int km1 = -1, eps = 0;
            for (auto& [pv, pe, ps] : c.powers)
                if (pv == b) {
                    km1 = pe;
                    eps = ps;
                }
            if (km1 < 3 || c.powers.size() != 1)
                fail(ParseError::Kind::NotATemplate, "D_k needs eps*x^{k-1} with k-1 >= 3 on the mixed variable");
            int eta = square_sign(c, 1, "D_k");
            if (c.squares.count(a) || c.squares.count(b))
                fail(ParseError::Kind::NotATemplate, "D_k allows no extra square on its corank-2 variables");
            auto [p, q] = rest_signature(c, {1, a, b});
            return GermNormalForm::make(Family::D, km1 + 1, eps, eta,
                                        p + (eta > 0 ? 1 : 0), q + (eta < 0 ? 1 : 0));
        }
        if (ea == 3 && eb == 1) {
            // E7 : eta x1^2 + x2^3 + x2 x3^3 + Q   (mixed = x2 * x3^3)
            expect_positive(msign, "the x2*x3^3 monomial");
            int v = b, w = a;  // cubic variable v, companion w
            if (v == 1 || w == 1)
                fail(ParseError::Kind::NotATemplate, "the E7 template keeps x1 in its pure square");
            bool has_cubic = false;
            for (auto& [pv, pe, ps] : c.powers)
                if (pv == v && pe == 3) {
                    expect_positive(ps, "the cubic monomial of E7");
                    has_cubic = true;
                }
            if (!has_cubic || c.powers.size() != 1)
                fail(ParseError::Kind::NotATemplate, "E7 needs exactly +x2^3 next to x2*x3^3");
            int eta = square_sign(c, 1, "E7");
            if (c.squares.count(v) || c.squares.count(w))
                fail(ParseError::Kind::NotATemplate, "E7 allows no square on its corank-2 variables");
            auto [p, q] = rest_signature(c, {1, v, w});
            return GermNormalForm::make(Family::E7, 7, +1, eta,
                                        p + (eta > 0 ? 1 : 0), q + (eta < 0 ? 1 : 0));
        }
        fail(ParseError::Kind::NotATemplate, "mixed monomial matches no template");
    }

    if (!c.linears.empty()) {
        // A_0 : eta x1^2 + eps x2 + Q
        if (c.linears.size() > 1 || !c.powers.empty())
            fail(ParseError::Kind::NotATemplate, "a linear monomial only appears in the A_0 template");
        auto [v, eps] = c.linears.front();
        if (c.squares.count(v))
            fail(ParseError::Kind::NotATemplate, "A_0 allows no square on the linear variable");
        int eta = square_sign(c, 1, "A_0");
        auto [p, q] = rest_signature(c, {1, v});
        return GermNormalForm::make(Family::A, 0, eps, eta,
                                    p + (eta > 0 ? 1 : 0), q + (eta < 0 ? 1 : 0));
    }

    if (c.powers.empty()) {
        // A_1 : all squares
        int eta = square_sign(c, 1, "A_1");
        if (c.squares.size() < 2)
            fail(ParseError::Kind::NotATemplate, "A_1 needs a distinguished square besides x1");
        // pick any non-acted square as the provisional slot; make() pins eps
        int slot = 0;
        for (const auto& [v, s] : c.squares)
            if (v != 1) slot = v;
        int eps = c.squares.at(slot);
        auto [p, q] = rest_signature(c, {1, slot});
        return GermNormalForm::make(Family::A, 1, eps, eta,
                                    p + (eta > 0 ? 1 : 0), q + (eta < 0 ? 1 : 0));
    }

    if (c.powers.size() == 1) {
        auto [v, e, eps] = c.powers.front();
        if (v == 1) {
            // B_k : eps x1^{2k} + x2^2-slot + Q
            if (e % 2 != 0) fail(ParseError::Kind::NotInvariant, "odd x1-power");  // unreachable
            if (e < 4) fail(ParseError::Kind::NotATemplate, "B_k needs x1^{2k} with k >= 2");
            if (c.squares.count(1))
                fail(ParseError::Kind::NotATemplate, "B_k allows no pure square on x1");
            auto [p, q] = rest_signature(c, {1});
            return GermNormalForm::make(Family::B, e / 2, eps, std::nullopt, p, q);
        }
        // A_k : eta x1^2 + eps x2^{k+1} + Q, k+1 >= 3
        if (c.squares.count(v))
            fail(ParseError::Kind::NotATemplate, "A_k allows no square on the distinguished variable");
        int eta = square_sign(c, 1, "A_k");
        auto [p, q] = rest_signature(c, {1, v});
        return GermNormalForm::make(Family::A, e - 1, eps, eta,
                                    p + (eta > 0 ? 1 : 0), q + (eta < 0 ? 1 : 0));
    }

    if (c.powers.size() == 2) {
        auto [va, eaa, sa] = c.powers[0];
        auto [vb, ebb, sb] = c.powers[1];
        // order by exponent
        if (eaa > ebb) {
            std::swap(va, vb);
            std::swap(eaa, ebb);
            std::swap(sa, sb);
        }
        if (va == 1 || vb == 1) {
            // F4 : eps x1^4 + x2^3 + Q
            if (vb == 1 && ebb == 4 && eaa == 3) {
                expect_positive(sa, "the cubic monomial of F4");
                if (c.squares.count(1))
                    fail(ParseError::Kind::NotATemplate, "F4 allows no pure square on x1");
                if (c.squares.count(va))
                    fail(ParseError::Kind::NotATemplate, "F4 allows no square on the cubic variable");
                auto [p, q] = rest_signature(c, {1, va});
                return GermNormalForm::make(Family::F4, 4, sb, std::nullopt, p, q);
            }
            fail(ParseError::Kind::NotATemplate, "x1-power combines with a cubic only as F4 (x1^4 + x2^3)");
        }
        int eta = square_sign(c, 1, "E6/E8");
        if (c.squares.count(va) || c.squares.count(vb))
            fail(ParseError::Kind::NotATemplate, "E templates allow no square on their corank-2 variables");
        auto [p, q] = rest_signature(c, {1, va, vb});
        p += eta > 0 ? 1 : 0;
        q += eta < 0 ? 1 : 0;
        if (eaa == 3 && ebb == 4) {
            expect_positive(sa, "the cubic monomial of E6");
            return GermNormalForm::make(Family::E6, 6, sb, eta, p, q);
        }
        if (eaa == 3 && ebb == 5) {
            expect_positive(sa, "the cubic monomial of E8");
            expect_positive(sb, "the quintic monomial of E8");
            return GermNormalForm::make(Family::E8, 8, +1, eta, p, q);
        }
        fail(ParseError::Kind::NotATemplate, "two power monomials match only E6, E8 or F4");
    }
    fail(ParseError::Kind::NotATemplate, "too many power monomials for any template");
}

// ---------- structured form ----------

bool looks_structured(const std::string& text) {
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        return ch != 'x' && ch != '+' && ch != '-' && !std::isdigit(static_cast<unsigned char>(ch));
    }
    return false;
}

GermNormalForm parse_structured(const std::string& text) {
    std::istringstream in(text);
    std::string fam;
    in >> fam;
    Family family;
    if (fam == "A") family = Family::A;
    else if (fam == "B") family = Family::B;
    else if (fam == "C") family = Family::C;
    else if (fam == "D") family = Family::D;
    else if (fam == "E6") family = Family::E6;
    else if (fam == "E7") family = Family::E7;
    else if (fam == "E8") family = Family::E8;
    else if (fam == "F4") family = Family::F4;
    else fail(ParseError::Kind::Syntax, "unknown family '" + fam + "'");
    std::map<std::string, int> kv;
    std::string tok;
    while (in >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos)
            fail(ParseError::Kind::Syntax, "expected key=value, got '" + tok + "'");
        std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        try {
            kv[key] = std::stoi(val);
        } catch (...) {
            fail(ParseError::Kind::Syntax, "bad integer in '" + tok + "'");
        }
    }
    auto get = [&](const std::string& key, std::optional<int> dflt) {
        auto it = kv.find(key);
        if (it != kv.end()) return it->second;
        if (dflt) return *dflt;
        fail(ParseError::Kind::Syntax, "missing " + key + "=");
    };
    bool has_eta = family == Family::A || family == Family::D || family == Family::E6 ||
                   family == Family::E7 || family == Family::E8;
    int defk = family == Family::E6 ? 6 : family == Family::E7 ? 7 : family == Family::E8 ? 8
               : family == Family::F4 ? 4 : -1;
    std::optional<int> kd;
    if (defk >= 0) kd = defk;
    std::optional<int> epsd;
    if (family == Family::E7 || family == Family::E8) epsd = +1;
    int k = get("k", kd);
    int eps = get("eps", epsd);
    std::optional<int> eta;
    if (has_eta) eta = get("eta", std::nullopt);
    else if (kv.count("eta"))
        fail(ParseError::Kind::Syntax, fam + " takes no eta=");
    int p = get("p", std::nullopt), q = get("q", std::nullopt);
    return GermNormalForm::make(family, k, eps, eta, p, q);
}

}  // namespace

GermNormalForm parse_germ(const std::string& text) {
    if (looks_structured(text)) return parse_structured(text);
    Shape sh = combine(tokenize(text));
    GermNormalForm g = match_template(sh);
    if (g.n != sh.n)
        fail(ParseError::Kind::NotATemplate, "variables do not fill the template dimensions");
    return g;
}

// ---------- rendering ----------

namespace {
struct Renderer {
    std::ostringstream out;
    bool first = true;
    void term(int sign, const std::string& body) {
        if (first) {
            if (sign < 0) out << "-";
            first = false;
        } else {
            out << (sign < 0 ? " - " : " + ");
        }
        out << body;
    }
    void var(int sign, int idx, int exp) {
        std::ostringstream b;
        b << "x" << idx;
        if (exp != 1) b << "^" << exp;
        term(sign, b.str());
    }
    void quadratic_block(int p, int q, int start) {
        int idx = start;
        for (int i = 0; i < p; ++i) var(+1, idx++, 2);
        for (int i = 0; i < q; ++i) var(-1, idx++, 2);
    }
};
}  // namespace

std::string render_germ(const GermNormalForm& g) {
    Renderer r;
    int eta = g.acted_sign.value_or(+1);
    switch (g.family) {
        case Family::A: {
            r.var(eta, 1, 2);
            if (g.k == 0)
                r.var(g.eps, 2, 1);
            else
                r.var(g.eps, 2, g.k + 1);
            r.quadratic_block(g.p - (eta > 0 ? 1 : 0), g.q - (eta < 0 ? 1 : 0), 3);
            break;
        }
        case Family::B: {
            r.var(g.eps, 1, 2 * g.k);
            int slot = g.p >= 1 ? +1 : -1;
            r.var(slot, 2, 2);
            r.quadratic_block(g.p - (slot > 0 ? 1 : 0), g.q - (slot < 0 ? 1 : 0), 3);
            break;
        }
        case Family::C:
            r.term(+1, "x1^2*x2");
            r.var(g.eps, 2, g.k);
            r.quadratic_block(g.p, g.q, 3);
            break;
        case Family::D:
            r.var(eta, 1, 2);
            r.term(+1, "x2^2*x3");
            r.var(g.eps, 3, g.k - 1);
            r.quadratic_block(g.p - (eta > 0 ? 1 : 0), g.q - (eta < 0 ? 1 : 0), 4);
            break;
        case Family::E6:
            r.var(eta, 1, 2);
            r.var(+1, 2, 3);
            r.var(g.eps, 3, 4);
            r.quadratic_block(g.p - (eta > 0 ? 1 : 0), g.q - (eta < 0 ? 1 : 0), 4);
            break;
        case Family::E7:
            r.var(eta, 1, 2);
            r.var(+1, 2, 3);
            r.term(+1, "x2*x3^3");
            r.quadratic_block(g.p - (eta > 0 ? 1 : 0), g.q - (eta < 0 ? 1 : 0), 4);
            break;
        case Family::E8:
            r.var(eta, 1, 2);
            r.var(+1, 2, 3);
            r.var(+1, 3, 5);
            r.quadratic_block(g.p - (eta > 0 ? 1 : 0), g.q - (eta < 0 ? 1 : 0), 4);
            break;
        case Family::F4:
            r.var(g.eps, 1, 4);
            r.var(+1, 2, 3);
            r.quadratic_block(g.p, g.q, 3);
            break;
    }
    return r.out.str();
}

std::string route_name(PairRoute r) {
    switch (r) {
        case PairRoute::SameNormalForm: return "SameNormalForm";
        case PairRoute::WithinFamily: return "WithinFamily";
        case PairRoute::CrossAB: return "CrossAB";
        case PairRoute::CrossCD: return "CrossCD";
        case PairRoute::CrossEF: return "CrossEF";
        case PairRoute::CrossDistinct: return "CrossDistinct";
        case PairRoute::OutOfPaper: return "OutOfPaper";
    }
    return "?";
}

PairRoute pair_route(const GermNormalForm& a, const GermNormalForm& b) {
    if (a == b) return PairRoute::SameNormalForm;
    if (a.family == b.family) {
        if (a.k == b.k && a.full_signature() == b.full_signature()) {
            if (a.family == Family::E7 || a.family == Family::E8) return PairRoute::OutOfPaper;
            return PairRoute::WithinFamily;
        }
        return PairRoute::CrossDistinct;
    }
    if (a.underlying() != b.underlying()) return PairRoute::CrossDistinct;
    if (a.full_signature() != b.full_signature() || a.n != b.n) return PairRoute::CrossDistinct;
    if (a.eps != b.eps) return PairRoute::CrossDistinct;
    auto families = std::minmax(a.family, b.family);
    if (families == std::minmax(Family::A, Family::B)) return PairRoute::CrossAB;
    if (families == std::minmax(Family::C, Family::D)) return PairRoute::CrossCD;
    if (families == std::minmax(Family::E6, Family::F4)) return PairRoute::CrossEF;
    return PairRoute::CrossDistinct;
}

}  // namespace eqzeta::germs

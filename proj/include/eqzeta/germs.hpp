#ifndef EQZETA_GERMS_HPP
#define EQZETA_GERMS_HPP

#include <optional>
#include <string>

#include "eqzeta/qring.hpp"

// Normal forms of the invariant simple germs, their text grammar, and the
// routing of germ pairs to comparison strategies.
//
// Grammar: a sum of signed monomials in x1..xn with unit coefficients,
// factors joined by '*', exponents by '^', whitespace ignored.  x1 is pinned
// as the variable whose sign the involution flips, so every monomial must
// have even x1-degree.  A structured form "FAMILY k=.. eps=.. eta=.. p=.. q=.."
// is also accepted.

namespace eqzeta::germs {

enum class Family { A, B, C, D, E6, E7, E8, F4 };

std::string family_name(Family f);

struct ParseError : std::runtime_error {
    enum class Kind { Syntax, NotInvariant, NotATemplate, NonUnitCoefficient };
    Kind kind;
    ParseError(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
};

// (p, q) is the signature of the full quadratic part of the germ: it counts
// the acted square of the A/D/E templates and the x2^2 slot of the B
// template, but never the distinguished non-quadratic monomial.
struct GermNormalForm {
    Family family;
    int k;                          // family index; 6/7/8/4 for E6/E7/E8/F4
    int eps;                        // sign of the distinguished monomial
    std::optional<int> acted_sign;  // sign of the acted square; nullopt for B/C/F4
    int p, q;
    int n;

    static GermNormalForm make(Family family, int k, int eps, std::optional<int> acted_sign,
                               int p, int q);

    int s() const { return p + q; }
    int eta() const { return acted_sign.value_or(+1); }
    // signature of the whole quadratic form (for A_1 the distinguished
    // square is quadratic too and counts here)
    std::pair<int, int> full_signature() const;
    bool operator==(const GermNormalForm& o) const {
        return family == o.family && k == o.k && eps == o.eps && acted_sign == o.acted_sign &&
               p == o.p && q == o.q;
    }
    bool operator!=(const GermNormalForm& o) const { return !(*this == o); }

    // non-equivariant ADE class, e.g. {"A", 3} for both A_3 and B_2
    std::pair<std::string, int> underlying() const;
    int multiplicity() const;  // order of the germ at 0
};

GermNormalForm parse_germ(const std::string& text);
std::string render_germ(const GermNormalForm& g);

enum class PairRoute { SameNormalForm, WithinFamily, CrossAB, CrossCD, CrossEF, CrossDistinct, OutOfPaper };

std::string route_name(PairRoute r);
PairRoute pair_route(const GermNormalForm& a, const GermNormalForm& b);

}  // namespace eqzeta::germs

#endif

#ifndef EQZETA_CLASSIFY_HPP
#define EQZETA_CLASSIFY_HPP

#include <optional>

#include "eqzeta/arccoef.hpp"
#include "eqzeta/germs.hpp"

// Pairwise distinguishability engine.  Two independent paths must agree: a
// direct coefficientwise comparison of the truncated zeta series, and the
// encoded clause tables of the classification theorems.  Equal coefficients
// never prove equivalence, so the strongest positive verdict on a cross pair
// is ZetaEqual, not Equivalent.

namespace eqzeta::classify {

struct NoClause : std::runtime_error {
    explicit NoClause(const std::string& what) : std::runtime_error(what) {}
};
struct DualPathMismatch : std::runtime_error {
    explicit DualPathMismatch(const std::string& what) : std::runtime_error(what) {}
};

// a channel and degree where the two series provably differ
struct Witness {
    Channel channel = Channel::Naive;
    int m = 0;
    SeriesValue lhs, rhs;  // raw beta(A_m) values, argument order
};

struct Verdict {
    enum class Kind { SameNormalForm, Equivalent, Distinct, ZetaEqual, Conditional, OutOfPaperScope };
    Kind kind = Kind::OutOfPaperScope;
    std::string reason;
    std::vector<std::string> rules;    // clause ids backing the verdict
    std::optional<Witness> witness;    // present for computed distinctions
    std::vector<AtomEq> conditions;    // for Conditional
};

std::string kind_name(Verdict::Kind k);

Verdict compare(const germs::GermNormalForm& a, const germs::GermNormalForm& b);
Verdict theorem_verdict(const germs::GermNormalForm& a, const germs::GermNormalForm& b);

struct TableRow {
    germs::GermNormalForm g1, g2;
    Verdict computed;
    Verdict predicted;
};

// All comparable pairs of the requested family grids, each computed by
// compare and cross-checked against theorem_verdict.  Throws
// DualPathMismatch on any disagreement.
std::vector<TableRow> classify_table(const std::vector<std::string>& families, int kmax,
                                     int pqmax);

}  // namespace eqzeta::classify

#endif

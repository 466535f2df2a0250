#ifndef EQZETA_QRING_HPP
#define EQZETA_QRING_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Exact arithmetic for integer polynomials and rational functions in u,
// values with opaque unresolved summands (atoms), and truncated zeta series
// in T.  Everything here is immutable value semantics; no floating point.

namespace eqzeta {

using Int = boost::multiprecision::cpp_int;

struct NotExpandable : std::runtime_error {
    explicit NotExpandable(const std::string& what) : std::runtime_error(what) {}
};

// Polynomial in u over Z, coefficients stored by ascending degree.
// Canonical: no trailing zero coefficient; zero polynomial has empty storage.
class IntPoly {
  public:
    IntPoly() = default;
    IntPoly(long long c) { if (c != 0) coeffs_.push_back(Int(c)); }
    IntPoly(const Int& c) { if (c != 0) coeffs_.push_back(c); }
    explicit IntPoly(std::vector<Int> ascending) : coeffs_(std::move(ascending)) { trim(); }
    IntPoly(std::initializer_list<long long> ascending) {
        for (long long c : ascending) coeffs_.emplace_back(c);
        trim();
    }

    static IntPoly monomial(int degree, Int coeff = Int(1));
    static IntPoly u() { return monomial(1); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const Int& coeff(int i) const;
    const Int& leading() const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    Int content() const;          // gcd of coefficients, >= 0
    IntPoly primitive_part() const;

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const Int& c) const;
    bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }

    // Exact division; returns nothing if o does not divide *this over Z[u].
    std::optional<IntPoly> divide_exact(const IntPoly& o) const;

    // gcd with positive leading coefficient (primitive PRS).
    static IntPoly gcd(IntPoly a, IntPoly b);

    std::string str() const;      // "u^2-u+1", decreasing powers, compact

  private:
    void trim();
    std::vector<Int> coeffs_;
};

IntPoly gsum(int d, int count);   // sum_{t=0}^{count-1} u^{t*d}, explicit loop

// Reduced fraction num/den of IntPoly.  Canonical: den nonzero with positive
// leading coefficient, poly gcd(num, den) constant, joint integer content 1.
class RatFunc {
  public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(long long c) : num_(c), den_(1) {}
    RatFunc(IntPoly num) : num_(std::move(num)), den_(1) {}
    RatFunc(IntPoly num, IntPoly den);

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;   // o nonzero
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    std::string str() const;

  private:
    void normalize();
    IntPoly num_, den_;
};

enum class ArithOp { Add, Sub, Mul };

RatFunc ratfunc_arith(const RatFunc& a, const RatFunc& b, ArithOp op);
RatFunc laurent_shift(const RatFunc& a, int e);   // a * u^e

// Coefficients of u^{-1},...,u^{-depth} of a viewed in Z[u][[u^{-1}]].
// Throws NotExpandable when the expansion does not stay integral.
std::vector<Int> tail_expand(const RatFunc& a, int depth);

// Opaque unresolved beta value.  Keys are structural; the canonical face of
// each template is fixed by the factory helpers in grim (squares positive,
// even power carrying -1, odd power carrying +1).
struct Atom {
    enum class Template { EvenMixed, OddMixed, CubicMixed, QuarticCubicMixed };
    enum class Variant { FlipInsideSquares, FlipOnPowerVariable, TrivialAction };

    Template tmpl;
    int exponent;   // 2k / k / 3 / 4
    int K;          // number of squares, >= 1
    int xi;         // +1 / -1 (canonical face)
    Atom::Variant variant;
    int eps;        // power coefficient; meaningful for QuarticCubicMixed only

    auto key() const { return std::tie(tmpl, exponent, K, xi, variant, eps); }
    bool operator==(const Atom& o) const { return key() == o.key(); }
    bool operator<(const Atom& o) const { return key() < o.key(); }
    std::string str() const;
};

// One required equality between two unresolved atoms.
struct AtomEq {
    Atom lhs, rhs;
    AtomEq(Atom a, Atom b) : lhs(std::move(a)), rhs(std::move(b)) { if (rhs < lhs) std::swap(lhs, rhs); }
    bool operator==(const AtomEq& o) const { return lhs == o.lhs && rhs == o.rhs; }
    bool operator<(const AtomEq& o) const { return std::tie(lhs, rhs) < std::tie(o.lhs, o.rhs); }
    std::string str() const { return lhs.str() + " = " + rhs.str(); }
};

// RatFunc plus a finite Z(u)-linear combination of atoms.
class SeriesValue {
  public:
    SeriesValue() = default;
    SeriesValue(RatFunc r) : rat_(std::move(r)) {}
    SeriesValue(long long c) : rat_(c) {}
    static SeriesValue atom(const Atom& a, RatFunc coeff = RatFunc(1));

    const RatFunc& rat() const { return rat_; }
    const std::map<Atom, RatFunc>& atoms() const { return atoms_; }
    bool atom_free() const { return atoms_.empty(); }
    bool is_zero() const { return rat_.is_zero() && atoms_.empty(); }

    SeriesValue operator-() const;
    SeriesValue operator+(const SeriesValue& o) const;
    SeriesValue operator-(const SeriesValue& o) const;
    SeriesValue scaled(const RatFunc& c) const;
    bool operator==(const SeriesValue& o) const { return rat_ == o.rat_ && atoms_ == o.atoms_; }
    bool operator!=(const SeriesValue& o) const { return !(*this == o); }

    std::string str() const;

  private:
    void drop_zero_atoms();
    RatFunc rat_;
    std::map<Atom, RatFunc> atoms_;
};

SeriesValue value_arith(const SeriesValue& a, const SeriesValue& b, ArithOp op);
SeriesValue value_scale(const SeriesValue& a, const RatFunc& c);

enum class Channel { Naive, Plus, Minus };
std::string channel_name(Channel c);

struct TailInfo {
    enum class Kind { Unknown, EqualByRule, ConditionalByRule };
    Kind kind = Kind::Unknown;
    std::string rule;                  // clause id, e.g. "Prop 6.20"
    std::vector<AtomEq> conditions;    // for ConditionalByRule
};

// Truncated zeta series: coefficient at T^m is beta(A_m)·u^{-mn} for
// 1 <= m <= valid_to.  Nothing beyond valid_to is ever fabricated.
struct ZetaSeries {
    int n = 0;
    Channel channel = Channel::Naive;
    int valid_to = 0;
    std::map<int, SeriesValue> coeffs;
    TailInfo tail;
};

struct IncomparableTails : std::runtime_error {
    explicit IncomparableTails(const std::string& what) : std::runtime_error(what) {}
};

struct SeriesComparison {
    enum class Kind { Equal, FirstDifference, ConditionallyEqual };
    Kind kind = Kind::Equal;
    int m = 0;                       // for FirstDifference
    SeriesValue lhs, rhs;            // coefficients at m
    std::vector<AtomEq> conditions;  // for ConditionallyEqual
};

SeriesComparison series_compare(const ZetaSeries& z1, const ZetaSeries& z2);

}  // namespace eqzeta

#endif

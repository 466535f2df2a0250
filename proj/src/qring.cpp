#include "eqzeta/qring.hpp"

#include <algorithm>
#include <sstream>

namespace eqzeta {

namespace {
const Int kZero(0);

Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}
}  // namespace

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::monomial(int degree, Int coeff) {
    IntPoly p;
    if (coeff == 0) return p;
    p.coeffs_.assign(static_cast<size_t>(degree) + 1, Int(0));
    p.coeffs_.back() = std::move(coeff);
    return p;
}

const Int& IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(i)];
}

const Int& IntPoly::leading() const {
    if (coeffs_.empty()) return kZero;
    return coeffs_.back();
}

Int IntPoly::content() const {
    Int g(0);
    for (const Int& c : coeffs_) g = int_gcd(g, c);
    return g;
}

IntPoly IntPoly::primitive_part() const {
    Int g = content();
    if (g == 0 || g == 1) return *this;
    IntPoly r;
    r.coeffs_.reserve(coeffs_.size());
    for (const Int& c : coeffs_) r.coeffs_.push_back(c / g);
    return r;
}

IntPoly IntPoly::operator-() const {
    IntPoly r;
    r.coeffs_.reserve(coeffs_.size());
    for (const Int& c : coeffs_) r.coeffs_.push_back(-c);
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    IntPoly r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (size_t i = 0; i < r.coeffs_.size(); ++i) {
        if (i < coeffs_.size()) r.coeffs_[i] += coeffs_[i];
        if (i < o.coeffs_.size()) r.coeffs_[i] += o.coeffs_[i];
    }
    r.trim();
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    IntPoly r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    r.trim();
    return r;
}

IntPoly IntPoly::operator*(const Int& c) const {
    if (c == 0) return IntPoly();
    IntPoly r;
    r.coeffs_.reserve(coeffs_.size());
    for (const Int& a : coeffs_) r.coeffs_.push_back(a * c);
    return r;
}

std::optional<IntPoly> IntPoly::divide_exact(const IntPoly& o) const {
    if (o.is_zero()) return std::nullopt;
    IntPoly rem = *this;
    std::vector<Int> quo(is_zero() ? 0 : std::max(0, degree() - o.degree()) + 1, Int(0));
    while (!rem.is_zero() && rem.degree() >= o.degree()) {
        if (rem.leading() % o.leading() != 0) return std::nullopt;
        Int c = rem.leading() / o.leading();
        int d = rem.degree() - o.degree();
        quo[static_cast<size_t>(d)] = c;
        rem = rem - o * IntPoly::monomial(d, c);
    }
    if (!rem.is_zero()) return std::nullopt;
    return IntPoly(std::move(quo));
}

// Primitive PRS: pseudo-remainders with content stripped each round.
IntPoly IntPoly::gcd(IntPoly a, IntPoly b) {
    if (a.is_zero() && b.is_zero()) return IntPoly();
    Int ca = a.content(), cb = b.content();
    Int cg = int_gcd(ca, cb);
    a = a.primitive_part();
    b = b.primitive_part();
    while (!b.is_zero()) {
        // pseudo-remainder of a by b
        IntPoly rem = a;
        int steps = std::max(0, a.degree() - b.degree()) + 1;
        for (int i = 0; i < steps && !rem.is_zero() && rem.degree() >= b.degree(); ++i) {
            rem = rem * b.leading() - b * IntPoly::monomial(rem.degree() - b.degree(), rem.leading());
        }
        a = b;
        b = rem.primitive_part();
    }
    IntPoly g = a * cg;
    if (g.leading() < 0) g = -g;
    return g;
}

IntPoly gsum(int d, int count) {
    if (d < 0) throw std::invalid_argument("gsum: negative step");
    IntPoly acc;
    for (int t = 0; t < count; ++t) acc = acc + IntPoly::monomial(t * d);
    return acc;
}

RatFunc::RatFunc(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = IntPoly(1);
        return;
    }
    IntPoly g = IntPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = *num_.divide_exact(g);
        den_ = *den_.divide_exact(g);
    }
    Int c = int_gcd(num_.content(), den_.content());
    if (c > 1) {
        num_ = *num_.divide_exact(IntPoly(c));
        den_ = *den_.divide_exact(IntPoly(c));
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw std::invalid_argument("RatFunc: division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc ratfunc_arith(const RatFunc& a, const RatFunc& b, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
    }
    throw std::logic_error("ratfunc_arith: bad op");
}

RatFunc laurent_shift(const RatFunc& a, int e) {
    if (e >= 0) return RatFunc(a.num() * IntPoly::monomial(e), a.den());
    return RatFunc(a.num(), a.den() * IntPoly::monomial(-e));
}

std::vector<Int> tail_expand(const RatFunc& a, int depth) {
    if (depth <= 0) throw std::invalid_argument("tail_expand: depth must be positive");
    // Long division of num*u^depth by den; quotient coefficients below u^depth
    // are the u^{-1},...,u^{-depth} coefficients of the expansion.
    IntPoly rem = a.num() * IntPoly::monomial(depth);
    const IntPoly& den = a.den();
    std::vector<Int> quo(static_cast<size_t>(std::max(0, rem.degree() - den.degree()) + 1), Int(0));
    while (!rem.is_zero() && rem.degree() >= den.degree()) {
        if (rem.leading() % den.leading() != 0)
            throw NotExpandable("denominator is not expansible in u^-1: " + a.str());
        Int c = rem.leading() / den.leading();
        int d = rem.degree() - den.degree();
        quo[static_cast<size_t>(d)] = c;
        rem = rem - den * IntPoly::monomial(d, c);
    }
    std::vector<Int> out;
    out.reserve(static_cast<size_t>(depth));
    for (int j = depth - 1; j >= 0; --j)
        out.push_back(j < static_cast<int>(quo.size()) ? quo[static_cast<size_t>(j)] : Int(0));
    return out;
}

// ---- rendering ----

namespace {
std::string int_str(const Int& v) { return v.str(); }

void append_term(std::ostringstream& out, const Int& c, int deg, bool first) {
    Int a = c < 0 ? Int(-c) : c;
    if (first) {
        if (c < 0) out << "-";
    } else {
        out << (c < 0 ? "-" : "+");
    }
    if (deg == 0) {
        out << int_str(a);
    } else {
        if (a != 1) out << int_str(a);
        out << "u";
        if (deg > 1) out << "^" << deg;
    }
}
}  // namespace

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        if (coeff(d) == 0) continue;
        append_term(out, coeff(d), d, first);
        first = false;
    }
    return out.str();
}

namespace {
int term_count(const IntPoly& p) {
    int n = 0;
    for (const Int& c : p.coeffs())
        if (c != 0) ++n;
    return n;
}

// Try to present den as u^f*(u-1)^e; fall back to the raw polynomial.
std::string den_str(const IntPoly& den) {
    IntPoly rest = den;
    int f = 0, e = 0;
    while (rest.degree() > 0 && rest.coeff(0) == 0) {
        auto q = rest.divide_exact(IntPoly::u());
        if (!q) break;
        rest = *q;
        ++f;
    }
    IntPoly um1 = IntPoly::u() - IntPoly(1);
    for (;;) {
        auto q = rest.divide_exact(um1);
        if (!q) break;
        rest = *q;
        ++e;
    }
    if (rest == IntPoly(1) && (f > 0 || e > 0)) {
        std::ostringstream out;
        if (f > 0 && e > 0) out << "(";
        if (f > 0) {
            out << "u";
            if (f > 1) out << "^" << f;
        }
        if (e > 0) {
            if (f > 0) out << "*";
            out << "(u-1)";
            if (e > 1) out << "^" << e;
        }
        if (f > 0 && e > 0) out << ")";
        return out.str();
    }
    return "(" + den.str() + ")";
}
}  // namespace

std::string RatFunc::str() const {
    if (den_ == IntPoly(1)) return num_.str();
    std::string n = num_.str();
    if (term_count(num_) > 1) n = "(" + n + ")";
    return n + "/" + den_str(den_);
}

// ---- atoms and series values ----

std::string Atom::str() const {
    std::ostringstream out;
    out << "Atom(";
    switch (tmpl) {
        case Template::EvenMixed: out << "even"; break;
        case Template::OddMixed: out << "odd"; break;
        case Template::CubicMixed: out << "cubic"; break;
        case Template::QuarticCubicMixed: out << "quartic-cubic"; break;
    }
    out << ",e=" << exponent;
    if (tmpl == Template::QuarticCubicMixed) out << ",eps=" << (eps > 0 ? "+1" : "-1");
    out << ",K=" << K << ",xi=" << (xi > 0 ? "+1" : "-1") << ",act=";
    switch (variant) {
        case Variant::FlipInsideSquares: out << "flip-square"; break;
        case Variant::FlipOnPowerVariable: out << "flip-power"; break;
        case Variant::TrivialAction: out << "trivial"; break;
    }
    out << ")";
    return out.str();
}

SeriesValue SeriesValue::atom(const Atom& a, RatFunc coeff) {
    SeriesValue v;
    if (!coeff.is_zero()) v.atoms_.emplace(a, std::move(coeff));
    return v;
}

void SeriesValue::drop_zero_atoms() {
    for (auto it = atoms_.begin(); it != atoms_.end();) {
        if (it->second.is_zero())
            it = atoms_.erase(it);
        else
            ++it;
    }
}

SeriesValue SeriesValue::operator-() const {
    SeriesValue r;
    r.rat_ = -rat_;
    for (const auto& [a, c] : atoms_) r.atoms_.emplace(a, -c);
    return r;
}

SeriesValue SeriesValue::operator+(const SeriesValue& o) const {
    SeriesValue r = *this;
    r.rat_ = r.rat_ + o.rat_;
    for (const auto& [a, c] : o.atoms_) {
        auto [it, inserted] = r.atoms_.emplace(a, c);
        if (!inserted) it->second = it->second + c;
    }
    r.drop_zero_atoms();
    return r;
}

SeriesValue SeriesValue::operator-(const SeriesValue& o) const { return *this + (-o); }

SeriesValue SeriesValue::scaled(const RatFunc& c) const {
    SeriesValue r;
    if (c.is_zero()) return r;
    r.rat_ = rat_ * c;
    for (const auto& [a, k] : atoms_) r.atoms_.emplace(a, k * c);
    return r;
}

std::string SeriesValue::str() const {
    if (atoms_.empty()) return rat_.str();
    std::ostringstream out;
    bool first = true;
    if (!rat_.is_zero()) {
        out << rat_.str();
        first = false;
    }
    for (const auto& [a, c] : atoms_) {
        if (!first) out << " + ";
        first = false;
        if (c == RatFunc(1))
            out << a.str();
        else
            out << c.str() << "*" << a.str();
    }
    return out.str();
}

SeriesValue value_arith(const SeriesValue& a, const SeriesValue& b, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul:
            // atom linear combinations only; no atom products
            if (a.atom_free()) return b.scaled(a.rat());
            if (b.atom_free()) return a.scaled(b.rat());
            throw std::logic_error("value_arith: product of two atom-bearing values");
    }
    throw std::logic_error("value_arith: bad op");
}

SeriesValue value_scale(const SeriesValue& a, const RatFunc& c) { return a.scaled(c); }

std::string channel_name(Channel c) {
    switch (c) {
        case Channel::Naive: return "naive";
        case Channel::Plus: return "plus";
        case Channel::Minus: return "minus";
    }
    return "?";
}

SeriesComparison series_compare(const ZetaSeries& z1, const ZetaSeries& z2) {
    if (z1.channel != z2.channel)
        throw std::invalid_argument("series_compare: different sign channels");
    SeriesComparison res;
    int bound = std::min(z1.valid_to, z2.valid_to);
    std::vector<AtomEq> conds;
    for (int m = 1; m <= bound; ++m) {
        auto i1 = z1.coeffs.find(m);
        auto i2 = z2.coeffs.find(m);
        SeriesValue a = i1 == z1.coeffs.end() ? SeriesValue() : i1->second;
        SeriesValue b = i2 == z2.coeffs.end() ? SeriesValue() : i2->second;
        SeriesValue d = a - b;
        if (d.is_zero()) continue;
        if (d.atom_free()) {
            res.kind = SeriesComparison::Kind::FirstDifference;
            res.m = m;
            res.lhs = a;
            res.rhs = b;
            return res;
        }
        // Expected shape: c*(A - B) with A, B opaque; anything else is not a
        // pattern the classification tables produce.
        if (!d.rat().is_zero() || d.atoms().size() != 2)
            throw std::logic_error("series_compare: unrecognized atom difference at m=" + std::to_string(m));
        auto it = d.atoms().begin();
        const auto& [a1, c1] = *it;
        ++it;
        const auto& [a2, c2] = *it;
        if (c1 + c2 != RatFunc(0))
            throw std::logic_error("series_compare: unrecognized atom coefficients at m=" + std::to_string(m));
        AtomEq eq(a1, a2);
        if (std::find(conds.begin(), conds.end(), eq) == conds.end()) conds.push_back(eq);
    }
    auto collect_tail = [&conds](const TailInfo& t) {
        for (const AtomEq& eq : t.conditions)
            if (std::find(conds.begin(), conds.end(), eq) == conds.end()) conds.push_back(eq);
    };
    bool tails_known = z1.tail.kind != TailInfo::Kind::Unknown && z2.tail.kind != TailInfo::Kind::Unknown;
    if (conds.empty() && !tails_known)
        throw IncomparableTails("all compared coefficients agree but both tails are unknown");
    collect_tail(z1.tail);
    collect_tail(z2.tail);
    if (conds.empty()) {
        res.kind = SeriesComparison::Kind::Equal;
        return res;
    }
    res.kind = SeriesComparison::Kind::ConditionallyEqual;
    res.conditions = std::move(conds);
    return res;
}

}  // namespace eqzeta

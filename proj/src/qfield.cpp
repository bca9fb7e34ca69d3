#include "macq/qfield.hpp"

#include "macq/rng.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "densepoly.hpp"

namespace macq {

namespace {

bool term_before(const LaurentQT::Term& x, const LaurentQT::Term& y) {
    int dx = x.qe + x.te, dy = y.qe + y.te;
    if (dx != dy) return dx > dy;
    return x.qe > y.qe;
}

bool same_exp(const LaurentQT::Term& x, const LaurentQT::Term& y) {
    return x.qe == y.qe && x.te == y.te;
}

std::string mono_str(int qe, int te) {
    std::string s;
    auto put = [&](const char* v, int e) {
        if (e == 0) return;
        if (!s.empty()) s += "*";
        s += v;
        if (e != 1) s += "^" + std::to_string(e);
    };
    put("q", qe);
    put("t", te);
    return s;
}

detail::BPoly to_dense(const LaurentQT& p) {
    int mq = p.min_q(), mt = p.min_t();
    detail::BPoly r(p.max_t() - mt + 1);
    for (const auto& tm : p.terms()) {
        auto& row = r[tm.te - mt];
        size_t i = tm.qe - mq;
        if (row.size() <= i) row.resize(i + 1);
        row[i] = tm.c;
    }
    for (auto& row : r) detail::trim(row);
    return r;
}

LaurentQT from_dense(const detail::BPoly& d) {
    std::vector<LaurentQT::Term> ts;
    for (size_t j = 0; j < d.size(); ++j)
        for (size_t i = 0; i < d[j].size(); ++i)
            if (d[j][i] != 0) ts.push_back({static_cast<int>(i), static_cast<int>(j), d[j][i]});
    return LaurentQT::from_terms(std::move(ts));
}

// Strip the monomial content so the result has minimal exponents zero.
LaurentQT strip(const LaurentQT& p, int& dq, int& dt) {
    if (p.is_zero()) {
        dq = dt = 0;
        return p;
    }
    dq = p.min_q();
    dt = p.min_t();
    return p.shifted(-dq, -dt);
}

}  // namespace

UnitMono UnitMono::pow(int e) const {
    return {(sign < 0 && (e % 2 != 0)) ? -1 : 1, a * e, b * e};
}

std::string UnitMono::str() const {
    std::string m = mono_str(a, b);
    if (m.empty()) m = "1";
    return sign < 0 ? "-" + m : m;
}

LaurentQT::LaurentQT(long c) {
    if (c != 0) terms_.push_back({0, 0, BigInt(c)});
}

LaurentQT::LaurentQT(const BigInt& c) {
    if (c != 0) terms_.push_back({0, 0, c});
}

LaurentQT::LaurentQT(const UnitMono& m) {
    terms_.push_back({m.a, m.b, BigInt(m.sign)});
}

LaurentQT LaurentQT::monomial(const BigInt& c, int qe, int te) {
    LaurentQT r;
    if (c != 0) r.terms_.push_back({qe, te, c});
    return r;
}

LaurentQT LaurentQT::from_terms(std::vector<Term> terms) {
    LaurentQT r;
    r.terms_ = std::move(terms);
    r.canonicalize();
    return r;
}

void LaurentQT::canonicalize() {
    std::sort(terms_.begin(), terms_.end(), term_before);
    size_t w = 0;
    for (size_t i = 0; i < terms_.size();) {
        size_t j = i + 1;
        BigInt c = std::move(terms_[i].c);
        while (j < terms_.size() && same_exp(terms_[i], terms_[j])) c += terms_[j++].c;
        if (c != 0) {
            terms_[w].qe = terms_[i].qe;
            terms_[w].te = terms_[i].te;
            terms_[w].c = std::move(c);
            ++w;
        }
        i = j;
    }
    terms_.resize(w);
}

bool LaurentQT::is_one() const {
    return terms_.size() == 1 && terms_[0].qe == 0 && terms_[0].te == 0 && terms_[0].c == 1;
}

bool LaurentQT::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].qe == 0 && terms_[0].te == 0);
}

bool LaurentQT::t_free() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& x) { return x.te == 0; });
}

int LaurentQT::min_q() const {
    int m = std::numeric_limits<int>::max();
    for (const auto& x : terms_) m = std::min(m, x.qe);
    return m;
}

int LaurentQT::min_t() const {
    int m = std::numeric_limits<int>::max();
    for (const auto& x : terms_) m = std::min(m, x.te);
    return m;
}

int LaurentQT::max_q() const {
    int m = std::numeric_limits<int>::min();
    for (const auto& x : terms_) m = std::max(m, x.qe);
    return m;
}

int LaurentQT::max_t() const {
    int m = std::numeric_limits<int>::min();
    for (const auto& x : terms_) m = std::max(m, x.te);
    return m;
}

LaurentQT LaurentQT::shifted(int dq, int dt) const {
    LaurentQT r = *this;
    for (auto& x : r.terms_) {
        x.qe += dq;
        x.te += dt;
    }
    return r;
}

LaurentQT LaurentQT::operator-() const {
    LaurentQT r = *this;
    for (auto& x : r.terms_) x.c = -x.c;
    return r;
}

LaurentQT& LaurentQT::operator+=(const LaurentQT& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return *this = o;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && term_before(terms_[i], o.terms_[j]))) {
            out.push_back(std::move(terms_[i++]));
        } else if (i == terms_.size() || term_before(o.terms_[j], terms_[i])) {
            out.push_back(o.terms_[j++]);
        } else {
            BigInt c = terms_[i].c + o.terms_[j].c;
            if (c != 0) out.push_back({terms_[i].qe, terms_[i].te, std::move(c)});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

LaurentQT& LaurentQT::operator-=(const LaurentQT& o) { return *this += -o; }

LaurentQT operator*(const LaurentQT& x, const LaurentQT& y) {
    if (x.is_zero() || y.is_zero()) return {};
    if (y.is_monomial()) {
        LaurentQT r = x;
        const auto& m = y.terms_[0];
        for (auto& tm : r.terms_) {
            tm.qe += m.qe;
            tm.te += m.te;
            if (m.c != 1) tm.c *= m.c;
        }
        return r;
    }
    if (x.is_monomial()) return y * x;
    std::vector<LaurentQT::Term> ts;
    ts.reserve(x.terms_.size() * y.terms_.size());
    for (const auto& a : x.terms_)
        for (const auto& b : y.terms_) ts.push_back({a.qe + b.qe, a.te + b.te, a.c * b.c});
    return LaurentQT::from_terms(std::move(ts));
}

LaurentQT& LaurentQT::operator*=(const LaurentQT& o) { return *this = *this * o; }

LaurentQT& LaurentQT::operator*=(const UnitMono& m) {
    for (auto& x : terms_) {
        x.qe += m.a;
        x.te += m.b;
        if (m.sign < 0) x.c = -x.c;
    }
    return *this;
}

bool operator==(const LaurentQT& x, const LaurentQT& y) {
    if (x.terms_.size() != y.terms_.size()) return false;
    for (size_t i = 0; i < x.terms_.size(); ++i) {
        if (!same_exp(x.terms_[i], y.terms_[i]) || x.terms_[i].c != y.terms_[i].c) return false;
    }
    return true;
}

BigInt LaurentQT::content() const {
    BigInt g = 0;
    for (const auto& x : terms_) {
        g = gcd(g, x.c);
        if (g == 1) break;
    }
    return g;
}

LaurentQT LaurentQT::div_integer(const BigInt& d) const {
    LaurentQT r = *this;
    for (auto& x : r.terms_) mpz_divexact(x.c.get_mpz_t(), x.c.get_mpz_t(), d.get_mpz_t());
    return r;
}

LaurentQT LaurentQT::subst(const UnitMono& qi, const UnitMono& ti) const {
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& x : terms_) {
        int s = 1;
        if (qi.sign < 0 && (x.qe % 2 != 0)) s = -s;
        if (ti.sign < 0 && (x.te % 2 != 0)) s = -s;
        ts.push_back({x.qe * qi.a + x.te * ti.a, x.qe * qi.b + x.te * ti.b, s < 0 ? BigInt(-x.c) : x.c});
    }
    return from_terms(std::move(ts));
}

std::string LaurentQT::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& x : terms_) {
        BigInt c = x.c;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        std::string m = mono_str(x.qe, x.te);
        if (m.empty()) {
            os << c.get_str();
        } else if (c == 1) {
            os << m;
        } else {
            os << c.get_str() << "*" << m;
        }
        first = false;
    }
    return os.str();
}

LaurentQT poly_gcd(const LaurentQT& a, const LaurentQT& b) {
    int aq, at, bq, bt;
    LaurentQT a0 = strip(a, aq, at);
    LaurentQT b0 = strip(b, bq, bt);
    if (a0.is_zero()) return b0;
    if (b0.is_zero()) return a0;
    if (a0.is_constant() || b0.is_constant()) return LaurentQT(gcd(a0.content(), b0.content()));
    return from_dense(detail::b_gcd(to_dense(a0), to_dense(b0)));
}

LaurentQT poly_divexact(const LaurentQT& a, const LaurentQT& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return a;
    int aq, at, bq, bt;
    LaurentQT a0 = strip(a, aq, at);
    LaurentQT b0 = strip(b, bq, bt);
    if (b0.is_constant()) {
        const BigInt& d = b0.lead().c;
        for (const auto& x : a0.terms())
            if (!mpz_divisible_p(x.c.get_mpz_t(), d.get_mpz_t()))
                throw std::domain_error("inexact polynomial division");
        return a0.div_integer(d).shifted(aq - bq, at - bt);
    }
    detail::BPoly quot;
    if (!detail::b_divexact(to_dense(a0), to_dense(b0), quot))
        throw std::domain_error("inexact polynomial division");
    return from_dense(quot).shifted(aq - bq, at - bt);
}

CoeffRat::CoeffRat(const LaurentQT& num, const LaurentQT& den) {
    *this = reduce(num, den);
}

CoeffRat CoeffRat::reduce(LaurentQT num, LaurentQT den) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    if (num.is_zero()) return CoeffRat();
    int dq, dt;
    den = strip(den, dq, dt);
    num = num.shifted(-dq, -dt);
    if (den.is_constant()) {
        BigInt d = den.lead().c;
        BigInt g = gcd(num.content(), d);
        if (d < 0) g = -g;
        return CoeffRat(num.div_integer(g), LaurentQT(BigInt(d / g)), Raw{});
    }
    if (num.is_monomial()) {
        BigInt g = gcd(num.lead().c, den.content());
        if (g != 1) {
            num = num.div_integer(g);
            den = den.div_integer(g);
        }
    } else {
        LaurentQT g = poly_gcd(num, den);
        if (!g.is_one()) {
            num = poly_divexact(num, g);
            den = poly_divexact(den, g);
        }
    }
    if (den.lead().c < 0) {
        num = -num;
        den = -den;
    }
    return CoeffRat(std::move(num), std::move(den), Raw{});
}

CoeffRat CoeffRat::operator-() const { return CoeffRat(-num_, den_, Raw{}); }

CoeffRat CoeffRat::inv() const {
    if (num_.is_zero()) throw std::domain_error("inverse of zero");
    return reduce(den_, num_);
}

CoeffRat& CoeffRat::operator+=(const CoeffRat& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_.is_one() && o.den_.is_one()) {
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_) return *this = reduce(num_ + o.num_, den_);
    if (o.den_.is_one()) return *this = CoeffRat(num_ + o.num_ * den_, den_, Raw{});
    if (den_.is_one()) return *this = CoeffRat(num_ * o.den_ + o.num_, o.den_, Raw{});
    LaurentQT g = poly_gcd(den_, o.den_);
    if (g.is_one()) {
        LaurentQT n = num_ * o.den_ + o.num_ * den_;
        if (n.is_zero()) return *this = CoeffRat();
        LaurentQT d = den_ * o.den_;
        if (d.lead().c < 0) {
            n = -n;
            d = -d;
        }
        return *this = CoeffRat(std::move(n), std::move(d), Raw{});
    }
    LaurentQT b1 = poly_divexact(den_, g);
    LaurentQT d1 = poly_divexact(o.den_, g);
    LaurentQT n = num_ * d1 + o.num_ * b1;
    return *this = reduce(std::move(n), b1 * o.den_);
}

CoeffRat& CoeffRat::operator-=(const CoeffRat& o) { return *this += -o; }

CoeffRat& CoeffRat::operator*=(const CoeffRat& o) {
    if (is_zero() || o.is_zero()) return *this = CoeffRat();
    if (den_.is_one() && o.den_.is_one()) {
        num_ *= o.num_;
        return *this;
    }
    LaurentQT g1 = poly_gcd(num_, o.den_);
    LaurentQT g2 = poly_gcd(o.num_, den_);
    LaurentQT a = g1.is_one() ? num_ : poly_divexact(num_, g1);
    LaurentQT d = g1.is_one() ? o.den_ : poly_divexact(o.den_, g1);
    LaurentQT c = g2.is_one() ? o.num_ : poly_divexact(o.num_, g2);
    LaurentQT b = g2.is_one() ? den_ : poly_divexact(den_, g2);
    return *this = reduce(a * c, b * d);
}

CoeffRat& CoeffRat::operator/=(const CoeffRat& o) { return *this *= o.inv(); }

CoeffRat& CoeffRat::operator*=(const UnitMono& m) {
    num_ *= m;
    return *this;
}

CoeffRat CoeffRat::pow(int e) const {
    if (e < 0) return inv().pow(-e);
    CoeffRat r(1), b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

CoeffRat CoeffRat::subst(const UnitMono& qi, const UnitMono& ti) const {
    LaurentQT d = den_.subst(qi, ti);
    if (d.is_zero()) throw std::domain_error("substitution sends the denominator to zero");
    return reduce(num_.subst(qi, ti), d);
}

std::string CoeffRat::str() const {
    if (den_.is_one()) return num_.str();
    auto wrap = [](const LaurentQT& p) {
        return p.terms().size() > 1 ? "(" + p.str() + ")" : p.str();
    };
    return wrap(num_) + "/" + wrap(den_);
}

CoeffRat qnum(int a) {
    if (a == 0) return CoeffRat();
    int s = a < 0 ? -1 : 1;
    int m = a * s;
    std::vector<LaurentQT::Term> ts;
    for (int e = m - 1; e >= 1 - m; e -= 2) ts.push_back({e, 0, BigInt(s)});
    return CoeffRat(LaurentQT::from_terms(std::move(ts)));
}

CoeffRat qfall(int a, int m) {
    if (m < 0) throw std::domain_error("qfall with negative length");
    CoeffRat r(1);
    for (int i = 0; i < m; ++i) {
        if (a - i == 0) return CoeffRat();
        r *= qnum(a - i);
    }
    return r;
}

CoeffRat qfact(int a) {
    if (a < 0) throw std::domain_error("qfact of a negative integer");
    return qfall(a, a);
}

CoeffRat poch_ratio(int a, int d, int tpow) {
    if (d < 0) throw std::domain_error("poch_ratio with negative length");
    LaurentQT r(1);
    for (int m = a; m < a + d; ++m) r *= LaurentQT(1) - LaurentQT::monomial(1, m, tpow);
    return CoeffRat(r);
}

CoeffRat subst(const CoeffRat& x, const UnitMono& q_image, const UnitMono& t_image) {
    return x.subst(q_image, t_image);
}

LaurentQT random_laurent(Rng& rng, int terms, int span) {
    std::vector<LaurentQT::Term> ts;
    for (int i = 0; i < terms; ++i)
        ts.push_back({rng.uniform(-span, span), rng.uniform(0, span), BigInt(rng.uniform(-4, 4))});
    return LaurentQT::from_terms(std::move(ts));
}

CoeffRat random_rat(Rng& rng) {
    LaurentQT den;
    do {
        den = random_laurent(rng, rng.uniform(1, 3), 2);
    } while (den.is_zero());
    return CoeffRat(random_laurent(rng, rng.uniform(0, 4), 3), den);
}

}  // namespace macq

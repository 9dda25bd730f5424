#pragma once

#include "golden/common.hpp"

#include <compare>
#include <optional>
#include <string>
#include <utility>

namespace golden {

/// Element a + b*phi of the golden ring Z[phi], phi^2 = phi + 1.
/// Coefficients are arbitrary-precision integers.
class GoldenInt {
public:
    GoldenInt() : a_(0), b_(0) {}
    GoldenInt(Int a, Int b) : a_(std::move(a)), b_(std::move(b)) {}
    explicit GoldenInt(long a) : a_(a), b_(0) {}

    static GoldenInt zero() { return GoldenInt(0, 0); }
    static GoldenInt one() { return GoldenInt(1, 0); }
    static GoldenInt phi() { return GoldenInt(0, 1); }

    const Int &a() const { return a_; }
    const Int &b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }

    GoldenInt operator+(const GoldenInt &o) const { return {a_ + o.a_, b_ + o.b_}; }
    GoldenInt operator-(const GoldenInt &o) const { return {a_ - o.a_, b_ - o.b_}; }
    GoldenInt operator-() const { return {-a_, -b_}; }

    GoldenInt operator*(const GoldenInt &o) const {
        // (a1 + b1 phi)(a2 + b2 phi), reduced by phi^2 = phi + 1
        return {a_ * o.a_ + b_ * o.b_, a_ * o.b_ + b_ * o.a_ + b_ * o.b_};
    }

    GoldenInt &operator+=(const GoldenInt &o) { return *this = *this + o; }
    GoldenInt &operator-=(const GoldenInt &o) { return *this = *this - o; }
    GoldenInt &operator*=(const GoldenInt &o) { return *this = *this * o; }

    bool operator==(const GoldenInt &o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const GoldenInt &o) const { return !(*this == o); }
    bool operator<(const GoldenInt &o) const {
        if (a_ != o.a_) return a_ < o.a_;
        return b_ < o.b_;
    }

    /// Galois conjugation a + b*phi -> a + b(1 - phi).
    GoldenInt conj() const { return {a_ + b_, -b_}; }

    Int trace() const { return 2 * a_ + b_; }
    Int norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }

    bool is_unit() const {
        Int n = norm();
        return n == 1 || n == -1;
    }

    /// Inverse of a unit; throws for non-units.
    GoldenInt inverse() const {
        Int n = norm();
        if (n == 1) return conj();
        if (n == -1) return -conj();
        throw std::domain_error("GoldenInt::inverse: not a unit");
    }

    /// Exact quotient *this / d if it exists in Z[phi].
    std::optional<GoldenInt> divide_exact(const GoldenInt &d) const {
        if (d.is_zero()) throw std::domain_error("GoldenInt::divide_exact: division by zero");
        GoldenInt num = *this * d.conj();
        Int n = d.norm();
        if (num.a_ % n != 0 || num.b_ % n != 0) return std::nullopt;
        return GoldenInt(num.a_ / n, num.b_ / n);
    }

    bool divisible_by_int(const Int &m) const { return a_ % m == 0 && b_ % m == 0; }

    /// Dirichlet height (Tits projection): a + b*phi -> a.
    Int dirichlet_height() const { return a_; }

    /// Canonical rendering "a+b*phi" with normalized signs, e.g. "2-3*phi".
    std::string str() const {
        std::string s = a_.str();
        s += (b_ >= 0) ? "+" : "-";
        s += Int(boost::multiprecision::abs(b_)).str();
        s += "*phi";
        return s;
    }

private:
    Int a_, b_;
};

inline GoldenInt operator*(const Int &k, const GoldenInt &x) { return GoldenInt(k * x.a(), k * x.b()); }

/// Element a + b*phi of K = Q(sqrt 5) with exact rational coefficients.
class FieldElem {
public:
    FieldElem() : a_(0), b_(0) {}
    FieldElem(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}
    explicit FieldElem(long a) : a_(a), b_(0) {}
    FieldElem(const GoldenInt &x) : a_(x.a()), b_(x.b()) {}

    static FieldElem zero() { return FieldElem(Rat(0), Rat(0)); }
    static FieldElem one() { return FieldElem(Rat(1), Rat(0)); }
    static FieldElem phi() { return FieldElem(Rat(0), Rat(1)); }
    static FieldElem from_rat(Rat r) { return FieldElem(std::move(r), Rat(0)); }

    const Rat &a() const { return a_; }
    const Rat &b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    FieldElem operator+(const FieldElem &o) const { return {a_ + o.a_, b_ + o.b_}; }
    FieldElem operator-(const FieldElem &o) const { return {a_ - o.a_, b_ - o.b_}; }
    FieldElem operator-() const { return {-a_, -b_}; }

    FieldElem operator*(const FieldElem &o) const {
        return {a_ * o.a_ + b_ * o.b_, a_ * o.b_ + b_ * o.a_ + b_ * o.b_};
    }

    FieldElem &operator+=(const FieldElem &o) { return *this = *this + o; }
    FieldElem &operator-=(const FieldElem &o) { return *this = *this - o; }
    FieldElem &operator*=(const FieldElem &o) { return *this = *this * o; }

    bool operator==(const FieldElem &o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const FieldElem &o) const { return !(*this == o); }
    bool operator<(const FieldElem &o) const {
        if (a_ != o.a_) return a_ < o.a_;
        return b_ < o.b_;
    }

    FieldElem conj() const { return {a_ + b_, -b_}; }

    Rat trace() const { return 2 * a_ + b_; }
    Rat norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }

    /// x^{-1} = conj(x) / N(x); division by zero is reported, not fatal.
    FieldElem inverse() const {
        if (is_zero()) throw std::domain_error("FieldElem::inverse: division by zero");
        Rat n = norm();
        FieldElem c = conj();
        return {c.a_ / n, c.b_ / n};
    }

    FieldElem operator/(const FieldElem &o) const { return *this * o.inverse(); }

    /// Exact sign of a + b*phi under the real embedding phi = (1+sqrt5)/2.
    /// Writes the value as (t + s*sqrt5)/2 with t = 2a+b, s = b; when the
    /// parts disagree in sign the comparison t^2 vs 5s^2 decides (they can
    /// never tie for rational t, s with s nonzero).
    int sign_real() const {
        Rat t = 2 * a_ + b_;
        const Rat &s = b_;
        int st = (t > 0) ? 1 : (t < 0 ? -1 : 0);
        int ss = (s > 0) ? 1 : (s < 0 ? -1 : 0);
        if (ss == 0) return st;
        if (st == 0 || st == ss) return ss;
        return (t * t > 5 * s * s) ? st : ss;
    }

    /// True iff both coefficients are rational integers, i.e. the element
    /// lies in Z[phi].
    bool is_golden_integer() const { return is_integer(a_) && is_integer(b_); }

    GoldenInt to_golden_int() const {
        if (!is_golden_integer())
            throw std::domain_error("FieldElem::to_golden_int: not in Z[phi]");
        return GoldenInt(numerator(a_), numerator(b_));
    }

    /// Canonical rendering "p/q+r/s*phi" with reduced fractions.
    std::string str() const {
        std::string s = to_string(a_);
        if (b_ >= 0) {
            s += "+" + to_string(b_);
        } else {
            s += "-" + to_string(Rat(-b_));
        }
        s += "*phi";
        return s;
    }

private:
    Rat a_, b_;
};

inline FieldElem operator*(const Rat &k, const FieldElem &x) { return FieldElem(k * x.a(), k * x.b()); }

/// 1/sqrt5 = (-1 + 2 phi)/5.
inline FieldElem inv_sqrt5() { return FieldElem(Rat(-1, 5), Rat(2, 5)); }

/// sqrt5 = 2 phi - 1.
inline GoldenInt sqrt5() { return GoldenInt(-1, 2); }

/// Residue field Z[phi]/2Z[phi], a field with four elements; the class of
/// phi generates the cyclic group of order 3.
class ResidueF4 {
public:
    ResidueF4() : a_(0), b_(0) {}
    ResidueF4(unsigned a, unsigned b) : a_(a & 1u), b_(b & 1u) {}

    unsigned a() const { return a_; }
    unsigned b() const { return b_; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    ResidueF4 operator+(const ResidueF4 &o) const { return {a_ ^ o.a_, b_ ^ o.b_}; }
    ResidueF4 operator-(const ResidueF4 &o) const { return *this + o; }
    ResidueF4 operator*(const ResidueF4 &o) const {
        return {(a_ & o.a_) ^ (b_ & o.b_), (a_ & o.b_) ^ (b_ & o.a_) ^ (b_ & o.b_)};
    }

    bool operator==(const ResidueF4 &o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const ResidueF4 &o) const { return !(*this == o); }
    bool operator<(const ResidueF4 &o) const { return (a_ * 2 + b_) < (o.a_ * 2 + o.b_); }

    /// The four elements in a fixed scan order: 0, 1, phi, 1+phi.
    static ResidueF4 by_index(unsigned i) {
        static const unsigned tab[4][2] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
        return {tab[i & 3][0], tab[i & 3][1]};
    }
    unsigned index() const {
        if (a_ == 0 && b_ == 0) return 0;
        if (a_ == 1 && b_ == 0) return 1;
        if (a_ == 0 && b_ == 1) return 2;
        return 3;
    }

    std::string str() const {
        static const char *names[4] = {"0", "1", "phi", "1+phi"};
        return names[index()];
    }

private:
    unsigned a_, b_;
};

/// Residue field Z[phi]/(sqrt5), five elements; phi maps to 3.
class ResidueF5 {
public:
    ResidueF5() : r_(0) {}
    explicit ResidueF5(unsigned r) : r_(r % 5u) {}

    unsigned value() const { return r_; }
    bool is_zero() const { return r_ == 0; }

    ResidueF5 operator+(const ResidueF5 &o) const { return ResidueF5(r_ + o.r_); }
    ResidueF5 operator-(const ResidueF5 &o) const { return ResidueF5(r_ + 5u - o.r_); }
    ResidueF5 operator*(const ResidueF5 &o) const { return ResidueF5(r_ * o.r_); }

    bool operator==(const ResidueF5 &o) const { return r_ == o.r_; }
    bool operator!=(const ResidueF5 &o) const { return !(*this == o); }
    bool operator<(const ResidueF5 &o) const { return r_ < o.r_; }

    std::string str() const { return std::string(1, char('0' + r_)); }

private:
    unsigned r_;
};

inline ResidueF4 reduce_mod2(const GoldenInt &x) {
    return ResidueF4(static_cast<unsigned>(mod_floor(x.a(), 2)),
                     static_cast<unsigned>(mod_floor(x.b(), 2)));
}

inline ResidueF5 reduce_mod_sqrt5(const GoldenInt &x) {
    // phi |-> 3 mod (sqrt5) = (2 phi - 1)
    return ResidueF5(static_cast<unsigned>(mod_floor(x.a() + 3 * x.b(), 5)));
}

/// kappa*x + (kappa*x)^* with kappa = (3 - phi)/5. Equals the Dirichlet
/// height of x as a rational element of K; kept as the independent route
/// against the coordinate projection.
inline FieldElem dirichlet_height_kappa_form(const GoldenInt &x) {
    FieldElem kappa(Rat(3, 5), Rat(-1, 5));
    FieldElem kx = kappa * FieldElem(x);
    return kx + kx.conj();
}

/// Membership in the lattice Lambda = Z*phi + Z*(1/sqrt5) of K-values whose
/// Z[phi]-multiples all have integral rational trace: alpha is in Lambda iff
/// Tr(alpha) and Tr(phi^2 alpha) are both rational integers.
inline bool lambda_member(const FieldElem &alpha) {
    Rat m = alpha.trace();                       // 2a + b
    Rat n = 3 * alpha.a() + 4 * alpha.b();       // Tr(phi^2 alpha)
    return is_integer(m) && is_integer(n);
}

} // namespace golden

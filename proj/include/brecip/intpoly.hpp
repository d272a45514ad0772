// Dense integer polynomials with arbitrary-precision coefficients: ring
// arithmetic, content/primitive part, exact resultants and discriminants via
// the subresultant polynomial remainder sequence, and gcd over Z.
//
// Representation: coeffs[i] is the coefficient of x^i; the vector is empty for
// the zero polynomial and otherwise ends with a nonzero coefficient.
#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "brecip/numutil.hpp"

namespace brecip {

class IntPoly {
public:
    IntPoly() = default;

    explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { normalize(); }

    IntPoly(std::initializer_list<long> coeffs) {
        c_.reserve(coeffs.size());
        for (long v : coeffs) c_.emplace_back(v);
        normalize();
    }

    static IntPoly zero() { return IntPoly(); }

    static IntPoly constant(mpz_class v) {
        IntPoly p;
        if (sgn(v) != 0) p.c_.push_back(std::move(v));
        return p;
    }

    /// x^k
    static IntPoly monomial(int k, mpz_class coeff = 1) {
        IntPoly p;
        if (sgn(coeff) != 0) {
            p.c_.assign(static_cast<size_t>(k) + 1, mpz_class(0));
            p.c_[static_cast<size_t>(k)] = std::move(coeff);
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const mpz_class& lc() const {
        static const mpz_class z0(0);
        return c_.empty() ? z0 : c_.back();
    }

    const mpz_class& coeff(int i) const {
        static const mpz_class z0(0);
        if (i < 0 || i >= static_cast<int>(c_.size())) return z0;
        return c_[static_cast<size_t>(i)];
    }

    const std::vector<mpz_class>& coeffs() const { return c_; }

    void set_coeff(int i, const mpz_class& v) {
        if (i >= static_cast<int>(c_.size())) {
            if (sgn(v) == 0) return;
            c_.resize(static_cast<size_t>(i) + 1, mpz_class(0));
        }
        c_[static_cast<size_t>(i)] = v;
        normalize();
    }

    mpz_class eval(const mpz_class& x) const {
        mpz_class acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc *= x;
            acc += *it;
        }
        return acc;
    }

    IntPoly derivative() const {
        IntPoly d;
        if (c_.size() <= 1) return d;
        d.c_.resize(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) d.c_[i - 1] = c_[i] * static_cast<unsigned long>(i);
        d.normalize();
        return d;
    }

    /// max |coefficient|
    mpz_class height() const {
        mpz_class h(0);
        for (const auto& v : c_) {
            mpz_class a = abs(v);
            if (a > h) h = a;
        }
        return h;
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        IntPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
        r.normalize();
        return r;
    }

    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        IntPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] -= b.c_[i];
        r.normalize();
        return r;
    }

    IntPoly operator-() const {
        IntPoly r(*this);
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        IntPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, mpz_class(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (sgn(a.c_[i]) == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
            }
        }
        r.normalize();
        return r;
    }

    friend IntPoly operator*(const IntPoly& a, const mpz_class& s) {
        IntPoly r;
        if (sgn(s) == 0 || a.is_zero()) return r;
        r.c_.resize(a.c_.size());
        for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i] * s;
        return r;
    }

    friend IntPoly operator*(const mpz_class& s, const IntPoly& a) { return a * s; }

    IntPoly& operator+=(const IntPoly& b) { *this = *this + b; return *this; }
    IntPoly& operator-=(const IntPoly& b) { *this = *this - b; return *this; }
    IntPoly& operator*=(const IntPoly& b) { *this = *this * b; return *this; }
    IntPoly& operator*=(const mpz_class& s) { *this = *this * s; return *this; }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    /// Total order: degree first, then coefficients from x^0 upward.
    friend std::strong_ordering operator<=>(const IntPoly& a, const IntPoly& b) {
        if (a.degree() != b.degree()) return a.degree() <=> b.degree();
        for (size_t i = 0; i < a.c_.size(); ++i) {
            int c = cmp(a.c_[i], b.c_[i]);
            if (c != 0) return c <=> 0;
        }
        return std::strong_ordering::equal;
    }

    /// Divide by a nonzero scalar that must divide every coefficient.
    void divexact(const mpz_class& s) {
        assert(sgn(s) != 0);
        for (auto& v : c_) {
            assert(mpz_divisible_p(v.get_mpz_t(), s.get_mpz_t()));
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), s.get_mpz_t());
        }
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const mpz_class& v = coeff(i);
            if (sgn(v) == 0) continue;
            if (!out.empty()) out += sgn(v) > 0 ? " + " : " - ";
            else if (sgn(v) < 0) out += "-";
            mpz_class a = abs(v);
            bool unit = a == 1 && i > 0;
            if (!unit) out += a.get_str();
            if (i > 0) {
                out += "x";
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void normalize() {
        while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    }

    std::vector<mpz_class> c_;
};

/// gcd of all coefficients, >= 0; 0 for the zero polynomial.
inline mpz_class content(const IntPoly& p) {
    mpz_class g(0);
    for (const auto& v : p.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

/// p / content(p), with positive leading coefficient. Zero maps to zero.
inline IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    mpz_class c = content(p);
    if (sgn(p.lc()) < 0) c = -c;
    IntPoly r(p);
    r.divexact(c);
    return r;
}

/// Pseudo-remainder: returns R with lc(B)^(deg A - deg B + 1) * A = Q*B + R.
inline IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    assert(!b.is_zero());
    IntPoly r(a);
    const int db = b.degree();
    int e = a.degree() - db + 1;
    while (!r.is_zero() && r.degree() >= db) {
        int d = r.degree() - db;
        // r <- lc(b)*r - lc(r)*x^d*b
        IntPoly shifted = IntPoly::monomial(d, r.lc()) * b;
        r = r * b.lc() - shifted;
        --e;
    }
    if (e > 0) {
        mpz_class scale;
        mpz_pow_ui(scale.get_mpz_t(), b.lc().get_mpz_t(), static_cast<unsigned long>(e));
        r = r * scale;
    }
    return r;
}

/// Exact division: returns true and sets q = a / b when b divides a in Z[x].
inline bool try_divexact(const IntPoly& a, const IntPoly& b, IntPoly& q) {
    assert(!b.is_zero());
    if (a.is_zero()) { q = IntPoly(); return true; }
    if (a.degree() < b.degree()) return false;
    std::vector<mpz_class> qc(static_cast<size_t>(a.degree() - b.degree()) + 1, mpz_class(0));
    IntPoly r(a);
    while (!r.is_zero() && r.degree() >= b.degree()) {
        if (!mpz_divisible_p(r.lc().get_mpz_t(), b.lc().get_mpz_t())) return false;
        mpz_class t;
        mpz_divexact(t.get_mpz_t(), r.lc().get_mpz_t(), b.lc().get_mpz_t());
        int d = r.degree() - b.degree();
        qc[static_cast<size_t>(d)] = t;
        r = r - IntPoly::monomial(d, t) * b;
    }
    if (!r.is_zero()) return false;
    q = IntPoly(std::move(qc));
    return true;
}

/// Subresultant PRS gcd over Z; result is primitive with positive leading
/// coefficient times gcd of the contents.
inline IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return primitive_part(b) * content(b);
    if (b.is_zero()) return primitive_part(a) * content(a);
    mpz_class cont_gcd;
    mpz_gcd(cont_gcd.get_mpz_t(), content(a).get_mpz_t(), content(b).get_mpz_t());
    IntPoly A = primitive_part(a);
    IntPoly B = primitive_part(b);
    if (A.degree() < B.degree()) std::swap(A, B);
    mpz_class g(1), h(1);
    while (true) {
        int delta = A.degree() - B.degree();
        IntPoly R = pseudo_rem(A, B);
        if (R.is_zero()) break;
        if (R.degree() == 0) {
            B = IntPoly::constant(mpz_class(1));
            break;
        }
        A = B;
        mpz_class hd;
        mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
        mpz_class div = g * hd;
        R.divexact(div);
        B = R;
        g = A.lc();
        if (delta > 0) {
            // h <- g^delta / h^(delta-1)
            mpz_class gn;
            mpz_pow_ui(gn.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
            mpz_class hdm1;
            mpz_pow_ui(hdm1.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), gn.get_mpz_t(), hdm1.get_mpz_t());
        }
    }
    return primitive_part(B) * cont_gcd;
}

/// Res(p, q) = lc(p)^deg(q) * lc(q)^deg(p) * prod(alpha_i - beta_j), computed
/// by the subresultant PRS: no rational intermediates, subresultant-bounded
/// growth. Res of two constants is 1 (empty product).
inline mpz_class resultant(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) throw zero_polynomial_error();
    IntPoly A = p, B = q;
    int s = 1;
    if (A.degree() < B.degree()) {
        std::swap(A, B);
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
    }
    if (B.degree() == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), B.lc().get_mpz_t(), static_cast<unsigned long>(A.degree()));
        return s < 0 ? mpz_class(-r) : r;
    }
    mpz_class ca = content(A), cb = content(B);
    A.divexact(ca);
    B.divexact(cb);
    // t accumulates the content contribution: Res(ca*A, cb*B) = ca^degB cb^degA Res(A,B)
    mpz_class t, tb;
    mpz_pow_ui(t.get_mpz_t(), ca.get_mpz_t(), static_cast<unsigned long>(B.degree()));
    mpz_pow_ui(tb.get_mpz_t(), cb.get_mpz_t(), static_cast<unsigned long>(A.degree()));
    t *= tb;
    if (s < 0) t = -t;
    mpz_class g(1), h(1);
    while (true) {
        int da = A.degree(), db = B.degree();
        int delta = da - db;
        if ((da & 1) && (db & 1)) t = -t;
        IntPoly R = pseudo_rem(A, B);
        if (R.is_zero()) return mpz_class(0);  // common factor of positive degree
        A = B;
        mpz_class hd;
        mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
        mpz_class div = g * hd;
        R.divexact(div);
        B = R;
        g = A.lc();
        if (delta > 0) {
            mpz_class gn;
            mpz_pow_ui(gn.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
            mpz_class hdm1;
            mpz_pow_ui(hdm1.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), gn.get_mpz_t(), hdm1.get_mpz_t());
        }
        if (B.degree() == 0) {
            // h' = lc(B)^deg(A) / h^(deg(A)-1)
            mpz_class num;
            mpz_pow_ui(num.get_mpz_t(), B.lc().get_mpz_t(), static_cast<unsigned long>(A.degree()));
            mpz_class den;
            mpz_pow_ui(den.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(A.degree() - 1));
            mpz_class out;
            mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            return t * out;
        }
    }
}

/// disc p = (-1)^(d(d-1)/2) * Res(p, p') / lc(p); degree-1 polynomials have
/// discriminant 1 by convention (empty product), degree 0 is an error.
inline mpz_class discriminant(const IntPoly& p) {
    int d = p.degree();
    if (d < 1) throw degree_error("discriminant requires degree >= 1");
    if (d == 1) return 1;
    mpz_class r = resultant(p, p.derivative());
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), r.get_mpz_t(), p.lc().get_mpz_t());
    if ((static_cast<long>(d) * (d - 1) / 2) % 2 != 0) out = -out;
    return out;
}

}  // namespace brecip

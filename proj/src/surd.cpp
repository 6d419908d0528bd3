#include "cy3check/surd.hpp"

#include <cmath>
#include <stdexcept>

namespace cy3 {

namespace {

// s = k^2 * s'; returns k and reduces s in place.  Full perfect squares are
// recognised at any size; partial square factors are found by trial division
// over small divisors (radicands in this project are small).
ZZ extract_square(ZZ& s) {
    if (mpz_perfect_square_p(s.get_mpz_t())) {
        ZZ root;
        mpz_sqrt(root.get_mpz_t(), s.get_mpz_t());
        s = 1;
        return root;
    }
    ZZ k = 1;
    for (unsigned long d = 2; d <= 4096; ++d) {
        ZZ d2 = ZZ(d) * static_cast<long>(d);
        if (d2 > s) break;
        while (mpz_divisible_p(s.get_mpz_t(), d2.get_mpz_t())) {
            s /= d2;
            k *= d;
        }
    }
    return k;
}

// Exact enclosure lo <= q*sqrt(s) <= hi with ~bits of precision.
void root_enclosure(const QQ& q, const ZZ& s, unsigned long bits, QQ& lo, QQ& hi) {
    ZZ scaled = s;
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * bits);
    ZZ r;
    mpz_sqrt(r.get_mpz_t(), scaled.get_mpz_t());  // r <= sqrt(s)*2^bits < r+1
    ZZ pow2 = 1;
    mpz_mul_2exp(pow2.get_mpz_t(), pow2.get_mpz_t(), bits);
    QQ root_lo(r, pow2), root_hi(r + 1, pow2);
    root_lo.canonicalize();
    root_hi.canonicalize();
    if (q >= 0) {
        lo = q * root_lo;
        hi = q * root_hi;
    } else {
        lo = q * root_hi;
        hi = q * root_lo;
    }
}

std::string decimal_from_parts(bool negative, const ZZ& scaled, int digits) {
    ZZ pow10 = 1;
    for (int i = 0; i < digits; ++i) pow10 *= 10;
    ZZ ip = scaled / pow10;
    ZZ fp = scaled % pow10;
    std::string out;
    if (negative && scaled != 0) out += "-";
    out += ip.get_str();
    if (digits > 0) {
        std::string frac = fp.get_str();
        out += "." + std::string(static_cast<std::size_t>(digits) - frac.size(), '0') + frac;
    }
    return out;
}

}  // namespace

void Surd::normalize() {
    if (q_ == 0 || s_ == 0) {
        q_ = 0;
        s_ = 0;
        return;
    }
    ZZ k = extract_square(s_);
    if (k != 1) q_ *= k;
    if (s_ == 1) {
        p_ += q_;
        q_ = 0;
        s_ = 0;
    }
}

Surd Surd::make(const QQ& p, const QQ& q, const ZZ& s) {
    if (s < 0) throw std::domain_error("negative radicand");
    Surd out;
    out.p_ = p;
    out.q_ = q;
    out.s_ = s;
    out.normalize();
    return out;
}

Surd Surd::sqrt_of(const QQ& x) {
    if (x < 0) throw std::domain_error("sqrt of a negative rational");
    // sqrt(n/d) = sqrt(n*d)/d.
    ZZ rad = x.get_num() * x.get_den();
    return make(QQ(0), QQ(1, x.get_den()), rad);
}

QQ Surd::as_rational() const {
    if (!is_rational()) throw std::domain_error("irrational value: " + exact_string());
    return p_;
}

Surd Surd::operator-() const { return make(-p_, -q_, s_); }
Surd Surd::operator+(const QQ& x) const { return make(p_ + x, q_, s_); }
Surd Surd::operator-(const QQ& x) const { return make(p_ - x, q_, s_); }
Surd Surd::scaled(const QQ& x) const { return make(p_ * x, q_ * x, s_); }

int Surd::compare(const QQ& x) const {
    QQ a = p_ - x;
    if (q_ == 0) return sgn(a);
    // a + q*sqrt(s) with s >= 2 not a perfect square, so the value is
    // irrational and never equals zero.
    if (q_ > 0) {
        if (a >= 0) return 1;
        return (a * a < q_ * q_ * QQ(s_)) ? 1 : -1;
    }
    if (a <= 0) return -1;
    return (a * a > q_ * q_ * QQ(s_)) ? 1 : -1;
}

int Surd::sign() const { return compare(QQ(0)); }

int Surd::compare(const Surd& other) const {
    if (other.q_ == 0) return compare(other.p_);
    if (q_ == 0) return -other.compare(p_);
    if (s_ == other.s_) {
        // Difference lives in the same quadratic extension.
        return Surd::make(p_ - other.p_, q_ - other.q_, s_).sign();
    }
    ZZ prod = s_ * other.s_;
    if (mpz_perfect_square_p(prod.get_mpz_t())) {
        // sqrt(t) = sqrt(s*t)/s * sqrt(s): fold into a common radicand.
        ZZ root;
        mpz_sqrt(root.get_mpz_t(), prod.get_mpz_t());
        QQ conv(root, s_);
        conv.canonicalize();
        return Surd::make(p_ - other.p_, q_ - other.q_ * conv, s_).sign();
    }
    // 1, sqrt(s), sqrt(t) are linearly independent over Q here, so the
    // difference is nonzero; bracket both roots until the sign resolves.
    for (unsigned long bits = 64;; bits *= 2) {
        QQ lo1, hi1, lo2, hi2;
        root_enclosure(q_, s_, bits, lo1, hi1);
        root_enclosure(other.q_, other.s_, bits, lo2, hi2);
        QQ diff_lo = (p_ - other.p_) + lo1 - hi2;
        QQ diff_hi = (p_ - other.p_) + hi1 - lo2;
        if (diff_lo > 0) return 1;
        if (diff_hi < 0) return -1;
        if (bits > (1ul << 20)) throw std::logic_error("surd comparison failed to resolve");
    }
}

double Surd::to_double() const {
    double root = std::sqrt(s_.get_d());
    return p_.get_d() + q_.get_d() * root;
}

ZZ Surd::floor() const {
    if (q_ == 0) return floor_z(p_);
    for (unsigned long bits = 32;; bits *= 2) {
        QQ lo, hi;
        root_enclosure(q_, s_, bits, lo, hi);
        ZZ fl = floor_z(p_ + lo), fh = floor_z(p_ + hi);
        if (fl == fh) return fl;
        if (bits > (1ul << 20)) throw std::logic_error("surd floor failed to resolve");
    }
}

std::string Surd::exact_string() const {
    if (q_ == 0) return format_rational(p_);
    if (p_ == 0) {
        QQ inner = q_ * q_ * QQ(s_);
        std::string root = "sqrt(" + format_rational(inner) + ")";
        return q_ > 0 ? root : "-" + root;
    }
    std::string out = format_rational(p_);
    QQ aq = abs_q(q_);
    out += (q_ > 0) ? " + " : " - ";
    if (aq != 1) out += format_rational(aq) + "*";
    out += "sqrt(" + s_.get_str() + ")";
    return out;
}

std::string Surd::decimal_string(int digits) const {
    if (digits < 0) throw std::invalid_argument("negative digit count");
    bool neg = sign() < 0;
    Surd a = neg ? -*this : *this;
    QQ pow10 = 1;
    for (int i = 0; i < digits; ++i) pow10 *= 10;
    Surd scaled = a.scaled(pow10);
    ZZ fl = scaled.floor();
    // Round to nearest, ties away from zero, decided exactly.
    ZZ n = (scaled.compare(QQ(fl) + QQ(1, 2)) >= 0) ? fl + 1 : fl;
    return decimal_from_parts(neg, n, digits);
}

SurdSum::SurdSum(const Surd& s) : base_(s.rational_part()) {
    if (!s.is_rational()) terms_.emplace_back(s.coefficient(), s.radicand());
}

SurdSum SurdSum::sqrt_of(const QQ& x) { return SurdSum(Surd::sqrt_of(x)); }

void SurdSum::insert_term(QQ coef, ZZ rad) {
    if (coef == 0) return;
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
        if (it->second == rad) {
            it->first += coef;
            if (it->first == 0) terms_.erase(it);
            return;
        }
        ZZ prod = it->second * rad;
        if (mpz_perfect_square_p(prod.get_mpz_t())) {
            // Same square class: sqrt(rad) = sqrt(prod)/it->rad * sqrt(it->rad).
            ZZ root;
            mpz_sqrt(root.get_mpz_t(), prod.get_mpz_t());
            QQ conv(root, it->second);
            conv.canonicalize();
            it->first += coef * conv;
            if (it->first == 0) terms_.erase(it);
            return;
        }
    }
    terms_.emplace_back(coef, rad);
}

SurdSum SurdSum::operator+(const SurdSum& o) const {
    SurdSum out = *this;
    out.base_ += o.base_;
    for (const auto& [coef, rad] : o.terms_) out.insert_term(coef, rad);
    return out;
}

SurdSum SurdSum::scaled(const QQ& x) const {
    SurdSum out;
    out.base_ = base_ * x;
    if (x != 0)
        for (const auto& [coef, rad] : terms_) out.terms_.emplace_back(coef * x, rad);
    return out;
}

QQ SurdSum::as_rational() const {
    if (!terms_.empty()) throw std::domain_error("irrational value: " + exact_string());
    return base_;
}

Surd SurdSum::as_surd() const {
    if (terms_.empty()) return Surd(base_);
    if (terms_.size() == 1) return Surd::make(base_, terms_[0].first, terms_[0].second);
    throw std::domain_error("sum of independent roots: " + exact_string());
}

int SurdSum::sign() const {
    if (terms_.empty()) return sgn(base_);
    if (terms_.size() == 1) return as_surd().sign();
    // Radicands sit in distinct square classes, so 1 and the roots are
    // linearly independent over Q: the value is nonzero.  Bracket it.
    for (unsigned long bits = 64;; bits *= 2) {
        QQ lo_acc = base_, hi_acc = base_;
        for (const auto& [coef, rad] : terms_) {
            QQ lo, hi;
            root_enclosure(coef, rad, bits, lo, hi);
            lo_acc += lo;
            hi_acc += hi;
        }
        if (lo_acc > 0) return 1;
        if (hi_acc < 0) return -1;
        if (bits > (1ul << 20)) throw std::logic_error("surd-sum sign failed to resolve");
    }
}

int SurdSum::compare(const SurdSum& o) const { return (*this + o.scaled(QQ(-1))).sign(); }

double SurdSum::to_double() const {
    double acc = base_.get_d();
    for (const auto& [coef, rad] : terms_) acc += coef.get_d() * std::sqrt(rad.get_d());
    return acc;
}

std::string SurdSum::exact_string() const {
    if (terms_.size() <= 1) return as_surd().exact_string();
    std::string out = (base_ != 0) ? format_rational(base_) : "";
    for (const auto& [coef, rad] : terms_) {
        QQ ac = abs_q(coef);
        if (out.empty()) {
            if (coef < 0) out += "-";
        } else {
            out += (coef > 0) ? " + " : " - ";
        }
        if (ac != 1) out += format_rational(ac) + "*";
        out += "sqrt(" + rad.get_str() + ")";
    }
    return out;
}

}  // namespace cy3

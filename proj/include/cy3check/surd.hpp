#pragma once

#include "cy3check/rational.hpp"

#include <string>
#include <vector>

namespace cy3 {

/// Exact real number of the form  p + q*sqrt(s)  with rational p, q and an
/// integer radicand s >= 0.  Normalised so that square factors of s are pulled
/// into q and rational values always have q = 0, s = 0.  All comparisons are
/// exact (algebraic case analysis plus, for mixed radicands, rational
/// bracketing of the roots at increasing precision).
class Surd {
public:
    Surd() : p_(0), q_(0), s_(0) {}
    Surd(const QQ& rational) : p_(rational), q_(0), s_(0) {}
    Surd(long n) : p_(n), q_(0), s_(0) {}

    /// p + q*sqrt(s) (any q, any s >= 0); normalises.
    static Surd make(const QQ& p, const QQ& q, const ZZ& s);

    /// sqrt of a nonnegative rational.  Throws std::domain_error on negatives.
    static Surd sqrt_of(const QQ& x);

    const QQ& rational_part() const { return p_; }
    const QQ& coefficient() const { return q_; }
    const ZZ& radicand() const { return s_; }

    bool is_rational() const { return q_ == 0; }
    /// Throws std::domain_error when the value is irrational.
    QQ as_rational() const;

    Surd operator-() const;
    Surd operator+(const QQ& x) const;
    Surd operator-(const QQ& x) const;
    Surd scaled(const QQ& x) const;

    /// Exact sign in {-1, 0, +1}.
    int sign() const;
    int compare(const QQ& x) const;
    int compare(long x) const { return compare(QQ(x)); }
    int compare(const Surd& other) const;
    bool operator<(const Surd& o) const { return compare(o) < 0; }
    bool operator==(const Surd& o) const { return compare(o) == 0; }

    double to_double() const;

    /// Exact display: "3/2", "sqrt(48)", "-sqrt(48)", "1/2 + 3*sqrt(5)", ...
    /// A pure root is rendered with the radicand folded inside: q*sqrt(s) with
    /// rational q^2*s becomes sqrt(q^2*s).
    std::string exact_string() const;

    /// Fixed-point rendering with `digits` fractional digits, rounded to
    /// nearest (ties away from zero); the rounding decision is made exactly.
    std::string decimal_string(int digits = 12) const;

    /// floor of the value as an exact integer.
    ZZ floor() const;

private:
    QQ p_, q_;
    ZZ s_;
    void normalize();
};

/// Sum of a rational and square roots of several rationals; products of
/// radicands that happen to be perfect squares are merged, so the stored
/// radicands are multiplicatively independent and the zero test is exact.
class SurdSum {
public:
    SurdSum() : base_(0) {}
    SurdSum(const QQ& rational) : base_(rational) {}
    SurdSum(const Surd& s);

    static SurdSum sqrt_of(const QQ& x);

    SurdSum operator+(const SurdSum& o) const;
    SurdSum scaled(const QQ& x) const;

    bool is_rational() const { return terms_.empty(); }
    QQ as_rational() const;
    /// True when the value collapses to a single p + q*sqrt(s).
    bool is_simple_surd() const { return terms_.size() <= 1; }
    Surd as_surd() const;

    int sign() const;
    int compare(const SurdSum& o) const;
    bool operator<(const SurdSum& o) const { return compare(o) < 0; }
    bool operator==(const SurdSum& o) const { return compare(o) == 0; }

    double to_double() const;
    std::string exact_string() const;

private:
    QQ base_;
    std::vector<std::pair<QQ, ZZ>> terms_;  // coef * sqrt(radicand), radicand >= 2 square-reduced
    void insert_term(QQ coef, ZZ rad);
    friend class Surd;
};

}  // namespace cy3

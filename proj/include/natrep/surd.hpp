#pragma once

#include "natrep/codec.hpp"
#include "natrep/rational.hpp"

#include <string>
#include <vector>

namespace natrep {

// Exact quadratic number (p + q*sqrt(d)) / r with r > 0, gcd(p,q,r) = 1 and
// d square-free. All comparisons are resolved by integer arithmetic.
class Surd {
  public:
    Surd(Int p, Int q, Int r, Int d);
    static Surd sqrt_of(const Int &d) { return Surd(0, 1, 1, d); }
    static Surd golden_ratio() { return Surd(1, 1, 2, 5); }
    static Surd from_ratio(const Ratio &x) { return Surd(x.num(), 0, x.den(), 2); }

    bool is_rational() const { return q_ == 0; }
    Ratio as_ratio() const;

    const Int &p() const { return p_; }
    const Int &q() const { return q_; }
    const Int &r() const { return r_; }
    const Int &d() const { return d_; }

    int cmp(const Ratio &x) const;  // sign of *this - x
    int cmp(const Surd &other) const; // requires same d (or either rational)
    int sign() const { return cmp(Ratio(0)); }
    Surd abs() const { return sign() >= 0 ? *this : -*this; }

    Int floor() const;
    Surd operator-() const { return Surd(-p_, -q_, r_, d_); }
    Surd operator-(const Ratio &x) const;
    Surd operator+(const Ratio &x) const { return *this - (-x); }
    friend Surd operator-(const Ratio &x, const Surd &s) { return -(s - x); }
    Surd recip() const;

    std::string str() const;
    double approx() const;

  private:
    void normalize();
    Int p_, q_, r_, d_;
};

// Natural-representation digit stream of an irrational surd: the first
// `count` entries of the encoding recursion run with exact arithmetic.
std::vector<Int> nat_digits(const Surd &x, size_t count);

// Standard continued fraction digits via exact floor and reciprocal.
std::vector<Int> cf_digits(const Surd &x, size_t count);

enum class Codec { Natural, Standard };

struct Convergent {
    Ratio value;
    Surd error; // |x - value|, sign-resolved exactly
};

Convergent convergent_error(const Surd &x, const std::vector<Int> &digits, Codec codec);

} // namespace natrep

#include "natrep/surd.hpp"

#include <cmath>
#include <sstream>

namespace natrep {

namespace {

Int isqrt(const Int &v) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

// Extracts the square part: d = s^2 * d', returns (s, d').
std::pair<Int, Int> square_free(Int d) {
    Int s = 1;
    for (Int f = 2; f * f <= d; ++f) {
        Int ff = f * f;
        while (d % ff == 0) {
            d /= ff;
            s *= f;
        }
    }
    return {s, d};
}

} // namespace

Surd::Surd(Int p, Int q, Int r, Int d) : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), d_(std::move(d)) {
    if (r_ == 0)
        throw domain_error("Surd: zero denominator");
    if (d_ <= 0)
        throw domain_error("Surd: need d > 0");
    auto [s, rest] = square_free(d_);
    q_ *= s;
    d_ = rest;
    if (d_ == 1) {
        p_ += q_;
        q_ = 0;
        d_ = 2;
    }
    normalize();
}

void Surd::normalize() {
    if (r_ < 0) {
        p_ = -p_;
        q_ = -q_;
        r_ = -r_;
    }
    Int g;
    mpz_gcd(g.get_mpz_t(), p_.get_mpz_t(), q_.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r_.get_mpz_t());
    if (g > 1) {
        p_ /= g;
        q_ /= g;
        r_ /= g;
    }
}

Ratio Surd::as_ratio() const {
    if (!is_rational())
        throw domain_error("Surd: irrational");
    return Ratio(p_, r_);
}

namespace {

// Sign of A + B*sqrt(d).
int sign_of(const Int &a, const Int &b, const Int &d) {
    int sa = sgn(a), sb = sgn(b);
    if (sb == 0)
        return sa;
    if (sa == 0)
        return sb;
    if (sa == sb)
        return sa;
    Int a2 = a * a, b2d = b * b * d;
    if (a2 == b2d)
        return 0;
    return a2 > b2d ? sa : sb;
}

} // namespace

int Surd::cmp(const Ratio &x) const {
    // (p + q sqrt(d)) / r - n/m  ~  (p m - n r) + q m sqrt(d)
    Int a = p_ * x.den() - x.num() * r_;
    Int b = q_ * x.den();
    return sign_of(a, b, d_);
}

int Surd::cmp(const Surd &other) const {
    if (other.is_rational())
        return cmp(other.as_ratio());
    if (is_rational())
        return -other.cmp(as_ratio());
    if (d_ != other.d_)
        throw domain_error("Surd: cannot compare different radicands exactly");
    Int a = p_ * other.r_ - other.p_ * r_;
    Int b = q_ * other.r_ - other.q_ * r_;
    return sign_of(a, b, d_);
}

Int Surd::floor() const {
    if (is_rational())
        return Ratio(p_, r_).floor();
    // Bracket q*sqrt(d) between consecutive integers.
    Int s = isqrt(q_ * q_ * d_);
    Int candidate;
    if (q_ > 0)
        mpz_fdiv_q(candidate.get_mpz_t(), Int(p_ + s).get_mpz_t(), r_.get_mpz_t());
    else
        mpz_fdiv_q(candidate.get_mpz_t(), Int(p_ - s - 1).get_mpz_t(), r_.get_mpz_t());
    while (cmp(Ratio(candidate + 1)) >= 0)
        candidate += 1;
    while (cmp(Ratio(candidate)) < 0)
        candidate -= 1;
    return candidate;
}

Surd Surd::operator-(const Ratio &x) const {
    return Surd(p_ * x.den() - x.num() * r_, q_ * x.den(), r_ * x.den(), d_);
}

Surd Surd::recip() const {
    if (sign() == 0)
        throw pole_error("Surd: reciprocal of zero");
    // r / (p + q sqrt(d)) = r (p - q sqrt(d)) / (p^2 - q^2 d)
    Int denom = p_ * p_ - q_ * q_ * d_;
    if (denom == 0)
        throw domain_error("Surd: degenerate reciprocal");
    return Surd(r_ * p_, -r_ * q_, denom, d_);
}

std::string Surd::str() const {
    std::ostringstream out;
    out << "(" << p_.get_str() << " + " << q_.get_str() << "*sqrt(" << d_.get_str() << "))/"
        << r_.get_str();
    return out.str();
}

double Surd::approx() const {
    return (p_.get_d() + q_.get_d() * std::sqrt(d_.get_d())) / r_.get_d();
}

std::vector<Int> nat_digits(const Surd &x, size_t count) {
    if (x.is_rational())
        throw domain_error("nat_digits: rational input; use encode instead");
    if (count == 0)
        throw domain_error("nat_digits: count >= 1");
    std::vector<Int> out;
    int sign = 1;
    Surd cur = x;
    Ratio half(1, 2);
    for (size_t k = 0; k < count; ++k) {
        Int fl = cur.floor();
        out.push_back(sign * (fl + 1));
        Surd frac = cur - Ratio(fl);
        if (frac.cmp(half) >= 0) {
            cur = (Ratio(1) - frac).recip() - Ratio(2);
        } else {
            cur = frac.recip() - Ratio(2);
            sign = -sign;
        }
    }
    return out;
}

std::vector<Int> cf_digits(const Surd &x, size_t count) {
    if (x.is_rational())
        throw domain_error("cf_digits: rational input; use cf_encode instead");
    if (count == 0)
        throw domain_error("cf_digits: count >= 1");
    std::vector<Int> out;
    Surd cur = x;
    for (size_t k = 0; k < count; ++k) {
        Int a = cur.floor();
        out.push_back(a);
        cur = (cur - Ratio(a)).recip();
    }
    return out;
}

Convergent convergent_error(const Surd &x, const std::vector<Int> &digits, Codec codec) {
    Ratio value;
    if (codec == Codec::Natural) {
        NatRep s;
        s.entries = digits;
        value = decode(s);
    } else {
        value = cf_eval(digits);
    }
    Surd err = (x - value).abs();
    return Convergent{value, err};
}

} // namespace natrep

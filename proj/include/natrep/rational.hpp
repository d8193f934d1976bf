#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace natrep {

using Int = mpz_class;

struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct invalid_sequence : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct range_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct pole_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact rational, canonical lowest terms, positive denominator.
class Ratio {
  public:
    Ratio() : q_(0) {}
    Ratio(long n) : q_(n) {}
    Ratio(const Int &n) : q_(n) {}
    Ratio(const Int &num, const Int &den) : q_(num, den) {
        if (den == 0)
            throw domain_error("Ratio: zero denominator");
        q_.canonicalize();
    }
    Ratio(long num, long den) : Ratio(Int(num), Int(den)) {}

    const Int num() const { return q_.get_num(); }
    const Int den() const { return q_.get_den(); }

    bool is_integer() const { return q_.get_den() == 1; }
    Int floor() const {
        Int r;
        mpz_fdiv_q(r.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
        return r;
    }
    Int ceil() const {
        Int r;
        mpz_cdiv_q(r.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
        return r;
    }
    Ratio frac() const { return *this - Ratio(floor()); }

    Ratio recip() const {
        if (q_ == 0)
            throw pole_error("Ratio: reciprocal of zero");
        Ratio r;
        r.q_ = 1 / q_;
        return r;
    }

    friend Ratio operator+(const Ratio &a, const Ratio &b) { return wrap(a.q_ + b.q_); }
    friend Ratio operator-(const Ratio &a, const Ratio &b) { return wrap(a.q_ - b.q_); }
    friend Ratio operator*(const Ratio &a, const Ratio &b) { return wrap(a.q_ * b.q_); }
    friend Ratio operator/(const Ratio &a, const Ratio &b) {
        if (b.q_ == 0)
            throw pole_error("Ratio: division by zero");
        return wrap(a.q_ / b.q_);
    }
    Ratio operator-() const { return wrap(-q_); }

    friend bool operator==(const Ratio &a, const Ratio &b) { return a.q_ == b.q_; }
    friend bool operator!=(const Ratio &a, const Ratio &b) { return a.q_ != b.q_; }
    friend bool operator<(const Ratio &a, const Ratio &b) { return a.q_ < b.q_; }
    friend bool operator<=(const Ratio &a, const Ratio &b) { return a.q_ <= b.q_; }
    friend bool operator>(const Ratio &a, const Ratio &b) { return a.q_ > b.q_; }
    friend bool operator>=(const Ratio &a, const Ratio &b) { return a.q_ >= b.q_; }

    int sign() const { return sgn(q_); }
    Ratio abs() const { return wrap(::abs(q_)); }

    // Text form: "n/d" or "n".
    std::string str() const {
        if (is_integer())
            return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }
    static Ratio parse(const std::string &text);

    double approx() const { return q_.get_d(); }

  private:
    static Ratio wrap(const mpq_class &v) {
        Ratio r;
        r.q_ = v;
        return r;
    }
    mpq_class q_;
};

inline Ratio Ratio::parse(const std::string &text) {
    auto bad = [&]() -> Ratio { throw domain_error("Ratio: cannot parse '" + text + "'"); };
    size_t i = 0, n = text.size();
    auto skip = [&] {
        while (i < n && (text[i] == ' ' || text[i] == '\t'))
            ++i;
    };
    auto integer = [&]() -> Int {
        skip();
        size_t start = i;
        if (i < n && (text[i] == '-' || text[i] == '+'))
            ++i;
        size_t digits = i;
        while (i < n && text[i] >= '0' && text[i] <= '9')
            ++i;
        if (i == digits)
            bad();
        return Int(text.substr(start, i - start));
    };
    Int num = integer();
    skip();
    if (i == n)
        return Ratio(num);
    if (text[i] != '/')
        bad();
    ++i;
    Int den = integer();
    skip();
    if (i != n)
        bad();
    if (den == 0)
        bad();
    return Ratio(num, den);
}

} // namespace natrep

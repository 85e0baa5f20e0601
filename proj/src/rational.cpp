#include "hopfrob/rational.hpp"

#include <limits>
#include <stdexcept>

namespace hopfrob {

namespace {

using i128 = __int128;

constexpr i128 kMax = std::numeric_limits<std::int64_t>::max();

bool fits(i128 v) { return v <= kMax && v >= -kMax; }

i128 abs128(i128 v) { return v < 0 ? -v : v; }

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Binary gcd on magnitudes up to 2^127.
unsigned __int128 gcd_u128(unsigned __int128 a, unsigned __int128 b) {
    if (a == 0) return b;
    if (b == 0) return a;
    if ((a >> 64) == 0 && (b >> 64) == 0) return gcd_u64(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    int shift = 0;
    while (((a | b) & 1) == 0) {
        a >>= 1;
        b >>= 1;
        ++shift;
    }
    while ((a & 1) == 0) a >>= 1;
    while (b != 0) {
        while ((b & 1) == 0) b >>= 1;
        if (a > b) std::swap(a, b);
        b -= a;
    }
    return a << shift;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    return static_cast<std::int64_t>(gcd_u64(static_cast<std::uint64_t>(a < 0 ? -a : a), static_cast<std::uint64_t>(b < 0 ? -b : b)));
}

mpq_class mpq_from(std::int64_t n, std::int64_t d) {
    mpq_class q(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d)));
    q.canonicalize();
    return q;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    assign_wide(n, d);
}

Rational::Rational(const mpq_class& q) { assign_mpq(q); }

Rational& Rational::operator=(const Rational& o) {
    if (this != &o) {
        n_ = o.n_;
        d_ = o.d_;
        big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
}

void Rational::assign_wide(i128 n, i128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    auto g = gcd_u128(static_cast<unsigned __int128>(abs128(n)), static_cast<unsigned __int128>(d));
    if (g > 1) {
        n /= static_cast<i128>(g);
        d /= static_cast<i128>(g);
    }
    if (fits(n) && fits(d)) {
        n_ = static_cast<std::int64_t>(n);
        d_ = static_cast<std::int64_t>(d);
        big_.reset();
        return;
    }
    // Values beyond the inline range are rebuilt through decimal-free limb arithmetic.
    auto to_mpz = [](i128 v) {
        bool neg = v < 0;
        auto u = static_cast<unsigned __int128>(neg ? -v : v);
        mpz_class hi(static_cast<unsigned long>(u >> 64));
        mpz_class lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
        mpz_class r = (hi << 64) + lo;
        return neg ? mpz_class(-r) : r;
    };
    big_ = std::make_unique<mpq_class>(to_mpz(n), to_mpz(d));
}

void Rational::assign_mpq(mpq_class q) {
    q.canonicalize();
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (num.fits_slong_p() && den.fits_slong_p() && num != mpz_class(std::numeric_limits<long>::min())) {
        n_ = num.get_si();
        d_ = den.get_si();
        big_.reset();
    } else {
        big_ = std::make_unique<mpq_class>(std::move(q));
    }
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : d_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (n_ > 0) - (n_ < 0);
}

mpq_class Rational::to_mpq() const { return big_ ? *big_ : mpq_from(n_, d_); }

Rational Rational::operator-() const {
    Rational r;
    if (big_) {
        r.assign_mpq(-*big_);
    } else {
        r.n_ = -n_;
        r.d_ = d_;
    }
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (d_ == 1 && o.d_ == 1) {
            assign_wide(static_cast<i128>(n_) + o.n_, 1);
            return *this;
        }
        std::int64_t g = gcd64(d_, o.d_);
        i128 num = static_cast<i128>(n_) * (o.d_ / g) + static_cast<i128>(o.n_) * (d_ / g);
        i128 den = static_cast<i128>(d_ / g) * o.d_;
        assign_wide(num, den);
        return *this;
    }
    assign_mpq(to_mpq() + o.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (n_ == 0 || o.n_ == 0) {
            n_ = 0;
            d_ = 1;
            return *this;
        }
        std::int64_t g1 = gcd64(n_, o.d_);
        std::int64_t g2 = gcd64(o.n_, d_);
        i128 num = static_cast<i128>(n_ / g1) * (o.n_ / g2);
        i128 den = static_cast<i128>(d_ / g2) * (o.d_ / g1);
        assign_wide(num, den);
        return *this;
    }
    assign_mpq(to_mpq() * o.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& o) { return *this *= o.inverse(); }

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Rational r;
    if (big_) {
        r.assign_mpq(1 / *big_);
    } else {
        r.assign_wide(d_, n_);
    }
    return r;
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
    if (static_cast<bool>(a.big_) != static_cast<bool>(b.big_)) return false;  // canonical storage
    return *a.big_ == *b.big_;
}

bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return static_cast<i128>(a.n_) * b.d_ < static_cast<i128>(b.n_) * a.d_;
    return a.to_mpq() < b.to_mpq();
}

std::string Rational::str() const {
    if (big_) return big_->get_str();
    if (d_ == 1) return std::to_string(n_);
    return std::to_string(n_) + "/" + std::to_string(d_);
}

Rational Rational::parse(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    std::string t(s);
    auto valid = [](const std::string& part) {
        std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (i >= part.size()) return false;
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') return false;
        return true;
    };
    auto slash = t.find('/');
    std::string num = t.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
    if (!valid(num) || !valid(den)) throw std::invalid_argument("malformed rational '" + t + "'");
    if (num[0] == '+') num = num.substr(1);
    if (den[0] == '+') den = den.substr(1);
    mpz_class d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + t + "'");
    return Rational(mpq_class(mpz_class(num), d));
}

}  // namespace hopfrob

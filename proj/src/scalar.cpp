#include "gcoring/scalar.hpp"

#include <limits>

#include "gcoring/error.hpp"

namespace gcoring {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::BaseMismatch: return "BaseMismatch";
        case ErrorKind::MissingDualBasis: return "MissingDualBasis";
        case ErrorKind::MissingCofreeWitness: return "MissingCofreeWitness";
        case ErrorKind::ImageNotInCoinvariants: return "ImageNotInCoinvariants";
        case ErrorKind::HypothesisFailed: return "HypothesisFailed";
        case ErrorKind::UnknownSuite: return "UnknownSuite";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::SemanticError: return "SemanticError";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

std::string Field::name() const {
    return p == 0 ? std::string("Q") : "Fp " + std::to_string(p);
}

namespace {

constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();
constexpr __int128 kMin = -kMax;  // keep negation of small values safe

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e > 0) {
        if (e & 1) r = mod_mul(r, a, p);
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t reduce_signed(long long v, std::uint64_t p) {
    __int128 r = static_cast<__int128>(v) % static_cast<__int128>(p);
    if (r < 0) r += p;
    return static_cast<std::uint64_t>(r);
}

mpz_class to_mpz(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

}  // namespace

Scalar::Scalar(Field f, long v) : p_(f.p) {
    if (p_ == 0) {
        num_ = v;
        den_ = 1;
        if (static_cast<__int128>(v) < kMin) *this = make_big(mpq_class(v));
    } else {
        num_ = static_cast<std::int64_t>(reduce_signed(v, p_));
    }
}

Scalar Scalar::make_small(__int128 n, __int128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (n == 0) d = 1;
    if (n <= kMax && n >= kMin && d <= kMax) {
        Scalar s;
        s.num_ = static_cast<std::int64_t>(n);
        s.den_ = static_cast<std::int64_t>(d);
        return s;
    }
    mpq_class q(to_mpz(n), to_mpz(d));
    q.canonicalize();
    return make_big(std::move(q));
}

Scalar Scalar::make_big(mpq_class q) {
    // Demote when it fits the fast path.
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
        long n = q.get_num().get_si();
        long d = q.get_den().get_si();
        if (static_cast<__int128>(n) >= kMin) {
            Scalar s;
            s.num_ = n;
            s.den_ = d;
            return s;
        }
    }
    Scalar s;
    s.big_ = std::make_shared<const mpq_class>(std::move(q));
    return s;
}

Scalar Scalar::from_mpq(const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    return make_big(std::move(c));
}

Scalar Scalar::parse(Field f, const std::string& s) {
    if (s.empty()) throw Error(ErrorKind::InvalidArgument, "empty scalar literal");
    auto valid_int = [](const std::string& t, bool allow_sign) {
        if (t.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw Error(ErrorKind::InvalidArgument, "malformed scalar literal '" + s + "'");
    if (num[0] == '+') num = num.substr(1);
    mpz_class n(num), d(den);
    if (d == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + s + "'");
    if (f.p == 0) return from_mpq(mpq_class(n, d));
    mpz_class pz(static_cast<unsigned long>(f.p));
    mpz_class nr = n % pz;
    if (nr < 0) nr += pz;
    mpz_class dr = d % pz;
    if (dr == 0) throw Error(ErrorKind::InvalidArgument, "denominator divisible by p in '" + s + "'");
    Scalar a(f, 0), b(f, 0);
    a.num_ = static_cast<std::int64_t>(nr.get_ui());
    b.num_ = static_cast<std::int64_t>(dr.get_ui());
    return a / b;
}

void Scalar::check_same(const Scalar& o) const {
    if (p_ != o.p_)
        throw Error(ErrorKind::FieldMismatch,
                    "scalars over " + Field{p_}.name() + " and " + Field{o.p_}.name());
}

bool Scalar::is_zero() const { return !big_ && num_ == 0; }
bool Scalar::is_one() const { return !big_ && num_ == 1 && den_ == 1; }

mpq_class Scalar::to_mpq() const {
    if (p_ != 0) throw Error(ErrorKind::FieldMismatch, "residue is not a rational");
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::uint64_t Scalar::residue() const {
    if (p_ == 0) throw Error(ErrorKind::FieldMismatch, "rational is not a residue");
    return static_cast<std::uint64_t>(num_);
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    if (p_ != 0) {
        Scalar r = *this;
        unsigned __int128 s = static_cast<unsigned __int128>(num_) + static_cast<std::uint64_t>(o.num_);
        r.num_ = static_cast<std::int64_t>(s % p_);
        return r;
    }
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) return make_small(static_cast<__int128>(num_) + o.num_, 1);
        return make_small(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                          static_cast<__int128>(den_) * o.den_);
    }
    return make_big(to_mpq() + o.to_mpq());
}

Scalar Scalar::operator-() const {
    if (p_ != 0) {
        Scalar r = *this;
        r.num_ = num_ == 0 ? 0 : static_cast<std::int64_t>(p_ - static_cast<std::uint64_t>(num_));
        return r;
    }
    if (!big_) {
        Scalar r = *this;
        r.num_ = -num_;
        return r;
    }
    return make_big(-to_mpq());
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    if (p_ != 0) {
        Scalar r = *this;
        r.num_ = static_cast<std::int64_t>(mod_mul(static_cast<std::uint64_t>(num_),
                                                   static_cast<std::uint64_t>(o.num_), p_));
        return r;
    }
    if (is_zero() || o.is_zero()) return Scalar();
    if (!big_ && !o.big_)
        return make_small(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
    return make_big(to_mpq() * o.to_mpq());
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
    if (p_ != 0) {
        Scalar r = *this;
        r.num_ = static_cast<std::int64_t>(mod_pow(static_cast<std::uint64_t>(num_), p_ - 2, p_));
        return r;
    }
    if (!big_) return make_small(den_, num_);
    return make_big(1 / to_mpq());
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
    if (p_ != o.p_) return false;
    if (!big_ && !o.big_) return num_ == o.num_ && den_ == o.den_;
    if (big_ && o.big_) return *big_ == *o.big_;
    return false;  // normalization keeps representations unique
}

std::string Scalar::str() const {
    if (p_ != 0) return std::to_string(num_);
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace gcoring

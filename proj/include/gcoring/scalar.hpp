#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace gcoring {

// The base field: p == 0 is the rationals, otherwise the prime field F_p.
struct Field {
    std::uint64_t p = 0;

    static Field rationals() { return Field{0}; }
    static Field prime(std::uint64_t p) { return Field{p}; }
    bool is_rational() const { return p == 0; }
    std::string name() const;
    friend bool operator==(Field a, Field b) { return a.p == b.p; }
    friend bool operator!=(Field a, Field b) { return a.p != b.p; }
};

// Exact field element. Rationals keep an int64 fast path and spill to GMP
// when a result does not fit; both representations are always normalized
// (lowest terms, positive denominator, and small whenever it fits).
class Scalar {
public:
    Scalar() = default;  // rational zero
    Scalar(Field f, long v);
    static Scalar from_mpq(const mpq_class& q);
    static Scalar zero(Field f) { return Scalar(f, 0); }
    static Scalar one(Field f) { return Scalar(f, 1); }
    // Parses "n", "-n", "p/q" in the given field.
    static Scalar parse(Field f, const std::string& s);

    Field field() const { return Field{p_}; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    mpq_class to_mpq() const;           // rationals only
    std::uint64_t residue() const;      // prime fields only
    std::string str() const;

private:
    void check_same(const Scalar& o) const;
    static Scalar make_small(__int128 n, __int128 d);
    static Scalar make_big(mpq_class q);

    std::uint64_t p_ = 0;
    std::int64_t num_ = 0;  // residue when p_ != 0
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

}  // namespace gcoring

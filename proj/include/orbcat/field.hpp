#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace orbcat {

using BigRational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Ground field: the rationals (p == 0) or a prime field F_p.
class Field {
public:
    Field() = default;
    static Field rationals() { return Field{}; }
    static Field prime(uint32_t p);

    bool is_rational() const { return p_ == 0; }
    uint32_t characteristic() const { return p_; }

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

    std::string name() const;

private:
    uint32_t p_ = 0;
};

inline void check_same_field(const Field& a, const Field& b) {
    if (a != b)
        throw std::invalid_argument("field mismatch: " + a.name() + " vs " + b.name());
}

// Exact scalar of the field: a rational in lowest terms with positive
// denominator, or a residue in [0, p).
class Scalar {
public:
    Scalar() = default;                       // 0 in Q
    Scalar(const Field& f, long long n);      // n mapped into f
    Scalar(const Field& f, const BigRational& v);
    static Scalar zero(const Field& f) { return Scalar(f, 0); }
    static Scalar one(const Field& f) { return Scalar(f, 1); }

    const Field& field() const { return f_; }
    bool is_zero() const { return v_ == 0; }
    const BigRational& value() const { return v_; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws on division by zero
    Scalar operator-() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // "a/b" (or "a" when the denominator is 1); residue digits for F_p
    std::string str() const;
    static Scalar parse(const Field& f, const std::string& s);

private:
    Scalar normalized() const;
    Field f_;
    BigRational v_;  // for F_p: integer residue in [0, p)
};

}  // namespace orbcat

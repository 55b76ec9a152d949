#ifndef SLP_FIELD_HPP
#define SLP_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "slp/errors.hpp"

namespace slp {

/// Exact rational scalar. All characteristic-zero arithmetic goes through GMP;
/// there is no floating point anywhere in the library.
using Rational = mpq_class;

bool is_prime(std::uint64_t n);

/// Runtime description of the coefficient field: the rationals or F_p.
struct FieldSpec {
    enum class Kind { Rationals, PrimeField };

    Kind kind = Kind::Rationals;
    std::uint64_t p = 0;  // modulus when kind == PrimeField

    static FieldSpec rationals() { return FieldSpec{}; }

    static FieldSpec prime_field(std::uint64_t p) {
        require(is_prime(p), ErrorKind::NotPrime, "modulus " + std::to_string(p) + " is not prime");
        return FieldSpec{Kind::PrimeField, p};
    }

    bool operator==(const FieldSpec& other) const = default;

    std::string describe() const {
        return kind == Kind::Rationals ? "QQ" : "F" + std::to_string(p);
    }
};

/// Element of F_p. A default-constructed value is the zero scalar with no
/// modulus attached yet; it picks up the modulus of the first operand it
/// meets. This lets generic matrix code value-initialize entries.
class Zp {
public:
    Zp() = default;

    Zp(std::int64_t value, std::uint64_t p) : p_(p) {
        std::int64_t r = value % static_cast<std::int64_t>(p);
        if (r < 0)
            r += static_cast<std::int64_t>(p);
        v_ = static_cast<std::uint64_t>(r);
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    friend Zp operator+(const Zp& a, const Zp& b) {
        std::uint64_t p = merged(a, b);
        if (p == 0)
            return Zp();
        std::uint64_t s = a.v_ + b.v_;
        if (s >= p)
            s -= p;
        return make(s, p);
    }

    friend Zp operator-(const Zp& a, const Zp& b) {
        std::uint64_t p = merged(a, b);
        if (p == 0)
            return Zp();
        std::uint64_t s = a.v_ + (p - b.v_);
        if (s >= p)
            s -= p;
        return make(s, p);
    }

    friend Zp operator*(const Zp& a, const Zp& b) {
        std::uint64_t p = merged(a, b);
        if (p == 0)
            return Zp();
        return make(mulmod(a.v_, b.v_, p), p);
    }

    friend Zp operator/(const Zp& a, const Zp& b) {
        require(!b.is_zero(), ErrorKind::InternalInconsistency, "division by zero in F_p");
        std::uint64_t p = merged(a, b);
        return make(mulmod(a.v_, inverse(b.v_, p), p), p);
    }

    Zp operator-() const { return p_ == 0 ? Zp() : make(v_ == 0 ? 0 : p_ - v_, p_); }

    Zp& operator+=(const Zp& b) { return *this = *this + b; }
    Zp& operator-=(const Zp& b) { return *this = *this - b; }
    Zp& operator*=(const Zp& b) { return *this = *this * b; }

    friend bool operator==(const Zp& a, const Zp& b) {
        merged(a, b);  // moduli must be compatible
        return a.v_ == b.v_;
    }

private:
    static Zp make(std::uint64_t v, std::uint64_t p) {
        Zp z;
        z.v_ = v;
        z.p_ = p;
        return z;
    }

    static std::uint64_t merged(const Zp& a, const Zp& b) {
        if (a.p_ == 0)
            return b.p_;
        if (b.p_ == 0)
            return a.p_;
        require(a.p_ == b.p_, ErrorKind::FieldMismatch,
                "mixed moduli " + std::to_string(a.p_) + " and " + std::to_string(b.p_));
        return a.p_;
    }

    static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
    }

    static std::uint64_t inverse(std::uint64_t a, std::uint64_t p);

    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;  // 0 = zero scalar of an as-yet-unknown field
};

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Zp& x) { return x.is_zero(); }

/// Uniform scalar construction from small integers, used by generic module code.
template <typename K>
K make_scalar(const FieldSpec& field, std::int64_t value);

template <>
inline Rational make_scalar<Rational>(const FieldSpec&, std::int64_t value) {
    return Rational(static_cast<long>(value));
}

template <>
inline Zp make_scalar<Zp>(const FieldSpec& field, std::int64_t value) {
    require(field.kind == FieldSpec::Kind::PrimeField, ErrorKind::FieldMismatch,
            "Zp scalar requested for a non-prime field");
    return Zp(value, field.p);
}

template <typename K>
bool field_spec_matches(const FieldSpec& field);

template <>
inline bool field_spec_matches<Rational>(const FieldSpec& field) {
    return field.kind == FieldSpec::Kind::Rationals;
}

template <>
inline bool field_spec_matches<Zp>(const FieldSpec& field) {
    return field.kind == FieldSpec::Kind::PrimeField;
}

}  // namespace slp

#endif

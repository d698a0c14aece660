#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "field.hpp"

namespace ybx {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Exact field element. Rationals are kept in lowest terms with positive
// denominator (boost::cpp_rational guarantees this); prime-field residues
// are kept in [0, p). Scalars from different fields never combine; mixing
// is an error, not a coercion.
class Scalar {
public:
    static Scalar zero(const FieldDescriptor& fd) { return from_int(fd, 0); }
    static Scalar one(const FieldDescriptor& fd) { return from_int(fd, 1); }

    static Scalar from_int(const FieldDescriptor& fd, long long v) {
        Scalar s(fd);
        if (fd.is_rational())
            s.q_ = BigRational(v);
        else
            s.r_ = mod(BigInt(v), fd.modulus());
        return s;
    }

    static Scalar from_big(const FieldDescriptor& fd, const BigInt& v) {
        Scalar s(fd);
        if (fd.is_rational())
            s.q_ = BigRational(v);
        else
            s.r_ = mod(v, fd.modulus());
        return s;
    }

    // num/den in the declared field; den inverts modularly over GF(p).
    static Scalar fraction(const FieldDescriptor& fd, const BigInt& num, const BigInt& den) {
        if (den == 0)
            throw std::invalid_argument("scalar denominator is zero");
        return from_big(fd, num) / from_big(fd, den);
    }

    const FieldDescriptor& field() const { return fd_; }

    bool is_zero() const { return fd_.is_rational() ? q_ == 0 : r_ == 0; }
    bool is_one() const { return fd_.is_rational() ? q_ == 1 : r_ == 1; }

    Scalar operator+(const Scalar& o) const {
        check(o, "scalar +");
        Scalar s(fd_);
        if (fd_.is_rational())
            s.q_ = q_ + o.q_;
        else
            s.r_ = (r_ + o.r_) % fd_.modulus();
        return s;
    }

    Scalar operator-(const Scalar& o) const {
        check(o, "scalar -");
        Scalar s(fd_);
        if (fd_.is_rational())
            s.q_ = q_ - o.q_;
        else
            s.r_ = ((r_ - o.r_) % fd_.modulus() + fd_.modulus()) % fd_.modulus();
        return s;
    }

    Scalar operator-() const {
        Scalar s(fd_);
        if (fd_.is_rational())
            s.q_ = -q_;
        else
            s.r_ = r_ == 0 ? 0 : fd_.modulus() - r_;
        return s;
    }

    Scalar operator*(const Scalar& o) const {
        check(o, "scalar *");
        Scalar s(fd_);
        if (fd_.is_rational())
            s.q_ = q_ * o.q_;
        else
            s.r_ = (r_ * o.r_) % fd_.modulus();  // fits: residues < 2^31
        return s;
    }

    Scalar operator/(const Scalar& o) const {
        check(o, "scalar /");
        return *this * o.inverse();
    }

    Scalar inverse() const {
        if (is_zero())
            throw std::domain_error("division by zero scalar");
        Scalar s(fd_);
        if (fd_.is_rational()) {
            s.q_ = 1 / q_;
        } else {
            // extended Euclid; p prime guarantees the inverse exists
            std::int64_t p = fd_.modulus();
            std::int64_t t = 0, nt = 1, r = p, nr = r_;
            while (nr != 0) {
                std::int64_t q = r / nr;
                std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
                tmp = r - q * nr; r = nr; nr = tmp;
            }
            s.r_ = ((t % p) + p) % p;
        }
        return s;
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const {
        if (fd_ != o.fd_) return false;
        return fd_.is_rational() ? q_ == o.q_ : r_ == o.r_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // GF residue as an integer in [0, p).
    std::int64_t residue() const {
        if (!fd_.is_prime_field())
            throw std::logic_error("residue() on a rational scalar");
        return r_;
    }

    const BigRational& rational() const {
        if (!fd_.is_rational())
            throw std::logic_error("rational() on a prime-field scalar");
        return q_;
    }

    // Canonical text form: "3", "-1/2" over Q; the residue over GF(p).
    std::string str() const {
        if (fd_.is_prime_field())
            return std::to_string(r_);
        BigInt num = boost::multiprecision::numerator(q_);
        BigInt den = boost::multiprecision::denominator(q_);
        if (den == 1)
            return num.str();
        return num.str() + "/" + den.str();
    }

private:
    explicit Scalar(const FieldDescriptor& fd) : fd_(fd), q_(0), r_(0) {}

    void check(const Scalar& o, const char* where) const {
        require_same_field(fd_, o.fd_, where);
    }

    static std::int64_t mod(const BigInt& v, std::int64_t p) {
        BigInt r = v % p;
        if (r < 0) r += p;
        return static_cast<std::int64_t>(r);
    }

    FieldDescriptor fd_;
    BigRational q_;    // used when fd_ is Q
    std::int64_t r_;   // used when fd_ is GF(p)
};

// Parses an exact scalar string: optional sign, digits, optionally "/digits"
// (a second sign is accepted after the slash). Anything float-like is an error.
inline Scalar parse_scalar(const FieldDescriptor& fd, std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    std::string_view s = trim(text);
    if (s.empty())
        throw std::invalid_argument("empty scalar string");

    auto parse_int = [&](std::string_view part) -> BigInt {
        std::string_view digits = part;
        bool neg = false;
        if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) {
            neg = digits.front() == '-';
            digits.remove_prefix(1);
        }
        if (digits.empty())
            throw std::invalid_argument("malformed scalar \"" + std::string(text) + "\"");
        for (char c : digits)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("malformed scalar \"" + std::string(text) +
                                            "\" (exact integers or fractions only)");
        BigInt v{std::string(digits)};
        if (neg) v = -v;
        return v;
    };

    std::size_t slash = s.find('/');
    if (slash == std::string_view::npos)
        return Scalar::from_big(fd, parse_int(s));
    BigInt num = parse_int(trim(s.substr(0, slash)));
    BigInt den = parse_int(trim(s.substr(slash + 1)));
    return Scalar::fraction(fd, num, den);
}

}  // namespace ybx

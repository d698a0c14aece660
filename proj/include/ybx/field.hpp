#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ybx {

// Ground field of every scalar: the rationals, or a prime field GF(p).
// Moduli are capped below 2^31 so that a product of two reduced residues
// fits in int64_t before reduction.
class FieldDescriptor {
public:
    static FieldDescriptor rationals() { return FieldDescriptor{0}; }

    static FieldDescriptor prime_field(std::int64_t p) {
        if (p < 2)
            throw std::invalid_argument("prime field modulus must be at least 2");
        if (p >= (std::int64_t{1} << 31))
            throw std::invalid_argument("prime field modulus must be below 2^31");
        if (!is_prime(p))
            throw std::invalid_argument("prime field modulus " + std::to_string(p) +
                                        " is not prime");
        return FieldDescriptor{p};
    }

    bool is_rational() const { return p_ == 0; }
    bool is_prime_field() const { return p_ != 0; }

    std::int64_t modulus() const {
        if (p_ == 0)
            throw std::logic_error("rational field has no modulus");
        return p_;
    }

    // Characteristic: 0 for Q, p for GF(p).
    std::int64_t characteristic() const { return p_; }

    bool operator==(const FieldDescriptor& o) const { return p_ == o.p_; }
    bool operator!=(const FieldDescriptor& o) const { return p_ != o.p_; }

    std::string describe() const {
        return p_ == 0 ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
    }

private:
    explicit FieldDescriptor(std::int64_t p) : p_(p) {}

    static bool is_prime(std::int64_t n) {
        if (n < 2) return false;
        if (n % 2 == 0) return n == 2;
        for (std::int64_t d = 3; d * d <= n; d += 2)
            if (n % d == 0) return false;
        return true;
    }

    std::int64_t p_;  // 0 encodes Q
};

inline void require_same_field(const FieldDescriptor& a, const FieldDescriptor& b,
                               const char* where) {
    if (a != b)
        throw std::invalid_argument(std::string(where) + ": field mismatch (" +
                                    a.describe() + " vs " + b.describe() + ")");
}

}  // namespace ybx

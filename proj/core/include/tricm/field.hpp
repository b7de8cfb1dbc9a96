#pragma once

#include <cstdint>
#include <string>

namespace tricm {

bool is_prime(std::uint32_t n);

/// Coefficient field: the rationals (characteristic 0) or F_p, 2 <= p < 2^31.
class FieldSpec {
public:
    FieldSpec() = default;
    static FieldSpec rationals() { return FieldSpec(); }
    /// Throws std::invalid_argument unless p is a prime below 2^31.
    static FieldSpec prime(std::uint32_t p);
    /// 0 selects the rationals.
    static FieldSpec with_characteristic(std::uint32_t characteristic);

    std::uint32_t characteristic() const noexcept { return characteristic_; }
    bool is_rational() const noexcept { return characteristic_ == 0; }
    /// "Q" or "F_p".
    std::string name() const;

    friend bool operator==(FieldSpec, FieldSpec) = default;
    friend auto operator<=>(FieldSpec, FieldSpec) = default;

private:
    explicit FieldSpec(std::uint32_t p) : characteristic_(p) {}
    std::uint32_t characteristic_ = 0;
};

}  // namespace tricm

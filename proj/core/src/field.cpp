#include "tricm/field.hpp"

#include <stdexcept>

namespace tricm {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (p >= (std::uint32_t{1} << 31) || !is_prime(p))
        throw std::invalid_argument("characteristic " + std::to_string(p) + " is not a prime below 2^31");
    return FieldSpec(p);
}

FieldSpec FieldSpec::with_characteristic(std::uint32_t characteristic) {
    return characteristic == 0 ? rationals() : prime(characteristic);
}

std::string FieldSpec::name() const { return is_rational() ? "Q" : "F_" + std::to_string(characteristic_); }

}  // namespace tricm

#include "polite/big_count.hpp"

#include <limits>
#include <stdexcept>

namespace polite {

BigCount::BigCount(mpz_class v) : value_(std::move(v)) {
    if (sgn(value_) < 0) {
        throw std::domain_error("BigCount cannot be negative");
    }
}

BigCount BigCount::from_string(const std::string& digits) {
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("not a nonnegative decimal integer: '" + digits + "'");
    }
    return BigCount(mpz_class(digits, 10));
}

BigCount BigCount::pow2(std::uint64_t e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return BigCount(std::move(r));
}

bool BigCount::fits_u64() const {
    return mpz_sizeinbase(value_.get_mpz_t(), 2) <= 64;
}

std::uint64_t BigCount::to_u64() const {
    if (!fits_u64()) {
        throw std::overflow_error("BigCount does not fit into 64 bits");
    }
    // mpz_export avoids relying on sizeof(unsigned long) == 8
    std::uint64_t out = 0;
    std::size_t count = 0;
    mpz_export(&out, &count, -1, sizeof(out), 0, 0, value_.get_mpz_t());
    return out;
}

}  // namespace polite

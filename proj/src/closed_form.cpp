#include "polite/closed_form.hpp"

#include <stdexcept>
#include <string>

namespace polite {

namespace {

void require_positive(std::uint64_t p, std::uint64_t k) {
    if (p < 1 || k < 1) {
        throw std::invalid_argument("seat count and distance must be positive (p=" + std::to_string(p) +
                                    ", k=" + std::to_string(k) + ")");
    }
}

// Largest m with base * 2^m <= value, for value >= base >= 1.
std::uint32_t dyadic_floor(std::uint64_t value, std::uint64_t base) {
    std::uint32_t m = 0;
    std::uint64_t step = base;
    while (step <= value / 2) {
        step *= 2;
        ++m;
    }
    return m;
}

}  // namespace

DistanceQuery DistanceQuery::make(std::uint64_t p, std::uint64_t k) {
    require_positive(p, k);
    DistanceQuery q{p, k, std::nullopt};
    if (k >= 2 && p >= 1 + 2 * k) {
        q.band = m_index_general(p, k);
    } else if (k == 1 && p >= 4) {
        q.band = m_index_one(p);
    }
    return q;
}

std::uint32_t m_index_general(std::uint64_t p, std::uint64_t k) {
    if (k < 2 || p < 1 + 2 * k) {
        throw std::invalid_argument("m_index_general needs k >= 2 and p >= 1+2k (p=" + std::to_string(p) +
                                    ", k=" + std::to_string(k) + ")");
    }
    return dyadic_floor(p - 1, 2 * k);
}

std::uint32_t m_index_one(std::uint64_t p) {
    if (p < 4) {
        throw std::invalid_argument("m_index_one needs p >= 4 (p=" + std::to_string(p) + ")");
    }
    return dyadic_floor(p - 1, 3);
}

std::uint64_t b(std::uint64_t p, std::uint64_t k) {
    require_positive(p, k);
    if (k == 1) {
        if (p == 1) return 0;
        if (p == 2 || p == 3) return 1;
        const std::uint64_t w = std::uint64_t{1} << m_index_one(p);
        if (p <= 1 + w * 4) return 2 * w;
        return p - 1 - 2 * w;
    }

    if (p < k + 1) return 0;
    if (p == k + 1) return 1;
    if (p < 1 + 2 * k) return 0;

    const std::uint64_t w = std::uint64_t{1} << m_index_general(p, k);
    if (p <= 1 + w * (2 * k + 1)) return w;
    if (p <= 1 + w * (2 * k + 2)) return 1 + w * (2 * k + 2) - p;
    if (p <= 1 + w * (4 * k - 2)) return 0;
    return p - 1 - w * (4 * k - 2);
}

std::uint64_t d(std::uint64_t p, std::uint64_t k) {
    require_positive(p, k);
    if (k == 1) {
        if (p < 4) return 0;
        const std::uint64_t w = std::uint64_t{1} << m_index_one(p);
        if (p <= 1 + w * 4) return 1 + w * 4 - p;
        return p - 1 - w * 4;
    }

    if (p < 1 + 2 * k) return 0;

    const std::uint64_t w = std::uint64_t{1} << m_index_general(p, k);
    if (p <= 1 + w * (2 * k + 1)) return p - 1 - w * 2 * k;
    if (p <= 1 + w * (2 * k + 2)) return 1 + w * (2 * k + 2) - p;
    return 0;
}

}  // namespace polite

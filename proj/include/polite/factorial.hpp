#pragma once

#include <cstdint>
#include <mutex>
#include <vector>

#include "polite/big_count.hpp"

namespace polite {

/// Memoized exact factorials, shared across threads.
///
/// The table only grows; entries are never modified once written, so a
/// returned value stays valid regardless of concurrent growth.
class FactorialTable {
public:
    static FactorialTable& shared();

    BigCount operator()(std::uint64_t n);

private:
    std::mutex mutex_;
    std::vector<BigCount> table_{BigCount(1)};
};

/// n! via the shared table.
inline BigCount factorial(std::uint64_t n) { return FactorialTable::shared()(n); }

}  // namespace polite

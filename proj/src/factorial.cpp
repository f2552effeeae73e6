#include "polite/factorial.hpp"

namespace polite {

FactorialTable& FactorialTable::shared() {
    static FactorialTable instance;
    return instance;
}

BigCount FactorialTable::operator()(std::uint64_t n) {
    std::lock_guard lock(mutex_);
    while (table_.size() <= n) {
        const auto k = static_cast<std::uint64_t>(table_.size());
        table_.push_back(table_.back() * BigCount(k));
    }
    return table_[n];
}

}  // namespace polite

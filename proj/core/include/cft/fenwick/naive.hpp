#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "cft/contract.hpp"
#include "cft/fenwick/common.hpp"

namespace cft {

/// Reference implementation: stores the plain value list and answers every
/// query by scanning.  All bounds are always checked.
class NaiveFenwick {
public:
    explicit NaiveFenwick(std::uint64_t bound) : bound_(bound) {}

    NaiveFenwick(std::uint64_t bound, std::span<const std::uint64_t> values) : bound_(bound) {
        for (auto v : values) push(v);
    }

    std::size_t size() const noexcept { return values_.size(); }
    std::uint64_t bound() const noexcept { return bound_; }
    std::span<const std::uint64_t> values() const noexcept { return values_; }

    std::uint64_t prefix(std::size_t p) const {
        if (p > values_.size()) throw std::out_of_range("prefix: length exceeds size");
        std::uint64_t sum = 0;
        for (std::size_t i = 0; i < p; ++i) sum += values_[i];
        return sum;
    }

    FindResult find(std::uint64_t x) const {
        std::uint64_t sum = 0;
        std::size_t p = 0;
        while (p < values_.size() && sum + values_[p] <= x) sum += values_[p++];
        return {p, x - sum};
    }

    FindResult find_complement(std::uint64_t x) const {
        std::uint64_t sum = 0;
        std::size_t p = 0;
        while (p < values_.size() && sum + (bound_ - values_[p]) <= x) sum += bound_ - values_[p++];
        return {p, x - sum};
    }

    std::uint64_t get(std::size_t j) const {
        if (j == 0 || j > values_.size()) throw std::out_of_range("get: index outside [1..n]");
        return values_[j - 1];
    }

    void add(std::size_t j, std::int64_t delta) {
        if (j == 0 || j > values_.size()) throw std::out_of_range("add: index outside [1..n]");
        const auto updated = static_cast<std::int64_t>(values_[j - 1]) + delta;
        if (updated < 0 || static_cast<std::uint64_t>(updated) > bound_)
            throw contract_violation("add: value leaves [0, bound]");
        values_[j - 1] = static_cast<std::uint64_t>(updated);
    }

    void push(std::uint64_t v) {
        if (v > bound_) throw contract_violation("push: value exceeds bound");
        values_.push_back(v);
    }

    void pop() {
        if (values_.empty()) throw std::underflow_error("pop: empty tree");
        values_.pop_back();
    }

    std::size_t storage_bits() const noexcept { return values_.size() * kWordBits; }

private:
    std::uint64_t bound_;
    std::vector<std::uint64_t> values_;
};

}  // namespace cft

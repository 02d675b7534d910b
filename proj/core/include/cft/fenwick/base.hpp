#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "cft/bitops.hpp"
#include "cft/contract.hpp"
#include "cft/fenwick/common.hpp"

namespace cft {

/// Traversals shared by every layout.  All arithmetic is on classical
/// (1-based) node indices; the derived class maps an index to storage through
///
///   word_t node(std::size_t j, unsigned level) const;   // level == rho(j)
///   void   node_add(std::size_t j, unsigned level, word_t delta);  // modular add
///   void   append_node(std::size_t j, word_t value);    // j == size() + 1
///   void   drop_node(std::size_t j);                    // j == size()
template <class Derived>
class FenwickBase {
public:
    std::size_t size() const noexcept { return n_; }
    bool empty() const noexcept { return n_ == 0; }
    std::uint64_t bound() const noexcept { return bound_; }

    std::uint64_t prefix(std::size_t p) const {
        if (p > n_) throw std::out_of_range("prefix: length exceeds size");
        std::uint64_t sum = 0;
        for (; p != 0; p &= p - 1) sum += self().node(p, rho(p));
        return sum;
    }

    FindResult find(std::uint64_t x) const {
        if (n_ == 0) return {0, x};
        std::size_t p = 0;
        for (unsigned level = msb_nonzero(n_) + 1; level-- > 0;) {
            const std::size_t next = p + (std::size_t{1} << level);
            if (next > n_) continue;
            const std::uint64_t m = self().node(next, level);
            if (x >= m) {
                p = next;
                x -= m;
            }
        }
        return {p, x};
    }

    /// Predecessor search on p * bound - prefix(p).  Inside the descent p is a
    /// multiple of 2q, so the node at p + q sits at level lg q.
    FindResult find_complement(std::uint64_t x) const {
        if (n_ == 0) return {0, x};
        std::size_t p = 0;
        for (unsigned level = msb_nonzero(n_) + 1; level-- > 0;) {
            const std::size_t next = p + (std::size_t{1} << level);
            if (next > n_) continue;
            const std::uint64_t m = (bound_ << level) - self().node(next, level);
            if (x >= m) {
                p = next;
                x -= m;
            }
        }
        return {p, x};
    }

    std::uint64_t get(std::size_t j) const {
        if (j == 0 || j > n_) throw std::out_of_range("get: index outside [1..n]");
        std::uint64_t value = self().node(j, rho(j));
        const std::size_t stop = j & (j - 1);
        for (std::size_t m = j - 1; m > stop; m &= m - 1) value -= self().node(m, rho(m));
        return value;
    }

    void add(std::size_t j, std::int64_t delta) {
        if (j == 0 || j > n_) throw std::out_of_range("add: index outside [1..n]");
        if constexpr (kChecked) {
            const auto updated = static_cast<std::int64_t>(get(j)) + delta;
            if (updated < 0 || static_cast<std::uint64_t>(updated) > bound_)
                detail::contract_failed("add: value leaves [0, bound]");
        }
        const auto d = static_cast<word_t>(delta);
        for (; j <= n_; j += j & (~j + 1)) self().node_add(j, rho(j), d);
    }

    /// Appends v; the new node covers (n + 1 - 2^rho(n + 1) .. n + 1].
    void push(std::uint64_t v) {
        CFT_EXPECTS(v <= bound_, "push: value exceeds bound");
        const std::size_t j = n_ + 1;
        std::uint64_t sum = v;
        const std::size_t stop = j & (j - 1);
        for (std::size_t m = j - 1; m > stop; m &= m - 1) sum += self().node(m, rho(m));
        self().append_node(j, sum);
        n_ = j;
    }

    /// Parents in the update tree have larger indices, so no other node changes.
    void pop() {
        if (n_ == 0) throw std::underflow_error("pop: empty tree");
        self().drop_node(n_);
        --n_;
    }

protected:
    explicit FenwickBase(std::uint64_t bound) : bound_(bound) {
        if (bound == 0) throw std::invalid_argument("Fenwick tree bound must be positive");
    }

    /// Bulk construction in linear time.
    void assign(std::span<const std::uint64_t> values) {
        std::vector<std::uint64_t> sums(values.begin(), values.end());
        const std::size_t n = sums.size();
        for (std::size_t j = 1; j <= n; ++j) {
            CFT_EXPECTS(values[j - 1] <= bound_, "construction: value exceeds bound");
            const std::size_t parent = j + (j & (~j + 1));
            if (parent <= n) sums[parent - 1] += sums[j - 1];
        }
        for (std::size_t j = 1; j <= n; ++j) {
            self().append_node(j, sums[j - 1]);
            n_ = j;
        }
    }

private:
    const Derived& self() const noexcept { return static_cast<const Derived&>(*this); }
    Derived& self() noexcept { return static_cast<Derived&>(*this); }

    std::uint64_t bound_;
    std::size_t n_ = 0;
};

}  // namespace cft

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "weelcp/lcp_sadakane.hpp"
#include "weelcp/lcp_wee.hpp"
#include "weelcp/text_index.hpp"

namespace weelcp {

/// Uniform handle over the three LCP representations.
class LcpAccessor {
public:
    virtual ~LcpAccessor() = default;
    virtual std::uint64_t size() const = 0;
    virtual std::uint64_t lcp(std::uint64_t i) const = 0;  // H[i], 1 <= i <= n
};

class PlainLcpAccessor final : public LcpAccessor {
public:
    explicit PlainLcpAccessor(const LcpArray& h) : h_(&h) {}
    std::uint64_t size() const override { return h_->n(); }
    std::uint64_t lcp(std::uint64_t i) const override { return h_->at(i); }

private:
    const LcpArray* h_;
};

class SadakaneLcpAccessor final : public LcpAccessor {
public:
    SadakaneLcpAccessor(const SadakaneLcp& d, const SuffixArray& sa) : d_(&d), sa_(&sa) {}
    std::uint64_t size() const override { return d_->text_length(); }
    std::uint64_t lcp(std::uint64_t i) const override { return d_->access_eq2(*sa_, i); }

private:
    const SadakaneLcp* d_;
    const SuffixArray* sa_;
};

class WeeLcpAccessor final : public LcpAccessor {
public:
    WeeLcpAccessor(const WeeLcp& w, const SuffixArray& sa, const Text& t)
        : w_(&w), sa_(&sa), t_(&t) {}
    std::uint64_t size() const override { return w_->text_length(); }
    std::uint64_t lcp(std::uint64_t i) const override { return w_->lcp_access(*sa_, *t_, i).length; }

private:
    const WeeLcp* w_;
    const SuffixArray* sa_;
    const Text* t_;
};

/// Rank interval of A standing for a suffix-tree node.
struct IntervalNode {
    std::uint64_t left = 0;
    std::uint64_t right = 0;
    std::uint64_t depth = 0;

    bool operator==(const IntervalNode&) const = default;
};

/// Range-minimum and previous/next-smaller-value queries over an LCP
/// accessor, block-decomposed at sqrt(n); demonstrates LCP-interval
/// navigation on top of any of the three representations.
class StNav {
public:
    explicit StNav(const LcpAccessor& acc);

    /// Smallest index attaining min H[l..r], ties leftmost; 2 <= l <= r <= n.
    std::uint64_t rmq(std::uint64_t l, std::uint64_t r) const;

    /// Largest j < i with H[j] < H[i]; 2 <= i <= n.
    std::optional<std::uint64_t> psv(std::uint64_t i) const;

    /// Smallest j > i with H[j] < H[i]; 2 <= i <= n.
    std::optional<std::uint64_t> nsv(std::uint64_t i) const;

    /// Enclosing LCP-interval of strictly smaller depth; none for the root.
    std::optional<IntervalNode> parent_interval(const IntervalNode& node) const;

private:
    const LcpAccessor* acc_;
    std::uint64_t n_ = 0;
    std::uint64_t block_ = 1;
    std::vector<std::uint64_t> block_min_;      // min H over each block
    std::vector<std::uint64_t> block_argmin_;   // leftmost index attaining it

    // largest j <= i with H[j] < bound (j >= 1), or none
    std::optional<std::uint64_t> prev_below(std::uint64_t i, std::uint64_t bound) const;
    // smallest j >= i with H[j] < bound (j <= n), or none
    std::optional<std::uint64_t> next_below(std::uint64_t i, std::uint64_t bound) const;
};

}  // namespace weelcp

#include "weelcp/st_nav.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace weelcp {

StNav::StNav(const LcpAccessor& acc) : acc_(&acc), n_(acc.size()) {
    block_ = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n_ + 1))));
    std::uint64_t nb = n_ / block_ + 1;
    block_min_.assign(nb, std::numeric_limits<std::uint64_t>::max());
    block_argmin_.assign(nb, 0);
    for (std::uint64_t i = 1; i <= n_; ++i) {
        std::uint64_t v = acc.lcp(i);
        std::uint64_t b = i / block_;
        if (v < block_min_[b]) {
            block_min_[b] = v;
            block_argmin_[b] = i;
        }
    }
}

std::uint64_t StNav::rmq(std::uint64_t l, std::uint64_t r) const {
    if (l < 2 || l > r || r > n_) throw std::out_of_range("StNav::rmq: bad range");
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t arg = l;
    std::uint64_t i = l;
    while (i <= r) {
        std::uint64_t b = i / block_;
        std::uint64_t bend = (b + 1) * block_ - 1;
        if (i % block_ == 0 && bend <= r) {
            if (block_min_[b] < best) {
                best = block_min_[b];
                arg = block_argmin_[b];
            }
            i = bend + 1;
        } else {
            std::uint64_t v = acc_->lcp(i);
            if (v < best) {
                best = v;
                arg = i;
            }
            ++i;
        }
    }
    return arg;
}

std::optional<std::uint64_t> StNav::prev_below(std::uint64_t i, std::uint64_t bound) const {
    if (i < 1) return std::nullopt;
    std::uint64_t b = i / block_;
    std::uint64_t start = std::max<std::uint64_t>(b * block_, 1);
    for (std::uint64_t j = i; j >= start; --j)
        if (acc_->lcp(j) < bound) return j;
    // skip whole blocks by their minima
    while (b > 0) {
        --b;
        if (block_min_[b] < bound) {
            std::uint64_t lo = std::max<std::uint64_t>(b * block_, 1);
            for (std::uint64_t j = (b + 1) * block_ - 1; j >= lo; --j)
                if (acc_->lcp(j) < bound) return j;
        }
    }
    return std::nullopt;
}

std::optional<std::uint64_t> StNav::next_below(std::uint64_t i, std::uint64_t bound) const {
    std::uint64_t j = i;
    // finish the current block
    std::uint64_t b = j / block_;
    std::uint64_t bend = std::min((b + 1) * block_ - 1, n_);
    for (; j <= bend; ++j)
        if (acc_->lcp(j) < bound) return j;
    // skip blocks by their minima
    for (++b; b < block_min_.size(); ++b) {
        if (block_min_[b] >= bound) continue;
        std::uint64_t end = std::min((b + 1) * block_ - 1, n_);
        for (j = b * block_; j <= end; ++j)
            if (acc_->lcp(j) < bound) return j;
    }
    return std::nullopt;
}

std::optional<std::uint64_t> StNav::psv(std::uint64_t i) const {
    if (i < 2 || i > n_) throw std::out_of_range("StNav::psv: index out of range");
    return prev_below(i - 1, acc_->lcp(i));
}

std::optional<std::uint64_t> StNav::nsv(std::uint64_t i) const {
    if (i < 2 || i > n_) throw std::out_of_range("StNav::nsv: index out of range");
    if (i == n_) return std::nullopt;
    return next_below(i + 1, acc_->lcp(i));
}

std::optional<IntervalNode> StNav::parent_interval(const IntervalNode& node) const {
    if (node.left < 1 || node.right > n_ || node.left > node.right)
        throw std::out_of_range("StNav::parent_interval: bad interval");
    if (node.left == 1 && node.right == n_) return std::nullopt;  // root

    // boundary depths; a missing boundary never wins the max
    bool has_l = node.left >= 2;
    bool has_r = node.right + 1 <= n_;
    std::uint64_t dl = has_l ? acc_->lcp(node.left) : 0;
    std::uint64_t dr = has_r ? acc_->lcp(node.right + 1) : 0;

    std::uint64_t pd;
    if (has_l && has_r)
        pd = std::max(dl, dr);
    else if (has_l)
        pd = dl;
    else
        pd = dr;

    IntervalNode parent;
    parent.depth = pd;
    if (has_l && dl >= pd)
        parent.left = prev_below(node.left - 1, pd).value_or(1);
    else
        parent.left = node.left;
    if (has_r && dr >= pd) {
        auto j = next_below(node.right + 1, pd);
        parent.right = j ? *j - 1 : n_;
    } else {
        parent.right = node.right;
    }
    return parent;
}

}  // namespace weelcp

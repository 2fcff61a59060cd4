#pragma once

#include <cstdint>
#include <istream>
#include <ostream>

#include "weelcp/bitvec.hpp"
#include "weelcp/space_report.hpp"
#include "weelcp/text_index.hpp"

namespace weelcp {

/// Fixed-width packed integer array; backing store for the relative tables.
class PackedIntVector {
public:
    PackedIntVector() = default;
    explicit PackedIntVector(unsigned width) : width_(width) {}

    unsigned width() const { return width_; }
    std::uint64_t size() const { return size_; }
    std::uint64_t bits() const { return size_ * width_; }

    void push_back(std::uint64_t value);
    std::uint64_t get(std::uint64_t index) const;  // 0-based

    void serialize(std::ostream& os) const;
    static PackedIntVector deserialize(std::istream& is);

private:
    std::vector<std::uint64_t> words_;
    std::uint64_t size_ = 0;
    unsigned width_ = 0;
};

/// Sampling parameters for the wee structure.
///   kappa  : 1-bits per block
///   lambda : 1-bits per miniblock
///   s      : span threshold (in S positions) above which a miniblock is
///            long; also bounds the slack of approximate answers and the
///            number of text comparisons per access
///   delta  : exponent used by the derived default for s
struct WeeParams {
    std::uint64_t kappa = 0;
    std::uint64_t lambda = 0;
    std::uint64_t s = 0;
    double delta = 0.5;

    /// Derived defaults: kappa ~ floor(log2(n)^2) rounded up so that lambda
    /// divides it, lambda ~ floor(log2(kappa)^2), s ~ ceil(lambda *
    /// log2(n)^delta). Floors keep the structure total for tiny n.
    static WeeParams defaults_for(std::uint64_t n, double delta = 0.5);

    /// Normalizes kappa to a multiple of lambda (miniblocks then nest in
    /// blocks exactly) and checks the invariants; throws
    /// std::invalid_argument on violation.
    WeeParams normalized() const;
};

/// Approximate select answer: value <= select1(S, j) <= value + slack.
struct ApproxSelect {
    std::uint64_t value = 0;
    bool exact = false;
    std::uint64_t slack = 0;  // 0 when exact, <= s otherwise
};

/// Outcome of one LCP access, with instrumentation.
struct LcpResult {
    std::uint64_t length = 0;
    std::uint64_t char_comparisons = 0;  // <= s; 0 on the exact path
    std::uint64_t word_ops = 0;          // comparison operations performed
    bool exact = false;
};

/// The o(n)-bit LCP structure: sampled select tables over the differential
/// unary encoding S of the LCP array. S itself is NOT stored; inexact
/// select answers are repaired by comparing at most s text characters.
class WeeLcp {
public:
    WeeLcp() = default;

    static WeeLcp build(const LcpArray& h, const SuffixArray& sa, WeeParams params);
    static WeeLcp build(const LcpArray& h, const SuffixArray& sa) {
        return build(h, sa, WeeParams::defaults_for(h.n()));
    }

    /// Lower bound (or exact answer) for select1(S, j), 1 <= j <= n.
    ApproxSelect approx_select(std::uint64_t j) const;

    /// H[i], exactly; repairs approximate selects against the text.
    LcpResult lcp_access(const SuffixArray& sa, const Text& t, std::uint64_t i) const;

    /// Same contract and result as lcp_access, but the verification loop
    /// compares 8-byte chunks and finalizes bytewise at the first
    /// differing chunk.
    LcpResult lcp_access_packed(const SuffixArray& sa, const Text& t, std::uint64_t i) const;

    const WeeParams& params() const { return params_; }
    std::uint64_t text_length() const { return n_; }
    std::uint64_t encoded_length() const { return s_len_; }  // |S|

    SpaceReport space_report() const;

    void serialize(std::ostream& os) const;
    static WeeLcp deserialize(std::istream& is);

private:
    std::uint64_t num_blocks() const;
    std::uint64_t num_miniblocks() const;
    bool block_is_long(std::uint64_t b) const;  // 0-based block index
    std::uint64_t block_start(std::uint64_t b) const;
    std::uint64_t select_from_long_block(std::uint64_t b, std::uint64_t arg) const;
    std::uint64_t boundary_select(std::uint64_t m) const;  // select1(S, min(m*lambda, n))
    void validate_tables() const;

    WeeParams params_;
    std::uint64_t n_ = 0;      // ones in S (= text length)
    std::uint64_t s_len_ = 0;  // |S|

    std::vector<std::uint64_t> block_samples_;  // N: select1(S, min(b*kappa, n)), b = 1..B
    BitVector long_block_flags_;                // bit b+1 set iff block b is long
    RankSelectSupport long_block_rank_;
    std::vector<std::uint64_t> long_block_answers_;  // P: absolute, kappa per long block

    BitVector mini_in_short_flags_;  // bit m set iff boundary m lies in a short block
    RankSelectSupport mini_in_short_rank_;
    PackedIntVector mini_samples_;  // N': boundary selects relative to block start

    BitVector long_mini_flags_;  // bit m+1 set iff miniblock m is long and in a short block
    RankSelectSupport long_mini_rank_;
    PackedIntVector long_mini_answers_;  // P': relative to block start, lambda per long miniblock
};

}  // namespace weelcp

#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

namespace weelcp {

/// Packed bit-string S[1..L]. Positions are 1-based at the API surface.
/// Contents are frozen once a RankSelectSupport has been built over it.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::uint64_t length);

    /// Parses a string of '0'/'1' characters, leftmost character = position 1.
    static BitVector from_string(std::string_view bits);

    std::uint64_t size() const { return len_; }

    bool get(std::uint64_t pos) const;          // 1 <= pos <= L
    void set(std::uint64_t pos, bool value);    // 1 <= pos <= L
    void append(bool value);
    void append_zeros(std::uint64_t count);

    std::uint64_t popcount() const;

    const std::vector<std::uint64_t>& words() const { return words_; }

    /// Length as 64-bit LE, then the payload packed 64 bits per word, LE,
    /// zero-padded. Support structures are never serialized.
    void serialize(std::ostream& os) const;
    static BitVector deserialize(std::istream& is);

    bool operator==(const BitVector&) const = default;

private:
    std::vector<std::uint64_t> words_;
    std::uint64_t len_ = 0;
};

struct RankSelectParams {
    std::uint64_t superblock_bits = 4096;  // absolute rank sample spacing
    std::uint64_t block_bits = 64;         // relative rank sample spacing
    std::uint64_t select_sample = 8192;    // record every K-th 1 (and 0)
};

/// Rank/select acceleration over an immutable BitVector. The support holds
/// only samples; queries take the (unchanged) vector as an argument.
class RankSelectSupport {
public:
    RankSelectSupport() = default;
    explicit RankSelectSupport(const BitVector& v, RankSelectParams params = {});

    /// Number of 1-bits in v[1..i], 0 <= i <= L. rank at i=0 is 0.
    std::uint64_t rank1(const BitVector& v, std::uint64_t i) const;
    std::uint64_t rank0(const BitVector& v, std::uint64_t i) const;

    /// Position of the q-th 1 (resp. 0), 1 <= q <= popcount (resp. zerocount).
    std::uint64_t select1(const BitVector& v, std::uint64_t q) const;
    std::uint64_t select0(const BitVector& v, std::uint64_t q) const;

    std::uint64_t ones() const { return ones_; }
    std::uint64_t zeros() const { return len_ - ones_; }

    /// Bits occupied by the sample tables (excludes the vector itself).
    std::uint64_t overhead_bits() const;

    const RankSelectParams& params() const { return params_; }

private:
    std::uint64_t select_generic(const BitVector& v, std::uint64_t q, bool one) const;

    RankSelectParams params_;
    std::uint64_t len_ = 0;
    std::uint64_t ones_ = 0;
    std::vector<std::uint64_t> super_rank_;   // absolute count of 1s before each superblock
    std::vector<std::uint16_t> block_rank_;   // count of 1s from superblock start to block start
    std::vector<std::uint64_t> select1_samples_;  // position of the (t*K)-th 1, t = 1,2,...
    std::vector<std::uint64_t> select0_samples_;
};

/// Convenience pair used by callers that own both pieces.
RankSelectSupport build_support(const BitVector& v, RankSelectParams params = {});

}  // namespace weelcp

#pragma once

#include <cstdint>
#include <istream>
#include <ostream>

#include "weelcp/bitvec.hpp"
#include "weelcp/space_report.hpp"
#include "weelcp/text_index.hpp"

namespace weelcp {

/// Writes the LCP values, listed in text order, as the differential unary
/// code 0^{I[i]} 1 with I[i] = H[A^{-1}[i]] - H[A^{-1}[i-1]] + 1 (the value
/// preceding i = 1 is taken as 0). Throws std::runtime_error if a difference
/// is negative, which signals corrupted inputs.
BitVector write_differential_unary(const LcpArray& h, const SuffixArray& sa);

/// 2n + o(n)-bit LCP representation: the encoding bitvector S plus
/// rank/select support. Access needs A[i] and is provided through both
/// equivalent read formulas.
class SadakaneLcp {
public:
    SadakaneLcp() = default;

    static SadakaneLcp build(const LcpArray& h, const SuffixArray& sa);

    /// H[i] = rank0(S, select1(S, A[i])) - A[i]
    std::uint64_t access_eq1(const SuffixArray& sa, std::uint64_t i) const;

    /// H[i] = select1(S, A[i]) - 2 A[i]; the default access path.
    std::uint64_t access_eq2(const SuffixArray& sa, std::uint64_t i) const;

    std::uint64_t text_length() const { return n_; }
    const BitVector& bits() const { return s_; }
    const RankSelectSupport& support() const { return support_; }

    SpaceReport space_report() const;

    /// BitVector payload plus n; support is rebuilt on load.
    void serialize(std::ostream& os) const;
    static SadakaneLcp deserialize(std::istream& is);

private:
    BitVector s_;
    RankSelectSupport support_;
    std::uint64_t n_ = 0;
};

}  // namespace weelcp

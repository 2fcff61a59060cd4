#include "weelcp/lcp_sadakane.hpp"

#include <stdexcept>

#include "weelcp/serial_util.hpp"

namespace weelcp {

BitVector write_differential_unary(const LcpArray& h, const SuffixArray& sa) {
    const std::uint64_t n = h.n();
    if (sa.n() != n) throw std::invalid_argument("write_differential_unary: inconsistent inputs");
    BitVector s;
    std::uint64_t prev = 0;
    for (std::uint64_t j = 1; j <= n; ++j) {
        std::uint64_t cur = h.at(sa.rank_of(j));
        if (cur + 1 < prev)
            throw std::runtime_error("write_differential_unary: LCP drops by more than 1 in text "
                                     "order; inputs are corrupted");
        s.append_zeros(cur - prev + 1);
        s.append(true);
        prev = cur;
    }
    return s;
}

SadakaneLcp SadakaneLcp::build(const LcpArray& h, const SuffixArray& sa) {
    SadakaneLcp d;
    d.n_ = h.n();
    d.s_ = write_differential_unary(h, sa);
    d.support_ = RankSelectSupport(d.s_);
    return d;
}

std::uint64_t SadakaneLcp::access_eq1(const SuffixArray& sa, std::uint64_t i) const {
    if (i < 1 || i > n_) throw std::out_of_range("SadakaneLcp::access_eq1: index out of range");
    std::uint64_t j = sa.at(i);
    return support_.rank0(s_, support_.select1(s_, j)) - j;
}

std::uint64_t SadakaneLcp::access_eq2(const SuffixArray& sa, std::uint64_t i) const {
    if (i < 1 || i > n_) throw std::out_of_range("SadakaneLcp::access_eq2: index out of range");
    std::uint64_t j = sa.at(i);
    return support_.select1(s_, j) - 2 * j;
}

SpaceReport SadakaneLcp::space_report() const {
    SpaceReport r;
    r.n = n_;
    r.add("S", s_.size());
    r.add("rank_select_support", support_.overhead_bits());
    return r;
}

void SadakaneLcp::serialize(std::ostream& os) const {
    s_.serialize(os);
    detail::write_u64(os, n_);
}

SadakaneLcp SadakaneLcp::deserialize(std::istream& is) {
    SadakaneLcp d;
    d.s_ = BitVector::deserialize(is);
    d.n_ = detail::read_u64(is);
    d.support_ = RankSelectSupport(d.s_);
    if (d.support_.ones() != d.n_)
        throw std::runtime_error("SadakaneLcp::deserialize: ones(S) != n");
    return d;
}

}  // namespace weelcp

#include "weelcp/bitvec.hpp"

#include <bit>
#include <stdexcept>

#include "weelcp/serial_util.hpp"

namespace weelcp {

namespace {

inline std::uint64_t low_mask(std::uint64_t nbits) {
    return nbits >= 64 ? ~0ull : ((1ull << nbits) - 1);
}

// Position (0-based) of the q-th set bit in w, q >= 1.
inline unsigned select_in_word(std::uint64_t w, std::uint64_t q) {
    for (;;) {
        unsigned tz = static_cast<unsigned>(std::countr_zero(w));
        if (--q == 0) return tz;
        w &= w - 1;
    }
}

}  // namespace

BitVector::BitVector(std::uint64_t length) : words_((length + 63) / 64, 0), len_(length) {}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        char c = bits[i];
        if (c != '0' && c != '1') throw std::invalid_argument("BitVector::from_string: bad character");
        if (c == '1') v.set(i + 1, true);
    }
    return v;
}

bool BitVector::get(std::uint64_t pos) const {
    if (pos < 1 || pos > len_) throw std::out_of_range("BitVector::get: position out of range");
    std::uint64_t i = pos - 1;
    return (words_[i / 64] >> (i % 64)) & 1ull;
}

void BitVector::set(std::uint64_t pos, bool value) {
    if (pos < 1 || pos > len_) throw std::out_of_range("BitVector::set: position out of range");
    std::uint64_t i = pos - 1;
    std::uint64_t mask = 1ull << (i % 64);
    if (value)
        words_[i / 64] |= mask;
    else
        words_[i / 64] &= ~mask;
}

void BitVector::append(bool value) {
    if (len_ % 64 == 0) words_.push_back(0);
    ++len_;
    if (value) set(len_, true);
}

void BitVector::append_zeros(std::uint64_t count) {
    len_ += count;
    words_.resize((len_ + 63) / 64, 0);
}

std::uint64_t BitVector::popcount() const {
    std::uint64_t c = 0;
    for (auto w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
}

void BitVector::serialize(std::ostream& os) const {
    detail::write_u64(os, len_);
    for (auto w : words_) detail::write_u64(os, w);
}

BitVector BitVector::deserialize(std::istream& is) {
    std::uint64_t len = detail::read_u64(is);
    BitVector v(len);
    for (auto& w : v.words_) w = detail::read_u64(is);
    // padding bits beyond len must be zero
    if (len % 64 != 0 && !v.words_.empty() && (v.words_.back() & ~low_mask(len % 64)) != 0)
        throw std::runtime_error("BitVector::deserialize: nonzero padding");
    return v;
}

RankSelectSupport::RankSelectSupport(const BitVector& v, RankSelectParams params)
    : params_(params), len_(v.size()) {
    if (params_.block_bits == 0 || params_.block_bits % 64 != 0)
        throw std::invalid_argument("RankSelectSupport: block_bits must be a positive multiple of 64");
    if (params_.superblock_bits % params_.block_bits != 0)
        throw std::invalid_argument("RankSelectSupport: superblock_bits must be a multiple of block_bits");
    if (params_.superblock_bits - params_.block_bits > 0xffff)
        throw std::invalid_argument("RankSelectSupport: superblock too large for 16-bit block samples");
    if (params_.select_sample == 0)
        throw std::invalid_argument("RankSelectSupport: select_sample must be positive");

    const std::uint64_t bb = params_.block_bits;
    const std::uint64_t sb = params_.superblock_bits;
    const auto& words = v.words();

    std::uint64_t num_blocks = len_ / bb + 1;
    std::uint64_t num_super = len_ / sb + 1;
    block_rank_.resize(num_blocks);
    super_rank_.resize(num_super);

    std::uint64_t abs = 0, rel = 0, zeros_seen = 0;
    for (std::uint64_t b = 0; b < num_blocks; ++b) {
        std::uint64_t bit0 = b * bb;
        if (bit0 % sb == 0) {
            super_rank_[bit0 / sb] = abs;
            rel = 0;
        }
        block_rank_[b] = static_cast<std::uint16_t>(rel);
        // scan the bits of this block, sampling selects on the way
        std::uint64_t end = std::min(bit0 + bb, len_);
        for (std::uint64_t w = bit0 / 64; w * 64 < end; ++w) {
            std::uint64_t word = words[w];
            std::uint64_t nbits = std::min<std::uint64_t>(64, end - w * 64);
            if (nbits < 64) word &= low_mask(nbits);
            const std::uint64_t pc = static_cast<std::uint64_t>(std::popcount(word));
            std::uint64_t zc = nbits - pc;
            // record positions of every K-th one / zero crossing this word
            std::uint64_t k = params_.select_sample;
            std::uint64_t rem = pc;
            while (abs / k != (abs + rem) / k) {
                std::uint64_t target = (abs / k + 1) * k;
                select1_samples_.push_back(w * 64 + select_in_word(word, target - abs) + 1);
                std::uint64_t skip = target - abs;
                for (std::uint64_t t = 0; t < skip; ++t) word &= word - 1;
                rem -= skip;
                abs = target;
            }
            abs += rem;
            rel += pc;
            std::uint64_t zword = ~words[w] & low_mask(nbits);
            while (zeros_seen / k != (zeros_seen + zc) / k) {
                std::uint64_t target = (zeros_seen / k + 1) * k;
                select0_samples_.push_back(w * 64 + select_in_word(zword, target - zeros_seen) + 1);
                std::uint64_t skip = target - zeros_seen;
                for (std::uint64_t t = 0; t < skip; ++t) zword &= zword - 1;
                zc -= skip;
                zeros_seen = target;
            }
            zeros_seen += zc;
        }
    }
    ones_ = abs;
}

std::uint64_t RankSelectSupport::rank1(const BitVector& v, std::uint64_t i) const {
    if (i > len_) throw std::out_of_range("rank1: position out of range");
    if (i == 0) return 0;
    const std::uint64_t bb = params_.block_bits;
    std::uint64_t block = i / bb;
    std::uint64_t r = super_rank_[i / params_.superblock_bits] + block_rank_[block];
    const auto& words = v.words();
    std::uint64_t bit0 = block * bb;
    for (std::uint64_t w = bit0 / 64; w * 64 < i; ++w) {
        std::uint64_t word = words[w];
        std::uint64_t nbits = std::min<std::uint64_t>(64, i - w * 64);
        if (nbits < 64) word &= low_mask(nbits);
        r += static_cast<std::uint64_t>(std::popcount(word));
    }
    return r;
}

std::uint64_t RankSelectSupport::rank0(const BitVector& v, std::uint64_t i) const {
    return i - rank1(v, i);
}

std::uint64_t RankSelectSupport::select_generic(const BitVector& v, std::uint64_t q, bool one) const {
    std::uint64_t total = one ? ones_ : zeros();
    if (q < 1 || q > total)
        throw std::out_of_range(one ? "select1: rank out of range" : "select0: rank out of range");

    const auto& samples = one ? select1_samples_ : select0_samples_;
    const std::uint64_t k = params_.select_sample;
    std::uint64_t t = q / k;  // number of full samples at or before q
    std::uint64_t count = t * k;
    std::uint64_t pos = t == 0 ? 0 : samples[t - 1];  // 1-based position of count-th symbol
    if (count == q) return pos;

    const auto& words = v.words();
    // next candidate bit is position pos+1, i.e. 0-based index pos
    std::uint64_t w = pos / 64;
    std::uint64_t first = one ? words[w] : ~words[w];
    first &= ~low_mask(pos % 64);
    for (;;) {
        std::uint64_t nbits = std::min<std::uint64_t>(64, len_ - w * 64);
        std::uint64_t word = first & low_mask(nbits);
        std::uint64_t pc = static_cast<std::uint64_t>(std::popcount(word));
        if (count + pc >= q) return w * 64 + select_in_word(word, q - count) + 1;
        count += pc;
        ++w;
        first = one ? words[w] : ~words[w];
    }
}

std::uint64_t RankSelectSupport::select1(const BitVector& v, std::uint64_t q) const {
    return select_generic(v, q, true);
}

std::uint64_t RankSelectSupport::select0(const BitVector& v, std::uint64_t q) const {
    return select_generic(v, q, false);
}

std::uint64_t RankSelectSupport::overhead_bits() const {
    return super_rank_.size() * 64 + block_rank_.size() * 16 +
           (select1_samples_.size() + select0_samples_.size()) * 64;
}

RankSelectSupport build_support(const BitVector& v, RankSelectParams params) {
    return RankSelectSupport(v, params);
}

}  // namespace weelcp

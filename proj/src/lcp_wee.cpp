#include "weelcp/lcp_wee.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <stdexcept>

#include "weelcp/lcp_sadakane.hpp"
#include "weelcp/serial_util.hpp"

namespace weelcp {

void PackedIntVector::push_back(std::uint64_t value) {
    if (width_ == 0) throw std::logic_error("PackedIntVector: zero width");
    if (width_ < 64 && value >> width_ != 0)
        throw std::invalid_argument("PackedIntVector: value does not fit width");
    std::uint64_t bit = size_ * width_;
    std::uint64_t need = (bit + width_ + 63) / 64;
    if (words_.size() < need) words_.resize(need, 0);
    std::uint64_t w = bit / 64, off = bit % 64;
    words_[w] |= value << off;
    if (off + width_ > 64) words_[w + 1] |= value >> (64 - off);
    ++size_;
}

std::uint64_t PackedIntVector::get(std::uint64_t index) const {
    if (index >= size_) throw std::out_of_range("PackedIntVector::get: index out of range");
    std::uint64_t bit = index * width_;
    std::uint64_t w = bit / 64, off = bit % 64;
    std::uint64_t v = words_[w] >> off;
    if (off + width_ > 64) v |= words_[w + 1] << (64 - off);
    return width_ < 64 ? v & ((1ull << width_) - 1) : v;
}

void PackedIntVector::serialize(std::ostream& os) const {
    detail::write_u64(os, width_);
    detail::write_u64(os, size_);
    detail::write_u64_vec(os, words_);
}

PackedIntVector PackedIntVector::deserialize(std::istream& is) {
    PackedIntVector v;
    std::uint64_t w = detail::read_u64(is);
    if (w > 64) throw std::runtime_error("PackedIntVector::deserialize: bad width");
    v.width_ = static_cast<unsigned>(w);
    v.size_ = detail::read_u64(is);
    v.words_ = detail::read_u64_vec(is);
    if (v.width_ > 0 && v.words_.size() != (v.size_ * v.width_ + 63) / 64)
        throw std::runtime_error("PackedIntVector::deserialize: inconsistent payload");
    return v;
}

WeeParams WeeParams::defaults_for(std::uint64_t n, double delta) {
    double lg = std::log2(static_cast<double>(std::max<std::uint64_t>(n, 2)));
    WeeParams p;
    p.delta = delta;
    std::uint64_t kappa0 = std::max<std::uint64_t>(static_cast<std::uint64_t>(lg * lg), 4);
    double lgk = std::log2(static_cast<double>(kappa0));
    p.lambda = std::max<std::uint64_t>(static_cast<std::uint64_t>(lgk * lgk), 2);
    if (p.lambda > kappa0) p.lambda = kappa0;
    p.kappa = (kappa0 + p.lambda - 1) / p.lambda * p.lambda;
    // Threshold scaled by lambda: a miniblock holding lambda 1-bits spans at
    // least lambda positions, so the bare log^delta(n) threshold would make
    // every miniblock long at practical sizes.
    p.s = std::max<std::uint64_t>(
        static_cast<std::uint64_t>(std::ceil(static_cast<double>(p.lambda) * std::pow(lg, delta))),
        1);
    return p;
}

WeeParams WeeParams::normalized() const {
    WeeParams p = *this;
    if (p.kappa < 1 || p.lambda < 1 || p.s < 1)
        throw std::invalid_argument("WeeParams: kappa, lambda and s must be >= 1");
    if (p.lambda > p.kappa) p.lambda = p.kappa;
    p.kappa = (p.kappa + p.lambda - 1) / p.lambda * p.lambda;
    return p;
}

namespace {

inline unsigned relative_width(std::uint64_t kappa) {
    // entries are bounded by the span of a short block, i.e. kappa^2
    if (kappa >= (1ull << 32)) return 64;
    return static_cast<unsigned>(std::bit_width(kappa * kappa));
}

}  // namespace

std::uint64_t WeeLcp::num_blocks() const { return (n_ + params_.kappa - 1) / params_.kappa; }
std::uint64_t WeeLcp::num_miniblocks() const { return (n_ + params_.lambda - 1) / params_.lambda; }

bool WeeLcp::block_is_long(std::uint64_t b) const { return long_block_flags_.get(b + 1); }

std::uint64_t WeeLcp::block_start(std::uint64_t b) const {
    return b == 0 ? 0 : block_samples_[b - 1];
}

std::uint64_t WeeLcp::select_from_long_block(std::uint64_t b, std::uint64_t arg) const {
    std::uint64_t idx = long_block_rank_.rank1(long_block_flags_, b + 1) - 1;
    return long_block_answers_[idx * params_.kappa + (arg - b * params_.kappa) - 1];
}

std::uint64_t WeeLcp::boundary_select(std::uint64_t m) const {
    if (m == 0) return 0;
    std::uint64_t q = std::min(m * params_.lambda, n_);
    if (q % params_.kappa == 0) return block_samples_[q / params_.kappa - 1];
    std::uint64_t b = (q - 1) / params_.kappa;
    if (block_is_long(b)) return select_from_long_block(b, q);
    std::uint64_t idx = mini_in_short_rank_.rank1(mini_in_short_flags_, m) - 1;
    return block_start(b) + mini_samples_.get(idx);
}

WeeLcp WeeLcp::build(const LcpArray& h, const SuffixArray& sa, WeeParams params) {
    WeeLcp w;
    w.params_ = params.normalized();
    w.n_ = h.n();
    const std::uint64_t kappa = w.params_.kappa;
    const std::uint64_t lambda = w.params_.lambda;
    const std::uint64_t s = w.params_.s;

    // transient reference encoding; discarded once the tables are filled
    BitVector ref = write_differential_unary(h, sa);
    RankSelectSupport sup(ref);
    w.s_len_ = ref.size();
    const std::uint64_t n = w.n_;

    auto sel = [&](std::uint64_t q) -> std::uint64_t {
        return q == 0 ? 0 : sup.select1(ref, q);
    };
    // boundary position for argument x on the extended scale: arguments past
    // the last 1 map to |S| + 1, so trailing partial (mini)blocks classify
    // by their true span
    auto ext = [&](std::uint64_t x) -> std::uint64_t {
        return x > n ? w.s_len_ + 1 : sel(x);
    };

    const std::uint64_t nb = w.num_blocks();
    const std::uint64_t nm = w.num_miniblocks();
    const unsigned rel_width = relative_width(kappa);

    w.block_samples_.reserve(nb);
    for (std::uint64_t b = 1; b <= nb; ++b)
        w.block_samples_.push_back(sel(std::min(b * kappa, n)));

    w.long_block_flags_ = BitVector(nb);
    for (std::uint64_t b = 0; b < nb; ++b) {
        std::uint64_t span = ext((b + 1) * kappa) - (b == 0 ? 0 : sel(b * kappa));
        if (span > kappa * kappa) {
            w.long_block_flags_.set(b + 1, true);
            for (std::uint64_t arg = b * kappa + 1; arg <= std::min((b + 1) * kappa, n); ++arg)
                w.long_block_answers_.push_back(sel(arg));
        }
    }
    w.long_block_rank_ = RankSelectSupport(w.long_block_flags_);

    w.mini_in_short_flags_ = BitVector(nm);
    w.mini_samples_ = PackedIntVector(rel_width);
    for (std::uint64_t m = 1; m <= nm; ++m) {
        std::uint64_t q = std::min(m * lambda, n);
        std::uint64_t b = (q - 1) / kappa;
        if (!w.long_block_flags_.get(b + 1)) {
            w.mini_in_short_flags_.set(m, true);
            w.mini_samples_.push_back(sel(q) - w.block_start(b));
        }
    }
    w.mini_in_short_rank_ = RankSelectSupport(w.mini_in_short_flags_);

    w.long_mini_flags_ = BitVector(nm);
    w.long_mini_answers_ = PackedIntVector(rel_width);
    for (std::uint64_t m = 0; m < nm; ++m) {
        std::uint64_t b = (m * lambda) / kappa;  // miniblocks nest in blocks
        if (w.long_block_flags_.get(b + 1)) continue;  // resolved through P
        std::uint64_t span = ext((m + 1) * lambda) - (m == 0 ? 0 : sel(m * lambda));
        if (span > s) {
            w.long_mini_flags_.set(m + 1, true);
            for (std::uint64_t arg = m * lambda + 1; arg <= std::min((m + 1) * lambda, n); ++arg)
                w.long_mini_answers_.push_back(sel(arg) - w.block_start(b));
        }
    }
    w.long_mini_rank_ = RankSelectSupport(w.long_mini_flags_);

    w.validate_tables();
    return w;
}

ApproxSelect WeeLcp::approx_select(std::uint64_t j) const {
    if (j < 1 || j > n_) throw std::out_of_range("WeeLcp::approx_select: rank out of range");
    const std::uint64_t kappa = params_.kappa;
    const std::uint64_t lambda = params_.lambda;

    std::uint64_t b = (j - 1) / kappa;
    if (block_is_long(b)) return {select_from_long_block(b, j), true, 0};

    if (j % lambda == 0) return {boundary_select(j / lambda), true, 0};

    std::uint64_t m = j / lambda;
    std::uint64_t a = boundary_select(m);
    std::uint64_t bpos = (m + 1) * lambda > n_ ? s_len_ + 1 : boundary_select(m + 1);
    if (bpos - a > params_.s) {
        // long miniblock inside a short block: exact answer from P'
        std::uint64_t idx = long_mini_rank_.rank1(long_mini_flags_, m + 1) - 1;
        std::uint64_t rel = long_mini_answers_.get(idx * lambda + (j - m * lambda) - 1);
        return {block_start(b) + rel, true, 0};
    }
    return {a, false, bpos - a};
}

namespace {

struct VerifyCounters {
    std::uint64_t chars = 0;
    std::uint64_t words = 0;
};

std::uint64_t verify_bytewise(const Text& t, std::uint64_t j, std::uint64_t jp, std::uint64_t m,
                              VerifyCounters& c) {
    std::uint64_t len = m;
    const std::uint8_t* d = t.data.data();
    for (;;) {
        ++c.chars;
        ++c.words;
        if (d[j + len - 1] != d[jp + len - 1]) return len;
        ++len;
    }
}

std::uint64_t verify_packed(const Text& t, std::uint64_t j, std::uint64_t jp, std::uint64_t m,
                            VerifyCounters& c) {
    std::uint64_t len = m;
    const std::uint8_t* d = t.data.data();
    const std::uint64_t n = t.n();
    // both byte positions stay in range until the mismatch, which occurs no
    // later than where the shorter suffix reaches the sentinel
    const std::uint64_t avail = n + 1 - std::max(j, jp);
    while (avail - len >= 8) {
        std::uint64_t w1, w2;
        std::memcpy(&w1, d + j + len - 1, 8);
        std::memcpy(&w2, d + jp + len - 1, 8);
        ++c.words;
        if (w1 == w2) {
            len += 8;
            continue;
        }
        for (;;) {
            ++c.chars;
            ++c.words;
            if (d[j + len - 1] != d[jp + len - 1]) return len;
            ++len;
        }
    }
    for (;;) {
        ++c.chars;
        ++c.words;
        if (d[j + len - 1] != d[jp + len - 1]) return len;
        ++len;
    }
}

}  // namespace

LcpResult WeeLcp::lcp_access(const SuffixArray& sa, const Text& t, std::uint64_t i) const {
    if (i < 1 || i > n_) throw std::out_of_range("WeeLcp::lcp_access: index out of range");
    if (i == 1) return {0, 0, 0, true};
    std::uint64_t j = sa.at(i);
    ApproxSelect r = approx_select(j);
    if (r.exact) return {r.value - 2 * j, 0, 0, true};
    std::uint64_t jp = sa.at(i - 1);
    std::uint64_t m = r.value > 2 * j ? r.value - 2 * j : 0;
    VerifyCounters c;
    std::uint64_t len = verify_bytewise(t, j, jp, m, c);
    return {len, c.chars, c.words, false};
}

LcpResult WeeLcp::lcp_access_packed(const SuffixArray& sa, const Text& t, std::uint64_t i) const {
    if (i < 1 || i > n_) throw std::out_of_range("WeeLcp::lcp_access_packed: index out of range");
    if (i == 1) return {0, 0, 0, true};
    std::uint64_t j = sa.at(i);
    ApproxSelect r = approx_select(j);
    if (r.exact) return {r.value - 2 * j, 0, 0, true};
    std::uint64_t jp = sa.at(i - 1);
    std::uint64_t m = r.value > 2 * j ? r.value - 2 * j : 0;
    VerifyCounters c;
    std::uint64_t len = verify_packed(t, j, jp, m, c);
    return {len, c.chars, c.words, false};
}

SpaceReport WeeLcp::space_report() const {
    SpaceReport r;
    r.n = n_;
    r.add("N", block_samples_.size() * 64);
    r.add("P", long_block_answers_.size() * 64);
    r.add("N_prime", mini_samples_.bits());
    r.add("P_prime", long_mini_answers_.bits());
    r.add("directories", long_block_flags_.size() + mini_in_short_flags_.size() +
                             long_mini_flags_.size() + long_block_rank_.overhead_bits() +
                             mini_in_short_rank_.overhead_bits() + long_mini_rank_.overhead_bits());
    return r;
}

void WeeLcp::validate_tables() const {
    std::uint64_t prev = 0;
    for (auto v : block_samples_) {
        if (v <= prev) throw std::runtime_error("WeeLcp: N table not strictly increasing");
        if (v > s_len_) throw std::runtime_error("WeeLcp: N table exceeds |S|");
        prev = v;
    }
    if (n_ > 0 && (block_samples_.empty() || block_samples_.back() != s_len_))
        throw std::runtime_error("WeeLcp: N table missing terminal boundary");
    if (long_block_flags_.size() != num_blocks() || long_mini_flags_.size() != num_miniblocks() ||
        mini_in_short_flags_.size() != num_miniblocks())
        throw std::runtime_error("WeeLcp: directory sizes inconsistent");
}

void WeeLcp::serialize(std::ostream& os) const {
    detail::write_tag(os, "WEETBL01");
    detail::write_u64(os, params_.kappa);
    detail::write_u64(os, params_.lambda);
    detail::write_u64(os, params_.s);
    detail::write_u64(os, std::bit_cast<std::uint64_t>(params_.delta));
    detail::write_u64(os, n_);
    detail::write_u64(os, s_len_);
    detail::write_u64_vec(os, block_samples_);
    long_block_flags_.serialize(os);
    detail::write_u64_vec(os, long_block_answers_);
    mini_in_short_flags_.serialize(os);
    mini_samples_.serialize(os);
    long_mini_flags_.serialize(os);
    long_mini_answers_.serialize(os);
}

WeeLcp WeeLcp::deserialize(std::istream& is) {
    detail::expect_tag(is, "WEETBL01");
    WeeLcp w;
    w.params_.kappa = detail::read_u64(is);
    w.params_.lambda = detail::read_u64(is);
    w.params_.s = detail::read_u64(is);
    w.params_.delta = std::bit_cast<double>(detail::read_u64(is));
    w.params_ = w.params_.normalized();
    w.n_ = detail::read_u64(is);
    w.s_len_ = detail::read_u64(is);
    w.block_samples_ = detail::read_u64_vec(is);
    w.long_block_flags_ = BitVector::deserialize(is);
    w.long_block_answers_ = detail::read_u64_vec(is);
    w.mini_in_short_flags_ = BitVector::deserialize(is);
    w.mini_samples_ = PackedIntVector::deserialize(is);
    w.long_mini_flags_ = BitVector::deserialize(is);
    w.long_mini_answers_ = PackedIntVector::deserialize(is);
    w.long_block_rank_ = RankSelectSupport(w.long_block_flags_);
    w.mini_in_short_rank_ = RankSelectSupport(w.mini_in_short_flags_);
    w.long_mini_rank_ = RankSelectSupport(w.long_mini_flags_);
    w.validate_tables();
    return w;
}

}  // namespace weelcp

#include "weelcp/text_index.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "weelcp/serial_util.hpp"

namespace weelcp {

std::uint8_t Text::at(std::uint64_t i) const {
    if (i < 1 || i > n()) throw std::out_of_range("Text::at: position out of range");
    return data[i - 1];
}

void Text::serialize(std::ostream& os) const {
    detail::write_u64(os, n());
    os.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
}

Text Text::deserialize(std::istream& is) {
    std::uint64_t n = detail::read_u64(is);
    Text t;
    t.data.resize(n);
    is.read(reinterpret_cast<char*>(t.data.data()), static_cast<std::streamsize>(n));
    if (!is) throw std::runtime_error("Text::deserialize: truncated payload");
    if (n == 0 || t.data.back() != 0)
        throw std::runtime_error("Text::deserialize: missing sentinel");
    std::array<bool, 256> seen{};
    for (std::size_t i = 0; i + 1 < t.data.size(); ++i) {
        if (t.data[i] == 0) throw std::runtime_error("Text::deserialize: embedded sentinel");
        seen[t.data[i]] = true;
    }
    t.sigma = 1 + static_cast<std::uint32_t>(std::count(seen.begin(), seen.end(), true));
    return t;
}

Text load_text(std::span<const std::uint8_t> raw) {
    Text t;
    t.data.reserve(raw.size() + 1);
    std::array<bool, 256> seen{};
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] == 0)
            throw std::invalid_argument("load_text: embedded sentinel byte 0x00 at offset " +
                                        std::to_string(i));
        seen[raw[i]] = true;
        t.data.push_back(raw[i]);
    }
    t.data.push_back(0);  // sentinel
    t.sigma = 1 + static_cast<std::uint32_t>(std::count(seen.begin(), seen.end(), true));
    return t;
}

Text load_text(std::string_view raw) {
    return load_text(std::span<const std::uint8_t>(
        reinterpret_cast<const std::uint8_t*>(raw.data()), raw.size()));
}

Text load_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("load_text_file: cannot open " + path);
    std::vector<std::uint8_t> raw((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
    return load_text(std::span<const std::uint8_t>(raw));
}

std::uint64_t SuffixArray::at(std::uint64_t i) const {
    if (i < 1 || i > n()) throw std::out_of_range("SuffixArray::at: rank out of range");
    return a[i - 1];
}

std::uint64_t SuffixArray::rank_of(std::uint64_t j) const {
    if (j < 1 || j > n()) throw std::out_of_range("SuffixArray::rank_of: position out of range");
    return ainv[j - 1];
}

void SuffixArray::serialize(std::ostream& os) const {
    detail::write_tag(os, "SUFA");
    detail::write_u64(os, n());
    for (auto x : a) detail::write_u64(os, x);
}

SuffixArray SuffixArray::deserialize(std::istream& is) {
    detail::expect_tag(is, "SUFA");
    std::uint64_t n = detail::read_u64(is);
    SuffixArray sa;
    sa.a.resize(n);
    for (auto& x : sa.a) x = detail::read_u64(is);
    sa.ainv.assign(n, 0);
    std::vector<bool> seen(n, false);
    for (std::uint64_t i = 0; i < n; ++i) {
        std::uint64_t p = sa.a[i];
        if (p < 1 || p > n || seen[p - 1])
            throw std::runtime_error("SuffixArray::deserialize: not a permutation");
        seen[p - 1] = true;
        sa.ainv[p - 1] = i + 1;
    }
    return sa;
}

std::uint64_t LcpArray::at(std::uint64_t i) const {
    if (i < 1 || i > n()) throw std::out_of_range("LcpArray::at: index out of range");
    return h[i - 1];
}

void LcpArray::serialize(std::ostream& os) const {
    detail::write_tag(os, "LCPA");
    detail::write_u64(os, n());
    for (auto x : h) detail::write_u64(os, x);
}

LcpArray LcpArray::deserialize(std::istream& is) {
    detail::expect_tag(is, "LCPA");
    std::uint64_t n = detail::read_u64(is);
    LcpArray l;
    l.h.resize(n);
    for (auto& x : l.h) x = detail::read_u64(is);
    return l;
}

SuffixArray build_suffix_array(const Text& t) {
    const std::uint64_t n = t.n();
    SuffixArray sa;
    sa.a.resize(n);
    sa.ainv.resize(n);

    // rank[i] = bucket of suffix i under the current prefix length
    std::vector<std::uint64_t> rank(n), tmp(n), order(n), cnt;

    for (std::uint64_t i = 0; i < n; ++i) rank[i] = t.data[i];

    auto counting_sort = [&](const std::vector<std::uint64_t>& keys, std::uint64_t key_bound,
                             const std::vector<std::uint64_t>& in, std::vector<std::uint64_t>& out) {
        cnt.assign(key_bound + 1, 0);
        for (auto i : in) ++cnt[keys[i]];
        std::uint64_t sum = 0;
        for (auto& c : cnt) {
            std::uint64_t v = c;
            c = sum;
            sum += v;
        }
        for (auto i : in) out[cnt[keys[i]]++] = i;
    };

    std::iota(order.begin(), order.end(), 0);
    counting_sort(rank, 255, order, tmp);
    order.swap(tmp);

    auto rebucket = [&](std::uint64_t len) {
        // order is sorted by (rank[i], rank2(i)); assign new ranks
        auto rank2 = [&](std::uint64_t i) -> std::uint64_t {
            return i + len < n ? rank[i + len] + 1 : 0;
        };
        std::uint64_t r = 0;
        tmp[order[0]] = 0;
        for (std::uint64_t k = 1; k < n; ++k) {
            if (rank[order[k]] != rank[order[k - 1]] || rank2(order[k]) != rank2(order[k - 1])) ++r;
            tmp[order[k]] = r;
        }
        rank.swap(tmp);
        return r;
    };

    std::uint64_t max_rank = n > 1 ? rebucket(0) : 0;

    for (std::uint64_t len = 1; len < n && max_rank + 1 < n; len *= 2) {
        // sort by second key, then stable by first
        std::vector<std::uint64_t> key2(n);
        for (std::uint64_t i = 0; i < n; ++i) key2[i] = i + len < n ? rank[i + len] + 1 : 0;
        std::iota(order.begin(), order.end(), 0);
        counting_sort(key2, max_rank + 1, order, tmp);
        counting_sort(rank, max_rank, tmp, order);
        max_rank = rebucket(len);
    }

    for (std::uint64_t i = 0; i < n; ++i) {
        sa.a[rank[i]] = i + 1;
        sa.ainv[i] = rank[i] + 1;
    }
    return sa;
}

LcpArray build_lcp_kasai(const Text& t, const SuffixArray& sa, KasaiStats* stats) {
    const std::uint64_t n = t.n();
    if (sa.n() != n) throw std::invalid_argument("build_lcp_kasai: inconsistent inputs");
    LcpArray lcp;
    lcp.h.assign(n, 0);
    std::uint64_t comparisons = 0;

    // iterate suffixes in text order; the match length h drops by at most 1
    // per step, so total extension work is linear
    std::uint64_t h = 0;
    for (std::uint64_t j = 1; j <= n; ++j) {
        std::uint64_t r = sa.ainv[j - 1];
        if (r == 1) {
            h = 0;
            lcp.h[0] = 0;
            continue;
        }
        std::uint64_t j2 = sa.a[r - 2];
        while (j + h <= n && j2 + h <= n && t.data[j + h - 1] == t.data[j2 + h - 1]) {
            ++h;
            ++comparisons;
        }
        lcp.h[r - 1] = h;
        if (h > 0) --h;
    }
    if (stats) stats->char_comparisons = comparisons;
    return lcp;
}

std::uint64_t naive_lcp(const Text& t, std::uint64_t j, std::uint64_t j2) {
    const std::uint64_t n = t.n();
    if (j < 1 || j > n || j2 < 1 || j2 > n)
        throw std::out_of_range("naive_lcp: position out of range");
    std::uint64_t k = 0;
    while (j + k <= n && j2 + k <= n && t.data[j + k - 1] == t.data[j2 + k - 1]) ++k;
    return k;
}

SuffixArray naive_suffix_sort(const Text& t) {
    const std::uint64_t n = t.n();
    SuffixArray sa;
    sa.a.resize(n);
    sa.ainv.resize(n);
    std::iota(sa.a.begin(), sa.a.end(), 1);
    std::sort(sa.a.begin(), sa.a.end(), [&](std::uint64_t x, std::uint64_t y) {
        return std::lexicographical_compare(t.data.begin() + static_cast<std::ptrdiff_t>(x - 1),
                                            t.data.end(),
                                            t.data.begin() + static_cast<std::ptrdiff_t>(y - 1),
                                            t.data.end());
    });
    for (std::uint64_t i = 0; i < n; ++i) sa.ainv[sa.a[i] - 1] = i + 1;
    return sa;
}

}  // namespace weelcp

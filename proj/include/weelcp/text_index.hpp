#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace weelcp {

/// Sentinel-terminated byte text T[1..n]. T[n] is the byte 0x00, which may
/// not occur anywhere else; every suffix comparison therefore terminates.
struct Text {
    std::vector<std::uint8_t> data;  // data[i-1] = T[i]
    std::uint32_t sigma = 0;         // number of distinct symbols, sentinel included

    std::uint64_t n() const { return data.size(); }
    std::uint8_t at(std::uint64_t i) const;  // 1 <= i <= n

    void serialize(std::ostream& os) const;
    static Text deserialize(std::istream& is);
};

/// Appends the sentinel and computes alphabet metadata.
/// Throws std::invalid_argument naming the offset if raw contains 0x00.
Text load_text(std::span<const std::uint8_t> raw);
Text load_text(std::string_view raw);
Text load_text_file(const std::string& path);

/// Lexicographic order of suffixes: A[i] = start of the i-th smallest suffix,
/// plus the inverse permutation.
struct SuffixArray {
    std::vector<std::uint64_t> a;     // a[i-1] = A[i]
    std::vector<std::uint64_t> ainv;  // ainv[j-1] = A^{-1}[j]

    std::uint64_t n() const { return a.size(); }
    std::uint64_t at(std::uint64_t i) const;       // A[i]
    std::uint64_t rank_of(std::uint64_t j) const;  // A^{-1}[j]

    void serialize(std::ostream& os) const;
    static SuffixArray deserialize(std::istream& is);
};

/// H[1] = 0; H[i] = lcp of the (i-1)-st and i-th smallest suffixes.
struct LcpArray {
    std::vector<std::uint64_t> h;  // h[i-1] = H[i]

    std::uint64_t n() const { return h.size(); }
    std::uint64_t at(std::uint64_t i) const;

    void serialize(std::ostream& os) const;
    static LcpArray deserialize(std::istream& is);
};

/// Prefix-doubling construction, O(n log n), deterministic.
SuffixArray build_suffix_array(const Text& t);

struct KasaiStats {
    std::uint64_t char_comparisons = 0;  // matched-character extensions, <= 2n
};

/// Kasai's linear-time LCP construction over (t, sa).
LcpArray build_lcp_kasai(const Text& t, const SuffixArray& sa, KasaiStats* stats = nullptr);

/// Direct-comparison lcp of suffix(j) and suffix(j2); oracle for every
/// LCP representation. j == j2 yields the full suffix length n - j + 1.
std::uint64_t naive_lcp(const Text& t, std::uint64_t j, std::uint64_t j2);

/// Comparison-sort oracle for build_suffix_array; test use only.
SuffixArray naive_suffix_sort(const Text& t);

}  // namespace weelcp

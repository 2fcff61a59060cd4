#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "weelcp/lcp_sadakane.hpp"
#include "weelcp/lcp_wee.hpp"
#include "weelcp/text_index.hpp"

namespace weelcp {

enum class Repr : std::uint8_t { plain = 0, sadakane = 1, wee = 2 };

std::string repr_name(Repr r);
Repr repr_from_name(const std::string& name);

/// On-disk index: text, suffix array and one LCP representation, all over
/// the same n. File layout: magic "WEELCP01", repr tag byte, then the
/// length-prefixed component sections.
struct IndexBundle {
    static constexpr char kMagic[9] = "WEELCP01";

    Text text;
    SuffixArray sa;
    Repr repr = Repr::plain;
    std::optional<LcpArray> plain;
    std::optional<SadakaneLcp> sadakane;
    std::optional<WeeLcp> wee;

    std::uint64_t n() const { return text.n(); }

    /// H[i] through the bundle's representation.
    std::uint64_t lcp(std::uint64_t i) const;

    /// Access result with instrumentation (plain/sadakane report zero
    /// comparisons; they never touch the text).
    LcpResult lcp_result(std::uint64_t i) const;

    SpaceReport space_report() const;

    void save(const std::string& path) const;
    static IndexBundle load(const std::string& path);
};

IndexBundle build_bundle(Text text, Repr repr, const WeeParams* wee_params = nullptr);

}  // namespace weelcp

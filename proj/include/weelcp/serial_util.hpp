#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace weelcp::detail {

inline void write_u64(std::ostream& os, std::uint64_t v) {
    unsigned char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
    os.write(reinterpret_cast<const char*>(buf), 8);
}

inline std::uint64_t read_u64(std::istream& is) {
    unsigned char buf[8];
    is.read(reinterpret_cast<char*>(buf), 8);
    if (!is) throw std::runtime_error("unexpected end of stream");
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
    return v;
}

inline void write_u64_vec(std::ostream& os, const std::vector<std::uint64_t>& v) {
    write_u64(os, v.size());
    for (auto x : v) write_u64(os, x);
}

inline std::vector<std::uint64_t> read_u64_vec(std::istream& is) {
    std::uint64_t len = read_u64(is);
    std::vector<std::uint64_t> v(len);
    for (auto& x : v) x = read_u64(is);
    return v;
}

inline void write_tag(std::ostream& os, std::string_view tag) {
    os.write(tag.data(), static_cast<std::streamsize>(tag.size()));
}

inline void expect_tag(std::istream& is, std::string_view tag) {
    std::vector<char> buf(tag.size());
    is.read(buf.data(), static_cast<std::streamsize>(tag.size()));
    if (!is || std::string_view(buf.data(), buf.size()) != tag)
        throw std::runtime_error("bad magic tag, expected '" + std::string(tag) + "'");
}

}  // namespace weelcp::detail

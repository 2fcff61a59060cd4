#include "weelcp/bundle.hpp"

#include <fstream>
#include <stdexcept>

#include "weelcp/serial_util.hpp"

namespace weelcp {

std::string repr_name(Repr r) {
    switch (r) {
        case Repr::plain: return "plain";
        case Repr::sadakane: return "sadakane";
        case Repr::wee: return "wee";
    }
    throw std::logic_error("repr_name: bad tag");
}

Repr repr_from_name(const std::string& name) {
    if (name == "plain") return Repr::plain;
    if (name == "sadakane") return Repr::sadakane;
    if (name == "wee") return Repr::wee;
    throw std::invalid_argument("unknown representation '" + name + "'");
}

std::uint64_t IndexBundle::lcp(std::uint64_t i) const { return lcp_result(i).length; }

LcpResult IndexBundle::lcp_result(std::uint64_t i) const {
    switch (repr) {
        case Repr::plain: return {plain->at(i), 0, 0, true};
        case Repr::sadakane: return {sadakane->access_eq2(sa, i), 0, 0, true};
        case Repr::wee: return wee->lcp_access(sa, text, i);
    }
    throw std::logic_error("IndexBundle::lcp_result: bad tag");
}

SpaceReport IndexBundle::space_report() const {
    SpaceReport r;
    r.n = n();
    r.add("text", text.n() * 8);
    r.add("suffix_array", sa.n() * 64);
    SpaceReport inner;
    switch (repr) {
        case Repr::plain:
            inner.add("H", plain->n() * 64);
            break;
        case Repr::sadakane:
            inner = sadakane->space_report();
            break;
        case Repr::wee:
            inner = wee->space_report();
            break;
    }
    for (auto& c : inner.components) r.add("lcp." + c.name, c.bits);
    return r;
}

void IndexBundle::save(const std::string& path) const {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    detail::write_tag(os, kMagic);
    os.put(static_cast<char>(repr));
    text.serialize(os);
    sa.serialize(os);
    switch (repr) {
        case Repr::plain: plain->serialize(os); break;
        case Repr::sadakane: sadakane->serialize(os); break;
        case Repr::wee: wee->serialize(os); break;
    }
    if (!os) throw std::runtime_error("write failed: " + path);
}

IndexBundle IndexBundle::load(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open: " + path);
    detail::expect_tag(is, kMagic);
    IndexBundle b;
    int tag = is.get();
    if (tag < 0 || tag > 2) throw std::runtime_error("bad representation tag in " + path);
    b.repr = static_cast<Repr>(tag);
    b.text = Text::deserialize(is);
    b.sa = SuffixArray::deserialize(is);
    if (b.sa.n() != b.text.n()) throw std::runtime_error("bundle components disagree on n");
    switch (b.repr) {
        case Repr::plain:
            b.plain = LcpArray::deserialize(is);
            if (b.plain->n() != b.text.n()) throw std::runtime_error("bundle components disagree on n");
            break;
        case Repr::sadakane:
            b.sadakane = SadakaneLcp::deserialize(is);
            if (b.sadakane->text_length() != b.text.n())
                throw std::runtime_error("bundle components disagree on n");
            break;
        case Repr::wee:
            b.wee = WeeLcp::deserialize(is);
            if (b.wee->text_length() != b.text.n())
                throw std::runtime_error("bundle components disagree on n");
            break;
    }
    return b;
}

IndexBundle build_bundle(Text text, Repr repr, const WeeParams* wee_params) {
    IndexBundle b;
    b.text = std::move(text);
    b.sa = build_suffix_array(b.text);
    LcpArray h = build_lcp_kasai(b.text, b.sa);
    b.repr = repr;
    switch (repr) {
        case Repr::plain:
            b.plain = std::move(h);
            break;
        case Repr::sadakane:
            b.sadakane = SadakaneLcp::build(h, b.sa);
            break;
        case Repr::wee:
            b.wee = wee_params ? WeeLcp::build(h, b.sa, *wee_params)
                               : WeeLcp::build(h, b.sa);
            break;
    }
    return b;
}

}  // namespace weelcp

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "weelcp/bundle.hpp"
#include "weelcp/st_nav.hpp"

namespace py = pybind11;
using namespace weelcp;

PYBIND11_MODULE(_weelcp, m) {
    m.doc() = "Succinct LCP representations over a suffix-array substrate";

    py::class_<Text>(m, "Text")
        .def_property_readonly("n", &Text::n)
        .def_property_readonly("sigma", [](const Text& t) { return t.sigma; })
        .def("at", &Text::at, py::arg("i"))
        .def("__len__", &Text::n);

    m.def("load_text", [](const std::string& raw) { return load_text(raw); }, py::arg("raw"),
          "Append the sentinel and build the Text object.");
    m.def("load_text_file", &load_text_file, py::arg("path"));

    py::class_<SuffixArray>(m, "SuffixArray")
        .def_property_readonly("n", &SuffixArray::n)
        .def_property_readonly("a", [](const SuffixArray& sa) { return sa.a; })
        .def("at", &SuffixArray::at, py::arg("i"))
        .def("rank_of", &SuffixArray::rank_of, py::arg("j"));

    m.def("build_suffix_array", &build_suffix_array, py::arg("text"));

    py::class_<LcpArray>(m, "LcpArray")
        .def_property_readonly("n", &LcpArray::n)
        .def_property_readonly("h", [](const LcpArray& h) { return h.h; })
        .def("at", &LcpArray::at, py::arg("i"));

    m.def("build_lcp_kasai",
          [](const Text& t, const SuffixArray& sa) { return build_lcp_kasai(t, sa); },
          py::arg("text"), py::arg("sa"));
    m.def("naive_lcp", &naive_lcp, py::arg("text"), py::arg("j"), py::arg("j2"));

    py::class_<SpaceReport::Component>(m, "SpaceComponent")
        .def_readonly("name", &SpaceReport::Component::name)
        .def_readonly("bits", &SpaceReport::Component::bits);

    py::class_<SpaceReport>(m, "SpaceReport")
        .def_readonly("components", &SpaceReport::components)
        .def_readonly("n", &SpaceReport::n)
        .def("total_bits", &SpaceReport::total_bits)
        .def("bits_per_symbol", &SpaceReport::bits_per_symbol);

    py::class_<SadakaneLcp>(m, "SadakaneLcp")
        .def_static("build", &SadakaneLcp::build, py::arg("h"), py::arg("sa"))
        .def("access_eq1", &SadakaneLcp::access_eq1, py::arg("sa"), py::arg("i"))
        .def("access_eq2", &SadakaneLcp::access_eq2, py::arg("sa"), py::arg("i"))
        .def_property_readonly("text_length", &SadakaneLcp::text_length)
        .def("space_report", &SadakaneLcp::space_report);

    py::class_<WeeParams>(m, "WeeParams")
        .def(py::init([](std::uint64_t kappa, std::uint64_t lambda, std::uint64_t s, double delta) {
                 return WeeParams{kappa, lambda, s, delta};
             }),
             py::arg("kappa"), py::arg("lambda_"), py::arg("s"), py::arg("delta") = 0.5)
        .def_static("defaults_for", &WeeParams::defaults_for, py::arg("n"), py::arg("delta") = 0.5)
        .def_readwrite("kappa", &WeeParams::kappa)
        .def_readwrite("lambda_", &WeeParams::lambda)
        .def_readwrite("s", &WeeParams::s)
        .def_readwrite("delta", &WeeParams::delta);

    py::class_<ApproxSelect>(m, "ApproxSelect")
        .def_readonly("value", &ApproxSelect::value)
        .def_readonly("exact", &ApproxSelect::exact)
        .def_readonly("slack", &ApproxSelect::slack);

    py::class_<LcpResult>(m, "LcpResult")
        .def_readonly("length", &LcpResult::length)
        .def_readonly("char_comparisons", &LcpResult::char_comparisons)
        .def_readonly("word_ops", &LcpResult::word_ops)
        .def_readonly("exact", &LcpResult::exact);

    py::class_<WeeLcp>(m, "WeeLcp")
        .def_static("build",
                    [](const LcpArray& h, const SuffixArray& sa, const WeeParams* params) {
                        return params ? WeeLcp::build(h, sa, *params) : WeeLcp::build(h, sa);
                    },
                    py::arg("h"), py::arg("sa"), py::arg("params") = nullptr)
        .def("approx_select", &WeeLcp::approx_select, py::arg("j"))
        .def("lcp_access", &WeeLcp::lcp_access, py::arg("sa"), py::arg("text"), py::arg("i"))
        .def("lcp_access_packed", &WeeLcp::lcp_access_packed, py::arg("sa"), py::arg("text"),
             py::arg("i"))
        .def_property_readonly("params", &WeeLcp::params)
        .def_property_readonly("text_length", &WeeLcp::text_length)
        .def_property_readonly("encoded_length", &WeeLcp::encoded_length)
        .def("space_report", &WeeLcp::space_report);

    py::class_<IntervalNode>(m, "IntervalNode")
        .def(py::init([](std::uint64_t l, std::uint64_t r, std::uint64_t d) {
                 return IntervalNode{l, r, d};
             }),
             py::arg("left"), py::arg("right"), py::arg("depth"))
        .def_readwrite("left", &IntervalNode::left)
        .def_readwrite("right", &IntervalNode::right)
        .def_readwrite("depth", &IntervalNode::depth)
        .def("__eq__", [](const IntervalNode& a, const IntervalNode& b) { return a == b; })
        .def("__repr__", [](const IntervalNode& n) {
            return "IntervalNode(" + std::to_string(n.left) + ", " + std::to_string(n.right) +
                   ", " + std::to_string(n.depth) + ")";
        });

    py::class_<LcpAccessor>(m, "LcpAccessor");
    py::class_<PlainLcpAccessor, LcpAccessor>(m, "PlainLcpAccessor")
        .def(py::init<const LcpArray&>(), py::arg("h"), py::keep_alive<1, 2>());
    py::class_<SadakaneLcpAccessor, LcpAccessor>(m, "SadakaneLcpAccessor")
        .def(py::init<const SadakaneLcp&, const SuffixArray&>(), py::arg("d"), py::arg("sa"),
             py::keep_alive<1, 2>(), py::keep_alive<1, 3>());
    py::class_<WeeLcpAccessor, LcpAccessor>(m, "WeeLcpAccessor")
        .def(py::init<const WeeLcp&, const SuffixArray&, const Text&>(), py::arg("w"),
             py::arg("sa"), py::arg("text"), py::keep_alive<1, 2>(), py::keep_alive<1, 3>(),
             py::keep_alive<1, 4>());

    py::class_<StNav>(m, "StNav")
        .def(py::init<const LcpAccessor&>(), py::arg("accessor"), py::keep_alive<1, 2>())
        .def("rmq", &StNav::rmq, py::arg("l"), py::arg("r"))
        .def("psv", &StNav::psv, py::arg("i"))
        .def("nsv", &StNav::nsv, py::arg("i"))
        .def("parent_interval", &StNav::parent_interval, py::arg("node"));

    py::enum_<Repr>(m, "Repr")
        .value("plain", Repr::plain)
        .value("sadakane", Repr::sadakane)
        .value("wee", Repr::wee);

    py::class_<IndexBundle>(m, "IndexBundle")
        .def_property_readonly("n", &IndexBundle::n)
        .def_readonly("repr", &IndexBundle::repr)
        .def("lcp", &IndexBundle::lcp, py::arg("i"))
        .def("lcp_result", &IndexBundle::lcp_result, py::arg("i"))
        .def("space_report", &IndexBundle::space_report)
        .def("save", &IndexBundle::save, py::arg("path"))
        .def_static("load", &IndexBundle::load, py::arg("path"));

    m.def("build_bundle",
          [](const Text& t, Repr repr, const WeeParams* params) {
              return build_bundle(t, repr, params);
          },
          py::arg("text"), py::arg("repr"), py::arg("params") = nullptr);
}

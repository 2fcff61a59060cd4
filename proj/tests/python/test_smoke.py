import weelcp


A = [10, 4, 8, 2, 5, 9, 3, 7, 1, 6]
H = [0, 0, 1, 2, 2, 0, 1, 2, 3, 1]


def build(raw="CACAACCAC"):
    t = weelcp.load_text(raw)
    sa = weelcp.build_suffix_array(t)
    h = weelcp.build_lcp_kasai(t, sa)
    return t, sa, h


def test_suffix_and_lcp_arrays():
    t, sa, h = build()
    assert len(t) == 10
    assert list(sa.a) == A
    assert list(h.h) == H
    assert weelcp.naive_lcp(t, sa.at(9), sa.at(8)) == 3


def test_sadakane_access():
    t, sa, h = build()
    d = weelcp.SadakaneLcp.build(h, sa)
    assert [d.access_eq1(sa, i) for i in range(1, 11)] == H
    assert [d.access_eq2(sa, i) for i in range(1, 11)] == H
    report = d.space_report()
    assert report.components[0].name == "S"
    assert report.components[0].bits == 20


def test_wee_access():
    t, sa, h = build()
    params = weelcp.WeeParams(kappa=4, lambda_=2, s=4)
    w = weelcp.WeeLcp.build(h, sa, params)
    assert [w.lcp_access(sa, t, i).length for i in range(1, 11)] == H
    assert [w.lcp_access_packed(sa, t, i).length for i in range(1, 11)] == H
    a7 = w.approx_select(7)
    assert not a7.exact
    assert a7.value == 13
    assert a7.slack <= 4
    assert w.approx_select(4).exact


def test_st_nav_and_parent_chain():
    t, sa, h = build()
    nav = weelcp.StNav(weelcp.PlainLcpAccessor(h))
    assert nav.rmq(2, 10) == 2
    assert nav.psv(9) == 8
    assert nav.nsv(4) == 6
    node = weelcp.IntervalNode(8, 9, 3)
    parent = nav.parent_interval(node)
    assert (parent.left, parent.right, parent.depth) == (7, 9, 2)
    root = weelcp.IntervalNode(1, 10, 0)
    assert nav.parent_interval(root) is None


def test_bundle_roundtrip(tmp_path):
    t = weelcp.load_text("CACAACCAC")
    b = weelcp.build_bundle(t, weelcp.Repr.wee)
    path = str(tmp_path / "example.idx")
    b.save(path)
    b2 = weelcp.IndexBundle.load(path)
    assert b2.repr == weelcp.Repr.wee
    assert [b2.lcp(i) for i in range(1, 11)] == H
    assert b2.space_report().total_bits() > 0

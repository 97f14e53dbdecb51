from cfic.channels import channel_report
from cfic.closed_form import color_cycle
from cfic.graph import IncidenceColoring, verify
from cfic.io import parse_graph_text


def test_star_boxes():
    g, c = parse_graph_text("c l1 1 2\nc l2 3 4\nc l3 5 6\n")
    report = channel_report(g, c)
    assert report.rainbow
    assert report.box("c").channels == (1, 2, 3, 4, 5, 6)
    for leaf in ("l1", "l2", "l3"):
        assert len(report.box(leaf).channels) == 2
        assert report.box(leaf).rainbow


def test_clash_is_reported_where_verify_fails():
    g, c = parse_graph_text("c l1 1 2\nc l2 2 4\nc l3 5 6\n")
    report = channel_report(g, c)
    assert not verify(g, c)
    assert not report.rainbow
    assert not report.box("c").rainbow
    assert report.box("c").repeated == [2]
    assert report.box("l3").rainbow


def test_rainbow_iff_verify_on_cycles():
    for n in (3, 4, 5):
        g, c = color_cycle(n)
        assert channel_report(g, c).rainbow
        broken = IncidenceColoring(((1, 1),) + c.colors[1:])
        assert channel_report(g, broken).rainbow == bool(verify(g, broken))

import pytest

from dyncolor import named
from dyncolor.enumerate import connected_graphs
from dyncolor.sweep import sweep_compare

from .oracles import brute_has_minor


def test_c5_is_skipped():
    report = sweep_compare(corpus=[named.cycle(5)])
    assert report.skipped_c5 == 1 and report.colored == 0 and report.ok


def test_k5_is_filtered():
    report = sweep_compare(corpus=[named.complete(5), named.petersen()])
    assert report.filtered_k5 == 2 and report.ok


def test_disconnected_counted():
    report = sweep_compare(corpus=[named.empty(2)])
    assert report.disconnected == 1


def test_exhaustive_up_to_6():
    report = sweep_compare(6)
    assert report.ok, report.lines()
    corpus = [g for n in range(1, 7) for g in connected_graphs(n)]
    assert report.total == len(corpus)
    assert report.colored + report.skipped_c5 + report.filtered_k5 == report.total
    assert report.skipped_c5 == 1
    assert report.filtered_k5 == sum(brute_has_minor(g, named.complete(5)) for g in corpus)
    assert report.internal_fallbacks == 0


def test_report_lines():
    lines = sweep_compare(corpus=[named.v8()]).lines()
    assert lines[0].startswith("graphs=1 colored=1")


def test_limits():
    with pytest.raises(ValueError):
        sweep_compare(9)
    with pytest.raises(ValueError):
        sweep_compare()

import json

import pytest

from jetcover import verify as V
from jetcover.clutter import canonicalize
from jetcover.errors import DomainError
from jetcover.gallery import favaron_g1, path_graph


def test_labelled_counts():
    # clutters on exactly n labelled vertices, every vertex allowed to be isolated
    counts = [sum(1 for c in V.all_clutters(n, min_vertices=n)) for n in (1, 2, 3, 4)]
    assert counts == [2, 5, 19, 167]
    assert sum(1 for _ in V.all_clutters(4, 3)) == 161


def test_isomorphism_classes():
    # antichains of subsets up to permutation, minus the one holding the empty set
    per_n = [len(V.clutters_up_to_isomorphism(n, min_vertices=n)) for n in (1, 2, 3, 4, 5)]
    assert per_n == [2, 4, 9, 29, 209]
    assert len(V.clutters_up_to_isomorphism(5)) == 253


def test_random_corpora_are_seeded():
    a = [c for c in V.random_clutters(10, seed=3)]
    assert a == V.random_clutters(10, seed=3)
    assert a != V.random_clutters(10, seed=4)
    for g in V.random_whiskered_graphs(5, seed=1):
        assert g.is_graph() and not g.isolated_vertices()


@pytest.mark.parametrize("theorem", ["thm3", "lemma1", "lemma2", "thm6", "thm7", "thm8", "thm9", "cor3"])
def test_checks_pass_on_fixtures(theorem):
    report = V.verify(theorem, V.named_fixtures(), s_max=1)
    assert report.ok, report.to_json()


def test_unknown_theorem():
    with pytest.raises(DomainError):
        V.verify("thm99")


def test_failure_is_shrunk(monkeypatch):
    def fake(c, s):
        return "too many edges" if len(c.edges) >= 2 else None

    monkeypatch.setitem(V.CHECKS, "thm3", fake)
    big = canonicalize("abcde", ["ab", "bc", "cd", "de"])
    report = V.verify("thm3", [big], s_max=0)
    assert not report.ok
    (failure,) = report.failures
    assert failure.clutter["edges"] == [["a", "b"], ["b", "c"], ["c", "d"], ["d", "e"]]
    assert len(failure.minimal["edges"]) == 2


def test_shrink_skips_domain_errors():
    def fails(c, _):
        if len(c.vertices) < 3:
            raise DomainError("too small")
        return True

    small = V.shrink(path_graph(), 0, fails)
    assert len(small.vertices) == 3


def test_report_json_is_deterministic():
    a = V.report_json(V.verify("lemma1", random_extra=3, seed=2))
    b = V.report_json(V.verify("lemma1", random_extra=3, seed=2))
    assert a == b
    data = json.loads(a)
    assert data["theorem"] == "lemma1" and "elapsed" not in data
    assert "elapsed" in V.verify("lemma1", [path_graph()]).to_json()


def test_matching_check_skips_non_graphs():
    report = V.verify("thm6", [canonicalize("abc", ["abc"]), path_graph(), favaron_g1()], s_max=1)
    assert report.skipped == 2 and report.instances == 2 and report.ok

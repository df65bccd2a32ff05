"""Testing the check runner and the survey"""
import io

import pytest

from engel_sinks.errors import UnknownCheckError
from engel_sinks.groups.catalog import build, catalog_record
from engel_sinks.harness import (
    Outcome, map_groups, run_checks, survey_group, write_jsonl
)

NAMES = ['C1', 'C7', 'S3', 'D4']


def stream(reports):
    handle = io.StringIO()
    write_jsonl(reports, handle)
    return handle.getvalue()


def test_map_groups_keeps_order():
    serial = map_groups(catalog_record, NAMES)
    assert [record['order'] for record in serial] == [1, 7, 6, 8]
    assert map_groups(catalog_record, NAMES, jobs=2) == serial
    assert map_groups(catalog_record, []) == []


def test_run_checks_order():
    reports = run_checks('lemma-2.4,baer', jobs=1, names=['C7', 'S3'])
    keys = [(r.subject.split()[0], r.check_id) for r in reports]
    assert keys == [('C7', 'lemma-2.4')] * 6 + [
        ('C7', 'baer'), ('S3', 'lemma-2.4'), ('S3', 'baer')
    ]
    assert not any(r.failed for r in reports)
    assert all(r.timing is None for r in reports)


def test_determinism_across_jobs():
    serial = stream(run_checks('*', jobs=1, names=NAMES))
    parallel = stream(run_checks('*', jobs=2, names=NAMES))
    assert serial == parallel
    assert '"outcome":"fail"' not in serial


def test_timings():
    reports = run_checks('residual-data', jobs=1, timings=True, names=['S3'])
    assert reports[0].timing is not None
    assert 'timing' in reports[0].to_record(timings=True)
    assert 'timing' not in reports[0].to_record()


def test_unknown_check():
    with pytest.raises(UnknownCheckError):
        run_checks('bogus', names=['S3'])


def test_survey_of_c7():
    rows = survey_group('C7')
    assert len(rows) == 6
    identity = [row for row in rows if not row.is_onto]
    assert len(identity) == 1
    assert (identity[0].m_left, identity[0].m_right_ext) == (1, 1)
    for row in rows:
        assert row.order == 7 and row.m_right_base == 1
        if row.is_onto:
            assert row.m_left == row.m_right_ext == 7
            assert row.comm_order == 7


def test_survey_of_a5():
    rows = survey_group('A5')
    assert all(row.simple for row in rows)
    onto = [row for row in rows if row.is_onto]
    assert len(onto) == len(rows) - 1
    assert all(row.m_right_ext > 1 and row.m_left > 1 for row in onto)


def test_survey_expands_classes(monkeypatch):
    monkeypatch.setattr(
        'engel_sinks.harness.subjects.AUTOMORPHISM_ENUMERATION_LIMIT', 1
    )
    rows = survey_group('S3')
    group = build('S3')
    assert sorted(row.phi for row in rows) == sorted(
        'inner{}'.format(group.describe(g)) for g in range(group.order)
    )
    sizes = {row.phi: row.m_left for row in rows}
    assert sizes['inner(1 2)'] == sizes['inner(1 3)'] == sizes['inner(2 3)'] == 3
    assert sizes['inner()'] == 1


def test_tier_two_groups():
    reports = run_checks(
        'generation,cyclic-sylow',
        jobs=1,
        names=['A6', 'PSL2(11)', 'PSL2(13)']
    )
    assert not any(r.failed for r in reports)
    assert any(r.outcome is Outcome.PASS for r in reports)
    assert {r.subject.split()[0] for r in reports} == {
        'A6', 'PSL2(11)', 'PSL2(13)'
    }

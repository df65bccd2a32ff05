"""Testing the command line front end"""
import json

import pytest

from engel_sinks.cli import main
from engel_sinks.errors import InvariantViolationError
from engel_sinks.groups.catalog import build, catalog_names, dump_group


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_left_sink_json(capsys):
    code, out = run(
        capsys, 'sink', '--group', 'catalog:S3', '--element', '(1 2)',
        '--side', 'left', '--format', 'json'
    )
    assert code == 0
    record = json.loads(out)
    assert record['schema'] == 1
    assert record['members'] == ['()', '(1 2 3)', '(1 3 2)']
    assert record['side'] == 'left'


def test_right_sink_of_inversion(capsys):
    code, out = run(
        capsys, 'sink', '--group', 'catalog:C7', '--aut', 'invert', '--side',
        'right', '--scope', 'extension', '--format', 'json'
    )
    assert code == 0
    record = json.loads(out)
    assert record['size'] == 7
    assert record['seed_scope'] == 'extension'
    code, out = run(
        capsys, 'sink', '--group', 'catalog:C7', '--aut', 'invert', '--side',
        'right', '--seed-scope', 'base', '--format', 'json'
    )
    assert json.loads(out)['size'] == 1


def test_json_is_stable(capsys):
    argv = (
        'sink', '--group', 'catalog:A4', '--aut', 'inner:(1 2 3)', '--side',
        'right', '--format', 'json'
    )
    assert run(capsys, *argv) == run(capsys, *argv)


def test_trivial_group_text(capsys):
    code, out = run(
        capsys, 'sink', '--group', 'catalog:C1', '--element', '()', '--side',
        'left'
    )
    assert code == 0
    assert '1 element(s)' in out
    assert 'nontrivial cycles' not in out


def test_sink_from_group_file(capsys, tmp_path):
    c7 = build('C7')
    path = tmp_path / 'c7.json'
    document = json.loads(dump_group(c7))
    document['automorphism'] = {'0': [7, 1, 2, 3, 4, 5, 6]}
    path.write_text(json.dumps(document))
    code, out = run(
        capsys, 'sink', '--group', str(path), '--aut', 'file', '--side',
        'left', '--format', 'json'
    )
    assert code == 0
    assert json.loads(out)['size'] == 7


@pytest.mark.parametrize(
    'argv', [
        ('sink', '--group', 'catalog:Nope', '--element', '()', '--side', 'left'),
        ('sink', '--group', 'catalog:S3', '--element', '(1 4)', '--side', 'left'),
        ('sink', '--group', 'catalog:S3', '--side', 'left'),
        ('sink', '--group', 'catalog:S3', '--element', '()', '--aut', 'id',
         '--side', 'left'),
        ('sink', '--group', 'catalog:S3', '--element', '(1 2)', '--side',
         'left', '--seed-scope', 'base'),
        ('sink', '--group', 'catalog:S3', '--aut', 'file', '--side', 'left'),
        ('sink', '--group', 'catalog:S3', '--aut', 'power:x', '--side', 'left'),
        ('sink', '--group', 'catalog:S3', '--aut', 'twist', '--side', 'left'),
        ('verify', '--checks', 'bogus'),
        ('sink', '--group', 'catalog:S3'),
        ('frobnicate', ),
    ]
)
def test_usage_errors(capsys, argv):
    assert main(list(argv)) == 2


def test_verify_writes_report(tmp_path):
    out = tmp_path / 'reports.jsonl'
    code = main(['verify', '--checks', 'lemma-2.1', '--tier', '1', '--out', str(out)])
    assert code == 0
    lines = out.read_text().splitlines()
    assert len(lines) == len(catalog_names(1))
    records = [json.loads(line) for line in lines]
    assert {r['check'] for r in records} == {'lemma-2.1'}
    assert 'fail' not in {r['outcome'] for r in records}
    assert all('timing' not in r for r in records)


def test_verify_unwritable_output(tmp_path):
    code = main([
        'verify', '--checks', 'lemma-2.1', '--tier', '1', '--out',
        str(tmp_path)
    ])
    assert code == 3


@pytest.mark.parametrize(
    'q,e,expected', [
        (2, 6, 'no Zsigmondy prime (exception: q=2, e=6)'),
        (2, 4, '5'),
        (2, 11, '23 89'),
    ]
)
def test_zsigmondy(capsys, q, e, expected):
    code, out = run(capsys, 'zsigmondy', str(q), str(e))
    assert code == 0
    assert out.strip() == expected


def test_zsigmondy_overflow(capsys):
    assert main(['zsigmondy', '2', '128']) == 2


def test_catalog_list(capsys):
    code, out = run(capsys, 'catalog', 'list', '--tier', '1')
    assert code == 0
    rows = {line.split()[0]: line.split() for line in out.splitlines()[1:]}
    assert rows['S3'][1] == '6'
    assert rows['A5'][1] == '60'
    assert rows['PSL2(7)'][1] == '168'
    assert 'simple' in rows['A5'][3]
    assert 'A7' not in rows


def test_catalog_list_follows_default_tier(capsys, monkeypatch):
    monkeypatch.setenv('ENGEL_SINKS_TIER', '1')
    code, out = run(capsys, 'catalog', 'list')
    assert code == 0
    listed = [line.split()[0] for line in out.splitlines()[1:]]
    assert listed == catalog_names(1)


def test_invariant_violation_exit_code(monkeypatch):

    def broken(name):
        raise InvariantViolationError('{} broke a theorem'.format(name))

    monkeypatch.setattr('engel_sinks.cli.catalog_record', broken)
    assert main(['catalog', 'list', '--tier', '1']) == 1


def test_catalog_show(capsys):
    code, out = run(capsys, 'catalog', 'show', 'S3')
    assert code == 0
    assert json.loads(out)['degree'] == 3
    assert main(['catalog', 'show']) == 2

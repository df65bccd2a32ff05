"""Testing catalog constructors and the group file format"""
import json

import pytest

from engel_sinks.errors import (
    CycleParseError, InvariantViolationError, NotAHomomorphismError,
    UnresolvableReferenceError
)
from engel_sinks.groups import (
    center, derived_subgroup, is_abelian, is_metabelian, is_simple
)
from engel_sinks.groups.catalog import (
    alternating, build, catalog_automorphisms, catalog_names, catalog_record,
    cyclic, dihedral, dump_group, elementary_abelian, factor_swap, load_group,
    metabelian_samples, psl2, resolve, semidirect
)


def test_families():
    c7 = cyclic(7)
    assert c7.order == 7 and is_abelian(c7)
    a5 = alternating(5)
    assert a5.order == 60 and is_simple(a5)
    e9 = elementary_abelian(3, 2)
    assert e9.order == 9
    assert set(e9.element_orders.tolist()) == {1, 3}
    assert dihedral(7).order == 14


@pytest.mark.parametrize('p,order', [(5, 60), (7, 168), (11, 660), (13, 1092)])
def test_psl2(p, order):
    group = psl2(p)
    assert group.order == order
    assert center(group).is_trivial()
    assert derived_subgroup(group).is_whole()


def test_psl2_must_be_simple(monkeypatch):
    monkeypatch.setattr(
        'engel_sinks.groups.catalog.is_simple', lambda group: False
    )
    with pytest.raises(InvariantViolationError):
        psl2(5)


@pytest.mark.parametrize('p', [2, 3, 4, 17])
def test_psl2_range(p):
    with pytest.raises(ValueError):
        psl2(p)


def test_semidirect():
    c7c3 = semidirect(7, 3, 2)
    assert c7c3.order == 21
    assert not is_abelian(c7c3) and is_metabelian(c7c3)
    s3 = semidirect(3, 2, 2)
    assert s3.order == 6 and not is_abelian(s3)
    assert is_metabelian(dihedral(6))
    assert all(is_metabelian(group) for group in metabelian_samples())
    with pytest.raises(ValueError):
        semidirect(7, 2, 2)


def test_tiers():
    tier1 = catalog_names(1)
    assert 'A5' in tier1 and 'PSL2(7)' in tier1 and 'A7' not in tier1
    assert set(tier1) < set(catalog_names(2))
    assert all(build(name).order <= 200 for name in tier1)
    record = catalog_record('S3')
    assert record['order'] == 6
    assert record['flags'] == {
        'abelian': False,
        'nilpotent': False,
        'metabelian': True,
        'simple': False
    }


def test_square_of_a5():
    group = build('A5xA5')
    assert group.order == 3600
    assert 'A5xA5' in catalog_names(2) and 'A5xA5' not in catalog_names(1)
    swap = factor_swap(group)
    assert swap.order == 2 and not swap.is_identity()
    assert [phi.label for phi in catalog_automorphisms(group)] == ['swap']
    assert catalog_automorphisms(build('A5')) == []
    loaded, _ = load_group(dump_group(group))
    assert loaded.name == 'A5xA5'
    assert catalog_automorphisms(loaded) == []
    with pytest.raises(ValueError):
        factor_swap(build('C7'))


def test_load_group():
    group, phi = load_group({'degree': 3, 'generators': ['(1 2)', '(1 2 3)']})
    assert group.order == 6 and phi is None
    trivial, _ = load_group('{"degree": 4, "generators": []}')
    assert trivial.order == 1
    arrays, _ = load_group({'degree': 3, 'generators': [[2, 3, 1]]})
    assert arrays.order == 3


@pytest.mark.parametrize(
    'document', [
        {'degree': 3, 'generators': ['(1 2']},
        {'degree': 3, 'generators': ['(1 q)']},
        {'degree': 3, 'generators': [[1, 1, 2]]},
        {'degree': 3, 'generators': [[1, 2]]},
        {'generators': []},
        'not json',
    ]
)
def test_load_group_errors(document):
    with pytest.raises(CycleParseError):
        load_group(document)


def test_malformed_cycle_names_token():
    with pytest.raises(CycleParseError) as error:
        load_group({'degree': 3, 'generators': ['(1 q)']})
    assert "'q'" in str(error.value)


def test_load_automorphism():
    document = {
        'degree': 7,
        'generators': ['(1 2 3 4 5 6 7)'],
        'automorphism': {'0': '(1 7 6 5 4 3 2)'},
    }
    group, phi = load_group(document)
    assert phi.order == 2
    with pytest.raises(NotAHomomorphismError):
        load_group({
            'degree': 3,
            'generators': ['(1 2)', '(1 2 3)'],
            'automorphism': ['(1 2 3)', '(1 2)'],
        })


def test_round_trip():
    document = {
        'degree': 4,
        'generators': ['(1 2 3 4)', '(1 3)', '(1 2 3 4)'],
        'name': 'D4',
        'automorphism': ['(1 4 3 2)', '(1 3)', '(1 4 3 2)'],
    }
    canonical = dump_group(*load_group(document))
    assert json.loads(canonical)['generators'] == [[2, 3, 4, 1], [3, 2, 1, 4]]
    assert dump_group(*load_group(canonical)) == canonical
    assert ' ' not in canonical


def test_resolve(tmp_path):
    group, _ = resolve('catalog:S3')
    assert group is build('S3')
    path = tmp_path / 'group.json'
    path.write_text(json.dumps({'degree': 2, 'generators': ['(1 2)']}))
    assert resolve(str(path))[0].order == 2
    with pytest.raises(UnresolvableReferenceError):
        resolve('catalog:nope')
    with pytest.raises(UnresolvableReferenceError):
        resolve(str(tmp_path / 'missing.json'))

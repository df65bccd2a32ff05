"""Testing Sylow subgroups, the Fitting subgroup and TI subgroups"""
import pytest
from sympy import primefactors

from engel_sinks.groups import (
    all_sylow_conjugates, fitting_subgroup, is_nilpotent, is_TI, p_core, sylow
)
from engel_sinks.groups.catalog import build, catalog_names


@pytest.mark.parametrize(
    'name,p,order,cyclic', [
        ('C6', 2, 2, True),
        ('S4', 2, 8, False),
        ('A5', 5, 5, True),
        ('A5', 2, 4, False),
        ('PSL2(7)', 7, 7, True),
        ('C5', 2, 1, True),
    ]
)
def test_sylow(name, p, order, cyclic):
    record = sylow(build(name), p)
    assert record.order == order
    assert record.is_cyclic == cyclic
    assert record.subgroup.issubset(build(name).whole)


def test_sylow_is_deterministic():
    first = sylow(build('S4'), 3).subgroup
    assert first == sylow(build('S4'), 3).subgroup


def test_is_TI():
    s4 = build('S4')
    assert is_TI(s4, s4.trivial)
    assert is_TI(s4, s4.whole)
    assert sylow(build('A5'), 5).is_TI
    assert not sylow(s4, 2).is_TI


@pytest.mark.parametrize(
    'name,p,count', [
        ('C6', 3, 1),
        ('S3', 2, 3),
        ('A5', 5, 6),
        ('A5', 3, 10),
        ('S4', 2, 3),
    ]
)
def test_all_sylow_conjugates(name, p, count):
    group = build(name)
    assert len(all_sylow_conjugates(group, sylow(group, p).subgroup)) == count


@pytest.mark.parametrize('name', catalog_names(1))
def test_sylow_counting(name):
    group = build(name)
    for p in primefactors(group.order):
        subgroup = sylow(group, p).subgroup
        count = len(all_sylow_conjugates(group, subgroup))
        assert count % p == 1 % p
        assert (group.order // subgroup.order) % count == 0


@pytest.mark.parametrize(
    'name,order', [
        ('D4', 8),
        ('C12', 12),
        ('S3', 3),
        ('S4', 4),
        ('A5', 1),
        ('C2xS3', 6),
    ]
)
def test_fitting_subgroup(name, order):
    group = build(name)
    fitting = fitting_subgroup(group)
    assert fitting.order == order
    assert fitting.is_normal()
    assert is_nilpotent(fitting.as_group())[0]


def test_p_core():
    s4 = build('S4')
    assert p_core(s4, 2).order == 4
    assert p_core(s4, 3).is_trivial()

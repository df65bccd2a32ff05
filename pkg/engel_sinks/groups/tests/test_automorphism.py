"""Testing automorphisms, the semidirect extension and coprime identities"""
from math import gcd

import pytest
import torch

from engel_sinks.errors import GroupTooLargeError, NotAHomomorphismError
from engel_sinks.groups import (
    Automorphism, apply, commutator_subgroup, coprime_parts,
    enumerate_automorphisms, extension, fixed_subgroup, from_images,
    identity_automorphism, induced, inner, invariant_normal_closure,
    invariant_normal_subgroups, inversion, is_abelian,
    minimal_invariant_normal_subgroups, order, power, power_map, quotient,
    subgroup_generated
)
from engel_sinks.groups.catalog import build, cyclic


@pytest.fixture(scope='module')
def s3():
    return build('S3')


@pytest.fixture(scope='module')
def c7():
    return build('C7')


def test_from_images(s3, c7):
    assert order(from_images(s3, s3.generators)) == 1
    x = c7.generator_indices[0]
    assert order(from_images(c7, [c7.inv(x)])) == 2
    # conjugation by (1 3 2) sends (1 2) to (1 3) and fixes (1 2 3)
    phi = from_images(s3, ['(1 3)', '(1 2 3)'])
    assert phi == inner(s3, '(1 3 2)')
    with pytest.raises(NotAHomomorphismError):
        from_images(s3, ['(1 2 3)', '(1 2 3)'])
    with pytest.raises(NotAHomomorphismError):
        from_images(s3, ['(1 2)'])


def test_non_bijective_table_rejected(c7):
    table = torch.arange(7)
    table[1], table[2] = 2, 1
    with pytest.raises(NotAHomomorphismError):
        Automorphism(c7, table)
    with pytest.raises(NotAHomomorphismError):
        Automorphism(c7, torch.zeros(7, dtype=torch.long))


def test_inner(s3):
    assert inner(s3, '()').is_identity()
    assert order(inner(s3, '(1 2)')) == 2
    assert order(inner(s3, '(1 2 3)')) == 3
    d4 = build('D4')
    central = [z for z in range(1, 8) if all(
        d4.mul(z, g) == d4.mul(g, z) for g in range(8)
    )]
    assert inner(d4, central[0]).is_identity()


def test_apply_and_power(s3, c7):
    phi = inner(s3, '(1 2)')
    assert s3.describe(apply(phi, '(1 3)')) == '(2 3)'
    assert power(phi, 0).is_identity()
    assert power(inversion(c7), 2).is_identity()
    assert power(phi, 3) == phi


def test_fixed_subgroup(s3, c7):
    assert fixed_subgroup(identity_automorphism(s3)).is_whole()
    assert fixed_subgroup(inversion(c7)).is_trivial()
    fixed = fixed_subgroup(inner(s3, '(1 2)'))
    assert fixed.describe() == ['()', '(1 2)']


def test_commutator_subgroup(s3, c7):
    assert commutator_subgroup(identity_automorphism(s3)).is_trivial()
    assert commutator_subgroup(inversion(c7)).is_whole()
    assert commutator_subgroup(inner(s3, '(1 2)')) == subgroup_generated(
        s3, ['(1 2 3)']
    )


@pytest.mark.parametrize(
    'n,k,p,orders', [
        (7, 3, 2, (2, 3)),
        (11, 3, 2, (1, 5)),
        (17, 2, 2, (8, 1)),
    ]
)
def test_coprime_parts(n, k, p, orders):
    group = cyclic(n)
    phi = power_map(group, k)
    phi_p, phi_rest = coprime_parts(phi, p)
    assert (phi_p.order, phi_rest.order) == orders
    assert phi_p.compose(phi_rest) == phi
    assert phi_rest.compose(phi_p) == phi


def test_coprime_parts_powers(c7):
    phi = power_map(c7, 3)
    assert phi.order == 6
    phi_2, phi_3 = coprime_parts(phi, 2)
    assert phi_2 == phi.power(3)
    assert phi_3 == phi.power(4)
    with pytest.raises(ValueError):
        coprime_parts(phi, 4)


@pytest.mark.parametrize(
    'name,count', [
        ('C1', 1),
        ('C7', 6),
        ('C2^2', 6),
        ('S3', 6),
        ('D4', 8),
        ('Q8', 24),
        ('A4', 24),
        ('C2^3', 168),
        ('S4', 24),
    ]
)
def test_enumerate_automorphisms(name, count):
    group = build(name)
    automorphisms = enumerate_automorphisms(group)
    assert len(automorphisms) == count
    assert automorphisms[0].is_identity()
    tables = [tuple(phi.table.tolist()) for phi in automorphisms]
    assert tables == sorted(set(tables))


def test_enumerate_automorphisms_limit():
    with pytest.raises(GroupTooLargeError):
        enumerate_automorphisms(build('PSL2(7)'))


def test_homomorphism_property_exhaustive():
    group = build('D6')
    for phi in enumerate_automorphisms(group):
        for a in range(group.order):
            for b in range(group.order):
                assert phi(group.mul(a, b)) == group.mul(phi(a), phi(b))


@pytest.mark.parametrize('name', ['C7', 'C15', 'C2^2', 'C3^2', 'S3', 'D5', 'A4'])
def test_coprime_identities(name):
    group = build(name)
    for phi in enumerate_automorphisms(group):
        if gcd(group.order, phi.order) != 1:
            continue
        commutators = commutator_subgroup(phi)
        fixed = fixed_subgroup(phi)
        assert commutator_subgroup(phi, within=commutators) == commutators
        if is_abelian(group):
            assert commutators.intersection(fixed).is_trivial()
            assert commutators.order * fixed.order == group.order
        for kernel in invariant_normal_subgroups(phi):
            factor = quotient(group, kernel)
            assert fixed_subgroup(induced(phi, factor)).members == \
                factor.project(fixed.members)


def test_invariant_normal_subgroups(s3):
    subgroups = invariant_normal_subgroups(identity_automorphism(s3))
    assert [h.order for h in subgroups] == [1, 3, 6]
    assert [h.order for h in minimal_invariant_normal_subgroups(
        identity_automorphism(s3)
    )] == [3]
    klein = build('C2^2')
    assert len(invariant_normal_subgroups(identity_automorphism(klein))) == 5
    rotation = [phi for phi in enumerate_automorphisms(klein)
                if phi.order == 3][0]
    assert [h.order for h in invariant_normal_subgroups(rotation)] == [1, 4]
    assert minimal_invariant_normal_subgroups(rotation)[0].is_whole()
    assert invariant_normal_closure(rotation, [1]).is_whole()


def test_induced(s3):
    a3 = subgroup_generated(s3, ['(1 2 3)'])
    factor = quotient(s3, a3)
    assert induced(inner(s3, '(1 2)'), factor).is_identity()


def test_extension_examples(s3, c7):
    assert extension(s3, identity_automorphism(s3)).carrier.order == 6
    dihedral = extension(c7, inversion(c7))
    assert dihedral.carrier.order == 14
    assert not is_abelian(dihedral.carrier)
    assert extension(s3, inner(s3, '(1 2)')).carrier.order == 12


def test_extension_conjugation(c7):
    ext = extension(c7, power_map(c7, 3))
    carrier = ext.carrier
    for x in range(7):
        assert carrier.conj(int(ext.embed[x]), ext.phi) == int(
            ext.embed[ext.aut(x)]
        )
    assert ext.base_subgroup.is_normal()
    assert ext.to_base(ext.base_subgroup.members) == tuple(range(7))


def test_extension_too_large():
    a7 = build('A7')
    with pytest.raises(GroupTooLargeError):
        extension(a7, inner(a7, '(1 2 3 4 5 6 7)'))

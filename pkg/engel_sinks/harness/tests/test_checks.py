"""Testing the registered verification checks"""
import pytest

from engel_sinks.config import AUTOMORPHISM_ENUMERATION_LIMIT
from engel_sinks.errors import UnknownCheckError
from engel_sinks.groups import (
    enumerate_automorphisms, identity_automorphism, inner, inversion,
    power_map
)
from engel_sinks.groups.catalog import build, catalog_names, factor_swap
from engel_sinks.harness import (
    REGISTRY, AutomorphismSubject, GroupContext, Outcome, check_ids,
    select_checks
)

CHECK_IDS = [
    'lemma-2.1', 'lemma-2.2', 'lemma-2.3', 'lemma-2.4', 'lemma-2.5',
    'generation', 'baer', 'involution-case', 'abelian-order', 'cyclic-sylow',
    'lemma-3.2', 'lemma-3.4', 'lemma-3.5', 'normal-closure', 'engel-onto',
    'factor-orbit', 'left-faithful', 'abelian-section', 'sink-quotient',
    'residual-data', 'coprime-data'
]


def context(name, *automorphisms):
    """A context whose automorphism subjects are exactly ``automorphisms``."""
    ctx = GroupContext(build(name))
    if automorphisms:
        group = ctx.group
        ctx.automorphisms = [
            AutomorphismSubject(make(group)) for make in automorphisms
        ]
    return ctx


def run(check_id, ctx):
    return REGISTRY[check_id].run(ctx)


def only(check_id, ctx):
    reports = run(check_id, ctx)
    assert len(reports) == 1
    return reports[0]


def test_registry_order():
    assert check_ids() == CHECK_IDS


@pytest.mark.parametrize(
    'patterns,expected', [
        ('lemma-2.*', CHECK_IDS[:5]),
        ('baer', ['baer']),
        ('lemma-3.*, baer', ['baer', 'lemma-3.2', 'lemma-3.4', 'lemma-3.5']),
        ('*', CHECK_IDS),
        ('*-data', ['residual-data', 'coprime-data']),
    ]
)
def test_select_checks(patterns, expected):
    assert [c.check_id for c in select_checks(patterns)] == expected


@pytest.mark.parametrize('patterns', ['bogus', '', ' , ', 'baer,lemma-9*'])
def test_unknown_checks(patterns):
    with pytest.raises(UnknownCheckError):
        select_checks(patterns)


def test_inversion_of_c7():
    ctx = context('C7', inversion)
    report = only('lemma-2.4', ctx)
    assert report.outcome is Outcome.PASS
    assert report.subject == 'C7 invert'
    assert report.data == {'m_left': 7, 'onto': True}
    report = only('lemma-2.2', ctx)
    assert report.outcome is Outcome.PASS
    assert report.data == {'comm_order': 7, 'fixed_order': 1}
    assert only('abelian-order', ctx).data == {'m': 7}
    assert only('generation', ctx).outcome is Outcome.PASS
    involution = only('involution-case', ctx)
    assert involution.outcome is Outcome.PASS
    assert involution.witnesses == []
    assert involution.data == {'inverted': 7}
    assert only('engel-onto', ctx).outcome is Outcome.PASS
    assert only('normal-closure', ctx).outcome is Outcome.PASS


def test_identity_on_c6():
    ctx = context('C6', identity_automorphism)
    assert only('lemma-2.4', ctx).data == {'m_left': 1, 'onto': False}
    report = only('lemma-2.2', ctx)
    assert report.outcome is Outcome.PASS
    assert report.data == {'comm_order': 1, 'fixed_order': 6}
    assert only('abelian-order', ctx).outcome is Outcome.SKIPPED
    assert only('involution-case', ctx).outcome is Outcome.SKIPPED


def test_coprime_splitting_of_c15():
    # x -> x^4 has order 2, moves x by x^3 and fixes the elements of order 3
    ctx = context('C15', lambda group: power_map(group, 4))
    report = only('lemma-2.2', ctx)
    assert report.outcome is Outcome.PASS
    assert report.data == {'comm_order': 5, 'fixed_order': 3}
    lemma = only('lemma-2.4', ctx)
    assert lemma.outcome is Outcome.PASS
    assert lemma.data['onto'] is False
    assert only('coprime-data', ctx).data['comm_order'] == 5


def test_s3_transposition():
    ctx = context('S3', lambda group: inner(group, '(1 2)'))
    generation = only('generation', ctx)
    assert generation.outcome is Outcome.SKIPPED
    assert generation.reason == '[G,phi] has order 3'
    involution = only('involution-case', ctx)
    assert involution.outcome is Outcome.PASS
    assert involution.data == {'inverted': 3}
    assert only('lemma-2.4', ctx).outcome is Outcome.SKIPPED
    assert only('lemma-2.5', ctx).data == {'elements': 6}
    assert only('cyclic-sylow', ctx).outcome is Outcome.SKIPPED


def test_baer_on_s3():
    report = only('baer', context('S3'))
    assert report.outcome is Outcome.PASS
    assert report.witnesses == []
    assert report.data['left_engel'] == 3
    assert report.data['fitting_order'] == 3
    assert report.data['fitting_all_left_engel']
    assert report.data['right_engel'] == 1


def test_baer_on_a5_is_vacuous():
    report = only('baer', context('A5'))
    assert report.outcome is Outcome.PASS
    assert report.witnesses == ['vacuous']
    assert report.data['fitting_order'] == 1


def test_cyclic_sylow_on_a5():
    ctx = context(
        'A5', identity_automorphism, lambda group: inner(group, '(1 2 3)')
    )
    identity, report = run('cyclic-sylow', ctx)
    assert identity.outcome is Outcome.SKIPPED
    assert report.outcome is Outcome.PASS
    assert report.data['primes'] == [3, 5]
    assert report.data['m'] > 1


def test_alternating_and_psl2_families():
    ctx = context('A5', lambda group: inner(group, '(1 2 3 4 5)'))
    sylow, bound = run('lemma-3.2', ctx)
    assert sylow.subject == 'A5' and sylow.data == {'p': 5}
    assert sylow.outcome is Outcome.PASS
    assert bound.outcome is Outcome.PASS
    assert only('lemma-3.4', ctx).outcome is Outcome.SKIPPED

    ctx = context('PSL2(5)', lambda group: inner(group, group.generator_indices[0]))
    sylow, bound = run('lemma-3.4', ctx)
    assert sylow.outcome is Outcome.PASS and bound.outcome is Outcome.PASS
    chain = only('lemma-3.5', ctx)
    assert chain.outcome is Outcome.PASS
    assert chain.data['p'] == 5 and chain.data['e'] == 2
    assert only('lemma-3.2', ctx).outcome is Outcome.SKIPPED


def test_tensor_bound_on_d4():
    report = only('lemma-2.1', context('D4'))
    assert report.outcome is Outcome.PASS
    assert report.data == {'abelianization': 4, 'factors': [4, 2]}
    assert only('lemma-2.1', context('S3')).outcome is Outcome.SKIPPED


def test_jordan_bound_on_klein_four():
    reports = run('lemma-2.3', context('C2^2'))
    outcomes = sorted(r.outcome.value for r in reports)
    # the identity and three involutions pass, two elements of order 3 skip
    assert outcomes == ['pass'] * 4 + ['skipped'] * 2
    assert only('lemma-2.3', context('S3')).outcome is Outcome.SKIPPED


def test_residual_data_of_s3():
    report = only('residual-data', context('S3'))
    assert report.outcome is Outcome.PASS
    assert report.data == {'max_left': 3, 'residual_order': 3}


def test_engel_onto_trivial_group():
    assert only('engel-onto', context('C1')).outcome is Outcome.SKIPPED


def test_factor_orbit_of_simple_group():
    ctx = context('A5', lambda group: inner(group, '(1 2 3)'))
    report = only('factor-orbit', ctx)
    assert report.outcome is Outcome.PASS
    assert report.data['factors'] == 1
    assert report.data['m'] >= 1


def test_factor_orbit_of_irreducible_module():
    report = only('factor-orbit', context('C7', inversion))
    assert report.outcome is Outcome.PASS
    assert report.data == {'m': 7}


def test_factor_orbit_skips_reducible_action():
    ctx = context('S3', lambda group: inner(group, '(1 2)'))
    assert only('factor-orbit', ctx).outcome is Outcome.SKIPPED


def test_factor_orbit_of_swapped_square():
    report = only('factor-orbit', context('A5xA5', factor_swap))
    assert report.outcome is Outcome.PASS
    assert report.data['factors'] == 2
    assert report.data['max_factor_left'] <= report.data['m']


def test_left_faithful_on_a5():
    ctx = context('A5', lambda group: inner(group, '(1 2 3)'))
    report = only('left-faithful', ctx)
    assert report.outcome is Outcome.PASS
    assert report.data['fixed_order'] == 3
    assert report.data['order'] == 3


def test_left_faithful_needs_trivial_centre():
    report = only('left-faithful', context('Q8'))
    assert report.outcome is Outcome.SKIPPED
    assert report.reason == 'Z(G) is not trivial'


def test_abelian_section_of_a4():
    reports = run('abelian-section', context('A4'))
    assert not any(r.failed for r in reports)
    assert any(
        r.outcome is Outcome.PASS and r.data['max_index'] == 4
        and r.data['sections'] == 1 for r in reports
    )


def test_abelian_section_without_abelian_normal():
    ctx = context('A5', lambda group: inner(group, '(1 2 3)'))
    assert only('abelian-section', ctx).outcome is Outcome.SKIPPED


@pytest.mark.parametrize('name', catalog_names(1))
def test_checks_never_fail(name):
    ctx = context(name)
    if ctx.group.order <= AUTOMORPHISM_ENUMERATION_LIMIT:
        assert len(ctx.automorphisms) == len(
            enumerate_automorphisms(ctx.group)
        )
    for check_id in CHECK_IDS:
        for report in run(check_id, ctx):
            assert not report.failed, report


def test_class_size_recorded():
    ctx = GroupContext(build('S3'))
    group = ctx.group
    members = (group.to_index('(1 2)'), group.to_index('(1 3)'),
               group.to_index('(2 3)'))
    ctx.automorphisms = [AutomorphismSubject(inner(group, members[0]), members)]
    assert only('coprime-data', ctx).outcome is Outcome.SKIPPED
    assert only('sink-quotient', ctx).data == {
        'normals': 2,
        'right_phi_invariant': True,
        'class_size': 3
    }

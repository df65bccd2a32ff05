"""The registered verification checks.

Every check takes a :class:`GroupContext` and returns one report per subject
it looks at: the group itself, or one of its automorphism subjects. Checks
are kept in registration order, which is also the order of the report
stream.
"""
import logging
from dataclasses import dataclass
from fnmatch import fnmatchcase
from typing import Callable, Dict, List

from sympy import primefactors

from ..engel import left_sink, sink_image_under_quotient
from ..errors import InvariantViolationError, UnknownCheckError
from ..groups import (
    centralizer, commutator_subgroup, derived_subgroup, fixed_subgroup, induced,
    invariant_normal_closure, is_nilpotent, lower_central_series,
    nilpotent_residual, quotient, subgroup_generated, sylow
)
from ..numtheory import bertrand_prime, is_prime, p_part, zsigmondy_bound_check
from .report import VerificationReport, passed, skipped, verdict
from .subjects import AutomorphismSubject, GroupContext

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Check:
    check_id: str
    description: str
    run: Callable[[GroupContext], List[VerificationReport]]


REGISTRY: Dict[str, Check] = {}


def register(check_id: str, description: str):
    """Add the decorated function to the registry under ``check_id``."""

    def decorator(function):
        if check_id in REGISTRY:
            raise ValueError('check {} registered twice'.format(check_id))
        REGISTRY[check_id] = Check(check_id, description, function)
        return function

    return decorator


def check_ids() -> List[str]:
    return list(REGISTRY)


def select_checks(patterns: str) -> List[Check]:
    """Checks whose id matches one of the comma separated glob patterns.

    Raises:
        UnknownCheckError: if a pattern matches no registered check.
    """
    wanted = [p.strip() for p in patterns.split(',') if p.strip()]
    if not wanted:
        raise UnknownCheckError('no check pattern given')
    for pattern in wanted:
        if not any(fnmatchcase(check_id, pattern) for check_id in REGISTRY):
            raise UnknownCheckError(
                'no check matches {!r}; known checks: {}'.format(
                    pattern, ', '.join(REGISTRY)
                )
            )
    return [
        check for check_id, check in REGISTRY.items()
        if any(fnmatchcase(check_id, pattern) for pattern in wanted)
    ]


def _data(subject: AutomorphismSubject, **values) -> dict:
    if subject.members:
        values['class_size'] = subject.multiplicity
    return values


def _nontrivial(ctx: GroupContext, check_id: str):
    """Automorphism subjects other than the identity, with skip reports."""
    subjects, reports = [], []
    for subject in ctx.automorphisms:
        if subject.phi.is_identity():
            reports.append(
                skipped(check_id, ctx.describe(subject), 'identity automorphism')
            )
        else:
            subjects.append(subject)
    return subjects, reports


@register('lemma-2.1', "|gamma_i/gamma_i+1| divides |G/G'|^i for nilpotent G")
def check_lemma_2_1(ctx: GroupContext) -> List[VerificationReport]:
    check_id = 'lemma-2.1'
    if not ctx.nilpotent:
        return [skipped(check_id, ctx.name, 'not nilpotent')]
    group = ctx.group
    abelianization = group.order // derived_subgroup(group).order
    series = lower_central_series(group)
    factors, witnesses = [], []
    for i in range(1, len(series)):
        factor = series[i - 1].order // series[i].order
        factors.append(factor)
        if abelianization**i % factor:
            witnesses.append(
                'gamma_{}/gamma_{} has order {}'.format(i, i + 1, factor)
            )
    return [
        verdict(
            check_id, ctx.name, witnesses, {
                'abelianization': abelianization,
                'factors': factors
            }
        )
    ]


@register('lemma-2.2', 'coprime automorphisms: fixed points, [[G,phi],phi], splitting')
def check_lemma_2_2(ctx: GroupContext) -> List[VerificationReport]:
    check_id = 'lemma-2.2'
    group = ctx.group
    reports = []
    for subject in ctx.automorphisms:
        phi, who = subject.phi, ctx.describe(subject)
        if not ctx.is_coprime(phi):
            reports.append(
                skipped(
                    check_id, who, 'order {} shares a factor with {}'.format(
                        phi.order, group.order
                    )
                )
            )
            continue
        witnesses = []
        commutators = ctx.commutator(phi)
        again = commutator_subgroup(phi, within=commutators)
        if again != commutators:
            witnesses.append(
                '[[G,phi],phi] has order {}, [G,phi] has order {}'.format(
                    again.order, commutators.order
                )
            )
        fixed = fixed_subgroup(phi)
        if ctx.abelian and (
            not commutators.intersection(fixed).is_trivial()
            or commutators.order * fixed.order != group.order
        ):
            witnesses.append(
                'G is not [G,phi] x C_G(phi): orders {} and {}'.format(
                    commutators.order, fixed.order
                )
            )
        for normal in ctx.invariant_normals(phi):
            if normal.is_trivial():
                continue
            factor = quotient(group, normal)
            covered = factor.project(fixed.members)
            if fixed_subgroup(induced(phi, factor)).members != covered:
                witnesses.append(
                    'fixed points on G/N{} are not covered'.format(normal.order)
                )
        reports.append(
            verdict(
                check_id, who, witnesses,
                _data(
                    subject,
                    comm_order=commutators.order,
                    fixed_order=fixed.order
                )
            )
        )
    return reports


@register('lemma-2.3', '|V| <= |C_V(a)|^|a| for p-automorphisms of elementary abelian V')
def check_lemma_2_3(ctx: GroupContext) -> List[VerificationReport]:
    check_id = 'lemma-2.3'
    group = ctx.group
    orders = set(group.element_orders.tolist()) - {1}
    if not ctx.abelian or len(orders) != 1 or not is_prime(min(orders)):
        return [skipped(check_id, ctx.name, 'not elementary abelian')]
    p = min(orders)
    reports = []
    for subject in ctx.automorphisms:
        phi, who = subject.phi, ctx.describe(subject)
        if p_part(phi.order, p)[1] != 1:
            reports.append(
                skipped(check_id, who, 'order {} is not a power of {}'.format(
                    phi.order, p
                ))
            )
            continue
        centralizer = fixed_subgroup(phi).order
        witnesses = []
        if group.order > centralizer**phi.order:
            witnesses.append(
                '|V| = {} > {}^{}'.format(group.order, centralizer, phi.order)
            )
        reports.append(
            verdict(
                check_id, who, witnesses,
                _data(subject, centralizer=centralizer, order=phi.order)
            )
        )
    return reports


@register('lemma-2.4', 'abelian V: L(a) is a subgroup, L(a^k) in L(a), V=[V,a] gives V=L(a)')
def check_lemma_2_4(ctx: GroupContext) -> List[VerificationReport]:
    check_id = 'lemma-2.4'
    if not ctx.abelian:
        return [skipped(check_id, ctx.name, 'not abelian')]
    group = ctx.group
    reports = []
    for subject in ctx.automorphisms:
        phi, who = subject.phi, ctx.describe(subject)
        sink = ctx.left(phi)
        members = set(sink.members)
        witnesses = []
        if subgroup_generated(group, sink.members).order != sink.size:
            witnesses.append('L(phi) of size {} is not a subgroup'.format(sink.size))
        for k in range(1, phi.order + 1):
            if not set(ctx.left(phi.power(k)).members) <= members:
                witnesses.append('L(phi^{}) is not inside L(phi)'.format(k))
        onto = ctx.is_onto(phi)
        if onto and sink.size != group.order:
            witnesses.append(
                'V = [V,phi] but |L(phi)| = {}'.format(sink.size)
            )
        reports.append(
            verdict(
                check_id, who, witnesses,
                _data(subject, m_left=sink.size, onto=onto)
            )
        )
    return reports


@register('lemma-2.5', 'metabelian G: L(g^-1) is inside R(g)')
def check_lemma_2_5(ctx: GroupContext) -> List[VerificationReport]:
    check_id = 'lemma-2.5'
    if not ctx.metabelian:
        return [skipped(check_id, ctx.name, 'not metabelian')]
    group = ctx.group
    witnesses = []
    for subject in ctx.elements:
        g = subject.index
        left = ctx.left(group.inv(g))
        right = ctx.right(g, 'extension')
        if not set(left.members) <= set(right.members):
            witnesses.append(group.describe(g))
    return [
        verdict(check_id, ctx.name, witnesses, {'elements': len(ctx.elements)})
    ]


@register('generation', 'G = [G,phi] gives G = <L(phi)>')
def check_generation(ctx: GroupContext) -> List[VerificationReport]:
    check_id = 'generation'
    group = ctx.group
    reports = []
    for subject in ctx.automorphisms:
        phi, who = subject.phi, ctx.describe(subject)
        if not ctx.is_onto(phi):
            reports.append(
                skipped(
                    check_id, who,
                    '[G,phi] has order {}'.format(ctx.commutator(phi).order)
                )
            )
            continue
        generated = subgroup_generated(group, ctx.left(phi).members)
        witnesses = []
        if not generated.is_whole():
            witnesses.append('<L(phi)> has order {}'.format(generated.order))
        reports.append(
            verdict(
                check_id, who, witnesses,
                _data(subject, m_left=ctx.left(phi).size)
            )
        )
    return reports


@register('baer', 'left Engel elements lie in F(G), right Engel elements in the hypercentre')
def check_baer(ctx: GroupContext) -> List[VerificationReport]:
    check_id = 'baer'
    group = ctx.group
    fitting, hypercentre = ctx.fitting, ctx.hypercentre
    witnesses = []
    left_engel = right_engel = 0
    for subject in ctx.elements:
        g = subject.index
        if ctx.left(g).is_trivial():
            left_engel += subject.multiplicity
            if g not in fitting:
                witnesses.append(
                    'left Engel {} outside F(G)'.format(group.describe(g))
                )
        if ctx.right(g, 'extension').is_trivial():
            right_engel += subject.multiplicity
            if g not in hypercentre:
                witnesses.append(
                    'right Engel {} outside the hypercentre'.format(
                        group.describe(g)
                    )
                )
    data = {
        'fitting_order': fitting.order,
        'hypercentre_order': hypercentre.order,
        'left_engel': left_engel,
        'right_engel': right_engel,
        'fitting_all_left_engel': left_engel == fitting.order,
        'hypercentre_all_right_engel': right_engel == hypercentre.order,
    }
    if witnesses:
        return [verdict(check_id, ctx.name, witnesses, data)]
    return [
        passed(
            check_id,
            ctx.name,
            data,
            vacuous=left_engel == 1 and right_engel == 1 and group.order > 1
        )
    ]


@register('involution-case', 'tau of order 2: <g> in L(tau) and L_<g>(tau) in R(tau) over J(tau)')
def check_involution_case(ctx: GroupContext) -> List[VerificationReport]:
    check_id = 'involution-case'
    group = ctx.group
    orders = group.element_orders
    reports = []
    for subject in ctx.automorphisms:
        tau, who = subject.phi, ctx.describe(subject)
        if tau.order != 2:
            reports.append(
                skipped(check_id, who, 'order {} is not 2'.format(tau.order))
            )
            continue
        inverted = [
            g for g in range(group.order)
            if orders[g] % 2 == 1 and tau(g) == group.inv(g)
        ]
        left = set(ctx.left(tau).members)
        right = set(ctx.right(tau).members)
        witnesses, seen = [], set()
        for g in inverted:
            cyclic = subgroup_generated(group, [g])
            if cyclic.members in seen:
                continue
            seen.add(cyclic.members)
            if not set(cyclic.members) <= left:
                witnesses.append(
                    '<{}> is not inside L(tau)'.format(group.describe(g))
                )
            local = left_sink(group, tau, cyclic)
            if not set(local.members) <= right:
                witnesses.append(
                    'L_<{}>(tau) is not inside R(tau)'.format(group.describe(g))
                )
        data = _data(subject, inverted=len(inverted))
        if witnesses:
            reports.append(verdict(check_id, who, witnesses, data))
        else:
            reports.append(
                passed(check_id, who, data, vacuous=len(inverted) == 1)
            )
    return reports


@register('abelian-order', 'abelian G = [G,phi] has |G| = |R(phi)| in G<phi>')
def check_abelian_order(ctx: GroupContext) -> List[VerificationReport]:
    check_id = 'abelian-order'
    if not ctx.abelian:
        return [skipped(check_id, ctx.name, 'not abelian')]
    group = ctx.group
    reports = []
    for subject in ctx.automorphisms:
        phi, who = subject.phi, ctx.describe(subject)
        if not ctx.is_onto(phi):
            reports.append(
                skipped(
                    check_id, who,
                    '[G,phi] has order {}'.format(ctx.commutator(phi).order)
                )
            )
            continue
        m = ctx.right(phi).size
        witnesses = []
        if m != group.order:
            witnesses.append('|G| = {}, m = {}'.format(group.order, m))
        reports.append(verdict(check_id, who, witnesses, _data(subject, m=m)))
    return reports


@register('cyclic-sylow', 'simple G: cyclic Sylow S is TI and |S| <= (m-1)^2 with m = |R_G(phi)|')
def check_cyclic_sylow_bound(ctx: GroupContext) -> List[VerificationReport]:
    check_id = 'cyclic-sylow'
    if not ctx.simple:
        return [skipped(check_id, ctx.name, 'not simple')]
    group = ctx.group
    cyclic = [
        record for record in
        (sylow(group, p) for p in primefactors(group.order))
        if record.is_cyclic
    ]
    subjects, reports = _nontrivial(ctx, check_id)
    for subject in subjects:
        m = ctx.right(subject.phi, 'base').size
        bound = (max(1, m) - 1)**2
        witnesses = []
        for record in cyclic:
            if not record.is_TI:
                witnesses.append('Sylow {} is not TI'.format(record.prime))
            if record.order > bound:
                witnesses.append(
                    '|S_{}| = {} > (m-1)^2 = {}'.format(
                        record.prime, record.order, bound
                    )
                )
        reports.append(
            verdict(
                check_id, ctx.describe(subject), witnesses,
                _data(subject, m=m, primes=[r.prime for r in cyclic])
            )
        )
    return reports


def _family(ctx: GroupContext, kind: str):
    family = getattr(ctx.group, 'family', None)
    if family and family[0] == kind:
        return family[1]
    return None


def _prime_order_sylow(ctx: GroupContext, check_id: str,
                       p: int) -> VerificationReport:
    record = sylow(ctx.group, p)
    witnesses = []
    if not (record.is_cyclic and record.order == p):
        witnesses.append(
            'Sylow {} has order {}, cyclic {}'.format(
                p, record.order, record.is_cyclic
            )
        )
    return verdict(check_id, ctx.name, witnesses, {'p': p})


@register('lemma-3.2', 'A_n: Bertrand prime p has cyclic Sylow of order p and n < 2(m-1)^2')
def check_lemma_3_2(ctx: GroupContext) -> List[VerificationReport]:
    check_id = 'lemma-3.2'
    n = _family(ctx, 'alternating')
    if n is None or n < 5:
        return [skipped(check_id, ctx.name, 'not an alternating group of degree >= 5')]
    p = bertrand_prime(n)
    reports = [_prime_order_sylow(ctx, check_id, p)]
    subjects, skips = _nontrivial(ctx, check_id)
    reports.extend(skips)
    for subject in subjects:
        m = ctx.right(subject.phi, 'base').size
        witnesses = []
        if not n < 2 * (m - 1)**2:
            witnesses.append('n = {} >= 2(m-1)^2 with m = {}'.format(n, m))
        reports.append(
            verdict(
                check_id, ctx.describe(subject), witnesses,
                _data(subject, m=m, p=p)
            )
        )
    return reports


@register('lemma-3.4', 'PSL(2,p): cyclic Sylow p and p <= (m-1)^2 + 1')
def check_lemma_3_4(ctx: GroupContext) -> List[VerificationReport]:
    check_id = 'lemma-3.4'
    p = _family(ctx, 'psl2')
    if p is None:
        return [skipped(check_id, ctx.name, 'not PSL(2,p)')]
    reports = [_prime_order_sylow(ctx, check_id, p)]
    subjects, skips = _nontrivial(ctx, check_id)
    reports.extend(skips)
    for subject in subjects:
        m = ctx.right(subject.phi, 'base').size
        witnesses = []
        if p > (m - 1)**2 + 1:
            witnesses.append('p = {} > (m-1)^2 + 1 with m = {}'.format(p, m))
        reports.append(
            verdict(check_id, ctx.describe(subject), witnesses, _data(subject, m=m))
        )
    return reports


@register('lemma-3.5', 'PSL(2,p): Zsigmondy exponent chain with measured m')
def check_lemma_3_5(ctx: GroupContext) -> List[VerificationReport]:
    check_id = 'lemma-3.5'
    p = _family(ctx, 'psl2')
    if p is None:
        return [skipped(check_id, ctx.name, 'not PSL(2,p)')]
    subjects, reports = _nontrivial(ctx, check_id)
    for subject in subjects:
        m = ctx.right(subject.phi, 'base').size
        report = zsigmondy_bound_check(p, 1, 2, m)
        witnesses = []
        if not report.ok:
            witnesses.append(report.to_dict())
        reports.append(
            verdict(
                check_id, ctx.describe(subject), witnesses,
                _data(subject, **report.to_dict())
            )
        )
    return reports


@register('normal-closure', 'G = [G,phi] is the normal closure of R(phi) in G<phi>')
def check_normal_closure(ctx: GroupContext) -> List[VerificationReport]:
    check_id = 'normal-closure'
    reports = []
    for subject in ctx.automorphisms:
        phi, who = subject.phi, ctx.describe(subject)
        if not ctx.is_onto(phi):
            reports.append(skipped(check_id, who, '[G,phi] != G'))
            continue
        closure = invariant_normal_closure(phi, ctx.right(phi).members)
        witnesses = []
        if not closure.is_whole():
            witnesses.append('normal closure has order {}'.format(closure.order))
        reports.append(verdict(check_id, who, witnesses, _data(subject)))
    return reports


@register('engel-onto', 'G = [G,phi] != 1: phi is neither left nor right Engel')
def check_engel_onto(ctx: GroupContext) -> List[VerificationReport]:
    check_id = 'engel-onto'
    if ctx.group.is_trivial():
        return [skipped(check_id, ctx.name, 'trivial group')]
    reports = []
    for subject in ctx.automorphisms:
        phi, who = subject.phi, ctx.describe(subject)
        if not ctx.is_onto(phi):
            reports.append(skipped(check_id, who, '[G,phi] != G'))
            continue
        witnesses = []
        if ctx.left(phi).is_trivial():
            witnesses.append('phi is left Engel')
        if ctx.right(phi).is_trivial():
            witnesses.append('phi is right Engel')
        reports.append(verdict(check_id, who, witnesses, _data(subject)))
    return reports


@register('factor-orbit', 'no proper phi-invariant normal subgroup: k simple factors, k <= m and |L_S(y)| <= m')
def check_factor_orbit(ctx: GroupContext) -> List[VerificationReport]:
    check_id = 'factor-orbit'
    group = ctx.group
    if group.is_trivial():
        return [skipped(check_id, ctx.name, 'trivial group')]
    reports = []
    for subject in ctx.automorphisms:
        phi, who = subject.phi, ctx.describe(subject)
        if ctx.minimal_invariant_normals(phi) != [group.whole]:
            reports.append(
                skipped(check_id, who, 'proper phi-invariant normal subgroup')
            )
            continue
        m = ctx.right(phi).size
        witnesses = []
        if ctx.abelian:
            orders = set(group.element_orders.tolist()) - {1}
            if len(orders) != 1 or not is_prime(min(orders)):
                witnesses.append('G is not elementary abelian')
            if ctx.is_onto(phi) and m != group.order:
                witnesses.append('|G| = {}, m = {}'.format(group.order, m))
            reports.append(verdict(check_id, who, witnesses, _data(subject, m=m)))
            continue

        factors = ctx.minimal_normals
        k, first = len(factors), factors[0]
        if first.order**k != group.order:
            witnesses.append(
                '{} minimal normal subgroups of order {}'.format(k, first.order)
            )
        orbit, image = {first.members}, first.members
        for _ in range(phi.order - 1):
            image = tuple(sorted(phi.images[list(image)].tolist()))
            orbit.add(image)
        if len(orbit) != k:
            witnesses.append(
                'phi moves a factor through {} of {} factors'.format(
                    len(orbit), k
                )
            )
        if k > m:
            witnesses.append('k = {} > m = {}'.format(k, m))
        data = _data(subject, m=m, factors=k)
        if k > 1:
            largest = max(
                left_sink(group, y, first).size for y in first.members
            )
            data['max_factor_left'] = largest
            if largest > m:
                witnesses.append(
                    'a factor has a left sink of size {} > m'.format(largest)
                )
        reports.append(verdict(check_id, who, witnesses, data))
    return reports


@register('left-faithful', 'Z(G) = 1, G = [G,phi]: C_G(phi) and <phi> act faithfully on L(phi)')
def check_left_faithful(ctx: GroupContext) -> List[VerificationReport]:
    check_id = 'left-faithful'
    group = ctx.group
    if not ctx.centre.is_trivial():
        return [skipped(check_id, ctx.name, 'Z(G) is not trivial')]
    subjects, reports = _nontrivial(ctx, check_id)
    for subject in subjects:
        phi, who = subject.phi, ctx.describe(subject)
        if not ctx.is_onto(phi):
            reports.append(skipped(check_id, who, '[G,phi] != G'))
            continue
        left = ctx.left(phi).members
        members = set(left)
        fixed = fixed_subgroup(phi)
        witnesses = []
        if {phi(u) for u in members} != members:
            witnesses.append('L(phi) is not phi-invariant')
        for c in fixed.generators:
            if {group.conj(u, c) for u in members} != members:
                witnesses.append(
                    'L(phi) is not invariant under {}'.format(group.describe(c))
                )
        kernel = centralizer(group, left).intersection(fixed)
        if not kernel.is_trivial():
            witnesses.append(
                '{} elements of C_G(phi) centralize L(phi)'.format(kernel.order)
            )
        for i in range(1, phi.order):
            twist = phi.powers[i]
            if all(twist[u] == u for u in left):
                witnesses.append('phi^{} fixes L(phi) pointwise'.format(i))
                break
        reports.append(
            verdict(
                check_id, who, witnesses,
                _data(
                    subject,
                    m_left=len(left),
                    fixed_order=fixed.order,
                    order=phi.order
                )
            )
        )
    return reports


@register('abelian-section', 'G = [G,phi], N abelian minimal invariant normal: |N:C_N(a)| <= (m-1)^2 for a in R(phi) outside C_G(N)')
def check_abelian_section(ctx: GroupContext) -> List[VerificationReport]:
    check_id = 'abelian-section'
    group = ctx.group
    subjects, reports = _nontrivial(ctx, check_id)
    for subject in subjects:
        phi, who = subject.phi, ctx.describe(subject)
        if not ctx.is_onto(phi):
            reports.append(skipped(check_id, who, '[G,phi] != G'))
            continue
        sections = []
        for normal in ctx.minimal_invariant_normals(phi):
            centralizing = centralizer(group, normal.members)
            if normal.issubset(centralizing):
                sections.append((normal, centralizing))
        if not sections:
            reports.append(
                skipped(
                    check_id, who, 'no abelian minimal invariant normal subgroup'
                )
            )
            continue
        right = ctx.right(phi)
        bound = (right.size - 1)**2
        witnesses, largest, examined = [], 1, 0
        for normal, centralizing in sections:
            for a in right.members:
                if a in centralizing:
                    continue
                examined += 1
                fixed = normal.intersection(centralizer(group, [a]))
                index = normal.order // fixed.order
                largest = max(largest, index)
                if index > bound:
                    witnesses.append(
                        '|N:C_N({})| = {} > (m-1)^2 = {}'.format(
                            group.describe(a), index, bound
                        )
                    )
        data = _data(
            subject, m=right.size, sections=len(sections), max_index=largest
        )
        if witnesses:
            reports.append(verdict(check_id, who, witnesses, data))
        else:
            reports.append(passed(check_id, who, data, vacuous=examined == 0))
    return reports


@register('sink-quotient', 'sinks map onto the sinks of the induced automorphism on G/N')
def check_sink_quotient(ctx: GroupContext) -> List[VerificationReport]:
    check_id = 'sink-quotient'
    reports = []
    for subject in ctx.automorphisms:
        phi, who = subject.phi, ctx.describe(subject)
        normals = [n for n in ctx.invariant_normals(phi) if not n.is_trivial()]
        witnesses = []
        for normal in normals:
            for sink in (ctx.left(phi), ctx.right(phi)):
                try:
                    sink_image_under_quotient(sink, normal)
                except InvariantViolationError as error:
                    witnesses.append(str(error))
        right = set(ctx.right(phi).members)
        reports.append(
            verdict(
                check_id, who, witnesses,
                _data(
                    subject,
                    normals=len(normals),
                    right_phi_invariant={phi(u) for u in right} == right
                )
            )
        )
    return reports


@register('residual-data', 'records max |L(g)| and |gamma_inf(G)|; G/gamma_inf is nilpotent')
def check_residual_data(ctx: GroupContext) -> List[VerificationReport]:
    check_id = 'residual-data'
    group = ctx.group
    residual = nilpotent_residual(group)
    largest = max(ctx.left(s.index).size for s in ctx.elements)
    witnesses = []
    if not is_nilpotent(quotient(group, residual))[0]:
        witnesses.append('G/gamma_inf of order {} is not nilpotent'.format(
            group.order // residual.order
        ))
    return [
        verdict(
            check_id, ctx.name, witnesses, {
                'max_left': largest,
                'residual_order': residual.order
            }
        )
    ]


@register('coprime-data', 'records |[G,phi]| with the sink sizes of coprime phi')
def check_coprime_data(ctx: GroupContext) -> List[VerificationReport]:
    check_id = 'coprime-data'
    reports = []
    for subject in ctx.automorphisms:
        phi, who = subject.phi, ctx.describe(subject)
        if not ctx.is_coprime(phi):
            reports.append(skipped(check_id, who, 'not coprime'))
            continue
        reports.append(
            passed(
                check_id, who,
                _data(
                    subject,
                    comm_order=ctx.commutator(phi).order,
                    m_left=ctx.left(phi).size,
                    m_right_ext=ctx.right(phi).size,
                    m_right_base=ctx.right(phi, 'base').size
                )
            )
        )
    return reports

"""Minimal left and right Engel sinks.

The minimal sink of ``h`` over a scope ``K`` is the identity together with
every limit cycle reached by the iterated commutators seeded in ``K``:
``u -> [u, h]`` from each ``x`` in ``K`` on the left, and ``u -> [u, x]``
from ``h`` for each ``x`` in ``K`` on the right.
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ..errors import InvariantViolationError, NotInvariantError
from ..groups import Automorphism, TableGroup, induced, inner, quotient
from ..groups.table import SubgroupHandle
from .trajectory import (
    Acting, LimitCycle, as_acting, canonical_rotation, is_invariant_under,
    left_step_map
)

logger = logging.getLogger(__name__)

LEFT = 'left'
RIGHT = 'right'
SEED_SCOPES = ('group', 'base', 'extension')


@dataclass(frozen=True)
class EngelSink:
    """A minimal Engel sink with the limit cycles that make it up.

    ``engel_seeds`` counts the seeds whose orbit dies at the identity.
    """

    group: TableGroup = field(compare=False, repr=False)
    acting: Acting = field(compare=False, repr=False)
    owner: str
    side: str
    seed_scope: str
    scope: SubgroupHandle = field(compare=False, repr=False)
    members: Tuple[int, ...]
    cycles: Tuple[LimitCycle, ...] = field(compare=False)
    engel_seeds: int = field(compare=False)

    @property
    def size(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, index: int) -> bool:
        return index in self.members

    def is_trivial(self) -> bool:
        return self.members == (0, )

    def nontrivial_cycles(self) -> List[LimitCycle]:
        return [c for c in self.cycles if not c.is_trivial()]

    def census(self) -> Dict[int, int]:
        """Number of distinct nontrivial limit cycles of each length."""
        return dict(
            sorted(Counter(c.length for c in self.nontrivial_cycles()).items())
        )

    def describe(self) -> List[str]:
        return [self.group.describe(u) for u in self.members]

    def to_dict(self) -> dict:
        return {
            'owner': self.owner,
            'group': self.group.name,
            'side': self.side,
            'seed_scope': self.seed_scope,
            'scope_order': self.scope.order,
            'size': self.size,
            'members': self.describe(),
            'census': {str(k): v for k, v in self.census().items()},
        }


def _owner(group: TableGroup, h: Acting) -> str:
    if isinstance(h, Automorphism):
        return h.label
    return group.describe(h)


def _resolve_scope(
    group: TableGroup, h: Acting, scope: Optional[SubgroupHandle]
) -> SubgroupHandle:
    scope = group.whole if scope is None else scope
    if scope.parent is not group:
        raise NotInvariantError('scope belongs to a different group')
    if not is_invariant_under(group, h, scope):
        raise NotInvariantError(
            'scope of order {} is not invariant under {}'.format(
                scope.order, _owner(group, h)
            )
        )
    return scope


def _cycles_of_map(images: List[int],
                   seeds) -> Tuple[List[Tuple[int, ...]], Counter]:
    """Limit cycles of a self-map over the given seeds, with basin sizes.

    Nodes already attributed to a cycle are not walked again.
    """
    cycle_of = {}
    cycles = []
    basins = Counter()
    for x in seeds:
        path = []
        position = {}
        u = x
        while u not in cycle_of and u not in position:
            position[u] = len(path)
            path.append(u)
            u = images[u]
        if u in position:
            cycle_id = len(cycles)
            cycles.append(tuple(path[position[u]:]))
        else:
            cycle_id = cycle_of[u]
        for v in path:
            cycle_of[v] = cycle_id
        basins[cycle_id] += 1
    return cycles, basins


def _assemble(
    group: TableGroup, h: Acting, side: str, seed_scope: str,
    scope: SubgroupHandle, counted_cycles: Counter
) -> EngelSink:
    members = {0}
    cycles = []
    for cycle, seeds in counted_cycles.items():
        members.update(cycle)
        cycles.append(LimitCycle(cycle, seeds))
    cycles.sort(key=lambda c: (c.length, c.members))
    engel_seeds = counted_cycles.get((0, ), 0)
    sink = EngelSink(
        group=group,
        acting=h,
        owner=_owner(group, h),
        side=side,
        seed_scope=seed_scope,
        scope=scope,
        members=tuple(sorted(members)),
        cycles=tuple(cycles),
        engel_seeds=engel_seeds
    )
    logger.debug(
        '%s sink of %s in %s: %d members, census %s', side, sink.owner,
        group.name, sink.size, sink.census()
    )
    return sink


def left_sink(
    group: TableGroup, h, scope: Optional[SubgroupHandle] = None
) -> EngelSink:
    """``L_K(h)`` for an element or automorphism ``h``.

    Args:
        group (TableGroup): The group containing ``K``.
        h: Element (index, ``Element`` or cycle string) or
            ``Automorphism``.
        scope (SubgroupHandle, optional): ``K``, an ``h``-invariant
            subgroup; defaults to the whole group.

    Returns:
        EngelSink: The minimal left sink.

    Raises:
        NotInvariantError: if ``K`` is not ``h``-invariant.
    """
    h = as_acting(group, h)
    scope = _resolve_scope(group, h, scope)
    images = left_step_map(group, h).tolist()
    cycles, basins = _cycles_of_map(images, scope.members)
    counted = Counter()
    for cycle_id, cycle in enumerate(cycles):
        counted[canonical_rotation(cycle)] += basins[cycle_id]
    return _assemble(group, h, LEFT, 'group', scope, counted)


def _right_cycles_element(
    group: TableGroup, h: int, scope: SubgroupHandle
) -> Counter:
    table, inverses = group.table, group.inverses
    counted = Counter()
    for x in scope.members:
        x_inverse = inverses[x]
        first_visit = {}
        steps = []
        u = h
        while u not in first_visit:
            first_visit[u] = len(steps)
            steps.append(u)
            u = int(table[table[inverses[u], x_inverse], table[u, x]])
        counted[canonical_rotation(steps[first_visit[u]:])] += 1
    return counted


def _right_cycles_automorphism(
    group: TableGroup, phi: Automorphism, scope: SubgroupHandle,
    extended: bool
) -> Counter:
    """Right sink cycles of ``phi`` computed inside the base group.

    For ``x = y phi^i`` the first commutator ``[phi, x]`` is
    ``phi^i(phi(y)^-1 y)`` and each later step is
    ``u -> u^-1 phi^i(y^-1 u y)``.
    """
    table, inverses = group.table, group.inverses
    images = phi.images
    counted = Counter()
    exponents = range(phi.order) if extended else range(1)
    for i in exponents:
        twist = phi.powers[i]
        for y in scope.members:
            y_inverse = inverses[y]
            first_visit = {}
            steps = []
            u = int(twist[table[inverses[images[y]], y]])
            while u not in first_visit:
                first_visit[u] = len(steps)
                steps.append(u)
                conjugated = table[table[y_inverse, u], y]
                u = int(table[inverses[u], twist[conjugated]])
            counted[canonical_rotation(steps[first_visit[u]:])] += 1
    return counted


def _right_cycles(
    group: TableGroup, phi: Automorphism, scope: SubgroupHandle,
    extended: bool
) -> Counter:
    """Right sink cycles of ``phi``, walked as an element when it can be.

    For ``phi = inner(g)`` with ``g`` in ``K``, ``c = phi g^-1`` is central
    in ``G<phi>``, so ``[phi, x] = [g, x]`` and ``y phi^i`` acts as
    ``y g^i``. For each ``i`` those seeds run over ``K`` once.
    """
    g = phi.inner_element
    if g is None or g not in scope:
        return _right_cycles_automorphism(group, phi, scope, extended)
    counted = _right_cycles_element(group, g, scope)
    if extended:
        return Counter({cycle: n * phi.order for cycle, n in counted.items()})
    return counted


def right_sink(
    group: TableGroup,
    h,
    scope: Optional[SubgroupHandle] = None,
    seed_scope: Optional[str] = None
) -> EngelSink:
    """``R_K(h)`` for an element or automorphism ``h``.

    For an automorphism ``phi``, ``seed_scope='base'`` lets ``x`` range over
    ``K`` and ``seed_scope='extension'`` over ``K<phi>``; the default is
    ``'extension'``. For an element, the default ``'group'`` seeds over
    ``K`` and ``'extension'`` computes the sink of conjugation by ``h`` in
    ``G<inner(h)>``, which has the same members when ``h`` lies in ``K``.

    Raises:
        NotInvariantError: if ``K`` is not ``h``-invariant.
        ValueError: for an unknown ``seed_scope``.
    """
    h = as_acting(group, h)
    if seed_scope is not None and seed_scope not in SEED_SCOPES:
        raise ValueError('unknown seed scope {!r}'.format(seed_scope))
    scope = _resolve_scope(group, h, scope)

    if not isinstance(h, Automorphism):
        if seed_scope != 'extension':
            counted = _right_cycles_element(group, h, scope)
            return _assemble(group, h, RIGHT, 'group', scope, counted)
        counted = _right_cycles(group, inner(group, h), scope, True)
        return _assemble(group, h, RIGHT, 'extension', scope, counted)

    extended = seed_scope in (None, 'extension')
    counted = _right_cycles(group, h, scope, extended)
    return _assemble(
        group, h, RIGHT, 'extension' if extended else 'base', scope, counted
    )


def is_left_engel(group: TableGroup, h, scope=None) -> bool:
    return left_sink(group, h, scope).is_trivial()


def is_right_engel(group: TableGroup, h, scope=None, seed_scope=None) -> bool:
    return right_sink(group, h, scope, seed_scope).is_trivial()


def sink_image_under_quotient(
    sink: EngelSink, kernel: SubgroupHandle
) -> EngelSink:
    """The sink of the induced action on ``G/N``.

    The result is checked against the projection of ``sink``'s members.

    Raises:
        NotNormalError: if ``N`` is not normal.
        NotInvariantError: if ``N`` is not invariant under the acting
            element.
        InvariantViolationError: if the projection differs from the
            recomputed sink.
    """
    group, h = sink.group, sink.acting
    factor = quotient(group, kernel)
    if not is_invariant_under(group, h, kernel):
        raise NotInvariantError(
            'normal subgroup of order {} is not invariant under {}'.format(
                kernel.order, sink.owner
            )
        )
    if isinstance(h, Automorphism):
        image_h = induced(h, factor)
    else:
        image_h = int(factor.coset_of[h])
    image_scope = factor.project_subgroup(sink.scope)
    if sink.side == LEFT:
        image = left_sink(factor, image_h, image_scope)
    else:
        image = right_sink(factor, image_h, image_scope, sink.seed_scope)
    projected = factor.project(sink.members)
    if projected != image.members:
        raise InvariantViolationError(
            'image of {} in {} has {} members, the quotient sink has {}'.format(
                sink.owner, factor.name, len(projected), image.size
            )
        )
    return image

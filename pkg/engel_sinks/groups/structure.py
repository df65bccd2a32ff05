"""Sylow subgroups, p-cores, the Fitting subgroup and the TI property."""
import logging
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import List

import torch
from sympy import primefactors

from ..errors import InvariantViolationError
from ..numtheory import is_prime, p_part
from .series import is_nilpotent
from .subgroups import conjugate_subgroup, normalizer, subgroup_generated
from .table import SubgroupHandle, TableGroup, handle_from_mask

logger = logging.getLogger(__name__)


def _is_power_of(n: int, p: int) -> bool:
    return p_part(n, p)[1] == 1


@dataclass(frozen=True)
class SylowRecord:
    """A Sylow ``p``-subgroup with its cyclicity; TI is computed on demand."""

    prime: int
    subgroup: SubgroupHandle
    is_cyclic: bool
    group: TableGroup = field(compare=False, repr=False)

    @cached_property
    def is_TI(self) -> bool:
        return is_TI(self.group, self.subgroup)

    @property
    def order(self) -> int:
        return self.subgroup.order


def sylow(group: TableGroup, p: int) -> SylowRecord:
    """A Sylow ``p``-subgroup found by normalizer ascent.

    Starting from the trivial subgroup, ``P`` is repeatedly joined with the
    least ``p``-element of ``N_G(P)`` outside ``P`` for which the join is
    still a ``p``-group.

    Raises:
        ValueError: if ``p`` is not prime.
    """
    if not is_prime(p):
        raise ValueError('{} is not prime'.format(p))
    target, _ = p_part(group.order, p)
    orders = torch.from_numpy(group.element_orders)
    p_elements = torch.tensor(
        [_is_power_of(int(o), p) for o in orders.tolist()]
    )
    current = group.trivial
    while current.order < target:
        candidates = normalizer(group, current).mask & p_elements
        candidates &= ~current.mask
        for x in candidates.nonzero().flatten().tolist():
            joined = subgroup_generated(group, list(current.generators) + [x])
            if _is_power_of(joined.order, p):
                current = joined
                break
        else:
            raise InvariantViolationError(
                'normalizer ascent for p={} stalled at order {} in {}'.format(
                    p, current.order, group.name
                )
            )
    return SylowRecord(p, current, current.is_cyclic(), group)


def is_TI(group: TableGroup, subgroup: SubgroupHandle) -> bool:
    """Whether ``S`` meets each of its conjugates in ``1`` or ``S``."""
    if subgroup.order == 1 or subgroup.is_whole():
        return True
    table = group.cayley_table
    inverse = group.inverse_table
    for g in range(group.order):
        conjugate = table[table[inverse[g], subgroup.tensor], g]
        shared = int(subgroup.mask[conjugate].sum())
        if shared not in (1, subgroup.order):
            return False
    return True


def all_sylow_conjugates(group: TableGroup,
                         subgroup: SubgroupHandle) -> List[SubgroupHandle]:
    """The conjugacy orbit of a Sylow subgroup, sorted by members.

    Sylow's theorem is checked on the way: for ``|S| = p^a > 1`` the count is
    ``1 mod p`` and divides ``|G : S|``.
    """
    orbit = {}
    for g in range(group.order):
        conjugate = conjugate_subgroup(group, subgroup, g)
        orbit.setdefault(conjugate.members, conjugate)
    conjugates = [orbit[key] for key in sorted(orbit)]
    if subgroup.order > 1:
        p = primefactors(subgroup.order)[0]
        count = len(conjugates)
        index = group.order // subgroup.order
        if count % p != 1 % p or index % count:
            raise InvariantViolationError(
                '{} Sylow {}-subgroups in {} of index {}'.format(
                    count, p, group.name, index
                )
            )
    return conjugates


def p_core(group: TableGroup, p: int) -> SubgroupHandle:
    """``O_p(G)``, the intersection of all Sylow ``p``-subgroups."""
    conjugates = all_sylow_conjugates(group, sylow(group, p).subgroup)
    mask = reduce(torch.logical_and, (c.mask for c in conjugates))
    core = handle_from_mask(group, mask)
    return subgroup_generated(group, core.members)


def fitting_subgroup(group: TableGroup) -> SubgroupHandle:
    """``F(G)``, the product of the p-cores over primes dividing ``|G|``."""
    seeds = []
    for p in primefactors(group.order):
        seeds.extend(p_core(group, p).generators)
    fitting = subgroup_generated(group, seeds)
    if not fitting.is_normal():
        raise InvariantViolationError('Fitting subgroup is not normal')
    nilpotent, _ = is_nilpotent(fitting.as_group())
    if not nilpotent:
        raise InvariantViolationError('Fitting subgroup is not nilpotent')
    logger.debug('F(%s) has order %d', group.name, fitting.order)
    return fitting

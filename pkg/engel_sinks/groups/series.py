"""Commutator subgroups and the central and derived series."""
from typing import List, Optional, Tuple

import torch

from .quotient import quotient
from .subgroups import center, normal_closure, subgroup_generated
from .table import SubgroupHandle, TableGroup


def _generators(subgroup: SubgroupHandle) -> Tuple[int, ...]:
    if subgroup.generators or subgroup.is_trivial():
        return subgroup.generators
    return subgroup_generated(subgroup.parent, subgroup.members).generators


def commutator_of(
    group: TableGroup, first: SubgroupHandle, second: SubgroupHandle
) -> SubgroupHandle:
    """``[H, K]`` for normal subgroups ``H`` and ``K`` of ``group``."""
    seeds = {
        group.comm(h, k)
        for h in _generators(first) for k in _generators(second)
    }
    return normal_closure(group, sorted(seeds))


def derived_subgroup(group: TableGroup) -> SubgroupHandle:
    return commutator_of(group, group.whole, group.whole)


def lower_central_series(group: TableGroup) -> List[SubgroupHandle]:
    """``G = gamma_1 >= gamma_2 >= ...`` with ``gamma_{i+1} = [gamma_i, G]``.

    The list stops at the first repeated term, which is the nilpotent
    residual and appears once.
    """
    series = [group.whole]
    while True:
        following = commutator_of(group, series[-1], group.whole)
        if following == series[-1]:
            return series
        series.append(following)


def nilpotent_residual(group: TableGroup) -> SubgroupHandle:
    return lower_central_series(group)[-1]


def derived_series(group: TableGroup) -> List[SubgroupHandle]:
    series = [group.whole]
    while True:
        following = commutator_of(group, series[-1], series[-1])
        if following == series[-1]:
            return series
        series.append(following)


def upper_central_series(group: TableGroup) -> List[SubgroupHandle]:
    """``1 = Z_0 <= Z_1 <= ...`` up to the hypercentre.

    Each term is the preimage of the centre of the quotient by the previous
    one.
    """
    series = [group.trivial]
    while True:
        factor = quotient(group, series[-1])
        following = factor.preimage(center(factor).members)
        following = subgroup_generated(group, following.members)
        if following == series[-1]:
            return series
        series.append(following)


def hypercentre(group: TableGroup) -> SubgroupHandle:
    return upper_central_series(group)[-1]


def is_abelian(group: TableGroup) -> bool:
    return torch.equal(group.cayley_table, group.cayley_table.t())


def subgroup_is_abelian(subgroup: SubgroupHandle) -> bool:
    parent = subgroup.parent
    gens = _generators(subgroup)
    return all(parent.comm(a, b) == 0 for a in gens for b in gens)


def is_nilpotent(group: TableGroup) -> Tuple[bool, Optional[int]]:
    """Nilpotency and, when nilpotent, the class (0 for the trivial group)."""
    series = lower_central_series(group)
    if not series[-1].is_trivial():
        return False, None
    return True, len(series) - 1


def is_metabelian(group: TableGroup) -> bool:
    return subgroup_is_abelian(derived_subgroup(group))


def is_soluble(group: TableGroup) -> bool:
    return derived_series(group)[-1].is_trivial()

"""Subgroup constructions by scanning the Cayley table."""
import logging
from typing import Iterable, List, Tuple

import torch

from .table import SubgroupHandle, TableGroup, handle_from_mask

logger = logging.getLogger(__name__)


def _grow(
    group: TableGroup, mask: torch.Tensor, frontier: torch.Tensor,
    generators: List[int]
) -> torch.Tensor:
    """Breadth-first closure of ``mask`` under right multiplication."""
    table = group.cayley_table
    gens = torch.tensor(generators, dtype=torch.long)
    while frontier.numel():
        products = torch.unique(table[frontier][:, gens].reshape(-1))
        fresh = products[~mask[products]]
        mask[fresh] = True
        frontier = fresh
    return mask


def subgroup_generated(group: TableGroup, seeds: Iterable) -> SubgroupHandle:
    """Smallest subgroup containing ``seeds``.

    Seeds already inside the subgroup built so far are skipped, so the
    recorded generating set stays small.

    Args:
        group (TableGroup): Ambient group.
        seeds (Iterable): Element indices (or elements of a permutation
            group).

    Returns:
        SubgroupHandle: The generated subgroup.
    """
    mask = torch.zeros(group.order, dtype=torch.bool)
    mask[0] = True
    generators = []
    for seed in group.indices(seeds):
        if mask[seed]:
            continue
        generators.append(seed)
        current = mask.nonzero().flatten()
        mask = _grow(group, mask, current, generators)
    return handle_from_mask(group, mask, generators)


def normal_closure(group: TableGroup, seeds: Iterable) -> SubgroupHandle:
    """Smallest normal subgroup containing ``seeds``."""
    closure = subgroup_generated(group, seeds)
    inverse = group.inverse_table
    table = group.cayley_table
    while True:
        if not closure.generators:
            return closure
        gens = list(closure.generators)
        outside = []
        for g in group.generator_indices:
            images = table[table[inverse[g], gens], g]
            outside.extend(images[~closure.mask[images]].tolist())
        if not outside:
            return closure
        closure = subgroup_generated(group, gens + sorted(set(outside)))


def centralizer(group: TableGroup, elements: Iterable) -> SubgroupHandle:
    """Elements commuting with every member of ``elements``."""
    indices = group.indices(elements)
    if not indices:
        return group.whole
    table = group.cayley_table
    columns = torch.tensor(indices, dtype=torch.long)
    commuting = (table[:, columns] == table[columns, :].t()).all(dim=1)
    return handle_from_mask(group, commuting)


def center(group: TableGroup) -> SubgroupHandle:
    return centralizer(group, group.generator_indices)


def normalizer(group: TableGroup, subgroup: SubgroupHandle) -> SubgroupHandle:
    """Elements ``g`` with ``H^g = H``."""
    table = group.cayley_table
    inverse = group.inverse_table
    keeps = torch.ones(group.order, dtype=torch.bool)
    for h in subgroup.generators or subgroup.members:
        conjugates = table[table[inverse, h], group.arange]
        keeps &= subgroup.mask[conjugates]
    return handle_from_mask(group, keeps)


def conjugate_subgroup(
    group: TableGroup, subgroup: SubgroupHandle, g: int
) -> SubgroupHandle:
    """``H^g`` as a handle."""
    table = group.cayley_table
    images = table[table[group.inverse_table[g], subgroup.tensor], g]
    return SubgroupHandle(
        group, tuple(sorted(images.tolist())),
        tuple(group.conj(h, g) for h in subgroup.generators)
    )


def conjugacy_classes(group: TableGroup) -> List[Tuple[int, Tuple[int, ...]]]:
    """Conjugacy classes as ``(least member, sorted members)`` pairs."""
    remaining = torch.ones(group.order, dtype=torch.bool)
    classes = []
    while bool(remaining.any()):
        representative = int(remaining.nonzero()[0])
        members = torch.unique(group.conjugates_of(representative))
        remaining[members] = False
        classes.append((representative, tuple(members.tolist())))
    logger.debug('%s has %d conjugacy classes', group.name, len(classes))
    return classes


def is_simple(group: TableGroup) -> bool:
    """Nonabelian with no normal subgroups other than 1 and itself."""
    if group.order == 1 or torch.equal(
        group.cayley_table, group.cayley_table.t()
    ):
        return False
    for representative, _ in conjugacy_classes(group)[1:]:
        if not normal_closure(group, [representative]).is_whole():
            return False
    return True

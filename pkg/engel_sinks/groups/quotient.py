"""Quotients of table groups by normal subgroups."""
import logging
from functools import cached_property
from typing import Iterable, Tuple

import torch

from ..errors import InvariantViolationError, NotNormalError
from .table import SubgroupHandle, TableGroup

logger = logging.getLogger(__name__)


class QuotientGroup(TableGroup):
    """``G/N`` with cosets labelled by their least member in ``G``.

    Coset indices follow the order of the representatives, so the identity
    coset ``N`` is index 0.
    """

    def __init__(self, parent: TableGroup, kernel: SubgroupHandle):
        """Constructor.

        Args:
            parent (TableGroup): The group being divided.
            kernel (SubgroupHandle): A normal subgroup of ``parent``.

        Raises:
            NotNormalError: if ``kernel`` is not normal in ``parent``.
        """
        if kernel.parent is not parent:
            raise NotNormalError('kernel belongs to a different group')
        if not kernel.is_normal():
            raise NotNormalError(
                'subgroup of order {} is not normal in {}'.format(
                    kernel.order, parent.name
                )
            )
        self.parent = parent
        self.kernel = kernel
        self.name = '{}/N{}'.format(parent.name, kernel.order)

        table = parent.cayley_table
        least = table[kernel.tensor].min(dim=0).values
        self.cosets = torch.unique(least)
        self.coset_of = torch.searchsorted(self.cosets, least)
        if self.cosets.numel() * kernel.order != parent.order:
            raise InvariantViolationError(
                '{} cosets of a subgroup of order {} in a group of order {}'.
                format(self.cosets.numel(), kernel.order, parent.order)
            )
        self._table = self.coset_of[table[self.cosets][:, self.cosets]]
        self._spot_check()
        logger.debug('built %s of order %d', self.name, self.order)

    def _spot_check(self):
        t = self._table
        k = t.shape[0]
        if not torch.equal(t[0], torch.arange(k)):
            raise InvariantViolationError('identity coset is not neutral')
        if not bool((t == 0).any(dim=1).all()):
            raise InvariantViolationError('a coset has no inverse')
        sample = torch.arange(min(k, 8))
        left = t[t[sample][:, sample]][:, :, sample]
        right = t[sample][:, t[sample][:, sample]]
        if not torch.equal(left, right):
            raise InvariantViolationError('coset table is not associative')

    @property
    def cayley_table(self) -> torch.Tensor:
        return self._table

    @cached_property
    def generator_indices(self) -> Tuple[int, ...]:
        images = self.coset_of[list(self.parent.generator_indices)].tolist()
        return tuple(sorted(set(images) - {0}))

    @property
    def representatives(self) -> Tuple[int, ...]:
        return tuple(self.cosets.tolist())

    def project(self, members: Iterable[int]) -> Tuple[int, ...]:
        members = list(members)
        if not members:
            return ()
        return tuple(sorted(set(self.coset_of[members].tolist())))

    def project_subgroup(self, subgroup: SubgroupHandle) -> SubgroupHandle:
        return SubgroupHandle(
            self, self.project(subgroup.members),
            tuple(
                sorted(set(self.project(subgroup.generators)) - {0})
            )
        )

    def preimage(self, members: Iterable[int]) -> SubgroupHandle:
        mask = torch.zeros(self.order, dtype=torch.bool)
        mask[list(members)] = True
        lifted = mask[self.coset_of]
        return SubgroupHandle(
            self.parent, tuple(lifted.nonzero().flatten().tolist())
        )

    def describe(self, index: int) -> str:
        return '{}N'.format(
            self.parent.describe(int(self.cosets[index]))
        )


def quotient(group: TableGroup, kernel: SubgroupHandle) -> QuotientGroup:
    return QuotientGroup(group, kernel)

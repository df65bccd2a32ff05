"""Index-level algebra over a Cayley table.

Both enumerated permutation groups and quotient groups expose their elements
as indices ``0..order - 1`` into a multiplication table held as a
``torch.LongTensor``. Index 0 is always the identity.
"""
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np
import torch

from ..errors import NotInGroupError


class TableGroup:
    """Common machinery for groups stored as a Cayley table.

    Subclasses provide ``cayley_table``, ``generator_indices``, ``name`` and
    ``describe``.
    """

    name = ''

    @property
    def cayley_table(self) -> torch.Tensor:
        raise NotImplementedError

    @property
    def generator_indices(self) -> Tuple[int, ...]:
        raise NotImplementedError

    def describe(self, index: int) -> str:
        return str(index)

    def to_index(self, item) -> int:
        if isinstance(item, (int, np.integer)) and 0 <= item < self.order:
            return int(item)
        raise NotInGroupError('{!r} is not an element of {}'.format(item, self))

    def indices(self, items: Iterable) -> List[int]:
        return [self.to_index(item) for item in items]

    @property
    def order(self) -> int:
        return self.cayley_table.shape[0]

    @cached_property
    def table(self) -> np.ndarray:
        """Numpy view of the Cayley table for scalar lookups."""
        return self.cayley_table.numpy()

    @cached_property
    def inverse_table(self) -> torch.Tensor:
        return (self.cayley_table == 0).int().argmax(dim=1)

    @cached_property
    def inverses(self) -> np.ndarray:
        return self.inverse_table.numpy()

    @cached_property
    def arange(self) -> torch.Tensor:
        return torch.arange(self.order)

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    def comm(self, a: int, b: int) -> int:
        """``[a, b] = a^-1 b^-1 a b`` on indices."""
        t = self.table
        return int(
            t[t[self.inverses[a], self.inverses[b]], t[a, b]]
        )

    def conj(self, a: int, b: int) -> int:
        """``a^b = b^-1 a b`` on indices."""
        t = self.table
        return int(t[t[self.inverses[b], a], b])

    def power(self, a: int, exponent: int) -> int:
        if exponent < 0:
            a, exponent = self.inv(a), -exponent
        result = 0
        for _ in range(exponent):
            result = int(self.table[result, a])
        return result

    def element_order(self, a: int) -> int:
        result, current = 1, a
        while current != 0:
            current = int(self.table[current, a])
            result += 1
        return result

    @cached_property
    def element_orders(self) -> np.ndarray:
        return np.array([self.element_order(a) for a in range(self.order)])

    def commutator_map(self, x: int) -> torch.Tensor:
        """The map ``u -> [u, x]`` for every element ``u``."""
        t = self.cayley_table
        left = t[self.inverse_table, self.inverse_table[x]]
        right = t[:, x]
        return t[left, right]

    def conjugation_map(self, g: int) -> torch.Tensor:
        """The map ``u -> g^-1 u g`` for every element ``u``."""
        t = self.cayley_table
        return t[t[self.inverse_table[g], :], g]

    def conjugates_of(self, a: int) -> torch.Tensor:
        """``a^g`` for every ``g``, indexed by ``g``."""
        t = self.cayley_table
        return t[t[self.inverse_table, a], self.arange]

    @cached_property
    def whole(self) -> 'SubgroupHandle':
        return SubgroupHandle(
            self, tuple(range(self.order)), self.generator_indices
        )

    @cached_property
    def trivial(self) -> 'SubgroupHandle':
        return SubgroupHandle(self, (0, ), ())

    def is_trivial(self) -> bool:
        return self.order == 1

    def __repr__(self):
        return '<{} {} of order {}>'.format(
            type(self).__name__, self.name or '?', self.order
        )


@dataclass(frozen=True)
class SubgroupHandle:
    """A subgroup of a table group as a sorted tuple of element indices.

    ``generators`` is a generating set recorded when the subgroup was built;
    it does not take part in equality.
    """

    parent: TableGroup = field(compare=False, repr=False)
    members: Tuple[int, ...]
    generators: Tuple[int, ...] = field(default=(), compare=False)

    @property
    def order(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, index: int) -> bool:
        return bool(self.mask[index])

    @cached_property
    def mask(self) -> torch.Tensor:
        mask = torch.zeros(self.parent.order, dtype=torch.bool)
        mask[list(self.members)] = True
        return mask

    @cached_property
    def member_set(self) -> frozenset:
        return frozenset(self.members)

    @cached_property
    def tensor(self) -> torch.Tensor:
        return torch.tensor(self.members, dtype=torch.long)

    def is_trivial(self) -> bool:
        return self.members == (0, )

    def is_whole(self) -> bool:
        return len(self.members) == self.parent.order

    def issubset(self, other: Union['SubgroupHandle', Iterable[int]]) -> bool:
        others = other.member_set if isinstance(
            other, SubgroupHandle
        ) else set(other)
        return self.member_set <= others

    def intersection(self, other: 'SubgroupHandle') -> 'SubgroupHandle':
        return SubgroupHandle(
            self.parent, tuple(sorted(self.member_set & other.member_set))
        )

    def is_normal(self) -> bool:
        """Closed under conjugation by the parent's generators."""
        t = self.parent.cayley_table
        inverse = self.parent.inverse_table
        gens = self.generators or self.members
        for g in self.parent.generator_indices:
            images = t[t[inverse[g], list(gens)], g]
            if not bool(self.mask[images].all()):
                return False
        return True

    def is_cyclic(self) -> bool:
        orders = self.parent.element_orders[list(self.members)]
        return int(orders.max()) == self.order

    def describe(self) -> List[str]:
        return [self.parent.describe(i) for i in self.members]

    def as_group(self) -> 'SubgroupTable':
        return SubgroupTable(self)

    def __repr__(self):
        return '<SubgroupHandle of order {} in {}>'.format(
            self.order, self.parent.name or '?'
        )


def handle_from_mask(
    parent: TableGroup, mask: torch.Tensor, generators: Sequence[int] = ()
) -> SubgroupHandle:
    members = tuple(mask.nonzero().flatten().tolist())
    return SubgroupHandle(parent, members, tuple(generators))


class SubgroupTable(TableGroup):
    """A subgroup re-indexed as a table group of its own."""

    def __init__(self, subgroup: SubgroupHandle):
        self.subgroup = subgroup
        self.name = '{}[{}]'.format(subgroup.parent.name, subgroup.order)
        members = subgroup.tensor
        position = torch.full((subgroup.parent.order, ),
                              -1,
                              dtype=torch.long)
        position[members] = torch.arange(len(members))
        self.position = position
        parent_table = subgroup.parent.cayley_table
        self._table = position[parent_table[members][:, members]]

    @property
    def cayley_table(self) -> torch.Tensor:
        return self._table

    @cached_property
    def generator_indices(self) -> Tuple[int, ...]:
        gens = self.subgroup.generators or self.subgroup.members
        return tuple(int(self.position[g]) for g in gens)

    def describe(self, index: int) -> str:
        return self.subgroup.parent.describe(self.subgroup.members[index])

"""The semidirect extension ``G<phi>`` as a permutation group.

Elements are pairs ``(a, j)`` standing for ``a * phi^j`` with product
``(a, j)(b, k) = (a * phi^-j(b), j + k)``, so that ``phi^-1 x phi = phi(x)``.
The carrier is the right regular representation on the ``|G| * order(phi)``
pairs, with point ``(a, j)`` numbered ``a * order(phi) + j``.
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

import numpy as np
import torch

from ..config import CARRIER_CEILING
from ..errors import GroupTooLargeError, InvariantViolationError
from .automorphism import Automorphism
from .element import Element
from .finite_group import FiniteGroup, generate
from .table import SubgroupHandle, TableGroup

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExtensionGroup:
    """``G<phi>`` with embeddings of ``G`` and of the powers of ``phi``.

    ``embed[x]`` is the carrier index of base element ``x`` and
    ``phi_powers[i]`` the carrier index of ``phi^i``.
    """

    base: TableGroup
    aut: Automorphism
    carrier: FiniteGroup
    embed: torch.Tensor
    phi_powers: torch.Tensor

    @property
    def phi(self) -> int:
        return int(self.phi_powers[1 % len(self.phi_powers)])

    @cached_property
    def base_subgroup(self) -> SubgroupHandle:
        return SubgroupHandle(
            self.carrier, tuple(sorted(self.embed.tolist())),
            tuple(int(self.embed[g]) for g in self.base.generator_indices)
        )

    @cached_property
    def projection(self) -> np.ndarray:
        """Carrier index to base index, ``-1`` outside the base."""
        result = np.full(self.carrier.order, -1, dtype=np.int64)
        result[self.embed.numpy()] = np.arange(self.base.order)
        return result

    def to_base(self, members) -> tuple:
        values = self.projection[list(members)]
        if (values < 0).any():
            raise InvariantViolationError(
                'carrier elements outside the embedded base group'
            )
        return tuple(sorted(values.tolist()))


def _pair_permutation(
    table: np.ndarray, powers: np.ndarray, b: int, i: int
) -> Element:
    """Right multiplication by ``(b, i)`` on all pairs."""
    n, k = table.shape[0], powers.shape[0]
    rows = np.arange(n)[:, None]
    shifts = np.arange(k)[None, :]
    new_a = table[rows, powers[(k - shifts) % k, b]]
    new_j = (shifts + i) % k
    return Element(tuple((new_a * k + new_j).reshape(-1).tolist()))


def extension(
    group: TableGroup, phi: Automorphism, name: Optional[str] = None
) -> ExtensionGroup:
    """Build ``G<phi>``, always as the external product of order
    ``|G| * order(phi)``.

    Raises:
        GroupTooLargeError: if the carrier order passes ``CARRIER_CEILING``.
        InvariantViolationError: if the carrier fails its consistency
            checks.
    """
    n, k = group.order, phi.order
    if n * k > CARRIER_CEILING:
        raise GroupTooLargeError(
            'G<phi> for {} and {} would have order {} > {}'.format(
                group.name, phi.label, n * k, CARRIER_CEILING
            )
        )
    table = group.table
    powers = np.stack(phi.powers)
    generators = [
        _pair_permutation(table, powers, g, 0)
        for g in group.generator_indices
    ]
    if k > 1:
        generators.append(_pair_permutation(table, powers, 0, 1))
    carrier = generate(
        n * k,
        generators,
        name=name or '{}<{}>'.format(group.name, phi.label),
        ceiling=CARRIER_CEILING
    )

    # (a, j) is the image of point (0, 0), numbered a * k + j.
    by_point = np.empty(n * k, dtype=np.int64)
    by_point[carrier.perms[:, 0]] = np.arange(carrier.order)
    embed = torch.from_numpy(by_point[np.arange(n) * k])
    phi_powers = torch.from_numpy(by_point[np.arange(k)])
    result = ExtensionGroup(group, phi, carrier, embed, phi_powers)
    _verify(result)
    logger.debug('built %s of order %d', carrier.name, carrier.order)
    return result


def _verify(ext: ExtensionGroup):
    base, carrier = ext.base, ext.carrier
    if carrier.order != base.order * ext.aut.order:
        raise InvariantViolationError(
            'carrier order {} != {} * {}'.format(
                carrier.order, base.order, ext.aut.order
            )
        )
    ct = carrier.cayley_table
    embed = ext.embed
    if not torch.equal(embed[base.cayley_table], ct[embed[:, None],
                                                    embed[None, :]]):
        raise InvariantViolationError('base embedding is not a homomorphism')
    if not ext.base_subgroup.is_normal():
        raise InvariantViolationError('embedded base is not normal')
    phi = ext.phi
    conjugated = ct[ct[carrier.inverse_table[phi], embed], phi]
    if not torch.equal(conjugated, embed[ext.aut.table]):
        raise InvariantViolationError(
            'conjugation by phi disagrees with {}'.format(ext.aut.label)
        )

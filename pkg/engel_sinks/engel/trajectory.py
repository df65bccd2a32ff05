"""Eventually periodic orbits of commutator maps."""
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, List, Tuple, Union

import torch

from ..config import CARRIER_CEILING
from ..groups import Automorphism, TableGroup, extension
from ..groups.table import SubgroupHandle

Acting = Union[int, Automorphism]


@dataclass(frozen=True)
class Trajectory:
    """``seed, f(seed), f(f(seed)), ...`` up to the first repeat.

    ``steps`` holds every element once; the orbit re-enters at
    ``steps[tail_start]``. When the seed is an automorphism walked in
    semidirect coordinates it is not an element of ``group``: ``offset`` is
    then 1 and ``steps`` starts at the first commutator.
    """

    group: TableGroup = field(compare=False, repr=False)
    seed: Acting
    steps: Tuple[int, ...]
    tail_start: int
    offset: int = 0

    @property
    def cycle(self) -> Tuple[int, ...]:
        return self.steps[self.tail_start:]

    @property
    def tail(self) -> Tuple[int, ...]:
        return self.steps[:self.tail_start]

    @property
    def cycle_length(self) -> int:
        return len(self.steps) - self.tail_start

    def at(self, k: int) -> Acting:
        """The ``k``-th iterate, for any ``k >= 0``."""
        if k < self.offset:
            return self.seed
        k -= self.offset
        if k < len(self.steps):
            return self.steps[k]
        return self.steps[self.tail_start +
                          (k - self.tail_start) % self.cycle_length]

    def describe(self) -> List[str]:
        return [self.group.describe(u) for u in self.steps]


@dataclass(frozen=True)
class LimitCycle:
    """A cycle rotated to start at its least index, with its basin size."""

    members: Tuple[int, ...]
    seeds: int = field(default=1, compare=False)

    @property
    def length(self) -> int:
        return len(self.members)

    def is_trivial(self) -> bool:
        return self.members == (0, )


def canonical_rotation(cycle) -> Tuple[int, ...]:
    cycle = tuple(cycle)
    start = cycle.index(min(cycle))
    return cycle[start:] + cycle[:start]


def walk(group: TableGroup, step: Callable[[int], int], seed: int) -> Trajectory:
    """Iterate ``step`` from ``seed`` with a first-visit table."""
    first_visit = {}
    steps = []
    u = seed
    while u not in first_visit:
        first_visit[u] = len(steps)
        steps.append(u)
        u = step(u)
    return Trajectory(group, seed, tuple(steps), first_visit[u])


def left_step_map(group: TableGroup, h: Acting) -> torch.Tensor:
    """``u -> [u, h]``, or ``u -> u^-1 phi(u)`` for an automorphism."""
    if isinstance(h, Automorphism):
        return group.cayley_table[group.inverse_table, h.table]
    return group.commutator_map(h)


def left_trajectory(group: TableGroup, x, h: Acting) -> Trajectory:
    """The orbit of ``x`` under ``u -> [u, h]``."""
    images = left_step_map(group, as_acting(group, h)).tolist()
    return walk(group, images.__getitem__, group.to_index(x))


def right_trajectory(
    group: TableGroup, h: Acting, x, phi_power: int = 0
) -> Trajectory:
    """The orbit of ``h`` under ``u -> [u, x]``.

    For an automorphism ``x`` stands for ``x * phi^phi_power``. The walk runs
    in the carrier of ``G<phi>``, seeded at the embedded ``phi``, unless the
    carrier would pass ``CARRIER_CEILING``; then it runs in semidirect
    coordinates inside ``G``.
    """
    h = as_acting(group, h)
    if isinstance(h, Automorphism):
        if group.order * h.order > CARRIER_CEILING:
            return _coordinate_trajectory(
                group, h, group.to_index(x), phi_power % h.order
            )
        ext = carrier_of(h)
        carrier = ext.carrier
        y = carrier.mul(
            int(ext.embed[group.to_index(x)]),
            int(ext.phi_powers[phi_power % h.order])
        )
        return walk(carrier, lambda u: carrier.comm(u, y), ext.phi)
    x = group.to_index(x)
    return walk(group, lambda u: group.comm(u, x), h)


def _coordinate_trajectory(
    group: TableGroup, phi: Automorphism, y: int, i: int
) -> Trajectory:
    """``[phi, y phi^i]`` is ``phi^i(phi(y)^-1 y)``; later steps are
    ``u -> u^-1 phi^i(y^-1 u y)``."""
    table, inverses = group.table, group.inverses
    twist = phi.powers[i]
    y_inverse = inverses[y]

    def step(u: int) -> int:
        return int(table[inverses[u], twist[table[table[y_inverse, u], y]]])

    first = int(twist[table[inverses[phi.images[y]], y]])
    orbit = walk(group, step, first)
    return Trajectory(group, phi, orbit.steps, orbit.tail_start, offset=1)


@lru_cache(maxsize=16)
def carrier_of(phi: Automorphism):
    """``G<phi>`` for ``phi``, built once per automorphism."""
    return extension(phi.group, phi)


def as_acting(group: TableGroup, h: Acting) -> Acting:
    if isinstance(h, Automorphism):
        return h
    return group.to_index(h)


def is_invariant_under(group: TableGroup, h: Acting,
                       scope: SubgroupHandle) -> bool:
    if isinstance(h, Automorphism):
        return h.is_invariant(scope)
    images = group.conjugation_map(h)[scope.tensor]
    return bool(scope.mask[images].all())

"""What the checks and the survey iterate over, and the sinks they share."""
import logging
from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Dict, List, Optional, Tuple

from ..config import AUTOMORPHISM_ENUMERATION_LIMIT
from ..engel import EngelSink, left_sink, right_sink
from ..errors import GroupTooLargeError
from ..groups import (
    Automorphism, FiniteGroup, SubgroupHandle, center, commutator_subgroup,
    conjugacy_classes, enumerate_automorphisms, fitting_subgroup, hypercentre,
    identity_automorphism, inner, invariant_normal_subgroups, is_abelian,
    is_metabelian, is_nilpotent, is_simple, minimal_invariant_normal_subgroups
)
from ..groups.catalog import catalog_automorphisms

logger = logging.getLogger(__name__)

# Groups up to this order have every element checked, larger ones one
# element per conjugacy class.
ELEMENT_SWEEP_LIMIT = 200


@dataclass(frozen=True)
class AutomorphismSubject:
    """An automorphism standing for ``members``'s inner automorphisms.

    ``members`` is empty when the automorphism stands only for itself.
    """

    phi: Automorphism
    members: Tuple[int, ...] = ()

    @property
    def multiplicity(self) -> int:
        return len(self.members) or 1


@dataclass(frozen=True)
class ElementSubject:
    index: int
    multiplicity: int = 1


class GroupContext:
    """Subjects of one group with every sink computed at most once."""

    def __init__(self, group: FiniteGroup):
        """Constructor.

        Args:
            group (FiniteGroup): A catalog group.
        """
        self.group = group
        self._sinks: Dict[tuple, EngelSink] = {}
        self._commutators: Dict[tuple, SubgroupHandle] = {}
        self._normals: Dict[tuple, List[SubgroupHandle]] = {}

    @property
    def name(self) -> str:
        return self.group.name

    @cached_property
    def automorphisms(self) -> List[AutomorphismSubject]:
        """All automorphisms of small groups, else inner class representatives.

        Automorphisms the catalog attaches to the group follow the inner ones.
        """
        group = self.group
        if group.order <= AUTOMORPHISM_ENUMERATION_LIMIT:
            try:
                return [
                    AutomorphismSubject(phi)
                    for phi in enumerate_automorphisms(group)
                ]
            except GroupTooLargeError as error:
                logger.warning('%s; using inner automorphisms', error)
        subjects = [
            AutomorphismSubject(inner(group, rep), members)
            for rep, members in conjugacy_classes(group)
        ]
        for phi in catalog_automorphisms(group):
            if all(s.phi != phi for s in subjects):
                subjects.append(AutomorphismSubject(phi))
        return subjects

    @cached_property
    def elements(self) -> List[ElementSubject]:
        group = self.group
        if group.order <= ELEMENT_SWEEP_LIMIT:
            return [ElementSubject(g) for g in range(group.order)]
        return [
            ElementSubject(rep, len(members))
            for rep, members in conjugacy_classes(group)
        ]

    @cached_property
    def abelian(self) -> bool:
        return is_abelian(self.group)

    @cached_property
    def metabelian(self) -> bool:
        return is_metabelian(self.group)

    @cached_property
    def nilpotent(self) -> bool:
        return is_nilpotent(self.group)[0]

    @cached_property
    def simple(self) -> bool:
        return is_simple(self.group)

    @cached_property
    def fitting(self) -> SubgroupHandle:
        return fitting_subgroup(self.group)

    @cached_property
    def hypercentre(self) -> SubgroupHandle:
        return hypercentre(self.group)

    @cached_property
    def centre(self) -> SubgroupHandle:
        return center(self.group)

    @cached_property
    def minimal_normals(self) -> List[SubgroupHandle]:
        """Minimal normal subgroups of the group."""
        return minimal_invariant_normal_subgroups(
            identity_automorphism(self.group)
        )

    def describe(self, subject: Optional[AutomorphismSubject] = None) -> str:
        if subject is None:
            return self.name
        return '{} {}'.format(self.name, subject.phi.label)

    def is_coprime(self, phi: Automorphism) -> bool:
        return gcd(self.group.order, phi.order) == 1

    def _key(self, h) -> tuple:
        if isinstance(h, Automorphism):
            return ('aut', tuple(h.table.tolist()))
        return ('element', int(h))

    def left(self, h) -> EngelSink:
        key = ('left', ) + self._key(h)
        if key not in self._sinks:
            self._sinks[key] = left_sink(self.group, h)
        return self._sinks[key]

    def right(self, h, seed_scope: Optional[str] = None) -> EngelSink:
        key = ('right', seed_scope) + self._key(h)
        if key not in self._sinks:
            self._sinks[key] = right_sink(self.group, h, seed_scope=seed_scope)
        return self._sinks[key]

    def commutator(self, phi: Automorphism) -> SubgroupHandle:
        """``[G, phi]``."""
        key = self._key(phi)
        if key not in self._commutators:
            self._commutators[key] = commutator_subgroup(phi)
        return self._commutators[key]

    def is_onto(self, phi: Automorphism) -> bool:
        return self.commutator(phi).is_whole()

    def invariant_normals(self, phi: Automorphism) -> List[SubgroupHandle]:
        key = self._key(phi)
        if key not in self._normals:
            self._normals[key] = invariant_normal_subgroups(phi)
        return self._normals[key]

    def minimal_invariant_normals(
        self, phi: Automorphism
    ) -> List[SubgroupHandle]:
        return minimal_invariant_normal_subgroups(
            phi, self.invariant_normals(phi)
        )

"""Automorphisms of table groups as full permutation tables of indices."""
import itertools
import logging
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

import numpy as np
import torch

from ..config import AUTOMORPHISM_ENUMERATION_LIMIT, AUTOMORPHISM_SEARCH_LIMIT
from ..errors import (
    GroupTooLargeError, InvariantViolationError, NotAHomomorphismError,
    NotInvariantError
)
from ..numtheory import is_prime, p_part
from .quotient import QuotientGroup
from .subgroups import conjugacy_classes, normal_closure, subgroup_generated
from .table import SubgroupHandle, TableGroup, handle_from_mask

logger = logging.getLogger(__name__)


class Automorphism:
    """A bijective endomorphism of a table group, stored as an index table.

    Equality is table equality over the same group object.
    """

    def __init__(
        self,
        group: TableGroup,
        table: torch.Tensor,
        label: str = '',
        validate: bool = True,
        inner_element: Optional[int] = None
    ):
        """Constructor.

        Args:
            group (TableGroup): The group acted on.
            table (torch.Tensor): ``table[x]`` is the image of element ``x``.
            label (str): Display label.
            validate (bool): Check bijectivity and the homomorphism property
                over all pairs.
            inner_element (int, optional): ``g`` when this is conjugation by
                ``g``.

        Raises:
            NotAHomomorphismError: when validation fails.
        """
        self.group = group
        self.table = table.to(torch.long)
        self.label = label
        self.inner_element = inner_element
        if validate:
            self._validate()

    def _validate(self):
        n = self.group.order
        if self.table.shape != (n, ) or not torch.equal(
            torch.sort(self.table).values, torch.arange(n)
        ):
            raise NotAHomomorphismError(
                '{} is not a bijection of {}'.format(
                    self.label or 'map', self.group.name
                )
            )
        t = self.group.cayley_table
        images_of_products = self.table[t]
        products_of_images = t[self.table.unsqueeze(1), self.table.unsqueeze(0)]
        mismatch = (images_of_products != products_of_images).nonzero()
        if mismatch.numel():
            a, b = mismatch[0].tolist()
            raise NotAHomomorphismError(
                '{} does not respect the product of {} and {}'.format(
                    self.label or 'map', self.group.describe(a),
                    self.group.describe(b)
                )
            )

    @cached_property
    def images(self) -> np.ndarray:
        return self.table.numpy()

    def __call__(self, x: int) -> int:
        return int(self.images[x])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Automorphism) and other.group is self.group and
            torch.equal(self.table, other.table)
        )

    def __hash__(self):
        return hash((id(self.group), tuple(self.table.tolist())))

    def __repr__(self):
        return '<Automorphism {} of {}>'.format(self.label, self.group.name)

    def compose(self, other: 'Automorphism') -> 'Automorphism':
        """Apply ``self`` and then ``other``."""
        return Automorphism(
            self.group,
            other.table[self.table],
            label='{}*{}'.format(self.label, other.label),
            validate=False
        )

    @cached_property
    def order(self) -> int:
        current, result = self.table, 1
        identity = torch.arange(self.group.order)
        while not torch.equal(current, identity):
            current = self.table[current]
            result += 1
        return result

    def is_identity(self) -> bool:
        return self.order == 1

    def power(self, exponent: int) -> 'Automorphism':
        exponent %= self.order
        current = torch.arange(self.group.order)
        for _ in range(exponent):
            current = self.table[current]
        inner = None
        if self.inner_element is not None:
            inner = self.group.power(self.inner_element, exponent)
        return Automorphism(
            self.group,
            current,
            label='{}^{}'.format(self.label, exponent),
            validate=False,
            inner_element=inner
        )

    def inverse(self) -> 'Automorphism':
        return self.power(self.order - 1)

    @cached_property
    def powers(self) -> List[np.ndarray]:
        """``phi^i`` as image arrays for ``0 <= i < order``."""
        return [self.power(i).images for i in range(self.order)]

    def is_invariant(self, subgroup: SubgroupHandle) -> bool:
        return bool(subgroup.mask[self.table[subgroup.tensor]].all())

    def describe(self) -> str:
        return self.label


def apply(phi: Automorphism, x) -> int:
    return phi(phi.group.to_index(x))


def power(phi: Automorphism, exponent: int) -> Automorphism:
    return phi.power(exponent)


def order(phi: Automorphism) -> int:
    return phi.order


def identity_automorphism(group: TableGroup) -> Automorphism:
    return Automorphism(
        group,
        torch.arange(group.order),
        label='id',
        validate=False,
        inner_element=0
    )


def inner(group: TableGroup, g) -> Automorphism:
    """Conjugation ``x -> g^-1 x g``."""
    g = group.to_index(g)
    return Automorphism(
        group,
        group.conjugation_map(g),
        label='inner{}'.format(group.describe(g)),
        validate=False,
        inner_element=g
    )


def power_map(group: TableGroup, exponent: int) -> Automorphism:
    """``x -> x^k``, an automorphism of abelian groups for suitable ``k``."""
    images = torch.tensor(
        [group.power(x, exponent) for x in range(group.order)]
    )
    return Automorphism(group, images, label='power:{}'.format(exponent))


def inversion(group: TableGroup) -> Automorphism:
    return Automorphism(group, group.inverse_table, label='invert')


def from_images(
    group: TableGroup, generator_images: Sequence, label: str = ''
) -> Automorphism:
    """Extend generator images to a full table and validate it.

    Images are propagated along the breadth-first spanning tree of the
    Cayley graph on the group's generators; a conflict along the way already
    disproves the homomorphism property.

    Args:
        group (TableGroup): The group.
        generator_images (Sequence): One image per entry of
            ``group.generator_indices``.
        label (str): Display label.

    Raises:
        NotAHomomorphismError: if the images do not define an automorphism.
    """
    gens = list(group.generator_indices)
    targets = group.indices(generator_images)
    if len(targets) != len(gens):
        raise NotAHomomorphismError(
            '{} generator images given for {} generators'.format(
                len(targets), len(gens)
            )
        )
    table = group.table
    images = [-1] * group.order
    images[0] = 0
    queue = [0]
    for x in queue:
        for g, target in zip(gens, targets):
            y = int(table[x, g])
            value = int(table[images[x], target])
            if images[y] == -1:
                images[y] = value
                queue.append(y)
            elif images[y] != value:
                raise NotAHomomorphismError(
                    'images {} do not extend to a homomorphism'.format(
                        [group.describe(t) for t in targets]
                    )
                )
    if not label:
        label = 'gens->[{}]'.format(','.join(group.describe(t) for t in targets))
    return Automorphism(group, torch.tensor(images), label=label)


def fixed_subgroup(phi: Automorphism) -> SubgroupHandle:
    """``C_G(phi)``."""
    fixed = phi.table == phi.group.arange
    return subgroup_generated(
        phi.group,
        handle_from_mask(phi.group, fixed).members
    )


def commutator_subgroup(
    phi: Automorphism, within: Optional[SubgroupHandle] = None
) -> SubgroupHandle:
    """``[B, phi]``, generated by ``b^-1 phi(b)`` for ``b`` in ``B``.

    ``B`` defaults to the whole group, in which case the result must be
    normal.
    """
    group = phi.group
    members = within.tensor if within is not None else group.arange
    values = group.cayley_table[group.inverse_table[members],
                                phi.table[members]]
    result = subgroup_generated(group, torch.unique(values).tolist())
    if within is None and not result.is_normal():
        raise InvariantViolationError(
            '[G, phi] is not normal for {}'.format(phi.label)
        )
    return result


def coprime_parts(phi: Automorphism,
                  p: int) -> Tuple[Automorphism, Automorphism]:
    """Split ``phi`` into commuting ``p`` and ``p'`` powers.

    With ``order(phi) = n_p * n'``, returns ``phi^a`` and ``phi^b`` where
    ``a = 1 mod n_p``, ``a = 0 mod n'`` and ``b`` the other way round.

    Raises:
        ValueError: if ``p`` is not prime.
    """
    if not is_prime(p):
        raise ValueError('{} is not prime'.format(p))
    n_p, n_rest = p_part(phi.order, p)
    if n_rest == 1:
        return phi, phi.power(0)
    if n_p == 1:
        return phi.power(0), phi
    a = n_rest * pow(n_rest, -1, n_p)
    b = n_p * pow(n_p, -1, n_rest)
    return phi.power(a), phi.power(b)


def enumerate_automorphisms(
    group: TableGroup,
    limit: int = AUTOMORPHISM_ENUMERATION_LIMIT
) -> List[Automorphism]:
    """All automorphisms of a small group, sorted by table.

    Candidate images of each generator are restricted to elements of the
    same order.

    Raises:
        GroupTooLargeError: above ``limit`` or when the candidate space is
            too large to search.
    """
    if group.order > limit:
        raise GroupTooLargeError(
            'automorphisms of {} (order {}) are not enumerated above order {}'.
            format(group.name, group.order, limit)
        )
    gens = list(group.generator_indices)
    orders = group.element_orders
    candidates = [
        np.flatnonzero(orders == orders[g]).tolist() for g in gens
    ]
    space = int(np.prod([len(c) for c in candidates], dtype=np.int64))
    if space > AUTOMORPHISM_SEARCH_LIMIT:
        raise GroupTooLargeError(
            '{} candidate generator images for {}'.format(space, group.name)
        )

    found = {}
    for assignment in itertools.product(*candidates):
        try:
            phi = from_images(group, assignment)
        except NotAHomomorphismError:
            continue
        found.setdefault(tuple(phi.table.tolist()), phi)
    automorphisms = [found[key] for key in sorted(found)]
    for k, phi in enumerate(automorphisms):
        phi.label = 'aut{}:{}'.format(k, phi.label)
    logger.debug('%s has %d automorphisms', group.name, len(automorphisms))
    return automorphisms


def invariant_normal_closure(phi: Automorphism, seeds) -> SubgroupHandle:
    """Smallest ``phi``-invariant normal subgroup containing ``seeds``."""
    group = phi.group
    closure = normal_closure(group, seeds)
    while True:
        gens = list(closure.generators)
        images = [phi(g) for g in gens]
        if all(closure.mask[i] for i in images):
            return closure
        closure = normal_closure(group, gens + images)


def invariant_normal_subgroups(phi: Automorphism) -> List[SubgroupHandle]:
    """Every ``phi``-invariant normal subgroup, sorted by order then members.

    Built as the join-closure of the invariant normal closures of single
    elements, which are constant on conjugacy classes.
    """
    group = phi.group
    closures = {group.trivial.members: group.trivial}
    for representative, _ in conjugacy_classes(group)[1:]:
        closure = invariant_normal_closure(phi, [representative])
        closures.setdefault(closure.members, closure)

    lattice = dict(closures)
    changed = True
    while changed:
        changed = False
        for first, second in itertools.combinations(list(lattice.values()), 2):
            if first.issubset(second) or second.issubset(first):
                continue
            join = subgroup_generated(
                group, list(first.generators) + list(second.generators)
            )
            if join.members not in lattice:
                lattice[join.members] = join
                changed = True
    return sorted(lattice.values(), key=lambda h: (h.order, h.members))


def minimal_invariant_normal_subgroups(
    phi: Automorphism, normals: Optional[List[SubgroupHandle]] = None
) -> List[SubgroupHandle]:
    """Nontrivial ``phi``-invariant normal subgroups minimal under inclusion.

    ``normals`` may pass the output of ``invariant_normal_subgroups(phi)``.
    """
    if normals is None:
        normals = invariant_normal_subgroups(phi)
    nontrivial = [h for h in normals if h.order > 1]
    return [
        h for h in nontrivial if not any(
            k.order < h.order and k.issubset(h) for k in nontrivial
        )
    ]


def induced(phi: Automorphism, factor: QuotientGroup) -> Automorphism:
    """The automorphism of ``G/N`` induced by ``phi``.

    Raises:
        NotInvariantError: if ``N`` is not ``phi``-invariant.
    """
    if factor.parent is not phi.group:
        raise NotInvariantError('quotient of a different group')
    if not phi.is_invariant(factor.kernel):
        raise NotInvariantError(
            'kernel of order {} is not invariant under {}'.format(
                factor.kernel.order, phi.label
            )
        )
    images = factor.coset_of[phi.table[factor.cosets]]
    inner_element = None
    if phi.inner_element is not None:
        inner_element = int(factor.coset_of[phi.inner_element])
    return Automorphism(
        factor,
        images,
        label='{} mod N{}'.format(phi.label, factor.kernel.order),
        validate=False,
        inner_element=inner_element
    )

"""Fully enumerated permutation groups."""
import logging
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import torch

from ..config import ENUMERATION_CEILING
from ..errors import (
    CycleParseError, DegreeMismatchError, GroupTooLargeError, NotInGroupError
)
from .element import Element, format_cycles, parse_cycles
from .table import TableGroup

logger = logging.getLogger(__name__)


class FiniteGroup(TableGroup):
    """A permutation group with every element enumerated.

    Elements are sorted lexicographically by image tuple, so the identity is
    index 0 and index order is the canonical element order.
    """

    def __init__(
        self,
        degree: int,
        generators: Sequence[Element],
        perms: np.ndarray,
        name: str = '',
        tier: Optional[int] = None,
        family: Optional[Tuple[str, int]] = None
    ):
        """Constructor. Use ``generate`` rather than calling this directly.

        Args:
            degree (int): Size of the permuted domain.
            generators (Sequence[Element]): Generators as given by the caller.
            perms (np.ndarray): ``order x degree`` image arrays in canonical
                order.
            name (str): Display name.
            tier (int, optional): Catalog tier.
            family (tuple, optional): Catalog family tag such as
                ``('alternating', 5)``.
        """
        self.degree = degree
        self.generators = tuple(generators)
        self.perms = perms
        self.name = name
        self.tier = tier
        self.family = family

    @cached_property
    def elements(self) -> List[Element]:
        return [Element(tuple(row)) for row in self.perms.tolist()]

    @cached_property
    def index(self) -> Dict[Element, int]:
        return {element: i for i, element in enumerate(self.elements)}

    def index_of(self, element: Element) -> int:
        if element.degree != self.degree:
            raise DegreeMismatchError(
                'element of degree {} used with a group of degree {}'.format(
                    element.degree, self.degree
                )
            )
        try:
            return self.index[element]
        except KeyError:
            raise NotInGroupError(
                '{} is not an element of {}'.format(element, self.name)
            )

    def to_index(self, item) -> int:
        if isinstance(item, Element):
            return self.index_of(item)
        if isinstance(item, str):
            return self.index_of(parse_cycles(item, self.degree))
        return super(FiniteGroup, self).to_index(item)

    def element(self, index: int) -> Element:
        return self.elements[index]

    def describe(self, index: int) -> str:
        return format_cycles(self.elements[index])

    @cached_property
    def generator_indices(self) -> Tuple[int, ...]:
        return tuple(self.index_of(g) for g in self.generators)

    @cached_property
    def cayley_table(self) -> torch.Tensor:
        return torch.from_numpy(cayley_table(self.perms))

    def __contains__(self, element: Element) -> bool:
        return element in self.index


def _base_points(perms: np.ndarray) -> List[int]:
    """Points whose images separate all elements."""
    order, degree = perms.shape
    base = []
    classes = np.zeros(order, dtype=np.int64)
    while len(np.unique(classes)) < order:
        best, best_count = None, -1
        for point in range(degree):
            if point in base:
                continue
            refined = classes * degree + perms[:, point]
            count = len(np.unique(refined))
            if count > best_count:
                best, best_count = point, count
        base.append(best)
        _, classes = np.unique(
            classes * degree + perms[:, best], return_inverse=True
        )
    return base


def cayley_table(perms: np.ndarray) -> np.ndarray:
    """Multiplication table of canonically sorted permutations.

    Each element is identified by its images of a small set of base points;
    row ``i`` is looked up from ``perms[:, perms[i, base]]``.
    """
    order, degree = perms.shape
    table = np.empty((order, order), dtype=np.int64)
    if order == 1:
        table[0, 0] = 0
        return table
    base = _base_points(perms)
    radix = degree**np.arange(len(base) - 1, -1, -1, dtype=np.int64)
    if degree**len(base) < 2**62:
        keys = perms[:, base].astype(np.int64) @ radix
        ordering = np.argsort(keys)
        sorted_keys = keys[ordering]
        for i in range(order):
            # (p_i * p_j)[b] = p_j[p_i[b]]
            products = perms[:, perms[i, base]].astype(np.int64) @ radix
            table[i] = ordering[np.searchsorted(sorted_keys, products)]
    else:
        lookup = {
            row.tobytes(): j
            for j, row in enumerate(np.ascontiguousarray(perms[:, base]))
        }
        for i in range(order):
            products = np.ascontiguousarray(perms[:, perms[i, base]])
            table[i] = [lookup[row.tobytes()] for row in products]
    return table


def generate(
    degree: int,
    generators: Sequence[Element],
    name: str = '',
    tier: Optional[int] = None,
    family: Optional[Tuple[str, int]] = None,
    ceiling: int = ENUMERATION_CEILING
) -> FiniteGroup:
    """Enumerate ``<generators>`` by breadth-first closure.

    Args:
        degree (int): Domain size, at least 1.
        generators (Sequence[Element]): Generators, possibly empty.
        name (str): Display name.
        tier (int, optional): Catalog tier.
        family (tuple, optional): Catalog family tag.
        ceiling (int): Largest order enumerated.

    Returns:
        FiniteGroup: The group with canonically ordered elements.

    Raises:
        CycleParseError: for an empty domain.
        DegreeMismatchError: if a generator has another degree.
        GroupTooLargeError: when the closure passes ``ceiling``.
    """
    if degree < 1:
        raise CycleParseError('a permutation group needs a nonempty domain')
    for generator in generators:
        if generator.degree != degree:
            raise DegreeMismatchError(
                'generator {} has degree {}, expected {}'.format(
                    generator, generator.degree, degree
                )
            )

    identity = np.arange(degree, dtype=np.int32)
    gens = [np.array(g.images, dtype=np.int32) for g in generators]
    seen = {identity.tobytes()}
    found = [identity]
    frontier = [identity]
    while frontier:
        following = []
        for perm in frontier:
            for gen in gens:
                product = gen[perm]
                key = product.tobytes()
                if key not in seen:
                    seen.add(key)
                    found.append(product)
                    following.append(product)
                    if len(found) > ceiling:
                        raise GroupTooLargeError(
                            '{} exceeds the enumeration ceiling of {}'.format(
                                name or 'group', ceiling
                            )
                        )
        frontier = following

    perms = np.stack(found)
    perms = perms[np.lexsort(perms.T[::-1])]
    logger.debug('enumerated %s: order %d on %d points', name, len(perms),
                 degree)
    return FiniteGroup(degree, generators, perms, name, tier, family)


def direct_product(first: FiniteGroup, second: FiniteGroup) -> FiniteGroup:
    """Action on the disjoint union of the two domains."""
    degree = first.degree + second.degree
    shift = first.degree
    generators = [
        Element(g.images + tuple(range(shift, degree)))
        for g in first.generators
    ] + [
        Element(tuple(range(shift)) + tuple(i + shift for i in g.images))
        for g in second.generators
    ]
    return generate(
        degree, generators, name='{}x{}'.format(first.name, second.name)
    )

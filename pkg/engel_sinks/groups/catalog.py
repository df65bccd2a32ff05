"""Named permutation groups, their tiers, and the group file format."""
import json
import logging
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Tuple, Union

from sympy import isprime, mod_inverse

from ..errors import (
    CycleParseError, InvariantViolationError, UnresolvableReferenceError
)
from .automorphism import Automorphism, from_images
from .element import Element, parse_cycles
from .extension import extension
from .finite_group import FiniteGroup, direct_product, generate
from .series import is_abelian, is_metabelian, is_nilpotent
from .subgroups import is_simple

logger = logging.getLogger(__name__)


def _cycle(points: List[int], degree: int) -> Element:
    images = list(range(degree))
    for a, b in zip(points, points[1:] + points[:1]):
        images[a] = b
    return Element(tuple(images))


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError('cyclic group needs n >= 1')
    gens = [_cycle(list(range(n)), n)] if n > 1 else []
    return generate(n, gens, name='C{}'.format(n))


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the ``n``-gon, order ``2n``."""
    if n < 3:
        raise ValueError('dihedral group needs n >= 3')
    rotation = _cycle(list(range(n)), n)
    reflection = Element(tuple((-i) % n for i in range(n)))
    return generate(n, [rotation, reflection], name='D{}'.format(n))


def symmetric(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError('symmetric group needs n >= 1')
    gens = []
    if n > 1:
        gens.append(_cycle([0, 1], n))
    if n > 2:
        gens.append(_cycle(list(range(n)), n))
    return generate(n, gens, name='S{}'.format(n), family=('symmetric', n))


def alternating(n: int) -> FiniteGroup:
    """Generated by the 3-cycles ``(1 2 k)``."""
    if n < 1:
        raise ValueError('alternating group needs n >= 1')
    gens = [_cycle([0, 1, k], n) for k in range(2, n)]
    return generate(n, gens, name='A{}'.format(n), family=('alternating', n))


def elementary_abelian(p: int, k: int) -> FiniteGroup:
    """``k`` disjoint ``p``-cycles."""
    if not isprime(p) or k < 1:
        raise ValueError('need a prime p and k >= 1, got ({}, {})'.format(p, k))
    degree = p * k
    gens = [_cycle(list(range(i * p, (i + 1) * p)), degree) for i in range(k)]
    return generate(degree, gens, name='C{}^{}'.format(p, k))


def psl2(p: int) -> FiniteGroup:
    """``PSL(2, p)`` acting on the projective line ``{0, ..., p-1, oo}``.

    Generated by ``x -> x + 1`` and ``x -> -1/x``; the point at infinity is
    numbered ``p``.
    """
    if not isprime(p) or not 5 <= p <= 13:
        raise ValueError('psl2 supports primes 5 <= p <= 13, got {}'.format(p))
    infinity = p
    translation = Element(tuple((x + 1) % p for x in range(p)) + (infinity, ))
    images = [infinity] + [(-mod_inverse(x, p)) % p for x in range(1, p)]
    inversion = Element(tuple(images) + (0, ))
    group = generate(
        p + 1, [translation, inversion],
        name='PSL2({})'.format(p),
        family=('psl2', p)
    )
    expected = p * (p * p - 1) // 2
    if group.order != expected:
        raise ValueError(
            'PSL2({}) has order {}, expected {}'.format(p, group.order, expected)
        )
    if not is_simple(group):
        raise InvariantViolationError('PSL2({}) is not simple'.format(p))
    return group


def semidirect(n: int, k: int, r: int) -> FiniteGroup:
    """``C_n : C_k`` with the generator of ``C_k`` acting as ``x -> x^r``."""
    base = cyclic(n)
    x = base.generator_indices[0]
    phi = from_images(base, [base.power(x, r)], label='power:{}'.format(r))
    if phi.order != k:
        raise ValueError(
            'x -> x^{} has order {} on C{}, not {}'.format(r, phi.order, n, k)
        )
    ext = extension(base, phi, name='C{}:C{}'.format(n, k))
    return ext.carrier


def metabelian_samples() -> List[FiniteGroup]:
    return [
        semidirect(3, 2, 2),
        semidirect(7, 3, 2),
        semidirect(5, 4, 2),
        dihedral(4),
        dihedral(5),
        dihedral(6),
    ]


def quaternion() -> FiniteGroup:
    i = parse_cycles('(1 2 3 4)(5 6 7 8)', 8)
    j = parse_cycles('(1 5 3 7)(2 8 4 6)', 8)
    return generate(8, [i, j], name='Q8')


def factor_swap(group: FiniteGroup) -> Automorphism:
    """Exchange of the two factors of a direct square ``H x H``.

    Relies on ``direct_product`` listing the generators of the first factor
    before the matching generators of the second.
    """
    gens = list(group.generator_indices)
    half = len(gens) // 2
    if 2 * half != len(gens):
        raise ValueError('{} is not a direct square'.format(group.name))
    return from_images(group, gens[half:] + gens[:half], label='swap')


@dataclass(frozen=True)
class CatalogEntry:
    """A named group with the automorphisms sweeps add to its inner ones."""

    name: str
    tier: int
    build: Callable[[], FiniteGroup]
    automorphisms: Optional[Callable[[FiniteGroup], List[Automorphism]]] = None


_ENTRIES = [
    CatalogEntry('C{}'.format(n), 1, lambda n=n: cyclic(n))
    for n in (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15)
] + [
    CatalogEntry('C2^2', 1, lambda: elementary_abelian(2, 2)),
    CatalogEntry('C2^3', 1, lambda: elementary_abelian(2, 3)),
    CatalogEntry('C3^2', 1, lambda: elementary_abelian(3, 2)),
    CatalogEntry('C5^2', 1, lambda: elementary_abelian(5, 2)),
    CatalogEntry('C2xC4', 1, lambda: direct_product(cyclic(2), cyclic(4))),
    CatalogEntry('C2xC6', 1, lambda: direct_product(cyclic(2), cyclic(6))),
    CatalogEntry('S3', 1, lambda: symmetric(3)),
    CatalogEntry('D4', 1, lambda: dihedral(4)),
    CatalogEntry('Q8', 1, quaternion),
    CatalogEntry('D5', 1, lambda: dihedral(5)),
    CatalogEntry('D6', 1, lambda: dihedral(6)),
    CatalogEntry('A4', 1, lambda: alternating(4)),
    CatalogEntry('D7', 1, lambda: dihedral(7)),
    CatalogEntry('C2xS3', 1, lambda: direct_product(cyclic(2), symmetric(3))),
    CatalogEntry('C5:C4', 1, lambda: semidirect(5, 4, 2)),
    CatalogEntry('C7:C3', 1, lambda: semidirect(7, 3, 2)),
    CatalogEntry('S4', 1, lambda: symmetric(4)),
    CatalogEntry('A5', 1, lambda: alternating(5)),
    CatalogEntry('PSL2(5)', 1, lambda: psl2(5)),
    CatalogEntry('S5', 1, lambda: symmetric(5)),
    CatalogEntry('PSL2(7)', 1, lambda: psl2(7)),
    CatalogEntry('A6', 2, lambda: alternating(6)),
    CatalogEntry('PSL2(11)', 2, lambda: psl2(11)),
    CatalogEntry('PSL2(13)', 2, lambda: psl2(13)),
    CatalogEntry('A7', 2, lambda: alternating(7)),
    CatalogEntry(
        'A5xA5', 2, lambda: direct_product(alternating(5), alternating(5)),
        lambda group: [factor_swap(group)]
    ),
]

CATALOG: Dict[str, CatalogEntry] = {entry.name: entry for entry in _ENTRIES}


def catalog_names(tier: int = 1) -> List[str]:
    """Names of the groups up to ``tier``, in catalog order."""
    return [entry.name for entry in _ENTRIES if entry.tier <= tier]


def catalog_automorphisms(group: FiniteGroup) -> List[Automorphism]:
    """Automorphisms the catalog attaches to ``group`` beyond its inner ones."""
    entry = CATALOG.get(group.name)
    if entry is None or entry.automorphisms is None:
        return []
    # groups read from a file carry no tier
    if getattr(group, 'tier', None) != entry.tier:
        return []
    return entry.automorphisms(group)


@lru_cache(maxsize=None)
def build(name: str) -> FiniteGroup:
    """Construct (once per process) the catalog group called ``name``."""
    try:
        entry = CATALOG[name]
    except KeyError:
        raise UnresolvableReferenceError(
            'no catalog group named {!r}'.format(name)
        )
    group = entry.build()
    group.name = entry.name
    group.tier = entry.tier
    logger.debug('catalog group %s of order %d', name, group.order)
    return group


def flags(group: FiniteGroup) -> Dict[str, bool]:
    return {
        'abelian': is_abelian(group),
        'nilpotent': is_nilpotent(group)[0],
        'metabelian': is_metabelian(group),
        'simple': is_simple(group),
    }


def catalog_record(name: str) -> dict:
    group = build(name)
    return {
        'name': name,
        'order': group.order,
        'degree': group.degree,
        'tier': group.tier,
        'flags': flags(group),
    }


def _read_element(value, degree: int) -> Element:
    if isinstance(value, str):
        return parse_cycles(value, degree)
    if isinstance(value, list):
        if len(value) != degree:
            raise CycleParseError(
                'image array {} does not have length {}'.format(value, degree)
            )
        return Element.from_one_based(value)
    raise CycleParseError('cannot read a permutation from {!r}'.format(value))


def load_group(
    document: Union[str, dict]
) -> Tuple[FiniteGroup, Optional[Automorphism]]:
    """Read a group file.

    The document has ``degree``, ``generators`` (1-based image arrays or
    cycle strings), an optional ``name`` and an optional ``automorphism``:
    either a list aligned with ``generators`` or a mapping from generator
    position (0-based) to image.

    Raises:
        CycleParseError: for malformed documents or permutations.
        NotAHomomorphismError: if the automorphism does not validate.
    """
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as error:
            raise CycleParseError('group file is not JSON: {}'.format(error))
    if not isinstance(document, dict) or 'degree' not in document:
        raise CycleParseError('group file needs a "degree" field')
    degree = document['degree']
    if not isinstance(degree, int) or degree < 1:
        raise CycleParseError('degree must be a positive integer')
    generators = [_read_element(g, degree) for g in document.get('generators', [])]
    group = generate(degree, generators, name=document.get('name', ''))

    automorphism = None
    images = document.get('automorphism')
    if images is not None:
        if isinstance(images, dict):
            try:
                images = [images[str(i)] for i in range(len(generators))]
            except KeyError as error:
                raise CycleParseError(
                    'automorphism has no image for generator {}'.format(error)
                )
        if len(images) != len(generators):
            raise CycleParseError(
                'automorphism gives {} images for {} generators'.format(
                    len(images), len(generators)
                )
            )
        automorphism = from_images(
            group, [_read_element(image, degree) for image in images],
            label='file'
        )
    return group, automorphism


def dump_group(
    group: FiniteGroup, automorphism: Optional[Automorphism] = None
) -> str:
    """Canonical serialization: sorted distinct generator image arrays."""
    ordering = sorted(set(range(len(group.generators))),
                      key=lambda i: group.generators[i].images)
    seen, positions = set(), []
    for i in ordering:
        if group.generators[i].images not in seen:
            seen.add(group.generators[i].images)
            positions.append(i)
    document = {
        'degree': group.degree,
        'generators': [group.generators[i].one_based() for i in positions],
    }
    if group.name:
        document['name'] = group.name
    if automorphism is not None:
        gens = group.generator_indices
        document['automorphism'] = [
            group.element(automorphism(gens[i])).one_based() for i in positions
        ]
    return json.dumps(document, sort_keys=True, separators=(',', ':'))


def resolve(reference: str) -> Tuple[FiniteGroup, Optional[Automorphism]]:
    """``catalog:NAME`` or a path to a group file."""
    if reference.startswith('catalog:'):
        return build(reference[len('catalog:'):]), None
    if not os.path.exists(reference):
        raise UnresolvableReferenceError(
            'cannot resolve group reference {!r}'.format(reference)
        )
    with open(reference) as handle:
        return load_group(handle.read())
"""Permutations of a finite domain, written in the right-action convention.

A product ``a * b`` applies ``a`` first and ``b`` second, so the image of a
point ``x`` under ``a * b`` is ``b[a[x]]``.
"""
import re
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from sympy.combinatorics import Permutation

from ..errors import CycleParseError, DegreeMismatchError

_TOKEN = re.compile(r'\s*(\(|\)|,|\d+|[^\s(),\d]+)')


@dataclass(frozen=True)
class Element:
    """A permutation of ``{0, ..., degree - 1}`` stored as its image tuple."""

    images: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise CycleParseError(
                'image array {} is not a bijection of {{0..{}}}'.format(
                    list(self.images),
                    len(self.images) - 1
                )
            )

    @classmethod
    def identity(cls, degree: int) -> 'Element':
        return cls(tuple(range(degree)))

    @classmethod
    def from_one_based(cls, images: Sequence[int]) -> 'Element':
        """Build from a 1-based image array as used in group files."""
        try:
            return cls(tuple(int(i) - 1 for i in images))
        except (TypeError, ValueError) as error:
            raise CycleParseError(
                'bad image array {!r}: {}'.format(images, error)
            )

    @property
    def degree(self) -> int:
        return len(self.images)

    def one_based(self) -> List[int]:
        return [i + 1 for i in self.images]

    def is_identity(self) -> bool:
        return all(i == x for x, i in enumerate(self.images))

    def __mul__(self, other: 'Element') -> 'Element':
        return multiply(self, other)

    def __invert__(self) -> 'Element':
        return inverse(self)

    def __pow__(self, exponent: int) -> 'Element':
        return _power(self, exponent)

    def __str__(self) -> str:
        return format_cycles(self)


def _check_degrees(*elements: Element):
    degrees = {e.degree for e in elements}
    if len(degrees) > 1:
        raise DegreeMismatchError(
            'permutations of degrees {} cannot be combined'.format(
                sorted(degrees)
            )
        )


def multiply(a: Element, b: Element) -> Element:
    """Apply ``a`` and then ``b``."""
    _check_degrees(a, b)
    return Element(tuple(b.images[i] for i in a.images))


def inverse(a: Element) -> Element:
    result = [0] * a.degree
    for x, i in enumerate(a.images):
        result[i] = x
    return Element(tuple(result))


def _power(a: Element, exponent: int) -> Element:
    return Element(tuple((Permutation(list(a.images))**exponent).array_form))


def commutator(a: Element, b: Element) -> Element:
    """``[a, b] = a^-1 b^-1 a b``."""
    _check_degrees(a, b)
    return multiply(multiply(inverse(a), inverse(b)), multiply(a, b))


def conjugate(a: Element, b: Element) -> Element:
    """``a^b = b^-1 a b``."""
    _check_degrees(a, b)
    return multiply(multiply(inverse(b), a), b)


def order(a: Element) -> int:
    return int(Permutation(list(a.images)).order())


def _tokens(text: str) -> Iterable[str]:
    position = 0
    while position < len(text):
        match = _TOKEN.match(text, position)
        if match is None:
            break
        position = match.end()
        yield match.group(1)
    if text[position:].strip():
        raise CycleParseError(
            'unexpected input {!r}'.format(text[position:].strip())
        )


def parse_cycles(text: str, degree: int) -> Element:
    """Read 1-based cycle notation such as ``"(1 2 3)(4 5)"``.

    The identity may be written ``"()"``, ``"e"`` or ``"id"``. Points may be
    separated by spaces or commas.

    Raises:
        CycleParseError: on unbalanced brackets, foreign tokens, points
            outside ``1..degree`` or points repeated across cycles. The
            message names the offending token.
    """
    if degree < 1:
        raise CycleParseError('a permutation needs a nonempty domain')
    if text.strip() in ('e', 'id', '1', ''):
        return Element.identity(degree)

    cycles = []
    current = None
    seen = set()
    for token in _tokens(text):
        if token == '(':
            if current is not None:
                raise CycleParseError('nested "(" in {!r}'.format(text))
            current = []
        elif token == ')':
            if current is None:
                raise CycleParseError('unmatched ")" in {!r}'.format(text))
            if current:
                cycles.append(current)
            current = None
        elif token == ',':
            if current is None:
                raise CycleParseError('stray "," in {!r}'.format(text))
        elif token.isdigit():
            if current is None:
                raise CycleParseError(
                    'point {} outside of a cycle in {!r}'.format(token, text)
                )
            point = int(token)
            if not 1 <= point <= degree:
                raise CycleParseError(
                    'point {} outside of 1..{}'.format(token, degree)
                )
            if point in seen:
                raise CycleParseError('point {} repeated'.format(token))
            seen.add(point)
            current.append(point - 1)
        else:
            raise CycleParseError('unexpected token {!r}'.format(token))
    if current is not None:
        raise CycleParseError('unclosed "(" in {!r}'.format(text))

    if not cycles:
        return Element.identity(degree)
    return Element(tuple(Permutation(cycles, size=degree).array_form))


def format_cycles(a: Element) -> str:
    """1-based cycle notation, fixed points omitted, ``"()"`` for identity."""
    cyclic = Permutation(list(a.images)).cyclic_form
    if not cyclic:
        return '()'
    return ''.join(
        '(' + ' '.join(str(x + 1) for x in cycle) + ')' for cycle in cyclic
    )

"""Testing permutation elements and cycle notation"""
import pytest
from hypothesis import given
from hypothesis import strategies as st

from engel_sinks.errors import CycleParseError, DegreeMismatchError
from engel_sinks.groups import (
    Element, commutator, conjugate, format_cycles, inverse, multiply,
    parse_cycles
)


def cycles(text, degree=3):
    return parse_cycles(text, degree)


@st.composite
def permutations(draw, degree=6):
    return Element(tuple(draw(st.permutations(list(range(degree))))))


def test_multiply():
    identity = Element.identity(3)
    assert multiply(identity, cycles('(1 2)')) == cycles('(1 2)')
    assert multiply(cycles('(1 2)'), cycles('(1 2)')) == identity
    assert multiply(cycles('(1 2)'), cycles('(1 2 3)')) == cycles('(1 3)')


def test_inverse():
    assert inverse(Element.identity(4)) == Element.identity(4)
    assert inverse(cycles('(1 2 3)')) == cycles('(1 3 2)')
    assert inverse(cycles('(1 2)')) == cycles('(1 2)')


def test_commutator_and_conjugate():
    a = cycles('(1 2)')
    b = cycles('(1 2 3)')
    assert commutator(a, a).is_identity()
    assert commutator(a, Element.identity(3)).is_identity()
    assert commutator(a, b) == cycles('(1 3 2)')
    assert conjugate(a, Element.identity(3)) == a
    assert conjugate(a, b) == cycles('(2 3)')
    assert conjugate(cycles('(1 2)', 4), cycles('(3 4)', 4)) == cycles(
        '(1 2)', 4
    )


def test_degree_mismatch():
    with pytest.raises(DegreeMismatchError):
        multiply(Element.identity(3), Element.identity(4))
    with pytest.raises(DegreeMismatchError):
        commutator(Element.identity(2), Element.identity(5))


@pytest.mark.parametrize(
    'text,degree,images', [
        ('()', 3, (0, 1, 2)),
        ('e', 2, (0, 1)),
        ('(1 2)(3 4)', 4, (1, 0, 3, 2)),
        ('(1,3,2)', 3, (2, 0, 1)),
        ('(2 3)', 5, (0, 2, 1, 3, 4)),
    ]
)
def test_parse_cycles(text, degree, images):
    assert parse_cycles(text, degree).images == images


@pytest.mark.parametrize(
    'text,token', [
        ('(1 2', 'unclosed'),
        ('1 2)', '1'),
        ('(1 x)', "'x'"),
        ('(1 7)', '7'),
        ('(1 2)(2 3)', '2'),
        ('((1 2))', 'nested'),
    ]
)
def test_parse_errors_name_token(text, token):
    with pytest.raises(CycleParseError) as error:
        parse_cycles(text, 4)
    assert token in str(error.value)


def test_format_cycles():
    assert format_cycles(Element.identity(3)) == '()'
    assert format_cycles(cycles('(1 3 2)')) == '(1 3 2)'
    assert format_cycles(parse_cycles('(3 4)(1 2)', 4)) == '(1 2)(3 4)'


def test_not_a_bijection():
    with pytest.raises(CycleParseError):
        Element((0, 0, 1))
    with pytest.raises(CycleParseError):
        Element.from_one_based([1, 1, 2])


@given(permutations(), permutations(), permutations())
def test_group_axioms(a, b, c):
    assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))
    assert multiply(a, inverse(a)).is_identity()
    assert inverse(commutator(a, b)) == commutator(b, a)
    assert conjugate(a, b) == multiply(multiply(inverse(b), a), b)
    assert a**-1 == inverse(a)
    assert parse_cycles(format_cycles(a), a.degree) == a

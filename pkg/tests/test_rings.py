"""Tests for the characteristic-two rings and the Gray map."""

import itertools
import random

import pytest

from grouplcd.gf2 import null_space, rref, unpack_row
from grouplcd.rings import GrayRing, gray_image_basis, module_span_size


def mul_oracle(ring, a, b):
    """Symbolic product: multiply term by term, dropping squared generators."""
    terms_a = [m for m in range(ring.n_monomials) if (a >> m) & 1]
    terms_b = [m for m in range(ring.n_monomials) if (b >> m) & 1]
    out = 0
    for i in terms_a:
        for j in terms_b:
            if i & j == 0:
                out ^= 1 << (i | j)
    return out


def module_span(ring, gens):
    """Oracle: close the generator set under addition and scalar multiples."""
    n = len(gens[0])
    vectors = {(0,) * n}
    frontier = list(vectors)
    while frontier:
        v = frontier.pop()
        for g in gens:
            for r in ring.elements():
                w = tuple(ring.add(x, ring.mul(r, y)) for x, y in zip(v, g))
                if w not in vectors:
                    vectors.add(w)
                    frontier.append(w)
    return vectors


def dual_module(ring, vectors, n):
    """Oracle: all x with <x, c> = 0 for every c, by full enumeration."""
    out = set()
    for x in itertools.product(ring.elements(), repeat=n):
        good = True
        for c in vectors:
            acc = 0
            for xi, ci in zip(x, c):
                acc = ring.add(acc, ring.mul(xi, ci))
            if acc:
                good = False
                break
        if good:
            out.add(x)
    return out


def test_sizes():
    assert GrayRing(0).size == 2
    assert GrayRing(1).size == 4
    assert GrayRing(2).size == 16
    assert GrayRing(3).size == 256


def test_ring_axioms_exhaustive_small_k():
    for k in (0, 1, 2):
        ring = GrayRing(k)
        els = list(ring.elements())
        for a in els:
            assert ring.mul(ring.one, a) == a
            assert ring.mul(ring.zero, a) == 0
            for b in els:
                assert ring.mul(a, b) == ring.mul(b, a)
                assert ring.mul(a, b) == mul_oracle(ring, a, b)
        rng = random.Random(k)
        for _ in range(300):
            a, b, c = (rng.randrange(ring.size) for _ in range(3))
            assert ring.mul(a, ring.mul(b, c)) == ring.mul(ring.mul(a, b), c)
            assert ring.mul(a, ring.add(b, c)) == ring.add(ring.mul(a, b), ring.mul(a, c))


def test_generators_square_to_zero():
    ring = GrayRing(3)
    for i in range(3):
        u = 1 << (1 << i)
        assert ring.mul(u, u) == 0


def test_units_are_elements_with_constant_term():
    for k in (1, 2):
        ring = GrayRing(k)
        for a in ring.elements():
            has_inverse = any(ring.mul(a, b) == ring.one for b in ring.elements())
            assert has_inverse == ring.is_unit(a)


def test_gray_one_generator_table():
    # phi(a + b*u) = (b, a+b) on all four elements.
    ring = GrayRing(1)
    table = {
        0b00: (0, 0),
        0b01: (0, 1),
        0b10: (1, 1),
        0b11: (1, 0),
    }
    for a, coords in table.items():
        assert tuple(unpack_row(ring.gray(a), 2)) == coords


def test_gray_two_generator_product_monomial():
    ring = GrayRing(2)
    u1u2 = 1 << 0b11
    assert unpack_row(ring.gray(u1u2), 4) == [1, 1, 1, 1]


def test_gray_is_linear_bijection():
    for k in (0, 1, 2, 3):
        ring = GrayRing(k)
        images = {ring.gray(a) for a in ring.elements()}
        assert len(images) == ring.size
        for a in ring.elements():
            assert ring.ungray(ring.gray(a)) == a
        rng = random.Random(5 + k)
        for _ in range(200):
            a, b = rng.randrange(ring.size), rng.randrange(ring.size)
            assert ring.gray(a ^ b) == ring.gray(a) ^ ring.gray(b)


def test_gray_vector_is_per_coordinate_blocks():
    ring = GrayRing(1)
    vec = (0b01, 0b10, 0b11)
    bits = ring.gray_vector(vec)
    assert bits == ring.gray(0b01) | (ring.gray(0b10) << 2) | (ring.gray(0b11) << 4)
    assert ring.ungray_vector(bits, 3) == vec


def test_format_parse_roundtrip():
    ring = GrayRing(2)
    for a in ring.elements():
        assert ring.parse_element(ring.format_element(a)) == a
    assert ring.format_element(0) == "0"
    assert ring.format_element(1) == "1"
    assert ring.format_element(1 | (1 << 3)) == "1+u1u2"
    with pytest.raises(ValueError):
        ring.parse_element("u3")
    with pytest.raises(ValueError):
        ring.parse_element("q")


def test_gray_image_matches_module_span():
    rng = random.Random(17)
    for _ in range(60):
        k = rng.choice([1, 2])
        ring = GrayRing(k)
        n = rng.randint(1, 3)
        gens = [tuple(rng.randrange(ring.size) for _ in range(n)) for _ in range(rng.randint(1, 2))]
        span_set = module_span(ring, gens)
        assert module_span_size(ring, gens) == len(span_set)
        image = gray_image_basis(ring, gens)
        got = {0}
        for row in rref(image).matrix.rows:
            got |= {x ^ row for x in got}
        expect = {ring.gray_vector(v) for v in span_set}
        assert got == expect


def test_gray_respects_duality():
    # The binary dual of the image is the image of the module dual.
    rng = random.Random(29)
    for _ in range(40):
        ring = GrayRing(1)
        n = rng.randint(1, 4)
        gens = [tuple(rng.randrange(ring.size) for _ in range(n)) for _ in range(rng.randint(1, 2))]
        span_set = module_span(ring, gens)
        dual_set = dual_module(ring, span_set, n)
        image = gray_image_basis(ring, gens)
        dual_image = null_space(image)
        got = {0}
        for row in dual_image.rows:
            got |= {x ^ row for x in got}
        assert got == {ring.gray_vector(v) for v in dual_set}
        assert len(span_set) * len(dual_set) == ring.size**n

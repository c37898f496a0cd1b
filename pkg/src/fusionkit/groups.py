"""Constructors for the standard small permutation groups."""

from __future__ import annotations

import itertools

from .permcore import PermGroup, Permutation, build_group
from .structure import is_prime

FAMILIES = ("symmetric", "alternating", "cyclic", "dihedral", "elementary_abelian", "sl23", "gl23", "heisenberg")


def _cycle(degree, *cycles):
    return Permutation.from_cycles(degree, cycles)


def symmetric(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("symmetric group needs n >= 1")
    if n == 1:
        return build_group(1)
    return build_group(n, [_cycle(n, [0, 1]), _cycle(n, list(range(n)))])


def alternating(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("alternating group needs n >= 1")
    return build_group(n, [_cycle(n, [0, 1, k]) for k in range(2, n)])


def cyclic(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("cyclic group needs n >= 1")
    if n == 1:
        return build_group(1)
    return build_group(n, [_cycle(n, list(range(n)))])


def dihedral(n: int) -> PermGroup:
    """Symmetries of the n-gon, order 2n on n points."""
    if n < 3:
        raise ValueError("dihedral group needs n >= 3")
    reflection = Permutation([(-i) % n for i in range(n)])
    return build_group(n, [_cycle(n, list(range(n))), reflection])


def elementary_abelian(p: int, k: int) -> PermGroup:
    """(C_p)^k as k disjoint p-cycles on p*k points."""
    if not is_prime(p) or k < 1:
        raise ValueError("elementary_abelian needs a prime p and k >= 1")
    degree = p * k
    return build_group(degree, [_cycle(degree, list(range(i * p, (i + 1) * p))) for i in range(k)])


_F3_VECTORS = [v for v in itertools.product(range(3), repeat=2) if v != (0, 0)]


def _matrix_action(m) -> Permutation:
    index = {v: i for i, v in enumerate(_F3_VECTORS)}
    (a, b), (c, d) = m
    return Permutation([index[((x * a + y * c) % 3, (x * b + y * d) % 3)] for x, y in _F3_VECTORS])


def sl23() -> PermGroup:
    """SL(2,3) acting on the 8 nonzero row vectors of F_3^2."""
    return build_group(8, [_matrix_action(((1, 1), (0, 1))), _matrix_action(((1, 0), (1, 1)))])


def gl23() -> PermGroup:
    return build_group(8, list(sl23().generators) + [_matrix_action(((2, 0), (0, 1)))])


def heisenberg(p: int) -> PermGroup:
    """Unitriangular 3x3 matrices over F_p acting affinely on F_p^2; order p^3."""
    if not is_prime(p):
        raise ValueError("heisenberg needs a prime")
    points = list(itertools.product(range(p), repeat=2))
    index = {v: i for i, v in enumerate(points)}

    def affine(f):
        return Permutation([index[f(x, y)] for x, y in points])

    return build_group(p * p, [
        affine(lambda x, y: ((x + y) % p, y)),
        affine(lambda x, y: (x, (y + 1) % p)),
    ])


def make_named(family: str, *params: int) -> PermGroup:
    constructors = {
        "symmetric": symmetric,
        "alternating": alternating,
        "cyclic": cyclic,
        "dihedral": dihedral,
        "elementary_abelian": elementary_abelian,
        "sl23": sl23,
        "gl23": gl23,
        "heisenberg": heisenberg,
    }
    try:
        ctor = constructors[family]
    except KeyError:
        raise ValueError(f"unknown group family {family!r}; known: {', '.join(FAMILIES)}") from None
    try:
        return ctor(*params)
    except TypeError:
        raise ValueError(f"wrong number of parameters for {family}: {params}") from None


def embed(p: Permutation, degree: int, offset: int) -> Permutation:
    images = list(range(degree))
    for i, j in enumerate(p.images):
        images[offset + i] = offset + j
    return Permutation(images, check=False)


def direct_product(A: PermGroup, B: PermGroup) -> PermGroup:
    """A x B on deg(A) + deg(B) points, A on the first block."""
    degree = A.degree + B.degree
    gens = [embed(a, degree, 0) for a in A.generators] + [embed(b, degree, A.degree) for b in B.generators]
    return build_group(degree, gens)

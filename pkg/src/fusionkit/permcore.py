"""Permutations and permutation groups.

Permutations act on the right: ``p * q`` applies ``p`` first, then ``q``, and
``x ** g`` style conjugation is ``x.conjugate(g) == g**-1 * x * g``.

Groups carry a stabilizer chain built with a deterministic Schreier-Sims.
Base points are taken in ascending order, skipping points that are already
fixed.  Centralizers, normalizers and intersections are computed by filtering
element lists, so they are bounded by the enumeration cap.
"""

from __future__ import annotations

import functools
import math
import re
from collections.abc import Iterable, Sequence

from .config import check_cap
from .errors import DegreeMismatchError, NotAPermutationError, NotASubgroupError


@functools.total_ordering
class Permutation:
    """A bijection of ``{0, ..., degree - 1}`` stored as its image tuple."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int], check: bool = True):
        images = tuple(images)
        if check:
            if len(images) == 0:
                raise NotAPermutationError("a permutation needs positive degree")
            if sorted(images) != list(range(len(images))):
                raise NotAPermutationError(f"{list(images)} is not a bijection of 0..{len(images) - 1}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(range(degree), check=False)

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        images = list(range(degree))
        seen = set()
        for cycle in cycles:
            for point in cycle:
                if not 0 <= point < degree:
                    raise NotAPermutationError(f"point {point} outside 0..{degree - 1}")
                if point in seen:
                    raise NotAPermutationError(f"point {point} appears twice in {list(cycles)}")
                seen.add(point)
            for a, b in zip(cycle, list(cycle[1:]) + list(cycle[:1])):
                images[a] = b
        return cls(images, check=False)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def _same_degree(self, other: Permutation) -> None:
        if len(self.images) != len(other.images):
            raise DegreeMismatchError(f"degree {len(self.images)} != {len(other.images)}")

    def __mul__(self, other: Permutation) -> Permutation:
        self._same_degree(other)
        q = other.images
        return Permutation([q[i] for i in self.images], check=False)

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv, check=False)

    def __pow__(self, k: int) -> Permutation:
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self, g: Permutation) -> Permutation:
        """Return ``g^-1 * self * g``, the image of self under conjugation by g."""
        self._same_degree(g)
        # x^g maps g(i) -> g(x(i))
        images = [0] * len(self.images)
        gi = g.images
        for i, j in enumerate(self.images):
            images[gi[i]] = gi[j]
        return Permutation(images, check=False)

    def commutes_with(self, other: Permutation) -> bool:
        s, o = self.images, other.images
        return all(o[s[i]] == s[o[i]] for i in range(len(s)))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(len(self.images)):
            if start in seen or self.images[start] == start:
                continue
            cycle = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                cycle.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cycle))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if not self.is_identity() else 1

    def first_moved(self) -> int | None:
        for i, j in enumerate(self.images):
            if i != j:
                return i
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other: Permutation) -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles()) or "()"

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse cycle notation such as ``"(0 1 2)(3 4)"``; ``"()"`` is the identity."""
    stripped = text.strip()
    if not stripped:
        raise NotAPermutationError("empty cycle string")
    if _CYCLE_RE.sub("", stripped).strip():
        raise NotAPermutationError(f"could not parse cycle notation {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(stripped):
        points = [int(tok) for tok in re.split(r"[\s,]+", body.strip()) if tok]
        if len(points) > 1:
            cycles.append(points)
    return Permutation.from_cycles(degree, cycles)


def as_permutation(p, degree: int | None = None) -> Permutation:
    if not isinstance(p, Permutation):
        p = Permutation(p)
    if degree is not None and p.degree != degree:
        raise DegreeMismatchError(f"permutation {p} has degree {p.degree}, expected {degree}")
    return p


def perm_compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply ``p`` first, then ``q``."""
    return p * q


def perm_inverse(p: Permutation) -> Permutation:
    return p.inverse()


def element_order(p: Permutation) -> int:
    return p.order()


# -- stabilizer chain -------------------------------------------------------


class _Level:
    __slots__ = ("base", "transversal", "inverses")

    def __init__(self, base: int, gens: Sequence[Permutation], degree: int):
        self.base = base
        ident = Permutation.identity(degree)
        trans = {base: ident}
        queue = [base]
        for point in queue:
            for s in gens:
                q = s.images[point]
                if q not in trans:
                    trans[q] = trans[point] * s
                    queue.append(q)
        self.transversal = trans
        self.inverses = {pt: u.inverse() for pt, u in trans.items()}


def _fixes_all(s: Permutation, points: Iterable[int]) -> bool:
    return all(s.images[b] == b for b in points)


def _schreier_sims(degree: int, generators: Sequence[Permutation]) -> tuple[list[_Level], list[Permutation]]:
    strong: list[Permutation] = []
    for g in generators:
        if not g.is_identity() and g not in strong:
            strong.append(g)
    base: list[int] = []
    for s in strong:
        if _fixes_all(s, base):
            base.append(s.first_moved())

    def level_gens(i):
        return [s for s in strong if _fixes_all(s, base[:i])]

    levels = [_Level(b, level_gens(i), degree) for i, b in enumerate(base)]

    def strip(h, start):
        for j in range(start, len(levels)):
            pt = h.images[levels[j].base]
            inv = levels[j].inverses.get(pt)
            if inv is None:
                return h, j
            h = h * inv
        return h, len(levels)

    i = len(levels) - 1
    while i >= 0:
        level = levels[i]
        gens_i = level_gens(i)
        descended = False
        for a, u_a in level.transversal.items():
            for s in gens_i:
                h = u_a * s * level.inverses[s.images[a]]
                if h.is_identity():
                    continue
                residue, j = strip(h, i + 1)
                if j < len(levels) or not residue.is_identity():
                    if j == len(levels):
                        base.append(residue.first_moved())
                        levels.append(None)
                    strong.append(residue)
                    for k in range(i + 1, j + 1):
                        levels[k] = _Level(base[k], level_gens(k), degree)
                    i = j
                    descended = True
                    break
            if descended:
                break
        if not descended:
            i -= 1
    return levels, strong


class PermGroup:
    """A permutation group given by generators.

    Instances are immutable; derived data (chain, element list) is computed
    lazily and cached.  Two groups compare equal when they have the same
    degree and the same element set.
    """

    def __init__(self, degree: int, generators: Iterable = ()):
        if degree < 1:
            raise ValueError("degree must be positive")
        self.degree = degree
        self.generators = tuple(as_permutation(g, degree) for g in generators)
        self._levels = None
        self._strong = None
        self._order = None
        self._elements = None
        self._element_set = None

    def _chain(self):
        if self._levels is None:
            self._levels, self._strong = _schreier_sims(self.degree, self.generators)
            self._order = math.prod(len(lv.transversal) for lv in self._levels)
        return self._levels

    @property
    def base(self) -> list[int]:
        return [lv.base for lv in self._chain()]

    @property
    def strong_generators(self) -> list[Permutation]:
        self._chain()
        return list(self._strong)

    @property
    def basic_orbits(self) -> list[list[int]]:
        return [list(lv.transversal) for lv in self._chain()]

    def order(self) -> int:
        self._chain()
        return self._order

    def __len__(self) -> int:
        return self.order()

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def contains(self, p) -> bool:
        p = as_permutation(p)
        if p.degree != self.degree:
            raise DegreeMismatchError(f"permutation degree {p.degree} != group degree {self.degree}")
        if self._element_set is not None:
            return p in self._element_set
        for lv in self._chain():
            inv = lv.inverses.get(p.images[lv.base])
            if inv is None:
                return False
            p = p * inv
        return p.is_identity()

    __contains__ = contains

    def elements(self) -> list[Permutation]:
        if self._elements is None:
            check_cap(f"group of degree {self.degree}", self.order())
            current = [self.identity()]
            for lv in reversed(self._chain()):
                reps = list(lv.transversal.values())
                current = [x * u for x in current for u in reps]
            self._elements = sorted(current)
        return list(self._elements)

    def element_set(self) -> frozenset:
        if self._element_set is None:
            self._element_set = frozenset(self.elements())
        return self._element_set

    @property
    def key(self) -> tuple:
        """Sorted image tuples of all elements; the canonical identity of the subgroup."""
        return tuple(e.images for e in self.elements())

    def sort_key(self) -> tuple:
        return (self.order(), self.key)

    def is_subgroup_of(self, other: PermGroup) -> bool:
        if self.degree != other.degree:
            raise DegreeMismatchError(f"degree {self.degree} != {other.degree}")
        return all(other.contains(g) for g in self.generators)

    def is_trivial(self) -> bool:
        return self.order() == 1

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a.commutes_with(b) for a in gens for b in gens)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PermGroup):
            return NotImplemented
        if self is other:
            return True
        return (
            self.degree == other.degree
            and self.order() == other.order()
            and self.is_subgroup_of(other)
        )

    def __hash__(self) -> int:
        return hash((self.degree, self.order()))

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators)
        return f"PermGroup(degree={self.degree}, order={self.order()}, generators=[{gens}])"


def _to_group(degree: int, generators) -> PermGroup:
    return PermGroup(degree, generators)


def build_group(degree: int, generators: Iterable = ()) -> PermGroup:
    group = PermGroup(degree, generators)
    group.order()
    return group


def subgroup_from_elements(degree: int, elements: Iterable[Permutation]) -> PermGroup:
    """Wrap an element set already known to be closed under products.

    Generators are picked greedily from the sorted list, so the result is
    deterministic.
    """
    elts = sorted(set(elements))
    gens: list[Permutation] = []
    current = PermGroup(degree)
    for e in elts:
        if not current.contains(e):
            gens.append(e)
            current = PermGroup(degree, gens)
    if current.order() != len(elts):
        raise ValueError(f"element set of size {len(elts)} is not a subgroup (generates {current.order()})")
    current._elements = elts
    return current


def generate(degree: int, elements: Iterable[Permutation]) -> PermGroup:
    """The subgroup generated by ``elements``, keeping only non-redundant generators."""
    gens: list[Permutation] = []
    current = PermGroup(degree)
    for e in elements:
        e = as_permutation(e, degree)
        if not current.contains(e):
            gens.append(e)
            current = PermGroup(degree, gens)
    return current


def _same_degree(*groups: PermGroup) -> None:
    degrees = {g.degree for g in groups}
    if len(degrees) > 1:
        raise DegreeMismatchError(f"groups of different degrees {sorted(degrees)}")


def contains(G: PermGroup, p) -> bool:
    return G.contains(p)


def elements(G: PermGroup) -> list[Permutation]:
    return G.elements()


def is_subgroup(A: PermGroup, B: PermGroup) -> bool:
    return A.is_subgroup_of(B)


def require_subgroup(A: PermGroup, B: PermGroup, what: str = "subgroup") -> None:
    if not A.is_subgroup_of(B):
        raise NotASubgroupError(f"{what} of order {A.order()} is not contained in the group of order {B.order()}")


def is_normal(H: PermGroup, G: PermGroup) -> bool:
    _same_degree(H, G)
    require_subgroup(H, G, "H")
    return all(H.contains(h.conjugate(g)) for h in H.generators for g in G.generators)


def centralizer(G: PermGroup, X: PermGroup) -> PermGroup:
    _same_degree(G, X)
    gens = X.generators
    return subgroup_from_elements(G.degree, (g for g in G.elements() if all(g.commutes_with(x) for x in gens)))


def center(G: PermGroup) -> PermGroup:
    return centralizer(G, G)


def normalizer(G: PermGroup, P: PermGroup) -> PermGroup:
    _same_degree(G, P)
    gens = P.generators
    return subgroup_from_elements(G.degree, (g for g in G.elements() if all(P.contains(x.conjugate(g)) for x in gens)))


def conjugate_subgroup(P: PermGroup, g: Permutation) -> PermGroup:
    g = as_permutation(g, P.degree)
    return PermGroup(P.degree, [x.conjugate(g) for x in P.generators])


def join(G: PermGroup, A: PermGroup, B: PermGroup) -> PermGroup:
    _same_degree(G, A, B)
    require_subgroup(A, G, "A")
    require_subgroup(B, G, "B")
    return generate(G.degree, list(A.generators) + list(B.generators))


def intersection(A: PermGroup, B: PermGroup) -> PermGroup:
    _same_degree(A, B)
    small, big = (A, B) if A.order() <= B.order() else (B, A)
    return subgroup_from_elements(A.degree, (x for x in small.elements() if big.contains(x)))


def cyclic_subgroup(x: Permutation) -> PermGroup:
    return PermGroup(x.degree, [x])


def conjugacy_class(G: PermGroup, x: Permutation) -> list[Permutation]:
    """Orbit of ``x`` under conjugation by G, found by closing under the generators."""
    x = as_permutation(x, G.degree)
    seen = {x}
    queue = [x]
    for y in queue:
        for g in G.generators:
            z = y.conjugate(g)
            if z not in seen:
                seen.add(z)
                queue.append(z)
    return sorted(seen)


def subgroup_orbit(G: PermGroup, P: PermGroup) -> list[PermGroup]:
    """The G-conjugates of P, one per coset of N_G(P), sorted by element set."""
    found = {P.key: P}
    queue = [P]
    for Q in queue:
        for g in G.generators:
            R = conjugate_subgroup(Q, g)
            if R.key not in found:
                found[R.key] = R
                queue.append(R)
    return [found[k] for k in sorted(found)]

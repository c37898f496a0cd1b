"""Sylow subgroups, the p-cores O_p, O_{p'}, O^p, and subgroup enumeration."""

from __future__ import annotations

import dataclasses

from .config import check_cap
from .permcore import (
    PermGroup,
    Permutation,
    conjugacy_class,
    generate,
    intersection,
    normalizer,
    subgroup_orbit,
)


def is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


def _require_prime(p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"{p!r} is not a prime")


def p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def is_p_power(n: int, p: int) -> bool:
    return p_part(n, p) == n


def is_p_group(G: PermGroup, p: int) -> bool:
    return is_p_power(G.order(), p)


def is_p_prime_element(x: Permutation, p: int) -> bool:
    return x.order() % p != 0


def sylow_subgroup(G: PermGroup, p: int) -> PermGroup:
    """A Sylow p-subgroup, found by climbing through normalizers.

    Each step adjoins the first element (in sorted order) of N_G(P) whose
    coset generates a subgroup of order p in N_G(P)/P.
    """
    _require_prime(p)
    target = p_part(G.order(), p)
    P = PermGroup(G.degree)
    while P.order() < target:
        N = normalizer(G, P)
        for x in N.elements():
            if not P.contains(x) and P.contains(x ** p):
                P = generate(G.degree, list(P.generators) + [x])
                break
        else:  # pragma: no cover - excluded by Sylow's theorems
            raise RuntimeError("normalizer ascent stalled")
    return P


def sylow_conjugates(G: PermGroup, p: int) -> list[PermGroup]:
    return subgroup_orbit(G, sylow_subgroup(G, p))


def core_p(G: PermGroup, p: int) -> PermGroup:
    """O_p(G): the intersection of all Sylow p-subgroups."""
    _require_prime(p)
    check_cap("core computation", G.order())
    conjugates = sylow_conjugates(G, p)
    core = conjugates[0]
    for Q in conjugates[1:]:
        core = intersection(core, Q)
    return core


def normal_closure(G: PermGroup, x: Permutation) -> PermGroup:
    return generate(G.degree, conjugacy_class(G, x))


def conjugacy_classes(G: PermGroup) -> list[list[Permutation]]:
    check_cap("conjugacy classes", G.order())
    seen = set()
    classes = []
    for x in G.elements():
        if x not in seen:
            cls = conjugacy_class(G, x)
            seen.update(cls)
            classes.append(cls)
    return classes


def core_p_prime(G: PermGroup, p: int) -> PermGroup:
    """O_{p'}(G), the largest normal subgroup of order prime to p.

    Joins the normal closures of p'-elements that are themselves p'-groups,
    then checks that every such closure lies in the join.
    """
    _require_prime(p)
    closures = []
    for cls in conjugacy_classes(G):
        x = cls[0]
        if x.is_identity() or not is_p_prime_element(x, p):
            continue
        N = normal_closure(G, x)
        if N.order() % p:
            closures.append(N)
    result = generate(G.degree, [g for N in closures for g in N.generators])
    if result.order() % p:
        if not all(N.is_subgroup_of(result) for N in closures):  # pragma: no cover
            raise RuntimeError("O_p' join does not contain a p' normal closure")
        return result
    raise RuntimeError("join of normal p'-subgroups is not a p'-group")  # pragma: no cover


def o_upper_p(G: PermGroup, p: int) -> PermGroup:
    """O^p(G): the subgroup generated by the p'-elements."""
    _require_prime(p)
    check_cap("O^p computation", G.order())
    result = generate(G.degree, (x for x in G.elements() if is_p_prime_element(x, p)))
    index = G.order() // result.order()
    if not is_p_power(index, p) or not all(result.contains(h.conjugate(g)) for h in result.generators for g in G.generators):
        raise RuntimeError("O^p is not normal of p-power index")  # pragma: no cover
    return result


@dataclasses.dataclass(frozen=True)
class SubgroupList:
    ambient: PermGroup
    members: tuple
    complete: bool = True

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __getitem__(self, i):
        return self.members[i]


def _closure(gens: list[Permutation], start: frozenset) -> frozenset:
    """Close ``start`` (already a subgroup) together with ``gens`` under products."""
    elts = set(start)
    queue = list(elts)
    for x in queue:
        for g in gens:
            y = x * g
            if y not in elts:
                elts.add(y)
                queue.append(y)
    return frozenset(elts)


def all_subgroups(S: PermGroup) -> SubgroupList:
    """Every subgroup of S, from cyclic subgroups joined to a fixpoint.

    Each found subgroup is joined with each cyclic subgroup until nothing new
    appears; every subgroup is an iterated join of cyclic ones.
    """
    check_cap("subgroup enumeration", S.order(), "subgroups")
    ident = S.identity()
    cyclic: dict[frozenset, Permutation] = {}
    for x in S.elements():
        c = _closure([x], frozenset([ident]))
        cyclic.setdefault(c, x)
    found: dict[frozenset, list[Permutation]] = {c: ([x] if not x.is_identity() else []) for c, x in cyclic.items()}
    frontier = list(found)
    while frontier:
        new = []
        for A in frontier:
            for C, x in cyclic.items():
                if C <= A:
                    continue
                B = _closure(found[A] + [x], A)
                if B not in found:
                    found[B] = found[A] + [x]
                    new.append(B)
        frontier = new
    members = []
    for elts, gens in found.items():
        group = PermGroup(S.degree, gens)
        group._elements = sorted(elts)
        group._element_set = elts
        members.append(group)
    members.sort(key=PermGroup.sort_key)
    return SubgroupList(S, tuple(members), True)

"""Fusion systems realized by a finite group at a prime.

A system is the triple (K, p, U) with U a Sylow p-subgroup of K; its
morphisms are the conjugation maps ``c_g`` restricted to subgroups of U.
Each morphism keeps one ambient witness ``g``; two morphisms are equal when
they have the same domain and the same canonical key (images of the sorted
domain elements), i.e. when their witnesses differ by an element of C_K(P).

Automizers are represented as faithful permutation groups on the sorted
element list of P, so the structure operators apply to them unchanged.
"""

from __future__ import annotations

import dataclasses
from collections.abc import Iterable

from .errors import NotASubgroupError
from .permcore import (
    PermGroup,
    Permutation,
    as_permutation,
    centralizer,
    generate,
    intersection,
    normalizer,
    require_subgroup,
    subgroup_orbit,
)
from .structure import _require_prime, all_subgroups, core_p, p_part, sylow_subgroup


@dataclasses.dataclass(frozen=True, eq=False)
class FusionLikeSystem:
    ambient: PermGroup
    prime: int
    sylow: PermGroup
    _cache: dict = dataclasses.field(default_factory=dict, repr=False)

    def __post_init__(self):
        _require_prime(self.prime)
        require_subgroup(self.sylow, self.ambient, "Sylow subgroup")
        if self.sylow.order() != p_part(self.ambient.order(), self.prime):
            raise ValueError(
                f"subgroup of order {self.sylow.order()} is not a Sylow {self.prime}-subgroup "
                f"of a group of order {self.ambient.order()}"
            )

    @property
    def degree(self) -> int:
        return self.ambient.degree

    def contains_subgroup(self, P: PermGroup) -> bool:
        return P.is_subgroup_of(self.sylow)

    def require_in_sylow(self, P: PermGroup, what: str = "P") -> None:
        if not P.is_subgroup_of(self.sylow):
            raise NotASubgroupError(f"{what} of order {P.order()} is not inside the Sylow subgroup of the system")


def fusion_system(K: PermGroup, p: int) -> FusionLikeSystem:
    return FusionLikeSystem(K, p, sylow_subgroup(K, p))


def subsystem(F: FusionLikeSystem, H: PermGroup) -> FusionLikeSystem:
    """The system (H, p, S ∩ H) inside F; S ∩ H must be Sylow in H."""
    require_subgroup(H, F.ambient, "H")
    return FusionLikeSystem(H, F.prime, intersection(F.sylow, H))


class FusionMorphism:
    """The map ``x -> x^g`` on ``domain``, with ``g`` kept as a witness."""

    __slots__ = ("system", "domain", "witness", "canonical_key")

    def __init__(self, system: FusionLikeSystem, domain: PermGroup, witness):
        self.system = system
        self.domain = domain
        self.witness = as_permutation(witness, domain.degree)
        self.canonical_key = tuple(x.conjugate(self.witness).images for x in domain.elements())

    def __call__(self, x: Permutation) -> Permutation:
        return x.conjugate(self.witness)

    def codomain(self) -> PermGroup:
        return PermGroup(self.domain.degree, [x.conjugate(self.witness) for x in self.domain.generators])

    def is_identity(self) -> bool:
        return all(a == b.images for a, b in zip(self.canonical_key, self.domain.elements()))

    def order(self) -> int:
        """Order as an automorphism; the domain must be mapped onto itself."""
        points = self.domain.elements()
        index = {x: i for i, x in enumerate(points)}
        try:
            action = Permutation([index[Permutation(img, check=False)] for img in self.canonical_key], check=False)
        except KeyError:
            raise ValueError("morphism is not an automorphism of its domain") from None
        return action.order()

    def __eq__(self, other) -> bool:
        if not isinstance(other, FusionMorphism):
            return NotImplemented
        return self.domain.key == other.domain.key and self.canonical_key == other.canonical_key

    def __hash__(self) -> int:
        return hash(self.canonical_key)

    def __repr__(self) -> str:
        return f"FusionMorphism(domain order {self.domain.order()}, witness {self.witness})"


@dataclasses.dataclass(frozen=True, eq=False)
class AutGroup:
    """Conjugation action of a normalizer on the sorted element list of ``base``."""

    base: PermGroup
    action_group: PermGroup
    witness_map: dict

    @property
    def points(self) -> list[Permutation]:
        return self.base.elements()

    def order(self) -> int:
        return self.action_group.order()

    def action_of(self, g: Permutation) -> Permutation:
        return _action(self.base, g)

    def index_of(self, x: Permutation) -> int:
        return self.points.index(x)


def _action(P: PermGroup, g: Permutation) -> Permutation:
    points = P.elements()
    index = {x: i for i, x in enumerate(points)}
    return Permutation([index[x.conjugate(g)] for x in points], check=False)


def aut_induced(P: PermGroup, K: PermGroup) -> AutGroup:
    """Aut_K(P): the image of N_K(P) acting on P by conjugation."""
    N = normalizer(K, P)
    witness_map = {}
    for g in N.generators:
        a = _action(P, g)
        if not a.is_identity():
            witness_map.setdefault(a, g)
    return AutGroup(P, PermGroup(P.order(), list(witness_map)), witness_map)


def inner_automorphisms(P: PermGroup) -> AutGroup:
    return aut_induced(P, P)


def automizer(sys: FusionLikeSystem, P: PermGroup) -> AutGroup:
    sys.require_in_sylow(P)
    return aut_induced(P, sys.ambient)


def hom_set(sys: FusionLikeSystem, P: PermGroup, Q: PermGroup) -> list[FusionMorphism]:
    """All c_g restricted to P with P^g <= Q, one witness per map."""
    sys.require_in_sylow(P)
    sys.require_in_sylow(Q, "Q")
    gens = P.generators
    seen = {}
    for g in sys.ambient.elements():
        if all(Q.contains(x.conjugate(g)) for x in gens):
            m = FusionMorphism(sys, P, g)
            seen.setdefault(m.canonical_key, m)
    return [seen[k] for k in sorted(seen)]


def morphism_in_subsystem(E: FusionLikeSystem, m: FusionMorphism) -> bool:
    """Whether some element of E's ambient group induces ``m``."""
    E.require_in_sylow(m.domain, "morphism domain")
    E.require_in_sylow(m.codomain(), "morphism codomain")
    require_subgroup(E.ambient, m.system.ambient, "subsystem ambient group")
    C = centralizer(m.system.ambient, m.domain)
    return any(E.ambient.contains(c * m.witness) for c in C.elements())


def f_conjugates(sys: FusionLikeSystem, P: PermGroup) -> list[PermGroup]:
    return [Q for Q in subgroup_orbit(sys.ambient, P) if Q.is_subgroup_of(sys.sylow)]


def is_fully_normalized(sys: FusionLikeSystem, P: PermGroup) -> bool:
    sys.require_in_sylow(P)
    own = normalizer(sys.sylow, P).order()
    return all(own >= normalizer(sys.sylow, Q).order() for Q in f_conjugates(sys, P))


def is_centric(sys: FusionLikeSystem, P: PermGroup) -> bool:
    sys.require_in_sylow(P)
    return all(centralizer(sys.sylow, Q).is_subgroup_of(Q) for Q in f_conjugates(sys, P))


def is_radical(sys: FusionLikeSystem, P: PermGroup) -> bool:
    sys.require_in_sylow(P)
    aut = aut_induced(P, sys.ambient)
    return core_p(aut.action_group, sys.prime) == inner_automorphisms(P).action_group


def sylow_automizer_holds(sys: FusionLikeSystem, P: PermGroup) -> bool:
    """Aut_U(P) is a Sylow p-subgroup of Aut_K(P)."""
    aut = aut_induced(P, sys.ambient).action_group
    local = aut_induced(P, sys.sylow).action_group
    return local.is_subgroup_of(aut) and local.order() == p_part(aut.order(), sys.prime)


def alperin_family(sys: FusionLikeSystem) -> list[tuple[PermGroup, AutGroup]]:
    """One fully normalized representative of every centric radical class, with its automizer."""
    if "alperin" not in sys._cache:
        sys._cache["alperin"] = _alperin_family(sys)
    return list(sys._cache["alperin"])


def _alperin_family(sys):
    seen = set()
    family = []
    for P in all_subgroups(sys.sylow):
        if P.key in seen:
            continue
        conjugates = f_conjugates(sys, P)
        seen.update(Q.key for Q in conjugates)
        if not all(centralizer(sys.sylow, Q).is_subgroup_of(Q) for Q in conjugates):
            continue
        if not is_radical(sys, P):
            continue
        sizes = [normalizer(sys.sylow, Q).order() for Q in conjugates]
        best = max(sizes)
        rep = min((Q for Q, n in zip(conjugates, sizes) if n == best), key=lambda Q: Q.key)
        family.append((rep, aut_induced(rep, sys.ambient)))
    return family


def commutator_with_morphism(P: PermGroup, m: FusionMorphism) -> PermGroup:
    """[P, m]: the subgroup generated by x^-1 m(x) for x in P."""
    if P != m.domain:
        raise ValueError("commutator needs the morphism's own domain")
    return generate(P.degree, (x.inverse() * m(x) for x in P.elements()))


def morphism_restrict(m: FusionMorphism, R: PermGroup) -> FusionMorphism:
    if not R.is_subgroup_of(m.domain):
        raise NotASubgroupError("restriction target is not inside the morphism domain")
    return FusionMorphism(m.system, R, m.witness)


def alperin_closure(sys: FusionLikeSystem, family: Iterable[tuple[PermGroup, AutGroup]] | None = None) -> dict:
    """Morphism keys generated from the family's automizers by restriction and composition.

    Returns a map from each subgroup key of the Sylow to the set of canonical
    keys reachable from the identity on it.
    """
    if family is None:
        family = alperin_family(sys)
    moves = [(P, w) for P, aut in family for w in aut.witness_map.values()]
    ident = sys.ambient.identity()
    out = {}
    for Q in all_subgroups(sys.sylow):
        start = FusionMorphism(sys, Q, ident)
        states = {start.canonical_key: (Q, ident)}
        queue = [(Q, ident)]
        for image, w in queue:
            for P, a in moves:
                if not image.is_subgroup_of(P):
                    continue
                nxt = FusionMorphism(sys, Q, w * a)
                if nxt.canonical_key not in states:
                    states[nxt.canonical_key] = (nxt.codomain(), w * a)
                    queue.append(states[nxt.canonical_key])
        out[Q.key] = set(states)
    return out


def hom_keys(sys: FusionLikeSystem, P: PermGroup) -> set:
    return {m.canonical_key for m in hom_set(sys, P, sys.sylow)}

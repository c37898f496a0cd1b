"""The center Z(F) of a fusion system and the centralizer C_S(E) of a subsystem.

An element z of S is central in F_S(G) when every conjugation that keeps z
inside S fixes it.  C_S(E) is the largest X <= C_S(T) such that every
morphism of E extends to a morphism of F that is the identity on X.
"""

from __future__ import annotations

import logging

from .errors import InconsistencyError, NotASubgroupError
from .fusion import FusionLikeSystem, FusionMorphism, alperin_family, hom_set
from .permcore import (
    PermGroup,
    centralizer,
    conjugacy_class,
    cyclic_subgroup,
    generate,
    intersection,
    require_subgroup,
    subgroup_from_elements,
)
from .structure import all_subgroups

logger = logging.getLogger(__name__)

STRATEGIES_CENTRALIZED = ("brute", "alperin")
STRATEGIES_CSE = ("cyclic", "lattice")


def is_fusion_central(F: FusionLikeSystem, z) -> bool:
    S = F.sylow
    return all(y == z for y in conjugacy_class(F.ambient, z) if S.contains(y))


def z_of_fusion(F: FusionLikeSystem) -> PermGroup:
    S = F.sylow
    members = [z for z in S.elements() if is_fusion_central(F, z)]
    Z = subgroup_from_elements(S.degree, members)
    if not all(z.commutes_with(s) for z in Z.generators for s in S.generators):
        raise InconsistencyError("Z(F) is not central in S")
    return Z


def extends_centralizing(F: FusionLikeSystem, m: FusionMorphism, X: PermGroup) -> bool:
    """Whether ``m`` extends to PX -> m(P)X as the identity on X.

    Scans the coset C_G(P)·g for a witness that also centralizes X.
    """
    S, G, P = F.sylow, F.ambient, m.domain
    if not X.is_subgroup_of(S):
        raise NotASubgroupError("X is not inside S")
    if not all(x.commutes_with(y) for x in X.generators for y in P.generators):
        raise NotASubgroupError("X does not centralize the morphism domain")
    PX = generate(S.degree, list(P.generators) + list(X.generators))
    for c in centralizer(G, P).elements():
        w = c * m.witness
        if all(w.commutes_with(x) for x in X.generators):
            if not all(S.contains(y.conjugate(w)) for y in PX.generators):
                raise InconsistencyError("extension of a morphism leaves S")
            return True
    return False


def check_query(F: FusionLikeSystem, E: FusionLikeSystem, X: PermGroup) -> None:
    require_subgroup(E.ambient, F.ambient, "E ambient group")
    if E.sylow != intersection(F.sylow, E.ambient):
        raise ValueError("the subsystem's Sylow is not S ∩ H")
    if not X.is_subgroup_of(centralizer(F.sylow, E.sylow)):
        raise NotASubgroupError("X is not inside C_S(T)")


def _lift(F: FusionLikeSystem, m: FusionMorphism) -> FusionMorphism:
    return FusionMorphism(F, m.domain, m.witness)


def subsystem_centralized_by(F, E, X, strategy: str = "alperin") -> bool:
    """Whether E is contained in C_F(X)."""
    check_query(F, E, X)
    if strategy == "brute":
        for P in all_subgroups(E.sylow):
            for m in hom_set(E, P, E.sylow):
                if not extends_centralizing(F, _lift(F, m), X):
                    return False
        return True
    if strategy == "alperin":
        for P, aut in alperin_family(E):
            for w in aut.witness_map.values():
                if not extends_centralizing(F, FusionMorphism(F, P, w), X):
                    return False
        return True
    raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES_CENTRALIZED}")


def c_s_of_subsystem(F, E, strategy: str = "cyclic", centralized_strategy: str = "alperin") -> PermGroup:
    """C_S(E), the largest X <= C_S(T) with E contained in C_F(X)."""
    C = centralizer(F.sylow, E.sylow)
    if strategy == "lattice":
        passing = [X for X in all_subgroups(C) if subsystem_centralized_by(F, E, X, centralized_strategy)]
        top = max(passing, key=PermGroup.order)
        logger.debug("C_S(E): %d centralized subgroups of C_S(T)", len(passing))
        if not all(X.is_subgroup_of(top) for X in passing):
            raise InconsistencyError("centralized subgroups of C_S(T) have no largest member")
        return top
    if strategy == "cyclic":
        good = [x for x in C.elements() if subsystem_centralized_by(F, E, cyclic_subgroup(x), centralized_strategy)]
        logger.debug("C_S(E): %d of %d elements of C_S(T) pass", len(good), C.order())
        result = generate(C.degree, good)
        if not subsystem_centralized_by(F, E, result, centralized_strategy):
            raise InconsistencyError("the join of centralized cyclic subgroups is not centralized")
        return result
    raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES_CSE}")

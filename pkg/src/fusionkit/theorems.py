"""Executable checks for the centralizer theorems and their supporting facts.

Each check returns a :class:`VerificationReport`.  A report whose hypotheses
fail gets the verdict ``hypothesis_violated``; both sides of the compared
equality are still recorded when they can be computed.
"""

from __future__ import annotations

import dataclasses
import time

from .centralizers import c_s_of_subsystem, subsystem_centralized_by, z_of_fusion
from .fusion import (
    FusionLikeSystem,
    FusionMorphism,
    alperin_family,
    aut_induced,
    commutator_with_morphism,
    fusion_system,
    inner_automorphisms,
    is_centric,
    is_fully_normalized,
    is_radical,
    morphism_in_subsystem,
    morphism_restrict,
    sylow_automizer_holds,
)
from .groups import direct_product, symmetric
from .permcore import (
    PermGroup,
    Permutation,
    as_permutation,
    center,
    centralizer,
    conjugacy_class,
    generate,
    intersection,
    is_normal,
    normalizer,
    require_subgroup,
)
from .structure import all_subgroups, core_p, core_p_prime, o_upper_p, p_part

PASS = "pass"
FAIL = "fail"
HYPOTHESIS_VIOLATED = "hypothesis_violated"

STATEMENTS = ("theorem_a", "theorem_b", "corollary", "lemma_1", "proof_trace", "counterexample")

# above this Sylow order the proof trace visits class representatives only
TRACE_ALL_SUBGROUPS_LIMIT = 81


def serialize(value):
    if isinstance(value, PermGroup):
        return [list(x.images) for x in value.elements()]
    if isinstance(value, Permutation):
        return [list(value.images)]
    if isinstance(value, (list, tuple)):
        return [list(x.images) for x in value]
    raise TypeError(f"cannot serialize {type(value).__name__}")


@dataclasses.dataclass
class VerificationReport:
    statement_id: str
    hypotheses_ok: bool = True
    verdict: str = PASS
    computed: dict = dataclasses.field(default_factory=dict)
    checks: dict = dataclasses.field(default_factory=dict)
    witnesses: list = dataclasses.field(default_factory=list)
    stats: dict = dataclasses.field(default_factory=dict)
    notes: list = dataclasses.field(default_factory=list)
    timing_ms: float = 0.0

    def record(self, name: str, value) -> None:
        self.computed[name] = serialize(value)

    def check(self, name: str, ok: bool) -> bool:
        self.checks[name] = bool(ok)
        return bool(ok)

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def failed_checks(self) -> list[str]:
        return [name for name, ok in self.checks.items() if not ok]

    def to_dict(self, include_timing: bool = True) -> dict:
        out = {
            "statement_id": self.statement_id,
            "verdict": self.verdict,
            "hypotheses_ok": self.hypotheses_ok,
            "computed": self.computed,
            "checks": self.checks,
            "witnesses": self.witnesses,
            "stats": self.stats,
            "notes": self.notes,
        }
        if include_timing:
            out["timing_ms"] = round(self.timing_ms, 3)
        return out

    def summary(self) -> str:
        lines = [f"{self.statement_id}: {self.verdict}"]
        for name, ok in self.checks.items():
            lines.append(f"  [{'ok' if ok else 'FAILED'}] {name}")
        for name, value in self.computed.items():
            lines.append(f"  {name}: order {len(value)}")
        for note in self.notes:
            lines.append(f"  note: {note}")
        return "\n".join(lines)


class _Timer:
    def __init__(self, report):
        self.report = report

    def __enter__(self):
        self.start = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.timing_ms = (time.perf_counter() - self.start) * 1000.0
        return False


def _difference(A: PermGroup, B: PermGroup) -> list[dict]:
    a, b = A.element_set(), B.element_set()
    return [{"element": list(x.images), "side": "left only"} for x in sorted(a - b)] + [
        {"element": list(x.images), "side": "right only"} for x in sorted(b - a)
    ]


def _conclude(report: VerificationReport, ok: bool) -> VerificationReport:
    if not report.hypotheses_ok:
        report.verdict = HYPOTHESIS_VIOLATED
    else:
        report.verdict = PASS if ok else FAIL
    return report


def check_theorem_a(G: PermGroup, p: int) -> VerificationReport:
    report = VerificationReport("theorem_a")
    with _Timer(report):
        F = fusion_system(G, p)
        opp = core_p_prime(G, p)
        report.hypotheses_ok = report.check("O_p'(G) = 1", opp.is_trivial())
        ZG, ZF = center(G), z_of_fusion(F)
        for name, value in (("S", F.sylow), ("O_p'(G)", opp), ("Z(G)", ZG), ("Z(F)", ZF)):
            report.record(name, value)
        inside = report.check("Z(G) <= S", ZG.is_subgroup_of(F.sylow))
        equal = report.check("Z(G) = Z(F)", ZG == ZF)
        if not equal:
            report.witnesses.extend(_difference(ZG, ZF))
        if F.sylow.is_trivial():
            report.notes.append("p does not divide |G|; the Sylow subgroup is trivial")
        _conclude(report, inside and equal)
    return report


def _theorem_b_setup(G, H, p, report):
    require_subgroup(H, G, "H")
    normal = report.check("H normal in G", is_normal(H, G))
    opp = core_p_prime(H, p)
    trivial_core = report.check("O_p'(H) = 1", opp.is_trivial())
    report.hypotheses_ok = normal and trivial_core
    F = fusion_system(G, p)
    T = intersection(F.sylow, H)
    return F, T


def check_theorem_b(G: PermGroup, H: PermGroup, p: int) -> VerificationReport:
    report = VerificationReport("theorem_b")
    with _Timer(report):
        F, T = _theorem_b_setup(G, H, p, report)
        CSH = centralizer(F.sylow, H)
        for name, value in (("S", F.sylow), ("T", T), ("C_S(H)", CSH)):
            report.record(name, value)
        if not report.check("S ∩ H Sylow in H", T.order() == p_part(H.order(), p)):
            report.notes.append("S ∩ H is not Sylow in H, so F_{S∩H}(H) is undefined")
            return _conclude(report, False)
        E = FusionLikeSystem(H, p, T)
        CSE = c_s_of_subsystem(F, E)
        report.record("C_S(E)", CSE)
        report.check("C_S(H) <= C_S(E)", CSH.is_subgroup_of(CSE))
        equal = report.check("C_S(E) = C_S(H)", CSE == CSH)
        if not equal:
            report.witnesses.extend(_difference(CSE, CSH))
        _conclude(report, equal and CSH.is_subgroup_of(CSE))
    return report


def order_p_elements(S: PermGroup, p: int) -> list[Permutation]:
    return [x for x in S.elements() if x.order() == p]


def check_corollary(G: PermGroup, H: PermGroup, p: int) -> VerificationReport:
    report = VerificationReport("corollary")
    with _Timer(report):
        F, T = _theorem_b_setup(G, H, p, report)
        S = F.sylow
        CSH = centralizer(S, H)
        report.record("S", S)
        report.record("C_S(H)", CSH)
        isolated = []
        elements = order_p_elements(S, p)
        for t in elements:
            lhs = [y for y in conjugacy_class(H, t) if S.contains(y)] == [t]
            rhs = CSH.contains(t)
            if lhs:
                isolated.append(t)
            if lhs != rhs:
                report.witnesses.append({"element": list(t.images), "isolated_in_S": lhs, "in_C_S(H)": rhs})
        report.record("isolated order-p elements", isolated)
        report.stats["order_p_elements"] = len(elements)
        if not elements:
            report.notes.append("S has no elements of order p; the statement holds vacuously")
        report.check("t^H ∩ S = {t} iff t in C_S(H)", not report.witnesses)
        _conclude(report, not report.witnesses)
    return report


def check_lemma_1(G: PermGroup, H: PermGroup, p: int) -> VerificationReport:
    """Sweep every P <= S and every p'-automorphism satisfying the premises."""
    report = VerificationReport("lemma_1")
    with _Timer(report):
        require_subgroup(H, G, "H")
        report.hypotheses_ok = report.check("H normal in G", is_normal(H, G))
        if not report.hypotheses_ok:
            return _conclude(report, False)
        F = fusion_system(G, p)
        T = intersection(F.sylow, H)
        E = FusionLikeSystem(H, p, T)
        subgroups = all_subgroups(F.sylow)
        examined = premises = 0
        for P in subgroups:
            Q = intersection(P, H)
            if not is_centric(E, Q):
                continue
            examined += 1
            aut_g = {}
            for g in normalizer(G, P).elements():
                m = FusionMorphism(F, P, g)
                aut_g.setdefault(m.canonical_key, m)
            aut_h = {FusionMorphism(F, P, h).canonical_key for h in normalizer(H, P).elements()}
            for key in sorted(aut_g):
                phi = aut_g[key]
                if phi.order() % p == 0:
                    continue
                if not commutator_with_morphism(P, phi).is_subgroup_of(Q):
                    continue
                if not morphism_in_subsystem(E, morphism_restrict(phi, Q)):
                    continue
                premises += 1
                if key not in aut_h:
                    report.witnesses.append({"P": [list(x.images) for x in P.elements()], "witness": list(phi.witness.images)})
        report.stats.update(subgroups=len(subgroups), centric_intersections=examined, qualifying_automorphisms=premises)
        report.check("every qualifying p'-automorphism lies in Aut_H(P)", not report.witnesses)
        _conclude(report, not report.witnesses)
    return report


def _trace_subgroups(F0: FusionLikeSystem, report: VerificationReport) -> list[PermGroup]:
    if F0.sylow.order() <= TRACE_ALL_SUBGROUPS_LIMIT:
        return [
            P for P in all_subgroups(F0.sylow)
            if is_centric(F0, P) and is_radical(F0, P) and is_fully_normalized(F0, P)
        ]
    report.notes.append(f"|S0| > {TRACE_ALL_SUBGROUPS_LIMIT}: class representatives only")
    return [P for P, _ in alperin_family(F0)]


def proof_trace_theorem_b(G: PermGroup, H: PermGroup, p: int, t) -> VerificationReport:
    """Replay the reduction to G0 = H<t>, S0 = T<t> step by step.

    If t is outside C_S(E) the trace stops at that step and reports the
    premise as violated.
    """
    report = VerificationReport("proof_trace")
    with _Timer(report):
        t = as_permutation(t, G.degree)
        F, T = _theorem_b_setup(G, H, p, report)
        S = F.sylow
        if not S.contains(t):
            raise ValueError(f"t = {t} is not in the Sylow subgroup S")
        if not report.hypotheses_ok:
            return _conclude(report, False)
        E = FusionLikeSystem(H, p, T)
        CSE = c_s_of_subsystem(F, E)
        CSH = centralizer(S, H)
        G0 = generate(G.degree, list(H.generators) + [t])
        S0 = generate(G.degree, list(T.generators) + [t])
        for name, value in (("t", t), ("S", S), ("T", T), ("C_S(E)", CSE), ("C_S(H)", CSH), ("G0", G0), ("S0", S0)):
            report.record(name, value)

        report.check("S0 Sylow in G0", S0.is_subgroup_of(G0) and S0.order() == p_part(G0.order(), p))
        report.check("O_p'(G0) = 1", core_p_prime(G0, p).is_trivial())
        report.check("O^p(G0) = O^p(H)", o_upper_p(G0, p) == o_upper_p(H, p))
        ZG0 = center(G0)
        report.record("Z(G0)", ZG0)

        if not CSE.contains(t):
            report.check("t in C_S(E)", False)
            in_center = report.check("t in Z(G0)", ZG0.contains(t))
            report.notes.append("first failing step: t in C_S(E); the remaining steps assume it")
            report.hypotheses_ok = False
            if in_center:
                report.notes.append("inconsistent: t lies in Z(G0) but not in C_S(E)")
                report.verdict = FAIL
            else:
                report.verdict = HYPOTHESIS_VIOLATED
            return report
        report.check("t in C_S(E)", True)

        F0 = FusionLikeSystem(G0, p, S0)
        report.check("t in Z(S0)", all(t.commutes_with(s) for s in S0.generators))
        subgroups = _trace_subgroups(F0, report)
        report.stats["centric_radical_fully_normalized"] = len(subgroups)
        steps = {
            "t in P": [],
            "Aut_S0(P) Sylow in Aut_F0(P)": [],
            "P ∩ T E-centric": [],
            "P = (P ∩ T)<t>": [],
            "O_p(Aut_F0(P)) = Inn(P)": [],
            "[t, O^p(Aut_F0(P))] = 1": [],
        }
        for i, P in enumerate(subgroups):
            report.record(f"P[{i}]", P)
            PT = intersection(P, T)
            aut = aut_induced(P, G0)
            results = {
                "t in P": P.contains(t),
                "Aut_S0(P) Sylow in Aut_F0(P)": sylow_automizer_holds(F0, P),
                "P ∩ T E-centric": is_centric(E, PT),
                "P = (P ∩ T)<t>": P == generate(G.degree, list(PT.generators) + [t]),
                "O_p(Aut_F0(P)) = Inn(P)": core_p(aut.action_group, p) == inner_automorphisms(P).action_group,
            }
            if results["t in P"]:
                t_index = aut.index_of(t)
                results["[t, O^p(Aut_F0(P))] = 1"] = all(
                    g.images[t_index] == t_index for g in o_upper_p(aut.action_group, p).generators
                )
            else:
                results["[t, O^p(Aut_F0(P))] = 1"] = False
            for name, ok in results.items():
                steps[name].append(ok)
                if not ok:
                    report.witnesses.append({"step": name, "P": [list(x.images) for x in P.elements()]})
        for name, oks in steps.items():
            report.check(name, all(oks))
        report.check("Z(F0) = Z(G0)", z_of_fusion(F0) == ZG0)
        report.check("t in Z(G0)", ZG0.contains(t))
        report.check("Z(G0) <= C_S(H)", ZG0.is_subgroup_of(CSH))
        _conclude(report, not report.failed_checks())
    return report


def counterexample_groups() -> dict[str, PermGroup]:
    """G = S3 x S3 on {0,1,2} | {3,4,5} with the subgroups of the non-normal example."""
    G = direct_product(symmetric(3), symmetric(3))

    def perm(*cycles):
        return Permutation.from_cycles(6, cycles)

    S1 = PermGroup(6, [perm([0, 1, 2])])
    S2 = PermGroup(6, [perm([3, 4, 5])])
    R = PermGroup(6, [perm([0, 1], [3, 4])])
    return {
        "G": G,
        "G1": PermGroup(6, [perm([0, 1, 2]), perm([0, 1])]),
        "G2": PermGroup(6, [perm([3, 4, 5]), perm([3, 4])]),
        "S": generate(6, [perm([0, 1, 2]), perm([3, 4, 5])]),
        "S1": S1,
        "S2": S2,
        "R": R,
        "H": generate(6, list(S1.generators) + list(R.generators)),
    }


def paper_counterexample() -> VerificationReport:
    """Without normality of H, C_S(F_{S∩H}(H)) can be larger than C_S(H)."""
    report = VerificationReport("counterexample")
    with _Timer(report):
        g = counterexample_groups()
        G, S, S1, S2, R, H = (g[k] for k in ("G", "S", "S1", "S2", "R", "H"))
        F = FusionLikeSystem(G, 3, S)
        report.check("S = O_3(G)", core_p(G, 3) == S)
        (r,) = R.generators
        report.check("(i) R has order 2", R.order() == 2)
        report.check("(i) R acts fixed-point-freely on S", all(s.is_identity() or s.conjugate(r) != s for s in S.elements()))
        T = intersection(S, H)
        report.check("(ii) S1 = S ∩ H", T == S1)
        report.check("(ii) S1 Sylow in H", S1.order() == p_part(H.order(), 3) and S1.is_subgroup_of(H))
        report.check("H not normal in G", not is_normal(H, G))
        E = FusionLikeSystem(H, 3, T)
        report.check("(iii) S2 = C_S(G1)", centralizer(S, g["G1"]) == S2)
        brute = subsystem_centralized_by(F, E, S2, "brute")
        alperin = subsystem_centralized_by(F, E, S2, "alperin")
        report.check("(iii) E in C_F(S2)", brute and alperin)
        CSH = centralizer(S, H)
        report.check("(iv) S2 not <= C_S(H)", not S2.is_subgroup_of(CSH))
        cse_lattice = c_s_of_subsystem(F, E, "lattice")
        cse_cyclic = c_s_of_subsystem(F, E, "cyclic")
        report.check("(v) C_S(H) = 1", CSH.is_trivial())
        report.check("(v) C_S(E) = S2", cse_lattice == S2 and cse_cyclic == S2)
        report.check("(v) C_S(E) != C_S(H)", cse_lattice != CSH)
        control = check_theorem_b(G, g["G1"], 3)
        report.check("control: Theorem B holds for H = G1", control.passed)
        for name in ("G", "S", "S1", "S2", "R", "H"):
            report.record(name, g[name])
        report.record("C_S(H)", CSH)
        report.record("C_S(E)", cse_lattice)
        report.computed["control C_S(E) for H = G1"] = control.computed["C_S(E)"]
        _conclude(report, not report.failed_checks())
    return report

"""One test per acceptance criterion; the summary prints a pass/fail line for each."""

import json
import subprocess
import sys
import time

import pytest

import oracles
from conftest import corpus_groups, normal_triples
from fusionkit.centralizers import c_s_of_subsystem, subsystem_centralized_by, z_of_fusion
from fusionkit.corpusio import comparison_payload, load_catalog, resolve_group
from fusionkit.fusion import alperin_closure, aut_induced, fusion_system, hom_keys, hom_set, subsystem
from fusionkit.groups import alternating, direct_product, heisenberg, symmetric
from fusionkit.permcore import centralizer, intersection, normalizer
from fusionkit.structure import all_subgroups, core_p_prime
from fusionkit.theorems import (
    PASS,
    check_corollary,
    check_lemma_1,
    check_theorem_a,
    check_theorem_b,
    paper_counterexample,
    proof_trace_theorem_b,
)

TRACE_STEPS = (
    "S0 Sylow in G0",
    "O_p'(G0) = 1",
    "O^p(G0) = O^p(H)",
    "Aut_S0(P) Sylow in Aut_F0(P)",
    "P ∩ T E-centric",
    "P = (P ∩ T)<t>",
    "O_p(Aut_F0(P)) = Inn(P)",
    "[t, O^p(Aut_F0(P))] = 1",
    "Z(F0) = Z(G0)",
)


def elts(G):
    return frozenset(x.images for x in G.elements())


@pytest.mark.acceptance(1, "counterexample facts (i)-(v) exact, runtime < 5 s")
def test_counterexample(ce):
    start = time.perf_counter()
    r = paper_counterexample()
    elapsed = time.perf_counter() - start
    assert r.verdict == PASS, r.failed_checks()
    assert all(r.checks.values())
    assert r.computed["C_S(E)"] == [list(x.images) for x in ce["S2"].elements()]
    assert r.computed["C_S(H)"] == [list(range(6))]
    assert elapsed < 5.0


@pytest.mark.acceptance(2, "Theorem A Z(G) = Z(F) on every catalog entry with O_p'(G) = 1, runtime < 60 s")
def test_theorem_a_suite():
    start = time.perf_counter()
    covered = set()
    for entry in load_catalog():
        if "theorem_a" not in entry.expected:
            continue
        G = resolve_group(entry.group).group
        if not core_p_prime(G, entry.prime).is_trivial():
            continue
        r = check_theorem_a(G, entry.prime)
        assert r.verdict == PASS and r.computed["Z(G)"] == r.computed["Z(F)"], entry.id
        covered.add(entry.id)
    assert {"s3/-/p=3", "s4/-/p=2", "sl23/-/p=2", "d8/-/p=2", "q8/-/p=2", "c3xc3/-/p=3", "heis27/-/p=3"} <= covered
    assert time.perf_counter() - start < 60.0


@pytest.mark.acceptance(3, "Theorem B C_S(E) = C_S(H) on every normal catalog triple, runtime < 120 s")
def test_theorem_b_suite():
    start = time.perf_counter()
    ids = set()
    for case_id, G, H, p in normal_triples():
        r = check_theorem_b(G, H, p)
        assert r.hypotheses_ok and r.verdict == PASS, case_id
        assert r.computed["C_S(E)"] == r.computed["C_S(H)"]
        ids.add(case_id)
    assert {"s3xs3/G1/p=3", "s3xs3/S/p=3", "s4/A4/p=2", "sl23/Q8/p=2"} <= ids
    assert time.perf_counter() - start < 120.0


@pytest.mark.acceptance(4, "Lemma 1 sweep over all P <= S: zero violations on every normal triple")
def test_lemma_1_sweep():
    for case_id, G, H, p in normal_triples():
        r = check_lemma_1(G, H, p)
        assert r.verdict == PASS and r.witnesses == [], case_id
        assert r.stats["subgroups"] == len(oracles.subgroups(elts(fusion_system(G, p).sylow)))


@pytest.mark.acceptance(5, "proof trace passes every step for (S3 x S3, G1, 3) and every t in C_S(E)")
def test_proof_trace(ce):
    G, G1 = ce["G"], ce["G1"]
    F = fusion_system(G, 3)
    CSE = c_s_of_subsystem(F, subsystem(F, G1))
    assert CSE.order() == 3
    for t in CSE.elements():
        assert 9 % t.order() == 0
        r = proof_trace_theorem_b(G, G1, 3, t)
        assert r.verdict == PASS, (str(t), r.failed_checks())
        for step in TRACE_STEPS:
            assert r.checks[step] is True, (str(t), step)


def _small_groups():
    extra = [
        ("symmetric:6", symmetric(6)),
        ("alternating:6", alternating(6)),
        ("alternating:7", alternating(7)),
        ("heisenberg:5", heisenberg(5)),
        ("s4xs4", direct_product(symmetric(4), symmetric(4))),
    ]
    return corpus_groups() + extra


@pytest.mark.acceptance(6, "oracle equivalences exact on every corpus case under caps")
def test_oracle_equivalences():
    for name, G in _small_groups():
        if G.order() <= 5000:
            assert len(oracles.closure([g.images for g in G.generators], G.degree)) == G.order(), name
    for name, G in corpus_groups():
        if G.order() > 120:
            continue
        for p in (2, 3):
            if G.order() % p:
                continue
            F = fusion_system(G, p)
            S = F.sylow
            subs = all_subgroups(S)
            for P in subs:
                aut = aut_induced(P, G)
                # |Hom(P, P)| = |N_G(P) : C_G(P)|
                index = normalizer(G, P).order() // centralizer(G, P).order()
                assert len(hom_set(F, P, P)) == aut.order() == index, (name, p)
            assert c_s_of_subsystem(F, F) == z_of_fusion(F), (name, p)
            if S.order() <= 27:
                closure = alperin_closure(F)
                assert all(closure[P.key] == hom_keys(F, P) for P in subs), (name, p)
            if G.order() <= 48:
                for H in all_subgroups(G):
                    if H.order() > 24 or oracles.p_part(H.order(), p) != intersection(S, H).order():
                        continue
                    E = subsystem(F, H)
                    for X in all_subgroups(centralizer(S, E.sylow)):
                        assert subsystem_centralized_by(F, E, X, "brute") == subsystem_centralized_by(F, E, X, "alperin")
                    assert c_s_of_subsystem(F, E, "lattice") == c_s_of_subsystem(F, E, "cyclic")


@pytest.mark.acceptance(7, "corollary biconditional for every order-p element on every normal triple")
def test_corollary_suite():
    for case_id, G, H, p in normal_triples():
        r = check_corollary(G, H, p)
        assert r.verdict == PASS and r.witnesses == [], case_id
        assert r.stats["order_p_elements"] > 0


@pytest.mark.acceptance(8, "two consecutive `catalog run --json` give identical comparison payloads")
def test_determinism(tmp_path):
    payloads = []
    for i in range(2):
        path = tmp_path / f"run{i}.json"
        proc = subprocess.run([sys.executable, "-m", "fusionkit", "catalog", "run", "--json", str(path)], capture_output=True, text=True)
        assert proc.returncode == 0, proc.stderr
        payloads.append(json.dumps(comparison_payload(json.loads(path.read_text())), sort_keys=True))
    assert payloads[0] == payloads[1]
    assert json.loads(payloads[0])["summary"]["mismatched"] == []

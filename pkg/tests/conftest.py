import pytest

from fusionkit.corpusio import load_catalog, resolve_group, shipped_group_names
from fusionkit.groups import alternating, cyclic, dihedral, elementary_abelian, heisenberg, symmetric
from fusionkit.permcore import PermGroup, Permutation
from fusionkit.theorems import counterexample_groups


def cyc(degree, *cycles):
    return Permutation.from_cycles(degree, cycles)


def grp(degree, *gens):
    return PermGroup(degree, gens)


@pytest.fixture(scope="session")
def ce():
    """G = S3 x S3 and its subgroups from the non-normal example."""
    return counterexample_groups()


@pytest.fixture(scope="session")
def s3():
    return symmetric(3)


def corpus_groups():
    out = [(name, resolve_group(name).group) for name in shipped_group_names()]
    out += [
        ("symmetric:5", symmetric(5)),
        ("alternating:5", alternating(5)),
        ("dihedral:5", dihedral(5)),
        ("dihedral:6", dihedral(6)),
        ("cyclic:9", cyclic(9)),
        ("elementary_abelian:2,3", elementary_abelian(2, 3)),
        ("heisenberg:2", heisenberg(2)),
    ]
    return out


def normal_triples():
    """Catalog (G, H, p) triples whose Theorem B hypotheses hold."""
    out = []
    for entry in load_catalog():
        if entry.expected.get("theorem_b") == "pass":
            loaded = resolve_group(entry.group)
            out.append((entry.id, loaded.group, loaded.subgroup(entry.subgroup_name), entry.prime))
    return out


_acceptance = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, text): one acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker and report.when == "call":
        number, text = marker.args
        _acceptance.append((number, text, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number, text, outcome in sorted(_acceptance):
        terminalreporter.write_line(f"criterion {number}: {'PASS' if outcome == 'passed' else 'FAIL'}  {text}")

"""Group files, the shipped verification catalog, and report serialization.

Group files are JSON with one generator per line::

    {
      "name": "s3",
      "degree": 3,
      "generators": [
        [1, 0, 2],
        [1, 2, 0]
      ],
      "subgroups": {
        "A3": [[1, 2, 0]]
      }
    }

Points are 0-based.  A subgroup entry lists its generators, each either an
index into ``generators`` or an explicit image list.
"""

from __future__ import annotations

import concurrent.futures
import dataclasses
import json
from importlib import resources
from pathlib import Path

from .errors import GroupFileError
from .groups import make_named
from .permcore import NotAPermutationError, PermGroup, Permutation
from .structure import is_prime
from .theorems import (
    HYPOTHESIS_VIOLATED,
    VerificationReport,
    check_corollary,
    check_lemma_1,
    check_theorem_a,
    check_theorem_b,
)

CLAIMS = ("theorem_a", "theorem_b", "corollary", "lemma_1")


@dataclasses.dataclass
class GroupSpec:
    name: str
    degree: int
    generators: list
    named_subgroups: dict = dataclasses.field(default_factory=dict)

    def permutations(self) -> list[Permutation]:
        return [Permutation(g) for g in self.generators]

    def _resolve_item(self, sub, item):
        if isinstance(item, int) and not isinstance(item, bool):
            if not 0 <= item < len(self.generators):
                raise GroupFileError(f"subgroup {sub!r} references missing generator index {item}")
            return Permutation(self.generators[item])
        if isinstance(item, list):
            if len(item) != self.degree:
                raise GroupFileError(f"subgroup {sub!r} has a generator of length {len(item)}, expected {self.degree}")
            try:
                return Permutation(item)
            except NotAPermutationError as exc:
                raise GroupFileError(f"subgroup {sub!r}: {exc}") from None
        raise GroupFileError(f"subgroup {sub!r} entry {item!r} is neither an index nor an image list")

    def build(self) -> LoadedGroup:
        group = PermGroup(self.degree, self.permutations())
        subgroups = {}
        for sub, items in self.named_subgroups.items():
            H = PermGroup(self.degree, [self._resolve_item(sub, item) for item in items])
            if not H.is_subgroup_of(group):
                raise GroupFileError(f"subgroup {sub!r} is not contained in group {self.name!r}")
            subgroups[sub] = H
        return LoadedGroup(self, group, subgroups)

    def to_json(self) -> str:
        lines = ["{", f'  "name": {json.dumps(self.name)},', f'  "degree": {self.degree},', '  "generators": [']
        lines.append(",\n".join(f"    {json.dumps(list(g))}" for g in self.generators))
        lines.append("  ],")
        lines.append('  "subgroups": {')
        lines.append(",\n".join(f"    {json.dumps(k)}: {json.dumps(v)}" for k, v in self.named_subgroups.items()))
        lines.append("  }")
        lines.append("}")
        return "\n".join(line for line in lines if line) + "\n"

    @classmethod
    def from_group(cls, name: str, group: PermGroup, subgroups: dict | None = None) -> GroupSpec:
        named = {k: [list(g.images) for g in H.generators] for k, H in (subgroups or {}).items()}
        return cls(name, group.degree, [list(g.images) for g in group.generators], named)


@dataclasses.dataclass
class LoadedGroup:
    spec: GroupSpec
    group: PermGroup
    subgroups: dict

    def subgroup(self, name: str) -> PermGroup:
        try:
            return self.subgroups[name]
        except KeyError:
            known = ", ".join(self.subgroups) or "none"
            raise GroupFileError(f"group {self.spec.name!r} has no subgroup named {name!r} (known: {known})") from None


def parse_group_text(text: str, source: str = "<string>") -> GroupSpec:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GroupFileError(f"{source}: parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise GroupFileError(f"{source}: top level must be an object")
    missing = {"name", "degree", "generators"} - data.keys()
    if missing:
        raise GroupFileError(f"{source}: missing keys {sorted(missing)}")
    degree = data["degree"]
    if not isinstance(degree, int) or degree < 1:
        raise GroupFileError(f"{source}: degree must be a positive integer")
    gens = data["generators"]
    if not isinstance(gens, list):
        raise GroupFileError(f"{source}: generators must be a list")
    for i, g in enumerate(gens):
        if not isinstance(g, list) or len(g) != degree or sorted(g) != list(range(degree)):
            raise GroupFileError(f"{source}: generator {i} ({g}) is not a bijection of 0..{degree - 1}")
    subgroups = data.get("subgroups", {})
    if not isinstance(subgroups, dict):
        raise GroupFileError(f"{source}: subgroups must be an object")
    return GroupSpec(str(data["name"]), degree, gens, subgroups)


def load_group(path) -> LoadedGroup:
    path = Path(path)
    return parse_group_text(path.read_text(), str(path)).build()


def write_group(spec: GroupSpec, path) -> None:
    Path(path).write_text(spec.to_json())


def _data_dir():
    return resources.files("fusionkit") / "data"


def shipped_group_names() -> list[str]:
    return sorted(p.name[:-5] for p in (_data_dir() / "groups").iterdir() if p.name.endswith(".json"))


def resolve_group(ref: str) -> LoadedGroup:
    """A group from a file path, a shipped name (``s3xs3``), or ``family:params`` (``symmetric:4``)."""
    path = Path(ref)
    if path.suffix == ".json" or path.exists():
        if not path.exists():
            raise GroupFileError(f"group file {ref!r} does not exist")
        return load_group(path)
    shipped = _data_dir() / "groups" / f"{ref}.json"
    if shipped.is_file():
        return parse_group_text(shipped.read_text(), ref).build()
    family, _, params = ref.partition(":")
    try:
        args = [int(x) for x in params.split(",") if x]
    except ValueError:
        raise GroupFileError(f"bad parameters in group reference {ref!r}") from None
    try:
        group = make_named(family, *args)
    except ValueError as exc:
        raise GroupFileError(f"unknown group {ref!r}: not a file, a shipped group ({', '.join(shipped_group_names())}), or a family ({exc})") from None
    return LoadedGroup(GroupSpec.from_group(ref, group), group, {})


# -- catalog -----------------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class CatalogEntry:
    group: str
    subgroup_name: str | None
    prime: int
    expected: dict

    def __post_init__(self):
        if not is_prime(self.prime):
            raise ValueError(f"catalog entry {self.id}: {self.prime} is not prime")
        unknown = set(self.expected) - set(CLAIMS)
        if unknown:
            raise ValueError(f"catalog entry {self.id}: unknown claims {sorted(unknown)}")

    @property
    def id(self) -> str:
        return f"{self.group}/{self.subgroup_name or '-'}/p={self.prime}"


def load_catalog(path=None) -> list[CatalogEntry]:
    text = Path(path).read_text() if path else (_data_dir() / "catalog.json").read_text()
    entries = []
    for raw in json.loads(text)["entries"]:
        entry = CatalogEntry(raw["group"], raw.get("subgroup"), raw["prime"], dict(raw["expected"]))
        if entry.subgroup_name is not None:
            resolve_group(entry.group).subgroup(entry.subgroup_name)
        entries.append(entry)
    return entries


def run_claim(claim: str, loaded: LoadedGroup, subgroup: str | None, p: int) -> VerificationReport:
    G = loaded.group
    if claim == "theorem_a":
        return check_theorem_a(G, p)
    if subgroup is None:
        raise ValueError(f"claim {claim} needs a subgroup")
    H = loaded.subgroup(subgroup)
    runner = {"theorem_b": check_theorem_b, "corollary": check_corollary, "lemma_1": check_lemma_1}[claim]
    return runner(G, H, p)


def run_entry(entry: CatalogEntry, claims=None) -> dict:
    loaded = resolve_group(entry.group)
    results = []
    for claim, expected in entry.expected.items():
        if claims and claim not in claims:
            continue
        report = run_claim(claim, loaded, entry.subgroup_name, entry.prime)
        results.append({
            "claim": claim,
            "expected": expected,
            "matches": report.verdict == expected,
            "report": report.to_dict(),
        })
    return {
        "id": entry.id,
        "group": entry.group,
        "subgroup": entry.subgroup_name,
        "prime": entry.prime,
        "results": results,
    }


def _select(entries, filter_text):
    if not filter_text:
        return entries, None
    if filter_text in CLAIMS:
        return [e for e in entries if filter_text in e.expected], {filter_text}
    return [e for e in entries if filter_text in e.id], None


def _run_indexed(args):
    entry, claims = args
    return run_entry(entry, claims)


def run_catalog(filter_text: str | None = None, jobs: int = 1, entries=None) -> dict:
    entries, claims = _select(entries if entries is not None else load_catalog(), filter_text)
    work = [(e, claims) for e in entries]
    if jobs > 1 and len(work) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_indexed, work))
    else:
        results = [_run_indexed(w) for w in work]
    claims_run = [r for e in results for r in e["results"]]
    return {
        "catalog": results,
        "summary": {
            "entries": len(results),
            "claims": len(claims_run),
            "matched": sum(r["matches"] for r in claims_run),
            "mismatched": [f"{e['id']}:{r['claim']}" for e in results for r in e["results"] if not r["matches"]],
            "hypothesis_violated": sum(r["report"]["verdict"] == HYPOTHESIS_VIOLATED for r in claims_run),
        },
    }


def comparison_payload(doc):
    """``doc`` with every ``timing_ms`` field removed."""
    if isinstance(doc, dict):
        return {k: comparison_payload(v) for k, v in doc.items() if k != "timing_ms"}
    if isinstance(doc, list):
        return [comparison_payload(v) for v in doc]
    return doc


def dumps_report(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"

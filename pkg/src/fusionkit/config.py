"""Enumeration caps.

Defaults can be overridden with the ``FUSIONKIT_CAPS`` environment variable,
a comma separated list of ``name=value`` pairs, e.g.
``FUSIONKIT_CAPS=enumeration=50000,subgroups=2187``.
"""

from __future__ import annotations

import contextlib
import dataclasses
import os

from .errors import ScaleLimitError


@dataclasses.dataclass(frozen=True)
class Caps:
    enumeration: int = 20_000
    subgroups: int = 729


def _parse_env(text: str) -> dict[str, int]:
    out = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        name, sep, value = item.partition("=")
        name = name.strip()
        if not sep or name not in Caps.__dataclass_fields__:
            raise ValueError(f"bad FUSIONKIT_CAPS entry {item!r}; expected enumeration=N or subgroups=N")
        out[name] = int(value)
    return out


_override: Caps | None = None


def get_caps() -> Caps:
    if _override is not None:
        return _override
    env = os.environ.get("FUSIONKIT_CAPS")
    if env:
        return Caps(**_parse_env(env))
    return Caps()


@contextlib.contextmanager
def override_caps(**kwargs):
    global _override
    previous = _override
    _override = dataclasses.replace(get_caps(), **kwargs)
    try:
        yield _override
    finally:
        _override = previous


def check_cap(what: str, size: int, cap_name: str = "enumeration") -> None:
    cap = getattr(get_caps(), cap_name)
    if size > cap:
        raise ScaleLimitError(what, size, cap_name, cap)

"""Regenerate the pinned regression data in ``groupement/data``.

    python3 -m groupement.fixtures

Every number in the data files comes from the enumerators; nothing is typed in
by hand.  Tests recompute the same queries and compare.
"""

from __future__ import annotations

import argparse
import json
from pathlib import Path

from . import __version__
from .core import cyclic_group, from_monoid
from .enumeration import EnumerationQuery, canonical_groupements, count, enum_morphisms, enum_transformations
from .morph import identity_gmor
from .search import interchange_search

DATA = Path(__file__).with_name("data")
COMMAND = "python3 -m groupement.fixtures"

STRUCTURE_QUERIES = [
    *(EnumerationQuery(n, "groupement", True) for n in (1, 2, 3)),
    *(EnumerationQuery(n, "groupement", False) for n in (1, 2)),
    *(EnumerationQuery(n, "category", True) for n in (1, 2, 3)),
    *(EnumerationQuery(n, "star", True) for n in (1, 2, 3)),
    *(EnumerationQuery(n, "alexandroff", True) for n in (1, 2, 3, 4)),
    *(EnumerationQuery(n, "alexandroff", False) for n in (1, 2)),
    *(EnumerationQuery(n, "two-groupement", True) for n in (1, 2)),
]


def morphism_pair():
    """Two fixed groupements on 2 elements: the first and last canonical ones."""
    gs = list(canonical_groupements(2))
    return gs[0], gs[-1]


def structure_count(q: EnumerationQuery) -> dict:
    return {
        "query": {"n": q.n, "class": q.cls, "canonical": q.canonical},
        "count": count(q),
        "tool_version": __version__,
    }


def map_counts() -> list[dict]:
    g1, g2 = morphism_pair()
    xor = from_monoid(cyclic_group(2), 0)
    i = identity_gmor(xor)
    return [
        {
            "query": {"morphisms": "first and last canonical groupements on 2 elements"},
            "count": sum(1 for _ in enum_morphisms(g1, g2)),
            "tool_version": __version__,
        },
        {
            "query": {"transformations": "identity to identity on (Z/2, xor) with constant-0 maps"},
            "count": sum(1 for _ in enum_transformations(i, i)),
            "tool_version": __version__,
        },
    ]


def build_counts() -> dict:
    return {
        "command": COMMAND,
        "tool_version": __version__,
        "entries": [structure_count(q) for q in STRUCTURE_QUERIES] + map_counts(),
    }


def build_search() -> dict:
    return {"command": COMMAND, "tool_version": __version__, "report": interchange_search(2)}


def write(path: Path, data: dict) -> None:
    path.write_text(json.dumps(data, indent=1) + "\n")


def main(argv=None) -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out", type=Path, default=DATA)
    args = p.parse_args(argv)
    args.out.mkdir(parents=True, exist_ok=True)
    write(args.out / "counts.json", build_counts())
    write(args.out / "interchange_n2.json", build_search())
    print(f"wrote {args.out / 'counts.json'} and {args.out / 'interchange_n2.json'}")


if __name__ == "__main__":
    main()

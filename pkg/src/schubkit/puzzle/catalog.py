"""Tile definitions and catalog loading.

A tile fixes, for one cell orientation, how many pipes cross each side and
how the entering pipe ends match the leaving ones.  Strand crossings are
geometric (two chords cross iff their endpoints interleave around the cell
perimeter); the stored crossing list is validated against that derivation
at load time.

Catalog JSON:

    {"name": ..., "tiles": [
        {"name": ..., "orientation": "r12",
         "sides": [{"endpoints": 1}, ...],      # canonical side order
         "matching": [[0, 2], ...],             # in-endpoint -> out-endpoint
         "crossings": [[0, 1], ...],            # strand index pairs
         "valued": false},
        ...]}

Endpoints are numbered through the canonical side order, slots ascending.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .geometry import CYCLIC, SIDES, side_capacity

__all__ = ["CatalogError", "TileDef", "TileCatalog", "load_catalog", "builtin_catalog"]

Endpoint = tuple[str, int]  # (side name, slot)


class CatalogError(ValueError):
    """Malformed tile or catalog document."""


def _endpoint_order(orientation: str) -> list[Endpoint]:
    out = []
    for side in SIDES[orientation]:
        for slot in range(side_capacity(side.kind)):
            out.append((side.name, slot))
    return out


@dataclass(frozen=True)
class TileDef:
    name: str
    orientation: str
    side_counts: dict[str, int]
    strands: tuple[tuple[Endpoint, Endpoint], ...]  # (in, out) pairs
    valued: bool = False
    crossings: tuple[tuple[int, int], ...] = field(default=(), compare=False)

    def in_signature(self) -> tuple[int, ...]:
        return tuple(
            self.side_counts.get(s.name, 0)
            for s in SIDES[self.orientation]
            if s.flow == "in"
        )

    def out_signature(self) -> tuple[int, ...]:
        return tuple(
            self.side_counts.get(s.name, 0)
            for s in SIDES[self.orientation]
            if s.flow == "out"
        )


def derive_crossings(orientation: str, strands) -> tuple[tuple[int, int], ...]:
    """Strand pairs whose chords interleave on the perimeter cycle."""
    cycle = CYCLIC[orientation]
    pos = {ep: i for i, ep in enumerate(cycle)}
    n = len(cycle)

    def crossing(s1, s2) -> bool:
        a1, b1 = pos[s1[0]], pos[s1[1]]
        inside = sum(
            1 for ep in s2 if 0 < (pos[ep] - a1) % n < (b1 - a1) % n
        )
        return inside == 1

    out = []
    for i in range(len(strands)):
        for j in range(i + 1, len(strands)):
            if crossing(strands[i], strands[j]):
                out.append((i, j))
    return tuple(out)


def make_tile(
    name: str,
    orientation: str,
    strands,
    valued: bool = False,
) -> TileDef:
    """Build and validate a tile from its strand list."""
    if orientation not in SIDES:
        raise CatalogError(f"unknown orientation {orientation!r}")
    sides = {s.name: s for s in SIDES[orientation]}
    counts: dict[str, int] = {}
    seen: set[Endpoint] = set()
    norm = []
    for raw in strands:
        (a_side, a_slot), (b_side, b_slot) = raw
        for sname in (a_side, b_side):
            if sname not in sides:
                raise CatalogError(f"tile {name!r}: unknown side {sname!r}")
        if sides[a_side].flow != "in" or sides[b_side].flow != "out":
            raise CatalogError(f"tile {name!r}: strand must run in -> out: {raw}")
        for ep in ((a_side, a_slot), (b_side, b_slot)):
            if ep in seen:
                raise CatalogError(f"tile {name!r}: endpoint used twice: {ep}")
            seen.add(ep)
            if not 0 <= ep[1] < side_capacity(sides[ep[0]].kind):
                raise CatalogError(f"tile {name!r}: slot out of range: {ep}")
            counts[ep[0]] = counts.get(ep[0], 0) + 1
        norm.append(((a_side, a_slot), (b_side, b_slot)))
    for sname, c in counts.items():
        if c > side_capacity(sides[sname].kind):
            raise CatalogError(
                f"tile {name!r}: side {sname} carries {c} pipes, over capacity"
            )
    # Slots on a side must be filled from 0 upward (no gap at slot 0).
    for sname, c in counts.items():
        used = sorted(slot for (s, slot) in seen if s == sname)
        if used != list(range(c)):
            raise CatalogError(f"tile {name!r}: side {sname} slots must be 0..{c-1}")
    strands_t = tuple(norm)
    return TileDef(
        name=name,
        orientation=orientation,
        side_counts=counts,
        strands=strands_t,
        valued=valued,
        crossings=derive_crossings(orientation, strands_t),
    )


@dataclass
class TileCatalog:
    name: str
    tiles: list[TileDef]

    def __post_init__(self):
        self._by_sig: dict[tuple[str, tuple[int, ...]], list[TileDef]] = {}
        names = set()
        for t in self.tiles:
            if t.name in names:
                raise CatalogError(f"duplicate tile name {t.name!r}")
            names.add(t.name)
            self._by_sig.setdefault((t.orientation, t.in_signature()), []).append(t)

    def candidates(self, orientation: str, in_signature: tuple[int, ...]) -> list[TileDef]:
        return self._by_sig.get((orientation, in_signature), [])

    def tile(self, name: str) -> TileDef:
        for t in self.tiles:
            if t.name == name:
                return t
        raise KeyError(name)

    def restrict(self, names, new_name: str | None = None) -> "TileCatalog":
        keep = set(names)
        return TileCatalog(new_name or self.name, [t for t in self.tiles if t.name in keep])

    def to_json(self) -> dict:
        tiles = []
        for t in self.tiles:
            order = _endpoint_order(t.orientation)
            idx = {ep: i for i, ep in enumerate(order)}
            tiles.append(
                {
                    "name": t.name,
                    "orientation": t.orientation,
                    "sides": [
                        {"endpoints": t.side_counts.get(s.name, 0)}
                        for s in SIDES[t.orientation]
                    ],
                    "matching": [[idx[a], idx[b]] for a, b in t.strands],
                    "crossings": [list(c) for c in t.crossings],
                    "valued": t.valued,
                }
            )
        return {"name": self.name, "tiles": tiles}


def load_catalog(document) -> TileCatalog:
    """Load and validate a catalog from a dict, JSON string, or file path."""
    if isinstance(document, (str, Path)):
        p = Path(document)
        if p.exists():
            document = json.loads(p.read_text())
        else:
            document = json.loads(str(document))
    if not isinstance(document, dict) or "tiles" not in document:
        raise CatalogError("catalog document must be an object with a 'tiles' list")
    tiles = []
    for i, td in enumerate(document["tiles"]):
        try:
            orientation = td["orientation"]
            order = _endpoint_order(orientation) if orientation in SIDES else []
            if orientation not in SIDES:
                raise CatalogError(f"unknown orientation {orientation!r}")
            declared = td.get("sides")
            if declared is not None:
                if len(declared) != len(SIDES[orientation]):
                    raise CatalogError("wrong number of sides")
                for side, spec in zip(SIDES[orientation], declared):
                    cnt = int(spec["endpoints"])
                    if cnt > side_capacity(side.kind):
                        raise CatalogError(
                            f"side {side.name} declares {cnt} endpoints, over capacity"
                        )
            strands = []
            for a, b in td.get("matching", ()):
                strands.append((order[int(a)], order[int(b)]))
            tile = make_tile(
                td.get("name", f"tile{i}"),
                orientation,
                strands,
                bool(td.get("valued", False)),
            )
            if declared is not None:
                for side, spec in zip(SIDES[orientation], declared):
                    if tile.side_counts.get(side.name, 0) != int(spec["endpoints"]):
                        raise CatalogError(
                            f"side {side.name}: declared endpoint count does not "
                            "match the matching"
                        )
            stored = {tuple(sorted(c)) for c in td.get("crossings", ())}
            derived = {tuple(sorted(c)) for c in tile.crossings}
            if "crossings" in td and stored != derived:
                raise CatalogError(
                    f"crossing list {sorted(stored)} disagrees with the geometric "
                    f"derivation {sorted(derived)}"
                )
        except CatalogError as exc:
            raise CatalogError(f"tile {i}: {exc}") from None
        except (KeyError, IndexError, TypeError, ValueError) as exc:
            raise CatalogError(f"tile {i}: malformed ({exc})") from None
        tiles.append(tile)
    return TileCatalog(document.get("name", "catalog"), tiles)


def builtin_catalog(name: str = "standard") -> TileCatalog:
    """Catalogs shipped with the package: standard, pd, bpd."""
    data = resources.files("schubkit.puzzle").joinpath(f"data/{name}.json")
    return load_catalog(json.loads(data.read_text()))

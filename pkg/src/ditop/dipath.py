"""Edge paths: directed paths between vertices, up to reparametrization.

An edge path is a start vertex plus a composable sequence of edges; the
empty sequence is the constant path at its start.  Since only the order
of traversed edges matters, reparametrization is quotiented away by the
representation itself, and constant paths come for free.

The reachability preorder collects all pairs (x, y) with an edge path
from x to y; it is the combinatorial shadow of the passage from a
directed space to a preordered set.  Note that any directed cycle
collapses to a totally related clump there, which is exactly why the
finer path structure is worth keeping.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EndpointMismatchError, InputError, InvalidPathError
from .precubical import Cell, PrecubicalSet


@dataclass(frozen=True)
class EdgePath:
    """A start vertex and a tuple of composable edges (possibly empty)."""

    start: Cell
    edges: tuple[Cell, ...] = ()

    def __post_init__(self):
        if self.start.dim != 0:
            raise InvalidPathError(f"path start {self.start.key!r} is not a vertex")
        if any(e.dim != 1 for e in self.edges):
            raise InvalidPathError("path edges must be 1-cells")

    @property
    def length(self) -> int:
        return len(self.edges)

    def edge_keys(self) -> tuple[str, ...]:
        """Sort key: the serialized edge sequence, compared lexicographically."""
        return tuple(e.key for e in self.edges)

    def __repr__(self) -> str:
        steps = ".".join(self.edge_keys())
        return f"<EdgePath {self.start.key}:{steps or 'const'}>"


def check_path(space: PrecubicalSet, p: EdgePath) -> None:
    """Raise InvalidPathError unless ``p`` is a genuine path of ``space``."""
    if p.start not in space:
        raise InvalidPathError(f"start {p.start.key!r} is not a cell of the complex")
    at = p.start
    for k, e in enumerate(p.edges):
        if e not in space:
            raise InvalidPathError(f"edge {e.key!r} is not a cell of the complex")
        if space.face(e, 1, 0) != at:
            raise InvalidPathError(
                f"edge {e.key!r} at position {k} starts at "
                f"{space.face(e, 1, 0).key!r}, not at {at.key!r}"
            )
        at = space.face(e, 1, 1)


def is_path(space: PrecubicalSet, p: EdgePath) -> bool:
    try:
        check_path(space, p)
    except InvalidPathError:
        return False
    return True


def path_end(space: PrecubicalSet, p: EdgePath) -> Cell:
    """Final vertex of the path: its start when constant."""
    check_path(space, p)
    if not p.edges:
        return p.start
    return space.face(p.edges[-1], 1, 1)


def concat(space: PrecubicalSet, p: EdgePath, q: EdgePath) -> EdgePath:
    """Concatenation; the constant paths are its two-sided units."""
    if path_end(space, p) != q.start:
        raise EndpointMismatchError(
            f"cannot concatenate: first path ends at {path_end(space, p).key!r}, "
            f"second starts at {q.start.key!r}"
        )
    check_path(space, q)
    return EdgePath(p.start, p.edges + q.edges)


def enumerate_paths(space: PrecubicalSet, a: Cell, b: Cell, max_len: int) -> list[EdgePath]:
    """All edge paths from a to b with at most ``max_len`` edges.

    Output is in lexicographic order of the edge-id sequence (so the
    constant path, when a == b, comes first), duplicate-free by
    construction.
    """
    for v in (a, b):
        if v.dim != 0 or v not in space:
            raise InputError(f"{v.key!r} is not a vertex of the complex")
    if max_len < 0:
        raise InputError("max_len must be non-negative")
    found: list[EdgePath] = []
    acc: list[Cell] = []

    def walk(at: Cell) -> None:
        if at == b:
            found.append(EdgePath(a, tuple(acc)))
        if len(acc) == max_len:
            return
        for e in space.out_edges(at):
            acc.append(e)
            walk(space.face(e, 1, 1))
            acc.pop()

    walk(a)
    return found


@dataclass(frozen=True)
class Preorder:
    """A reflexive, transitive relation on a finite vertex set."""

    carrier: frozenset[Cell]
    pairs: frozenset[tuple[Cell, Cell]]

    def leq(self, x: Cell, y: Cell) -> bool:
        return (x, y) in self.pairs

    def is_antisymmetric(self) -> bool:
        return all(x == y or (y, x) not in self.pairs for (x, y) in self.pairs)


def reachability_preorder(space: PrecubicalSet) -> Preorder:
    """(x, y) related iff some edge path runs from x to y."""
    pairs: set[tuple[Cell, Cell]] = set()
    for start in space.vertices:
        seen = {start}
        stack = [start]
        while stack:
            at = stack.pop()
            for e in space.out_edges(at):
                nxt = space.face(e, 1, 1)
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        pairs.update((start, v) for v in seen)
    return Preorder(frozenset(space.vertices), frozenset(pairs))


# ---------------------------------------------------------------------------
# serialization: {"start": "<id>", "edges": ["<id>", ...]}


def path_to_data(p: EdgePath) -> dict:
    return {"start": p.start.key, "edges": list(p.edge_keys())}


def path_from_data(data, space: PrecubicalSet, check: bool = True) -> EdgePath:
    if not isinstance(data, dict) or "start" not in data:
        raise InputError("path JSON must be an object with a 'start' field")
    by_key = {c.key: c for c in space.all_cells()}
    try:
        start = by_key[data["start"]]
        edges = tuple(by_key[e] for e in data.get("edges", []))
    except KeyError as exc:
        raise InputError(f"path references unknown cell {exc.args[0]!r}") from None
    try:
        p = EdgePath(start, edges)
    except InvalidPathError as exc:
        raise InputError(str(exc)) from None
    if check:
        try:
            check_path(space, p)
        except InvalidPathError as exc:
            raise InputError(str(exc)) from None
    return p


def preorder_to_data(po: Preorder) -> dict:
    return {
        "carrier": sorted(v.key for v in po.carrier),
        "relation": sorted([x.key, y.key] for (x, y) in po.pairs),
    }

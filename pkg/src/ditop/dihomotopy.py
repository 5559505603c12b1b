"""Dihomotopy of edge paths via elementary square moves.

Every square s carries two monotone edge words along its boundary:

    bottom-then-right   [face(s,2,0), face(s,1,1)]
    left-then-top       [face(s,1,0), face(s,2,1)]

An elementary move rewrites one word into the other at some position of
a path.  Moves fix both endpoints and the path length; dihomotopy is the
equivalence relation they generate, i.e. connectivity in the (symmetric)
move graph.  Classification between two vertices partitions the
enumerated paths into move components, each with a canonical
representative: the lexicographically least member.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .errors import InputError, InvalidPathError, ResourceLimitError
from .dipath import EdgePath, check_path, enumerate_paths
from .precubical import Cell, PrecubicalSet

BOTTOM_RIGHT = "bottom-right"
LEFT_TOP = "left-top"

DEFAULT_BUDGET = 1_000_000


@dataclass(frozen=True)
class ElementaryMove:
    """Replace one monotone boundary word of ``square`` by the other.

    ``orientation`` names the word being replaced; ``position`` is the
    index of its first edge in the path.
    """

    position: int
    square: Cell
    orientation: str


@dataclass(frozen=True)
class MoveWitness:
    """A replayable move sequence connecting two dihomotopic paths."""

    moves: tuple[ElementaryMove, ...]


@dataclass(frozen=True)
class DihomotopyClass:
    endpoints: tuple[Cell, Cell]
    canonical: EdgePath
    members: tuple[EdgePath, ...] | None = None

    @property
    def size(self) -> int:
        if self.members is None:
            raise InputError("class members were not materialized")
        return len(self.members)


def square_words(space: PrecubicalSet, s: Cell) -> dict[str, tuple[Cell, Cell]]:
    """The two monotone boundary words of a square, keyed by orientation."""
    return {
        BOTTOM_RIGHT: (space.face(s, 2, 0), space.face(s, 1, 1)),
        LEFT_TOP: (space.face(s, 1, 0), space.face(s, 2, 1)),
    }


def _word_index(space: PrecubicalSet) -> dict[tuple[Cell, Cell], list[tuple[Cell, str]]]:
    """Map an adjacent edge pair to the squares (and orientations) it bounds."""
    index: dict[tuple[Cell, Cell], list[tuple[Cell, str]]] = {}
    for s in space.squares:
        for orientation, word in square_words(space, s).items():
            index.setdefault(word, []).append((s, orientation))
    for matches in index.values():
        matches.sort()
    return index


def _neighbors(space, p: EdgePath, index) -> list[tuple[ElementaryMove, EdgePath]]:
    out: list[tuple[ElementaryMove, EdgePath]] = []
    for pos in range(len(p.edges) - 1):
        word = (p.edges[pos], p.edges[pos + 1])
        for s, orientation in index.get(word, ()):
            words = square_words(space, s)
            other = LEFT_TOP if orientation == BOTTOM_RIGHT else BOTTOM_RIGHT
            replaced = p.edges[:pos] + words[other] + p.edges[pos + 2:]
            out.append((ElementaryMove(pos, s, orientation), EdgePath(p.start, replaced)))
    return out


def elementary_moves(space: PrecubicalSet, p: EdgePath) -> list[tuple[ElementaryMove, EdgePath]]:
    """All single-move neighbors of ``p``, each with the move that reaches it.

    Neighbors keep the endpoints and the length of ``p``; the list is
    ordered by (position, square, orientation).
    """
    check_path(space, p)
    return _neighbors(space, p, _word_index(space))


def apply_move(space: PrecubicalSet, p: EdgePath, move: ElementaryMove) -> EdgePath:
    """Replay one move; raises InvalidPathError when it does not apply."""
    check_path(space, p)
    if not 0 <= move.position < len(p.edges) - 1:
        raise InvalidPathError(f"move position {move.position} out of range")
    words = square_words(space, move.square)
    if move.orientation not in words:
        raise InputError(f"unknown move orientation {move.orientation!r}")
    expected = words[move.orientation]
    actual = (p.edges[move.position], p.edges[move.position + 1])
    if actual != expected:
        raise InvalidPathError(
            f"move expects word {tuple(e.key for e in expected)} at position "
            f"{move.position}, found {tuple(e.key for e in actual)}"
        )
    other = LEFT_TOP if move.orientation == BOTTOM_RIGHT else BOTTOM_RIGHT
    replaced = p.edges[: move.position] + words[other] + p.edges[move.position + 2:]
    return EdgePath(p.start, replaced)


def dihomotopic(
    space: PrecubicalSet, p: EdgePath, q: EdgePath, budget: int = DEFAULT_BUDGET
) -> MoveWitness | None:
    """Search the move graph from p to q; the witness replays to q exactly.

    Returns a MoveWitness (empty for p == q) or ``None``; an endpoint or
    length mismatch short-circuits to ``None`` since no move can bridge it.
    """
    check_path(space, p)
    check_path(space, q)
    if p.start != q.start or len(p.edges) != len(q.edges):
        return None
    if p.edges and space.face(p.edges[-1], 1, 1) != space.face(q.edges[-1], 1, 1):
        return None
    if p == q:
        return MoveWitness(())
    index = _word_index(space)
    came: dict[EdgePath, tuple[EdgePath, ElementaryMove]] = {}
    seen = {p}
    queue = deque([p])
    while queue:
        if len(seen) > budget:
            raise ResourceLimitError("dihomotopy search exceeded its budget")
        cur = queue.popleft()
        for move, nxt in _neighbors(space, cur, index):
            if nxt in seen:
                continue
            seen.add(nxt)
            came[nxt] = (cur, move)
            if nxt == q:
                moves: list[ElementaryMove] = []
                back = q
                while back != p:
                    back, mv = came[back]
                    moves.append(mv)
                moves.reverse()
                return MoveWitness(tuple(moves))
            queue.append(nxt)
    return None


def move_components(
    space: PrecubicalSet, paths: Sequence[EdgePath], budget: int = DEFAULT_BUDGET
) -> list[list[EdgePath]]:
    """Partition ``paths`` into connected components of the move graph.

    Components are computed inside the given set; when the set is closed
    under moves (as any full enumeration between two vertices is), these
    are exactly the dihomotopy classes.
    """
    index = _word_index(space)
    pool = set(paths)
    seen: set[EdgePath] = set()
    components: list[list[EdgePath]] = []
    expansions = 0
    for p in paths:
        if p in seen:
            continue
        component = []
        queue = deque([p])
        seen.add(p)
        while queue:
            expansions += 1
            if expansions > budget:
                raise ResourceLimitError("component search exceeded its budget")
            cur = queue.popleft()
            component.append(cur)
            for _, nxt in _neighbors(space, cur, index):
                if nxt in pool and nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        components.append(component)
    return components


def classes(
    space: PrecubicalSet, a: Cell, b: Cell, max_len: int, budget: int = DEFAULT_BUDGET
) -> list[DihomotopyClass]:
    """Dihomotopy classes of the paths from a to b of length at most max_len.

    Every class materializes its members (sorted), with the least member
    as canonical representative; the class list is ordered by canonical
    representative.
    """
    paths = enumerate_paths(space, a, b, max_len)
    components = move_components(space, paths, budget=budget)
    result = []
    for component in components:
        members = tuple(sorted(component, key=EdgePath.edge_keys))
        result.append(DihomotopyClass((a, b), members[0], members))
    result.sort(key=lambda cls: cls.canonical.edge_keys())
    return result


def classes_to_data(
    class_list: Sequence[DihomotopyClass], endpoints: tuple[Cell, Cell] | None = None
) -> dict:
    from .dipath import path_to_data

    if endpoints is None:
        if not class_list:
            raise InputError("cannot infer endpoints of an empty class list")
        endpoints = class_list[0].endpoints
    a, b = endpoints
    return {
        "endpoints": [a.key, b.key],
        "count": len(class_list),
        "classes": [
            {"canonical": path_to_data(cls.canonical), "size": cls.size}
            for cls in class_list
        ],
    }

"""Ready-made complexes used by the tests, the docs, and CLI examples."""

from __future__ import annotations

from typing import Collection

from .errors import InputError
from .precubical import Cell, FaceKey, PrecubicalSet


def directed_path(n: int) -> PrecubicalSet:
    """A string of n composable edges: vertices v0..vn, edges e0..e(n-1)."""
    if n < 0:
        raise InputError("path length must be non-negative")
    cells = {0: [Cell(0, f"v{k}") for k in range(n + 1)]}
    faces: dict[FaceKey, Cell] = {}
    if n:
        cells[1] = [Cell(1, f"e{k}") for k in range(n)]
        for k in range(n):
            faces[(Cell(1, f"e{k}"), 1, 0)] = Cell(0, f"v{k}")
            faces[(Cell(1, f"e{k}"), 1, 1)] = Cell(0, f"v{k + 1}")
    return PrecubicalSet(cells, faces)


def directed_cycle(k: int) -> PrecubicalSet:
    """A directed cycle on k vertices; k = 1 is the directed circle."""
    if k < 1:
        raise InputError("cycle length must be at least 1")
    cells = {
        0: [Cell(0, f"v{i}") for i in range(k)],
        1: [Cell(1, f"e{i}") for i in range(k)],
    }
    faces: dict[FaceKey, Cell] = {}
    for i in range(k):
        faces[(Cell(1, f"e{i}"), 1, 0)] = Cell(0, f"v{i}")
        faces[(Cell(1, f"e{i}"), 1, 1)] = Cell(0, f"v{(i + 1) % k}")
    return PrecubicalSet(cells, faces)


def directed_circle() -> PrecubicalSet:
    """One vertex, one loop edge."""
    return directed_cycle(1)


def grid(width: int, height: int, holes: Collection[tuple[int, int]] = ()) -> PrecubicalSet:
    """A width x height grid of squares, minus the squares listed in ``holes``.

    Vertices are named c<x><y> with x rightward and y upward (so the
    bottom-left corner is c00), horizontal edges h<x><y> run from c<x><y>
    to c<x+1><y>, vertical edges v<x><y> run upward, and s<x><y> fills
    the square with minimal corner c<x><y>.  Holes remove squares only;
    their boundary edges stay.
    """
    if width < 0 or height < 0:
        raise InputError("grid extents must be non-negative")
    holes = set(holes)
    for (x, y) in holes:
        if not (0 <= x < width and 0 <= y < height):
            raise InputError(f"hole {(x, y)} outside the {width}x{height} grid")

    wide = max(width, height) > 9

    def name(prefix: str, x: int, y: int) -> str:
        return f"{prefix}{x}_{y}" if wide else f"{prefix}{x}{y}"

    cells: dict[int, list[Cell]] = {0: [], 1: [], 2: []}
    faces: dict[FaceKey, Cell] = {}
    for x in range(width + 1):
        for y in range(height + 1):
            cells[0].append(Cell(0, name("c", x, y)))
    for x in range(width):
        for y in range(height + 1):
            h = Cell(1, name("h", x, y))
            cells[1].append(h)
            faces[(h, 1, 0)] = Cell(0, name("c", x, y))
            faces[(h, 1, 1)] = Cell(0, name("c", x + 1, y))
    for x in range(width + 1):
        for y in range(height):
            v = Cell(1, name("v", x, y))
            cells[1].append(v)
            faces[(v, 1, 0)] = Cell(0, name("c", x, y))
            faces[(v, 1, 1)] = Cell(0, name("c", x, y + 1))
    for x in range(width):
        for y in range(height):
            if (x, y) in holes:
                continue
            s = Cell(2, name("s", x, y))
            cells[2].append(s)
            faces[(s, 1, 0)] = Cell(1, name("v", x, y))
            faces[(s, 1, 1)] = Cell(1, name("v", x + 1, y))
            faces[(s, 2, 0)] = Cell(1, name("h", x, y))
            faces[(s, 2, 1)] = Cell(1, name("h", x, y + 1))
    return PrecubicalSet(cells, faces)

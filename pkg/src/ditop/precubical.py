"""Finite precubical sets, their morphisms, and colimit constructions.

A precubical set is a graded family of cells with face maps: an n-cell c
has, for every direction i in 1..n and sign a in {0, 1}, an (n-1)-cell
face(c, i, a), and the face maps satisfy the cubical identities

    face(face(c, j, b), i, a) == face(face(c, i, a), j - 1, b)   for i < j.

Vertices (0-cells) and edges (1-cells) form a directed graph: an edge e
runs from face(e, 1, 0) to face(e, 1, 1).  Squares fill commuting pairs
of edge words, and so on upward.  Finite complexes of this kind are the
standard combinatorial models of directed spaces, in particular of the
state spaces of concurrent programs.

Broken complexes are deliberately constructible: :func:`validate`
reports violations as data rather than raising, which is what the
face-mutation tests and the ``validate`` CLI verb need.  Every other
operation assumes its input has a clean report.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product as _product
from pathlib import Path
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

from .errors import InputError, ResourceLimitError

FaceKey = tuple["Cell", int, int]


@dataclass(frozen=True, order=True)
class Cell:
    """A cell: a dimension plus a key that is unique within its complex."""

    dim: int
    key: str

    def __repr__(self) -> str:
        return f"Cell({self.dim}, {self.key!r})"


def vertex(key: str) -> Cell:
    return Cell(0, key)


def edge(key: str) -> Cell:
    return Cell(1, key)


class PrecubicalSet:
    """Immutable finite precubical set.

    ``cells`` maps dimensions to cell collections and ``faces`` maps
    ``(cell, direction, sign)`` triples to boundary cells.  Construction
    only normalises structure (sorting, key uniqueness across the whole
    complex); semantic soundness is the business of :func:`validate`.
    """

    __slots__ = ("_cells", "_faces", "_out", "_in")

    def __init__(
        self,
        cells: Mapping[int, Iterable[Cell]],
        faces: Mapping[FaceKey, Cell],
    ):
        by_dim: dict[int, tuple[Cell, ...]] = {}
        seen: set[str] = set()
        for dim in sorted(int(d) for d in cells):
            cs = sorted(set(cells[dim]))
            if not cs:
                continue
            for c in cs:
                if c.dim != dim:
                    raise ValueError(f"cell {c!r} filed under dimension {dim}")
                if c.key in seen:
                    raise ValueError(f"duplicate cell key {c.key!r}")
                seen.add(c.key)
            by_dim[dim] = tuple(cs)
        self._cells = by_dim
        self._faces = dict(faces)
        self._out: dict[Cell, tuple[Cell, ...]] | None = None
        self._in: dict[Cell, tuple[Cell, ...]] | None = None

    @classmethod
    def empty(cls) -> "PrecubicalSet":
        return cls({}, {})

    @property
    def dimension(self) -> int:
        return max(self._cells, default=-1)

    def dims(self) -> tuple[int, ...]:
        return tuple(self._cells)

    def cells(self, dim: int) -> tuple[Cell, ...]:
        return self._cells.get(dim, ())

    def all_cells(self) -> Iterator[Cell]:
        for dim in self._cells:
            yield from self._cells[dim]

    @property
    def vertices(self) -> tuple[Cell, ...]:
        return self.cells(0)

    @property
    def edges(self) -> tuple[Cell, ...]:
        return self.cells(1)

    @property
    def squares(self) -> tuple[Cell, ...]:
        return self.cells(2)

    def cell_count(self) -> int:
        return sum(len(cs) for cs in self._cells.values())

    def is_empty(self) -> bool:
        return not self._cells

    def __contains__(self, c: Cell) -> bool:
        return c in self._cells.get(c.dim, ())

    def face(self, c: Cell, direction: int, sign: int) -> Cell:
        try:
            return self._faces[(c, direction, sign)]
        except KeyError:
            raise KeyError(
                f"no face ({direction},{sign}) recorded for cell {c.key!r}"
            ) from None

    def face_items(self) -> Iterator[tuple[FaceKey, Cell]]:
        return iter(self._faces.items())

    def _adjacency(self):
        if self._out is None:
            out: dict[Cell, list[Cell]] = {v: [] for v in self.vertices}
            inc: dict[Cell, list[Cell]] = {v: [] for v in self.vertices}
            for e in self.edges:
                s = self._faces.get((e, 1, 0))
                t = self._faces.get((e, 1, 1))
                if s in out:
                    out[s].append(e)
                if t in inc:
                    inc[t].append(e)
            self._out = {v: tuple(sorted(es)) for v, es in out.items()}
            self._in = {v: tuple(sorted(es)) for v, es in inc.items()}
        return self._out, self._in

    def out_edges(self, v: Cell) -> tuple[Cell, ...]:
        out, _ = self._adjacency()
        if v not in out:
            raise InputError(f"{v.key!r} is not a vertex of the complex")
        return out[v]

    def in_edges(self, v: Cell) -> tuple[Cell, ...]:
        _, inc = self._adjacency()
        if v not in inc:
            raise InputError(f"{v.key!r} is not a vertex of the complex")
        return inc[v]

    def min_corner(self, c: Cell) -> Cell:
        """The vertex reached by walking every direction to its 0 side."""
        while c.dim > 0:
            c = self.face(c, 1, 0)
        return c

    def max_corner(self, c: Cell) -> Cell:
        while c.dim > 0:
            c = self.face(c, 1, 1)
        return c

    def corner_edge(self, c: Cell, direction: int) -> Cell:
        """The edge leaving the minimal corner of ``c`` along ``direction``.

        Obtained by stripping every other direction down to its 0 side;
        the cubical identities make the stripping order immaterial.
        """
        if not 1 <= direction <= c.dim:
            raise InputError(f"direction {direction} out of range for {c.key!r}")
        pos = direction
        while c.dim > 1:
            j = c.dim if pos != c.dim else c.dim - 1
            c = self.face(c, j, 0)
            if j < pos:
                pos -= 1
        return c

    def with_face(self, c: Cell, direction: int, sign: int, target: Cell) -> "PrecubicalSet":
        """Copy of the complex with one face entry redirected (for mutation tests)."""
        faces = dict(self._faces)
        faces[(c, direction, sign)] = target
        return PrecubicalSet(self._cells, faces)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PrecubicalSet)
            and self._cells == other._cells
            and self._faces == other._faces
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        counts = ", ".join(f"{len(cs)}x{d}" for d, cs in self._cells.items())
        return f"<PrecubicalSet {counts or 'empty'}>"


@dataclass(frozen=True)
class Violation:
    """One broken invariant, naming the offending cell and face indices."""

    kind: str
    message: str
    cell: Cell | None = None


def validate(space: PrecubicalSet) -> list[Violation]:
    """Check every structural invariant; an empty report means the complex is sound.

    Reported kinds: ``stray-face`` (face entry for an undeclared cell),
    ``bad-face-index`` (direction or sign out of range), ``missing-face``
    (the face map is not total), ``dangling-face`` (target undeclared),
    ``face-dimension`` (target of the wrong dimension), and
    ``cubical-identity``.
    """
    report: list[Violation] = []
    present = set(space.all_cells())

    for (c, i, a) in sorted(dict(space.face_items()), key=lambda k: (k[0], k[1], k[2])):
        if c not in present:
            report.append(Violation("stray-face", f"face entry recorded for unknown cell {c.key!r}", c))
        elif not (1 <= i <= c.dim) or a not in (0, 1):
            report.append(Violation(
                "bad-face-index",
                f"face ({i},{a}) out of range for cell {c.key!r} of dimension {c.dim}",
                c,
            ))

    for c in space.all_cells():
        for i in range(1, c.dim + 1):
            for a in (0, 1):
                try:
                    t = space.face(c, i, a)
                except KeyError:
                    report.append(Violation("missing-face", f"cell {c.key!r} lacks face ({i},{a})", c))
                    continue
                if t not in present:
                    report.append(Violation(
                        "dangling-face",
                        f"face ({i},{a}) of {c.key!r} is the undeclared cell {t.key!r}",
                        c,
                    ))
                elif t.dim != c.dim - 1:
                    report.append(Violation(
                        "face-dimension",
                        f"face ({i},{a}) of {c.key!r} has dimension {t.dim}, expected {c.dim - 1}",
                        c,
                    ))

    for dim in space.dims():
        if dim < 2:
            continue
        for c in space.cells(dim):
            for j in range(2, dim + 1):
                for i in range(1, j):
                    for a in (0, 1):
                        for b in (0, 1):
                            try:
                                lhs = space.face(space.face(c, j, b), i, a)
                                rhs = space.face(space.face(c, i, a), j - 1, b)
                            except KeyError:
                                continue  # totality failure already reported
                            if lhs != rhs:
                                report.append(Violation(
                                    "cubical-identity",
                                    f"face(face({c.key!r},{j},{b}),{i},{a}) = {lhs.key!r} "
                                    f"but face(face({c.key!r},{i},{a}),{j - 1},{b}) = {rhs.key!r}",
                                    c,
                                ))
    return report


# ---------------------------------------------------------------------------
# generators and products


def standard_cube(n: int) -> PrecubicalSet:
    """The directed n-cube.

    Cells are words over the alphabet {0, 1, *} of length n; a word with
    k stars is a k-cell, and face(w, i, a) substitutes the i-th star by
    the digit a.  The 0-cube is the single empty word.
    """
    if n < 0:
        raise InputError("cube dimension must be non-negative")
    cells: dict[int, list[Cell]] = {}
    faces: dict[FaceKey, Cell] = {}
    for letters in _product("01*", repeat=n):
        word = "".join(letters)
        dim = word.count("*")
        cells.setdefault(dim, []).append(Cell(dim, word))
    for dim, cs in cells.items():
        if dim == 0:
            continue
        for c in cs:
            stars = [p for p, ch in enumerate(c.key) if ch == "*"]
            for i, p in enumerate(stars, start=1):
                for a in (0, 1):
                    target = c.key[:p] + str(a) + c.key[p + 1:]
                    faces[(c, i, a)] = Cell(dim - 1, target)
    return PrecubicalSet(cells, faces)


def tensor(x: PrecubicalSet, y: PrecubicalSet) -> PrecubicalSet:
    """Product complex: cells are pairs, directions of the left factor first."""
    pair_cell: dict[tuple[Cell, Cell], Cell] = {}
    cells: dict[int, list[Cell]] = {}
    for a in x.all_cells():
        for b in y.all_cells():
            dim = a.dim + b.dim
            c = Cell(dim, f"({a.key},{b.key})")
            pair_cell[(a, b)] = c
            cells.setdefault(dim, []).append(c)
    faces: dict[FaceKey, Cell] = {}
    for (a, b), c in pair_cell.items():
        for i in range(1, c.dim + 1):
            for s in (0, 1):
                if i <= a.dim:
                    fc = pair_cell[(x.face(a, i, s), b)]
                else:
                    fc = pair_cell[(a, y.face(b, i - a.dim, s))]
                faces[(c, i, s)] = fc
    return PrecubicalSet(cells, faces)


class PcMorphism:
    """A cell map preserving dimension and commuting with every face map."""

    __slots__ = ("source", "target", "mapping")

    def __init__(self, source: PrecubicalSet, target: PrecubicalSet, mapping: Mapping[Cell, Cell]):
        self.source = source
        self.target = target
        self.mapping = dict(mapping)

    def __call__(self, c: Cell) -> Cell:
        try:
            return self.mapping[c]
        except KeyError:
            raise InputError(f"cell {c.key!r} is not in the morphism's source") from None

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PcMorphism)
            and self.source == other.source
            and self.target == other.target
            and self.mapping == other.mapping
        )

    __hash__ = None  # type: ignore[assignment]

    def __matmul__(self, other: "PcMorphism") -> "PcMorphism":
        return compose(self, other)

    def __repr__(self) -> str:
        return f"<PcMorphism on {len(self.mapping)} cells>"


def identity(space: PrecubicalSet) -> PcMorphism:
    return PcMorphism(space, space, {c: c for c in space.all_cells()})


def compose(outer: PcMorphism, inner: PcMorphism) -> PcMorphism:
    """The composite ``outer after inner``."""
    if inner.target != outer.source:
        raise InputError("composition mismatch: inner target differs from outer source")
    return PcMorphism(inner.source, outer.target, {c: outer(inner(c)) for c in inner.mapping})


def validate_morphism(f: PcMorphism) -> list[Violation]:
    """Totality, dimension preservation and face commutation, as a report."""
    report: list[Violation] = []
    for c in f.source.all_cells():
        if c not in f.mapping:
            report.append(Violation("map-totality", f"source cell {c.key!r} has no image", c))
            continue
        d = f.mapping[c]
        if d not in f.target:
            report.append(Violation("map-target", f"image {d.key!r} of {c.key!r} is not a target cell", c))
            continue
        if d.dim != c.dim:
            report.append(Violation("map-dimension", f"{c.key!r} of dim {c.dim} maps to {d.key!r} of dim {d.dim}", c))
            continue
        for i in range(1, c.dim + 1):
            for a in (0, 1):
                try:
                    lhs = f.mapping.get(f.source.face(c, i, a))
                    rhs = f.target.face(d, i, a)
                except KeyError:
                    report.append(Violation("map-faces", f"cannot resolve faces ({i},{a}) under {c.key!r}", c))
                    continue
                if lhs != rhs:
                    report.append(Violation(
                        "map-faces",
                        f"map(face({c.key!r},{i},{a})) != face(map({c.key!r}),{i},{a})",
                        c,
                    ))
    return report


# ---------------------------------------------------------------------------
# colimits


class Coproduct(NamedTuple):
    space: PrecubicalSet
    inj1: PcMorphism
    inj2: PcMorphism


def disjoint_union(spaces: Sequence[PrecubicalSet]) -> tuple[PrecubicalSet, tuple[PcMorphism, ...]]:
    """Disjoint union of finitely many complexes, with its injections.

    Cells of the j-th summand are retagged ``"j:key"`` so summands never
    collide.
    """
    cells: dict[int, list[Cell]] = {}
    faces: dict[FaceKey, Cell] = {}
    tagged: list[dict[Cell, Cell]] = []
    for j, space in enumerate(spaces):
        tag = {c: Cell(c.dim, f"{j}:{c.key}") for c in space.all_cells()}
        tagged.append(tag)
        for c, tc in tag.items():
            cells.setdefault(tc.dim, []).append(tc)
            for i in range(1, c.dim + 1):
                for a in (0, 1):
                    faces[(tc, i, a)] = tag[space.face(c, i, a)]
    union = PrecubicalSet(cells, faces)
    injections = tuple(
        PcMorphism(space, union, tag) for space, tag in zip(spaces, tagged)
    )
    return union, injections


def coproduct(x: PrecubicalSet, y: PrecubicalSet) -> Coproduct:
    """Dimension-wise disjoint union with its two injections."""
    union, (inj1, inj2) = disjoint_union([x, y])
    return Coproduct(union, inj1, inj2)


class Pushout(NamedTuple):
    space: PrecubicalSet
    q1: PcMorphism
    q2: PcMorphism


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, x):
        parent = self.parent
        root = parent.setdefault(x, x)
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def pushout(f: PcMorphism, g: PcMorphism) -> Pushout:
    """Dimension-wise pushout of two morphisms out of a common source.

    Computed by union-find on the tagged cells of both targets, merging
    f(a) with g(a) for every source cell a.  Faces are induced on
    classes; well-definedness is re-checked rather than assumed.
    """
    if f.source != g.source:
        raise InputError("pushout legs must share their source")
    b1, b2 = f.target, g.target
    uf = _UnionFind()
    items = [(1, c) for c in b1.all_cells()] + [(2, c) for c in b2.all_cells()]
    for item in items:
        uf.find(item)
    for a in f.source.all_cells():
        uf.union((1, f(a)), (2, g(a)))

    members: dict[tuple[int, Cell], list[tuple[int, Cell]]] = {}
    for item in items:
        members.setdefault(uf.find(item), []).append(item)

    class_cell: dict[tuple[int, Cell], Cell] = {}
    cells: dict[int, list[Cell]] = {}
    for root, mem in members.items():
        dim = mem[0][1].dim
        rep = min(f"{side}:{c.key}" for side, c in mem)
        cc = Cell(dim, rep)
        cells.setdefault(dim, []).append(cc)
        for item in mem:
            class_cell[item] = cc

    spaces = {1: b1, 2: b2}
    faces: dict[FaceKey, Cell] = {}
    for (side, c), cc in class_cell.items():
        for i in range(1, c.dim + 1):
            for a in (0, 1):
                fc = class_cell[(side, spaces[side].face(c, i, a))]
                prev = faces.setdefault((cc, i, a), fc)
                if prev != fc:
                    raise AssertionError(
                        f"pushout produced an ill-defined face ({i},{a}) on {cc.key!r}"
                    )
    space = PrecubicalSet(cells, faces)
    q1 = PcMorphism(b1, space, {c: class_cell[(1, c)] for c in b1.all_cells()})
    q2 = PcMorphism(b2, space, {c: class_cell[(2, c)] for c in b2.all_cells()})
    return Pushout(space, q1, q2)


class Codiagonal(NamedTuple):
    space: PrecubicalSet
    p1: PcMorphism
    p2: PcMorphism
    fold: PcMorphism


def codiagonal(f: PcMorphism) -> Codiagonal:
    """Push a morphism out along itself and fold the double back down.

    For f: A -> B this produces the pushout B +_A B with its two legs,
    plus the unique morphism ``fold`` satisfying fold . p1 = fold . p2 =
    identity on B.  The fold exists because each pushout class contains
    copies of a single B-cell only.
    """
    po = pushout(f, f)
    mapping: dict[Cell, Cell] = {}
    for b in f.target.all_cells():
        for leg in (po.q1, po.q2):
            cls = leg(b)
            prev = mapping.setdefault(cls, b)
            if prev != b:
                raise AssertionError("codiagonal fold is ill-defined")
    fold = PcMorphism(po.space, f.target, mapping)
    return Codiagonal(po.space, po.q1, po.q2, fold)


class ChainColimit(NamedTuple):
    space: PrecubicalSet
    cocone: tuple[PcMorphism, ...]


def chain_colimit(chain: Sequence[PcMorphism]) -> ChainColimit:
    """Colimit of a finite composable chain K0 -> K1 -> ... -> Kn.

    A finite chain's colimit is realised by its last object, so the
    cocone legs are the forward composites and leg 0 is the composite of
    the whole chain.
    """
    if not chain:
        raise InputError("chain must contain at least one morphism")
    for fst, snd in zip(chain, chain[1:]):
        if fst.target != snd.source:
            raise InputError("chain is not composable")
    last = chain[-1].target
    legs: list[PcMorphism] = [identity(last)]
    for f in reversed(chain):
        legs.append(legs[-1] @ f)
    legs.reverse()
    return ChainColimit(last, tuple(legs))


# ---------------------------------------------------------------------------
# isomorphism search (test oracle, desk scale)


def is_isomorphic(
    x: PrecubicalSet, y: PrecubicalSet, node_budget: int = 1_000_000
) -> PcMorphism | None:
    """Search for a face-preserving bijection; ``None`` when there is none.

    Plain backtracking over cells, lowest dimension first, with vertex
    degree profiles and face-tuple indexing as pruning.  Raises
    ResourceLimitError when the node budget is exhausted.
    """
    if {d: len(x.cells(d)) for d in x.dims()} != {d: len(y.cells(d)) for d in y.dims()}:
        return None

    def profile(space: PrecubicalSet, v: Cell) -> tuple[int, int]:
        return (len(space.out_edges(v)), len(space.in_edges(v)))

    y_by_profile: dict[tuple[int, int], list[Cell]] = {}
    for v in y.vertices:
        y_by_profile.setdefault(profile(y, v), []).append(v)

    y_by_faces: dict[int, dict[tuple[Cell, ...], list[Cell]]] = {}
    for dim in y.dims():
        if dim == 0:
            continue
        index: dict[tuple[Cell, ...], list[Cell]] = {}
        for c in y.cells(dim):
            sig = tuple(y.face(c, i, a) for i in range(1, dim + 1) for a in (0, 1))
            index.setdefault(sig, []).append(c)
        y_by_faces[dim] = index

    xs = sorted(x.all_cells())
    assignment: dict[Cell, Cell] = {}
    used: set[Cell] = set()
    nodes = 0

    def descend(idx: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise ResourceLimitError("isomorphism search exceeded its node budget")
        if idx == len(xs):
            return True
        c = xs[idx]
        if c.dim == 0:
            candidates = y_by_profile.get(profile(x, c), [])
        else:
            sig = tuple(
                assignment[x.face(c, i, a)]
                for i in range(1, c.dim + 1)
                for a in (0, 1)
            )
            candidates = y_by_faces.get(c.dim, {}).get(sig, [])
        for d in candidates:
            if d in used:
                continue
            assignment[c] = d
            used.add(d)
            if descend(idx + 1):
                return True
            used.discard(d)
            del assignment[c]
        return False

    if descend(0):
        return PcMorphism(x, y, assignment)
    return None


# ---------------------------------------------------------------------------
# serialization
#
# Complex files: {"cells": {"<dim>": ["<id>", ...]},
#                 "faces": {"<id>": {"<i>,<sign>": "<id>", ...}}}
# Morphism files: {"source": <complex or file path>, "target": ...,
#                  "map": {"<id>": "<id>"}}


def complex_to_data(space: PrecubicalSet) -> dict:
    cells = {str(dim): [c.key for c in space.cells(dim)] for dim in space.dims()}
    faces: dict[str, dict[str, str]] = {}
    for dim in space.dims():
        if dim == 0:
            continue
        for c in space.cells(dim):
            entry: dict[str, str] = {}
            for i in range(1, dim + 1):
                for a in (0, 1):
                    try:
                        entry[f"{i},{a}"] = space.face(c, i, a).key
                    except KeyError:
                        pass  # partial tables still serialize for diagnostics
            faces[c.key] = entry
    return {"cells": cells, "faces": faces}


def complex_from_data(data, check: bool = True) -> PrecubicalSet:
    """Build a complex from its JSON form.

    With ``check`` (the default) the result must validate cleanly, so a
    file parses iff it describes a genuine precubical set; ``check=False``
    is for the ``validate`` verb, which wants to inspect broken input.
    """
    if not isinstance(data, dict) or "cells" not in data:
        raise InputError("complex JSON must be an object with a 'cells' field")
    raw_cells = data["cells"]
    if not isinstance(raw_cells, dict):
        raise InputError("'cells' must map dimensions to lists of ids")
    dim_of: dict[str, int] = {}
    cells: dict[int, list[Cell]] = {}
    for dim_str, ids in raw_cells.items():
        try:
            dim = int(dim_str)
        except ValueError:
            raise InputError(f"bad dimension key {dim_str!r}") from None
        if dim < 0 or not isinstance(ids, list):
            raise InputError(f"bad cell list under dimension {dim_str!r}")
        for cid in ids:
            if not isinstance(cid, str):
                raise InputError("cell ids must be strings")
            if cid in dim_of:
                raise InputError(f"duplicate cell id {cid!r}")
            dim_of[cid] = dim
            cells.setdefault(dim, []).append(Cell(dim, cid))
    faces: dict[FaceKey, Cell] = {}
    for cid, entry in (data.get("faces") or {}).items():
        if cid not in dim_of:
            raise InputError(f"faces recorded for unknown cell {cid!r}")
        dim = dim_of[cid]
        if not isinstance(entry, dict):
            raise InputError(f"face table of {cid!r} must be an object")
        for key, tid in entry.items():
            try:
                i_str, a_str = key.split(",")
                i, a = int(i_str), int(a_str)
            except ValueError:
                raise InputError(f"bad face key {key!r} on cell {cid!r}") from None
            if not isinstance(tid, str):
                raise InputError(f"face target of {cid!r} must be a string id")
            tdim = dim_of.get(tid, dim - 1)
            faces[(Cell(dim, cid), i, a)] = Cell(tdim, tid)
    try:
        space = PrecubicalSet(cells, faces)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if check:
        report = validate(space)
        if report:
            head = "; ".join(v.message for v in report[:3])
            raise InputError(f"complex fails validation ({len(report)} violations): {head}")
    return space


def morphism_to_data(f: PcMorphism) -> dict:
    return {
        "source": complex_to_data(f.source),
        "target": complex_to_data(f.target),
        "map": {c.key: d.key for c, d in sorted(f.mapping.items())},
    }


def _resolve_complex_field(field, base_dir: Path | None, check: bool) -> PrecubicalSet:
    if isinstance(field, str):
        path = Path(field)
        if base_dir is not None and not path.is_absolute():
            path = base_dir / path
        return load_complex(path, check=check)
    return complex_from_data(field, check=check)


def morphism_from_data(data, base_dir: Path | None = None, check: bool = True) -> PcMorphism:
    if not isinstance(data, dict) or not {"source", "target", "map"} <= set(data):
        raise InputError("morphism JSON needs 'source', 'target' and 'map' fields")
    source = _resolve_complex_field(data["source"], base_dir, check)
    target = _resolve_complex_field(data["target"], base_dir, check)
    by_key_src = {c.key: c for c in source.all_cells()}
    by_key_tgt = {c.key: c for c in target.all_cells()}
    mapping: dict[Cell, Cell] = {}
    for src_id, tgt_id in data["map"].items():
        if src_id not in by_key_src:
            raise InputError(f"map key {src_id!r} is not a source cell")
        if tgt_id not in by_key_tgt:
            raise InputError(f"map value {tgt_id!r} is not a target cell")
        mapping[by_key_src[src_id]] = by_key_tgt[tgt_id]
    f = PcMorphism(source, target, mapping)
    if check:
        report = validate_morphism(f)
        if report:
            head = "; ".join(v.message for v in report[:3])
            raise InputError(f"morphism fails validation ({len(report)} violations): {head}")
    return f


def _load_json(path) -> object:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None


def load_complex(path, check: bool = True) -> PrecubicalSet:
    return complex_from_data(_load_json(path), check=check)


def load_morphism(path, check: bool = True) -> PcMorphism:
    return morphism_from_data(_load_json(path), base_dir=Path(path).parent, check=check)

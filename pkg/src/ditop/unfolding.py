"""Universal dicoverings by unfolding.

The unfolding of a complex X at a base vertex x0 has one vertex per
dihomotopy class of edge paths out of x0 (truncated at a depth cap), one
edge per (state, outgoing base edge) pair, and in general one n-cell per
(state, n-cell of X whose minimal corner is the state's endpoint).  The
projection sends a state to its endpoint and a lifted cell to its base
cell.

The construction is a reflection iteration, stage = path length:

  1. extend every frontier state along every outgoing edge of X;
  2. merge extensions that differ by an elementary move across a square
     (union-find over extension pairs), so states stay dihomotopy
     classes, and attach the square witnessing each merge;
  3. attach higher cells once their whole lower boundary is present.

The iteration stops either at a fixed point (``complete``) or at the
depth cap; directed loops downstairs make every finite depth
incomplete, which the result reports rather than hides.

``factor_initial`` runs the same iteration without a seed state and
therefore performs no attachment at all: the basepoint-free
factorization of the morphism out of the empty complex has an empty
middle object, because the empty projection satisfies both lifting
conditions vacuously.  That degeneracy is recorded honestly; the
basepointed unfolding is the construction with content.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, NamedTuple, Sequence

from .errors import AmbiguousFactorizationError, InputError, ResourceLimitError
from .dicovering import (
    DicoveringVerdict,
    check_dicovering,
    universality_check,
    verdict_to_data,
)
from .dihomotopy import DihomotopyClass
from .dipath import EdgePath, path_to_data
from .precubical import (
    Cell,
    PcMorphism,
    PrecubicalSet,
    _UnionFind,
    complex_to_data,
    morphism_to_data,
)


@dataclass(frozen=True)
class Unfolding:
    total: PrecubicalSet
    projection: PcMorphism
    states: Mapping[Cell, DihomotopyClass]
    complete: bool
    depth: int
    root: Cell

    @property
    def basepoint(self) -> Cell:
        return self.states[self.root].canonical.start


def unfold(space: PrecubicalSet, x0: Cell, depth: int) -> Unfolding:
    """Unfold the complex at a base vertex, truncated at ``depth`` edges."""
    if x0.dim != 0 or x0 not in space:
        raise InputError(f"{x0.key!r} is not a vertex of the complex")
    if depth < 0:
        raise InputError("depth must be non-negative")

    squares_at: dict[Cell, list[Cell]] = {}
    for s in space.squares:
        squares_at.setdefault(space.min_corner(s), []).append(s)
    for group in squares_at.values():
        group.sort()

    canon: list[EdgePath] = [EdgePath(x0)]
    ends: list[Cell] = [x0]
    stage: list[list[int]] = [[0]]
    ext: dict[tuple[int, Cell], int] = {}
    saturated_early = False

    for level in range(depth):
        exts = [
            (u, e)
            for u in stage[level]
            for e in space.out_edges(ends[u])
        ]
        if not exts:
            saturated_early = True
            break
        uf = _UnionFind()
        for item in exts:
            uf.find(item)
        if level >= 1:
            for t in stage[level - 1]:
                for s in squares_at.get(ends[t], ()):
                    left, right = space.face(s, 1, 0), space.face(s, 1, 1)
                    bottom, top = space.face(s, 2, 0), space.face(s, 2, 1)
                    after_left = ext[(t, left)]
                    after_bottom = ext[(t, bottom)]
                    uf.union((after_left, top), (after_bottom, right))
        groups: dict[tuple[int, Cell], list[tuple[int, Cell]]] = {}
        for item in exts:
            groups.setdefault(uf.find(item), []).append(item)
        fresh = []
        for members in groups.values():
            edges = min(canon[u].edges + (e,) for (u, e) in members)
            fresh.append((tuple(c.key for c in edges), edges, members))
        fresh.sort(key=lambda item: item[0])
        indices = []
        for _, edges, members in fresh:
            idx = len(canon)
            canon.append(EdgePath(x0, edges))
            ends.append(space.face(edges[-1], 1, 1))
            for item in members:
                ext[item] = idx
            indices.append(idx)
        stage.append(indices)

    if saturated_early:
        complete = True
    else:
        complete = all(not space.out_edges(ends[u]) for u in stage[depth])

    # assemble the total complex
    def state_cell(i: int) -> Cell:
        return Cell(0, f"s{i}")

    cells: dict[int, list[Cell]] = {0: [state_cell(i) for i in range(len(canon))]}
    faces: dict[tuple[Cell, int, int], Cell] = {}
    proj: dict[Cell, Cell] = {state_cell(i): ends[i] for i in range(len(canon))}

    for (u, e), tgt in sorted(ext.items(), key=lambda kv: (kv[0][0], kv[0][1].key)):
        ec = Cell(1, f"s{u}|{e.key}")
        cells.setdefault(1, []).append(ec)
        faces[(ec, 1, 0)] = state_cell(u)
        faces[(ec, 1, 1)] = state_cell(tgt)
        proj[ec] = e

    rooted: dict[int, dict[Cell, list[Cell]]] = {}
    for dim in space.dims():
        if dim < 2:
            continue
        per_corner: dict[Cell, list[Cell]] = {}
        for c in space.cells(dim):
            per_corner.setdefault(space.min_corner(c), []).append(c)
        for group in per_corner.values():
            group.sort()
        rooted[dim] = per_corner

    for dim in sorted(rooted):
        for t, path in enumerate(canon):
            if path.length + dim > depth:
                continue
            for c in rooted[dim].get(ends[t], ()):
                cc = Cell(dim, f"s{t}|{c.key}")
                cells.setdefault(dim, []).append(cc)
                proj[cc] = c
                for i in range(1, dim + 1):
                    lower = space.face(c, i, 0)
                    faces[(cc, i, 0)] = Cell(dim - 1, f"s{t}|{lower.key}")
                    advanced = ext[(t, space.corner_edge(c, i))]
                    upper = space.face(c, i, 1)
                    faces[(cc, i, 1)] = Cell(dim - 1, f"s{advanced}|{upper.key}")

    total = PrecubicalSet(cells, faces)
    projection = PcMorphism(total, space, proj)
    states = {
        state_cell(i): DihomotopyClass((x0, ends[i]), canon[i], None)
        for i in range(len(canon))
    }
    return Unfolding(total, projection, states, complete, depth, state_cell(0))


class InitialFactorization(NamedTuple):
    left: PcMorphism
    right: PcMorphism


def factor_initial(space: PrecubicalSet) -> InitialFactorization:
    """Factor the morphism out of the empty complex; the middle is empty.

    The reflection iteration that drives :func:`unfold` is seeded here
    with no state at all, so no extension or attachment ever fires and
    the loop exits immediately: every generator needs a vertex to root
    its lift, and the seed has none.  The left leg is the identity on
    the empty complex; the right leg is the empty projection, which is
    (vacuously) a dicovering.
    """
    middle = PrecubicalSet.empty()
    return InitialFactorization(
        PcMorphism(middle, middle, {}),
        PcMorphism(middle, space, {}),
    )


@dataclass(frozen=True)
class BasepointLiftReport:
    lift: Cell
    exists: bool
    unique: bool
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.exists and self.unique and self.error is None


@dataclass(frozen=True)
class CatalogEntryReport:
    label: str
    verdict: DicoveringVerdict
    skipped: bool
    lifts: tuple[BasepointLiftReport, ...] = ()

    @property
    def passed(self) -> bool:
        return self.skipped or all(report.passed for report in self.lifts)


@dataclass(frozen=True)
class SuiteReport:
    unfolding: Unfolding
    entries: tuple[CatalogEntryReport, ...]

    @property
    def passed(self) -> bool:
        return all(entry.passed for entry in self.entries)

    @property
    def resource_limited(self) -> bool:
        return any(
            report.error is not None
            for entry in self.entries
            for report in entry.lifts
        )


def universal_property_suite(
    space: PrecubicalSet,
    x0: Cell,
    depth: int,
    catalog: Sequence[PcMorphism],
    labels: Sequence[str] | None = None,
    node_budget: int = 1_000_000,
) -> SuiteReport:
    """Check the unfolding's projection against a catalog of morphisms.

    Every catalog entry targeting the base is first screened with the
    basepointed dicovering check; failures are skipped (with their
    witness).  For each passing entry and each of its basepoint lifts, a
    unique factorization of the unfolding through the entry must exist.
    Resource-limit errors are recorded per basepoint without aborting
    the suite.
    """
    if labels is not None and len(labels) != len(catalog):
        raise InputError("labels must match the catalog one to one")
    u = unfold(space, x0, depth)
    entries: list[CatalogEntryReport] = []
    for idx, p in enumerate(catalog):
        label = labels[idx] if labels is not None else f"entry{idx}"
        if p.target != space:
            raise InputError(f"catalog entry {label!r} does not target the base complex")
        verdict = check_dicovering(p, basepoint=x0)
        if not verdict:
            entries.append(CatalogEntryReport(label, verdict, skipped=True))
            continue
        lifts: list[BasepointLiftReport] = []
        fiber = sorted(c for c, d in p.mapping.items() if d == x0 and c.dim == 0)
        for y0 in fiber:
            try:
                phi = universality_check(
                    u.projection, p, (u.root, y0), node_budget=node_budget
                )
            except AmbiguousFactorizationError:
                lifts.append(BasepointLiftReport(y0, exists=True, unique=False))
            except ResourceLimitError as exc:
                lifts.append(BasepointLiftReport(y0, exists=False, unique=False, error=str(exc)))
            else:
                lifts.append(BasepointLiftReport(y0, exists=phi is not None, unique=True))
        entries.append(CatalogEntryReport(label, verdict, skipped=False, lifts=tuple(lifts)))
    return SuiteReport(u, tuple(entries))


# ---------------------------------------------------------------------------
# serialization


def unfolding_to_data(u: Unfolding) -> dict:
    data = complex_to_data(u.total)
    data["projection"] = morphism_to_data(u.projection)
    data["states"] = {
        v.key: {"class_canonical": path_to_data(cls.canonical)}
        for v, cls in sorted(u.states.items())
    }
    data["complete"] = u.complete
    data["depth"] = u.depth
    data["basepoint"] = u.basepoint.key
    return data


def suite_to_data(report: SuiteReport) -> dict:
    u = report.unfolding
    entries = []
    for entry in report.entries:
        item: dict = {"label": entry.label, "skipped": entry.skipped}
        item.update(verdict_to_data(entry.verdict))
        if not entry.skipped:
            item["basepoint_lifts"] = [
                {
                    "lift": rep.lift.key,
                    "exists": rep.exists,
                    "unique": rep.unique,
                    **({"error": rep.error} if rep.error else {}),
                }
                for rep in entry.lifts
            ]
        item["passed"] = entry.passed
        entries.append(item)
    return {
        "basepoint": u.basepoint.key,
        "depth": u.depth,
        "complete": u.complete,
        "entries": entries,
        "passed": report.passed,
    }

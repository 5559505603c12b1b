"""Dicoverings: morphisms with unique lifting of paths and path families.

A projection p: Y -> X is a dicovering when

  (a) for every edge e of X and every vertex y of Y over the source of
      e, exactly one edge of Y over e starts at y, and
  (b) for every cell c of X of dimension >= 2 and every vertex y of Y
      over the minimal corner of c, exactly one cell of Y over c has
      minimal corner y.

Condition (a) is unique lifting of paths; condition (b) is the
cell-level rendering of uniquely lifting one-parameter families of
paths that share a start point, and it forces lifts of elementarily
homotopic paths to match up square by square.

Why edge-by-edge lifting suffices: a lift of an edge path is exactly a
choice, per step, of an edge upstairs over the base edge starting at the
vertex reached so far, so whole-path lifts from a fixed start biject
with sequences of single-edge choices.  When (a) holds every step has
exactly one choice, hence every path has exactly one lift; when some
step has zero or at least two choices, the enumeration of whole-path
lifts through that step exhibits the same count.  The tests check this
reduction against brute-force enumeration of whole-path lifts.

The checker runs globally by default; passing a basepoint restricts
both conditions to the part of Y reachable from the fibre over it,
which is the basepointed flavour of the definition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    AmbiguousFactorizationError,
    AmbiguousLiftError,
    InputError,
    NoLiftError,
    ResourceLimitError,
)
from .dipath import EdgePath, check_path
from .precubical import (
    Cell,
    PcMorphism,
    PrecubicalSet,
    codiagonal,
    disjoint_union,
    identity,
)


@dataclass(frozen=True)
class LiftProblem:
    """A projection, a base path, and a chosen start vertex upstairs."""

    projection: PcMorphism
    base_path: EdgePath
    start_lift: Cell


@dataclass(frozen=True)
class EdgeLiftWitness:
    edge: Cell
    vertex: Cell
    count: int


@dataclass(frozen=True)
class CellLiftWitness:
    cell: Cell
    corner: Cell
    count: int


@dataclass(frozen=True)
class DicoveringVerdict:
    is_dicovering: bool
    witness: EdgeLiftWitness | CellLiftWitness | None = None

    def __bool__(self) -> bool:
        return self.is_dicovering


def _fibers(p: PcMorphism) -> dict[Cell, list[Cell]]:
    fibers: dict[Cell, list[Cell]] = {}
    for c, d in p.mapping.items():
        fibers.setdefault(d, []).append(c)
    for cs in fibers.values():
        cs.sort()
    return fibers


def lift_path(problem: LiftProblem) -> EdgePath:
    """Lift the base path edge by edge from the chosen start.

    Raises NoLiftError / AmbiguousLiftError naming the base edge and the
    upstairs vertex at the first step with zero or several candidates.
    """
    p = problem.projection
    base, y = problem.base_path, problem.start_lift
    check_path(p.target, base)
    if y not in p.source or y.dim != 0:
        raise InputError(f"start lift {y.key!r} is not a vertex upstairs")
    if p(y) != base.start:
        raise InputError(
            f"start lift {y.key!r} sits over {p(y).key!r}, not over {base.start.key!r}"
        )
    lifted: list[Cell] = []
    at = y
    for e in base.edges:
        candidates = [ey for ey in p.source.out_edges(at) if p(ey) == e]
        if not candidates:
            raise NoLiftError(
                f"no edge over {e.key!r} leaves {at.key!r}", edge=e, vertex=at
            )
        if len(candidates) > 1:
            raise AmbiguousLiftError(
                f"{len(candidates)} edges over {e.key!r} leave {at.key!r}",
                edge=e,
                vertex=at,
                count=len(candidates),
            )
        lifted.append(candidates[0])
        at = p.source.face(candidates[0], 1, 1)
    return EdgePath(y, tuple(lifted))


def _reachable_vertices(space: PrecubicalSet, seeds: Sequence[Cell]) -> set[Cell]:
    seen = set(seeds)
    stack = list(seeds)
    while stack:
        at = stack.pop()
        for e in space.out_edges(at):
            nxt = space.face(e, 1, 1)
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return seen


def check_dicovering(p: PcMorphism, basepoint: Cell | None = None) -> DicoveringVerdict:
    """Decide the unique-lifting conditions, with a witness on failure.

    The witness records the first base cell, upstairs vertex and lift
    count breaking uniqueness (edges first, then higher cells); it can
    be replayed with :func:`replay_witness`.
    """
    X, Y = p.target, p.source
    fibers = _fibers(p)
    if basepoint is None:
        relevant = sorted(Y.vertices)
    else:
        if basepoint not in X or basepoint.dim != 0:
            raise InputError(f"basepoint {basepoint.key!r} is not a vertex of the base")
        seeds = [y for y in fibers.get(basepoint, []) if y.dim == 0]
        relevant = sorted(_reachable_vertices(Y, seeds))

    for y in relevant:
        x = p(y)
        for e in X.out_edges(x):
            count = sum(1 for ey in Y.out_edges(y) if p(ey) == e)
            if count != 1:
                return DicoveringVerdict(False, EdgeLiftWitness(e, y, count))

    rooted: dict[Cell, list[Cell]] = {}
    for dim in X.dims():
        if dim < 2:
            continue
        for c in X.cells(dim):
            rooted.setdefault(X.min_corner(c), []).append(c)
    for cs in rooted.values():
        cs.sort()

    corner_of: dict[Cell, Cell] = {}
    for cy in Y.all_cells():
        if cy.dim >= 2:
            corner_of[cy] = Y.min_corner(cy)

    for y in relevant:
        for c in rooted.get(p(y), ()):
            count = sum(1 for cy in fibers.get(c, ()) if corner_of.get(cy) == y)
            if count != 1:
                return DicoveringVerdict(False, CellLiftWitness(c, y, count))
    return DicoveringVerdict(True, None)


def replay_witness(p: PcMorphism, witness: EdgeLiftWitness | CellLiftWitness) -> int:
    """Recount the lifts a failure witness points at; a replay must give != 1."""
    if isinstance(witness, EdgeLiftWitness):
        return sum(1 for ey in p.source.out_edges(witness.vertex) if p(ey) == witness.edge)
    fibers = _fibers(p)
    return sum(
        1
        for cy in fibers.get(witness.cell, ())
        if p.source.min_corner(cy) == witness.corner
    )


def fold_map(space: PrecubicalSet, k: int) -> PcMorphism:
    """Fold k disjoint copies of the complex back onto it identically."""
    if k < 1:
        raise InputError("fold_map needs at least one copy")
    if k == 1:
        return identity(space)
    union, injections = disjoint_union([space] * k)
    mapping: dict[Cell, Cell] = {}
    for inj in injections:
        for c, tc in inj.mapping.items():
            mapping[tc] = c
    return PcMorphism(union, space, mapping)


def cylinder_projection(space: PrecubicalSet) -> PcMorphism:
    """The canonical non-example: every edge acquires two lifts per vertex.

    The honest first-factor projection off a cylinder is not a cell map
    (it would crush the interval factor down a dimension), so its
    cell-level shadow is used instead: glue two copies of the complex
    along their vertices and fold them back down.  That is exactly the
    codiagonal of the vertex-skeleton inclusion, and as soon as the
    complex has an edge the fold fails unique edge lifting with count 2
    (the two copies of that edge).
    """
    skeleton = PrecubicalSet({0: space.vertices}, {})
    inclusion = PcMorphism(skeleton, space, {v: v for v in space.vertices})
    return codiagonal(inclusion).fold


def verdict_to_data(verdict: DicoveringVerdict) -> dict:
    data: dict = {"dicovering": verdict.is_dicovering}
    w = verdict.witness
    if isinstance(w, EdgeLiftWitness):
        data["witness"] = {
            "kind": "edge",
            "edge": w.edge.key,
            "vertex": w.vertex.key,
            "count": w.count,
        }
    elif isinstance(w, CellLiftWitness):
        data["witness"] = {
            "kind": "cell",
            "cell": w.cell.key,
            "dim": w.cell.dim,
            "corner": w.corner.key,
            "count": w.count,
        }
    return data


# ---------------------------------------------------------------------------
# universality


def universality_check(
    pi: PcMorphism,
    p: PcMorphism,
    basepoint_lifts: tuple[Cell, Cell],
    node_budget: int = 1_000_000,
) -> PcMorphism | None:
    """Find the morphism phi with p . phi = pi respecting the basepoint lifts.

    Returns the unique solution, ``None`` when there is none, and raises
    AmbiguousFactorizationError when at least two exist (which signals
    that p is not a dicovering, or that the basepoints underdetermine
    phi).  The search assigns cells of pi's source over the fibres of p,
    propagating forced choices through face constraints and branching
    deterministically otherwise.
    """
    if pi.target != p.target:
        raise InputError("both morphisms must share their target")
    xt0, y0 = basepoint_lifts
    if xt0 not in pi.source or xt0.dim != 0:
        raise InputError(f"{xt0.key!r} is not a vertex of the factoring source")
    if y0 not in p.source or y0.dim != 0:
        raise InputError(f"{y0.key!r} is not a vertex upstairs")
    if pi(xt0) != p(y0):
        raise InputError("basepoint lifts sit over different base vertices")

    Xt, Y = pi.source, p.source
    fibers = _fibers(p)
    all_cells = sorted(Xt.all_cells())
    nodes = 0

    def pin(assignment: dict[Cell, Cell], c: Cell, d: Cell) -> bool:
        """Assign c -> d together with everything its faces force."""
        stack = [(c, d)]
        while stack:
            c, d = stack.pop()
            prev = assignment.get(c)
            if prev is not None:
                if prev != d:
                    return False
                continue
            assignment[c] = d
            for i in range(1, c.dim + 1):
                for s in (0, 1):
                    stack.append((Xt.face(c, i, s), Y.face(d, i, s)))
        return True

    def candidates(assignment: dict[Cell, Cell], c: Cell) -> list[Cell]:
        options = []
        for d in fibers.get(pi(c), ()):
            if d.dim != c.dim:
                continue
            ok = True
            for i in range(1, c.dim + 1):
                for s in (0, 1):
                    want = assignment.get(Xt.face(c, i, s))
                    if want is not None and Y.face(d, i, s) != want:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                options.append(d)
        return options

    solutions: list[dict[Cell, Cell]] = []

    def search(assignment: dict[Cell, Cell]) -> None:
        nonlocal nodes
        while True:
            nodes += 1
            if nodes > node_budget:
                raise ResourceLimitError("universality search exceeded its node budget")
            todo = [c for c in all_cells if c not in assignment]
            if not todo:
                solutions.append(dict(assignment))
                return
            branch_cell = None
            branch_options: list[Cell] | None = None
            forced = False
            for c in todo:
                options = candidates(assignment, c)
                if not options:
                    return
                if len(options) == 1:
                    if not pin(assignment, c, options[0]):
                        return
                    forced = True
                    break
                if branch_options is None or len(options) < len(branch_options):
                    branch_cell, branch_options = c, options
            if forced:
                continue
            assert branch_cell is not None and branch_options is not None
            for d in branch_options:
                trial = dict(assignment)
                if pin(trial, branch_cell, d):
                    search(trial)
                if len(solutions) >= 2:
                    return
            return

    initial: dict[Cell, Cell] = {}
    if not pin(initial, xt0, y0):
        return None
    search(initial)

    if not solutions:
        return None
    if len(solutions) >= 2:
        raise AmbiguousFactorizationError(
            "the factorization is not unique; the projection is not a dicovering "
            "or the basepoints underdetermine it"
        )
    return PcMorphism(Xt, Y, solutions[0])

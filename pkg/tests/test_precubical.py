import random

import pytest

from ditop import (
    Cell,
    InputError,
    ResourceLimitError,
    chain_colimit,
    codiagonal,
    complex_from_data,
    complex_to_data,
    compose,
    coproduct,
    directed_circle,
    directed_path,
    fold_map,
    grid,
    identity,
    is_isomorphic,
    morphism_from_data,
    morphism_to_data,
    pushout,
    standard_cube,
    tensor,
    validate,
    validate_morphism,
    vertex,
)
from ditop.precubical import PcMorphism, PrecubicalSet

import oracles


def signature(space, c):
    return tuple(space.face(c, i, a) for i in range(1, c.dim + 1) for a in (0, 1))


def mutate_one_face(space, rng):
    """Redirect one face entry of a cell of dimension >= 2 so validity breaks."""
    slots = [
        (c, i, a)
        for dim in space.dims()
        if dim >= 2
        for c in space.cells(dim)
        for i in range(1, dim + 1)
        for a in (0, 1)
    ]
    c, i, a = rng.choice(slots)
    original = space.face(c, i, a)
    pool = [
        t
        for t in space.cells(c.dim - 1)
        if t != original and signature(space, t) != signature(space, original)
    ]
    assert pool, "corpus member too degenerate to mutate"
    return space.with_face(c, i, a, rng.choice(pool)), c


class TestValidate:
    def test_standard_cubes_clean(self):
        for n in range(5):
            assert validate(standard_cube(n)) == []

    def test_corpus_clean(self, corpus):
        for name, space in corpus:
            assert validate(space) == [], name

    def test_redirected_face_detected(self):
        cube = standard_cube(3)
        broken = cube.with_face(Cell(3, "***"), 1, 0, Cell(2, "1**"))
        report = validate(broken)
        assert any(v.kind == "cubical-identity" and v.cell == Cell(3, "***") for v in report)

    def test_missing_face_detected(self):
        square = standard_cube(2)
        faces = {k: v for k, v in square.face_items() if k != (Cell(2, "**"), 1, 0)}
        broken = PrecubicalSet({d: square.cells(d) for d in square.dims()}, faces)
        assert any(v.kind == "missing-face" for v in validate(broken))

    def test_dangling_face_detected(self):
        arrow = standard_cube(1)
        broken = arrow.with_face(Cell(1, "*"), 1, 1, Cell(0, "ghost"))
        assert any(v.kind == "dangling-face" for v in validate(broken))

    def test_mutations_detected(self, corpus):
        rng = random.Random(7)
        eligible = [space for _, space in corpus if space.dimension >= 2]
        for _ in range(25):
            mutant, cell = mutate_one_face(rng.choice(eligible), rng)
            report = validate(mutant)
            assert report and any(v.cell == cell for v in report)


class TestStandardCube:
    def test_zero(self):
        point = standard_cube(0)
        assert len(point.vertices) == 1 and point.dimension == 0

    def test_one(self):
        arrow = standard_cube(1)
        assert len(arrow.vertices) == 2 and len(arrow.edges) == 1
        assert arrow.face(Cell(1, "*"), 1, 0) == Cell(0, "0")
        assert arrow.face(Cell(1, "*"), 1, 1) == Cell(0, "1")

    def test_three_counts(self):
        from math import comb

        cube = standard_cube(3)
        for k in range(4):
            assert len(cube.cells(k)) == comb(3, k) * 2 ** (3 - k)

    def test_corners(self):
        cube = standard_cube(3)
        assert cube.min_corner(Cell(3, "***")) == Cell(0, "000")
        assert cube.max_corner(Cell(3, "***")) == Cell(0, "111")
        assert cube.corner_edge(Cell(3, "***"), 2) == Cell(1, "0*0")


class TestTensor:
    def test_square(self):
        assert is_isomorphic(tensor(standard_cube(1), standard_cube(1)), standard_cube(2))

    def test_circle_cylinder(self):
        cyl = tensor(directed_circle(), standard_cube(1))
        assert {d: len(cyl.cells(d)) for d in cyl.dims()} == {0: 2, 1: 3, 2: 1}
        assert validate(cyl) == []

    def test_unit(self):
        for space in (standard_cube(2), directed_circle(), grid(2, 2)):
            assert is_isomorphic(tensor(space, standard_cube(0)), space)
            assert is_isomorphic(tensor(standard_cube(0), space), space)

    def test_associative(self):
        a, b, c = standard_cube(1), directed_path(2), directed_circle()
        assert is_isomorphic(tensor(tensor(a, b), c), tensor(a, tensor(b, c)))


class TestCoproduct:
    def test_two_vertices(self):
        point = standard_cube(0)
        assert len(coproduct(point, point).space.vertices) == 2

    def test_two_arrows(self):
        result = coproduct(standard_cube(1), standard_cube(1))
        assert len(result.space.vertices) == 4 and len(result.space.edges) == 2

    def test_injections_valid(self, corpus):
        for _, space in corpus[:6]:
            result = coproduct(space, directed_path(1))
            assert validate_morphism(result.inj1) == []
            assert validate_morphism(result.inj2) == []
            assert validate(result.space) == []


def point_into_arrow():
    point = PrecubicalSet({0: [vertex("0")]}, {})
    return PcMorphism(point, standard_cube(1), {vertex("0"): vertex("0")})


class TestPushout:
    def test_wedge(self):
        po = pushout(point_into_arrow(), point_into_arrow())
        assert len(po.space.vertices) == 3 and len(po.space.edges) == 2
        assert validate(po.space) == []

    def test_identity_legs(self):
        space = grid(2, 2)
        po = pushout(identity(space), identity(space))
        assert po.q1 == po.q2
        assert is_isomorphic(po.space, space)

    def test_over_initial_is_coproduct(self):
        empty = PrecubicalSet.empty()
        x, y = standard_cube(1), directed_circle()
        po = pushout(PcMorphism(empty, x, {}), PcMorphism(empty, y, {}))
        assert is_isomorphic(po.space, coproduct(x, y).space)

    def test_square_commutes(self):
        f = point_into_arrow()
        g = PcMorphism(f.source, grid(1, 1), {vertex("0"): vertex("c00")})
        po = pushout(f, g)
        assert compose(po.q1, f) == compose(po.q2, g)
        assert validate_morphism(po.q1) == [] and validate_morphism(po.q2) == []

    @pytest.mark.parametrize("make_legs", [
        lambda: (point_into_arrow(), point_into_arrow()),
        lambda: (
            PcMorphism(PrecubicalSet.empty(), standard_cube(1), {}),
            PcMorphism(PrecubicalSet.empty(), standard_cube(1), {}),
        ),
        lambda: (
            PcMorphism(standard_cube(1), directed_path(2),
                       {vertex("0"): vertex("v0"), vertex("1"): vertex("v1"),
                        Cell(1, "*"): Cell(1, "e0")}),
            PcMorphism(standard_cube(1), directed_path(2),
                       {vertex("0"): vertex("v1"), vertex("1"): vertex("v2"),
                        Cell(1, "*"): Cell(1, "e1")}),
        ),
    ])
    def test_universal_property(self, make_legs):
        f, g = make_legs()
        po = pushout(f, g)
        assert po.space.cell_count() <= 50
        total_cocones = 0
        for target in (f.target, po.space, directed_path(2)):
            hs1 = oracles.all_morphisms(f.target, target)
            hs2 = oracles.all_morphisms(g.target, target)
            cocones = [
                (h1, h2)
                for h1 in hs1
                for h2 in hs2
                if all(h1[f(a)] == h2[g(a)] for a in f.source.all_cells())
            ]
            if target == po.space:
                assert cocones, "the canonical cocone must show up in the search"
            total_cocones += len(cocones)
            for h1, h2 in cocones:
                mediators = [
                    m
                    for m in oracles.all_morphisms(po.space, target)
                    if all(m[po.q1(b)] == h1[b] for b in f.target.all_cells())
                    and all(m[po.q2(b)] == h2[b] for b in g.target.all_cells())
                ]
                assert len(mediators) == 1
        assert total_cocones > 0


class TestCodiagonal:
    def test_wedge_fold(self):
        result = codiagonal(point_into_arrow())
        assert len(result.space.vertices) == 3 and len(result.space.edges) == 2
        arrow = standard_cube(1)
        assert compose(result.fold, result.p1) == identity(arrow)
        assert compose(result.fold, result.p2) == identity(arrow)

    def test_identity_input(self):
        space = standard_cube(2)
        result = codiagonal(identity(space))
        assert is_isomorphic(result.space, space)
        assert compose(result.fold, result.p1) == identity(space)

    def test_fold_equations_on_corpus_morphisms(self, swiss_grid):
        morphisms = [
            point_into_arrow(),
            identity(standard_cube(2)),
            fold_map(swiss_grid, 2),
            PcMorphism(
                standard_cube(1), grid(2, 2),
                {vertex("0"): vertex("c00"), vertex("1"): vertex("c10"),
                 Cell(1, "*"): Cell(1, "h00")},
            ),
        ]
        for f in morphisms:
            result = codiagonal(f)
            assert compose(result.fold, result.p1) == identity(f.target)
            assert compose(result.fold, result.p2) == identity(f.target)
            assert validate(result.space) == []


def name_inclusion(small, large):
    return PcMorphism(small, large, {c: c for c in small.all_cells()})


class TestChainColimit:
    def test_identities(self):
        space = grid(2, 2)
        result = chain_colimit([identity(space), identity(space)])
        assert result.space == space
        assert all(leg == identity(space) for leg in result.cocone)

    def test_end_extensions(self):
        chain = [
            name_inclusion(directed_path(1), directed_path(2)),
            name_inclusion(directed_path(2), directed_path(3)),
        ]
        result = chain_colimit(chain)
        assert result.space == directed_path(3)
        assert result.cocone[0] == name_inclusion(directed_path(1), directed_path(3))
        assert result.cocone[0] == compose(result.cocone[1], chain[0])
        assert result.cocone[2] == identity(directed_path(3))

    def test_singleton(self):
        f = point_into_arrow()
        result = chain_colimit([f])
        assert result.space == f.target
        assert result.cocone[0] == f

    def test_not_composable(self):
        with pytest.raises(InputError):
            chain_colimit([point_into_arrow(), name_inclusion(directed_path(1), directed_path(2))])


class TestIsIsomorphic:
    def test_self(self, corpus):
        for name, space in corpus[:8]:
            iso = is_isomorphic(space, space)
            assert iso is not None and iso == identity(space), name

    def test_not_isomorphic(self):
        assert is_isomorphic(standard_cube(1), directed_circle()) is None
        assert is_isomorphic(grid(2, 2), grid(2, 2, holes={(0, 0)})) is None

    def test_budget(self):
        with pytest.raises(ResourceLimitError):
            is_isomorphic(grid(3, 3), grid(3, 3), node_budget=3)


class TestSerialization:
    def test_complex_round_trip(self, corpus):
        for name, space in corpus:
            again = complex_from_data(complex_to_data(space))
            assert again == space, name

    def test_morphism_round_trip(self, swiss_grid):
        f = fold_map(swiss_grid, 2)
        again = morphism_from_data(morphism_to_data(f))
        assert again == f

    def test_parse_rejects_invalid(self):
        broken = standard_cube(3).with_face(Cell(3, "***"), 1, 0, Cell(2, "1**"))
        data = complex_to_data(broken)
        with pytest.raises(InputError):
            complex_from_data(data)
        # but the unchecked loader accepts it, for the validate verb
        assert complex_from_data(data, check=False).cell_count() == broken.cell_count()

    def test_duplicate_ids_rejected(self):
        with pytest.raises(InputError):
            complex_from_data({"cells": {"0": ["v", "v"]}, "faces": {}})

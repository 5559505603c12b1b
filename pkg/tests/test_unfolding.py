import pytest

from ditop import (
    InputError,
    LiftProblem,
    check_dicovering,
    classes,
    compose,
    cylinder_projection,
    directed_circle,
    directed_path,
    enumerate_paths,
    factor_initial,
    fold_map,
    grid,
    identity,
    is_isomorphic,
    lift_path,
    reachability_preorder,
    standard_cube,
    suite_to_data,
    unfold,
    unfolding_to_data,
    universal_property_suite,
    validate,
    validate_morphism,
    vertex,
)
from ditop import pv
from ditop.precubical import complex_from_data

from conftest import MUTEX3_PV


def fiber_sizes(unfolding):
    sizes = {}
    for state in unfolding.total.vertices:
        base = unfolding.projection(state)
        sizes[base] = sizes.get(base, 0) + 1
    return sizes


class TestUnfold:
    def test_arrow_is_its_own_unfolding(self):
        arrow = standard_cube(1)
        for depth in (1, 2, 5):
            u = unfold(arrow, vertex("0"), depth)
            assert u.complete
            assert is_isomorphic(u.total, arrow)
            assert validate(u.total) == []
            assert validate_morphism(u.projection) == []

    @pytest.mark.parametrize("depth", range(1, 9))
    def test_circle_unwinds_to_a_path(self, depth):
        circle = directed_circle()
        u = unfold(circle, vertex("v0"), depth)
        assert not u.complete
        assert is_isomorphic(u.total, directed_path(depth))
        assert len(u.total.vertices) == depth + 1  # one class per length

    def test_swiss_grid_unfolding(self, swiss_grid):
        x0 = vertex("c00")
        u = unfold(swiss_grid, x0, 12)
        assert u.complete
        assert validate(u.total) == []
        assert validate_morphism(u.projection) == []
        assert check_dicovering(u.projection, basepoint=x0)
        assert reachability_preorder(u.total).is_antisymmetric()
        expected = {
            v: len(classes(swiss_grid, x0, v, 12))
            for v in swiss_grid.vertices
            if enumerate_paths(swiss_grid, x0, v, 12)
        }
        assert fiber_sizes(u) == expected
        assert len(u.total.vertices) == sum(expected.values())

    def test_cube3_unfolds_to_itself(self):
        cube = standard_cube(3)
        u = unfold(cube, vertex("000"), 5)
        assert u.complete
        assert is_isomorphic(u.total, cube)
        assert validate(u.total) == []

    def test_three_process_program_with_cavity(self):
        space = pv.build_complex(pv.parse(MUTEX3_PV)).space
        x0 = vertex("0x0x0")
        u = unfold(space, x0, 8)
        assert u.complete
        assert validate(u.total) == []
        assert check_dicovering(u.projection, basepoint=x0)
        expected = {
            v: len(classes(space, x0, v, 8))
            for v in space.vertices
            if enumerate_paths(space, x0, v, 8)
        }
        assert fiber_sizes(u) == expected

    def test_loops_unwound_even_when_base_loops(self):
        circle = directed_circle()
        u = unfold(circle, vertex("v0"), 6)
        assert reachability_preorder(u.total).is_antisymmetric()

    def test_states_monotone_in_depth(self, swiss_grid):
        x0 = vertex("c00")
        previous = set()
        for depth in range(0, 9):
            u = unfold(swiss_grid, x0, depth)
            canon = {cls.canonical for cls in u.states.values()}
            assert previous <= canon
            previous = canon

    def test_complete_is_a_fixed_point(self, swiss_grid):
        x0 = vertex("c00")
        base = unfold(swiss_grid, x0, 8)
        assert base.complete
        for extra in (9, 12):
            again = unfold(swiss_grid, x0, extra)
            assert again.total == base.total
            assert again.projection == base.projection

    def test_acyclic_completes_at_longest_path(self, acyclic_corpus):
        for name, space in acyclic_corpus:
            x0 = space.vertices[0]
            longest = max(
                (p.length for v in space.vertices for p in enumerate_paths(space, x0, v, 12)),
                default=0,
            )
            assert unfold(space, x0, longest).complete, name
            if longest:
                assert not unfold(space, x0, longest - 1).complete or longest == 0, name

    def test_complete_unfolding_lifts_everything(self, swiss_grid):
        x0 = vertex("c00")
        u = unfold(swiss_grid, x0, 12)
        for state in u.total.vertices:
            base_vertex = u.projection(state)
            for target in swiss_grid.vertices:
                for base in enumerate_paths(swiss_grid, base_vertex, target, 6):
                    lifted = lift_path(LiftProblem(u.projection, base, state))
                    assert lifted.start == state

    def test_state_classes_are_injective(self, swiss_grid):
        u = unfold(swiss_grid, vertex("c00"), 12)
        canons = [cls.canonical for cls in u.states.values()]
        assert len(set(canons)) == len(canons)
        for state, cls in u.states.items():
            assert u.projection(state) == cls.endpoints[1]

    def test_deterministic(self, swiss_grid):
        a = unfold(swiss_grid, vertex("c00"), 12)
        b = unfold(swiss_grid, vertex("c00"), 12)
        assert a.total == b.total and a.projection == b.projection

    def test_bad_inputs(self, swiss_grid):
        with pytest.raises(InputError):
            unfold(swiss_grid, vertex("nope"), 3)
        with pytest.raises(InputError):
            unfold(swiss_grid, vertex("c00"), -1)


class TestFactorInitial:
    def test_arrow(self):
        left, right = factor_initial(standard_cube(1))
        assert right.source.is_empty()
        assert left.source.is_empty() and left.target.is_empty()
        assert right.target == standard_cube(1)

    def test_empty_base(self):
        from ditop.precubical import PrecubicalSet

        left, right = factor_initial(PrecubicalSet.empty())
        assert left == right

    def test_swiss(self, swiss_grid):
        left, right = factor_initial(swiss_grid)
        assert right.source.is_empty()
        # the degenerate middle really is orthogonal to the generators
        assert check_dicovering(right)
        assert compose(right, left).mapping == {}


class TestUniversalPropertySuite:
    def test_catalog_on_swiss(self, swiss_grid):
        catalog = [
            identity(swiss_grid),
            fold_map(swiss_grid, 2),
            fold_map(swiss_grid, 3),
            cylinder_projection(swiss_grid),
        ]
        labels = ["id", "fold2", "fold3", "cylinder"]
        report = universal_property_suite(swiss_grid, vertex("c00"), 12, catalog, labels)
        assert report.passed
        by_label = {entry.label: entry for entry in report.entries}
        assert not by_label["id"].skipped
        assert len(by_label["fold2"].lifts) == 2
        assert len(by_label["fold3"].lifts) == 3
        assert all(l.exists and l.unique for e in report.entries for l in e.lifts)
        assert by_label["cylinder"].skipped
        assert by_label["cylinder"].verdict.witness is not None

    def test_acyclic_corpus(self, acyclic_corpus):
        for name, space in acyclic_corpus:
            if space.cell_count() > 150:
                continue
            x0 = space.vertices[0]
            catalog = [identity(space), fold_map(space, 2)]
            report = universal_property_suite(space, x0, 10, catalog)
            assert report.passed, name

    def test_suite_data_schema(self, swiss_grid):
        catalog = [fold_map(swiss_grid, 2), cylinder_projection(swiss_grid)]
        report = universal_property_suite(swiss_grid, vertex("c00"), 12, catalog)
        data = suite_to_data(report)
        assert data["passed"] is True
        assert data["basepoint"] == "c00"
        assert data["entries"][0]["dicovering"] is True
        assert data["entries"][1]["skipped"] is True
        assert "witness" in data["entries"][1]


class TestSerialization:
    def test_unfolding_data(self, swiss_grid):
        u = unfold(swiss_grid, vertex("c00"), 12)
        data = unfolding_to_data(u)
        assert data["complete"] is True and data["depth"] == 12
        assert data["basepoint"] == "c00"
        total_again = complex_from_data({"cells": data["cells"], "faces": data["faces"]})
        assert total_again == u.total
        assert set(data["states"]) == {v.key for v in u.total.vertices}
        root_state = data["states"]["s0"]["class_canonical"]
        assert root_state == {"start": "c00", "edges": []}

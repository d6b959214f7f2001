import allure
import pytest

from SRC.base.errors import ClosureCapExceededError, PointOutOfRangeError
from SRC.base.group_action import (
    Orbit,
    closure,
    coset_of_point_map,
    derangement_set,
    is_coset_of_point_stabilizer,
    orbits,
    point_stabilizer,
)
from SRC.base.permutation import Permutation, compose_images, invert_images
from SRC.testbase import TestBase
from TestDataCommon import corpus


@allure.epic("Permutation Core")
@allure.feature("Group Actions")
class TestGroupAction(TestBase):

    @pytest.mark.parametrize(
        "generators,degree,order",
        [
            (["(1 2 3)"], 3, 3),
            (["(1 2)", "(1 2 3)"], 3, 6),
            (["(1 2 3 4)", "(1 2)"], 4, 24),
        ],
    )
    def test_closure_order(self, generators, degree, order):
        group = closure([Permutation.from_cycles(text, degree) for text in generators])
        assert group.order == order

    def test_closure_cap(self):
        generators = [Permutation.from_cycles("(1 2)", 5), Permutation.from_cycles("(1 2 3 4 5)", 5)]
        with pytest.raises(ClosureCapExceededError):
            closure(generators, cap=50)

    def test_elements_sorted_and_closed(self):
        for name in ("S4", "A4", "D5", "C6", "A5_pairs"):
            group = self.group(name)
            assert list(group.images) == sorted(group.images)
            assert group.images[group.identity_id] == tuple(range(group.degree))
            members = set(group.images)
            assert all(invert_images(g) in members for g in group.images)
            if group.order <= 60:
                assert all(compose_images(g, h) in members for g in group.images for h in group.images)

    def test_orbits(self):
        assert orbits(self.group("S3")) == [Orbit(0, (0, 1, 2))]
        swap = closure([Permutation.from_cycles("(1 2)", 3)])
        assert orbits(swap) == [Orbit(0, (0, 1)), Orbit(2, (2,))]
        square = self.group(corpus.internal(corpus.spec("S3"), corpus.spec("S3")))
        assert [orbit.members for orbit in orbits(square)] == [(0, 1, 2), (3, 4, 5)]
        assert not square.transitive

    def test_transitive_and_regular_flags(self):
        assert self.group("C5").regular
        assert self.group("S3").transitive and not self.group("S3").regular

    @pytest.mark.parametrize("name,size", [("S4", 6), ("A4", 3), ("C4", 1)])
    def test_point_stabilizer_size(self, name, size):
        assert len(point_stabilizer(self.group(name), 0)) == size

    def test_orbit_stabilizer(self):
        for name in ("S4", "A4", "A5_pairs", "D6", "C5"):
            group = self.group(name)
            for orbit in group.orbits:
                for v in orbit.members:
                    assert len(orbit.members) * len(point_stabilizer(group, v)) == group.order

    def test_point_out_of_range(self):
        with pytest.raises(PointOutOfRangeError):
            point_stabilizer(self.group("S3"), 3)

    def test_coset_of_point_map(self):
        s3 = self.group("S3")
        assert coset_of_point_map(s3, 0, 1) == [2, 3]
        assert coset_of_point_map(s3, 1, 1) == point_stabilizer(s3, 1)
        d5 = self.group("D5")
        assert all(len(coset_of_point_map(d5, v, w)) == 2 for v in range(5) for w in range(5))

    def test_is_coset_of_point_stabilizer(self):
        s3, a4 = self.group("S3"), self.group("A4")
        assert is_coset_of_point_stabilizer(s3, [2, 3]) == (0, 1)
        for v in range(4):
            assert is_coset_of_point_stabilizer(a4, point_stabilizer(a4, v)) == (v, v)
        witness = [a4.id_of(Permutation.from_cycles(text, 4)) for text in ("()", "(1 3 2)", "(1 4 2)")]
        assert is_coset_of_point_stabilizer(a4, witness) is None

    def test_derangement_set(self):
        assert derangement_set(self.group("S3")) == [3, 4]
        assert len(derangement_set(self.group("S4"))) == 9
        c6 = self.group("C6")
        assert set(derangement_set(c6)) == set(range(c6.order)) - {c6.identity_id}

    def test_describe_uses_cycle_notation(self):
        s3 = self.group("S3")
        assert s3.describe([0, 3]) == ["()", "(1 2 3)"]

    def test_renamed_leaves_the_original(self):
        s3 = self.group("S3")
        twin = s3.renamed("Sym(3)")
        assert twin.name == "Sym(3)"
        assert s3.name == "S3"
        assert twin.same_elements(s3) and twin.order == s3.order

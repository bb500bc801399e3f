import random

from hypothesis import given
from hypothesis.strategies import integers, lists

from ripple.idset import (
    IdSet,
    NodeId,
    set_empty,
    set_for_each,
    set_insert,
    set_intersect,
    set_mem,
    set_remove,
    set_to_list,
    set_union,
)

UNIVERSE = [NodeId(engine=1, index=index) for index in range(8)]


def build(items: list[NodeId]) -> IdSet:
    members = set_empty()
    for item in items:
        members = set_insert(item, members)
    return members


def test_empty_set_has_no_members() -> None:
    assert set_mem(UNIVERSE[0], set_empty()) is False
    assert set_to_list(set_empty()) == []


def test_insert_of_a_member_returns_the_same_set() -> None:
    once = set_insert(UNIVERSE[0], set_empty())
    twice = set_insert(UNIVERSE[0], once)

    assert twice is once
    assert len(twice) == 1


def test_remove_of_a_non_member_is_identity() -> None:
    members = build(UNIVERSE[:2])

    assert set_remove(UNIVERSE[5], members) is members


def test_functional_operations_leave_arguments_untouched() -> None:
    members = build(UNIVERSE[:2])

    set_insert(UNIVERSE[3], members)
    set_remove(UNIVERSE[0], members)
    set_union(members, build(UNIVERSE[4:6]))

    assert set_to_list(members) == UNIVERSE[:2]


def test_intersect_keeps_shared_members() -> None:
    a, b, c = UNIVERSE[:3]

    assert set_intersect(build([a, b]), build([b, c])) == build([b])


def test_ids_from_different_engines_are_distinct() -> None:
    members = build([NodeId(engine=1, index=0)])

    assert set_mem(NodeId(engine=2, index=0), members) is False


def test_for_each_tolerates_removal_during_iteration() -> None:
    members = build(UNIVERSE[:4])
    seen: list[NodeId] = []

    def visit(item: NodeId) -> None:
        seen.append(item)
        members.discard(item)

    set_for_each(visit, members)

    assert seen == UNIVERSE[:4]
    assert len(members) == 0


def test_operations_match_brute_force_scan() -> None:
    rng = random.Random(20160918)

    for _ in range(10_000):
        left_items = [rng.choice(UNIVERSE) for _ in range(rng.randint(0, 6))]
        right_items = [rng.choice(UNIVERSE) for _ in range(rng.randint(0, 6))]
        probe = rng.choice(UNIVERSE)
        left, right = build(left_items), build(right_items)

        expected_union = []
        for item in left_items + right_items:
            if item not in expected_union:
                expected_union.append(item)
        expected_intersection = []
        for item in left_items:
            for other in right_items:
                if item == other and item not in expected_intersection:
                    expected_intersection.append(item)

        assert sorted(set_to_list(set_union(left, right)), key=lambda n: n.index) == sorted(
            expected_union, key=lambda n: n.index
        )
        assert sorted(set_to_list(set_intersect(left, right)), key=lambda n: n.index) == sorted(
            expected_intersection, key=lambda n: n.index
        )
        assert set_mem(probe, left) == any(item == probe for item in left_items)
        assert set_mem(probe, set_remove(probe, left)) is False


@given(lists(integers(0, 7)), integers(0, 7))
def test_insert_then_member_and_cardinality(indices: list[int], probe: int) -> None:
    members = build([UNIVERSE[index] for index in indices])
    extended = set_insert(UNIVERSE[probe], members)

    assert set_mem(UNIVERSE[probe], extended)
    assert len(extended) in (len(members), len(members) + 1)
    assert set_insert(UNIVERSE[probe], extended) == extended
    assert not set_mem(UNIVERSE[probe], set_remove(UNIVERSE[probe], extended))

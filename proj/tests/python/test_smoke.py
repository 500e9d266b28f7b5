import pytest

import tomseq


def test_symmetric_group_of_degree_four():
    table = tomseq.marks_table(tomseq.symmetric_group(4))
    assert len(table) == 11
    assert table[0, 0] == 24
    s = tomseq.summarize(table)
    assert s["total_subgroups"] == 30
    assert s["sum_of_marks"] == 146
    assert s["diagonal_sum"] == 47


def test_permutations():
    p = tomseq.Permutation.from_cycles(3, [[0, 1]])
    q = tomseq.Permutation.from_cycles(3, [[1, 2]])
    assert (p * q).images == [1, 2, 0]
    assert p.order() == 2 and not p.is_even()
    assert len(tomseq.closure([p, q], 3)) == 6


def test_classes_and_properties():
    ct = tomseq.class_table(tomseq.symmetric_group(5))
    assert len(ct) == 19
    assert ct.total_subgroups() == 156
    flags = tomseq.classify(tomseq.alternating_group(5))
    assert not flags["solvable"]
    with pytest.raises(tomseq.BudgetExceeded):
        tomseq.class_table(tomseq.symmetric_group(6), max_order=100)


def test_euler_transform():
    assert tomseq.euler_transform([1, 0, 1, 3, 4, 12], 6) == [1, 1, 2, 5, 9, 22]
    assert tomseq.inverse_euler_transform([1, 2, 4, 11, 19, 56], 6) == [1, 1, 2, 6, 6, 27]
    with pytest.raises(tomseq.NotAnEulerImage):
        tomseq.inverse_euler_transform([-1, 1], 2)
    assert tomseq.mobius(6) == 1
    assert tomseq.multiset_coefficient(2, 2) == 3


def test_tom_text_roundtrip():
    table = tomseq.family_marks_table("A", 5)
    text = tomseq.to_tom_text(table)
    back = tomseq.parse_tom_text(text)
    assert back.beta == table.beta
    assert tomseq.to_tom_text(back) == text
    with pytest.raises(tomseq.InvalidMarksTable):
        tomseq.parse_tom_text(text.replace("ROW 2: 30 2", "ROW 2: 30 3"))


def test_connectivity():
    h = tomseq.closure([tomseq.Permutation.from_cycles(4, [[0, 1]]), tomseq.Permutation.from_cycles(4, [[2, 3]])], 4)
    assert tomseq.decompose(h) == [[0, 1], [2, 3]]
    assert not tomseq.is_connected(h)
    assert tomseq.is_connected_partition([3, 4, 6])
    assert tomseq.connected_partition_count(13) == 3


def test_report():
    r = tomseq.report("S", 5, ["totals"])
    assert r["tables"][0]["rows"][4]["values"] == [156]
    assert r["mismatches"] == []

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import rand_family
from rsinf.core import FieldElem, Tableau, TableauFamily, parse_elem
from rsinf.rs_finite import (
    InterchangePath,
    admissible,
    apply_interchange,
    connected,
    j,
    joseph_equal,
    rho_shift,
    rs,
    rs_trace,
    seq_of,
)


def seq(text):
    return tuple(parse_elem(p) for p in text.split(",")) if text else ()


def test_rho_shift():
    assert rho_shift(seq("3,4,a,5")) == seq("2,2,a-3,1")


def test_rs_integer_example():
    fam = rs(seq("3,1,2"))
    assert fam == TableauFamily((Tableau.from_offsets(0, [[3, 2], [1]]),))


def test_rs_mixed_classes():
    fam = rs(seq("2,2,a-3,1"))
    want = TableauFamily(
        (
            Tableau.from_offsets(0, [[2, 1], [2]]),
            Tableau("a", ((FieldElem("a", -3),),)),
        )
    )
    assert fam == want


def test_rs_empty():
    assert rs(()) == TableauFamily(())


def test_j_worked_example():
    fam = j(seq("3,4,a,5"))
    assert fam[0] == Tableau.from_offsets(0, [[2, 1], [2]])
    assert fam[1] == Tableau("a", ((FieldElem("a", -3),),))


def test_trace_states_of_worked_example():
    steps = rs_trace(rho_shift(seq("3,4,a,5")))
    fams = [
        [t.offsets() for t in step.family] for step in steps
    ]
    assert fams == [
        [((2,),)],
        [((2,), (2,))],
        [((2,), (2,)), ((-3,),)],
        [((2, 1), (2,)), ((-3,),)],
    ]
    # positions mirror the family shape and hold 1-based input slots
    assert steps[0].positions == (((1,),),)
    assert steps[1].positions == (((2,), (1,)),)
    assert steps[2].positions == (((2,), (1,)), ((3,),))
    assert steps[3].positions == (((2, 4), (1,)), ((3,),))


@given(st.lists(st.integers(-6, 6), max_size=12))
@settings(max_examples=150, deadline=None)
def test_trace_ends_at_rs(values):
    steps = rs_trace(values)
    if values:
        assert steps[-1].family == rs(values)
    else:
        assert steps == ()


def test_seq_of_paper_examples():
    t = Tableau.from_offsets("a", [[4, 2, 1], [4, 1], [4, 1], [3]])
    assert [str(e) for e in seq_of(t)] == [
        "a+3", "a+4", "a+1", "a+4", "a+1", "a+4", "a+2", "a+1",
    ]
    t1 = Tableau.from_offsets("a", [[7, -4], [-8]])
    t2 = Tableau.from_offsets("b", [[-4, -6], [-5]])
    assert [str(e) for e in seq_of((t1, t2))] == [
        "a-8", "a+7", "a-4", "b-5", "b-4", "b-6",
    ]


def test_seq_of_single_box():
    assert seq_of(Tableau.from_offsets("x", [[0]])) == (FieldElem("x", 0),)


def test_seq_of_accepts_family_and_iterable():
    fam = rs(seq("2,2,1"))
    assert seq_of(fam) == seq("2,2,1")
    assert seq_of(list(fam)) == seq("2,2,1")


def test_rs_of_seq_of_round_trip():
    rng = random.Random(5)
    for _ in range(300):
        fam = rand_family(rng)
        assert rs(seq_of(fam)) == fam


def test_admissible_fixtures():
    f = seq("0,5,3")
    assert admissible(f, 1) is True
    assert admissible(seq("0,a"), 1) is True
    assert admissible(seq("1,2"), 1) is False
    with pytest.raises(ValueError):
        admissible(f, 0)
    with pytest.raises(ValueError):
        admissible(f, 3)


def test_apply_interchange_plain():
    assert apply_interchange(seq("0,5,3"), 1) == seq("5,0,3")
    with pytest.raises(ValueError):
        apply_interchange(seq("1,2"), 1)


def test_shifted_interchange_preserves_j():
    rng = random.Random(8)
    done = 0
    while done < 60:
        n = rng.randint(2, 5)
        f = tuple(parse_elem(str(rng.randint(0, 4))) for _ in range(n))
        i = rng.randint(1, n - 1)
        if not admissible(f, i, shifted=True):
            continue
        g = apply_interchange(f, i, shifted=True)
        assert j(g) == j(f)
        done += 1


def test_plain_interchange_preserves_rs():
    rng = random.Random(9)
    done = 0
    while done < 60:
        n = rng.randint(2, 5)
        f = tuple(parse_elem(str(rng.randint(0, 4))) for _ in range(n))
        i = rng.randint(1, n - 1)
        if not admissible(f, i):
            continue
        assert rs(apply_interchange(f, i)) == rs(f)
        done += 1


def test_connected_simple_path():
    path = connected(seq("0,5,3"), seq("5,0,3"))
    assert path is not None
    assert path.positions == (1,)
    assert path.replay(seq("0,5,3")) == seq("5,0,3")


def test_connected_identity_and_failures():
    f = seq("1,2,3")
    path = connected(f, f)
    assert path == InterchangePath(())
    assert path.replay(f) == f
    assert connected(seq("1,2"), seq("2,1"), shifted=True) is None
    assert connected(seq("1,2"), seq("1,2,3")) is None


def test_connected_replay_round_trip():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(2, 5)
        f = tuple(parse_elem(str(rng.randint(0, 3))) for _ in range(n))
        # walk a few random shifted moves away, then find the way back
        g = f
        for _ in range(rng.randint(1, 4)):
            opts = [i for i in range(1, n) if admissible(g, i, shifted=True)]
            if not opts:
                break
            g = apply_interchange(g, rng.choice(opts), shifted=True)
        path = connected(f, g, shifted=True)
        assert path is not None
        assert path.replay(f) == g


def test_joseph_equal_fixtures():
    f, fp = seq("2,3"), seq("3,4")
    assert joseph_equal(f, fp, k=-1) is True
    assert joseph_equal(f, fp, k=1) is False
    assert joseph_equal(f, fp) is True
    assert joseph_equal(seq("3,4,a,5"), seq("4,5,a+1,6"), k=-1) is True
    assert joseph_equal(seq("1,2"), seq("1,2,3")) is False
    assert joseph_equal((), ()) is True


def test_joseph_search_spans_classes():
    # no integer shift aligns a symbol class with an integer class
    assert joseph_equal(seq("a"), seq("0")) is False

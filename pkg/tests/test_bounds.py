import pytest

from starbench.bounds import (
    ALIASES,
    NoKnownBound,
    TABLE,
    UnknownOperation,
    evaluate,
    recipe,
    resolve_op,
    table_csv,
)
from starbench.witnesses import WitnessSpec


def test_every_operation_present_once():
    expected = {
        "star", "reversal", "product",
        "bool-union", "bool-intersection", "bool-difference", "bool-symdiff",
        "K∪L*", "K∩L*", "K⊕L*", "K\\L*", "L*\\K",
        "K*∪L*", "K*∩L*", "K*\\L*", "K*⊕L*",
        "KL*", "K*L", "K*L*",
        "(KL)*", "(K∪L)*", "(K∩L)*-conjecture", "(K\\L)*", "(K⊕L)*-open",
    }
    assert set(TABLE) == expected
    assert len(TABLE) == 24


@pytest.mark.parametrize("op, m, n, value", [
    ("star", 3, 4, 12),
    ("star", 3, 3, 6),
    ("reversal", 3, 5, 32),
    ("product", 4, 5, 112),
    ("bool-union", 4, 5, 20),
    ("K∪L*", 4, 5, 93),
    ("K∩L*", 4, 5, 93),
    ("K*∪L*", 4, 5, 254),
    ("K*⊕L*", 3, 3, 26),
    ("KL*", 4, 5, 88),
    ("K*L", 4, 5, 281),
    ("K*L*", 4, 5, 226),
    ("(KL)*", 4, 5, 269),
    ("(KL)*", 3, 3, 32),
    ("(K∪L)*", 4, 5, 233),
    ("(K∩L)*-conjecture", 3, 3, 384),
    ("(K∩L)*-conjecture", 3, 4, 3072),
    ("(K∩L)*-conjecture", 3, 5, 24576),
    ("(K∩L)*-conjecture", 3, 6, 196608),
    ("(K\\L)*", 3, 3, 384),
])
def test_formula_values(op, m, n, value):
    assert evaluate(op, m, n) == value


def test_statuses():
    assert TABLE["(K∩L)*-conjecture"].status == "conjecture"
    assert TABLE["(K⊕L)*-open"].status == "open"
    assert all(
        e.status == "theorem"
        for op, e in TABLE.items()
        if op not in ("(K∩L)*-conjecture", "(K⊕L)*-open")
    )


def test_open_operation_has_no_formula():
    with pytest.raises(NoKnownBound, match="no known bound"):
        evaluate("(K⊕L)*-open", 3, 3)
    with pytest.raises(NoKnownBound):
        recipe("(K⊕L)*-open", 3, 3)


def test_unknown_operation():
    with pytest.raises(UnknownOperation):
        evaluate("K**L", 3, 3)
    with pytest.raises(UnknownOperation):
        resolve_op("frobnicate")


def test_range_validation():
    with pytest.raises(ValueError):
        evaluate("KL*", 2, 5)
    with pytest.raises(ValueError):
        recipe("KL*", 3, 2)
    evaluate("star", 0, 3)  # m ignored for unary operations


def test_symmetry_only_for_symmetric_operations():
    symmetric = {op for op, e in TABLE.items() if e.symmetric}
    assert symmetric == {
        "bool-union", "bool-intersection", "bool-symdiff",
        "K*∪L*", "K*∩L*", "K*⊕L*", "(K∪L)*", "(K∩L)*-conjecture",
    }
    for op in symmetric:
        for m in range(3, 9):
            for n in range(3, 9):
                assert evaluate(op, m, n) == evaluate(op, n, m)


def test_single_star_below_double_star():
    for m in range(3, 9):
        for n in range(3, 9):
            assert evaluate("K∪L*", m, n) < evaluate("K*∪L*", m, n)


def test_formulas_are_integers():
    for op, entry in TABLE.items():
        if entry.formula is None:
            continue
        for m in range(3, 9):
            for n in range(3, 9):
                assert isinstance(entry.formula(m, n), int)


def test_recipe_witness_pairs():
    r = recipe("K⊕L*", 4, 5)
    assert r.left == WitnessSpec("U3", 4)
    assert r.right == WitnessSpec("U3", 5, tuple("bac"))
    assert "star_nfa(L)" in r.pipeline and "symmetric-difference" in r.pipeline

    r = recipe("K∩L*", 4, 5)
    assert r.left == WitnessSpec("U0_3", 4)

    r = recipe("K*∩L*", 4, 5)
    assert r.left == WitnessSpec("W4", 4)
    assert r.right == WitnessSpec("W4", 5, tuple("dcba"))

    r = recipe("K*⊕L*", 4, 5)
    assert r.left == WitnessSpec("W0_4", 4)

    r = recipe("KL*", 4, 5)
    assert (r.left, r.right) == (WitnessSpec("T3", 4), WitnessSpec("T3", 5, tuple("bac")))

    r = recipe("K*L", 4, 5)
    assert (r.left, r.right) == (WitnessSpec("U4", 4), WitnessSpec("U4", 5, tuple("dcba")))

    r = recipe("(K∪L)*", 4, 5)
    assert (r.left, r.right) == (WitnessSpec("S2", 4), WitnessSpec("S2", 5, tuple("ba")))

    r = recipe("(K∩L)*-conjecture", 3, 4)
    assert (r.left, r.right) == (WitnessSpec("U5", 3), WitnessSpec("U5", 4, tuple("ecbad")))

    r = recipe("(K\\L)*", 3, 3)
    assert (r.left, r.right) == (WitnessSpec("JO6_K", 3), WitnessSpec("JO6_L", 3))
    assert r.complement_right

    r = recipe("star", 3, 4)
    assert r.left is None
    assert r.restrict_right == ("a", "b")

    r = recipe("L*\\K", 4, 5)
    assert "L*, K" in r.pipeline  # the starred side is the left product factor


def test_resolve_aliases():
    assert resolve_op("KuLs") == "K∪L*"
    assert resolve_op("KsdLs") == "K*\\L*"
    assert resolve_op("KL-s") == "(KL)*"
    assert resolve_op("KiL-s") == "(K∩L)*-conjecture"
    assert resolve_op("K*L") == "K*L"
    for alias, op in ALIASES.items():
        assert resolve_op(alias) == op


def test_table_csv_shape():
    text = table_csv([3, 4], [3, 4])
    lines = text.strip().split("\n")
    assert lines[0] == "op,status,formula,m,n,value"
    # unary entries emit one row per n, binary per (m, n), 24 ops total
    assert len(lines) - 1 == 2 * 2 + 22 * 4
    assert any(line.startswith("star,theorem,") for line in lines)
    assert any(",open,open," in line and line.endswith(",open") for line in lines)

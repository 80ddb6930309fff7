import itertools
import random

import pytest

from starbench.bounds import TABLE
from starbench.oracle import SemanticOracle
from starbench.verify import membership_oracle, run_pipeline, _operands_for


def test_epsilon_always_in_starred_side(witness):
    k = witness("U3", 4)
    l = witness("U3", 5, "bac")
    # the empty word is in L* by definition, so K union L* contains it
    assert SemanticOracle("K∪L*", k, l).member(())
    # and K intersect L* contains it exactly when K does (it does not here)
    assert not SemanticOracle("K∩L*", k, l).member(())
    assert SemanticOracle("K∩L*", witness("U0_3", 4), l).member(())


def test_star_oracle_small_trace(witness):
    u3 = witness("U3", 3)
    oracle = SemanticOracle("star", None, u3)
    assert oracle.member(())
    assert oracle.member(("a", "a"))          # one chunk
    assert oracle.member(("a", "a", "a", "a"))  # aa twice
    assert not oracle.member(("a",))


def test_concatenation_oracle_uses_split_points(witness):
    k = witness("U3", 3)
    oracle = SemanticOracle("product", k, k)
    members = [w for length in range(7)
               for w in itertools.product(k.alphabet, repeat=length)
               if oracle.member(w)]
    # every member must split into two accepted halves
    for w in members[:50]:
        assert any(k.run(w[:i]) and k.run(w[i:]) for i in range(len(w) + 1))


@pytest.mark.parametrize("op", [op for op in TABLE if TABLE[op].status != "open"])
def test_oracle_agrees_with_pipeline_small(op):
    m = None if TABLE[op].arity == 1 else 3
    left, right, _ = _operands_for(op, m, 3)
    final, _labels = run_pipeline(op, left, right)
    oracle = SemanticOracle(op, left, right)
    rng = random.Random(1)
    for _ in range(250):
        w = tuple(rng.choice(right.alphabet) for _ in range(rng.randint(0, 10)))
        assert oracle.member(w) == final.run(w), (op, w)


def test_membership_oracle_report_fields():
    report = membership_oracle("K*L", 4, 5, count=500, maxlen=12, seed=7)
    assert report.disagreements == 0
    assert report.example is None
    assert report.words == 500
    assert report.seed == 7


def test_membership_oracle_is_seed_deterministic():
    a = membership_oracle("KL*", 3, 4, count=100, maxlen=9, seed=42)
    b = membership_oracle("KL*", 3, 4, count=100, maxlen=9, seed=42)
    assert a == b


def test_open_operation_oracle_runs():
    report = membership_oracle("(K⊕L)*-open", 3, 3, count=150, maxlen=8, seed=5)
    assert report.disagreements == 0

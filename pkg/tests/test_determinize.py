import random

import pytest

from starbench.core import Dfa, EpsNfa, Transformation
from starbench.minimize import (
    SubsetCapExceeded,
    _hopcroft_blocks,
    _moore_blocks,
    determinize,
    distinguishing_word,
    equivalent,
    minimal_dfa,
    minimize,
    state_complexity,
)
from starbench.ops import BooleanOp, concat_nfa, dfa_to_nfa, product_dfa, reverse_nfa, star_nfa
from starbench.witnesses import WitnessSpec, build


def random_dfa(rng, size, alphabet=("a", "b")):
    delta = {
        x: Transformation(tuple(rng.randrange(size) for _ in range(size)))
        for x in alphabet
    }
    finals = frozenset(s for s in range(size) if rng.random() < 0.4)
    return Dfa(size, alphabet, delta, rng.randrange(size), finals)


def relabel_states(d, perm):
    """The same automaton under a bijective state renaming."""
    delta = {}
    for x, t in d.delta.items():
        img = [0] * d.size
        for s in range(d.size):
            img[perm[s]] = perm[t.image[s]]
        delta[x] = Transformation(tuple(img))
    return Dfa(d.size, d.alphabet, delta, perm[d.initial],
               frozenset(perm[f] for f in d.finals))


def test_star_of_binary_restriction_measures_six(witness):
    # 2^2 + 2^1 at n = 3
    nfa = star_nfa(witness("U3", 3).restrict("ab"))
    assert state_complexity(nfa) == 6


def test_determinizing_a_minimal_dfa_is_identity(witness):
    d = witness("U3", 4)
    assert minimal_dfa(dfa_to_nfa(d)) == minimize(d)


def test_initial_subset_label_of_kstar_l(witness):
    # concat(star(K), L): the initial subset holds the new state and L's 0
    left = star_nfa(witness("U4", 4))
    right = dfa_to_nfa(witness("U4", 5, "dcba"))
    sd = determinize(concat_nfa(left, right))
    assert sd.labels[0] == frozenset((4, 5))
    assert sd.dfa.initial == 0
    # labels are pairwise distinct and consistent with finality
    assert len(set(sd.labels)) == len(sd.labels)
    nfa_finals = set(range(9, 10))  # L's final 4 shifted by 5
    for i, label in enumerate(sd.labels):
        assert (i in sd.dfa.finals) == bool(label & nfa_finals)


def test_empty_subset_becomes_dead_state():
    # single letter NFA with no moves: everything falls into the dead state
    nfa = EpsNfa(1, ("a",), {}, {}, frozenset((0,)), frozenset((0,)))
    sd = determinize(nfa)
    assert sd.dfa.size == 2
    assert sd.labels[1] == frozenset()
    assert sd.dfa.delta["a"].image == (1, 1)


def test_chained_epsilon_closure():
    nfa = EpsNfa(
        4, ("a",),
        {(3, "a"): frozenset((3,))},
        {0: frozenset((1,)), 1: frozenset((2,))},
        frozenset((0,)),
        frozenset((2,)),
    )
    assert nfa.eps_closure((0,)) == {0, 1, 2}
    sd = determinize(nfa)
    assert sd.labels[0] == frozenset((0, 1, 2))
    assert 0 in sd.dfa.finals  # the empty word reaches the final state


def test_reverse_of_empty_language(witness):
    d = witness("U3", 3)
    empty = Dfa(d.size, d.alphabet, dict(d.delta), 0, frozenset())
    m = minimal_dfa(reverse_nfa(empty))
    assert m.size == 1
    assert not m.finals


def test_determinize_cap():
    d = build(WitnessSpec("U3", 6))
    with pytest.raises(SubsetCapExceeded):
        determinize(star_nfa(d.restrict("ab")), cap=10)


def test_minimize_witnesses_are_minimal(witness):
    for n in range(3, 9):
        assert minimize(witness("U3", n)).size == n


def test_minimize_merges_duplicate_sinks():
    # states 1 and 2 are identical final sinks and collapse into one
    t = {"a": Transformation((1, 1, 2)), "b": Transformation((2, 1, 2))}
    d = Dfa(3, ("a", "b"), t, 0, frozenset((1, 2)))
    m = minimize(d)
    assert m.size == d.size - 1
    assert equivalent(m, d)


def test_minimize_empty_intersection_is_one_state(witness):
    d = witness("U3", 4)
    prod = product_dfa(d, d.complement(), BooleanOp.INTERSECTION)
    assert minimize(prod).size == 1


def test_minimize_idempotent_and_canonical():
    rng = random.Random(42)
    for _ in range(60):
        d = random_dfa(rng, rng.randint(1, 8))
        m = minimize(d)
        assert minimize(m) == m
        perm = list(range(d.size))
        rng.shuffle(perm)
        assert minimize(relabel_states(d, perm)) == m


def test_moore_and_hopcroft_agree():
    rng = random.Random(7)
    for _ in range(60):
        d = random_dfa(rng, rng.randint(1, 10), ("a", "b", "c"))
        assert minimize(d, refine=_hopcroft_blocks) == minimize(d, refine=_moore_blocks)


def test_minimized_states_all_reachable_and_distinguishable():
    rng = random.Random(3)
    for _ in range(40):
        d = random_dfa(rng, rng.randint(2, 9))
        m = minimize(d)
        trans = [m.delta[x].image for x in m.alphabet]
        finals = [s in m.finals for s in range(m.size)]
        # a further refinement pass must not split anything
        blocks = _moore_blocks(trans, finals)
        assert len(set(blocks)) == m.size
        seen = {0}
        frontier = [0]
        while frontier:
            s = frontier.pop()
            for col in trans:
                if col[s] not in seen:
                    seen.add(col[s])
                    frontier.append(col[s])
        assert seen == set(range(m.size))


def test_canonical_form_across_different_constructions(witness):
    # two structurally different automata for the same language minimize to
    # field-identical values
    d = witness("U3", 4)
    via_product = minimize(product_dfa(d, d, BooleanOp.UNION))
    via_double_reverse = minimal_dfa(reverse_nfa(minimal_dfa(reverse_nfa(d))))
    assert via_product == minimize(d)
    assert via_double_reverse == minimize(d)


def test_language_preserved_through_pipeline(witness):
    rng = random.Random(99)
    cases = [
        star_nfa(witness("U3", 4)),
        reverse_nfa(witness("T3", 4)),
        concat_nfa(dfa_to_nfa(witness("U3", 3)), star_nfa(witness("U3", 4, "bac"))),
    ]
    for nfa in cases:
        d = minimal_dfa(nfa)
        for _ in range(350):
            w = tuple(rng.choice(nfa.alphabet) for _ in range(rng.randint(0, 15)))
            assert nfa.simulate(w) == d.run(w)


def test_monotone_size_bound():
    rng = random.Random(17)
    for _ in range(20):
        base = random_dfa(rng, rng.randint(2, 6))
        nfa = star_nfa(base)
        sd = determinize(nfa)
        assert minimize(sd.dfa).size <= sd.dfa.size <= 2 ** nfa.size + 1


def test_state_complexity_examples(witness):
    assert state_complexity(star_nfa(witness("U3", 4).restrict("ab"))) == 12
    assert state_complexity(dfa_to_nfa(witness("U3", 5))) == 5
    assert state_complexity(reverse_nfa(witness("U3", 3))) == 8


def test_equivalent_basics(witness):
    d = witness("U3", 4)
    assert equivalent(d, minimize(d))
    assert not equivalent(d, d.complement())
    with pytest.raises(ValueError):
        equivalent(d, witness("W4", 4))


def test_permutational_pair_not_equivalent(witness):
    # "ab" does not separate the pair (both reject); the shortest separator
    # is "aaa", accepted by U_4(a,b,c) only
    d1 = witness("U3", 4)
    d2 = witness("U3", 4, "bac")
    assert not equivalent(d1, d2)
    assert not d1.run("ab") and not d2.run("ab")
    word = distinguishing_word(d1, d2)
    assert word is not None and d1.run(word) != d2.run(word)
    assert word == ("a", "a", "a")
    assert d1.run("aaa") and not d2.run("aaa")

"""Language operations as automaton constructions.

Star and concatenation are wired with epsilon edges on EpsNfa values;
boolean operations go through the reachable direct product of two DFAs.
Inputs are never modified.
"""

from __future__ import annotations

from collections import deque
from enum import Enum

from .core import Dfa, EpsNfa, Transformation


class BooleanOp(Enum):
    UNION = "union"
    INTERSECTION = "intersection"
    DIFFERENCE = "difference"  # left \ right
    SYMDIFF = "symmetric-difference"

    def combine(self, left: bool, right: bool) -> bool:
        if self is BooleanOp.UNION:
            return left or right
        if self is BooleanOp.INTERSECTION:
            return left and right
        if self is BooleanOp.DIFFERENCE:
            return left and not right
        return left != right


def dfa_to_nfa(d: Dfa) -> EpsNfa:
    """Embed a DFA as an EpsNfa with singleton moves and no epsilon edges."""
    moves = {
        (s, x): frozenset((t.image[s],))
        for x, t in d.delta.items()
        for s in range(d.size)
    }
    return EpsNfa(
        size=d.size,
        alphabet=d.alphabet,
        moves=moves,
        epsilon={},
        initials=frozenset((d.initial,)),
        finals=d.finals,
    )


def star_nfa(d: Dfa) -> EpsNfa:
    """NFA for L(d)*: new sole-initial final state s with the initial
    state's outgoing transitions, plus an epsilon edge from every original
    final state back to the initial state.
    """
    s = d.size
    moves = {
        (p, x): frozenset((t.image[p],))
        for x, t in d.delta.items()
        for p in range(d.size)
    }
    for x, t in d.delta.items():
        moves[(s, x)] = frozenset((t.image[d.initial],))
    epsilon = {f: frozenset((d.initial,)) for f in d.finals}
    return EpsNfa(
        size=d.size + 1,
        alphabet=d.alphabet,
        moves=moves,
        epsilon=epsilon,
        initials=frozenset((s,)),
        finals=d.finals | {s},
    )


def star_eps_nfa(base: EpsNfa) -> EpsNfa:
    """Star construction on an NFA operand: same shape as star_nfa, with the
    new state copying the moves of all initials and epsilon edges from every
    final back to the initials. Keeps the state count at base.size + 1, which
    matters when the operand is itself a construction (starring its
    determinized DFA instead can explode the subset space).
    """
    s = base.size
    start = base.eps_closure(base.initials)
    moves = dict(base.moves)
    for x in base.alphabet:
        targets: set[int] = set()
        for i in start:
            targets.update(base.moves.get((i, x), ()))
        if targets:
            moves[(s, x)] = frozenset(targets)
    epsilon = dict(base.epsilon)
    for f in base.finals:
        epsilon[f] = epsilon.get(f, frozenset()) | base.initials
    return EpsNfa(
        size=base.size + 1,
        alphabet=base.alphabet,
        moves=moves,
        epsilon=epsilon,
        initials=frozenset((s,)),
        finals=base.finals | {s},
    )


def concat_nfa(left: EpsNfa, right: EpsNfa) -> EpsNfa:
    """NFA for L(left)·L(right): disjoint union with epsilon edges from the
    finals of left to the initials of right; left finals become non-final.
    """
    if left.alphabet != right.alphabet:
        raise ValueError(
            f"alphabet mismatch: {left.alphabet} vs {right.alphabet}"
        )
    off = left.size
    moves = dict(left.moves)
    for (s, x), targets in right.moves.items():
        moves[(s + off, x)] = frozenset(t + off for t in targets)
    epsilon = {s: targets for s, targets in left.epsilon.items()}
    shifted_initials = frozenset(i + off for i in right.initials)
    for f in left.finals:
        epsilon[f] = epsilon.get(f, frozenset()) | shifted_initials
    for s, targets in right.epsilon.items():
        shifted = frozenset(t + off for t in targets)
        epsilon[s + off] = epsilon.get(s + off, frozenset()) | shifted
    return EpsNfa(
        size=left.size + right.size,
        alphabet=left.alphabet,
        moves=moves,
        epsilon=epsilon,
        initials=left.initials,
        finals=frozenset(f + off for f in right.finals),
    )


def reverse_nfa(d: Dfa) -> EpsNfa:
    """NFA for the reversal of L(d): edges flipped, finals become initials."""
    moves: dict[tuple[int, str], set[int]] = {}
    for x, t in d.delta.items():
        for s in range(d.size):
            moves.setdefault((t.image[s], x), set()).add(s)
    return EpsNfa(
        size=d.size,
        alphabet=d.alphabet,
        moves={k: frozenset(v) for k, v in moves.items()},
        epsilon={},
        initials=d.finals,
        finals=frozenset((d.initial,)),
    )


def product_dfa(d1: Dfa, d2: Dfa, op: BooleanOp) -> Dfa:
    """Reachable direct product of two DFAs, finals per the boolean op.

    Pairs are discovered by BFS from the initial pair in alphabet order, so
    unreachable pairs never materialize and numbering is deterministic.
    """
    if d1.alphabet != d2.alphabet:
        raise ValueError(f"alphabet mismatch: {d1.alphabet} vs {d2.alphabet}")
    alphabet = d1.alphabet
    t1 = [d1.delta[x].image for x in alphabet]
    t2 = [d2.delta[x].image for x in alphabet]

    start = (d1.initial, d2.initial)
    index: dict[tuple[int, int], int] = {start: 0}
    order = [start]
    rows: list[list[int]] = []
    queue = deque((start,))
    while queue:
        p, q = queue.popleft()
        row = []
        for li in range(len(alphabet)):
            target = (t1[li][p], t2[li][q])
            ti = index.get(target)
            if ti is None:
                ti = len(order)
                index[target] = ti
                order.append(target)
                queue.append(target)
            row.append(ti)
        rows.append(row)

    size = len(order)
    delta = {
        x: Transformation(tuple(rows[s][li] for s in range(size)))
        for li, x in enumerate(alphabet)
    }
    finals = frozenset(
        i
        for i, (p, q) in enumerate(order)
        if op.combine(p in d1.finals, q in d2.finals)
    )
    return Dfa(size, alphabet, delta, 0, finals)

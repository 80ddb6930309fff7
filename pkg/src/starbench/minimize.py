"""Determinization and minimal-DFA computation.

This is the measurement instrument: every state-count in a verification
cell is the size of minimize(determinize(nfa)). Subsets live in Python ints
used as bit vectors; the NFAs here stay small (tens of states) while the
subset frontier can reach hundreds of thousands, so the hot path is the
per-subset successor computation and the partition refinement.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import Dfa, EpsNfa, Transformation
from .ops import BooleanOp, product_dfa

DEFAULT_SUBSET_CAP = 2_000_000


class SubsetCapExceeded(RuntimeError):
    """Subset frontier grew past the configured cap; result abandoned."""

    def __init__(self, discovered: int, cap: int):
        super().__init__(f"subset frontier exceeded cap: {discovered} > {cap}")
        self.discovered = discovered
        self.cap = cap


@dataclass(frozen=True)
class SubsetDfa:
    """A determinization result: the DFA plus, per DFA state, the set of
    NFA states it denotes (the empty label is the explicit dead state)."""

    dfa: Dfa
    labels: tuple[frozenset[int], ...]


def _closure_masks(nfa: EpsNfa) -> list[int]:
    """Per-state epsilon-closure bit masks (state included in its closure)."""
    n = nfa.size
    direct = [1 << q for q in range(n)]
    for q, targets in nfa.epsilon.items():
        for t in targets:
            direct[q] |= 1 << t
    closure = list(direct)
    changed = True
    while changed:
        changed = False
        for q in range(n):
            m = closure[q]
            acc = m
            while m:
                low = m & -m
                acc |= closure[low.bit_length() - 1]
                m ^= low
            if acc != closure[q]:
                closure[q] = acc
                changed = True
    return closure


def determinize(nfa: EpsNfa, cap: int | None = DEFAULT_SUBSET_CAP) -> SubsetDfa:
    """Subset construction with epsilon closure.

    BFS over closed subsets from closure(initials), letters expanded in
    alphabet order (canonical numbering). The empty subset, if reached,
    becomes an ordinary dead state, keeping the result complete.
    """
    n = nfa.size
    alphabet = nfa.alphabet
    closure = _closure_masks(nfa)
    # succ[letter][q] = epsilon-closed successor mask; closure distributes
    # over unions, so subset moves are plain ORs of these.
    succ: list[list[int]] = []
    for x in alphabet:
        col = [0] * n
        for q in range(n):
            acc = 0
            for t in nfa.moves.get((q, x), ()):
                acc |= closure[t]
            col[q] = acc
        succ.append(col)

    start = 0
    for q in nfa.initials:
        start |= closure[q]
    finals_mask = 0
    for q in nfa.finals:
        finals_mask |= 1 << q

    index: dict[int, int] = {start: 0}
    order = [start]
    rows: list[list[int]] = []
    head = 0
    nletters = len(alphabet)
    while head < len(order):
        mask = order[head]
        head += 1
        row = []
        for li in range(nletters):
            col = succ[li]
            target = 0
            m = mask
            while m:
                low = m & -m
                target |= col[low.bit_length() - 1]
                m ^= low
            ti = index.get(target)
            if ti is None:
                ti = len(order)
                if cap is not None and ti >= cap:
                    raise SubsetCapExceeded(ti + 1, cap)
                index[target] = ti
                order.append(target)
            row.append(ti)
        rows.append(row)

    size = len(order)
    delta = {
        x: Transformation(tuple(rows[s][li] for s in range(size)))
        for li, x in enumerate(alphabet)
    }
    finals = frozenset(i for i, mask in enumerate(order) if mask & finals_mask)
    labels = tuple(
        frozenset(q for q in range(n) if mask >> q & 1) for mask in order
    )
    return SubsetDfa(Dfa(size, alphabet, delta, 0, finals), labels)


def _reachable(d: Dfa) -> tuple[list[list[int]], list[bool], int]:
    """Restrict to states reachable from the initial one (BFS order).

    Returns (transitions per letter, finality flags, new initial index).
    """
    trans = [d.delta[x].image for x in d.alphabet]
    index = {d.initial: 0}
    order = [d.initial]
    head = 0
    while head < len(order):
        s = order[head]
        head += 1
        for col in trans:
            t = col[s]
            if t not in index:
                index[t] = len(order)
                order.append(t)
    rtrans = [[index[col[s]] for s in order] for col in trans]
    rfinal = [s in d.finals for s in order]
    return rtrans, rfinal, 0


def _hopcroft_blocks(trans: list[list[int]], final: list[bool]) -> list[int]:
    """Partition refinement with a worklist (Hopcroft's algorithm).

    Returns block_of: state -> block id. Splits keep the old id on the
    remainder and assign a fresh id to the carved-out part; a split block
    whose id sits in the worklist contributes both halves, otherwise the
    smaller half is queued.
    """
    n = len(final)
    nletters = len(trans)
    inv: list[list[list[int]]] = [
        [[] for _ in range(n)] for _ in range(nletters)
    ]
    for li in range(nletters):
        col = trans[li]
        icol = inv[li]
        for s in range(n):
            icol[col[s]].append(s)

    finals = {s for s in range(n) if final[s]}
    nonfinals = {s for s in range(n) if not final[s]}
    blocks: dict[int, set[int]] = {}
    block_of = [0] * n
    for group in (finals, nonfinals):
        if group:
            bid = len(blocks)
            blocks[bid] = group
            for s in group:
                block_of[s] = bid
    worklist = set(blocks)

    while worklist:
        a = worklist.pop()
        splitter = list(blocks[a])  # snapshot: a may split below
        for li in range(nletters):
            icol = inv[li]
            preimage: set[int] = set()
            for q in splitter:
                preimage.update(icol[q])
            touched: dict[int, list[int]] = {}
            for s in preimage:
                touched.setdefault(block_of[s], []).append(s)
            for bid, hit in touched.items():
                block = blocks[bid]
                if len(hit) == len(block):
                    continue
                new_id = len(blocks)
                carved = set(hit)
                blocks[new_id] = carved
                block -= carved
                for s in carved:
                    block_of[s] = new_id
                if bid in worklist:
                    worklist.add(new_id)
                else:
                    worklist.add(new_id if len(carved) <= len(block) else bid)
    return block_of


def _moore_blocks(trans: list[list[int]], final: list[bool]) -> list[int]:
    """Moore's quadratic refinement; cross-check for the Hopcroft path."""
    n = len(final)
    block_of = [1 if final[s] else 0 for s in range(n)]
    nblocks = len(set(block_of))
    while True:
        signature = {}
        new_block_of = [0] * n
        for s in range(n):
            sig = (block_of[s], tuple(block_of[col[s]] for col in trans))
            bid = signature.get(sig)
            if bid is None:
                bid = len(signature)
                signature[sig] = bid
            new_block_of[s] = bid
        if len(signature) == nblocks:
            return new_block_of
        nblocks = len(signature)
        block_of = new_block_of


def minimize(d: Dfa, refine=_hopcroft_blocks) -> Dfa:
    """The minimal complete DFA for L(d), canonically numbered.

    Unreachable states are dropped, indistinguishable ones merged by
    partition refinement, and the quotient renumbered by BFS from the
    initial state with alphabet-ordered expansion, so two equivalent DFAs
    over the same alphabet minimize to field-identical values.
    """
    trans, final, initial = _reachable(d)
    block_of = refine(trans, final)

    rep: dict[int, int] = {}
    for s, bid in enumerate(block_of):
        rep.setdefault(bid, s)

    index = {block_of[initial]: 0}
    order = [block_of[initial]]
    rows: list[list[int]] = []
    head = 0
    while head < len(order):
        bid = order[head]
        head += 1
        s = rep[bid]
        row = []
        for col in trans:
            tb = block_of[col[s]]
            ti = index.get(tb)
            if ti is None:
                ti = len(order)
                index[tb] = ti
                order.append(tb)
            row.append(ti)
        rows.append(row)

    size = len(order)
    delta = {
        x: Transformation(tuple(rows[s][li] for s in range(size)))
        for li, x in enumerate(d.alphabet)
    }
    finals = frozenset(i for i, bid in enumerate(order) if final[rep[bid]])
    return Dfa(size, d.alphabet, delta, 0, finals)


def minimal_dfa(nfa: EpsNfa, cap: int | None = DEFAULT_SUBSET_CAP) -> Dfa:
    """determinize then minimize; the standard measurement pipeline step."""
    return minimize(determinize(nfa, cap).dfa)


def state_complexity(nfa: EpsNfa, cap: int | None = DEFAULT_SUBSET_CAP) -> int:
    """Number of states of the minimal complete DFA for L(nfa)."""
    return minimal_dfa(nfa, cap).size


def equivalent(d1: Dfa, d2: Dfa) -> bool:
    """L(d1) == L(d2), by emptiness of the symmetric-difference product."""
    if d1.alphabet != d2.alphabet:
        raise ValueError(f"alphabet mismatch: {d1.alphabet} vs {d2.alphabet}")
    prod = product_dfa(d1, d2, BooleanOp.SYMDIFF)
    return not prod.finals


def distinguishing_word(d1: Dfa, d2: Dfa) -> tuple[str, ...] | None:
    """A shortest word accepted by exactly one of d1, d2, or None."""
    if d1.alphabet != d2.alphabet:
        raise ValueError(f"alphabet mismatch: {d1.alphabet} vs {d2.alphabet}")
    start = (d1.initial, d2.initial)
    seen = {start}
    queue = deque(((start, ()),))
    while queue:
        (p, q), word = queue.popleft()
        if (p in d1.finals) != (q in d2.finals):
            return word
        for x in d1.alphabet:
            target = (d1.delta[x].image[p], d2.delta[x].image[q])
            if target not in seen:
                seen.add(target)
                queue.append((target, word + (x,)))
    return None

"""Closed-form state-complexity bounds and the witness recipes that meet them.

Each operation carries a status: theorem bounds are asserted exactly,
the conjecture entry is evaluated but mismatches are findings rather than
failures, and the open entry has no formula at all. All arithmetic is
integer-exact.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Callable

from .witnesses import WitnessSpec, format_witness


class NoKnownBound(ValueError):
    """Evaluation or recipe lookup on the open operation."""


class UnknownOperation(ValueError):
    pass


@dataclass(frozen=True)
class Recipe:
    """The exact operands of a verification cell: witness specs plus the
    operand-level transforms (complement, alphabet restriction) and a
    human-readable pipeline description."""

    left: WitnessSpec | None
    right: WitnessSpec
    complement_right: bool = False
    restrict_right: tuple[str, ...] | None = None
    pipeline: str = ""

    def witness_names(self) -> str:
        right = format_witness(self.right)
        if self.restrict_right:
            right += "|" + "".join(self.restrict_right)
        if self.complement_right:
            right = f"complement({right})"
        if self.left is None:
            return right
        return f"{format_witness(self.left)}, {right}"


@dataclass(frozen=True)
class BoundEntry:
    op: str
    status: str  # theorem | conjecture | open
    arity: int
    formula_text: str | None
    formula: Callable[[int, int], int] | None
    recipe: Callable[[int, int], Recipe] | None
    symmetric: bool = False


def _unary_star(m: int, n: int) -> int:
    return 2 ** (n - 1) + 2 ** (n - 2)


def _k_circ_lstar(m: int, n: int) -> int:
    return m * (2 ** (n - 1) + 2 ** (n - 2) - 1) + 1


def _kstar_circ_lstar(m: int, n: int) -> int:
    return (2 ** (m - 1) + 2 ** (m - 2) - 1) * (2 ** (n - 1) + 2 ** (n - 2) - 1) + 1


def _u3(n: int, order: str | None = None) -> WitnessSpec:
    return WitnessSpec("U3", n, tuple(order) if order else None)


def _u03(n: int) -> WitnessSpec:
    return WitnessSpec("U0_3", n)


def _t3(n: int, order: str | None = None) -> WitnessSpec:
    return WitnessSpec("T3", n, tuple(order) if order else None)


def _w4(n: int, order: str | None = None) -> WitnessSpec:
    return WitnessSpec("W4", n, tuple(order) if order else None)


def _u4(n: int, order: str | None = None) -> WitnessSpec:
    return WitnessSpec("U4", n, tuple(order) if order else None)


def _u5(n: int, order: str | None = None) -> WitnessSpec:
    return WitnessSpec("U5", n, tuple(order) if order else None)


def _s2(n: int, order: str | None = None) -> WitnessSpec:
    return WitnessSpec("S2", n, tuple(order) if order else None)


def _boolean_recipe(boolean: str) -> Callable[[int, int], Recipe]:
    def make(m: int, n: int) -> Recipe:
        return Recipe(
            _u3(m), _u3(n, "bac"),
            pipeline=f"minimize(product_dfa(K, L, {boolean}))",
        )
    return make


def _k_circ_lstar_recipe(boolean: str, zero_dialect: bool,
                         swap: bool = False) -> Callable[[int, int], Recipe]:
    def make(m: int, n: int) -> Recipe:
        left = _u03(m) if zero_dialect else _u3(m)
        inner = "L*, K" if swap else "K, L*"
        return Recipe(
            left, _u3(n, "bac"),
            pipeline=(
                "L* = det-min(star_nfa(L)); "
                f"minimize(product_dfa({inner}, {boolean}))"
            ),
        )
    return make


def _kstar_circ_lstar_recipe(boolean: str,
                             zero_dialect: bool) -> Callable[[int, int], Recipe]:
    def make(m: int, n: int) -> Recipe:
        left = WitnessSpec("W0_4", m) if zero_dialect else _w4(m)
        return Recipe(
            left, _w4(n, "dcba"),
            pipeline=(
                "K* = det-min(star_nfa(K)); L* = det-min(star_nfa(L)); "
                f"minimize(product_dfa(K*, L*, {boolean}))"
            ),
        )
    return make


def _star_of_product_recipe(boolean: str, left: Callable[[int], WitnessSpec],
                            right: Callable[[int], WitnessSpec],
                            complement_right: bool = False,
                            ) -> Callable[[int, int], Recipe]:
    def make(m: int, n: int) -> Recipe:
        return Recipe(
            left(m), right(n), complement_right=complement_right,
            pipeline=(
                f"P = minimize(product_dfa(K, L, {boolean})); "
                "det-min(star_nfa(P))"
            ),
        )
    return make


_ENTRIES = (
    BoundEntry(
        "star", "theorem", 1,
        "2^(n-1) + 2^(n-2)", _unary_star,
        lambda m, n: Recipe(
            None, _u3(n), restrict_right=("a", "b"),
            pipeline="det-min(star_nfa(U_n(a,b,_)))",
        ),
    ),
    BoundEntry(
        "reversal", "theorem", 1,
        "2^n", lambda m, n: 2 ** n,
        lambda m, n: Recipe(None, _u3(n),
                            pipeline="det-min(reverse_nfa(L))"),
    ),
    BoundEntry(
        "product", "theorem", 2,
        "(m-1)*2^n + 2^(n-1)",
        lambda m, n: (m - 1) * 2 ** n + 2 ** (n - 1),
        lambda m, n: Recipe(
            _u3(m), _u3(n),
            pipeline="det-min(concat_nfa(dfa_to_nfa(K), dfa_to_nfa(L)))",
        ),
    ),
    BoundEntry("bool-union", "theorem", 2, "m*n",
               lambda m, n: m * n, _boolean_recipe("union"), symmetric=True),
    BoundEntry("bool-intersection", "theorem", 2, "m*n",
               lambda m, n: m * n, _boolean_recipe("intersection"),
               symmetric=True),
    BoundEntry("bool-difference", "theorem", 2, "m*n",
               lambda m, n: m * n, _boolean_recipe("difference")),
    BoundEntry("bool-symdiff", "theorem", 2, "m*n",
               lambda m, n: m * n, _boolean_recipe("symmetric-difference"),
               symmetric=True),
    BoundEntry("K∪L*", "theorem", 2, "m*(2^(n-1) + 2^(n-2) - 1) + 1",
               _k_circ_lstar, _k_circ_lstar_recipe("union", False)),
    BoundEntry("K∩L*", "theorem", 2, "m*(2^(n-1) + 2^(n-2) - 1) + 1",
               _k_circ_lstar, _k_circ_lstar_recipe("intersection", True)),
    BoundEntry("K⊕L*", "theorem", 2, "m*(2^(n-1) + 2^(n-2) - 1) + 1",
               _k_circ_lstar,
               _k_circ_lstar_recipe("symmetric-difference", False)),
    BoundEntry("K\\L*", "theorem", 2, "m*(2^(n-1) + 2^(n-2) - 1) + 1",
               _k_circ_lstar, _k_circ_lstar_recipe("difference", True)),
    BoundEntry("L*\\K", "theorem", 2, "m*(2^(n-1) + 2^(n-2) - 1) + 1",
               _k_circ_lstar,
               _k_circ_lstar_recipe("difference", False, swap=True)),
    BoundEntry("K*∪L*", "theorem", 2,
               "(2^(m-1) + 2^(m-2) - 1)*(2^(n-1) + 2^(n-2) - 1) + 1",
               _kstar_circ_lstar, _kstar_circ_lstar_recipe("union", False),
               symmetric=True),
    BoundEntry("K*∩L*", "theorem", 2,
               "(2^(m-1) + 2^(m-2) - 1)*(2^(n-1) + 2^(n-2) - 1) + 1",
               _kstar_circ_lstar,
               _kstar_circ_lstar_recipe("intersection", False),
               symmetric=True),
    BoundEntry("K*\\L*", "theorem", 2,
               "(2^(m-1) + 2^(m-2) - 1)*(2^(n-1) + 2^(n-2) - 1) + 1",
               _kstar_circ_lstar,
               _kstar_circ_lstar_recipe("difference", True)),
    BoundEntry("K*⊕L*", "theorem", 2,
               "(2^(m-1) + 2^(m-2) - 1)*(2^(n-1) + 2^(n-2) - 1) + 1",
               _kstar_circ_lstar,
               _kstar_circ_lstar_recipe("symmetric-difference", True),
               symmetric=True),
    BoundEntry(
        "KL*", "theorem", 2,
        "m*(2^(n-1) + 2^(n-2)) - 2^(n-2)",
        lambda m, n: m * (2 ** (n - 1) + 2 ** (n - 2)) - 2 ** (n - 2),
        lambda m, n: Recipe(
            _t3(m), _t3(n, "bac"),
            pipeline="det-min(concat_nfa(dfa_to_nfa(K), star_nfa(L)))",
        ),
    ),
    BoundEntry(
        "K*L", "theorem", 2,
        "5*2^(m+n-3) - 2^(m-1) - 2^n + 1",
        lambda m, n: 5 * 2 ** (m + n - 3) - 2 ** (m - 1) - 2 ** n + 1,
        lambda m, n: Recipe(
            _u4(m), _u4(n, "dcba"),
            pipeline="det-min(concat_nfa(star_nfa(K), dfa_to_nfa(L)))",
        ),
    ),
    BoundEntry(
        "K*L*", "theorem", 2,
        "2^(m+n-1) - 2^(m-1) - 3*2^(n-2) + 2",
        lambda m, n: 2 ** (m + n - 1) - 2 ** (m - 1) - 3 * 2 ** (n - 2) + 2,
        lambda m, n: Recipe(
            _u4(m), _u4(n, "dcba"),
            pipeline="det-min(concat_nfa(star_nfa(K), star_nfa(L)))",
        ),
    ),
    BoundEntry(
        "(KL)*", "theorem", 2,
        "2^(m+n-1) + 2^(m+n-4) - (2^(m-1) + 2^(n-1) - m - 1)",
        lambda m, n: (2 ** (m + n - 1) + 2 ** (m + n - 4)
                      - (2 ** (m - 1) + 2 ** (n - 1) - m - 1)),
        lambda m, n: Recipe(
            _w4(m), _w4(n, "dcba"),
            pipeline=("KL = det-min(concat_nfa(dfa_to_nfa(K), dfa_to_nfa(L))); "
                      "det-min(star_nfa(KL))"),
        ),
    ),
    BoundEntry(
        "(K∪L)*", "theorem", 2,
        "2^(m+n-1) - (2^(m-1) + 2^(n-1) - 1)",
        lambda m, n: 2 ** (m + n - 1) - (2 ** (m - 1) + 2 ** (n - 1) - 1),
        _star_of_product_recipe("union", _s2, lambda n: _s2(n, "ba")),
        symmetric=True,
    ),
    BoundEntry(
        "(K∩L)*-conjecture", "conjecture", 2,
        "2^(m*n-1) + 2^(m*n-2)",
        lambda m, n: 2 ** (m * n - 1) + 2 ** (m * n - 2),
        _star_of_product_recipe("intersection", _u5,
                                lambda n: _u5(n, "ecbad")),
        symmetric=True,
    ),
    BoundEntry(
        "(K\\L)*", "theorem", 2,
        "2^(m*n-1) + 2^(m*n-2)",
        lambda m, n: 2 ** (m * n - 1) + 2 ** (m * n - 2),
        _star_of_product_recipe(
            "difference",
            lambda n: WitnessSpec("JO6_K", n),
            lambda n: WitnessSpec("JO6_L", n),
            complement_right=True,
        ),
    ),
    BoundEntry("(K⊕L)*-open", "open", 2, None, None, None),
)

TABLE: dict[str, BoundEntry] = {e.op: e for e in _ENTRIES}

# Which boolean operation an operation tag embeds, where it embeds one.
BOOLEAN_OF: dict[str, str] = {
    "bool-union": "union",
    "bool-intersection": "intersection",
    "bool-difference": "difference",
    "bool-symdiff": "symmetric-difference",
    "K∪L*": "union",
    "K∩L*": "intersection",
    "K⊕L*": "symmetric-difference",
    "K\\L*": "difference",
    "L*\\K": "difference",
    "K*∪L*": "union",
    "K*∩L*": "intersection",
    "K*\\L*": "difference",
    "K*⊕L*": "symmetric-difference",
    "(K∪L)*": "union",
    "(K∩L)*-conjecture": "intersection",
    "(K\\L)*": "difference",
    "(K⊕L)*-open": "symmetric-difference",
}

# Shell-safe spellings accepted by the CLI alongside the canonical tags.
ALIASES: dict[str, str] = {
    "KuLs": "K∪L*", "KiLs": "K∩L*", "KxLs": "K⊕L*", "KdLs": "K\\L*",
    "LsdK": "L*\\K",
    "KsuLs": "K*∪L*", "KsiLs": "K*∩L*", "KsdLs": "K*\\L*", "KsxLs": "K*⊕L*",
    "KLs": "KL*", "KsL": "K*L", "KsLs": "K*L*",
    "KL-s": "(KL)*", "KuL-s": "(K∪L)*", "KiL-s": "(K∩L)*-conjecture",
    "KdL-s": "(K\\L)*", "KxL-s": "(K⊕L)*-open",
}


def resolve_op(name: str) -> str:
    """Canonical operation tag for a CLI name (tag itself or an alias)."""
    if name in TABLE:
        return name
    if name in ALIASES:
        return ALIASES[name]
    raise UnknownOperation(
        f"unknown operation {name!r}; known: {', '.join(TABLE)}"
    )


def evaluate(op: str, m: int, n: int) -> int:
    """Exact integer value of the bound formula at (m, n)."""
    entry = TABLE.get(op)
    if entry is None:
        raise UnknownOperation(f"unknown operation {op!r}")
    if entry.formula is None:
        raise NoKnownBound(f"no known bound for {op}")
    if n < 3 or (entry.arity == 2 and m < 3):
        raise ValueError(f"bounds require m, n >= 3, got m={m}, n={n}")
    return entry.formula(m, n)


def recipe(op: str, m: int, n: int) -> Recipe:
    """The witness pair and pipeline claimed to meet this bound."""
    entry = TABLE.get(op)
    if entry is None:
        raise UnknownOperation(f"unknown operation {op!r}")
    if entry.recipe is None:
        raise NoKnownBound(f"no witness recipe for open operation {op}")
    if n < 3 or (entry.arity == 2 and m < 3):
        raise ValueError(f"witnesses require m, n >= 3, got m={m}, n={n}")
    return entry.recipe(m, n)


def table_csv(ms: list[int], ns: list[int]) -> str:
    """Dump the bound table as CSV: op, status, formula-text, m, n, value."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["op", "status", "formula", "m", "n", "value"])
    for entry in TABLE.values():
        cells = (
            [("-", n) for n in ns] if entry.arity == 1
            else [(m, n) for m in ms for n in ns]
        )
        for m, n in cells:
            if entry.formula is None:
                value = "open"
            else:
                value = str(entry.formula(m if m != "-" else 0, n))
            writer.writerow(
                [entry.op, entry.status, entry.formula_text or "open",
                 m, n, value]
            )
    return out.getvalue()

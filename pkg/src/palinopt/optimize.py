"""Gate cancellation and closed-form gate counts.

Adjacent identical controlled-X gates square to the identity and are
deleted.  Gate counts for the conventional and palindromic orderings admit
closed forms, which the structural counters here reproduce by building the
circuit skeleton from Gray codes alone (no matrix values involved).
"""

from __future__ import annotations

from .ordering import OrderArray, conventional_order, poa_order
from .synth import Circuit, ControlledGate, subcircuit_for_pair


def _cancels(a: ControlledGate, b: ControlledGate) -> bool:
    return a.is_x and b.is_x and a.symbol == b.symbol


def cancel_pass(c: Circuit) -> Circuit:
    """Delete adjacent self-annihilating X pairs until none remain.

    Single left-to-right stack scan: push each gate, but pop instead when
    the incoming gate annihilates the top.  This reaches the same fixed
    point as repeated peephole deletion (X-pair deletion is confluent).
    Component-matrix gates are never touched.
    """
    stack: list[ControlledGate] = []
    for g in c.gates:
        if stack and _cancels(stack[-1], g):
            stack.pop()
        else:
            stack.append(g)
    return Circuit(n=c.n, gates=tuple(stack))


def cancel_pass_peephole(c: Circuit) -> Circuit:
    """Quadratic fixed-point variant, kept as a cross-check of cancel_pass."""
    gates = list(c.gates)
    changed = True
    while changed:
        changed = False
        i = 0
        while i + 1 < len(gates):
            if _cancels(gates[i], gates[i + 1]):
                del gates[i : i + 2]
                changed = True
                i = max(i - 1, 0)
            else:
                i += 1
    return Circuit(n=c.n, gates=tuple(gates))


def structural_circuit(n: int, order: OrderArray) -> Circuit:
    """Circuit skeleton for an ordering: placeholder middles, real X runs."""
    gates: list[ControlledGate] = []
    for r, c in order.pairs():
        gates.extend(subcircuit_for_pair(r, c, n).flatten())
    return Circuit(n=n, gates=tuple(gates))


def structural_column_circuit(n: int, order: OrderArray, col: int) -> Circuit:
    gates: list[ControlledGate] = []
    for r in order.columns[col]:
        gates.extend(subcircuit_for_pair(r, col, n).flatten())
    return Circuit(n=n, gates=tuple(gates))


def count_structural(n: int, order: OrderArray, cancelled: bool) -> int:
    circuit = structural_circuit(n, order)
    if cancelled:
        circuit = cancel_pass(circuit)
    return len(circuit)


def intercolumn_cancellation(n: int, order: OrderArray) -> int:
    """Gates cancelled at column boundaries: the per-column cancelled counts
    sum to more than the whole-circuit cancelled count by exactly this."""
    per_column = sum(
        len(cancel_pass(structural_column_circuit(n, order, c)))
        for c in range(len(order.columns))
    )
    return per_column - count_structural(n, order, cancelled=True)


def formula_conventional(n: int) -> int:
    """Unoptimized conventional-order circuit size."""
    if n < 1:
        raise ValueError(f"qubit count must be >= 1, got {n}")
    return (n - 1) * (1 << (2 * n - 1)) + (1 << (n - 1))


def formula_conventional_cancel(n: int) -> int:
    """Conventional-order size after cancellation (boundary overlaps only)."""
    if n < 1:
        raise ValueError(f"qubit count must be >= 1, got {n}")
    return (n - 1) * (1 << (2 * n - 1)) - (1 << (n - 1)) + 2


def formula_poa(n: int) -> int:
    """Palindromic-order size after cancellation.

    Evaluated in integer arithmetic; 7 * 2^(2n-1) + 10 is divisible by 3
    for every n >= 1.
    """
    if n < 2:
        raise ValueError(f"qubit count must be >= 2, got {n}")
    num = 7 * (1 << (2 * n - 1)) + 10
    assert num % 3 == 0
    return num // 3 - 7 * (1 << (n - 1))


def poa_recurrence(n: int) -> int:
    """Same count via the level-doubling recurrence, base 8 at n=2."""
    if n < 2:
        raise ValueError(f"qubit count must be >= 2, got {n}")
    val = 8
    for m in range(3, n + 1):
        half = 1 << (m - 1)
        val = 4 * (val + half - 2) + 5 * (half - 1) + 1 - 2 * (half - 1)
    return val


def column_counts(n: int) -> list[int]:
    """Within-column cancelled gate counts for the palindromic ordering.

    Column c of one level spawns columns 2c (count doubled plus 3: a new
    branch plus a new leaf) and 2c+1 (doubled plus 2) of the next; the last
    two columns collapse to 1 and 0.  Base counts at n=2 are structural.
    The column sum exceeds the whole-circuit count by the boundary
    cancellations 2(2^{n-1} - 1).
    """
    if n < 2:
        raise ValueError(f"qubit count must be >= 2, got {n}")
    counts = [5, 4, 1, 0]  # n=2 columns 0..3 (column 3 is empty)
    for m in range(3, n + 1):
        prev = counts
        counts = []
        for c in range((1 << (m - 1)) - 1):
            counts.append(2 * prev[c] + 3)
            counts.append(2 * prev[c] + 2)
        counts.append(1)  # final nonempty column: single adjacent pair
        counts.append(0)
    return counts[:-1]


def table_rows(lo: int, hi: int, mode: str = "formula") -> list[tuple[int, int, int, int]]:
    """(n, palindromic, conventional, no-canceling) rows.

    mode "formula" uses the closed forms, "enumerate" builds and cancels
    the structural circuits, "both" does both and raises on disagreement.
    """
    rows = []
    for n in range(lo, hi + 1):
        formula = (formula_poa(n), formula_conventional_cancel(n), formula_conventional(n))
        if mode in ("enumerate", "both"):
            conv = conventional_order(n)
            poa = poa_order(n)
            enum = (
                count_structural(n, poa, cancelled=True),
                count_structural(n, conv, cancelled=True),
                count_structural(n, conv, cancelled=False),
            )
            if mode == "both" and enum != formula:
                raise AssertionError(f"n={n}: formula {formula} != enumeration {enum}")
            row = enum
        else:
            row = formula
        rows.append((n, *row))
    return rows

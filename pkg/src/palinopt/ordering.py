"""Ordering arrays that direct two-level decomposition.

An order array holds, for every column c in [0, 2^n - 2], the sequence of
row indices r (all r > c, each exactly once) in the order their entries get
eliminated.  Two constructions are provided: the conventional ascending
order and the palindromic order built by doubling the previous level.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

SOFT_CAP = 7


@dataclass(frozen=True)
class OrderArray:
    n: int
    columns: tuple[tuple[int, ...], ...] = field(default_factory=tuple)

    @property
    def dim(self) -> int:
        return 1 << self.n

    def pairs(self):
        """All ordering pairs (r, c) in elimination order."""
        for c, rows in enumerate(self.columns):
            for r in rows:
                yield (r, c)


def _check_cap(n: int) -> None:
    if n > SOFT_CAP:
        warnings.warn(
            f"n={n} yields {1 << n}x{1 << n} matrices; expect large outputs",
            stacklevel=3,
        )


def conventional_order(n: int) -> OrderArray:
    """Column c eliminates rows c+1, c+2, ..., 2^n - 1 in ascending order."""
    if n < 1:
        raise ValueError(f"qubit count must be >= 1, got {n}")
    _check_cap(n)
    dim = 1 << n
    cols = tuple(tuple(range(c + 1, dim)) for c in range(dim - 1))
    return OrderArray(n, cols)


def poa_order(n: int) -> OrderArray:
    """Palindromic order: maximal within-column gate overlap for each column.

    Level n=2 is the conventional order.  Column c of level m-1 spawns
    columns 2c and 2c+1 of level m: the even column is the doubled rows,
    then the single odd entry 2c+1, then the doubled rows plus one; the odd
    column drops the middle entry.  The final column is always [2^m - 1].
    """
    if n < 2:
        raise ValueError(f"qubit count must be >= 2, got {n}")
    _check_cap(n)
    cols: list[tuple[int, ...]] = [(1, 2, 3), (2, 3), (3,)]
    for m in range(3, n + 1):
        prev = cols
        cols = []
        for c in range((1 << (m - 1)) - 1):
            doubled = tuple(2 * r for r in prev[c])
            plus_one = tuple(2 * r + 1 for r in prev[c])
            cols.append(doubled + (2 * c + 1,) + plus_one)
            cols.append(doubled + plus_one)
        cols.append(((1 << m) - 1,))
    return OrderArray(n, tuple(cols))


def validate_order(o: OrderArray) -> bool:
    """Check the triangular shape: column c is a permutation of c+1..2^n-1."""
    dim = 1 << o.n
    if len(o.columns) != dim - 1:
        return False
    for c, rows in enumerate(o.columns):
        if sorted(rows) != list(range(c + 1, dim)):
            return False
    return True


def save_order(o: OrderArray) -> str:
    lines = [f"n={o.n}"]
    for c, rows in enumerate(o.columns):
        lines.append(f"{c}: " + " ".join(str(r) for r in rows))
    return "\n".join(lines) + "\n"


def load_order(text: str) -> OrderArray:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("n="):
        raise ValueError("order file must start with 'n=<int>'")
    try:
        n = int(lines[0][2:])
    except ValueError as exc:
        raise ValueError(f"bad qubit count: {lines[0]!r}") from exc
    cols: list[tuple[int, ...]] = []
    for expected_c, line in enumerate(lines[1:]):
        head, _, tail = line.partition(":")
        try:
            c = int(head)
            rows = tuple(int(t) for t in tail.split())
        except ValueError as exc:
            raise ValueError(f"malformed column line: {line!r}") from exc
        if c != expected_c:
            raise ValueError(f"expected column {expected_c}, got {c}")
        cols.append(rows)
    o = OrderArray(n, tuple(cols))
    if not validate_order(o):
        raise ValueError("order file fails validation: columns must each "
                         "permute {c+1, ..., 2^n - 1}")
    return o

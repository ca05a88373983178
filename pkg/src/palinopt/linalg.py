"""Dense complex matrix utilities and two-level matrix embedding.

Matrices are plain ``numpy`` arrays of ``complex128``.  The tolerance ladder
used throughout the package:

* 1e-12 for "is this entry zero" decisions inside algorithms,
* 1e-10 for unitarity validation,
* 1e-9 for end-to-end circuit reconstruction checks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

ZERO_TOL = 1e-12
UNITARY_TOL = 1e-10
RECONSTRUCT_TOL = 1e-9


def is_unitary(m: np.ndarray, tol: float = UNITARY_TOL) -> bool:
    """True iff the largest entry of ``m† m - I`` has magnitude below tol."""
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    dev = m.conj().T @ m - np.eye(m.shape[0])
    return bool(np.max(np.abs(dev)) < tol)


def adjoint(m: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(m, dtype=complex).conj().T


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape} x {b.shape}")
    return a @ b


def frobenius_distance(a: np.ndarray, b: np.ndarray) -> float:
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    return float(np.linalg.norm(a - b))


@dataclass(frozen=True)
class TwoLevelMatrix:
    """A unitary acting nontrivially only on components ``col`` and ``row``.

    ``comp`` is the 2x2 component matrix [[a, b], [c, d]] occupying positions
    (col, col), (col, row), (row, col), (row, row) of the expanded matrix.
    The convention row > col is enforced.
    """

    row: int
    col: int
    comp: np.ndarray
    dim: int

    def __post_init__(self) -> None:
        if self.row <= self.col:
            raise ValueError(f"require row > col, got ({self.row}, {self.col})")
        if not (0 <= self.col < self.dim and 0 <= self.row < self.dim):
            raise ValueError(f"indices ({self.row}, {self.col}) out of range for dim {self.dim}")
        comp = np.asarray(self.comp, dtype=complex)
        if comp.shape != (2, 2):
            raise ValueError("component matrix must be 2x2")
        if not is_unitary(comp, UNITARY_TOL):
            raise ValueError("component matrix is not unitary")
        object.__setattr__(self, "comp", comp)

    @property
    def pair(self) -> tuple[int, int]:
        return (self.row, self.col)


def expand_two_level(t: TwoLevelMatrix) -> np.ndarray:
    """Embed the 2x2 component into a dim x dim identity."""
    m = np.eye(t.dim, dtype=complex)
    c, r = t.col, t.row
    m[c, c] = t.comp[0, 0]
    m[c, r] = t.comp[0, 1]
    m[r, c] = t.comp[1, 0]
    m[r, r] = t.comp[1, 1]
    return m


def random_unitary(n: int, seed: int) -> np.ndarray:
    """Seeded Haar-style random 2^n x 2^n unitary.

    Orthonormalizes the columns of a complex Gaussian matrix with modified
    Gram-Schmidt (classical Gram-Schmidt loses orthogonality at dim 128).
    """
    if not 1 <= n <= 7:
        raise ValueError(f"qubit count must be in [1, 7], got {n}")
    dim = 1 << n
    rng = np.random.default_rng(seed)
    a = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q = np.empty((dim, dim), dtype=complex)
    for j in range(dim):
        v = a[:, j].copy()
        for i in range(j):
            v -= (q[:, i].conj() @ v) * q[:, i]
        q[:, j] = v / np.linalg.norm(v)
    return q


def write_matrix(m: np.ndarray) -> str:
    """Serialize: first line is the dimension, then one row per line with
    ``re,im`` tokens."""
    m = np.asarray(m, dtype=complex)
    lines = [str(m.shape[0])]
    for row in m:
        lines.append(" ".join(f"{float(z.real)!r},{float(z.imag)!r}" for z in row))
    return "\n".join(lines) + "\n"


def read_matrix(text: str) -> np.ndarray:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix file")
    try:
        dim = int(lines[0])
    except ValueError as exc:
        raise ValueError(f"bad dimension line: {lines[0]!r}") from exc
    if dim < 1 or len(lines) != dim + 1:
        raise ValueError(f"expected {dim} rows, got {len(lines) - 1}")
    m = np.empty((dim, dim), dtype=complex)
    for i, line in enumerate(lines[1:]):
        toks = line.split()
        if len(toks) != dim:
            raise ValueError(f"row {i}: expected {dim} entries, got {len(toks)}")
        for j, tok in enumerate(toks):
            re_s, _, im_s = tok.partition(",")
            if not _:
                raise ValueError(f"row {i} entry {j}: missing comma in {tok!r}")
            m[i, j] = complex(float(re_s), float(im_s))
    if not np.all(np.isfinite(m.view(float))):
        raise ValueError("matrix contains non-finite entries")
    return m

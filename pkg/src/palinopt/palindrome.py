"""Trie-based ordering of palindromic subcircuits for maximal cancellation.

The prefix of every subcircuit (its X-gate run plus the unique middle gate)
is entered into a trie; subcircuits sharing a prefix share a path.  Listing
leaves in depth-first order yields an ordering whose concatenation cancels
the maximum number of adjacent self-inverting gates, and the trie shape
gives the post-cancellation gate count directly: leaves + 2 * interior
nodes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .synth import PalindromicSubcircuit

MiddleId = tuple[int, int]


@dataclass
class TrieNode:
    label: str
    children: dict = field(default_factory=dict)  # symbol key -> TrieNode
    leaf_id: MiddleId | None = None

    @property
    def is_leaf(self) -> bool:
        return self.leaf_id is not None


@dataclass
class PalindromeTrie:
    root: TrieNode

    def leaves(self) -> list[MiddleId]:
        return dfs_order(self)

    def counts(self) -> tuple[int, int]:
        """(leaf count, interior count); interior excludes the root."""
        leaves = interior = 0
        stack = [(self.root, True)]
        while stack:
            node, is_root = stack.pop()
            if node.is_leaf:
                leaves += 1
            elif not is_root:
                interior += 1
            stack.extend((ch, False) for ch in node.children.values())
        return leaves, interior


def _x_key(gate) -> tuple:
    return ("X", gate.symbol)


def _leaf_key(sub: PalindromicSubcircuit) -> tuple:
    return ("mid", sub.pair)


def build_trie(subcircuits: Iterable[PalindromicSubcircuit]) -> PalindromeTrie:
    """One leaf per subcircuit; shared X-gate prefixes share paths."""
    root = TrieNode(label="")
    for sub in subcircuits:
        node = root
        for gate in sub.prefix:
            key = _x_key(gate)
            if key not in node.children:
                node.children[key] = TrieNode(label=f"X t={gate.target} c={gate.pattern()}")
            node = node.children[key]
        key = _leaf_key(sub)
        if key in node.children:
            raise ValueError(f"duplicate subcircuit for pair {sub.pair}")
        node.children[key] = TrieNode(label=f"V{sub.pair}", leaf_id=sub.pair)
    return PalindromeTrie(root)


def dfs_order(t: PalindromeTrie) -> list[MiddleId]:
    """Leaf labels in depth-first order; children visited in insertion order."""
    out: list[MiddleId] = []

    def visit(node: TrieNode) -> None:
        if node.is_leaf:
            out.append(node.leaf_id)
        for child in node.children.values():
            visit(child)

    visit(t.root)
    return out


def _leaf_set(node: TrieNode) -> frozenset:
    if node.is_leaf:
        return frozenset([node.leaf_id])
    acc: set = set()
    for child in node.children.values():
        acc |= _leaf_set(child)
    return frozenset(acc)


def mos_check(t: PalindromeTrie, seq: Sequence[MiddleId]) -> bool:
    """True iff ``seq`` is a maximal overlap sequence for the trie.

    Characterization: at every node, the leaves of each child subtrie must
    be contiguous in the sequence, recursively.  Siblings may appear in any
    order.
    """
    all_leaves = _leaf_set(t.root)
    if len(seq) != len(all_leaves) or set(seq) != set(all_leaves):
        raise ValueError("sequence is not a permutation of the trie's leaves")

    def check(node: TrieNode, chunk: Sequence[MiddleId]) -> bool:
        if node.is_leaf:
            return True
        owner = {}
        for child in node.children.values():
            for leaf in _leaf_set(child):
                owner[leaf] = child
        # Each child's leaves must form one contiguous run of the chunk.
        runs: list[tuple[TrieNode, int, int]] = []
        i = 0
        while i < len(chunk):
            child = owner[chunk[i]]
            j = i
            while j < len(chunk) and owner[chunk[j]] is child:
                j += 1
            runs.append((child, i, j))
            i = j
        seen = set()
        for child, i, j in runs:
            if id(child) in seen:
                return False
            seen.add(id(child))
            if j - i != len(_leaf_set(child)):
                return False
            if not check(child, chunk[i:j]):
                return False
        return True

    return check(t.root, list(seq))


def trie_gate_count(t: PalindromeTrie) -> int:
    """Gates remaining after cancelling a maximal overlap concatenation."""
    leaves, interior = t.counts()
    return leaves + 2 * interior


def overlap(a: PalindromicSubcircuit, b: PalindromicSubcircuit) -> int:
    """Length of the cancelling run between consecutive subcircuits: the
    longest common prefix of their X-gate runs."""
    k = 0
    for ga, gb in zip(a.prefix, b.prefix):
        if _x_key(ga) != _x_key(gb):
            break
        k += 1
    return k


def total_overlap(subs: Sequence[PalindromicSubcircuit]) -> int:
    return sum(overlap(a, b) for a, b in zip(subs, subs[1:]))


def dump_trie(t: PalindromeTrie) -> str:
    """Indented one-node-per-line rendering, leaves tagged with their id."""
    lines: list[str] = []

    def visit(node: TrieNode, depth: int) -> None:
        if node is not t.root:
            tag = f" [leaf {node.leaf_id}]" if node.is_leaf else ""
            lines.append("  " * (depth - 1) + node.label + tag)
        for child in node.children.values():
            visit(child, depth + 1)

    visit(t.root, 0)
    return "\n".join(lines) + "\n"

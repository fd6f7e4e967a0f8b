"""Finite self-maps and their functional graphs.

A map f on X = {0, ..., n-1} is stored as an explicit image table.  Its
functional graph (one directed edge x -> f(x) per node) splits into weakly
connected components, each containing exactly one cycle with trees hanging
off the cycle nodes.  ``decompose`` recovers that structure, plus per-node
orbit coordinates, in a single O(n) pass with no recursion.

Canonical orderings (the underlying math fixes none of these):
  * components are numbered in order of their smallest contained node;
  * within a cycle, position 0 is the smallest-index cycle node and
    position j+1 (mod c) is the f-image of position j.
"""

from __future__ import annotations

import json
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass

__all__ = [
    "FunctionTable",
    "NodeCoord",
    "Component",
    "Decomposition",
    "ComponentProfile",
    "decompose",
    "iterate",
    "disjoint_union",
    "is_permutation",
    "profile_of",
]


@dataclass(frozen=True)
class FunctionTable:
    """An explicit map on {0, ..., n-1}: ``image[x]`` is f(x)."""

    n: int
    image: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"domain size must be >= 1, got {self.n}")
        if len(self.image) != self.n:
            raise ValueError(
                f"image has {len(self.image)} entries for domain size {self.n}"
            )
        # min/max instead of a per-entry loop: validation must stay cheap at n ~ 10^6
        if min(self.image) < 0 or max(self.image) >= self.n:
            raise ValueError("image entries must lie in [0, n)")

    @classmethod
    def from_values(cls, values) -> "FunctionTable":
        """Build a table from any iterable of images, inferring n."""
        image = tuple(int(v) for v in values)
        return cls(len(image), image)

    def __call__(self, x: int) -> int:
        return self.image[x]

    def to_text(self) -> str:
        """Serialize as ``n`` then one ``x f(x)`` line per node."""
        lines = [str(self.n)]
        lines.extend(f"{x} {y}" for x, y in enumerate(self.image))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "FunctionTable":
        """Parse the text format; nodes must appear in order 0..n-1."""
        lines = text.split()
        if not lines:
            raise ValueError("empty function table text")
        n = int(lines[0])
        if len(lines) != 1 + 2 * n:
            raise ValueError(f"expected {n} 'x f(x)' lines after the header")
        image = []
        for x in range(n):
            got_x = int(lines[1 + 2 * x])
            if got_x != x:
                raise ValueError(f"line {x + 1} starts with {got_x}, expected {x}")
            image.append(int(lines[2 + 2 * x]))
        return cls(n, tuple(image))

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "image": list(self.image)})

    @classmethod
    def from_json(cls, text: str) -> "FunctionTable":
        obj = json.loads(text)
        if not isinstance(obj, dict) or set(obj) != {"n", "image"}:
            raise ValueError('expected a JSON object {"n": ..., "image": [...]}')
        return cls(int(obj["n"]), tuple(int(v) for v in obj["image"]))


@dataclass(frozen=True)
class NodeCoord:
    """Where one node sits in its component's tail/cycle structure.

    ``tail_length`` counts edges to the first cycle node on the orbit; it is 0
    exactly when the node itself is cyclic, in which case ``cycle_position``
    gives its index along the cycle (None for tail nodes).
    """

    component_id: int
    tail_length: int
    cycle_position: int | None


@dataclass(frozen=True)
class Component:
    """One weakly connected component: t nodes around a cycle of length c."""

    id: int
    t: int
    c: int
    depth: int
    cycle_nodes: tuple[int, ...]


class _CoordView(Sequence):
    """Sequence of NodeCoord built on demand from the parallel arrays.

    n can reach 10^6; materializing one dataclass per node up front would
    dominate decomposition time, so coords are created lazily.
    """

    __slots__ = ("_d",)

    def __init__(self, d: "Decomposition"):
        self._d = d

    def __len__(self) -> int:
        return self._d.n

    def __getitem__(self, x):
        if isinstance(x, slice):
            return [self[i] for i in range(*x.indices(self._d.n))]
        d = self._d
        pos = d.cycle_positions[x]
        return NodeCoord(d.component_ids[x], d.tail_lengths[x], pos if pos >= 0 else None)


@dataclass(frozen=True)
class Decomposition:
    """Full structure of a functional graph.

    The per-node data is held in three parallel tuples (``component_ids``,
    ``tail_lengths``, ``cycle_positions`` with -1 for tail nodes); ``coords``
    presents the same data as a sequence of NodeCoord.
    """

    n: int
    components: tuple[Component, ...]
    component_ids: tuple[int, ...]
    tail_lengths: tuple[int, ...]
    cycle_positions: tuple[int, ...]

    @property
    def coords(self) -> Sequence:
        return _CoordView(self)

    def component_of(self, x: int) -> Component:
        return self.components[self.component_ids[x]]


@dataclass(frozen=True)
class ComponentProfile:
    """Multiset of (component size, cycle length) pairs with total size n.

    Pairs are kept canonically sorted (descending t, then descending c).
    The asymptotic entropy of a map depends only on this profile.
    """

    pairs: tuple[tuple[int, int], ...]
    n: int

    @classmethod
    def from_pairs(cls, pairs) -> "ComponentProfile":
        norm = tuple(sorted(((int(t), int(c)) for t, c in pairs), reverse=True))
        if not norm:
            raise ValueError("profile needs at least one component")
        for t, c in norm:
            if c < 1 or t < c:
                raise ValueError(f"component pair ({t}, {c}) violates 1 <= c <= t")
        return cls(norm, sum(t for t, _ in norm))

    @classmethod
    def parse(cls, text: str) -> "ComponentProfile":
        """Parse the CLI grammar, e.g. ``"12:6,4:2,2:1"``."""
        pairs = []
        for item in text.split(","):
            t_str, sep, c_str = item.partition(":")
            if not sep:
                raise ValueError(f"bad profile item {item!r}, expected 't:c'")
            pairs.append((int(t_str), int(c_str)))
        return cls.from_pairs(pairs)

    def to_arg_string(self) -> str:
        return ",".join(f"{t}:{c}" for t, c in self.pairs)

    def to_json_pairs(self) -> list[list[int]]:
        return [[t, c] for t, c in self.pairs]

    @property
    def is_permutation(self) -> bool:
        return all(t == c for t, c in self.pairs)

    def cycle_lengths(self) -> tuple[int, ...]:
        return tuple(c for _, c in self.pairs)


def decompose(f: FunctionTable) -> Decomposition:
    """Split the functional graph of ``f`` into components and coordinates.

    Iterative three-state sweep (unvisited / on the current path / finished)
    with an explicit path list, so deep tails cannot overflow the call stack.
    Every node is pushed and unwound exactly once: O(n) time and space.
    """
    n = f.n
    image = f.image
    comp = [-1] * n          # -1 = unvisited, else final component id
    tail = [0] * n
    pos = [-1] * n
    walk_of = [-1] * n       # start node of the walk that put x on its path
    path_pos = [0] * n
    comps: list[list] = []   # [t, c, depth, cycle_nodes]

    for start in range(n):
        if comp[start] != -1:
            continue
        path: list[int] = []
        x = start
        while True:
            cx = comp[x]
            if cx != -1:
                # hit finished territory: the whole path is tail, hanging off x
                t = tail[x]
                for node in reversed(path):
                    t += 1
                    comp[node] = cx
                    tail[node] = t
                rec = comps[cx]
                rec[0] += len(path)
                if t > rec[2]:
                    rec[2] = t
                break
            if walk_of[x] == start:
                # closed a new cycle: path[j:] loops back to x
                j = path_pos[x]
                cycle = path[j:]
                c = len(cycle)
                a = cycle.index(min(cycle))
                cycle = cycle[a:] + cycle[:a]
                cid = len(comps)
                for p, node in enumerate(cycle):
                    comp[node] = cid
                    pos[node] = p
                t = 0
                for node in reversed(path[:j]):
                    t += 1
                    comp[node] = cid
                    tail[node] = t
                comps.append([len(path), c, t, cycle])
                break
            walk_of[x] = start
            path_pos[x] = len(path)
            path.append(x)
            x = image[x]

    components = tuple(
        Component(cid, rec[0], rec[1], rec[2], tuple(rec[3]))
        for cid, rec in enumerate(comps)
    )
    return Decomposition(n, components, tuple(comp), tuple(tail), tuple(pos))


def iterate(f: FunctionTable, d: Decomposition, x: int, j: int) -> int:
    """Return the j-th iterate of f at x in O(tail length) time.

    Walks the tail explicitly, then jumps the remaining steps around the
    cycle with modular arithmetic, so j may be astronomically large.
    """
    if not 0 <= x < f.n:
        raise ValueError(f"node {x} outside [0, {f.n})")
    if j < 0:
        raise ValueError("iteration count must be nonnegative")
    if d.n != f.n:
        raise ValueError("decomposition does not match the function table")
    image = f.image
    steps = min(j, d.tail_lengths[x])
    for _ in range(steps):
        x = image[x]
    j -= steps
    if j == 0:
        return x
    component = d.components[d.component_ids[x]]
    c = component.c
    return component.cycle_nodes[(d.cycle_positions[x] + j) % c]


def disjoint_union(fs: Sequence[FunctionTable]) -> FunctionTable:
    """Combine maps on disjoint blocks into one map on the concatenated domain.

    Block i occupies indices [offset_i, offset_i + n_i), with its images
    shifted by offset_i; blocks never interact.
    """
    if not fs:
        raise ValueError("disjoint_union needs at least one function")
    image: list[int] = []
    offset = 0
    for f in fs:
        image.extend(y + offset for y in f.image)
        offset += f.n
    return FunctionTable(offset, tuple(image))


def is_permutation(f: FunctionTable) -> bool:
    """True iff the image is a bijection on [0, n)."""
    seen = bytearray(f.n)
    for y in f.image:
        if seen[y]:
            return False
        seen[y] = 1
    return True


def profile_of(d: Decomposition) -> ComponentProfile:
    """The multiset of (t, c) pairs of a decomposition, canonically sorted."""
    counts = Counter((comp.t, comp.c) for comp in d.components)
    pairs = []
    for pair, mult in counts.items():
        pairs.extend([pair] * mult)
    return ComponentProfile.from_pairs(pairs)

"""Directed hypergraphs: reachability and minimal strongly connected components.

Nodes are the integers ``0 .. node_count - 1``.  A hyperedge is a pair
``(tail, head)`` of nonempty node tuples.  ``v`` is reachable from ``u`` when
``u == v`` or some hyperedge whose whole tail is reachable from ``u`` has ``v``
in its head.

Minimal components (those from which no other component is reachable) are
found by :func:`minimal_sccs` in ``O(size(H) * alpha(|N|))``.  The full
partition has no such algorithm and costs one reachability search per node.

Debug text format (test fixtures only)::

    nodes 6
    tail 0 -> head 1
    tail 1 2 -> head 3 4
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


class Hypergraph:
    """Immutable directed hypergraph."""

    __slots__ = ("node_count", "edges", "_incidence")

    def __init__(self, node_count: int, edges: Iterable[tuple[Iterable[int], Iterable[int]]] = ()):
        if node_count < 0:
            raise ValueError("node_count must be nonnegative")
        clean = []
        seen = set()
        for tail, head in edges:
            t = tuple(sorted(set(tail)))
            h = tuple(sorted(set(head)))
            if not t or not h:
                raise ValueError("hyperedges need a nonempty tail and head")
            for v in t + h:
                if not 0 <= v < node_count:
                    raise ValueError(f"node {v} out of range 0..{node_count - 1}")
            if (t, h) not in seen:
                seen.add((t, h))
                clean.append((t, h))
        self.node_count = node_count
        self.edges: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...] = tuple(clean)
        self._incidence = None

    @property
    def size(self) -> int:
        return self.node_count + sum(len(t) + len(h) for t, h in self.edges)

    def tail_incidence(self) -> list[list[int]]:
        """For every node, the indices of the hyperedges having it in their tail."""
        if self._incidence is None:
            inc: list[list[int]] = [[] for _ in range(self.node_count)]
            for k, (t, _) in enumerate(self.edges):
                for v in t:
                    inc[v].append(k)
            self._incidence = inc
        return self._incidence

    def with_edges(self, extra) -> "Hypergraph":
        return Hypergraph(self.node_count, list(self.edges) + list(extra))

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.node_count == other.node_count and set(self.edges) == set(other.edges)

    def __hash__(self):
        return hash((self.node_count, frozenset(self.edges)))

    def __repr__(self):
        return f"Hypergraph({self.node_count}, {list(self.edges)!r})"

    def to_text(self) -> str:
        lines = [f"nodes {self.node_count}"]
        for t, h in self.edges:
            lines.append("tail " + " ".join(map(str, t)) + " -> head " + " ".join(map(str, h)))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Hypergraph":
        node_count = None
        edges = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            words = line.split()
            if node_count is None:
                if len(words) != 2 or words[0] != "nodes":
                    raise ValueError(f"line {lineno}: expected 'nodes <k>'")
                node_count = int(words[1])
                continue
            if words[0] != "tail" or "->" not in words:
                raise ValueError(f"line {lineno}: expected 'tail ... -> head ...'")
            arrow = words.index("->")
            if arrow + 1 >= len(words) or words[arrow + 1] != "head":
                raise ValueError(f"line {lineno}: missing 'head'")
            edges.append(([int(w) for w in words[1:arrow]], [int(w) for w in words[arrow + 2:]]))
        if node_count is None:
            raise ValueError("missing 'nodes' header")
        return cls(node_count, edges)


def reachable_from(h: Hypergraph, u: int) -> frozenset[int]:
    """Nodes reachable from ``u``; linear in ``size(h)``."""
    if not 0 <= u < h.node_count:
        raise ValueError(f"node {u} out of range")
    edges = h.edges
    inc = h.tail_incidence()
    missing = [len(t) for t, _ in edges]
    seen = [False] * h.node_count
    seen[u] = True
    todo = [u]
    while todo:
        v = todo.pop()
        for k in inc[v]:
            missing[k] -= 1
            if missing[k] == 0:
                for w in edges[k][1]:
                    if not seen[w]:
                        seen[w] = True
                        todo.append(w)
    return frozenset(i for i, s in enumerate(seen) if s)


class _UnionFind:
    __slots__ = ("parent", "rank")

    def __init__(self, n):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return x
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        self.parent[y] = x
        if self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        return x


_UNSEEN, _OPEN, _DONE = 0, 1, 2


@dataclass
class _Terminal:
    uf: _UnionFind
    roots: list[int]  # one root per final class
    minimal: list[int]  # roots of minimal classes
    class_edges: list[tuple[int, int]]  # (source node, finished target root)


def _contract(h: Hypergraph) -> _Terminal:
    """Contract mutually reachable sets until the class graph is acyclic.

    Path-based depth-first search.  A class is a set of nodes already known to
    be mutually reachable; a hyperedge acts as an ordinary edge leaving a class
    once its whole tail lies in that class.  Open classes form a path on
    ``stack``; their pending head nodes sit in contiguous segments of ``work``
    so merging the top of the path never moves data.

    A hyperedge becomes usable when its last tail node is visited (single-node
    tails) or when the open classes holding its tail get merged.  In the latter
    case it waits on the class of its first visited tail node: any merge
    swallowing that class reaches up to the top of the path and so covers
    every still-open tail node.  Tail nodes in finished classes kill the edge.
    """
    n = h.node_count
    edges = h.edges
    inc = h.tail_incidence()
    uf = _UnionFind(n)
    find = uf.find
    state = [_UNSEEN] * n
    first = [-1] * len(edges)
    seen_tail = [0] * len(edges)
    where = [-1] * n  # stack position of an open class root
    # stack entries: [root, work segment start, waiting edges, non-minimal flag]
    stack: list[list] = []
    work: list[int] = []
    minimal: list[int] = []
    class_edges: list[tuple[int, int]] = []

    def visit(u):
        state[u] = _OPEN
        where[u] = len(stack)
        entry = [u, len(work), [], False]
        stack.append(entry)
        for k in inc[u]:
            if first[k] < 0:
                first[k] = u
            seen_tail[k] += 1
            tail, head = edges[k]
            if seen_tail[k] == len(tail):
                if len(tail) == 1:
                    work.extend(head)
                else:
                    r = find(first[k])
                    if state[r] == _OPEN:
                        stack[where[r]][2].append(k)

    for s in range(n):
        if state[s] != _UNSEEN:
            continue
        visit(s)
        while stack:
            top = stack[-1]
            if len(work) > top[1]:
                w = work.pop()
                if state[w] == _UNSEEN:
                    # re-examined by the parent once the child is settled
                    work.append(w)
                    visit(w)
                    continue
                W = find(w)
                if state[W] == _OPEN:
                    if W != top[0]:
                        j = where[W]
                        merged = stack[j]
                        waiting = merged[2]
                        root = merged[0]
                        nonmin = merged[3]
                        for other in stack[j + 1:]:
                            root = uf.union(root, other[0])
                            waiting.extend(other[2])
                            nonmin = nonmin or other[3]
                        del stack[j + 1:]
                        state[root] = _OPEN
                        where[root] = j
                        merged[0] = root
                        merged[2] = []
                        merged[3] = nonmin
                        for k in waiting:
                            tail, head = edges[k]
                            if all(find(x) == root for x in tail):
                                work.extend(head)
                else:
                    top[3] = True
                    class_edges.append((top[0], W))
            else:
                stack.pop()
                root = top[0]
                state[root] = _DONE
                if not top[3]:
                    minimal.append(root)
    roots = sorted({find(v) for v in range(n)})
    return _Terminal(uf, roots, minimal, class_edges)


def _members(t: _Terminal, n: int) -> dict[int, list[int]]:
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(t.uf.find(v), []).append(v)
    return groups


def minimal_sccs(h: Hypergraph) -> list[frozenset[int]]:
    """The minimal strongly connected components, sorted by smallest node."""
    t = _contract(h)
    groups = _members(t, h.node_count)
    return sorted((frozenset(groups[r]) for r in t.minimal), key=min)


def has_least_scc(h: Hypergraph) -> tuple[bool, frozenset[int] | None]:
    """Whether one component is reachable from every node, and which one.

    Uniqueness of the minimal component is checked first, then leastness is
    verified on the contracted class graph.
    """
    if h.node_count == 0:
        return False, None
    t = _contract(h)
    if len(t.minimal) != 1:
        return False, None
    least = t.minimal[0]
    find = t.uf.find
    preds: dict[int, list[int]] = {}
    for src, dst in t.class_edges:
        preds.setdefault(dst, []).append(find(src))
    reached = {least}
    todo = [least]
    while todo:
        c = todo.pop()
        for p in preds.get(c, ()):
            if p not in reached:
                reached.add(p)
                todo.append(p)
    if len(reached) != len(t.roots):
        return False, None
    return True, frozenset(v for v in range(h.node_count) if find(v) == least)


@dataclass(frozen=True)
class SccPartition:
    """Strongly connected components with their order.

    ``components[i] <= components[j]`` (``precedes(i, j)``) when the nodes of
    component ``j`` reach those of component ``i``.
    """

    components: tuple[frozenset[int], ...]
    below: tuple[frozenset[int], ...] = field(repr=False)  # indices reachable from each component
    minimal: tuple[frozenset[int], ...]

    def precedes(self, i: int, j: int) -> bool:
        return i in self.below[j]

    def index_of(self, node: int) -> int:
        for i, c in enumerate(self.components):
            if node in c:
                return i
        raise ValueError(f"unknown node {node}")


def partition_from_reach(n: int, reach: Sequence[frozenset[int]]) -> tuple[tuple[frozenset[int], ...], tuple[frozenset[int], ...]]:
    """Group nodes by mutual reachability; return components and their down-sets."""
    comp_of = [-1] * n
    comps: list[frozenset[int]] = []
    for v in range(n):
        if comp_of[v] >= 0:
            continue
        c = frozenset(w for w in reach[v] if v in reach[w])
        for w in c:
            comp_of[w] = len(comps)
        comps.append(c)
    below = tuple(frozenset(comp_of[w] for w in reach[min(c)]) for c in comps)
    return tuple(comps), below


def scc_partition(h: Hypergraph) -> SccPartition:
    """Exact component partition; the minimal ones come from :func:`minimal_sccs`."""
    reach = [reachable_from(h, v) for v in range(h.node_count)]
    comps, below = partition_from_reach(h.node_count, reach)
    return SccPartition(comps, below, tuple(minimal_sccs(h)))

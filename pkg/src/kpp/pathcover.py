"""Spanning subgraphs of maximum degree two, split into path and cycle components."""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Edge, norm_edge


class CoverError(ValueError):
    pass


@dataclass(frozen=True)
class CoverComponent:
    kind: str  # "path" or "cycle"
    order: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.order)

    @property
    def is_cycle(self) -> bool:
        return self.kind == "cycle"

    def edges(self) -> list[Edge]:
        o = self.order
        es = [norm_edge(a, b) for a, b in zip(o, o[1:])]
        if self.is_cycle:
            es.append(norm_edge(o[-1], o[0]))
        return es

    @property
    def num_edges(self) -> int:
        return len(self.order) - (0 if self.is_cycle else 1)


def canonical_path(seq) -> tuple[int, ...]:
    seq = tuple(seq)
    return seq if seq[0] <= seq[-1] else seq[::-1]


def canonical_cycle(seq) -> tuple[int, ...]:
    """Rotate to the smallest vertex, then walk toward its smaller neighbor."""
    seq = list(seq)
    i = seq.index(min(seq))
    rot = seq[i:] + seq[:i]
    if len(rot) > 2 and rot[-1] < rot[1]:
        rot = [rot[0]] + rot[1:][::-1]
    return tuple(rot)


@dataclass(frozen=True)
class PathCycleCover:
    n: int
    edges: frozenset
    components: tuple[CoverComponent, ...] = field(compare=False)
    comp_of: tuple[int, ...] = field(compare=False)

    @classmethod
    def from_edges(cls, n: int, edges) -> "PathCycleCover":
        es = frozenset(norm_edge(u, v) for u, v in edges)
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in es:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise CoverError(f"bad edge ({u}, {v})")
            nbrs[u].append(v)
            nbrs[v].append(u)
        for v in range(n):
            if len(nbrs[v]) > 2:
                raise CoverError(f"vertex {v} has degree {len(nbrs[v])} > 2")
            nbrs[v].sort()
        comp_of = [-1] * n
        comps: list[CoverComponent] = []
        # paths first from their endpoints, then leftover cycles; ids follow min vertex
        found = []
        seen = [False] * n
        for s in range(n):
            if seen[s] or len(nbrs[s]) == 2:
                continue
            seq = [s]
            seen[s] = True
            prev, cur = -1, s
            while True:
                nxt = [w for w in nbrs[cur] if w != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                seen[cur] = True
                seq.append(cur)
            found.append(CoverComponent("path", canonical_path(seq)))
        for s in range(n):
            if seen[s]:
                continue
            seq = [s]
            seen[s] = True
            prev, cur = s, nbrs[s][0]
            while cur != s:
                seen[cur] = True
                seq.append(cur)
                a, b = nbrs[cur]
                prev, cur = cur, (b if a == prev else a)
            if len(seq) < 3:
                raise CoverError("degenerate cycle")
            found.append(CoverComponent("cycle", canonical_cycle(seq)))
        found.sort(key=lambda c: min(c.order))
        for cid, comp in enumerate(found):
            comps.append(comp)
            for v in comp.order:
                comp_of[v] = cid
        return cls(n, es, tuple(comps), tuple(comp_of))

    @classmethod
    def empty(cls, n: int) -> "PathCycleCover":
        return cls.from_edges(n, ())

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def is_triangle_free(self) -> bool:
        return all(not (c.is_cycle and c.size == 3) for c in self.components)

    def cycles(self, sizes=None) -> list[CoverComponent]:
        return [c for c in self.components if c.is_cycle and (sizes is None or c.size in sizes)]

    def validate(self, g=None) -> None:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
            if g is not None and not g.has_edge(u, v):
                raise CoverError(f"cover edge ({u}, {v}) missing from graph")
        if max(deg, default=0) > 2:
            raise CoverError("degree above two")
        total = sum(c.num_edges for c in self.components)
        if total != len(self.edges):
            raise CoverError("component classification disagrees with edge set")

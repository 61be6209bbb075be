"""Dynkin diagram combinatorics used by the translation-quiver machinery.

Conventions: nodes are 1..n.  Type A is the chain 1-2-...-n.  Type D puts a
fork at node n-2: the chain 1-...-(n-2) plus edges to n-1 and n; for n = 3
this degenerates to the A3 shape with center 1 (the D3 = A3 convention).
Type E uses Bourbaki numbering (chain 1-3-4-5-6-7-8, node 2 attached to 4).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property


@dataclass(frozen=True)
class DynkinDiagram:
    kind: str
    rank: int

    def __post_init__(self):
        if self.kind == "A":
            if self.rank < 1:
                raise ValueError("A_n needs n >= 1")
        elif self.kind == "D":
            if self.rank < 3:
                raise ValueError("D_n needs n >= 3 (D3 = A3)")
        elif self.kind == "E":
            if self.rank not in (6, 7, 8):
                raise ValueError("E_n needs n in {6,7,8}")
        else:
            raise ValueError(f"unknown diagram kind {self.kind!r}")

    @classmethod
    def parse(cls, label: str) -> "DynkinDiagram":
        label = label.strip().upper()
        return cls(label[0], int(label[1:]))

    @property
    def label(self) -> str:
        return f"{self.kind}{self.rank}"

    def nodes(self) -> list[int]:
        return list(range(1, self.rank + 1))

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        n = self.rank
        if self.kind == "A":
            return tuple((i, i + 1) for i in range(1, n))
        if self.kind == "D":
            chain = [(i, i + 1) for i in range(1, n - 2)]
            return tuple(chain + [(n - 2, n - 1), (n - 2, n)])
        # E: Bourbaki
        chain = [(1, 3), (3, 4), (4, 5), (5, 6)]
        if n >= 7:
            chain.append((6, 7))
        if n == 8:
            chain.append((7, 8))
        chain.append((2, 4))
        return tuple(sorted(chain))

    @cached_property
    def neighbors(self) -> dict[int, tuple[int, ...]]:
        nbr: dict[int, list[int]] = {i: [] for i in self.nodes()}
        for i, j in self.edges:
            nbr[i].append(j)
            nbr[j].append(i)
        return {i: tuple(sorted(v)) for i, v in nbr.items()}

    @cached_property
    def coloring(self) -> dict[int, int]:
        """Proper 2-coloring with color(1) = 0 (trees are bipartite)."""
        color = {1: 0}
        stack = [1]
        while stack:
            i = stack.pop()
            for j in self.neighbors[i]:
                if j not in color:
                    color[j] = 1 - color[i]
                    stack.append(j)
        return color

    @cached_property
    def automorphism(self) -> dict[int, int]:
        """The distinguished order-<=2 diagram automorphism (identity when
        none is supported)."""
        n = self.rank
        if self.kind == "D":
            phi = {i: i for i in self.nodes()}
            phi[n - 1], phi[n] = n, n - 1
            return phi
        if self.kind == "A":
            if n % 2 == 0:
                # the flip of an even chain swaps the two colors; it does not
                # act slice-wise on the translation quiver, so it is not offered
                return {i: i for i in self.nodes()}
            return {i: n + 1 - i for i in self.nodes()}
        if self.kind == "E" and n == 6:
            return {1: 6, 6: 1, 3: 5, 5: 3, 4: 4, 2: 2}
        return {i: i for i in self.nodes()}

    @property
    def coxeter_number(self) -> int:
        if self.kind == "A":
            return self.rank + 1
        if self.kind == "D":
            return 2 * self.rank - 2
        return {6: 12, 7: 18, 8: 30}[self.rank]

    @property
    def positive_roots(self) -> int:
        return self.rank * self.coxeter_number // 2

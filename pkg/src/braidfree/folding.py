"""
Stallings folding with coordinate tracking.

Given words B_1..B_k in a free group F(X), ``SubgroupGraph`` folds the
bouquet of loops spelling the B_j and keeps, on every edge, a word in the
free group F(Y) on symbols y_1..y_k.  The invariant is that the product of
the edge coordinates along any closed path at the base vertex is the
expression, in the y's, of the element the path spells.  Reading a word
through the folded graph therefore both decides membership in <B_1..B_k>
and rewrites the word in that generating set (assumed to be free).
"""

from __future__ import annotations

from collections import defaultdict
from typing import Sequence

from .errors import NotInSubgroup
from .freewords import Letters, inverse_letters, mul_letters, reduce_letters


class SubgroupGraph:
    def __init__(self, gens: Sequence[Sequence[int]]) -> None:
        # edge id -> [src, positive label, dst, coordinate along src -> dst]
        self._edges: dict[int, list] = {}
        self._next_vertex = 1
        self._next_edge = 0
        self.base = 0
        for k, raw in enumerate(gens):
            word = reduce_letters(raw)
            if not word:
                continue
            v = self.base
            for pos, a in enumerate(word):
                last = pos == len(word) - 1
                w = self.base if last else self._new_vertex()
                coord: Letters = (k + 1,) if pos == 0 else ()
                if a > 0:
                    self._add_edge(v, a, w, coord)
                else:
                    self._add_edge(w, -a, v, inverse_letters(coord))
                v = w
        self._fold()

    def _new_vertex(self) -> int:
        v = self._next_vertex
        self._next_vertex += 1
        return v

    def _add_edge(self, src: int, label: int, dst: int, coord: Letters) -> None:
        self._edges[self._next_edge] = [src, label, dst, coord]
        self._next_edge += 1

    def _half_edges(self) -> dict[tuple[int, int], list[tuple[int, int]]]:
        """(vertex, signed label) -> [(edge id, direction)]."""
        table: dict[tuple[int, int], list[tuple[int, int]]] = defaultdict(list)
        for eid, (src, label, dst, _) in self._edges.items():
            table[(src, label)].append((eid, 1))
            table[(dst, -label)].append((eid, -1))
        return table

    def _step(self, eid: int, direction: int) -> tuple[int, Letters]:
        src, _, dst, coord = self._edges[eid]
        return (dst, coord) if direction > 0 else (src, inverse_letters(coord))

    def _fold(self) -> None:
        while True:
            clash = next((hs for hs in self._half_edges().values() if len(hs) > 1), None)
            if clash is None:
                return
            (e1, d1), (e2, d2) = clash[0], clash[1]
            w1, c1 = self._step(e1, d1)
            w2, c2 = self._step(e2, d2)
            del self._edges[e2]
            if w1 == w2:
                continue
            if w2 == self.base:
                w1, w2, c1, c2 = w2, w1, c2, c1
            shift = mul_letters(inverse_letters(c1), c2)
            unshift = inverse_letters(shift)
            for edge in self._edges.values():
                if edge[0] == w2:
                    edge[3] = mul_letters(shift, edge[3])
                    edge[0] = w1
                if edge[2] == w2:
                    edge[3] = mul_letters(edge[3], unshift)
                    edge[2] = w1

    def express(self, word: Sequence[int]) -> Letters:
        """The y-word for ``word``; raises NotInSubgroup if there is none."""
        table = {key: hs[0] for key, hs in self._half_edges().items()}
        v = self.base
        out: Letters = ()
        for a in reduce_letters(word):
            half = table.get((v, a))
            if half is None:
                raise NotInSubgroup("the word leaves the folded subgroup graph")
            v, coord = self._step(*half)
            out = mul_letters(out, coord)
        if v != self.base:
            raise NotInSubgroup("the word does not return to the base vertex")
        return out

    def contains(self, word: Sequence[int]) -> bool:
        try:
            self.express(word)
        except NotInSubgroup:
            return False
        return True

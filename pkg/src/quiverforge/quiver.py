"""Quivers, paths and the JSON/DOT interchange formats.

Composition convention
----------------------
Paths compose LEFT TO RIGHT: in the path ``a1 a2 ... an`` consecutive arrows
satisfy ``target(a_j) == source(a_{j+1})``; the walk starts at
``source(a1)`` and ends at ``target(an)``.  Under this convention a product
``alpha * rho`` is a cycle when ``rho`` walks from ``target(alpha)`` back to
``source(alpha)``.  The opposite convention silently swaps the blocks
``e_j A e_i``, so it is fixed globally here.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional


class QuiverFormatError(ValueError):
    """Malformed quiver document (duplicate ids, unknown endpoints...)."""


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Path:
    """A path in a quiver: a start vertex plus a tuple of arrow names.

    The empty tuple is the trivial path ``e_{start}``.  Paths are plain
    values; validity (composability of consecutive arrows) is enforced by the
    :class:`Quiver` constructors that produce them.
    """

    start: str
    arrows: tuple[str, ...]

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    def sort_key(self):
        # length-then-lex; the start vertex disambiguates trivial paths
        return (len(self.arrows), self.arrows, self.start)

    def __repr__(self):
        if not self.arrows:
            return f"e_{self.start}"
        return "*".join(self.arrows)


class Quiver:
    """A finite quiver with string vertex and arrow ids.

    Immutable after construction; all derived orderings are deterministic
    (length-then-lex).
    """

    def __init__(self, vertices: Iterable[str], arrows: Iterable):
        self.vertices: tuple[str, ...] = tuple(str(v) for v in vertices)
        arrs = []
        for a in arrows:
            if isinstance(a, Arrow):
                arrs.append(a)
            else:
                name, src, tgt = a
                arrs.append(Arrow(str(name), str(src), str(tgt)))
        self.arrows: tuple[Arrow, ...] = tuple(arrs)

        if len(set(self.vertices)) != len(self.vertices):
            dup = sorted({v for v in self.vertices if self.vertices.count(v) > 1})
            raise QuiverFormatError(f"duplicate vertex id {dup[0]!r}")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            dup = sorted({n for n in names if names.count(n) > 1})
            raise QuiverFormatError(f"duplicate arrow id {dup[0]!r}")
        vset = set(self.vertices)
        for a in self.arrows:
            if a.source not in vset or a.target not in vset:
                raise QuiverFormatError(
                    f"arrow {a.name!r}: endpoint {a.source!r}->{a.target!r} not in vertex list")

        self._arrow: dict[str, Arrow] = {a.name: a for a in self.arrows}
        self._out: dict[str, list[str]] = {v: [] for v in self.vertices}
        for a in self.arrows:
            self._out[a.source].append(a.name)
        for v in self._out:
            self._out[v].sort()

    # -- basic lookups ----------------------------------------------------

    def arrow(self, name: str) -> Arrow:
        try:
            return self._arrow[name]
        except KeyError:
            raise QuiverFormatError(f"unknown arrow id {name!r}") from None

    def has_vertex(self, v: str) -> bool:
        return v in self._out

    def out_arrows(self, v: str) -> list[str]:
        return list(self._out[v])

    # -- paths -------------------------------------------------------------

    def trivial_path(self, v: str) -> Path:
        if v not in self._out:
            raise QuiverFormatError(f"unknown vertex id {v!r}")
        return Path(v, ())

    def path(self, start: str, arrows: Iterable[str]) -> Path:
        """Validated path constructor."""
        arrows = tuple(arrows)
        if start not in self._out:
            raise QuiverFormatError(f"unknown vertex id {start!r}")
        at = start
        for name in arrows:
            a = self.arrow(name)
            if a.source != at:
                raise QuiverFormatError(
                    f"arrow {name!r} starts at {a.source!r}, walk is at {at!r}")
            at = a.target
        return Path(start, arrows)

    def path_end(self, p: Path) -> str:
        if not p.arrows:
            return p.start
        return self.arrow(p.arrows[-1]).target

    def is_cycle(self, p: Path) -> bool:
        return self.path_end(p) == p.start

    def compose(self, p: Path, q: Path) -> Optional[Path]:
        """Concatenation ``p`` then ``q``; None when the walks do not meet."""
        for name in p.arrows + q.arrows:
            self.arrow(name)
        if self.path_end(p) != q.start:
            return None
        return Path(p.start, p.arrows + q.arrows)

    def rotate_cycle(self, p: Path) -> Path:
        """One-step rotation a1...an -> an a1...a_{n-1} of a cycle."""
        if not self.is_cycle(p) or p.is_trivial:
            return p
        last = self.arrow(p.arrows[-1])
        return Path(last.source, (p.arrows[-1],) + p.arrows[:-1])

    def canonical_rotation(self, p: Path) -> Path:
        """Lex-minimal rotation representative of a cycle."""
        if not self.is_cycle(p):
            raise QuiverFormatError(f"{p!r} is not a cycle")
        best = p
        cur = p
        for _ in range(p.length):
            cur = self.rotate_cycle(cur)
            if cur.sort_key() < best.sort_key():
                best = cur
        return best

    def enumerate_paths(self, frm: str, to: str, max_len: int) -> list[Path]:
        """All paths frm -> to of length < max_len, in length-then-lex order."""
        if frm not in self._out:
            raise QuiverFormatError(f"unknown vertex id {frm!r}")
        if to not in self._out:
            raise QuiverFormatError(f"unknown vertex id {to!r}")
        found: list[Path] = []
        frontier: list[Path] = [Path(frm, ())]
        length = 0
        while frontier and length < max_len:
            for p in frontier:
                if self.path_end(p) == to:
                    found.append(p)
            nxt = []
            for p in frontier:
                end = self.path_end(p)
                for name in self._out[end]:
                    nxt.append(Path(frm, p.arrows + (name,)))
            nxt.sort(key=Path.sort_key)
            frontier = nxt
            length += 1
        return found

    def paths_from(self, frm: str, max_len: int) -> list[Path]:
        """All paths starting at frm of length < max_len."""
        out = []
        for to in self.vertices:
            out.extend(self.enumerate_paths(frm, to, max_len))
        out.sort(key=Path.sort_key)
        return out

    def paths_into(self, to: str, max_len: int) -> list[Path]:
        out = []
        for frm in self.vertices:
            out.extend(self.enumerate_paths(frm, to, max_len))
        out.sort(key=Path.sort_key)
        return out

    def all_paths(self, max_len: int) -> list[Path]:
        out = []
        for frm in self.vertices:
            out.extend(self.paths_from(frm, max_len))
        out.sort(key=Path.sort_key)
        return out

    def cycles_of_length(self, d: int) -> list[Path]:
        out = [p for v in self.vertices
               for p in self.enumerate_paths(v, v, d + 1) if p.length == d]
        out.sort(key=Path.sort_key)
        return out

    # -- interchange --------------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "arrows": [{"id": a.name, "from": a.source, "to": a.target}
                       for a in self.arrows],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Quiver":
        try:
            vertices = obj["vertices"]
            arrows = [(a["id"], a["from"], a["to"]) for a in obj["arrows"]]
        except (KeyError, TypeError) as exc:
            raise QuiverFormatError(f"malformed quiver document: {exc}") from None
        return cls(vertices, arrows)

    def to_dot(self) -> str:
        lines = ["digraph quiver {"]
        for v in self.vertices:
            lines.append(f'  "{v}";')
        for a in self.arrows:
            lines.append(f'  "{a.source}" -> "{a.target}" [label="{a.name}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __eq__(self, other):
        return (isinstance(other, Quiver) and self.vertices == other.vertices
                and self.arrows == other.arrows)

    def __hash__(self):
        return hash((self.vertices, self.arrows))

    def __repr__(self):
        return f"Quiver({len(self.vertices)} vertices, {len(self.arrows)} arrows)"


def emit_quiver_json(q: Quiver) -> str:
    return json.dumps(q.to_json_obj(), indent=2, sort_keys=True) + "\n"


def parse_quiver_json(text: str) -> Quiver:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise QuiverFormatError(f"malformed JSON at line {exc.lineno}: {exc.msg}") from None
    return Quiver.from_json_obj(obj)


def emit_dot(q: Quiver) -> str:
    return q.to_dot()


# -- stock quivers ----------------------------------------------------------

def cycle_quiver(m: int) -> Quiver:
    """The m-cycle: vertices 1..m, arrows a_i : i -> i+1 (indices mod m)."""
    if m < 1:
        raise ValueError("cycle quiver needs m >= 1")
    vertices = [str(i) for i in range(1, m + 1)]
    arrows = [(f"a{i}", str(i), str(i % m + 1)) for i in range(1, m + 1)]
    return Quiver(vertices, arrows)


def loop_quiver(arrow_name: str = "b") -> Quiver:
    """One vertex with a single loop."""
    return Quiver(["1"], [(arrow_name, "1", "1")])


def g2_quiver() -> Quiver:
    """Two vertices, an arrow 1 -> 2 and a loop at 2."""
    return Quiver(["1", "2"], [("a", "1", "2"), ("b", "2", "2")])

"""The truncated completed path algebra and its noncommutative calculus.

An :class:`AlgebraElement` represents a class in `A / m^N` where `A` is the
completed path algebra of a quiver and `m` the arrow ideal: a sparse map from
paths of length < N to nonzero scalars.  Binary operations truncate at the
minimum of the two orders; degree-lowering operators (cyclic derivative,
double derivation) return order N-1, which is all the input class determines.

Operators provided: multiplication and commutators, the rotation `sigma`,
the norm map, cyclic derivatives, double derivations `Delta_a`, the pairing
`diamond` with ``(u (x) v) <> y = v*y*u``, and continuous substitutions.
"""
from __future__ import annotations

from typing import Callable, Iterable, Optional

from .fields import Field, FieldMismatchError, Scalar
from .quiver import Path, Quiver


class QuiverMismatchError(ValueError):
    pass


class SupportError(ValueError):
    """Element supported outside the required set of paths (e.g. non-cycles)."""


def _require_compatible(a: "AlgebraElement", b: "AlgebraElement"):
    if a.quiver != b.quiver:
        raise QuiverMismatchError("operands live over different quivers")
    if a.field != b.field:
        raise FieldMismatchError(f"mixed fields {a.field} and {b.field}")


class AlgebraElement:
    """Element of the completed path algebra, exact modulo paths of length >= trunc."""

    __slots__ = ("quiver", "field", "trunc", "terms")

    def __init__(self, quiver: Quiver, field: Field, trunc: int,
                 terms: Optional[dict[Path, Scalar]] = None, _normalized=False):
        if trunc < 1:
            raise ValueError("truncation order must be >= 1")
        self.quiver = quiver
        self.field = field
        self.trunc = trunc
        if terms is None:
            terms = {}
        if not _normalized:
            clean: dict[Path, Scalar] = {}
            for p, c in terms.items():
                c = field(c)
                if p.length >= trunc or not c:
                    continue
                clean[p] = c
            terms = clean
        self.terms = terms

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, quiver: Quiver, field: Field, trunc: int) -> "AlgebraElement":
        return cls(quiver, field, trunc, {}, _normalized=True)

    @classmethod
    def one(cls, quiver: Quiver, field: Field, trunc: int) -> "AlgebraElement":
        """The unit 1 = sum of all trivial paths."""
        return cls(quiver, field, trunc,
                   {quiver.trivial_path(v): field.one for v in quiver.vertices},
                   _normalized=True)

    @classmethod
    def idempotent(cls, quiver: Quiver, field: Field, trunc: int, v: str) -> "AlgebraElement":
        return cls(quiver, field, trunc, {quiver.trivial_path(v): field.one},
                   _normalized=True)

    @classmethod
    def from_path(cls, quiver: Quiver, field: Field, trunc: int, path: Path,
                  coeff=1) -> "AlgebraElement":
        return cls(quiver, field, trunc, {path: field(coeff)})

    @classmethod
    def from_word(cls, quiver: Quiver, field: Field, trunc: int, start: str,
                  arrows: Iterable[str], coeff=1) -> "AlgebraElement":
        return cls.from_path(quiver, field, trunc, quiver.path(start, arrows), coeff)

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, p: Path) -> Scalar:
        return self.terms.get(p, self.field.zero)

    def min_degree(self) -> Optional[int]:
        """Smallest support length, or None for the zero element."""
        if not self.terms:
            return None
        return min(p.length for p in self.terms)

    def max_degree(self) -> Optional[int]:
        if not self.terms:
            return None
        return max(p.length for p in self.terms)

    def homogeneous_component(self, d: int) -> "AlgebraElement":
        return AlgebraElement(self.quiver, self.field, self.trunc,
                              {p: c for p, c in self.terms.items() if p.length == d},
                              _normalized=True)

    def is_homogeneous(self) -> bool:
        degs = {p.length for p in self.terms}
        return len(degs) <= 1

    def support_is_cycles(self) -> bool:
        return all(self.quiver.is_cycle(p) for p in self.terms)

    def truncate(self, n: int) -> "AlgebraElement":
        if n > self.trunc:
            raise ValueError(f"cannot extend truncation {self.trunc} to {n}")
        return AlgebraElement(self.quiver, self.field, n,
                              {p: c for p, c in self.terms.items() if p.length < n},
                              _normalized=True)

    def with_truncation(self, n: int) -> "AlgebraElement":
        """Reinterpret the representative at order n.  Raising the order is a
        caller-side claim (e.g. a product with the arrow ideal is determined
        one order beyond its factors); lowering it truncates."""
        if n <= self.trunc:
            return self.truncate(n)
        return AlgebraElement(self.quiver, self.field, n, dict(self.terms),
                              _normalized=True)

    def block(self, i: str, j: str) -> "AlgebraElement":
        """The component e_i * x * e_j: terms walking i -> j."""
        return AlgebraElement(
            self.quiver, self.field, self.trunc,
            {p: c for p, c in self.terms.items()
             if p.start == i and self.quiver.path_end(p) == j},
            _normalized=True)

    def sorted_terms(self) -> list[tuple[Path, Scalar]]:
        return sorted(self.terms.items(), key=lambda t: t[0].sort_key())

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        _require_compatible(self, other)
        n = min(self.trunc, other.trunc)
        terms = {p: c for p, c in self.terms.items() if p.length < n}
        for p, c in other.terms.items():
            if p.length >= n:
                continue
            s = terms.get(p)
            c = c if s is None else s + c
            if c:
                terms[p] = c
            elif s is not None:
                del terms[p]
        return AlgebraElement(self.quiver, self.field, n, terms, _normalized=True)

    def __neg__(self):
        return AlgebraElement(self.quiver, self.field, self.trunc,
                              {p: -c for p, c in self.terms.items()}, _normalized=True)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "AlgebraElement":
        c = self.field(c)
        if not c:
            return AlgebraElement.zero(self.quiver, self.field, self.trunc)
        return AlgebraElement(self.quiver, self.field, self.trunc,
                              {p: c * v for p, v in self.terms.items()}, _normalized=True)

    def __mul__(self, other):
        if isinstance(other, Scalar) or isinstance(other, int):
            return self.scale(other)
        _require_compatible(self, other)
        n = min(self.trunc, other.trunc)
        terms: dict[Path, Scalar] = {}
        q = self.quiver
        for p1, c1 in self.terms.items():
            e1 = q.path_end(p1)
            for p2, c2 in other.terms.items():
                if p1.length + p2.length >= n or p2.start != e1:
                    continue
                p = Path(p1.start, p1.arrows + p2.arrows)
                c = c1 * c2
                s = terms.get(p)
                c = c if s is None else s + c
                if c:
                    terms[p] = c
                elif s is not None:
                    del terms[p]
        return AlgebraElement(self.quiver, self.field, n, terms, _normalized=True)

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined")
        out = AlgebraElement.one(self.quiver, self.field, self.trunc)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return (isinstance(other, AlgebraElement)
                and self.quiver == other.quiver
                and self.field == other.field
                and self.trunc == other.trunc
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.quiver, self.field, self.trunc,
                     frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for p, c in self.sorted_terms():
            if c == self.field.one:
                bits.append(f"{p!r}")
            else:
                bits.append(f"{c}*{p!r}")
        return " + ".join(bits)

    # -- interchange ---------------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "field": self.field.name,
            "trunc": self.trunc,
            "terms": [{"coeff": str(c), "start": p.start, "path": list(p.arrows)}
                      for p, c in self.sorted_terms()],
        }

    @classmethod
    def from_json_obj(cls, quiver: Quiver, obj: dict,
                      field: Optional[Field] = None) -> "AlgebraElement":
        from .fields import field_from_name
        if field is None:
            field = field_from_name(obj["field"])
        trunc = int(obj["trunc"])
        terms: dict[Path, Scalar] = {}
        for t in obj.get("terms", []):
            p = quiver.path(t["start"], t["path"])
            c = field.parse(str(t["coeff"]))
            if p in terms:
                c = terms[p] + c
            terms[p] = c
        return cls(quiver, field, trunc, terms)


# -- the calculus -------------------------------------------------------------

def commutator(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a * b - b * a


def sigma(a: AlgebraElement) -> AlgebraElement:
    """Linear extension of the one-step cycle rotation; kills non-cycles."""
    q = a.quiver
    terms: dict[Path, Scalar] = {}
    for p, c in a.terms.items():
        if not q.is_cycle(p):
            continue
        rp = q.rotate_cycle(p)
        s = terms.get(rp)
        c2 = c if s is None else s + c
        if c2:
            terms[rp] = c2
        elif s is not None:
            del terms[rp]
    return AlgebraElement(q, a.field, a.trunc, terms, _normalized=True)


def norm_map(a: AlgebraElement) -> AlgebraElement:
    """Sum of all rotations of each cycle; trivial paths and non-cycles map to 0.

    Rotations of a non-cycle are not walks, so the map is the continuous
    extension by zero off the cycle span (where it lifts Connes' B).
    """
    q = a.quiver
    out = AlgebraElement.zero(q, a.field, a.trunc)
    for p, c in a.terms.items():
        if p.is_trivial or not q.is_cycle(p):
            continue
        cur = p
        acc: dict[Path, Scalar] = {}
        for _ in range(p.length):
            s = acc.get(cur)
            acc[cur] = c if s is None else s + c
            cur = q.rotate_cycle(cur)
        out = out + AlgebraElement(q, a.field, a.trunc, acc)
    return out


def cyclic_derivative(a: AlgebraElement, arrow: str) -> AlgebraElement:
    """d_arrow: sums the rotations of each cycle starting right after `arrow`.

    Input must be supported on cycles (a potential); otherwise SupportError.
    """
    q = a.quiver
    q.arrow(arrow)
    n = max(1, a.trunc - 1)
    terms: dict[Path, Scalar] = {}
    for p, c in a.terms.items():
        if not q.is_cycle(p):
            raise SupportError(f"potential expected: {p!r} is not a cycle")
        for j, name in enumerate(p.arrows):
            if name != arrow:
                continue
            rest = p.arrows[j + 1:] + p.arrows[:j]
            start = q.arrow(arrow).target
            rp = Path(start, rest)
            if rp.length >= n:
                continue
            s = terms.get(rp)
            c2 = c if s is None else s + c
            if c2:
                terms[rp] = c2
            elif s is not None:
                del terms[rp]
    return AlgebraElement(q, a.field, n, terms, _normalized=True)


class TensorElement:
    """Finite sum of elementary tensors u (x) v over a path algebra."""

    __slots__ = ("quiver", "field", "trunc", "terms")

    def __init__(self, quiver: Quiver, field: Field, trunc: int,
                 terms: Optional[dict[tuple[Path, Path], Scalar]] = None):
        self.quiver = quiver
        self.field = field
        self.trunc = trunc
        clean: dict[tuple[Path, Path], Scalar] = {}
        for k, c in (terms or {}).items():
            c = field(c)
            if c:
                clean[k] = c
        self.terms = clean

    def is_zero(self):
        return not self.terms

    def diamond(self, y: AlgebraElement) -> AlgebraElement:
        """Bilinear extension of (u (x) v) <> y = v * y * u."""
        if y.quiver != self.quiver or y.field != self.field:
            raise QuiverMismatchError("diamond operands are incompatible")
        n = min(self.trunc, y.trunc)
        out = AlgebraElement.zero(self.quiver, self.field, n)
        for (u, v), c in self.terms.items():
            ev = AlgebraElement.from_path(self.quiver, self.field, n, v)
            eu = AlgebraElement.from_path(self.quiver, self.field, n, u)
            out = out + (ev * y * eu).scale(c)
        return out

    def __eq__(self, other):
        return (isinstance(other, TensorElement) and self.quiver == other.quiver
                and self.field == other.field and self.trunc == other.trunc
                and self.terms == other.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*({u!r} (x) {v!r})"
                          for (u, v), c in sorted(
                              self.terms.items(),
                              key=lambda t: (t[0][0].sort_key(), t[0][1].sort_key())))


def double_derivation(a: AlgebraElement, arrow: str,
                      trunc: Optional[int] = None) -> TensorElement:
    """Delta_arrow(a1...an) = sum over occurrences a_j = arrow of
    (a1...a_{j-1}) (x) (a_{j+1}...an).

    The class of `a` mod m^N determines the result mod total degree N-1,
    the default claim; callers that manage truncation themselves (transport)
    may override `trunc`.
    """
    q = a.quiver
    arr = q.arrow(arrow)
    n = max(1, a.trunc - 1) if trunc is None else trunc
    terms: dict[tuple[Path, Path], Scalar] = {}
    for p, c in a.terms.items():
        at = p.start
        for j, name in enumerate(p.arrows):
            if name == arrow:
                pre = Path(p.start, p.arrows[:j])
                suf = Path(arr.target, p.arrows[j + 1:])
                key = (pre, suf)
                s = terms.get(key)
                c2 = c if s is None else s + c
                if c2:
                    terms[key] = c2
                elif s is not None:
                    del terms[key]
            at = q.arrow(name).target
    return TensorElement(q, a.field, n, terms)


def diamond(t: TensorElement, y: AlgebraElement) -> AlgebraElement:
    return t.diamond(y)


# -- substitutions ------------------------------------------------------------

class Substitution:
    """A continuous algebra homomorphism between completed path algebras.

    Defined by arrow images over a target quiver on the same vertex set.  The
    image of an arrow a: i -> j must be supported on nontrivial paths walking
    i -> j (a constant term would break continuity: the substitution would not
    descend to the truncated quotients).
    """

    def __init__(self, source: Quiver, target: Quiver, field: Field, trunc: int,
                 images: dict[str, AlgebraElement]):
        if set(source.vertices) != set(target.vertices):
            raise QuiverMismatchError("substitution requires equal vertex sets")
        self.source = source
        self.target = target
        self.field = field
        self.trunc = trunc
        self.images: dict[str, AlgebraElement] = {}
        for a in source.arrows:
            img = images.get(a.name)
            if img is None:
                raise ValueError(f"substitution misses arrow {a.name!r}")
            if img.quiver != target or img.field != field:
                raise QuiverMismatchError(f"image of {a.name!r} lives over the wrong algebra")
            for p in img.terms:
                if p.is_trivial:
                    raise SupportError(
                        f"image of {a.name!r} has a constant term; not continuous")
                if p.start != a.source or target.path_end(p) != a.target:
                    raise SupportError(
                        f"image of {a.name!r} must walk {a.source} -> {a.target}, "
                        f"got term {p!r}")
            self.images[a.name] = img.truncate(min(trunc, img.trunc))

    @classmethod
    def identity(cls, quiver: Quiver, field: Field, trunc: int) -> "Substitution":
        images = {a.name: AlgebraElement.from_path(
            quiver, field, trunc, Path(a.source, (a.name,))) for a in quiver.arrows}
        return cls(quiver, quiver, field, trunc, images)

    def apply(self, x: AlgebraElement) -> AlgebraElement:
        if x.quiver != self.source or x.field != self.field:
            raise QuiverMismatchError("substitution argument over the wrong algebra")
        n = min(self.trunc, x.trunc)
        out = AlgebraElement.zero(self.target, self.field, n)
        for p, c in x.terms.items():
            acc = AlgebraElement.idempotent(self.target, self.field, n, p.start)
            for name in p.arrows:
                acc = acc * self.images[name]
                if acc.is_zero():
                    break
            out = out + acc.scale(c)
        return out

    def __call__(self, x: AlgebraElement) -> AlgebraElement:
        return self.apply(x)

    def compose(self, inner: "Substitution") -> "Substitution":
        """self after inner (apply inner first)."""
        if inner.target != self.source:
            raise QuiverMismatchError("composition mismatch")
        n = min(self.trunc, inner.trunc)
        images = {a.name: self.apply(inner.images[a.name]).truncate(
            min(n, self.apply(inner.images[a.name]).trunc))
            for a in inner.source.arrows}
        return Substitution(inner.source, self.target, self.field, n, images)

    def linear_part(self) -> tuple[list[str], list[str], list[list[Scalar]]]:
        """Matrix of the induced map on arrow spans (rows: target arrows)."""
        src = [a.name for a in self.source.arrows]
        tgt = [a.name for a in self.target.arrows]
        rows = []
        for tname in tgt:
            t = self.target.arrow(tname)
            row = []
            for sname in src:
                img = self.images[sname]
                row.append(img.coefficient(Path(t.source, (tname,))))
            rows.append(row)
        return src, tgt, rows

    def is_invertible(self) -> bool:
        """True iff the linear part is a bijection on arrow spans."""
        from .linalg import rank
        src, tgt, rows = self.linear_part()
        if len(src) != len(tgt):
            return False
        return rank(rows, self.field) == len(src)

    def to_json_obj(self) -> dict:
        return {
            "source": self.source.to_json_obj(),
            "target": self.target.to_json_obj(),
            "field": self.field.name,
            "trunc": self.trunc,
            "images": {name: img.to_json_obj()["terms"]
                       for name, img in sorted(self.images.items())},
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Substitution":
        from .fields import field_from_name
        source = Quiver.from_json_obj(obj["source"])
        target = Quiver.from_json_obj(obj["target"])
        field = field_from_name(obj["field"])
        trunc = int(obj["trunc"])
        images = {}
        for name, terms in obj["images"].items():
            images[name] = AlgebraElement.from_json_obj(
                target, {"field": field.name, "trunc": trunc, "terms": terms}, field)
        return cls(source, target, field, trunc, images)


def apply_substitution(phi: Substitution, a: AlgebraElement) -> AlgebraElement:
    return phi.apply(a)

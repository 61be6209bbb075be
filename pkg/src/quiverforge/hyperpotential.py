"""Potentials, hyperpotentials, transport along substitutions, and
(weak) right-equivalence checking.

A hyperpotential on a quiver Q is a family ``rho[a]`` indexed by the arrows,
where ``rho[a]`` walks target(a) -> source(a) (block condition) and the
commutator identity ``sum_a [a, rho[a]] = 0`` holds; both are checked exactly
modulo paths of length >= trunc.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import (AlgebraElement, Substitution, SupportError, commutator,
                      cyclic_derivative, double_derivation)
from .fields import Field
from .quiver import Path, Quiver


class Potential:
    """A linear combination of nontrivial cycles considered up to rotation.

    Stored with every term rotated to its lex-minimal representative, so two
    cyclically-equal inputs produce identical objects.
    """

    def __init__(self, element: AlgebraElement):
        q = element.quiver
        terms = {}
        for p, c in element.terms.items():
            if p.is_trivial or not q.is_cycle(p):
                raise SupportError(f"potential terms must be nontrivial cycles, got {p!r}")
            cp = q.canonical_rotation(p)
            if cp in terms:
                c = terms[cp] + c
            terms[cp] = c
        self.element = AlgebraElement(q, element.field, element.trunc, terms)

    @property
    def quiver(self):
        return self.element.quiver

    @property
    def field(self):
        return self.element.field

    @property
    def trunc(self):
        return self.element.trunc

    def is_zero(self):
        return self.element.is_zero()

    def scale(self, c) -> "Potential":
        return Potential(self.element.scale(c))

    def __add__(self, other: "Potential") -> "Potential":
        return Potential(self.element + other.element)

    def apply_substitution(self, phi: Substitution) -> "Potential":
        return Potential(phi.apply(self.element))

    def __eq__(self, other):
        return isinstance(other, Potential) and self.element == other.element

    def __hash__(self):
        return hash(self.element)

    def __repr__(self):
        return f"Potential({self.element!r})"

    def to_json_obj(self) -> dict:
        return self.element.to_json_obj()

    @classmethod
    def from_json_obj(cls, quiver: Quiver, obj: dict, field=None) -> "Potential":
        return cls(AlgebraElement.from_json_obj(quiver, obj, field))


@dataclass
class CheckReport:
    ok: bool
    residual: Optional[AlgebraElement] = None

    def __bool__(self):
        return self.ok


class Hyperpotential:
    """Arrow-indexed family (rho_a) with the block condition enforced.

    Validity (the commutator identity) is checked by :meth:`check`, not at
    construction: invalid families are legitimate inputs, e.g. for the
    d^2 = 0 equivalence.
    """

    def __init__(self, quiver: Quiver, field: Field, trunc: int,
                 rho: dict[str, AlgebraElement]):
        self.quiver = quiver
        self.field = field
        self.trunc = trunc
        self.rho: dict[str, AlgebraElement] = {}
        for a in quiver.arrows:
            val = rho.get(a.name)
            if val is None:
                val = AlgebraElement.zero(quiver, field, trunc)
            if val.quiver != quiver or val.field != field:
                raise ValueError(f"rho[{a.name!r}] lives over the wrong algebra")
            for p in val.terms:
                if p.start != a.target or quiver.path_end(p) != a.source:
                    raise SupportError(
                        f"rho[{a.name!r}] must walk {a.target} -> {a.source}, "
                        f"got term {p!r}")
            self.rho[a.name] = val.truncate(min(trunc, val.trunc))
        extra = set(rho) - {a.name for a in quiver.arrows}
        if extra:
            raise ValueError(f"rho given for unknown arrows {sorted(extra)}")

    def component(self, arrow: str) -> AlgebraElement:
        return self.rho[arrow]

    def scale(self, c) -> "Hyperpotential":
        return Hyperpotential(self.quiver, self.field, self.trunc,
                              {a: v.scale(c) for a, v in self.rho.items()})

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.rho.values())

    def truncate(self, n: int) -> "Hyperpotential":
        return Hyperpotential(self.quiver, self.field, n,
                              {a: v.truncate(n) for a, v in self.rho.items()})

    def commutator_sum(self) -> AlgebraElement:
        """sum_a [a, rho_a].  Determined modulo m^{trunc+1}: multiplying the
        representatives by single arrows pushes the unknown tails one order up."""
        n = self.trunc + 1
        total = AlgebraElement.zero(self.quiver, self.field, n)
        for a in self.quiver.arrows:
            xa = AlgebraElement.from_path(self.quiver, self.field, n,
                                          Path(a.source, (a.name,)))
            total = total + commutator(xa, self.rho[a.name].with_truncation(n))
        return total

    def check(self) -> CheckReport:
        res = self.commutator_sum()
        return CheckReport(res.is_zero(), res)

    def hh1_element(self) -> AlgebraElement:
        """The invariant element sum_a a * rho_a of the rotation-invariant space."""
        n = self.trunc + 1
        total = AlgebraElement.zero(self.quiver, self.field, n)
        for a in self.quiver.arrows:
            xa = AlgebraElement.from_path(self.quiver, self.field, n,
                                          Path(a.source, (a.name,)))
            total = total + xa * self.rho[a.name].with_truncation(n)
        return total

    def __eq__(self, other):
        return (isinstance(other, Hyperpotential)
                and self.quiver == other.quiver and self.field == other.field
                and self.trunc == other.trunc and self.rho == other.rho)

    def __repr__(self):
        bits = ", ".join(f"{a}: {v!r}" for a, v in sorted(self.rho.items()))
        return f"Hyperpotential({bits})"

    def to_json_obj(self) -> dict:
        return {
            "quiver": self.quiver.to_json_obj(),
            "field": self.field.name,
            "trunc": self.trunc,
            "rho": {a: v.to_json_obj()["terms"] for a, v in sorted(self.rho.items())},
        }

    @classmethod
    def from_json_obj(cls, obj: dict, field=None) -> "Hyperpotential":
        from .fields import field_from_name
        quiver = Quiver.from_json_obj(obj["quiver"])
        if field is None:
            field = field_from_name(obj["field"])
        trunc = int(obj["trunc"])
        rho = {}
        for a, terms in obj["rho"].items():
            rho[a] = AlgebraElement.from_json_obj(
                quiver, {"field": field.name, "trunc": trunc, "terms": terms}, field)
        return cls(quiver, field, trunc, rho)


def check_hyperpotential(h: Hyperpotential) -> CheckReport:
    return h.check()


def from_potential(w: Potential) -> Hyperpotential:
    """The hyperpotential of cyclic derivatives (d_a W)_a.  Always valid."""
    rho = {a.name: cyclic_derivative(w.element, a.name) for a in w.quiver.arrows}
    return Hyperpotential(w.quiver, w.field, max(1, w.trunc - 1), rho)


def transport(phi: Substitution, h: Hyperpotential) -> Hyperpotential:
    """Push a hyperpotential forward along a substitution:

        rho'[b] = sum_a Delta_b(phi(a)) <> phi(rho[a])

    The result is determined modulo m^T with T = min(N_h, N_phi) as long as
    every phi(rho_a) lies in the arrow ideal; a constant term in some rho_a
    (possible only on loops) lowers the claim to N_phi - 1.
    """
    if phi.source != h.quiver or phi.field != h.field:
        raise ValueError("substitution and hyperpotential are incompatible")
    n = min(phi.trunc, h.trunc)
    images = {a.name: phi.apply(h.rho[a.name]) for a in h.quiver.arrows}
    min_deg = min((img.min_degree() for img in images.values()
                   if img.min_degree() is not None), default=None)
    t_out = n if min_deg is None else min(n, phi.trunc - 1 + min_deg)
    rho_out: dict[str, AlgebraElement] = {}
    for b in phi.target.arrows:
        acc = AlgebraElement.zero(phi.target, h.field, n)
        for a in h.quiver.arrows:
            t = double_derivation(phi.images[a.name], b.name, trunc=n)
            if t.is_zero():
                continue
            acc = acc + t.diamond(images[a.name])
        rho_out[b.name] = acc.truncate(t_out)
    return Hyperpotential(phi.target, h.field, t_out, rho_out)


def _common_truncate(h1: Hyperpotential, h2: Hyperpotential):
    n = min(h1.trunc, h2.trunc)
    return h1.truncate(n), h2.truncate(n)


def verify_right_equivalence(phi: Substitution, h: Hyperpotential,
                             h2: Hyperpotential) -> bool:
    """True iff transport(phi, h) == h2 modulo the common truncation."""
    if not phi.is_invertible():
        raise ValueError("substitution is not invertible on arrow spans")
    a, b = _common_truncate(transport(phi, h), h2)
    return a == b


def verify_weak_right_equivalence(phi: Substitution, c, h: Hyperpotential,
                                  h2: Hyperpotential) -> bool:
    """True iff transport(phi, c*h) == h2 for the given unit c."""
    c = h.field(c)
    if not c:
        raise ValueError("weak equivalence requires a unit scalar")
    return verify_right_equivalence(phi, h.scale(c), h2)

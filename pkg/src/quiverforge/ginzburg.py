"""Ginzburg dg-algebra presentations.

For a quiver Q with a family (rho_a), the graded quiver adds a reversed
arrow ``a*`` of degree -1 for each arrow ``a`` and a loop ``t_v`` of degree
-2 at each vertex.  The differential is determined on generators:

    d(a) = 0,   d(a*) = rho_a,   d(t_v) = e_v (sum_b [b, b*]) e_v

and extends by the graded Leibniz rule d(xy) = d(x)y + (-1)^{deg x} x d(y).
``d^2 = 0`` on generators is equivalent to the commutator identity of the
family, which is checked exactly on truncated representatives.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .algebra import AlgebraElement
from .fields import Field, Scalar
from .hyperpotential import CheckReport, Hyperpotential
from .quiver import Arrow, Path, Quiver


def star_name(arrow: str) -> str:
    return arrow + "*"


def t_name(vertex: str) -> str:
    return "t_" + vertex


class GradedQuiver:
    """Base quiver plus degree -1 reversed arrows and degree -2 loops."""

    def __init__(self, base: Quiver):
        self.base = base
        arrows = list(base.arrows)
        degree: dict[str, int] = {a.name: 0 for a in base.arrows}
        for a in base.arrows:
            s = star_name(a.name)
            if s in degree:
                raise ValueError(f"arrow id collision for {s!r}")
            arrows.append(Arrow(s, a.target, a.source))
            degree[s] = -1
        for v in base.vertices:
            t = t_name(v)
            if t in degree:
                raise ValueError(f"arrow id collision for {t!r}")
            arrows.append(Arrow(t, v, v))
            degree[t] = -2
        self.quiver = Quiver(base.vertices, arrows)
        self.degree = degree

    def path_degree(self, p: Path) -> int:
        return sum(self.degree[a] for a in p.arrows)

    def element_degree(self, x: AlgebraElement) -> Optional[int]:
        """Common degree of all terms, or None if mixed/zero."""
        degs = {self.path_degree(p) for p in x.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def to_dot(self) -> str:
        lines = ["digraph graded_quiver {"]
        for v in self.quiver.vertices:
            lines.append(f'  "{v}";')
        for a in self.quiver.arrows:
            lines.append(
                f'  "{a.source}" -> "{a.target}" '
                f'[label="{a.name} ({self.degree[a.name]})"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


class DgPresentation:
    """Finite dg-presentation: graded quiver plus differential values on generators."""

    def __init__(self, graded: GradedQuiver, field: Field, trunc: int,
                 d_values: dict[str, AlgebraElement]):
        self.graded = graded
        self.field = field
        self.trunc = trunc
        self.d_values = d_values

    @property
    def quiver(self) -> Quiver:
        return self.graded.quiver

    def differential(self, x: AlgebraElement) -> AlgebraElement:
        """Graded Leibniz extension of the generator values.

        The output is reported at the input's truncation order; the caller
        owns that claim (it is exact e.g. when every monomial of x has length
        >= 2, which covers the d^2 checks below).
        """
        gq = self.graded
        out = AlgebraElement.zero(self.quiver, self.field, x.trunc)
        for p, c in x.terms.items():
            at = p.start
            prefix_deg = 0
            for j, name in enumerate(p.arrows):
                dgen = self.d_values[name].with_truncation(x.trunc)
                if not dgen.is_zero():
                    pre = AlgebraElement.from_path(
                        self.quiver, self.field, x.trunc, Path(p.start, p.arrows[:j]))
                    suf_start = self.quiver.arrow(name).target
                    suf = AlgebraElement.from_path(
                        self.quiver, self.field, x.trunc, Path(suf_start, p.arrows[j + 1:]))
                    sign = self.field(1) if prefix_deg % 2 == 0 else self.field(-1)
                    out = out + (pre * dgen * suf).scale(c * sign)
                prefix_deg += gq.degree[name]
                at = self.quiver.arrow(name).target
        return out

    def d_on_generator(self, gen: str) -> AlgebraElement:
        return self.d_values[gen]

    def d_squared_on_generators(self) -> dict[str, AlgebraElement]:
        """d(d(gen)) for every generator; all-zero iff the family is valid.

        The loop values d(t_v) are sums of length-2 monomials, so their
        differentials are determined one order beyond the stored truncation;
        computing there keeps the check sharp for degree-trunc families.
        """
        out = {}
        for name in sorted(self.d_values):
            val = self.d_values[name]
            if val.min_degree() is not None and val.min_degree() >= 2:
                val = val.with_truncation(self.trunc + 1)
            out[name] = self.differential(val)
        return out

    def check(self) -> CheckReport:
        residuals = self.d_squared_on_generators()
        bad = AlgebraElement.zero(self.quiver, self.field, self.trunc)
        ok = True
        for name, r in residuals.items():
            if not r.is_zero():
                ok = False
                bad = bad + r
        return CheckReport(ok, bad)

    def degrees_are_consistent(self) -> bool:
        """d must be homogeneous of degree +1 on generators."""
        gq = self.graded
        for name, val in self.d_values.items():
            if val.is_zero():
                continue
            d = gq.element_degree(val)
            if d is None or d != gq.degree[name] + 1:
                return False
        return True

    def to_json_obj(self) -> dict:
        return {
            "quiver": self.graded.base.to_json_obj(),
            "field": self.field.name,
            "trunc": self.trunc,
            "degrees": dict(sorted(self.graded.degree.items())),
            "d": {name: val.to_json_obj()["terms"]
                  for name, val in sorted(self.d_values.items())},
        }


def _lift_to_graded(graded: GradedQuiver, x: AlgebraElement, field: Field,
                    trunc: int) -> AlgebraElement:
    """Reinterpret a base-quiver element over the graded quiver."""
    terms = {Path(p.start, p.arrows): c for p, c in x.terms.items()}
    return AlgebraElement(graded.quiver, field, trunc, terms)


def build_ginzburg(h: Hyperpotential) -> DgPresentation:
    """The dg-presentation of a (not necessarily valid) family (rho_a)."""
    gq = GradedQuiver(h.quiver)
    field = h.field
    n = h.trunc
    d_values: dict[str, AlgebraElement] = {}
    for a in h.quiver.arrows:
        d_values[a.name] = AlgebraElement.zero(gq.quiver, field, n)
        d_values[star_name(a.name)] = _lift_to_graded(gq, h.rho[a.name], field, n)
    # sum_b [b, b*] over the graded quiver, then project to each diagonal block
    comm = AlgebraElement.zero(gq.quiver, field, n)
    for b in h.quiver.arrows:
        xb = AlgebraElement.from_path(gq.quiver, field, n, Path(b.source, (b.name,)))
        xbs = AlgebraElement.from_path(gq.quiver, field, n,
                                       Path(b.target, (star_name(b.name),)))
        comm = comm + (xb * xbs - xbs * xb)
    for v in h.quiver.vertices:
        d_values[t_name(v)] = comm.block(v, v)
    return DgPresentation(gq, field, n, d_values)


def check_d_squared(g: DgPresentation) -> CheckReport:
    return g.check()


@dataclass
class ScalingMorphism:
    """Generator images of the scaling map between dg-presentations."""

    c: Scalar
    source: DgPresentation
    target: DgPresentation
    gen_images: dict[str, tuple[Scalar, str]] = dc_field(default_factory=dict)
    commutes: bool = False


def scaling_isomorphism(g: DgPresentation, c) -> ScalingMorphism:
    """The map from the presentation of (c*rho) to that of (rho):

        e_v -> e_v,  a -> a,  a* -> c a*,  t_v -> c t_v

    Verifies commutation with the differentials on every generator.
    """
    field = g.field
    c = field(c)
    if not c:
        raise ValueError("scaling unit must be nonzero")
    cinv = c.inverse()
    base = g.graded.base
    rho = {a.name: AlgebraElement(
        base, field, g.trunc,
        {Path(p.start, p.arrows): cinv * v
         for p, v in g.d_values[star_name(a.name)].terms.items()})
        for a in base.arrows}
    target = build_ginzburg(Hyperpotential(base, field, g.trunc, rho))

    images: dict[str, tuple[Scalar, str]] = {}
    for a in base.arrows:
        images[a.name] = (field.one, a.name)
        images[star_name(a.name)] = (c, star_name(a.name))
    for v in base.vertices:
        images[t_name(v)] = (c, t_name(v))

    def apply_map(x: AlgebraElement) -> AlgebraElement:
        terms = {}
        for p, coeff in x.terms.items():
            for name in p.arrows:
                coeff = coeff * images[name][0]
            if coeff:
                terms[p] = coeff
        return AlgebraElement(g.quiver, field, x.trunc, terms, _normalized=True)

    commutes = True
    for name in images:
        lhs = apply_map(g.d_values[name])
        scal, tgt_gen = images[name]
        rhs = target.d_values[tgt_gen].scale(scal)
        if lhs != rhs:
            commutes = False
            break
    return ScalingMorphism(c, g, target, images, commutes)

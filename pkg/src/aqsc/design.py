"""Asymmetric surface-code design from regular hyperbolic tessellations.

A {p,q} tessellation of a closed hyperbolic surface yields a CSS code with
qubits on edges: Z stabilizers on faces, X stabilizers on vertices.  With
p < q the faces are fewer and larger than the vertex stars, so the two
logical distances split: d_z (phase flips) grows past d_x (bit flips).
Everything here is combinatorial and exact up to the final distance
estimates, which divide the fundamental polygon's opposite-edge distance by
the tessellation edge lengths.

Counts are computed as exact Fractions from the Euler characteristic; a
tessellation is admissible on a surface only when face and vertex counts
land on positive integers.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional

from .geometry import (
    SchlafliSymbol,
    Surface,
    NonHyperbolicSurface,
    NotHyperbolic,
    edge_length,
    fundamental_polygon,
    opposite_edge_distance,
)

log = logging.getLogger(__name__)


class DesignError(ValueError):
    """A design-level precondition failed."""


class NotAdmissible(DesignError):
    """The tessellation does not close up on the surface."""


class UnsupportedSymbol(DesignError):
    """No closed-form family is tabulated for this symbol."""


class DegenerateGenus(DesignError):
    """The requested genus breaks the rate comparison (division by zero)."""


def face_count(surface: Surface, sym: SchlafliSymbol) -> Fraction:
    """Number of {p,q} faces on the surface, as an exact rational.

    Counting incidences, E = p n_f / 2 and V = p n_f / q, so chi =
    V - E + F forces n_f = -2 q chi / (pq - 2p - 2q).
    """
    if not surface.is_hyperbolic:
        raise NonHyperbolicSurface(str(surface))
    if not sym.is_hyperbolic:
        raise NotHyperbolic(f"{sym} is {sym.curvature.value}")
    return Fraction(-2 * sym.q * surface.euler_characteristic, sym.excess)


class Admissibility(NamedTuple):
    ok: bool
    reason: Optional[str]


def admissibility(surface: Surface, sym: SchlafliSymbol) -> Admissibility:
    """Check whether {p,q} tessellates the surface with integer counts."""
    if not surface.is_hyperbolic:
        return Admissibility(False, f"{surface} is not hyperbolic")
    if not sym.is_hyperbolic:
        return Admissibility(False, f"{sym} is {sym.curvature.value}")
    n_f = face_count(surface, sym)
    if n_f.denominator != 1 or n_f <= 0:
        return Admissibility(False, f"face count {n_f} is not a positive integer")
    n_v = Fraction(sym.p, sym.q) * n_f
    if n_v.denominator != 1 or n_v <= 0:
        return Admissibility(False, f"vertex count {n_v} is not a positive integer")
    return Admissibility(True, None)


def is_admissible(surface: Surface, sym: SchlafliSymbol) -> bool:
    return admissibility(surface, sym).ok


def _ceil_ratio(num: float, den: float) -> int:
    """ceil(num/den), snapping ratios within 1e-9 of an integer.

    The fundamental polygon {N,N} gives ratio exactly 1 in exact
    arithmetic but 0.999... in floats; ceiling would inflate it to 2.
    """
    ratio = num / den
    nearest = round(ratio)
    if abs(ratio - nearest) < 1e-9:
        return int(nearest)
    return math.ceil(ratio)


@dataclass(frozen=True)
class CodeParameters:
    """Parameters of the surface code cut out by {p,q} on a closed surface.

    Distances here are the geometric estimates: the separation d_h of
    identified opposite edges of the fundamental polygon, measured in
    tessellation edge lengths of {p,q} (bit flips travel the primal graph)
    and of {q,p} (phase flips travel the dual graph).
    """

    surface: Surface
    sym: SchlafliSymbol
    n_f: int
    n: int
    k: int
    d_z: int
    d_x: int
    d_h: float
    l_pq: float
    l_qp: float
    distance_provenance: str = "formula"

    @property
    def d(self) -> int:
        return min(self.d_z, self.d_x)

    @property
    def gap(self) -> int:
        return self.d_z - self.d_x

    @property
    def rate(self) -> Fraction:
        return Fraction(self.k, self.n)

    @property
    def record(self) -> str:
        return f"[[{self.n},{self.k},{self.d_z}/{self.d_x}]]"

    def __str__(self) -> str:
        return f"{self.sym} on {self.surface}: {self.record}"


def code_parameters(surface: Surface, sym: SchlafliSymbol) -> CodeParameters:
    """Design the code for {p,q} on the surface; raises NotAdmissible."""
    adm = admissibility(surface, sym)
    if not adm.ok:
        raise NotAdmissible(adm.reason)
    n_f = int(face_count(surface, sym))
    n2 = sym.p * n_f
    # E = p n_f / 2 is integral whenever V = p n_f / q is: q n_v = p n_f
    # has an even right side unless p, n_f both odd, and then q odd makes
    # pq - 2p - 2q odd while -2 q chi is even, contradiction
    assert n2 % 2 == 0, (surface, sym)
    n = n2 // 2
    k = 2 - surface.euler_characteristic
    d_h = opposite_edge_distance(fundamental_polygon(surface).p)
    l_pq = edge_length(sym)
    l_qp = edge_length(sym.dual)
    return CodeParameters(
        surface=surface,
        sym=sym,
        n_f=n_f,
        n=n,
        k=k,
        d_z=_ceil_ratio(d_h, l_qp),
        d_x=_ceil_ratio(d_h, l_pq),
        d_h=d_h,
        l_pq=l_pq,
        l_qp=l_qp,
    )


def enumerate_admissible(
    surface: Surface,
    p_max: int,
    q_max: int,
    min_rate: Optional[Fraction] = None,
) -> list[CodeParameters]:
    """All admissible {p,q} codes on the surface with p <= p_max, q <= q_max.

    Sorted by (p, q).  An optional rate floor filters out the long thin
    tail of high-q symbols.
    """
    out = []
    for p in range(3, p_max + 1):
        for q in range(3, q_max + 1):
            sym = SchlafliSymbol(p, q)
            if not is_admissible(surface, sym):
                continue
            params = code_parameters(surface, sym)
            if min_rate is not None and params.rate < min_rate:
                continue
            out.append(params)
    return out


class FamilyForm(NamedTuple):
    """Closed-form parameter family of {p,q} on non-orientable genus g.

    n_f and n are linear in g - 2 and k = g for every g >= 3; these are
    the symbols whose counts are integral for all genera at once.
    """

    sym: SchlafliSymbol
    n_f_coeff: int
    n_coeff: int

    @property
    def n_f_form(self) -> str:
        return "g-2" if self.n_f_coeff == 1 else f"{self.n_f_coeff}(g-2)"

    @property
    def n_form(self) -> str:
        return "g-2" if self.n_coeff == 1 else f"{self.n_coeff}(g-2)"

    def at_genus(self, genus: int) -> CodeParameters:
        return code_parameters(Surface(genus, orientable=False), self.sym)


_FAMILIES = {
    (7, 3): (6, 21),
    (8, 3): (3, 12),
    (9, 3): (2, 9),
    (12, 3): (1, 6),
    (5, 4): (4, 10),
    (6, 4): (2, 6),
    (8, 4): (1, 4),
}


def closed_form_family(sym: SchlafliSymbol) -> FamilyForm:
    """Family coefficients for the symbols admissible at every genus g >= 3."""
    try:
        cf, cn = _FAMILIES[(sym.p, sym.q)]
    except KeyError:
        raise UnsupportedSymbol(f"no closed form tabulated for {sym}") from None
    return FamilyForm(sym, cf, cn)


def closed_form_symbols() -> list[SchlafliSymbol]:
    return [SchlafliSymbol(p, q) for p, q in sorted(_FAMILIES)]


class RateComparison(NamedTuple):
    """Encoding rate k/n of {p,q} at genus g, orientable vs non-orientable.

    Orientable genus g carries k = 2g logicals over n = pq(2g-2)/excess
    qubits; non-orientable genus g carries k = g over n = pq(g-2)/excess.
    Fewer qubits win: the non-orientable rate is higher by (g-1)/(g-2).
    """

    genus: int
    orientable: Fraction
    non_orientable: Fraction
    ratio: Fraction


def rate_comparison(sym: SchlafliSymbol, genus: int) -> RateComparison:
    """Exact rate comparison at the same genus; needs g >= 3."""
    if not sym.is_hyperbolic:
        raise NotHyperbolic(f"{sym} is {sym.curvature.value}")
    if genus < 3:
        raise DegenerateGenus(f"rate comparison needs genus >= 3, got {genus}")
    pq = sym.p * sym.q
    r1 = Fraction(genus * sym.excess, pq * (genus - 1))
    r2 = Fraction(genus * sym.excess, pq * (genus - 2))
    return RateComparison(genus, r1, r2, r1 / r2)


class EvenGenusEquivalence(NamedTuple):
    orientable: CodeParameters
    non_orientable: CodeParameters
    parameters_match: bool


def even_genus_equivalence(h: int, sym: SchlafliSymbol) -> EvenGenusEquivalence:
    """Compare {p,q} on orientable genus h against non-orientable genus 2h.

    Both surfaces have chi = 2 - 2h and fundamental polygon {4h,4h}, so
    every derived parameter coincides; the non-orientable surface of even
    genus buys nothing new.
    """
    a = code_parameters(Surface(h, orientable=True), sym)
    b = code_parameters(Surface(2 * h, orientable=False), sym)
    match = (a.n_f, a.n, a.k, a.d_z, a.d_x) == (b.n_f, b.n, b.k, b.d_z, b.d_x)
    return EvenGenusEquivalence(a, b, match)


class AsymmetryPoint(NamedTuple):
    genus: int
    d_z: int
    d_x: int
    gap: int


def asymmetry_curve(
    sym: SchlafliSymbol,
    genera: Iterable[int],
    orientable: bool = False,
) -> list[AsymmetryPoint]:
    """Distance asymmetry of {p,q} across a range of genera.

    Genera where the tessellation is inadmissible are skipped with a log
    notice rather than raising; the gap d_z - d_x trends upward with genus
    but is not monotone.
    """
    out = []
    for genus in genera:
        surface = Surface(genus, orientable=orientable)
        adm = admissibility(surface, sym)
        if not adm.ok:
            log.info("skipping genus %d for %s: %s", genus, sym, adm.reason)
            continue
        params = code_parameters(surface, sym)
        out.append(AsymmetryPoint(genus, params.d_z, params.d_x, params.gap))
    return out

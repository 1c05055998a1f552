"""Brute-force finite-field checks that bypass all symbolic machinery.

Everything here works by direct evaluation over F_p: lines are verified
point by point, loci and singular conics are found by scanning all of
P^N(F_p).  Results are exact statements about F_p and serve as an
independent cross-check of the Groebner route; conclusions over the
rationals or their closure still belong to the symbolic side.

Line containment is decided by evaluating each equation at the p + 1
points of the line.  A nonzero binary form of degree d has at most d
roots on P^1, so vanishing at p + 1 > d points forces the restriction to
vanish identically; this is only sound when p >= max degree, and the
functions refuse smaller primes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .conics import ConicSolution, solution_from_vertex
from .fields import GF, exact_str
from .ffutil import (DEFAULT_POINT_CAP, OracleRefusal, PointCapExceeded,
                     PrimeTooSmall, check_point_budget, compile_mod_evaluator,
                     enumerate_points, projective_point_count, scalar_mod)
from .poly import ProjectivePoint
from .variety import VarietySpec, point_on_variety

__all__ = [
    "ProjectiveSpaceEnum",
    "line_in_variety",
    "brute_line_locus",
    "brute_singular_conics",
    "variety_points",
    "Lcg64",
    "OracleStats",
    "cc_census",
    "OracleRefusal",
    "PointCapExceeded",
    "PrimeTooSmall",
]


def _field_prime(variety: VarietySpec) -> int:
    if not variety.field.is_prime_field:
        raise OracleRefusal(
            "brute-force checks need a variety over a prime field; "
            "reduce modulo a prime first")
    return variety.field.p


def _require_line_safe(variety: VarietySpec, p: int) -> None:
    top = max(variety.degrees)
    if p < top:
        raise PrimeTooSmall(
            f"prime {p} is below the top degree {top}; vanishing on all "
            f"{p + 1} F_{p} points of a line would not force the line "
            f"onto the variety")


def _as_tuple(point, p: int) -> tuple:
    """Canonical coordinate tuple mod p (first nonzero entry 1)."""
    if isinstance(point, ProjectivePoint):
        vals = [scalar_mod(c, p) for c in point.coords]
    else:
        vals = [scalar_mod(c, p) for c in point]
    for v in vals:
        if v:
            inv = pow(v, p - 2, p)
            return tuple((inv * w) % p for w in vals)
    raise ValueError("the zero vector is not a projective point")


def _compiled(variety: VarietySpec, p: int):
    return [compile_mod_evaluator(eq, p) for eq in variety.equations]


def _line_points(a: tuple, b: tuple, p: int):
    """The p + 1 canonical points of the line through distinct a, b."""
    pts = [_as_tuple([(ai + t * bi) % p for ai, bi in zip(a, b)], p)
           for t in range(p)]
    pts.append(b)
    return pts


def _line_on(evaluators, p: int, a: tuple, b: tuple) -> bool:
    for t in range(p):
        pt = tuple((ai + t * bi) % p for ai, bi in zip(a, b))
        if any(ev(pt) for ev in evaluators):
            return False
    return not any(ev(b) for ev in evaluators)


class ProjectiveSpaceEnum:
    """All points of P^N(F_p), each with first nonzero coordinate 1."""

    def __init__(self, ambient_dim: int, p: int,
                 cap: int | None = DEFAULT_POINT_CAP):
        check_point_budget(ambient_dim, p, cap)
        self.ambient_dim = ambient_dim
        self.p = p
        self.points = tuple(enumerate_points(ambient_dim, p))
        assert len(self.points) == projective_point_count(ambient_dim, p)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


def line_in_variety(variety: VarietySpec, a, b) -> bool:
    """Whether the line through two distinct points lies on the variety."""
    p = _field_prime(variety)
    _require_line_safe(variety, p)
    at = _as_tuple(a, p)
    bt = _as_tuple(b, p)
    if at == bt:
        raise ValueError("two coincident points do not span a line")
    return _line_on(_compiled(variety, p), p, at, bt)


def brute_line_locus(variety: VarietySpec, point,
                     cap: int | None = DEFAULT_POINT_CAP) -> tuple:
    """All q such that the line through ``point`` and q lies on the variety.

    The base point itself is included, matching the zero set of the
    symbolic line-locus ideal (every pencil condition vanishes there).
    Points come out in enumeration order as canonical coordinate tuples.
    """
    p = _field_prime(variety)
    _require_line_safe(variety, p)
    xt = _as_tuple(point, p)
    if not point_on_variety(variety, ProjectivePoint(
            [variety.field(c) for c in xt], variety.field)):
        raise ValueError(f"base point {list(xt)} does not lie on "
                         f"{variety.name}")
    check_point_budget(variety.ambient_dim, p, cap)
    evaluators = _compiled(variety, p)
    return tuple(q for q in enumerate_points(variety.ambient_dim, p)
                 if q == xt or _line_on(evaluators, p, xt, q))


def brute_singular_conics(variety: VarietySpec, x, y,
                          partitions: int | None = None,
                          cap: int | None = DEFAULT_POINT_CAP) -> tuple:
    """Vertices q with both lines <x,q> and <y,q> on the variety, by scan.

    The conditions read (q == x or line <x,q> on X) and (q == y or line
    <y,q> on X), which is exactly the zero set of the symbolic conic
    system.  ``partitions`` splits the scan into that many contiguous
    chunks merged afterwards; the result does not depend on it.
    """
    p = _field_prime(variety)
    _require_line_safe(variety, p)
    field = GF(p)
    xt = _as_tuple(x, p)
    yt = _as_tuple(y, p)
    if xt == yt:
        raise ValueError("need two distinct points")
    xp = ProjectivePoint([field(c) for c in xt], field)
    yp = ProjectivePoint([field(c) for c in yt], field)
    for label, pt in (("x", xp), ("y", yp)):
        if not point_on_variety(variety, pt):
            raise ValueError(f"{label} = {pt} does not lie on {variety.name}")
    check_point_budget(variety.ambient_dim, p, cap)
    evaluators = _compiled(variety, p)
    space = tuple(enumerate_points(variety.ambient_dim, p))

    def scan(chunk):
        return [q for q in chunk
                if (q == xt or _line_on(evaluators, p, xt, q))
                and (q == yt or _line_on(evaluators, p, yt, q))]

    if partitions is None or partitions <= 1:
        vertices = scan(space)
    else:
        size = -(-len(space) // partitions)
        merged = set()
        vertices = []
        for start in range(0, len(space), size):
            for q in scan(space[start:start + size]):
                if q not in merged:
                    merged.add(q)
                    vertices.append(q)
    return tuple(
        solution_from_vertex(
            ProjectivePoint([field(c) for c in q], field), xp, yp)
        for q in vertices)


def variety_points(variety: VarietySpec,
                   cap: int | None = DEFAULT_POINT_CAP) -> tuple:
    """All F_p points of the variety, in enumeration order."""
    p = _field_prime(variety)
    check_point_budget(variety.ambient_dim, p, cap)
    evaluators = _compiled(variety, p)
    return tuple(q for q in enumerate_points(variety.ambient_dim, p)
                 if not any(ev(q) for ev in evaluators))


class Lcg64:
    """Fixed-parameter 64-bit linear congruential generator.

    state <- (state * 6364136223846793005 + 1442695040888963407) mod 2^64,
    output = state >> 33.  ``draw(n)`` reduces an output modulo n.  The
    constants are pinned so census samples replay identically everywhere.
    """

    MULTIPLIER = 6364136223846793005
    INCREMENT = 1442695040888963407
    _MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self._MASK

    def next_raw(self) -> int:
        self.state = (self.state * self.MULTIPLIER
                      + self.INCREMENT) & self._MASK
        return self.state >> 33

    def draw(self, n: int) -> int:
        if n <= 0:
            raise ValueError("draw needs a positive range")
        return self.next_raw() % n


@dataclass(frozen=True)
class OracleStats:
    """Census of sampled point pairs on a variety over F_p.

    A pair counts as connected when at least one vertex exists (a vertex
    on the line through x and y still witnesses the line itself lying on
    the variety).  The histogram buckets pairs by their number of
    non-degenerate vertices.
    """

    prime: int
    point_count: int
    pairs_tested: int
    pairs_connected: int
    pairs_with_nondegenerate: int
    histogram: tuple
    connected_fraction: Fraction
    nondegenerate_fraction: Fraction
    notes: tuple = ()

    def to_json(self) -> dict:
        return {
            "prime": self.prime,
            "point_count": self.point_count,
            "pairs_tested": self.pairs_tested,
            "pairs_connected": self.pairs_connected,
            "pairs_with_nondegenerate": self.pairs_with_nondegenerate,
            "histogram": [{"vertices": k, "pairs": v}
                          for k, v in self.histogram],
            "connected_fraction": exact_str(self.connected_fraction),
            "nondegenerate_fraction": exact_str(self.nondegenerate_fraction),
            "notes": list(self.notes),
        }


def cc_census(variety: VarietySpec, sample: int, seed: int = 0,
              cap: int | None = DEFAULT_POINT_CAP) -> OracleStats:
    """Sample point pairs and count their singular-conic vertices.

    Pairs are drawn with replacement from the F_p points of the variety
    by the pinned generator; the two members of a pair are always
    distinct.  F_p statistics suggest but do not prove behaviour over the
    rationals; use the symbolic route for closure statements.
    """
    if sample <= 0:
        raise ValueError("sample must be positive")
    p = _field_prime(variety)
    _require_line_safe(variety, p)
    points = variety_points(variety, cap=cap)
    if len(points) < 2:
        raise OracleRefusal(
            f"{variety.name} has {len(points)} point(s) over F_{p}; "
            f"a census needs at least two")
    evaluators = _compiled(variety, p)
    space = tuple(enumerate_points(variety.ambient_dim, p))
    rng = Lcg64(seed)
    connected = 0
    with_nondeg = 0
    histogram: dict = {}
    for _ in range(sample):
        i = rng.draw(len(points))
        j = rng.draw(len(points) - 1)
        if j >= i:
            j += 1
        xt, yt = points[i], points[j]
        on_xy_line = set(_line_points(xt, yt, p))
        vertices = [q for q in space
                    if (q == xt or _line_on(evaluators, p, xt, q))
                    and (q == yt or _line_on(evaluators, p, yt, q))]
        nondeg = sum(1 for q in vertices if q not in on_xy_line)
        if vertices:
            connected += 1
        if nondeg:
            with_nondeg += 1
        histogram[nondeg] = histogram.get(nondeg, 0) + 1
    return OracleStats(
        prime=p,
        point_count=len(points),
        pairs_tested=sample,
        pairs_connected=connected,
        pairs_with_nondegenerate=with_nondeg,
        histogram=tuple(sorted(histogram.items())),
        connected_fraction=Fraction(connected, sample),
        nondegenerate_fraction=Fraction(with_nondeg, sample),
        notes=("finite-field statistics; statements over the rationals "
               "or their closure need the symbolic route",),
    )

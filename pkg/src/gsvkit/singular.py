"""Locate the non-transversal rays of a homogeneous quintic and classify them.

A singular ray is a projective direction where the full gradient vanishes.
Candidates come from a pluggable source; every reported ray is verified by
exact arithmetic, and rays are normalized (first nonzero coordinate = 1) so
the scaling action and root-of-unity multiples are quotiented out.

Node test: in the affine chart that fixes the ray's unit coordinate to 1,
the second partials of the dehomogenized polynomial form a 4x4 matrix; the
point is a node exactly when that matrix has full rank.  A full-rank
quadratic cone is an isolated singular direction, so "every ray is a node"
doubles as the isolation certificate.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence, Tuple

from .cyclo import Cyclo, CyclotomicField
from .errors import GsvError, GsvInputError
from .linalg import matrix_rank
from .poly import Polynomial


class Kind(str, Enum):
    NODE = "node"
    NON_NODE = "non_node"
    UNCLASSIFIED = "unclassified"


@dataclass(frozen=True)
class SingularityClass:
    kind: Kind
    corank: int | None = None

    def to_json_dict(self):
        return {"class": self.kind.value, "corank": self.corank}


NODE = SingularityClass(Kind.NODE)
UNCLASSIFIED = SingularityClass(Kind.UNCLASSIFIED)


@dataclass(frozen=True)
class SingularRay:
    """A normalized singular direction with its local classification."""

    representative: Tuple[Cyclo, ...]
    classification: SingularityClass

    def coords_text(self) -> Tuple[str, ...]:
        return tuple(str(c) for c in self.representative)

    def to_json_dict(self):
        out = {"coords": list(self.coords_text())}
        out.update(self.classification.to_json_dict())
        return out


@dataclass(frozen=True)
class TransversalityReport:
    """Outcome of a transversality search.

    `transversal` is None when the search ended without either a ray or a
    certificate; `complete` records whether the verdict is certified.
    `isolated` is the node-based isolation certificate over all found rays.
    """

    transversal: bool | None
    rays: Tuple[SingularRay, ...]
    isolated: bool
    source: str
    complete: bool

    @property
    def node_count(self) -> int:
        return len(self.rays)

    def to_json_dict(self):
        return {
            "transversal": self.transversal,
            "rays": [r.to_json_dict() for r in self.rays],
            "isolated": self.isolated,
            "source": self.source,
            "complete": self.complete,
        }

    def summary_text(self) -> str:
        if self.transversal is True:
            head = "transversal: G = dG = 0 only at the origin"
        elif self.transversal is False:
            kinds = [r.classification.kind for r in self.rays]
            nodes = sum(1 for k in kinds if k is Kind.NODE)
            head = f"non-transversal: {len(self.rays)} singular rays ({nodes} nodes)"
        else:
            head = "inconclusive: no rays found and no transversality certificate"
        lines = [head, f"source: {self.source}", f"complete: {self.complete}",
                 f"isolated: {self.isolated}"]
        for ray in self.rays:
            cls = ray.classification
            tag = cls.kind.value if cls.corank is None else f"{cls.kind.value} (corank {cls.corank})"
            lines.append("  (" + ", ".join(ray.coords_text()) + f")  {tag}")
        return "\n".join(lines)


# -- candidate sources ----------------------------------------------------------


@dataclass(frozen=True)
class AnsatzRoots:
    """All projective points with coordinates in {0} u {zeta^a}."""

    name: str = "ansatz"


@dataclass(frozen=True)
class UserList:
    """Explicit candidate rays; set `exhaustive` to certify a negative search."""

    points: Tuple[Tuple[Cyclo, ...], ...]
    exhaustive: bool = False
    name: str = "user"


@dataclass(frozen=True)
class FloatHomotopy:
    """Numeric fallback: Gauss-Newton on the gradient system, chart by chart.

    Solutions are snapped to the root-of-unity grid and certified exactly when
    possible; anything else stays Unclassified and the report is never
    complete.
    """

    starts: int = 400
    seed: int = 20260809
    tolerance: float = 1e-10
    name: str = "float"


CandidateSource = AnsatzRoots | UserList | FloatHomotopy


def normalize_ray(point: Sequence[Cyclo]) -> Tuple[Cyclo, ...]:
    """Scale so the first nonzero coordinate is exactly 1."""
    lead = next((c for c in point if not c.is_zero()), None)
    if lead is None:
        raise GsvInputError("the origin does not define a ray")
    inv = lead.inverse()
    return tuple(c * inv for c in point)


def _ray_sort_key(point: Sequence[Cyclo]):
    return tuple(c.coeffs for c in point)


def ansatz_candidates(field: CyclotomicField) -> Iterable[Tuple[Cyclo, ...]]:
    """Normalized representatives of the root-of-unity ansatz grid."""
    zero = field.zero
    units = [field.zeta_power(a) for a in range(field.order)]
    choices = [zero] + units
    for lead in range(5):
        head = (zero,) * lead + (field.one,)
        for tail in product(choices, repeat=4 - lead):
            yield head + tail


def _vanishes(gradients: Sequence[Polynomial], point: Sequence[Cyclo]) -> bool:
    return all(g.evaluate(point).is_zero() for g in gradients)


def _scan_chunk(args):
    gradients, chunk = args
    return [pt for pt in chunk if _vanishes(gradients, pt)]


def _require_quintic(g: Polynomial):
    if len(g.variables) != 5:
        raise GsvInputError("expected a polynomial in the five variables s0..s4")
    if g.is_zero() or not g.is_homogeneous(5):
        raise GsvInputError("expected a nonzero homogeneous polynomial of degree 5")


def classify_singularity(g: Polynomial, point: Sequence[Cyclo]) -> SingularityClass:
    """Node iff the chart Hessian has rank 4; otherwise NonNode with corank."""
    pt = [g.field.element(c) for c in point]
    if all(c.is_zero() for c in pt):
        raise GsvInputError("cannot classify the origin")
    pt = list(normalize_ray(pt))
    if not _vanishes(g.gradient(), pt):
        raise GsvInputError("point is not a singular ray (gradient does not vanish)")
    chart = next(i for i, c in enumerate(pt) if not c.is_zero())
    hess = g.hessian()
    rows = []
    for i in range(5):
        if i == chart:
            continue
        rows.append([hess[i][j].evaluate(pt) for j in range(5) if j != chart])
    rank = matrix_rank(rows)
    if rank == 4:
        return NODE
    return SingularityClass(Kind.NON_NODE, corank=4 - rank)


def _exact_search(g: Polynomial, candidates: Iterable[Tuple[Cyclo, ...]],
                  jobs: int = 1) -> list[Tuple[Cyclo, ...]]:
    gradients = g.gradient()
    if jobs > 1:
        chunks = []
        chunk: list = []
        for pt in candidates:
            chunk.append(pt)
            if len(chunk) >= 128:
                chunks.append(chunk)
                chunk = []
        if chunk:
            chunks.append(chunk)
        survivors: list = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for found in pool.map(_scan_chunk, [(gradients, c) for c in chunks]):
                survivors.extend(found)
        return survivors
    return [pt for pt in candidates if _vanishes(gradients, pt)]


def _finish_rays(g: Polynomial, points: Iterable[Sequence[Cyclo]]) -> Tuple[SingularRay, ...]:
    """Normalize, dedupe, classify, sanity-check, and sort."""
    seen = {}
    for pt in points:
        ray = normalize_ray(pt)
        seen[tuple(c.coeffs for c in ray)] = ray
    rays = []
    for ray in seen.values():
        if not g.evaluate(ray).is_zero():
            # homogeneity forces G = 0 wherever dG = 0; failure means a bug
            raise GsvError("internal error: G does not vanish on a singular ray")
        rays.append(SingularRay(ray, classify_singularity(g, ray)))
    rays.sort(key=lambda r: _ray_sort_key(r.representative))
    return tuple(rays)


def find_singular_rays(g: Polynomial, source: CandidateSource,
                       jobs: int = 1) -> Tuple[SingularRay, ...]:
    """All exactly-verified singular rays reachable from the candidate source,
    deduplicated up to scaling, in a deterministic order."""
    _require_quintic(g)
    if isinstance(source, AnsatzRoots):
        return _finish_rays(g, _exact_search(g, ansatz_candidates(g.field), jobs))
    if isinstance(source, UserList):
        pts = [tuple(g.field.element(c) for c in p) for p in source.points]
        pts = [p for p in pts if any(not c.is_zero() for c in p)]  # origin is excised
        return _finish_rays(g, _exact_search(g, pts, jobs))
    if isinstance(source, FloatHomotopy):
        certified, unresolved = _float_search(g, source)
        rays = list(_finish_rays(g, certified))
        rays.extend(SingularRay(pt, UNCLASSIFIED) for pt in unresolved)
        return tuple(rays)
    raise GsvInputError(f"unknown candidate source {source!r}")


def _pure_power_gradient(g: Polynomial) -> bool:
    """Certificate: if every dG/ds_i is c * s_i^e, joint vanishing forces s = 0."""
    for i, comp in enumerate(g.gradient()):
        if len(comp.terms) != 1:
            return False
        (exp,) = comp.terms
        if any(e and j != i for j, e in enumerate(exp)):
            return False
        if exp[i] == 0:
            return False
    return True


def verify_transversal(g: Polynomial, source: CandidateSource,
                       jobs: int = 1) -> TransversalityReport:
    """Search for singular rays and certify transversality when possible.

    Exit states: rays found (non-transversal, certified), no rays plus a
    certificate (transversal), or no rays and no certificate (inconclusive;
    never silently reported as transversal).
    """
    _require_quintic(g)
    rays = find_singular_rays(g, source, jobs=jobs)
    isolated = all(r.classification.kind is Kind.NODE for r in rays)
    name = source.name
    if rays:
        complete = not isinstance(source, FloatHomotopy) and all(
            r.classification.kind is not Kind.UNCLASSIFIED for r in rays)
        return TransversalityReport(False, rays, isolated, name, complete)
    if _pure_power_gradient(g):
        return TransversalityReport(True, (), True, name, True)
    if isinstance(source, UserList) and source.exhaustive:
        return TransversalityReport(True, (), True, name, True)
    return TransversalityReport(None, (), True, name, False)


# -- numeric fallback -------------------------------------------------------------


def _float_search(g: Polynomial, search: FloatHomotopy):
    import numpy as np

    gradients = g.gradient()
    hessian = g.hessian()
    field = g.field
    tol = search.tolerance
    rng = np.random.default_rng(search.seed)
    raw: dict[tuple, np.ndarray] = {}
    for chart in range(5):
        for _ in range(max(search.starts // 5, 1)):
            x = rng.standard_normal(4) + 1j * rng.standard_normal(4)
            for _ in range(60):
                pt = np.insert(x, chart, 1.0 + 0j)
                f = np.array([p.evaluate_complex(pt) for p in gradients])
                if np.max(np.abs(f)) < tol:
                    break
                jac = np.array([[hessian[i][j].evaluate_complex(pt)
                                 for j in range(5) if j != chart]
                                for i in range(5)])
                step, *_ = np.linalg.lstsq(jac, -f, rcond=None)
                if not np.all(np.isfinite(step)):
                    break
                x = x + step
                if np.max(np.abs(step)) < 1e-14:
                    break
            pt = np.insert(x, chart, 1.0 + 0j)
            f = np.array([p.evaluate_complex(pt) for p in gradients])
            if np.max(np.abs(f)) >= tol or not np.all(np.isfinite(pt)):
                continue
            lead = next(i for i in range(5) if abs(pt[i]) > 1e-8)
            pt = pt / pt[lead]
            key = tuple(np.round(pt, 6))
            raw.setdefault(key, pt)

    grid = [field.zero] + [field.zeta_power(a) for a in range(field.order)]
    grid_values = [z.to_complex() for z in grid]

    certified: list[Tuple[Cyclo, ...]] = []
    unresolved: list[Tuple[Cyclo, ...]] = []
    for pt in raw.values():
        snapped = []
        for v in pt:
            dists = [abs(v - w) for w in grid_values]
            best = min(range(len(grid)), key=dists.__getitem__)
            snapped.append(grid[best] if dists[best] < 1e-6 else None)
        if all(s is not None for s in snapped):
            exact = tuple(snapped)
            if _vanishes(gradients, exact):
                certified.append(exact)
                continue
        unresolved.append(_rationalize_point(field, pt))
    unresolved.sort(key=_ray_sort_key)
    return certified, unresolved


def _rationalize_point(field: CyclotomicField, pt) -> Tuple[Cyclo, ...]:
    """Nearest small-height coefficient-domain point to a complex vector.

    Used only to give Unclassified numeric hits an exact-typed representative;
    it carries no exactness claim.
    """
    import numpy as np

    d = field.degree
    basis = [field.zeta_power(a).to_complex() for a in range(d)]
    mat = np.array([[b.real for b in basis], [b.imag for b in basis]])
    out = []
    for v in pt:
        rhs = np.array([v.real, v.imag])
        sol, *_ = np.linalg.lstsq(mat, rhs, rcond=None)
        coeffs = [Fraction(float(c)).limit_denominator(10 ** 6) for c in sol]
        out.append(field.element(coeffs))
    return tuple(out)

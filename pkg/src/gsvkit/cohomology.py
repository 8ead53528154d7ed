"""Mayer-Vietoris bookkeeping for the compactified stratified variety.

The engine works with dimensions of graded vector spaces over a field of
characteristic zero (degrees 0..6, optionally Hodge-bigraded).  Its scope
is the configuration at hand: a base piece glued to a disjoint union of
2-spheres along finitely many points, one per sphere.  Two counting modes
are kept side by side:

  raw      - the literal long-exact-sequence count; the n sphere classes
             all land in degree 2.
  refined  - sphere classes are identified whenever their nodes lie on the
             same 4-cycle class, so degree 2 gains only N = #classes.

The refined identification is taken as an axiom of the engine; the raw
count stays available so the discrepancy n - N is always visible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Optional, Sequence, Tuple

from .errors import ExactnessError, GsvInputError, MalformedIncidenceError
from .linalg import matrix_rank

DEGREES = range(7)


@dataclass(frozen=True)
class GradedSpace:
    """Dimensions of H^0..H^6, with an optional (p,q) refinement."""

    dims: Tuple[int, ...]
    hodge: Optional[Mapping[Tuple[int, int], int]] = None

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        if len(dims) != 7:
            raise GsvInputError("expected exactly 7 graded dimensions (degrees 0..6)")
        if any(d < 0 for d in dims):
            raise GsvInputError("graded dimensions must be non-negative")
        object.__setattr__(self, "dims", dims)
        if self.hodge is not None:
            hodge = {(int(p), int(q)): int(v) for (p, q), v in dict(self.hodge).items()}
            if any(v < 0 for v in hodge.values()):
                raise GsvInputError("Hodge numbers must be non-negative")
            for p, q in hodge:
                if p < 0 or q < 0 or p + q > 6:
                    raise GsvInputError(f"Hodge index ({p},{q}) outside degrees 0..6")
            for k in DEGREES:
                total = sum(v for (p, q), v in hodge.items() if p + q == k)
                if total != dims[k]:
                    raise GsvInputError(
                        f"Hodge numbers in total degree {k} sum to {total}, expected {dims[k]}")
            object.__setattr__(self, "hodge", hodge)

    def euler(self) -> int:
        return sum((-1) ** q * d for q, d in enumerate(self.dims))

    def to_json_dict(self):
        out: Dict[str, object] = {"dims": list(self.dims)}
        if self.hodge is not None:
            out["hodge"] = {f"{p},{q}": v for (p, q), v in sorted(self.hodge.items())}
        return out


def euler_characteristic(h: GradedSpace) -> int:
    return h.euler()


def spheres(n: int) -> GradedSpace:
    """Cohomology of n disjoint 2-spheres."""
    return GradedSpace((n, 0, n, 0, 0, 0, 0))


def points(n: int) -> GradedSpace:
    """Cohomology of n disjoint points."""
    return GradedSpace((n, 0, 0, 0, 0, 0, 0))


@dataclass(frozen=True)
class ConifoldData:
    """Base cohomology plus the node-to-4-cycle incidence bookkeeping.

    `incidence` has one row per node and one column per 4-cycle class; the
    partition invariant is one 1 per row and no empty column.
    """

    base: GradedSpace
    n: int
    incidence: Tuple[Tuple[int, ...], ...]
    n_classes: int

    @classmethod
    def from_classes(cls, base: GradedSpace, n: int,
                     classes: Sequence[Sequence[int]]) -> "ConifoldData":
        """Build from a partition of {1..n} into class index sets."""
        n_classes = len(classes)
        rows = [[0] * n_classes for _ in range(n)]
        for k, members in enumerate(classes):
            for j in members:
                if not 1 <= j <= n:
                    raise MalformedIncidenceError(f"node index {j} outside 1..{n}")
                rows[j - 1][k] += 1
        data = cls(base, n, tuple(tuple(r) for r in rows), n_classes)
        data.validate()
        return data

    def validate(self):
        if self.n < 0:
            raise MalformedIncidenceError("negative node count")
        if len(self.incidence) != self.n:
            raise MalformedIncidenceError(
                f"incidence has {len(self.incidence)} rows, expected n = {self.n}")
        if self.n_classes > self.n:
            raise MalformedIncidenceError("more 4-cycle classes than nodes")
        if self.n == 0:
            if self.n_classes != 0:
                raise MalformedIncidenceError("classes present with no nodes")
            return
        if self.n_classes == 0:
            raise MalformedIncidenceError("nodes present but no 4-cycle classes")
        for j, row in enumerate(self.incidence, start=1):
            if len(row) != self.n_classes:
                raise MalformedIncidenceError(f"row {j} has wrong length")
            if any(v not in (0, 1) for v in row):
                raise MalformedIncidenceError(f"row {j} has entries outside {{0, 1}}")
            if sum(row) != 1:
                raise MalformedIncidenceError(
                    f"node {j} lies on {sum(row)} classes, expected exactly 1")
        for k in range(self.n_classes):
            if not any(row[k] for row in self.incidence):
                raise MalformedIncidenceError(f"4-cycle class {k + 1} has no nodes")

    @property
    def classes(self) -> Tuple[Tuple[int, ...], ...]:
        return antenna_classes(self)

    def to_json_dict(self):
        out = {"base_dims": list(self.base.dims), "n": self.n,
               "classes": [list(c) for c in antenna_classes(self)]}
        if self.base.hodge is not None:
            out["base_hodge"] = {f"{p},{q}": v
                                 for (p, q), v in sorted(self.base.hodge.items())}
        return out

    @classmethod
    def from_json_dict(cls, obj) -> "ConifoldData":
        hodge = None
        if obj.get("base_hodge") is not None:
            hodge = {}
            for key, v in obj["base_hodge"].items():
                p, q = key.split(",")
                hodge[(int(p), int(q))] = int(v)
        base = GradedSpace(tuple(obj["base_dims"]), hodge)
        return cls.from_classes(base, int(obj["n"]), obj.get("classes", []))


def antenna_classes(data: ConifoldData) -> Tuple[Tuple[int, ...], ...]:
    """The partition of {1..n} read off the incidence rows."""
    data.validate()
    out = []
    for k in range(data.n_classes):
        out.append(tuple(j for j, row in enumerate(data.incidence, start=1) if row[k]))
    return tuple(out)


@dataclass(frozen=True)
class PairingMatrix:
    """0/1 intersection pairing of sphere classes against 4-cycle classes."""

    entries: Tuple[Tuple[int, ...], ...]

    def collapse_classes(self, data: ConifoldData) -> "PairingMatrix":
        """Quotient equal rows class by class; the result is square."""
        rows = []
        for members in antenna_classes(data):
            first = self.entries[members[0] - 1]
            for j in members[1:]:
                if self.entries[j - 1] != first:
                    raise MalformedIncidenceError(
                        "rows within one class differ; identification axiom violated")
            rows.append(first)
        return PairingMatrix(tuple(rows))

    def rank(self) -> int:
        if not self.entries:
            return 0
        return matrix_rank([[Fraction(v) for v in row] for row in self.entries])

    def is_identity(self) -> bool:
        m = len(self.entries)
        return all(len(row) == m and all(v == (1 if i == j else 0)
                                         for j, v in enumerate(row))
                   for i, row in enumerate(self.entries))


def pairing_matrix(data: ConifoldData) -> PairingMatrix:
    """Entry (j, k) is 1 exactly when node j lies on 4-cycle class k; the
    same matrix serves the cup-product pairing evaluated over the common
    support point."""
    data.validate()
    return PairingMatrix(data.incidence)


def mayer_vietoris(piece_a: GradedSpace, piece_b: GradedSpace,
                   intersection: GradedSpace, mode: str = "raw",
                   data: Optional[ConifoldData] = None) -> GradedSpace:
    """Glue two pieces along a point-like intersection.

    With the intersection concentrated in degree 0, the long exact sequence
    splits: degrees 2..6 add up directly, and surjectivity of the degree-0
    comparison map pins down H^0 and H^1.  Refined mode additionally
    collapses the degree-2 sphere contribution from n to N classes.
    """
    if any(intersection.dims[q] for q in range(1, 7)):
        raise GsvInputError(
            "intersection must be a disjoint union of points (degree 0 only)")
    n = intersection.dims[0]
    if piece_b.dims[0] < n:
        raise ExactnessError(
            "second piece has fewer components than intersection points; "
            "the restriction map cannot be onto")
    h0 = piece_a.dims[0] + piece_b.dims[0] - n
    if h0 < 1:
        raise ExactnessError("degree-0 exactness fails: union would be empty")
    dims = [h0, piece_a.dims[1] + piece_b.dims[1]]
    dims += [piece_a.dims[q] + piece_b.dims[q] for q in range(2, 7)]
    if mode == "raw":
        return GradedSpace(tuple(dims))
    if mode != "refined":
        raise GsvInputError(f"unknown mode {mode!r}")
    if data is None:
        raise GsvInputError("refined mode needs ConifoldData")
    data.validate()
    if data.n != n:
        raise GsvInputError(
            f"intersection has {n} points but ConifoldData declares n = {data.n}")
    if piece_b.dims != spheres(n).dims:
        raise GsvInputError(
            "refined mode applies to the sphere configuration: "
            "second piece must be n disjoint 2-spheres")
    dims[2] = piece_a.dims[2] + data.n_classes
    return GradedSpace(tuple(dims))


def cohomology_of_closure(data: ConifoldData) -> GradedSpace:
    """H of the compactified union: the base everywhere except degree 2,
    which gains one class per 4-cycle class."""
    data.validate()
    out = mayer_vietoris(data.base, spheres(data.n), points(data.n),
                         mode="refined", data=data)
    if data.base.hodge is not None:
        hodge = dict(data.base.hodge)
        hodge[(1, 1)] = hodge.get((1, 1), 0) + data.n_classes
        out = GradedSpace(out.dims, hodge)
    return out


@dataclass(frozen=True)
class KahlerReport:
    """Even-degree duality checks; H^3 is deliberately never consulted."""

    h0_equals_h6: bool
    h2_equals_h4: bool
    pairing_nondegenerate: bool
    warnings: Tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return self.h0_equals_h6 and self.h2_equals_h4 and self.pairing_nondegenerate

    def to_json_dict(self):
        return {
            "h0_equals_h6": self.h0_equals_h6,
            "h2_equals_h4": self.h2_equals_h4,
            "pairing_nondegenerate": self.pairing_nondegenerate,
            "passed": self.passed,
            "warnings": list(self.warnings),
        }

    def summary_text(self) -> str:
        mark = lambda ok: "pass" if ok else "FAIL"
        lines = [
            f"(i)   dim H^0 = dim H^6 : {mark(self.h0_equals_h6)}",
            f"(ii)  dim H^2 = dim H^4 : {mark(self.h2_equals_h4)}",
            f"(iii) even pairing nondegenerate : {mark(self.pairing_nondegenerate)}",
            "(H^3 excluded by construction)",
        ]
        lines += [f"warning: {w}" for w in self.warnings]
        return "\n".join(lines)


def check_kahler_package(h: GradedSpace, data: ConifoldData) -> KahlerReport:
    """Verify Poincare-duality style balance on even degrees.

    Item (iii) splits the pairing into the class-collapsed identity block
    (sphere classes against their dual 4-cycle classes) and the complement,
    which is nondegenerate exactly when it is square.
    """
    data.validate()
    warnings = []
    if data.base.dims[4] != data.base.dims[2] + data.n_classes:
        warnings.append(
            f"base data violates dim H^4(base) = dim H^2(base) + N "
            f"({data.base.dims[4]} != {data.base.dims[2]} + {data.n_classes})")
    i1 = h.dims[0] == h.dims[6]
    i2 = h.dims[2] == h.dims[4]
    if data.n:
        collapsed = pairing_matrix(data).collapse_classes(data)
        block_ok = collapsed.is_identity() and collapsed.rank() == data.n_classes
    else:
        block_ok = True
    complement_square = (h.dims[2] - data.n_classes) == (h.dims[4] - data.n_classes)
    i3 = block_ok and complement_square and h.dims[2] >= data.n_classes
    return KahlerReport(i1, i2, i3, tuple(warnings))


def cohomology_report(data: ConifoldData, mode: str = "refined") -> dict:
    """Both counts, their discrepancy, and the Kahler check for one dataset."""
    if mode not in ("raw", "refined"):
        raise GsvInputError(f"unknown mode {mode!r}")
    data.validate()
    raw = mayer_vietoris(data.base, spheres(data.n), points(data.n), mode="raw")
    refined = cohomology_of_closure(data)
    chosen = refined if mode == "refined" else raw
    kahler = check_kahler_package(chosen, data)
    report = {
        "mode": mode,
        "n": data.n,
        "classes": data.n_classes,
        "raw_dims": list(raw.dims),
        "refined_dims": list(refined.dims),
        "result": chosen.to_json_dict(),
        "euler_raw": raw.euler(),
        "euler_refined": refined.euler(),
        "euler_base": data.base.euler(),
        "discrepancy": data.n - data.n_classes,
        "kahler": kahler.to_json_dict(),
    }
    return report


def cohomology_report_text(report: dict) -> str:
    width = max(5, max(len(str(d)) for d in report["raw_dims"]))
    lines = [
        "q       " + " ".join(f"{'H^' + str(q):>{width}}" for q in DEGREES),
        "raw     " + " ".join(f"{d:>{width}}" for d in report["raw_dims"]),
        "refined " + " ".join(f"{d:>{width}}" for d in report["refined_dims"]),
        f"euler: base {report['euler_base']}, raw {report['euler_raw']}, "
        f"refined {report['euler_refined']}",
    ]
    if report["discrepancy"]:
        lines.append(
            f"raw/refined discrepancy in degree 2: n - N = {report['discrepancy']}")
    lines.append("Kahler package on even degrees (mode %s):" % report["mode"])
    mark = lambda ok: "pass" if ok else "FAIL"
    k = report["kahler"]
    lines.append(f"  (i)   dim H^0 = dim H^6 : {mark(k['h0_equals_h6'])}")
    lines.append(f"  (ii)  dim H^2 = dim H^4 : {mark(k['h2_equals_h4'])}")
    lines.append(f"  (iii) even pairing nondegenerate : {mark(k['pairing_nondegenerate'])}")
    for w in k["warnings"]:
        lines.append(f"  warning: {w}")
    return "\n".join(lines)

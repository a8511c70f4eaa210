"""Central hyperplane arrangements and their intersection lattices.

An arrangement is a finite set of distinct linear hyperplanes through the
origin of C^n, each given by a primitive integer normal vector.  From it we
build the intersection lattice (all intersections of subsets of hyperplanes,
ordered by reverse inclusion), the Mobius function of that lattice, and the
Poincare and characteristic polynomials.  Everything is exact over Q.

A flat is identified by the reduced row echelon form of the span of the
normals of the hyperplanes containing it, scaled to primitive integer rows;
this canonical key makes flat equality, hashing and the lattice order cheap
and input-order independent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
import json
from pathlib import Path
from typing import Iterable, Sequence

from . import linalg

DEFAULT_MAX_FLATS = 100_000


class InputError(ValueError):
    """Invalid user input: malformed files, non-central or duplicate data."""


class FlatLimitError(InputError):
    """The lattice closure exceeded the configured flat-count limit."""


# ---------------------------------------------------------------------------
# Hyperplanes and arrangements
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Hyperplane:
    """A linear hyperplane, as the primitive integer coefficients of its form.

    Canonical representative: entries coprime, first nonzero entry positive.
    Use :func:`canonicalize_hyperplane` to construct one from raw rationals.
    """

    normal: tuple[int, ...]

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.normal) + ")"


def canonicalize_hyperplane(raw: Sequence[Fraction | int | str]) -> Hyperplane:
    """Clear denominators, divide by the content, and fix the sign."""
    try:
        fracs = [Fraction(x) for x in raw]
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InputError(f"invalid rational entry in normal vector {list(raw)!r}: {exc}") from None
    if not fracs or all(x == 0 for x in fracs):
        raise InputError(f"zero normal vector {list(raw)!r} does not define a hyperplane")
    denom_lcm = 1
    for x in fracs:
        denom_lcm = denom_lcm * x.denominator // gcd(denom_lcm, x.denominator)
    ints = [int(x * denom_lcm) for x in fracs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    ints = [v // g for v in ints]
    lead = next(v for v in ints if v != 0)
    if lead < 0:
        ints = [-v for v in ints]
    return Hyperplane(tuple(ints))


@dataclass(frozen=True)
class Arrangement:
    """A central arrangement: ambient dimension and distinct hyperplanes.

    Centrality is structural -- normals carry no constant term.  Duplicate
    hyperplanes are rejected rather than merged, so the divisor of the
    arrangement is always reduced.
    """

    n: int
    hyperplanes: tuple[Hyperplane, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InputError(f"ambient dimension must be nonnegative, got {self.n}")
        if self.hyperplanes and self.n < 1:
            raise InputError("hyperplanes need a positive ambient dimension")
        seen = set()
        for h in self.hyperplanes:
            if len(h.normal) != self.n:
                raise InputError(
                    f"normal vector {h} has length {len(h.normal)}, expected {self.n}"
                )
            if h in seen:
                raise InputError(f"duplicate hyperplane {h}: the divisor must be reduced")
            seen.add(h)

    @classmethod
    def from_normals(cls, n: int, normals: Iterable[Sequence]) -> "Arrangement":
        return cls(n, tuple(canonicalize_hyperplane(v) for v in normals))

    @property
    def d(self) -> int:
        return len(self.hyperplanes)

    def without(self, index: int) -> "Arrangement":
        hs = self.hyperplanes
        return Arrangement(self.n, hs[:index] + hs[index + 1 :])


# ---------------------------------------------------------------------------
# Flats and the intersection lattice
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Flat:
    """A flat of the lattice: canonical matrix of its normal span.

    ``matrix`` holds the primitive integer rows of the Q-RREF of the span of
    the normals of all hyperplanes containing the flat; two flats are equal
    iff their matrices are identical.  ``codim`` is the number of rows.
    """

    matrix: tuple[tuple[int, ...], ...]
    codim: int
    hyperplanes: tuple[int, ...]

    def frac_rows(self) -> list[list[Fraction]]:
        return [[Fraction(v) for v in row] for row in self.matrix]


class IntersectionLattice:
    """The poset of flats of an arrangement with its Mobius function.

    The order is reverse inclusion of subspaces: ``Z <= W`` iff ``W`` is
    contained in ``Z``, i.e. the normal span of ``Z`` is contained in the
    normal span of ``W``.  The ambient space is the unique minimal flat.
    Flats are stored sorted by (codim, matrix), so the representation does
    not depend on the input order of the hyperplanes.
    """

    def __init__(self, arrangement: Arrangement, flats: Sequence[Flat], mu: dict[Flat, int]):
        self.arrangement = arrangement
        self.flats = tuple(sorted(flats, key=lambda f: (f.codim, f.matrix)))
        self._mu = dict(mu)

    @property
    def n(self) -> int:
        return self.arrangement.n

    @property
    def d(self) -> int:
        return self.arrangement.d

    def mu(self, flat: Flat) -> int:
        return self._mu[flat]

    def leq(self, a: Flat, b: Flat) -> bool:
        """Lattice order: a <= b iff span(a) is contained in span(b)."""
        if a.codim > b.codim:
            return False
        rows_b = b.frac_rows()
        return all(linalg.in_rowspace(row, rows_b) for row in a.matrix)

    def flats_of_codim(self, c: int) -> list[Flat]:
        return [f for f in self.flats if f.codim == c]

    def __iter__(self):
        return iter(self.flats)

    def __len__(self) -> int:
        return len(self.flats)


def build_lattice(arr: Arrangement, max_flats: int = DEFAULT_MAX_FLATS) -> IntersectionLattice:
    """Construct the intersection lattice of an arrangement.

    Closure: start from the ambient space and repeatedly intersect known
    flats with each hyperplane, deduplicating by the canonical RREF key.
    The Mobius function is then computed by the defining recursion
    ``mu(V) = 1`` and ``mu(W) = -sum(mu(Z) for Z < W)`` over flats in order
    of increasing codimension, and the vanishing interval sums are
    re-verified before returning.
    """
    normals = [[Fraction(v) for v in h.normal] for h in arr.hyperplanes]
    spans: dict[tuple[tuple[int, ...], ...], list[list[Fraction]]] = {(): []}
    queue: list[tuple[tuple[int, ...], ...]] = [()]
    while queue:
        key = queue.pop()
        rows = spans[key]
        for normal in normals:
            if linalg.in_rowspace(normal, rows):
                continue
            new_rows = linalg.rref(rows + [normal])
            new_key = linalg.primitive_integer_rows(new_rows)
            if new_key not in spans:
                spans[new_key] = new_rows
                queue.append(new_key)
                if len(spans) > max_flats:
                    raise FlatLimitError(
                        f"intersection lattice exceeds {max_flats} flats; "
                        "raise the limit to proceed"
                    )

    flats = []
    for key, rows in spans.items():
        contained = tuple(
            i for i, normal in enumerate(normals) if linalg.in_rowspace(normal, rows)
        )
        flats.append(Flat(matrix=key, codim=len(key), hyperplanes=contained))
    flats.sort(key=lambda f: (f.codim, f.matrix))

    mu: dict[Flat, int] = {}
    below: dict[Flat, list[Flat]] = {}
    for w in flats:
        rows_w = w.frac_rows()
        lower = [
            z
            for z in flats
            if z.codim < w.codim
            and all(linalg.in_rowspace(row, rows_w) for row in z.matrix)
        ]
        below[w] = lower
        mu[w] = 1 if w.codim == 0 else -sum(mu[z] for z in lower)

    for w in flats:
        if w.codim > 0 and sum(mu[z] for z in below[w]) + mu[w] != 0:
            raise ArithmeticError("Mobius interval sum failed to vanish (internal error)")

    return IntersectionLattice(arr, flats, mu)


# ---------------------------------------------------------------------------
# Poincare and characteristic polynomials
# ---------------------------------------------------------------------------


def poincare_polynomial(lat: IntersectionLattice) -> list[int]:
    """Coefficients (ascending) of pi(x) = sum over flats of mu(W) (-x)^codim(W)."""
    top = max((f.codim for f in lat.flats), default=0)
    coeffs = [0] * (top + 1)
    for f in lat.flats:
        coeffs[f.codim] += lat.mu(f) * (-1 if f.codim % 2 else 1)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def char_polynomial(lat: IntersectionLattice) -> list[int]:
    """Coefficients (ascending) of chi(x) = x^n pi(-1/x); monic of degree n."""
    n = lat.n
    pi = poincare_polynomial(lat)
    coeffs = [0] * (n + 1)
    for i, c in enumerate(pi):
        coeffs[n - i] = c * (-1 if i % 2 else 1)
    return coeffs


def deletion_restriction(arr: Arrangement, h0: int) -> tuple[Arrangement, Arrangement]:
    """The deletion A' and restriction A'' with respect to one hyperplane.

    The deletion drops the hyperplane; the restriction lives inside it, in
    coordinates given by an explicit rational basis of its kernel, and
    consists of the distinct traces of all other hyperplanes.
    """
    if not 0 <= h0 < arr.d:
        raise InputError(f"hyperplane index {h0} out of range for d={arr.d}")
    deleted = arr.without(h0)
    pivot_normal = [Fraction(v) for v in arr.hyperplanes[h0].normal]
    basis = linalg.kernel([pivot_normal])
    traces: list[Hyperplane] = []
    seen = set()
    for h in deleted.hyperplanes:
        coords = [
            sum(Fraction(g) * b[j] for j, g in enumerate(h.normal)) for b in basis
        ]
        if all(x == 0 for x in coords):
            # would mean h contains the pivot hyperplane, impossible for
            # distinct hyperplanes
            raise ArithmeticError("degenerate trace in restriction (internal error)")
        trace = canonicalize_hyperplane(coords)
        if trace not in seen:
            seen.add(trace)
            traces.append(trace)
    return deleted, Arrangement(arr.n - 1, tuple(traces))


# ---------------------------------------------------------------------------
# Built-in families
# ---------------------------------------------------------------------------


def builtin_family(name: str, params: Sequence[int]) -> Arrangement:
    """Construct a member of one of the built-in arrangement families.

    boolean(n)            coordinate hyperplanes of C^n
    braid(n)              the hyperplanes x_i = x_j in C^n
    generic(n, d)         d hyperplanes with moment-curve normals
                          (1, a, ..., a^(n-1)), a = 1..d: any n of them are
                          independent, so d <= n is in general position
    concurrent_lines(d)   d distinct lines through the origin of C^2
    """
    params = tuple(int(p) for p in params)
    if name == "boolean":
        if len(params) != 1 or params[0] < 1:
            raise InputError("boolean family takes one parameter n >= 1")
        n = params[0]
        return Arrangement.from_normals(
            n, [[1 if j == i else 0 for j in range(n)] for i in range(n)]
        )
    if name == "braid":
        if len(params) != 1 or params[0] < 1:
            raise InputError("braid family takes one parameter n >= 1")
        n = params[0]
        normals = []
        for i in range(n):
            for j in range(i + 1, n):
                v = [0] * n
                v[i], v[j] = 1, -1
                normals.append(v)
        return Arrangement.from_normals(n, normals)
    if name == "generic":
        if len(params) != 2 or params[0] < 1 or params[1] < 1:
            raise InputError("generic family takes parameters n >= 1, d >= 1")
        n, d = params
        return Arrangement.from_normals(n, [[a**j for j in range(n)] for a in range(1, d + 1)])
    if name == "concurrent_lines":
        if len(params) != 1 or params[0] < 1:
            raise InputError("concurrent_lines family takes one parameter d >= 1")
        d = params[0]
        normals = [[1, 0], [0, 1]][: min(d, 2)] + [[1, k] for k in range(1, d - 1)]
        return Arrangement.from_normals(2, normals)
    raise InputError(
        f"unknown family {name!r}; available: boolean, braid, generic, concurrent_lines"
    )


def family_from_spec(spec: str) -> Arrangement:
    """Parse a ``name:params`` family spec such as ``braid:4`` or ``generic:3,5``."""
    name, sep, rest = spec.partition(":")
    if not sep or not rest:
        raise InputError(f"family spec {spec!r} must look like name:params, e.g. braid:3")
    try:
        params = [int(p) for p in rest.split(",")]
    except ValueError:
        raise InputError(f"family parameters in {spec!r} must be integers") from None
    return builtin_family(name.strip(), params)


# ---------------------------------------------------------------------------
# Parsing and serialization
# ---------------------------------------------------------------------------


def parse_arrangement_text(text: str) -> Arrangement:
    """Parse the plain-text arrangement format.

    Line ``n: <int>``, line ``hyperplanes:``, then one hyperplane per line as
    n space-separated rationals.  ``#`` starts a comment.
    """
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines or not lines[0].startswith("n:"):
        raise InputError("malformed arrangement file: expected first line 'n: <int>'")
    try:
        n = int(lines[0][2:].strip())
    except ValueError:
        raise InputError(f"malformed arrangement file: bad dimension {lines[0][2:].strip()!r}") from None
    if n < 1:
        raise InputError("malformed arrangement file: dimension must be >= 1")
    if len(lines) < 2 or lines[1] != "hyperplanes:":
        raise InputError("malformed arrangement file: expected line 'hyperplanes:'")
    normals = []
    for line in lines[2:]:
        entries = line.split()
        if len(entries) == n + 1:
            raise InputError(
                f"hyperplane line {line!r} has {n + 1} entries; a constant term makes the "
                "hyperplane affine, but arrangements here must be central"
            )
        if len(entries) != n:
            raise InputError(
                f"malformed arrangement file: hyperplane line {line!r} needs {n} entries"
            )
        normals.append(entries)
    return Arrangement.from_normals(n, normals)


def parse_arrangement_json(doc: dict) -> Arrangement:
    """Parse the JSON arrangement document {"n": int, "hyperplanes": [[...]]}."""
    if not isinstance(doc, dict) or "n" not in doc or "hyperplanes" not in doc:
        raise InputError("malformed arrangement JSON: need keys 'n' and 'hyperplanes'")
    n = doc["n"]
    if not isinstance(n, int) or n < 1:
        raise InputError(f"malformed arrangement JSON: bad dimension {n!r}")
    rows = doc["hyperplanes"]
    if not isinstance(rows, list):
        raise InputError("malformed arrangement JSON: 'hyperplanes' must be a list")
    normals = []
    for row in rows:
        if not isinstance(row, list):
            raise InputError(f"malformed arrangement JSON: hyperplane {row!r} must be a list")
        if len(row) == n + 1:
            raise InputError(
                f"hyperplane {row!r} has {n + 1} entries; a constant term makes the "
                "hyperplane affine, but arrangements here must be central"
            )
        if len(row) != n:
            raise InputError(f"malformed arrangement JSON: hyperplane {row!r} needs {n} entries")
        for x in row:
            if isinstance(x, float):
                raise InputError(
                    f"floating-point entry {x!r} not accepted; use integers or rational strings"
                )
        normals.append(row)
    return Arrangement.from_normals(n, normals)


def load_arrangement(path: str | Path) -> Arrangement:
    """Load an arrangement from a text or JSON file (sniffed by first byte)."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read arrangement file {path}: {exc}") from None
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"malformed arrangement JSON in {path}: {exc}") from None
        return parse_arrangement_json(doc)
    return parse_arrangement_text(text)


def arrangement_to_json(arr: Arrangement) -> dict:
    """Canonical JSON document for an arrangement; reparsing reproduces it."""
    return {
        "n": arr.n,
        "hyperplanes": [[str(v) for v in h.normal] for h in arr.hyperplanes],
    }

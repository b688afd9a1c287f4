"""Exact piecewise-multilinear Moore cubes over Q^dim.

A cube with ``k`` axes is stored as a grid per axis (strictly increasing
Fractions from 0 to the duration) and a value tensor of shape
``(*grid_lengths, dim)``.  Between grid nodes the map is multilinear, so
refinement, concatenation and equality of functions are all exact.

Axes are numbered from 1 in the public API.
"""

from __future__ import annotations

import bisect
import itertools
import math
import random
from fractions import Fraction
from typing import Sequence

import numpy as np

from .core import AxiomReport, Violation


class CubeError(ValueError):
    pass


class GuardError(ValueError):
    """The boundary-matching preconditions of an interchange check do not hold."""

    def __init__(self, failed: list[str]):
        self.failed = failed
        super().__init__("unsatisfied guards: " + ", ".join(failed))


def _frac(x) -> Fraction:
    if isinstance(x, float):
        raise CubeError(f"float {x!r} is not exact; use a Fraction or a 'p/q' string")
    if isinstance(x, bool):
        raise CubeError(f"boolean {x!r} is not a rational")
    return Fraction(x)


class MooreCube:
    __slots__ = ("grids", "values", "_hash", "_faces")

    def __init__(self, grids: Sequence[Sequence], values):
        grids = tuple(tuple(_frac(x) for x in g) for g in grids)
        if not grids:
            raise CubeError("a cube needs at least one axis")
        for i, g in enumerate(grids, 1):
            if len(g) < 2:
                raise CubeError(f"axis {i} grid needs at least 2 entries")
            if g[0] != 0:
                raise CubeError(f"axis {i} grid must start at 0")
            if any(a >= b for a, b in zip(g, g[1:])):
                raise CubeError(f"axis {i} grid is not strictly increasing (duration must be > 0)")
        arr = np.array(values, dtype=object)
        shape = tuple(len(g) for g in grids)
        if arr.ndim != len(shape) + 1 or arr.shape[:-1] != shape:
            raise CubeError(f"values have shape {arr.shape}, expected {shape} + (dim,)")
        if arr.shape[-1] < 1:
            raise CubeError("value dimension must be at least 1")
        flat = [_frac(v) for v in arr.flat]
        arr = np.empty(arr.shape, dtype=object)
        arr.flat[:] = flat
        arr.flags.writeable = False
        self.grids = grids
        self.values = arr
        self._hash = None
        self._faces = {}

    @classmethod
    def _raw(cls, grids, values) -> "MooreCube":
        """Trusted constructor for already-validated Fraction data."""
        c = object.__new__(cls)
        values = np.array(values, dtype=object, copy=True)
        values.flags.writeable = False
        c.grids = tuple(tuple(g) for g in grids)
        c.values = values
        c._hash = None
        c._faces = {}
        return c

    @property
    def k(self) -> int:
        return len(self.grids)

    @property
    def dim(self) -> int:
        return self.values.shape[-1]

    def duration(self, i: int) -> Fraction:
        return self.grids[_axis(self, i)][-1]

    @property
    def durations(self) -> tuple[Fraction, ...]:
        return tuple(g[-1] for g in self.grids)

    def __eq__(self, other):
        if not isinstance(other, MooreCube):
            return NotImplemented
        if self is other:
            return True
        return (
            self.grids == other.grids
            and self.values.shape == other.values.shape
            and bool((self.values == other.values).all())
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.grids, tuple(self.values.flat)))
        return self._hash

    def __repr__(self):
        g = [[str(x) for x in grid] for grid in self.grids]
        return f"MooreCube(k={self.k}, dim={self.dim}, grids={g})"


def _axis(c: MooreCube, i: int) -> int:
    if not 1 <= i <= c.k:
        raise CubeError(f"axis {i} out of range 1..{c.k}")
    return i - 1


# -- constructors -------------------------------------------------------------


def path(times: Sequence, points: Sequence[Sequence]) -> MooreCube:
    """A k=1 cube through ``points`` at the given ``times``."""
    return MooreCube([times], points)


def constant(durations: Sequence, value: Sequence) -> MooreCube:
    grids = [(0, d) for d in durations]
    vals = np.empty((2,) * len(grids) + (len(value),), dtype=object)
    for idx in itertools.product((0, 1), repeat=len(grids)):
        vals[idx] = [_frac(v) for v in value]
    return MooreCube(grids, vals)


# -- evaluation, refinement, canonical form -----------------------------------


def eval_cube(c: MooreCube, p: Sequence) -> tuple[Fraction, ...]:
    p = [_frac(x) for x in p]
    if len(p) != c.k:
        raise CubeError(f"point has {len(p)} coordinates, expected {c.k}")
    cell = []
    for ax, (x, g) in enumerate(zip(p, c.grids), 1):
        if not 0 <= x <= g[-1]:
            raise CubeError(f"coordinate {x} outside [0, {g[-1]}] on axis {ax}")
        m = min(max(bisect.bisect_right(g, x) - 1, 0), len(g) - 2)
        w = (x - g[m]) / (g[m + 1] - g[m])
        cell.append((m, w))
    out = [Fraction(0)] * c.dim
    for corner in itertools.product((0, 1), repeat=c.k):
        weight = Fraction(1)
        idx = []
        for (m, w), b in zip(cell, corner):
            weight *= w if b else 1 - w
            idx.append(m + b)
        if weight:
            v = c.values[tuple(idx)]
            out = [a + weight * b for a, b in zip(out, v)]
    return tuple(out)


def _interp_slices(values, ax, g, new_points):
    """Slices of ``values`` along ``ax`` at ``new_points`` by linear interpolation."""
    out = []
    for x in new_points:
        m = min(max(bisect.bisect_right(g, x) - 1, 0), len(g) - 2)
        lo = np.take(values, m, axis=ax)
        if x == g[m]:
            out.append(lo)
            continue
        hi = np.take(values, m + 1, axis=ax)
        w = (x - g[m]) / (g[m + 1] - g[m])
        out.append(lo + (hi - lo) * w)
    return np.stack(out, axis=ax)


def refine(c: MooreCube, i: int, grid: Sequence) -> MooreCube:
    """Re-express ``c`` on a finer axis-``i`` grid containing the current one."""
    ax = _axis(c, i)
    grid = tuple(sorted({_frac(x) for x in grid}))
    old = c.grids[ax]
    if grid[0] != 0 or grid[-1] != old[-1]:
        raise CubeError("refined grid must span the same duration")
    if not set(old) <= set(grid):
        raise CubeError("refined grid must contain the current grid")
    values = _interp_slices(c.values, ax, old, grid)
    grids = list(c.grids)
    grids[ax] = grid
    return MooreCube._raw(grids, values)


def _integer_scaled(values):
    """``values`` times the lcm of its denominators, as Python ints."""
    flat = list(values.flat)
    d = 1
    for v in flat:
        d = math.lcm(d, v.denominator)
    out = np.empty(values.shape, dtype=object)
    out.flat[:] = [v.numerator * (d // v.denominator) for v in flat]
    return out


def canonicalize(c: MooreCube) -> MooreCube:
    """Drop every interior grid coordinate where the map is affine along that axis."""
    if len(c.grids) and all(len(g) == 2 for g in c.grids):
        return c
    ints = _integer_scaled(c.values)
    keep_all = []
    for ax, g in enumerate(c.grids):
        keep = [0]
        for m in range(1, len(g) - 1):
            lo = np.take(ints, m - 1, axis=ax)
            mid = np.take(ints, m, axis=ax)
            hi = np.take(ints, m + 1, axis=ax)
            # mid lies on the chord iff (mid - lo) * (g+ - g-) == (hi - lo) * (g - g-)
            span, part = g[m + 1] - g[m - 1], g[m] - g[m - 1]
            a = span.numerator * part.denominator
            b = part.numerator * span.denominator
            if not bool(((mid - lo) * a == (hi - lo) * b).all()):
                keep.append(m)
        keep.append(len(g) - 1)
        keep_all.append(keep)
    if all(len(keep) == len(g) for keep, g in zip(keep_all, c.grids)):
        return c
    # affinity along one axis is a property of the function, so the axes can
    # be pruned independently
    values = c.values
    grids = []
    for ax, (keep, g) in enumerate(zip(keep_all, c.grids)):
        if len(keep) < len(g):
            values = np.take(values, keep, axis=ax)
        grids.append(tuple(g[m] for m in keep))
    return MooreCube._raw(grids, values)


def is_canonical(c: MooreCube) -> bool:
    return canonicalize(c) is c


def same_function(a: MooreCube, b: MooreCube) -> bool:
    return canonicalize(a) == canonicalize(b)


# -- per-axis groupement structure --------------------------------------------


def _boundary(c: MooreCube, i: int, end: int) -> MooreCube:
    key = (i, end)
    face = c._faces.get(key)
    if face is None:
        ax = _axis(c, i)
        sl = np.take(c.values, end, axis=ax)
        values = np.stack([sl, sl], axis=ax)
        grids = list(c.grids)
        grids[ax] = (Fraction(0), Fraction(1))
        face = c._faces[key] = canonicalize(MooreCube._raw(grids, values))
    return face


def source_i(c: MooreCube, i: int) -> MooreCube:
    """The face at 0 on axis ``i``, extruded to duration 1 along that axis."""
    return _boundary(c, i, 0)


def target_i(c: MooreCube, i: int) -> MooreCube:
    """The face at the end of axis ``i``, extruded to duration 1 along that axis."""
    return _boundary(c, i, -1)


def composable(c2: MooreCube, c1: MooreCube, i: int) -> bool:
    _check_compatible(c2, c1)
    return source_i(c2, i) == target_i(c1, i)


def _check_compatible(c2: MooreCube, c1: MooreCube):
    if c1.k != c2.k:
        raise CubeError(f"axis counts differ: {c2.k} vs {c1.k}")
    if c1.dim != c2.dim:
        raise CubeError(f"value dimensions differ: {c2.dim} vs {c1.dim}")


def compose_i(c2: MooreCube, c1: MooreCube, i: int) -> MooreCube:
    """``c2 #_i c1``: ``c1`` followed by ``c2`` along axis ``i``, or ``c1`` if they do not meet."""
    _check_compatible(c2, c1)
    ax = _axis(c1, i)
    if source_i(c2, i) != target_i(c1, i):
        return c1
    a, b = c1, c2
    for other in range(1, c1.k + 1):
        if other == i:
            continue
        union = sorted(set(a.grids[other - 1]) | set(b.grids[other - 1]))
        if a.grids[other - 1] != tuple(union):
            a = refine(a, other, union)
        if b.grids[other - 1] != tuple(union):
            b = refine(b, other, union)
    d = a.grids[ax][-1]
    grid = a.grids[ax] + tuple(d + x for x in b.grids[ax][1:])
    tail = np.take(b.values, range(1, b.values.shape[ax]), axis=ax)
    values = np.concatenate([a.values, tail], axis=ax)
    grids = list(a.grids)
    grids[ax] = grid
    return canonicalize(MooreCube._raw(grids, values))


def check_axis_commutation(c: MooreCube, i: int, j: int) -> bool:
    if i == j:
        raise CubeError("axes must differ")
    s, t = source_i, target_i
    return (
        s(s(c, j), i) == s(s(c, i), j)
        and t(t(c, j), i) == t(t(c, i), j)
        and s(t(c, j), i) == t(s(c, i), j)
        and s(t(c, i), j) == t(s(c, j), i)
    )


def interchange_guards(c1, c2, c3, c4, i: int, j: int) -> list[str]:
    """Names of the unsatisfied boundary conditions (empty when all hold)."""
    failed = []
    for name, left, right in (
        (f"s{j}(c2)=t{j}(c1)", source_i(c2, j), target_i(c1, j)),
        (f"s{j}(c4)=t{j}(c3)", source_i(c4, j), target_i(c3, j)),
        (f"s{i}(c3)=t{i}(c1)", source_i(c3, i), target_i(c1, i)),
        (f"s{i}(c4)=t{i}(c2)", source_i(c4, i), target_i(c2, i)),
    ):
        if left != right:
            failed.append(name)
    return failed


def check_interchange(c1, c2, c3, c4, i: int, j: int) -> bool:
    """``(c4 #j c3) #i (c2 #j c1) == (c4 #i c2) #j (c3 #i c1)`` with no fallback taken.

    Raises :class:`GuardError` when the boundary preconditions fail.
    """
    if i == j:
        raise CubeError("axes must differ")
    failed = interchange_guards(c1, c2, c3, c4, i, j)
    if failed:
        raise GuardError(failed)
    top, bottom = compose_i(c4, c3, j), compose_i(c2, c1, j)
    right, left = compose_i(c4, c2, i), compose_i(c3, c1, i)
    if not (composable(top, bottom, i) and composable(right, left, j)):
        return False
    return compose_i(top, bottom, i) == compose_i(right, left, j)


# -- random generation ----------------------------------------------------------


def random_rational(rng: random.Random, lo: int = -4, hi: int = 4, den: int = 4) -> Fraction:
    return Fraction(rng.randint(lo * den, hi * den), rng.randint(1, den))


def random_grid(rng: random.Random, max_points: int = 6, duration: Fraction | None = None) -> tuple[Fraction, ...]:
    if duration is None:
        duration = Fraction(rng.randint(1, 12), rng.randint(1, 4))
    n_inner = rng.randint(0, max_points - 2)
    inner = {duration * Fraction(rng.randint(1, 23), 24) for _ in range(n_inner)}
    return (Fraction(0), *sorted(inner), duration)


def random_values(rng: random.Random, shape: tuple[int, ...], dim: int):
    vals = np.empty(shape + (dim,), dtype=object)
    for idx in np.ndindex(*shape, dim):
        vals[idx] = random_rational(rng)
    return vals


def random_cube(rng: random.Random, k: int, dim: int, max_points: int = 6, grids=None) -> MooreCube:
    if grids is None:
        grids = [random_grid(rng, max_points) for _ in range(k)]
    return MooreCube._raw(grids, random_values(rng, tuple(len(g) for g in grids), dim))


def random_refinement(rng: random.Random, c: MooreCube, extra: int = 2) -> MooreCube:
    """Same function on a finer grid: a few random points added on random axes."""
    for _ in range(rng.randint(0, extra)):
        i = rng.randint(1, c.k)
        g = c.grids[i - 1]
        x = g[-1] * Fraction(rng.randint(1, 47), 48)
        c = refine(c, i, set(g) | {x})
    return c


def random_follower(rng: random.Random, c1: MooreCube, i: int, max_points: int = 6) -> MooreCube:
    """A random cube whose axis-``i`` source face is the axis-``i`` target face of ``c1``."""
    ax = i - 1
    grids = list(c1.grids)
    grids[ax] = random_grid(rng, max_points)
    vals = random_values(rng, tuple(len(g) for g in grids), c1.dim)
    last = np.take(c1.values, -1, axis=ax)
    idx = [slice(None)] * (c1.k + 1)
    idx[ax] = 0
    vals[tuple(idx)] = last
    return MooreCube._raw(grids, vals)


def random_interchange_family(rng: random.Random, k: int, dim: int, i: int, j: int, max_points: int = 4):
    """Four cubes meeting the guards of :func:`check_interchange` on axes ``i`` and ``j``.

    ``c1`` is free, ``c2`` follows ``c1`` along ``j``, ``c3`` follows ``c1``
    along ``i``, and ``c4`` follows ``c3`` along ``j`` and ``c2`` along ``i``.
    Each cube is then randomly refined, so the guards only hold as functions.
    """
    ai, aj = i - 1, j - 1
    common = [random_grid(rng, max_points) for _ in range(k)]
    gi = [common[ai], random_grid(rng, max_points)]
    gj = [common[aj], random_grid(rng, max_points)]

    def grids_for(a, b):
        g = list(common)
        g[ai], g[aj] = gi[a], gj[b]
        return g

    def fresh(a, b):
        g = grids_for(a, b)
        return random_values(rng, tuple(len(x) for x in g), dim), g

    def face(vals, ax, end):
        return np.take(vals, end, axis=ax)

    def setface(vals, ax, end, face_vals):
        idx = [slice(None)] * (k + 1)
        idx[ax] = end
        vals[tuple(idx)] = face_vals

    v1, g1 = fresh(0, 0)
    v2, g2 = fresh(0, 1)
    setface(v2, aj, 0, face(v1, aj, -1))
    v3, g3 = fresh(1, 0)
    setface(v3, ai, 0, face(v1, ai, -1))
    v4, g4 = fresh(1, 1)
    setface(v4, aj, 0, face(v3, aj, -1))
    setface(v4, ai, 0, face(v2, ai, -1))
    cubes = [MooreCube._raw(g, v) for g, v in ((g1, v1), (g2, v2), (g3, v3), (g4, v4))]
    return [random_refinement(rng, c) for c in cubes]


# -- sampled law checks ---------------------------------------------------------


def check_groupement_sampled(
    k: int, dim: int, i: int, trials: int, seed: int = 0, max_points: int = 6
) -> AxiomReport:
    """GR 1-3 for ``(cubes; source_i; target_i; compose_i)`` on random composable chains."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    rng = random.Random(seed)
    v1 = v2 = v3 = None
    for trial in range(trials):
        c1 = random_refinement(rng, random_cube(rng, k, dim, max_points))
        c2 = random_refinement(rng, random_follower(rng, c1, i, max_points))
        c3 = random_refinement(rng, random_follower(rng, c2, i, max_points))
        s = lambda c: source_i(c, i)
        t = lambda c: target_i(c, i)
        if v1 is None:
            for law, lhs, rhs in (
                ("ss=s", s(s(c1)), s(c1)),
                ("st=t", s(t(c1)), t(c1)),
                ("tt=t", t(t(c1)), t(c1)),
                ("ts=s", t(s(c1)), s(c1)),
            ):
                if lhs != rhs:
                    v1 = Violation(law, (trial,), (lhs, rhs))
                    break
        c21 = compose_i(c2, c1, i)
        if v2 is None:
            if not composable(c2, c1, i):
                v2 = Violation("edge-matched pair is composable", (trial,), (False, True))
            elif s(c21) != s(c1):
                v2 = Violation("s(x#y)=s(y)", (trial,), (s(c21), s(c1)))
            elif t(c21) != t(c2):
                v2 = Violation("t(x#y)=t(x)", (trial,), (t(c21), t(c2)))
        if v3 is None:
            lhs = compose_i(c3, c21, i)
            rhs = compose_i(compose_i(c3, c2, i), c1, i)
            if lhs != rhs:
                v3 = Violation("(x#y)#z=x#(y#z)", (trial,), (lhs, rhs))
    report = AxiomReport()
    report.record("GR 1", v1)
    report.record("GR 2", v2)
    report.record("GR 3", v3)
    return report

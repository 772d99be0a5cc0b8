"""
Fiber points: roots of the gcd form for P^1 sources, and source points read
off the left kernel of M_nu(p) for any source.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

import numpy as np
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyRing

from constants import DEFAULT_SEED, INSTANCE_RETRIES, NUMERIC_TOLERANCE
from model.exactlinalg import (DenseMatrix, charpoly, inverse, left_nullspace, nullspace_basis,
                               pivot_columns)
from model.matrixrep import MatrixRep, specialize
from model.polyring import (FieldSpec, GradedRingSpec, InconsistencyError, MultiDegree,
                            Parameterization, Polynomial, add_monomials, gcd_all, graded_basis)
from utils import seeded_rng

from .fibers import TargetPoint

LOGGER = logging.getLogger(__name__)


# ---------------------------------- univariate roots


def _univariate_ring(field: FieldSpec) -> PolyRing:
    return PolyRing(["z"], field.domain, lex)


def _value_at(q, a):
    total = q.ring.domain.zero
    for (e,), c in q.items():
        total += c * a ** e
    return total


def roots_univariate(q, field: FieldSpec) -> tuple[list, list]:
    """
    (roots with multiplicity, leftover factors with multiplicity) of a univariate element.
    Over Q: sympy's factor_list; over F_p: a scan of F_p with repeated division.
    """
    roots, leftover = [], []
    if q.degree() <= 0:
        return roots, leftover
    if field.is_rational:
        _, factors = q.factor_list()
        for fac, mult in factors:
            if fac.degree() == 1:
                coeffs = dict(fac.items())
                roots.append((-coeffs.get((0,), field.zero) / coeffs[(1,)], mult))
            else:
                leftover.append((fac, mult))
        return roots, leftover
    z = q.ring.gens[0]
    for a in range(field.p):
        value = field.from_int(a)
        mult = 0
        while q.degree() > 0 and not _value_at(q, value):
            q = q.exquo(z - value)
            mult += 1
        if mult:
            roots.append((value, mult))
    if q.degree() > 0:
        leftover.append((q, 1))
    return roots, leftover


# ---------------------------------- P^1 sources


@dataclass(frozen=True)
class P1Fiber:
    point: TargetPoint
    h: Polynomial
    points: tuple[tuple[tuple, int], ...]
    unresolved: tuple[tuple[Polynomial, int], ...] = ()

    @property
    def degree(self) -> int:
        return self.h.total_degree

    def to_json(self) -> dict:
        fmt = self.h.ring.field.format_element
        return {
            "point": self.point.texts(),
            "h": self.h.to_text(),
            "degree": self.degree,
            "points": [{"coords": [fmt(c) for c in pt], "multiplicity": m} for pt, m in self.points],
            "unresolved": [{"factor": f.to_text(), "multiplicity": m} for f, m in self.unresolved],
        }


def fiber_gcd_form(param: Parameterization, p: TargetPoint) -> Polynomial:
    """h = gcd over i < j of p_i f_j - p_j f_i."""
    forms = []
    for i, j in combinations(range(param.r), 2):
        g = param.maps[j].scale(p.coords[i]) - param.maps[i].scale(p.coords[j])
        if not g.is_zero:
            forms.append(g)
    if not forms:
        raise InconsistencyError("Every minor p_i f_j - p_j f_i vanishes")
    return gcd_all(forms)


def fiber_points_P1(param: Parameterization, point) -> P1Fiber:
    """
    Puntos de la fibra sobre p para una fuente P^1, con multiplicidad.
    Irreducible factors of degree >= 2 stay unresolved.
    """
    ring = param.ring
    if not ring.is_projective_line():
        raise ValueError("fiber_points_P1 needs a P^1 source")
    field = ring.field
    p = point if isinstance(point, TargetPoint) else TargetPoint.of(field, point)
    h = fiber_gcd_form(param, p)
    points: list[tuple[tuple, int]] = []
    if not h.is_constant():
        terms = list(h.element.items())
        at_infinity = min(m[1] for m, _ in terms)
        if at_infinity:
            points.append(((field.one, field.zero), at_infinity))
        q = _univariate_ring(field).from_dict({(m[0],): c for m, c in terms})
        roots, leftover = roots_univariate(q, field)
        points.extend(((value, field.one), mult) for value, mult in roots)
    else:
        leftover = []
    unresolved = []
    for fac, mult in leftover:
        deg = fac.degree()
        hom = {(e[0], deg - e[0]): c for e, c in fac.items()}
        unresolved.append((Polynomial(ring, ring.poly_ring.from_dict(hom)), mult))
        LOGGER.info("Factor of degree %d left unresolved", deg)
    LOGGER.info("Fiber over %s: h = %s, %d point(s)", p, h, len(points))
    return P1Fiber(p, h, tuple(points), tuple(unresolved))


# ---------------------------------- kernel method


@dataclass(frozen=True)
class SourcePoint:
    blocks: tuple[tuple, ...]
    exact: bool = True

    def flat(self) -> tuple:
        return tuple(c for block in self.blocks for c in block)

    def texts(self, ring: GradedRingSpec) -> list[list[str]]:
        if self.exact:
            fmt = ring.field.format_element
            return [[fmt(c) for c in block] for block in self.blocks]
        return [[f"{c:.12g}" for c in block] for block in self.blocks]


@dataclass(frozen=True)
class KernelFiber:
    corank: int
    points: tuple[SourcePoint, ...]
    approximate: bool = False
    diagnostics: tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


def _normalize(values: Sequence, exact: bool) -> Optional[tuple]:
    if exact:
        lead = next((v for v in values if v), None)
        return None if lead is None else tuple(v / lead for v in values)
    lead = next((v for v in values if abs(v) > NUMERIC_TOLERANCE), None)
    if lead is None:
        return None
    out = []
    for v in values:
        w = complex(v / lead)
        out.append(w.real if abs(w.imag) <= NUMERIC_TOLERANCE else w)
    return tuple(out)


def _evaluation_vector(ring: GradedRingSpec, rows, values: Sequence) -> list:
    out = []
    for m in rows:
        term = ring.field.one
        for v, e in zip(values, m):
            if e:
                term = term * v ** e
        out.append(term)
    return out


def in_fiber(M: MatrixRep, point: SourcePoint, p: TargetPoint) -> bool:
    """The evaluation vector annihilates M_nu(p) and psi(x) is a nonzero multiple of p."""
    values = point.flat()
    ev = _evaluation_vector(M.param.ring, M.rows, values)
    if any(specialize(M, p.coords).transpose().apply(ev)):
        return False
    image = M.param.evaluate(values)
    if not any(image):
        return False
    return all(a * q == b * c for (a, c), (b, q) in combinations(zip(image, p.coords), 2))


def _block_operators(M: MatrixRep, K: list, b: int) -> list[list[list]]:
    """V_j for every variable x_j of block b: rows u in R_{nu - e_b}, one column per kernel vector."""
    ring = M.param.ring
    index = {m: k for k, m in enumerate(M.rows)}
    lower = graded_basis(ring, M.nu - MultiDegree.unit(ring.nblocks, b))
    start, stop = ring.block_slices[b]
    ops = []
    for j in range(start, stop):
        e = tuple(1 if t == j else 0 for t in range(ring.nvars))
        ops.append([[w[index[add_monomials(u, e)]] for w in K] for u in lower])
    return ops


def _corank_one(M: MatrixRep, w: Sequence) -> Optional[SourcePoint]:
    blocks = []
    for b in range(M.param.ring.nblocks):
        ops = _block_operators(M, [w], b)
        coords = None
        for u in range(len(ops[0])):
            values = [op[u][0] for op in ops]
            if any(values):
                coords = _normalize(values, True)
                break
        if coords is None:
            return None
        blocks.append(coords)
    return SourcePoint(tuple(blocks))


def _combine(field: FieldSpec, ops, weights) -> list[list]:
    rows, cols = len(ops[0]), len(ops[0][0])
    out = [[field.zero] * cols for _ in range(rows)]
    for op, c in zip(ops, weights):
        for i in range(rows):
            for j in range(cols):
                if op[i][j]:
                    out[i][j] += c * op[i][j]
    return out


def _multiplication_operators(field: FieldSpec, ops, weights, r: int) -> Optional[list[DenseMatrix]]:
    """N_j = V_h[S]^-1 V_j[S] with S a set of r independent rows of V_h."""
    Vh = DenseMatrix.from_rows(field, _combine(field, ops, weights), r)
    S = pivot_columns(Vh.transpose())
    if len(S) < r:
        return None
    Hinv = inverse(Vh.submatrix(S, range(r)))
    return [Hinv.matmul(DenseMatrix.from_rows(field, [op[s] for s in S], r)) for op in ops]


def _distinct_roots(G: DenseMatrix, field: FieldSpec) -> tuple[Optional[list], bool]:
    """(roots, squarefree): roots is None unless charpoly(G) splits with distinct roots."""
    coeffs = charpoly(G)
    n = len(coeffs) - 1
    uni = _univariate_ring(field)
    q = uni.from_dict({(n - k,): c for k, c in enumerate(coeffs) if c})
    if q.gcd(q.diff(uni.gens[0])).degree() > 0:
        return None, False
    roots, leftover = roots_univariate(q, field)
    if leftover:
        return None, True
    return [value for value, _ in roots], True


def _exact_points(field: FieldSpec, N, G: DenseMatrix, roots) -> list[SourcePoint]:
    r = G.rows
    points = []
    for lam in roots:
        shifted = DenseMatrix.from_rows(field, [[G.entry(i, j) - (lam if i == j else field.zero)
                                                for j in range(r)] for i in range(r)], r)
        v = nullspace_basis(shifted)[0]
        i0 = next(i for i, c in enumerate(v) if c)
        blocks = [_normalize([op.apply(v)[i0] / v[i0] for op in ops], True) for ops in N]
        if all(b is not None for b in blocks):
            points.append(SourcePoint(tuple(blocks)))
    return points


def _numeric_points(N, G: DenseMatrix) -> tuple[SourcePoint, ...]:
    _, vectors = np.linalg.eig(np.array(G.to_float_rows(), dtype=float))
    floats = [[np.array(op.to_float_rows(), dtype=float) for op in ops] for ops in N]
    points = []
    for k in range(vectors.shape[1]):
        v = vectors[:, k]
        i0 = int(np.argmax(np.abs(v)))
        blocks = [_normalize([(A @ v)[i0] / v[i0] for A in ops], False) for ops in floats]
        if all(b is not None for b in blocks):
            points.append(SourcePoint(tuple(blocks), exact=False))
    return tuple(points)


def fiber_points_from_kernel(M: MatrixRep, point, seed: int = DEFAULT_SEED,
                             numeric: bool = True) -> KernelFiber:
    """
    Lee los puntos de la fibra desde el núcleo izquierdo de M_nu(p).

    corank 1: coordinates are ratios of the kernel vector at the monomials u*x_j.
    corank >= 2: the operators N_j act on the kernel with eigenvalues x_j/h(x)
    at the fiber points; exact when the characteristic polynomial of a generic
    combination splits with distinct roots, numpy eigenvectors otherwise (Q only).
    """
    field = M.param.ring.field
    p = point if isinstance(point, TargetPoint) else TargetPoint.of(field, point)
    K = [list(w) for w in left_nullspace(specialize(M, p.coords))]
    r = len(K)
    diagnostics = list(M.diagnostics)
    if r == 0:
        return KernelFiber(0, (), False, tuple(diagnostics))
    if any(k < 1 for k in M.nu):
        diagnostics.append(f"degree {M.nu} has a zero component; coordinates are not readable")
        return KernelFiber(r, (), False, tuple(diagnostics))

    if r == 1:
        pt = _corank_one(M, K[0])
        if pt is None or not in_fiber(M, pt, p):
            diagnostics.append("kernel vector is not an evaluation vector; fiber may be non-reduced")
            return KernelFiber(1, (), False, tuple(diagnostics))
        return KernelFiber(1, (pt,), False, tuple(diagnostics))

    rng = seeded_rng(seed, "kernel eigen-method")
    block_ops = [_block_operators(M, K, b) for b in range(M.param.ring.nblocks)]
    fallback = None
    invertible = False
    for attempt in range(INSTANCE_RETRIES):
        N = [_multiplication_operators(field, ops, [field.from_int(rng.randint(1, 97)) for _ in ops], r)
             for ops in block_ops]
        if any(n is None for n in N):
            continue
        invertible = True
        mu = [field.from_int(rng.randint(1, 97)) for _ in N[0]]
        G = DenseMatrix.from_rows(field, _combine(field, [n.to_rows() for n in N[0]], mu), r)
        roots, squarefree = _distinct_roots(G, field)
        if roots is not None:
            candidates = _exact_points(field, N, G, roots)
            good = [pt for pt in candidates if in_fiber(M, pt, p)]
            if len(good) < len(candidates):
                LOGGER.warning("%d eigen-candidate(s) rejected", len(candidates) - len(good))
                diagnostics.append(f"{len(candidates) - len(good)} eigen-candidate(s) rejected")
            LOGGER.info("Kernel method: %d exact point(s) at attempt %d", len(good), attempt)
            return KernelFiber(r, tuple(good), False, tuple(diagnostics))
        if squarefree:
            fallback = (N, G)
            break
    if not invertible:
        diagnostics.append("kernel does not have evaluation form; fiber may be non-reduced")
        return KernelFiber(r, (), False, tuple(diagnostics))
    if fallback is not None and field.is_rational and numeric:
        LOGGER.warning("Eigenvalues outside Q; returning numeric points")
        diagnostics.append("eigenvalues outside the field; points are numeric approximations")
        return KernelFiber(r, _numeric_points(*fallback), True, tuple(diagnostics))
    diagnostics.append("no generic combination with distinct eigenvalues; fiber may be non-reduced")
    return KernelFiber(r, (), False, tuple(diagnostics))

"""Bethe ansatz for the G2 Gaudin model: master polynomials T_j, the
admissible l-pairs, closed-form 2-point solutions, the Wronskian fertility
criterion, and the reproduction procedure."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import repn
from . import rootdata as rd
from .exact import Poly, poly_gcd
from .linalg import solve

INF = float("inf")

# the seven l-pairs that can be admissible
L_LIST = ((0, 0), (0, 1), (1, 1), (1, 2), (1, 3), (2, 3), (2, 4))


def alpha_of_l(l):
    """l1*alpha1 + l2*alpha2 in fundamental coordinates."""
    l1, l2 = l
    return (l1 * rd.ALPHA1[0] + l2 * rd.ALPHA2[0],
            l1 * rd.ALPHA1[1] + l2 * rd.ALPHA2[1])


def l_of_alpha(w):
    """Inverse of alpha_of_l; errors if w is not in the root lattice cone."""
    a, b = rd.to_alpha(w)
    if a < 0 or b < 0:
        raise ValueError(f"{w} is not a nonnegative root-lattice element")
    return (a, b)


@dataclass(frozen=True)
class PolyPair:
    y1: Poly
    y2: Poly

    def __post_init__(self):
        if self.y1.is_zero() or self.y2.is_zero():
            raise ValueError("pair components must be nonzero")

    def monic(self):
        return PolyPair(self.y1.monic(), self.y2.monic())

    def proportional(self, other) -> bool:
        """Projective equality, componentwise."""
        return (self.y1.monic() == other.y1.monic()
                and self.y2.monic() == other.y2.monic())

    def degrees(self):
        return (self.y1.degree, self.y2.degree)


@dataclass(frozen=True)
class BetheData:
    Lambda: tuple  # sequence of weights
    z: tuple       # evaluation points (scalars, at most one INF)
    l: tuple       # (l1, l2)

    def __post_init__(self):
        zs = list(self.z)
        if len(set(zs)) != len(zs):
            raise ValueError("evaluation points must be distinct")
        if sum(1 for p in zs if p == INF) > 1:
            raise ValueError("at most one evaluation point may be infinite")
        if len(self.Lambda) != len(zs):
            raise ValueError("weights and points must have equal length")


def build_calT(Lambda, z):
    """T_j(x) = prod_s (x - z_s)^{<lambda^(s), coroot_j>}; the factor for an
    infinite point is the constant 1."""
    out = []
    for j in (0, 1):
        t = Poly([Fraction(1)])
        for lam, p in zip(Lambda, z):
            if p == INF:
                continue
            e = lam[j]
            if e < 0:
                raise ValueError(f"negative exponent {e} at finite point {p}")
            t = t * Poly([-Fraction(p), Fraction(1)]) ** e
        out.append(t)
    return tuple(out)


def admissible_ls(lam):
    """Indices i such that V_{lam + omega2 - alpha(l_i)} occurs in
    V_lam (x) V_{omega2}."""
    if not rd.is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    summands = repn.tensor_decompose(lam, rd.OMEGA2)
    out = []
    for i, l in enumerate(L_LIST):
        mu = rd.sub(rd.add(lam, rd.OMEGA2), alpha_of_l(l))
        if mu in summands:
            out.append(i)
    return out


def _f(expr_num, expr_den):
    return Fraction(expr_num, expr_den)


def appendix_solution(lam, i) -> PolyPair:
    """The closed-form solution pair for Lambda = (lam, omega2), z = (0, 1),
    and the i-th admissible l-pair."""
    if i not in admissible_ls(lam):
        raise ValueError(f"l_{i} is not admissible for {lam}")
    a, b = lam  # lambda_1, lambda_2
    one = Poly([Fraction(1)])
    if i == 0:
        return PolyPair(one, one)
    if i == 1:
        return PolyPair(one, Poly([-_f(b, b + 1), 1]))
    if i == 2:
        y1 = Poly([-_f(a * (3 * a + b + 3), (a + 1) * (3 * a + b + 4)), 1])
        y2 = Poly([-_f(3 * a + b + 3, 3 * a + b + 4), 1])
        return PolyPair(y1, y2)
    if i == 3:
        y1 = Poly([-_f((3 * a + b + 3) * (3 * a + 2 * b + 4),
                       (3 * a + b + 5) * (3 * a + 2 * b + 6)), 1])
        c1 = -_f(2 * (3 * a + 2 * b + 4) * (3 * a + 5 * b + 3 * a * b + b * b + 6),
                 (b + 2) * (3 * a + b + 5) * (3 * a + 2 * b + 6))
        c0 = _f(b * (3 * a + b + 3) * (3 * a + 2 * b + 4) ** 2,
                (b + 2) * (3 * a + b + 5) * (3 * a + 2 * b + 6) ** 2)
        return PolyPair(y1, Poly([c0, c1, 1]))
    if i == 4:
        y1 = Poly([-_f((a + b + 1) * (3 * a + 2 * b + 4),
                       (a + b + 2) * (3 * a + 2 * b + 5)), 1])
        c2 = -_f(3 * (a + b + 1) * (3 * a * b + 2 * b * b - 2 * a + 3 * b - 2),
                 b * (a + b + 2) * (3 * a + 2 * b + 5))
        c1 = _f(3 * (b - 1) * (a + b + 1) ** 2 * (3 * a + 2 * b + 4)
                * (3 * a * b + 2 * b * b + 2 * a + 6 * b + 4),
                b * (b + 1) * (a + b + 2) ** 2 * (3 * a + 2 * b + 5) ** 2)
        c0 = -_f((b - 1) * (a + b + 1) ** 3 * (3 * a + 2 * b + 4) ** 2,
                 (b + 1) * (a + b + 2) ** 3 * (3 * a + 2 * b + 5) ** 2)
        return PolyPair(y1, Poly([c0, c1, c2, 1]))
    if i == 5:
        d1 = -_f(2 * (2 * a + b + 2) * (3 * a + b + 2)
                 * (3 * a * a + 2 * a * b + 6 * a + b + 3),
                 (a + 1) * (2 * a + b + 3) * (3 * a + b + 3) * (3 * a + 2 * b + 5))
        d0 = _f(a * (2 * a + b + 2) ** 2 * (3 * a + b + 2) * (3 * a + 2 * b + 4),
                (a + 1) * (2 * a + b + 3) ** 2 * (3 * a + b + 4)
                * (3 * a + 2 * b + 5))
        y1 = Poly([d0, d1, 1])
        c2 = -_f(3 * (2 * a + b + 2)
                 * (9 * a * a + 9 * a * b + 2 * b * b + 20 * a + 9 * b + 11),
                 (2 * a + b + 3) * (3 * a + b + 3) * (3 * a + 2 * b + 5))
        c1 = _f(3 * (3 * a + b + 2) * (2 * a + b + 2) ** 2 * (3 * a + 2 * b + 4)
                * (9 * a * a + 9 * a * b + 2 * b * b + 25 * a + 12 * b + 18),
                (2 * a + b + 3) ** 2 * (3 * a + b + 3) * (3 * a + b + 4)
                * (3 * a + 2 * b + 5) ** 2)
        c0 = -_f((2 * a + b + 2) ** 3 * (3 * a + b + 2) * (3 * a + 2 * b + 4) ** 2,
                 (2 * a + b + 3) ** 3 * (3 * a + b + 4) * (3 * a + 2 * b + 5) ** 2)
        return PolyPair(y1, Poly([c0, c1, c2, 1]))
    if i == 6:
        d1 = -_f(2 * (2 * a + b + 2) * (3 * a + 2 * b + 3)
                 * (3 * a * a + 4 * a * b + b * b + 8 * a + 5 * b + 6),
                 (a + b + 2) * (2 * a + b + 3) * (3 * a + b + 4)
                 * (3 * a + 2 * b + 4))
        d0 = _f((a + b + 1) * (2 * a + b + 2) ** 2 * (3 * a + b + 3)
                * (3 * a + 2 * b + 3),
                (a + b + 2) * (2 * a + b + 3) ** 2 * (3 * a + b + 4)
                * (3 * a + 2 * b + 5))
        y1 = Poly([d0, d1, 1])
        A = (9 * a ** 4 * (4 * b + 3)
             + 3 * a ** 3 * (30 * b * b + 78 * b + 47)
             + a * a * (80 * b ** 3 + 372 * b * b + 562 * b + 270)
             + a * (30 * b ** 4 + 208 * b ** 3 + 528 * b * b + 578 * b + 228)
             + 2 * (b + 2) ** 2 * (2 * b ** 3 + 11 * b * b + 18 * b + 9))
        c3 = -_f(2 * A, (b + 1) * (a + b + 2) * (2 * a + b + 3)
                 * (3 * a + b + 4) * (3 * a + 2 * b + 4))
        B = (27 * a ** 5 * (1 + 2 * b)
             + 3 * a ** 4 * (70 + 147 * b + 57 * b * b)
             + 3 * a ** 3 * (215 + 493 * b + 333 * b * b + 70 * b ** 3)
             + 2 * (2 + b) ** 2 * (27 + 60 * b + 47 * b * b + 16 * b ** 3
                                   + 2 * b ** 4)
             + a * a * (978 + 2498 * b + 2263 * b * b + 880 * b ** 3
                        + 125 * b ** 4)
             + 2 * a * (366 + 1049 * b + 1165 * b * b + 634 * b ** 3
                        + 170 * b ** 4 + 18 * b ** 5))
        c2 = _f(6 * B * (1 + a + b) * (2 + 2 * a + b) * (3 + 3 * a + 2 * b),
                (b + 1) * (a + b + 2) ** 2 * (2 * a + b + 3) ** 2
                * (3 * a + b + 4) * (3 * a + 2 * b + 4) ** 2
                * (3 * a + 2 * b + 5))
        C = (3 * a ** 3 * (1 + 4 * b)
             + 2 * (2 + b) ** 2 * (3 + 4 * b + b * b)
             + 2 * a * a * (9 + 28 * b + 11 * b * b)
             + 2 * a * (18 + 47 * b + 31 * b * b + 6 * b ** 3))
        c1 = -_f(2 * C * (1 + a + b) ** 2 * (2 + 2 * a + b) ** 2
                 * (3 + 3 * a + 2 * b) ** 2,
                 (1 + b) * (2 + a + b) ** 3 * (3 + 2 * a + b) ** 3
                 * (4 + 3 * a + b) * (4 + 3 * a + 2 * b) * (5 + 3 * a + 2 * b))
        c0 = _f(b * (a + b + 1) ** 3 * (2 * a + b + 2) ** 3 * (3 * a + b + 3)
                * (3 * a + 2 * b + 3) ** 2,
                (b + 1) * (a + b + 2) ** 3 * (2 * a + b + 3) ** 3
                * (3 * a + b + 4) * (3 * a + 2 * b + 5) ** 2)
        return PolyPair(y1, Poly([c0, c1, c2, c3, 1]))
    raise ValueError(f"case index {i} out of range")


def is_generic(y: PolyPair, Lambda, z) -> bool:
    """Genericity of a pair: squarefree components, roots avoiding the roots
    and singularities of T_j, and no common roots.  All by exact gcds."""
    for j, yj in enumerate((y.y1, y.y2)):
        if poly_gcd(yj, yj.derivative()).degree > 0:
            return False
        sing = Poly([Fraction(1)])
        for lam, p in zip(Lambda, z):
            if p != INF and lam[j] != 0:
                sing = sing * Poly([-Fraction(p), Fraction(1)])
        if poly_gcd(yj, sing).degree > 0:
            return False
    return poly_gcd(y.y1, y.y2).degree <= 0


def bae_residual(y: PolyPair, Lambda, z) -> float:
    """Max absolute value of the Bethe-equation left-hand sides at the
    numerically extracted roots of y1, y2."""
    roots = []
    for yj in (y.y1, y.y2):
        cs = [float(c) for c in yj.monic().coeffs]
        roots.append(np.roots(list(reversed(cs))) if yj.degree > 0
                     else np.array([]))
    t1, t2 = roots
    allr = list(t1) + list(t2)
    for ii in range(len(allr)):
        for jj in range(ii + 1, len(allr)):
            if abs(allr[ii] - allr[jj]) < 1e-6:
                raise ValueError("numeric root collision; pair not generic")
    zs = [p for p in z if p != INF]
    lam_fin = [lam for lam, p in zip(Lambda, z) if p != INF]
    for t, lams, p in [(tt, ll, pp) for tt in t1 for ll, pp in
                       zip(lam_fin, zs) if rd.bilinear(ll, rd.from_alpha(1, 0))]:
        if abs(t - float(p)) < 1e-6:
            raise ValueError("root collides with an evaluation point")
    for t, lams, p in [(tt, ll, pp) for tt in t2 for ll, pp in
                       zip(lam_fin, zs) if rd.bilinear(ll, rd.from_alpha(0, 1))]:
        if abs(t - float(p)) < 1e-6:
            raise ValueError("root collides with an evaluation point")
    alpha1 = rd.from_alpha(1, 0)
    alpha2 = rd.from_alpha(0, 1)
    res = 0.0
    for i, t in enumerate(t1):
        v = 0.0
        for lam, p in zip(Lambda, z):
            if p != INF:
                v -= float(rd.bilinear(lam, alpha1)) / (t - float(p))
        for u in t2:
            v -= 3.0 / (t - u)
        for k, u in enumerate(t1):
            if k != i:
                v += 6.0 / (t - u)
        res = max(res, abs(v))
    for i, t in enumerate(t2):
        v = 0.0
        for lam, p in zip(Lambda, z):
            if p != INF:
                v -= float(rd.bilinear(lam, alpha2)) / (t - float(p))
        for u in t1:
            v -= 3.0 / (t - u)
        for k, u in enumerate(t2):
            if k != i:
                v += 2.0 / (t - u)
        res = max(res, abs(v))
    return res


def _solve_cleared(y: Poly, r: Poly, a: int):
    """Solve a*y*g + x*y*g' - x*y'*g = r for a polynomial g, canonicalized so
    the coefficient along the homogeneous solution x^{-a} y (when polynomial)
    vanishes.  Returns None if no solution exists."""
    dy = y.degree
    D = max(r.degree - dy, dy - a, 0)
    x = Poly([Fraction(0), Fraction(1)])
    xy = x * y
    xyp = x * y.derivative()
    ay = y * Fraction(a)
    nrows = max(dy + D + 1, r.degree + 1)
    cols = []
    for k in range(D + 1):
        g = Poly([Fraction(0)] * k + [Fraction(1)])
        img = ay * g + xy * g.derivative() - xyp * g
        cols.append([img[row] for row in range(nrows)])
    A = [[cols[k][row] for k in range(D + 1)] for row in range(nrows)]
    sol = solve(A, [r[row] for row in range(nrows)])
    if sol is None:
        return None
    g = Poly(sol)
    # kernel reduction
    if a <= 0 or y.valuation() >= a:
        ker = Poly(([Fraction(0)] * (-a) + list(y.coeffs)) if a <= 0
                   else list(y.coeffs[a:]))
        dk = ker.degree
        if dk >= 0 and g[dk]:
            g = g - ker * (g[dk] / ker.leading())
    return g


def fertility_solve(y: Poly, rhs: Poly, a: int):
    """A polynomial g with Wr(y, x^a g) = rhs, if one exists.

    Wr(y, x^a g) = x^{a-1} (a y g + x y g' - x y' g), so the problem reduces
    to the cleared linear system; a may be any integer."""
    if y.is_zero():
        raise ValueError("y must be nonzero")
    if a >= 1:
        if not rhs.is_zero() and rhs.valuation() < a - 1:
            return None
        r = Poly(rhs.coeffs[a - 1:])
    else:
        r = rhs * Poly([Fraction(0), Fraction(1)]) ** (1 - a)
    return _solve_cleared(y, r, a)


def reproduce(y: PolyPair, direction: int, data: BetheData):
    """One reproduction step.  Requires z1 = 0; the first weight may be
    non-dominant (it enters only through x-power bookkeeping).  Returns
    (new pair, new data) or None if the new pair is not generic."""
    if data.z[0] != 0:
        raise ValueError("reproduction requires z1 = 0")
    j = direction
    lam1 = data.Lambda[0]
    a = lam1[j - 1] + 1  # <lambda^(1) + rho, coroot_j>
    rhs_core = Poly([Fraction(1)])
    for lam, p in zip(data.Lambda[1:], data.z[1:]):
        if p == INF:
            continue
        e = lam[j - 1]
        if e < 0:
            raise ValueError("non-first weights must be dominant")
        rhs_core = rhs_core * Poly([-Fraction(p), Fraction(1)]) ** e
    rhs_core = rhs_core * (y.y2 if j == 1 else y.y1 ** 3)
    # Wr(y_j, x^a g) = x^{lam1_j} * rhs_core; the x-powers cancel exactly
    g = _solve_cleared(y.y1 if j == 1 else y.y2, rhs_core, a)
    if g is None or g.is_zero():
        raise ValueError("no fertility witness; input does not represent "
                         "a solution")
    new_pair = PolyPair(g.monic(), y.y2) if j == 1 else PolyPair(y.y1, g.monic())
    new_lam1 = rd.shifted_action_word((j,), lam1)
    rest = (0, 0)
    for lam in data.Lambda[1:]:
        rest = rd.add(rest, lam)
    refl = rd.reflect(j, rd.sub(rest, alpha_of_l(data.l)))
    new_l = l_of_alpha(rd.sub(rest, refl))
    new_data = BetheData((new_lam1,) + tuple(data.Lambda[1:]), data.z, new_l)
    if not is_generic(new_pair, new_data.Lambda, new_data.z):
        return None
    return new_pair, new_data


def affine_map_poly(p: Poly, c, s) -> Poly:
    """Monic image of p under x -> (x - c)/s (roots move by t -> c + s t)."""
    c, s = Fraction(c), Fraction(s)
    q = Poly([-c / s, 1 / s])
    acc = Poly()
    for coef in reversed(p.coeffs):
        acc = acc * q + Poly([coef])
    return acc.monic() if not acc.is_zero() else acc


def translate_pair(y: PolyPair, z1, z2) -> PolyPair:
    """Move a solution normalized at z = (0, 1) to points (z1, z2)."""
    s = Fraction(z2) - Fraction(z1)
    return PolyPair(affine_map_poly(y.y1, Fraction(z1), s),
                    affine_map_poly(y.y2, Fraction(z1), s))

"""Exact characteristic polynomials and the spectral classification of the
27 extremal diameter-4 graphs.

No floating-point eigenvalues anywhere: classification is by exact equality
of integer polynomials, with the published irreducible factors held as
constants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import MixedGraph, TooLargeError


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial, lowest-degree coefficient first."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(x) for x in self.coeffs)
        while len(c) > 1 and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        if self.coeffs == (0,):
            return -1
        return len(self.coeffs) - 1

    def __call__(self, x: int):
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial(tuple(
            x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)
        ))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(tuple(out))

    def __pow__(self, e: int) -> "IntPolynomial":
        out = IntPolynomial((1,))
        for _ in range(e):
            out = out * self
        return out

    def divides(self, other: "IntPolynomial") -> bool:
        """Exact divisibility test over the integers (self must be monic)."""
        q, r = other.divmod_monic(self)
        return all(c == 0 for c in r.coeffs)

    def divmod_monic(self, divisor: "IntPolynomial"):
        if divisor.coeffs[-1] != 1:
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        d = divisor.degree
        if self.degree < d:
            return IntPolynomial((0,)), self
        quot = [0] * (self.degree - d + 1)
        for i in range(self.degree - d, -1, -1):
            c = rem[i + d]
            quot[i] = c
            if c:
                for j, y in enumerate(divisor.coeffs):
                    rem[i + j] -= c * y
        return IntPolynomial(tuple(quot)), IntPolynomial(tuple(rem[:d] or [0]))

    def pretty(self, var: str = "x") -> str:
        if self.degree < 0:
            return "0"
        parts = []
        for e in range(self.degree, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            if e == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else str(abs(c)) + "*"
                term = f"{mag}{var}" + (f"^{e}" if e > 1 else "")
            parts.append(("- " if c < 0 else "+ " if parts else "") + term)
        return " ".join(parts) if parts[0][0] != "+" else " ".join(parts)


def poly(*coeffs_high_first: int) -> IntPolynomial:
    """Convenience constructor from highest-degree-first coefficients."""
    return IntPolynomial(tuple(reversed(coeffs_high_first)))


X = IntPolynomial((0, 1))


def char_poly(g: MixedGraph, cap: int = 64) -> IntPolynomial:
    """det(xI - A) with exact integer coefficients (Faddeev-LeVerrier).

    The recurrence M_1 = A, c_i = -tr(A M_i)/i stays integral for integer
    matrices; each division is asserted exact.
    """
    if g.n > cap:
        raise TooLargeError(f"n={g.n} exceeds the exact char-poly cap {cap}")
    n = g.n
    a = [[int(x) for x in row] for row in g.adjacency_matrix()]
    return _char_poly_faddeev(a, n)


def _char_poly_faddeev(a: list[list[int]], n: int) -> IntPolynomial:
    if n == 0:
        return IntPolynomial((1,))
    # det(xI - A) = x^n + c_1 x^(n-1) + ... + c_n with
    #   M_1 = A, c_k = -tr(M_k)/k, M_k = A (M_{k-1} + c_{k-1} I)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = [row[:] for row in a]
    c = -sum(m[d][d] for d in range(n))
    coeffs[n - 1] = c
    for k in range(2, n + 1):
        for d in range(n):
            m[d][d] += c
        m = _mat_mul(a, m)
        tr = sum(m[d][d] for d in range(n))
        assert tr % k == 0, "Faddeev-LeVerrier trace not divisible"
        c = -tr // k
        coeffs[n - k] = c
    return IntPolynomial(tuple(coeffs))


def _mat_mul(a, b):
    n = len(a)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for k2 in range(n):
            x = ai[k2]
            if x:
                bk = b[k2]
                for j in range(n):
                    oi[j] += x * bk[j]
    return out


def char_poly_interpolated(g: MixedGraph, cap: int = 64) -> IntPolynomial:
    """Cross-check route: Bareiss determinants at n+1 points, then exact
    Lagrange interpolation."""
    if g.n > cap:
        raise TooLargeError(f"n={g.n} exceeds the exact char-poly cap {cap}")
    n = g.n
    adj = g.adjacency_matrix()
    xs = list(range(n + 1))
    ys = []
    for t in xs:
        mat = [[(t if i == j else 0) - int(adj[i, j]) for j in range(n)] for i in range(n)]
        ys.append(_bareiss_det(mat))
    # Lagrange in exact rationals; the result must be integral
    coeffs = [Fraction(0)] * (n + 1)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        denom = 1
        basis = [Fraction(1)]
        for j, xj in enumerate(xs):
            if j == i:
                continue
            denom *= xi - xj
            # multiply basis by (x - xj)
            nxt = [Fraction(0)] * (len(basis) + 1)
            for d, cf in enumerate(basis):
                nxt[d] -= cf * xj
                nxt[d + 1] += cf
            basis = nxt
        w = Fraction(yi, denom)
        for d, cf in enumerate(basis):
            coeffs[d] += cf * w
    out = []
    for cf in coeffs:
        assert cf.denominator == 1
        out.append(int(cf))
    return IntPolynomial(tuple(out))


def _bareiss_det(mat: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination determinant (exact, integer)."""
    n = len(mat)
    if n == 0:
        return 1
    m = [row[:] for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def newton_power_sums(p: IntPolynomial, count: int) -> list[int]:
    """Power sums s_1..s_count of the roots of a monic integer polynomial."""
    n = p.degree
    if p.coeffs[-1] != 1:
        raise ValueError("polynomial must be monic")
    # e_i = (-1)^i * coefficient of x^(n-i)
    e = [1] + [(-1) ** i * p.coeffs[n - i] for i in range(1, n + 1)]
    s: list[int] = []
    for k in range(1, count + 1):
        if k <= n:
            acc = (-1) ** (k - 1) * k * e[k]
            for i in range(1, k):
                acc += (-1) ** (k - 1 + i) * e[k - i] * s[i - 1]
        else:
            acc = 0
            for i in range(1, n + 1):
                acc += (-1) ** (i - 1) * e[i] * s[k - i - 1]
        s.append(acc)
    return s


# ---------------------------------------------------------------------------
# the published irreducible factors and spectrum classes
# ---------------------------------------------------------------------------

def builtin_polynomials() -> tuple[IntPolynomial, ...]:
    """The nine irreducible factors p1..p9 of the extremal spectra."""
    return (
        poly(1, 1, -2, -1, 2),                      # p1
        poly(1, 1, -2, -1),                         # p2
        poly(1, 0, -1, 1),                          # p3
        poly(1, 2, -1, -3),                         # p4
        poly(1, 1, -1, -1, 1),                      # p5
        poly(1, 1, -3, -1, 5, 0, -4),               # p6
        poly(1, 3, 0, -6, 2, 11, -3, -9, 3, 3),     # p7
        poly(1, 1, -3, -2, 5, 2, -3),               # p8
        poly(1, 1, -1, 0, 3, 0, -1),                # p9
    )


@dataclass(frozen=True)
class SpectrumClass:
    """One row of the spectral classification table."""

    class_id: int
    member_count: int
    factors: tuple  # ((IntPolynomial, multiplicity), ...)

    def product(self) -> IntPolynomial:
        out = IntPolynomial((1,))
        for f, mult in self.factors:
            out = out * f ** mult
        return out


def spectrum_classes() -> tuple[SpectrumClass, ...]:
    p1, p2, p3, p4, p5, p6, p7, p8, p9 = builtin_polynomials()
    xm2 = poly(1, -2)
    xm1 = poly(1, -1)
    xp1 = poly(1, 1)
    classes = (
        SpectrumClass(1, 9, ((xm2, 1), (X, 6), (p1, 1), (p2, 1))),
        SpectrumClass(2, 6, ((xm2, 1), (xp1, 1), (xm1, 1), (X, 5), (p3, 1), (p4, 1))),
        SpectrumClass(3, 5, ((xm2, 1), (X, 7), (p2, 2))),
        SpectrumClass(4, 4, ((xm2, 1), (X, 3), (p5, 1), (p6, 1))),
        SpectrumClass(5, 2, ((xm2, 1), (xm1, 1), (X, 3), (p7, 1))),
        SpectrumClass(6, 1, ((xm2, 1), (X, 1), (p8, 1), (p9, 1))),
    )
    for cl in classes:
        assert cl.product().degree == 14
    assert sum(cl.member_count for cl in classes) == 27
    return classes


def classify(g: MixedGraph) -> SpectrumClass | None:
    """Match a 14-vertex graph's exact char poly against the six templates.

    Returns None when unclassified.
    """
    if g.n != 14:
        raise ValueError("classification is defined for 14-vertex graphs")
    p = char_poly(g)
    for cl in spectrum_classes():
        if cl.product() == p:
            return cl
    return None

"""Dense univariate polynomials over Q (coefficient lists, lowest degree first)."""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "trim",
    "padd",
    "psub",
    "pmul",
    "pscale",
    "ppow",
    "peval",
    "pderiv",
    "pdivmod",
    "pgcd",
    "squarefree",
    "sign_variations",
    "isolate_real_roots",
]


def trim(p):
    p = [Fraction(c) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return p


def padd(p, q):
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def psub(p, q):
    return padd(p, [-c for c in q])


def pmul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def pscale(p, c):
    return trim([a * c for a in p])


def ppow(p, n):
    out = [Fraction(1)]
    for _ in range(n):
        out = pmul(out, p)
    return out


def peval(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def pderiv(p):
    return trim([i * p[i] for i in range(1, len(p))])


def pdivmod(p, q):
    p = trim(p)
    q = trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 1)
    rem = list(p)
    lead = q[-1]
    while len(rem) >= len(q) and rem:
        shift = len(rem) - len(q)
        c = rem[-1] / lead
        quot[shift] = c
        for i, b in enumerate(q):
            rem[shift + i] -= c * b
        rem = trim(rem)
    return trim(quot), rem


def pgcd(p, q):
    p, q = trim(p), trim(q)
    while q:
        p, q = q, pdivmod(p, q)[1]
    if not p:
        return p
    return pscale(p, 1 / p[-1])


def squarefree(p):
    """Square-free part of p (same real roots, all simple)."""
    g = pgcd(p, pderiv(p))
    if len(g) <= 1:
        return trim(p)
    return pdivmod(p, g)[0]


def sign_variations(coeffs):
    signs = [c > 0 for c in coeffs if c != 0]
    return sum(1 for x, y in zip(signs, signs[1:]) if x != y)


def _descartes_interval(p, lo, hi):
    """Upper bound on roots of p in (lo, hi) from the Moebius-transformed
    polynomial (1 + x)^d p((lo + hi x)/(1 + x))."""
    d = len(p) - 1
    # q(x) = sum c_i (lo + hi x)^i (1 + x)^(d - i)
    q = [Fraction(0)] * (d + 1)
    num = [Fraction(1)]
    lin = [Fraction(lo), Fraction(hi)]
    for i, c in enumerate(p):
        if c:
            term = pmul(num, ppow([Fraction(1), Fraction(1)], d - i))
            for j, v in enumerate(term):
                q[j] += c * v
        num = pmul(num, lin)
    return sign_variations(q)


def _root_bound(p):
    lead = abs(p[-1])
    return 1 + max((abs(c) / lead for c in p[:-1]), default=Fraction(0))


def isolate_real_roots(p, width=Fraction(1, 10**12)):
    """Disjoint rational intervals ``(lo, hi)`` each holding exactly one real
    root of ``p``; exact roots are returned as ``(r, r)``. Sorted ascending."""
    p = trim(p)
    if len(p) <= 1:
        return []
    p = squarefree(p)
    bound = _root_bound(p)
    stack = [(-bound, bound)]
    found = []
    while stack:
        lo, hi = stack.pop()
        if peval(p, lo) == 0:
            found.append((lo, lo))
        v = _descartes_interval(p, lo, hi)
        if v == 0:
            continue
        if v == 1:
            found.append(_refine(p, lo, hi, width))
            continue
        mid = (lo + hi) / 2
        stack.append((mid, hi))
        stack.append((lo, mid))
    # an endpoint root may have been recorded twice (as lo of one interval)
    found = sorted(set(found))
    return found


def _refine(p, lo, hi, width):
    # exactly one simple root in the open interval (lo, hi); endpoint roots
    # are handled by the caller, so use one-sided signs there
    dp = pderiv(p)
    flo = peval(p, lo)
    s_lo = (flo > 0) if flo != 0 else (peval(dp, lo) > 0)
    while hi - lo > width:
        mid = (lo + hi) / 2
        fm = peval(p, mid)
        if fm == 0:
            return (mid, mid)
        if (fm > 0) == s_lo:
            lo = mid
        else:
            hi = mid
    return (lo, hi)

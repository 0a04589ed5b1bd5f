"""Polynomial factorization over GF(p) and over Q, plus rational roots.

GF(p) work runs on plain integer coefficient lists (ascending degree) for
speed; results are wrapped back into UniPoly over PrimeField.  Factorization
over Q follows the classical route: squarefree decomposition, factorization
modulo a good prime, Hensel lifting past the coefficient bound, and subset
recombination.  Degrees up to 16 are supported, which covers everything this
package produces.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from .errors import ZeroPolynomialError
from .fields import QQ, PrimeField, is_probable_prime
from .poly import UniPoly

FACTOR_DEGREE_CAP = 16


def primes():
    """Prime generator by incremental trial division; small needs only."""
    yield 2
    found = [2]
    n = 3
    while True:
        if all(n % p for p in found if p * p <= n):
            found.append(n)
            yield n
        n += 2


# ---------------------------------------------------------------------------
# GF(p) arithmetic on ascending integer coefficient lists


def _gf_trim(f, p):
    f = [c % p for c in f]
    while f and f[-1] == 0:
        f.pop()
    return f


def _gf_add(f, g, p):
    n = max(len(f), len(g))
    return _gf_trim(
        [(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)], p
    )


def _gf_sub(f, g, p):
    n = max(len(f), len(g))
    return _gf_trim(
        [(f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0) for i in range(n)], p
    )


def _gf_mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return _gf_trim(out, p)


def _gf_divmod(f, g, p):
    if not g:
        raise ZeroDivisionError("polynomial division by zero mod p")
    f = list(f)
    dg = len(g) - 1
    inv = pow(g[-1], p - 2, p)
    if len(f) < len(g):
        return [], _gf_trim(f, p)
    quo = [0] * (len(f) - dg)
    for k in range(len(f) - dg - 1, -1, -1):
        c = f[k + dg] % p * inv % p
        quo[k] = c
        if c:
            for j, b in enumerate(g):
                f[k + j] -= c * b
    return _gf_trim(quo, p), _gf_trim(f[:dg], p)


def _gf_rem(f, g, p):
    return _gf_divmod(f, g, p)[1]


def _gf_monic(f, p):
    if not f:
        return []
    inv = pow(f[-1], p - 2, p)
    return [c * inv % p for c in f]


def _gf_gcd(f, g, p):
    while g:
        f, g = g, _gf_rem(f, g, p)
    return _gf_monic(f, p)


def _gf_pow_mod(f, e, mod, p):
    out = [1]
    f = _gf_rem(f, mod, p)
    while e:
        if e & 1:
            out = _gf_rem(_gf_mul(out, f, p), mod, p)
        e >>= 1
        if e:
            f = _gf_rem(_gf_mul(f, f, p), mod, p)
    return out


def _gf_deriv(f, p):
    return _gf_trim([i * c for i, c in enumerate(f)][1:], p)


def _gf_squarefree_parts(f, p):
    """[(g, multiplicity)] with g monic squarefree, product g^m = input (monic)."""
    f = _gf_monic(f, p)
    out = []

    def recurse(f, mult):
        df = _gf_deriv(f, p)
        if not df:
            # f = h(x^p); take the p-th root and recurse with multiplicity * p
            root = [f[i] for i in range(0, len(f), p)]
            recurse(root, mult * p)
            return
        g = _gf_gcd(f, df, p)
        w = _gf_divmod(f, g, p)[0]
        i = 1
        while len(w) > 1:
            y = _gf_gcd(w, g, p)
            z = _gf_divmod(w, y, p)[0]
            if len(z) > 1:
                out.append((z, mult * i))
            w = y
            g = _gf_divmod(g, y, p)[0]
            i += 1
        if len(g) > 1:
            # the residual is a p-th power; the zero-derivative branch of the
            # recursion extracts the root and scales the multiplicity
            recurse(g, mult)

    recurse(f, 1)
    return out


def _gf_distinct_degree(f, p):
    """[(product of degree-d irreducibles, d)] for monic squarefree f."""
    out = []
    x = [0, 1]
    h = list(x)
    fcur = list(f)
    d = 0
    while len(fcur) - 1 > 2 * d:
        d += 1
        h = _gf_pow_mod(h, p, fcur, p)
        g = _gf_gcd(_gf_sub(h, x, p), fcur, p)
        if len(g) > 1:
            out.append((g, d))
            fcur = _gf_divmod(fcur, g, p)[0]
            h = _gf_rem(h, fcur, p)
    if len(fcur) > 1:
        out.append((fcur, len(fcur) - 1))
    return out


def _gf_equal_degree(f, d, p, rng):
    """Split a monic squarefree product of degree-d irreducibles."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        h = [rng.randrange(p) for _ in range(n)]
        h = _gf_trim(h, p)
        if len(h) < 2:
            continue
        if p == 2:
            # trace map over GF(2^d)
            t = list(h)
            acc = list(h)
            for _ in range(d - 1):
                acc = _gf_pow_mod(acc, 2, f, p)
                t = _gf_add(t, acc, p)
            g = _gf_gcd(t, f, p)
        else:
            g = _gf_gcd(h, f, p)
            if 1 < len(g) < len(f):
                pass
            else:
                e = (p ** d - 1) // 2
                t = _gf_pow_mod(h, e, f, p)
                g = _gf_gcd(_gf_sub(t, [1], p), f, p)
        if 1 < len(g) < len(f):
            rest = _gf_divmod(f, g, p)[0]
            return _gf_equal_degree(g, d, p, rng) + _gf_equal_degree(rest, d, p, rng)


def _gf_factor(f, p, seed=0):
    """Complete monic factorization: [(factor, multiplicity)], sorted."""
    rng = random.Random((seed, p, tuple(f)).__hash__())
    out = []
    for part, mult in _gf_squarefree_parts(f, p):
        for block, d in _gf_distinct_degree(part, p):
            for irr in _gf_equal_degree(block, d, p, rng):
                out.append((irr, mult))
    out.sort(key=lambda fm: (len(fm[0]), fm[0]))
    return out


# ---------------------------------------------------------------------------
# Public factorization API


@dataclass
class FactorList:
    """unit * prod(factor^multiplicity) reproduces the factored input."""

    unit: object
    factors: list

    def expand(self) -> UniPoly:
        first = self.factors[0][0] if self.factors else None
        if first is None:
            raise ValueError("empty factorization cannot be expanded")
        out = UniPoly.constant(first.field, self.unit, first.var)
        for f, m in self.factors:
            out = out * f ** m
        return out

    def degrees(self):
        """Multiset of factor degrees, counting multiplicity."""
        out = []
        for f, m in self.factors:
            out.extend([f.degree] * m)
        return tuple(sorted(out))

    @property
    def is_irreducible(self):
        return len(self.factors) == 1 and self.factors[0][1] == 1


def factor_mod_p(f: UniPoly, p: int | None = None) -> FactorList:
    """Factor f into monic irreducibles over GF(p).

    f may already live over a PrimeField (p optional and checked), or over Q
    with p given, in which case it is reduced first.  p must be prime and must
    not divide the leading coefficient.
    """
    if isinstance(f.field, PrimeField):
        if p is not None and p != f.field.p:
            raise ValueError("p does not match the coefficient field")
        p = f.field.p
        field = f.field
        ints = [c.value for c in f.coeffs]
    else:
        if p is None:
            raise ValueError("p is required for polynomials over Q")
        if not is_probable_prime(p):
            raise ValueError(f"{p} is not prime")
        field = PrimeField(p)
        ints = [field(c).value for c in f.coeffs]
    ints = _gf_trim(ints, p)
    if not ints:
        raise ZeroPolynomialError("cannot factor the zero polynomial")
    if len(ints) == 1:
        return FactorList(unit=field(ints[0]), factors=[])
    unit = field(ints[-1])
    facs = _gf_factor(_gf_monic(ints, p), p)
    out = [(UniPoly(field, [field(c) for c in g], f.var), m) for g, m in facs]
    return FactorList(unit=unit, factors=out)


# ---------------------------------------------------------------------------
# Integer polynomial helpers (ascending int lists)


def _zz_trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def _zz_content(f):
    return reduce(math.gcd, (abs(c) for c in f), 0)


def _zz_primitive(f):
    c = _zz_content(f)
    if c == 0:
        return 0, []
    if f[-1] < 0:
        c = -c
    return c, [x // c for x in f]


def _zz_mul(f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return out


def _zz_deriv(f):
    return [i * c for i, c in enumerate(f)][1:]


def _zz_divexact(f, g):
    """Exact division in Z[x]; returns None when not exact."""
    f = list(f)
    if not g:
        return None
    dg = len(g) - 1
    if len(f) < len(g):
        return None if _zz_trim(f) else []
    quo = [0] * (len(f) - dg)
    for k in range(len(f) - dg - 1, -1, -1):
        if f[k + dg] % g[-1]:
            return None
        c = f[k + dg] // g[-1]
        quo[k] = c
        if c:
            for j, b in enumerate(g):
                f[k + j] -= c * b
    if _zz_trim(f[:dg]):
        return None
    return quo


def _zz_gcd(f, g):
    """Primitive gcd in Z[x] (via Q[x] gcd on primitive parts)."""
    fq = UniPoly(QQ, [Fraction(c) for c in f])
    gq = UniPoly(QQ, [Fraction(c) for c in g])
    h = fq.gcd(gq)
    if h.is_zero:
        return []
    den = reduce(math.lcm, (c.denominator for c in h.coeffs), 1)
    ints = [int(c * den) for c in h.coeffs]
    return _zz_primitive(ints)[1]


def _zz_eval(f, x):
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def _zz_mignotte_bound(f):
    """Knuth-Cohen flavored bound on coefficients of factors of f."""
    n = len(f) - 1
    norm = math.isqrt(sum(c * c for c in f)) + 1
    return (math.comb(n, n // 2) * norm * abs(f[-1])) * 2 + max(abs(c) for c in f)


def _zz_squarefree_parts(f):
    """Yun decomposition of a primitive f: [(primitive squarefree g, mult)]."""
    out = []
    df = _zz_deriv(f)
    g = _zz_gcd(f, df)
    if len(g) == 1:
        return [(f, 1)]
    w = _zz_divexact(f, g)
    y = _zz_divexact(df, g)
    i = 1
    while True:
        z = [a - b for a, b in zip(_zz_deriv(w) + [0] * len(y), y + [0] * len(w))]
        z = _zz_trim(z)
        if not z:
            if len(w) > 1:
                out.append((_zz_primitive(w)[1], i))
            break
        h = _zz_gcd(w, z)
        if len(h) > 1:
            out.append((_zz_primitive(h)[1], i))
        w = _zz_divexact(w, h)
        y = _zz_divexact(z, h)
        i += 1
    return out


def _zz_add(f, g):
    n = max(len(f), len(g))
    return [(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)]


def _zz_sub(f, g):
    n = max(len(f), len(g))
    return [(f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0) for i in range(n)]


def _zz_trunc(f, m):
    return _zz_trim([_sym(c, m) for c in f])


def _hensel_step(m, f, g, h, s, t):
    """Lift f = g*h (mod m), s*g + t*h = 1 (mod m) to modulus m^2.

    Requires lc(h) = 1 and lc(f) invertible mod m; returns (G, H, S, T) with
    the same relations mod m^2.
    """
    M = m * m
    e = _zz_trunc(_zz_sub(f, _zz_mul(g, h)), M)
    q, r = _zz_divmod_mod(_zz_mul(s, e), h, M)
    G = _zz_trunc(_zz_add(g, _zz_add(_zz_mul(t, e), _zz_mul(q, g))), M)
    H = _zz_trunc(_zz_add(h, r), M)
    b = _zz_trunc(_zz_sub(_zz_add(_zz_mul(s, G), _zz_mul(t, H)), [1]), M)
    c, d = _zz_divmod_mod(_zz_mul(s, b), H, M)
    S = _zz_trunc(_zz_sub(s, d), M)
    T = _zz_trunc(_zz_sub(t, _zz_add(_zz_mul(t, b), _zz_mul(c, G))), M)
    return G, H, S, T


def _sym(c, m):
    """Symmetric representative of c mod m in (-m/2, m/2]."""
    c %= m
    if 2 * c > m:
        c -= m
    return c


def _zz_divmod_mod(f, g, m):
    """Division mod m by a polynomial whose lc is invertible mod m."""
    f = [c % m for c in f]
    g = [c % m for c in g]
    g = _zz_trim(g)
    dg = len(g) - 1
    inv = pow(g[-1], -1, m)
    if len(f) < len(g):
        return [], _zz_trim([_sym(c, m) for c in f])
    quo = [0] * (len(f) - dg)
    for k in range(len(f) - dg - 1, -1, -1):
        c = f[k + dg] * inv % m
        quo[k] = c
        if c:
            for j, b in enumerate(g):
                f[k + j] = (f[k + j] - c * b) % m
    return _zz_trim([_sym(c, m) for c in quo]), _zz_trim([_sym(c, m) for c in f[:dg]])


def _hensel_lift(p, f, mod_factors, level):
    """Lift the monic factors of f mod p to factors mod p^(2^level)."""
    r = len(mod_factors)
    lc = f[-1]
    target = p ** (2 ** level)
    if r == 1:
        inv = pow(lc, -1, target)
        return [_zz_trim([_sym(c * inv, target) for c in f])]
    k = r // 2
    left, right = mod_factors[:k], mod_factors[k:]
    g = [lc % p]
    for fac in left:
        g = [c % p for c in _zz_mul(g, fac)]
    h = [1]
    for fac in right:
        h = [c % p for c in _zz_mul(h, fac)]
    s, t = _gf_bezout(g, h, p)
    g = _zz_trim([_sym(c, p) for c in g])
    h = _zz_trim([_sym(c, p) for c in h])
    s = _zz_trim([_sym(c, p) for c in s])
    t = _zz_trim([_sym(c, p) for c in t])
    m = p
    for _ in range(level):
        g, h, s, t = _hensel_step(m, f, g, h, s, t)
        m = m * m
    return _hensel_lift(p, g, left, level) + _hensel_lift(p, h, right, level)


def _gf_bezout(g, h, p):
    """s, t with s*g + t*h = 1 mod p for coprime g, h."""
    r0, r1 = _gf_trim(g, p), _gf_trim(h, p)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _gf_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _gf_sub(s0, _gf_mul(q, s1, p), p)
        t0, t1 = t1, _gf_sub(t0, _gf_mul(q, t1, p), p)
    inv = pow(r0[0], p - 2, p)
    return _gf_mul(s0, [inv], p), _gf_mul(t0, [inv], p)


def _zz_zassenhaus(f, seed=0):
    """Factor a primitive squarefree f in Z[x] with positive lc."""
    n = len(f) - 1
    if n == 1:
        return [f]
    lc = f[-1]
    bound = _zz_mignotte_bound(f)
    # pick a prime keeping f squarefree mod p, preferring few modular factors
    candidates = []
    gen = primes()
    checked = 0
    while len(candidates) < 5 and checked < 120:
        p = next(gen)
        checked += 1
        if lc % p == 0:
            continue
        fp = _gf_trim(f, p)
        if len(fp) != len(f):
            continue
        dfp = _gf_deriv(fp, p)
        if len(_gf_gcd(fp, dfp, p)) != 1:
            continue
        facs = [g for g, _ in _gf_factor(_gf_monic(fp, p), p, seed)]
        candidates.append((len(facs), p, facs))
        if len(facs) <= 2:
            break
    _, p, mod_factors = min(candidates, key=lambda c: c[0])
    if len(mod_factors) == 1:
        return [f]
    level = 0
    while p ** (2 ** level) <= 2 * bound:
        level += 1
    big = p ** (2 ** level)
    lifted = _hensel_lift(p, f, mod_factors, level)

    # subset recombination by trial division
    result = []
    current = f
    indices = list(range(len(lifted)))
    size = 1
    while 2 * size <= len(indices):
        for subset in itertools.combinations(indices, size):
            g = [current[-1]]
            for i in subset:
                g = _zz_trunc(_zz_mul(g, lifted[i]), big)
            g = _zz_primitive(g)[1]
            if not g:
                continue
            q = _zz_divexact(current, g)
            if q is not None:
                result.append(g)
                current = _zz_primitive(q)[1]
                indices = [i for i in indices if i not in subset]
                break
        else:
            size += 1
    if len(current) > 1:
        result.append(current)
    return result


def factor_over_Q(f: UniPoly) -> FactorList:
    """Complete factorization over Q into monic irreducibles.

    unit * prod(factor^mult) == f exactly.  Degree is capped at 16, enough
    for every polynomial this package produces.
    """
    if f.field != QQ:
        raise ValueError("factor_over_Q needs rational coefficients")
    if f.is_zero:
        raise ZeroPolynomialError("cannot factor the zero polynomial")
    if f.degree > FACTOR_DEGREE_CAP:
        raise ValueError(f"degree {f.degree} exceeds the cap of {FACTOR_DEGREE_CAP}")
    if f.degree == 0:
        return FactorList(unit=f.coeffs[0], factors=[])

    den = reduce(math.lcm, (c.denominator for c in f.coeffs), 1)
    ints = [int(c * den) for c in f.coeffs]

    # strip powers of x
    k0 = 0
    while ints[0] == 0:
        ints.pop(0)
        k0 += 1
    cont, prim = _zz_primitive(ints)
    unit = Fraction(cont, den)

    factors = []
    if k0:
        factors.append((UniPoly.gen(QQ, f.var), k0))
    if len(prim) > 1:
        for part, mult in _zz_squarefree_parts(prim):
            for irr in _zz_zassenhaus(part):
                mono = UniPoly(QQ, [Fraction(c) for c in irr], f.var)
                unit *= mono.lc ** mult
                factors.append((mono.monic(), mult))
    factors.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return FactorList(unit=unit, factors=factors)


def is_irreducible(f: UniPoly) -> bool:
    """Irreducibility over Q for deg >= 1 (constants excluded)."""
    if f.degree < 1:
        return False
    return factor_over_Q(f).is_irreducible


# ---------------------------------------------------------------------------
# Rational roots via p-adic lifting and rational reconstruction


def rational_roots(f: UniPoly) -> list:
    """All rational roots of f with multiplicity.

    A rational root u/v in lowest terms of the primitive integer model g has
    u | g(0) and v | lc(g), which bounds its height; roots are found by
    lifting the simple roots of g mod p to a modulus beyond twice that bound
    and applying rational reconstruction, then verified exactly.
    """
    if f.field != QQ:
        raise ValueError("rational_roots needs rational coefficients")
    if f.is_zero:
        raise ZeroPolynomialError("the zero polynomial has every rational root")
    if f.degree == 0:
        return []

    den = reduce(math.lcm, (c.denominator for c in f.coeffs), 1)
    ints = [int(c * den) for c in f.coeffs]
    roots = []
    while ints[0] == 0:
        roots.append(Fraction(0))
        ints.pop(0)
    prim = _zz_primitive(ints)[1]
    if len(prim) > 1:
        g = _zz_squarefree_part(prim)
        bound_num = abs(g[0])
        bound_den = abs(g[-1])
        target = 2 * bound_num * bound_den + 1
        for r in _lift_rational_roots(g, target, bound_num, bound_den):
            # multiplicity by repeated exact division of the full polynomial
            poly = UniPoly(QQ, [Fraction(c) for c in prim], f.var)
            lin = UniPoly(QQ, [-r, Fraction(1)], f.var)
            while True:
                q, rem = poly.divmod(lin)
                if not rem.is_zero:
                    break
                roots.append(r)
                poly = q
    return sorted(roots)


def _zz_squarefree_part(f):
    """Squarefree part of a primitive integer polynomial."""
    g = _zz_gcd(f, _zz_deriv(f))
    if len(g) == 1:
        return f
    return _zz_primitive(_zz_divexact(f, g))[1]


def _lift_rational_roots(g, target, bound_num, bound_den):
    """Candidate rational roots of squarefree primitive g, verified exactly."""
    p = None
    for cand in primes():
        if g[-1] % cand == 0:
            continue
        gp = _gf_trim(g, cand)
        if len(gp) != len(g):
            continue
        if len(_gf_gcd(gp, _gf_deriv(gp, cand), cand)) == 1:
            p = cand
            break
    assert p is not None
    mod_roots = [r for r in range(p) if _zz_eval(g, r) % p == 0]
    out = []
    dg = _zz_deriv(g)
    for r in mod_roots:
        m = p
        ok = True
        while m < target:
            m = m * m
            dr = _zz_eval(dg, r) % m
            if math.gcd(dr, m) != 1:
                ok = False
                break
            r = (r - _zz_eval(g, r) * pow(dr, -1, m)) % m
        if not ok:
            continue
        cand = _rational_reconstruct(r, m, bound_num, bound_den)
        if cand is not None and _zz_eval_frac(g, cand) == 0:
            out.append(cand)
    return sorted(set(out))


def _zz_eval_frac(g, q: Fraction):
    acc = Fraction(0)
    for c in reversed(g):
        acc = acc * q + c
    return acc


def _rational_reconstruct(r, m, bound_num, bound_den):
    """u/v with u = r*v mod m, |u| <= bound_num, 0 < v <= bound_den."""
    v0, v1 = 0, 1
    r0, r1 = m, r % m
    while r1 > bound_num:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        v0, v1 = v1, v0 - q * v1
    if r1 == 0:
        return None
    u, v = r1, v1
    if v < 0:
        u, v = -u, -v
    if v == 0 or v > bound_den or math.gcd(u, v) != 1:
        return None
    return Fraction(u, v)

"""The cyclic quotient isogeny E -> E/<A> by Velu's formulas.

The codomain keeps a1, a2, a3 and replaces a4, a6 by a4 - 5t and
a6 - b2*t - 7w, where t and w are the usual sums over the kernel with the
2-torsion point counted once.  The x-coordinate map is

    X(P) = x + sum over kernel representatives of t_T/(x - x_T) + u_T/(x - x_T)^2

assembled into a single reduced fraction with monic denominator, so fiber
polynomials are canonical.  Everything runs over Q and symbolically over Q(c).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field

from .curves import INFINITY, CurvePoint, WeierstrassCurve
from .errors import DegenerateParameterError, OffCurveError, TorsionOrderError
from .fields import QQ, rational_sqrt
from .poly import UniPoly


@dataclass
class IsogenyData:
    """A degree-l cyclic isogeny with rational kernel <A>."""

    domain: WeierstrassCurve
    codomain: WeierstrassCurve
    kernel_x: list
    phi_x_num: UniPoly
    phi_x_den: UniPoly
    degree: int
    kernel_points: list = dataclass_field(repr=False, default_factory=list)

    def x_map(self, x):
        """Evaluate the x-coordinate map at a field element off the kernel."""
        return self.phi_x_num(x) / self.phi_x_den(x)


@dataclass
class FiberPolynomial:
    """Monic degree-l polynomial whose roots are the preimage x-coordinates."""

    poly: UniPoly
    base_point_x: object
    isogeny: IsogenyData = dataclass_field(repr=False, default=None)


def velu_quotient(curve: WeierstrassCurve, A: CurvePoint, l: int) -> IsogenyData:
    """Quotient isogeny of degree l with kernel generated by A.

    A must have exact order l on the curve.
    """
    if A.inf:
        raise TorsionOrderError("the kernel generator cannot be infinity")
    order = curve.order_of_point(A, max(16, l))
    if order != l:
        raise TorsionOrderError(f"kernel generator has order {order}, expected {l}")
    F = curve.field
    a1, a2, a3, a4, a6 = curve.a_invariants()
    b = curve.b_form()

    kernel = []
    acc = A
    while not acc.inf:
        kernel.append(acc)
        acc = curve.add(acc, A)
    assert len(kernel) == l - 1

    # one representative per +-pair; the 2-torsion point (l even) stands alone
    reps = [kernel[i - 1] for i in range(1, (l - 1) // 2 + 1)]
    two_torsion = [kernel[l // 2 - 1]] if l % 2 == 0 else []

    def local_sums(Q, is_two_torsion):
        gx = 3 * Q.x * Q.x + 2 * a2 * Q.x + a4 - a1 * Q.y
        gy = -2 * Q.y - a1 * Q.x - a3
        tQ = gx if is_two_torsion else 2 * gx - a1 * gy
        uQ = gy * gy
        return tQ, uQ

    t = F.zero
    w = F.zero
    for Q in reps:
        tQ, uQ = local_sums(Q, False)
        t = t + tQ
        w = w + uQ + Q.x * tQ
    for Q in two_torsion:
        tQ, uQ = local_sums(Q, True)
        t = t + tQ
        w = w + uQ + Q.x * tQ

    codomain = WeierstrassCurve(F, a1, a2, a3, a4 - 5 * t, a6 - b.b2 * t - 7 * w)

    x = UniPoly.gen(F)
    den = UniPoly.one(F)
    lin = {}
    for Q in reps + two_torsion:
        lin[id(Q)] = x - UniPoly.constant(F, Q.x)
        den = den * lin[id(Q)]
        if Q not in two_torsion:
            den = den * lin[id(Q)]
    num = x * den
    for Q in reps + two_torsion:
        is2 = Q in two_torsion
        tQ, uQ = local_sums(Q, is2)
        num = num + den.divexact(lin[id(Q)]) * tQ
        if not is2:
            num = num + den.divexact(lin[id(Q)] * lin[id(Q)]) * uQ

    g = num.gcd(den)
    if g.degree > 0:
        num = num.divexact(g)
        den = den.divexact(g)
    if den.lc != F.one:
        inv = F.one / den.lc
        num = num * inv
        den = den * inv
    assert num.degree == l and den.degree == l - 1

    return IsogenyData(
        domain=curve,
        codomain=codomain,
        kernel_x=[Q.x for Q in reps + two_torsion],
        phi_x_num=num,
        phi_x_den=den,
        degree=l,
        kernel_points=kernel,
    )


def push_point(isog: IsogenyData, P: CurvePoint) -> CurvePoint:
    """phi(P), via the coordinate sums x + sum(x(P+Q) - x(Q)) over the kernel.

    Kernel points and infinity map to infinity; images are verified to sit on
    the codomain and to agree with the stored rational x-map.
    """
    E = isog.domain
    if P.inf:
        return INFINITY
    if not E.contains(P):
        raise OffCurveError(f"{P!r} is not on the isogeny domain")
    if any(P == Q for Q in isog.kernel_points):
        return INFINITY
    xs = P.x
    ys = P.y
    for Q in isog.kernel_points:
        S = E.add(P, Q)
        xs = xs + S.x - Q.x
        ys = ys + S.y - Q.y
    image = CurvePoint.affine(xs, ys)
    assert isog.codomain.contains(image)
    return image


def fiber_polynomial(isog: IsogenyData, xQ) -> FiberPolynomial:
    """Monic degree-l polynomial with roots x(P + iA) over the preimages P + iA.

    xQ must be the x-coordinate of a rational point Q on the codomain; over Q
    this is checked through the curve equation.
    """
    F = isog.domain.field
    xQ = F(xQ)
    if F == QQ and rational_sqrt(_y_discriminant(isog.codomain, xQ)) is None:
        raise DegenerateParameterError(
            f"x = {xQ} is not the x-coordinate of a rational point on the codomain"
        )
    poly = isog.phi_x_num - isog.phi_x_den * xQ
    assert poly.degree == isog.degree
    return FiberPolynomial(poly=poly.monic(), base_point_x=xQ, isogeny=isog)


def _y_discriminant(curve: WeierstrassCurve, x):
    """Discriminant of the curve equation as a quadratic in y at the given x."""
    a1, a2, a3, a4, a6 = curve.a_invariants()
    rhs = x ** 3 + a2 * x * x + a4 * x + a6
    lin = a1 * x + a3
    return lin * lin + 4 * rhs


def lift_x(curve: WeierstrassCurve, x):
    """Rational points of a curve over Q with the given x-coordinate."""
    x = curve.field(x)
    disc = _y_discriminant(curve, x)
    root = rational_sqrt(disc)
    if root is None:
        return []
    lin = curve.a1 * x + curve.a3
    ys = {(-lin + root) / 2, (-lin - root) / 2}
    return [CurvePoint.affine(x, y) for y in sorted(ys)]


def has_rational_preimage(isog: IsogenyData, Q: CurvePoint):
    """(found, witness): does some rational P on the domain push to Q?

    Rational roots of the fiber polynomial below Q are lifted back to domain
    points and pushed through the isogeny, so the verdict is exact.
    """
    from .factor import rational_roots

    if Q.inf:
        raise ValueError("the preimage test needs an affine point")
    if not isog.codomain.contains(Q):
        raise OffCurveError(f"{Q!r} is not on the isogeny codomain")
    fiber = fiber_polynomial(isog, Q.x)
    for x0 in sorted(set(rational_roots(fiber.poly))):
        for P in lift_x(isog.domain, x0):
            if push_point(isog, P) == Q:
                return True, P
    return False, None

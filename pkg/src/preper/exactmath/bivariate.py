"""Bivariate polynomials, rational maps, and curve function fields.

A BiPoly is a polynomial in two variables (x, y) stored nested: a tuple of
Polys in x indexed by the power of y.  RationalMap is a quotient of two
BiPolys.  Identity verification for maps between curves happens inside
CurveFunctionField, the quadratic extension of Q(x) cut out by a relation

    y**2 = s(x)*y + t(x),

where arithmetic reduces every power of y on sight.  Equality of two map
compositions modulo a curve equation is then literal equality of field
elements, with no Groebner machinery.
"""

from __future__ import annotations

from fractions import Fraction

from .polynomial import Poly, RationalFunction


class BiPoly:
    """Polynomial in (x, y): ycoeffs[j] is the Poly-in-x multiplying y**j."""

    __slots__ = ("ycoeffs",)

    def __init__(self, ycoeffs=()):
        cs = [c if isinstance(c, Poly) else Poly((c,)) if isinstance(c, (int, Fraction)) else c
              for c in ycoeffs]
        for c in cs:
            if not isinstance(c, Poly):
                raise TypeError("BiPoly coefficients must be Poly in x")
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "ycoeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("BiPoly is immutable")

    @classmethod
    def x(cls) -> "BiPoly":
        return cls((Poly.x(),))

    @classmethod
    def y(cls) -> "BiPoly":
        return cls((Poly(), Poly((1,))))

    @classmethod
    def const(cls, c) -> "BiPoly":
        return cls((Poly((c,)),))

    def is_zero(self) -> bool:
        return not self.ycoeffs

    def _lift(self, other):
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BiPoly.const(other)
        if isinstance(other, Poly):
            return BiPoly((other,))
        return None

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.ycoeffs == o.ycoeffs

    def __hash__(self):
        return hash(self.ycoeffs)

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = max(len(self.ycoeffs), len(o.ycoeffs))
        z = Poly()
        a = list(self.ycoeffs) + [z] * (n - len(self.ycoeffs))
        b = list(o.ycoeffs) + [z] * (n - len(o.ycoeffs))
        return BiPoly(tuple(p + q for p, q in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return BiPoly(tuple(-c for c in self.ycoeffs))

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return BiPoly()
        out = [Poly()] * (len(self.ycoeffs) + len(o.ycoeffs) - 1)
        for i, a in enumerate(self.ycoeffs):
            if not a.is_zero():
                for j, b in enumerate(o.ycoeffs):
                    out[i + j] = out[i + j] + a * b
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative BiPoly power")
        result, base = BiPoly.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def eval(self, xval, yval):
        """Horner in y then x over any commutative ring accepting Fractions."""
        acc = None
        for c in reversed(self.ycoeffs):
            cx = c(xval)
            acc = cx if acc is None else acc * yval + cx
        if acc is None:
            return 0 * xval
        return acc

    def __repr__(self):
        if self.is_zero():
            return "BiPoly(0)"
        parts = [f"({c!r})*y^{j}" if j else f"({c!r})" for j, c in enumerate(self.ycoeffs)
                 if not c.is_zero()]
        return " + ".join(parts)


class RationalMap:
    """Quotient of two bivariate polynomials, one coordinate of a curve map."""

    __slots__ = ("num", "den")

    def __init__(self, num: BiPoly, den: BiPoly = BiPoly.const(1)):
        if isinstance(num, (int, Fraction, Poly)):
            num = BiPoly.const(num) if not isinstance(num, Poly) else BiPoly((num,))
        if isinstance(den, (int, Fraction, Poly)):
            den = BiPoly.const(den) if not isinstance(den, Poly) else BiPoly((den,))
        if den.is_zero():
            raise ZeroDivisionError("rational map with zero denominator")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("RationalMap is immutable")

    def eval(self, xval, yval):
        """Evaluate num/den at ring elements; division must exist in the ring."""
        n = self.num.eval(xval, yval)
        d = self.den.eval(xval, yval)
        return n / d

    def __repr__(self):
        return f"RationalMap(({self.num!r}) / ({self.den!r}))"


class CurveFunctionField:
    """Function field Q(x)[y] / (y**2 - s(x)*y - t(x)) of a plane curve.

    For y**2 = f(x) curves take s = 0, t = f.  For a general Weierstrass
    equation y**2 + a1*x*y + a3*y = x**3 + ... take s = -(a1*x + a3) and t
    the cubic right side.
    """

    def __init__(self, s: Poly, t: Poly):
        self.s = s
        self.t = t

    @classmethod
    def hyperelliptic(cls, f: Poly) -> "CurveFunctionField":
        return cls(Poly(), f)

    def x(self) -> "FieldElement":
        return FieldElement(self, RationalFunction(Poly.x()), RationalFunction(0))

    def y(self) -> "FieldElement":
        return FieldElement(self, RationalFunction(0), RationalFunction(1))

    def from_rational(self, c) -> "FieldElement":
        return FieldElement(self, RationalFunction(c), RationalFunction(0))

    def evaluate_map(self, m: RationalMap) -> "FieldElement":
        return m.eval(self.x(), self.y())


class FieldElement:
    """a(x) + b(x)*y with a, b rational functions, reduced by the relation."""

    __slots__ = ("field", "a", "b")

    def __init__(self, field: CurveFunctionField, a: RationalFunction, b: RationalFunction):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __setattr__(self, *a):
        raise AttributeError("FieldElement is immutable")

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def _lift(self, other):
        if isinstance(other, FieldElement):
            return other
        if isinstance(other, (int, Fraction, Poly, RationalFunction)):
            return FieldElement(self.field, RationalFunction(1) * other, RationalFunction(0))
        return None

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, -self.a, -self.b)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        # (a1 + b1 y)(a2 + b2 y) with y^2 = s y + t
        s = RationalFunction(self.field.s)
        t = RationalFunction(self.field.t)
        a = self.a * o.a + self.b * o.b * t
        b = self.a * o.b + self.b * o.a + self.b * o.b * s
        return FieldElement(self.field, a, b)

    __rmul__ = __mul__

    def conjugate(self) -> "FieldElement":
        # the other root of Y^2 - s Y - t is s - y
        s = RationalFunction(self.field.s)
        return FieldElement(self.field, self.a + self.b * s, -self.b)

    def norm(self) -> RationalFunction:
        # (a + b y)(a + b s - b y) = a^2 + a b s - b^2 t, a rational function
        s = RationalFunction(self.field.s)
        t = RationalFunction(self.field.t)
        return self.a * self.a + self.a * self.b * s - self.b * self.b * t

    def inverse(self) -> "FieldElement":
        n = self.norm()
        if n.is_zero():
            raise ZeroDivisionError("element is a zero divisor in the function field")
        conj = self.conjugate()
        inv = RationalFunction(1) / n
        return FieldElement(self.field, conj.a * inv, conj.b * inv)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.from_rational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __repr__(self):
        return f"FieldElement({self.a!r} + ({self.b!r})*y)"

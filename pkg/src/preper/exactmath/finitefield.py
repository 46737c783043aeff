"""Finite fields F_p and F_{p^2}, Legendre symbols, square roots, and
factorization of small-degree polynomials mod p.

F_{p^2} is realized as F_p(i) with i**2 equal to a fixed non-residue: -1
whenever p = 3 mod 4 (so printed values like 330+2i compare literally),
otherwise the least positive non-residue.

Factorization targets degree <= 6 and p <= 743: square-free split by gcd
with the derivative, root exhaustion plus distinct-degree decomposition
(gcd with x**(p**k) - x), and a deterministic-trial equal-degree split.
Irreducibility can be certified independently with is_irreducible_mod_p.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .integers import is_prime


def legendre_symbol(a: int, p: int) -> int:
    """Euler criterion; 0 when p divides a.  Requires p an odd prime."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return -1 if r == p - 1 else 1


@lru_cache(maxsize=None)
def _nonresidue(p: int) -> int:
    if p % 4 == 3:
        return p - 1  # i^2 = -1
    n = 2
    while legendre_symbol(n, p) != -1:
        n += 1
    return n


class Fq:
    """Field F_{p^k} for k in {1, 2}; degree-2 elements are a + b*i."""

    def __init__(self, p: int, k: int = 1):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k not in (1, 2):
            raise ValueError("extension degree must be 1 or 2")
        if k == 2 and p == 2:
            raise ValueError("F_4 via a quadratic non-residue is not available")
        self.p = p
        self.k = k
        self.order = p ** k
        self.nonresidue = _nonresidue(p) if k == 2 else None

    def __eq__(self, other):
        return isinstance(other, Fq) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self):
        return hash((self.p, self.k))

    def __repr__(self):
        return f"Fq({self.p})" if self.k == 1 else f"Fq({self.p}, 2)"

    def __call__(self, a: int, b: int = 0) -> "FqElem":
        if b % self.p and self.k == 1:
            raise ValueError("prime field element cannot have an i part")
        return FqElem(self, a, b)

    def zero(self) -> "FqElem":
        return self(0)

    def one(self) -> "FqElem":
        return self(1)

    def elements(self):
        if self.k == 1:
            for a in range(self.p):
                yield self(a)
        else:
            for a in range(self.p):
                for b in range(self.p):
                    yield self(a, b)

    def from_rational(self, q) -> "FqElem":
        if isinstance(q, int):
            return self(q)
        if isinstance(q, Fraction):
            if q.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator of {q} vanishes mod {self.p}")
            return self(q.numerator) / self(q.denominator)
        raise TypeError(f"cannot coerce {type(q).__name__} into {self!r}")


class FqElem:
    """Element a + b*i of F_{p^k}; immutable, hashable, ordered by (a, b)."""

    __slots__ = ("field", "a", "b")

    def __init__(self, field: Fq, a: int, b: int = 0):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "a", a % field.p)
        object.__setattr__(self, "b", b % field.p)

    def __setattr__(self, *a):
        raise AttributeError("FqElem is immutable")

    def _lift(self, other):
        if isinstance(other, FqElem):
            if other.field != self.field:
                raise ValueError("mixed finite fields")
            return other
        if isinstance(other, int):
            return self.field(other)
        if isinstance(other, Fraction):
            return self.field.from_rational(other)
        return None

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.field.p, self.field.k, self.a, self.b))

    def __lt__(self, other):
        o = self._lift(other)
        return (self.a, self.b) < (o.a, o.b)

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FqElem(self.field, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return FqElem(self.field, -self.a, -self.b)

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
        if self.field.k == 1:
            return FqElem(self.field, self.a * o.a)
        n = self.field.nonresidue
        return FqElem(self.field,
                      self.a * o.a + n * self.b * o.b,
                      self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def inverse(self) -> "FqElem":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        p = self.field.p
        if self.field.k == 1:
            return FqElem(self.field, pow(self.a, p - 2, p))
        # (a + bi)^-1 = (a - bi) / (a^2 - n b^2)
        n = self.field.nonresidue
        d = (self.a * self.a - n * self.b * self.b) % p
        dinv = pow(d, p - 2, p)
        return FqElem(self.field, self.a * dinv, -self.b * dinv)

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
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def norm(self) -> "FqElem":
        """Norm down to the prime field: a^2 - n*b^2 (= a^2 + b^2 for i^2 = -1)."""
        p = self.field.p
        if self.field.k == 1:
            return self
        n = self.field.nonresidue
        return Fq(p)((self.a * self.a - n * self.b * self.b) % p)

    def is_square(self) -> bool:
        if self.is_zero():
            return True
        if self.field.order % 2 == 0:
            return True
        return (self ** ((self.field.order - 1) // 2)) == self.field.one()

    def __repr__(self):
        if self.field.k == 1:
            return f"{self.a}"
        return f"{self.a}+{self.b}i"


def ff_sqrt(x: FqElem) -> FqElem | None:
    """Deterministic square root, or None for non-squares.  Tonelli-Shanks
    with the non-square witness chosen in element order; of the two roots
    the smaller in the (a, b) ordering is returned."""
    field = x.field
    if x.is_zero():
        return field.zero()
    if field.order % 2 == 0:
        return x ** (field.order // 2)
    if not x.is_square():
        return None
    m, e = field.order - 1, 0
    while m % 2 == 0:
        m //= 2
        e += 1
    z = next(c for c in field.elements() if c and not c.is_square())
    c = z ** m
    r = x ** ((m + 1) // 2)
    t = x ** m
    mm = e
    one = field.one()
    while t != one:
        i, t2 = 0, t
        while t2 != one:
            t2 = t2 * t2
            i += 1
        b = c ** (2 ** (mm - i - 1))
        r = r * b
        c = b * b
        t = t * c
        mm = i
    return min(r, -r)


class FpPoly:
    """Polynomial over F_p, coefficients lowest degree first as plain ints."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs=()):
        cs = [c % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("FpPoly is immutable")

    @classmethod
    def from_poly(cls, poly, p: int) -> "FpPoly":
        """Reduce a rational Poly mod p; denominators must be units mod p."""
        out = []
        for c in poly.coeffs:
            if c.denominator % p == 0:
                raise ZeroDivisionError(f"coefficient {c} not p-integral at {p}")
            out.append(c.numerator * pow(c.denominator, -1, p) % p)
        return cls(p, out)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = FpPoly(self.p, (other,))
        if not isinstance(other, FpPoly):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def _f(self, coeffs):
        return FpPoly(self.p, coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = self._f((other,))
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return self._f([x + y for x, y in zip(a, b)])

    def __neg__(self):
        return self._f([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = self._f((other,))
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self._f([c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return self._f(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return self._f(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "FpPoly"):
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        p = self.p
        rem = list(self.coeffs)
        q = [0] * max(1, len(rem) - len(other.coeffs) + 1)
        inv = pow(other.lc, -1, p)
        dd = other.degree
        while rem and len(rem) - 1 >= dd:
            c = rem[-1] * inv % p
            k = len(rem) - 1 - dd
            q[k] = c
            for i, b in enumerate(other.coeffs):
                rem[k + i] = (rem[k + i] - c * b) % p
            while rem and rem[-1] == 0:
                rem.pop()
        return self._f(q), self._f(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def eval_fq(self, x: FqElem) -> FqElem:
        acc = x.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def monic(self) -> "FpPoly":
        if self.is_zero() or self.lc == 1:
            return self
        return self * pow(self.lc, -1, self.p)

    def derivative(self) -> "FpPoly":
        return self._f([i * c for i, c in enumerate(self.coeffs)][1:])

    def shift(self, r: int) -> "FpPoly":
        """p(x + r)."""
        out = self._f(())
        xpr = self._f((r, 1))
        for c in reversed(self.coeffs):
            out = out * xpr + self._f((c,))
        return out

    def powmod(self, n: int, mod: "FpPoly") -> "FpPoly":
        result = self._f((1,)) % mod
        base = self % mod
        while n:
            if n & 1:
                result = result * base % mod
            base = base * base % mod
            n >>= 1
        return result

    def __repr__(self):
        return f"FpPoly({self.p}, {list(self.coeffs)})"


def fp_gcd(a: FpPoly, b: FpPoly) -> FpPoly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def fp_xgcd(a: FpPoly, b: FpPoly):
    """(g, s, t) with g = s*a + t*b, g monic (or zero)."""
    p = a.p
    r0, r1 = a, b
    s0, s1 = FpPoly(p, (1,)), FpPoly(p)
    t0, t1 = FpPoly(p), FpPoly(p, (1,))
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0.is_zero() and r0.lc != 1:
        inv = pow(r0.lc, -1, p)
        r0, s0, t0 = r0 * inv, s0 * inv, t0 * inv
    return r0, s0, t0


def is_irreducible_mod_p(f: FpPoly) -> bool:
    """Rabin criterion: x**(p**n) = x mod f and gcd(x**(p**(n/q)) - x, f) = 1
    for every prime q dividing n = deg f."""
    p, n = f.p, f.degree
    if n <= 0:
        return False
    if n == 1:
        return True
    x = FpPoly(p, (0, 1))
    for q in range(2, n + 1):
        if n % q == 0 and is_prime(q):
            h = x.powmod(p ** (n // q), f) - x
            if fp_gcd(h, f).degree != 0:
                return False
    return x.powmod(p ** n, f) == x % f


def _trial_polys(p: int):
    """Deterministic sequence of candidate splitting polynomials."""
    for s in range(p):
        yield FpPoly(p, (s, 1))
    for s in range(p):
        for r in range(1, p):
            yield FpPoly(p, (s, r, 1))


def _split_equal_degree(f: FpPoly, k: int) -> list[FpPoly]:
    """Split a monic product of distinct irreducibles, all of degree k."""
    p = f.p
    if f.degree == k:
        return [f]
    if k == 1:
        # roots by exhaustion
        out = []
        rem = f
        for r in range(p):
            if rem.degree >= 1 and rem(r) == 0:
                lin = FpPoly(p, (-r, 1))
                out.append(lin)
                rem = rem // lin
        return out
    if p == 2:
        out = []
        rem = f
        for cand in _irreducibles_f2(k):
            while rem.degree >= k and (rem % cand).is_zero():
                out.append(cand)
                rem = rem // cand
        if rem.degree > 0:
            out.append(rem)
        return out
    exponent = (p ** k - 1) // 2
    for trial in _trial_polys(p):
        w = trial.powmod(exponent, f) - 1
        d = fp_gcd(w, f)
        if 0 < d.degree < f.degree:
            return sorted(_split_equal_degree(d, k) + _split_equal_degree(f // d, k),
                          key=lambda q: q.coeffs)
    raise RuntimeError("equal-degree split exhausted its trial sequence")


@lru_cache(maxsize=None)
def _irreducibles_f2(degree: int) -> tuple[FpPoly, ...]:
    out = []
    for bits in range(1 << degree, 1 << (degree + 1)):
        f = FpPoly(2, [(bits >> i) & 1 for i in range(degree + 1)])
        if is_irreducible_mod_p(f):
            out.append(f)
    return tuple(out)


def _factor_squarefree(f: FpPoly) -> list[FpPoly]:
    """Monic square-free polynomial into monic irreducibles, sorted."""
    p = f.p
    x = FpPoly(p, (0, 1))
    factors: list[FpPoly] = []
    rem = f
    k = 1
    while rem.degree >= 2 * k:
        gk = fp_gcd(x.powmod(p ** k, rem) - x, rem)
        if gk.degree > 0:
            factors.extend(_split_equal_degree(gk, k))
            rem = rem // gk
        k += 1
    if rem.degree > 0:
        factors.append(rem)
    return sorted(factors, key=lambda q: (q.degree, q.coeffs))


def factor_mod_p(f: FpPoly) -> list[tuple[FpPoly, int]]:
    """Factor into (monic irreducible, multiplicity), deterministically sorted."""
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    p = f.p
    f = f.monic()
    distinct: set[FpPoly] = set()
    work = f
    while work.degree > 0:
        deriv = work.derivative()
        if deriv.is_zero():
            # work = h(x^p); pass to its p-th root
            work = FpPoly(p, [work.coeffs[i] for i in range(0, len(work.coeffs), p)])
            continue
        d = fp_gcd(work, deriv)
        if d.degree == 0:
            distinct.update(_factor_squarefree(work))
            break
        distinct.update(_factor_squarefree(work // d))
        work = d
    result = []
    for q in sorted(distinct, key=lambda q: (q.degree, q.coeffs)):
        m, rem = 0, f
        while True:
            quo, r = divmod(rem, q)
            if not r.is_zero():
                break
            m += 1
            rem = quo
        result.append((q, m))
    return result


def factor_sextic_mod_p(g, p: int) -> list[tuple[FpPoly, int]]:
    """Factor a rational polynomial modulo p.  Requires p not dividing lc(g)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if g.lc.numerator % p == 0 or g.lc.denominator % p == 0:
        raise ValueError(f"leading coefficient of g degenerates mod {p}")
    return factor_mod_p(FpPoly.from_poly(g, p))


# --- tiny GF(2^k) layer for characteristic-2 smoothness certification ---

_GF2_MODULI = {1: 0b10, 2: 0b111, 3: 0b1011, 4: 0b10011, 5: 0b100101, 6: 0b1000011}


class GF2m:
    """F_{2^k} with elements as int bitmasks, k <= 6."""

    def __init__(self, k: int):
        if k not in _GF2_MODULI:
            raise ValueError("supported extension degrees are 1..6")
        self.k = k
        self.modulus = _GF2_MODULI[k]
        self.order = 1 << k

    def elements(self):
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if (a >> self.k) & 1:
                a ^= self.modulus
        return r

    def pow(self, a: int, n: int) -> int:
        r = 1
        while n:
            if n & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            n >>= 1
        return r

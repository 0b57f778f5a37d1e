"""Exact scalar rings: rationals, Gaussian rationals and rational quaternions.

Rationals are plain ``fractions.Fraction`` (ints are accepted everywhere and
mix freely).  The two division rings defined here follow the same operator
protocol so the generic matrix code does not care which ring it works over.
"""

from __future__ import annotations

from fractions import Fraction

RATIONAL = "rational"
GAUSSIAN = "gaussian"
QUATERNION = "quaternion"


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected a rational number, got {type(x).__name__}")


class GaussianRational:
    """a + b*i with exact rational a, b."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _as_fraction(re))
        object.__setattr__(self, "im", _as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def coerce(x):
        if isinstance(x, GaussianRational):
            return x
        return GaussianRational(_as_fraction(x))

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def norm(self):
        return self.re * self.re + self.im * self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __add__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re * other, self.im * other)
        if isinstance(other, GaussianRational):
            return GaussianRational(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __truediv__(self, other):
        other = GaussianRational.coerce(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        c = other.conjugate()
        return GaussianRational(
            (self.re * c.re - self.im * c.im) / n,
            (self.re * c.im + self.im * c.re) / n,
        )

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        return format_gaussian(self)


I = GaussianRational(0, 1)


class Quaternion:
    """a + b*t1 + c*t2 + d*t3 with exact rational components.

    The imaginary units satisfy t1*t2 = t3 = -t2*t1 and (tk)^2 = -1.
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        object.__setattr__(self, "a", _as_fraction(a))
        object.__setattr__(self, "b", _as_fraction(b))
        object.__setattr__(self, "c", _as_fraction(c))
        object.__setattr__(self, "d", _as_fraction(d))

    def __setattr__(self, name, value):
        raise AttributeError("Quaternion is immutable")

    @staticmethod
    def coerce(x):
        if isinstance(x, Quaternion):
            return x
        return Quaternion(_as_fraction(x))

    def conjugate(self):
        return Quaternion(self.a, -self.b, -self.c, -self.d)

    def norm(self):
        return self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d

    def coords(self):
        return (self.a, self.b, self.c, self.d)

    def __bool__(self):
        return bool(self.a) or bool(self.b) or bool(self.c) or bool(self.d)

    def __eq__(self, other):
        if isinstance(other, Quaternion):
            return self.coords() == other.coords()
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.c == 0 and self.d == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if not (self.b or self.c or self.d):
            return hash(self.a)
        return hash(self.coords())

    def __add__(self, other):
        other = Quaternion.coerce(other)
        return Quaternion(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    __radd__ = __add__

    def __sub__(self, other):
        other = Quaternion.coerce(other)
        return Quaternion(self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d)

    def __rsub__(self, other):
        return Quaternion.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Quaternion(self.a * other, self.b * other, self.c * other, self.d * other)
        if isinstance(other, Quaternion):
            a1, b1, c1, d1 = self.coords()
            a2, b2, c2, d2 = other.coords()
            return Quaternion(
                a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                a1 * c2 + c1 * a2 + d1 * b2 - b1 * d2,
                a1 * d2 + d1 * a2 + b1 * c2 - c1 * b2,
            )
        return NotImplemented

    def __rmul__(self, other):
        # scalars commute with everything
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __neg__(self):
        return Quaternion(-self.a, -self.b, -self.c, -self.d)

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero quaternion")
        return Quaternion(self.a / n, -self.b / n, -self.c / n, -self.d / n)

    def __truediv__(self, other):
        # right division: self * other^-1
        return self * Quaternion.coerce(other).inverse()

    def __rtruediv__(self, other):
        return Quaternion.coerce(other) * self.inverse()

    def __repr__(self):
        return f"Quaternion({self.a!r}, {self.b!r}, {self.c!r}, {self.d!r})"


TAU1 = Quaternion(0, 1, 0, 0)
TAU2 = Quaternion(0, 0, 1, 0)
TAU3 = Quaternion(0, 0, 0, 1)


# ---------------------------------------------------------------------------
# ring descriptors used by generic code (flattening to rational coordinates)

class RingInfo:
    __slots__ = ("tag", "dim", "one", "coords", "from_coords")

    def __init__(self, tag, dim, one, coords, from_coords):
        object.__setattr__(self, "tag", tag)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "one", one)
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "from_coords", from_coords)

    def __setattr__(self, name, value):
        raise AttributeError("RingInfo is immutable")


RINGS = {
    RATIONAL: RingInfo(
        RATIONAL, 1, Fraction(1),
        lambda x: (_as_fraction(x),),
        lambda v: v[0],
    ),
    GAUSSIAN: RingInfo(
        GAUSSIAN, 2, GaussianRational(1),
        lambda x: (x.re, x.im) if isinstance(x, GaussianRational) else (_as_fraction(x), Fraction(0)),
        lambda v: GaussianRational(v[0], v[1]),
    ),
    QUATERNION: RingInfo(
        QUATERNION, 4, Quaternion(1),
        lambda x: x.coords() if isinstance(x, Quaternion) else (_as_fraction(x), Fraction(0), Fraction(0), Fraction(0)),
        lambda v: Quaternion(v[0], v[1], v[2], v[3]),
    ),
}


def ring_conjugate(tag, x):
    if tag == RATIONAL:
        return x
    if tag == GAUSSIAN:
        return GaussianRational.coerce(x).conjugate()
    return Quaternion.coerce(x).conjugate()


# ---------------------------------------------------------------------------
# string formats used in the JSON interfaces

def format_rational(x) -> str:
    return str(_as_fraction(x))


def parse_rational(s: str) -> Fraction:
    return Fraction(s.strip())


def format_gaussian(z) -> str:
    z = GaussianRational.coerce(z)
    if z.im == 0:
        return str(z.re)
    if z.im == 1:
        im = "i"
    elif z.im == -1:
        im = "-i"
    else:
        im = f"{z.im}i"
    if z.re == 0:
        return im
    sign = "+" if z.im > 0 else ""
    return f"{z.re}{sign}{im}"


def parse_gaussian(s: str) -> GaussianRational:
    s = s.strip().replace(" ", "")
    if not s:
        raise ValueError("empty scalar string")
    if "i" not in s:
        return GaussianRational(Fraction(s))
    if not s.endswith("i"):
        raise ValueError(f"malformed Gaussian rational: {s!r}")
    body = s[:-1]
    split = None
    for idx in range(len(body) - 1, 0, -1):
        if body[idx] in "+-" and body[idx - 1] not in "+-/":
            split = idx
            break
    if split is None:
        re_part, im_part = "0", body
    else:
        re_part, im_part = body[:split], body[split:]
    if im_part in ("", "+"):
        im = Fraction(1)
    elif im_part == "-":
        im = Fraction(-1)
    else:
        im = Fraction(im_part)
    return GaussianRational(Fraction(re_part), im)


def format_quaternion(q) -> list:
    q = Quaternion.coerce(q)
    return [str(x) for x in q.coords()]


def parse_quaternion(v) -> Quaternion:
    if not isinstance(v, (list, tuple)) or len(v) != 4:
        raise ValueError("quaternion must be a list [a, b, c, d]")
    return Quaternion(*[Fraction(str(x)) for x in v])


def format_scalar(ring_tag, x):
    if ring_tag == RATIONAL:
        return format_rational(x)
    if ring_tag == GAUSSIAN:
        return format_gaussian(x)
    return format_quaternion(x)


def parse_scalar(ring_tag, s):
    if ring_tag == RATIONAL:
        return parse_rational(s)
    if ring_tag == GAUSSIAN:
        return parse_gaussian(s)
    return parse_quaternion(s)

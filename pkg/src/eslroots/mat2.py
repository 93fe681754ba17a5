"""2x2 matrices over F_p, F_{p^2}, Z and Q.

Entries are domain elements (``FpElem``, ``Fp2Elem``, ``int``, ``Fraction``),
so all arithmetic is exact. The text format ``"a,b;c,d"`` lists rows.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from typing import NamedTuple

from .ffield import Fp2Elem, FpElem, PrimeField, QuadExt, legendre, sqrt_fp

__all__ = [
    "Integers",
    "Rationals",
    "ZZ",
    "QQ",
    "Mat2",
    "CharPoly",
    "Eigenvalues",
    "MatrixClass",
    "DomainMismatch",
    "IrreducibleError",
    "char_poly",
    "eigenvalues",
    "eigenvalue_square_law",
    "classify",
    "jordan_data",
    "parse_domain",
]


class DomainMismatch(TypeError):
    pass


class IrreducibleError(ValueError):
    """Raised when a Jordan form over the base field is requested for an irreducible matrix."""


class Integers:
    """The ring Z, with ``int`` elements."""

    is_field = False
    characteristic = 0
    zero = 0
    one = 1

    def __call__(self, x) -> int:
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError(f"{x} is not an integer")
            return int(x)
        if isinstance(x, (FpElem, Fp2Elem)):
            raise DomainMismatch("finite-field element used as an integer")
        return int(x)

    def __repr__(self):
        return "ZZ"

    def sqrt(self, x: int) -> frozenset[int]:
        if x < 0:
            return frozenset()
        r = math.isqrt(x)
        return frozenset({r, -r}) if r * r == x else frozenset()

    def nth_roots(self, x: int, n: int) -> frozenset[int]:
        if n == 1:
            return frozenset({x})
        if x == 0:
            return frozenset({0})
        if x < 0 and n % 2 == 0:
            return frozenset()
        r = _integer_nth_root(abs(x), n)
        if r ** n != abs(x):
            return frozenset()
        if n % 2 == 0:
            return frozenset({r, -r})
        return frozenset({r if x > 0 else -r})

    def div(self, x: int, y: int) -> int | None:
        """Exact quotient, or None when y does not divide x."""
        if y == 0:
            raise ZeroDivisionError("division by zero in Z")
        q, r = divmod(x, y)
        return q if r == 0 else None


def _integer_nth_root(x: int, n: int) -> int:
    """floor(x ** (1/n)) for x >= 0, by Newton iteration from above."""
    if x < 2:
        return x
    r = 1 << -(-x.bit_length() // n)
    while True:
        nr = ((n - 1) * r + x // r ** (n - 1)) // n
        if nr >= r:
            return r
        r = nr


class Rationals:
    """The field Q, with ``Fraction`` elements."""

    is_field = True
    characteristic = 0

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def __call__(self, x) -> Fraction:
        if isinstance(x, (FpElem, Fp2Elem)):
            raise DomainMismatch("finite-field element used as a rational")
        return Fraction(x)

    def __repr__(self):
        return "QQ"

    def sqrt(self, x) -> frozenset[Fraction]:
        x = Fraction(x)
        n = ZZ.sqrt(x.numerator)
        d = ZZ.sqrt(x.denominator)
        if not n or not d:
            return frozenset()
        r = Fraction(max(n), max(d))
        return frozenset({r, -r})

    def nth_roots(self, x, n: int) -> frozenset[Fraction]:
        x = Fraction(x)
        out = set()
        for a in ZZ.nth_roots(x.numerator, n):
            for b in ZZ.nth_roots(x.denominator, n):
                if b > 0 or n % 2 == 1:
                    out.add(Fraction(a, b))
        return frozenset(r for r in out if r ** n == x)

    def div(self, x, y) -> Fraction:
        return Fraction(x) / Fraction(y)


ZZ = Integers()
QQ = Rationals()


def _infer_domain(entries):
    for e in entries:
        if isinstance(e, FpElem):
            return e.field
        if isinstance(e, Fp2Elem):
            return e.ext
    if any(isinstance(e, Fraction) for e in entries):
        return QQ
    return ZZ


def _key(x) -> tuple:
    if isinstance(x, (FpElem, Fp2Elem)):
        return x.sort_key()
    return (x,)


class Mat2:
    """Immutable matrix [[a, b], [c, d]] over a single domain."""

    __slots__ = ("a", "b", "c", "d", "domain")

    def __init__(self, a, b, c, d, domain=None):
        if domain is None:
            domain = _infer_domain((a, b, c, d))
        self.domain = domain
        self.a, self.b, self.c, self.d = domain(a), domain(b), domain(c), domain(d)

    @classmethod
    def from_rows(cls, rows, domain=None) -> "Mat2":
        (a, b), (c, d) = rows
        return cls(a, b, c, d, domain)

    @classmethod
    def identity(cls, domain=ZZ) -> "Mat2":
        return cls.scalar(domain.one, domain)

    @classmethod
    def zero(cls, domain=ZZ) -> "Mat2":
        return cls.scalar(domain.zero, domain)

    @classmethod
    def scalar(cls, lam, domain=None) -> "Mat2":
        domain = domain or _infer_domain((lam,))
        z = domain.zero
        return cls(lam, z, z, lam, domain)

    @classmethod
    def parse(cls, text: str, domain=ZZ) -> "Mat2":
        """Parse ``"a,b;c,d"``. Over F_p, literals must lie in (-p, p)."""
        rows = [r for r in text.replace(" ", "").split(";")]
        if len(rows) != 2:
            raise ValueError(f"expected two rows separated by ';' in {text!r}")
        cells = [r.split(",") for r in rows]
        if any(len(r) != 2 for r in cells):
            raise ValueError(f"expected two entries per row in {text!r}")
        try:
            values = [Fraction(x) if "/" in x else int(x) for r in cells for x in r]
        except ValueError:
            raise ValueError(f"malformed matrix literal {text!r}") from None
        if isinstance(domain, PrimeField):
            for v in values:
                if not isinstance(v, int) or not -domain.p < v < domain.p:
                    raise ValueError(f"residue {v} out of range for F_{domain.p}")
        if domain is ZZ and any(isinstance(v, Fraction) for v in values):
            raise ValueError(f"non-integer entry in {text!r}")
        return cls(*values, domain)

    def format(self) -> str:
        """Canonical ``"a,b;c,d"`` text (residues in [0, p))."""
        return f"{self.a},{self.b};{self.c},{self.d}"

    def entries(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    def rows(self) -> tuple[tuple, tuple]:
        return ((self.a, self.b), (self.c, self.d))

    def key(self) -> tuple:
        return tuple(k for e in self.entries() for k in _key(e))

    def _check(self, other: "Mat2"):
        if other.domain is not self.domain:
            raise DomainMismatch(f"{self.domain!r} vs {other.domain!r}")

    def __add__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        self._check(other)
        return Mat2(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d, self.domain)

    def __sub__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        self._check(other)
        return Mat2(self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d, self.domain)

    def __neg__(self):
        return Mat2(-self.a, -self.b, -self.c, -self.d, self.domain)

    def __mul__(self, other):
        if isinstance(other, Mat2):
            return self @ other
        return Mat2(self.a * other, self.b * other, self.c * other, self.d * other, self.domain)

    def __rmul__(self, other):
        return self * other

    def __matmul__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        self._check(other)
        a, b, c, d = self.entries()
        e, f, g, h = other.entries()
        return Mat2(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h, self.domain)

    def __pow__(self, n: int) -> "Mat2":
        if n < 0:
            return self.inverse() ** (-n)
        result, base = Mat2.identity(self.domain), self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return self.domain is other.domain and self.entries() == other.entries()

    def __hash__(self):
        return hash(self.entries())

    def __lt__(self, other: "Mat2"):
        return self.key() < other.key()

    def __repr__(self):
        return f"Mat2([[{self.a}, {self.b}], [{self.c}, {self.d}]], {self.domain!r})"

    def __str__(self):
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"

    @property
    def trace(self):
        return self.a + self.d

    @property
    def det(self):
        return self.a * self.d - self.b * self.c

    @property
    def is_singular(self) -> bool:
        return self.det == 0

    def is_scalar(self) -> bool:
        return self.b == 0 and self.c == 0 and self.a == self.d

    def map(self, fn, domain) -> "Mat2":
        return Mat2(*(fn(e) for e in self.entries()), domain)

    def reduce(self, field: PrimeField) -> "Mat2":
        """Reduce an integer matrix modulo p."""
        return Mat2(*(field(int(e)) for e in self.entries()), field)

    def lift(self, ext: QuadExt) -> "Mat2":
        return Mat2(*(ext(int(e)) for e in self.entries()), ext)

    def scale_div(self, s) -> "Mat2":
        """Divide every entry by s exactly; ValueError over Z when not divisible."""
        dom = self.domain
        out = []
        for e in self.entries():
            q = dom.div(e, s)
            if q is None:
                raise ValueError(f"{self} is not divisible by {s}")
            out.append(q)
        return Mat2(*out, dom)

    def inverse(self) -> "Mat2":
        det = self.det
        dom = self.domain
        if det == 0:
            raise ZeroDivisionError("singular matrix")
        if dom is ZZ and det not in (1, -1):
            raise ZeroDivisionError(f"det {det} is not a unit in Z")
        adj = Mat2(self.d, -self.b, -self.c, self.a, dom)
        return adj.scale_div(det)

    def adjugate(self) -> "Mat2":
        return Mat2(self.d, -self.b, -self.c, self.a, self.domain)


class CharPoly(NamedTuple):
    """x^2 - tr*x + det."""

    tr: object
    det: object

    def __call__(self, x):
        return x * x - self.tr * x + self.det

    def at_matrix(self, X: Mat2) -> Mat2:
        return X @ X - X * self.tr + Mat2.scalar(self.det, X.domain)

    def discriminant(self):
        return self.tr * self.tr - 4 * self.det


def char_poly(X: Mat2) -> CharPoly:
    return CharPoly(X.trace, X.det)


class Eigenvalues(NamedTuple):
    lam1: Fp2Elem
    lam2: Fp2Elem

    @property
    def in_base_field(self) -> tuple[bool, bool]:
        return (self.lam1.in_base_field(), self.lam2.in_base_field())

    @property
    def repeated(self) -> bool:
        return self.lam1 == self.lam2


def _field_of(X: Mat2) -> PrimeField:
    if not isinstance(X.domain, PrimeField):
        raise DomainMismatch(f"expected a matrix over F_p, got {X.domain!r}")
    return X.domain


def eigenvalues(X: Mat2) -> Eigenvalues:
    """Both roots of the characteristic polynomial, lifted into F_{p^2}."""
    F = _field_of(X)
    ext = F.extension()
    tr, det = X.trace, X.det
    if F.p == 2:
        roots = [z for z in ext if z * z + tr * z + det == 0]
        pair = roots * 2 if len(roots) == 1 else roots
    else:
        disc = tr * tr - 4 * det
        half = F(2).inverse()
        if legendre(disc) >= 0:
            r = min(sqrt_fp(disc), key=int)
            pair = [ext((tr + r) * half), ext((tr - r) * half)]
        else:
            k = min(sqrt_fp(disc / F.nonresidue()), key=int)
            root = ext(int(tr), int(k)) * ext(int(half))
            pair = [root, ext(int(tr) * int(half), -int(k) * int(half))]
    lam1, lam2 = sorted(pair, key=lambda z: z.sort_key())
    return Eigenvalues(lam1, lam2)


class SquareLaw(NamedTuple):
    holds: bool
    squared: tuple[Fp2Elem, Fp2Elem]
    of_square: tuple[Fp2Elem, Fp2Elem]


def eigenvalue_square_law(X: Mat2) -> SquareLaw:
    """Compare the eigenvalues of X^2 with the squares of the eigenvalues of X."""
    ev = eigenvalues(X)
    squared = tuple(sorted((ev.lam1 * ev.lam1, ev.lam2 * ev.lam2), key=lambda z: z.sort_key()))
    ev2 = eigenvalues(X @ X)
    of_square = (ev2.lam1, ev2.lam2)
    return SquareLaw(squared == of_square, squared, of_square)


class MatrixClass(enum.Enum):
    """Structural type of a 2x2 matrix over F_p. Singularity is reported separately
    (``Mat2.is_singular``)."""

    SCALAR = "scalar"
    SIMPLE_SPLIT = "simple-split"
    SEMISIMPLE_IRREDUCIBLE = "semisimple-irreducible"
    JORDAN_BLOCK = "jordan-block"


def classify(X: Mat2) -> MatrixClass:
    F = _field_of(X)
    if X.is_scalar():
        return MatrixClass.SCALAR
    tr, det = X.trace, X.det
    if F.p == 2:
        # no division by 2: count roots of x^2 + tr x + det in F_2
        nroots = sum(1 for z in (0, 1) if (z * z + int(tr) * z + int(det)) % 2 == 0)
        if nroots == 2:
            return MatrixClass.SIMPLE_SPLIT
        if nroots == 0:
            return MatrixClass.SEMISIMPLE_IRREDUCIBLE
        return MatrixClass.JORDAN_BLOCK
    symbol = legendre(tr * tr - 4 * det)
    if symbol == 0:
        return MatrixClass.JORDAN_BLOCK
    if symbol == 1:
        return MatrixClass.SIMPLE_SPLIT
    return MatrixClass.SEMISIMPLE_IRREDUCIBLE


def _eigenvector(X: Mat2, lam) -> tuple:
    F = X.domain
    if X.b != 0:
        return (X.b, lam - X.a)
    if X.c != 0:
        return (lam - X.d, X.c)
    return (F.one, F.zero) if X.a == lam else (F.zero, F.one)


def jordan_data(X: Mat2) -> tuple[Mat2, Mat2]:
    """Return (J, U) with X = U J U^-1 and J diagonal or a Jordan block."""
    F = _field_of(X)
    kind = classify(X)
    if kind is MatrixClass.SCALAR:
        return X, Mat2.identity(F)
    if kind is MatrixClass.SEMISIMPLE_IRREDUCIBLE:
        raise IrreducibleError(f"{X} has no Jordan form over F_{F.p}")
    ev = eigenvalues(X)
    lam1, lam2 = ev.lam1.to_base(), ev.lam2.to_base()
    if kind is MatrixClass.SIMPLE_SPLIT:
        v1, v2 = _eigenvector(X, lam1), _eigenvector(X, lam2)
        U = Mat2(v1[0], v2[0], v1[1], v2[1], F)
        return Mat2(lam1, 0, 0, lam2, F), U
    N = X - Mat2.scalar(lam1, F)
    w = (F.one, F.zero) if (N.a, N.c) != (0, 0) else (F.zero, F.one)
    v = (N.a * w[0] + N.b * w[1], N.c * w[0] + N.d * w[1])
    U = Mat2(v[0], w[0], v[1], w[1], F)
    return Mat2(lam1, 1, 0, lam1, F), U


def parse_domain(name: str | int):
    """'Z', 'Q', or a prime modulus."""
    if isinstance(name, str) and name.upper() in ("Z", "ZZ"):
        return ZZ
    if isinstance(name, str) and name.upper() in ("Q", "QQ"):
        return QQ
    return PrimeField(int(name))

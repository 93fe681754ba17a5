"""Exact arithmetic in prime fields F_p and their quadratic extensions F_{p^2}.

Elements are immutable value objects supporting the usual operators. Plain
Python ints mix freely with field elements and are reduced on the fly::

    >>> F = PrimeField(11)
    >>> x = F(5)
    >>> sorted(r.value for r in sqrt_fp(x))
    [4, 7]
"""

from __future__ import annotations

import math
from functools import lru_cache

__all__ = [
    "PrimeField",
    "FpElem",
    "QuadExt",
    "Fp2Elem",
    "is_prime",
    "legendre",
    "sqrt_fp",
    "nth_roots_fp",
    "is_square_fp2",
    "sqrt_fp2",
]

# Residue-class scans are used below this modulus; larger p switch to
# group-theoretic methods.
SCAN_LIMIT = 10_000
FP2_SCAN_LIMIT = 13
MAX_MODULUS = 2**63


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """The prime field F_p. Instances are cached per modulus."""

    __slots__ = ("p", "_nonresidue", "__weakref__")
    _cache: dict[int, "PrimeField"] = {}

    def __new__(cls, p: int):
        p = int(p)
        if p in cls._cache:
            return cls._cache[p]
        if not is_prime(p):
            raise ValueError(f"{p} is not a prime")
        if p >= MAX_MODULUS:
            raise ValueError(f"modulus {p} exceeds machine-word range")
        self = super().__new__(cls)
        self.p = p
        self._nonresidue = None
        cls._cache[p] = self
        return self

    def __getnewargs__(self):
        return (self.p,)

    def __call__(self, value) -> "FpElem":
        if isinstance(value, FpElem):
            if value.field is not self:
                raise ValueError(f"element of F_{value.field.p} used in F_{self.p}")
            return value
        return FpElem(value, self)

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"

    def __iter__(self):
        return (FpElem(v, self) for v in range(self.p))

    def __len__(self) -> int:
        return self.p

    @property
    def zero(self) -> "FpElem":
        return FpElem(0, self)

    @property
    def one(self) -> "FpElem":
        return FpElem(1, self)

    @property
    def characteristic(self) -> int:
        return self.p

    def nonresidue(self) -> "FpElem":
        """Smallest quadratic non-residue (odd p only)."""
        if self.p == 2:
            raise ValueError("F_2 has no quadratic non-residue")
        if self._nonresidue is None:
            c = 2
            while pow(c, (self.p - 1) // 2, self.p) != self.p - 1:
                c += 1
            self._nonresidue = c
        return FpElem(self._nonresidue, self)

    def extension(self) -> "QuadExt":
        return QuadExt(self)

    is_field = True

    def sqrt(self, x) -> frozenset["FpElem"]:
        return sqrt_fp(self(x))

    def nth_roots(self, x, n: int) -> frozenset["FpElem"]:
        return nth_roots_fp(self(x), n)

    def div(self, x, y) -> "FpElem":
        return self(x) / y


class FpElem:
    __slots__ = ("value", "field")

    def __init__(self, value: int, field: PrimeField):
        self.field = field
        self.value = int(value) % field.p

    @property
    def p(self) -> int:
        return self.field.p

    def _coerce(self, other) -> int | None:
        if isinstance(other, FpElem):
            if other.field is not self.field:
                raise ValueError(f"cannot combine F_{self.p} and F_{other.p} elements")
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElem(self.value + o, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElem(self.value - o, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElem(o - self.value, self.field)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElem(self.value * o, self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElem(-self.value, self.field)

    def __pos__(self):
        return self

    def inverse(self) -> "FpElem":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return FpElem(pow(self.value, -1, self.field.p), self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return FpElem(self.value * pow(o, -1, self.field.p), self.field)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElem(o, self.field) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return FpElem(pow(self.value, n, self.field.p), self.field)

    def __eq__(self, other):
        if isinstance(other, FpElem):
            return self.field is other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p
        if isinstance(other, Fp2Elem):
            return other == self
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __repr__(self):
        return f"FpElem({self.value}, p={self.field.p})"

    def __str__(self):
        return str(self.value)

    def signed(self) -> int:
        """Representative in (-p/2, p/2]."""
        v = self.value
        return v - self.field.p if v > self.field.p // 2 else v

    def sort_key(self) -> tuple[int, ...]:
        return (self.value,)


def legendre(x: FpElem) -> int:
    """Legendre symbol (x/p) in {-1, 0, 1}; every nonzero element is a square for p = 2."""
    p = x.field.p
    if x.value == 0:
        return 0
    if p == 2:
        return 1
    ls = pow(x.value, (p - 1) // 2, p)
    return -1 if ls == p - 1 else 1


def _tonelli_shanks(n: int, p: int, z: int) -> int:
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    if s == 1:
        return pow(n, (p + 1) // 4, p)
    m, c, t, r = s, pow(z, q, p), pow(n, q, p), pow(n, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def sqrt_fp(x: FpElem) -> frozenset[FpElem]:
    """All square roots of x in F_p; the empty set means x is a non-residue."""
    F, p = x.field, x.field.p
    if x.value == 0:
        return frozenset({F.zero})
    if p == 2:
        return frozenset({x})
    if legendre(x) != 1:
        return frozenset()
    r = _tonelli_shanks(x.value, p, F.nonresidue().value)
    return frozenset({FpElem(r, F), FpElem(-r, F)})


@lru_cache(maxsize=None)
def _primitive_root(p: int) -> int:
    order = p - 1
    factors = _prime_factors(order)
    g = 2 if p > 2 else 1
    while any(pow(g, order // q, p) == 1 for q in factors):
        g += 1
    return g


def _prime_factors(n: int) -> list[int]:
    out, q = [], 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


def _discrete_log(h: int, g: int, p: int) -> int:
    """Baby-step giant-step: e with g^e = h (mod p)."""
    m = math.isqrt(p - 1) + 1
    table = {}
    e = 1
    for j in range(m):
        table.setdefault(e, j)
        e = e * g % p
    factor = pow(g, -m, p)
    gamma = h
    for i in range(m):
        if gamma in table:
            return i * m + table[gamma]
        gamma = gamma * factor % p
    raise ValueError("discrete log does not exist")


def nth_roots_fp(x: FpElem, n: int) -> frozenset[FpElem]:
    """All r in F_p with r**n == x."""
    if n < 1:
        raise ValueError("n must be positive")
    F, p = x.field, x.field.p
    if n == 1:
        return frozenset({x})
    if x.value == 0:
        return frozenset({F.zero})
    if p <= SCAN_LIMIT:
        return frozenset(FpElem(r, F) for r in range(1, p) if pow(r, n, p) == x.value)
    order = p - 1
    k = math.gcd(n, order)
    if pow(x.value, order // k, p) != 1:
        return frozenset()
    if n == 2:
        return sqrt_fp(x)
    g = _primitive_root(p)
    e = _discrete_log(x.value, g, p)
    m = order // k
    y0 = (e // k) * pow(n // k, -1, m) % m
    return frozenset(FpElem(pow(g, y0 + j * m, p), F) for j in range(k))


class QuadExt:
    """F_{p^2} = F_p[w]/(w^2 - r1*w - r0).

    Odd p uses w^2 = c with c the smallest non-residue; p = 2 uses w^2 = w + 1.
    """

    __slots__ = ("base", "r0", "r1", "__weakref__")
    _cache: dict[int, "QuadExt"] = {}

    def __new__(cls, base: PrimeField):
        if base.p in cls._cache:
            return cls._cache[base.p]
        self = super().__new__(cls)
        self.base = base
        if base.p == 2:
            self.r0, self.r1 = 1, 1
        else:
            self.r0, self.r1 = base.nonresidue().value, 0
        cls._cache[base.p] = self
        return self

    @property
    def p(self) -> int:
        return self.base.p

    @property
    def nonresidue(self) -> FpElem:
        return self.base.nonresidue()

    def __call__(self, a0, a1=0) -> "Fp2Elem":
        if isinstance(a0, Fp2Elem):
            return a0
        return Fp2Elem(a0, a1, self)

    def __iter__(self):
        p = self.p
        return (Fp2Elem(a0, a1, self) for a1 in range(p) for a0 in range(p))

    def __len__(self) -> int:
        return self.p * self.p

    def __repr__(self):
        return f"QuadExt(p={self.p})"

    @property
    def zero(self) -> "Fp2Elem":
        return Fp2Elem(0, 0, self)

    @property
    def one(self) -> "Fp2Elem":
        return Fp2Elem(1, 0, self)

    @property
    def w(self) -> "Fp2Elem":
        return Fp2Elem(0, 1, self)

    @property
    def characteristic(self) -> int:
        return self.p

    is_field = True

    def sqrt(self, x) -> frozenset["Fp2Elem"]:
        return sqrt_fp2(self(x))

    def nth_roots(self, x, n: int) -> frozenset["Fp2Elem"]:
        x = self(x)
        return frozenset(y for y in self if y**n == x)

    def div(self, x, y) -> "Fp2Elem":
        return self(x) / y


class Fp2Elem:
    """a0 + a1*w in F_{p^2}."""

    __slots__ = ("a0", "a1", "ext")

    def __init__(self, a0, a1, ext: QuadExt):
        p = ext.p
        self.ext = ext
        self.a0 = int(a0) % p
        self.a1 = int(a1) % p

    @property
    def p(self) -> int:
        return self.ext.p

    def _coerce(self, other):
        if isinstance(other, Fp2Elem):
            if other.ext is not self.ext:
                raise ValueError("elements of different extensions")
            return other.a0, other.a1
        if isinstance(other, FpElem):
            if other.field is not self.ext.base:
                raise ValueError("base field mismatch")
            return other.value, 0
        if isinstance(other, int):
            return other, 0
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp2Elem(self.a0 + o[0], self.a1 + o[1], self.ext)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp2Elem(self.a0 - o[0], self.a1 - o[1], self.ext)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp2Elem(o[0] - self.a0, o[1] - self.a1, self.ext)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        b0, b1 = o
        e = self.ext
        hi = self.a1 * b1
        return Fp2Elem(self.a0 * b0 + hi * e.r0, self.a0 * b1 + self.a1 * b0 + hi * e.r1, e)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp2Elem(-self.a0, -self.a1, self.ext)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.ext.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "Fp2Elem":
        return self.frobenius()

    def frobenius(self) -> "Fp2Elem":
        return self ** self.p

    def norm(self) -> FpElem:
        n = self * self.frobenius()
        return FpElem(n.a0, self.ext.base)

    def inverse(self) -> "Fp2Elem":
        nrm = self.norm()
        if nrm.value == 0:
            raise ZeroDivisionError("0 has no inverse in F_{p^2}")
        return self.frobenius() * nrm.inverse()

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * Fp2Elem(o[0], o[1], self.ext).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp2Elem(o[0], o[1], self.ext) / self

    def __eq__(self, other):
        if isinstance(other, Fp2Elem):
            return other.ext is self.ext and self.a0 == other.a0 and self.a1 == other.a1
        if isinstance(other, FpElem):
            return other.field is self.ext.base and self.a1 == 0 and self.a0 == other.value
        if isinstance(other, int):
            return self.a1 == 0 and self.a0 == other % self.p
        return NotImplemented

    def __hash__(self):
        if self.a1 == 0:
            return hash((self.a0, self.ext.p))
        return hash((self.a0, self.a1, self.ext.p))

    def __bool__(self):
        return bool(self.a0 or self.a1)

    def in_base_field(self) -> bool:
        return self.a1 == 0

    def to_base(self) -> FpElem:
        if self.a1:
            raise ValueError(f"{self} is not in F_{self.p}")
        return FpElem(self.a0, self.ext.base)

    def sort_key(self) -> tuple[int, int]:
        return (self.a0, self.a1)

    def __repr__(self):
        return f"Fp2Elem({self.a0}, {self.a1}, p={self.p})"

    def __str__(self):
        if self.a1 == 0:
            return str(self.a0)
        w = "w" if self.a1 == 1 else f"{self.a1}w"
        return w if self.a0 == 0 else f"{self.a0}+{w}"


def is_square_fp2(x: Fp2Elem) -> bool:
    """Euler's criterion in F_{p^2}: x == 0 or x^((p^2-1)/2) == 1."""
    if not x:
        return True
    p = x.p
    if p == 2:
        return True
    return x ** ((p * p - 1) // 2) == 1


def sqrt_fp2(x: Fp2Elem) -> frozenset[Fp2Elem]:
    ext = x.ext
    p = ext.p
    if not x:
        return frozenset({ext.zero})
    if p == 2:
        # squaring is the Frobenius on F_4, so x^2 is the unique root
        return frozenset({x * x})
    if p <= FP2_SCAN_LIMIT:
        return frozenset(y for y in ext if y * y == x)
    if not is_square_fp2(x):
        return frozenset()
    # (u + v w)^2 = u^2 + c v^2 + 2uv w
    F, c = ext.base, ext.nonresidue
    a0, a1 = F(x.a0), F(x.a1)
    roots = set()
    if a1 == 0:
        for u in sqrt_fp(a0):
            roots.add(Fp2Elem(u.value, 0, ext))
        for v in sqrt_fp(a0 / c):
            roots.add(Fp2Elem(0, v.value, ext))
    else:
        # u^2 is a root of X^2 - a0 X + c a1^2 / 4
        half = F(2).inverse()
        for s in sqrt_fp(a0 * a0 - c * a1 * a1):
            for u in sqrt_fp((a0 + s) * half):
                if u:
                    v = a1 / (2 * u)
                    roots.add(Fp2Elem(u.value, v.value, ext))
    return frozenset(r for r in roots if r * r == x)


"""Exact arithmetic in GF(p^m) with log/antilog tables.

Elements are canonical integers in [0, q): the residue polynomial
c_0 + c_1 x + ... + c_{m-1} x^{m-1} is encoded as sum(c_i * p^i).
Multiplication goes through discrete logs with respect to a fixed
generator of the multiplicative group, so repeated products in hot
loops are table lookups.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _iproduct

import numpy as np

FIELD_CAP = 1 << 16
KERNEL_FIELD_CAP = 256  # dense q x q add/sub tables for the search kernels


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# ---------------------------------------------------------------------------
# polynomial helpers over GF(p); coefficient tuples are low-degree-first
# ---------------------------------------------------------------------------

def _decode(v: int, p: int, width: int) -> list[int]:
    digits = []
    for _ in range(width):
        digits.append(v % p)
        v //= p
    return digits


def _encode(coeffs, p: int) -> int:
    v = 0
    for c in reversed(list(coeffs)):
        v = v * p + c
    return v


def _poly_mod(a: list[int], modulus: list[int], p: int) -> list[int]:
    # modulus is monic; plain long division, remainder only
    a = list(a)
    dm = len(modulus) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j, mj in enumerate(modulus):
                a[i - dm + j] = (a[i - dm + j] - c * mj) % p
    return [c % p for c in a[:dm]] if dm > 0 else []


def _poly_mul_mod(a: list[int], b: list[int], modulus: list[int], p: int) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    return _poly_mod(prod, modulus, p)


def _is_irreducible(coeffs: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    deg = len(coeffs) - 1
    for d in range(1, deg // 2 + 1):
        for t in range(p**d):
            divisor = _decode(t, p, d) + [1]
            if not any(_poly_mod(coeffs, divisor, p)):
                return False
    return True


def _find_modulus(p: int, m: int) -> tuple[int, ...]:
    """Monic irreducible of degree m over GF(p) with the smallest integer
    encoding sum(c_i p^i); for GF(8) this yields x^3 + x + 1."""
    if m == 1:
        return (0, 1)
    for t in range(p**m):
        coeffs = _decode(t, p, m) + [1]
        if _is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError(f"no irreducible polynomial of degree {m} over GF({p})")


# ---------------------------------------------------------------------------
# field objects
# ---------------------------------------------------------------------------

class FieldSpec:
    """GF(p^m) with a fixed modulus, generator and log/antilog tables.

    Immutable after construction; safe to share across workers.
    """

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = tuple(int(c) for c in modulus)
        self._pw = tuple(p**i for i in range(m))
        self.generator = self._find_generator()
        self._build_log_tables()
        self._add_u8 = None
        self._sub_u8 = None

    # -- construction internals

    def _poly_mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        pa = _decode(a, self.p, self.m)
        pb = _decode(b, self.p, self.m)
        return _encode(_poly_mul_mod(pa, pb, list(self.modulus), self.p), self.p)

    def _poly_pow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._poly_mul(r, a)
            a = self._poly_mul(a, a)
            e >>= 1
        return r

    def _find_generator(self) -> int:
        n = self.q - 1
        factors = set()
        t = n
        f = 2
        while f * f <= t:
            while t % f == 0:
                factors.add(f)
                t //= f
            f += 1
        if t > 1:
            factors.add(t)
        for g in range(1, self.q):
            if all(self._poly_pow(g, n // r) != 1 for r in factors):
                return g
        raise AssertionError("multiplicative group has no generator")

    def _build_log_tables(self) -> None:
        n = self.q - 1
        exp = np.zeros(n, dtype=np.int64)
        log = np.zeros(self.q, dtype=np.int64)
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._poly_mul(x, self.generator)
        if x != 1:
            raise AssertionError("generator order mismatch")
        self.exp = exp
        self.log = log

    # -- identity / display

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldSpec)
            and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def describe(self) -> str:
        mod = ",".join(str(c) for c in self.modulus)
        return f"GF({self.q}) p={self.p} m={self.m} modulus=[{mod}] generator={self.generator}"

    # -- scalar arithmetic on canonical integers

    def check(self, a: int) -> int:
        a = int(a)
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not a canonical element of {self!r}")
        return a

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        out = 0
        for pw in self._pw:
            out += ((a // pw + b // pw) % self.p) * pw
        return out

    def neg(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        out = 0
        for pw in self._pw:
            out += ((-(a // pw)) % self.p) * pw
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp[(self.log[a] + self.log[b]) % (self.q - 1)])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"zero has no inverse in {self!r}")
        return int(self.exp[(-self.log[a]) % (self.q - 1)])

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        return int(self.exp[(int(self.log[a]) * e) % (self.q - 1)])

    # -- vectorized arithmetic on integer ndarrays

    def add_arrays(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for pw in self._pw:
            out += ((a // pw + b // pw) % self.p) * pw
        return out

    def neg_arrays(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.m == 1:
            return (-a) % self.p
        if self.p == 2:
            return a.copy()
        out = np.zeros(a.shape, dtype=np.int64)
        for pw in self._pw:
            out += ((-(a // pw)) % self.p) * pw
        return out

    def sub_arrays(self, a, b) -> np.ndarray:
        return self.add_arrays(a, self.neg_arrays(b))

    def mul_arrays(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        mask = (a != 0) & (b != 0)
        la = self.log[np.where(a != 0, a, 1)]
        lb = self.log[np.where(b != 0, b, 1)]
        vals = self.exp[(la + lb) % (self.q - 1)]
        return np.where(mask, vals, 0)

    def kernel_tables(self) -> tuple[np.ndarray, np.ndarray]:
        """Dense (q, q) uint8 add and sub tables for the search kernels."""
        if self.q > KERNEL_FIELD_CAP:
            raise ValueError(
                f"search kernels support q <= {KERNEL_FIELD_CAP}, got q = {self.q}"
            )
        if self._add_u8 is None:
            col = np.arange(self.q, dtype=np.int64)
            add = self.add_arrays(col[:, None], col[None, :])
            sub = self.sub_arrays(col[:, None], col[None, :])
            self._add_u8 = add.astype(np.uint8)
            self._sub_u8 = sub.astype(np.uint8)
        return self._add_u8, self._sub_u8

    def element(self, value: int) -> "FieldElement":
        return FieldElement(self, self.check(value))

    def elements(self):
        return (FieldElement(self, v) for v in range(self.q))


@dataclass(frozen=True)
class FieldElement:
    """A canonical element of a FieldSpec with operator sugar."""

    spec: FieldSpec
    value: int

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise ValueError(f"mixed fields: {self.spec!r} vs {other.spec!r}")
            return other.value
        return self.spec.check(other)

    def __add__(self, other):
        return FieldElement(self.spec, self.spec.add(self.value, self._coerce(other)))

    def __sub__(self, other):
        return FieldElement(self.spec, self.spec.sub(self.value, self._coerce(other)))

    def __mul__(self, other):
        return FieldElement(self.spec, self.spec.mul(self.value, self._coerce(other)))

    def __truediv__(self, other):
        o = self._coerce(other)
        return FieldElement(self.spec, self.spec.mul(self.value, self.spec.inv(o)))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.spec, self.spec.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.inv(self.value))

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"{self.spec!r}:{self.value}"


_FIELD_CACHE: dict[tuple[int, int], FieldSpec] = {}


def make_field(p: int, m: int = 1) -> FieldSpec:
    """Build GF(p^m) over the smallest-encoding monic irreducible modulus."""
    p = int(p)
    m = int(m)
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m < 1:
        raise ValueError(f"extension degree must be positive, got {m}")
    if p**m > FIELD_CAP:
        raise ValueError(f"q = {p}^{m} exceeds the supported cap {FIELD_CAP}")
    key = (p, m)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = FieldSpec(p, m, _find_modulus(p, m))
    return _FIELD_CACHE[key]


def parse_field(descriptor: str) -> FieldSpec:
    """Parse a CLI field descriptor like '5' or '2^3'."""
    text = str(descriptor).strip()
    if "^" in text:
        base, _, exp = text.partition("^")
        return make_field(int(base), int(exp))
    return make_field(int(text), 1)


def as_prime_power(q: int) -> tuple[int, int] | None:
    """(p, m) with q = p^m, or None when q is not a prime power."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if q % p == 0:
            m = 0
            t = q
            while t % p == 0:
                t //= p
                m += 1
            return (p, m) if t == 1 else None
    return None


def field_for_order(q: int) -> FieldSpec:
    """GF(q) for a prime-power order given as a plain integer."""
    pm = as_prime_power(q)
    if pm is None:
        raise ValueError(f"{q} is not a prime power")
    return make_field(*pm)


def primitive_element(spec: FieldSpec) -> FieldElement:
    """Smallest canonical generator of the multiplicative group."""
    return FieldElement(spec, spec.generator)


def torus_exponents(spec: FieldSpec, n: int) -> np.ndarray:
    """All exponent vectors (j_1..j_n) in [0, q-2]^n, lexicographic order.

    Row r of the output labels torus point (g^{j_1}, ..., g^{j_n}); this is
    the frozen column order of every generator matrix.
    """
    if n < 1:
        raise ValueError(f"torus dimension must be positive, got {n}")
    r = spec.q - 1
    grids = np.meshgrid(*([np.arange(r, dtype=np.int64)] * n), indexing="ij")
    return np.stack(grids, axis=-1).reshape(-1, n)


def torus_points(spec: FieldSpec, n: int) -> list[tuple[FieldElement, ...]]:
    """The (q-1)^n points of the torus in frozen enumeration order."""
    if n < 1:
        raise ValueError(f"torus dimension must be positive, got {n}")
    coords = [FieldElement(spec, int(v)) for v in spec.exp]
    return [tuple(coords[j] for j in js) for js in _iproduct(range(spec.q - 1), repeat=n)]


# ---------------------------------------------------------------------------
# linear algebra over GF(q)
# ---------------------------------------------------------------------------

def row_reduce(spec: FieldSpec, mat: np.ndarray, columns=None):
    """Reduced row echelon form over GF(q), pivoting only on `columns`.

    Returns (reduced, transform, pivot_columns) with reduced = transform @ mat
    over GF(q); pivot columns are unit vectors in `reduced`.
    """
    m = np.array(mat, dtype=np.int64)
    rows, cols = m.shape
    t = np.eye(rows, dtype=np.int64)
    if columns is None:
        columns = range(cols)
    r = 0
    pivots: list[int] = []
    for c in columns:
        pivot = next((i for i in range(r, rows) if m[i, c]), None)
        if pivot is None:
            continue
        if pivot != r:
            m[[r, pivot]] = m[[pivot, r]]
            t[[r, pivot]] = t[[pivot, r]]
        s = spec.inv(int(m[r, c]))
        if s != 1:
            m[r] = spec.mul_arrays(s, m[r])
            t[r] = spec.mul_arrays(s, t[r])
        for i in range(rows):
            f = int(m[i, c])
            if i != r and f:
                m[i] = spec.sub_arrays(m[i], spec.mul_arrays(f, m[r]))
                t[i] = spec.sub_arrays(t[i], spec.mul_arrays(f, t[r]))
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, t, pivots


def gf_rank(spec: FieldSpec, mat: np.ndarray) -> int:
    _, _, pivots = row_reduce(spec, mat)
    return len(pivots)


def gf_matvec(spec: FieldSpec, vec: np.ndarray, mat: np.ndarray) -> np.ndarray:
    """vec @ mat over GF(q) for a length-k vector and a k x n matrix."""
    out = np.zeros(mat.shape[1], dtype=np.int64)
    for i, v in enumerate(np.asarray(vec, dtype=np.int64)):
        if v:
            out = spec.add_arrays(out, spec.mul_arrays(int(v), mat[i]))
    return out


def gf_matmul(spec: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """a @ b over GF(q)."""
    a = np.asarray(a, dtype=np.int64)
    return np.stack([gf_matvec(spec, row, b) for row in a])

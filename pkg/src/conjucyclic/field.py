"""Finite field towers GF(p) <= GF(q) <= GF(q^2) with exact table arithmetic.

The quadratic extension GF(q^2), q = p^m, is built once as GF(p)[x]/(f) for
a fixed primitive modulus f of degree 2m.  Elements are integer codes: the
base-p digits of the code are the coordinates of the element on the power
basis 1, beta, ..., beta^(2m-1), little-endian, so code 0 is the zero
element and code p is beta itself.  Multiplicative structure lives in
discrete-log tables of size q^2 - 1 (Zech style); addition is digitwise
mod p on the codes.

The subfield GF(q) is carved out of GF(q^2) by the fixed-point test
x^q == x instead of being built as a separate structure, which keeps
conjugation and trace trivially consistent with subfield membership.

The modulus is canonical so that constructions are reproducible bit for
bit: a built-in table of Conway polynomials covers p^(2m) in
{4, 9, 16, 25, 49, 64, 81, 256}; anything else falls back to the
lexicographically smallest primitive polynomial, comparing coefficient
tuples low-degree-first.  The built-in table can be overridden through the
CONJUCYCLIC_CONWAY_TABLE environment variable, naming a JSON file that maps
str(p^(2m)) to a low-degree-first coefficient list.
"""

from __future__ import annotations

import itertools
import json
import os

from .errors import (
    FieldTooLargeError,
    NoPrimitivePolynomialError,
    NotPrimeError,
)

#: Hard cap on q^2 so the exp/log tables stay in memory.
MAX_FIELD_SIZE = 1 << 24

#: Hard cap on the splitting-field size used during factorization.
MAX_HOST_FIELD_SIZE = 1 << 32

CONWAY_TABLE_ENV = "CONJUCYCLIC_CONWAY_TABLE"

# Conway polynomials, keyed by field size p^(2m), coefficients
# low-degree-first including the leading 1.
CONWAY_POLYNOMIALS = {
    4: (1, 1, 1),
    9: (2, 2, 1),
    16: (1, 1, 0, 0, 1),
    25: (2, 4, 1),
    49: (3, 6, 1),
    64: (1, 1, 0, 1, 1, 0, 1),
    81: (2, 0, 0, 2, 1),
    256: (1, 0, 1, 1, 1, 0, 0, 0, 1),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict:
    """Prime factorization by trial division, {prime: exponent}."""
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Split q = p^m, raising NotPrimeError if q is not a prime power."""
    if q < 2:
        raise NotPrimeError(f"{q} is not a prime power")
    fac = factorize(q)
    if len(fac) != 1:
        raise NotPrimeError(f"{q} is not a prime power")
    [(p, m)] = fac.items()
    return p, m


# ---------------------------------------------------------------------------
# Dense polynomial helpers over the prime field GF(p).  Polynomials are
# lists of ints in [0, p), low degree first, no trailing zeros.
# ---------------------------------------------------------------------------

def _pf_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pf_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pf_trim(out)


def _pf_mod(a, f, p):
    a = list(a)
    inv_lead = pow(f[-1], p - 2, p)
    while len(a) >= len(f):
        c = (a[-1] * inv_lead) % p
        shift = len(a) - len(f)
        if c:
            for j, fj in enumerate(f):
                a[shift + j] = (a[shift + j] - c * fj) % p
        a.pop()
        _pf_trim(a)
        if not a:
            break
    return a


def _pf_powmod(base, e, f, p):
    result = [1]
    base = _pf_mod(list(base), f, p)
    while e:
        if e & 1:
            result = _pf_mod(_pf_mul(result, base, p), f, p)
        base = _pf_mod(_pf_mul(base, base, p), f, p)
        e >>= 1
    return result


def _pf_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _pf_mod(a, b, p)
    return a


def _pf_is_irreducible(f, p):
    """Rabin test: f of degree d is irreducible over GF(p)."""
    d = len(f) - 1
    if d < 1 or (f[0] == 0 and d > 1):
        return False
    x = [0, 1]
    xq = _pf_powmod(x, p ** d, f, p)
    diff = _pf_trim([(a - b) % p for a, b in itertools.zip_longest(xq, x, fillvalue=0)])
    if diff:
        return False
    for r in factorize(d):
        xe = _pf_powmod(x, p ** (d // r), f, p)
        diff = _pf_trim([(a - b) % p for a, b in itertools.zip_longest(xe, x, fillvalue=0)])
        g = _pf_gcd(f, diff, p)
        if len(g) - 1 != 0:
            return False
    return True


def _pf_is_primitive(f, p):
    """f irreducible of degree d and x generates GF(p^d)*."""
    d = len(f) - 1
    if not _pf_is_irreducible(f, p):
        return False
    order = p ** d - 1
    for r in factorize(order):
        xe = _pf_powmod([0, 1], order // r, f, p)
        if xe == [1]:
            return False
    return True


def smallest_irreducible(p: int, d: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree d over GF(p)."""
    if d == 1:
        return (0, 1)
    for tail in itertools.product(range(p), repeat=d):
        if tail[0] == 0:
            continue
        f = list(tail) + [1]
        if _pf_is_irreducible(f, p):
            return tuple(f)
    raise NoPrimitivePolynomialError(f"no irreducible of degree {d} over GF({p})")


def smallest_primitive(p: int, d: int) -> tuple[int, ...]:
    """Lexicographically smallest monic primitive polynomial of degree d."""
    for tail in itertools.product(range(p), repeat=d):
        if tail[0] == 0:
            continue
        f = list(tail) + [1]
        if _pf_is_primitive(f, p):
            return tuple(f)
    raise NoPrimitivePolynomialError(f"no primitive polynomial of degree {d} over GF({p})")


def _load_conway_table() -> dict:
    table = dict(CONWAY_POLYNOMIALS)
    path = os.environ.get(CONWAY_TABLE_ENV)
    if path:
        with open(path, "r", encoding="utf-8") as fh:
            override = json.load(fh)
        for key, coeffs in override.items():
            table[int(key)] = tuple(int(c) for c in coeffs)
    return table


class FieldTower:
    """The pair (GF(q), GF(q^2)) with a fixed primitive element beta.

    Instances are immutable after construction; every operation is pure,
    so a tower can be shared freely across threads or worker processes.

    Attributes:
        p: prime characteristic.
        m: extension degree of GF(q) over GF(p); q = p^m.
        q, q2: field cardinalities.
        modulus: primitive modulus of GF(q^2) over GF(p), low-degree-first.
        beta: code of the primitive element (residue class of the variable).
        exp, log: discrete log tables; exp[i] is the code of beta^i.
    """

    def __init__(self, p: int, m: int, modulus) -> None:
        self.p = p
        self.m = m
        self.q = p ** m
        self.q2 = self.q ** 2
        self.ext_degree = 2 * m
        self.modulus = tuple(int(c) % p for c in modulus)
        if len(self.modulus) != self.ext_degree + 1 or self.modulus[-1] != 1:
            raise ValueError(
                f"modulus must be monic of degree {self.ext_degree} over GF({p})"
            )
        self._build_tables()
        self.beta = self.exp[1]
        self._subfield = None

    # -- construction -------------------------------------------------

    def _build_tables(self) -> None:
        p, d, n = self.p, self.ext_degree, self.q2
        exp = [0] * (n - 1)
        log = [-1] * n
        cur = [0] * d
        cur[0] = 1
        mod = self.modulus
        for i in range(n - 1):
            code = 0
            for j in range(d - 1, -1, -1):
                code = code * p + cur[j]
            if log[code] != -1:
                raise NoPrimitivePolynomialError(
                    f"modulus {self.modulus} over GF({p}) is not primitive"
                )
            exp[i] = code
            log[code] = i
            # multiply by x, reducing x^d = -mod[:d]
            carry = cur[d - 1]
            for j in range(d - 1, 0, -1):
                cur[j] = cur[j - 1]
            cur[0] = 0
            if carry:
                for j in range(d):
                    cur[j] = (cur[j] - carry * mod[j]) % p
        if any(cur[j] != (1 if j == 0 else 0) for j in range(d)):
            raise NoPrimitivePolynomialError(
                f"modulus {self.modulus} over GF({p}) is not primitive"
            )
        self.exp = exp
        self.log = log

    # -- element arithmetic (codes are plain ints) ---------------------

    def check_element(self, a: int) -> int:
        if not 0 <= a < self.q2:
            raise ValueError(f"element code {a} out of range for GF({self.q2})")
        return a

    def add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        s, mult = 0, 1
        while a or b:
            s += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return s

    def neg(self, a: int) -> int:
        p = self.p
        if p == 2:
            return a
        s, mult = 0, 1
        while a:
            s += (-a % p) * mult
            a //= p
            mult *= p
        return s

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q2 - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        return self.exp[-self.log[a] % (self.q2 - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e > 0:
                return 0
            if e == 0:
                return 1
            raise ZeroDivisionError("negative power of zero field element")
        return self.exp[(self.log[a] * e) % (self.q2 - 1)]

    # -- conjugation, trace, subfield ----------------------------------

    def conjugate(self, a: int) -> int:
        """The field automorphism x -> x^q fixing GF(q); an involution."""
        if a == 0:
            return 0
        return self.exp[(self.log[a] * self.q) % (self.q2 - 1)]

    def trace(self, a: int) -> int:
        """Trace of GF(q^2) down to GF(q): x + x^q."""
        return self.add(a, self.conjugate(a))

    def in_subfield(self, a: int) -> bool:
        return self.conjugate(a) == a

    @property
    def subfield(self) -> tuple:
        """Sorted codes of the q elements of GF(q); cached."""
        if self._subfield is None:
            codes = {0}
            step = self.q + 1
            for k in range(self.q - 1):
                codes.add(self.exp[(k * step) % (self.q2 - 1)])
            self._subfield = tuple(sorted(codes))
        return self._subfield

    # -- encoding helpers ----------------------------------------------

    def digits(self, a: int) -> tuple:
        """Base-p digit vector of a code, little-endian, length 2m."""
        p = self.p
        out = []
        for _ in range(self.ext_degree):
            out.append(a % p)
            a //= p
        return tuple(out)

    def encode(self, digits) -> int:
        code = 0
        for d in reversed(list(digits)):
            code = code * self.p + d % self.p
        return code

    def element_str(self, a: int) -> str:
        """Display form: prime-subfield constants as digits, else 'b<k>' for beta^k."""
        if a < self.p:
            return str(a)
        return f"b{self.log[a]}"

    def parse_element(self, token: str) -> int:
        """Inverse of element_str; also accepts plain integer codes."""
        token = token.strip()
        if token.startswith("b"):
            return self.exp[int(token[1:]) % (self.q2 - 1)]
        return self.check_element(int(token))

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    @staticmethod
    def from_json(obj: dict) -> "FieldTower":
        tower = build_tower(int(obj["p"]), int(obj["m"]))
        if list(tower.modulus) != [c % tower.p for c in obj["modulus"]]:
            tower = FieldTower(int(obj["p"]), int(obj["m"]), obj["modulus"])
        return tower

    def __repr__(self) -> str:
        return f"FieldTower(p={self.p}, m={self.m}, modulus={self.modulus})"


_TOWER_CACHE: dict = {}


def build_tower(p: int, m: int) -> FieldTower:
    """Construct the canonical tower GF(p^m) <= GF(p^(2m)).

    The modulus comes from the Conway table (or its environment override)
    when present, else from the lexicographically smallest primitive
    polynomial search.  Results are cached per (p, m, modulus).
    """
    if m < 1:
        raise ValueError(f"extension degree m must be >= 1, got {m}")
    if not is_prime(p):
        raise NotPrimeError(f"characteristic {p} is not prime")
    size = p ** (2 * m)
    if size > MAX_FIELD_SIZE:
        raise FieldTooLargeError(
            f"GF({size}) exceeds the table cap of 2^24 elements"
        )
    table = _load_conway_table()
    modulus = table.get(size)
    if modulus is None:
        modulus = smallest_primitive(p, 2 * m)
    key = (p, m, tuple(modulus))
    tower = _TOWER_CACHE.get(key)
    if tower is None:
        tower = FieldTower(p, m, modulus)
        _TOWER_CACHE[key] = tower
    return tower


def tower_for_q(q: int) -> FieldTower:
    """Canonical tower for a prime-power subfield size q."""
    p, m = prime_power(q)
    return build_tower(p, m)


class ExtensionField:
    """GF(p^d) with direct coefficient-vector arithmetic (no log tables).

    Serves as the splitting host for roots of unity during factorization,
    where p^d may be far too large for tables.  Element codes are base-p
    integers exactly like FieldTower's.
    """

    def __init__(self, p: int, d: int) -> None:
        if p ** d > MAX_HOST_FIELD_SIZE:
            raise FieldTooLargeError(
                f"splitting field GF({p}^{d}) exceeds the 2^32 cap"
            )
        self.p = p
        self.d = d
        self.order = p ** d
        self.modulus = smallest_irreducible(p, d)

    def _digits(self, a: int) -> list:
        p = self.p
        out = [0] * self.d
        i = 0
        while a:
            out[i] = a % p
            a //= p
            i += 1
        return out

    def _encode(self, digits) -> int:
        code = 0
        for c in reversed(digits):
            code = code * self.p + c
        return code

    def add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        s, mult = 0, 1
        while a or b:
            s += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return s

    def sub(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        s, mult = 0, 1
        while a or b:
            s += ((a - b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return s

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        p = self.p
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.d - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        mod = self.modulus
        for k in range(len(prod) - 1, self.d - 1, -1):
            c = prod[k]
            if c:
                prod[k] = 0
                shift = k - self.d
                for j in range(self.d):
                    prod[shift + j] = (prod[shift + j] - c * mod[j]) % p
        return self._encode(prod[: self.d])

    def pow(self, a: int, e: int) -> int:
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def element_of_order(self, n: int) -> int:
        """Deterministic element of multiplicative order exactly n."""
        if n == 1:
            return 1
        if (self.order - 1) % n != 0:
            raise ValueError(f"no element of order {n} in GF({self.order})")
        cofactor = (self.order - 1) // n
        prime_divs = list(factorize(n))
        for code in range(2, self.order):
            candidate = self.pow(code, cofactor)
            if candidate == 1:
                continue
            if all(self.pow(candidate, n // r) != 1 for r in prime_divs):
                return candidate
        raise NoPrimitivePolynomialError(
            f"no element of order {n} found in GF({self.order})"
        )

"""Polynomials over GF(q) and the factorization of x^(2n) - 1.

A polynomial is a tuple of element codes, low degree first, with no
trailing zeros; the zero polynomial is the empty tuple.  Coefficients are
expected to lie in the subfield GF(q) of the ambient tower, which is where
all generator polynomials of the cyclic codes of interest live.

Factorization of x^(2n) - 1 is deterministic: write 2n = p^ell * n0 with
gcd(n0, p) = 1, split x^(n0) - 1 into irreducibles via q-cyclotomic cosets
mod n0 (each coset contributes prod (x - gamma^j) over a primitive n0-th
root of unity gamma in the smallest extension GF(q^s) containing one), and
raise everything to the p^ell-th power.  No randomized splitting is
involved, so repeated runs agree bit for bit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dataclass_field

from .errors import FieldTooLargeError, NotADivisorError, ZeroConstantTermError
from .field import ExtensionField


def normalize(coeffs) -> tuple:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def degree(a) -> int:
    """Degree, with the zero polynomial reported as -1."""
    return len(a) - 1


def poly_add(tower, a, b) -> tuple:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = tower.add(out[i], c)
    return normalize(out)


def poly_neg(tower, a) -> tuple:
    return tuple(tower.neg(c) for c in a)


def poly_sub(tower, a, b) -> tuple:
    return poly_add(tower, a, poly_neg(tower, b))


def poly_mul(tower, a, b) -> tuple:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = tower.add(out[i + j], tower.mul(ai, bj))
    return normalize(out)


def poly_scale(tower, c, a) -> tuple:
    if c == 0:
        return ()
    return normalize([tower.mul(c, x) for x in a])


def poly_divmod(tower, a, b) -> tuple:
    """Quotient and remainder with deg r < deg b."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db, lead_inv = degree(b), tower.inv(b[-1])
    if degree(a) < db:
        return (), normalize(a)
    quot = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = tower.mul(a[k], lead_inv)
        if c:
            quot[k - db] = c
            for j, bj in enumerate(b):
                a[k - db + j] = tower.sub(a[k - db + j], tower.mul(c, bj))
    return normalize(quot), normalize(a)


def poly_mod(tower, a, b) -> tuple:
    return poly_divmod(tower, a, b)[1]


def monic(tower, a) -> tuple:
    if not a:
        return ()
    if a[-1] == 1:
        return normalize(a)
    return poly_scale(tower, tower.inv(a[-1]), a)


def poly_gcd(tower, a, b) -> tuple:
    a, b = normalize(a), normalize(b)
    while b:
        a, b = b, poly_mod(tower, a, b)
    return monic(tower, a)


def poly_pow(tower, a, e: int) -> tuple:
    result = (1,)
    base = normalize(a)
    while e:
        if e & 1:
            result = poly_mul(tower, result, base)
        base = poly_mul(tower, base, base)
        e >>= 1
    return result


def poly_eval(tower, a, x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = tower.add(tower.mul(acc, x), c)
    return acc


def x_pow_minus_one(tower, n: int) -> tuple:
    """x^n - 1 as a coefficient tuple."""
    out = [0] * (n + 1)
    out[0] = tower.neg(1)
    out[n] = 1
    return tuple(out)


def monic_reciprocal(tower, h) -> tuple:
    """Monic reciprocal x^deg(h) * h(1/x), normalized to leading coefficient 1.

    Requires a nonzero constant term (automatic for divisors of x^N - 1);
    applying it twice gives back the monic normalization of h.
    """
    h = normalize(h)
    if not h or h[0] == 0:
        raise ZeroConstantTermError("reciprocal needs a nonzero constant term")
    return monic(tower, tuple(reversed(h)))


def poly_str(tower, a) -> str:
    """Human form like '2 + x + b5*x^2' with beta-power coefficients."""
    if not a:
        return "0"
    parts = []
    for i, c in enumerate(a):
        if c == 0:
            continue
        cs = tower.element_str(c)
        if i == 0:
            parts.append(cs)
        else:
            xs = "x" if i == 1 else f"x^{i}"
            parts.append(xs if cs == "1" else f"{cs}*{xs}")
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# Factorization of x^(2n) - 1 over GF(q)
# ---------------------------------------------------------------------------


def cyclotomic_cosets(q: int, n0: int):
    """q-cyclotomic cosets mod n0, each sorted, ordered by smallest member."""
    seen = [False] * n0
    cosets = []
    for j in range(n0):
        if seen[j]:
            continue
        coset = []
        k = j
        while not seen[k]:
            seen[k] = True
            coset.append(k)
            k = (k * q) % n0
        cosets.append(tuple(sorted(coset)))
    return cosets


def _multiplicative_order(q: int, n0: int) -> int:
    order, acc = 1, q % n0
    while acc != 1:
        acc = (acc * q) % n0
        order += 1
    return order


def _subfield_pullback(host: ExtensionField, tower) -> dict:
    """Map codes of the GF(q) copy inside the host field to tower codes."""
    q = tower.q
    if tower.m == 1:
        return {c: c for c in range(q)}
    # delta = beta^(q+1) generates GF(q)*; find a root of its minimal
    # polynomial over GF(p) inside the host field.
    step = (q + 1) % (tower.q2 - 1)
    delta = tower.exp[step]
    minpoly = (1,)
    conj = delta
    for _ in range(tower.m):
        minpoly = poly_mul(tower, minpoly, (tower.neg(conj), 1))
        conj = tower.pow(conj, tower.p)
    assert conj == delta and all(c < tower.p for c in minpoly)
    cofactor = (host.order - 1) // (q - 1)
    image = None
    for code in range(2, host.order):
        eta = host.pow(code, cofactor)
        if eta in (0, 1):
            continue
        acc = 0
        for c in reversed(minpoly):
            acc = host.add(host.mul(acc, eta), c)
        if acc == 0:
            image = eta
            break
    assert image is not None, "subfield embedding root not found"
    pull = {0: 0, 1: 1}
    host_pow, tower_pow = image, delta
    for t in range(1, q - 1):
        pull[host_pow] = tower_pow
        host_pow = host.mul(host_pow, image)
        tower_pow = tower.exp[(step * t + step) % (tower.q2 - 1)]
    return pull


@dataclass(frozen=True)
class Factorization:
    """Complete factorization x^(2n) - 1 = prod base[i]^multiplicity over GF(q)."""

    tower: object
    n: int
    n0: int
    ell: int
    multiplicity: int
    base: tuple
    degrees: tuple = dataclass_field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(degree(g) for g in self.base))

    @property
    def t(self) -> int:
        return len(self.base)

    @property
    def divisor_count(self) -> int:
        return (self.multiplicity + 1) ** self.t

    def divisor(self, exponents) -> tuple:
        """Expand the divisor prod base[i]^exponents[i]."""
        exponents = tuple(int(e) for e in exponents)
        if len(exponents) != self.t or any(
            e < 0 or e > self.multiplicity for e in exponents
        ):
            raise ValueError(
                f"exponents must be {self.t} values in [0, {self.multiplicity}]"
            )
        out = (1,)
        for g, e in zip(self.base, exponents):
            if e:
                out = poly_mul(self.tower, out, poly_pow(self.tower, g, e))
        return out

    def to_json(self) -> dict:
        return {
            "n0": self.n0,
            "ell": self.ell,
            "t": self.t,
            "multiplicity": self.multiplicity,
            "factors": [list(g) for g in self.base],
        }


def factor_x2n_minus_1(tower, n: int) -> Factorization:
    """Factor x^(2n) - 1 over GF(q) into monic irreducibles.

    Factors are sorted by (degree, coefficient codes) so output order never
    depends on iteration internals.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    p = tower.p
    two_n = 2 * n
    n0, ell = two_n, 0
    while n0 % p == 0:
        n0 //= p
        ell += 1
    if n0 == 1:
        base = [(tower.neg(1), 1)]
    else:
        s = _multiplicative_order(tower.q, n0)
        if tower.q ** s > (1 << 32):
            raise FieldTooLargeError(
                f"splitting field GF({tower.q}^{s}) exceeds the 2^32 cap"
            )
        host = ExtensionField(p, tower.m * s)
        gamma = host.element_of_order(n0)
        pull = _subfield_pullback(host, tower)
        base = []
        for coset in cyclotomic_cosets(tower.q, n0):
            # product of (x - gamma^j) over the coset, in the host field
            factor = [1]
            for j in coset:
                root = host.pow(gamma, j)
                nxt = [0] * (len(factor) + 1)
                for i, c in enumerate(factor):
                    nxt[i + 1] = host.add(nxt[i + 1], c)
                    nxt[i] = host.sub(nxt[i], host.mul(c, root))
                factor = nxt
            base.append(tuple(pull[c] for c in factor))
    base.sort(key=lambda g: (degree(g), g))
    fac = Factorization(
        tower=tower, n=n, n0=n0, ell=ell, multiplicity=p ** ell, base=tuple(base)
    )
    product = (1,)
    for g in fac.base:
        product = poly_mul(tower, product, poly_pow(tower, g, fac.multiplicity))
    assert product == x_pow_minus_one(tower, two_n), "factorization self-check failed"
    return fac


def enumerate_divisors(fac: Factorization):
    """Yield every (exponents, divisor) pair, exponent tuples in lex order."""
    cache = [
        [poly_pow(fac.tower, g, e) for e in range(fac.multiplicity + 1)]
        for g in fac.base
    ]
    for exponents in itertools.product(range(fac.multiplicity + 1), repeat=fac.t):
        out = (1,)
        for powers, e in zip(cache, exponents):
            if e:
                out = poly_mul(fac.tower, out, powers[e])
        yield exponents, out


def check_divisor(tower, n: int, g) -> tuple:
    """Validate that g divides x^(2n) - 1; return (monic g, cofactor h)."""
    g = monic(tower, normalize(g))
    if not g:
        raise NotADivisorError("the zero polynomial is not a divisor")
    for c in g:
        if not tower.in_subfield(c):
            raise NotADivisorError(
                "generator coefficients must lie in the subfield GF(q)"
            )
    quotient, remainder = poly_divmod(tower, x_pow_minus_one(tower, 2 * n), g)
    if remainder:
        raise NotADivisorError(
            f"polynomial of degree {degree(g)} does not divide x^{2 * n} - 1"
        )
    return g, quotient

"""Additive conjucyclic codes over GF(q^2) and their q-ary cyclic mirrors.

A code C <= GF(q^2)^n is conjucyclic when it is closed under the shift

    T(c) = (conj(c_{n-1}), c_0, ..., c_{n-2}),

the cyclic shift that conjugates the wrapped coordinate.  Writing beta for
the tower's primitive element, every element alpha of GF(q^2) is pinned by
its trace pair (Tr(beta * alpha), Tr(beta^q * alpha)), and expanding a
vector entrywise into trace pairs (first components, then second
components) is a GF(q)-linear bijection of GF(q^2)^n onto GF(q)^{2n} that
turns T into the plain cyclic shift.  GF(q)-linear conjucyclic codes of
length n therefore correspond exactly to q-ary cyclic codes of length 2n,
and this module constructs a conjucyclic code from any monic divisor g of
x^(2n) - 1: its additive generator matrix stacks the T-iterates of the
contraction of the g coefficient vector.

The alternating inner product implemented here is the pullback of the
symplectic form through the expansion, scaled so that

    symplectic(expand(u), expand(v)) == alternating(u, v)

holds identically; for characteristic 2 it coincides with the usual
trace-Hermitian-style form.  Alternating duals, the largest plain-cyclic
subcode, and the trace dual (characteristic 2) all come from the q-ary
side through the expansion.
"""

from __future__ import annotations

from . import linalg
from .cyclic import CyclicCode, symplectic_swap
from .errors import LengthMismatchError, OddLengthError, WrongCharacteristicError


def _inversion_constants(tower):
    """(A, B) with alpha = A * Tr(beta*alpha) - B * Tr(beta^q * alpha)."""
    cached = getattr(tower, "_trace_pair_constants", None)
    if cached is None:
        q, modulus = tower.q, tower.q2 - 1
        beta = tower.beta
        denom = tower.sub(beta, tower.exp[(2 * q - 1) % modulus])
        a = tower.inv(denom)
        b = tower.mul(tower.exp[(q - 1) % modulus], a)
        cached = (a, b)
        tower._trace_pair_constants = cached
    return cached


def trace_pair(tower, alpha: int) -> tuple:
    """(Tr(beta * alpha), Tr(beta^q * alpha)): a GF(q)-linear bijection
    of GF(q^2) onto GF(q)^2."""
    beta = tower.beta
    return (
        tower.trace(tower.mul(beta, alpha)),
        tower.trace(tower.mul(tower.conjugate(beta), alpha)),
    )


def trace_pair_inv(tower, first: int, second: int) -> int:
    """Recover alpha from its trace pair."""
    a, b = _inversion_constants(tower)
    return tower.sub(tower.mul(a, first), tower.mul(b, second))


def expand(tower, vec) -> tuple:
    """GF(q^2)^n -> GF(q)^{2n}: first trace-pair components, then second."""
    beta = tower.beta
    beta_q = tower.conjugate(beta)
    firsts = tuple(tower.trace(tower.mul(beta, x)) for x in vec)
    seconds = tuple(tower.trace(tower.mul(beta_q, x)) for x in vec)
    return firsts + seconds


def contract(tower, vec) -> tuple:
    """Inverse of expand; raises OddLengthError on odd-length input."""
    if len(vec) % 2:
        raise OddLengthError("contract needs an even-length q-ary vector")
    n = len(vec) // 2
    return tuple(trace_pair_inv(tower, vec[i], vec[n + i]) for i in range(n))


def conjucyclic_shift(tower, vec) -> tuple:
    """T: right cyclic shift conjugating the wrapped coordinate."""
    if not vec:
        return tuple(vec)
    return (tower.conjugate(vec[-1]),) + tuple(vec[:-1])


def alternating_inner(tower, u, v) -> int:
    """(beta^2 - beta^{2q}) * sum_i (u_i conj(v_i) - conj(u_i) v_i).

    GF(q)-bilinear and alternating; its scale is pinned by the identity
    symplectic(expand(u), expand(v)) == alternating(u, v).
    """
    if len(u) != len(v):
        raise LengthMismatchError(f"lengths {len(u)} != {len(v)}")
    modulus = tower.q2 - 1
    scale = tower.sub(tower.exp[2 % modulus], tower.exp[(2 * tower.q) % modulus])
    acc = 0
    for a, b in zip(u, v):
        acc = tower.add(acc, tower.mul(a, tower.conjugate(b)))
        acc = tower.sub(acc, tower.mul(tower.conjugate(a), b))
    return tower.mul(scale, acc)


def is_conjucyclic(tower, rows) -> bool:
    """True when the GF(q)-span of the rows is closed under the shift T."""
    rows = [tuple(r) for r in rows]
    if not rows:
        return True
    basis, pivots = linalg.rref(tower, [expand(tower, r) for r in rows])
    return all(
        linalg.in_span(tower, basis, pivots, expand(tower, conjucyclic_shift(tower, r)))
        for r in rows
    )


def largest_cyclic_subcode(tower, rows):
    """Basis of the largest q-ary cyclic code inside the span of the rows.

    The rows must GF(q)-generate a conjucyclic code.  On the q-ary side the
    subcode is exactly the set of codewords whose two halves agree, so it
    falls out of one exact kernel computation; contracting back yields
    vectors whose entries all lie in GF(q).
    """
    rows = [tuple(r) for r in rows]
    if not rows:
        return []
    expanded = [expand(tower, r) for r in rows]
    basis, _ = linalg.rref(tower, expanded)
    if not basis:
        return []
    n = len(rows[0])
    halves_diff = [
        tuple(tower.sub(row[i], row[n + i]) for i in range(n)) for row in basis
    ]
    coeffs = linalg.left_kernel(tower, halves_diff)
    out = []
    for a in coeffs:
        word = [0] * (2 * n)
        for c, row in zip(a, basis):
            if c:
                word = [tower.add(w, tower.mul(c, x)) for w, x in zip(word, row)]
        vec = contract(tower, tuple(word))
        assert all(tower.in_subfield(x) for x in vec)
        out.append(vec)
    return out


class ConjucyclicCode:
    """The GF(q)-linear conjucyclic code over GF(q^2) attached to a divisor.

    Attributes:
        tower: the ambient field tower.
        n: code length over GF(q^2).
        cyclic: the mirror q-ary cyclic code of length 2n.
        g: monic generator polynomial of the mirror (divisor of x^(2n)-1).
        gen_matrix: additive generator matrix; (2n - deg g) rows in
            GF(q^2)^n, the T-iterates of the contracted g vector.  Its
            GF(q)-row-span is the code, of size q^(2n - deg g).
    """

    def __init__(self, tower, n: int, g) -> None:
        self.tower = tower
        self.n = n
        self.cyclic = CyclicCode(tower, n, g)
        self.g = self.cyclic.g
        self.card_log_q = self.cyclic.dim
        rows = []
        if self.card_log_q:
            row = contract(tower, self.cyclic.coefficient_vector(self.g))
            for _ in range(self.card_log_q):
                rows.append(row)
                row = conjucyclic_shift(tower, row)
        self.gen_matrix = rows

    @property
    def k(self) -> int:
        """deg g; the alternating dual has this many generator rows."""
        return self.cyclic.k

    def alternating_dual_matrix(self):
        """Additive generator matrix of the alternating dual.

        Row i is the contraction of the i-th symplectic-dual row of the
        mirror code; the GF(q)-span is the full alternating dual, of size
        q^(deg g).
        """
        return [
            contract(self.tower, row) for row in self.cyclic.symplectic_dual_matrix()
        ]

    def alternating_dual_matrix_char2(self):
        """Characteristic-2 form of the alternating dual matrix.

        Applies the half-swap to the reciprocal-cofactor vector once and
        then iterates T; row-for-row equal to alternating_dual_matrix
        because the half-swap and the cyclic shift commute when -1 = 1.
        """
        if self.tower.p != 2:
            raise WrongCharacteristicError(
                "this dual construction needs characteristic 2"
            )
        rows = []
        if self.k:
            vec = symplectic_swap(
                self.tower, self.cyclic.coefficient_vector(self.cyclic.h_star)
            )
            row = contract(self.tower, vec)
            for _ in range(self.k):
                rows.append(row)
                row = conjucyclic_shift(self.tower, row)
        return rows

    def trace_dual_matrix(self):
        """Basis of the trace dual {v : Tr(<u, v>_e) = 0 for all u in C}.

        Characteristic 2 only: there the alternating form reduces to
        Tr(sum u_i conj(v_i)) up to a nonzero scale, so conjugating every
        entry of the alternating dual basis yields the trace dual.  For
        q = 2 the conjugation is the coordinatewise squaring map.
        """
        if self.tower.p != 2:
            raise WrongCharacteristicError("the trace dual needs characteristic 2")
        return [
            tuple(self.tower.conjugate(x) for x in row)
            for row in self.alternating_dual_matrix()
        ]

    def largest_cyclic_subcode(self):
        """Basis of the largest q-ary cyclic code contained in this code."""
        return largest_cyclic_subcode(self.tower, self.gen_matrix)

    def is_conjucyclic_closed(self) -> bool:
        return is_conjucyclic(self.tower, self.gen_matrix)

    def to_json(self) -> dict:
        return {
            "q": self.tower.q,
            "n": self.n,
            "g": list(self.g),
            "genMatrix": [list(r) for r in self.gen_matrix],
            "dualMatrix": [list(r) for r in self.alternating_dual_matrix()],
        }

    def __repr__(self) -> str:
        return (
            f"ConjucyclicCode(q2={self.tower.q2}, n={self.n}, "
            f"log_q_size={self.card_log_q})"
        )

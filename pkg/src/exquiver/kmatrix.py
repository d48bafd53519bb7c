"""Exact multivariate rational-function matrices with tensor-leg structure.

Everything is over Q: polynomials are sparse monomial maps, fractions are
reduced by content only, and equality is decided by cross-multiplication.
On top of that sit the small boundary matrices: the rank-one K-matrix, the
Yang R-matrix, and the checks for unitarity, Yang-Baxter, the reflection
equation, fusion, and the sandwich (S-) operator.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm, prod
from typing import Callable, Sequence

HBAR = "hbar"

Mono = tuple  # sorted ((symbol, power), ...)


def _mono_mul(m1: Mono, m2: Mono) -> Mono:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for s, e in m2:
        d[s] = d.get(s, 0) + e
    return tuple(sorted(d.items()))


class Poly:
    """Multivariate polynomial over Q in sparse form."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @staticmethod
    def const(c) -> "Poly":
        c = Fraction(c)
        return Poly({(): c} if c else {})

    @staticmethod
    def sym(name: str, power: int = 1) -> "Poly":
        return Poly({((name, power),): Fraction(1)})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.terms == other.terms

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return Poly(out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return Poly(out)

    def scale(self, c: Fraction) -> "Poly":
        return Poly({m: v * c for m, v in self.terms.items()}) if c else Poly()

    def subst(self, name: str, value) -> "Poly":
        value = Fraction(value)
        out: dict = {}
        for m, c in self.terms.items():
            rest = tuple((s, e) for s, e in m if s != name)
            for s, e in m:
                if s == name:
                    c = c * value**e
            out[rest] = out.get(rest, Fraction(0)) + c
        return Poly(out)

    def content(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        num = gcd(*(c.numerator for c in self.terms.values()))
        den = lcm(*(c.denominator for c in self.terms.values()))
        return Fraction(num, den)

    def leading_coeff(self) -> Fraction:
        return self.terms[max(self.terms)] if self.terms else Fraction(0)

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for m, c in sorted(self.terms.items(), reverse=True):
            body = "*".join(s if e == 1 else f"{s}^{e}" for s, e in m)
            if body:
                lead = "" if c == 1 else "-" if c == -1 else f"{c}*"
                bits.append(f"{lead}{body}")
            else:
                bits.append(str(c))
        return " + ".join(bits).replace("+ -", "- ")

    __repr__ = __str__


def sym(name: str) -> Poly:
    return Poly.sym(name)


def _expr(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, str):
        return Poly.sym(x)
    return Poly.const(x)


def _frac_gcd(a: Fraction, b: Fraction) -> Fraction:
    return Fraction(gcd(a.numerator, b.numerator), lcm(a.denominator, b.denominator))


class RatFunc:
    """Quotient of two Polys, reduced by content; equality by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _expr(num)
        den = Poly.const(1) if den is None else _expr(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num, self.den = Poly(), Poly.const(1)
            return
        g = _frac_gcd(num.content(), den.content())
        if den.leading_coeff() < 0:
            g = -g
        if g != 1:
            inv = 1 / g
            num, den = num.scale(inv), den.scale(inv)
        self.num, self.den = num, den

    @staticmethod
    def zero() -> "RatFunc":
        return RatFunc(Poly())

    @staticmethod
    def one() -> "RatFunc":
        return RatFunc(Poly.const(1))

    def is_zero(self) -> bool:
        return not self.num

    def __eq__(self, other):
        return self.num * other.den == other.num * self.den

    def __add__(self, other):
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.is_zero() or other.is_zero():
            return RatFunc.zero()
        return RatFunc(self.num * other.num, self.den * other.den)

    def inv(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        return self * other.inv()

    def subst(self, name: str, value) -> "RatFunc":
        return RatFunc(self.num.subst(name, value), self.den.subst(name, value))

    def __str__(self):
        if self.den == Poly.const(1):
            return str(self.num)
        return f"({self.num})/({self.den})"

    __repr__ = __str__


class RFMatrix:
    """Square matrix of RatFunc entries over a declared tensor-leg structure."""

    __slots__ = ("entries", "legs")

    def __init__(self, entries, legs):
        legs = tuple(int(d) for d in legs)
        if not legs or any(d <= 0 for d in legs):
            raise ValueError("legs must be positive dimensions")
        n = prod(legs)
        entries = tuple(tuple(e for e in row) for row in entries)
        if len(entries) != n or any(len(row) != n for row in entries):
            raise ValueError(f"need a {n}x{n} matrix for legs {legs}")
        self.entries = entries
        self.legs = legs

    @property
    def size(self) -> int:
        return len(self.entries)

    @staticmethod
    def identity(legs) -> "RFMatrix":
        n = prod(legs)
        one, zero = RatFunc.one(), RatFunc.zero()
        return RFMatrix(
            [[one if i == j else zero for j in range(n)] for i in range(n)], legs
        )

    def __eq__(self, other):
        if self.legs != other.legs:
            return False
        return all(
            a == b for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb)
        )

    def __matmul__(self, other):
        if self.legs != other.legs:
            raise ValueError("leg dimensions do not match")
        n = self.size
        out = [[RatFunc.zero()] * n for _ in range(n)]
        for i in range(n):
            row = out[i]
            for k, aik in enumerate(self.entries[i]):
                if aik.is_zero():
                    continue
                for j, bkj in enumerate(other.entries[k]):
                    if not bkj.is_zero():
                        row[j] = row[j] + aik * bkj
        return RFMatrix(out, self.legs)

    def subst(self, name: str, value) -> "RFMatrix":
        return RFMatrix(
            [[e.subst(name, value) for e in row] for row in self.entries], self.legs
        )

    def is_identity(self) -> bool:
        return self == RFMatrix.identity(self.legs)


def _digits(index: int, legs) -> tuple:
    out = []
    for d in reversed(legs):
        out.append(index % d)
        index //= d
    return tuple(reversed(out))


def _index(digits, legs) -> int:
    i = 0
    for x, d in zip(digits, legs):
        i = i * d + x
    return i


def embed(op: RFMatrix, positions: Sequence[int], legs: Sequence[int]) -> RFMatrix:
    """Place op on the given legs of a larger tensor space, identity elsewhere."""
    legs = tuple(legs)
    positions = tuple(positions)
    if len(positions) != len(op.legs) or len(set(positions)) != len(positions):
        raise ValueError("positions must match the operator legs")
    if any(legs[p] != d for p, d in zip(positions, op.legs)):
        raise ValueError("leg dimensions do not match")
    n = prod(legs)
    zero = RatFunc.zero()
    out = [[zero] * n for _ in range(n)]
    for i in range(n):
        di = _digits(i, legs)
        ri = _index([di[p] for p in positions], op.legs)
        row = out[i]
        for j in range(n):
            dj = _digits(j, legs)
            if any(di[k] != dj[k] for k in range(len(legs)) if k not in positions):
                continue
            row[j] = op.entries[ri][_index([dj[p] for p in positions], op.legs)]
    return RFMatrix(out, legs)


def swap_matrix(d: int = 2) -> RFMatrix:
    one, zero = RatFunc.one(), RatFunc.zero()
    n = d * d
    out = [[zero] * n for _ in range(n)]
    for i in range(d):
        for j in range(d):
            out[i * d + j][j * d + i] = one
    return RFMatrix(out, (d, d))


def k_example(arg="a") -> RFMatrix:
    """The 2x2 rank-one boundary matrix (1 - (hbar/a)X)/(1 - hbar/a), X the flip."""
    a = _expr(arg)
    h = sym(HBAR)
    den = a - h
    diag, off = RatFunc(a, den), RatFunc(-h, den)
    return RFMatrix([[diag, off], [off, diag]], (2,))


def k_involution(arg="a") -> RFMatrix:
    """The companion boundary matrix (hbar + a*X)/(hbar + a), X the flip.

    It puts the spectral parameter on the involution instead of on the
    identity.  Unlike k_example it solves the reflection equation in the
    orientation preserved by R-sandwiching, so it is the boundary input for
    which the doubled (sandwich) reflection equation closes.
    """
    a = _expr(arg)
    h = sym(HBAR)
    den = h + a
    diag, off = RatFunc(h, den), RatFunc(a, den)
    return RFMatrix([[diag, off], [off, diag]], (2,))


def yang_r(arg="u", leg_dims=(2, 2)) -> RFMatrix:
    """(1 - (hbar/u)P)/(1 - hbar/u) with P the leg swap; unitary, and I at hbar=0."""
    d1, d2 = leg_dims
    if d1 != d2:
        raise ValueError("the swap needs equal leg dimensions")
    u = _expr(arg)
    h = sym(HBAR)
    den = u - h
    n = d1 * d2
    zero = RatFunc.zero()
    out = [[zero] * n for _ in range(n)]
    for i in range(d1):
        for j in range(d2):
            row = out[i * d2 + j]
            num = {(i * d2 + j): u}
            flip = j * d2 + i
            num[flip] = num.get(flip, Poly()) - h
            for col, p in num.items():
                row[col] = RatFunc(p, den)
    return RFMatrix(out, (d1, d2))


def check_unitarity(m: RFMatrix, m_neg: RFMatrix) -> bool:
    return (m @ m_neg).is_identity()


def check_yang_baxter(r_maker: Callable = yang_r, u="u", v="v", w="w") -> bool:
    """R12(u-v) R13(u-w) R23(v-w) = R23 R13 R12 on three legs."""
    u, v, w = _expr(u), _expr(v), _expr(w)
    sample = r_maker(u - v)
    d = sample.legs[0]
    legs = (d, d, d)
    r12 = embed(sample, (0, 1), legs)
    r13 = embed(r_maker(u - w), (0, 2), legs)
    r23 = embed(r_maker(v - w), (1, 2), legs)
    return r12 @ r13 @ r23 == r23 @ r13 @ r12


def check_reflection_equation(k1: RFMatrix, k2: RFMatrix, r: Callable, a1="a1", a2="a2") -> bool:
    """K2(a2) R(a1+a2) K1(a1) R(a2-a1) = R(a2-a1) K1(a1) R(a1+a2) K2(a2).

    Orientation convention: the difference-argument factor is evaluated at
    a2 - a1.  With the flip-type R of this module that is the orientation
    solved by k_example (boundary matrices carrying the parameter on the
    identity component); matrices of the complementary family such as
    k_involution solve the equation with the difference negated instead.
    """
    a1, a2 = _expr(a1), _expr(a2)
    legs = k1.legs + k2.legs
    if len(legs) != 2:
        raise ValueError("boundary matrices must be single-leg")
    big_k1 = embed(k1, (0,), legs)
    big_k2 = embed(k2, (1,), legs)
    r_plus = r(a1 + a2)
    r_minus = r(a2 - a1)
    if r_plus.legs != legs:
        raise ValueError("leg dimensions do not match")
    lhs = big_k2 @ r_plus @ big_k1 @ r_minus
    rhs = r_minus @ big_k1 @ r_plus @ big_k2
    return lhs == rhs


def check_reflection_sandwich(k1: RFMatrix, k2: RFMatrix, r: Callable, a1="a1", a2="a2") -> bool:
    """R(a1-a2) K1(a1) R(a1+a2) K2(a2) = K2(a2) R(a1+a2) K1(a1) R(a1-a2).

    The mirror orientation of check_reflection_equation: the difference
    factor is evaluated at a1 - a2, with leg 1 conjugated innermost.  This
    is the orientation stable under R-sandwich dressing, solved by
    k_involution (and by constants commuting with R).
    """
    a1, a2 = _expr(a1), _expr(a2)
    legs = k1.legs + k2.legs
    if len(legs) != 2:
        raise ValueError("boundary matrices must be single-leg")
    big_k1 = embed(k1, (0,), legs)
    big_k2 = embed(k2, (1,), legs)
    r_plus = r(a1 + a2)
    r_minus = r(a1 - a2)
    if r_plus.legs != legs:
        raise ValueError("leg dimensions do not match")
    lhs = r_minus @ big_k1 @ r_plus @ big_k2
    rhs = big_k2 @ r_plus @ big_k1 @ r_minus
    return lhs == rhs


def fusion(k1: RFMatrix, k2: RFMatrix, r: Callable, a1="a1", a2="a2") -> RFMatrix:
    """Fused two-leg boundary matrix R(a1-a2) K2 R(a1+a2) K1 = K1 R(a1+a2) K2 R(a1-a2).

    The two factorizations agree exactly when the inputs satisfy
    check_reflection_equation (multiply that identity by R(a1-a2) on
    convenient sides); a ValueError is raised if they disagree.
    """
    a1, a2 = _expr(a1), _expr(a2)
    legs = k1.legs + k2.legs
    big_k1 = embed(k1, (0,), legs)
    big_k2 = embed(k2, (1,), legs)
    r_plus = r(a1 + a2)
    r_back = r(a1 - a2)
    if r_plus.legs != legs:
        raise ValueError("leg dimensions do not match")
    first = r_back @ big_k2 @ r_plus @ big_k1
    second = big_k1 @ r_plus @ big_k2 @ r_back
    if first != second:
        raise ValueError("fusion factorizations disagree (reflection equation fails)")
    return first


def s_operator(k0: RFMatrix, r_list: Sequence[Callable], a0="a0", spectators=None) -> RFMatrix:
    """Dressed boundary operator over one boundary leg and m spectator legs.

    Builds R0m(a0+am) ... R01(a0+a1) K0(a0) R01(a0-a1) ... R0m(a0-am): the
    incoming chain carries the difference arguments, the return chain the
    sums.  That argument split is what keeps the dressed operator a solution
    of the reflection equation on the boundary leg (sum-sum or
    difference-difference dressing does not).  spectators defaults to the
    symbols a1, ..., am; m = 0 returns K0 itself.
    """
    a0 = _expr(a0)
    m = len(r_list)
    if spectators is None:
        spectators = tuple(sym(f"a{i + 1}") for i in range(m))
    spectators = tuple(_expr(s) for s in spectators)
    if len(spectators) != m:
        raise ValueError("need one spectator parameter per R factor")
    if len(k0.legs) != 1:
        raise ValueError("boundary matrix must be single-leg")
    going = [r(a0 - s) for r, s in zip(r_list, spectators)]
    coming = [r(a0 + s) for r, s in zip(r_list, spectators)]
    for rm in going + coming:
        if rm.legs[0] != k0.legs[0]:
            raise ValueError("leg dimensions do not match")
    legs = k0.legs + tuple(rm.legs[1] for rm in going)
    out = embed(k0, (0,), legs)
    for i, rm in enumerate(coming):
        out = embed(rm, (0, i + 1), legs) @ out
    for i, rm in enumerate(going):
        out = out @ embed(rm, (0, i + 1), legs)
    return out


def check_s_reflection(k_maker: Callable = k_involution, r_maker: Callable = yang_r,
                       m: int = 1, u="u", v="v", spectators=None) -> bool:
    """Doubled reflection equation for two dressed boundary operators.

    S(u) and S(v) act on their own boundary legs but share the m spectator
    legs; the check is R01(u-v) S0(u) R01(u+v) S1(v) = S1(v) R01(u+v) S0(u)
    R01(u-v) on the (m+2)-fold tensor space.  Exact for k_involution with
    generic symbolic spectators; k_example-type boundary matrices do not
    close this identity in any argument convention, so the default boundary
    input is k_involution.
    """
    u, v = _expr(u), _expr(v)
    if spectators is None:
        spectators = tuple(sym(f"a{i + 1}") for i in range(m))
    spectators = tuple(_expr(s) for s in spectators)
    if len(spectators) != m:
        raise ValueError("need one spectator parameter per R factor")
    k_u, k_v = k_maker(u), k_maker(v)
    d = k_u.legs[0]
    legs = (d, d) + tuple(r_maker(u - s).legs[1] for s in spectators)

    def widen(mat, boundary_pos):
        spots = (boundary_pos,) + tuple(range(2, 2 + m))
        return embed(mat, spots, legs)

    s0 = widen(s_operator(k_u, [r_maker] * m, u, spectators), 0)
    s1 = widen(s_operator(k_v, [r_maker] * m, v, spectators), 1)
    r_diff = embed(r_maker(u - v), (0, 1), legs)
    r_sum = embed(r_maker(u + v), (0, 1), legs)
    return r_diff @ s0 @ r_sum @ s1 == s1 @ r_sum @ s0 @ r_diff

"""Finite-precision arithmetic in Q_p and supported finite extensions.

An element is stored as pi^shift * unit, where pi is the uniformizer and the
unit part lives on an integral basis of the ring of integers:

* base field / unramified: coefficients of 1, g, ..., g^(f-1) with g the
  residue generator, each an integer modulo a power of p;
* eisenstein: coefficients of 1, pi, ..., pi^(e-1), each an integer modulo
  a power of p, with pi^e = c*p.

Absolute precision N means the value is known modulo pi^N.  Valuations are
rationals normalised so that v(p) = 1; the value group is (1/e)*Z.  All
values are immutable and all operations are pure functions.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .errors import (
    DivisionByImpreciseZero,
    FieldMismatch,
    InsufficientPrecision,
    NonUnitEisensteinConstant,
    NotPrime,
    ReducibleDefiningPolynomial,
    ZeroElement,
)

Rational = Union[int, Fraction]


# ---------------------------------------------------------------------------
# field descriptors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FieldDescriptor:
    """Q_p or a single-layer finite extension with its ramification data."""

    p: int
    kind: str                    # "base" | "eisenstein" | "unramified"
    e: int = 1                   # ramification index, v(pi) = 1/e
    f: int = 1                   # residue degree
    eis_unit: int = 1            # c with pi^e = c*p (eisenstein only)
    residue_poly: tuple[int, ...] = ()   # monic integer poly, low -> high

    @property
    def coeff_len(self) -> int:
        return self.e if self.kind == "eisenstein" else self.f

    def pi_valuation(self) -> Fraction:
        return Fraction(1, self.e)

    def __str__(self) -> str:
        if self.kind == "base":
            return f"Q_{self.p}"
        if self.kind == "eisenstein":
            return f"Q_{self.p}[pi]/(pi^{self.e} - ({self.eis_unit})*{self.p})"
        terms = _poly_str(self.residue_poly)
        return f"Q_{self.p}[g]/({terms})"


def _poly_str(coeffs: Sequence[int]) -> str:
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        elif i == 1:
            parts.append(f"{c}*g" if c != 1 else "g")
        else:
            parts.append(f"{c}*g^{i}" if c != 1 else f"g^{i}")
    return " + ".join(reversed(parts)) if parts else "0"


def _is_prime(n: int) -> bool:
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


def _poly_divmod_mod_p(num: list[int], den: list[int], p: int):
    """Division of polynomials over F_p; den must be monic mod p."""
    num = [x % p for x in num]
    den = [x % p for x in den]
    while den and den[-1] == 0:
        den.pop()
    d = len(den) - 1
    quot = [0] * max(0, len(num) - d)
    rem = list(num)
    for i in range(len(rem) - 1, d - 1, -1):
        c = rem[i] % p
        if c == 0:
            continue
        quot[i - d] = c
        for j in range(d + 1):
            rem[i - d + j] = (rem[i - d + j] - c * den[j]) % p
    while rem and rem[-1] == 0:
        rem.pop()
    return quot, rem


def _irreducible_mod_p(coeffs: Sequence[int], p: int) -> bool:
    """Brute-force factor search over F_p; intended for degree <= 8."""
    f = len(coeffs) - 1
    reduced = [c % p for c in coeffs]
    if reduced[-1] != 1:
        return False
    for deg in range(1, f // 2 + 1):
        for tail in itertools.product(range(p), repeat=deg):
            divisor = list(tail) + [1]
            _, rem = _poly_divmod_mod_p(reduced, divisor, p)
            if not rem:
                return False
    return f >= 1


def _find_unramified_poly(p: int, f: int) -> tuple[int, ...]:
    """Smallest (lexicographic in low coefficients) monic irreducible of degree f."""
    for tail in itertools.product(range(p), repeat=f):
        cand = list(tail) + [1]
        if _irreducible_mod_p(cand, p):
            return tuple(cand)
    raise ReducibleDefiningPolynomial(f"no irreducible polynomial of degree {f} mod {p}")


def make_field(p: int, kind: str = "base", *, e: int | None = None,
               c: int | None = None, f: int | None = None,
               poly: Sequence[int] | None = None) -> FieldDescriptor:
    """Build and validate a field descriptor.

    kind="eisenstein" requires e >= 1 and a defining unit c coprime to p
    (pi^e = c*p).  kind="unramified" requires either a residue degree f
    (a defining polynomial is searched for) or an explicit monic integer
    polynomial, irreducible mod p, given low-to-high.  Irreducibility is
    checked by brute force, which limits f to at most 8.
    """
    if not _is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if kind == "base":
        return FieldDescriptor(p=p, kind="base")
    if kind == "eisenstein":
        if e is None or e < 1:
            raise ValueError("eisenstein extension needs a ramification index e >= 1")
        if c is None:
            c = 1
        if c == 0 or math.gcd(c, p) != 1:
            raise NonUnitEisensteinConstant(f"c = {c} is not a unit mod {p}")
        return FieldDescriptor(p=p, kind="eisenstein", e=e, eis_unit=c)
    if kind == "unramified":
        if poly is not None:
            coeffs = tuple(int(x) for x in poly)
            if len(coeffs) < 3 or coeffs[-1] != 1:
                raise ReducibleDefiningPolynomial(
                    "defining polynomial must be monic of degree >= 2")
            deg = len(coeffs) - 1
            if deg > 8:
                raise ValueError("brute-force irreducibility check supports degree <= 8")
            if not _irreducible_mod_p(coeffs, p):
                raise ReducibleDefiningPolynomial(
                    f"{list(coeffs)} factors modulo {p}")
            return FieldDescriptor(p=p, kind="unramified", f=deg, residue_poly=coeffs)
        if f is None or f < 2:
            raise ValueError("unramified extension needs f >= 2 or an explicit polynomial")
        if f > 8:
            raise ValueError("brute-force irreducibility check supports degree <= 8")
        coeffs = _find_unramified_poly(p, f)
        return FieldDescriptor(p=p, kind="unramified", f=f, residue_poly=coeffs)
    raise ValueError(f"unknown field kind {kind!r}")


# ---------------------------------------------------------------------------
# valuation results and leading-term classes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ValuationResult:
    """Exact valuation, or a lower bound when every known digit vanishes."""

    tag: str            # "exact" | "at_least"
    value: Fraction

    @property
    def is_exact(self) -> bool:
        return self.tag == "exact"

    def at_least(self, bound: Rational) -> bool:
        """True when the (possibly bounded) valuation is certainly >= bound."""
        return self.value >= bound

    def exceeds(self, bound: Rational) -> bool:
        """True when the valuation is certainly > bound."""
        if self.tag == "exact":
            return self.value > bound
        return self.value > bound        # true value >= self.value

    def __str__(self) -> str:
        prefix = "" if self.tag == "exact" else ">="
        return f"{prefix}{self.value}"


@dataclass(frozen=True)
class RVClass:
    """Leading-term data: valuation plus unit digits to depth ceil(lambda*e)."""

    valuation: Fraction
    leading_digits: tuple
    lam: Fraction


# ---------------------------------------------------------------------------
# coefficient-vector helpers (private)
# ---------------------------------------------------------------------------

def _vp(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("vp(0) undefined")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _moduli(field: FieldDescriptor, rel_prec: int) -> list[int]:
    """p-power exponents bounding each stored coefficient of a unit part
    known modulo pi^rel_prec."""
    if field.kind == "eisenstein":
        return [max(0, _ceil_div(rel_prec - i, field.e)) for i in range(field.e)]
    return [max(0, rel_prec)] * field.f


def _reduce_vec(field: FieldDescriptor, vec: Sequence[int], rel_prec: int) -> tuple[int, ...]:
    p = field.p
    return tuple(v % (p ** k) if k > 0 else 0
                 for v, k in zip(vec, _moduli(field, rel_prec)))


def _vec_val(field: FieldDescriptor, vec: Sequence[int]) -> Optional[int]:
    """pi-adic valuation of a canonically reduced vector, None if zero."""
    p = field.p
    best: Optional[int] = None
    if field.kind == "eisenstein":
        for i, a in enumerate(vec):
            if a:
                cand = field.e * _vp(a, p) + i
                if best is None or cand < best:
                    best = cand
    else:
        for b in vec:
            if b:
                cand = _vp(b, p)
                if best is None or cand < best:
                    best = cand
    return best


def _mul_pi(field: FieldDescriptor, vec: Sequence[int]) -> list[int]:
    if field.kind == "eisenstein":
        if field.e == 1:
            return [vec[0] * field.eis_unit * field.p]
        return [vec[-1] * field.eis_unit * field.p] + list(vec[:-1])
    return [v * field.p for v in vec]


def _div_pi(field: FieldDescriptor, vec: Sequence[int], work_bits: int) -> list[int]:
    """Exact division by the uniformizer; valuation of vec must be >= 1."""
    p = field.p
    if field.kind == "eisenstein":
        mod = p ** max(1, work_bits)
        cinv = pow(field.eis_unit, -1, mod)
        head = (vec[0] // p) * cinv
        if field.e == 1:
            return [head]
        return list(vec[1:]) + [head]
    return [v // p for v in vec]


def _vec_mul(field: FieldDescriptor, a: Sequence[int], b: Sequence[int]) -> list[int]:
    n = field.coeff_len
    if n == 1:
        return [a[0] * b[0]]
    conv = [0] * (2 * n - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                conv[i + j] += x * y
    if field.kind == "eisenstein":
        cp = field.eis_unit * field.p
        for idx in range(2 * n - 2, n - 1, -1):
            if conv[idx]:
                conv[idx - n] += conv[idx] * cp
                conv[idx] = 0
        return conv[:n]
    # unramified: reduce by the monic defining polynomial
    poly = field.residue_poly
    for idx in range(2 * n - 2, n - 1, -1):
        cval = conv[idx]
        if cval == 0:
            continue
        conv[idx] = 0
        for j in range(n):
            conv[idx - n + j] -= cval * poly[j]
    return conv[:n]


def _residue_inverse(field: FieldDescriptor, vec: Sequence[int]) -> list[int]:
    """Inverse of the residue of a unit vector in the residue field."""
    p = field.p
    if field.kind != "unramified":
        a0 = vec[0] % p
        return [pow(a0, -1, p)] + [0] * (field.coeff_len - 1)
    # extended euclid in F_p[x] modulo the defining polynomial
    r0 = [c % p for c in field.residue_poly]
    r1 = [v % p for v in vec]
    while r1 and r1[-1] == 0:
        r1.pop()
    s0, s1 = [0], [1]

    def poly_sub_scaled(u, v, c, shift):
        out = list(u) + [0] * max(0, len(v) + shift - len(u))
        for i, x in enumerate(v):
            out[i + shift] = (out[i + shift] - c * x) % p
        while out and out[-1] == 0:
            out.pop()
        return out

    while r1:
        # divide r0 by r1
        q_shifted = []
        r = list(r0)
        inv_lead = pow(r1[-1], -1, p)
        while len(r) >= len(r1) and r:
            c = (r[-1] * inv_lead) % p
            shift = len(r) - len(r1)
            q_shifted.append((c, shift))
            r = poly_sub_scaled(r, r1, c, shift)
        new_s = list(s0)
        for c, shift in q_shifted:
            new_s = poly_sub_scaled(new_s, s1, c, shift)
        r0, r1 = r1, r
        s0, s1 = s1, new_s
    # r0 is now a nonzero constant gcd
    scale = pow(r0[0], -1, p)
    inv = [(scale * x) % p for x in s0]
    inv += [0] * (field.f - len(inv))
    return inv[: field.f]


def _vec_invert(field: FieldDescriptor, vec: Sequence[int], rel_prec: int) -> tuple[int, ...]:
    """Newton iteration z <- z(2 - u z), doubling correct digits per step."""
    z = _residue_inverse(field, vec)
    two = [2] + [0] * (field.coeff_len - 1)
    correct = 1
    guard = 0
    while correct < rel_prec:
        t = [a - b for a, b in zip(two, _vec_mul(field, vec, z))]
        z = list(_reduce_vec(field, _vec_mul(field, z, t), rel_prec))
        correct *= 2
        guard += 1
        if guard > 64:
            raise InsufficientPrecision("inversion failed to converge")
    return _reduce_vec(field, z, rel_prec)


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PadicElement:
    """A field element known modulo pi^abs_prec.

    For a nonzero element ``coeffs`` is the canonically reduced unit part and
    the valuation equals shift/e exactly.  An element whose known digits all
    vanish is stored with empty ``coeffs`` and shift == abs_prec; it stands
    for "zero modulo pi^abs_prec" and its valuation is only bounded below.
    """

    field: FieldDescriptor
    shift: int
    coeffs: tuple[int, ...]
    abs_prec: int

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(field: FieldDescriptor, prec: int) -> "PadicElement":
        return PadicElement(field, prec, (), prec)

    @staticmethod
    def from_rational(field: FieldDescriptor, value: Rational, prec: int) -> "PadicElement":
        value = Fraction(value)
        if value == 0:
            return PadicElement.zero(field, prec)
        num, den = value.numerator, value.denominator
        p = field.p
        w = _vp(num, p) - _vp(den, p)
        num //= p ** _vp(num, p)
        den //= p ** _vp(den, p)
        shift = w * field.e
        rel = prec - shift
        if rel <= 0:
            return PadicElement.zero(field, prec)
        kmax = max(_moduli(field, rel))
        mod = p ** kmax
        unit = (num * pow(den, -1, mod)) % mod
        if field.kind == "eisenstein" and w:
            # p^w = pi^(e*w) * c^(-w)
            unit = (unit * pow(field.eis_unit, -w, mod)) % mod
        vec = [unit] + [0] * (field.coeff_len - 1)
        return PadicElement(field, shift, _reduce_vec(field, vec, rel), prec)

    @staticmethod
    def one(field: FieldDescriptor, prec: int) -> "PadicElement":
        return PadicElement.from_rational(field, 1, prec)

    @staticmethod
    def from_int(field: FieldDescriptor, value: int, prec: int) -> "PadicElement":
        return PadicElement.from_rational(field, Fraction(value), prec)

    @staticmethod
    def uniformizer(field: FieldDescriptor, prec: int, power: int = 1) -> "PadicElement":
        base = _make(field, 1, [1] + [0] * (field.coeff_len - 1), prec)
        if power == 1:
            return base
        if base.is_zero:
            return PadicElement.zero(field, prec)
        return base ** power

    @staticmethod
    def from_pi_digits(field: FieldDescriptor, shift: int, digits: Sequence, prec: int) -> "PadicElement":
        """Assemble pi^shift * sum(digits[t] * pi^t) with residue digits."""
        p = field.p
        n = field.coeff_len
        vec = [0] * n
        if field.kind == "eisenstein":
            cp = field.eis_unit * field.p
            for t, d in enumerate(digits):
                vec[t % field.e] += int(d) * cp ** (t // field.e)
        else:
            for t, d in enumerate(digits):
                tup = (d,) if isinstance(d, int) else tuple(d)
                for j, c in enumerate(tup):
                    vec[j] += int(c) * p ** t
        return _make(field, shift, vec, prec)

    # -- state --------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        """True when no nonzero digit is known (zero modulo pi^abs_prec)."""
        return not self.coeffs

    @property
    def rel_prec(self) -> int:
        return self.abs_prec - self.shift

    def valuation(self) -> ValuationResult:
        if self.is_zero:
            return ValuationResult("at_least", Fraction(self.abs_prec, self.field.e))
        return ValuationResult("exact", Fraction(self.shift, self.field.e))

    def valuation_pi(self) -> int:
        """Exact shift in pi-units; raises on an imprecise zero."""
        if self.is_zero:
            raise ZeroElement("valuation known only as a lower bound")
        return self.shift

    # -- arithmetic ----------------------------------------------------------

    def _check_same_field(self, other: "PadicElement") -> None:
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other):
        other = _coerce(self, other)
        if other is NotImplemented:
            return NotImplemented
        self._check_same_field(other)
        prec = min(self.abs_prec, other.abs_prec)
        if self.is_zero:
            return other.truncate(prec)
        if other.is_zero:
            return self.truncate(prec)
        s = min(self.shift, other.shift)
        va = list(self.coeffs)
        for _ in range(self.shift - s):
            va = _mul_pi(self.field, va)
        vb = list(other.coeffs)
        for _ in range(other.shift - s):
            vb = _mul_pi(self.field, vb)
        vec = [x + y for x, y in zip(va, vb)]
        return _make(self.field, s, vec, prec)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        if self.is_zero:
            return self
        return PadicElement(self.field, self.shift,
                            _reduce_vec(self.field, [-c for c in self.coeffs], self.rel_prec),
                            self.abs_prec)

    def __sub__(self, other):
        other = _coerce(self, other)
        if other is NotImplemented:
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scale_rational(Fraction(other))
        if not isinstance(other, PadicElement):
            return NotImplemented
        self._check_same_field(other)
        prec = min(self.abs_prec + other.shift, other.abs_prec + self.shift)
        if self.is_zero or other.is_zero:
            return PadicElement.zero(self.field, prec)
        vec = _vec_mul(self.field, self.coeffs, other.coeffs)
        return _make(self.field, self.shift + other.shift, vec, prec)

    def __rmul__(self, other):
        return self.__mul__(other)

    def _scale_rational(self, value: Fraction) -> "PadicElement":
        """Exact multiplication by a rational scalar; relative precision kept."""
        if value == 0:
            return PadicElement.zero(self.field, self.abs_prec)
        if self.is_zero:
            w = _vp(value.numerator, self.field.p) - _vp(value.denominator, self.field.p)
            return PadicElement.zero(self.field, self.abs_prec + w * self.field.e)
        p = self.field.p
        num, den = value.numerator, value.denominator
        w = _vp(num, p) - _vp(den, p)
        num //= p ** _vp(num, p)
        den //= p ** _vp(den, p)
        rel = self.rel_prec
        mod = p ** max(_moduli(self.field, rel))
        unit = (num * pow(den, -1, mod)) % mod
        if self.field.kind == "eisenstein" and w:
            unit = (unit * pow(self.field.eis_unit, -w, mod)) % mod
        vec = [unit * c for c in self.coeffs]
        return PadicElement(self.field, self.shift + w * self.field.e,
                            _reduce_vec(self.field, vec, rel),
                            self.abs_prec + w * self.field.e)

    def invert(self) -> "PadicElement":
        if self.is_zero:
            raise DivisionByImpreciseZero("no known nonzero digit in the divisor")
        vec = _vec_invert(self.field, self.coeffs, self.rel_prec)
        return PadicElement(self.field, -self.shift, vec, self.rel_prec - self.shift)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scale_rational(Fraction(1, 1) / Fraction(other))
        if not isinstance(other, PadicElement):
            return NotImplemented
        return self.__mul__(other.invert())

    def __rtruediv__(self, other):
        return self.invert().__mul__(_coerce(self, other))

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n == 0:
            if self.is_zero:
                return PadicElement.one(self.field, self.abs_prec)
            return PadicElement.one(self.field, self.rel_prec)
        if n < 0:
            return self.invert() ** (-n)
        result = None
        base = self
        k = n
        while k:
            if k & 1:
                result = base if result is None else result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- precision management -------------------------------------------------

    def truncate(self, prec: int) -> "PadicElement":
        """Forget digits beyond pi^prec."""
        if prec >= self.abs_prec:
            return self
        if self.is_zero or prec <= self.shift:
            return PadicElement.zero(self.field, prec)
        return PadicElement(self.field, self.shift,
                            _reduce_vec(self.field, self.coeffs, prec - self.shift),
                            prec)

    def is_indistinguishable(self, other: "PadicElement") -> bool:
        """True when self - other vanishes at the shared precision."""
        return (self - other).is_zero

    # -- digits and display ----------------------------------------------------

    def pi_digits(self, count: int):
        """First ``count`` pi-adic digits of the unit part.

        Digits are integers in [0, p) for residue degree 1, and tuples of f
        such integers (coordinates on the residue basis) otherwise.
        """
        if self.is_zero:
            raise ZeroElement("imprecise zero has no unit digits")
        if count > self.rel_prec:
            raise InsufficientPrecision(
                f"{count} digits requested, {self.rel_prec} known")
        p = self.field.p
        out = []
        if self.field.kind != "eisenstein":
            vec = list(self.coeffs)
            for _ in range(count):
                digit = tuple(v % p for v in vec)
                out.append(digit[0] if self.field.f == 1 else digit)
                vec = [(v - v % p) // p for v in vec]
            return out
        work = max(_moduli(self.field, self.rel_prec)) + 1
        vec = list(self.coeffs)
        for _ in range(count):
            d = vec[0] % p
            out.append(d)
            vec[0] -= d
            vec = _div_pi(self.field, vec, work)
        return out

    def __str__(self) -> str:
        if self.is_zero:
            return f"O(pi^{self.abs_prec})"
        digits = self.pi_digits(self.rel_prec)
        parts = []
        for t, d in enumerate(digits):
            k = self.shift + t
            if isinstance(d, tuple):
                if all(x == 0 for x in d):
                    continue
                body = _poly_str(d)
                coeff = f"({body})"
                plain_one = body == "1"
            else:
                if d == 0:
                    continue
                coeff = str(d)
                plain_one = d == 1
            if k == 0:
                parts.append(coeff)
            else:
                power = "pi" if k == 1 else f"pi^{k}"
                parts.append(power if plain_one else f"{coeff}*{power}")
        if not parts:
            parts = ["0"]
        return " + ".join(parts) + f" + O(pi^{self.abs_prec})"

    def __repr__(self) -> str:
        return f"<{self} over {self.field}>"


def _coerce(template: PadicElement, value) -> PadicElement:
    if isinstance(value, PadicElement):
        return value
    if isinstance(value, (int, Fraction)):
        return PadicElement.from_rational(template.field, Fraction(value),
                                          template.abs_prec + abs(template.shift) + 8)
    return NotImplemented


def _make(field: FieldDescriptor, shift: int, vec: Sequence[int], prec: int) -> PadicElement:
    """Normalise a raw coefficient vector at the given shift into an element."""
    rel = prec - shift
    if rel <= 0:
        return PadicElement.zero(field, prec)
    reduced = _reduce_vec(field, vec, rel)
    val = _vec_val(field, reduced)
    if val is None or val >= rel:
        return PadicElement.zero(field, prec)
    if val:
        work = max(_moduli(field, rel)) + 1
        out = list(reduced)
        for _ in range(val):
            out = _div_pi(field, out, work)
        reduced = _reduce_vec(field, out, rel - val)
        shift += val
        rel -= val
    return PadicElement(field, shift, reduced, prec)


# ---------------------------------------------------------------------------
# named operation wrappers
# ---------------------------------------------------------------------------

def arithmetic(op: str, a: PadicElement, b: PadicElement) -> PadicElement:
    """Dispatch one of add/sub/mul/div with the documented precision rules."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def invert(a: PadicElement) -> PadicElement:
    return a.invert()


def valuation(a: PadicElement) -> ValuationResult:
    return a.valuation()


def rv_class(a: PadicElement, lam: Rational) -> RVClass:
    """Leading-term class of a at scaling lambda.

    Two elements share a class iff v(x - y) > v(x) + lambda.  lambda must be
    a non-negative element of the value group (1/e)Z.
    """
    lam = Fraction(lam)
    if lam < 0:
        raise ValueError("lambda must be >= 0")
    depth = lam * a.field.e
    if depth.denominator != 1:
        raise ValueError(f"lambda {lam} is not in the value group (1/{a.field.e})Z")
    if a.is_zero:
        raise ZeroElement("rv undefined on an imprecise zero")
    count = int(depth) + 1
    if count > a.rel_prec:
        raise InsufficientPrecision(
            f"need {count} unit digits, have {a.rel_prec}")
    digits = tuple(a.pi_digits(count))
    return RVClass(valuation=Fraction(a.shift, a.field.e),
                   leading_digits=digits, lam=lam)

"""Exact-rational reference computations, independent of the library paths.

Everything here works in plain Fractions / integers and is reduced into the
p-adic representation only at the final comparison step.
"""

from fractions import Fraction

from padic_tate.field import PadicElement


def vp_int(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def legendre_sum(n: int, p: int) -> int:
    total = 0
    power = p
    while power <= n:
        total += n // power
        power *= p
    return total


def from_fraction(field, value: Fraction, prec: int) -> PadicElement:
    """Independent constructor: digits peeled off with integer arithmetic."""
    value = Fraction(value)
    if value == 0:
        return PadicElement.zero(field, prec)
    assert field.kind == "base", "oracle constructor only covers the base field"
    p = field.p
    num, den = value.numerator, value.denominator
    shift = vp_int(num, p) - vp_int(den, p)
    num //= p ** vp_int(num, p)
    den //= p ** vp_int(den, p)
    digits = []
    work = num % p ** (prec - shift) * pow(den, -1, p ** max(1, prec - shift))
    work %= p ** max(1, prec - shift)
    for _ in range(max(0, prec - shift)):
        digits.append(work % p)
        work //= p
    return PadicElement.from_pi_digits(field, shift, digits, prec)


def exp_partial_sum(x: Fraction, terms: int) -> Fraction:
    acc = Fraction(0)
    fact = 1
    for n in range(terms + 1):
        if n:
            fact *= n
        acc += Fraction(x) ** n / fact
    return acc


def log_partial_sum(t: Fraction, terms: int) -> Fraction:
    acc = Fraction(0)
    for n in range(1, terms + 1):
        acc += Fraction((-1) ** (n + 1), n) * Fraction(t) ** n
    return acc


def s_k_partial_sum(q: Fraction, k: int, terms: int) -> Fraction:
    return sum(Fraction(n ** k) * Fraction(q) ** n / (1 - Fraction(q) ** n)
               for n in range(1, terms + 1))


def tate_xy(q: Fraction, u: Fraction, dmax: int) -> tuple[Fraction, Fraction]:
    q, u = Fraction(q), Fraction(u)
    X = u / (1 - u) ** 2
    Y = u * u / (1 - u) ** 3
    for d in range(1, dmax + 1):
        x_inner = Fraction(0)
        y_inner = Fraction(0)
        for m in range(1, d + 1):
            if d % m:
                continue
            um = u ** m
            uim = u ** (-m)
            x_inner += m * (um + uim - 2)
            y_inner += Fraction((m - 1) * m, 2) * um - Fraction(m * (m + 1), 2) * uim + m
        X += x_inner * q ** d
        Y += y_inner * q ** d
    return X, Y


def j_from_q_expansion(q: Fraction, terms: int) -> Fraction:
    s3 = s_k_partial_sum(q, 3, terms)
    s5 = s_k_partial_sum(q, 5, terms)
    a4 = -5 * s3
    a6 = -(5 * s3 + 7 * s5) / 12
    b4, b6, b8 = 2 * a4, 4 * a6, a6 - a4 * a4
    c4 = 1 - 48 * a4
    delta = -b8 - 8 * b4 ** 3 - 27 * b6 ** 2 + 9 * b4 * b6
    return c4 ** 3 / delta


def rank_over_Q(rows) -> int:
    """Plain Gaussian elimination over Fractions."""
    mat = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        sel = None
        for i in range(rank, len(mat)):
            if mat[i][col]:
                sel = i
                break
        if sel is None:
            continue
        mat[rank], mat[sel] = mat[sel], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [x * inv for x in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][col]:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
    return rank

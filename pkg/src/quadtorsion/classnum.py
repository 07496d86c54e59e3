"""Class numbers from binary quadratic forms, and the biquadratic relation."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import InvalidInput, UnsupportedCase
from .quadring import is_squarefree


@dataclass(frozen=True)
class FormClassCount:
    discriminant: int
    h: int
    method: str  # DefiniteReduction | IndefiniteCycles


def is_fundamental_discriminant(D: int) -> bool:
    if D in (0, 1):
        return False
    if D % 4 == 1:
        return is_squarefree(D)
    if D % 4 == 0:
        q = D // 4
        return q % 4 in (2, 3) and is_squarefree(q)
    return False


def reduced_definite_forms(D: int) -> list[tuple[int, int, int]]:
    """Primitive reduced positive definite forms (a, b, c) of discriminant D < 0."""
    forms = []
    a = 1
    while 3 * a * a <= -D:
        for b in range(-a + 1, a + 1):
            if (b * b - D) % (4 * a):
                continue
            c = (b * b - D) // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            if gcd(gcd(a, b), c) == 1:
                forms.append((a, b, c))
        a += 1
    return forms


def _rho(form, D):
    a, b, c = form
    s = isqrt(D)
    # b' = -b mod 2c, with sqrt(D) - 2|c| < b' < sqrt(D)
    m = 2 * abs(c)
    bp = (-b) % m
    # shift into (s - m, s]; sqrt(D) irrational so the bound on s is safe
    bp += ((s - bp) // m) * m
    return (c, bp, (bp * bp - D) // (4 * c))


def reduced_indefinite_forms(D: int) -> list[tuple[int, int, int]]:
    """Primitive reduced indefinite forms: 0 < b < sqrt D, sqrt D - b < 2|a| < sqrt D + b."""
    s = isqrt(D)
    out = []
    for b in range(1, s + 1):
        if (b - D) % 2:
            continue
        num = (b * b - D) // 4  # = a*c < 0
        for absa in range(1, -num + 1):
            # sqrt(D) - b < 2|a| < sqrt(D) + b, exact since D is not a square
            lo = 2 * absa + b
            hi = 2 * absa - b
            if lo * lo <= D or (hi > 0 and hi * hi >= D):
                continue
            if num % absa:
                continue
            for a in (absa, -absa):
                c = num // a
                if gcd(gcd(a, b), c) == 1:
                    out.append((a, b, c))
    return out


def indefinite_cycles(D: int) -> list[list[tuple[int, int, int]]]:
    forms = set(reduced_indefinite_forms(D))
    cycles = []
    seen = set()
    for f in sorted(forms):
        if f in seen:
            continue
        cyc = [f]
        seen.add(f)
        g = _rho(f, D)
        while g != f:
            if g not in forms:
                raise AssertionError(f"rho left the reduced set at {g}")
            cyc.append(g)
            seen.add(g)
            g = _rho(g, D)
        cycles.append(cyc)
    return cycles


def class_number_quadratic(disc: int) -> FormClassCount:
    """Class number of the quadratic field of fundamental discriminant disc.

    For disc > 0 the cycles count proper (narrow) classes; the wide class
    number identifies the cycle of (a, b, c) with that of (-a, b, -c),
    which is the same cycle exactly when a unit of norm -1 exists.
    """
    if not is_fundamental_discriminant(disc):
        raise InvalidInput(f"{disc} is not a fundamental discriminant")
    if disc < 0:
        return FormClassCount(disc, len(reduced_definite_forms(disc)), "DefiniteReduction")
    cycles = indefinite_cycles(disc)
    index = {f: i for i, cyc in enumerate(cycles) for f in cyc}
    classes = set()
    for i, cyc in enumerate(cycles):
        a, b, c = cyc[0]
        j = index[(-a, b, -c)]
        classes.add(min(i, j))
    return FormClassCount(disc, len(classes), "IndefiniteCycles")


def narrow_class_number(disc: int) -> int:
    if disc < 0:
        return class_number_quadratic(disc).h
    return len(indefinite_cycles(disc))


def field_discriminant(d: int) -> int:
    return d if d % 4 == 1 else 4 * d


def unit_index_factor(m: int) -> Fraction:
    """u = Q/2 where Q is the Hasse unit index of Q(sqrt -m, sqrt -3)."""
    from .units import fundamental_unit_quartic

    return Fraction(fundamental_unit_quartic(m).hasse_index, 2)


def class_number_biquadratic(m: int) -> int:
    """h(Q(sqrt -m, sqrt -3)) = u * h(-m) * h(3m), u from the unit index."""
    if m <= 0 or not is_squarefree(m):
        raise InvalidInput(f"m={m} must be positive squarefree")
    if m % 3 == 0:
        raise UnsupportedCase(f"3 divides m={m}")
    h1 = class_number_quadratic(field_discriminant(-m)).h
    h2 = class_number_quadratic(field_discriminant(3 * m)).h
    h = unit_index_factor(m) * h1 * h2
    if h.denominator != 1:
        raise AssertionError(f"non-integral class number {h} for m={m}")
    return int(h)


# h(Q(zeta_l)) for small l; these fields all have class number one
# (Masley-Montgomery classification of cyclotomic fields of class number 1).
_CYCLOTOMIC_H = {3: 1, 5: 1, 7: 1, 11: 1, 13: 1, 17: 1, 19: 1}


def class_number_cyclotomic(ell: int) -> int:
    if ell not in _CYCLOTOMIC_H:
        raise UnsupportedCase(f"class number of Q(zeta_{ell}) is not tabulated")
    return _CYCLOTOMIC_H[ell]

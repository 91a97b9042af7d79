"""Shared builders for randomized test data."""

from fractions import Fraction

from purebetti import LaurentPoly, canonical_generator, parse_poly


def P(text, nvars=2):
    return parse_poly(text, nvars)


def rand_coeff(rng, allow_fraction=False):
    num = rng.choice([v for v in range(-5, 6) if v])
    if allow_fraction and rng.random() < 0.3:
        return Fraction(num, rng.randint(2, 5))
    return num


def rand_poly(rng, nvars, max_terms=6, lo=-3, hi=3, allow_fraction=True):
    """Random nonzero Laurent polynomial."""
    table = {}
    for _ in range(rng.randint(1, max_terms)):
        exp = tuple(rng.randint(lo, hi) for _ in range(nvars))
        table[exp] = table.get(exp, 0) + rand_coeff(rng, allow_fraction)
    poly = LaurentPoly(nvars, table)
    if not poly:
        poly = LaurentPoly.monomial(1, (0,) * nvars)
    return poly


def rand_hom_poly(rng, nvars, degree=None, max_terms=5, allow_fraction=False):
    """Random nonzero homogeneous Laurent polynomial."""
    if degree is None:
        degree = rng.randint(-2, 4)
    table = {}
    for _ in range(rng.randint(1, max_terms)):
        head = [rng.randint(-2, max(2, degree + 2)) for _ in range(nvars - 1)]
        exp = tuple(head + [degree - sum(head)])
        table[exp] = table.get(exp, 0) + rand_coeff(rng, allow_fraction)
    poly = LaurentPoly(nvars, table)
    if not poly:
        poly = LaurentPoly.monomial(1, (degree,) + (0,) * (nvars - 1))
    return poly


def rand_unit(rng, nvars):
    exp = tuple(rng.randint(-4, 4) for _ in range(nvars))
    return LaurentPoly.monomial(rand_coeff(rng, allow_fraction=True), exp)


def rand_member(rng, e, max_terms=5, allow_fraction=False):
    """Random nonzero multiple of the canonical generator for e."""
    gen = canonical_generator(e)
    cofactor = rand_hom_poly(rng, len(e), max_terms=max_terms,
                             allow_fraction=allow_fraction)
    return cofactor, cofactor * gen, gen

"""Built-in worked examples with known answers, runnable from the CLI.

Each fixture recomputes a documented example of the theory and checks the
result exactly. They are hermetic and deterministic; `carryideals
verify-fixtures` reports one line per fixture.
"""

from . import gl2, koszul, multmap, twovars
from .carry import (
    Context,
    carry_pattern,
    cover_edges,
    enumerate_patterns,
    max_pattern,
    monomials_with_carry_leq,
)
from .ideals import (
    MonomialIdeal,
    carry_ideal,
    decompose,
    frobenius_label,
    frobenius_power,
    ideal_from_labels,
    is_invariant,
    power,
    product,
)


def _carry_values():
    return (
        carry_pattern((4, 6), 3) == (0, 1)
        and carry_pattern((3, 3, 3), 2) == (1, 2, 1)
        and carry_pattern((7, 2), 2) == (0, 1, 1)
        and carry_pattern((62102, 0), 5) == (0, 0, 0, 0, 0, 0)
    )


def _lattice_degree_ten():
    ctx = Context(2, 2, 10)
    pats = set(enumerate_patterns(ctx))
    expected = {(0, 0, 0), (1, 0, 0), (0, 0, 1), (1, 0, 1), (1, 1, 1)}
    covers = {
        ((0, 0, 0), (1, 0, 0)),
        ((0, 0, 0), (0, 0, 1)),
        ((1, 0, 0), (1, 0, 1)),
        ((0, 0, 1), (1, 0, 1)),
        ((1, 0, 1), (1, 1, 1)),
    }
    return (
        pats == expected
        and (1, 1, 0) not in pats
        and (0, 1, 1) not in pats
        and set(cover_edges(ctx)) == covers
        and max_pattern(ctx) == (1, 1, 1)
    )


def _carry_ideal_quintic():
    ideal = carry_ideal((0, 1), 25, 2, 5)
    return set(ideal.generators) == {
        (25, 0), (20, 5), (15, 10), (10, 15), (5, 20), (0, 25)
    }


def _carry_ideal_three_vars():
    ideal = carry_ideal((2, 0), 35, 3, 5)
    partitions = {tuple(sorted(g, reverse=True)) for g in ideal.generators}
    return (
        len(partitions) == 36
        and (35, 0, 0) in partitions
        and (25, 5, 5) in partitions
        and (24, 11, 0) not in partitions
        and (22, 8, 5) not in partitions
    )


def _decomposition_roundtrip():
    ideal = MonomialIdeal(
        [(8, 0), (7, 3), (5, 4), (4, 5), (3, 7), (0, 8)], 2, 2
    )
    labels = decompose(ideal)
    return (
        labels == [((0, 0, 0), 8), ((0, 0, 1), 9), ((1, 1, 1), 10)]
        and ideal_from_labels(labels, 2, 2) == ideal
    )


def _multiplication_carries():
    b = (342, 48, 50)
    return (
        multmap.carry_after_multiply(b, 0, 7) == (1, 1, 0)
        and multmap.carry_after_multiply(b, 1, 7) == (1, 1, 1)
        and multmap.carry_after_multiply(b, 2, 7) == (2, 2, 1)
    )


def _containment_from_linear():
    return multmap.contains((), 1, (1,), 2, 2, 2)


def _segmentation_large():
    seg = twovars.segmentation((1, 1, 0, 1, 0, 0), 62102, 5)
    return seg.cut_points == (0, 3, 5) and seg.contents == (102, 21, 19)


def _factorized_generators():
    ideal, factors = twovars.generators_by_segmentation(
        (1, 1, 0, 1, 0, 0), 62102, 5
    )
    small, small_factors = twovars.generators_by_segmentation((1, 0, 1), 30, 3)
    return (
        factors == ((102, 0), (21, 3), (19, 5))
        and len(ideal.generators) == 45320
        and small_factors == ((3, 0), (3, 2))
        and len(small.generators) == 16
    )


def _betti_formula_values():
    big = twovars.betti_formula((1, 1, 0, 1, 0, 0), 62102, 5)
    small = twovars.betti_formula((1, 0, 1), 30, 3)
    return (
        big[1, 62102] == 45320
        and big[2, 62103] == 44880
        and big[2, 62125] == 420
        and big[2, 62500] == 19
        and twovars.regularity_formula((1, 1, 0, 1, 0, 0), 62102, 5) == 62498
        and small[1, 30] == 16
        and small[2, 31] == 12
        and small[2, 36] == 3
        and twovars.regularity_formula((1, 0, 1), 30, 3) == 34
    )


def _koszul_three_vars():
    ideal = carry_ideal((0,), 4, 3, 3)
    table = koszul.koszul_betti(ideal)
    expected = {
        (0, 0): 1,
        (1, 4): 9,
        (2, 5): 9,
        (2, 6): 3,
        (3, 6): 3,
        (3, 9): 1,
    }
    r, basis, weights = koszul.top_corner(ideal)
    return (
        dict(table.entries) == expected
        and r == 6
        and basis == ((2, 2, 2),)
        and weights == ((3, 3, 3),)
    )


def _character_peeling():
    factors = gl2.decompose_character(gl2.degree_character(10), 2)
    return factors == {
        (10, 0): 1, (9, 1): 1, (7, 3): 1, (6, 4): 1, (5, 5): 1
    }


def _tor_classes():
    ideal = carry_ideal((0, 0), 5, 2, 2)
    return (
        gl2.tor_class(ideal, 1, 5) == {(5, 0): 1}
        and gl2.tor_class(ideal, 2, 6) == {(5, 1): 1}
        and gl2.tor_class(ideal, 2, 8) == {(4, 4): 1}
        and gl2.decompose_character(gl2.quotient_character(ideal, 5), 2)
        == {(3, 2): 1}
    )


def _invariance_by_characteristic():
    squares2 = MonomialIdeal([(2, 0), (0, 2)], 2, 2)
    squares3 = MonomialIdeal([(2, 0), (0, 2)], 2, 3)
    # the quartic is invariant only at p=3: over F_2 the transvection sends
    # x^3 y to x^3 y + x^2 y^2 + x y^3 + y^4, and x^2 y^2 is missing
    quartic = [(4, 0), (3, 1), (1, 3), (0, 4)]
    xy2 = MonomialIdeal([(1, 1)], 2, 2)
    xy3 = MonomialIdeal([(1, 1)], 2, 3)
    return (
        is_invariant(squares2)
        and not is_invariant(squares3)
        and not is_invariant(MonomialIdeal(quartic, 2, 2))
        and is_invariant(MonomialIdeal(quartic, 2, 3))
        and not is_invariant(MonomialIdeal(quartic, 2, 5))
        and not is_invariant(xy2)
        and not is_invariant(xy3)
    )


def _products_and_powers():
    cube = power(MonomialIdeal([(1, 0, 0), (0, 1, 0), (0, 0, 1)], 3, 3), 3)
    left = carry_ideal((0,), 7, 2, 7)
    right = carry_ideal((), 3, 2, 7)
    return (
        cube == carry_ideal((1,), 3, 3, 3)
        and product(left, right) == carry_ideal((0,), 10, 2, 7)
    )


def _frobenius_shift():
    base = carry_ideal((1,), 5, 2, 5)
    label = frobenius_label((1,), 5, 1, 5)
    return (
        label == ((0, 1), 25)
        and frobenius_power(base, 1) == carry_ideal((0, 1), 25, 2, 5)
    )


def _purity():
    pure = twovars.pure_power_certificate(MonomialIdeal([(2, 0), (0, 2)], 2, 2))
    impure = twovars.pure_power_certificate(carry_ideal((0, 0), 5, 2, 2))
    frob = twovars.pure_power_certificate(carry_ideal((0, 1), 25, 2, 5))
    return pure == (1, 1) and impure is None and frob == (5, 1)


def _subspace_basis():
    nine = monomials_with_carry_leq((1, 0, 1), Context(2, 2, 10))
    return len(nine) == 9 and (7, 3) not in nine and (5, 5) in nine


FIXTURES = [
    ("carry patterns of worked monomials", _carry_values),
    ("pattern lattice at degree 10, p=2", _lattice_degree_ten),
    ("carry ideal n=2 p=5 d=25 c=(0,1)", _carry_ideal_quintic),
    ("carry ideal n=3 p=5 d=35 c=(2,0)", _carry_ideal_three_vars),
    ("decomposition of the six-generator ideal, p=2", _decomposition_roundtrip),
    ("carries after multiplying by each variable, p=7", _multiplication_carries),
    ("containment from the linear maximal ideal", _containment_from_linear),
    ("segmentation of d=62102 at p=5", _segmentation_large),
    ("factorized generators, d=62102 and d=30", _factorized_generators),
    ("betti numbers and regularity by formula", _betti_formula_values),
    ("koszul table of the quartic ideal, n=3 p=3", _koszul_three_vars),
    ("composition factors of degree-10 forms, p=2", _character_peeling),
    ("tor classes of the quintic ideal, p=2", _tor_classes),
    ("invariance depends on the characteristic", _invariance_by_characteristic),
    ("products and powers stay invariant", _products_and_powers),
    ("frobenius power shifts the label", _frobenius_shift),
    ("purity certificates", _purity),
    ("monomial basis of an invariant subspace", _subspace_basis),
]


def run_fixtures():
    """Run every fixture; returns a list of (name, passed) pairs."""
    results = []
    for name, fn in FIXTURES:
        try:
            ok = bool(fn())
        except Exception:
            ok = False
        results.append((name, ok))
    return results

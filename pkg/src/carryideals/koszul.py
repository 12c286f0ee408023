"""Graded Betti numbers over F_p for any number of variables.

For a finite-colength monomial ideal the Tor spaces against the residue field
are the homology of the exterior-algebra strands: in internal degree j the
strand runs through (S/I)_{j-i} tensor the i-th wedge of the variables, with
the contraction differential. Each strand is finite dimensional, so the Betti
numbers come from two exact ranks over F_p per homological position.

Strands are independent; set jobs > 1 (or CARRYIDEALS_JOBS) to fan them out
over processes with a deterministic merge.
"""

import os
from itertools import combinations

from . import modp
from .betti import BettiTable
from .carry import compositions
from .ideals import divides


def _check_finite_colength(ideal):
    for i in range(ideal.n):
        if not any(
            g[i] > 0 and all(x == 0 for k, x in enumerate(g) if k != i)
            for g in ideal.generators
        ):
            raise ValueError(
                "the quotient is not finite dimensional: no pure power of "
                f"variable {i + 1} among the generators"
            )


def quotient_basis(ideal, degree):
    """Monomials of the given degree that survive in the quotient."""
    if degree < 0:
        return []
    return [
        m
        for m in compositions(degree, ideal.n)
        if not ideal.contains_monomial(m)
    ]


def degree_cap(ideal):
    """Default top internal degree: past saturation plus the homological width."""
    return ideal.n * ideal.min_degree + ideal.n


def regularity(ideal):
    """Largest degree with a surviving monomial in the quotient.

    The quotient is generated in degree zero, so once a graded piece vanishes
    all later ones do; finite colength guarantees termination.
    """
    _check_finite_colength(ideal)
    e = 0
    last = 0
    while True:
        if not quotient_basis(ideal, e):
            return last
        last = e
        e += 1


def projective_dimension(ideal):
    """Always the number of variables for a finite-colength quotient.

    The top strand ends at (S/I)_reg tensor the top wedge, which the
    differential cannot kill, so the resolution reaches step n.
    """
    _check_finite_colength(ideal)
    return ideal.n


def top_corner(ideal):
    """The bottom-right corner of the table: (regularity, monomial basis of
    the top quotient piece, weights twisted by the top wedge).

    The Tor space in homological position n and internal degree reg + n is
    the top quotient piece tensored with the one-dimensional top wedge, which
    shifts every torus weight by (1, ..., 1).
    """
    r = regularity(ideal)
    basis = quotient_basis(ideal, r)
    weights = [tuple(x + 1 for x in m) for m in basis]
    return r, tuple(basis), tuple(weights)


def _strand_betti(gens, n, p, j, bases):
    """Betti numbers (i -> multiplicity) of the degree-j strand.

    bases maps each degree to its quotient monomial basis. Terms are indexed
    by (monomial, wedge subset); the differential contracts one wedge factor
    onto the monomial with alternating signs, dropping targets absorbed by
    the ideal.
    """
    terms = {}
    for i in range(n + 1):
        basis = bases.get(j - i, [])
        terms[i] = [(m, S) for m in basis for S in combinations(range(n), i)]
    index = {
        i: {key: k for k, key in enumerate(term)} for i, term in terms.items()
    }

    def rank_of_differential(i):
        source, target = terms[i], terms[i - 1]
        if not source or not target:
            return 0
        tindex = index[i - 1]
        columns = []
        for m, S in source:
            col = [0] * len(target)
            for t, k in enumerate(S):
                m2 = m[:k] + (m[k] + 1,) + m[k + 1 :]
                pos = tindex.get((m2, S[:t] + S[t + 1 :]))
                if pos is not None:
                    col[pos] += -1 if t % 2 else 1
            columns.append(col)
        # rank is transpose-invariant, so feed columns as rows
        return modp.rank(columns, len(target), p)

    ranks = [0] * (n + 2)
    for i in range(1, n + 1):
        ranks[i] = rank_of_differential(i)
    out = {}
    for i in range(1, n + 1):
        mult = len(terms[i]) - ranks[i] - ranks[i + 1]
        if mult:
            out[i] = mult
    # homology at the quotient spot itself is k in degree 0 and nothing after
    mult0 = len(terms[0]) - ranks[1]
    assert mult0 == (1 if j == 0 else 0)
    if mult0:
        out[0] = mult0
    return out


def _strand_worker(args):
    gens, n, p, j = args

    def member(m):
        return any(divides(g, m) for g in gens)

    bases = {}
    for e in range(max(j - n, 0), j + 1):
        bases[e] = [m for m in compositions(e, n) if not member(m)]
    return j, _strand_betti(gens, n, p, j, bases)


def koszul_betti(ideal, max_degree=None, jobs=None):
    """Betti table of the quotient, one strand at a time.

    max_degree defaults to a bound safely past the last nonzero entry
    (n times the least generator degree, plus n). jobs > 1 computes strands
    in a process pool; results do not depend on the schedule.
    """
    _check_finite_colength(ideal)
    if max_degree is None:
        max_degree = degree_cap(ideal)
    if jobs is None:
        jobs = int(os.environ.get("CARRYIDEALS_JOBS", "1") or "1")
    n, p = ideal.n, ideal.p
    entries = {}
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        cap = min(max_degree, regularity(ideal) + n)
        work = [(ideal.generators, n, p, j) for j in range(cap + 1)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = dict(pool.map(_strand_worker, work))
        for j in sorted(results):
            for i, mult in results[j].items():
                entries[(i, j)] = mult
    else:
        bases = {}

        def basis(e):
            if e not in bases:
                bases[e] = quotient_basis(ideal, e)
            return bases[e]

        for j in range(max_degree + 1):
            # quotient pieces vanish from some degree on; once the strand
            # window sits entirely past that point nothing more can appear
            if j - n >= 1 and not basis(j - n):
                break
            local = {e: basis(e) for e in range(max(j - n, 0), j + 1)}
            for i, mult in _strand_betti(ideal.generators, n, p, j, local).items():
                entries[(i, j)] = mult
    return BettiTable(entries, n)

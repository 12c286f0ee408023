"""Monomial ideals invariant under all linear changes of coordinates.

An ideal of k[x_1..x_n] closed under the full linear group in characteristic
p is a sum of carry ideals: for each degree d and carry pattern c, the carry
ideal is generated by the degree-d monomials whose pattern is entrywise <= c.
This module builds those ideals, decomposes an invariant ideal into an
irredundant sum of carry ideals, tests invariance two independent ways, and
implements products, powers and Frobenius powers.

Ideals here are proper and nonzero: at least one generator, never the unit.
"""

from functools import lru_cache

from .basep import binomial_mod_p, check_prime
from .carry import (
    Context,
    carry_pattern,
    compositions,
    enumerate_patterns,
    format_pattern,
    leq,
    maximal_elements,
    monomials_with_carry_leq,
    parse_pattern,
)


class NotInvariantError(ValueError):
    """An operation required an invariant ideal; carries a witness.

    The witness is a degree together with a monomial of the ideal and a
    monomial forced into the ideal by equivariance but absent from it.
    """

    def __init__(self, degree, present, absent):
        self.degree = degree
        self.present = present
        self.absent = absent
        super().__init__(
            f"not invariant: degree {degree}, {present} in the ideal forces "
            f"{absent}, which is missing"
        )


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _sort_key(e):
    # degree first, then descending lexicographic, so x-heavy monomials print first
    return (sum(e), tuple(-x for x in e))


def minimalize(gens):
    """Prune a generating set to the antichain of divisibility-minimal members.

    Distinct monomials of equal degree never divide one another, so each
    candidate is only tested against the accepted generators of strictly
    smaller degree.
    """
    gens = sorted(set(gens), key=_sort_key)
    out = []
    lower = []
    prev_degree = None
    for g in gens:
        dg = sum(g)
        if dg != prev_degree:
            lower = list(out)
            prev_degree = dg
        if not any(divides(h, g) for h in lower):
            out.append(g)
    return out


class MonomialIdeal:
    """A proper nonzero monomial ideal, stored by its minimal generators.

    Generators are exponent tuples, kept as a divisibility antichain in
    canonical order (degree, then descending lexicographic).
    """

    __slots__ = ("generators", "n", "p")

    def __init__(self, generators, n, p):
        check_prime(p)
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"need at least one variable, got n={n}")
        gens = [tuple(g) for g in generators]
        if not gens:
            raise ValueError("the zero ideal is not supported")
        for g in gens:
            if len(g) != n:
                raise ValueError(f"generator {g} does not have {n} exponents")
            if any(not isinstance(x, int) or x < 0 for x in g):
                raise ValueError(f"bad exponent vector {g}")
            if sum(g) == 0:
                raise ValueError("the unit ideal is not supported")
        object.__setattr__(self, "generators", tuple(minimalize(gens)))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("MonomialIdeal is immutable")

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return (self.generators, self.n, self.p) == (
            other.generators,
            other.n,
            other.p,
        )

    def __hash__(self):
        return hash((self.generators, self.n, self.p))

    def __repr__(self):
        return f"MonomialIdeal({list(self.generators)!r}, n={self.n}, p={self.p})"

    @property
    def min_degree(self):
        return min(sum(g) for g in self.generators)

    @property
    def max_degree(self):
        return max(sum(g) for g in self.generators)

    def contains_monomial(self, m):
        return any(divides(g, m) for g in self.generators)

    def degree_piece(self, d):
        """Monomials of degree d lying in the ideal."""
        return [m for m in compositions(d, self.n) if self.contains_monomial(m)]


def degree_pieces(ideal, up_to):
    """Monomial sets of the graded pieces from degree 0 to up_to, built
    incrementally: each piece is the previous one times the variables plus
    the generators of that degree."""
    gens_by_degree = {}
    for g in ideal.generators:
        gens_by_degree.setdefault(sum(g), []).append(g)
    pieces = {0: frozenset()}
    prev = frozenset()
    for d in range(1, up_to + 1):
        nxt = set(gens_by_degree.get(d, ()))
        for m in prev:
            for i in range(ideal.n):
                nxt.add(m[:i] + (m[i] + 1,) + m[i + 1 :])
        prev = frozenset(nxt)
        pieces[d] = prev
    return pieces


def carry_ideal(c, d, n, p):
    """The ideal generated by all degree-d monomials of carry pattern <= c."""
    if d < 1:
        raise ValueError("carry ideals are generated in positive degree")
    ctx = Context(n, p, d)
    gens = monomials_with_carry_leq(c, ctx)
    return MonomialIdeal(gens, n, p)


def ideal_from_labels(labels, n, p):
    """Sum of the carry ideals named by (pattern, degree) labels."""
    labels = list(labels)
    if not labels:
        raise ValueError("no labels given")
    gens = []
    for c, d in labels:
        gens.extend(carry_ideal(c, d, n, p).generators)
    return MonomialIdeal(gens, n, p)


@lru_cache(maxsize=None)
def _fibers(n, p, d):
    """Degree-d monomials grouped by carry pattern."""
    out = {}
    for b in compositions(d, n):
        out.setdefault(carry_pattern(b, p), []).append(b)
    return {c: tuple(ms) for c, ms in out.items()}


def invariance_witness(ideal):
    """None when the ideal is invariant, else a (degree, present, absent) witness.

    Degree by degree up to the top generator degree, the monomials of the
    ideal must fill whole carry classes, and the set of classes hit must be
    downward closed in the pattern lattice. Either failure yields a monomial
    of the ideal and a monomial it forces.
    """
    n, p = ideal.n, ideal.p
    pieces = degree_pieces(ideal, ideal.max_degree)
    for d in range(ideal.min_degree, ideal.max_degree + 1):
        piece = pieces[d]
        if not piece:
            continue
        fibers = _fibers(n, p, d)
        hit = {}
        for c, fiber in fibers.items():
            inside = [m for m in fiber if m in piece]
            if inside and len(inside) < len(fiber):
                absent = next(m for m in fiber if m not in piece)
                return (d, inside[0], absent)
            if inside:
                hit[c] = fiber
        ctx = Context(n, p, d)
        for c in sorted(hit):
            for c2 in enumerate_patterns(ctx):
                if c2 not in hit and leq(c2, c):
                    return (d, hit[c][0], fibers[c2][0])
    return None


def is_invariant(ideal):
    return invariance_witness(ideal) is None


def is_invariant_oracle(ideal, max_degree=None):
    """Invariance by direct group action, independent of the lattice theory.

    Applies every elementary transvection x_j -> x_j + t*x_i to each
    generator, expanding by binomial coefficients mod p; every monomial with
    nonvanishing coefficient must lie in the ideal. The transvections,
    the torus and the permutations generate the linear group, and the torus
    and permutations act trivially up to scalars on a monomial ideal's
    membership question, so this check is complete.
    """
    n, p = ideal.n, ideal.p
    pieces = degree_pieces(ideal, ideal.max_degree)
    for g in ideal.generators:
        dg = sum(g)
        if max_degree is not None and dg > max_degree:
            continue
        piece = pieces[dg]
        for j in range(n):
            bj = g[j]
            if bj == 0:
                continue
            for i in range(n):
                if i == j:
                    continue
                for k in range(1, bj + 1):
                    if binomial_mod_p(bj, k, p) == 0:
                        continue
                    m = list(g)
                    m[j] -= k
                    m[i] += k
                    if tuple(m) not in piece:
                        return False
    return True


def decompose(ideal):
    """Write an invariant ideal as an irredundant sum of carry ideals.

    Scans each degree d up to the top generator degree: the classes hit by
    the degree-d piece, minus those already produced by multiplying the
    previous piece by linear forms, contribute their maximal elements.
    Raises NotInvariantError (with witness) on non-invariant input.
    """
    witness = invariance_witness(ideal)
    if witness is not None:
        raise NotInvariantError(*witness)
    n, p = ideal.n, ideal.p
    pieces = degree_pieces(ideal, ideal.max_degree)
    labels = []
    prev = None
    for d in range(ideal.min_degree, ideal.max_degree + 1):
        hit = {carry_pattern(m, p) for m in pieces[d]}
        if prev is None:
            grown = set()
        else:
            grown = {
                carry_pattern(m[:i] + (m[i] + 1,) + m[i + 1 :], p)
                for m in prev
                for i in range(n)
            }
        for c in sorted(maximal_elements(hit - grown)):
            labels.append((c, d))
        prev = pieces[d]
    return labels


def product(I, J):
    """Minimal generators of the product ideal."""
    if (I.n, I.p) != (J.n, J.p):
        raise ValueError("ideals live in different rings")
    gens = {tuple(a + b for a, b in zip(g, h)) for g in I.generators for h in J.generators}
    return MonomialIdeal(gens, I.n, I.p)


def power(I, k):
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"power wants a positive exponent, got {k!r}")
    out = I
    for _ in range(k - 1):
        out = product(out, I)
    return out


def frobenius_power(I, e):
    """The ideal generated by the p^e-th powers of the generators."""
    if not isinstance(e, int) or e < 1:
        raise ValueError(f"frobenius power wants e >= 1, got {e!r}")
    q = I.p**e
    return MonomialIdeal(
        [tuple(q * x for x in g) for g in I.generators], I.n, I.p
    )


def frobenius_label(c, d, e, p):
    """Label arithmetic matching frobenius_power: prepend e zeros, scale d."""
    if not isinstance(e, int) or e < 1:
        raise ValueError(f"frobenius power wants e >= 1, got {e!r}")
    return ((0,) * e + tuple(c), d * p**e)


# ---------------------------------------------------------------------------
# serialization

def ideal_to_text(ideal):
    lines = [f"ring n={ideal.n} p={ideal.p}"]
    lines.extend(" ".join(str(x) for x in g) for g in ideal.generators)
    return "\n".join(lines) + "\n"


def ideal_from_text(text):
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("ring"):
        raise ValueError("ideal text must start with a 'ring n=<n> p=<p>' header")
    fields = dict(tok.split("=", 1) for tok in lines[0].split()[1:])
    n, p = int(fields["n"]), int(fields["p"])
    gens = [tuple(int(tok) for tok in ln.split()) for ln in lines[1:]]
    return MonomialIdeal(gens, n, p)


def ideal_to_json(ideal):
    return {
        "n": ideal.n,
        "p": ideal.p,
        "generators": [list(g) for g in ideal.generators],
    }


def ideal_from_json(obj):
    return MonomialIdeal(
        [tuple(g) for g in obj["generators"]], int(obj["n"]), int(obj["p"])
    )


def labels_to_text(labels):
    return "\n".join(f"d={d} c={format_pattern(c)}" for c, d in labels) + "\n"


def labels_from_text(text):
    labels = []
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln:
            continue
        fields = {}
        for tok in ln.split():
            key, _, val = tok.partition("=")
            fields[key] = val
        labels.append((parse_pattern(fields["c"]), int(fields["d"])))
    return labels


def labels_to_json(labels, n, p):
    return {
        "n": n,
        "p": p,
        "labels": [{"d": d, "c": list(c)} for c, d in labels],
    }


def labels_from_json(obj):
    return [(tuple(item["c"]), int(item["d"])) for item in obj["labels"]]

"""Closed-form theory of carry ideals in two variables.

With n = 2 every carry pattern has 0/1 entries, and cutting the base-p digits
of the degree d at the positions where the pattern vanishes (and no full digit
precedes) segments d into blocks. The block contents determine everything in
closed form: the minimal generators factor as a product of Frobenius powers of
powers of the maximal ideal, the quotient has a two-step resolution whose
syzygy degrees and multiplicities are digit statistics of the segmentation,
and the regularity drops out of the last syzygy offset.
"""

from dataclasses import dataclass

from .basep import expand, full_run, pattern_length, top_index, value_of
from .betti import BettiTable
from .carry import Context, is_valid_pattern
from .ideals import MonomialIdeal


def two_var_patterns(d, p):
    """The carry patterns of degree-d monomials in two variables.

    Direct construction: entries are 0 or 1, a zero digit of d forces the next
    entry up, a full digit forces it down. Agrees with the generic lattice
    enumeration (tested there); this route has no search.
    """
    digits = expand(d, p)
    M = pattern_length(d, p)
    if M == 0:
        return [()]
    prefixes = [()]
    for i in range(M):
        di = digits[i] if i < len(digits) else 0
        out = []
        for pre in prefixes:
            prev = pre[-1] if pre else 0
            for nxt in (0, 1):
                if di == 0 and nxt < prev:
                    continue
                if di == p - 1 and nxt > prev:
                    continue
                out.append(pre + (nxt,))
        prefixes = out
    return sorted(prefixes)


def is_simple_degree(d, p):
    """Whether the degree-d forms in two variables have no proper nonzero
    invariant subspace, i.e. the pattern lattice is a single point.

    Holds exactly when every digit of d below the top one is p-1.
    """
    return full_run(d, p) >= max(top_index(d, p), 0)


@dataclass(frozen=True)
class Segmentation:
    """Cut of the digits of d at the pattern's qualifying zero positions.

    cut_points lists the positions 0 = t_0 < ... < t_l where the pattern entry
    is zero and the preceding (entry, digit) pair is not (0, p-1); segments
    are the digit slices between consecutive cut points (the last one padded
    to the top index), and contents are their base-p values.
    """

    c: tuple
    d: int
    p: int
    cut_points: tuple
    segments: tuple
    contents: tuple


def segmentation(c, d, p):
    c = tuple(c)
    ctx = Context(2, p, d)
    if not is_valid_pattern(c, ctx):
        raise ValueError(f"{c} is not a two-variable carry pattern for degree {d}")
    digits = ctx.digits()
    M = ctx.length

    def entry(k):
        return c[k - 1] if 1 <= k <= M else 0

    cuts = [0]
    for k in range(1, M + 1):
        if entry(k) == 0 and (entry(k - 1), digits[k - 1]) != (0, p - 1):
            cuts.append(k)
    cuts.append(M + 1)  # sentinel
    segments = tuple(
        tuple(digits[j] if j < len(digits) else 0 for j in range(cuts[r], cuts[r + 1]))
        for r in range(len(cuts) - 1)
    )
    contents = tuple(value_of(seg, p) for seg in segments)
    return Segmentation(c, d, p, tuple(cuts[:-1]), segments, contents)


def slice_contents(a, seg):
    """Contents of the digits of a sliced at the segmentation's cut points."""
    cuts = list(seg.cut_points) + [max(top_index(seg.d, seg.p), 0) + 1]
    out = []
    for r in range(len(seg.cut_points)):
        lo, hi = cuts[r], cuts[r + 1]
        block = (a // seg.p**lo) % seg.p ** (hi - lo)
        out.append(block)
    return tuple(out)


def is_generator_exponent(a, c, d, p):
    """Whether x^a y^(d-a) is a minimal generator of the carry ideal of (c, d).

    Holds exactly when each sliced content of a is at most the corresponding
    content of d, which is the closed-form version of carry(a, d-a) <= c.
    """
    if not 0 <= a <= d:
        raise ValueError(f"exponent {a} out of range for degree {d}")
    seg = segmentation(c, d, p)
    return all(x <= y for x, y in zip(slice_contents(a, seg), seg.contents))


def generator_exponents(seg):
    """All x-exponents of minimal generators: sums w_r p^{t_r}, 0 <= w_r <= content_r."""
    exps = [0]
    for t, cont in zip(seg.cut_points, seg.contents):
        exps = [a + w * seg.p**t for a in exps for w in range(cont + 1)]
    return sorted(exps)


def generator_factors(seg):
    """The factorization data: (power of the maximal ideal, Frobenius exponent) pairs."""
    return tuple(zip(seg.contents, seg.cut_points))


def generators_by_segmentation(c, d, p):
    """The carry ideal of (c, d) built from the segmentation, with its factorization.

    Returns (ideal, factors) where factors lists (m_r, t_r) meaning the
    product of the p^{t_r}-th Frobenius powers of the m_r-th powers of <x, y>.
    """
    seg = segmentation(c, d, p)
    gens = [(a, d - a) for a in generator_exponents(seg)]
    return MonomialIdeal(gens, 2, p), generator_factors(seg)


def format_factors(factors, p):
    parts = []
    for cont, t in factors:
        if cont == 0:
            continue
        if t == 0:
            parts.append(f"m^{cont}")
        else:
            parts.append(f"(m^{cont})^[{p**t}]")
    return " ".join(parts) if parts else "m^0"


def syzygy_offsets(seg):
    """Offsets phi_r above the generating degree where first syzygies live.

    phi_r = p^{t_r} minus the weighted contents of all earlier segments; the
    offsets are strictly increasing, and the r-th one is the exponent gap
    between a generator maximal in its first r slots and its lexicographic
    neighbor.
    """
    phis = []
    acc = 0
    for t, cont in zip(seg.cut_points, seg.contents):
        phis.append(seg.p**t - acc)
        acc += cont * seg.p**t
    return tuple(phis)


def betti_formula(c, d, p):
    """Graded Betti table of the quotient by the carry ideal of (c, d).

    The generator count is the product of (content + 1) over all segments; the
    syzygies at offset phi_r count content_r times the product of the later
    (content + 1) factors. Zero multiplicities (content 0) are omitted.
    """
    seg = segmentation(c, d, p)
    phis = syzygy_offsets(seg)
    conts = seg.contents
    entries = {(0, 0): 1}
    gens = 1
    for cont in conts:
        gens *= cont + 1
    entries[(1, d)] = gens
    for r, phi in enumerate(phis):
        mult = conts[r]
        for cont in conts[r + 1 :]:
            mult *= cont + 1
        if mult:
            entries[(2, d + phi)] = mult
    return BettiTable(entries, 2)


def regularity_formula(c, d, p):
    """Top nonzero degree of the quotient: d plus the last syzygy offset minus 2."""
    seg = segmentation(c, d, p)
    return d + syzygy_offsets(seg)[-1] - 2


@dataclass(frozen=True)
class HilbertBurch:
    """Two-step resolution of a depth-zero monomial ideal in two variables.

    generators come sorted with strictly decreasing x-exponent; column j of
    the bidiagonal syzygy matrix has y^(b_{j+1} - b_j) in row j and
    -x^(a_j - a_{j+1}) in row j+1, encoded as (y_step, x_step) pairs.
    """

    generators: tuple
    columns: tuple

    def column_degrees(self):
        return tuple(
            sum(self.generators[j]) + self.columns[j][0]
            for j in range(len(self.columns))
        )


def hilbert_burch(ideal):
    """Resolution matrices for a two-variable ideal containing a power of each
    variable. Verifies that the maps compose to zero and that the maximal
    minors reproduce the generators."""
    if ideal.n != 2:
        raise ValueError("hilbert_burch handles two-variable ideals only")
    gens = sorted(ideal.generators, key=lambda g: -g[0])
    r = len(gens)
    if r < 2 or gens[0][1] != 0 or gens[-1][0] != 0:
        raise ValueError(
            "need a power of each variable among the generators (depth zero)"
        )
    cols = []
    for j in range(r - 1):
        (a1, b1), (a2, b2) = gens[j], gens[j + 1]
        cols.append((b2 - b1, a1 - a2))
    # composition: row j entry times y-step equals row j+1 entry times x-step
    for j, (ystep, xstep) in enumerate(cols):
        left = (gens[j][0], gens[j][1] + ystep)
        right = (gens[j + 1][0] + xstep, gens[j + 1][1])
        assert left == right
    # maximal minors: deleting row k leaves y-steps below the diagonal and
    # x-steps above, so the minor is x^(a_k - a_r) y^(b_k - b_1) = generator k
    for k in range(r):
        minor = (gens[k][0] - gens[-1][0], gens[k][1] - gens[0][1])
        assert minor == gens[k]
    return HilbertBurch(tuple(gens), tuple(cols))


def syzygy_degrees(ideal):
    """Total degrees of the syzygy columns, sorted."""
    return tuple(sorted(hilbert_burch(ideal).column_degrees()))


def pure_power_certificate(ideal):
    """(m, e) with ideal = (<x,y>^m)^[p^e] when the resolution is pure, else None.

    A pure resolution forces generation in one degree with generators in
    arithmetic progression of stride a power of p.
    """
    if ideal.n != 2:
        raise ValueError("purity test handles two-variable ideals only")
    gens = sorted(ideal.generators, key=lambda g: -g[0])
    degrees = {sum(g) for g in gens}
    if len(degrees) != 1:
        return None
    d = degrees.pop()
    if gens[0] != (d, 0) or gens[-1] != (0, d):
        return None
    strides = {gens[j][0] - gens[j + 1][0] for j in range(len(gens) - 1)}
    if len(strides) != 1:
        return None
    stride = strides.pop()
    e = 0
    q = 1
    while q < stride:
        q *= ideal.p
        e += 1
    if q != stride:
        return None
    return (d // stride, e)

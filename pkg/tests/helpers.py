"""Shared expected-image helpers for the construction test modules.

The glued presentations are assembled from parameterized word families
(three-cycles z(i), double transpositions d(i,j), even cycles c(i,j),
the telescope pair words, and the glue-side long cycle).  Each family has
a closed-form expected permutation; claim_failures evaluates every family
inside a built presentation and returns the labels that do not match.

The private word constructors from the builders module are imported on
purpose: these tests pin down the exact words the builder assembles.
"""

import itertools
import random

from shortpres.builders import _c_word, _d_word, _z_word
from shortpres.perm import Permutation
from shortpres.words import evaluate, evaluate_slp, sym

A, Z, X = sym("a"), sym("z"), sym("x")


def expected_pair_stack(p, lo, hi):
    """(1,p-1)(2,p-2)...: negation on the embedded field, fixing p."""
    return Permutation.from_cycles(
        [(i, p - i) for i in range(1, (p + 1) // 2)], lo, hi)


def expected_c(i, j, p, lo, hi):
    """(i,i+1,...,j) times (p+1,p+2)^(j-i); the factors overlap once j
    reaches p+1, so compose rather than list disjoint cycles."""
    cyc = [tuple(range(i, j + 1))] if j > i else []
    out = Permutation.from_cycles(cyc, lo, hi)
    if (j - i) % 2:
        out = out * Permutation.from_cycles([(p + 1, p + 2)], lo, hi)
    return out


def expected_za_conj(p, k, lo, hi, swapped):
    """The conjugate of the long cycle (1,...,p+2) under the glue map.

    The uniform tail is (1..k, 0, -1, ..., k-p-1); the even alternating
    glue map actually produces the same cycle with its last two points
    exchanged (swapped=True).
    """
    body = list(range(1, k + 1))
    if swapped:
        body += list(range(0, k - p, -1)) + [k - p - 1, k - p]
    else:
        body += list(range(0, k - p - 2, -1))
    return Permutation.from_cycles([tuple(body)], lo, hi)


def index_samples(p, rng):
    """Residue indices to test: all of them for small p, else boundaries
    plus a seeded random handful."""
    if p <= 23:
        return list(range(1, p + 1))
    pts = {1, 2, 3, (p - 1) // 2, (p + 1) // 2, p - 2, p - 1, p}
    pts.update(rng.randrange(1, p + 1) for _ in range(6))
    return sorted(pts)


def _c_index_pairs(p, idx, rng):
    if p <= 23:
        pairs = list(itertools.combinations_with_replacement(idx, 2))
    else:
        pairs = [(i, j) for i, j in zip(sorted(rng.sample(idx, 6)), sorted(rng.sample(idx, 6))) if i <= j]
        pairs += [(1, 2), (1, p - 1), (2, 2)]
    for j in (p, p + 1, p + 2):  # the boundary columns past p-1
        pairs += [(i, j) for i in idx[:4]]
    # the family needs i <= p-2 once j reaches p
    return [(i, j) for i, j in pairs if j <= p - 1 or i <= p - 2]


def claim_failures(pres, rng=None, claimed_u=False):
    """Evaluate every image claim inside a glued presentation.

    Returns the labels of the claims that fail.  With claimed_u=True the
    glue-side long-cycle conjugate is checked against the uniform tail
    formula on every branch; with claimed_u=False the even alternating
    branches are checked against the tail they actually produce.
    """
    ps = pres.params
    p, k = ps.p, ps.k
    lo, hi = pres.domain
    rng = rng or random.Random(20260815)
    env, _ = evaluate_slp(pres.slp, pres.images)
    fails = []

    def check(label, got, want):
        if got != want:
            fails.append(f"{pres.kind} n={pres.degree}: {label}")

    def P(cycles):
        return Permutation.from_cycles(cycles, lo, hi)

    idx = index_samples(p, rng)
    for i in idx:
        check(f"z({i})", evaluate(_z_word(Z, A, i, p, True), env),
              P([(i, p + 1, p + 2)]))
    for i, j in itertools.combinations(idx, 2):
        if (i - j) % p:
            check(f"d({i},{j})", evaluate(_d_word(Z, A, i, j, p, True), env),
                  P([(i, j), (p + 1, p + 2)]))
    for i, j in _c_index_pairs(p, idx, rng):
        check(f"c({i},{j})", evaluate(_c_word(Z, A, X, i, j, p, True), env),
              expected_c(i, j, p, lo, hi))

    check("x", env["x"], P([(1, p), (p + 1, p + 2)]))
    check("atil", env["atil"], P([(1, 2, 3)]))
    check("d", env["d"], P([tuple(range(5, p + 3))]))

    if pres.kind == "Sym":
        pair_stack = expected_pair_stack(p, lo, hi)
        half = (p - 1) // 2
        check("b^((p-1)/2)", env["b"] ** half, pair_stack)
        check("cbull", env["cbull"],
              P([tuple(range(1, half + 1)), tuple(range(p - 1, half, -1))]))
        check("v", env["v"], pair_stack * P([(p + 1, p + 2)]))
        check("t", env["t"], P([(p + 1, p + 2)]))

    defined = dict(pres.slp.definitions)
    if "ytil" in defined:
        check("ytil", env["ytil"], P([(1, k + 2), (2, k + 1)]))
        check("ztil", env["ztil"], P([(1, -1), (2, 0)]))
        check("xtil", env["xtil"], P([(-1, k + 2), (0, k + 1)]))

    za = env["z"] * env["a"]
    check("z a", za, P([tuple(range(1, p + 3))]))
    swapped = pres.kind == "Alt" and pres.degree % 2 == 0 and not claimed_u
    check("(z a)^y", za.conjugate(env["y"]),
          expected_za_conj(p, k, lo, hi, swapped))
    return fails

"""Weight combinatorics: Weyl dimension formula, Freudenthal multiplicities and
decomposition of characters into irreducible Levi characters.

Characters are plain ``dict[Weight, int]`` maps.
"""

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .lie import ParabolicAlgebra, RootSystem, Weight


def weyl_dimension(rs: RootSystem, lam: Weight, positive_roots: Sequence[Weight] | None = None,
                   rho: Weight | None = None) -> int:
    if positive_roots is None:
        positive_roots = rs.positive_roots
    if rho is None:
        rho = rs.rho
    num = Fraction(1)
    shifted = lam + rho
    for a in positive_roots:
        num *= rs.pair(shifted, a) / rs.pair(rho, a)
    if num.denominator != 1:
        raise ValueError(f"Weyl dimension of {lam} is not an integer: {num}")
    return int(num)


def levi_dimension(p: ParabolicAlgebra, mu: Weight) -> int:
    """dim of the irreducible l-module with highest weight ``mu``."""
    return weyl_dimension(p.root_system, mu, p.l_positive_roots, p.rho_l)


def is_levi_dominant(p: ParabolicAlgebra, mu: Weight) -> bool:
    return all(mu.coords[k] >= 0 and mu.coords[k].denominator == 1
               for k in p.l_simple_indices)


def dominant_weights(rank: int, lmax: int) -> list[Weight]:
    """Dominant integral weights with coordinate sum <= lmax, in lex order."""
    out = []
    for total in range(lmax + 1):
        for c in _compositions_with_zeros(total, rank):
            out.append(Weight(c))
    return sorted(out, key=lambda w: (w.size(), w.coords))


def _compositions_with_zeros(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions_with_zeros(total - first, parts - 1):
            yield (first,) + rest


def freudenthal(rs: RootSystem, hw: Weight, simple_indices: Sequence[int] | None = None,
                positive_roots: Sequence[Weight] | None = None,
                rho: Weight | None = None) -> dict[Weight, int]:
    """Weight multiplicities of the irreducible module of highest weight ``hw``.

    Defaults describe sl_n itself; pass the Levi data to get l-characters.
    """
    if simple_indices is None:
        simple_indices = range(rs.rank)
    if positive_roots is None:
        positive_roots = rs.positive_roots
    if rho is None:
        rho = rs.rho
    alphas = [rs.simple_roots[k] for k in simple_indices]
    mult: dict[Weight, int] = {hw: 1}
    top = rs.pair(hw + rho, hw + rho)
    level = [hw]
    while level:
        candidates = sorted({nu - a for nu in level for a in alphas})
        nxt = []
        for mu in candidates:
            denom = top - rs.pair(mu + rho, mu + rho)
            if denom == 0:
                continue
            s = Fraction(0)
            for a in positive_roots:
                k = 1
                while True:
                    w = mu + a * k
                    m = mult.get(w)
                    if m is None:
                        break
                    s += rs.pair(w, a) * m
                    k += 1
            val = 2 * s / denom
            if val:
                if val.denominator != 1 or val < 0:
                    raise ArithmeticError(f"bad multiplicity {val} at {mu}")
                mult[mu] = int(val)
                nxt.append(mu)
        level = nxt
    return mult


@lru_cache(maxsize=None)
def _g_character(n: int, coords: tuple) -> tuple:
    rs = RootSystem(n)
    return tuple(sorted(freudenthal(rs, Weight(coords)).items()))


def g_character(rs: RootSystem, lam: Weight) -> dict[Weight, int]:
    return dict(_g_character(rs.n, lam.coords))


def levi_character(p: ParabolicAlgebra, mu: Weight) -> dict[Weight, int]:
    return freudenthal(p.root_system, mu, p.l_simple_indices, p.l_positive_roots, p.rho_l)


def spin_character(p: ParabolicAlgebra) -> dict[Weight, int]:
    """Weights of Lambda(u) under the adjoint action."""
    roots = p.delta_u
    out: Counter = Counter()
    zero = Weight.zero(p.root_system.rank)
    for k in range(len(roots) + 1):
        for sub in itertools.combinations(roots, k):
            w = zero
            for r in sub:
                w = w + r
            out[w] += 1
    return dict(out)


def multiply_characters(a: dict[Weight, int], b: dict[Weight, int]) -> dict[Weight, int]:
    out: Counter = Counter()
    for wa, ma in a.items():
        for wb, mb in b.items():
            out[wa + wb] += ma * mb
    return dict(out)


def decompose_levi(p: ParabolicAlgebra, char: dict[Weight, int]) -> dict[Weight, int]:
    """Split an l-character into irreducibles: returns highest weight -> multiplicity."""
    rs = p.root_system
    rho_l = p.rho_l
    remaining = {w: m for w, m in char.items() if m}
    result: dict[Weight, int] = {}
    while remaining:
        top = max(remaining, key=lambda w: (rs.pair(w, rho_l), w.coords))
        m = remaining[top]
        if m < 0 or not is_levi_dominant(p, top):
            raise ValueError(f"not an l-character: stuck at {top} with multiplicity {m}")
        result[top] = result.get(top, 0) + m
        for w, k in levi_character(p, top).items():
            left = remaining.get(w, 0) - m * k
            if left:
                remaining[w] = left
            else:
                remaining.pop(w, None)
    return dict(sorted(result.items()))


def levi_types(p: ParabolicAlgebra, lam: Weight) -> dict[Weight, int]:
    """l-highest weights (with multiplicity) of V_lam (x) S."""
    char = multiply_characters(g_character(p.root_system, lam), spin_character(p))
    return decompose_levi(p, char)


def weyl_group_length_counts(n: int) -> list[int]:
    """Number of permutations of n letters with k inversions, k = 0..n(n-1)/2."""
    counts = [1]
    for m in range(2, n + 1):
        new = [0] * (len(counts) + m - 1)
        for i, c in enumerate(counts):
            for j in range(m):
                new[i + j] += c
        counts = new
    return counts


def weyl_orbit_with_lengths(rs: RootSystem, regular: Weight) -> list[tuple[int, Weight]]:
    """(length(w), w(regular)) for all w in the Weyl group; ``regular`` must be regular."""
    seen = {regular: 0}
    level = [regular]
    depth = 0
    while level:
        depth += 1
        nxt = []
        for mu in level:
            for k in range(rs.rank):
                nu = mu - rs.simple_roots[k] * mu.coords[k]
                if nu not in seen:
                    seen[nu] = depth
                    nxt.append(nu)
        level = nxt
    return sorted(((ln, w) for w, ln in seen.items()), key=lambda t: (t[0], t[1].coords))


def kostant_borel_weights(rs: RootSystem, lam: Weight) -> list[tuple[int, Weight]]:
    """Degrees and weights of H^*(nbar, V_lam) for a Borel subalgebra.

    Degree l(w) carries the weight w0 w(lam + rho) + rho; for sl_n the longest
    element acts on fundamental coordinates by reversal and negation.
    """
    rho = rs.rho
    out = [(ln, rho - Weight(tuple(reversed(w.coords))))
           for ln, w in weyl_orbit_with_lengths(rs, lam + rho)]
    return sorted(out, key=lambda t: (t[0], t[1].coords))

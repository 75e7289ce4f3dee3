"""Buchberger's algorithm with basis reduction and elimination-ideal extraction.

The public surface works with :class:`~conicoffset.poly.MultiPoly`; internally
polynomials are plain ``{exponent-tuple: int}`` dicts kept primitive (coprime
integer coefficients, positive leading coefficient), so the completion runs on
exact integer pseudo-reduction with no rational arithmetic in the hot loop.
Pair selection is the normal strategy: a min-heap keyed by (lcm total degree,
insertion index), which makes runs deterministic.  The classic
coprime-leading-term and chain criteria prune useless pairs.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import OrderError, ResourceLimitError, RingError, ZeroPolyError
from .poly import (MonomialOrder, MultiPoly, content_normalize, leading_term,
                   monomial_div, monomial_divides, monomial_lcm, monomial_mul,
                   total_degree)

DEFAULT_MAX_PAIRS = 200_000
DEFAULT_MAX_DEGREE = 40


@dataclass(frozen=True)
class Ideal:
    """A finitely generated ideal: shared ring plus nonzero generators."""

    ring: tuple
    generators: tuple

    def __init__(self, ring, generators):
        ring = tuple(ring)
        gens = tuple(generators)
        if not gens:
            raise ValueError("ideal needs at least one generator")
        for g in gens:
            if not isinstance(g, MultiPoly) or g.ring != ring:
                raise RingError("generator ring mismatch")
            if g.is_zero():
                raise ZeroPolyError("zero polynomial among ideal generators")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "generators", gens)


@dataclass(frozen=True)
class GroebnerBasis:
    order: MonomialOrder
    polys: tuple
    reduced: bool = False
    stats: dict = field(default_factory=dict)

    def degree_multiset(self):
        return sorted((p.degree() for p in self.polys), reverse=True)


def s_polynomial(p: MultiPoly, q: MultiPoly, order: MonomialOrder) -> MultiPoly:
    """S(p,q) = (lcm/LT(p)) p - (lcm/LT(q)) q; the leading terms cancel."""
    lm_p, lc_p = leading_term(p, order)
    lm_q, lc_q = leading_term(q, order)
    lcm_m = monomial_lcm(lm_p, lm_q)
    up = MultiPoly(p.ring, {monomial_div(lcm_m, lm_p): Fraction(1) / lc_p})
    uq = MultiPoly(q.ring, {monomial_div(lcm_m, lm_q): Fraction(1) / lc_q})
    return up * p - uq * q


# ---------------------------------------------------------------------------
# integer engine
# ---------------------------------------------------------------------------
# A basis entry is the triple (lm, lc, terms): leading monomial, positive
# integer leading coefficient, and the primitive term dict.

def _to_int_terms(p: MultiPoly) -> dict:
    cn = content_normalize(p)
    return {m: int(c) for m, c in cn.terms.items()}


def _content_strip(terms: dict) -> dict:
    g = 0
    for c in terms.values():
        g = gcd(g, c)
        if g == 1:
            return terms
    if g > 1:
        return {m: c // g for m, c in terms.items()}
    return terms


def _make_entry(terms: dict, keyfn):
    lm = max(terms, key=keyfn)
    if terms[lm] < 0:
        terms = {m: -c for m, c in terms.items()}
    return (lm, terms[lm], terms)


def _spair_terms(e1, e2) -> dict:
    """Integer S-polynomial of two primitive entries."""
    lm1, lc1, t1 = e1
    lm2, lc2, t2 = e2
    lcm_m = monomial_lcm(lm1, lm2)
    g = gcd(lc1, lc2)
    c1, c2 = lc2 // g, lc1 // g
    q1, q2 = monomial_div(lcm_m, lm1), monomial_div(lcm_m, lm2)
    out: dict = {}
    for m, c in t1.items():
        out[monomial_mul(q1, m)] = c1 * c
    for m, c in t2.items():
        t = monomial_mul(q2, m)
        v = out.get(t, 0) - c2 * c
        if v:
            out[t] = v
        else:
            out.pop(t, None)
    return out


def _normal_form_int(terms: dict, basis: Sequence, keyfn) -> dict:
    """Full normal form of an integer polynomial against basis entries.

    Pseudo-reduction: the result equals the true remainder up to a positive
    rational factor, which is harmless because every output is re-stripped to
    primitive form before use.
    """
    work = dict(terms)
    done: dict = {}
    heap = [(tuple(-k for k in keyfn(m)), m) for m in work]
    heapq.heapify(heap)
    scalings = 0
    while heap:
        _, m = heapq.heappop(heap)
        c = work.pop(m, 0)
        if c == 0:
            continue
        for lm, lc, bterms in basis:
            if monomial_divides(lm, m):
                q = monomial_div(m, lm)
                g = gcd(c, lc) if c > 0 else gcd(-c, lc)
                scale, factor = lc // g, c // g
                if scale != 1:
                    for k in work:
                        work[k] *= scale
                    for k in done:
                        done[k] *= scale
                    scalings += 1
                for bm, bc in bterms.items():
                    if bm == lm:
                        continue
                    t = monomial_mul(q, bm)
                    v = work.get(t, 0) - factor * bc
                    if v:
                        if t not in work:
                            heapq.heappush(heap, (tuple(-k for k in keyfn(t)), t))
                        work[t] = v
                    else:
                        work.pop(t, None)
                if scalings >= 24 and done:
                    merged = _content_strip({**done, **work})
                    for k in work:
                        work[k] = merged[k]
                    for k in done:
                        done[k] = merged[k]
                    scalings = 0
                elif scalings >= 24:
                    stripped = _content_strip(work)
                    if stripped is not work:
                        work.update(stripped)
                    scalings = 0
                break
        else:
            done[m] = c
    return _content_strip(done)


# ---------------------------------------------------------------------------
# Buchberger completion
# ---------------------------------------------------------------------------

def buchberger(ideal: Ideal, order: MonomialOrder,
               max_pairs: int = DEFAULT_MAX_PAIRS,
               max_degree: int = DEFAULT_MAX_DEGREE) -> GroebnerBasis:
    """Complete the ideal's generators to a (non-reduced) Groebner basis.

    Raises ResourceLimitError (carrying partial statistics) when more than
    ``max_pairs`` S-pairs are processed or a remainder exceeds total degree
    ``max_degree``.
    """
    if tuple(order.variables) != ideal.ring:
        raise OrderError("order variables do not match the ideal ring")
    keyfn = order.key
    basis = []
    for gen in ideal.generators:
        basis.append(_make_entry(_to_int_terms(gen), keyfn))

    stats = {"pairs_considered": 0, "pairs_skipped_criteria": 0, "reductions": 0}
    heap: list = []
    pending: set = set()
    counter = 0

    def push_pairs(j):
        nonlocal counter
        lm_j = basis[j][0]
        for i in range(j):
            lcm_m = monomial_lcm(basis[i][0], lm_j)
            heapq.heappush(heap, (total_degree(lcm_m), counter, i, j, lcm_m))
            pending.add((i, j))
            counter += 1

    for j in range(len(basis)):
        push_pairs(j)

    def fail(msg):
        stats["basis_size"] = len(basis)
        stats["pending_pairs"] = len(pending)
        return ResourceLimitError(msg, stats=dict(stats))

    while heap:
        _, _, i, j, lcm_m = heapq.heappop(heap)
        pending.discard((i, j))
        stats["pairs_considered"] += 1
        if stats["pairs_considered"] > max_pairs:
            raise fail(f"pair budget exceeded ({max_pairs})")
        lm_i, lm_j = basis[i][0], basis[j][0]
        # coprime leading terms: S-pair reduces to zero, skip
        if monomial_mul(lm_i, lm_j) == lcm_m:
            stats["pairs_skipped_criteria"] += 1
            continue
        # chain criterion: some other basis member divides the lcm and both
        # its pairs with i and j are already settled
        skip = False
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            if monomial_divides(basis[k][0], lcm_m):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik not in pending and pjk not in pending:
                    skip = True
                    break
        if skip:
            stats["pairs_skipped_criteria"] += 1
            continue
        s_terms = _spair_terms(basis[i], basis[j])
        stats["reductions"] += 1
        rem = _normal_form_int(s_terms, basis, keyfn)
        if rem:
            deg = max(total_degree(m) for m in rem)
            if deg > max_degree:
                raise fail(f"degree cap exceeded ({deg} > {max_degree})")
            basis.append(_make_entry(rem, keyfn))
            push_pairs(len(basis) - 1)

    polys = tuple(
        MultiPoly(ideal.ring, {m: Fraction(c) for m, c in terms.items()})
        for (_, _, terms) in basis
    )
    stats["basis_size"] = len(polys)
    stats["degree_multiset"] = sorted((p.degree() for p in polys), reverse=True)
    return GroebnerBasis(order=order, polys=polys, reduced=False, stats=stats)


def minimalize(gb: GroebnerBasis) -> GroebnerBasis:
    """Drop members whose leading term is divisible by another member's."""
    keyfn = gb.order.key
    entries = sorted(gb.polys, key=lambda p: keyfn(leading_term(p, gb.order)[0]))
    kept: list = []
    kept_lms: list = []
    for p in entries:
        lm = leading_term(p, gb.order)[0]
        if any(monomial_divides(k, lm) for k in kept_lms):
            continue
        kept.append(p)
        kept_lms.append(lm)
    return GroebnerBasis(gb.order, tuple(kept), reduced=False, stats=dict(gb.stats))


def reduce_basis(gb: GroebnerBasis) -> GroebnerBasis:
    """Minimalize, fully inter-reduce tails, and content-normalize.

    The result is the unique reduced basis for the ideal and order (up to the
    monic-vs-primitive normalization, fixed here as primitive integer
    coefficients with positive leading coefficient), sorted with the largest
    leading monomial first.
    """
    keyfn = gb.order.key
    minimal = minimalize(gb)
    entries = [_make_entry(_to_int_terms(p), keyfn) for p in minimal.polys]
    reduced_entries = []
    for idx, entry in enumerate(entries):
        others = [e for k, e in enumerate(entries) if k != idx]
        rem = _normal_form_int(dict(entry[2]), others, keyfn)
        if rem:
            new = _make_entry(rem, keyfn)
            reduced_entries.append(new)
            entries[idx] = new
    reduced_entries.sort(key=lambda e: keyfn(e[0]), reverse=True)
    polys = tuple(
        MultiPoly(gb.order.variables, {m: Fraction(c) for m, c in terms.items()})
        for (_, _, terms) in reduced_entries
    )
    stats = dict(gb.stats)
    stats["minimal_size"] = len(minimal.polys)
    stats["reduced_size"] = len(polys)
    return GroebnerBasis(gb.order, polys, reduced=True, stats=stats)


def elimination_ideal(gb: GroebnerBasis, keep) -> list:
    """Basis members supported only on `keep` variables.

    By the Elimination Theorem these generate (as a Groebner basis) the
    intersection of the ideal with the subring on `keep`, provided the basis
    order ranks every dropped variable above every kept one.
    """
    keep = set(keep)
    ring = gb.order.variables
    unknown = keep - set(ring)
    if unknown:
        raise OrderError(f"unknown variables {sorted(unknown)}")
    dropped = set(ring) - keep
    if dropped and not gb.order.eliminates(dropped):
        raise OrderError(
            f"order {gb.order.kind} over {ring} does not eliminate {sorted(dropped)}")
    return [p for p in gb.polys if p.support_vars() <= keep]

#!/usr/bin/env python3
"""Count subgroups of the elementary abelian group of order 2**dim.

Two independent routes:
  * closed form: sum over k of the Gaussian binomial [dim choose k]_2
  * enumeration: every subspace is the row space of a reduced echelon basis;
    count distinct spans by rank-checked vector sets.
"""
import itertools
import sys


def gaussian_binomial(n, k, q=2):
    num, den = 1, 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def span(vectors):
    out = {0}
    for v in vectors:
        out |= {x ^ v for x in out}
    return frozenset(out)


def rank(vectors):
    basis = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return len(basis)


def enumerate_subspaces(dim):
    seen = {frozenset({0})}
    frontier = [frozenset({0})]
    while frontier:
        nxt = []
        for s in frontier:
            for v in range(1 << dim):
                if v in s:
                    continue
                t = span(list(s) + [v])
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    # every space must have size 2**rank
    for s in seen:
        assert len(s) == 1 << rank(sorted(s)), s
    return len(seen)


if __name__ == "__main__":
    dim = int(sys.argv[1]) if len(sys.argv) > 1 else 6
    closed = sum(gaussian_binomial(dim, k) for k in range(dim + 1))
    enumerated = enumerate_subspaces(dim)
    print(f"dim={dim} closed_form={closed} enumerated={enumerated}")
    sys.exit(0 if closed == enumerated else 1)

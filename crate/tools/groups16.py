#!/usr/bin/env python3
"""Writes the catalog of groups of order <= 16 as regular permutation
representations.

Each group is built from an explicit multiplication (metacyclic words
a^i b^j, semidirect products, direct products, or a matrix group) and then
written as left multiplication by its generators on its own elements.
Before writing, the script checks that every group has the stated order,
that the per-order class counts are right, and that groups of equal order
have distinct fingerprints.

Usage: python3 tools/groups16.py > crates/semistab/data/groups16.txt
"""

import itertools
import sys
from collections import Counter


class Group:
    def __init__(self, elements, mul, gens):
        self.elements = list(elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.mul = mul
        self.gens = gens

    def perms(self):
        out = []
        for g in self.gens:
            out.append([self.index[self.mul(g, x)] for x in self.elements])
        return out


def metacyclic(m, n, s, r):
    """<a, b | a^m = 1, b^n = a^s, b a b^-1 = a^r>, elements a^i b^j."""
    assert pow(r, n, m) == 1 % m and (r * s - s) % m == 0
    elems = [(i, j) for j in range(n) for i in range(m)]

    def mul(x, y):
        i, j = x
        k, l = y
        e = (i + pow(r, j, m) * k) % m
        jl = j + l
        if jl >= n:
            jl -= n
            e = (e + s) % m
        return (e, jl)

    gens = [(1 % m, 0)] + ([(0, 1)] if n > 1 else [])
    return Group(elems, mul, gens)


def cyclic(m):
    return metacyclic(m, 1, 0, 1)


def direct(g, h):
    elems = list(itertools.product(g.elements, h.elements))
    e_g, e_h = identity(g), identity(h)

    def mul(x, y):
        return (g.mul(x[0], y[0]), h.mul(x[1], y[1]))

    gens = [(a, e_h) for a in g.gens] + [(e_g, b) for b in h.gens]
    return Group(elems, mul, gens)


def identity(g):
    for e in g.elements:
        if all(g.mul(e, x) == x for x in g.elements):
            return e
    raise ValueError("no identity")


def group_16_3():
    """(C4 x C2) x| C2 with c: a -> ab, b -> b."""
    elems = [(x, y, z) for z in range(2) for y in range(2) for x in range(4)]

    def act(z, x, y):
        return (x, (y + x) % 2) if z else (x, y)

    def mul(p, q):
        x1, y1, z1 = p
        x2, y2, z2 = q
        ax, ay = act(z1, x2, y2)
        return ((x1 + ax) % 4, (y1 + ay) % 2, (z1 + z2) % 2)

    return Group(elems, mul, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])


def pauli():
    """The group generated by the Pauli matrices over Z[i]."""
    def mm(a, b):
        return tuple(
            tuple(
                sum_c(mul_c(a[r][k], b[k][c]) for k in range(2)) for c in range(2)
            )
            for r in range(2)
        )

    def mul_c(u, v):
        return (u[0] * v[0] - u[1] * v[1], u[0] * v[1] + u[1] * v[0])

    def sum_c(it):
        re = im = 0
        for u in it:
            re += u[0]
            im += u[1]
        return (re, im)

    z, o, i_, mi, mo = (0, 0), (1, 0), (0, 1), (0, -1), (-1, 0)
    x = ((z, o), (o, z))
    y = ((z, mi), (i_, z))
    zz = ((o, z), (z, mo))
    ident = ((o, z), (z, o))
    elems = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for e in frontier:
            for g in (x, y, zz):
                p = mm(g, e)
                if p not in elems:
                    elems.append(p)
                    nxt.append(p)
        frontier = nxt
    return Group(elems, mm, [x, y, zz])


def a4():
    elems = [p for p in itertools.permutations(range(4)) if parity(p) == 0]

    def mul(p, q):
        return tuple(p[q[i]] for i in range(4))

    return Group(elems, mul, [(1, 2, 0, 3), (1, 0, 3, 2)])


def parity(p):
    seen, sign = set(), 0
    for i in range(len(p)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        sign ^= (length - 1) & 1
    return sign


def dihedral(m):
    return metacyclic(m, 2, 0, m - 1)


def catalog():
    c = cyclic
    return [
        (1, 1, "C1", c(1)),
        (2, 1, "C2", c(2)),
        (3, 1, "C3", c(3)),
        (4, 1, "C4", c(4)),
        (4, 2, "C2xC2", direct(c(2), c(2))),
        (5, 1, "C5", c(5)),
        (6, 1, "S3", dihedral(3)),
        (6, 2, "C6", c(6)),
        (7, 1, "C7", c(7)),
        (8, 1, "C8", c(8)),
        (8, 2, "C4xC2", direct(c(4), c(2))),
        (8, 3, "D8", dihedral(4)),
        (8, 4, "Q8", metacyclic(4, 2, 2, 3)),
        (8, 5, "C2xC2xC2", direct(direct(c(2), c(2)), c(2))),
        (9, 1, "C9", c(9)),
        (9, 2, "C3xC3", direct(c(3), c(3))),
        (10, 1, "D10", dihedral(5)),
        (10, 2, "C10", c(10)),
        (11, 1, "C11", c(11)),
        (12, 1, "Dic12", metacyclic(6, 2, 3, 5)),
        (12, 2, "C12", c(12)),
        (12, 3, "A4", a4()),
        (12, 4, "D12", dihedral(6)),
        (12, 5, "C6xC2", direct(c(6), c(2))),
        (13, 1, "C13", c(13)),
        (14, 1, "D14", dihedral(7)),
        (14, 2, "C14", c(14)),
        (15, 1, "C15", c(15)),
        (16, 1, "C16", c(16)),
        (16, 2, "C4xC4", direct(c(4), c(4))),
        (16, 3, "(C4xC2):C2", group_16_3()),
        (16, 4, "C4:C4", metacyclic(4, 4, 0, 3)),
        (16, 5, "C8xC2", direct(c(8), c(2))),
        (16, 6, "M16", metacyclic(8, 2, 0, 5)),
        (16, 7, "D16", dihedral(8)),
        (16, 8, "SD16", metacyclic(8, 2, 0, 3)),
        (16, 9, "Q16", metacyclic(8, 2, 4, 7)),
        (16, 10, "C4xC2xC2", direct(direct(c(4), c(2)), c(2))),
        (16, 11, "C2xD8", direct(c(2), dihedral(4))),
        (16, 12, "C2xQ8", direct(c(2), metacyclic(4, 2, 2, 3))),
        (16, 13, "C4oD8", pauli()),
        (16, 14, "C2^4", direct(direct(c(2), c(2)), direct(c(2), c(2)))),
    ]


def perm_closure(gens, n):
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                p = tuple(g[e[i]] for i in range(n))
                if p not in seen:
                    seen.add(p)
                    nxt.append(p)
        frontier = nxt
    return seen


def fingerprint(elems, n):
    def compose(p, q):
        return tuple(p[q[i]] for i in range(n))

    def inverse(p):
        inv = [0] * n
        for i, x in enumerate(p):
            inv[x] = i
        return tuple(inv)

    def order(p):
        k, q = 1, p
        while q != tuple(range(n)):
            q = compose(p, q)
            k += 1
        return k

    def derived_subgroup(h):
        comms = {compose(compose(inverse(a), inverse(b)), compose(a, b)) for a in h for b in h}
        return perm_closure(list(comms), n)

    derived = derived_subgroup(elems)
    series = [elems, derived]
    while len(series[-1]) != len(series[-2]):
        series.append(derived_subgroup(series[-1]))
    # abelianization: multiset of coset orders in G/G'
    cosets = {}
    for g in elems:
        key = min(compose(g, d) for d in derived)
        if key in cosets:
            continue
        k, q = 1, g
        while q not in derived:
            q = compose(g, q)
            k += 1
        cosets[key] = k
    abel = tuple(sorted(Counter(cosets.values()).items()))
    center = [z for z in elems if all(compose(z, g) == compose(g, z) for g in elems)]
    orders = tuple(sorted(Counter(order(p) for p in elems).items()))
    return (len(elems), abel, orders, len(series) - 2, len(center))


def cycles(perm):
    seen, out = set(), []
    for i in range(len(perm)):
        if i in seen or perm[i] == i:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(j + 1)
            j = perm[j]
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


def main():
    rows = catalog()
    counts = Counter(order for order, *_ in rows)
    expected = [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14]
    assert [counts[k] for k in range(1, 17)] == expected, counts
    prints = {}
    out = sys.stdout
    out.write("# Groups of order <= 16, one row per isomorphism class.\n")
    out.write("# order;index;label;generators (regular representation, cycle notation)\n")
    out.write("# Generated by tools/groups16.py.\n")
    for order, idx, label, g in rows:
        perms = g.perms()
        n = len(g.elements)
        elems = perm_closure([tuple(p) for p in perms], n)
        assert len(elems) == order, (label, len(elems))
        fp = fingerprint(elems, n)
        assert fp not in prints, (label, prints.get(fp))
        prints[fp] = label
        gens = ",".join(cycles(p) for p in perms)
        out.write(f"{order};{idx};{label};{gens}\n")


if __name__ == "__main__":
    main()

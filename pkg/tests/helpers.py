"""Shared fixtures-by-construction and independent oracles for the test suite.

Oracles here are deliberately written against first principles (permutation
composition, raw triple loops) so that they never share code paths with the
library operations they check.
"""

from itertools import permutations

from gcat import groups


# -- permutation oracle ------------------------------------------------------

def perm_compose(p, q):
    """(p∘q)(i) = p[q[i]]: apply q first."""
    return tuple(p[q[i]] for i in range(len(q)))


def perm_inverse(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def perm_parity(p):
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return inv % 2


def oracle_symmetric_table(n):
    """Cayley table of S_n computed directly from permutation composition."""
    elems = sorted(permutations(range(n)))
    index = {p: i for i, p in enumerate(elems)}
    table = [[index[perm_compose(p, q)] for q in elems] for p in elems]
    return elems, table


def brute_force_group_ok(table):
    """Raw triple-loop group oracle, independent of validate_group."""
    n = len(table)
    if any(len(row) != n for row in table):
        return False
    if any(not (0 <= v < n) for row in table for v in row):
        return False
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    return False
    es = [e for e in range(n) if all(table[e][x] == x and table[x][e] == x for x in range(n))]
    if len(es) != 1:
        return False
    e = es[0]
    return all(any(table[a][b] == e and table[b][a] == e for b in range(n)) for a in range(n))


# -- standard groups used across the suite -----------------------------------

def s3():
    return groups.symmetric(3)


def a4():
    return groups.alternating(4)


def sign_hom(sym):
    """Sign homomorphism from a permutation-backed symmetric group to C2."""
    c2 = groups.cyclic(2)
    return groups.GroupHom(sym, c2, [perm_parity(p) for p in sym.permutations])


def a4_klein_elements(g):
    """Element ids of the Klein four-subgroup inside a permutation-backed A4."""
    return [i for i, p in enumerate(g.permutations)
            if p == tuple(range(4)) or perm_cycle_type(p) == (2, 2)]


def perm_cycle_type(p):
    seen = [False] * len(p)
    lens = []
    for i in range(len(p)):
        if seen[i]:
            continue
        k, j = 0, i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            k += 1
        if k > 1:
            lens.append(k)
    return tuple(sorted(lens))


def a4_mod_v4_projection(g):
    """Projection A4 -> C3 collapsing the Klein subgroup, built from coset arithmetic."""
    c3 = groups.cyclic(3)
    v4 = set(a4_klein_elements(g))
    three_cycle = next(i for i, p in enumerate(g.permutations) if perm_cycle_type(p) == (3,))
    cosets = [v4,
              {g.mul(x, three_cycle) for x in v4},
              {g.mul(x, g.mul(three_cycle, three_cycle)) for x in v4}]
    mapping = [next(k for k, cs in enumerate(cosets) if x in cs) for x in g.elements]
    return groups.GroupHom(g, c3, mapping)


def twisted_a4_section(g, pi):
    """A set-section of A4 -> C3 whose failure to be a homomorphism is witnessed
    by a non-constant transformation: iota(1) a 3-cycle c, iota(2) = c^2 * (a
    Klein element)."""
    perms = g.permutations
    c = next(i for i, p in enumerate(perms) if perm_cycle_type(p) == (3,) and pi(i) == 1)
    c2 = g.mul(c, c)
    klein = next(i for i in a4_klein_elements(g) if i != g.identity)
    tw = g.mul(c2, klein)
    assert pi(tw) == 2 and tw != c2
    section = [g.identity, c, tw]
    return section

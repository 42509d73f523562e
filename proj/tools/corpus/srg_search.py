# Copyright 2026 The wlbound Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Offline search for the strongly regular graphs in data/corpus.

Orders 16 and 28 are built directly. The other orders start from seeds found
by SAT solving (optionally with a prescribed automorphism, or through a
regular two-graph on n + 1 points) and are closed under Seidel switching
descendants and Godsil-McKay switching. Results are written as graph6, one
file per order, ready for `wlbound gen --class strongly_regular --import`.

Needs numpy, networkx, pynauty and python-sat. Orders 25-29 take minutes to
hours on one core; a run that hits --time-limit reports how far it got.
The search is randomized, so a single run may miss a few classes. The
shipped files are the union of several runs, deduplicated on import.
"""

import argparse
import itertools
import random
import time

import networkx as nx
import numpy as np
import pynauty
from pysat.card import CardEnc, EncType
from pysat.formula import IDPool
from pysat.solvers import Solver

PARAMS = {16: (6, 2, 2), 25: (12, 5, 6), 26: (10, 3, 4), 28: (12, 6, 4), 29: (14, 6, 7)}
TARGET = {16: 2, 25: 15, 26: 10, 28: 4, 29: 41}

# Cycle types of the automorphisms prescribed to the SAT searches.
AUTOMORPHISMS = {
    25: [[1] * 25],
    26: [[1] * 26, [13, 13], [1, 1] + [2] * 12, [1, 1] + [3] * 8],
    29: [[1, 14, 14], [1, 7, 7, 7, 7], [1] * 5 + [3] * 8, [1] * 5 + [2] * 12,
         [1] + [2] * 14],
}
TWO_GRAPH_AUTOMORPHISMS = {29: [[5] * 6, [3] * 10, [15, 15]]}


def cert(a):
    n = len(a)
    g = pynauty.Graph(n, adjacency_dict={i: list(np.flatnonzero(a[i])) for i in range(n)})
    return pynauty.certificate(g)


def is_srg(a, k, lam, mu):
    if not (a.sum(1) == k).all():
        return False
    a2 = a.astype(np.int32) @ a.astype(np.int32)
    off = ~np.eye(len(a), dtype=bool)
    return bool((a2[a & off] == lam).all() and (a2[~a & off] == mu).all())


def switch(h, s):
    s = np.asarray(s, bool)
    out = h ^ (np.outer(s, ~s) | np.outer(~s, s))
    np.fill_diagonal(out, False)
    return out


def descendants(a):
    """Graphs obtained by isolating each vertex of the switching class of a + K1."""
    n = len(a)
    h = np.zeros((n + 1, n + 1), bool)
    h[:n, :n] = a
    out = []
    for x in range(n + 1):
        hs = switch(h, h[x].copy())
        keep = [i for i in range(n + 1) if i != x]
        out.append(hs[np.ix_(keep, keep)])
    return out


def gm_switchings(a, sizes=(4,)):
    n = len(a)
    out = []
    for s in sizes:
        for d in itertools.combinations(range(n), s):
            d = list(d)
            deg = a[np.ix_(d, d)].sum(1)
            if not (deg == deg[0]).all():
                continue
            cnt = a[:, d].sum(1)
            outside = np.ones(n, bool)
            outside[d] = False
            if not np.isin(cnt[outside], [0, s // 2, s]).all():
                continue
            half = np.flatnonzero(outside & (cnt == s // 2))
            if len(half) == 0:
                continue
            b = a.copy()
            for x in half:
                for y in d:
                    b[x, y] = b[y, x] = not a[x, y]
            out.append(b)
    return out


def explore(seeds, params, target, found, gm_sizes=(4,), deadline=None):
    """Adds everything reachable from the seeds to `found` (certificate -> graph)."""
    queue = []
    for a in seeds:
        c = cert(a)
        if c not in found:
            found[c] = a
            queue.append(a)
    while queue and len(found) < target and (deadline is None or time.time() < deadline):
        a = queue.pop()
        for b in descendants(a) + gm_switchings(a, gm_sizes):
            if is_srg(b, *params):
                c = cert(b)
                if c not in found:
                    found[c] = b
                    queue.append(b)
    return found


def perm_from_cycles(n, cycles):
    p, i = list(range(n)), 0
    for length in cycles:
        for j in range(length):
            p[i + j] = i + (j + 1) % length
        i += length
    assert i == n
    return p


def pair_orbits(n, perm):
    def orbit(u, v):
        seen = []
        while (min(u, v), max(u, v)) not in seen:
            seen.append((min(u, v), max(u, v)))
            u, v = perm[u], perm[v]
        return min(seen)
    return {(u, v): orbit(u, v) for u, v in itertools.combinations(range(n), 2)}


def solve(clauses, a, n, seed):
    s = Solver(name='cd19', bootstrap_with=clauses)
    rnd = random.Random(seed)
    s.set_phases([x if rnd.random() < 0.5 else -x for x in sorted(set(a.values()))])
    if not s.solve():
        return None
    model = {x for x in s.get_model() if x > 0}
    m = np.zeros((n, n), bool)
    for (u, v), x in a.items():
        m[u, v] = x in model
    return m


def srg_sat(n, params, cycles, seeds):
    # `seeds` is a range of solver phase seeds.
    """SAT seeds for SRG(n, k, lambda, mu) invariant under a permutation."""
    k, lam, mu = params
    pool, clauses = IDPool(), []
    orbits = pair_orbits(n, perm_from_cycles(n, cycles))
    a = {}
    for (u, v), o in orbits.items():
        a[(u, v)] = a[(v, u)] = pool.id(('a',) + o)

    def exactly(lits, bound, cond=None):
        enc = CardEnc.equals(lits=lits, bound=bound, vpool=pool, encoding=EncType.seqcounter)
        clauses.extend(cl + ([cond] if cond is not None else []) for cl in enc.clauses)

    for u in range(n):
        exactly([a[(u, v)] for v in range(n) if v != u], k)
    for (u, v), o in orbits.items():
        if o != (u, v):
            continue
        common = []
        for w in range(n):
            if w in (u, v):
                continue
            t = pool.id(('t', u, v, w))
            clauses += [[-t, a[(u, w)]], [-t, a[(v, w)]], [t, -a[(u, w)], -a[(v, w)]]]
            common.append(t)
        exactly(common, lam, cond=-a[(u, v)])
        exactly(common, mu, cond=a[(u, v)])
    out = []
    for seed in seeds:
        m = solve(clauses, a, n, seed)
        if m is None:
            break
        out.append(m)
    return out


def two_graph_sat(n, params, cycles, seeds):
    # `seeds` is a range of solver phase seeds.
    """Descendants of regular two-graphs on n + 1 points with a prescribed automorphism."""
    big = n + 1
    pool, clauses = IDPool(), []
    orbits = pair_orbits(big, perm_from_cycles(big, cycles))
    a = {}
    for (u, v), o in orbits.items():
        a[(u, v)] = a[(v, u)] = pool.id(('a',) + o)
    for (u, v), o in orbits.items():
        if o != (u, v):
            continue
        agree = []
        for w in range(big):
            if w in (u, v):
                continue
            x, p, q = pool.id(('x', u, v, w)), a[(u, w)], a[(v, w)]
            clauses += [[-x, -p, q], [-x, p, -q], [x, p, q], [x, -p, -q]]
            agree.append(x)
        # The Seidel matrix squares to n times the identity.
        enc = CardEnc.equals(lits=agree, bound=(big - 2) // 2, vpool=pool,
                             encoding=EncType.seqcounter)
        clauses += enc.clauses
    out = []
    for seed in seeds:
        h = solve(clauses, a, big, seed)
        if h is None:
            break
        for x in range(big):
            hs = switch(h, h[x].copy())
            keep = [i for i in range(big) if i != x]
            d = hs[np.ix_(keep, keep)]
            comp = ~d & ~np.eye(n, dtype=bool)
            if is_srg(d, *params):
                out.append(d)
            elif is_srg(comp, *params):
                out.append(comp)
    return out


def paley(q):
    if q == 25:
        els = [(x, y) for x in range(5) for y in range(5)]

        def mul(u, v):
            return ((u[0] * v[0] + 2 * u[1] * v[1]) % 5, (u[0] * v[1] + u[1] * v[0]) % 5)
        squares = {mul(x, x) for x in els if x != (0, 0)}
        return np.array([[i != j and ((u[0] - v[0]) % 5, (u[1] - v[1]) % 5) in squares
                          for j, v in enumerate(els)] for i, u in enumerate(els)], bool)
    squares = {(x * x) % q for x in range(1, q)}
    return np.array([[i != j and (i - j) % q in squares for j in range(q)]
                     for i in range(q)], bool)


def rook4():
    v = [(x, y) for x in range(4) for y in range(4)]
    return np.array([[p != q and (p[0] == q[0] or p[1] == q[1]) for q in v] for p in v], bool)


def shrikhande():
    v = [(x, y) for x in range(4) for y in range(4)]
    s = {(0, 1), (0, 3), (1, 0), (3, 0), (1, 1), (3, 3)}
    return np.array([[((q[0] - p[0]) % 4, (q[1] - p[1]) % 4) in s for q in v] for p in v], bool)


def triangular8():
    v = list(itertools.combinations(range(8), 2))
    return v, np.array([[p != q and len(set(p) & set(q)) == 1 for q in v] for p in v], bool)


def chang(edges):
    v, a = triangular8()
    chosen = {tuple(sorted(e)) for e in edges}
    return switch(a, [p in chosen for p in v])


def build(n, seeds, time_limit):
    if n == 16:
        return [rook4(), shrikhande()]
    if n == 28:
        octagon = [(i, (i + 1) % 8) for i in range(8)]
        triangle_pentagon = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 7), (7, 3)]
        matching = [(0, 1), (2, 3), (4, 5), (6, 7)]
        return [triangular8()[1], chang(matching), chang(octagon), chang(triangle_pentagon)]
    params = PARAMS[n]
    found = {}
    deadline = time.time() + time_limit
    batch = [] if n == 26 else [paley(n)]
    first = 0
    # Keep drawing SAT seeds until every switching class has been reached.
    while len(found) < TARGET[n] and time.time() < deadline:
        seeds_range = range(first, first + seeds)
        first += seeds
        for cycles in AUTOMORPHISMS.get(n, []):
            batch += srg_sat(n, params, cycles, seeds_range)
        for cycles in TWO_GRAPH_AUTOMORPHISMS.get(n, []):
            batch += two_graph_sat(n, params, cycles, seeds_range)
        if not batch:
            break
        explore(batch, params, TARGET[n], found,
                gm_sizes=(4, 6) if n == 29 else (4,), deadline=deadline)
        batch = []
    return list(found.values())


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument('--orders', default='16,25,26,28,29')
    parser.add_argument('--out', default='.', help='directory for srg<n>.g6')
    parser.add_argument('--seeds', type=int, default=8,
                        help='SAT runs per automorphism and round')
    parser.add_argument('--time-limit', type=float, default=3600)
    args = parser.parse_args()
    for n in map(int, args.orders.split(',')):
        graphs = build(n, args.seeds, args.time_limit)
        unique = {cert(a): a for a in graphs if is_srg(a, *PARAMS[n])}
        with open(f'{args.out}/srg{n}.g6', 'w') as out:
            for c in sorted(unique):
                g = nx.from_numpy_array(unique[c].astype(int))
                out.write(nx.to_graph6_bytes(g, header=False).decode())
        print(f'order {n}: {len(unique)} of {TARGET[n]}', flush=True)


if __name__ == '__main__':
    main()

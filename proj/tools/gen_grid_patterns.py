#!/usr/bin/env python3
# Copyright 2025 The bicirc Authors
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
"""Offline generator for the periodic grid stitching tables in src/grid_patterns.cpp.

Each grid cell is a component cycle abstracted to L labels (L=6: c0..c4 and
c_{2n-1}, with the arc c4..c_{2n-1} forced; L=4: the whole 4-cycle). Outer
labels link to the right neighbour, inner labels to the cell below. A SAT
model (pysat) picks per-class choices so the grid becomes one cycle that
contains the joining edges and keeps u_0 between its two cycle neighbours in
every bottom-row cell except the last column.

    python3 tools/gen_grid_patterns.py 6 > /tmp/p6.json
    python3 tools/gen_grid_patterns.py --emit-cpp /tmp/p6.json /tmp/p4.json
"""
import sys, json
from pysat.solvers import Cadical153
from pysat.card import CardEnc, EncType
from pysat.formula import IDPool

ABS = {6: dict(L=6, forced=[(4, 5)], HL=[0, 2, 4], VL=[1, 3, 5]),
       4: dict(L=4, forced=[], HL=[0, 2], VL=[1, 3])}
CLS = ['F', 'M0', 'M1', 'L']

def cls(x, N):
    if x == 0: return 'F'
    if x == N - 1: return 'L'
    return 'M%d' % ((x - 1) % 2)

def local_edges(ab, i, j, R, K):
    L = ab['L']; out = []
    for a in range(L): out.append((('in', a), ((i, j, a), (i, j, (a + 1) % L))))
    if j + 1 < K:
        for a in ab['HL']: out.append((('r', a), ((i, j, a), (i, j + 1, a))))
    if i + 1 < R:
        for a in ab['VL']: out.append((('d', a), ((i, j, a), (i + 1, j, a))))
    return out

def components(verts, ch):
    nb = {v: [] for v in verts}
    for a, b in ch: nb[a].append(b); nb[b].append(a)
    seen = set(); comps = []
    for v in verts:
        if v in seen: continue
        st = [v]; comp = {v}; seen.add(v)
        while st:
            x = st.pop()
            for y in nb[x]:
                if y not in seen: seen.add(y); comp.add(y); st.append(y)
        comps.append(comp)
    return comps

def solve(ab, R, K):
    L = ab['L']; pool = IDPool(); E = {}
    for i in range(R):
        for j in range(K):
            c = (cls(i, R), cls(j, K))
            for key, (x, y) in local_edges(ab, i, j, R, K):
                E[(x, y)] = pool.id((c, key))
    s = Cadical153()
    verts = [(i, j, a) for i in range(R) for j in range(K) for a in range(L)]
    inc = {v: [] for v in verts}
    for (x, y), v in E.items(): inc[x].append(v); inc[y].append(v)
    for v in verts:
        for cl in CardEnc.equals(lits=inc[v], bound=2, vpool=pool, encoding=EncType.seqcounter).clauses:
            s.add_clause(cl)
    for i in range(R):
        for j in range(K):
            for p, q in ab['forced']: s.add_clause([E[((i, j, p), (i, j, q))]])
    # joining edges of the two snake paths
    s.add_clause([E[((0, 0, 0), (0, 1, 0))]])
    alpha = 0 if (K - 1) % 2 == 1 else 2
    s.add_clause([E[((0, K - 2, alpha), (0, K - 1, alpha))]])
    # bottom-row pockets: u0 entered and left through its cell neighbours
    for j in range(K - 1):
        s.add_clause([E[((R - 1, j, L - 1), (R - 1, j, 0))]])
        s.add_clause([E[((R - 1, j, 0), (R - 1, j, 1))]])
    while True:
        if not s.solve(): return None
        model = set(l for l in s.get_model() if l > 0)
        ch = [e for e, v in E.items() if v in model]
        comps = components(verts, ch)
        if len(comps) == 1: break
        for comp in comps:
            s.add_clause(list({v for e, v in E.items() if (e[0] in comp) != (e[1] in comp)}))
    table = {}
    for rc in CLS:
        for cc in CLS:
            ins = sum(1 << a for a in range(L) if pool.obj2id.get(((rc, cc), ('in', a))) in model)
            rs = sum(1 << a for a in ab['HL'] if pool.obj2id.get(((rc, cc), ('r', a))) in model)
            ds = sum(1 << a for a in ab['VL'] if pool.obj2id.get(((rc, cc), ('d', a))) in model)
            table[(rc, cc)] = (ins, rs, ds)
    return table

def check(ab, table, R, K):
    L = ab['L']
    verts = [(i, j, a) for i in range(R) for j in range(K) for a in range(L)]
    ch = []
    for i in range(R):
        for j in range(K):
            ins, rs, ds = table[(cls(i, R), cls(j, K))]
            for a in range(L):
                if ins >> a & 1: ch.append(((i, j, a), (i, j, (a + 1) % L)))
            for a in ab['HL']:
                if rs >> a & 1:
                    if j + 1 >= K: return False
                    ch.append(((i, j, a), (i, j + 1, a)))
            for a in ab['VL']:
                if ds >> a & 1:
                    if i + 1 >= R: return False
                    ch.append(((i, j, a), (i + 1, j, a)))
    deg = {v: 0 for v in verts}
    for a, b in ch: deg[a] += 1; deg[b] += 1
    if any(d != 2 for d in deg.values()): return False
    alpha = 0 if (K - 1) % 2 == 1 else 2
    chs = set(ch)
    if ((0, 0, 0), (0, 1, 0)) not in chs: return False
    if ((0, K - 2, alpha), (0, K - 1, alpha)) not in chs: return False
    for j in range(K - 1):
        if ((R - 1, j, L - 1), (R - 1, j, 0)) not in chs and ((R - 1, j, 0), (R - 1, j, L - 1)) not in chs: return False
        if ((R - 1, j, 0), (R - 1, j, 1)) not in chs: return False
    return len(components(verts, ch)) == 1

def emit_cpp(p6, p4):
    order = ['F', 'M0', 'M1', 'L']
    out = []
    for name, pats in (('kPattern6', p6), ('kPattern4', p4)):
        out.append('const GridPattern %s[4] = {' % name)
        for p in pats:
            rows = []
            for rc in order:
                rows.append('{' + ', '.join('{%d, %d, %d}' % tuple(p['table'][rc + ':' + cc]) for cc in order) + '}')
            out.append('    {%d, %d, {%s}},' % (p['train'][0], p['train'][1], ',\n       '.join(rows)))
        out.append('};')
    return '\n'.join(out)


if __name__ == '__main__':
    if sys.argv[1] == '--emit-cpp':
        print(emit_cpp(json.load(open(sys.argv[2])), json.load(open(sys.argv[3]))))
        sys.exit(0)
    Lsel = int(sys.argv[1]); ab = ABS[Lsel]
    train = [(6, 6), (6, 7), (7, 6), (7, 7), (2, 6), (2, 7), (6, 2), (7, 2),
             (3, 6), (3, 7), (6, 3), (7, 3), (2, 2), (2, 3), (3, 2), (3, 3)]
    pats = []
    for R0, K0 in train:
        t = solve(ab, R0, K0)
        print('train', R0, K0, 'ok' if t else 'UNSAT', file=sys.stderr)
        if t: pats.append(((R0, K0), t))
    N = int(sys.argv[2]) if len(sys.argv) > 2 else 24
    used = set(); miss = []
    for R in range(2, N):
        for K in range(2, N):
            for idx, (_, t) in enumerate(pats):
                if check(ab, t, R, K): used.add(idx); break
            else: miss.append((R, K))
    print('missing', miss, file=sys.stderr)
    keep = sorted(used)
    print('used', [pats[i][0] for i in keep], file=sys.stderr)
    json.dump([{'train': pats[i][0], 'table': {a + ':' + b: v for (a, b), v in pats[i][1].items()}} for i in keep],
              sys.stdout)

"""Brute-force cohomology dimensions for Leibniz, pre-Lie and 3-Lie fixtures.

Independent of the C++ library. Cochains are functions on ordered basis
tuples; skew blocks are parametrised by increasing tuples and the value on
any other tuple is recovered by sorting with sign. Arguments are vectors
(dicts index -> Fraction) and every term is expanded multilinearly.
Ranks use exact Fraction elimination.
Run: python3 tests/oracle/complex_oracle.py
"""
from fractions import Fraction
from itertools import combinations, product


def rank(rows):
    pivots = {}
    r = 0
    for row in rows:
        row = {k: v for k, v in row.items() if v}
        while row:
            lead = min(row)
            if lead not in pivots:
                pivots[lead] = row
                r += 1
                break
            p = pivots[lead]
            s = row[lead] / p[lead]
            for k, v in p.items():
                nv = row.get(k, 0) - s * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return r


def sort_sign(t):
    t = list(t)
    if len(set(t)) < len(t):
        return None, 0
    s = 1
    for i in range(len(t)):
        for j in range(len(t) - 1 - i):
            if t[j] > t[j + 1]:
                t[j], t[j + 1] = t[j + 1], t[j]
                s = -s
    return tuple(t), s


def vec(i):
    return {i: Fraction(1)}


def add(u, v, s=1):
    out = dict(u)
    for k, x in v.items():
        out[k] = out.get(k, 0) + s * x
    return {k: x for k, x in out.items() if x}


def scale(u, s):
    return {k: s * x for k, x in u.items() if s * x}


def apply_tensor(c, vs, d):
    """Multilinear operation with constants c[(i1..ik, out)] applied to vectors."""
    out = {}
    for combo in product(*[list(v.items()) for v in vs]):
        coeff = Fraction(1)
        idx = []
        for i, x in combo:
            coeff *= x
            idx.append(i)
        for k in range(d):
            val = c.get(tuple(idx) + (k,), 0)
            if val:
                out[k] = out.get(k, 0) + coeff * val
    return {k: x for k, x in out.items() if x}


class Cochain:
    """Basis cochain: canonical tuple `key` maps to e_out, elsewhere by block symmetry."""

    def __init__(self, blocks, key, out):
        self.blocks, self.key, self.out = blocks, key, out

    def basic(self, idx):
        pos, canon, sign = 0, [], 1
        for b in self.blocks:
            part = idx[pos:pos + b]
            if b > 1:
                part, s = sort_sign(part)
                if part is None:
                    return 0
                sign *= s
            canon.extend(part)
            pos += b
        return sign if tuple(canon) == self.key else 0

    def __call__(self, vs):
        out = Fraction(0)
        for combo in product(*[list(v.items()) for v in vs]):
            coeff = Fraction(1)
            idx = []
            for i, x in combo:
                coeff *= x
                idx.append(i)
            s = self.basic(idx)
            if s:
                out += coeff * s
        return scale(vec(self.out), out) if out else {}


def canonical_tuples(blocks, d):
    per_block = [list(combinations(range(d), b)) if b > 1 else [(i,) for i in range(d)] for b in blocks]
    return [sum(p, ()) for p in product(*per_block)]


def dims(blocks_of, d_op, d, dv, degrees):
    """Ranks of d on canonical tuples; returns dim H^n for n in degrees."""
    ranks, cdim = {}, {}
    for n in list(degrees) + [degrees[-1] + 1]:
        cdim[n] = len(canonical_tuples(blocks_of(n), d)) * dv
    for n in [degrees[0] - 1] + list(degrees):
        if n < degrees[0]:
            ranks[n] = 0
            continue
        src = [Cochain(blocks_of(n), t, o) for t in canonical_tuples(blocks_of(n), d) for o in range(dv)]
        dst = canonical_tuples(blocks_of(n + 1), d)
        rows = []
        for j, f in enumerate(src):
            col = {}
            for r, t in enumerate(dst):
                v = d_op(f, n, [vec(i) for i in t])
                for k, x in v.items():
                    col[r * dv + k] = x
            rows.append(col)
        ranks[n] = rank(rows)
    return [cdim[n] - ranks[n] - ranks[n - 1] for n in degrees]


def leibniz_regular(c, d, top):
    br = lambda x, y: apply_tensor(c, [x, y], d)

    def d_op(f, n, xs):
        out = {}
        for i in range(n):
            out = add(out, br(xs[i], f(xs[:i] + xs[i + 1:])), (-1) ** i)
        out = add(out, br(f(xs[:n]), xs[n]), (-1) ** (n + 1))
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                args = xs[:i] + xs[i + 1:j] + [br(xs[i], xs[j])] + xs[j + 1:]
                out = add(out, f(args), (-1) ** (i + 1))
        return out

    return dims(lambda n: [1] * n, d_op, d, d, list(range(top + 1)))


def prelie_regular(c, d, top):
    mul = lambda x, y: apply_tensor(c, [x, y], d)
    com = lambda x, y: add(mul(x, y), mul(y, x), -1)

    def d_op(f, n, xs):
        out = {}
        for i in range(n):
            sgn = (-1) ** i
            rest = xs[:i] + xs[i + 1:]
            out = add(out, mul(xs[i], f(rest)), sgn)
            out = add(out, mul(f(xs[:i] + xs[i + 1:n] + [xs[i]]), xs[n]), sgn)
            out = add(out, f(xs[:i] + xs[i + 1:n] + [mul(xs[i], xs[n])]), -sgn)
        for i in range(n):
            for j in range(i + 1, n):
                rest = [x for t, x in enumerate(xs) if t not in (i, j)]
                out = add(out, f([com(xs[i], xs[j])] + rest), (-1) ** (i + j))
        return out

    return dims(lambda n: [n - 1, 1] if n > 1 else [1], d_op, d, d, list(range(1, top + 1)))


def threelie_adjoint(c, d, top):
    br = lambda x, y, z: apply_tensor(c, [x, y, z], d)

    def d_op(f, n, xs):
        # dM f evaluated on (X_1..X_n, z), X_j = (x_j, y_j) flattened
        X = [(xs[2 * j], xs[2 * j + 1]) for j in range(n)]
        z = xs[2 * n]
        flat = lambda pairs: [v for p in pairs for v in p]
        out = {}
        for j in range(n):
            for k in range(j + 1, n):
                xj, yj = X[j]
                xk, yk = X[k]
                for pair in ((br(xj, yj, xk), yk), (xk, br(xj, yj, yk))):
                    pairs = X[:j] + X[j + 1:k] + [pair] + X[k + 1:]
                    out = add(out, f(flat(pairs) + [z]), (-1) ** (j + 1))
        for j in range(n):
            rest = X[:j] + X[j + 1:]
            out = add(out, f(flat(rest) + [br(X[j][0], X[j][1], z)]), (-1) ** (j + 1))
            out = add(out, br(X[j][0], X[j][1], f(flat(rest) + [z])), (-1) ** j)
        xn, yn = X[n - 1]
        head = flat(X[:n - 1])
        out = add(out, br(yn, z, f(head + [xn])), (-1) ** (n + 1))
        out = add(out, br(z, xn, f(head + [yn])), (-1) ** (n + 1))
        return out

    return dims(lambda n: [2] * (n - 1) + [1], d_op, d, d, list(range(1, top + 1)))


def skew3(entries):
    c = {}
    for (i, j, k), out in entries.items():
        for p in ((i, j, k), (j, k, i), (k, i, j)):
            for o, v in out.items():
                c[p + (o,)] = v
        for p in ((j, i, k), (i, k, j), (k, j, i)):
            for o, v in out.items():
                c[p + (o,)] = -v
    return c


if __name__ == "__main__":
    leib = {(1, 1, 0): 1}
    print("leibniz [e2,e2]=e1 regular H^0..H^3:", leibniz_regular(leib, 2, 3))
    aff1_leib = {(0, 1, 0): 1, (1, 0, 0): -1}
    print("aff(1) as leibniz regular H^0..H^3:", leibniz_regular(aff1_leib, 2, 3))
    pre = {(1, 0, 0): 1}
    print("prelie e2.e1=e1 regular H^1..H^3:", prelie_regular(pre, 2, 3))
    t = skew3({(0, 1, 2): {0: 1}})
    print("3lie [e1,e2,e3]=e1 adjoint H^1..H^3:", threelie_adjoint(t, 3, 3))
    a4 = skew3({(1, 2, 3): {0: 1}, (0, 2, 3): {1: 1}, (0, 1, 3): {2: 1}, (0, 1, 2): {3: 1}})
    print("3lie A4 adjoint H^1..H^2:", threelie_adjoint(a4, 4, 2))

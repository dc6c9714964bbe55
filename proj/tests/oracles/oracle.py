"""Independent letter-level oracle used to freeze expected values in the C++ tests.

Words are lists of signed ints: +k is generator k, -k its inverse (k >= 1).
Nothing here shares code or representation with the C++ library.
"""
import itertools


def red(w):
    out = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def inv(w):
    return [-x for x in reversed(w)]


def comm(x, y):
    return red(inv(x) + inv(y) + x + y)


def pw(w, n):
    return red((w if n > 0 else inv(w)) * abs(n))


# --- Magnus: dict monomial-tuple -> int, truncated
def mul(p, q, cap):
    r = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            if len(m1) + len(m2) <= cap:
                m = m1 + m2
                r[m] = r.get(m, 0) + c1 * c2
    return {m: c for m, c in r.items() if c}


def letter_series(x, cap):
    g = abs(x)
    if x > 0:
        return {(): 1, (g,): 1}
    return {tuple([g] * k): (-1) ** k for k in range(cap + 1)}


def magnus(w, cap):
    s = {(): 1}
    for x in w:
        s = mul(s, letter_series(x, cap), cap)
    return s


def lcs(w, cap):
    s = magnus(w, cap)
    degs = [len(m) for m in s if len(m) > 0]
    return min(degs) if degs else None


# --- Wicks brute force
def is_commutator(w):
    w = red(w)
    if not w:
        return True
    # cyclic reduce
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    n = len(w)
    if n % 2:
        return False
    h = n // 2
    for r in range(n):
        u = w[r:] + w[:r]
        for p in range(h + 1):
            for q in range(h + 1 - p):
                A, B, C = u[:p], u[p:p + q], u[p + q:h]
                if A + B + C + inv(A) + inv(B) + inv(C) == u:
                    return True
    return False


# --- Stallings folding, naive fixpoint on edge set
def stallings(gens):
    edges = set()
    nv = 1
    for g in gens:
        cur = 0
        for i, x in enumerate(g):
            nxt = 0 if i == len(g) - 1 else nv
            if nxt:
                nv += 1
            if x > 0:
                edges.add((cur, x, nxt))
            else:
                edges.add((nxt, -x, cur))
            cur = nxt
    changed = True
    while changed:
        changed = False
        es = sorted(edges)
        for e1, e2 in itertools.combinations(es, 2):
            a = b = None
            if e1[0] == e2[0] and e1[1] == e2[1] and e1[2] != e2[2]:
                a, b = e1[2], e2[2]
            elif e1[2] == e2[2] and e1[1] == e2[1] and e1[0] != e2[0]:
                a, b = e1[0], e2[0]
            if a is not None:
                keep, drop = min(a, b), max(a, b)
                edges = {(keep if u == drop else u, l, keep if v == drop else v) for u, l, v in edges}
                changed = True
                break
    # trim
    while True:
        deg = {}
        for u, l, v in edges:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        leaves = [v for v, d in deg.items() if d == 1 and v != 0]
        if not leaves:
            break
        edges = {e for e in edges if e[0] not in leaves and e[2] not in leaves}
    verts = {0} | {u for u, _, _ in edges} | {v for _, _, v in edges}
    return len(verts), len(edges)


def mat_mul(x, y):
    return [[x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]],
            [x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]]]


def weight(w, part_of, b):
    """Syllables of a letter list; count syllables equal to b / b^-1."""
    syl = []
    for x in w:
        if syl and part_of[abs(x)] == part_of[abs(syl[-1][-1])]:
            syl[-1].append(x)
        else:
            syl.append([x])
    return sum(1 for s in syl if s == b) - sum(1 for s in syl if s == inv(b))


if __name__ == "__main__":
    a, b = [1], [2]
    ba = [[1, 1], [0, 1]]
    bb = [[1, 0], [1, 1]]
    ai = [[1, -1], [0, 1]]
    bi = [[1, 0], [-1, 1]]
    print("eval [a,b]:", mat_mul(mat_mul(mat_mul(ai, bi), ba), bb))
    print("magnus [a,b] cap2:", magnus(comm(a, b), 2))
    print("lcs [a,b]:", lcs(comm(a, b), 4), "lcs [[a,b],b]:", lcs(comm(comm(a, b), b), 4))
    print("wicks [a,b]^2:", is_commutator(pw(comm(a, b), 2)), "[a,b]:", is_commutator(comm(a, b)))
    print("ab,ba:", comm(a + b, b + a))
    part = {1: 'A', 2: 'B'}
    print("w_b([a,b]):", weight(comm(a, b), part, [2]))
    for L in (1, 5, 60):
        w = pw(comm(a + b, b + a), L)
        wt = weight(w, part, [2])
        print("sup L", L, wt, -(-(abs(wt) + 3) // 12))
    print("stallings [a,b]:", stallings([comm(a, b)]))
    print("stallings [a,b],[a2,b2]:", stallings([comm(a, b), comm(a * 2, b * 2)]))
    for N in (1, 2, 3):
        ks = [k for k in range(-N, N + 1) if k]
        gens = [comm(pw(a, n), pw(b, m)) for n in ks for m in ks]
        v, e = stallings(gens)
        print("stallings N", N, "V", v, "E", e, "rank", e - v + 1)
    # tower
    x1, x2, x3, x4 = [1], [2], [3], [4]
    img = {1: comm(x1, x2), 2: comm(x1 * 2, x2 * 2), 3: comm(x3, x4), 4: comm(x3 * 2, x4 * 2)}

    def sub(w):
        out = []
        for x in w:
            out += img[x] if x > 0 else inv(img[-x])
        return red(out)

    cur = {i: [i] for i in range(1, 5)}
    for n in range(1, 5):
        if n > 1:
            cur = {i: sub(cur[i]) for i in range(1, 5)}
        print("tower n", n, "len", len(cur[1]), len(cur[3]), "lcs", lcs(cur[1], 8), lcs(cur[3], 8))
        if n == 3:
            print("tower (3,1):", cur[1])
    print("[a,b][a2,b2] wicks:", is_commutator(comm(a, b) + comm(a * 2, b * 2)))

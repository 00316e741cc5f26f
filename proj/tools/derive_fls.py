#!/usr/bin/env python3
"""Derive the structure constants of the solvable catalog entry 'fls'.

The algebra is the Lie algebra of the simply connected solvable matrix group

        [ exp(t)   0       x exp(t)  0          0   y1 ]
        [ 0        exp(-t) 0         x exp(-t)  0   y2 ]
        [ 0        0       exp(t)    0          0   z1 ]
        [ 0        0       0         exp(-t)    0   z2 ]
        [ 0        0       0         0          1   t  ]
        [ 0        0       0         0          0   1  ]

parameterized by (t, x, y1, y2, z1, z2). Differentiating the one-parameter
subgroups at the identity gives a basis of the Lie algebra; matrix
commutators give the brackets, and the generator differentials follow by
duality (d e^k = -sum_{i<j} c^k_ij e^i e^j).

Basis order: e1=d/dy1, e2=d/dy2, e3=d/dz1, e4=d/dz2, e5=d/dx, e6=d/dt.

Usage:
    derive_fls.py                  print brackets and the differential tuple
    derive_fls.py --check FILE    exit 0 iff FILE's 'fls' entry matches
"""

import re
import sys

try:
    import sympy as sp
except ImportError:
    print("sympy not available; skipping", file=sys.stderr)
    sys.exit(77)


def lie_algebra_basis():
    t, x, y1, y2, z1, z2 = sp.symbols("t x y1 y2 z1 z2")
    params = [t, x, y1, y2, z1, z2]
    M = sp.Matrix(
        [
            [sp.exp(t), 0, x * sp.exp(t), 0, 0, y1],
            [0, sp.exp(-t), 0, x * sp.exp(-t), 0, y2],
            [0, 0, sp.exp(t), 0, 0, z1],
            [0, 0, 0, sp.exp(-t), 0, z2],
            [0, 0, 0, 0, 1, t],
            [0, 0, 0, 0, 0, 1],
        ]
    )
    at_identity = {p: 0 for p in params}
    tangent = {p: sp.diff(M, p).subs(at_identity) for p in params}
    order = [y1, y2, z1, z2, x, t]
    return [tangent[p] for p in order]


def coords(basis, A):
    """Coordinates of matrix A in the span of the basis matrices."""
    flat = sp.Matrix([A[i, j] for i in range(6) for j in range(6)])
    B = sp.Matrix([[b[i, j] for b in basis] for i in range(6) for j in range(6)])
    sol = B.solve_least_squares(flat)
    assert sp.simplify(B * sol - flat) == sp.zeros(36, 1), "not in the span"
    return [sp.nsimplify(v) for v in sol]


def structure_constants(basis):
    c = {}
    for i in range(6):
        for j in range(i + 1, 6):
            for k, v in enumerate(coords(basis, basis[i] * basis[j] - basis[j] * basis[i])):
                if v != 0:
                    c[(i + 1, j + 1, k + 1)] = v
    return c


def differential_tuple(c):
    slots = []
    for k in range(1, 7):
        terms = []
        for (i, j, kk), v in sorted(c.items()):
            if kk != k:
                continue
            coeff = -v
            s = "+" if coeff > 0 else "-"
            mag = abs(coeff)
            body = f"{mag}*{i}{j}" if mag != 1 else f"{i}{j}"
            terms.append((s, body))
        if not terms:
            slots.append("0")
        else:
            text = "".join((s if not (n == 0 and s == "+") else "") + body
                           for n, (s, body) in enumerate(terms))
            slots.append(text)
    return "(" + ",".join(slots) + ")"


def jacobi_ok(c):
    def bracket(i, j):
        out = {}
        if i == j:
            return out
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        for (a, b, k), v in c.items():
            if (a, b) == (i, j):
                out[k] = sign * v
        return out

    for i in range(1, 7):
        for j in range(i + 1, 7):
            for k in range(j + 1, 7):
                acc = {}
                for (a, b, d) in ((i, j, k), (j, k, i), (k, i, j)):
                    for m, v in bracket(a, b).items():
                        for q, w in bracket(m, d).items():
                            acc[q] = acc.get(q, 0) + v * w
                if any(v != 0 for v in acc.values()):
                    return False
    return True


def canonical(tuple_text):
    return re.sub(r"\s+", "", tuple_text)


def main():
    basis = lie_algebra_basis()
    c = structure_constants(basis)
    assert jacobi_ok(c), "derived constants violate the Jacobi identity"
    tup = differential_tuple(c)

    if len(sys.argv) >= 3 and sys.argv[1] == "--check":
        path = sys.argv[2]
        with open(path, encoding="utf-8") as f:
            for line in f:
                line = line.split("#", 1)[0].strip()
                if not line.startswith("fls"):
                    continue
                m = re.search(r":\s*(\([^)]*\))", line)
                if m and canonical(m.group(1)) == canonical(tup):
                    print(f"fls entry matches the derivation: {tup}")
                    return 0
                print(f"fls entry MISMATCH: derived {tup}, file has {m.group(1) if m else '?'}")
                return 1
        print("no fls entry found", file=sys.stderr)
        return 1

    print("nonzero brackets [e_i, e_j]:")
    for (i, j, k), v in sorted(c.items()):
        print(f"  [e{i},e{j}] = {'+' if v > 0 else '-'}{abs(v)}*e{k}")
    print(f"differential tuple: {tup}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

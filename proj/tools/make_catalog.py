"""Regenerates data/algebras/*.json from matrix realizations."""
import json
import os
from fractions import Fraction as Fr

import sympy as sp


def E(n, i, j):
    m = sp.zeros(n, n)
    m[i, j] = 1
    return m


def supercomm(x, y, px, py):
    return x * y - (-1) ** (px * py) * y * x


def build(name, mats, parities, labels, parity_of_index, form_scale, triple, kind):
    n = len(mats)
    # coordinates via least squares on flattened matrices
    basis = sp.Matrix.hstack(*[m.reshape(m.rows * m.cols, 1) for m in mats])

    def coords(m):
        v = m.reshape(m.rows * m.cols, 1)
        sol = (basis.T * basis).inv() * basis.T * v
        assert basis * sol == v, "not in span"
        return [sp.nsimplify(c) for c in sol]

    def sdiag():
        size = mats[0].rows
        return sp.diag(*[(-1) ** parity_of_index[i] for i in range(size)])

    def str_(m):
        return (sdiag() * m).trace()

    br = []
    for i in range(n):
        for j in range(n):
            c = coords(supercomm(mats[i], mats[j], parities[i], parities[j]))
            cs = [[l, str(c[l])] for l in range(n) if c[l] != 0]
            if cs:
                br.append({"i": i, "j": j, "coeffs": cs})
    form = []
    for i in range(n):
        for j in range(n):
            v = form_scale * str_(mats[i] * mats[j])
            if v != 0:
                form.append({"i": i, "j": j, "value": str(sp.nsimplify(v))})
    trip = {}
    for key, m in triple.items():
        c = coords(m)
        trip[key] = [[labels[l], str(c[l])] for l in range(n) if c[l] != 0]
    doc = {
        "name": name,
        "basis": [{"label": labels[i], "parity": parities[i]} for i in range(n)],
        "brackets": br,
        "form": form,
        kind: trip,
    }
    return doc


out = os.path.join(os.path.dirname(__file__), "..", "data", "algebras")
docs = {}

# sl2
e, h, f = E(2, 0, 1), E(2, 0, 0) - E(2, 1, 1), E(2, 1, 0)
docs["sl2"] = build("sl2", [e, h, f], [0, 0, 0], ["E", "H", "F"], [0, 0], 1,
                    {"E": e, "H": h, "F": f}, "sl2")

# sl3 basis
def sl3(name, triple, scale):
    mats = [E(3, 0, 1), E(3, 1, 2), E(3, 0, 2), E(3, 0, 0) - E(3, 1, 1), E(3, 1, 1) - E(3, 2, 2),
            E(3, 1, 0), E(3, 2, 1), E(3, 2, 0)]
    labels = ["E12", "E23", "E13", "h1", "h2", "E21", "E32", "E31"]
    return build(name, mats, [0] * 8, labels, [0, 0, 0], scale, triple, "sl2")

docs["sl3-principal"] = sl3("sl3-principal",
                            {"E": E(3, 0, 1) + E(3, 1, 2), "H": sp.diag(2, 0, -2),
                             "F": 2 * E(3, 1, 0) + 2 * E(3, 2, 1)}, sp.Rational(1, 4))
docs["sl3-minimal"] = sl3("sl3-minimal",
                          {"E": E(3, 0, 2), "H": sp.diag(1, 0, -1), "F": E(3, 2, 0)}, 1)

# osp(1|2) as 3x3 supermatrices with index parities (0,1,0)... use the (1|2) realization:
# even indices 1,2 (sl2 block), odd index 0.
pidx = [1, 0, 0]
Ee, He, Fe = E(3, 1, 2), E(3, 1, 1) - E(3, 2, 2), E(3, 2, 1)
eo = E(3, 0, 2) + E(3, 1, 0)
fo = E(3, 0, 1) - E(3, 2, 0)
# normalise to the required relations
def check_osp(Ee, eo, He, fo, Fe, pidx):
    sc = lambda x, y, a, b: supercomm(x, y, a, b)
    return {
        "[e,e]=2E": sc(eo, eo, 1, 1) == 2 * Ee,
        "[f,f]=-2F": sc(fo, fo, 1, 1) == -2 * Fe,
        "[e,f]=-H": sc(eo, fo, 1, 1) == -He,
        "[H,e]=e": sc(He, eo, 0, 1) == eo,
        "[H,f]=-f": sc(He, fo, 0, 1) == -fo,
        "[F,e]=f": sc(Fe, eo, 0, 1) == fo,
        "[E,f]=e": sc(Ee, fo, 0, 1) == eo,
    }
# search signs/scales for a consistent realization
import itertools
found = None
for a, b, c2, d in itertools.product([1, -1, sp.Rational(1, 2), -sp.Rational(1, 2), 2, -2], repeat=4):
    eo = a * E(3, 0, 2) + b * E(3, 1, 0)
    fo = c2 * E(3, 0, 1) + d * E(3, 2, 0)
    if all(check_osp(Ee, eo, He, fo, Fe, pidx).values()):
        found = (eo, fo)
        break
assert found, "no osp realization"
eo, fo = found
docs["osp12"] = build("osp12", [Ee, eo, He, fo, Fe], [0, 1, 0, 1, 0], ["E", "e", "H", "f", "F"], pidx, None or 1,
                      {"E": Ee, "e": eo, "H": He, "f": fo, "F": Fe}, "osp")

# sl(2|1) with index parities (0,1,0)
pidx = [0, 1, 0]
mats = [E(3, 0, 1), E(3, 1, 2), E(3, 0, 2), E(3, 0, 0) + E(3, 1, 1), E(3, 1, 1) + E(3, 2, 2),
        E(3, 1, 0), E(3, 2, 1), E(3, 2, 0)]
labels = ["E12", "E23", "E13", "h1", "h2", "E21", "E32", "E31"]
par = [1, 1, 0, 0, 0, 1, 1, 0]
eo = E(3, 0, 1) + E(3, 1, 2)
fo = -E(3, 1, 0) + E(3, 2, 1)
Ee, Fe, He = E(3, 0, 2), E(3, 2, 0), E(3, 0, 0) - E(3, 2, 2)
assert all(check_osp(Ee, eo, He, fo, Fe, pidx).values())
docs["sl21"] = build("sl21", mats, par, labels, pidx, 1, {"E": Ee, "e": eo, "H": He, "f": fo, "F": Fe}, "osp")

for name, doc in docs.items():
    with open(os.path.join(out, name + ".json"), "w") as fh:
        json.dump(doc, fh, indent=1, ensure_ascii=False)
        fh.write("\n")
    print(name, len(doc["brackets"]), "brackets")

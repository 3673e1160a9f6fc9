#!/usr/bin/env python3
"""Derive the B_q(SL2) rewrite rules from the presented relations.

Relations (generators a < b < c < d, deg-lex order):
    ba = q^2 ab,  ca = q^-2 ac,  da = ad,  bc = cb + (1 - q^-2) a(d - a),
    db = bd + (1 - q^-2) ab,  cd = dc + (1 - q^-2) ca,  ad - q^2 cb = 1.

Each relation is solved for its largest word; rules whose right-hand side
still contains a leading word are reduced by the others. With --check the
derived rules are also verified: every relation reduces to 0 and the
overlap ambiguities of degree 3 resolve.

Output is one rule per line in the polynomial text format used by qskein,
with v = q^(1/4): e.g. "b.a -> 1*v^8 * a.b".
"""

import argparse
import itertools
import sys

import sympy as sp

q = sp.symbols("q")
LETTERS = "abcd"


def key(w):
    return (len(w), [LETTERS.index(x) for x in w])


def poly(*terms):
    out = {}
    for c, w in terms:
        out[w] = sp.simplify(out.get(w, 0) + c)
    return {w: c for w, c in out.items() if c != 0}


def add(p, r, s=1):
    out = dict(p)
    for w, c in r.items():
        out[w] = sp.simplify(out.get(w, 0) + s * c)
        if out[w] == 0:
            del out[w]
    return out


def mul(p, r):
    out = {}
    for (w1, c1), (w2, c2) in itertools.product(p.items(), r.items()):
        out = add(out, {w1 + w2: c1 * c2})
    return out


def lead(p):
    return max(p, key=key)


def presented():
    one = ""
    return {
        "ba = q^2 ab": poly((1, "ba"), (-q**2, "ab")),
        "ca = q^-2 ac": poly((1, "ca"), (-q**-2, "ac")),
        "da = ad": poly((1, "da"), (-1, "ad")),
        "bc = cb + (1-q^-2) a(d-a)": poly((1, "bc"), (-1, "cb"), (-(1 - q**-2), "ad"), ((1 - q**-2), "aa")),
        "db = bd + (1-q^-2) ab": poly((1, "db"), (-1, "bd"), (-(1 - q**-2), "ab")),
        "cd = dc + (1-q^-2) ca": poly((1, "cd"), (-1, "dc"), (-(1 - q**-2), "ca")),
        "ad - q^2 cb = 1": poly((1, "ad"), (-q**2, "cb"), (-1, one)),
    }


def reduce(p, rules):
    p = dict(p)
    while True:
        for w in sorted(p, key=key, reverse=True):
            for lw, rhs in rules.items():
                i = w.find(lw)
                if i >= 0:
                    c = p.pop(w)
                    p = add(p, mul(mul({w[:i]: c}, rhs), {w[i + len(lw):]: 1}))
                    break
            else:
                continue
            break
        else:
            return p


def derive():
    rels = list(presented().values())
    rules = {}
    changed = True
    while changed:
        changed = False
        for r in rels:
            r = reduce(r, rules)
            if not r:
                continue
            lw = lead(r)
            c = r[lw]
            rhs = {w: sp.simplify(-x / c) for w, x in r.items() if w != lw}
            rules[lw] = rhs
            changed = True
        # inter-reduce right-hand sides
        for lw in list(rules):
            others = {k: v for k, v in rules.items() if k != lw}
            rules[lw] = reduce(rules[lw], others)
        rels = [reduce(r, rules) for r in rels]
        rels = [r for r in rels if r]
    return rules


def v_text(c):
    """Render a Laurent polynomial in q as the v = q^(1/4) text format."""
    e = sp.expand(c)
    terms = sp.Poly(sp.expand(e * q**16), q).terms()
    parts = []
    for (k,), coef in sorted(terms, key=lambda t: -t[0][0]):
        exp = 4 * (k - 16)
        parts.append(f"{coef}" if exp == 0 else f"{coef}*v^{exp}")
    return parts[0] if len(parts) == 1 else "(" + " + ".join(parts) + ")"


def word_text(w):
    return ".".join(w) if w else "1"


def render(lw, rhs):
    terms = [f"{v_text(c)} * {word_text(w)}" for w, c in sorted(rhs.items(), key=lambda t: key(t[0]), reverse=True)]
    return f"{word_text(lw)} -> " + " + ".join(terms)


def check(rules):
    ok = True
    for name, r in presented().items():
        if reduce(r, rules):
            print(f"relation {name} does not reduce to 0", file=sys.stderr)
            ok = False
    for w in map("".join, itertools.product(LETTERS, repeat=3)):
        a = reduce({w: 1}, {k: v for k, v in rules.items()})
        # reduce starting from the rightmost redex instead
        p = {w: 1}
        for lw, rhs in rules.items():
            i = w.rfind(lw)
            if i >= 0:
                p = mul(mul({w[:i]: 1}, rhs), {w[i + len(lw):]: 1})
                break
        b = reduce(p, rules)
        if add(a, b, -1):
            print(f"ambiguity on {word_text(w)} does not resolve", file=sys.stderr)
            ok = False
    return ok


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--check", action="store_true", help="verify relations and degree-3 overlaps")
    args = ap.parse_args()
    rules = derive()
    for lw in sorted(rules, key=key, reverse=True):
        print(render(lw, rules[lw]))
    if args.check and not check(rules):
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

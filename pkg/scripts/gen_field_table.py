"""Regenerate src/brc/_fieldtable.py.

For every even w in [8, 128]: the numerically smallest irreducible polynomial
of degree w over GF(2), and the smallest-valued primitive element of the
resulting field.  Needs sympy (only for factoring 2^w - 1).

    python scripts/gen_field_table.py > src/brc/_fieldtable.py
"""
from sympy import factorint

from brc.gf import is_irreducible, poly_mulmod


def _pow(a, e, f):
    r = 1
    while e:
        if e & 1:
            r = poly_mulmod(r, a, f)
        a = poly_mulmod(a, a, f)
        e >>= 1
    return r


def main():
    print('"""Generated by scripts/gen_field_table.py -- do not edit."""')
    print()
    print("# w -> (reduction polynomial incl. x^w, smallest primitive element)")
    print("FIELD_TABLE = {")
    for w in range(8, 129, 2):
        f = (1 << w) | 1
        while not is_irreducible(f):
            f += 2
        order = (1 << w) - 1
        primes = list(factorint(order))
        a = 2
        while any(_pow(a, order // p, f) == 1 for p in primes):
            a += 1
        print(f"    {w}: ({f:#x}, {a}),")
    print("}")


if __name__ == "__main__":
    main()

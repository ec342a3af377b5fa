"""Diagonal distinguished derivations of the standard filiform algebras.

For each n the filiform algebra L_n ([e1,ei] = e_{i+1}) has a unique diagonal
derivation N with Tr(ND) = Tr(D) for every derivation D.  Its first two
eigenvalues follow a closed form in n; the rest are d1*k + d2.
"""

from nicebasis import fixtures, fmt, ln_closed_form, pre_einstein_nice


def main():
    print("  n  d1            d2            spectrum")
    for n in range(3, 13):
        pe = pre_einstein_nice(fixtures.standard_filiform(n))
        d1, d2 = ln_closed_form(n)
        diag = [pe.matrix[i, i] for i in range(n)]
        assert diag[0] == d1 and diag[1] == d2
        assert all(diag[k] == (k - 1) * d1 + d2 for k in range(2, n))
        spectrum = " ".join(fmt(x) for x in diag)
        print("%3d  %-12s  %-12s  %s" % (n, fmt(d1), fmt(d2), spectrum))


if __name__ == "__main__":
    main()

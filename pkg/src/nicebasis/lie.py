"""Finite dimensional Lie algebras with exact rational structure constants.

A LieAlgebra stores its bracket table sparsely: brackets[(i, j)] for i < j is
a dict {k: c} meaning [e_i, e_j] = sum c * e_k.  Indices are 0-based in code;
the text file format is 1-based.  The Jacobi identity and antisymmetry are
enforced at construction time.
"""

from __future__ import annotations

from .scalars import Q, ZERO, ONE, rat, fmt
from .linalg import Matrix


class Subspace:
    """Span of a set of vectors, kept in reduced echelon form (canonical)."""

    __slots__ = ("ambient", "rows", "pivots")

    def __init__(self, ambient, vectors=()):
        self.ambient = ambient
        self.rows = []
        self.pivots = []
        for v in vectors:
            self.add(v)

    def add(self, vector):
        """Add a vector to the span; returns True if the dimension grew."""
        v = [Q(x) for x in vector]
        if len(v) != self.ambient:
            raise ValueError("vector length mismatch")
        for row, p in zip(self.rows, self.pivots):
            if v[p] != 0:
                f = v[p]
                v = [a - f * b for a, b in zip(v, row)]
        piv = next((i for i, x in enumerate(v) if x != 0), None)
        if piv is None:
            return False
        inv = 1 / v[piv]
        v = [x * inv for x in v]
        # back-substitute into existing rows and keep rows sorted by pivot
        self.rows = [
            [a - row[piv] * b for a, b in zip(row, v)] if row[piv] != 0 else row
            for row in self.rows
        ]
        idx = next((i for i, p in enumerate(self.pivots) if p > piv), len(self.pivots))
        self.rows.insert(idx, v)
        self.pivots.insert(idx, piv)
        return True

    @property
    def dim(self):
        return len(self.rows)

    def contains(self, vector):
        return self.reduce(vector) is not None and all(
            x == 0 for x in self.reduce(vector)
        )

    def reduce(self, vector):
        """Residue of vector modulo the subspace (zero iff contained)."""
        v = [Q(x) for x in vector]
        for row, p in zip(self.rows, self.pivots):
            if v[p] != 0:
                f = v[p]
                v = [a - f * b for a, b in zip(v, row)]
        return tuple(v)

    def basis(self):
        return [tuple(row) for row in self.rows]

    def contains_subspace(self, other):
        return all(self.contains(row) for row in other.rows)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient == other.ambient
            and self.rows == [list(r) for r in (tuple(r) for r in other.rows)]
            and self.pivots == other.pivots
        )

    def __repr__(self):
        return f"Subspace(dim={self.dim} in R^{self.ambient})"


class LieAlgebra:
    def __init__(self, dim, brackets, names=None, check=True):
        self.dim = dim
        table = {}
        for (i, j), comps in brackets.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError(f"bracket index out of range: ({i}, {j})")
            if i >= j:
                raise ValueError(f"bracket keys must have i < j, got ({i}, {j})")
            clean = {k: Q(c) for k, c in comps.items() if Q(c) != 0}
            for k in clean:
                if not 0 <= k < dim:
                    raise ValueError(f"bracket target out of range: {k}")
            if clean:
                table[(i, j)] = clean
        self.brackets = table
        self.names = list(names) if names else [f"e{i+1}" for i in range(dim)]
        if len(self.names) != dim:
            raise ValueError("wrong number of basis names")
        if check:
            bad = self.jacobi_failures(limit=1)
            if bad:
                i, j, k = bad[0]
                raise ValueError(f"Jacobi identity fails on basis triple ({i+1}, {j+1}, {k+1})")

    # --- bracket evaluation ---

    def bracket_basis(self, i, j):
        """[e_i, e_j] as a sparse dict, any index order."""
        if i == j:
            return {}
        if i < j:
            return dict(self.brackets.get((i, j), {}))
        return {k: -c for k, c in self.brackets.get((j, i), {}).items()}

    def bracket(self, x, y):
        """[x, y] for coefficient vectors x, y; returns a dense tuple."""
        out = [ZERO] * self.dim
        for (i, j), comps in self.brackets.items():
            coeff = x[i] * y[j] - x[j] * y[i]
            if coeff == 0:
                continue
            for k, c in comps.items():
                out[k] += coeff * c
        return tuple(out)

    def ad(self, x):
        """Matrix of ad_x: y -> [x, y] in the given basis."""
        cols = []
        for j in range(self.dim):
            ej = tuple(ONE if t == j else ZERO for t in range(self.dim))
            cols.append(self.bracket(x, ej))
        return Matrix.from_columns(cols)

    def jacobi_failures(self, limit=None):
        """Basis triples violating the Jacobi identity.

        Only triples whose first two slots touch the bracket support can
        fail, so we iterate support pairs against every third index instead
        of all dim**3 triples, working on sparse components throughout.
        """

        def double(i, j, m):
            # [[e_i, e_j], e_m] as a sparse dict
            out = {}
            for k, c in self.bracket_basis(i, j).items():
                for t, d in self.bracket_basis(k, m).items():
                    out[t] = out.get(t, ZERO) + c * d
            return out

        seen = set()
        bad = []
        for (i, j) in self.brackets:
            for m in range(self.dim):
                trip = tuple(sorted((i, j, m)))
                if len(set(trip)) < 3 or trip in seen:
                    continue
                seen.add(trip)
                a, b, c = trip
                total = double(a, b, c)
                for t, d in double(b, c, a).items():
                    total[t] = total.get(t, ZERO) + d
                for t, d in double(c, a, b).items():
                    total[t] = total.get(t, ZERO) + d
                if any(x != 0 for x in total.values()):
                    bad.append(trip)
                    if limit and len(bad) >= limit:
                        return bad
        return bad

    # --- structural subspaces ---

    def derived_subalgebra(self):
        s = Subspace(self.dim)
        for (i, j), comps in self.brackets.items():
            v = [ZERO] * self.dim
            for k, c in comps.items():
                v[k] = c
            s.add(v)
        return s

    def lower_central_series(self):
        """[g, g^1, g^2, ...] as Subspaces, ending at the first repeat."""
        full = Subspace(
            self.dim,
            [tuple(ONE if t == i else ZERO for t in range(self.dim)) for i in range(self.dim)],
        )
        series = [full]
        while True:
            prev = series[-1]
            nxt = Subspace(self.dim)
            for v in prev.basis():
                for i in range(self.dim):
                    ei = tuple(ONE if t == i else ZERO for t in range(self.dim))
                    nxt.add(self.bracket(ei, v))
            series.append(nxt)
            if nxt.dim == prev.dim:
                return series[:-1]
            if nxt.dim == 0:
                return series

    def is_nilpotent(self):
        return self.lower_central_series()[-1].dim == 0

    def center(self):
        rows = []
        for j in range(self.dim):
            ej = tuple(ONE if t == j else ZERO for t in range(self.dim))
            rows.append(self.ad(ej).to_lists())
        stacked = [r for block in rows for r in block]
        # x is central iff ad_{e_j} x = 0 for all j, i.e. x in the kernel of
        # the stacked matrix (columns act on x through each ad matrix)
        from .linalg import nullspace

        return Subspace(self.dim, nullspace(Matrix(stacked)))

    def upper_central_series(self):
        """[0, Z(g), Z_2(g), ...] ending at the first repeat."""
        series = [Subspace(self.dim)]
        while True:
            prev = series[-1]
            nxt = self._preimage_of_center(prev)
            if nxt.dim == prev.dim:
                return series
            series.append(nxt)
            if nxt.dim == self.dim:
                return series

    def _preimage_of_center(self, z: Subspace) -> Subspace:
        # {x : [x, e_j] in z for all j}, solved as one big linear system
        rows = []
        for j in range(self.dim):
            ej = tuple(ONE if t == j else ZERO for t in range(self.dim))
            ad_cols = []
            for i in range(self.dim):
                ei = tuple(ONE if t == i else ZERO for t in range(self.dim))
                ad_cols.append(z.reduce(self.bracket(ei, ej)))
            for r in range(self.dim):
                rows.append([ad_cols[i][r] for i in range(self.dim)])
        from .linalg import nullspace

        return Subspace(self.dim, nullspace(Matrix(rows)))

    def centralizer(self, vectors):
        """{x : [x, v] = 0 for all v in vectors} as a Subspace."""
        rows = []
        for v in vectors:
            ad_cols = [
                self.bracket(
                    tuple(ONE if t == i else ZERO for t in range(self.dim)), v
                )
                for i in range(self.dim)
            ]
            for r in range(self.dim):
                rows.append([ad_cols[i][r] for i in range(self.dim)])
        from .linalg import nullspace

        return Subspace(self.dim, nullspace(Matrix(rows)))

    def ideal_closure(self, vectors):
        """Smallest ideal containing the given vectors."""
        s = Subspace(self.dim, vectors)
        queue = list(s.basis())
        while queue:
            v = queue.pop()
            for i in range(self.dim):
                ei = tuple(ONE if t == i else ZERO for t in range(self.dim))
                w = self.bracket(ei, v)
                if s.add(w):
                    queue.append(w)
        return s

    def quotient(self, ideal: Subspace):
        """Quotient algebra by an ideal.

        Returns (algebra, project) where project maps an ambient vector to
        its coordinates in the quotient basis (images of the standard basis
        vectors whose index is not an echelon pivot of the ideal).
        """
        if not self._is_ideal(ideal):
            raise ValueError("subspace is not an ideal")
        keep = [i for i in range(self.dim) if i not in ideal.pivots]
        pos = {orig: t for t, orig in enumerate(keep)}

        def project(vector):
            res = ideal.reduce(vector)
            return tuple(res[i] for i in keep)

        table = {}
        for a, i in enumerate(keep):
            for b, j in enumerate(keep[a + 1 :], start=a + 1):
                comps = self.bracket_basis(i, keep[b])
                v = [ZERO] * self.dim
                for k, c in comps.items():
                    v[k] = c
                img = project(v)
                entry = {t: c for t, c in enumerate(img) if c != 0}
                if entry:
                    table[(a, b)] = entry
        names = [self.names[i] for i in keep]
        return LieAlgebra(len(keep), table, names=names), project

    def _is_ideal(self, s: Subspace):
        for v in s.basis():
            for i in range(self.dim):
                ei = tuple(ONE if t == i else ZERO for t in range(self.dim))
                if not s.contains(self.bracket(ei, v)):
                    return False
        return True

    def killing_form(self):
        """Matrix B with B[i][j] = Tr(ad_{e_i} ad_{e_j})."""
        ads = [
            self.ad(tuple(ONE if t == i else ZERO for t in range(self.dim)))
            for i in range(self.dim)
        ]
        return Matrix(
            [[(ads[i] * ads[j]).trace() for j in range(self.dim)] for i in range(self.dim)]
        )

    def change_basis(self, p: Matrix):
        """Structure constants in the basis given by the columns of p."""
        pinv = p.inverse()
        cols = [p.column(j) for j in range(self.dim)]
        table = {}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                w = pinv.apply(self.bracket(cols[i], cols[j]))
                entry = {k: c for k, c in enumerate(w) if c != 0}
                if entry:
                    table[(i, j)] = entry
        return LieAlgebra(self.dim, table, check=False)

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, brackets={len(self.brackets)})"


def direct_sum(*algebras, names=None):
    dim = sum(g.dim for g in algebras)
    table = {}
    offset = 0
    for g in algebras:
        for (i, j), comps in g.brackets.items():
            table[(i + offset, j + offset)] = {k + offset: c for k, c in comps.items()}
        offset += g.dim
    return LieAlgebra(dim, table, names=names, check=False)


def abelian(dim):
    return LieAlgebra(dim, {})


# --- text format ---
#
#   dim 6
#   names X1 X2 X3 X4 X5 X6
#   bracket 1 2 4 1
#
# means dim 6 with [e_1, e_2] = 1 * e_4.  Indices 1-based, i < j required,
# '#' starts a comment.


def parse_lie(text: str) -> LieAlgebra:
    dim = None
    names = None
    table = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kw = parts[0]
        if kw == "dim":
            if dim is not None:
                raise ValueError(f"line {lineno}: duplicate dim")
            dim = int(parts[1])
        elif kw == "names":
            names = parts[1:]
        elif kw == "bracket":
            if dim is None:
                raise ValueError(f"line {lineno}: bracket before dim")
            if len(parts) != 5:
                raise ValueError(f"line {lineno}: bracket needs i j k value")
            i, j, k = int(parts[1]) - 1, int(parts[2]) - 1, int(parts[3]) - 1
            if not i < j:
                raise ValueError(f"line {lineno}: need i < j")
            c = rat(parts[4])
            entry = table.setdefault((i, j), {})
            if k in entry:
                raise ValueError(f"line {lineno}: duplicate component")
            entry[k] = c
        else:
            raise ValueError(f"line {lineno}: unknown keyword {kw!r}")
    if dim is None:
        raise ValueError("missing dim line")
    return LieAlgebra(dim, table, names=names)


def serialize_lie(g: LieAlgebra) -> str:
    lines = [f"dim {g.dim}", "names " + " ".join(g.names)]
    for (i, j) in sorted(g.brackets):
        for k in sorted(g.brackets[(i, j)]):
            lines.append(f"bracket {i+1} {j+1} {k+1} {fmt(g.brackets[(i, j)][k])}")
    return "\n".join(lines) + "\n"


def load_lie(path) -> LieAlgebra:
    with open(path) as fh:
        return parse_lie(fh.read())


def save_lie(g: LieAlgebra, path):
    with open(path, "w") as fh:
        fh.write(serialize_lie(g))

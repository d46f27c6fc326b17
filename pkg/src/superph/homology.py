"""Chain complexes of Δ-sets and embedded homology of super-hypergraphs.

For a marked graded subset H of a Δ-set X with chain complex C_*(X), write
D_n for the coordinate span of H_n.  The infimum complex is the largest
subcomplex of C_*(X) inside D_*, inf_n = D_n ∩ ∂⁻¹(D_{n-1}); the supremum
complex is the smallest subcomplex containing it, sup_n = D_n + ∂(D_{n+1}).
Their common homology — cycles D_n ∩ ker ∂ modulo boundaries
D_n ∩ ∂(D_{n+1}) — is the embedded homology of the pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .delta import (CellId, DeltaIdentityError, DeltaMorphism, DeltaSet,
                    GradedSubset, SuperHypergraph, delta_closure, full_subset,
                    max_delta_subset, validate_morphism)
from .fields import (Field, FieldMatrix, SubspaceBasis, express_in_vectors,
                     extend_independent, kernel_basis, preimage_basis, rank,
                     subspace_intersect, subspace_sum)


@dataclass(frozen=True)
class ChainComplex:
    """Per-degree boundary matrices of a Δ-set over a field.

    boundaries[n] maps C_n -> C_{n-1} (rows index (n-1)-cells, columns index
    n-cells); boundaries[0] has zero rows.
    """

    field: Field
    dims: tuple[int, ...]
    boundaries: tuple[FieldMatrix, ...]

    @property
    def dim_count(self) -> int:
        return len(self.dims)

    def boundary(self, n: int) -> FieldMatrix:
        """∂_n, with empty matrices outside the graded range."""
        if 0 <= n < len(self.boundaries):
            return self.boundaries[n]
        rows = self.dims[n - 1] if 0 < n <= len(self.dims) else 0
        return FieldMatrix.zeros(self.field, rows, 0)

    def space_dim(self, n: int) -> int:
        return self.dims[n] if 0 <= n < len(self.dims) else 0


def boundary_matrices(x: DeltaSet, field: Field, validated: bool = False) -> ChainComplex:
    """∂_n(cell) = Σ_i (-1)^i d_i(cell); over GF(2) the unsigned face count."""
    if not validated:
        report = x.validate()
        if not report.ok:
            raise DeltaIdentityError(report)
    mats = []
    for n in range(x.dim_count):
        rows = x.counts[n - 1] if n > 0 else 0
        cols = x.counts[n]
        entries = [[field.zero] * cols for _ in range(rows)]
        if n > 0:
            for j in range(cols):
                sign = field.one
                for i, t in enumerate(x.faces[n][j]):
                    entries[t][j] = field.add(entries[t][j], sign)
                    sign = field.neg(sign)
        mats.append(FieldMatrix.from_rows(field, entries) if rows
                    else FieldMatrix.zeros(field, 0, cols))
    cc = ChainComplex(field, x.counts, tuple(mats))
    for n in range(2, x.dim_count):
        if not cc.boundaries[n - 1].matmul(cc.boundaries[n]).is_zero():
            raise AssertionError(f"∂∂ != 0 between degrees {n} and {n - 2}")
    return cc


def _coordinate_span(field: Field, ambient: int, idxs: Iterable[int]) -> SubspaceBasis:
    return SubspaceBasis.coordinate(field, ambient, idxs)


def marked_spans(sh: SuperHypergraph, field: Field) -> list[SubspaceBasis]:
    """D_n = the coordinate span of H_n inside C_n(X), per degree."""
    x = sh.x
    return [_coordinate_span(field, x.counts[n], sh.h.at(n)) for n in range(x.dim_count)]


@dataclass(frozen=True)
class EmbeddedChainData:
    """Infimum and supremum subcomplex bases inside each C_n(X)."""

    field: Field
    inf: tuple[SubspaceBasis, ...]
    sup: tuple[SubspaceBasis, ...]


def embedded_chain_data(sh: SuperHypergraph, field: Field,
                        cc: ChainComplex | None = None) -> EmbeddedChainData:
    if cc is None:
        cc = boundary_matrices(sh.x, field)
    d = marked_spans(sh, field)
    nd = sh.x.dim_count
    inf = []
    sup = []
    for n in range(nd):
        if n == 0:
            inf_n = d[0]
        else:
            pre = preimage_basis(cc.boundaries[n], d[n - 1])
            inf_n = subspace_intersect(d[n], pre)
        image_next = _boundary_of_span(cc, n + 1, d[n + 1] if n + 1 < nd else None)
        sup_n = subspace_sum(d[n], image_next)
        inf.append(inf_n)
        sup.append(sup_n)
    return EmbeddedChainData(field, tuple(inf), tuple(sup))


def _boundary_of_span(cc: ChainComplex, n: int, span: SubspaceBasis | None) -> SubspaceBasis:
    """∂_n applied to a subspace of C_n, as a subspace of C_{n-1}."""
    ambient = cc.space_dim(n - 1)
    if span is None or span.dim == 0 or n >= cc.dim_count or n <= 0:
        return SubspaceBasis.zero(cc.field, ambient)
    bd = cc.boundaries[n]
    return SubspaceBasis(cc.field, ambient, [bd.apply(v) for v in span.vectors])


def cycles_in_span(cc: ChainComplex, n: int, span: SubspaceBasis) -> SubspaceBasis:
    """span ∩ ker ∂_n."""
    if n == 0 or n >= cc.dim_count:
        return span
    bd = cc.boundaries[n]
    if span.dim == 0:
        return span
    restricted = FieldMatrix.from_columns(cc.field,
                                          [list(bd.apply(v)) for v in span.vectors],
                                          bd.rows)
    coeff_kernel = kernel_basis(restricted)
    vecs = []
    f = cc.field
    for k in coeff_kernel.vectors:
        vec = [f.zero] * span.ambient_dim
        for c, row in zip(k, span.vectors):
            if c:
                vec = [f.add(a, f.mul(c, b)) for a, b in zip(vec, row)]
        vecs.append(vec)
    return SubspaceBasis(f, span.ambient_dim, vecs)


# ---------------------------------------------------------------------------
# Betti numbers
# ---------------------------------------------------------------------------

def _embedded_zb(sh: SuperHypergraph, field: Field, cc: ChainComplex, n: int):
    """(Z_n, B_n) of the infimum complex: D_n ∩ ker ∂ and D_n ∩ ∂(D_{n+1})."""
    d_n = _coordinate_span(field, sh.x.counts[n], sh.h.at(n))
    z = cycles_in_span(cc, n, d_n)
    if n + 1 < sh.x.dim_count:
        d_up = _coordinate_span(field, sh.x.counts[n + 1], sh.h.at(n + 1))
        b = subspace_intersect(d_n, _boundary_of_span(cc, n + 1, d_up))
    else:
        b = SubspaceBasis.zero(field, sh.x.counts[n])
    return z, b


def embedded_betti(sh: SuperHypergraph, field: Field, mode: str = "absolute",
                   cc: ChainComplex | None = None) -> tuple[int, ...]:
    """Betti numbers of the embedded (absolute), relative, or ambient homology.

    absolute: homology of the infimum complex of the marked span;
    relative:  homology of C_*(X)/inf_*;
    ambient:   homology of C_*(X).
    """
    if cc is None:
        cc = boundary_matrices(sh.x, field)
    x = sh.x
    nd = x.dim_count
    out = []
    if mode == "absolute":
        for n in range(nd):
            z, b = _embedded_zb(sh, field, cc, n)
            out.append(z.dim - b.dim)
    elif mode == "ambient":
        for n in range(nd):
            z = kernel_basis(cc.boundaries[n]).dim if n > 0 else x.counts[0]
            b = rank(cc.boundaries[n + 1]) if n + 1 < nd else 0
            out.append(z - b)
    elif mode == "relative":
        data = embedded_chain_data(sh, field, cc)
        for n in range(nd):
            if n == 0:
                zq = x.counts[0]
            else:
                zq = preimage_basis(cc.boundaries[n], data.inf[n - 1]).dim
            im = _boundary_of_span(cc, n + 1,
                                   SubspaceBasis.full(field, x.counts[n + 1])
                                   if n + 1 < nd else None)
            bq = subspace_sum(im, data.inf[n]).dim
            out.append(zq - data.inf[n].dim - (bq - data.inf[n].dim))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return tuple(out)


def gap_series(sh: SuperHypergraph, field: Field,
               cc: ChainComplex | None = None) -> tuple[int, ...]:
    """Coefficients of the Hilbert–Poincaré series of sup/inf:
    coefficient n = dim sup_n - dim inf_n."""
    if cc is None:
        cc = boundary_matrices(sh.x, field)
    data = embedded_chain_data(sh, field, cc)
    return tuple(s.dim - i.dim for s, i in zip(data.sup, data.inf))


def geometric_gap_betti(sh: SuperHypergraph, field: Field) -> tuple[int, ...]:
    """Homology of the pair (Δ-closure of H, largest Δ-subset inside H):
    the chain complex of the closure modulo the chain complex of the core.
    With an empty core this is the (unreduced) homology of the closure."""
    closure = delta_closure(sh)
    core = max_delta_subset(sh)
    x = sh.x
    cc = boundary_matrices(x, field)
    idxs = [sorted(closure.at(n) - core.at(n)) for n in range(x.dim_count)]
    pos = [{i: k for k, i in enumerate(ix)} for ix in idxs]
    mats = []
    for n in range(x.dim_count):
        rows, cols = len(idxs[n - 1]) if n else 0, len(idxs[n])
        ent = [[field.zero] * cols for _ in range(rows)]
        if n:
            bd = cc.boundaries[n]
            for jj, j in enumerate(idxs[n]):
                col = bd.column(j)
                for i, v in enumerate(col):
                    if v and i in pos[n - 1]:
                        ent[pos[n - 1][i]][jj] = v
        mats.append(FieldMatrix.from_rows(field, ent) if rows
                    else FieldMatrix.zeros(field, 0, cols))
    out = []
    for n in range(x.dim_count):
        z = kernel_basis(mats[n]).dim if n > 0 else len(idxs[0])
        b = rank(mats[n + 1]) if n + 1 < x.dim_count else 0
        out.append(z - b)
    return tuple(out)


# ---------------------------------------------------------------------------
# Homology bases and induced maps
# ---------------------------------------------------------------------------

def embedded_homology_basis(sh: SuperHypergraph, field: Field, n: int,
                            cc: ChainComplex | None = None):
    """(representatives, boundary basis) for the degree-n embedded homology,
    chosen deterministically."""
    if cc is None:
        cc = boundary_matrices(sh.x, field)
    z, b = _embedded_zb(sh, field, cc, n)
    reps = extend_independent(b, z.vectors)
    return reps, b


def induced_homology_map(m: DeltaMorphism, source: SuperHypergraph,
                         target: SuperHypergraph, field: Field,
                         degree: int) -> FieldMatrix:
    """Matrix of the induced map on embedded homology in the deterministic
    bases of source and target."""
    report = validate_morphism(m, source.h, target.h)
    if not report.ok:
        raise ValueError(f"invalid morphism: {report.failures[0]}")
    cc_s = boundary_matrices(source.x, field)
    cc_t = boundary_matrices(target.x, field)
    reps_s, _ = embedded_homology_basis(source, field, degree, cc_s)
    reps_t, b_t = embedded_homology_basis(target, field, degree, cc_t)
    nt = target.x.n_cells(degree)
    cols = []
    for rep in reps_s:
        img = [field.zero] * nt
        for j, c in enumerate(rep):
            if c:
                tj = m.maps[degree][j]
                img[tj] = field.add(img[tj], c)
        coeffs = express_in_vectors(field, nt, list(reps_t) + list(b_t.vectors), img)
        if coeffs is None:
            raise AssertionError("image class not in target homology; morphism broken")
        cols.append(list(coeffs[:len(reps_t)]))
    if not cols:
        return FieldMatrix.zeros(field, len(reps_t), 0)
    return FieldMatrix.from_columns(field, cols, len(reps_t))


# ---------------------------------------------------------------------------
# Subcomplex homology and Mayer–Vietoris diagnostics
# ---------------------------------------------------------------------------

def subcomplex_homology(cc: ChainComplex, spaces: Sequence[SubspaceBasis]) -> tuple[int, ...]:
    """Betti numbers of a family of subspaces V_n ⊆ C_n closed under ∂."""
    out = []
    nd = len(spaces)
    for n in range(nd):
        z = cycles_in_span(cc, n, spaces[n])
        b = _boundary_of_span(cc, n + 1, spaces[n + 1] if n + 1 < nd else None)
        out.append(z.dim - b.dim)
    return tuple(out)


def inclusion_quasi_iso(cc: ChainComplex, sub: Sequence[SubspaceBasis],
                        sup: Sequence[SubspaceBasis]) -> tuple[bool, tuple[tuple[int, int, int], ...]]:
    """Whether the inclusion of subcomplexes induces isomorphisms on homology.

    Returns (flag, per-degree (dim H(sub), dim H(sup), rank of induced map)).
    """
    rows = []
    ok = True
    nd = len(sub)
    for n in range(nd):
        z_v = cycles_in_span(cc, n, sub[n])
        b_v = _boundary_of_span(cc, n + 1, sub[n + 1] if n + 1 < nd else None)
        z_w = cycles_in_span(cc, n, sup[n])
        b_w = _boundary_of_span(cc, n + 1, sup[n + 1] if n + 1 < nd else None)
        hv = z_v.dim - b_v.dim
        hw = z_w.dim - b_w.dim
        rk = subspace_sum(z_v, b_w).dim - b_w.dim
        rows.append((hv, hw, rk))
        if not (hv == hw == rk):
            ok = False
    return ok, tuple(rows)


@dataclass(frozen=True)
class MvRow:
    degree: int
    dim_sup_intersect: int
    dim_sup_sum: int
    dim_inf_intersect: int
    dim_inf_sum: int
    dim_inf_a: int
    dim_inf_b: int
    dim_sup_a: int
    dim_sup_b: int


@dataclass(frozen=True)
class MvReport:
    rows: tuple[MvRow, ...]
    sup_sum_equals_sup_x: bool
    inf_intersect_equals_inf_of_intersection: bool
    left_quasi_iso: bool
    middle_quasi_iso: bool
    right_quasi_iso: bool
    betti_intersection: tuple[int, ...]
    betti_summands: tuple[tuple[int, int], ...]
    betti_union: tuple[int, ...]


def _is_delta_subset(x: DeltaSet, sub: GradedSubset) -> bool:
    for n in range(1, x.dim_count):
        for idx in sub.at(n):
            if any(t not in sub.at(n - 1) for t in x.faces[n][idx]):
                return False
    return True


def mv_diagnostics(sh: SuperHypergraph, a: GradedSubset, b: GradedSubset,
                   field: Field) -> MvReport:
    """Chain-level data of the Mayer–Vietoris square for a cover X = A ∪ B.

    Verifies the identities sup^A + sup^B = sup^X and
    inf^{A∩B} = inf^A ∩ inf^B, reports the dimensions of the six chain rows
    and whether the flanking inclusions (left: inf^A ∩ inf^B into
    sup^A ∩ sup^B, right: inf^A + inf^B into sup^A + sup^B) are
    quasi-isomorphisms; the middle inclusion always is.
    """
    x = sh.x
    if not (_is_delta_subset(x, a) and _is_delta_subset(x, b)):
        raise ValueError("A and B must be Δ-subsets of the parental Δ-set")
    if a.union(b) != full_subset(x):
        raise ValueError("A ∪ B must cover every cell of X")
    cc = boundary_matrices(x, field)

    def chain_data(marks: GradedSubset) -> EmbeddedChainData:
        return embedded_chain_data(SuperHypergraph(x, marks), field, cc)

    h_a = sh.h.intersection(a)
    h_b = sh.h.intersection(b)
    h_ab = sh.h.intersection(a).intersection(b)
    data_a = chain_data(h_a)
    data_b = chain_data(h_b)
    data_ab = chain_data(h_ab)
    data_x = chain_data(sh.h)

    nd = x.dim_count
    sup_int = [subspace_intersect(data_a.sup[n], data_b.sup[n]) for n in range(nd)]
    sup_sum = [subspace_sum(data_a.sup[n], data_b.sup[n]) for n in range(nd)]
    inf_int = [subspace_intersect(data_a.inf[n], data_b.inf[n]) for n in range(nd)]
    inf_sum = [subspace_sum(data_a.inf[n], data_b.inf[n]) for n in range(nd)]

    sup_ok = all(sup_sum[n] == data_x.sup[n] for n in range(nd))
    inf_ok = all(inf_int[n] == data_ab.inf[n] for n in range(nd))

    left_ok, _ = inclusion_quasi_iso(cc, inf_int, sup_int)
    right_ok, _ = inclusion_quasi_iso(cc, inf_sum, sup_sum)
    mid_a, _ = inclusion_quasi_iso(cc, list(data_a.inf), list(data_a.sup))
    mid_b, _ = inclusion_quasi_iso(cc, list(data_b.inf), list(data_b.sup))

    rows = tuple(MvRow(n, sup_int[n].dim, sup_sum[n].dim, inf_int[n].dim,
                       inf_sum[n].dim, data_a.inf[n].dim, data_b.inf[n].dim,
                       data_a.sup[n].dim, data_b.sup[n].dim)
                 for n in range(nd))
    betti_a = subcomplex_homology(cc, list(data_a.inf))
    betti_b = subcomplex_homology(cc, list(data_b.inf))
    return MvReport(
        rows=rows,
        sup_sum_equals_sup_x=sup_ok,
        inf_intersect_equals_inf_of_intersection=inf_ok,
        left_quasi_iso=left_ok,
        middle_quasi_iso=mid_a and mid_b,
        right_quasi_iso=right_ok,
        betti_intersection=subcomplex_homology(cc, inf_int),
        betti_summands=tuple(zip(betti_a, betti_b)),
        betti_union=subcomplex_homology(cc, inf_sum),
    )


# ---------------------------------------------------------------------------
# Mod-2 diagnostics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ParityReport:
    is_cycle: bool
    odd_in_degree_cells: tuple[CellId, ...]


def mod2_parity_check(x: DeltaSet, chain: Iterable[CellId]) -> ParityReport:
    """A mod-2 chain is a cycle iff every face target has even in-degree in
    the multiset of faces of its cells (multiplicities reduced mod 2 first)."""
    counts: dict[CellId, int] = {}
    for cell in chain:
        counts[cell] = counts.get(cell, 0) + 1
    cells = [c for c, k in counts.items() if k % 2]
    dims = {dim for dim, _ in cells}
    if len(dims) > 1:
        raise ValueError(f"chain mixes dimensions {sorted(dims)}")
    in_degree: dict[CellId, int] = {}
    for dim, idx in cells:
        if dim == 0:
            continue
        for t in x.faces[dim][idx]:
            key = (dim - 1, t)
            in_degree[key] = in_degree.get(key, 0) + 1
    odd = tuple(sorted(c for c, k in in_degree.items() if k % 2))
    return ParityReport(not odd, odd)

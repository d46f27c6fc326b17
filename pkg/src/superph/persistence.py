"""Persistent filtrations and super-persistent homology.

A regular scoring scheme on the working graph filters a dominated
super-hypergraph (H, X) by sublevel sets X(t); ambient, embedded and
relative embedded homology at the critical values form persistence modules
whose interval decompositions give three barcodes, linked by the exact
triangle J : emb -> ambient, P : ambient -> relative, and the degree -1
connecting map back to embedded homology.

Persistence is computed from ranks of inclusion-induced maps at the finitely
many critical values (rank inclusion–exclusion), not by a cell-wise column
reduction: the infimum complexes of the embedded theory do not come from a
cell filtration.  Every module here is a subquotient family Z(t)/B(t) of a
fixed chain group with Z and B both monotone in t, which also yields
interval-adapted representative bases for the correlation matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .delta import GradedSubset, SuperHypergraph
from .fields import (Field, FieldMatrix, SubspaceBasis, express_in_vectors,
                     extend_independent, preimage_basis, subspace_intersect,
                     subspace_sum)
from .homology import ChainComplex, boundary_matrices, cycles_in_span, _boundary_of_span
from .scoring import round_score

MODULE_KINDS = ("ambient", "embedded", "relative")


class DominationError(ValueError):
    """The Δ-set is not (visibly) dominated by a working graph."""


class RegularityError(ValueError):
    """The scoring scheme is not regular on this input."""


def _label_subgraph(label):
    return getattr(label, "subgraph", label)


class Filtration:
    """Sublevel filtration of a super-hypergraph at its critical values.

    level_x[i] / level_h[i] are the cells of X(t_i) and H(t_i) = H ∩ X(t_i).
    """

    __slots__ = ("sh", "times", "scores", "level_x", "level_h", "scheme_name",
                 "_cc", "_zb", "_decomp")

    def __init__(self, sh: SuperHypergraph, times: Sequence[float],
                 scores: Sequence[Sequence[float]], scheme_name: str = ""):
        self.sh = sh
        self.times = tuple(times)
        self.scores = tuple(tuple(s) for s in scores)
        self.scheme_name = scheme_name
        self.level_x = []
        self.level_h = []
        for t in self.times:
            cells = {n: {j for j in range(sh.x.counts[n]) if self.scores[n][j] <= t}
                     for n in range(sh.x.dim_count)}
            lx = GradedSubset(cells)
            self.level_x.append(lx)
            self.level_h.append(sh.h.intersection(lx))
        self._cc: dict[Field, ChainComplex] = {}
        self._zb: dict = {}
        self._decomp: dict = {}

    @property
    def steps(self) -> int:
        return len(self.times)

    def chain_complex(self, field: Field) -> ChainComplex:
        if field not in self._cc:
            self._cc[field] = boundary_matrices(self.sh.x, field)
        return self._cc[field]

    # -- subquotient families ------------------------------------------------

    def zb_family(self, field: Field, which: str, degree: int):
        """Per-step (Z, B) subspaces of F^{X_degree} whose quotients are the
        requested homology; both flags are monotone in the step."""
        key = (field, which, degree)
        if key in self._zb:
            return self._zb[key]
        if which not in MODULE_KINDS:
            raise ValueError(f"unknown module kind {which!r}")
        cc = self.chain_complex(field)
        n = degree
        ambient = cc.space_dim(n)
        out = []
        for i in range(self.steps):
            xs = self.level_x[i]
            hs = self.level_h[i]
            if which == "ambient":
                z, b = self._inf_zb(cc, xs, n)
            elif which == "embedded":
                z, b = self._inf_zb(cc, hs, n)
            else:
                z, b = self._relative_zb(cc, xs, hs, n)
            if not z.contains_subspace(b):
                raise AssertionError("boundary space not inside cycle space")
            out.append((z, b))
        self._zb[key] = out
        return out

    def _span(self, cc: ChainComplex, marks: GradedSubset, n: int) -> SubspaceBasis:
        return SubspaceBasis.coordinate(cc.field, cc.space_dim(n), marks.at(n))

    def _inf_zb(self, cc: ChainComplex, marks: GradedSubset, n: int):
        """Cycles and boundaries of the infimum complex of a coordinate span:
        Z = D_n ∩ ker ∂, B = D_n ∩ ∂(D_{n+1})."""
        d_n = self._span(cc, marks, n)
        z = cycles_in_span(cc, n, d_n)
        d_up = self._span(cc, marks, n + 1) if n + 1 < cc.dim_count else None
        b = subspace_intersect(d_n, _boundary_of_span(cc, n + 1, d_up)) \
            if d_up is not None else SubspaceBasis.zero(cc.field, d_n.ambient_dim)
        return z, b

    def _inf_space(self, cc: ChainComplex, marks: GradedSubset, n: int) -> SubspaceBasis:
        """inf_n of a coordinate span: D_n ∩ ∂⁻¹(D_{n-1})."""
        d_n = self._span(cc, marks, n)
        if n == 0 or n >= cc.dim_count:
            return d_n
        pre = preimage_basis(cc.boundaries[n], self._span(cc, marks, n - 1))
        return subspace_intersect(d_n, pre)

    def _relative_zb(self, cc: ChainComplex, xs: GradedSubset, hs: GradedSubset, n: int):
        """Subquotient presentation of H_n(inf(X(t)) / inf(H(t)))."""
        inf_x_n = self._inf_space(cc, xs, n)
        inf_h_n = self._inf_space(cc, hs, n)
        if n == 0:
            z = inf_x_n
        else:
            inf_h_below = self._inf_space(cc, hs, n - 1)
            pre = preimage_basis(cc.boundaries[n], inf_h_below)
            z = subspace_intersect(inf_x_n, pre)
        if n + 1 < cc.dim_count:
            inf_x_up = self._inf_space(cc, xs, n + 1)
            b = subspace_sum(_boundary_of_span(cc, n + 1, inf_x_up), inf_h_n)
        else:
            b = inf_h_n
        return z, b

    def decomposition(self, field: Field, which: str, degree: int):
        key = (field, which, degree)
        if key not in self._decomp:
            self._decomp[key] = _interval_decomposition(
                self.zb_family(field, which, degree), field,
                self.sh.x.n_cells(degree), degree)
        return self._decomp[key]


def build_filtration(sh: SuperHypergraph, scheme, experimental: bool = False) -> Filtration:
    """Score every cell label, validate domination and regularity, and return
    the filtration at the sorted distinct critical values.

    Requires every cell to carry a finite-subgraph label, labels to be
    injective, and faces to be labeled by subgraphs of their cofaces.  With
    experimental=True a non-regular scheme is allowed (the modules are then
    built from infimum chains of the graded sublevel sets).
    """
    x = sh.x
    if x.labels is None and x.total_cells() > 0:
        raise DominationError("cells carry no subgraph labels")
    seen = {}
    for n, j in x.cells():
        sub = _label_subgraph(x.label(n, j))
        key = getattr(sub, "key", None)
        if key is None:
            raise DominationError(f"cell ({n},{j}) label is not a subgraph")
        if key in seen:
            raise DominationError(f"labels not injective: cells {seen[key]} and {(n, j)}")
        seen[key] = (n, j)
    # Faces must live over vertex subsets of their cofaces.  Edge containment
    # is not required: the secondary, path and starting-vertex face
    # operations patch deleted layers with working-graph or formal edges, so
    # their faces are not literal edge-subgraphs; sublevel sets still form
    # Δ-subsets because score monotonicity is validated below.
    for n in range(1, x.dim_count):
        for j in range(x.counts[n]):
            big = _label_subgraph(x.label(n, j))
            for t in x.faces[n][j]:
                small = _label_subgraph(x.label(n - 1, t))
                if not small.vertices <= big.vertices:
                    raise DominationError(
                        f"face of cell ({n},{j}) does not shrink its vertex set")
    scores = []
    for n in range(x.dim_count):
        scores.append([round_score(scheme.score(_label_subgraph(x.label(n, j))))
                       for j in range(x.counts[n])])
    monotone = all(scores[n - 1][t] <= scores[n][j]
                   for n in range(1, x.dim_count)
                   for j in range(x.counts[n])
                   for t in x.faces[n][j])
    if not monotone and not experimental:
        raise RegularityError(
            "scheme is not regular on this input; pass experimental=True to "
            "use infimum chains of the sublevel sets")
    times = sorted({v for row in scores for v in row})
    return Filtration(sh, times, scores, getattr(scheme, "name", ""))


# ---------------------------------------------------------------------------
# Persistence modules and barcodes
# ---------------------------------------------------------------------------

class PersistenceModule:
    """Finite persistence module: one space per critical value with chosen
    homology bases, and the inclusion-induced step maps between them."""

    __slots__ = ("which", "degree", "field", "times", "dims", "maps", "_rank_cache")

    def __init__(self, which: str, degree: int, field: Field, times: Sequence[float],
                 dims: Sequence[int], maps: Sequence[FieldMatrix]):
        self.which = which
        self.degree = degree
        self.field = field
        self.times = tuple(times)
        self.dims = tuple(dims)
        self.maps = tuple(maps)
        if len(self.maps) != max(len(self.dims) - 1, 0):
            raise ValueError("need one step map per consecutive pair of spaces")
        for i, m in enumerate(self.maps):
            if m.cols != self.dims[i] or m.rows != self.dims[i + 1]:
                raise ValueError(f"step map {i} has shape {m.rows}x{m.cols}, "
                                 f"expected {self.dims[i + 1]}x{self.dims[i]}")
        self._rank_cache: dict[tuple[int, int], int] = {}

    @property
    def steps(self) -> int:
        return len(self.dims)

    def composite(self, i: int, j: int) -> FieldMatrix:
        """v_{t_i}^{t_j} as a matrix (i <= j)."""
        if not 0 <= i <= j < self.steps:
            raise IndexError((i, j))
        m = FieldMatrix.identity(self.field, self.dims[i])
        for k in range(i, j):
            m = self.maps[k].matmul(m)
        return m

    def rank(self, i: int, j: int) -> int:
        """Rank of v_{t_i}^{t_j}; 0 out of range, the dimension when i = j."""
        if i > j or i < 0 or j >= self.steps:
            return 0
        if i == j:
            return self.dims[i]
        key = (i, j)
        if key not in self._rank_cache:
            from .fields import rank as _rank
            self._rank_cache[key] = _rank(self.composite(i, j))
        return self._rank_cache[key]

    def verify_composition(self) -> bool:
        for r in range(self.steps):
            for s in range(r, self.steps):
                for t in range(s, self.steps):
                    lhs = self.composite(s, t).matmul(self.composite(r, s))
                    if lhs != self.composite(r, t):
                        return False
        return True


def persistence_module(filt: Filtration, field: Field, which: str,
                       degree: int) -> PersistenceModule:
    """Homology spaces at each critical value with inclusion-induced maps,
    in the deterministic bases (boundary basis extended by representatives)."""
    zb = filt.zb_family(field, which, degree)
    reps: list[list[tuple]] = []
    for z, b in zb:
        reps.append(extend_independent(b, z.vectors))
    dims = [len(r) for r in reps]
    maps = []
    ambient = filt.sh.x.n_cells(degree) if degree < filt.sh.x.dim_count else 0
    for i in range(len(zb) - 1):
        z1, b1 = zb[i + 1]
        basis = list(reps[i + 1]) + list(b1.vectors)
        cols = []
        for rep in reps[i]:
            coeffs = express_in_vectors(field, ambient, basis, rep)
            if coeffs is None:
                raise AssertionError("monotonicity of the subquotient family broken")
            cols.append(list(coeffs[:dims[i + 1]]))
        maps.append(FieldMatrix.from_columns(field, cols, dims[i + 1]) if cols
                    else FieldMatrix.zeros(field, dims[i + 1], 0))
    return PersistenceModule(which, degree, field, filt.times, dims, maps)


@dataclass(frozen=True)
class Bar:
    degree: int
    birth: float
    death: float  # math.inf for a bar that never dies
    multiplicity: int


@dataclass(frozen=True)
class Barcode:
    module: str
    bars: tuple[Bar, ...]

    def total_at(self, degree: int, t: float) -> int:
        return sum(b.multiplicity for b in self.bars
                   if b.degree == degree and b.birth <= t < b.death)


def barcode(module: PersistenceModule) -> Barcode:
    """Interval multiplicities by rank inclusion–exclusion:
    mult[t_i, t_j) = r(i, j-1) - r(i-1, j-1) - r(i, j) + r(i-1, j)."""
    k = module.steps
    bars = []
    for i in range(k):
        for j in range(i + 1, k):
            mult = (module.rank(i, j - 1) - module.rank(i - 1, j - 1)
                    - module.rank(i, j) + module.rank(i - 1, j))
            if mult < 0:
                raise AssertionError("negative interval multiplicity")
            if mult:
                bars.append(Bar(module.degree, module.times[i], module.times[j], mult))
        mult = module.rank(i, k - 1) - module.rank(i - 1, k - 1)
        if mult:
            bars.append(Bar(module.degree, module.times[i], math.inf, mult))
    bars.sort(key=lambda b: (b.birth, b.death))
    return Barcode(module.which, tuple(bars))


def full_barcode(filt: Filtration, field: Field, which: str) -> Barcode:
    """Barcode across all degrees of the Δ-set."""
    bars: list[Bar] = []
    for n in range(filt.sh.x.dim_count):
        if filt.steps == 0:
            continue
        bars.extend(barcode(persistence_module(filt, field, which, n)).bars)
    bars.sort(key=lambda b: (b.degree, b.birth, b.death))
    return Barcode(which, tuple(bars))


# ---------------------------------------------------------------------------
# Interval-adapted representatives
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IntervalSummand:
    """One interval summand with a representative vector: its class is a
    basis element of Z(t)/B(t) for birth <= t < death and zero afterwards."""

    degree: int
    birth_index: int
    death_index: int | None
    rep: tuple

    def alive_at(self, i: int) -> bool:
        return self.birth_index <= i and (self.death_index is None or i < self.death_index)


def _interval_decomposition(zb, field: Field, ambient: int,
                            degree: int) -> list[IntervalSummand]:
    """Decompose the subquotient family (Z(i) / B(i)) into intervals.

    Builds a flag basis of the Z spaces with entry times, expresses a flag
    basis of the B spaces in those coordinates, and column-reduces with the
    classical lowest-one pairing.  The reduced boundary columns themselves
    are the representatives of the finite bars, so the adapted-basis maps
    send representatives to representatives or to zero.
    """
    zvecs: list[tuple] = []
    zentry: list[int] = []
    zspan = SubspaceBasis.zero(field, ambient)
    bcols: list[tuple[int, list]] = []  # (step, column over z-coordinates)
    bspan = SubspaceBasis.zero(field, ambient)
    for i, (z, b) in enumerate(zb):
        added = extend_independent(zspan, z.vectors)
        if added:
            zvecs.extend(added)
            zentry.extend([i] * len(added))
            zspan = subspace_sum(zspan, SubspaceBasis(field, ambient, added))
        new_b = extend_independent(bspan, b.vectors)
        if new_b:
            bspan = subspace_sum(bspan, SubspaceBasis(field, ambient, new_b))
            for vec in new_b:
                coeffs = express_in_vectors(field, ambient, zvecs, vec)
                if coeffs is None:
                    raise AssertionError("boundary vector outside the cycle flag")
                bcols.append((i, list(coeffs)))

    def low(col: list) -> int | None:
        for r in range(len(col) - 1, -1, -1):
            if col[r]:
                return r
        return None

    paired: dict[int, tuple[int, list]] = {}  # low z-row -> (death step, column)
    for step, col in bcols:
        col = col + [field.zero] * (len(zvecs) - len(col))
        l = low(col)
        while l is not None and l in paired:
            other = paired[l][1]
            factor = field.mul(col[l], field.inv(other[l]))
            col = [field.sub(a, field.mul(factor, b)) for a, b in zip(col, other)]
            l = low(col)
        if l is None:
            raise AssertionError("dependent boundary generator escaped the flag")
        paired[l] = (step, col)

    out = []
    for idx in range(len(zvecs)):
        birth = zentry[idx]
        if idx in paired:
            death, col = paired[idx]
            if death == birth:
                continue  # zero-length interval: a zero object
            vec = [field.zero] * ambient
            for c, zv in zip(col, zvecs):
                if c:
                    vec = [field.add(a, field.mul(c, b)) for a, b in zip(vec, zv)]
            out.append(IntervalSummand(degree, birth, death, tuple(vec)))
        else:
            out.append(IntervalSummand(degree, birth, None, tuple(zvecs[idx])))
    out.sort(key=lambda s: (s.birth_index,
                            math.inf if s.death_index is None else s.death_index))
    return out


def decomposition_barcode(filt: Filtration, field: Field, which: str,
                          degree: int) -> Barcode:
    """Barcode read off the interval-adapted decomposition (each summand has
    multiplicity 1); used to cross-check the rank-based barcode."""
    summands = filt.decomposition(field, which, degree)
    acc: dict[tuple[float, float], int] = {}
    for s in summands:
        birth = filt.times[s.birth_index]
        death = math.inf if s.death_index is None else filt.times[s.death_index]
        acc[(birth, death)] = acc.get((birth, death), 0) + 1
    bars = tuple(Bar(degree, b, d, m) for (b, d), m in sorted(acc.items()))
    return Barcode(which, bars)


# ---------------------------------------------------------------------------
# Correlation matrices of the exact triangle
# ---------------------------------------------------------------------------

ARROWS = ("J", "P", "boundary")


@dataclass(frozen=True)
class IntervalId:
    module: str
    degree: int
    index: int
    birth: float
    death: float

    @property
    def ident(self) -> str:
        death = "inf" if self.death == math.inf else f"{self.death:.12g}"
        return f"{self.module}:d{self.degree}:{self.index}:[{self.birth:.12g},{death})"


@dataclass(frozen=True)
class CorrelationMatrix:
    arrow: str
    rows: tuple[IntervalId, ...]  # source interval summands
    cols: tuple[IntervalId, ...]  # target interval summands
    entries: frozenset  # (row index, col index) pairs holding 1


def _interval_ids(filt: Filtration, which: str, degree: int,
                  summands) -> tuple[IntervalId, ...]:
    out = []
    for k, s in enumerate(summands):
        birth = filt.times[s.birth_index]
        death = math.inf if s.death_index is None else filt.times[s.death_index]
        out.append(IntervalId(which, degree, k, birth, death))
    return tuple(out)


def correlation_matrix(filt: Filtration, field: Field, arrow: str,
                       degree: int) -> CorrelationMatrix:
    """0/1 matrix over interval summands: entry (α, β) is 1 iff the arrow's
    block from summand α to summand β is nonzero at some critical value in
    the overlap of their intervals, in the fixed interval-adapted bases.

    J : embedded -> ambient and P : ambient -> relative are degree-preserving;
    the connecting arrow maps relative degree n to embedded degree n-1.
    """
    if arrow not in ARROWS:
        raise ValueError(f"unknown arrow {arrow!r}; one of {ARROWS}")
    cc = filt.chain_complex(field)
    if arrow == "J":
        src = ("embedded", degree)
        dst = ("ambient", degree)
    elif arrow == "P":
        src = ("ambient", degree)
        dst = ("relative", degree)
    else:
        src = ("relative", degree)
        dst = ("embedded", degree - 1)
    src_sum = filt.decomposition(field, src[0], src[1]) if src[1] >= 0 else []
    dst_sum = filt.decomposition(field, dst[0], dst[1]) if dst[1] >= 0 else []
    rows = _interval_ids(filt, src[0], src[1], src_sum)
    cols = _interval_ids(filt, dst[0], dst[1], dst_sum)
    if not src_sum or not dst_sum:
        return CorrelationMatrix(arrow, rows, cols, frozenset())
    dst_zb = filt.zb_family(field, dst[0], dst[1])
    dst_ambient = filt.sh.x.n_cells(dst[1])
    entries = set()
    for i in range(filt.steps):
        alive_src = [(a, s) for a, s in enumerate(src_sum) if s.alive_at(i)]
        alive_dst = [(b, s) for b, s in enumerate(dst_sum) if s.alive_at(i)]
        if not alive_src or not alive_dst:
            continue
        _, b_space = dst_zb[i]
        basis = [s.rep for _, s in alive_dst] + list(b_space.vectors)
        for a, s in alive_src:
            vec = list(s.rep)
            if arrow == "boundary":
                vec = list(cc.boundaries[degree].apply(vec))
            coeffs = express_in_vectors(field, dst_ambient, basis, vec)
            if coeffs is None:
                raise AssertionError("arrow image outside the target cycle space")
            for k, (b, _) in enumerate(alive_dst):
                if coeffs[k]:
                    entries.add((a, b))
    return CorrelationMatrix(arrow, rows, cols, frozenset(entries))


# ---------------------------------------------------------------------------
# Exact-triangle report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TriangleRow:
    degree: int
    step: int
    t: float
    dim_embedded: int
    dim_ambient: int
    dim_relative: int
    rank_j: int
    rank_p: int
    rank_boundary: int  # out of relative degree `degree` into embedded degree-1
    exact_at_ambient: bool
    exact_at_relative: bool
    exact_at_embedded: bool


@dataclass(frozen=True)
class TriangleReport:
    rows: tuple[TriangleRow, ...]
    exact: bool


def triangle_report(filt: Filtration, field: Field) -> TriangleReport:
    """Rank bookkeeping of the long exact sequence
    ... -> emb_n -> amb_n -> rel_n -> emb_{n-1} -> ... at every critical
    value; flags any failure of exactness (there must be none)."""
    cc = filt.chain_complex(field)
    nd = filt.sh.x.dim_count
    rows = []
    exact = True

    def family(which, n):
        if n < 0 or n >= nd:
            return None
        return filt.zb_family(field, which, n)

    for n in range(nd):
        emb = family("embedded", n)
        amb = family("ambient", n)
        rel = family("relative", n)
        emb_below = family("embedded", n - 1)
        rel_above = family("relative", n + 1)
        for i in range(filt.steps):
            ez, eb = emb[i]
            az, ab = amb[i]
            rz, rb = rel[i]
            dim_e = ez.dim - eb.dim
            dim_a = az.dim - ab.dim
            dim_r = rz.dim - rb.dim
            rank_j = subspace_sum(ez, ab).dim - ab.dim
            rank_p = subspace_sum(az, rb).dim - rb.dim
            rank_bd = _connecting_rank(cc, n, rz, emb_below[i][1] if emb_below else None)
            rank_bd_above = _connecting_rank(cc, n + 1, rel_above[i][0], eb) \
                if rel_above else 0
            ok_amb = rank_j + rank_p == dim_a
            ok_rel = rank_p + rank_bd == dim_r
            ok_emb = rank_bd_above + rank_j == dim_e
            exact = exact and ok_amb and ok_rel and ok_emb
            rows.append(TriangleRow(n, i, filt.times[i], dim_e, dim_a, dim_r,
                                    rank_j, rank_p, rank_bd,
                                    ok_amb, ok_rel, ok_emb))
    return TriangleReport(tuple(rows), exact)


def _connecting_rank(cc: ChainComplex, n: int, rel_z: SubspaceBasis | None,
                     emb_b_below: SubspaceBasis | None) -> int:
    """Rank of the connecting map out of relative degree n: classes of
    boundaries of relative cycles modulo embedded boundaries below."""
    if rel_z is None or n <= 0 or n >= cc.dim_count:
        return 0
    image = _boundary_of_span(cc, n, rel_z)
    if emb_b_below is None:
        emb_b_below = SubspaceBasis.zero(cc.field, cc.space_dim(n - 1))
    return subspace_sum(image, emb_b_below).dim - emb_b_below.dim


# ---------------------------------------------------------------------------
# Persistent partition homology
# ---------------------------------------------------------------------------

def partition_persistence(fam, clustering, scheme, field: Field,
                          experimental: bool = False) -> dict[str, Barcode]:
    """Partition faces + filtration + the three barcode families."""
    from .faceops import partition_faces
    sh = partition_faces(fam, clustering)
    filt = build_filtration(sh, scheme, experimental=experimental)
    return {which: full_barcode(filt, field, which) for which in MODULE_KINDS}

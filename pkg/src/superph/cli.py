"""Command-line front end.

Subcommands: homology, persist, render, validate, score.  Job options come
from a flat `key = value` config file (--config) with command-line flags
overriding individual keys.  Exit codes: 0 success, 1 usage/config error,
2 validation failure, 3 computation error.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from dataclasses import dataclass, field

from . import formats, render
from .delta import (DeltaIdentityError, SuperHypergraph, from_simplicial,
                    full_subset, is_complete, is_regular)
from .faceops import (edge_deletion_complex, link_blowup_faces,
                      partition_faces, primary_vertex_deletion,
                      secondary_vertex_deletion, starting_vertex_faces)
from .fields import GF, GF2, QQ
from .graphs import MultiGraph, Subgraph, clique_delta, neighborhood_complex, path_complex
from .homology import embedded_betti, gap_series
from .persistence import (DominationError, RegularityError, build_filtration,
                          correlation_matrix, full_barcode, triangle_report)
from .scoring import (PointCloud, WitnessConfig, cech_points, cech_scheme,
                      constant_scheme, critical_values, pullback_scheme,
                      seeded_random_scheme, vr_points, vr_scheme, witness_scheme)

CONSTRUCTIONS = ("clique", "neighborhood", "path", "primary_vd", "secondary_vd",
                 "edge_del", "partition", "link_blowup", "starting_vertex", "delta")
SCHEMES = ("vr", "cech", "witness:strong", "witness:vr_strong", "witness:weak",
           "witness:vr_weak", "pullback", "constant", "seeded_random")


class UsageError(ValueError):
    pass


class ValidationFailure(ValueError):
    pass


@dataclass
class JobConfig:
    graph: str | None = None
    cloud: str | None = None
    family: str | None = None
    clustering: str | None = None
    delta: str | None = None
    witnesses: str | None = None
    construction: str | None = None
    scheme: str | None = None
    field: str = "gf2"
    max_dim: int = 3
    out: str = "."
    constant_value: float = 0.0
    seed: int = 0
    pullback_base: str = "vr"
    experimental: bool = False
    properties: bool = False

    @classmethod
    def load(cls, config_path: str | None, overrides: dict) -> "JobConfig":
        raw: dict[str, str] = {}
        if config_path:
            raw.update(formats.read_config(config_path))
        raw.update({k: v for k, v in overrides.items() if v is not None})
        cfg = cls()
        for key, value in raw.items():
            if not hasattr(cfg, key):
                raise UsageError(f"unknown config key {key!r}")
            current = getattr(cfg, key)
            if isinstance(current, bool):
                value = str(value).lower() in ("1", "true", "yes")
            elif isinstance(current, int):
                value = int(value)
            elif isinstance(current, float):
                value = float(value)
            setattr(cfg, key, value)
        return cfg

    def coefficient_field(self):
        name = self.field.lower()
        if name == "gf2":
            return GF2
        if name == "rational":
            return QQ
        if name.startswith("gfp:"):
            return GF(int(name.split(":", 1)[1]))
        raise UsageError(f"unknown field {self.field!r} (gf2 | gfp:<p> | rational)")


@dataclass
class RunReport:
    timings: dict = field(default_factory=dict)
    cell_counts: tuple = ()
    critical_count: int = 0
    outputs: list = field(default_factory=list)

    def render(self) -> str:
        lines = ["run report"]
        lines.append("cells per dimension: " + " ".join(map(str, self.cell_counts)))
        lines.append(f"critical values: {self.critical_count}")
        for phase, dt in self.timings.items():
            lines.append(f"time {phase}: {dt:.4f}s")
        lines.append("outputs: " + " ".join(sorted(os.path.basename(p)
                                                   for p in self.outputs)))
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Construction of the super-hypergraph from inputs
# ---------------------------------------------------------------------------

def _require(cfg: JobConfig, attr: str, why: str) -> str:
    value = getattr(cfg, attr)
    if value is None:
        raise UsageError(f"{why} requires the `{attr}` input")
    if not os.path.exists(value):
        raise UsageError(f"input file not found: {value}")
    return value


def _load_graph(cfg: JobConfig) -> MultiGraph:
    if cfg.graph:
        if not os.path.exists(cfg.graph):
            raise UsageError(f"input file not found: {cfg.graph}")
        return formats.read_graph(cfg.graph)
    if cfg.cloud:
        cloud = _load_cloud(cfg)
        return MultiGraph.complete(cloud.ids())
    raise UsageError("need a `graph` file (or a `cloud` to take its complete graph)")


def _load_cloud(cfg: JobConfig) -> PointCloud:
    path = _require(cfg, "cloud", "this scheme")
    return formats.read_point_cloud(path)


def build_super_hypergraph(cfg: JobConfig) -> SuperHypergraph:
    kind = cfg.construction
    if kind is None:
        kind = "delta" if cfg.delta else None
    if kind not in CONSTRUCTIONS:
        raise UsageError(f"construction must be one of {CONSTRUCTIONS}, got {kind!r}")
    if kind == "delta":
        path = _require(cfg, "delta", "the delta construction")
        ds, marked = formats.read_delta(path)
        report = ds.validate()
        if not report.ok:
            raise DeltaIdentityError(report)
        return SuperHypergraph(ds, marked if marked is not None else full_subset(ds))
    g = _load_graph(cfg)
    if kind == "clique":
        ds = clique_delta(g, max_dim=cfg.max_dim)
        return SuperHypergraph(ds, full_subset(ds))
    if kind == "neighborhood":
        complex_ = neighborhood_complex(g)
        ds = from_simplicial(complex_)
        labels = [[Subgraph(g, ds.label(n, j), ()) for j in range(ds.counts[n])]
                  for n in range(ds.dim_count)]
        return SuperHypergraph(ds.with_labels(labels), full_subset(ds))
    if kind == "path":
        return path_complex(g, cfg.max_dim)
    fam_path = _require(cfg, "family", f"the {kind} construction")
    fam, marked_members = formats.read_family(fam_path, g)
    if kind == "primary_vd":
        return primary_vertex_deletion(fam)
    if kind == "secondary_vd":
        return secondary_vertex_deletion(fam)
    if kind == "edge_del":
        from .delta import from_hypergraph
        result = edge_deletion_complex(fam)
        hyperedges = [tuple(sorted(es)) for es in result.hyperedges]
        sh = from_hypergraph(hyperedges)
        labels = []
        for n in range(sh.x.dim_count):
            row = []
            for j in range(sh.x.counts[n]):
                es = sh.x.label(n, j)
                vs = set()
                for e in es:
                    vs.update(g.edge_ends[e])
                row.append(Subgraph(g, vs, es))
            labels.append(row)
        return SuperHypergraph(sh.x.with_labels(labels), sh.h)
    if kind in ("partition", "link_blowup"):
        cl_path = _require(cfg, "clustering", f"the {kind} construction")
        clustering = formats.read_clustering(cl_path, g)
        builder = partition_faces if kind == "partition" else link_blowup_faces
        return builder(fam, clustering)
    if kind == "starting_vertex":
        if marked_members is None:
            raise UsageError("starting_vertex construction needs `sv` lines in the family file")
        return starting_vertex_faces(marked_members, g)
    raise UsageError(f"unhandled construction {kind!r}")


def build_scheme(cfg: JobConfig):
    name = cfg.scheme
    if name is None:
        raise UsageError(f"scheme must be one of {SCHEMES}")
    if name == "constant":
        return constant_scheme(cfg.constant_value)
    if name == "seeded_random":
        return seeded_random_scheme(cfg.seed)
    if name == "vr":
        return vr_scheme(_load_cloud(cfg))
    if name == "cech":
        return cech_scheme(_load_cloud(cfg))
    if name.startswith("witness:"):
        cloud = _load_cloud(cfg)
        witness_set = None
        if cfg.witnesses:
            wc = formats.read_point_cloud(cfg.witnesses)
            witness_set = tuple(wc.all_points())
        return witness_scheme(cloud, WitnessConfig(witness_set), name.split(":", 1)[1])
    if name == "pullback":
        cloud = _load_cloud(cfg)
        base = vr_points if cfg.pullback_base == "vr" else cech_points
        return pullback_scheme(cloud.points, base, name=f"pullback:{cfg.pullback_base}")
    raise UsageError(f"scheme must be one of {SCHEMES}, got {name!r}")


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def run_homology(cfg: JobConfig) -> RunReport:
    report = RunReport()
    t0 = time.perf_counter()
    sh = build_super_hypergraph(cfg)
    report.timings["build"] = time.perf_counter() - t0
    report.cell_counts = sh.x.counts
    fld = cfg.coefficient_field()
    t0 = time.perf_counter()
    tables = {
        "embedded": embedded_betti(sh, fld, "absolute"),
        "relative": embedded_betti(sh, fld, "relative"),
        "ambient": embedded_betti(sh, fld, "ambient"),
    }
    series = gap_series(sh, fld)
    report.timings["homology"] = time.perf_counter() - t0
    os.makedirs(cfg.out, exist_ok=True)
    betti_path = os.path.join(cfg.out, "betti.csv")
    gap_path = os.path.join(cfg.out, "gap.csv")
    formats.write_betti_csv(betti_path, tables)
    formats.write_gap_csv(gap_path, series)
    report.outputs = [betti_path, gap_path]
    if cfg.properties:
        lines = [f"validate_delta ok"]
        regular = is_regular(sh)
        lines.append(f"regular {int(regular)}")
        if regular:
            comp = is_complete(sh)
            lines.append(f"complete {int(comp.complete)}")
            if comp.certificate:
                lines.append(f"certificate {comp.certificate}")
        prop_path = os.path.join(cfg.out, "properties.txt")
        formats.atomic_write(prop_path, "\n".join(lines) + "\n")
        report.outputs.append(prop_path)
    formats.write_manifest(os.path.join(cfg.out, "manifest.txt"), report.outputs)
    formats.atomic_write(os.path.join(cfg.out, "report.txt"), report.render())
    return report


def run_persist(cfg: JobConfig) -> RunReport:
    report = RunReport()
    t0 = time.perf_counter()
    sh = build_super_hypergraph(cfg)
    scheme = build_scheme(cfg)
    filt = build_filtration(sh, scheme, experimental=cfg.experimental)
    report.timings["build"] = time.perf_counter() - t0
    report.cell_counts = sh.x.counts
    report.critical_count = filt.steps
    fld = cfg.coefficient_field()
    t0 = time.perf_counter()
    barcodes = [full_barcode(filt, fld, which)
                for which in ("embedded", "ambient", "relative")]
    matrices = []
    for arrow in ("J", "P", "boundary"):
        for degree in range(sh.x.dim_count):
            cm = correlation_matrix(filt, fld, arrow, degree)
            if cm.rows or cm.cols:
                matrices.append(cm)
    triangle = triangle_report(filt, fld)
    report.timings["persistence"] = time.perf_counter() - t0
    os.makedirs(cfg.out, exist_ok=True)
    bars_path = os.path.join(cfg.out, "barcodes.csv")
    corr_path = os.path.join(cfg.out, "correlation.csv")
    tri_path = os.path.join(cfg.out, "triangle.csv")
    formats.write_barcodes_csv(bars_path, barcodes)
    formats.write_correlation_csv(corr_path, matrices)
    formats.write_triangle_csv(tri_path, triangle)
    report.outputs = [bars_path, corr_path, tri_path]
    formats.write_manifest(os.path.join(cfg.out, "manifest.txt"), report.outputs)
    formats.atomic_write(os.path.join(cfg.out, "report.txt"), report.render())
    if not triangle.exact:
        raise ValidationFailure("exact triangle failed rank bookkeeping")
    return report


def run_validate(cfg: JobConfig) -> int:
    try:
        sh = build_super_hypergraph(cfg)
    except DeltaIdentityError as exc:
        for err in exc.report.structural:
            print(f"structural: {err}")
        for cell, i, j in exc.report.violations:
            print(f"violation: cell {cell} (i={i}, j={j})")
        return 2
    report = sh.x.validate()
    if not report.ok:
        for err in report.structural:
            print(f"structural: {err}")
        for cell, i, j in report.violations:
            print(f"violation: cell {cell} (i={i}, j={j})")
        return 2
    print("validate_delta: ok")
    regular = is_regular(sh)
    print(f"regular: {'yes' if regular else 'no'}")
    if regular:
        comp = is_complete(sh)
        print(f"complete: {'yes' if comp.complete else 'no'}")
        if comp.certificate:
            print(f"certificate: {comp.certificate}")
    return 0


def run_score(cfg: JobConfig) -> int:
    sh = build_super_hypergraph(cfg)
    scheme = build_scheme(cfg)
    for value in critical_values(scheme, sh.x):
        print(formats.format_float(value))
    return 0


def run_render(input_path: str, output_path: str) -> int:
    barcodes = formats.read_barcodes_csv(input_path)
    formats.atomic_write(output_path, render.render_diagram(barcodes))
    return 0


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------

def _add_job_flags(p: argparse.ArgumentParser):
    p.add_argument("--config", help="flat key = value job file")
    for key in ("graph", "cloud", "family", "clustering", "delta", "witnesses",
                "construction", "scheme", "field", "out", "pullback_base"):
        p.add_argument(f"--{key.replace('_', '-')}", dest=key)
    p.add_argument("--max-dim", dest="max_dim", type=int)
    p.add_argument("--constant-value", dest="constant_value", type=float)
    p.add_argument("--seed", dest="seed", type=int)
    p.add_argument("--experimental", dest="experimental", action="store_const", const="1")
    p.add_argument("--properties", dest="properties", action="store_const", const="1")


def _job_config(args) -> JobConfig:
    overrides = {k: getattr(args, k, None) for k in JobConfig.__dataclass_fields__}
    return JobConfig.load(args.config, overrides)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="superph",
        description="embedded homology and super-persistent homology of "
                    "super-hypergraphs built from graph data")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("homology", "persist", "validate", "score"):
        _add_job_flags(sub.add_parser(name))
    pr = sub.add_parser("render")
    pr.add_argument("--input", required=True, help="barcode csv")
    pr.add_argument("--output", required=True, help="svg path")

    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0

    try:
        if args.command == "render":
            return run_render(args.input, args.output)
        cfg = _job_config(args)
        if args.command == "homology":
            run_homology(cfg)
            return 0
        if args.command == "persist":
            run_persist(cfg)
            return 0
        if args.command == "validate":
            return run_validate(cfg)
        if args.command == "score":
            return run_score(cfg)
        raise UsageError(f"unknown command {args.command!r}")
    except (UsageError, formats.FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (DeltaIdentityError, DominationError, RegularityError,
            ValidationFailure) as exc:
        print(f"validation failure: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"validation failure: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # computation error
        print(f"computation error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

"""Command line front end.  Every command writes one document to stdout."""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from dataclasses import dataclass
from fractions import Fraction

from ._rational import INF, fmt, parse_list
from . import classification as cl
from . import cohomology as coh
from .dictionary import omega_to_zeta, parse_mu, simple_object_dictionary, zeta_json
from .quiver import (
    QuiverRep,
    is_preprojective,
    moment_map_defect,
    structure_sheaf_rep,
    thin_semistability,
    verify_subrep_certificate,
)
from .series import betti_series, restricted_kac_generating
from .toric import (
    DivisorClass,
    Polarization,
    build_resolution,
    intersection,
    intersection_matrix,
    tilting_divisor,
)


class DomainError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    N: int
    omega: Polarization | None
    mu: object
    trunc_z: int
    trunc_q: int
    format: str
    exp_convention: str

    @classmethod
    def from_args(cls, args) -> RunConfig:
        N = args.N
        if N is None:
            raise DomainError("--N is required")
        build_resolution(N)
        omega = None
        if args.omega and args.omega_divisor:
            raise DomainError("give either --omega or --omega-divisor, not both")
        if args.omega:
            zeta = parse_list(args.omega)
            if len(zeta) != N - 1:
                raise DomainError(f"--omega needs N-1 = {N - 1} values, got {len(zeta)}")
            omega = Polarization(tuple(zeta))
        elif args.omega_divisor:
            coeffs = parse_list(args.omega_divisor)
            if len(coeffs) != N + 1:
                raise DomainError(f"--omega-divisor needs N+1 = {N + 1} coefficients (C_0..C_N)")
            omega = Polarization.from_divisor(DivisorClass(N, tuple(coeffs)))
        mu = parse_mu(args.mu) if args.mu is not None else None
        if args.trunc_z < 0 or args.trunc_q < 0:
            raise DomainError("truncation orders must be nonnegative")
        return cls(N, omega, mu, args.trunc_z, args.trunc_q, args.format, args.exp_convention)

    def need_omega(self) -> Polarization:
        if self.omega is None:
            raise DomainError("this command needs --omega or --omega-divisor")
        return self.omega

    def need_mu(self, finite: bool = False):
        if self.mu is None:
            raise DomainError("this command needs --mu")
        if finite and self.mu == INF:
            raise DomainError("this command needs a finite slope --mu > 0")
        return self.mu


# each command returns (document, table rows, table header)


def cmd_fan(cfg: RunConfig):
    geom = build_resolution(cfg.N)
    rows = [[i, v[0], v[1]] for i, v in enumerate(geom.rays)]
    return geom.to_json(), rows, ["ray", "x", "y"]


def cmd_intersection(cfg: RunConfig, args):
    N = cfg.N
    doc = {"N": N, "intersection_matrix": intersection_matrix(N)}
    doc["tilting_pairings"] = [
        [fmt(intersection(tilting_divisor(N, k), DivisorClass.from_mapping(N, {i: 1}))) for i in range(1, N)]
        for k in range(1, N)
    ]
    if args.a or args.b:
        if not (args.a and args.b):
            raise DomainError("--a and --b must be given together")
        a = DivisorClass(N, tuple(parse_list(args.a)))
        b = DivisorClass(N, tuple(parse_list(args.b)))
        doc["pairing"] = fmt(intersection(a, b))
    rows = [[i + 1, *r] for i, r in enumerate(doc["intersection_matrix"])]
    return doc, rows, ["i", *[f"C_{j}" for j in range(1, N)]]


def cmd_translate(cfg: RunConfig):
    omega, mu = cfg.need_omega(), cfg.need_mu()
    zeta = omega_to_zeta(omega, mu)
    doc = zeta_json(zeta, mu)
    doc["omega_divisor"] = omega.divisor_form.to_json()
    rows = [[k, fmt(z)] for k, z in enumerate(zeta, start=1)]
    return doc, rows, ["vertex", "zeta"]


def _classify(cfg: RunConfig, args):
    omega, mu = cfg.need_omega(), cfg.need_mu(finite=True)
    return cl.enumerate_stable_classes(omega, mu, exact=not getattr(args, "raw", False))


def cmd_classify(cfg: RunConfig, args):
    classes = _classify(cfg, args)
    doc = {"classes": [c.to_json() for c in classes]}
    try:
        p = cl.chain_partition(classes)
    except ValueError as exc:
        print(f"warning: {exc}; chains omitted", file=sys.stderr)
        doc.update(chains=None, **{"lambda": None}, yangian=None)
    else:
        doc["chains"] = p.indices(classes)
        doc["lambda"] = list(p.lam)
        doc["yangian"] = [f.label for f in cl.yangian_factorization(p)]
    rows = [[c.i, c.j, ",".join(map(str, c.e)), c.chi, ",".join(map(str, c.dimvec)), c.determinacy] for c in classes]
    return doc, rows, ["i", "j", "e", "chi", "dimvec", "determinacy"]


def _partition(cfg, args):
    classes = _classify(cfg, args)
    try:
        return classes, cl.chain_partition(classes)
    except ValueError as exc:
        raise DomainError(str(exc)) from exc


def cmd_chains(cfg: RunConfig, args):
    classes, p = _partition(cfg, args)
    table = cl.ext_table(classes)
    chains = []
    for idx, ch in zip(p.indices(classes), p.chains):
        chains.append({"classes": idx, "length": ch.length, "twist": cl.twisting_line_bundle(ch).to_json()})
    doc = {"chains": chains, "lambda": list(p.lam), "ext": table.to_json()}
    rows = [[n + 1, ch["length"], ",".join(map(str, ch["classes"]))] for n, ch in enumerate(chains)]
    return doc, rows, ["chain", "length", "classes"]


def cmd_yangian(cfg: RunConfig, args):
    _, p = _partition(cfg, args)
    factors = cl.yangian_factorization(p)
    doc = {"lambda": list(p.lam), "yangian": [f.label for f in factors], "factors": [f.to_json() for f in factors]}
    return doc, [[f.rank, f.label, f.quiver.kind] for f in factors], ["rank", "label", "quiver"]


def cmd_betti_series(cfg: RunConfig, args):
    _, p = _partition(cfg, args)
    roots = cl.positive_roots(p)
    series, preds = betti_series(cfg.N, roots, cfg.trunc_z, cfg.trunc_q, cfg.exp_convention, strict=False)
    doc = {
        "convention": cfg.exp_convention,
        "series": series.to_json(),
        "predictions": [pr.to_json() for pr in preds],
    }
    rows = [
        [",".join(str(int(v)) for v in pr.gamma.compact_vector), i, fmt(c)]
        for pr in preds
        for i, c in sorted(pr.betti.items())
    ]
    return doc, rows, ["gamma", "i", "betti"]


def cmd_kac_restricted(cfg: RunConfig, args):
    _, p = _partition(cfg, args)
    poly = restricted_kac_generating(cfg.N, cl.positive_roots(p))
    doc = {"polynomial": poly.to_json(), "term_count": poly.term_count}
    rows = [[",".join(map(str, d)), c] for d, c in sorted(poly.coeffs.items())]
    return doc, rows, ["y", "coeff"]


def cmd_verify_rep(cfg: RunConfig, args):
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            rep = QuiverRep.from_json(json.load(fh))
    elif args.structure_sheaf is not None:
        rep = structure_sheaf_rep(cfg.N, args.structure_sheaf)
    else:
        raise DomainError("verify-rep needs --file or --structure-sheaf")
    if args.zeta:
        zeta = parse_list(args.zeta)
    elif cfg.omega is not None and cfg.mu is not None:
        zeta = list(omega_to_zeta(cfg.omega, cfg.mu))
    else:
        raise DomainError("verify-rep needs --zeta or --omega with --mu")
    if len(zeta) != len(rep.dims):
        raise DomainError(f"--zeta has {len(zeta)} entries, representation has {len(rep.dims)} vertices")
    defects = moment_map_defect(rep)
    doc = {
        "dims": list(rep.dims),
        "moment_map": "zero" if is_preprojective(rep) else "nonzero",
        "defect_traces": [fmt(M.trace()) if M.rows else "0" for M in defects],
    }
    if args.certificate:
        with open(args.certificate, encoding="utf-8") as fh:
            spaces = json.load(fh)["subspaces"]
        res = verify_subrep_certificate(rep, spaces, zeta)
        doc["certificate"] = {"verdict": res.verdict.value, "reason": res.reason, "refutes_stability": res.refutes_stability}
    if rep.is_thin():
        doc.update(thin_semistability(rep, zeta).to_json())
    elif not args.certificate:
        print("warning: representation is not thin; pass --certificate to test a subrepresentation", file=sys.stderr)
    rows = [[k, fmt(z), d] for k, (z, d) in enumerate(zip(zeta, rep.dims), start=1)]
    return doc, rows, ["vertex", "zeta", "dim"]


def cmd_tables(cfg: RunConfig, args):
    s = args.s
    k = cfg.N - 1
    intervals = [(i, j) for i in range(1, k + 1) for j in range(i, k + 1)]
    chain = {
        f"{i},{j}": {
            "structure": list(coh.h_structure(i, j, k)),
            "self_twist": list(coh.h_self_intersection_twist(i, j, k)),
            "shift_twist": list(coh.h_shift_twist(i, j, k)) if i > 1 else None,
            "ambient_plus": list(coh.h_ambient(i, j, "+", k)),
            "ambient_minus": list(coh.h_ambient(i, j, "-", k)),
        }
        for i, j in intervals
    }
    exc = [[list(coh.exceptional_seq_ext(t, u, s)) for u in range(s + 1)] for t in range(s + 1)]
    simp = [[list(coh.exceptional_vs_simple_ext(t, u, s)) for u in range(s + 1)] for t in range(s + 1)]
    simples = [simple_object_dictionary(cfg.N, i).to_json() for i in range(1, cfg.N + 1)]
    doc = {"chain_cohomology": chain, "exceptional": exc, "exceptional_vs_simple": simp, "simples": simples}
    rows = [[t, u, *exc[t][u], *simp[t][u]] for t in range(s + 1) for u in range(s + 1)]
    return doc, rows, ["t", "u", "ext0(L,L)", "ext1(L,L)", "ext2(L,L)", "ext0(L,E)", "ext1(L,E)", "ext2(L,E)"]


COMMANDS = {
    "fan": (cmd_fan, False),
    "intersection": (cmd_intersection, True),
    "translate": (cmd_translate, False),
    "classify": (cmd_classify, True),
    "chains": (cmd_chains, True),
    "yangian": (cmd_yangian, True),
    "betti-series": (cmd_betti_series, True),
    "kac-restricted": (cmd_kac_restricted, True),
    "verify-rep": (cmd_verify_rep, True),
    "tables": (cmd_tables, True),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--N", type=int, help="resolution parameter N >= 2 (singularity C^2/Z_N)")
    common.add_argument("--omega", help="polarization as <omega, C_i> values, e.g. 1,1,1")
    common.add_argument("--omega-divisor", help="polarization as divisor coefficients of C_0..C_N")
    common.add_argument("--mu", help="slope: positive rational or 'inf'")
    common.add_argument("--trunc-z", type=int, default=3)
    common.add_argument("--trunc-q", type=int, default=8)
    common.add_argument("--exp-convention", choices=["qinv", "q"], default="qinv")
    common.add_argument("--format", choices=["json", "tsv", "pretty"], default="json")

    parser = argparse.ArgumentParser(prog="mckay-workbench", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name in ("classify", "chains", "yangian", "betti-series", "kac-restricted"):
            p.add_argument("--raw", action="store_true", help="emit every inequality solution (no exact stability test)")
        if name == "intersection":
            p.add_argument("--a", help="divisor coefficients of C_0..C_N")
            p.add_argument("--b", help="divisor coefficients of C_0..C_N")
        if name == "verify-rep":
            p.add_argument("--file", help="representation JSON file")
            p.add_argument("--structure-sheaf", type=int, metavar="L", help="use the module of O_{C_L}")
            p.add_argument("--zeta", help="stability vector, comma separated")
            p.add_argument("--certificate", help="JSON file with per-vertex subspace bases")
        if name == "tables":
            p.add_argument("--s", type=int, default=3, help="length of the exceptional sequence")
    return parser


def _render(doc, rows, header, fmt_name: str) -> str:
    if fmt_name == "json":
        return json.dumps(doc, indent=2, ensure_ascii=False)
    cells = [[str(c) for c in r] for r in rows]
    if fmt_name == "tsv":
        return "\n".join("\t".join(r) for r in [header, *cells])
    widths = [max(len(r[k]) for r in [header, *cells]) for k in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in [header, *cells]]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    func, takes_args = COMMANDS[args.command]
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        try:
            cfg = RunConfig.from_args(args)
            doc, rows, header = func(cfg, args) if takes_args else func(cfg)
        except (DomainError, ValueError, ZeroDivisionError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    sys.stdout.write(_render(doc, rows, header, cfg.format) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Every subcommand reads one clutter or ideal (``--input FILE`` or
``--inline JSON``), writes its result to stdout (or ``--out``), and exits
with 0 on success, 2 on bad input or domain errors (details as JSON on
stderr) and 3 when a configured resource bound refuses the job.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Any, Callable

from . import covers, invariants, jets
from .clutter import Clutter, Graph, clutter_of_ideal, complex_from_ideal, edge_ideal, f_vector
from .config import Config, load_config
from .errors import ConsistencyError, DomainError, JetcoverError, ResourceLimitError
from .ideals import MonomialIdeal, polarize_ideal
from .io import clutter_from_json, clutter_to_json, covers_to_json, ideal_from_json, ideal_to_json, ingest_graph_corpus
from .verify import THEOREMS, verify

EXIT_OK, EXIT_DOMAIN, EXIT_RESOURCE = 0, 2, 3


class UsageError(DomainError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read_payload(args) -> Any:
    if args.inline is not None and args.input is not None:
        raise UsageError("give either --input or --inline, not both")
    if args.inline is not None:
        text = args.inline
    elif args.input is not None:
        try:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise DomainError(f"cannot read {args.input!r}: {exc.strerror}") from None
    else:
        raise UsageError("this command needs --input FILE or --inline JSON")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"malformed JSON input: {exc}") from None


def _is_clutter_payload(data: Any) -> bool:
    return isinstance(data, dict) and "edges" in data


def _clutter(args) -> Clutter:
    data = _read_payload(args)
    if _is_clutter_payload(data):
        return clutter_from_json(data)
    ideal = ideal_from_json(data)
    return clutter_of_ideal(ideal)


def _graph(args) -> Graph:
    c = _clutter(args)
    if not c.is_graph():
        raise DomainError("this command needs a graph (all edges of size two)")
    return Graph.from_clutter(c)


def _ideal(args) -> MonomialIdeal:
    data = _read_payload(args)
    if _is_clutter_payload(data):
        return edge_ideal(clutter_from_json(data))
    return ideal_from_json(data)


def _need(args, name: str, cfg: Config, bound: str | None = None) -> int:
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"--{name.replace('_', '-')} is required for {args.command}")
    if value < 0:
        raise DomainError(f"--{name} must be nonnegative")
    if bound is not None and value > getattr(cfg, bound):
        raise ResourceLimitError(f"--{name} {value} exceeds the configured bound {bound}={getattr(cfg, bound)}")
    return value


def _s(args, cfg: Config) -> int:
    return _need(args, "s", cfg, "max_s")


def _opt_s(args, cfg: Config) -> int | None:
    return None if args.s is None else _s(args, cfg)


# commands return (json value, text rendering)


def cmd_jets(args, cfg):
    jc = jets.jet_clutter(_clutter(args), _s(args, cfg))
    return clutter_to_json(jc.clutter), str(jc.clutter)


def cmd_principal_jets(args, cfg):
    c, s = _clutter(args), _s(args, cfg)
    ideal = jets.principal_jet_ideal(c, s)
    comps = jets.principal_jet_decomposition(c, s)
    out = {"generators": ideal_to_json(ideal, False), "components": covers_to_json(comps)}
    text = f"{ideal}\n" + " ∩ ".join("<" + ", ".join(sorted(p)) + ">" for p in comps)
    return out, text


def cmd_covers(args, cfg):
    c = _clutter(args)
    s = _opt_s(args, cfg)
    ws = covers.minimal_vertex_covers(c) if s is None else covers.jet_covers_via_polarization(c, s)
    out = covers_to_json(ws)
    return out, "\n".join(" ".join(w) for w in out)


def cmd_symbolic_power(args, cfg):
    k = _need(args, "k", cfg, "max_k")
    if k < 1:
        raise DomainError("--k must be positive")
    ideal = covers.symbolic_power(_clutter(args), k)
    return ideal_to_json(ideal, False), str(ideal)


def cmd_polarize(args, cfg):
    s = _s(args, cfg)
    ideal = polarize_ideal(_ideal(args), s)
    return ideal_to_json(ideal, False), str(ideal)


def cmd_irreducible_covers(args, cfg):
    g = _graph(args)
    found = [covers.KCover.from_monomial(g, 2, m) for m in covers.irreducible_two_covers(g)]
    return [k.to_json() for k in found], "\n".join(str(k.monomial) for k in found)


def cmd_vwc_check(args, cfg):
    rep = covers.very_well_covered_report(_graph(args))
    out = {
        "veryWellCovered": rep.very_well_covered,
        "coverSizes": list(rep.cover_sizes),
        "matchings": [{"matching": covers_to_json(m.matching), "propertyP": m.property_p} for m in rep.matchings],
    }
    return out, f"very well-covered: {str(rep.very_well_covered).lower()}; cover sizes {list(rep.cover_sizes)}"


def _base_fvector(args, cfg):
    f = f_vector(complex_from_ideal(_ideal(args)))
    s = _opt_s(args, cfg)
    return f if s is None else invariants.transform_f_vector(f, s)


def cmd_fvector(args, cfg):
    f = _base_fvector(args, cfg)
    d, e = invariants.dimension_and_multiplicity(f)
    return list(f), f"f = {tuple(f)}; dimension {d}, multiplicity {e}"


def cmd_hilbert(args, cfg):
    h = invariants.hilbert_series(_base_fvector(args, cfg))
    return h.to_json(), str(h)


def cmd_betti(args, cfg):
    ideal = _ideal(args)
    s = _opt_s(args, cfg)
    bound = cfg.max_hochster_vertices
    if args.direct and s is not None:
        target = jets.principal_jet_ideal(clutter_of_ideal(ideal), s)
        table = invariants.betti_numbers_hochster(complex_from_ideal(target), args.field, bound)
    else:
        table = invariants.betti_numbers_hochster(complex_from_ideal(ideal), args.field, bound)
        if s is not None:
            table = invariants.transform_betti(table, s)
    if args.format == "m2-diagram":
        return table.to_json(), table.diagram()
    m = table.matrix()
    text = f"regularity {table.regularity}\n" + "\n".join(" ".join(str(v) for v in row) for row in m)
    return table.to_json(), text


def cmd_lifting_matrix(args, cfg):
    s = _s(args, cfg)
    max_j = _need(args, "max_j", cfg)
    L = invariants.lifting_matrix(s, max_j).tolist()
    return L, "\n".join(" ".join(str(v) for v in row) for row in L)


def cmd_verify(args, cfg):
    corpus = None
    if args.input is not None:
        corpus = ingest_graph_corpus(args.input)
    elif args.inline is not None:
        data = _read_payload(args)
        records = data if isinstance(data, list) else [data]
        corpus = [clutter_from_json(r) for r in records]
    s_max = args.s
    if s_max is not None and s_max > cfg.max_s:
        raise ResourceLimitError(f"--s {s_max} exceeds the configured bound max_s={cfg.max_s}")
    report = verify(args.theorem, corpus, seed=args.seed, s_max=s_max, random_extra=args.random)
    args._exit = EXIT_OK if report.ok else 1
    return report.to_json(args.timing), report.summary(args.timing)


COMMANDS: dict[str, Callable] = {
    "jets": cmd_jets,
    "principal-jets": cmd_principal_jets,
    "covers": cmd_covers,
    "symbolic-power": cmd_symbolic_power,
    "polarize": cmd_polarize,
    "irreducible-covers": cmd_irreducible_covers,
    "vwc-check": cmd_vwc_check,
    "fvector": cmd_fvector,
    "hilbert": cmd_hilbert,
    "betti": cmd_betti,
    "lifting-matrix": cmd_lifting_matrix,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--input", help="path to a JSON clutter/ideal (or a graph corpus for verify)")
    common.add_argument("--inline", help="the same JSON given directly on the command line")
    common.add_argument("--s", type=int, help="jet order")
    common.add_argument("--k", type=int, help="symbolic power / cover order")
    common.add_argument("--field", default="Q", help="homology field: Q or Fp:<prime>")
    common.add_argument("--format", choices=("json", "text", "m2-diagram"), default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-vertices", type=int, help="override the Hochster vertex bound")
    common.add_argument("--max-s", type=int, help="override the jet-order bound")
    common.add_argument("--max-k", type=int, help="override the symbolic-power bound")
    common.add_argument("--max-j", type=int, help="largest row index of the lifting matrix")
    common.add_argument("--out", help="write the result here instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")

    parser = _Parser(prog="jetcover", description="Jets of clutters, cover ideals and their invariants.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "betti":
            p.add_argument("--direct", action="store_true", help="with --s: run Hochster on the jet complex itself")
        if name == "verify":
            p.add_argument("theorem", choices=THEOREMS)
            p.add_argument("--random", type=int, default=0, help="append this many seeded random clutters")
            p.add_argument("--timing", action="store_true", help="include elapsed time (breaks byte-identical output)")
    return parser


def _emit(args, value, text) -> None:
    if args.format == "json":
        payload = json.dumps(value, sort_keys=False)
    else:
        payload = text
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    else:
        sys.stdout.write(payload + "\n")


def _fail(code: int, exc: BaseException) -> int:
    kind = "resource" if code == EXIT_RESOURCE else "domain"
    sys.stderr.write(json.dumps({"error": kind, "type": type(exc).__name__, "message": str(exc)}) + "\n")
    return code


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return _fail(EXIT_DOMAIN, exc)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        cfg = load_config().override(
            max_hochster_vertices=args.max_vertices, max_s=args.max_s, max_k=args.max_k
        )
        value, text = COMMANDS[args.command](args, cfg)
        _emit(args, value, text)
    except ResourceLimitError as exc:
        return _fail(EXIT_RESOURCE, exc)
    except ConsistencyError:
        raise
    except (JetcoverError, ValueError, KeyError, TypeError, OverflowError) as exc:
        return _fail(EXIT_DOMAIN, exc)
    return getattr(args, "_exit", EXIT_OK)


if __name__ == "__main__":
    sys.exit(main())

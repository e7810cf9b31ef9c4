"""Subcommand handlers.

Each handler fills a ``RunReport`` and returns the exit code. Exceptions are
turned into ``Error`` by ``police`` and reported by ``run``.
"""

from __future__ import annotations

from argparse import Namespace
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

from totguild.chain import ChainComplex, homology_dims, mapping_cone
from totguild.exactla import rank
from totguild.formats import (bicomplex_from_model, chain_map_from_file,
                              complex_from_model, complex_model, data_path,
                              digest, homotopy_chain_from_file, load_document,
                              probe_from_file, simplicial_map_from_file,
                              simplicial_object_from_file)
from totguild.freesimp import (abelianize, check_surrogate, check_window,
                               default_window, gamma_truncation,
                               minimal_window, scan_windows,
                               surrogate_counterexample, survival_report)
from totguild.groupcyc import (FiniteGroup, burghelea_maps, component_dims,
                               cyclic_homology, ncy_truncated)
from totguild.logs import logger
from totguild.obstruct import (ObstructionClass, bn_totalization_tower,
                               bracket_vanishes, extend_tower, toda_bracket)
from totguild.response import (EXIT_INTERNAL, EXIT_OBSTRUCTION, EXIT_OK,
                               IndexRangeError, SimplicialIdentityError,
                               police)
from totguild.simpfilt import (Bicomplex, alternating_sum, gr_subquotient,
                               totalize)
from totguild.specseq import (ProbeComplex, Variance, abutment_check, pages,
                              render_page)

from .report import RunReport

Handler = Callable[[Namespace, RunReport], int]

BUILTIN_TABLES = ("z2", "z3", "s3")


def _load(report: RunReport, path: str, kinds: Tuple[str, ...]):
    model, sha = load_document(path, kinds)
    report.inputs[path] = sha
    return model


def _dims(C: ChainComplex, degrees: Optional[List[int]] = None) -> Dict[int, int]:
    dims = homology_dims(C)
    if degrees is None:
        degrees = list(C.degrees())
    return {n: dims.get(n, 0) for n in degrees}


def _bicomplex(report: RunReport, path: str) -> Bicomplex:
    model = _load(report, path, ("bicomplex", "simplicial_object"))
    if model.kind == "bicomplex":
        return bicomplex_from_model(model.bicomplex)
    return alternating_sum(simplicial_object_from_file(model))


def _bracket(T: ObstructionClass) -> Dict[str, object]:
    return {
        "order": T.order,
        "position": T.position,
        "degree": T.degree,
        "classes_dim": T.classes.dim,
        "indeterminacy_dim": T.indeterminacy.dim,
        "coordinates": T.coordinates,
    }


def _group(report: RunReport, name: str) -> FiniteGroup:
    """A table path, or one of the shipped tables by name."""
    path = Path(name)
    if not path.exists() and name.lower() in BUILTIN_TABLES:
        path = data_path(f"{name.lower()}.tbl")
    report.inputs[name] = digest(path.read_text(encoding="utf-8"))
    return FiniteGroup.load_table(path)


def _truncation(args: Namespace, default: int) -> Tuple[int, List[int]]:
    """``N`` and the reported degrees; ``--degrees`` wins over ``--truncation``."""
    if args.degrees:
        degrees = sorted(set(args.degrees))
        if degrees[0] < 0:
            raise IndexRangeError(f"degrees must be non-negative, got {degrees[0]}")
        return degrees[-1] + 1, degrees
    N = args.truncation if args.truncation is not None else default
    if N < 1:
        raise IndexRangeError(f"truncation must be at least 1, got {N}")
    return N, list(range(N))


@police
def homology(args: Namespace, report: RunReport) -> int:
    model = _load(report, args.input, ("complex",))
    C = complex_from_model(model.complex)
    degrees = [args.degree] if args.degree is not None else None
    report.result = {"dims": C.dims, "homology": _dims(C, degrees)}
    return EXIT_OK


@police
def cone(args: Namespace, report: RunReport) -> int:
    model = _load(report, args.map, ("chain_map",))
    c = mapping_cone(chain_map_from_file(model))
    report.result = {
        "dims": c.cone.dims,
        "homology": _dims(c.cone),
        "complex": complex_model(c.cone).model_dump(mode="json"),
    }
    return EXIT_OK


@police
def tot(args: Namespace, report: RunReport) -> int:
    B = _bicomplex(report, args.input)
    total, filt = totalize(B, by=args.filtration)
    lo, hi = filt.bounds
    report.result = {
        "filtration": args.filtration,
        "levels": [lo, hi],
        "dims": total.dims,
        "homology": _dims(total),
    }
    return EXIT_OK


@police
def gr(args: Namespace, report: RunReport) -> int:
    B = _bicomplex(report, args.input)
    _, filt = totalize(B, by=args.filtration)
    q = gr_subquotient(filt, args.k, args.degree)
    report.result = {
        "l": args.k,
        "n": args.degree,
        "dims": q.complex.dims,
        "homology": _dims(q.complex),
    }
    return EXIT_OK


@police
def toda(args: Namespace, report: RunReport) -> int:
    model = _load(report, args.map, ("simplicial_map",))
    fmap, layers = simplicial_map_from_file(model)
    T = toda_bracket(fmap, args.order, args.position, layers)
    vanishes, _ = bracket_vanishes(T)
    report.verdict = "vanishing" if vanishes else "nonvanishing"
    report.result = {"bracket": _bracket(T)}
    return EXIT_OK if vanishes else EXIT_OBSTRUCTION


@police
def extend(args: Namespace, report: RunReport) -> int:
    model = _load(report, args.map, ("simplicial_map",))
    fmap, _ = simplicial_map_from_file(model)
    result = extend_tower(fmap, args.order, args.position)
    report.result = {
        "order": result.order,
        "columns": [result.start, result.start + result.order - 1],
    }
    if result.ok:
        report.verdict = "extended"
        report.result["source_dims"] = result.map.source.dims
        report.result["target_dims"] = result.map.target.dims
        return EXIT_OK
    report.verdict = "obstructed"
    report.result["failure"] = _bracket(result.failure)
    return EXIT_OBSTRUCTION


@police
def bntower(args: Namespace, report: RunReport) -> int:
    model = _load(report, args.input, ("homotopy_chain",))
    tower = bn_totalization_tower(homotopy_chain_from_file(model))
    report.result = {
        "stages": [
            {
                "index": s.index,
                "dims": s.complex.dims,
                "phi_zero": None if s.phi is None else s.phi.is_zero(),
            }
            for s in tower.stages
        ],
    }
    if tower.totalizable:
        report.verdict = "totalizable"
        report.result["homology"] = _dims(tower.final)
        return EXIT_OK
    report.verdict = "obstructed"
    report.result["obstruction"] = _bracket(tower.obstruction)
    return EXIT_OBSTRUCTION


def _probe(report: RunReport, args: Namespace) -> ProbeComplex:
    if args.probe:
        probe = probe_from_file(_load(report, args.probe, ("probe",)))
    else:
        probe = ProbeComplex.unit()
    if args.variance:
        variance = Variance.COVARIANT if args.variance == "co" else Variance.CONTRAVARIANT
        probe = ProbeComplex(probe.S, variance)
    return probe


@police
def ss(args: Namespace, report: RunReport) -> int:
    B = _bicomplex(report, args.input)
    _, filt = totalize(B, by=args.filtration)
    probe = _probe(report, args)
    seq = pages(filt, probe, r_max=args.pages, degrees=args.degrees)
    table = []
    for page in seq.pages:
        cells = [
            {"s": s, "t": t, "dim": d} for (s, t), d in sorted(page.dims().items())
        ]
        differentials = [
            {"s": s, "t": t, "rank": rank(m)}
            for (s, t), m in sorted(page.differentials.items())
            if not m.is_zero()
        ]
        table.append({"r": page.r, "cells": cells, "differentials": differentials})
        report.text.append(render_page(page, cohomological=not probe.covariant))
    report.result = {"variance": probe.variance.value, "pages": table}
    if seq.stable:
        abutment = abutment_check(seq)
        report.result["abutment"] = {
            m: {"e_infinity": e, "homology": h}
            for m, (e, h) in sorted(abutment.totals.items())
        }
        report.result["converged"] = abutment.ok
    return EXIT_OK


@police(default_msg="Group computation failed")
def group(args: Namespace, report: RunReport) -> int:
    G = _group(report, args.table)
    N, degrees = _truncation(args, 4)
    if args.action in ("hh", "hc"):
        result = cyclic_homology(G, N)
        dims = result.hh_dims if args.action == "hh" else result.hc_dims
        logger.info(f"{args.action.upper()} of {args.table}: {dims}")
        report.result = {"order": G.order, "dims": {n: dims[n] for n in degrees}}
        if args.action == "hh":
            per_class = component_dims(ncy_truncated(G, N))
            report.result["components"] = {
                G.names[G.conjugacy_classes()[key][0]]: [v[n] for n in degrees]
                for key, v in sorted(per_class.items())
            }
        return EXIT_OK
    classes = []
    for cls in G.conjugacy_classes():
        y = cls[0]
        maps = burghelea_maps(G, y, N)
        classes.append({
            "class": G.names[y],
            "size": len(cls),
            "centralizer": len(maps.centralizer),
            "cosets": len(maps.cosets),
            "injective": maps.is_injective(),
            "ranks": maps.homology_ranks(),
            "isomorphism": maps.is_homology_isomorphism(),
        })
    report.verdict = (
        "isomorphism" if all(c["isomorphism"] for c in classes) else "not an isomorphism"
    )
    report.result = {"order": G.order, "truncation": N, "classes": classes}
    return EXIT_OK


@police
def gamma(args: Namespace, report: RunReport) -> int:
    if args.degrees:
        degrees = sorted(set(args.degrees))
        if degrees[0] < 0:
            raise IndexRangeError(f"degrees must be non-negative, got {degrees[0]}")
        N = max(degrees[-1], args.m)
    else:
        N = args.truncation if args.truncation is not None else 6
        degrees = list(range(N + 1))
    G = gamma_truncation(args.m, N, check=False)
    try:
        identities = {"hold": True, "checked": G.check_identities()}
    except SimplicialIdentityError as e:
        logger.error(str(e))
        identities = {"hold": False, "failure": e.message}
    # the top degree of a truncation has no boundaries coming in
    A = abelianize(G)
    report.result = {
        "m": args.m,
        "truncation": N,
        "ranks": {n: G.rank(n) for n in degrees},
        "identities": identities,
        "abelian_homology": _dims(A.chain_complex(), [n for n in degrees if n < N]),
    }
    return EXIT_OK if identities["hold"] else EXIT_INTERNAL


@police
def example(args: Namespace, report: RunReport) -> int:
    if args.action == "surrogate":
        check = check_surrogate(surrogate_counterexample())
        report.verdict = "counterexample" if check.is_counterexample else "no counterexample"
        report.result = check.to_dict()
        return EXIT_OK
    N = args.truncation if args.truncation is not None else args.m + 2
    L = args.window if args.window is not None else default_window(args.m)
    check_window(args.m, N, L)
    if args.scan is not None:
        check_window(args.m, N, args.scan)
        reports = scan_windows(args.m, N, range(L, args.scan + 1), args.rows)
        smallest = minimal_window(reports)
        report.verdict = "no window" if smallest is None else f"minimal window {smallest}"
        report.result = {
            "minimal_window": smallest,
            "windows": [r.to_dict() for r in reports],
        }
        return EXIT_OK
    window = survival_report(args.m, N, L, args.rows)
    report.verdict = "killed" if window.exhibits_kill else "not killed"
    report.result = window.to_dict()
    return EXIT_OK


HANDLERS: Dict[str, Handler] = {
    "homology": homology,
    "cone": cone,
    "tot": tot,
    "gr": gr,
    "toda": toda,
    "extend": extend,
    "bntower": bntower,
    "ss": ss,
    "group": group,
    "gamma": gamma,
    "example": example,
}


def dispatch(args: Namespace, report: RunReport) -> int:
    logger.debug(f"running {args.command}")
    return HANDLERS[args.command](args, report)
